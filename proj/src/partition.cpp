#include "boolrep/partition.hpp"

#include <algorithm>

namespace boolrep {

Partition normalize_partition(Partition p) {
  std::vector<int> relabel(p.size(), -1);
  int next = 0;
  for (int& c : p) {
    if (relabel[static_cast<std::size_t>(c)] < 0) {
      relabel[static_cast<std::size_t>(c)] = next++;
    }
    c = relabel[static_cast<std::size_t>(c)];
  }
  return p;
}

Partition trivial_partition(std::size_t n) {
  Partition p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = static_cast<int>(i);
  }
  return p;
}

Partition universal_partition(std::size_t n) {
  return Partition(n, 0);
}

int n_classes(const Partition& p) {
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

std::vector<std::vector<int>> partition_classes(const Partition& p) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_classes(p)));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[static_cast<std::size_t>(p[i])].push_back(static_cast<int>(i));
  }
  return out;
}

bool partition_refines(const Partition& p, const Partition& q) {
  // p-classes must be constant on q: map each p-class to the q-class of
  // its first member.
  std::vector<int> image(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int& img = image[static_cast<std::size_t>(p[i])];
    if (img < 0) {
      img = q[i];
    } else if (img != q[i]) {
      return false;
    }
  }
  return true;
}

namespace {

void rgs_rec(Partition& rgs, std::size_t i, int maxc,
             const std::function<void(const Partition&)>& visit) {
  if (i == rgs.size()) {
    visit(rgs);
    return;
  }
  for (int c = 0; c <= maxc + 1; ++c) {
    rgs[i] = c;
    rgs_rec(rgs, i + 1, std::max(maxc, c), visit);
  }
}

}  // namespace

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  Partition rgs(n, 0);
  rgs_rec(rgs, 1, 0, visit);
}

}  // namespace boolrep
