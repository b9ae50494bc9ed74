#include "boolrep/semigroup.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace boolrep {

FiniteSemigroup FiniteSemigroup::from_table(std::vector<std::vector<int>> table,
                                            std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) {
    throw InvalidInputError("a semigroup needs at least one element");
  }
  std::vector<int> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw InvalidInputError("multiplication table is not square: row " +
                              std::to_string(i) + " has " +
                              std::to_string(table[i].size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw InvalidInputError("table entry out of range at (" + std::to_string(i) +
                                ", " + std::to_string(j) + "): " + std::to_string(v));
      }
      flat.push_back(v);
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw InvalidInputError("label list length does not match order");
  }
  FiniteSemigroup s(n, std::move(flat), std::move(labels));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = s.product(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (s.product(ab, static_cast<int>(c)) !=
            s.product(static_cast<int>(a), s.product(static_cast<int>(b), static_cast<int>(c)))) {
          throw NonAssociativeError(a, b, c);
        }
      }
    }
  }
  return s;
}

namespace {

std::string transformation_label(const std::vector<int>& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ",";
    os << f[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

FiniteSemigroup FiniteSemigroup::from_transformations(
    std::size_t degree, const std::vector<std::vector<int>>& generators) {
  if (degree == 0) {
    throw InvalidInputError("transformation degree must be positive");
  }
  if (generators.empty()) {
    throw InvalidInputError("generator list must be nonempty");
  }
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != degree) {
      throw InvalidInputError("generator " + std::to_string(g) + " has length " +
                              std::to_string(generators[g].size()) + ", expected " +
                              std::to_string(degree));
    }
    for (int v : generators[g]) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree) {
        throw InvalidInputError("generator " + std::to_string(g) +
                                " maps outside 0.." + std::to_string(degree - 1));
      }
    }
  }

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  std::deque<int> todo;
  for (const auto& g : generators) {
    if (index.emplace(g, static_cast<int>(elems.size())).second) {
      elems.push_back(g);
      todo.push_back(static_cast<int>(elems.size()) - 1);
    }
  }
  auto compose = [degree](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(degree);
    for (std::size_t p = 0; p < degree; ++p) {
      r[p] = y[static_cast<std::size_t>(x[p])];
    }
    return r;
  };
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      std::vector<int> xg = compose(elems[x], g);
      if (index.emplace(xg, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(xg));
        todo.push_back(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = transformation_label(elems[i]);
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(compose(elems[i], elems[j]));
      if (it == index.end()) {
        throw InternalCheckError("transformation closure is not closed under products");
      }
      table[i][j] = it->second;
    }
  }
  return from_table(std::move(table), std::move(labels));
}

std::optional<int> FiniteSemigroup::zero_element() const {
  for (int z = 0; z < static_cast<int>(n_); ++z) {
    bool ok = true;
    for (int s = 0; s < static_cast<int>(n_) && ok; ++s) {
      ok = product(z, s) == z && product(s, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

std::optional<int> FiniteSemigroup::identity_element() const {
  for (int e = 0; e < static_cast<int>(n_); ++e) {
    bool ok = true;
    for (int s = 0; s < static_cast<int>(n_) && ok; ++s) {
      ok = product(e, s) == s && product(s, e) == s;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

FiniteSemigroup FiniteSemigroup::opposite() const {
  std::vector<int> flat(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      flat[i * n_ + j] = table_[j * n_ + i];
    }
  }
  return FiniteSemigroup(n_, std::move(flat), labels_);
}

std::string FiniteSemigroup::label(int s) const {
  if (!labels_.empty()) {
    return labels_[static_cast<std::size_t>(s)];
  }
  return std::to_string(s);
}

}  // namespace boolrep
