#include "boolrep/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace boolrep {

bool BModule::nondegenerate() const {
  for (std::size_t m = 0; m < size(); ++m) {
    for (std::size_t s = 0; s < semigroup->order(); ++s) {
      if (action[m][s] != carrier.zero()) {
        return true;
      }
    }
  }
  return false;
}

std::optional<ModuleViolation> check_module(const BModule& m) {
  const int n = static_cast<int>(m.size());
  const int ns = static_cast<int>(m.semigroup->order());
  if (static_cast<int>(m.action.size()) != n) {
    return ModuleViolation{"shape", "action table has " + std::to_string(m.action.size()) +
                                        " rows, carrier has " + std::to_string(n)};
  }
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(m.action[static_cast<std::size_t>(x)].size()) != ns) {
      return ModuleViolation{"shape", "action row " + std::to_string(x) + " has wrong length"};
    }
    for (int s = 0; s < ns; ++s) {
      int v = m.act(x, s);
      if (v < 0 || v >= n) {
        return ModuleViolation{"shape", "action value out of range at (" + std::to_string(x) +
                                            ", " + std::to_string(s) + ")"};
      }
    }
  }
  for (int s = 0; s < ns; ++s) {
    if (m.act(m.carrier.zero(), s) != m.carrier.zero()) {
      return ModuleViolation{"zero", "0 . s != 0 for s=" + std::to_string(s)};
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int s = 0; s < ns; ++s) {
        if (m.act(m.carrier.join(x, y), s) != m.carrier.join(m.act(x, s), m.act(y, s))) {
          return ModuleViolation{"additivity",
                                 "(m + n) . s != m . s + n . s for m=" + std::to_string(x) +
                                     ", n=" + std::to_string(y) + ", s=" + std::to_string(s)};
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < ns; ++s) {
      for (int t = 0; t < ns; ++t) {
        if (m.act(m.act(x, s), t) != m.act(x, m.semigroup->product(s, t))) {
          return ModuleViolation{"associativity",
                                 "(m . s) . t != m . (s t) for m=" + std::to_string(x) +
                                     ", s=" + std::to_string(s) + ", t=" + std::to_string(t)};
        }
      }
    }
  }
  return std::nullopt;
}

BModule make_module(std::shared_ptr<const FiniteSemigroup> s, SpanLattice carrier,
                    std::vector<std::vector<int>> action) {
  BModule m{std::move(s), std::move(carrier), std::move(action)};
  if (auto bad = check_module(m)) {
    throw InvalidInputError("not a module (" + bad->kind + "): " + bad->detail);
  }
  return m;
}

BModule module_from_join_table(std::shared_ptr<const FiniteSemigroup> s,
                               const std::vector<std::vector<int>>& join,
                               const std::vector<std::vector<int>>& action,
                               std::vector<int>& out_index) {
  SpanLattice carrier = SpanLattice::from_join_table(join, out_index);
  const std::size_t k = join.size();
  if (action.size() != k) {
    throw InvalidInputError("abstract action table has wrong number of rows");
  }
  std::vector<std::vector<int>> act(carrier.size(),
                                    std::vector<int>(s->order()));
  for (std::size_t a = 0; a < k; ++a) {
    if (action[a].size() != s->order()) {
      throw InvalidInputError("abstract action row has wrong length");
    }
    for (std::size_t t = 0; t < s->order(); ++t) {
      int v = action[a][t];
      if (v < 0 || static_cast<std::size_t>(v) >= k) {
        throw InvalidInputError("abstract action value out of range");
      }
      act[static_cast<std::size_t>(out_index[a])][t] = out_index[static_cast<std::size_t>(v)];
    }
  }
  return make_module(std::move(s), std::move(carrier), std::move(act));
}

namespace {

// Join closure of a set of element indices, as a sorted list.
std::vector<int> span_inside(const SpanLattice& l, const std::vector<int>& gens) {
  std::set<int> closed{l.zero()};
  for (int g : gens) {
    std::vector<int> next;
    for (int x : closed) {
      next.push_back(l.join(x, g));
    }
    closed.insert(next.begin(), next.end());
  }
  return std::vector<int>(closed.begin(), closed.end());
}

void require_nondegenerate(const BModule& m, const char* what) {
  if (m.size() <= 1 || !m.nondegenerate()) {
    throw DegenerateModuleError(std::string(what) +
                                " requires a nonzero module with M . S != 0");
  }
}

}  // namespace

std::vector<std::vector<int>> submodules(const BModule& m, std::size_t max_size) {
  const std::size_t n = m.size();
  if (n > max_size) {
    throw CapExceededError("submodule enumeration cap " + std::to_string(max_size) +
                           " exceeded by |M| = " + std::to_string(n));
  }
  const int ns = static_cast<int>(m.semigroup->order());
  std::vector<std::vector<int>> out;
  // All subsets of the nonzero elements, plus the forced zero.
  for (std::size_t mask = 0; mask < (std::size_t(1) << (n - 1)); ++mask) {
    std::vector<char> in(n, 0);
    in[static_cast<std::size_t>(m.carrier.zero())] = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask & (std::size_t(1) << i)) {
        in[i + 1] = 1;
      }
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!in[x]) {
        continue;
      }
      for (std::size_t y = x; y < n && ok; ++y) {
        if (in[y]) {
          ok = in[static_cast<std::size_t>(m.carrier.join(static_cast<int>(x), static_cast<int>(y)))];
        }
      }
      for (int s = 0; s < ns && ok; ++s) {
        ok = in[static_cast<std::size_t>(m.act(static_cast<int>(x), s))];
      }
    }
    if (ok) {
      std::vector<int> sub;
      for (std::size_t x = 0; x < n; ++x) {
        if (in[x]) {
          sub.push_back(static_cast<int>(x));
        }
      }
      out.push_back(std::move(sub));
    }
  }
  return out;
}

bool is_module_congruence(const BModule& m, const Partition& p) {
  const int n = static_cast<int>(m.size());
  if (static_cast<int>(p.size()) != n) {
    return false;
  }
  const int ns = static_cast<int>(m.semigroup->order());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (p[static_cast<std::size_t>(x)] != p[static_cast<std::size_t>(y)]) {
        continue;
      }
      for (int s = 0; s < ns; ++s) {
        if (p[static_cast<std::size_t>(m.act(x, s))] != p[static_cast<std::size_t>(m.act(y, s))]) {
          return false;
        }
      }
      for (int z = 0; z < n; ++z) {
        if (p[static_cast<std::size_t>(m.carrier.join(x, z))] !=
            p[static_cast<std::size_t>(m.carrier.join(y, z))]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// RGS enumeration with a partial compatibility prune: when element i
// joins class c, any constraint whose operands and results are already
// placed must hold. The full check still runs at every leaf.
void congruence_rec(const BModule& m, Partition& rgs, int i, int maxc,
                    std::vector<Partition>& out) {
  const int n = static_cast<int>(m.size());
  if (i == n) {
    if (is_module_congruence(m, rgs)) {
      out.push_back(rgs);
    }
    return;
  }
  const int ns = static_cast<int>(m.semigroup->order());
  for (int c = 0; c <= std::min(maxc + 1, n - 1); ++c) {
    rgs[static_cast<std::size_t>(i)] = c;
    bool viable = true;
    for (int j = 0; j < i && viable; ++j) {
      if (rgs[static_cast<std::size_t>(j)] != c) {
        continue;
      }
      for (int s = 0; s < ns && viable; ++s) {
        int a = m.act(i, s), b = m.act(j, s);
        if (a <= i && b <= i) {
          viable = rgs[static_cast<std::size_t>(a)] == rgs[static_cast<std::size_t>(b)];
        }
      }
      for (int z = 0; z <= i && viable; ++z) {
        int a = m.carrier.join(i, z), b = m.carrier.join(j, z);
        if (a <= i && b <= i) {
          viable = rgs[static_cast<std::size_t>(a)] == rgs[static_cast<std::size_t>(b)];
        }
      }
    }
    if (viable) {
      congruence_rec(m, rgs, i + 1, std::max(maxc, c), out);
    }
  }
}

}  // namespace

std::vector<Partition> module_congruences(const BModule& m, std::size_t max_size) {
  const std::size_t n = m.size();
  if (n > max_size) {
    throw CapExceededError("congruence enumeration cap " + std::to_string(max_size) +
                           " exceeded by |M| = " + std::to_string(n));
  }
  std::vector<Partition> out;
  Partition rgs(n, 0);
  congruence_rec(m, rgs, 1, 0, out);
  return out;
}

bool is_minimal(const BModule& m) {
  require_nondegenerate(m, "is_minimal");
  const int n = static_cast<int>(m.size());
  const int ns = static_cast<int>(m.semigroup->order());
  for (int x = 0; x < n; ++x) {
    if (x == m.carrier.zero()) {
      continue;
    }
    std::vector<int> image;
    for (int s = 0; s < ns; ++s) {
      image.push_back(m.act(x, s));
    }
    if (static_cast<int>(span_inside(m.carrier, image).size()) != n) {
      return false;
    }
  }
  return true;
}

bool is_minimal_enum(const BModule& m, std::size_t max_size) {
  require_nondegenerate(m, "is_minimal_enum");
  return submodules(m, max_size).size() == 2;  // {0} and M only
}

bool minimality_readings_agree(const BModule& m) {
  require_nondegenerate(m, "minimality_readings_agree");
  const int n = static_cast<int>(m.size());
  const int ns = static_cast<int>(m.semigroup->order());
  bool without = true, with = true;
  for (int x = 0; x < n; ++x) {
    if (x == m.carrier.zero()) {
      continue;
    }
    std::vector<int> image;
    for (int s = 0; s < ns; ++s) {
      image.push_back(m.act(x, s));
    }
    without = without && static_cast<int>(span_inside(m.carrier, image).size()) == n;
    image.push_back(x);
    with = with && static_cast<int>(span_inside(m.carrier, image).size()) == n;
  }
  return without == with;
}

namespace {

// Smallest module congruence relating a and b, via pair saturation.
Partition principal_congruence(const BModule& m, int a, int b) {
  const int n = static_cast<int>(m.size());
  const int ns = static_cast<int>(m.semigroup->order());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) {
    parent[i] = i;
  }
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<std::pair<int, int>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    x = find(x);
    y = find(y);
    if (x == y) {
      continue;
    }
    parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    for (int s = 0; s < ns; ++s) {
      work.emplace_back(m.act(x, s), m.act(y, s));
    }
    for (int z = 0; z < n; ++z) {
      work.emplace_back(m.carrier.join(x, z), m.carrier.join(y, z));
    }
  }
  Partition p(n);
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] = find(i);
  }
  return normalize_partition(std::move(p));
}

}  // namespace

bool is_simple(const BModule& m) {
  require_nondegenerate(m, "is_simple");
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (n_classes(principal_congruence(m, a, b)) != 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_simple_enum(const BModule& m, std::size_t max_size) {
  require_nondegenerate(m, "is_simple_enum");
  for (const Partition& p : module_congruences(m, max_size)) {
    const int k = n_classes(p);
    if (k != 1 && k != static_cast<int>(m.size())) {
      return false;
    }
  }
  return true;
}

bool is_irreducible(const BModule& m) {
  return is_minimal(m) && is_simple(m);
}

std::vector<int> annihilator(const BModule& m) {
  std::vector<int> out;
  const int ns = static_cast<int>(m.semigroup->order());
  for (int s = 0; s < ns; ++s) {
    bool kills = true;
    for (std::size_t x = 0; x < m.size() && kills; ++x) {
      kills = m.act(static_cast<int>(x), s) == m.carrier.zero();
    }
    if (kills) {
      out.push_back(s);
    }
  }
  return out;
}

std::optional<int> apex(const BModule& m, const GreenStructure& g) {
  const std::vector<int> ann = annihilator(m);
  const FiniteSemigroup& s = *m.semigroup;
  for (int j = 0; j < g.n_j; ++j) {
    if (g.regular[static_cast<std::size_t>(j)] && apex_ideal(s, g, j) == ann) {
      return j;
    }
  }
  return std::nullopt;
}

QuotientModule quotient(const BModule& m, const Partition& cong) {
  if (!is_module_congruence(m, cong)) {
    throw InvalidInputError("partition is not a module congruence");
  }
  const Partition p = normalize_partition(cong);
  const int k = n_classes(p);
  const int ns = static_cast<int>(m.semigroup->order());
  std::vector<int> rep(static_cast<std::size_t>(k), -1);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (rep[static_cast<std::size_t>(p[x])] < 0) {
      rep[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
    }
  }
  std::vector<std::vector<int>> join(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(k)));
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      join[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] =
          p[static_cast<std::size_t>(m.carrier.join(rep[static_cast<std::size_t>(c)],
                                                    rep[static_cast<std::size_t>(d)]))];
    }
  }
  std::vector<std::vector<int>> act(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(ns)));
  for (int c = 0; c < k; ++c) {
    for (int s = 0; s < ns; ++s) {
      act[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] =
          p[static_cast<std::size_t>(m.act(rep[static_cast<std::size_t>(c)], s))];
    }
  }
  QuotientModule q;
  q.module = module_from_join_table(m.semigroup, join, act, q.class_to_elem);
  return q;
}

DualModule dualize(const BModule& m) {
  DualLattice d = dual_lattice(m.carrier);
  const int n = static_cast<int>(m.size());
  const int ns = static_cast<int>(m.semigroup->order());
  std::vector<std::vector<int>> act(d.lattice.size(), std::vector<int>(static_cast<std::size_t>(ns)));
  std::vector<int> inv(d.lattice.size(), -1);
  for (int x = 0; x < n; ++x) {
    inv[static_cast<std::size_t>(d.anchor[static_cast<std::size_t>(x)])] = x;
  }
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < ns; ++s) {
      // (f_x . s)(y) = f_x(y s) vanishes iff y s <= x, so it is f_k for
      // the largest k with k s <= x, the join of all such elements.
      BoolVec acc(m.carrier.width());
      for (int y = 0; y < n; ++y) {
        if (m.carrier.leq(m.act(y, s), x)) {
          acc |= m.carrier.element(y);
        }
      }
      int k = m.carrier.index_of(acc);
      if (k < 0 || !m.carrier.leq(m.act(k, s), x)) {
        throw InternalCheckError("dual action target is not a functional");
      }
      act[static_cast<std::size_t>(d.anchor[static_cast<std::size_t>(x)])]
         [static_cast<std::size_t>(s)] = d.anchor[static_cast<std::size_t>(k)];
    }
  }
  DualModule out;
  out.module = make_module(std::make_shared<FiniteSemigroup>(m.semigroup->opposite()),
                           std::move(d.lattice), std::move(act));
  out.anchor = std::move(d.anchor);
  return out;
}

namespace {

// Extends an sji assignment by joins; empty optional when some join
// lands outside the target lattice image set.
std::optional<std::vector<int>> extend_by_joins(const BModule& a, const BModule& b,
                                                const std::vector<int>& sji_img) {
  const int n = static_cast<int>(a.size());
  const std::vector<int>& sji = a.carrier.sji();
  std::vector<int> f(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    BoolVec acc(b.carrier.width());
    for (std::size_t i = 0; i < sji.size(); ++i) {
      if (a.carrier.leq(sji[i], x)) {
        acc |= b.carrier.element(sji_img[i]);
      }
    }
    int v = b.carrier.index_of(acc);
    if (v < 0) {
      return std::nullopt;
    }
    f[static_cast<std::size_t>(x)] = v;
  }
  return f;
}

bool is_module_hom(const BModule& a, const BModule& b, const std::vector<int>& f) {
  const int n = static_cast<int>(a.size());
  const int ns = static_cast<int>(a.semigroup->order());
  if (f[static_cast<std::size_t>(a.carrier.zero())] != b.carrier.zero()) {
    return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (f[static_cast<std::size_t>(a.carrier.join(x, y))] !=
          b.carrier.join(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < ns; ++s) {
      if (f[static_cast<std::size_t>(a.act(x, s))] !=
          b.act(f[static_cast<std::size_t>(x)], s)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool module_isomorphic(const BModule& a, const BModule& b) {
  if (!(*a.semigroup == *b.semigroup) || a.size() != b.size() ||
      a.carrier.sji().size() != b.carrier.sji().size()) {
    return false;
  }
  const std::vector<int>& sb = b.carrier.sji();
  std::vector<int> perm(sb.begin(), sb.end());
  std::sort(perm.begin(), perm.end());
  do {
    auto f = extend_by_joins(a, b, perm);
    if (!f) {
      continue;
    }
    std::vector<char> hit(b.size(), 0);
    bool bij = true;
    for (int v : *f) {
      if (hit[static_cast<std::size_t>(v)]) {
        bij = false;
        break;
      }
      hit[static_cast<std::size_t>(v)] = 1;
    }
    if (bij && is_module_hom(a, b, *f)) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<int>> module_homomorphisms(const BModule& a, const BModule& b,
                                                   std::size_t max_candidates) {
  if (!(*a.semigroup == *b.semigroup)) {
    throw InvalidInputError("homomorphisms need modules over the same semigroup");
  }
  const std::vector<int>& sji = a.carrier.sji();
  double candidates = 1;
  for (std::size_t i = 0; i < sji.size(); ++i) {
    candidates *= static_cast<double>(b.size());
  }
  if (candidates > static_cast<double>(max_candidates)) {
    throw CapExceededError("homomorphism search would try " + std::to_string(candidates) +
                           " assignments");
  }
  std::set<std::vector<int>> out;
  std::vector<int> choice(sji.size(), 0);
  while (true) {
    auto f = extend_by_joins(a, b, choice);
    if (f && is_module_hom(a, b, *f)) {
      out.insert(*f);
    }
    std::size_t pos = 0;
    while (pos < choice.size() && choice[pos] == static_cast<int>(b.size()) - 1) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) {
      break;
    }
    ++choice[pos];
  }
  if (sji.empty()) {
    out.insert(std::vector<int>(a.size(), b.carrier.zero()));
  }
  return std::vector<std::vector<int>>(out.begin(), out.end());
}

bool faithful_action(const BModule& m) {
  return n_classes(action_kernel(m)) == static_cast<int>(m.semigroup->order());
}

Partition action_kernel(const BModule& m) {
  const int ns = static_cast<int>(m.semigroup->order());
  std::map<std::vector<int>, int> seen;
  Partition p(static_cast<std::size_t>(ns));
  int next = 0;
  for (int s = 0; s < ns; ++s) {
    std::vector<int> col(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      col[x] = m.act(static_cast<int>(x), s);
    }
    auto [it, fresh] = seen.emplace(std::move(col), next);
    if (fresh) {
      ++next;
    }
    p[static_cast<std::size_t>(s)] = it->second;
  }
  return p;
}

}  // namespace boolrep
