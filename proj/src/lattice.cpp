#include "boolrep/lattice.hpp"

#include <algorithm>
#include <set>

#include "boolrep/error.hpp"

namespace boolrep {

SpanLattice SpanLattice::span(std::size_t width, std::vector<BoolVec> generators) {
  for (const BoolVec& g : generators) {
    if (g.width() != width) {
      throw InvalidInputError("generator width does not match lattice width");
    }
  }
  std::set<BoolVec, BoolVecLess> closed;
  closed.insert(BoolVec(width));
  for (const BoolVec& g : generators) {
    // Joining one generator into everything already present keeps the set
    // equal to "all joins of generator subsets seen so far".
    std::vector<BoolVec> next;
    for (const BoolVec& x : closed) {
      next.push_back(x | g);
    }
    closed.insert(next.begin(), next.end());
  }
  SpanLattice l;
  l.width_ = width;
  l.gens_ = std::move(generators);
  l.elems_.assign(closed.begin(), closed.end());
  l.finish();
  return l;
}

SpanLattice SpanLattice::free_lattice(std::size_t rank) {
  std::vector<BoolVec> units;
  for (std::size_t i = 0; i < rank; ++i) {
    units.push_back(BoolVec::unit(rank, i));
  }
  return span(rank, std::move(units));
}

SpanLattice SpanLattice::row_span(const BoolMatrix& m) {
  return span(m.n_cols(), m.rows());
}

SpanLattice SpanLattice::from_join_table(const std::vector<std::vector<int>>& join,
                                         std::vector<int>& out_index) {
  const std::size_t k = join.size();
  if (k == 0) {
    throw InvalidInputError("empty join table");
  }
  auto at = [&](std::size_t a, std::size_t b) {
    if (join[a].size() != k) {
      throw InvalidInputError("join table is not square");
    }
    int v = join[a][b];
    if (v < 0 || static_cast<std::size_t>(v) >= k) {
      throw InvalidInputError("join table entry out of range");
    }
    return static_cast<std::size_t>(v);
  };
  for (std::size_t a = 0; a < k; ++a) {
    if (at(a, a) != a) {
      throw InvalidInputError("join table is not idempotent at " + std::to_string(a));
    }
    for (std::size_t b = 0; b < k; ++b) {
      if (at(a, b) != at(b, a)) {
        throw InvalidInputError("join table is not commutative");
      }
      for (std::size_t c = 0; c < k; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw InvalidInputError("join table is not associative");
        }
      }
    }
  }
  std::size_t zero = k;
  for (std::size_t z = 0; z < k; ++z) {
    bool neutral = true;
    for (std::size_t a = 0; a < k && neutral; ++a) {
      neutral = at(z, a) == a;
    }
    if (neutral) {
      zero = z;
      break;
    }
  }
  if (zero == k) {
    throw InvalidInputError("join table has no zero (neutral) element");
  }

  // x <= y iff x join y = y; embed x as indicator of {y : x not<= y}.
  std::vector<BoolVec> vecs(k, BoolVec(k));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (at(x, y) != y) {
        vecs[x].set(y);
      }
    }
  }
  SpanLattice l = span(k, vecs);
  if (l.size() != k) {
    throw InternalCheckError("join-table embedding changed the element count");
  }
  out_index.resize(k);
  for (std::size_t x = 0; x < k; ++x) {
    out_index[x] = l.index_of(vecs[x]);
  }
  return l;
}

void SpanLattice::finish() {
  std::sort(elems_.begin(), elems_.end(), canonical_less);
  const int n = static_cast<int>(elems_.size());
  index_.clear();
  for (int i = 0; i < n; ++i) {
    index_.emplace(elems_[static_cast<std::size_t>(i)], i);
  }

  join_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int v = index_of(element(i) | element(j));
      if (v < 0) {
        throw InternalCheckError("span is not join closed");
      }
      join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      join_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }

  // meet(i, j) = join of everything below both; the canonical sort makes
  // that a single upward sweep.
  meet_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      BoolVec acc(width_);
      for (int x = 0; x < n; ++x) {
        if (leq(x, i) && leq(x, j)) {
          acc |= element(x);
        }
      }
      int v = index_of(acc);
      if (v < 0) {
        throw InternalCheckError("meet fell outside the lattice");
      }
      meet_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      meet_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }

  sji_.clear();
  sji_flag_.assign(static_cast<std::size_t>(n), 0);
  for (int m = 1; m < n; ++m) {
    BoolVec below(width_);
    for (int x = 0; x < n; ++x) {
      if (x != m && leq(x, m)) {
        below |= element(x);
      }
    }
    if (below != element(m)) {
      sji_flag_[static_cast<std::size_t>(m)] = 1;
      sji_.push_back(m);
    }
  }
}

int SpanLattice::index_of(const BoolVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

bool SpanLattice::is_free() const {
  if (sji_.size() >= 63) {
    return false;  // can't have 2^63 elements in memory anyway
  }
  return size() == (std::size_t(1) << sji_.size());
}

bool SpanLattice::is_distributive() const {
  const int n = static_cast<int>(size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = y; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> all_decompositions(const SpanLattice& l, int m,
                                                 std::size_t max_support) {
  std::vector<int> support;
  for (int x : l.sji()) {
    if (l.leq(x, m)) {
      support.push_back(x);
    }
  }
  if (support.size() > max_support) {
    throw CapExceededError("decomposition support has " + std::to_string(support.size()) +
                           " sji elements, cap is " + std::to_string(max_support));
  }
  std::vector<std::vector<int>> out;
  const std::size_t k = support.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    BoolVec acc(l.width());
    std::vector<int> subset;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t(1) << i)) {
        acc |= l.element(support[i]);
        subset.push_back(support[i]);
      }
    }
    if (acc == l.element(m)) {
      out.push_back(std::move(subset));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return a < b;
            });
  return out;
}

std::vector<std::vector<int>> irredundant_decompositions(const SpanLattice& l, int m,
                                                         std::size_t max_support) {
  std::vector<std::vector<int>> all = all_decompositions(l, m, max_support);
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& x : all) {
    bool minimal = true;
    for (std::size_t drop = 0; drop < x.size() && minimal; ++drop) {
      BoolVec acc(l.width());
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (i != drop) {
          acc |= l.element(x[i]);
        }
      }
      minimal = acc != l.element(m);
    }
    if (minimal) {
      out.push_back(x);
    }
  }
  return out;
}

DualLattice dual_lattice(const SpanLattice& l) {
  const int n = static_cast<int>(l.size());
  std::vector<BoolVec> funcs(static_cast<std::size_t>(n), BoolVec(l.size()));
  for (int m = 0; m < n; ++m) {
    for (int x = 0; x < n; ++x) {
      if (!l.leq(x, m)) {
        funcs[static_cast<std::size_t>(m)].set(static_cast<std::size_t>(x));
      }
    }
  }
  DualLattice d;
  d.lattice = SpanLattice::span(l.size(), funcs);
  if (d.lattice.size() != l.size()) {
    throw InternalCheckError("dual lattice has a different element count");
  }
  d.anchor.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    d.anchor[static_cast<std::size_t>(m)] =
        d.lattice.index_of(funcs[static_cast<std::size_t>(m)]);
  }
  return d;
}

bool is_endo(const SpanLattice& l, const Endo& f) {
  const int n = static_cast<int>(l.size());
  if (static_cast<int>(f.size()) != n) {
    return false;
  }
  for (int x : f) {
    if (x < 0 || x >= n) {
      return false;
    }
  }
  if (f[0] != l.zero()) {
    return false;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (f[static_cast<std::size_t>(l.join(x, y))] !=
          l.join(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) {
        return false;
      }
    }
  }
  return true;
}

Endo endo_identity(const SpanLattice& l) {
  Endo f(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    f[i] = static_cast<int>(i);
  }
  return f;
}

Endo endo_zero(const SpanLattice& l) {
  return Endo(l.size(), l.zero());
}

Endo endo_join(const SpanLattice& l, const Endo& f, const Endo& g) {
  Endo r(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    r[i] = l.join(f[i], g[i]);
  }
  return r;
}

Endo endo_compose(const Endo& f, const Endo& g) {
  Endo r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    r[i] = g[static_cast<std::size_t>(f[i])];
  }
  return r;
}

Endo elementary_endo(const SpanLattice& l, int a, int b) {
  Endo f(l.size(), l.zero());
  if (a == -1) {
    return f;
  }
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!l.leq(static_cast<int>(x), a)) {
      f[x] = b;
    }
  }
  return f;
}

std::vector<Endo> all_endos(const SpanLattice& l, std::size_t max_candidates) {
  const std::vector<int>& sji = l.sji();
  const std::size_t k = sji.size();
  double candidates = 1;
  for (std::size_t i = 0; i < k; ++i) {
    candidates *= static_cast<double>(l.size());
  }
  if (candidates > static_cast<double>(max_candidates)) {
    throw CapExceededError("endomorphism enumeration needs " +
                           std::to_string(candidates) + " candidates, cap is " +
                           std::to_string(max_candidates));
  }

  std::set<Endo> out;
  std::vector<int> choice(k, 0);
  while (true) {
    // Extend the sji assignment by joins and keep it if it really is
    // a join endomorphism (on non-distributive lattices many are not).
    Endo f(l.size());
    for (std::size_t m = 0; m < l.size(); ++m) {
      BoolVec acc(l.width());
      for (std::size_t i = 0; i < k; ++i) {
        if (l.leq(sji[i], static_cast<int>(m))) {
          acc |= l.element(choice[i]);
        }
      }
      f[m] = l.index_of(acc);
      if (f[m] < 0) {
        break;
      }
    }
    if (std::all_of(f.begin(), f.end(), [](int v) { return v >= 0; }) && is_endo(l, f)) {
      out.insert(std::move(f));
    }
    std::size_t pos = 0;
    while (pos < k && choice[pos] == static_cast<int>(l.size()) - 1) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == k) {
      break;
    }
    ++choice[pos];
  }
  if (k == 0) {
    out.insert(endo_zero(l));
  }
  return std::vector<Endo>(out.begin(), out.end());
}

std::vector<Endo> endo_span(const SpanLattice& l, std::vector<Endo> gens,
                            std::size_t max_size) {
  std::set<Endo> closed;
  closed.insert(endo_zero(l));
  for (const Endo& g : gens) {
    std::vector<Endo> next;
    for (const Endo& x : closed) {
      next.push_back(endo_join(l, x, g));
    }
    closed.insert(next.begin(), next.end());
    if (closed.size() > max_size) {
      throw CapExceededError("endomorphism span exceeded cap " + std::to_string(max_size));
    }
  }
  return std::vector<Endo>(closed.begin(), closed.end());
}

}  // namespace boolrep
