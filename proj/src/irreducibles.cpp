#include "boolrep/irreducibles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace boolrep {

BModule l_class_action(std::shared_ptr<const FiniteSemigroup> s, const GreenStructure& g,
                       int j) {
  const JClassGeometry geo = j_class_geometry(*s, g, j);
  const std::size_t nb = geo.l_classes.size();
  const int ns = static_cast<int>(s->order());

  // basis_act[b][t] = basis index of b.t, or -1 for zero.
  std::vector<std::vector<int>> basis_act(nb, std::vector<int>(static_cast<std::size_t>(ns)));
  std::vector<int> l_to_b(static_cast<std::size_t>(g.n_l), -1);
  for (std::size_t b = 0; b < nb; ++b) {
    l_to_b[static_cast<std::size_t>(geo.l_classes[b])] = static_cast<int>(b);
  }
  for (std::size_t b = 0; b < nb; ++b) {
    for (int t = 0; t < ns; ++t) {
      int result = -2;  // unset
      for (int x : g.j_members[static_cast<std::size_t>(j)]) {
        if (l_to_b[static_cast<std::size_t>(g.l_class[static_cast<std::size_t>(x)])] !=
            static_cast<int>(b)) {
          continue;
        }
        const int xt = s->product(x, t);
        int target = -1;
        if (g.j_class[static_cast<std::size_t>(xt)] == j) {
          target = l_to_b[static_cast<std::size_t>(g.l_class[static_cast<std::size_t>(xt)])];
        }
        if (result == -2) {
          result = target;
        } else if (result != target) {
          throw InternalCheckError("L-class action is not well defined");
        }
      }
      basis_act[b][static_cast<std::size_t>(t)] = result;
    }
  }

  SpanLattice carrier = SpanLattice::free_lattice(nb);
  std::vector<std::vector<int>> action(carrier.size(),
                                       std::vector<int>(static_cast<std::size_t>(ns)));
  for (std::size_t mi = 0; mi < carrier.size(); ++mi) {
    const BoolVec& v = carrier.element(static_cast<int>(mi));
    for (int t = 0; t < ns; ++t) {
      BoolVec img(nb);
      for (std::size_t b = 0; b < nb; ++b) {
        if (v.get(b) && basis_act[b][static_cast<std::size_t>(t)] >= 0) {
          img.set(static_cast<std::size_t>(basis_act[b][static_cast<std::size_t>(t)]));
        }
      }
      action[mi][static_cast<std::size_t>(t)] = carrier.index_of(img);
    }
  }
  return make_module(std::move(s), std::move(carrier), std::move(action));
}

Partition annihilation_congruence(const BModule& m, const std::vector<int>& over) {
  std::map<std::vector<char>, int> seen;
  Partition p(m.size());
  int next = 0;
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::vector<char> pattern;
    pattern.reserve(over.size());
    for (int s : over) {
      pattern.push_back(m.act(static_cast<int>(x), s) == m.carrier.zero() ? 1 : 0);
    }
    auto [it, fresh] = seen.emplace(std::move(pattern), next);
    if (fresh) {
      ++next;
    }
    p[x] = it->second;
  }
  return normalize_partition(std::move(p));
}

IrreducibleModule irreducible_module(std::shared_ptr<const FiniteSemigroup> s,
                                     const GreenStructure& g, int j) {
  IrreducibleModule out;
  out.j_class = j;
  out.geo = j_class_geometry(*s, g, j);
  out.sandwich = out.geo.h_has_idempotent;
  out.free_module = l_class_action(s, g, j);

  const std::size_t nb = out.geo.l_classes.size();
  const int ns = static_cast<int>(s->order());
  const SpanLattice& bb = out.free_module.carrier;

  // m |-> mC, and the congruence "equal image".
  std::vector<BoolVec> image_vec(bb.size());
  {
    std::map<BoolVec, int, BoolVecLess> seen;
    Partition p(bb.size());
    int next = 0;
    for (std::size_t mi = 0; mi < bb.size(); ++mi) {
      image_vec[mi] = mul(bb.element(static_cast<int>(mi)), out.sandwich);
      auto [it, fresh] = seen.emplace(image_vec[mi], next);
      if (fresh) {
        ++next;
      }
      p[mi] = it->second;
    }
    out.congruence = normalize_partition(std::move(p));
  }

  // Concrete realization on the row span of C. The action of t on v = mC
  // is (m t)C, independent of the chosen preimage; we take the largest
  // preimage, the join of all basis rows below v.
  SpanLattice rows = SpanLattice::row_span(out.sandwich);
  std::vector<std::vector<int>> action(rows.size(), std::vector<int>(static_cast<std::size_t>(ns)));
  for (std::size_t vi = 0; vi < rows.size(); ++vi) {
    BoolVec pre(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      if (out.sandwich.row(b).is_subset_of(rows.element(static_cast<int>(vi)))) {
        pre.set(b);
      }
    }
    const int mi = bb.index_of(pre);
    if (mi < 0 || image_vec[static_cast<std::size_t>(mi)] != rows.element(static_cast<int>(vi))) {
      throw InternalCheckError("row-span preimage construction failed");
    }
    for (int t = 0; t < ns; ++t) {
      const int mt = out.free_module.act(mi, t);
      action[vi][static_cast<std::size_t>(t)] =
          rows.index_of(image_vec[static_cast<std::size_t>(mt)]);
      if (action[vi][static_cast<std::size_t>(t)] < 0) {
        throw InternalCheckError("row span is not action closed");
      }
    }
  }
  out.module = make_module(s, std::move(rows), std::move(action));

  out.l_class_to_element.resize(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    out.l_class_to_element[b] = out.module.carrier.index_of(out.sandwich.row(b));
  }

  // The two realizations must be isomorphic via m |-> mC: same class
  // count, and the quotient construction agrees elementwise.
  QuotientModule q = quotient(out.free_module, out.congruence);
  if (q.module.size() != out.module.size()) {
    throw InternalCheckError("quotient and row-span realizations differ in size");
  }
  {
    // class id -> row-span element, then compare join and action tables.
    const int k = static_cast<int>(q.module.size());
    std::vector<int> cls_to_row(static_cast<std::size_t>(k), -1);
    for (std::size_t mi = 0; mi < bb.size(); ++mi) {
      cls_to_row[static_cast<std::size_t>(out.congruence[mi])] =
          out.module.carrier.index_of(image_vec[mi]);
    }
    std::vector<int> q_to_row(static_cast<std::size_t>(k), -1);
    for (int c = 0; c < k; ++c) {
      q_to_row[static_cast<std::size_t>(q.class_to_elem[static_cast<std::size_t>(c)])] =
          cls_to_row[static_cast<std::size_t>(c)];
    }
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        if (q_to_row[static_cast<std::size_t>(q.module.carrier.join(x, y))] !=
            out.module.carrier.join(q_to_row[static_cast<std::size_t>(x)],
                                    q_to_row[static_cast<std::size_t>(y)])) {
          throw InternalCheckError("realizations disagree on joins");
        }
      }
      for (int t = 0; t < ns; ++t) {
        if (q_to_row[static_cast<std::size_t>(q.module.act(x, t))] !=
            out.module.act(q_to_row[static_cast<std::size_t>(x)], t)) {
          throw InternalCheckError("realizations disagree on the action");
        }
      }
    }
  }
  return out;
}

MatrixRep matrix_rep_of(const BModule& m) {
  MatrixRep rep;
  rep.semigroup = m.semigroup;
  rep.basis = m.carrier.sji();
  rep.dim = rep.basis.size();
  rep.canonical_basis = m.carrier.is_free();
  const int ns = static_cast<int>(m.semigroup->order());

  std::vector<int> basis_pos(m.size(), -1);
  for (std::size_t i = 0; i < rep.basis.size(); ++i) {
    basis_pos[static_cast<std::size_t>(rep.basis[i])] = static_cast<int>(i);
  }

  auto expand = [&](int target) {
    BoolVec row(rep.dim);
    if (rep.canonical_basis) {
      for (std::size_t i = 0; i < rep.basis.size(); ++i) {
        if (m.carrier.leq(rep.basis[i], target)) {
          row.set(i);
        }
      }
    } else {
      // canonical choice: smallest, then lexicographically least
      auto decs = irredundant_decompositions(m.carrier, target);
      for (int x : decs.front()) {
        row.set(static_cast<std::size_t>(basis_pos[static_cast<std::size_t>(x)]));
      }
    }
    return row;
  };

  rep.images.reserve(static_cast<std::size_t>(ns));
  for (int s = 0; s < ns; ++s) {
    BoolMatrix img(rep.dim, rep.dim);
    for (std::size_t i = 0; i < rep.basis.size(); ++i) {
      img.row(i) = expand(m.act(rep.basis[i], s));
    }
    rep.images.push_back(std::move(img));
  }

  rep.multiplicative = true;
  for (int s = 0; s < ns && rep.multiplicative; ++s) {
    for (int t = 0; t < ns && rep.multiplicative; ++t) {
      rep.multiplicative =
          mul(rep.images[static_cast<std::size_t>(s)], rep.images[static_cast<std::size_t>(t)]) ==
          rep.images[static_cast<std::size_t>(m.semigroup->product(s, t))];
    }
  }
  return rep;
}

Partition rep_kernel(const MatrixRep& rep) {
  std::map<std::vector<std::string>, int> seen;
  Partition p(rep.images.size());
  int next = 0;
  for (std::size_t s = 0; s < rep.images.size(); ++s) {
    auto [it, fresh] = seen.emplace(rep.images[s].to_strings(), next);
    if (fresh) {
      ++next;
    }
    p[s] = it->second;
  }
  return normalize_partition(std::move(p));
}

Partition direct_sum_kernel(const FiniteSemigroup& s, const GreenStructure& g) {
  auto sp = std::make_shared<FiniteSemigroup>(s);
  const int ns = static_cast<int>(s.order());
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(ns));
  for (int j = 0; j < g.n_j; ++j) {
    if (!g.regular[static_cast<std::size_t>(j)]) {
      continue;
    }
    IrreducibleModule ir = irreducible_module(sp, g, j);
    for (int t = 0; t < ns; ++t) {
      for (std::size_t x = 0; x < ir.module.size(); ++x) {
        signature[static_cast<std::size_t>(t)].push_back(ir.module.act(static_cast<int>(x), t));
      }
    }
  }
  std::map<std::vector<int>, int> seen;
  Partition p(static_cast<std::size_t>(ns));
  int next = 0;
  for (int t = 0; t < ns; ++t) {
    auto [it, fresh] = seen.emplace(signature[static_cast<std::size_t>(t)], next);
    if (fresh) {
      ++next;
    }
    p[static_cast<std::size_t>(t)] = it->second;
  }
  return normalize_partition(std::move(p));
}

bool is_jprime_congruence(const FiniteSemigroup& s, const GreenStructure& g,
                          const Partition& p) {
  const int n = static_cast<int>(s.order());
  std::vector<char> reg(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    reg[static_cast<std::size_t>(x)] = g.regular[static_cast<std::size_t>(
        g.j_class[static_cast<std::size_t>(x)])];
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (p[static_cast<std::size_t>(x)] == p[static_cast<std::size_t>(y)] &&
          reg[static_cast<std::size_t>(x)] && reg[static_cast<std::size_t>(y)] &&
          g.j_class[static_cast<std::size_t>(x)] != g.j_class[static_cast<std::size_t>(y)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_semigroup_congruence(const FiniteSemigroup& s, const Partition& p) {
  const int n = static_cast<int>(s.order());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (p[static_cast<std::size_t>(x)] != p[static_cast<std::size_t>(y)]) {
        continue;
      }
      for (int u = 0; u < n; ++u) {
        if (p[static_cast<std::size_t>(s.product(x, u))] !=
                p[static_cast<std::size_t>(s.product(y, u))] ||
            p[static_cast<std::size_t>(s.product(u, x))] !=
                p[static_cast<std::size_t>(s.product(u, y))]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Partition> semigroup_congruences(const FiniteSemigroup& s,
                                             std::size_t max_order) {
  if (s.order() > max_order) {
    throw CapExceededError("congruence enumeration cap " + std::to_string(max_order) +
                           " exceeded by |S| = " + std::to_string(s.order()));
  }
  std::vector<Partition> out;
  for_each_partition(s.order(), [&](const Partition& p) {
    if (is_semigroup_congruence(s, p)) {
      out.push_back(p);
    }
  });
  return out;
}

Partition largest_jprime_oracle(const FiniteSemigroup& s, const GreenStructure& g,
                                std::size_t max_order) {
  std::vector<Partition> jprime;
  for (const Partition& p : semigroup_congruences(s, max_order)) {
    if (is_jprime_congruence(s, g, p)) {
      jprime.push_back(p);
    }
  }
  for (const Partition& cand : jprime) {
    bool contains_all = true;
    for (const Partition& other : jprime) {
      if (!partition_refines(other, cand)) {
        contains_all = false;
        break;
      }
    }
    if (contains_all) {
      return cand;
    }
  }
  throw InternalCheckError("no largest J'-congruence found; the lattice has no maximum here");
}

AggmResult aggm(std::shared_ptr<const FiniteSemigroup> s, const GreenStructure& g, int j) {
  IrreducibleModule ir = irreducible_module(s, g, j);
  const int ns = static_cast<int>(s->order());

  std::map<std::vector<int>, int> seen;
  std::vector<int> qmap(static_cast<std::size_t>(ns));
  std::vector<int> reps;
  for (int t = 0; t < ns; ++t) {
    std::vector<int> col(ir.module.size());
    for (std::size_t x = 0; x < ir.module.size(); ++x) {
      col[x] = ir.module.act(static_cast<int>(x), t);
    }
    auto [it, fresh] = seen.emplace(std::move(col), static_cast<int>(reps.size()));
    if (fresh) {
      reps.push_back(t);
    }
    qmap[static_cast<std::size_t>(t)] = it->second;
  }

  const std::size_t k = reps.size();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = s->label(reps[a]);
    for (std::size_t b = 0; b < k; ++b) {
      table[a][b] = qmap[static_cast<std::size_t>(s->product(reps[a], reps[b]))];
    }
  }
  return AggmResult{FiniteSemigroup::from_table(std::move(table), std::move(labels)),
                    std::move(qmap)};
}

namespace {

bool left_faithful_on(const FiniteSemigroup& s, const std::vector<int>& ideal) {
  const int n = static_cast<int>(s.order());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool differ = false;
      for (int x : ideal) {
        if (s.product(a, x) != s.product(b, x)) {
          differ = true;
          break;
        }
      }
      if (!differ) {
        return false;
      }
    }
  }
  return true;
}

bool right_faithful_on(const FiniteSemigroup& s, const std::vector<int>& ideal) {
  const int n = static_cast<int>(s.order());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool differ = false;
      for (int x : ideal) {
        if (s.product(x, a) != s.product(x, b)) {
          differ = true;
          break;
        }
      }
      if (!differ) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

GgmReport ggm_report(const FiniteSemigroup& s) {
  GreenStructure g = green_structure(s);
  GgmReport out;

  // Candidate (0-)minimal ideals, each as (nonzero J-class, members).
  std::vector<std::pair<int, std::vector<int>>> candidates;
  const auto zero = s.zero_element();
  if (!zero || s.order() == 1) {
    // the kernel: the unique J-class below every other
    int jmin = -1;
    for (int j = 0; j < g.n_j; ++j) {
      bool below_all = true;
      for (int k = 0; k < g.n_j && below_all; ++k) {
        below_all = g.j_below(j, k);
      }
      if (below_all) {
        jmin = j;
        break;
      }
    }
    if (jmin < 0) {
      throw InternalCheckError("finite semigroup without a kernel");
    }
    candidates.emplace_back(jmin, g.j_members[static_cast<std::size_t>(jmin)]);
  } else {
    const int zj = g.j_class[static_cast<std::size_t>(*zero)];
    for (int j = 0; j < g.n_j; ++j) {
      if (j == zj) {
        continue;
      }
      // minimal among nonzero classes: nothing nonzero strictly below
      bool minimal = true;
      for (int k = 0; k < g.n_j && minimal; ++k) {
        if (k != j && k != zj) {
          minimal = !g.j_below(k, j);
        }
      }
      if (minimal) {
        std::vector<int> ideal = g.j_members[static_cast<std::size_t>(j)];
        ideal.push_back(*zero);
        std::sort(ideal.begin(), ideal.end());
        candidates.emplace_back(j, std::move(ideal));
      }
    }
  }

  out.candidates = static_cast<int>(candidates.size());
  for (const auto& [j, ideal] : candidates) {
    if (left_faithful_on(s, ideal) && right_faithful_on(s, ideal)) {
      out.is_ggm = true;
      out.ideal = ideal;
      out.ideal_j_class = j;
      out.ideal_regular = g.regular[static_cast<std::size_t>(j)];
      out.aperiodic =
          out.ideal_regular && g.subgroup_of(j).group.order() == 1;
      break;
    }
  }
  return out;
}

bool is_ggm(const FiniteSemigroup& s) { return ggm_report(s).is_ggm; }

bool has_aperiodic_distinguished_ideal(const FiniteSemigroup& s) {
  GgmReport r = ggm_report(s);
  return r.is_ggm && r.aperiodic;
}

DensityReport density_report(const BModule& m, bool want_full_end, std::size_t span_cap,
                             std::size_t endo_cap) {
  DensityReport out;
  std::vector<Endo> gens;
  const int ns = static_cast<int>(m.semigroup->order());
  for (int s = 0; s < ns; ++s) {
    Endo f(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      f[x] = m.act(static_cast<int>(x), s);
    }
    gens.push_back(std::move(f));
  }
  std::vector<Endo> span = endo_span(m.carrier, std::move(gens), span_cap);
  out.span_size = span.size();

  out.dense = true;
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n && out.dense; ++a) {
    for (int b = 0; b < n && out.dense; ++b) {
      out.dense = std::binary_search(span.begin(), span.end(),
                                     elementary_endo(m.carrier, a, b));
    }
  }

  if (want_full_end) {
    try {
      std::vector<Endo> all = all_endos(m.carrier, endo_cap);
      out.end_size = all.size();
      out.full_end_known = true;
      out.spans_full_end = span == all;
    } catch (const CapExceededError&) {
      out.full_end_known = false;
    }
  }
  return out;
}

bool free_row_span_test(const BoolMatrix& c) {
  SpanLattice span = SpanLattice::row_span(c);
  const std::size_t k = span.sji().size();
  if (k == 0) {
    return true;  // zero matrix; the empty identity submatrix
  }
  if (k > c.n_rows() || k > c.n_cols()) {
    return false;
  }
  // choose k rows, then give each a private column: 1 in its own row,
  // 0 in the other chosen rows
  std::vector<std::size_t> rows;
  std::function<bool(std::size_t)> choose = [&](std::size_t start) -> bool {
    if (rows.size() == k) {
      for (std::size_t i = 0; i < k; ++i) {
        bool found = false;
        for (std::size_t col = 0; col < c.n_cols() && !found; ++col) {
          if (!c.get(rows[i], col)) {
            continue;
          }
          found = true;
          for (std::size_t j = 0; j < k; ++j) {
            if (j != i && c.get(rows[j], col)) {
              found = false;
              break;
            }
          }
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }
    for (std::size_t r = start; r < c.n_rows(); ++r) {
      rows.push_back(r);
      if (choose(r + 1)) {
        return true;
      }
      rows.pop_back();
    }
    return false;
  };
  return choose(0);
}

}  // namespace boolrep
