#include "boolrep/green.hpp"

#include <algorithm>
#include <map>

namespace boolrep {

namespace {

// Assigns class ids by grouping equal ideals, in order of least member.
int classify(const std::vector<BoolVec>& ideal, std::vector<int>& cls) {
  std::map<BoolVec, int, BoolVecLess> seen;
  int next = 0;
  cls.resize(ideal.size());
  for (std::size_t s = 0; s < ideal.size(); ++s) {
    auto [it, fresh] = seen.emplace(ideal[s], next);
    if (fresh) {
      ++next;
    }
    cls[s] = it->second;
  }
  return next;
}

}  // namespace

const MaximalSubgroup& GreenStructure::subgroup_of(int j) const {
  for (const MaximalSubgroup& g : subgroups) {
    if (g.j_class == j) {
      return g;
    }
  }
  throw NotRegularError("J-class " + std::to_string(j) + " has no maximal subgroup");
}

GreenStructure green_structure(const FiniteSemigroup& s) {
  const int n = static_cast<int>(s.order());
  GreenStructure g;
  g.order = s.order();

  std::vector<BoolVec> rideal(n, BoolVec(s.order()));
  std::vector<BoolVec> lideal(n, BoolVec(s.order()));
  for (int x = 0; x < n; ++x) {
    rideal[x].set(x);
    lideal[x].set(x);
    for (int t = 0; t < n; ++t) {
      rideal[x].set(s.product(x, t));
      lideal[x].set(s.product(t, x));
    }
  }
  std::vector<BoolVec> jideal(n);
  for (int x = 0; x < n; ++x) {
    BoolVec acc = rideal[x];
    acc |= lideal[x];
    for (int u = 0; u < n; ++u) {
      acc |= rideal[s.product(u, x)];
    }
    jideal[x] = acc;
  }

  g.n_r = classify(rideal, g.r_class);
  g.n_l = classify(lideal, g.l_class);
  g.n_j = classify(jideal, g.j_class);

  // H = R meet L; ids again by least member.
  {
    std::map<std::pair<int, int>, int> seen;
    g.h_class.resize(n);
    int next = 0;
    for (int x = 0; x < n; ++x) {
      auto [it, fresh] = seen.emplace(std::make_pair(g.r_class[x], g.l_class[x]), next);
      if (fresh) {
        ++next;
      }
      g.h_class[x] = it->second;
    }
    g.n_h = next;
  }

  g.j_members.assign(g.n_j, {});
  for (int x = 0; x < n; ++x) {
    g.j_members[g.j_class[x]].push_back(x);
  }

  g.j_order.assign(g.n_j, std::vector<char>(g.n_j, 0));
  for (int a = 0; a < g.n_j; ++a) {
    for (int b = 0; b < g.n_j; ++b) {
      g.j_order[a][b] =
          jideal[g.j_members[a][0]].is_subset_of(jideal[g.j_members[b][0]]) ? 1 : 0;
    }
  }

  for (int x = 0; x < n; ++x) {
    if (s.is_idempotent(x)) {
      g.idempotents.push_back(x);
    }
  }
  g.regular.assign(g.n_j, 0);
  g.transversal.assign(g.n_j, -1);
  for (int e : g.idempotents) {
    int j = g.j_class[e];
    if (!g.regular[j]) {
      g.regular[j] = 1;
      g.transversal[j] = e;
    }
  }

  for (int j = 0; j < g.n_j; ++j) {
    if (!g.regular[j]) {
      continue;
    }
    const int e = g.transversal[j];
    std::vector<int> members;
    for (int x = 0; x < n; ++x) {
      if (g.r_class[x] == g.r_class[e] && g.l_class[x] == g.l_class[e]) {
        members.push_back(x);
      }
    }
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[members[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> table(members.size(), std::vector<int>(members.size()));
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        const int p = s.product(members[a], members[b]);
        if (local[p] < 0) {
          throw InternalCheckError(
              "H-class of an idempotent is not closed under products");
        }
        table[a][b] = local[p];
      }
    }
    MaximalSubgroup mg{j, e, FiniteSemigroup::from_table(std::move(table)), members};
    g.subgroups.push_back(std::move(mg));
  }

  return g;
}

std::vector<int> apex_ideal(const FiniteSemigroup& s, const GreenStructure& g, int j) {
  if (j < 0 || j >= g.n_j) {
    throw InvalidInputError("no such J-class: " + std::to_string(j));
  }
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(s.order()); ++x) {
    // J is inside S^1 x S^1 exactly when J <=_J J(x).
    if (!g.j_below(j, g.j_class[x])) {
      out.push_back(x);
    }
  }
  return out;
}

JClassGeometry j_class_geometry(const FiniteSemigroup&, const GreenStructure& g, int j) {
  if (j < 0 || j >= g.n_j) {
    throw InvalidInputError("no such J-class: " + std::to_string(j));
  }
  if (!g.regular[j]) {
    throw NotRegularError("J-class " + std::to_string(j) +
                          " is not regular; it has no sandwich matrix");
  }
  JClassGeometry geo;
  geo.j_class = j;
  std::vector<char> rseen(g.n_r, 0), lseen(g.n_l, 0);
  for (int x : g.j_members[j]) {
    rseen[g.r_class[x]] = 1;
    lseen[g.l_class[x]] = 1;
  }
  for (int a = 0; a < g.n_r; ++a) {
    if (rseen[a]) {
      geo.r_classes.push_back(a);
    }
  }
  for (int b = 0; b < g.n_l; ++b) {
    if (lseen[b]) {
      geo.l_classes.push_back(b);
    }
  }
  BoolMatrix c(geo.l_classes.size(), geo.r_classes.size());
  for (int e : g.idempotents) {
    if (g.j_class[e] != j) {
      continue;
    }
    auto bi = std::find(geo.l_classes.begin(), geo.l_classes.end(), g.l_class[e]);
    auto ai = std::find(geo.r_classes.begin(), geo.r_classes.end(), g.r_class[e]);
    c.set(static_cast<std::size_t>(bi - geo.l_classes.begin()),
          static_cast<std::size_t>(ai - geo.r_classes.begin()));
  }
  geo.h_has_idempotent = std::move(c);
  return geo;
}

}  // namespace boolrep
