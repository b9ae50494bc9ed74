#include "boolrep/characters.hpp"

#include <algorithm>
#include <set>

namespace boolrep {

CharacterTable chi_matrix(const MatrixRep& rep) {
  if (!rep.multiplicative) {
    throw InvalidInputError("character of a non-multiplicative representation");
  }
  CharacterTable out;
  out.values.reserve(rep.images.size());
  for (const BoolMatrix& img : rep.images) {
    long long diag = 0;
    for (std::size_t i = 0; i < img.n_rows(); ++i) {
      diag += img.get(i, i) ? 1 : 0;
    }
    out.values.push_back(diag);
  }
  return out;
}

CharacterTable min_character(const BModule& m, std::size_t decomp_cap) {
  const int ns = static_cast<int>(m.semigroup->order());
  const std::vector<int>& sji = m.carrier.sji();
  CharacterTable out;
  out.values.reserve(static_cast<std::size_t>(ns));
  for (int s = 0; s < ns; ++s) {
    // Group the sji elements by target; each target contributes the
    // cheapest count of its own preimages over its decompositions.
    // Forced cases: target 0 contributes nothing (sigma(0) is empty),
    // an sji target v contributes [v s = v] (sigma(v) = {v}).
    long long total = 0;
    std::set<int> targets;
    for (int x : sji) {
      targets.insert(m.act(x, s));
    }
    for (int v : targets) {
      if (v == m.carrier.zero()) {
        continue;
      }
      std::vector<char> is_preimage(m.size(), 0);
      for (int x : sji) {
        if (m.act(x, s) == v) {
          is_preimage[static_cast<std::size_t>(x)] = 1;
        }
      }
      if (m.carrier.is_sji(v)) {
        total += is_preimage[static_cast<std::size_t>(v)] ? 1 : 0;
        continue;
      }
      long long best = -1;
      for (const std::vector<int>& dec : all_decompositions(m.carrier, v, decomp_cap)) {
        long long hits = 0;
        for (int x : dec) {
          hits += is_preimage[static_cast<std::size_t>(x)] ? 1 : 0;
        }
        if (best < 0 || hits < best) {
          best = hits;
        }
      }
      total += best;
    }
    out.values.push_back(total);
  }
  return out;
}

std::vector<long long> section_character_values(const BModule& m, int s,
                                                std::size_t max_sections,
                                                std::size_t decomp_cap) {
  const std::vector<int>& sji = m.carrier.sji();
  // Elements with a free choice of decomposition, ascending.
  std::vector<int> movable;
  std::vector<std::vector<std::vector<int>>> options;
  double count = 1;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (static_cast<int>(x) == m.carrier.zero() || m.carrier.is_sji(static_cast<int>(x))) {
      continue;
    }
    movable.push_back(static_cast<int>(x));
    options.push_back(all_decompositions(m.carrier, static_cast<int>(x), decomp_cap));
    count *= static_cast<double>(options.back().size());
  }
  if (count > static_cast<double>(max_sections)) {
    throw CapExceededError("section enumeration needs " + std::to_string(count) +
                           " sections, cap is " + std::to_string(max_sections));
  }

  std::vector<std::size_t> choice(movable.size(), 0);
  std::vector<long long> out;
  while (true) {
    // sigma as a membership table: in_sigma[v][x] for movable v
    long long chi = 0;
    for (int x : sji) {
      const int v = m.act(x, s);
      if (v == m.carrier.zero()) {
        continue;
      }
      bool in = false;
      if (m.carrier.is_sji(v)) {
        in = v == x;
      } else {
        auto pos = std::lower_bound(movable.begin(), movable.end(), v);
        const std::size_t vi = static_cast<std::size_t>(pos - movable.begin());
        const std::vector<int>& dec = options[vi][choice[vi]];
        in = std::binary_search(dec.begin(), dec.end(), x);
      }
      chi += in ? 1 : 0;
    }
    out.push_back(chi);

    // advance the cartesian product, last coordinate fastest
    std::size_t pos = movable.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < options[pos].size()) {
        break;
      }
      choice[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
    if (movable.empty()) {
      return out;
    }
  }
}

CharacterTable generalized_character(const BModule& m, const std::vector<int>& d) {
  std::vector<char> in(m.size(), 0);
  for (int x : d) {
    if (x < 0 || x >= static_cast<int>(m.size()) || x == m.carrier.zero()) {
      throw InvalidInputError("D must consist of nonzero elements");
    }
    in[static_cast<std::size_t>(x)] = 1;
  }
  for (int x : m.carrier.sji()) {
    if (!in[static_cast<std::size_t>(x)]) {
      throw InvalidInputError("D must contain every strictly join irreducible element");
    }
  }
  const int ns = static_cast<int>(m.semigroup->order());
  CharacterTable out;
  out.values.reserve(static_cast<std::size_t>(ns));
  for (int s = 0; s < ns; ++s) {
    long long fixed = 0;
    for (int x : d) {
      fixed += m.act(x, s) == x ? 1 : 0;
    }
    out.values.push_back(fixed);
  }
  return out;
}

bool spectrum_sufficient(const BModule& m, const std::vector<int>& d) {
  std::vector<char> in(m.size(), 0);
  in[static_cast<std::size_t>(m.carrier.zero())] = 1;
  for (int x : d) {
    in[static_cast<std::size_t>(x)] = 1;
  }
  const int ns = static_cast<int>(m.semigroup->order());
  for (int x : d) {
    for (int s = 0; s < ns; ++s) {
      if (!in[static_cast<std::size_t>(m.act(x, s))]) {
        return false;
      }
    }
  }
  return true;
}

bool is_unambiguous(const MatrixRep& rep) {
  if (!rep.canonical_basis) {
    throw NotFreeError("ambiguity test needs a free-basis representation");
  }
  if (!rep.multiplicative) {
    return false;
  }
  const int ns = static_cast<int>(rep.semigroup->order());
  for (int s = 0; s < ns; ++s) {
    for (int t = 0; t < ns; ++t) {
      const auto prod = mul_integer(rep.images[static_cast<std::size_t>(s)],
                                    rep.images[static_cast<std::size_t>(t)]);
      const BoolMatrix& target = rep.images[static_cast<std::size_t>(rep.semigroup->product(s, t))];
      for (std::size_t i = 0; i < target.n_rows(); ++i) {
        for (std::size_t j = 0; j < target.n_cols(); ++j) {
          if (prod[i][j] > 1 || (prod[i][j] == 1) != target.get(i, j)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

struct DistinguishedClass {
  AggmResult agg;
  GreenStructure image_green;
  int j_image;                      // J-class of the image of J
  std::vector<std::vector<int>> r_classes;  // members of each R-class in it
};

DistinguishedClass distinguished_class(std::shared_ptr<const FiniteSemigroup> s,
                                       const GreenStructure& g, int j) {
  DistinguishedClass d{aggm(s, g, j), {}, -1, {}};
  d.image_green = green_structure(d.agg.image);
  d.j_image = -1;
  for (int x : g.j_members[static_cast<std::size_t>(j)]) {
    const int t = d.agg.quotient_map[static_cast<std::size_t>(x)];
    const int jt = d.image_green.j_class[static_cast<std::size_t>(t)];
    if (d.j_image < 0) {
      d.j_image = jt;
    } else if (d.j_image != jt) {
      throw InternalCheckError("image of a J-class straddles several J-classes");
    }
  }
  std::vector<int> rids;
  for (int x : d.image_green.j_members[static_cast<std::size_t>(d.j_image)]) {
    rids.push_back(d.image_green.r_class[static_cast<std::size_t>(x)]);
  }
  std::sort(rids.begin(), rids.end());
  rids.erase(std::unique(rids.begin(), rids.end()), rids.end());
  for (int rid : rids) {
    std::vector<int> members;
    for (int x : d.image_green.j_members[static_cast<std::size_t>(d.j_image)]) {
      if (d.image_green.r_class[static_cast<std::size_t>(x)] == rid) {
        members.push_back(x);
      }
    }
    d.r_classes.push_back(std::move(members));
  }
  return d;
}

CharacterTable lifted_character(const FiniteSemigroup& s, const DistinguishedClass& d,
                                const std::vector<int>& r_class) {
  CharacterTable out;
  out.values.reserve(s.order());
  for (std::size_t x = 0; x < s.order(); ++x) {
    const int t = d.agg.quotient_map[x];
    long long fixed = 0;
    for (int r : r_class) {
      fixed += d.agg.image.product(r, t) == r ? 1 : 0;
    }
    out.values.push_back(fixed);
  }
  return out;
}

}  // namespace

CharacterTable schutzenberger_character(std::shared_ptr<const FiniteSemigroup> s,
                                        const GreenStructure& g, int j) {
  DistinguishedClass d = distinguished_class(s, g, j);
  return lifted_character(*s, d, d.r_classes.front());
}

std::vector<CharacterTable> schutzenberger_characters_all(
    std::shared_ptr<const FiniteSemigroup> s, const GreenStructure& g, int j) {
  DistinguishedClass d = distinguished_class(s, g, j);
  std::vector<CharacterTable> out;
  for (const std::vector<int>& r : d.r_classes) {
    out.push_back(lifted_character(*s, d, r));
  }
  return out;
}

SchutzCheck schutz_theorem_check(std::shared_ptr<const FiniteSemigroup> s,
                                 const GreenStructure& g, int j) {
  IrreducibleModule ir = irreducible_module(s, g, j);
  SchutzCheck out;

  std::set<int> rows(ir.l_class_to_element.begin(), ir.l_class_to_element.end());
  std::vector<int> d(rows.begin(), rows.end());
  out.spectrum_ok = spectrum_sufficient(ir.module, d);
  out.psi = generalized_character(ir.module, d);
  out.lifted = schutzenberger_character(s, g, j);
  out.match = out.psi == out.lifted;
  out.injective_ok =
      !faithful_action(ir.module) || rows.size() == ir.l_class_to_element.size();
  return out;
}

}  // namespace boolrep
