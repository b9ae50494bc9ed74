// Acceptance gate. Each criterion prints exactly one PASS/FAIL line;
// the exit status is nonzero when any requested criterion fails.
//
// Run with no arguments for all ten, or pass criterion numbers.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boolrep/characters.hpp"
#include "boolrep/corpus.hpp"
#include "boolrep/error.hpp"
#include "boolrep/irreducibles.hpp"
#include "boolrep/io.hpp"

#include "oracles.hpp"

using namespace boolrep;

namespace {

std::shared_ptr<const FiniteSemigroup> fixture(const std::string& name) {
  return std::make_shared<const FiniteSemigroup>(load_corpus(name));
}

std::vector<int> regular_j_classes(const GreenStructure& g) {
  std::vector<int> out;
  for (int j = 0; j < g.n_j; ++j) {
    if (g.regular[static_cast<std::size_t>(j)]) {
      out.push_back(j);
    }
  }
  return out;
}

// criterion 1: the five element module over the two element semilattice
// has min character 2 at the collapsing element, per-section (2, 2, 3)
bool criterion1(std::string& why) {
  auto s = fixture("chain2");
  SpanLattice carrier =
      SpanLattice::span(3, {BoolVec::from_string("100"), BoolVec::from_string("110"),
                            BoolVec::from_string("011")});
  std::vector<std::vector<int>> action(5);
  for (int m = 0; m < 5; ++m) {
    action[static_cast<std::size_t>(m)] = {m == 0 ? 0 : 4, m};
  }
  BModule m = make_module(s, carrier, action);
  std::vector<long long> sections = section_character_values(m, 0);
  if (sections != std::vector<long long>{2, 2, 3}) {
    std::ostringstream os;
    os << "per-section values at e came out (";
    for (std::size_t i = 0; i < sections.size(); ++i) {
      os << (i ? ", " : "") << sections[i];
    }
    os << "), wanted (2, 2, 3)";
    why = os.str();
    return false;
  }
  long long min_e = min_character(m).values[0];
  if (min_e != 2) {
    why = "min character at e came out " + std::to_string(min_e) + ", wanted 2";
    return false;
  }
  return true;
}

// criterion 2: every irreducible module passes the enumeration-based
// minimality and simplicity checks and sits at its own apex
bool criterion2(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    for (int j : regular_j_classes(g)) {
      IrreducibleModule ir = irreducible_module(s, g, j);
      if (ir.module.size() > 10) {
        why = name + " J" + std::to_string(j) + ": module size " +
              std::to_string(ir.module.size()) + " exceeds the enumeration cap";
        return false;
      }
      if (!is_minimal_enum(ir.module) || !is_simple_enum(ir.module) ||
          !is_irreducible(ir.module)) {
        why = name + " J" + std::to_string(j) + ": not irreducible";
        return false;
      }
      auto ap = apex(ir.module, g);
      if (!ap || *ap != j) {
        why = name + " J" + std::to_string(j) + ": apex mismatch";
        return false;
      }
    }
  }
  return true;
}

// criterion 3: per fixture the irreducibles are pairwise non-isomorphic,
// one per regular J-class; for tiny fixtures an exhaustive sweep over all
// modules on all small carriers finds nothing new
bool criterion3(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    std::vector<int> regs = regular_j_classes(g);
    std::vector<BModule> built;
    for (int j : regs) {
      built.push_back(irreducible_module(s, g, j).module);
    }
    for (std::size_t a = 0; a < built.size(); ++a) {
      for (std::size_t b = a + 1; b < built.size(); ++b) {
        if (module_isomorphic(built[a], built[b])) {
          why = name + ": modules of J" + std::to_string(regs[a]) + " and J" +
                std::to_string(regs[b]) + " are isomorphic";
          return false;
        }
      }
    }
    if (s->order() > 3) {
      continue;
    }
    std::vector<SpanLattice> carriers = testutil::small_lattices(4, 2, 5);
    if (carriers.size() != 9) {
      why = "expected 9 semilattices of size 2..5, found " +
            std::to_string(carriers.size());
      return false;
    }
    for (const SpanLattice& l : carriers) {
      for (const BModule& m : testutil::all_modules_on(s, l)) {
        if (!m.nondegenerate() || !is_irreducible(m)) {
          continue;
        }
        bool known = false;
        for (const BModule& irr : built) {
          known = known || module_isomorphic(m, irr);
        }
        if (!known) {
          why = name + ": found an irreducible module of size " +
                std::to_string(m.size()) + " missing from the classification";
          return false;
        }
      }
    }
  }
  return true;
}

// criterion 4: the direct sum kernel is the largest congruence keeping
// related regular elements J-equivalent, against brute force
bool criterion4(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    if (s->order() > 7) {
      continue;
    }
    GreenStructure g = green_structure(*s);
    if (direct_sum_kernel(*s, g) != largest_jprime_oracle(*s, g)) {
      why = name + ": direct sum kernel differs from the brute-force largest";
      return false;
    }
  }
  return true;
}

// criterion 5: dualizing swaps minimality and simplicity
bool criterion5(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    for (int j : regular_j_classes(g)) {
      IrreducibleModule ir = irreducible_module(s, g, j);
      for (const BModule* m : {&ir.module, &ir.free_module}) {
        if (m->size() > 8) {
          continue;
        }
        DualModule d = dualize(*m);
        if (is_simple(*m) != is_minimal(d.module) ||
            is_minimal(*m) != is_simple(d.module)) {
          why = name + " J" + std::to_string(j) +
                ": minimal/simple did not swap under duality";
          return false;
        }
      }
    }
  }
  return true;
}

// criterion 6: every action image is group mapping over an aperiodic
// distinguished ideal; a faithful irreducible makes S itself group mapping
bool criterion6(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    for (int j : regular_j_classes(g)) {
      AggmResult a = aggm(s, g, j);
      if (!is_ggm(a.image) || !has_aperiodic_distinguished_ideal(a.image)) {
        why = name + " J" + std::to_string(j) + ": image fails the analysis";
        return false;
      }
      IrreducibleModule ir = irreducible_module(s, g, j);
      if (faithful_action(ir.module) && !is_ggm(*s)) {
        why = name + " J" + std::to_string(j) +
              ": faithful module but the semigroup is not group mapping";
        return false;
      }
    }
  }
  return true;
}

// criterion 7: every irreducible representation is dense; a free row
// span of rank n forces the full 2^(n*n) endomorphism semiring
bool criterion7(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    for (int j : regular_j_classes(g)) {
      IrreducibleModule ir = irreducible_module(s, g, j);
      DensityReport d = density_report(ir.module);
      if (!d.dense) {
        why = name + " J" + std::to_string(j) + ": span misses an elementary map";
        return false;
      }
      std::size_t n = ir.module.carrier.sji().size();
      if (free_row_span_test(ir.sandwich) && n <= 3) {
        if (!d.full_end_known || !d.spans_full_end ||
            d.span_size != (std::size_t{1} << (n * n))) {
          why = name + " J" + std::to_string(j) + ": free rank " +
                std::to_string(n) + " span has size " + std::to_string(d.span_size);
          return false;
        }
      }
    }
  }
  return true;
}

// criterion 8: the module character on sandwich rows equals the lifted
// fixed-point character of the image acting on an R-class
bool criterion8(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    for (int j : regular_j_classes(g)) {
      SchutzCheck check = schutz_theorem_check(s, g, j);
      if (!check.match || !check.injective_ok || !check.spectrum_ok) {
        why = name + " J" + std::to_string(j) + ": match=" +
              std::to_string(check.match) + " injective=" +
              std::to_string(check.injective_ok) + " spectrum=" +
              std::to_string(check.spectrum_ok);
        return false;
      }
    }
  }
  return true;
}

// criterion 9: structural facts, exhaustively at desk scale
bool criterion9(std::string& why) {
  for (const std::string& name : corpus_names()) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);

    // local monoids eSe and fSf are isomorphic exactly when e J f
    for (std::size_t a = 0; a < g.idempotents.size(); ++a) {
      for (std::size_t b = a; b < g.idempotents.size(); ++b) {
        int e = g.idempotents[a], f = g.idempotents[b];
        bool same_j = g.j_class[static_cast<std::size_t>(e)] ==
                      g.j_class[static_cast<std::size_t>(f)];
        bool iso = testutil::table_isomorphic(testutil::local_monoid(*s, e).monoid,
                                              testutil::local_monoid(*s, f).monoid);
        if (same_j != iso) {
          why = name + ": local monoids at " + s->label(e) + " and " + s->label(f) +
                (iso ? " isomorphic across J-classes" : " differ inside one J-class");
          return false;
        }
      }
    }

    // regularity is a J-class property with all its usual faces
    for (int j = 0; j < g.n_j; ++j) {
      bool has_idem = false, all_reg = true, any_reg = false;
      for (int x : g.j_members[static_cast<std::size_t>(j)]) {
        has_idem = has_idem || s->is_idempotent(x);
        bool reg = testutil::is_regular_element(*s, x);
        all_reg = all_reg && reg;
        any_reg = any_reg || reg;
      }
      bool flag = g.regular[static_cast<std::size_t>(j)];
      if (has_idem != flag || all_reg != flag || any_reg != flag) {
        why = name + " J" + std::to_string(j) + ": regularity readings disagree";
        return false;
      }
    }

    // inside its own J-class, eSe is exactly the H-class of e
    for (int e : g.idempotents) {
      std::set<int> inside;
      for (int x = 0; x < static_cast<int>(s->order()); ++x) {
        int exe = s->product(s->product(e, x), e);
        if (g.j_class[static_cast<std::size_t>(exe)] ==
            g.j_class[static_cast<std::size_t>(e)]) {
          inside.insert(exe);
        }
      }
      std::set<int> h_class;
      for (int x = 0; x < static_cast<int>(s->order()); ++x) {
        if (g.r_class[static_cast<std::size_t>(x)] ==
                g.r_class[static_cast<std::size_t>(e)] &&
            g.l_class[static_cast<std::size_t>(x)] ==
                g.l_class[static_cast<std::size_t>(e)]) {
          h_class.insert(x);
        }
      }
      if (inside != h_class) {
        why = name + ": eSe meets the J-class of " + s->label(e) +
              " outside its H-class";
        return false;
      }
    }

    // minimal modules stay minimal under every proper quotient; the free
    // module on the L-classes is itself minimal
    for (int j : regular_j_classes(g)) {
      IrreducibleModule ir = irreducible_module(s, g, j);
      for (const BModule* m : {&ir.free_module, &ir.module}) {
        if (m->size() > 10) {
          continue;
        }
        if (!is_minimal(*m)) {
          why = name + " J" + std::to_string(j) + ": expected a minimal module";
          return false;
        }
        Partition universal = universal_partition(m->size());
        for (const Partition& c : module_congruences(*m)) {
          if (c == universal) {
            continue;
          }
          if (!is_minimal(quotient(*m, c).module)) {
            why = name + " J" + std::to_string(j) +
                  ": a proper quotient of a minimal module is not minimal";
            return false;
          }
        }
      }
    }
  }
  return true;
}

// criterion 10: groups admit only the two element module with trivial
// action, so the direct sum representation collapses completely
bool criterion10(std::string& why) {
  for (const std::string& name : {"z2", "z3", "s3"}) {
    auto s = fixture(name);
    GreenStructure g = green_structure(*s);
    if (g.n_j != 1 || !g.regular[0]) {
      why = std::string(name) + ": expected a single regular J-class";
      return false;
    }
    IrreducibleModule ir = irreducible_module(s, g, 0);
    if (ir.module.size() != 2) {
      why = std::string(name) + ": module size " + std::to_string(ir.module.size());
      return false;
    }
    for (int t = 0; t < static_cast<int>(s->order()); ++t) {
      if (ir.module.act(1, t) != 1) {
        why = std::string(name) + ": " + s->label(t) + " acts nontrivially";
        return false;
      }
    }
    if (direct_sum_kernel(*s, g) != universal_partition(s->order())) {
      why = std::string(name) + ": kernel does not collapse everything";
      return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  const char* label;
  bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "five element module has min character 2 with sections (2, 2, 3)", criterion1},
    {2, "irreducibles verified by full enumeration, apex equals the J-class", criterion2},
    {3, "one irreducible per regular J-class, none missed at small size", criterion3},
    {4, "direct sum kernel is the largest J-preserving congruence", criterion4},
    {5, "duality swaps minimal and simple", criterion5},
    {6, "action images are group mapping with an aperiodic ideal", criterion6},
    {7, "irreducible representations are dense, free ones span everything", criterion7},
    {8, "row fixed point characters lift the group mapping character", criterion8},
    {9, "local monoid, regularity, and quotient facts hold exhaustively", criterion9},
    {10, "groups collapse to the two element trivial module", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    int n = std::atoi(argv[i]);
    if (n < 1 || n > 10) {
      std::cerr << "unknown criterion: " << argv[i] << "\n";
      return 2;
    }
    wanted.push_back(n);
  }
  if (wanted.empty()) {
    for (const Criterion& c : kCriteria) {
      wanted.push_back(c.number);
    }
  }

  bool all_ok = true;
  for (int n : wanted) {
    const Criterion& c = kCriteria[n - 1];
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const Error& e) {
      why = std::string("unexpected error: ") + e.what();
    }
    if (ok) {
      std::cout << "PASS criterion " << c.number << ": " << c.label << "\n";
    } else {
      std::cout << "FAIL criterion " << c.number << ": " << c.label << " [" << why
                << "]\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}
