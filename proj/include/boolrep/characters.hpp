// Boolean character theory.
//
// For a matrix representation the character of s is the number of ones on
// the diagonal, i.e. the basis elements b with bs >= b. For a module this
// depends on the choice of section (a right inverse of "take the join"
// assigning every element a decomposition into strictly join
// irreducibles); the minimal character takes the minimum over all
// sections. Sections are forced to {m} on the sji elements and to the
// empty set at 0, and are free elsewhere, including non-irredundant
// choices.
//
// The generalized character of a subset D with min M <= D <= M - {0}
// counts fixed points inside D. With D the set of sandwich-matrix rows of
// an irreducible module it matches the character of the Schutzenberger
// representation of the generalized group mapping image, lifted back
// along the quotient.

#ifndef BOOLREP_CHARACTERS_HPP_
#define BOOLREP_CHARACTERS_HPP_

#include <memory>
#include <vector>

#include "boolrep/irreducibles.hpp"
#include "boolrep/module.hpp"

namespace boolrep {

struct CharacterTable {
  std::vector<long long> values;  // indexed by element of S
  bool operator==(const CharacterTable& o) const { return values == o.values; }
};

// Diagonal count per element. Requires a multiplicative representation.
CharacterTable chi_matrix(const MatrixRep& rep);

// Minimal character, computed per target: each element of M picks its
// cheapest decomposition independently.
CharacterTable min_character(const BModule& m, std::size_t decomp_cap = 20);

// Character of one element under every section, in the canonical section
// order (cartesian product of the per-element decomposition lists, first
// listed element varying slowest). Throws CapExceededError when the
// number of sections exceeds max_sections.
std::vector<long long> section_character_values(const BModule& m, int s,
                                                std::size_t max_sections = 100000,
                                                std::size_t decomp_cap = 20);

// Fixed points of s inside D. D must contain every sji element and omit
// zero, as sorted carrier indices.
CharacterTable generalized_character(const BModule& m, const std::vector<int>& d);

// D + {0} is closed under the action.
bool spectrum_sufficient(const BModule& m, const std::vector<int>& d);

// Integer products of images coincide with the images of products (no
// entry ever truncates from >= 2). Requires a free-basis representation.
bool is_unambiguous(const MatrixRep& rep);

// Character of the right Schutzenberger representation of the
// generalized group mapping image of J, lifted back to S: the fixed
// points of Gamma(s) on a fixed R-class of the distinguished J-class.
CharacterTable schutzenberger_character(std::shared_ptr<const FiniteSemigroup> s,
                                        const GreenStructure& g, int j);

// Same thing for every R-class of the distinguished J-class; the tables
// come out equal, which schutz_theorem_check relies on.
std::vector<CharacterTable> schutzenberger_characters_all(
    std::shared_ptr<const FiniteSemigroup> s, const GreenStructure& g, int j);

struct SchutzCheck {
  bool match = false;          // psi_{M_J, rows} == lifted Schutzenberger character
  bool injective_ok = false;   // rows are pairwise distinct when the action is faithful
  bool spectrum_ok = false;    // the row set is action closed up to 0
  CharacterTable psi;
  CharacterTable lifted;
};

SchutzCheck schutz_theorem_check(std::shared_ptr<const FiniteSemigroup> s,
                                 const GreenStructure& g, int j);

}  // namespace boolrep

#endif  // BOOLREP_CHARACTERS_HPP_
