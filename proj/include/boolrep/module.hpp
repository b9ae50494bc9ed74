// Right modules over a finite semigroup with coefficients in the boolean
// semiring: a join semilattice with 0 on which the semigroup acts by join
// endomorphisms.
//
// The carrier is always a vector-realized SpanLattice; modules handed to
// us as abstract join tables are re-embedded on construction. The action
// is tabulated: act(m, s) is an element index.
//
// Everything here assumes the standing nondegeneracy hypothesis
// M . S != 0 where it matters; predicates that need it throw
// DegenerateModuleError otherwise.

#ifndef BOOLREP_MODULE_HPP_
#define BOOLREP_MODULE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "boolrep/green.hpp"
#include "boolrep/lattice.hpp"
#include "boolrep/partition.hpp"
#include "boolrep/semigroup.hpp"

namespace boolrep {

struct BModule {
  std::shared_ptr<const FiniteSemigroup> semigroup;
  SpanLattice carrier;
  std::vector<std::vector<int>> action;  // action[element][s]

  int act(int m, int s) const {
    return action[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)];
  }
  std::size_t size() const { return carrier.size(); }

  // M . S != 0: some element moves somewhere nonzero.
  bool nondegenerate() const;
};

struct ModuleViolation {
  std::string kind;    // "shape", "zero", "additivity", "associativity"
  std::string detail;  // witness
};

// Checks the module axioms; nullopt means all hold.
std::optional<ModuleViolation> check_module(const BModule& m);

// Builds and validates; throws InvalidInputError on a violation.
BModule make_module(std::shared_ptr<const FiniteSemigroup> s, SpanLattice carrier,
                    std::vector<std::vector<int>> action);

// Builds from an abstract join table plus an action on abstract ids;
// out_index maps abstract ids to carrier element indices.
BModule module_from_join_table(std::shared_ptr<const FiniteSemigroup> s,
                               const std::vector<std::vector<int>>& join,
                               const std::vector<std::vector<int>>& action,
                               std::vector<int>& out_index);

// All submodules (subsets containing 0, closed under join and the
// action), each as a sorted index list. Definitional enumeration over
// all subsets; throws CapExceededError when |M| > max_size.
std::vector<std::vector<int>> submodules(const BModule& m, std::size_t max_size = 16);

// All module congruences (partitions compatible with join translation
// and the action). Throws CapExceededError when |M| > max_size.
std::vector<Partition> module_congruences(const BModule& m, std::size_t max_size = 10);

bool is_module_congruence(const BModule& m, const Partition& p);

// Minimality = no proper nonzero submodule. The primary check uses the
// cyclic criterion: the span of {m.s : s in S} is all of M for every
// nonzero m. Throws DegenerateModuleError when M . S = 0 or |M| = 1.
bool is_minimal(const BModule& m);
// Same predicate by submodule enumeration.
bool is_minimal_enum(const BModule& m, std::size_t max_size = 16);
// The two readings of the cyclic criterion (span of mS, and span of
// mS together with m itself) are provably equivalent under
// nondegeneracy; returns whether they agree here, for the record.
bool minimality_readings_agree(const BModule& m);

// Simplicity = every congruence is trivial or universal. The primary
// check saturates the principal congruence of each pair and requires it
// to be universal. Throws DegenerateModuleError like is_minimal.
bool is_simple(const BModule& m);
bool is_simple_enum(const BModule& m, std::size_t max_size = 10);

bool is_irreducible(const BModule& m);

// Elements of S acting as zero on all of M, ascending.
std::vector<int> annihilator(const BModule& m);

// The regular J-class whose apex ideal I(J) equals the annihilator,
// if there is one.
std::optional<int> apex(const BModule& m, const GreenStructure& g);

struct QuotientModule {
  BModule module;
  std::vector<int> class_to_elem;  // congruence class id -> carrier index
};

// Quotient by a module congruence; throws InvalidInputError if the
// partition is not one.
QuotientModule quotient(const BModule& m, const Partition& cong);

struct DualModule {
  BModule module;            // right module over the opposite semigroup
  std::vector<int> anchor;   // original element index -> dual carrier index
};

// The dual module of functionals f_m(x) = 0 iff x <= m, with
// (f . s)(x) = f(x s) read as a right module over S^op. The anchor map
// reverses order and is a bijection.
DualModule dualize(const BModule& m);

// Isomorphism of modules over the same semigroup (equal tables required):
// a bijection preserving joins, 0 and the action. Exhaustive over sji
// correspondences; meant for desk-scale carriers.
bool module_isomorphic(const BModule& a, const BModule& b);

// All module homomorphisms a -> b (join- and action-preserving maps
// sending 0 to 0), as value tables over element indices. Throws
// CapExceededError when |b|^|sji(a)| exceeds max_candidates.
std::vector<std::vector<int>> module_homomorphisms(const BModule& a, const BModule& b,
                                                   std::size_t max_candidates = 1 << 20);

// Does s act differently from t for some pair s != t? (Injectivity of
// the representation S -> End(M).)
bool faithful_action(const BModule& m);

// Partition of S by equal action columns.
Partition action_kernel(const BModule& m);

}  // namespace boolrep

#endif  // BOOLREP_MODULE_HPP_
