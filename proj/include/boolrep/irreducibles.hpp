// The irreducible boolean modules of a finite semigroup, one per regular
// J-class, and everything downstream of them: matrix representations,
// representation kernels, the largest congruence separating regular
// J-classes, generalized group mapping images, and density of the image
// span inside the endomorphism semiring.
//
// Construction, for a regular J-class J with R-classes A and L-classes B:
//  * the sandwich matrix C (|B| x |A|) marks H-classes containing an
//    idempotent;
//  * the free module BB on B carries the action b.s = L-class of xs for
//    any x in b, or 0 when xs drops out of J;
//  * the congruence "same annihilation pattern" on BB is computed as
//    m == n iff mC = nC; it is the unique maximal proper congruence;
//  * the irreducible module is BB modulo that congruence, realized
//    concretely as the span of the rows of C with m |-> mC as the
//    quotient map.
// Both realizations are built and checked against each other.

#ifndef BOOLREP_IRREDUCIBLES_HPP_
#define BOOLREP_IRREDUCIBLES_HPP_

#include <memory>
#include <vector>

#include "boolrep/module.hpp"

namespace boolrep {

// The free module BB. Basis b (position in geo.l_classes) sits at carrier
// index carrier.index_of(unit vector b). Well-definedness of the action
// over the choice of x in b is verified.
BModule l_class_action(std::shared_ptr<const FiniteSemigroup> s, const GreenStructure& g,
                       int j);

// Annihilation-pattern congruence on a module: m == n iff the same
// elements of `over` send them to zero. With `over` = all of S this is
// the maximal proper congruence on the free module BB.
Partition annihilation_congruence(const BModule& m, const std::vector<int>& over);

struct IrreducibleModule {
  int j_class;
  JClassGeometry geo;
  BoolMatrix sandwich;               // C, |B| x |A|
  BModule free_module;               // BB
  Partition congruence;              // on BB, via m |-> mC
  BModule module;                    // row span of C
  std::vector<int> l_class_to_element;  // basis b -> carrier index of row b
};

IrreducibleModule irreducible_module(std::shared_ptr<const FiniteSemigroup> s,
                                     const GreenStructure& g, int j);

// Boolean matrix representation of a module in its sji basis. For a free
// carrier the basis expansion is unique and the representation is exactly
// the action (canonical_basis = true, multiplicative = true). Otherwise
// the lexicographically least smallest irredundant decomposition is used
// and multiplicativity is checked, not assumed.
struct MatrixRep {
  std::shared_ptr<const FiniteSemigroup> semigroup;
  std::size_t dim;
  std::vector<int> basis;            // carrier indices of the sji elements
  std::vector<BoolMatrix> images;    // per element of S
  bool canonical_basis;
  bool multiplicative;
};

MatrixRep matrix_rep_of(const BModule& m);

// Partition of S by equal matrix images.
Partition rep_kernel(const MatrixRep& rep);

// Partition of S by equal actions on every irreducible module M_J,
// J regular. This is the kernel of the direct sum representation.
Partition direct_sum_kernel(const FiniteSemigroup& s, const GreenStructure& g);

// A congruence is a J'-congruence when related regular elements are
// always J-equivalent. (Checks the condition on a given partition that
// is assumed to be a semigroup congruence.)
bool is_jprime_congruence(const FiniteSemigroup& s, const GreenStructure& g,
                          const Partition& p);

// All semigroup congruences by brute force over partitions.
// Throws CapExceededError when |S| > max_order.
std::vector<Partition> semigroup_congruences(const FiniteSemigroup& s,
                                             std::size_t max_order = 7);
bool is_semigroup_congruence(const FiniteSemigroup& s, const Partition& p);

// The largest J'-congruence, found by enumerating all congruences and
// verifying a unique maximum exists. Oracle-grade (desk scale only).
Partition largest_jprime_oracle(const FiniteSemigroup& s, const GreenStructure& g,
                                std::size_t max_order = 7);

// Image of S acting on the irreducible module of J, as a semigroup.
struct AggmResult {
  FiniteSemigroup image;
  std::vector<int> quotient_map;  // S element -> image element
};

AggmResult aggm(std::shared_ptr<const FiniteSemigroup> s, const GreenStructure& g, int j);

// Generalized group mapping analysis: S is GGM when it acts faithfully
// on both sides of a distinguished (0-)minimal ideal. Candidates are the
// kernel (no zero, or trivial S) or the ideals {0} + J for J-classes J
// covering the zero class.
struct GgmReport {
  bool is_ggm = false;
  std::vector<int> ideal;      // the distinguished ideal, when found
  int ideal_j_class = -1;      // its nonzero J-class
  bool ideal_regular = false;
  bool aperiodic = false;      // regular with trivial maximal subgroup
  int candidates = 0;
};

GgmReport ggm_report(const FiniteSemigroup& s);
bool is_ggm(const FiniteSemigroup& s);
bool has_aperiodic_distinguished_ideal(const FiniteSemigroup& s);

// Density of the span of the action image inside End(M). dense means
// every elementary map e_{a,b} lies in the join closure of the image;
// spans_full_end compares that closure with all of End(M).
struct DensityReport {
  std::size_t span_size = 0;
  bool dense = false;
  bool full_end_known = false;  // false when the End enumeration hit its cap
  bool spans_full_end = false;
  std::size_t end_size = 0;
};

DensityReport density_report(const BModule& m, bool want_full_end = true,
                             std::size_t span_cap = 1 << 14,
                             std::size_t endo_cap = 1 << 20);

// Does C contain an identity submatrix of size |sji(row span of C)|?
// Exhaustive search; equivalent to freeness of the row span.
bool free_row_span_test(const BoolMatrix& c);

}  // namespace boolrep

#endif  // BOOLREP_IRREDUCIBLES_HPP_
