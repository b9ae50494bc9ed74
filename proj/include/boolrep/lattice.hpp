// Join semilattices with 0 realized inside B^w, plus their join
// endomorphisms.
//
// A SpanLattice is the join closure of a finite set of vectors. Elements
// are kept sorted in the canonical (popcount, value) order, so index 0 is
// always the zero vector and indices are stable across runs. The strictly
// join irreducible elements (those not reachable as a join of strictly
// smaller elements) form the unique minimal spanning set.
//
// Abstract join semilattices given by a join table are supported by
// re-embedding: x maps to the indicator of {y : x is not below y}, which
// turns joins into unions.

#ifndef BOOLREP_LATTICE_HPP_
#define BOOLREP_LATTICE_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "boolrep/bitvec.hpp"

namespace boolrep {

class SpanLattice {
 public:
  SpanLattice() = default;

  // Join closure of the generators (zero = empty join is always included).
  static SpanLattice span(std::size_t width, std::vector<BoolVec> generators);

  // Free lattice B^rank, spanned by the unit vectors.
  static SpanLattice free_lattice(std::size_t rank);

  // Join closure of the rows of a boolean matrix.
  static SpanLattice row_span(const BoolMatrix& m);

  // Re-embeds an abstract join table on {0..k-1}. Validates idempotence,
  // commutativity, associativity and the existence of a neutral element.
  // out_index[abstract element] = element index in the lattice.
  static SpanLattice from_join_table(const std::vector<std::vector<int>>& join,
                                     std::vector<int>& out_index);

  std::size_t size() const { return elems_.size(); }
  std::size_t width() const { return width_; }

  const BoolVec& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const std::vector<BoolVec>& elements() const { return elems_; }
  const std::vector<BoolVec>& generators() const { return gens_; }

  // Index of a vector, or -1 if it is not an element.
  int index_of(const BoolVec& v) const;

  int zero() const { return 0; }
  int top() const { return static_cast<int>(elems_.size()) - 1; }

  int join(int i, int j) const { return join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  // Lattice meet: join of all common lower bounds.
  int meet(int i, int j) const { return meet_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  bool leq(int i, int j) const {
    return elems_[static_cast<std::size_t>(i)].is_subset_of(elems_[static_cast<std::size_t>(j)]);
  }

  // Indices of the strictly join irreducible elements, ascending.
  const std::vector<int>& sji() const { return sji_; }
  bool is_sji(int i) const { return sji_flag_[static_cast<std::size_t>(i)]; }

  // Free exactly when the 2^|sji| joins of sji subsets are all distinct.
  bool is_free() const;

  // x meet (y join z) == (x meet y) join (x meet z) for all triples.
  bool is_distributive() const;

  bool operator==(const SpanLattice& o) const {
    return width_ == o.width_ && elems_ == o.elems_;
  }

 private:
  std::size_t width_ = 0;
  std::vector<BoolVec> elems_;  // sorted canonically; [0] is zero
  std::vector<BoolVec> gens_;
  std::vector<int> sji_;
  std::vector<char> sji_flag_;
  std::vector<std::vector<int>> join_, meet_;
  std::map<BoolVec, int, BoolVecLess> index_;

  void finish();  // builds tables after elems_ is set
};

// All subsets X of the sji elements with join(X) = m, as sorted index
// lists, ordered by (size, lexicographic). m = zero gives exactly {{}}.
// Throws CapExceededError if more than max_support sji elements lie
// below m.
std::vector<std::vector<int>> all_decompositions(const SpanLattice& l, int m,
                                                 std::size_t max_support = 20);

// The decompositions of m no proper subset of which still joins to m.
std::vector<std::vector<int>> irredundant_decompositions(const SpanLattice& l, int m,
                                                         std::size_t max_support = 20);

// The dual lattice: functionals f_m with f_m(x) = 0 iff x <= m, realized
// as the indicator of {x : x is not below m} over the element index set.
// Pointwise join makes this a lattice again; anchor[i] is the index of
// f_{element i} in the dual, and the map reverses order.
struct DualLattice {
  SpanLattice lattice;
  std::vector<int> anchor;
};

DualLattice dual_lattice(const SpanLattice& l);

// --- join endomorphisms ------------------------------------------------
//
// An endomorphism is stored as its full value table over element indices.
// Composition follows the right-action convention: (f then g)[x] = g[f[x]].

using Endo = std::vector<int>;

bool is_endo(const SpanLattice& l, const Endo& f);
Endo endo_identity(const SpanLattice& l);
Endo endo_zero(const SpanLattice& l);
Endo endo_join(const SpanLattice& l, const Endo& f, const Endo& g);
Endo endo_compose(const Endo& f, const Endo& g);

// The elementary endomorphism e_{a,b}: x -> 0 if x <= a, else b.
// a = -1 stands for a = infinity (every x passes the test), so the
// result is the zero map regardless of b.
Endo elementary_endo(const SpanLattice& l, int a, int b);

// Every join endomorphism of l, enumerated by extending all assignments
// on the sji elements and keeping the valid ones. Sorted, deduplicated.
// Throws CapExceededError if |l|^|sji| exceeds max_candidates.
std::vector<Endo> all_endos(const SpanLattice& l, std::size_t max_candidates = 1 << 20);

// Join closure of a set of endomorphisms (the zero map, as the empty
// join, is always included). Throws CapExceededError past max_size.
std::vector<Endo> endo_span(const SpanLattice& l, std::vector<Endo> gens,
                            std::size_t max_size = 1 << 14);

}  // namespace boolrep

#endif  // BOOLREP_LATTICE_HPP_
