// Green's relations R, L, J, H of a finite semigroup, the J-class order,
// regularity, idempotent transversals and maximal subgroups.
//
// Ideals are computed as reachability bitsets over the Cayley graphs:
//   sS^1 = {s} + row(s),  S^1s = {s} + col(s),
//   S^1 s S^1 = {s} + row(s) + col(s) + union over u of row(u*s).
// Class ids are assigned in order of least member, so they are stable
// across runs.

#ifndef BOOLREP_GREEN_HPP_
#define BOOLREP_GREEN_HPP_

#include <vector>

#include "boolrep/bitvec.hpp"
#include "boolrep/semigroup.hpp"

namespace boolrep {

struct MaximalSubgroup {
  int j_class;                 // the regular J-class this group sits in
  int idempotent;              // the transversal idempotent e
  FiniteSemigroup group;       // induced table on the H-class of e
  std::vector<int> embedding;  // local index -> element of S
};

struct GreenStructure {
  std::size_t order = 0;

  // Class id per element, for each of the four relations.
  std::vector<int> r_class, l_class, j_class, h_class;
  int n_r = 0, n_l = 0, n_j = 0, n_h = 0;

  // j_order[a][b] iff J_a <=_J J_b (containment of principal ideals).
  std::vector<std::vector<char>> j_order;

  // Per J-class: does it contain an idempotent?
  std::vector<char> regular;

  // Sorted list of all idempotents of S.
  std::vector<int> idempotents;

  // Per J-class: least idempotent in it, or -1 if none.
  std::vector<int> transversal;

  // One maximal subgroup per regular J-class, at the transversal idempotent.
  std::vector<MaximalSubgroup> subgroups;

  // Members of each J-class, ascending.
  std::vector<std::vector<int>> j_members;

  const MaximalSubgroup& subgroup_of(int j) const;
  bool j_below(int a, int b) const { return j_order[a][b] != 0; }
};

GreenStructure green_structure(const FiniteSemigroup& s);

// I(J) = elements s of S such that J is not contained in S^1 s S^1.
// This is an ideal (possibly empty); for an irreducible module with apex J
// it is exactly the annihilator.
std::vector<int> apex_ideal(const FiniteSemigroup& s, const GreenStructure& g, int j);

// The eggbox data of a regular J-class: its R-classes (columns A), its
// L-classes (rows B), and the B x A table marking H-classes that contain
// an idempotent. That table is the sandwich matrix of the J-class.
struct JClassGeometry {
  int j_class;
  std::vector<int> r_classes;    // A, in class-id order
  std::vector<int> l_classes;    // B, in class-id order
  BoolMatrix h_has_idempotent;   // |B| x |A|
};

// Throws NotRegularError on a non-regular J-class.
JClassGeometry j_class_geometry(const FiniteSemigroup& s, const GreenStructure& g, int j);

}  // namespace boolrep

#endif  // BOOLREP_GREEN_HPP_
