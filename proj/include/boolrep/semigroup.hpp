// Finite semigroups given by explicit multiplication tables.
//
// Elements are the indices 0..order-1. A semigroup built from
// transformations keeps the maps themselves as labels; element order is
// then BFS from the generators in the given order, so runs are
// reproducible.

#ifndef BOOLREP_SEMIGROUP_HPP_
#define BOOLREP_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolrep/error.hpp"

namespace boolrep {

class FiniteSemigroup {
 public:
  // Validates entry ranges and full associativity (witness on failure).
  static FiniteSemigroup from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels = {});

  // Closure of the given transformations of {0..degree-1} under
  // composition, acting on the right: (x*y)[p] = y[x[p]].
  static FiniteSemigroup from_transformations(
      std::size_t degree, const std::vector<std::vector<int>>& generators);

  std::size_t order() const { return n_; }

  int product(int s, int t) const { return table_[static_cast<std::size_t>(s) * n_ + t]; }

  bool is_idempotent(int s) const { return product(s, s) == s; }

  // Two-sided zero element, if any.
  std::optional<int> zero_element() const;
  // Two-sided identity, if any.
  std::optional<int> identity_element() const;

  // Same elements, reversed multiplication.
  FiniteSemigroup opposite() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int s) const;

  bool operator==(const FiniteSemigroup& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  FiniteSemigroup(std::size_t n, std::vector<int> flat, std::vector<std::string> labels)
      : n_(n), table_(std::move(flat)), labels_(std::move(labels)) {}

  std::size_t n_;
  std::vector<int> table_;  // row-major n x n
  std::vector<std::string> labels_;
};

}  // namespace boolrep

#endif  // BOOLREP_SEMIGROUP_HPP_
