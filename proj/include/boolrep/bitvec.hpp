// Dynamic-width boolean vectors and matrices over the semiring {0, 1}
// with "or" as addition and "and" as multiplication.
//
// Conventions pinned here and relied on everywhere else:
//  * bit i of a BoolVec is coordinate i; to_string() prints coordinate 0
//    first, so (1,0,0) prints as "100";
//  * the canonical element order is (popcount, numeric value with bit 0
//    least significant), which puts the zero vector first and the all-ones
//    vector last;
//  * matrices act on row vectors from the right: (v * X)_j = OR_i v_i X_ij.

#ifndef BOOLREP_BITVEC_HPP_
#define BOOLREP_BITVEC_HPP_

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "boolrep/error.hpp"

namespace boolrep {

class BoolVec {
 public:
  BoolVec() : width_(0) {}
  explicit BoolVec(std::size_t width)
      : width_(width), blocks_((width + 63) / 64, 0) {}

  static BoolVec unit(std::size_t width, std::size_t i);
  static BoolVec ones(std::size_t width);
  static BoolVec from_string(const std::string& s);

  std::size_t width() const { return width_; }

  bool get(std::size_t i) const {
    return (blocks_[i / 64] >> (i % 64)) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    if (v) {
      blocks_[i / 64] |= std::uint64_t(1) << (i % 64);
    } else {
      blocks_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    }
  }

  BoolVec& operator|=(const BoolVec& o);
  BoolVec operator|(const BoolVec& o) const {
    BoolVec r(*this);
    r |= o;
    return r;
  }
  BoolVec operator&(const BoolVec& o) const;

  bool is_zero() const;
  std::size_t count() const;
  bool is_subset_of(const BoolVec& o) const;
  bool intersects(const BoolVec& o) const;

  bool operator==(const BoolVec& o) const {
    return width_ == o.width_ && blocks_ == o.blocks_;
  }
  bool operator!=(const BoolVec& o) const { return !(*this == o); }

  // Numeric order, bit 0 least significant. Total order on fixed width.
  bool numeric_less(const BoolVec& o) const;

  std::string to_string() const;

 private:
  std::size_t width_;
  std::vector<std::uint64_t> blocks_;
};

// Canonical order: by popcount, ties broken numerically.
bool canonical_less(const BoolVec& a, const BoolVec& b);

// Strict-weak-order functor for ordered containers keyed by BoolVec.
struct BoolVecLess {
  bool operator()(const BoolVec& a, const BoolVec& b) const {
    return a.numeric_less(b);
  }
};

class BoolMatrix {
 public:
  BoolMatrix() : cols_(0) {}
  BoolMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BoolVec(cols)) {}
  explicit BoolMatrix(std::vector<BoolVec> rows);

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return cols_; }

  const BoolVec& row(std::size_t i) const { return rows_[i]; }
  BoolVec& row(std::size_t i) { return rows_[i]; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }

  const std::vector<BoolVec>& rows() const { return rows_; }

  bool operator==(const BoolMatrix& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }
  bool operator!=(const BoolMatrix& o) const { return !(*this == o); }

  BoolMatrix transpose() const;
  std::vector<std::string> to_strings() const;

 private:
  std::size_t cols_;
  std::vector<BoolVec> rows_;
};

// v * X over the boolean semiring; requires v.width() == X.n_rows().
BoolVec mul(const BoolVec& v, const BoolMatrix& X);

// X * Y over the boolean semiring; requires X.n_cols() == Y.n_rows().
BoolMatrix mul(const BoolMatrix& X, const BoolMatrix& Y);

// X * Y over the integers; used to detect ambiguity (entries >= 2).
std::vector<std::vector<int>> mul_integer(const BoolMatrix& X, const BoolMatrix& Y);

}  // namespace boolrep

#endif  // BOOLREP_BITVEC_HPP_
