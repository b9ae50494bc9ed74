#include "boolrep/bitvec.hpp"

#include <algorithm>
#include <bit>

namespace boolrep {

BoolVec BoolVec::unit(std::size_t width, std::size_t i) {
  if (i >= width) {
    throw InvalidInputError("unit vector index " + std::to_string(i) +
                            " out of range for width " + std::to_string(width));
  }
  BoolVec v(width);
  v.set(i);
  return v;
}

BoolVec BoolVec::ones(std::size_t width) {
  BoolVec v(width);
  for (std::size_t i = 0; i < width; ++i) {
    v.set(i);
  }
  return v;
}

BoolVec BoolVec::from_string(const std::string& s) {
  BoolVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      v.set(i);
    } else if (s[i] != '0') {
      throw InvalidInputError("bitstring must contain only '0'/'1', got: " + s);
    }
  }
  return v;
}

BoolVec& BoolVec::operator|=(const BoolVec& o) {
  if (width_ != o.width_) {
    throw InvalidInputError("width mismatch in vector join: " + std::to_string(width_) +
                            " vs " + std::to_string(o.width_));
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    blocks_[k] |= o.blocks_[k];
  }
  return *this;
}

BoolVec BoolVec::operator&(const BoolVec& o) const {
  if (width_ != o.width_) {
    throw InvalidInputError("width mismatch in vector meet: " + std::to_string(width_) +
                            " vs " + std::to_string(o.width_));
  }
  BoolVec r(*this);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    r.blocks_[k] &= o.blocks_[k];
  }
  return r;
}

bool BoolVec::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](std::uint64_t b) { return b == 0; });
}

std::size_t BoolVec::count() const {
  std::size_t c = 0;
  for (std::uint64_t b : blocks_) {
    c += static_cast<std::size_t>(std::popcount(b));
  }
  return c;
}

bool BoolVec::is_subset_of(const BoolVec& o) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k] & ~o.blocks_[k]) {
      return false;
    }
  }
  return true;
}

bool BoolVec::intersects(const BoolVec& o) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k] & o.blocks_[k]) {
      return true;
    }
  }
  return false;
}

bool BoolVec::numeric_less(const BoolVec& o) const {
  for (std::size_t k = blocks_.size(); k-- > 0;) {
    if (blocks_[k] != o.blocks_[k]) {
      return blocks_[k] < o.blocks_[k];
    }
  }
  return false;
}

std::string BoolVec::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

bool canonical_less(const BoolVec& a, const BoolVec& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) {
    return ca < cb;
  }
  return a.numeric_less(b);
}

BoolMatrix::BoolMatrix(std::vector<BoolVec> rows) : cols_(0), rows_(std::move(rows)) {
  if (!rows_.empty()) {
    cols_ = rows_[0].width();
    for (const BoolVec& r : rows_) {
      if (r.width() != cols_) {
        throw InvalidInputError("ragged boolean matrix: row widths differ");
      }
    }
  }
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BoolMatrix BoolMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BoolVec> vv;
  vv.reserve(rows.size());
  for (const std::string& s : rows) {
    vv.push_back(BoolVec::from_string(s));
  }
  return BoolMatrix(std::move(vv));
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) {
        t.set(j, i);
      }
    }
  }
  return t;
}

std::vector<std::string> BoolMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const BoolVec& r : rows_) {
    out.push_back(r.to_string());
  }
  return out;
}

BoolVec mul(const BoolVec& v, const BoolMatrix& X) {
  if (v.width() != X.n_rows()) {
    throw InvalidInputError("dimension mismatch in vector-matrix product");
  }
  BoolVec r(X.n_cols());
  for (std::size_t i = 0; i < v.width(); ++i) {
    if (v.get(i)) {
      r |= X.row(i);
    }
  }
  return r;
}

BoolMatrix mul(const BoolMatrix& X, const BoolMatrix& Y) {
  if (X.n_cols() != Y.n_rows()) {
    throw InvalidInputError("dimension mismatch in matrix product");
  }
  BoolMatrix r(X.n_rows(), Y.n_cols());
  for (std::size_t i = 0; i < X.n_rows(); ++i) {
    r.row(i) = mul(X.row(i), Y);
  }
  return r;
}

std::vector<std::vector<int>> mul_integer(const BoolMatrix& X, const BoolMatrix& Y) {
  if (X.n_cols() != Y.n_rows()) {
    throw InvalidInputError("dimension mismatch in matrix product");
  }
  std::vector<std::vector<int>> r(X.n_rows(), std::vector<int>(Y.n_cols(), 0));
  for (std::size_t i = 0; i < X.n_rows(); ++i) {
    for (std::size_t j = 0; j < Y.n_cols(); ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < X.n_cols(); ++k) {
        acc += (X.get(i, k) && Y.get(k, j)) ? 1 : 0;
      }
      r[i][j] = acc;
    }
  }
  return r;
}

}  // namespace boolrep
