#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hexinv/gf.hpp"

namespace hexinv {

/// Dense matrix over a single finite field.  Entries are element labels of
/// the owning field; mixing fields across a binary operation is an error.
class Mat {
 public:
  /// Empty placeholder with no field; valid only as an assignment target.
  Mat() : rows_(0), cols_(0) {}

  Mat(GfPtr field, std::size_t rows, std::size_t cols)
      : f_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  /// Entries row-major, embedded through from_int (so negative ints work).
  static Mat from_ints(GfPtr field, std::size_t rows, std::size_t cols,
                       const std::vector<long long>& entries);

  static Mat identity(GfPtr field, std::size_t n);

  const GfPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  fe at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, fe v) { a_[r * cols_ + c] = v; }

  const fe* row(std::size_t r) const { return a_.data() + r * cols_; }
  fe* row(std::size_t r) { return a_.data() + r * cols_; }

  Mat mul(const Mat& other) const;
  std::vector<fe> apply(const std::vector<fe>& v) const;  // this * v
  Mat transpose() const;

  bool operator==(const Mat& o) const {
    if (!f_ || !o.f_) return !f_ && !o.f_;
    return f_->same(*o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  GfPtr f_;
  std::size_t rows_, cols_;
  std::vector<fe> a_;
};

/// Reduced row echelon form: every pivot is 1 and is the only nonzero entry
/// in its column; pivot columns are strictly increasing.
struct Rref {
  Mat m;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Basis of the right kernel {x : m x = 0}, one vector per row, ordered by
/// free column.  Canonical given the matrix.
Mat nullspace(const Mat& m);

/// Canonical (reduced-echelon) basis of the row space: rref without the
/// zero rows.
Mat row_space(const Mat& m);

/// One solution of m x = rhs, or nullopt if inconsistent.
std::optional<std::vector<fe>> solve(const Mat& m, const std::vector<fe>& rhs);

namespace detail {

// The two elimination kernels.  rref() dispatches on the characteristic;
// both must agree observationally, which the tests check directly.
Rref rref_generic(const Mat& m);
Rref rref_bitsliced(const Mat& m);  // characteristic 2 only

}  // namespace detail

}  // namespace hexinv
