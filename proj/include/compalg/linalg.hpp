#ifndef COMPALG_LINALG_HPP
#define COMPALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "compalg/field.hpp"

namespace compalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldPtr& f, std::size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Scalar& s);
bool is_zero_vec(const Vec& a);
bool eq_vec(const Vec& a, const Vec& b);

// Dense matrix over an exact field, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, std::size_t rows, std::size_t cols);
  static Mat identity(const FieldPtr& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;  // this * v
  Mat transposed() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  // flatten row-major; used to treat operators as vectors
  Vec flattened() const { return a_; }
  static Mat from_flat(const FieldPtr& f, std::size_t rows, std::size_t cols, const Vec& flat);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// In-place reduced row echelon form with deterministic first-nonzero
// pivoting. Returns the pivot columns in order.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);
Scalar det(Mat m);
std::optional<Mat> inverse(const Mat& m);

// Canonical kernel basis (one vector per free column, ascending).
std::vector<Vec> kernel_basis(const Mat& m);

// Repeated exact solves A x = b against a fixed matrix. The factorization
// records the row operations so each solve is a matrix-vector product.
class LinearSolver {
 public:
  explicit LinearSolver(const Mat& a);
  std::size_t rank() const { return pivots_.size(); }
  // Solution with free variables set to zero; nullopt when inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

 private:
  Mat e_;                                          // row-op matrix, e_ * a = rref
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, col)
  std::size_t cols_;
};

// Incrementally maintained reduced row echelon basis of a span. add()
// returns true when the vector enlarges the span. rows() is the canonical
// RREF basis, independent of insertion order.
class RowReducer {
 public:
  RowReducer(FieldPtr f, std::size_t width) : field_(std::move(f)), width_(width) {}
  Vec reduce(Vec v) const;
  bool add(const Vec& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  // Coordinates of v in the RREF basis (valid when contains(v)): the
  // entries of v at the pivot columns.
  Vec coords_in_basis(const Vec& v) const {
    Vec c;
    c.reserve(rows_.size());
    for (std::size_t p : pivot_cols_) c.push_back(v[p]);
    return c;
  }

 private:
  FieldPtr field_;
  std::size_t width_;
  std::vector<Vec> rows_;                // sorted by pivot column
  std::vector<std::size_t> pivot_cols_;  // parallel to rows_
};

}  // namespace compalg

#endif
