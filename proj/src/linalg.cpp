#include "compalg/linalg.hpp"

#include <algorithm>

namespace compalg {

Vec zero_vec(const FieldPtr& f, std::size_t n) { return Vec(n, f->zero()); }

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& a, const Scalar& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool eq_vec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_->zero()) {}

Mat Mat::identity(const FieldPtr& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& okj = o.at(k, j);
        if (!okj.is_zero()) r.at(i, j) += aik * okj;
      }
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  Vec r = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& aij = at(i, j);
      if (!aij.is_zero() && !v[j].is_zero()) r[i] += aij * v[j];
    }
  return r;
}

Mat Mat::transposed() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Mat::row(std::size_t r) const {
  return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Mat::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
  return v;
}

Mat Mat::from_flat(const FieldPtr& f, std::size_t rows, std::size_t cols, const Vec& flat) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m.a_[i] = flat[i];
  return m;
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    Scalar pi = m.at(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= pi;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Scalar det(Mat m) {
  const FieldPtr& f = m.field();
  if (m.rows() != m.cols()) fail(errc::internal, "det of non-square matrix");
  Scalar d = f->one();
  std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) return f->zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Scalar pi = m.at(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar fct = m.at(i, col) * pi;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= fct * m.at(col, j);
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field()->one();
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free] = m.field()->one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolver::LinearSolver(const Mat& a) : cols_(a.cols()) {
  std::size_t n = a.rows();
  Mat aug(a.field(), n, a.cols() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols() + i) = a.field()->one();
  }
  // run rref restricted to the left block, carrying the row-op block along
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && aug.at(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != row)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(piv, j), aug.at(row, j));
    Scalar pi = aug.at(row, col).inv();
    for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(row, j) *= pi;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug.at(i, col).is_zero()) continue;
      Scalar f = aug.at(i, col);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(i, j) -= f * aug.at(row, j);
    }
    pivots_.emplace_back(row, col);
    ++row;
  }
  e_ = Mat(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e_.at(i, j) = aug.at(i, a.cols() + j);
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  Vec eb = e_.apply(b);
  for (std::size_t i = pivots_.size(); i < eb.size(); ++i)
    if (!eb[i].is_zero()) return std::nullopt;
  Vec x = zero_vec(e_.field(), cols_);
  for (const auto& [row, col] : pivots_) x[col] = eb[row];
  return x;
}

Vec RowReducer::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[pivot_cols_[i]];
    if (c.is_zero()) continue;
    Scalar f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < width_; ++j)
      if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool RowReducer::add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t piv = width_;
  for (std::size_t j = 0; j < width_; ++j)
    if (!r[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv == width_) return false;
  Scalar pi = r[piv].inv();
  for (auto& x : r) x *= pi;
  // back-eliminate the new pivot column from existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = rows_[i][piv];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (std::size_t j = 0; j < width_; ++j)
      if (!r[j].is_zero()) rows_[i][j] -= f * r[j];
  }
  auto pos = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), piv);
  std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
  pivot_cols_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

}  // namespace compalg
