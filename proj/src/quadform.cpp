#include "compalg/quadform.hpp"

namespace compalg {

QuadraticForm::QuadraticForm(FieldPtr field, std::size_t dim)
    : field_(std::move(field)), dim_(dim) {}

void QuadraticForm::set_coeff(std::size_t i, std::size_t j, const Scalar& c) {
  if (i > j) fail(errc::internal, "quadratic form coefficients use i <= j");
  if (i >= dim_ || j >= dim_) fail(errc::internal, "coefficient index out of range");
  if (c.is_zero())
    coeffs_.erase({i, j});
  else
    coeffs_[{i, j}] = c;
}

Scalar QuadraticForm::coeff(std::size_t i, std::size_t j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? field_->zero() : it->second;
}

Scalar QuadraticForm::eval(const Vec& x) const {
  Scalar acc = field_->zero();
  for (const auto& [ij, c] : coeffs_) {
    const Scalar& xi = x[ij.first];
    const Scalar& xj = x[ij.second];
    if (!xi.is_zero() && !xj.is_zero()) acc += c * xi * xj;
  }
  return acc;
}

Scalar QuadraticForm::polar(const Vec& x, const Vec& y) const {
  // polar(x,y) = n(x+y) - n(x) - n(y), expanded coefficientwise
  Scalar acc = field_->zero();
  for (const auto& [ij, c] : coeffs_) {
    std::size_t i = ij.first, j = ij.second;
    Scalar t = x[i] * y[j] + x[j] * y[i];
    if (!t.is_zero()) acc += c * t;
  }
  return acc;
}

Mat QuadraticForm::polar_matrix() const {
  Mat m(field_, dim_, dim_);
  for (const auto& [ij, c] : coeffs_) {
    std::size_t i = ij.first, j = ij.second;
    if (i == j) {
      m.at(i, i) += c + c;
    } else {
      m.at(i, j) += c;
      m.at(j, i) += c;
    }
  }
  return m;
}

QuadraticForm::Classification QuadraticForm::classify() const {
  Classification out;
  out.radical = kernel_basis(polar_matrix());
  if (out.radical.empty()) {
    out.kind = Kind::nondegenerate;
  } else if (out.radical.size() == 1 && !eval(out.radical[0]).is_zero()) {
    out.kind = Kind::nonsingular_char2;
  } else {
    out.kind = Kind::singular;
  }
  return out;
}

std::uint64_t enumerate_canonical_vectors(const FieldPtr& f, std::size_t dim,
                                          std::uint64_t budget,
                                          const std::function<bool(const Vec&)>& visit,
                                          bool* completed) {
  if (completed) *completed = false;
  std::uint64_t tested = 0;
  if (dim == 0) {
    if (completed) *completed = true;
    return 0;
  }
  if (f->is_finite()) {
    // projective representatives in lexicographic order of index tuples
    std::uint64_t q = f->size();
    std::vector<std::uint64_t> idx(dim, 0);
    Vec v = zero_vec(f, dim);
    bool done = false;
    while (!done) {
      std::size_t first_nz = dim;
      for (std::size_t i = 0; i < dim; ++i)
        if (idx[i] != 0) {
          first_nz = i;
          break;
        }
      if (first_nz < dim && idx[first_nz] == 1) {
        if (tested == budget) return tested;  // budget exhausted
        ++tested;
        for (std::size_t i = 0; i < dim; ++i) v[i] = f->element_at(idx[i]);
        if (visit(v)) return tested;
      }
      std::size_t pos = dim;  // odometer, last coordinate fastest
      while (pos-- > 0) {
        if (++idx[pos] < q) break;
        idx[pos] = 0;
        if (pos == 0) done = true;
      }
    }
    if (completed) *completed = true;
    return tested;
  }
  if (f->kind() == FieldKind::rationals) {
    for (std::uint64_t h = 1;; ++h) {
      std::vector<Scalar> values;
      values.push_back(f->zero());
      for (std::uint64_t k = 1; k <= h; ++k) {
        values.push_back(f->from_int(static_cast<long long>(k)));
        values.push_back(f->from_int(-static_cast<long long>(k)));
      }
      std::vector<std::size_t> idx(dim, 0);
      Vec v = zero_vec(f, dim);
      bool done = false;
      while (!done) {
        bool at_height = false, nonzero = false;
        for (std::size_t i = 0; i < dim; ++i) {
          if (idx[i] >= 2 * (h - 1) + 1) at_height = true;  // coordinate of height h
          if (idx[i] != 0) nonzero = true;
        }
        if (at_height && nonzero) {
          if (tested == budget) return tested;
          ++tested;
          for (std::size_t i = 0; i < dim; ++i) v[i] = values[idx[i]];
          if (visit(v)) return tested;
        }
        std::size_t pos = dim;
        while (pos-- > 0) {
          if (++idx[pos] < values.size()) break;
          idx[pos] = 0;
          if (pos == 0) done = true;
        }
      }
    }
  }
  return tested;  // other infinite fields: nothing enumerable
}

QuadraticForm::IsotropicSearch QuadraticForm::find_isotropic(std::uint64_t budget) const {
  IsotropicSearch out{std::nullopt, false, 0};
  bool completed = false;
  out.tested = enumerate_canonical_vectors(
      field_, dim_, budget,
      [&](const Vec& v) {
        if (eval(v).is_zero()) {
          out.vec = v;
          return true;
        }
        return false;
      },
      &completed);
  out.conclusive = out.vec.has_value() || completed;
  return out;
}

QuadraticForm QuadraticForm::pulled_back(const Mat& p) const {
  QuadraticForm out(field_, p.cols());
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < p.cols(); ++j) cols.push_back(p.col(j));
  for (std::size_t j = 0; j < p.cols(); ++j) {
    out.set_coeff(j, j, eval(cols[j]));
    for (std::size_t i = 0; i < j; ++i) out.set_coeff(i, j, polar(cols[i], cols[j]));
  }
  return out;
}

bool QuadraticForm::operator==(const QuadraticForm& o) const {
  if (dim_ != o.dim_ || !field_->same(*o.field_)) return false;
  if (coeffs_.size() != o.coeffs_.size()) return false;
  auto it = coeffs_.begin(), jt = o.coeffs_.begin();
  for (; it != coeffs_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

}  // namespace compalg
