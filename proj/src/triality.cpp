#include "compalg/triality.hpp"

namespace compalg {

Vec TrialityTriple::flattened() const {
  Vec out = d0.flattened();
  Vec f1 = d1.flattened(), f2 = d2.flattened();
  out.insert(out.end(), f1.begin(), f1.end());
  out.insert(out.end(), f2.begin(), f2.end());
  return out;
}

TrialityTriple TrialityTriple::from_flat(const FieldPtr& f, std::size_t d, const Vec& flat) {
  std::size_t dd = d * d;
  TrialityTriple t;
  t.d0 = Mat::from_flat(f, d, d, Vec(flat.begin(), flat.begin() + dd));
  t.d1 = Mat::from_flat(f, d, d, Vec(flat.begin() + dd, flat.begin() + 2 * dd));
  t.d2 = Mat::from_flat(f, d, d, Vec(flat.begin() + 2 * dd, flat.begin() + 3 * dd));
  return t;
}

Mat sigma_op(const AlgebraPtr& s, const Vec& x, const Vec& y) {
  std::size_t d = s->dim();
  Mat m(s->field(), d, d);
  for (std::size_t col = 0; col < d; ++col) {
    Scalar cx = s->polar_of(x, s->basis_vec(col));
    Scalar cy = s->polar_of(y, s->basis_vec(col));
    for (std::size_t row = 0; row < d; ++row) m.at(row, col) = cx * y[row] - cy * x[row];
  }
  return m;
}

bool is_polar_skew(const AlgebraPtr& s, const Mat& d) {
  Mat p = s->norm()->polar_matrix();
  return (d.transposed() * p + p * d).is_zero();
}

bool is_related_derivation(const AlgebraPtr& s, const TrialityTriple& t) {
  if (!is_polar_skew(s, t.d0) || !is_polar_skew(s, t.d1) || !is_polar_skew(s, t.d2))
    return false;
  std::size_t d = s->dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = t.d0.apply(s->mul(s->basis_vec(i), s->basis_vec(j)));
      Vec rhs = add(s->mul(t.d1.col(i), s->basis_vec(j)), s->mul(s->basis_vec(i), t.d2.col(j)));
      if (!eq_vec(lhs, rhs)) return false;
    }
  return true;
}

namespace {

void require_dim8_odd_char(const AlgebraPtr& s) {
  if (s->field()->characteristic() == 2)
    fail(errc::char_two, "triality needs characteristic != 2");
  if (s->dim() != 8) fail(errc::wrong_dimension, "triality needs dimension 8");
  if (!s->norm()) fail(errc::no_norm, "triality needs a norm");
}

}  // namespace

std::vector<Mat> so_basis(const AlgebraPtr& s) {
  require_dim8_odd_char(s);
  std::size_t d = s->dim();
  RowReducer red(s->field(), d * d);
  std::vector<Mat> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Mat sig = sigma_op(s, s->basis_vec(i), s->basis_vec(j));
      red.add(sig.flattened());
    }
  for (const auto& row : red.rows()) basis.push_back(Mat::from_flat(s->field(), d, d, row));
  return basis;
}

TrialityTriple t_triple(const AlgebraPtr& s, const Vec& x, const Vec& y) {
  if (s->field()->characteristic() == 2)
    fail(errc::char_two, "t_{x,y} needs characteristic != 2");
  if (!s->norm()) fail(errc::no_norm, "t_{x,y} needs a norm");
  std::size_t d = s->dim();
  const FieldPtr& f = s->field();
  Scalar half_n = s->polar_of(x, y) / f->from_int(2);
  Mat half(f, d, d);
  for (std::size_t i = 0; i < d; ++i) half.at(i, i) = half_n;
  TrialityTriple t;
  t.d0 = sigma_op(s, x, y);
  t.d1 = half - s->right_mult(x) * s->left_mult(y);
  t.d2 = half - s->left_mult(x) * s->right_mult(y);
  if (!is_related_derivation(s, t))
    fail(errc::not_symmetric_composition,
         "t_{x,y} failed the triality relation; input is not symmetric composition");
  return t;
}

std::vector<TrialityTriple> tri_basis(const AlgebraPtr& s) {
  require_dim8_odd_char(s);
  std::size_t d = s->dim();
  RowReducer red(s->field(), 3 * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      red.add(t_triple(s, s->basis_vec(i), s->basis_vec(j)).flattened());
  if (red.rank() != 28)
    fail(errc::internal, "span of the t_{e_i,e_j} has rank " + std::to_string(red.rank()));
  std::vector<TrialityTriple> basis;
  for (const auto& row : red.rows())
    basis.push_back(TrialityTriple::from_flat(s->field(), d, row));
  // closure under the componentwise bracket
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      TrialityTriple br;
      br.d0 = basis[a].d0 * basis[b].d0 - basis[b].d0 * basis[a].d0;
      br.d1 = basis[a].d1 * basis[b].d1 - basis[b].d1 * basis[a].d1;
      br.d2 = basis[a].d2 * basis[b].d2 - basis[b].d2 * basis[a].d2;
      if (!red.contains(br.flattened()))
        fail(errc::internal, "tri(S) span is not closed under the bracket");
    }
  return basis;
}

std::vector<TrialityTriple> tri_basis_constraints(const AlgebraPtr& s) {
  if (s->field()->characteristic() == 2)
    fail(errc::char_two, "triality needs characteristic != 2");
  if (!s->norm()) fail(errc::no_norm, "triality needs a norm");
  std::size_t d = s->dim(), dd = d * d;
  const FieldPtr& f = s->field();
  Mat p = s->norm()->polar_matrix();
  // unknown layout: [d0 | d1 | d2], each row-major d x d
  std::size_t skew_rows = 3 * (d * (d + 1) / 2);
  Mat sys(f, d * d * d + skew_rows, 3 * dd);
  std::size_t r = 0;
  // relation rows: d0(e_i e_j)_k - (d1 e_i * e_j)_k - (e_i * d2 e_j)_k = 0
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = s->mul(s->basis_vec(i), s->basis_vec(j));
      for (std::size_t k = 0; k < d; ++k, ++r) {
        for (std::size_t m = 0; m < d; ++m)
          if (!prod[m].is_zero()) sys.at(r, k * d + m) += prod[m];
        for (std::size_t m = 0; m < d; ++m) {
          for (const auto& [kk, c] : s->entry(m, j))
            if (kk == k) sys.at(r, dd + m * d + i) -= c;
          for (const auto& [kk, c] : s->entry(i, m))
            if (kk == k) sys.at(r, 2 * dd + m * d + j) -= c;
        }
      }
    }
  // skewness rows per operator: sum_m D[m][i] P[m][j] + D[m][j] P[i][m] = 0
  for (unsigned op = 0; op < 3; ++op)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j, ++r)
        for (std::size_t m = 0; m < d; ++m) {
          sys.at(r, op * dd + m * d + i) += p.at(m, j);
          sys.at(r, op * dd + m * d + j) += p.at(i, m);
        }
  std::vector<Vec> kernel = kernel_basis(sys);
  RowReducer red(f, 3 * dd);
  for (const auto& v : kernel) red.add(v);
  std::vector<TrialityTriple> basis;
  for (const auto& row : red.rows()) basis.push_back(TrialityTriple::from_flat(f, d, row));
  return basis;
}

TrialityTriple pi0_inverse(const AlgebraPtr& s, const Mat& d0) {
  require_dim8_odd_char(s);
  if (!is_polar_skew(s, d0)) fail(errc::not_skew, "d0 is not skew for the polar form");
  std::size_t d = s->dim(), dd = d * d;
  const FieldPtr& f = s->field();
  Mat p = s->norm()->polar_matrix();
  // unknowns [d1 | d2]; rows: relation (rhs = d0(e_i e_j)) then skewness
  std::size_t skew_rows = 2 * (d * (d + 1) / 2);
  Mat sys(f, d * d * d + skew_rows, 2 * dd);
  Vec rhs = zero_vec(f, d * d * d + skew_rows);
  std::size_t r = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = d0.apply(s->mul(s->basis_vec(i), s->basis_vec(j)));
      for (std::size_t k = 0; k < d; ++k, ++r) {
        rhs[r] = lhs[k];
        for (std::size_t m = 0; m < d; ++m) {
          for (const auto& [kk, c] : s->entry(m, j))
            if (kk == k) sys.at(r, m * d + i) += c;
          for (const auto& [kk, c] : s->entry(i, m))
            if (kk == k) sys.at(r, dd + m * d + j) += c;
        }
      }
    }
  for (unsigned op = 0; op < 2; ++op)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j, ++r)
        for (std::size_t m = 0; m < d; ++m) {
          sys.at(r, op * dd + m * d + i) += p.at(m, j);
          sys.at(r, op * dd + m * d + j) += p.at(i, m);
        }
  LinearSolver solver(sys);
  if (solver.rank() != 2 * dd)
    fail(errc::no_solution, "pi0 preimage is not unique; input is not in so(S,n)");
  auto sol = solver.solve(rhs);
  if (!sol) fail(errc::no_solution, "no triality completion exists for this operator");
  TrialityTriple t;
  t.d0 = d0;
  t.d1 = Mat::from_flat(f, d, d, Vec(sol->begin(), sol->begin() + dd));
  t.d2 = Mat::from_flat(f, d, d, Vec(sol->begin() + dd, sol->end()));
  if (!is_related_derivation(s, t)) fail(errc::internal, "pi0 inverse failed verification");
  return t;
}

TrialityTriple theta(const AlgebraPtr& s, const TrialityTriple& t) {
  TrialityTriple out{t.d2, t.d0, t.d1};
  if (!is_related_derivation(s, out))
    fail(errc::internal, "theta image failed the triality relation");
  return out;
}

bool check_related_isometry_triple(const AlgebraPtr& s, const Mat& f0, const Mat& f1,
                                   const Mat& f2) {
  if (!s->norm()) fail(errc::no_norm, "related triples need a norm");
  for (const Mat* m : {&f0, &f1, &f2}) {
    if (!inverse(*m)) fail(errc::not_isometry, "operator is not invertible");
    if (*s->norm() != s->norm()->pulled_back(*m))
      fail(errc::not_isometry, "operator does not preserve the norm");
  }
  std::size_t d = s->dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = f0.apply(s->mul(s->basis_vec(i), s->basis_vec(j)));
      Vec rhs = s->mul(f1.col(i), f2.col(j));
      if (!eq_vec(lhs, rhs)) return false;
    }
  return true;
}

std::size_t theta_fixed_dimension(const AlgebraPtr& s,
                                  const std::vector<TrialityTriple>& basis) {
  std::size_t m = basis.size(), d = s->dim();
  const FieldPtr& f = s->field();
  Mat bmat(f, 3 * d * d, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec flat = basis[j].flattened();
    for (std::size_t r = 0; r < flat.size(); ++r) bmat.at(r, j) = flat[r];
  }
  LinearSolver solver(bmat);
  Mat tm(f, m, m);  // matrix of theta on the chosen basis
  for (std::size_t a = 0; a < m; ++a) {
    auto coords = solver.solve(theta(s, basis[a]).flattened());
    if (!coords) fail(errc::internal, "theta left the tri span");
    for (std::size_t b = 0; b < m; ++b) tm.at(b, a) = (*coords)[b];
  }
  Mat shifted = tm - Mat::identity(f, m);
  return m - rank(shifted);
}

}  // namespace compalg
