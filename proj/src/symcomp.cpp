#include "compalg/symcomp.hpp"

#include <array>
#include <cmath>

#include "compalg/hurwitz.hpp"

namespace compalg {

AlgebraAutomorphism make_automorphism(const AlgebraPtr& a, Mat op) {
  if (op.rows() != a->dim() || op.cols() != a->dim())
    fail(errc::not_automorphism, "operator has the wrong shape");
  if (!inverse(op)) fail(errc::not_automorphism, "operator is not invertible");
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) {
      Vec lhs = op.apply(a->mul(a->basis_vec(i), a->basis_vec(j)));
      Vec rhs = a->mul(op.col(i), op.col(j));
      if (!eq_vec(lhs, rhs)) fail(errc::not_automorphism, "operator is not multiplicative");
    }
  if (a->norm() && *a->norm() != a->norm()->pulled_back(op))
    fail(errc::not_automorphism, "operator does not preserve the norm");
  return {a, std::move(op)};
}

AlgebraPtr para(const AlgebraPtr& a) {
  if (!a->unit()) fail(errc::no_unit, "para twist needs a unital algebra");
  if (!a->norm()) fail(errc::no_norm, "para twist needs a norm");
  std::size_t d = a->dim();
  std::vector<TensorEntry> t;
  for (std::size_t i = 0; i < d; ++i) {
    Vec ci = a->conj(a->basis_vec(i));
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = a->mul(ci, a->conj(a->basis_vec(j)));
      for (std::size_t k = 0; k < d; ++k)
        if (!prod[k].is_zero()) t.push_back({i, j, k, prod[k]});
    }
  }
  auto out = Algebra::make(a->field(), a->labels(), t, std::nullopt, *a->norm());
  if (auto u = find_unit(out)) out = out->with_unit(u->coords);
  return out;
}

namespace {

void require_split_cayley(const AlgebraPtr& c) {
  if (!c->same_tensor(*split_cayley(c->field())))
    fail(errc::not_split_cayley, "expected the split Cayley table");
}

}  // namespace

AlgebraAutomorphism grading_automorphism(const AlgebraPtr& split_cayley_alg,
                                         const Scalar& omega) {
  const FieldPtr& f = split_cayley_alg->field();
  f->check_mine(omega);
  if (!(omega * omega + omega + f->one()).is_zero())
    fail(errc::no_omega, "omega must satisfy w^2+w+1 = 0");
  require_split_cayley(split_cayley_alg);
  Mat m(f, 8, 8);
  Scalar w2 = omega * omega;
  m.at(0, 0) = f->one();
  m.at(1, 1) = f->one();
  m.at(2, 2) = f->one();     // u1
  m.at(3, 3) = omega;        // u2 -> w u2
  m.at(4, 4) = w2;           // u3 -> w^2 u3
  m.at(5, 5) = f->one();     // v1
  m.at(6, 6) = w2;           // v2 -> w^{-1} v2
  m.at(7, 7) = omega;        // v3 -> w^{-2} v3
  return make_automorphism(split_cayley_alg, std::move(m));
}

AlgebraAutomorphism cyclic_automorphism(const AlgebraPtr& split_cayley_alg) {
  const FieldPtr& f = split_cayley_alg->field();
  require_split_cayley(split_cayley_alg);
  Mat m(f, 8, 8);
  m.at(0, 0) = f->one();
  m.at(1, 1) = f->one();
  m.at(3, 2) = f->one();  // u1 -> u2
  m.at(4, 3) = f->one();  // u2 -> u3
  m.at(2, 4) = f->one();  // u3 -> u1
  m.at(6, 5) = f->one();  // v1 -> v2
  m.at(7, 6) = f->one();  // v2 -> v3
  m.at(5, 7) = f->one();  // v3 -> v1
  return make_automorphism(split_cayley_alg, std::move(m));
}

AlgebraPtr petersson(const AlgebraPtr& c, const AlgebraAutomorphism& phi) {
  if (phi.algebra != c && !phi.algebra->same_tensor(*c))
    fail(errc::not_automorphism, "automorphism belongs to a different algebra");
  if (!c->unit()) fail(errc::no_unit, "Petersson twist needs a Hurwitz algebra");
  if (!c->norm()) fail(errc::no_norm, "Petersson twist needs a Hurwitz algebra");
  std::size_t d = c->dim();
  Mat phi2 = phi.op * phi.op;
  if (phi2 * phi.op != Mat::identity(c->field(), d))
    fail(errc::not_order_three, "automorphism must have phi^3 = id");
  std::vector<TensorEntry> t;
  for (std::size_t i = 0; i < d; ++i) {
    Vec a = phi.op.apply(c->conj(c->basis_vec(i)));
    for (std::size_t j = 0; j < d; ++j) {
      Vec b = phi2.apply(c->conj(c->basis_vec(j)));
      Vec prod = c->mul(a, b);
      for (std::size_t k = 0; k < d; ++k)
        if (!prod[k].is_zero()) t.push_back({i, j, k, prod[k]});
    }
  }
  auto out = Algebra::make(c->field(), c->labels(), t, std::nullopt, *c->norm());
  if (auto u = find_unit(out)) out = out->with_unit(u->coords);
  return out;
}

AlgebraPtr split_okubo(const FieldPtr& f) {
  // Multiplication table on the basis (e1,e2,u1,u2,u3,v1,v2,v3);
  // +k / -k encodes +-(k-th basis vector).
  static constexpr int table[8][8] = {
      {+2, 0, 0, 0, 0, -8, -6, -7},    // e1
      {0, +1, -5, -3, -4, 0, 0, 0},    // e2
      {-4, 0, +6, -8, 0, 0, 0, -1},    // u1
      {-5, 0, 0, +7, -6, -1, 0, 0},    // u2
      {-3, 0, -7, 0, +8, 0, -1, 0},    // u3
      {0, -7, 0, 0, -2, +3, -5, 0},    // v1
      {0, -8, -2, 0, 0, 0, +4, -3},    // v2
      {0, -6, 0, -2, 0, -4, 0, +5},    // v3
  };
  std::vector<TensorEntry> t;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      int v = table[i][j];
      if (v == 0) continue;
      std::size_t k = static_cast<std::size_t>(std::abs(v)) - 1;
      t.push_back({i, j, k, v > 0 ? f->one() : -f->one()});
    }
  QuadraticForm n(f, 8);
  n.set_coeff(0, 1, f->one());
  n.set_coeff(2, 5, f->one());
  n.set_coeff(3, 6, f->one());
  n.set_coeff(4, 7, f->one());
  return Algebra::make(f, {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"}, t, std::nullopt, n);
}

// --------------------------------------------- Okubo algebras from Mat3

namespace {

// small dense 3x3 helper over an arbitrary field
struct M3 {
  std::array<Scalar, 9> a;
  Scalar& at(int r, int c) { return a[r * 3 + c]; }
  const Scalar& at(int r, int c) const { return a[r * 3 + c]; }
};

M3 m3_zero(const FieldPtr& f) {
  M3 m;
  for (auto& x : m.a) x = f->zero();
  return m;
}

M3 m3_mul(const FieldPtr& f, const M3& x, const M3& y) {
  M3 r = m3_zero(f);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
  return r;
}

M3 m3_add(const M3& x, const M3& y) {
  M3 r = x;
  for (int i = 0; i < 9; ++i) r.a[i] += y.a[i];
  return r;
}

M3 m3_scale(const M3& x, const Scalar& s) {
  M3 r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

Scalar m3_trace(const M3& x) { return x.at(0, 0) + x.at(1, 1) + x.at(2, 2); }

// second coefficient of the characteristic polynomial: the sum of the
// principal 2x2 minors; equals -tr(x^2)/2 whenever 2 is invertible
Scalar m3_s2(const M3& x) {
  Scalar s = x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
  s += x.at(0, 0) * x.at(2, 2) - x.at(0, 2) * x.at(2, 0);
  s += x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1);
  return s;
}

// x*y = w xy - w^2 yx - (w-w^2)/3 tr(xy) 1
M3 okubo_product(const FieldPtr& f, const M3& x, const M3& y, const Scalar& w) {
  Scalar w2 = w * w;
  Scalar c = (w - w2) / f->from_int(3);
  M3 xy = m3_mul(f, x, y), yx = m3_mul(f, y, x);
  M3 r = m3_add(m3_scale(xy, w), m3_scale(yx, -w2));
  Scalar tr = m3_trace(xy) * c;
  for (int i = 0; i < 3; ++i) r.at(i, i) -= tr;
  return r;
}

// trace-zero basis: h1 = E11-E22, h2 = E22-E33, then off-diagonal E_pq
const int kOffDiag[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

std::vector<M3> sl3_basis(const FieldPtr& f) {
  std::vector<M3> b;
  M3 h1 = m3_zero(f);
  h1.at(0, 0) = f->one();
  h1.at(1, 1) = -f->one();
  b.push_back(h1);
  M3 h2 = m3_zero(f);
  h2.at(1, 1) = f->one();
  h2.at(2, 2) = -f->one();
  b.push_back(h2);
  for (const auto& pq : kOffDiag) {
    M3 e = m3_zero(f);
    e.at(pq[0], pq[1]) = f->one();
    b.push_back(e);
  }
  return b;
}

Vec sl3_coords(const M3& x) {
  // a h1 + b h2 = diag(a, b-a, -b)
  Vec v;
  v.push_back(x.at(0, 0));
  v.push_back(-x.at(2, 2));
  for (const auto& pq : kOffDiag) v.push_back(x.at(pq[0], pq[1]));
  return v;
}

QuadraticForm s2_form(const FieldPtr& f, const std::vector<M3>& basis) {
  QuadraticForm n(f, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    n.set_coeff(i, i, m3_s2(basis[i]));
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Scalar pol = m3_s2(m3_add(basis[i], basis[j])) - m3_s2(basis[i]) - m3_s2(basis[j]);
      n.set_coeff(i, j, pol);
    }
  }
  return n;
}

}  // namespace

AlgebraPtr okubo_sl3(const FieldPtr& f, const Scalar& omega) {
  if (f->characteristic() == 3)
    fail(errc::char_three, "the matrix construction needs characteristic != 3");
  f->check_mine(omega);
  if (!(omega * omega + omega + f->one()).is_zero())
    fail(errc::no_omega, "omega must satisfy w^2+w+1 = 0");
  auto basis = sl3_basis(f);
  std::vector<TensorEntry> t;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      M3 prod = okubo_product(f, basis[i], basis[j], omega);
      if (!m3_trace(prod).is_zero()) fail(errc::internal, "product left the trace-zero space");
      Vec coords = sl3_coords(prod);
      for (std::size_t k = 0; k < 8; ++k)
        if (!coords[k].is_zero()) t.push_back({i, j, k, coords[k]});
    }
  return Algebra::make(f, {"h1", "h2", "e12", "e13", "e21", "e23", "e31", "e32"}, t,
                       std::nullopt, s2_form(f, basis));
}

AlgebraPtr okubo_second_kind(const FieldPtr& f) {
  if (f->characteristic() == 3)
    fail(errc::char_three, "the matrix construction needs characteristic != 3");
  if (f->omega_root()) fail(errc::omega_present, "field already contains omega; use okubo_sl3");
  FieldPtr k = Field::quadratic_ext(f, f->one(), f->one(), "w");
  Scalar w = k->generator();

  // K-scalars are F-pairs (a, b) for a + b w; the Galois conjugation
  // w -> w^2 = -1-w sends (a, b) to (a-b, -b).
  auto f_parts = [&](const Scalar& x) { return k->coords(x); };

  // S = {x in Mat3(K) : tr x = 0, J(x) = -x}, J = Galois conjugate transpose.
  // Unknowns: 18 F-coordinates (re, im per entry, row-major).
  Mat sys(f, 20, 18);
  // trace = 0 : two F-rows
  for (int p = 0; p < 3; ++p) {
    sys.at(0, 2 * (p * 3 + p)) = f->one();
    sys.at(1, 2 * (p * 3 + p) + 1) = f->one();
  }
  // J(x) + x = 0 : galois(x_qp) + x_pq = 0, i.e. re(x_qp) - im(x_qp) + re(x_pq) = 0
  // and -im(x_qp) + im(x_pq) = 0
  {
    std::size_t row = 2;
    // only p <= q needed: given im(x_pq) = im(x_qp), the (q,p) equations
    // repeat the (p,q) ones
    for (int p = 0; p < 3; ++p)
      for (int q = p; q < 3; ++q) {
        std::size_t pq = static_cast<std::size_t>(p * 3 + q), qp = static_cast<std::size_t>(q * 3 + p);
        sys.at(row, 2 * qp) += f->one();
        sys.at(row, 2 * qp + 1) -= f->one();
        sys.at(row, 2 * pq) += f->one();
        ++row;
        sys.at(row, 2 * qp + 1) -= f->one();
        sys.at(row, 2 * pq + 1) += f->one();
        ++row;
      }
  }
  std::vector<Vec> kernel = kernel_basis(sys);
  if (kernel.size() != 8) fail(errc::internal, "second-kind space does not have dimension 8");

  auto to_matrix = [&](const Vec& coords) {
    M3 m = m3_zero(k);
    for (int e = 0; e < 9; ++e)
      m.a[e] = Scalar(k, Scalar::ExtRep{{coords[2 * e], coords[2 * e + 1]}});
    return m;
  };
  std::vector<M3> basis;
  for (const auto& v : kernel) basis.push_back(to_matrix(v));

  // coordinates of products: solve against the 18x8 F-matrix of the basis
  Mat bmat(f, 18, 8);
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t r = 0; r < 18; ++r) bmat.at(r, j) = kernel[j][r];
  LinearSolver solver(bmat);

  std::vector<TensorEntry> t;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      M3 prod = okubo_product(k, basis[i], basis[j], w);
      Vec flat = zero_vec(f, 18);
      for (int e = 0; e < 9; ++e) {
        auto parts = f_parts(prod.a[e]);
        flat[2 * e] = parts[0];
        flat[2 * e + 1] = parts[1];
      }
      auto coords = solver.solve(flat);
      if (!coords) fail(errc::internal, "product left the second-kind subspace");
      for (std::size_t kk = 0; kk < 8; ++kk)
        if (!(*coords)[kk].is_zero()) t.push_back({i, j, kk, (*coords)[kk]});
    }

  QuadraticForm n(f, 8);
  auto s2_in_f = [&](const M3& x) {
    Scalar v = m3_s2(x), out = f->zero();
    if (!k->in_base(v, &out)) fail(errc::internal, "norm value escaped the base field");
    return out;
  };
  for (std::size_t i = 0; i < 8; ++i) {
    n.set_coeff(i, i, s2_in_f(basis[i]));
    for (std::size_t j = i + 1; j < 8; ++j) {
      Scalar pol = s2_in_f(m3_add(basis[i], basis[j])) - s2_in_f(basis[i]) - s2_in_f(basis[j]);
      n.set_coeff(i, j, pol);
    }
  }
  return Algebra::make(f, {"s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8"}, t, std::nullopt, n);
}

// ------------------------------------------------- characteristic three

AlgebraPtr okubo_char3(const FieldPtr& f, const Scalar& alpha, const Scalar& beta) {
  if (f->characteristic() != 3) fail(errc::not_char_three, "construction needs characteristic 3");
  f->check_mine(alpha);
  f->check_mine(beta);
  if (alpha.is_zero() || beta.is_zero())
    fail(errc::zero_parameter, "alpha and beta must be nonzero");

  // extension carrying the cube roots
  FieldPtr e = f;
  Scalar a_root, b_root;
  if (auto r = f->cube_root(alpha)) {
    a_root = *r;
  } else {
    e = Field::cubic_radical_ext(f, alpha, "c");
    a_root = e->generator();
  }
  Scalar beta_lifted = e == f ? beta : e->embed(beta);
  if (auto r = e->cube_root(beta_lifted)) {
    b_root = *r;
  } else if (e == f) {
    e = Field::cubic_radical_ext(f, beta, "c");
    a_root = e->embed(a_root);
    b_root = e->generator();
  } else {
    fail(errc::unsupported_field, "no cube root of beta in the alpha extension");
  }

  AlgebraPtr s = split_okubo(e);
  std::size_t m = e->same(*f) ? 1 : e->degree_over_base();
  std::size_t width = 8 * m;
  auto flatten = [&](const Vec& v) {
    Vec out;
    out.reserve(width);
    for (const auto& x : v) {
      if (m == 1) {
        out.push_back(x);
      } else {
        for (const auto& c : e->coords(x)) out.push_back(c);
      }
    }
    return out;
  };
  auto unflatten = [&](const Vec& v) {
    Vec out;
    for (std::size_t i = 0; i < 8; ++i) {
      if (m == 1) {
        out.push_back(v[i]);
      } else {
        std::vector<Scalar> c(v.begin() + static_cast<long>(i * m),
                              v.begin() + static_cast<long>((i + 1) * m));
        out.push_back(Scalar(e, Scalar::ExtRep{std::move(c)}));
      }
    }
    return out;
  };

  // F-span closure of {alpha^{1/3} e1, beta^{1/3} u1} under the product
  Vec g1 = zero_vec(e, 8), g2 = zero_vec(e, 8);
  g1[0] = a_root;
  g2[2] = b_root;
  RowReducer reducer(f, width);
  std::vector<Vec> pool;
  for (const Vec& g : {g1, g2})
    if (reducer.add(flatten(g))) pool.push_back(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = pool.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        Vec prod = s->mul(pool[i], pool[j]);
        if (reducer.add(flatten(prod))) {
          pool.push_back(prod);
          grew = true;
        }
      }
  }
  if (reducer.rank() != 8)
    fail(errc::closure_not_eight_dimensional,
         "span closure has rank " + std::to_string(reducer.rank()));

  std::vector<Vec> basis;
  for (const auto& row : reducer.rows()) basis.push_back(unflatten(row));

  Mat bmat(f, width, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    Vec flat = flatten(basis[j]);
    for (std::size_t r = 0; r < width; ++r) bmat.at(r, j) = flat[r];
  }
  LinearSolver solver(bmat);

  std::vector<TensorEntry> t;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Vec prod = s->mul(basis[i], basis[j]);
      auto coords = solver.solve(flatten(prod));
      if (!coords) fail(errc::internal, "closure is not multiplicatively closed");
      for (std::size_t k = 0; k < 8; ++k)
        if (!(*coords)[k].is_zero()) t.push_back({i, j, k, (*coords)[k]});
    }

  auto in_f = [&](const Scalar& x) {
    if (m == 1) return x;
    Scalar out = f->zero();
    if (!e->in_base(x, &out)) fail(errc::internal, "norm value escaped the ground field");
    return out;
  };
  QuadraticForm n(f, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    n.set_coeff(i, i, in_f(s->norm_of(basis[i])));
    for (std::size_t j = i + 1; j < 8; ++j)
      n.set_coeff(i, j, in_f(s->polar_of(basis[i], basis[j])));
  }
  return Algebra::make(f, {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"}, t, std::nullopt, n);
}

AlgebraPtr char3_twodim(const FieldPtr& f, const Scalar& lambda, bool require_non_cube) {
  if (f->characteristic() != 3) fail(errc::not_char_three, "construction needs characteristic 3");
  f->check_mine(lambda);
  if (lambda.is_zero()) fail(errc::zero_lambda, "lambda must be nonzero");
  if (require_non_cube && f->is_cube(lambda))
    fail(errc::cube_scalar, "lambda must not be a cube");
  Scalar one = f->one();
  std::vector<TensorEntry> t = {{0, 0, 1, one},     // u*u = v
                                {0, 1, 0, one},     // u*v = u
                                {1, 0, 0, one},     // v*u = u
                                {1, 1, 0, lambda},  // v*v = lambda u - v
                                {1, 1, 1, -one}};
  auto bare = Algebra::make(f, {"u", "v"}, t, std::nullopt, std::nullopt);

  // derive the norm from (x*y)*x = n(x)y and its linearization on the basis
  auto multiple_of = [&](const Vec& w, std::size_t idx) {
    for (std::size_t k = 0; k < 2; ++k)
      if (k != idx && !w[k].is_zero())
        fail(errc::internal, "norm derivation: identity value is not a basis multiple");
    return w[idx];
  };
  Vec u = bare->basis_vec(0), v = bare->basis_vec(1);
  Scalar nu = multiple_of(bare->mul(bare->mul(u, u), u), 0);
  Scalar nv = multiple_of(bare->mul(bare->mul(v, v), v), 1);
  // (u*u)*v + (v*u)*u = n(u,v) u
  Scalar pol = multiple_of(add(bare->mul(bare->mul(u, u), v), bare->mul(bare->mul(v, u), u)), 0);
  QuadraticForm n(f, 2);
  n.set_coeff(0, 0, nu);
  n.set_coeff(1, 1, nv);
  n.set_coeff(0, 1, pol);
  return bare->with_norm(n);
}

RecoveredAlgebra recover_associative(const AlgebraPtr& s, const Scalar& omega,
                                     std::uint64_t seed, unsigned samples) {
  const FieldPtr& f = s->field();
  if (f->characteristic() == 3) fail(errc::char_three, "recovery needs characteristic != 3");
  f->check_mine(omega);
  if (!(omega * omega + omega + f->one()).is_zero())
    fail(errc::no_omega, "omega must satisfy w^2+w+1 = 0");
  if (!verify_symmetric(*s).pass())
    fail(errc::not_symmetric_composition, "input is not a symmetric composition algebra");

  std::size_t d = s->dim();
  Scalar w2 = omega * omega;
  Scalar denom = w2 - omega;
  Scalar k1 = omega / denom, k2 = w2 / denom;
  Scalar third = f->from_int(3).inv();

  std::vector<TensorEntry> t;
  Scalar one = f->one();
  t.push_back({0, 0, 0, one});
  for (std::size_t i = 0; i < d; ++i) {
    t.push_back({0, i + 1, i + 1, one});
    t.push_back({i + 1, 0, i + 1, one});
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec part = add(scaled(s->mul(s->basis_vec(i), s->basis_vec(j)), k1),
                     scaled(s->mul(s->basis_vec(j), s->basis_vec(i)), k2));
      for (std::size_t k = 0; k < d; ++k)
        if (!part[k].is_zero()) t.push_back({i + 1, j + 1, k + 1, part[k]});
      // scalar part -(1/3) n(x,y): with n(x) = -tr(x^2)/2 this is
      // +(1/3) tr(xy), the value the expansion of w x*y + w^2 y*x forces
      Scalar c0 = -(third * s->polar_of(s->basis_vec(i), s->basis_vec(j)));
      if (!c0.is_zero()) t.push_back({i + 1, j + 1, 0, c0});
    }
  std::vector<std::string> labels = {"1"};
  for (const auto& l : s->labels()) labels.push_back(l);
  Vec unit = zero_vec(f, d + 1);
  unit[0] = one;
  auto a = Algebra::make(f, labels, t, unit, std::nullopt);

  RecoveredAlgebra out;
  out.algebra = a;
  out.associative = verify_law(*a, Law::associative).result.pass;
  out.alternative = verify_law(*a, Law::left_alternative).result.pass &&
                    verify_law(*a, Law::right_alternative).result.pass;
  out.cayley_hamilton_sampled = true;
  Rng rng(seed);
  for (unsigned it = 0; it < samples; ++it) {
    Vec sv = zero_vec(f, d + 1);
    for (std::size_t i = 0; i < d; ++i) sv[i + 1] = f->random(rng);
    Vec ssv = zero_vec(f, d);
    for (std::size_t i = 0; i < d; ++i) ssv[i] = sv[i + 1];
    Vec cube = a->mul(a->mul(sv, sv), sv);
    Vec rest = add(cube, scaled(sv, s->norm_of(ssv)));
    for (std::size_t i = 1; i < d + 1; ++i)
      if (!rest[i].is_zero()) out.cayley_hamilton_sampled = false;
  }
  return out;
}

}  // namespace compalg
