#include "compalg/hurwitz.hpp"

#include <algorithm>
#include <cmath>

namespace compalg {

AlgebraPtr ground(const FieldPtr& f) {
  QuadraticForm n(f, 1);
  n.set_coeff(0, 0, f->one());
  std::vector<TensorEntry> t = {{0, 0, 0, f->one()}};
  return Algebra::make(f, {"1"}, t, Vec{f->one()}, n);
}

AlgebraPtr quadratic_etale(const FieldPtr& f, const Scalar& mu) {
  f->check_mine(mu);
  if ((f->from_int(4) * mu + f->one()).is_zero())
    fail(errc::degenerate_parameter, "4*mu + 1 must be nonzero");
  std::vector<TensorEntry> t = {{0, 0, 0, f->one()},
                                {0, 1, 1, f->one()},
                                {1, 0, 1, f->one()},
                                {1, 1, 1, f->one()},
                                {1, 1, 0, mu}};
  QuadraticForm n(f, 2);
  n.set_coeff(0, 0, f->one());
  n.set_coeff(1, 1, -mu);
  n.set_coeff(0, 1, f->one());
  Vec unit = {f->one(), f->zero()};
  return Algebra::make(f, {"1", "v"}, t, unit, n);
}

AlgebraPtr cayley_dickson(const AlgebraPtr& q, const Scalar& alpha) {
  const FieldPtr& f = q->field();
  f->check_mine(alpha);
  if (alpha.is_zero()) fail(errc::zero_parameter, "Cayley-Dickson parameter must be nonzero");
  if (!q->unit()) fail(errc::no_unit, "Cayley-Dickson needs a unital algebra");
  if (!q->norm()) fail(errc::no_norm, "Cayley-Dickson needs a norm");
  std::size_t d = q->dim();

  std::string sym = "u" + std::to_string(static_cast<int>(std::log2(2.0 * d) + 0.5));
  std::vector<std::string> labels = q->labels();
  for (std::size_t i = 0; i < d; ++i) {
    const std::string& li = q->labels()[i];
    labels.push_back(li == "1" ? sym : li + sym);
  }

  std::vector<TensorEntry> t;
  auto emit = [&](std::size_t i, std::size_t j, std::size_t base, const Vec& prod) {
    for (std::size_t k = 0; k < d; ++k)
      if (!prod[k].is_zero()) t.push_back({i, j, base + k, prod[k]});
  };
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei = q->basis_vec(i);
    for (std::size_t j = 0; j < d; ++j) {
      Vec ej = q->basis_vec(j);
      emit(i, j, 0, q->mul(ei, ej));                                    // a c
      emit(i, d + j, d, q->mul(ej, ei));                                // (d a) u
      emit(d + i, j, d, q->mul(ei, q->conj(ej)));                       // (b conj(c)) u
      emit(d + i, d + j, 0, scaled(q->mul(q->conj(ej), ei), alpha));    // alpha conj(d) b
    }
  }

  QuadraticForm n(f, 2 * d);
  for (const auto& [ij, c] : q->norm()->coeffs()) {
    n.set_coeff(ij.first, ij.second, c);
    n.set_coeff(d + ij.first, d + ij.second, -alpha * c);
  }
  Vec unit = zero_vec(f, 2 * d);
  for (std::size_t i = 0; i < d; ++i) unit[i] = (*q->unit())[i];
  return Algebra::make(f, labels, t, unit, n);
}

AlgebraPtr split_cayley(const FieldPtr& f) {
  // Row i, column j of the multiplication table, basis order
  // (e1,e2,u1,u2,u3,v1,v2,v3); +k / -k encodes +-(k-th basis vector).
  static constexpr int table[8][8] = {
      {+1, 0, +3, +4, +5, 0, 0, 0},    // e1
      {0, +2, 0, 0, 0, +6, +7, +8},    // e2
      {0, +3, 0, +8, -7, -1, 0, 0},    // u1
      {0, +4, -8, 0, +6, 0, -1, 0},    // u2
      {0, +5, +7, -6, 0, 0, 0, -1},    // u3
      {+6, 0, -2, 0, 0, 0, +5, -4},    // v1
      {+7, 0, 0, -2, 0, -5, 0, +3},    // v2
      {+8, 0, 0, 0, -2, +4, -3, 0},    // v3
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
  Vec unit = zero_vec(f, 8);
  unit[0] = f->one();
  unit[1] = f->one();
  return Algebra::make(f, {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"}, t, unit, n);
}

AlgebraPtr quaternions(const FieldPtr& f) {
  auto h = cayley_dickson(cayley_dickson(ground(f), -f->one()), -f->one());
  return relabeled(h, {"1", "i", "j", "k"});
}

BasisChange split_basis(const AlgebraPtr& c, std::uint64_t budget) {
  const FieldPtr& f = c->field();
  if (c->dim() != 8) fail(errc::not_eight_dimensional, "split_basis needs dimension 8");
  if (!c->unit()) fail(errc::no_unit, "split_basis needs a unit");
  if (!c->norm()) fail(errc::no_norm, "split_basis needs a norm");
  if (!verify_composition(*c, VerifyMode::symbolic).pass || !verify_hurwitz_properties(*c).pass())
    fail(errc::not_hurwitz, "input is not a Hurwitz algebra");
  const QuadraticForm& n = *c->norm();

  auto search = n.find_isotropic(budget);
  if (!search.vec)
    fail(errc::no_isotropic_found, search.conclusive
                                       ? "norm is anisotropic"
                                       : "no isotropic vector found within budget");
  Vec a = *search.vec;

  // first enumerated b with n(a, conj(b)) nonzero, rescaled to pair to 1
  Vec b;
  bool found_b = false;
  enumerate_canonical_vectors(
      f, 8, budget,
      [&](const Vec& cand) {
        Scalar s = n.polar(a, c->conj(cand));
        if (s.is_zero()) return false;
        b = scaled(cand, s.inv());
        found_b = true;
        return true;
      },
      nullptr);
  if (!found_b) fail(errc::no_isotropic_found, "no pairing vector found within budget");

  Vec e1 = c->mul(a, b);
  if (!eq_vec(c->mul(e1, e1), e1)) fail(errc::internal, "e1 = a b is not idempotent");
  Vec e2 = sub(*c->unit(), e1);

  // Peirce spaces: U = {x : e1 x = x = x e2, e2 x = 0 = x e1}, V swapped
  auto peirce = [&](const Vec& p, const Vec& q) {
    Mat sys(f, 32, 8);
    Mat lp = c->left_mult(p), rq = c->right_mult(q);
    Mat lq = c->left_mult(q), rp = c->right_mult(p);
    Mat id = Mat::identity(f, 8);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t col = 0; col < 8; ++col) {
        sys.at(r, col) = lp.at(r, col) - id.at(r, col);
        sys.at(8 + r, col) = rq.at(r, col) - id.at(r, col);
        sys.at(16 + r, col) = lq.at(r, col);
        sys.at(24 + r, col) = rp.at(r, col);
      }
    return kernel_basis(sys);
  };
  std::vector<Vec> uspace = peirce(e1, e2);
  std::vector<Vec> vspace = peirce(e2, e1);
  if (uspace.size() != 3 || vspace.size() != 3)
    fail(errc::internal, "Peirce decomposition does not have dimensions 3+3");

  Vec u1 = uspace[0], u2 = uspace[1], u3 = uspace[2];
  Scalar s = n.polar(c->mul(u1, u2), u3);
  if (s.is_zero()) fail(errc::internal, "trilinear form vanished on the U basis");
  u3 = scaled(u3, s.inv());
  Vec v1 = c->mul(u2, u3), v2 = c->mul(u3, u1), v3 = c->mul(u1, u2);

  Mat m(f, 8, 8);
  const Vec* cols[8] = {&e1, &e2, &u1, &u2, &u3, &v1, &v2, &v3};
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < 8; ++i) m.at(i, j) = (*cols[j])[i];

  AlgebraPtr target = split_cayley(f);
  AlgebraPtr moved = transported(c, m);
  if (!moved->same_tensor(*target))
    fail(errc::internal, "transported table does not match the split Cayley table");
  return BasisChange{c, target, m};
}

bool hurwitz_isomorphic_gf(const AlgebraPtr& a, const AlgebraPtr& b) {
  const FieldPtr& f = a->field();
  if (!f->same(*b->field())) fail(errc::mixed_fields, "algebras over different fields");
  if (!f->is_finite()) fail(errc::infinite_field_unsupported, "finite fields only");
  if (f->characteristic() == 2) fail(errc::char_two_unsupported, "odd characteristic only");
  if (!verify_hurwitz_properties(*a).pass() || !verify_hurwitz_properties(*b).pass())
    fail(errc::not_hurwitz, "inputs must be Hurwitz algebras");
  if (a->dim() != b->dim()) return false;
  if (a->dim() >= 4) return true;  // Chevalley-Warning: both norms isotropic
  if (a->dim() == 1) return true;
  std::uint64_t reps = f->size() + 1;  // projective line
  bool ia = a->norm()->find_isotropic(reps).vec.has_value();
  bool ib = b->norm()->find_isotropic(reps).vec.has_value();
  return ia == ib;
}

namespace {

// the ambient algebra must carry the standard (1,i,j,k) quaternion table
void require_quaternion_shape(const AlgebraPtr& a) {
  if (a->dim() != 4) fail(errc::wrong_dimension, "rotations need a 4-dimensional algebra");
  if (!a->norm()) fail(errc::no_norm, "rotations need a norm");
  auto reference = quaternions(a->field());
  if (!a->same_tensor(*reference))
    fail(errc::not_hurwitz, "algebra is not CD(CD(F,-1),-1)-shaped");
}

Vec quaternion_inverse(const AlgebraPtr& a, const Vec& q) {
  Scalar nq = a->norm_of(q);
  if (nq.is_zero()) fail(errc::isotropic_quaternion, "quaternion has norm zero");
  return scaled(a->conj(q), nq.inv());
}

}  // namespace

Mat rotation_so3(const Element& q) {
  const AlgebraPtr& a = q.alg;
  require_quaternion_shape(a);
  Vec qi = quaternion_inverse(a, q.coords);
  Mat m(a->field(), 3, 3);
  for (std::size_t col = 0; col < 3; ++col) {
    Vec image = a->mul(a->mul(q.coords, a->basis_vec(col + 1)), qi);
    if (!image[0].is_zero()) fail(errc::internal, "conjugation left the trace-zero space");
    for (std::size_t row = 0; row < 3; ++row) m.at(row, col) = image[row + 1];
  }
  return m;
}

Mat rotation_so4(const Element& p, const Element& q) {
  if (p.alg != q.alg) fail(errc::mixed_algebras, "p and q from different algebras");
  const AlgebraPtr& a = p.alg;
  require_quaternion_shape(a);
  if (a->norm_of(p.coords).is_zero()) fail(errc::isotropic_quaternion, "p has norm zero");
  Vec qi = quaternion_inverse(a, q.coords);
  Mat m(a->field(), 4, 4);
  for (std::size_t col = 0; col < 4; ++col) {
    Vec image = a->mul(a->mul(p.coords, a->basis_vec(col)), qi);
    for (std::size_t row = 0; row < 4; ++row) m.at(row, col) = image[row];
  }
  return m;
}

}  // namespace compalg
