#include "compalg/algebra.hpp"

#include <algorithm>
#include <map>

#include "compalg/polynomial.hpp"

namespace compalg {

namespace {

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

AlgebraPtr Algebra::make(FieldPtr field, std::vector<std::string> labels,
                         const std::vector<TensorEntry>& tensor, std::optional<Vec> unit,
                         std::optional<QuadraticForm> norm) {
  auto a = std::shared_ptr<Algebra>(new Algebra());
  a->field_ = std::move(field);
  a->dim_ = labels.size();
  if (a->dim_ == 0) fail(errc::bad_dimension, "algebras must have dimension >= 1");
  a->labels_ = std::move(labels);
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> acc;
  for (const auto& e : tensor) {
    if (e.i >= a->dim_ || e.j >= a->dim_ || e.k >= a->dim_)
      fail(errc::bad_dimension, "structure constant index out of range");
    a->field_->check_mine(e.c);
    auto& cell = acc[{e.i, e.j}];
    auto it = cell.find(e.k);
    if (it == cell.end())
      cell.emplace(e.k, e.c);
    else
      it->second += e.c;
  }
  a->tensor_.assign(a->dim_ * a->dim_, {});
  for (auto& [ij, cell] : acc) {
    SparseRow row;
    for (auto& [k, c] : cell)
      if (!c.is_zero()) row.emplace_back(k, c);
    a->tensor_[ij.first * a->dim_ + ij.second] = std::move(row);
  }
  if (norm) {
    if (norm->dim() != a->dim_ || !norm->field()->same(*a->field_))
      fail(errc::bad_dimension, "norm does not match the algebra");
    a->norm_ = std::move(norm);
  }
  if (unit) {
    if (unit->size() != a->dim_) fail(errc::bad_dimension, "unit has wrong length");
    for (std::size_t j = 0; j < a->dim_; ++j) {
      Vec ej = a->basis_vec(j);
      if (!eq_vec(a->mul(*unit, ej), ej) || !eq_vec(a->mul(ej, *unit), ej))
        fail(errc::no_unit, "provided unit is not a two-sided unit");
    }
    a->unit_ = std::move(unit);
  }
  return a;
}

std::vector<TensorEntry> Algebra::tensor_entries() const {
  std::vector<TensorEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : entry(i, j)) out.push_back({i, j, k, c});
  return out;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const SparseRow& row = entry(i, j);
      if (row.empty()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : row) r[k] += c * xy;
    }
  }
  return r;
}

Vec Algebra::basis_vec(std::size_t i) const {
  Vec v = zero_vec(field_, dim_);
  v[i] = field_->one();
  return v;
}

Mat Algebra::left_mult(const Vec& x) const {
  Mat m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mul(x, basis_vec(j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Mat Algebra::right_mult(const Vec& x) const {
  Mat m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = mul(basis_vec(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Scalar Algebra::norm_of(const Vec& x) const {
  if (!norm_) fail(errc::no_norm, "algebra has no attached norm");
  return norm_->eval(x);
}

Scalar Algebra::polar_of(const Vec& x, const Vec& y) const {
  if (!norm_) fail(errc::no_norm, "algebra has no attached norm");
  return norm_->polar(x, y);
}

Vec Algebra::conj(const Vec& x) const {
  if (!unit_) fail(errc::no_unit, "conjugation needs a unit");
  Scalar t = polar_of(*unit_, x);
  Vec r = scaled(*unit_, t);
  return sub(r, x);
}

Mat Algebra::conj_matrix() const {
  Mat m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = conj(basis_vec(j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool Algebra::same_tensor(const Algebra& o) const {
  if (dim_ != o.dim_ || !field_->same(*o.field_)) return false;
  for (std::size_t ij = 0; ij < dim_ * dim_; ++ij) {
    const auto& r1 = tensor_[ij];
    const auto& r2 = o.tensor_[ij];
    if (r1.size() != r2.size()) return false;
    for (std::size_t t = 0; t < r1.size(); ++t)
      if (r1[t].first != r2[t].first || r1[t].second != r2[t].second) return false;
  }
  return true;
}

AlgebraPtr Algebra::with_norm(QuadraticForm n) const {
  return make(field_, labels_, tensor_entries(), unit_, std::move(n));
}

AlgebraPtr Algebra::with_unit(Vec u) const {
  return make(field_, labels_, tensor_entries(), std::move(u), norm_);
}

Element multiply(const Element& x, const Element& y) {
  if (x.alg != y.alg) fail(errc::mixed_algebras, "elements of different algebras");
  return {x.alg, x.alg->mul(x.coords, y.coords)};
}

std::optional<Element> find_unit(const AlgebraPtr& a) {
  std::size_t d = a->dim();
  Mat sys(a->field(), 2 * d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      // rows (j*d + k): (w e_j)_k ; rows d*d + (j*d + k): (e_j w)_k
      for (const auto& [k, c] : a->entry(i, j)) sys.at(j * d + k, i) += c;
      for (const auto& [k, c] : a->entry(j, i)) sys.at(d * d + j * d + k, i) += c;
    }
  Vec rhs = zero_vec(a->field(), 2 * d * d);
  for (std::size_t j = 0; j < d; ++j) {
    rhs[j * d + j] = a->field()->one();
    rhs[d * d + j * d + j] = a->field()->one();
  }
  LinearSolver solver(sys);
  auto sol = solver.solve(rhs);
  if (!sol) return std::nullopt;
  for (std::size_t j = 0; j < d; ++j) {
    Vec ej = a->basis_vec(j);
    if (!eq_vec(a->mul(*sol, ej), ej) || !eq_vec(a->mul(ej, *sol), ej))
      fail(errc::internal, "unit solve produced a non-unit");
  }
  return Element{a, *sol};
}

Element conjugate(const Element& x) { return {x.alg, x.alg->conj(x.coords)}; }

AlgebraPtr transported(const AlgebraPtr& a, const Mat& m) {
  auto mi = inverse(m);
  if (!mi) fail(errc::singular_multiplication, "basis change matrix is singular");
  std::size_t d = a->dim();
  std::vector<TensorEntry> entries;
  for (std::size_t i = 0; i < d; ++i) {
    Vec bi = m.col(i);
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = mi->apply(a->mul(bi, m.col(j)));
      for (std::size_t k = 0; k < d; ++k)
        if (!prod[k].is_zero()) entries.push_back({i, j, k, prod[k]});
    }
  }
  std::optional<Vec> unit;
  if (a->unit()) unit = mi->apply(*a->unit());
  std::optional<QuadraticForm> norm;
  if (a->norm()) norm = a->norm()->pulled_back(m);
  return Algebra::make(a->field(), a->labels(), entries, std::move(unit), std::move(norm));
}

AlgebraPtr relabeled(const AlgebraPtr& a, std::vector<std::string> labels) {
  return Algebra::make(a->field(), std::move(labels), a->tensor_entries(), a->unit(), a->norm());
}

// ------------------------------------------------- symbolic verification

namespace {

using PolyVec = std::vector<Polynomial>;

PolyVec generic_vec(const Algebra& a, unsigned offset) {
  PolyVec v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    v.push_back(Polynomial::variable(a.field(), offset + static_cast<unsigned>(i)));
  return v;
}

PolyVec const_vec(const Algebra& a, const Vec& x) {
  PolyVec v;
  for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(Polynomial::constant(a.field(), x[i]));
  return v;
}

PolyVec pmul(const Algebra& a, const PolyVec& x, const PolyVec& y) {
  PolyVec z(a.dim(), Polynomial(a.field()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& row = a.entry(i, j);
      if (row.empty()) continue;
      Polynomial prod = x[i] * y[j];
      for (const auto& [k, c] : row) z[k] += prod.scaled(c);
    }
  }
  return z;
}

PolyVec psub(PolyVec x, const PolyVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}

PolyVec pscale(PolyVec x, const Polynomial& s) {
  for (auto& p : x) p = p * s;
  return x;
}

Polynomial quad_poly(const QuadraticForm& q, const PolyVec& x) {
  Polynomial acc(q.field());
  for (const auto& [ij, c] : q.coeffs()) acc += (x[ij.first] * x[ij.second]).scaled(c);
  return acc;
}

Polynomial polar_poly(const QuadraticForm& q, const PolyVec& x, const PolyVec& y) {
  Polynomial acc(q.field());
  for (const auto& [ij, c] : q.coeffs()) {
    acc += (x[ij.first] * y[ij.second]).scaled(c);
    acc += (x[ij.second] * y[ij.first]).scaled(c);
  }
  return acc;
}

// first failing coordinate's first term, rendered with the given names
std::optional<std::string> poly_vec_witness(const Algebra& a, const PolyVec& defect,
                                            const std::function<std::string(unsigned)>& name) {
  for (std::size_t k = 0; k < defect.size(); ++k) {
    if (defect[k].is_zero()) continue;
    auto [m, c] = *defect[k].witness();
    return "coordinate " + a.labels()[k] + ": monomial " + Polynomial::monomial_str(m, name) +
           " coeff " + c.str();
  }
  return std::nullopt;
}

std::function<std::string(unsigned)> xy_names(std::size_t d) {
  return [d](unsigned v) {
    return v < d ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - d + 1);
  };
}

CheckResult check_poly_vec(const Algebra& a, const PolyVec& defect,
                           const std::function<std::string(unsigned)>& name) {
  CheckResult r;
  if (auto w = poly_vec_witness(a, defect, name)) {
    r.pass = false;
    r.witness = *w;
  }
  return r;
}

void enumerate_vectors(const Algebra& a, const std::function<void(const Vec&)>& fn) {
  std::uint64_t q = a.field()->size();
  std::vector<std::uint64_t> idx(a.dim(), 0);
  Vec v = zero_vec(a.field(), a.dim());
  for (;;) {
    for (std::size_t i = 0; i < a.dim(); ++i) v[i] = a.field()->element_at(idx[i]);
    fn(v);
    std::size_t pos = a.dim();
    bool done = true;
    while (pos-- > 0) {
      if (++idx[pos] < q) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) return;
  }
}

void require_exhaustible(const Algebra& a, std::uint64_t cap) {
  if (!a.field()->is_finite())
    fail(errc::mode_unavailable, "exhaustive verification needs a finite field");
  std::uint64_t q = a.field()->size(), total = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (total > cap / q + 1) {
      total = cap + 1;
      break;
    }
    total *= q;
  }
  if (total > cap)
    fail(errc::mode_unavailable, "exhaustive verification exceeds the configured cap");
}

}  // namespace

std::string HurwitzReport::first_failure() const {
  const std::pair<const char*, const CheckResult*> checks[] = {
      {"involution", &involution},       {"antiautomorphism", &antiautomorphism},
      {"cayley-hamilton", &cayley_hamilton}, {"left-alternative", &left_alternative},
      {"right-alternative", &right_alternative}, {"adjoint-left", &adjoint_left},
      {"adjoint-right", &adjoint_right}};
  for (const auto& [name, c] : checks)
    if (!c->pass) return std::string(name) + ": " + c->witness;
  return "";
}

CompositionReport verify_composition(const Algebra& a, VerifyMode mode, std::uint64_t cap) {
  if (!a.norm()) fail(errc::no_norm, "composition check needs a norm");
  CompositionReport rep;
  rep.mode = mode;
  auto cls = a.norm()->classify();
  rep.norm_kind = cls.kind;
  rep.radical_dim = cls.radical.size();
  std::size_t d = a.dim();
  if (mode == VerifyMode::symbolic) {
    PolyVec x = generic_vec(a, 0), y = generic_vec(a, static_cast<unsigned>(d));
    PolyVec z = pmul(a, x, y);
    Polynomial defect =
        quad_poly(*a.norm(), z) - quad_poly(*a.norm(), x) * quad_poly(*a.norm(), y);
    rep.pass = defect.is_zero();
    if (!rep.pass) {
      auto [m, c] = *defect.witness();
      rep.witness = "monomial " + Polynomial::monomial_str(m, xy_names(d)) + " coeff " + c.str();
    }
    return rep;
  }
  require_exhaustible(a, cap);
  rep.pass = true;
  enumerate_vectors(a, [&](const Vec& x) {
    if (!rep.pass) return;
    Scalar nx = a.norm_of(x);
    enumerate_vectors(a, [&](const Vec& y) {
      if (!rep.pass) return;
      if (a.norm_of(a.mul(x, y)) != nx * a.norm_of(y)) {
        rep.pass = false;
        rep.witness = "x=" + vec_str(x) + " y=" + vec_str(y);
      }
    });
  });
  return rep;
}

HurwitzReport verify_hurwitz_properties(const Algebra& a) {
  if (!a.unit()) fail(errc::no_unit, "Hurwitz checks need a unit");
  if (!a.norm()) fail(errc::no_norm, "Hurwitz checks need a norm");
  HurwitzReport rep;
  std::size_t d = a.dim();
  const auto& q = *a.norm();
  auto names = xy_names(d);

  Mat cm = a.conj_matrix();
  Mat cm2 = cm * cm;
  if (cm2 != Mat::identity(a.field(), d)) {
    rep.involution.pass = false;
    rep.involution.witness = "conj^2 != id";
  }

  std::vector<Vec> cb;  // conjugates of basis vectors
  for (std::size_t i = 0; i < d; ++i) cb.push_back(a.conj(a.basis_vec(i)));

  for (std::size_t i = 0; i < d && rep.antiautomorphism.pass; ++i)
    for (std::size_t j = 0; j < d && rep.antiautomorphism.pass; ++j) {
      Vec lhs = a.conj(a.mul(a.basis_vec(i), a.basis_vec(j)));
      Vec rhs = a.mul(cb[j], cb[i]);
      if (!eq_vec(lhs, rhs)) {
        rep.antiautomorphism.pass = false;
        rep.antiautomorphism.witness =
            "conj(" + a.labels()[i] + "*" + a.labels()[j] + ") != conj(" + a.labels()[j] +
            ")*conj(" + a.labels()[i] + ")";
      }
    }

  // Cayley-Hamilton x^2 - n(x,1)x + n(x)1 = 0, as polynomials in x
  {
    PolyVec x = generic_vec(a, 0);
    PolyVec unit_c = const_vec(a, *a.unit());
    Polynomial trace = polar_poly(q, x, unit_c);
    Polynomial nx = quad_poly(q, x);
    PolyVec defect = psub(psub(pmul(a, x, x), pscale(x, trace)), pscale(unit_c, -nx));
    rep.cayley_hamilton = check_poly_vec(a, defect, names);
  }

  // alternativity, in x and y
  {
    PolyVec x = generic_vec(a, 0), y = generic_vec(a, static_cast<unsigned>(d));
    PolyVec xx = pmul(a, x, x);
    rep.left_alternative = check_poly_vec(a, psub(pmul(a, x, pmul(a, x, y)), pmul(a, xx, y)), names);
    rep.right_alternative =
        check_poly_vec(a, psub(pmul(a, pmul(a, y, x), x), pmul(a, y, xx)), names);
  }

  // adjoints of multiplications: n(xy,z) = n(y, conj(x) z), n(yx,z) = n(y, z conj(x))
  for (std::size_t i = 0; i < d && rep.adjoint_left.pass; ++i)
    for (std::size_t j = 0; j < d && rep.adjoint_left.pass; ++j)
      for (std::size_t k = 0; k < d && rep.adjoint_left.pass; ++k) {
        Scalar lhs = q.polar(a.mul(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
        Scalar rhs = q.polar(a.basis_vec(j), a.mul(cb[i], a.basis_vec(k)));
        if (lhs != rhs) {
          rep.adjoint_left.pass = false;
          rep.adjoint_left.witness = "basis triple (" + a.labels()[i] + "," + a.labels()[j] +
                                     "," + a.labels()[k] + ")";
        }
      }
  for (std::size_t i = 0; i < d && rep.adjoint_right.pass; ++i)
    for (std::size_t j = 0; j < d && rep.adjoint_right.pass; ++j)
      for (std::size_t k = 0; k < d && rep.adjoint_right.pass; ++k) {
        Scalar lhs = q.polar(a.mul(a.basis_vec(j), a.basis_vec(i)), a.basis_vec(k));
        Scalar rhs = q.polar(a.basis_vec(j), a.mul(a.basis_vec(k), cb[i]));
        if (lhs != rhs) {
          rep.adjoint_right.pass = false;
          rep.adjoint_right.witness = "basis triple (" + a.labels()[i] + "," + a.labels()[j] +
                                      "," + a.labels()[k] + ")";
        }
      }
  return rep;
}

SymmetricReport verify_symmetric(const Algebra& a, VerifyMode mode, std::uint64_t cap) {
  if (!a.norm()) fail(errc::no_norm, "symmetric check needs a norm");
  SymmetricReport rep;
  std::size_t d = a.dim();
  const auto& q = *a.norm();

  for (std::size_t i = 0; i < d && rep.norm_associativity.pass; ++i)
    for (std::size_t j = 0; j < d && rep.norm_associativity.pass; ++j)
      for (std::size_t k = 0; k < d && rep.norm_associativity.pass; ++k) {
        Scalar lhs = q.polar(a.mul(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
        Scalar rhs = q.polar(a.basis_vec(i), a.mul(a.basis_vec(j), a.basis_vec(k)));
        if (lhs != rhs) {
          rep.norm_associativity.pass = false;
          rep.norm_associativity.witness = "basis triple (" + a.labels()[i] + "," +
                                           a.labels()[j] + "," + a.labels()[k] + ")";
        }
      }

  if (mode == VerifyMode::symbolic) {
    PolyVec x = generic_vec(a, 0), y = generic_vec(a, static_cast<unsigned>(d));
    Polynomial nx = quad_poly(q, x);
    PolyVec xy = pmul(a, x, y);
    PolyVec yx = pmul(a, y, x);
    auto names = xy_names(d);
    rep.left_exchange = check_poly_vec(a, psub(pmul(a, xy, x), pscale(y, nx)), names);
    rep.right_exchange = check_poly_vec(a, psub(pmul(a, x, yx), pscale(y, nx)), names);
    return rep;
  }
  require_exhaustible(a, cap);
  enumerate_vectors(a, [&](const Vec& x) {
    if (!rep.left_exchange.pass || !rep.right_exchange.pass) return;
    Scalar nx = a.norm_of(x);
    enumerate_vectors(a, [&](const Vec& y) {
      if (!rep.left_exchange.pass || !rep.right_exchange.pass) return;
      Vec ny = scaled(y, nx);
      if (!eq_vec(a.mul(a.mul(x, y), x), ny)) {
        rep.left_exchange.pass = false;
        rep.left_exchange.witness = "x=" + vec_str(x) + " y=" + vec_str(y);
      } else if (!eq_vec(a.mul(x, a.mul(y, x)), ny)) {
        rep.right_exchange.pass = false;
        rep.right_exchange.witness = "x=" + vec_str(x) + " y=" + vec_str(y);
      }
    });
  });
  return rep;
}

LawReport verify_law(const Algebra& a, Law law) {
  LawReport rep;
  rep.law = law;
  std::size_t d = a.dim();
  switch (law) {
    case Law::commutative:
      for (std::size_t i = 0; i < d && rep.result.pass; ++i)
        for (std::size_t j = 0; j < d && rep.result.pass; ++j)
          if (!eq_vec(a.mul(a.basis_vec(i), a.basis_vec(j)),
                      a.mul(a.basis_vec(j), a.basis_vec(i)))) {
            rep.result.pass = false;
            rep.result.witness = "basis pair (" + a.labels()[i] + "," + a.labels()[j] + ")";
          }
      return rep;
    case Law::associative:
      for (std::size_t i = 0; i < d && rep.result.pass; ++i)
        for (std::size_t j = 0; j < d && rep.result.pass; ++j)
          for (std::size_t k = 0; k < d && rep.result.pass; ++k) {
            Vec lhs = a.mul(a.mul(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
            Vec rhs = a.mul(a.basis_vec(i), a.mul(a.basis_vec(j), a.basis_vec(k)));
            if (!eq_vec(lhs, rhs)) {
              rep.result.pass = false;
              rep.result.witness = "associator (" + a.labels()[i] + "," + a.labels()[j] + "," +
                                   a.labels()[k] + ")";
            }
          }
      return rep;
    case Law::flexible: {
      PolyVec x = generic_vec(a, 0), y = generic_vec(a, static_cast<unsigned>(d));
      PolyVec defect = psub(pmul(a, pmul(a, x, y), x), pmul(a, x, pmul(a, y, x)));
      rep.result = check_poly_vec(a, defect, xy_names(d));
      return rep;
    }
    case Law::left_alternative: {
      PolyVec x = generic_vec(a, 0), y = generic_vec(a, static_cast<unsigned>(d));
      PolyVec defect = psub(pmul(a, x, pmul(a, x, y)), pmul(a, pmul(a, x, x), y));
      rep.result = check_poly_vec(a, defect, xy_names(d));
      return rep;
    }
    case Law::right_alternative: {
      PolyVec x = generic_vec(a, 0), y = generic_vec(a, static_cast<unsigned>(d));
      PolyVec defect = psub(pmul(a, pmul(a, y, x), x), pmul(a, y, pmul(a, x, x)));
      rep.result = check_poly_vec(a, defect, xy_names(d));
      return rep;
    }
  }
  return rep;
}

std::vector<Vec> commutative_center(const Algebra& a) {
  std::size_t d = a.dim();
  Mat sys(a.field(), d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, c] : a.entry(i, j)) sys.at(j * d + k, i) += c;
      for (const auto& [k, c] : a.entry(j, i)) sys.at(j * d + k, i) -= c;
    }
  return kernel_basis(sys);
}

AlgebraPtr kaplansky_unitalize(const AlgebraPtr& a, const Vec& base_point) {
  if (!a->norm()) fail(errc::no_norm, "unitalization needs a norm");
  Scalar na = a->norm_of(base_point);
  if (na.is_zero()) fail(errc::isotropic_base_point, "base point has norm zero");
  std::size_t d = a->dim();
  const auto& q = *a->norm();

  bool symmetric = true;
  for (std::size_t i = 0; i < d && symmetric; ++i)
    for (std::size_t j = 0; j < d && symmetric; ++j)
      for (std::size_t k = 0; k < d && symmetric; ++k)
        if (q.polar(a->mul(a->basis_vec(i), a->basis_vec(j)), a->basis_vec(k)) !=
            q.polar(a->basis_vec(i), a->mul(a->basis_vec(j), a->basis_vec(k))))
          symmetric = false;

  std::vector<TensorEntry> entries;
  Vec unit;
  Scalar nai = na.inv();
  if (symmetric) {
    // x <> y = (a*x)*(y*a) / n(a), unit a*a / n(a)
    for (std::size_t i = 0; i < d; ++i) {
      Vec ax = a->mul(base_point, a->basis_vec(i));
      for (std::size_t j = 0; j < d; ++j) {
        Vec ya = a->mul(a->basis_vec(j), base_point);
        Vec prod = scaled(a->mul(ax, ya), nai);
        for (std::size_t k = 0; k < d; ++k)
          if (!prod[k].is_zero()) entries.push_back({i, j, k, prod[k]});
      }
    }
    unit = scaled(a->mul(base_point, base_point), nai);
  } else {
    Vec u = scaled(a->mul(base_point, base_point), nai);
    auto ru = inverse(a->right_mult(u));
    auto lu = inverse(a->left_mult(u));
    if (!ru || !lu)
      fail(errc::singular_multiplication,
           "multiplication by the base point is singular; not a composition algebra");
    for (std::size_t i = 0; i < d; ++i) {
      Vec xi = ru->apply(a->basis_vec(i));
      for (std::size_t j = 0; j < d; ++j) {
        Vec yj = lu->apply(a->basis_vec(j));
        Vec prod = a->mul(xi, yj);
        for (std::size_t k = 0; k < d; ++k)
          if (!prod[k].is_zero()) entries.push_back({i, j, k, prod[k]});
      }
    }
    unit = a->mul(u, u);
  }
  try {
    return Algebra::make(a->field(), a->labels(), entries, unit, q);
  } catch (const error& e) {
    if (e.code() == errc::no_unit)
      fail(errc::singular_multiplication,
           "unitalization did not produce a unit; input was not a composition algebra");
    throw;
  }
}

std::uint64_t urbanik_wright_index(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) fail(errc::bad_dimension, "indices start at 1");
  if (n > 63) fail(errc::bad_dimension, "index overflow");
  return (1ULL << (n - 1)) * (2 * m - 1);
}

std::pair<std::uint64_t, std::uint64_t> urbanik_wright_inverse(std::uint64_t k) {
  if (k == 0) fail(errc::bad_dimension, "indices start at 1");
  std::uint64_t n = 1;
  while ((k & 1) == 0) {
    k >>= 1;
    ++n;
  }
  return {n, (k + 1) / 2};
}

}  // namespace compalg
