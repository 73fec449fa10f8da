#include "compalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace compalg {

namespace {

using Poly = std::vector<Scalar>;  // dense univariate, coeffs over base, no leading zeros

bool up_is_zero(const Poly& p) { return p.empty(); }

void up_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly up_add(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) r.resize(b.size(), b[0].field()->zero());
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  up_trim(r);
  return r;
}

Poly up_neg(const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = -c;
  return r;
}

Poly up_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const FieldPtr& bf = a[0].field();
  Poly r(a.size() + b.size() - 1, bf->zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  up_trim(r);
  return r;
}

Poly up_scale(const Poly& a, const Scalar& s) {
  if (s.is_zero()) return {};
  Poly r = a;
  for (auto& c : r) c *= s;
  return r;
}

// a = q*b + r with deg r < deg b
void up_divmod(const Poly& a, const Poly& b, Poly* q, Poly* r) {
  if (up_is_zero(b)) fail(errc::division_by_zero, "polynomial division by zero");
  Poly rem = a, quo;
  const Scalar lead_inv = b.back().inv();
  if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, b.back().field()->zero());
  while (rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Scalar coef = rem.back() * lead_inv;
    quo[shift] = coef;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= coef * b[i];
    up_trim(rem);
  }
  up_trim(quo);
  if (q) *q = quo;
  if (r) *r = rem;
}

Poly up_gcd(Poly a, Poly b) {
  while (!up_is_zero(b)) {
    Poly r;
    up_divmod(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar li = a.back().inv();
    for (auto& c : a) c *= li;  // monic gcd
  }
  return a;
}

bool up_eq(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

mpq_class make_q(long long n, long long d = 1) {
  mpq_class q(static_cast<long>(n), static_cast<long>(d));
  q.canonicalize();
  return q;
}

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

// ---------------------------------------------------------------- Scalar

bool Scalar::is_zero() const { return field_->is_zero(*this); }
bool Scalar::is_one() const { return field_->eq(*this, field_->one()); }
Scalar Scalar::inv() const { return field_->inv(*this); }
Scalar Scalar::operator-() const { return field_->neg(*this); }
std::string Scalar::str() const { return field_->to_string(*this); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar acc = field_->one(), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) { return a.field()->add(a, b); }
Scalar operator-(const Scalar& a, const Scalar& b) { return a.field()->sub(a, b); }
Scalar operator*(const Scalar& a, const Scalar& b) { return a.field()->mul(a, b); }
Scalar operator/(const Scalar& a, const Scalar& b) { return a.field()->div(a, b); }
bool Scalar::operator==(const Scalar& b) const { return field_->eq(*this, b); }

// ---------------------------------------------------------------- Field

void Field::check_mine(const Scalar& a) const {
  if (a.is_null() || !a.field()->same(*this))
    fail(errc::mixed_fields, "scalar does not belong to this field");
}

bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case FieldKind::rationals:
      return true;
    case FieldKind::prime:
      return p_ == o.p_;
    case FieldKind::quad_ext:
      return base_->same(*o.base_) && base_->eq(c0_, o.c0_) && base_->eq(c1_, o.c1_) &&
             symbol_ == o.symbol_;
    case FieldKind::cubic_ext:
      return base_->same(*o.base_) && base_->eq(c0_, o.c0_) && symbol_ == o.symbol_;
    case FieldKind::rat_fun:
      return base_->same(*o.base_) && symbol_ == o.symbol_;
  }
  return false;
}

unsigned Field::degree_over_base() const {
  switch (kind_) {
    case FieldKind::quad_ext: return 2;
    case FieldKind::cubic_ext: return 3;
    default: return 1;
  }
}

bool Field::is_finite() const {
  switch (kind_) {
    case FieldKind::rationals: return false;
    case FieldKind::prime: return true;
    case FieldKind::rat_fun: return false;
    default: return base_->is_finite();
  }
}

std::uint64_t Field::size() const {
  if (!is_finite()) fail(errc::unsupported_field, "field is infinite");
  if (kind_ == FieldKind::prime) return p_;
  std::uint64_t b = base_->size();
  return degree_over_base() == 2 ? b * b : b * b * b;
}

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::rationals;
    f->char_ = 0;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(errc::non_prime_modulus, "modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) fail(errc::unsupported_field, "prime modulus too large");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::prime;
  f->char_ = p;
  f->p_ = p;
  return f;
}

FieldPtr Field::quadratic_ext(FieldPtr base, const Scalar& c0, const Scalar& c1, std::string symbol) {
  base->check_mine(c0);
  base->check_mine(c1);
  // irreducible over the base <=> no root there
  bool has_root = false;
  if (base->is_finite()) {
    std::uint64_t n = base->size();
    for (std::uint64_t i = 0; i < n && !has_root; ++i) {
      Scalar x = base->element_at(i);
      has_root = (x * x + c1 * x + c0).is_zero();
    }
  } else if (base->kind() == FieldKind::rationals) {
    // root exists iff the discriminant is a rational square
    Scalar disc = c1 * c1 - base->from_int(4) * c0;
    const mpq_class& d = std::get<Scalar::RatRep>(disc.rep()).v;
    has_root = sgn(d) >= 0 && mpz_perfect_square_p(d.get_num_mpz_t()) &&
               mpz_perfect_square_p(d.get_den_mpz_t());
  } else {
    fail(errc::unsupported_field, "quadratic extension over this base is not supported");
  }
  if (has_root) fail(errc::reducible_extension, "minimal polynomial has a root in the base field");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::quad_ext;
  f->char_ = base->characteristic();
  f->base_ = std::move(base);
  f->c0_ = c0;
  f->c1_ = c1;
  f->symbol_ = std::move(symbol);
  return f;
}

FieldPtr Field::cubic_radical_ext(FieldPtr base, const Scalar& alpha, std::string symbol) {
  base->check_mine(alpha);
  if (alpha.is_zero()) fail(errc::zero_parameter, "cubic radical of zero");
  // x^3 - alpha is irreducible iff alpha is not a cube in the base
  if (base->is_cube(alpha)) fail(errc::reducible_extension, "alpha already has a cube root in the base field");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::cubic_ext;
  f->char_ = base->characteristic();
  f->base_ = std::move(base);
  f->c0_ = alpha;
  f->symbol_ = std::move(symbol);
  return f;
}

FieldPtr Field::rational_functions(FieldPtr base, std::string var) {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::rat_fun;
  f->char_ = base->characteristic();
  f->base_ = std::move(base);
  f->symbol_ = std::move(var);
  return f;
}

Scalar Field::zero() const {
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals: return Scalar(self, Scalar::RatRep{mpq_class(0)});
    case FieldKind::prime: return Scalar(self, Scalar::ModRep{0});
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      std::vector<Scalar> c(degree_over_base(), base_->zero());
      return Scalar(self, Scalar::ExtRep{std::move(c)});
    }
    case FieldKind::rat_fun: return Scalar(self, Scalar::FracRep{{}, {base_->one()}});
  }
  fail(errc::internal, "bad kind");
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals: return Scalar(self, Scalar::RatRep{make_q(n)});
    case FieldKind::prime: {
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += p_;
      return Scalar(self, Scalar::ModRep{static_cast<std::uint64_t>(r)});
    }
    default: return embed(base_->from_int(n));
  }
}

Scalar Field::generator() const {
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      std::vector<Scalar> c(degree_over_base(), base_->zero());
      c[1] = base_->one();
      return Scalar(self, Scalar::ExtRep{std::move(c)});
    }
    case FieldKind::rat_fun:
      return Scalar(self, Scalar::FracRep{{base_->zero(), base_->one()}, {base_->one()}});
    default:
      fail(errc::unsupported_field, "field has no generator symbol");
  }
}

Scalar Field::embed(const Scalar& x) const {
  if (kind_ == FieldKind::rationals || kind_ == FieldKind::prime) {
    check_mine(x);
    return x;
  }
  base_->check_mine(x);
  auto self = shared_from_this();
  if (kind_ == FieldKind::rat_fun) {
    if (base_->is_zero(x)) return zero();
    return Scalar(self, Scalar::FracRep{{x}, {base_->one()}});
  }
  std::vector<Scalar> c(degree_over_base(), base_->zero());
  c[0] = x;
  return Scalar(self, Scalar::ExtRep{std::move(c)});
}

std::vector<Scalar> Field::coords(const Scalar& x) const {
  check_mine(x);
  if (kind_ == FieldKind::quad_ext || kind_ == FieldKind::cubic_ext)
    return std::get<Scalar::ExtRep>(x.rep()).c;
  fail(errc::unsupported_field, "coords only defined for extension fields");
}

bool Field::in_base(const Scalar& x, Scalar* base_out) const {
  check_mine(x);
  switch (kind_) {
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      const auto& c = std::get<Scalar::ExtRep>(x.rep()).c;
      for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
      if (base_out) *base_out = c[0];
      return true;
    }
    case FieldKind::rat_fun: {
      const auto& f = std::get<Scalar::FracRep>(x.rep());
      if (f.den.size() != 1 || f.num.size() > 1) return false;
      if (base_out) *base_out = f.num.empty() ? base_->zero() : f.num[0] / f.den[0];
      return true;
    }
    default:
      if (base_out) *base_out = x;
      return true;
  }
}

Scalar Field::element_at(std::uint64_t index) const {
  switch (kind_) {
    case FieldKind::prime:
      return Scalar(shared_from_this(), Scalar::ModRep{index % p_});
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      std::uint64_t b = base_->size();
      std::vector<Scalar> c;
      for (unsigned i = 0; i < degree_over_base(); ++i) {
        c.push_back(base_->element_at(index % b));
        index /= b;
      }
      return Scalar(shared_from_this(), Scalar::ExtRep{std::move(c)});
    }
    default:
      fail(errc::unsupported_field, "enumeration requires a finite field");
  }
}

Scalar Field::random(Rng& rng) const {
  switch (kind_) {
    case FieldKind::rationals: {
      long long num = static_cast<long long>(rng.below(21)) - 10;
      long long den = static_cast<long long>(rng.below(4)) + 1;
      return Scalar(shared_from_this(), Scalar::RatRep{make_q(num, den)});
    }
    case FieldKind::prime:
      return element_at(rng.below(p_));
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      std::vector<Scalar> c;
      for (unsigned i = 0; i < degree_over_base(); ++i) c.push_back(base_->random(rng));
      return Scalar(shared_from_this(), Scalar::ExtRep{std::move(c)});
    }
    case FieldKind::rat_fun: {
      // small polynomial over a nonzero monic-ish denominator
      Poly num, den;
      unsigned dn = static_cast<unsigned>(rng.below(3));
      for (unsigned i = 0; i <= dn; ++i) num.push_back(base_->random(rng));
      unsigned dd = static_cast<unsigned>(rng.below(2));
      for (unsigned i = 0; i < dd; ++i) den.push_back(base_->random(rng));
      den.push_back(base_->one());
      up_trim(num);
      Scalar x(shared_from_this(), Scalar::FracRep{std::move(num), std::move(den)});
      // normalize through the arithmetic path
      return add(x, zero());
    }
  }
  fail(errc::internal, "bad kind");
}

// canonical fraction: gcd-reduced with monic denominator
static Scalar::FracRep frac_normalize(Poly num, Poly den, const Field* base) {
  if (up_is_zero(den)) fail(errc::division_by_zero, "zero denominator");
  if (up_is_zero(num)) return {{}, {base->one()}};
  Poly g = up_gcd(num, den);
  if (g.size() > 1 || !(g.size() == 1 && g[0].is_one())) {
    Poly q1, q2;
    up_divmod(num, g, &q1, nullptr);
    up_divmod(den, g, &q2, nullptr);
    num = std::move(q1);
    den = std::move(q2);
  }
  Scalar li = den.back().inv();
  num = up_scale(num, li);
  den = up_scale(den, li);
  return {std::move(num), std::move(den)};
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  check_mine(a);
  check_mine(b);
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals: {
      mpq_class r = std::get<Scalar::RatRep>(a.rep()).v + std::get<Scalar::RatRep>(b.rep()).v;
      return Scalar(self, Scalar::RatRep{r});
    }
    case FieldKind::prime: {
      std::uint64_t r = std::get<Scalar::ModRep>(a.rep()).r + std::get<Scalar::ModRep>(b.rep()).r;
      if (r >= p_) r -= p_;
      return Scalar(self, Scalar::ModRep{r});
    }
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      auto c = std::get<Scalar::ExtRep>(a.rep()).c;
      const auto& d = std::get<Scalar::ExtRep>(b.rep()).c;
      for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      return Scalar(self, Scalar::ExtRep{std::move(c)});
    }
    case FieldKind::rat_fun: {
      const auto& x = std::get<Scalar::FracRep>(a.rep());
      const auto& y = std::get<Scalar::FracRep>(b.rep());
      Poly num = up_add(up_mul(x.num, y.den), up_mul(y.num, x.den));
      Poly den = up_mul(x.den, y.den);
      return Scalar(self, frac_normalize(std::move(num), std::move(den), base_.get()));
    }
  }
  fail(errc::internal, "bad kind");
}

Scalar Field::neg(const Scalar& a) const {
  check_mine(a);
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(self, Scalar::RatRep{mpq_class(-std::get<Scalar::RatRep>(a.rep()).v)});
    case FieldKind::prime: {
      std::uint64_t r = std::get<Scalar::ModRep>(a.rep()).r;
      return Scalar(self, Scalar::ModRep{r ? p_ - r : 0});
    }
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      auto c = std::get<Scalar::ExtRep>(a.rep()).c;
      for (auto& x : c) x = -x;
      return Scalar(self, Scalar::ExtRep{std::move(c)});
    }
    case FieldKind::rat_fun: {
      auto f = std::get<Scalar::FracRep>(a.rep());
      f.num = up_neg(f.num);
      return Scalar(self, std::move(f));
    }
  }
  fail(errc::internal, "bad kind");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check_mine(a);
  check_mine(b);
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals: {
      mpq_class r = std::get<Scalar::RatRep>(a.rep()).v * std::get<Scalar::RatRep>(b.rep()).v;
      return Scalar(self, Scalar::RatRep{r});
    }
    case FieldKind::prime: {
      unsigned __int128 r = static_cast<unsigned __int128>(std::get<Scalar::ModRep>(a.rep()).r) *
                            std::get<Scalar::ModRep>(b.rep()).r;
      return Scalar(self, Scalar::ModRep{static_cast<std::uint64_t>(r % p_)});
    }
    case FieldKind::quad_ext: {
      const auto& x = std::get<Scalar::ExtRep>(a.rep()).c;
      const auto& y = std::get<Scalar::ExtRep>(b.rep()).c;
      // (x0 + x1 w)(y0 + y1 w) with w^2 = -c1 w - c0
      Scalar t = x[1] * y[1];
      Scalar r0 = x[0] * y[0] - c0_ * t;
      Scalar r1 = x[0] * y[1] + x[1] * y[0] - c1_ * t;
      return Scalar(self, Scalar::ExtRep{{std::move(r0), std::move(r1)}});
    }
    case FieldKind::cubic_ext: {
      const auto& x = std::get<Scalar::ExtRep>(a.rep()).c;
      const auto& y = std::get<Scalar::ExtRep>(b.rep()).c;
      // c^3 = alpha
      const Scalar& al = c0_;
      Scalar r0 = x[0] * y[0] + al * (x[1] * y[2] + x[2] * y[1]);
      Scalar r1 = x[0] * y[1] + x[1] * y[0] + al * (x[2] * y[2]);
      Scalar r2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
      return Scalar(self, Scalar::ExtRep{{std::move(r0), std::move(r1), std::move(r2)}});
    }
    case FieldKind::rat_fun: {
      const auto& x = std::get<Scalar::FracRep>(a.rep());
      const auto& y = std::get<Scalar::FracRep>(b.rep());
      return Scalar(self,
                    frac_normalize(up_mul(x.num, y.num), up_mul(x.den, y.den), base_.get()));
    }
  }
  fail(errc::internal, "bad kind");
}

Scalar Field::inv(const Scalar& a) const {
  check_mine(a);
  if (is_zero(a)) fail(errc::division_by_zero, "inverse of zero");
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals:
      return Scalar(self, Scalar::RatRep{mpq_class(1) / std::get<Scalar::RatRep>(a.rep()).v});
    case FieldKind::prime: {
      // extended Euclid
      long long t = 0, nt = 1;
      long long r = static_cast<long long>(p_);
      long long nr = static_cast<long long>(std::get<Scalar::ModRep>(a.rep()).r);
      while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
      }
      if (t < 0) t += static_cast<long long>(p_);
      return Scalar(self, Scalar::ModRep{static_cast<std::uint64_t>(t)});
    }
    case FieldKind::quad_ext: {
      const auto& x = std::get<Scalar::ExtRep>(a.rep()).c;
      // norm to the base: (x0 + x1 w)(x0 - x1 c1 - x1 w)
      Scalar n = x[0] * x[0] - c1_ * x[0] * x[1] + c0_ * x[1] * x[1];
      Scalar ni = n.inv();
      return Scalar(self, Scalar::ExtRep{{(x[0] - c1_ * x[1]) * ni, -(x[1] * ni)}});
    }
    case FieldKind::cubic_ext: {
      // solve (a * y) = 1 as a 3x3 linear system over the base
      const auto& x = std::get<Scalar::ExtRep>(a.rep()).c;
      const Scalar& al = c0_;
      // multiplication matrix of a on the basis 1, c, c^2 (columns)
      Scalar m[3][3] = {{x[0], al * x[2], al * x[1]},
                        {x[1], x[0], al * x[2]},
                        {x[2], x[1], x[0]}};
      Scalar rhs[3] = {base_->one(), base_->zero(), base_->zero()};
      // Gaussian elimination, first-nonzero pivot
      for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int row = col; row < 3; ++row)
          if (!m[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) fail(errc::division_by_zero, "inverse in cubic extension");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Scalar pi = m[col][col].inv();
        for (int j = col; j < 3; ++j) m[col][j] *= pi;
        rhs[col] *= pi;
        for (int row = 0; row < 3; ++row) {
          if (row == col || m[row][col].is_zero()) continue;
          Scalar f = m[row][col];
          for (int j = col; j < 3; ++j) m[row][j] -= f * m[col][j];
          rhs[row] -= f * rhs[col];
        }
      }
      return Scalar(self, Scalar::ExtRep{{rhs[0], rhs[1], rhs[2]}});
    }
    case FieldKind::rat_fun: {
      const auto& f = std::get<Scalar::FracRep>(a.rep());
      return Scalar(self, frac_normalize(f.den, f.num, base_.get()));
    }
  }
  fail(errc::internal, "bad kind");
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Scalar& a) const {
  check_mine(a);
  switch (kind_) {
    case FieldKind::rationals: return sgn(std::get<Scalar::RatRep>(a.rep()).v) == 0;
    case FieldKind::prime: return std::get<Scalar::ModRep>(a.rep()).r == 0;
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      for (const auto& c : std::get<Scalar::ExtRep>(a.rep()).c)
        if (!c.is_zero()) return false;
      return true;
    }
    case FieldKind::rat_fun: return std::get<Scalar::FracRep>(a.rep()).num.empty();
  }
  return false;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  check_mine(a);
  check_mine(b);
  switch (kind_) {
    case FieldKind::rationals:
      return std::get<Scalar::RatRep>(a.rep()).v == std::get<Scalar::RatRep>(b.rep()).v;
    case FieldKind::prime:
      return std::get<Scalar::ModRep>(a.rep()).r == std::get<Scalar::ModRep>(b.rep()).r;
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext: {
      const auto& x = std::get<Scalar::ExtRep>(a.rep()).c;
      const auto& y = std::get<Scalar::ExtRep>(b.rep()).c;
      for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return false;
      return true;
    }
    case FieldKind::rat_fun: {
      const auto& x = std::get<Scalar::FracRep>(a.rep());
      const auto& y = std::get<Scalar::FracRep>(b.rep());
      return up_eq(x.num, y.num) && up_eq(x.den, y.den);
    }
  }
  return false;
}

// -------------------------------------------------------------- printing

namespace {

bool needs_parens(const std::string& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}

std::string wrap(const std::string& s) { return needs_parens(s) ? "(" + s + ")" : s; }

std::string poly_str(const Poly& p, const std::string& sym) {
  if (up_is_zero(p)) return "0";
  std::string out;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    std::string cs = p[i].str();
    std::string term;
    if (i == 0) {
      term = cs;
    } else {
      std::string sp = sym + (i == 1 ? "" : "^" + std::to_string(i));
      if (cs == "1")
        term = sp;
      else if (cs == "-1")
        term = "-" + sp;
      else
        term = wrap(cs) + "*" + sp;
    }
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string Field::to_string(const Scalar& x) const {
  check_mine(x);
  switch (kind_) {
    case FieldKind::rationals:
      return std::get<Scalar::RatRep>(x.rep()).v.get_str();
    case FieldKind::prime:
      return std::to_string(std::get<Scalar::ModRep>(x.rep()).r);
    case FieldKind::quad_ext:
    case FieldKind::cubic_ext:
      return poly_str(std::get<Scalar::ExtRep>(x.rep()).c, symbol_);
    case FieldKind::rat_fun: {
      const auto& f = std::get<Scalar::FracRep>(x.rep());
      std::string ns = poly_str(f.num, symbol_);
      if (f.den.size() == 1 && f.den[0].is_one()) return ns;
      std::string ds = poly_str(f.den, symbol_);
      auto frac_wrap = [](const std::string& s) {
        for (size_t i = 0; i < s.size(); ++i)
          if ((i > 0 && (s[i] == '+' || s[i] == '-')) || s[i] == '/') return "(" + s + ")";
        return s;
      };
      return frac_wrap(ns) + "/" + frac_wrap(ds);
    }
  }
  fail(errc::internal, "bad kind");
}

// --------------------------------------------------------------- parsing

namespace {

struct Parser {
  const Field* field;
  std::string text;
  size_t pos = 0;
  std::vector<std::pair<std::string, Scalar>> symbols;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void die(const std::string& msg) {
    fail(errc::parse_error, "scalar parse error at position " + std::to_string(pos) + ": " + msg +
                                " in \"" + text + "\"");
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      skip();
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip();
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }
  Scalar factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar v = primary();
    skip();
    if (eat('^')) {
      skip();
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) die("expected exponent");
      if (pos - start > 4) die("exponent too large");
      long e = std::stol(text.substr(start, pos - start));
      v = v.pow(e);
    }
    return v;
  }
  Scalar primary() {
    skip();
    if (pos >= text.size()) die("unexpected end");
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) die("expected ')'");
      return v;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string digits = text.substr(start, pos - start);
      mpz_class z(digits, 10);  // explicit base: a leading zero is not octal
      if (field->kind() == FieldKind::rationals)
        return Scalar(field->shared_from_this(), Scalar::RatRep{mpq_class(z)});
      if (field->characteristic() > 0) {
        mpz_class r = z % field->characteristic();
        return field->from_int(r.get_si());
      }
      // char 0 tower over Q
      Scalar v = field->from_int(0), ten = field->from_int(10);
      for (char d : digits) v = v * ten + field->from_int(d - '0');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      for (const auto& [sym, val] : symbols)
        if (sym == name) return val;
      die("unknown symbol '" + name + "'");
    }
    die("unexpected character");
  }
};

void collect_symbols(const FieldPtr& f, const FieldPtr& top,
                     std::vector<std::pair<std::string, Scalar>>* out) {
  if (f->kind() == FieldKind::rationals || f->kind() == FieldKind::prime) return;
  // generator of f, embedded up into top
  Scalar g = f->generator();
  std::vector<FieldPtr> chain;
  FieldPtr cur = top;
  while (!cur->same(*f)) {
    chain.push_back(cur);
    cur = cur->base();
    if (!cur) fail(errc::internal, "field tower mismatch");
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) g = (*it)->embed(g);
  out->emplace_back(f->symbol(), std::move(g));
  collect_symbols(f->base(), top, out);
}

}  // namespace

Scalar Field::parse(const std::string& text) const {
  Parser p;
  p.field = this;
  p.text = text;
  collect_symbols(shared_from_this(), shared_from_this(), &p.symbols);
  Scalar v = p.expr();
  p.skip();
  if (p.pos != p.text.size()) p.die("trailing input");
  return v;
}

// ------------------------------------------------------------ cube roots

namespace {

// cube root of a dense polynomial over GF(3) coefficients using the
// Frobenius splitting h(t) = h0(t^3) + t h1(t^3) + t^2 h2(t^3)
std::optional<Poly> up_cube_root_char3(const Poly& h, const Field* base) {
  if (up_is_zero(h)) return Poly{};
  Poly r((h.size() - 1) / 3 + 1, base->zero());
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero()) continue;
    if (i % 3 != 0) return std::nullopt;
    auto cr = h[i].field()->cube_root(h[i]);
    if (!cr) return std::nullopt;
    r[i / 3] = *cr;
  }
  up_trim(r);
  return r;
}

// monic cube root by undetermined coefficients (char != 3)
std::optional<Poly> up_cube_root_generic(const Poly& h, const Field* base) {
  if (up_is_zero(h)) return Poly{};
  size_t deg = h.size() - 1;
  if (deg % 3 != 0) return std::nullopt;
  auto lc_root = h.back().field()->cube_root(h.back());
  if (!lc_root) return std::nullopt;
  size_t m = deg / 3;
  Poly r(m + 1, base->zero());
  r[m] = *lc_root;
  // Match coefficients of r^3 against h from the top down. At step k the
  // coefficient of t^{2m+k} is 3 r_m^2 r_k plus terms with all indices > k
  // (indices i+j+l = 2m+k with one index <= k force the other two to be m).
  Scalar lead_sq_3 = base->from_int(3) * r[m] * r[m];
  for (size_t k = m; k-- > 0;) {
    Poly cube = up_mul(up_mul(r, r), r);
    Scalar have = (2 * m + k) < cube.size() ? cube[2 * m + k] : base->zero();
    Scalar target = (2 * m + k) < h.size() ? h[2 * m + k] : base->zero();
    r[k] = (target - have) / lead_sq_3;
  }
  Poly check = up_mul(up_mul(r, r), r);
  if (!up_eq(check, h)) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Scalar> Field::cube_root(const Scalar& a) const {
  check_mine(a);
  auto self = shared_from_this();
  if (is_zero(a)) return zero();
  switch (kind_) {
    case FieldKind::rationals: {
      const mpq_class& q = std::get<Scalar::RatRep>(a.rep()).v;
      mpz_class n = q.get_num(), d = q.get_den();
      mpz_class rn, rd;
      if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3)) return std::nullopt;
      if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3)) return std::nullopt;
      mpq_class r(rn, rd);
      r.canonicalize();
      return Scalar(self, Scalar::RatRep{r});
    }
    case FieldKind::prime: {
      std::uint64_t x = std::get<Scalar::ModRep>(a.rep()).r;
      if (p_ == 3) return a;  // Frobenius is the identity on GF(3)
      if ((p_ - 1) % 3 != 0) {
        // cubing is a bijection; invert the exponent
        std::uint64_t d = 0, m = p_ - 1;
        for (std::uint64_t k = 0; k < 3; ++k)
          if ((1 + k * m) % 3 == 0) { d = (1 + k * m) / 3; break; }
        return Scalar(self, Scalar::ModRep{mod_pow(x, d, p_)});
      }
      if (mod_pow(x, (p_ - 1) / 3, p_) != 1) return std::nullopt;
      for (std::uint64_t r = 1; r < p_; ++r)
        if (mod_pow(r, 3, p_) == x) return Scalar(self, Scalar::ModRep{r});
      return std::nullopt;
    }
    case FieldKind::rat_fun: {
      const auto& f = std::get<Scalar::FracRep>(a.rep());
      // a = num/den = (num * den^2) / den^3
      Poly h = up_mul(f.num, up_mul(f.den, f.den));
      std::optional<Poly> hr = char_ == 3 ? up_cube_root_char3(h, base_.get())
                                          : up_cube_root_generic(h, base_.get());
      if (!hr) return std::nullopt;
      return Scalar(self, frac_normalize(std::move(*hr), f.den, base_.get()));
    }
    case FieldKind::cubic_ext: {
      // y = y0 + y1 c + y2 c^2 has y^3 = y0^3 + y1^3 alpha + y2^3 alpha^2
      // (char 3 only); so cubes lie in the base and split along 1, alpha,
      // alpha^2 with cube coefficients.
      if (char_ != 3) {
        if (is_finite()) {
          std::uint64_t n = size();
          for (std::uint64_t i = 0; i < n; ++i) {
            Scalar y = element_at(i);
            if (eq(mul(mul(y, y), y), a)) return y;
          }
          return std::nullopt;
        }
        fail(errc::unsupported_field, "cube roots in this extension are not supported");
      }
      Scalar a0 = base_->zero();
      if (!in_base(a, &a0)) return std::nullopt;
      const Scalar& al = c0_;
      if (base_->eq(a0, al)) return generator();
      Scalar al2 = base_->mul(al, al);
      if (base_->eq(a0, al2)) {
        Scalar g = generator();
        return mul(g, g);
      }
      if (auto r0 = base_->cube_root(a0)) return embed(*r0);
      if (base_->kind() != FieldKind::rat_fun || base_->characteristic() != 3)
        return std::nullopt;
      // Solve a0 = y0^3 + y1^3 alpha + y2^3 alpha^2 over the base field
      // GF(3)(t). Split every element z as z = z_0 + z_1 t + z_2 t^2 with
      // z_i in the subfield of cubes, then solve the 3x3 system; Gaussian
      // elimination stays inside that subfield.
      auto split3 = [&](const Scalar& z) -> std::array<Scalar, 3> {
        const auto& fr = std::get<Scalar::FracRep>(z.rep());
        const Field* bb = base_->base().get();  // GF(3)
        Poly h = up_mul(fr.num, up_mul(fr.den, fr.den));
        Poly den3 = up_mul(fr.den, up_mul(fr.den, fr.den));
        std::array<Poly, 3> parts;
        for (size_t i = 0; i < h.size(); ++i) {
          if (h[i].is_zero()) continue;
          auto& part = parts[i % 3];
          if (part.size() <= i / 3) part.resize(i / 3 + 1, bb->zero());
          part[i / 3] = h[i];
        }
        std::array<Scalar, 3> out;
        for (int i = 0; i < 3; ++i) {
          Poly expanded;  // part(t^3)
          for (size_t j = 0; j < parts[i].size(); ++j) {
            if (parts[i][j].is_zero()) continue;
            if (expanded.size() <= 3 * j) expanded.resize(3 * j + 1, bb->zero());
            expanded[3 * j] = parts[i][j];
          }
          out[i] = Scalar(base_, frac_normalize(std::move(expanded), den3, bb));
        }
        return out;
      };
      std::array<Scalar, 3> rhs = split3(a0);
      std::array<std::array<Scalar, 3>, 3> m;
      Scalar pw = base_->one();
      for (int j = 0; j < 3; ++j) {  // columns: 1, alpha, alpha^2
        auto col = split3(pw);
        for (int i = 0; i < 3; ++i) m[i][j] = col[i];
        pw = base_->mul(pw, al);
      }
      for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int row = col; row < 3; ++row)
          if (!m[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Scalar pi = base_->inv(m[col][col]);
        for (int j = 0; j < 3; ++j) m[col][j] = base_->mul(m[col][j], pi);
        rhs[col] = base_->mul(rhs[col], pi);
        for (int row = 0; row < 3; ++row) {
          if (row == col || m[row][col].is_zero()) continue;
          Scalar fct = m[row][col];
          for (int j = 0; j < 3; ++j) m[row][j] = base_->sub(m[row][j], base_->mul(fct, m[col][j]));
          rhs[row] = base_->sub(rhs[row], base_->mul(fct, rhs[col]));
        }
      }
      std::vector<Scalar> yc;
      for (int i = 0; i < 3; ++i) {
        auto yi = base_->cube_root(rhs[i]);
        if (!yi) return std::nullopt;
        yc.push_back(*yi);
      }
      Scalar y(self, Scalar::ExtRep{std::move(yc)});
      if (!eq(mul(mul(y, y), y), a)) return std::nullopt;
      return y;
    }
    case FieldKind::quad_ext: {
      if (is_finite()) {
        std::uint64_t n = size();
        for (std::uint64_t i = 0; i < n; ++i) {
          Scalar y = element_at(i);
          if (eq(mul(mul(y, y), y), a)) return y;
        }
        return std::nullopt;
      }
      fail(errc::unsupported_field, "cube roots in this extension are not supported");
    }
  }
  return std::nullopt;
}

std::optional<Scalar> Field::omega_root() const {
  if (char_ == 3) return std::nullopt;  // x^2+x+1 = (x-1)^2 in char 3
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::rationals:
      return std::nullopt;
    case FieldKind::prime: {
      for (std::uint64_t r = 0; r < p_; ++r)
        if ((r * r + r + 1) % p_ == 0) return Scalar(self, Scalar::ModRep{r});
      return std::nullopt;
    }
    case FieldKind::quad_ext: {
      if (base_->eq(c0_, base_->one()) && base_->eq(c1_, base_->one())) return generator();
      if (is_finite()) {
        std::uint64_t n = size();
        for (std::uint64_t i = 0; i < n; ++i) {
          Scalar x = element_at(i);
          if ((mul(x, x) + x + one()).is_zero()) return x;
        }
        return std::nullopt;
      }
      if (base_->kind() == FieldKind::rationals) {
        // omega = a + b w exists iff -3/disc is a rational square
        Scalar disc = base_->sub(base_->mul(c1_, c1_), base_->mul(base_->from_int(4), c0_));
        Scalar target = base_->div(base_->from_int(-3), disc);
        const mpq_class& t = std::get<Scalar::RatRep>(target.rep()).v;
        if (sgn(t) < 0 || !mpz_perfect_square_p(t.get_num_mpz_t()) ||
            !mpz_perfect_square_p(t.get_den_mpz_t()))
          return std::nullopt;
        mpz_class bn, bd;
        mpz_sqrt(bn.get_mpz_t(), t.get_num_mpz_t());
        mpz_sqrt(bd.get_mpz_t(), t.get_den_mpz_t());
        mpq_class bq(bn, bd);
        bq.canonicalize();
        Scalar b(base_, Scalar::RatRep{bq});
        Scalar a = base_->div(base_->sub(base_->mul(b, c1_), base_->one()), base_->from_int(2));
        Scalar w(self, Scalar::ExtRep{{a, b}});
        if ((mul(w, w) + w + one()).is_zero()) return w;
        return std::nullopt;
      }
      fail(errc::unsupported_field, "omega search over this base is not supported");
    }
    case FieldKind::cubic_ext:
      // an omega in a degree-3 extension would generate a degree-2 subfield
      if (auto r = base_->omega_root()) return embed(*r);
      return std::nullopt;
    case FieldKind::rat_fun:
      // roots of x^2+x+1 in F(t) are constants
      if (auto r = base_->omega_root()) return embed(*r);
      return std::nullopt;
  }
  return std::nullopt;
}

std::pair<FieldPtr, Scalar> adjoin_omega(const FieldPtr& f) {
  if (f->characteristic() == 3)
    fail(errc::char_three, "x^2+x+1 degenerates to (x-1)^2 in characteristic 3");
  if (auto r = f->omega_root()) return {f, *r};
  FieldPtr ext = Field::quadratic_ext(f, f->one(), f->one(), "w");
  return {ext, ext->generator()};
}

}  // namespace compalg
