#ifndef COMPALG_FIELD_HPP
#define COMPALG_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "compalg/errors.hpp"

namespace compalg {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { rationals, prime, quad_ext, cubic_ext, rat_fun };

// Deterministic PRNG (splitmix64) used by every seeded test and sampler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform-ish value in [0, n); deterministic across platforms.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

// An element of an exact field. The representation is canonical, so
// equality is representational equality. A default-constructed Scalar is
// detached (no field) and only supports is_null().
class Scalar {
 public:
  struct RatRep {
    mpq_class v;
  };
  struct ModRep {
    std::uint64_t r;
  };
  struct ExtRep {
    std::vector<Scalar> c;  // coordinates over the base, length = degree
  };
  struct FracRep {
    std::vector<Scalar> num, den;  // dense univariate polys over the base
  };
  using Rep = std::variant<RatRep, ModRep, ExtRep, FracRep>;

  Scalar() = default;
  Scalar(FieldPtr f, Rep r) : field_(std::move(f)), rep_(std::move(r)) {}

  bool is_null() const { return field_ == nullptr; }
  const FieldPtr& field() const { return field_; }
  const Rep& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;
  Scalar inv() const;
  Scalar pow(long e) const;
  std::string str() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

 private:
  FieldPtr field_;
  Rep rep_;
};

// A field handle. Immutable after construction; safe to share across
// threads. Towers are built by the static constructors below; extension
// minimal polynomials are checked for irreducibility at construction.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  // F[w]/(w^2 + c1 w + c0)
  static FieldPtr quadratic_ext(FieldPtr base, const Scalar& c0, const Scalar& c1,
                                std::string symbol = "w");
  // F[c]/(c^3 - alpha)
  static FieldPtr cubic_radical_ext(FieldPtr base, const Scalar& alpha, std::string symbol = "c");
  static FieldPtr rational_functions(FieldPtr base, std::string var = "t");

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return char_; }
  const FieldPtr& base() const { return base_; }
  std::uint64_t modulus() const { return p_; }
  const std::string& symbol() const { return symbol_; }
  const Scalar& ext_c0() const { return c0_; }
  const Scalar& ext_c1() const { return c1_; }
  const Scalar& ext_alpha() const { return c0_; }
  unsigned degree_over_base() const;  // 1 for rationals/prime, 2/3 for exts

  bool same(const Field& o) const;
  bool is_finite() const;
  std::uint64_t size() const;  // finite fields only

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar generator() const;                    // w / c / t
  Scalar embed(const Scalar& base_elem) const; // base -> this
  // For extension/ratfun elements: coordinates over the base field
  // (degree-many for extensions). Throws for non-extension kinds.
  std::vector<Scalar> coords(const Scalar& x) const;
  // True when x lies in the image of embed(); writes the preimage.
  bool in_base(const Scalar& x, Scalar* base_out = nullptr) const;

  Scalar element_at(std::uint64_t index) const;  // finite enumeration
  Scalar random(Rng& rng) const;                 // small random element

  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& x) const;

  // arithmetic (operands must belong to this field)
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const;

  std::optional<Scalar> cube_root(const Scalar& a) const;
  bool is_cube(const Scalar& a) const { return cube_root(a).has_value(); }
  // Root of x^2+x+1, if one exists in this field.
  std::optional<Scalar> omega_root() const;

  // Throws MixedFields unless a belongs to this field.
  void check_mine(const Scalar& a) const;

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t char_ = 0;
  std::uint64_t p_ = 0;       // prime kind
  FieldPtr base_;             // extensions / ratfun
  Scalar c0_, c1_;            // quad: x^2+c1 x+c0; cubic: alpha in c0_
  std::string symbol_;
};

// Returns (K, omega) with omega^2+omega+1 = 0: K = F when the root already
// exists, otherwise the quadratic extension F[w]/(w^2+w+1).
std::pair<FieldPtr, Scalar> adjoin_omega(const FieldPtr& f);

}  // namespace compalg

#endif
