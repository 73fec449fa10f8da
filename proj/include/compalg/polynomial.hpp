#ifndef COMPALG_POLYNOMIAL_HPP
#define COMPALG_POLYNOMIAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compalg/field.hpp"

namespace compalg {

// A monomial is the sorted list of its variable indices with multiplicity,
// e.g. x0^2*x3 = [0,0,3]. The empty list is the constant monomial.
using Monomial = std::vector<std::uint16_t>;

// Graded order: lower total degree first, then lexicographic on the index
// sequence. This is the canonical term order used for witnesses.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Sparse multivariate polynomial over an exact field. No zero coefficients
// are stored, so equality is structural.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialLess>;

  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  static Polynomial constant(const FieldPtr& f, const Scalar& c);
  static Polynomial variable(const FieldPtr& f, unsigned var);

  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // First surviving term in the canonical order, if any.
  std::optional<std::pair<Monomial, Scalar>> witness() const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Scalar& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str(const std::function<std::string(unsigned)>& var_name) const;
  static std::string monomial_str(const Monomial& m,
                                  const std::function<std::string(unsigned)>& var_name);

 private:
  FieldPtr field_;
  Terms terms_;
};

}  // namespace compalg

#endif
