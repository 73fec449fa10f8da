#ifndef COMPALG_QUADFORM_HPP
#define COMPALG_QUADFORM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "compalg/linalg.hpp"

namespace compalg {

// Canonical deterministic vector enumeration, shared by every search that
// must be reproducible. Finite fields: projective representatives (first
// nonzero coordinate = 1) in lexicographic order. Rationals: boxes of
// growing coordinate height with value order 0, 1, -1, 2, -2, ...
// The visitor returns true to stop. Returns the number of vectors visited;
// *completed is set when the enumeration is finite and ran to the end.
std::uint64_t enumerate_canonical_vectors(const FieldPtr& f, std::size_t dim,
                                          std::uint64_t budget,
                                          const std::function<bool(const Vec&)>& visit,
                                          bool* completed);

// Characteristic-2-safe quadratic form, stored by its upper-triangular
// coefficient table: n(sum x_i e_i) = sum_{i<=j} q_ij x_i x_j. Gram
// matrices are never used as the primary representation because they lose
// information in characteristic 2.
class QuadraticForm {
 public:
  using Coeffs = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  enum class Kind { nondegenerate, nonsingular_char2, singular };
  struct Classification {
    Kind kind;
    std::vector<Vec> radical;  // canonical basis of the polar radical
  };
  struct IsotropicSearch {
    std::optional<Vec> vec;  // nonzero with n(v) = 0
    bool conclusive;         // enumeration completed (finite fields)
    std::uint64_t tested;
  };

  QuadraticForm(FieldPtr field, std::size_t dim);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Coeffs& coeffs() const { return coeffs_; }

  void set_coeff(std::size_t i, std::size_t j, const Scalar& c);  // i <= j
  Scalar coeff(std::size_t i, std::size_t j) const;

  Scalar eval(const Vec& x) const;
  Scalar polar(const Vec& x, const Vec& y) const;
  Mat polar_matrix() const;

  Classification classify() const;
  IsotropicSearch find_isotropic(std::uint64_t budget) const;

  // Form n'(x) = n(P x), i.e. the table conjugated by a basis change.
  QuadraticForm pulled_back(const Mat& p) const;

  bool operator==(const QuadraticForm& o) const;
  bool operator!=(const QuadraticForm& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  std::size_t dim_;
  Coeffs coeffs_;
};

}  // namespace compalg

#endif
