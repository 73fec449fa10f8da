#ifndef COMPALG_ALGEBRA_HPP
#define COMPALG_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compalg/linalg.hpp"
#include "compalg/quadform.hpp"

namespace compalg {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct TensorEntry {
  std::size_t i, j, k;
  Scalar c;
};

// Finite-dimensional algebra given by sparse structure constants
// e_i e_j = sum_k c_ijk e_k, with an optional two-sided unit and an
// optional attached quadratic form (the candidate norm). Immutable after
// construction; safe to share across threads.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by k

  static AlgebraPtr make(FieldPtr field, std::vector<std::string> labels,
                         const std::vector<TensorEntry>& tensor, std::optional<Vec> unit,
                         std::optional<QuadraticForm> norm);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseRow& entry(std::size_t i, std::size_t j) const { return tensor_[i * dim_ + j]; }
  std::vector<TensorEntry> tensor_entries() const;  // sorted (i, j, k)
  const std::optional<Vec>& unit() const { return unit_; }
  const std::optional<QuadraticForm>& norm() const { return norm_; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis_vec(std::size_t i) const;
  Mat left_mult(const Vec& x) const;   // L_x : y -> x y
  Mat right_mult(const Vec& x) const;  // R_x : y -> y x

  Scalar norm_of(const Vec& x) const;               // throws NoNorm
  Scalar polar_of(const Vec& x, const Vec& y) const;
  Vec conj(const Vec& x) const;  // n(1,x) 1 - x; throws NoUnit/NoNorm
  Mat conj_matrix() const;

  bool same_tensor(const Algebra& o) const;

  AlgebraPtr with_norm(QuadraticForm n) const;
  AlgebraPtr with_unit(Vec u) const;

 private:
  Algebra() = default;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseRow> tensor_;
  std::optional<Vec> unit_;
  std::optional<QuadraticForm> norm_;
};

struct Element {
  AlgebraPtr alg;
  Vec coords;
};

Element multiply(const Element& x, const Element& y);  // MixedAlgebras checked
std::optional<Element> find_unit(const AlgebraPtr& a);
Element conjugate(const Element& x);

// The same algebra on the basis given by the columns of m (new basis in old
// coordinates); unit and norm are carried along.
AlgebraPtr transported(const AlgebraPtr& a, const Mat& m);
AlgebraPtr relabeled(const AlgebraPtr& a, std::vector<std::string> labels);

enum class VerifyMode { symbolic, exhaustive };

struct CheckResult {
  bool pass = true;
  std::string witness;  // empty when passing
};

struct CompositionReport {
  bool pass = false;
  VerifyMode mode = VerifyMode::symbolic;
  std::string witness;
  QuadraticForm::Kind norm_kind = QuadraticForm::Kind::singular;
  std::size_t radical_dim = 0;
};

struct HurwitzReport {
  CheckResult involution;
  CheckResult antiautomorphism;
  CheckResult cayley_hamilton;
  CheckResult left_alternative;
  CheckResult right_alternative;
  CheckResult adjoint_left;
  CheckResult adjoint_right;
  bool pass() const {
    return involution.pass && antiautomorphism.pass && cayley_hamilton.pass &&
           left_alternative.pass && right_alternative.pass && adjoint_left.pass &&
           adjoint_right.pass;
  }
  std::string first_failure() const;
};

struct SymmetricReport {
  CheckResult norm_associativity;   // n(x*y,z) = n(x,y*z) on basis triples
  CheckResult left_exchange;        // (x*y)*x = n(x)y, symbolic
  CheckResult right_exchange;       // x*(y*x) = n(x)y, symbolic
  bool pass() const {
    return norm_associativity.pass && left_exchange.pass && right_exchange.pass;
  }
};

enum class Law { associative, commutative, flexible, left_alternative, right_alternative };

struct LawReport {
  Law law = Law::associative;
  CheckResult result;
};

// Cap on |F|^dim for exhaustive verification.
inline constexpr std::uint64_t kExhaustiveCap = 4096;

CompositionReport verify_composition(const Algebra& a, VerifyMode mode,
                                     std::uint64_t cap = kExhaustiveCap);
HurwitzReport verify_hurwitz_properties(const Algebra& a);
SymmetricReport verify_symmetric(const Algebra& a, VerifyMode mode = VerifyMode::symbolic,
                                 std::uint64_t cap = kExhaustiveCap);
LawReport verify_law(const Algebra& a, Law law);

std::vector<Vec> commutative_center(const Algebra& a);

// Kaplansky's trick: turn a composition algebra into a unital one with the
// same norm. Symmetric algebras use x <> y = (a*x)*(y*a)/n(a) with unit
// a*a/n(a); otherwise x <> y = R_u^{-1}(x) L_u^{-1}(y) with u = a a / n(a).
AlgebraPtr kaplansky_unitalize(const AlgebraPtr& a, const Vec& base_point);

// Index bijection N x N -> N of the infinite-dimensional example.
std::uint64_t urbanik_wright_index(std::uint64_t n, std::uint64_t m);
std::pair<std::uint64_t, std::uint64_t> urbanik_wright_inverse(std::uint64_t k);

}  // namespace compalg

#endif
