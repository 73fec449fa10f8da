#ifndef COMPALG_ERRORS_HPP
#define COMPALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace compalg {

// Error codes shared by the C++ exceptions and the C API.
enum class errc : int {
  ok = 0,
  // scalars
  non_prime_modulus = 10,
  reducible_extension = 11,
  char_three = 12,
  division_by_zero = 13,
  mixed_fields = 14,
  unsupported_field = 15,
  parse_error = 16,
  // algebra_core
  mixed_algebras = 20,
  no_unit = 21,
  no_norm = 22,
  mode_unavailable = 23,
  isotropic_base_point = 24,
  singular_multiplication = 25,
  bad_dimension = 26,
  // hurwitz
  degenerate_parameter = 30,
  zero_parameter = 31,
  not_eight_dimensional = 32,
  no_isotropic_found = 33,
  not_hurwitz = 34,
  char_two_unsupported = 35,
  infinite_field_unsupported = 36,
  isotropic_quaternion = 37,
  // symcomp
  no_omega = 40,
  omega_present = 41,
  not_order_three = 42,
  not_automorphism = 43,
  not_char_three = 44,
  closure_not_eight_dimensional = 45,
  zero_lambda = 46,
  cube_scalar = 47,
  not_split_cayley = 48,
  // triality
  char_two = 50,
  wrong_dimension = 51,
  not_skew = 52,
  no_solution = 53,
  not_isometry = 54,
  // magic square
  bad_characteristic = 60,
  not_symmetric_composition = 61,
  // io / cli
  schema_violation = 70,
  usage = 71,
  internal = 99,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::ok: return "ok";
    case errc::non_prime_modulus: return "NonPrimeModulus";
    case errc::reducible_extension: return "ReducibleExtension";
    case errc::char_three: return "CharThree";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_fields: return "MixedFields";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::parse_error: return "ParseError";
    case errc::mixed_algebras: return "MixedAlgebras";
    case errc::no_unit: return "NoUnit";
    case errc::no_norm: return "NoNorm";
    case errc::mode_unavailable: return "ModeUnavailable";
    case errc::isotropic_base_point: return "IsotropicBasePoint";
    case errc::singular_multiplication: return "SingularMultiplication";
    case errc::bad_dimension: return "BadDimension";
    case errc::degenerate_parameter: return "DegenerateParameter";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::not_eight_dimensional: return "NotEightDimensional";
    case errc::no_isotropic_found: return "NoIsotropicFound";
    case errc::not_hurwitz: return "NotHurwitz";
    case errc::char_two_unsupported: return "CharTwoUnsupported";
    case errc::infinite_field_unsupported: return "InfiniteFieldUnsupported";
    case errc::isotropic_quaternion: return "IsotropicQuaternion";
    case errc::no_omega: return "NoOmega";
    case errc::omega_present: return "OmegaPresent";
    case errc::not_order_three: return "NotOrderThree";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::not_char_three: return "NotCharThree";
    case errc::closure_not_eight_dimensional: return "ClosureNotEightDimensional";
    case errc::zero_lambda: return "ZeroLambda";
    case errc::cube_scalar: return "CubeScalar";
    case errc::not_split_cayley: return "NotSplitCayley";
    case errc::char_two: return "CharTwo";
    case errc::wrong_dimension: return "WrongDimension";
    case errc::not_skew: return "NotSkew";
    case errc::no_solution: return "NoSolution";
    case errc::not_isometry: return "NotIsometry";
    case errc::bad_characteristic: return "BadCharacteristic";
    case errc::not_symmetric_composition: return "NotSymmetricComposition";
    case errc::schema_violation: return "SchemaViolation";
    case errc::usage: return "Usage";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace compalg

#endif
