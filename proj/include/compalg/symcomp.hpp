#ifndef COMPALG_SYMCOMP_HPP
#define COMPALG_SYMCOMP_HPP

#include "compalg/algebra.hpp"

namespace compalg {

// A verified algebra automorphism: multiplicative on basis pairs,
// invertible and norm-preserving (checked at construction).
struct AlgebraAutomorphism {
  AlgebraPtr algebra;
  Mat op;
};

AlgebraAutomorphism make_automorphism(const AlgebraPtr& a, Mat op);

// Para-Hurwitz twist x . y = conj(x) conj(y) of a Hurwitz algebra.
AlgebraPtr para(const AlgebraPtr& a);

// Order-3 automorphism e_i -> e_i, u_j -> w^{j-1} u_j, v_j -> w^{1-j} v_j
// of the split Cayley algebra (w a primitive cube root of unity).
AlgebraAutomorphism grading_automorphism(const AlgebraPtr& split_cayley_alg, const Scalar& omega);

// Order-3 automorphism e_i -> e_i, u_j -> u_{j+1}, v_j -> v_{j+1} (mod 3).
AlgebraAutomorphism cyclic_automorphism(const AlgebraPtr& split_cayley_alg);

// Petersson twist x * y = phi(conj(x)) phi^2(conj(y)).
AlgebraPtr petersson(const AlgebraPtr& c, const AlgebraAutomorphism& phi);

// Split Okubo algebra: the fixed multiplication table on the split Cayley
// basis, same norm, no unit.
AlgebraPtr split_okubo(const FieldPtr& f);

// Okubo algebra on trace-zero 3x3 matrices over F (char != 3, omega in F):
// x*y = w xy - w^2 yx - (w - w^2)/3 tr(xy) 1, norm s2(x).
AlgebraPtr okubo_sl3(const FieldPtr& f, const Scalar& omega);

// Okubo algebra for fields without omega: trace-zero J-antihermitian part
// of Mat3(F[w]) with the same formulas, an 8-dimensional F-space.
AlgebraPtr okubo_second_kind(const FieldPtr& f);

// Characteristic-3 twisted form O_{alpha,beta}: the F-span closure of
// alpha^{1/3} e1 and beta^{1/3} u1 inside the split Okubo algebra over the
// cube-root extension.
AlgebraPtr okubo_char3(const FieldPtr& f, const Scalar& alpha, const Scalar& beta);

// Two-dimensional characteristic-3 symmetric composition algebra
// u*u = v, u*v = v*u = u, v*v = lambda u - v, with the norm derived from
// the symmetric composition identity on the basis.
AlgebraPtr char3_twodim(const FieldPtr& f, const Scalar& lambda, bool require_non_cube = false);

struct RecoveredAlgebra {
  AlgebraPtr algebra;           // F1 + S with the recovered product
  bool associative;             // basis-triple associativity
  bool alternative;             // symbolic left+right alternativity
  bool cayley_hamilton_sampled; // s^3 + n(s) s lies in F1 on seeded samples
};

// Inverse of the Okubo construction: recovers the degree-3 algebra
// F1 + S with xy = w/(w^2-w) x*y + w^2/(w^2-w) y*x + 1/3 n(x,y) 1.
RecoveredAlgebra recover_associative(const AlgebraPtr& s, const Scalar& omega,
                                     std::uint64_t seed = 42, unsigned samples = 20);

}  // namespace compalg

#endif
