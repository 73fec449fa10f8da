#ifndef COMPALG_HURWITZ_HPP
#define COMPALG_HURWITZ_HPP

#include "compalg/algebra.hpp"

namespace compalg {

// The one-dimensional Hurwitz algebra F with norm x^2.
AlgebraPtr ground(const FieldPtr& f);

// K = F1 + Fv with v^2 = v + mu, 4mu + 1 != 0; norm eps^2 - mu delta^2 +
// eps delta (the cross term forced by Cayley-Hamilton with tr(v) = 1).
AlgebraPtr quadratic_etale(const FieldPtr& f, const Scalar& mu);

// Cayley-Dickson double CD(Q, alpha): (a+bu)(c+du) = (ac + alpha conj(d)b)
// + (da + b conj(c))u, n(a+bu) = n(a) - alpha n(b).
AlgebraPtr cayley_dickson(const AlgebraPtr& q, const Scalar& alpha);

// Split Cayley algebra on the basis (e1,e2,u1,u2,u3,v1,v2,v3).
AlgebraPtr split_cayley(const FieldPtr& f);

// CD(CD(F,-1),-1) relabeled to (1,i,j,k).
AlgebraPtr quaternions(const FieldPtr& f);

// Records a verified isomorphism onto the split Cayley table: the columns
// of matrix are the new basis in source coordinates, and transporting the
// source tensor through it reproduces the target tensor exactly.
struct BasisChange {
  AlgebraPtr source;
  AlgebraPtr target;
  Mat matrix;
};

inline constexpr std::uint64_t kIsotropicBudget = 200000;

// The split-basis algorithm: finds an isotropic idempotent e1 = a b, the
// Peirce spaces U and V, and a basis with n(u1 u2, u3) = 1 whose table is
// the split Cayley table.
BasisChange split_basis(const AlgebraPtr& c, std::uint64_t budget = kIsotropicBudget);

// Isomorphism of Hurwitz algebras over a common finite field of odd
// characteristic, decided by dimension and isotropy of the norms.
bool hurwitz_isomorphic_gf(const AlgebraPtr& a, const AlgebraPtr& b);

// Matrix of x -> q x q^{-1} on the trace-zero basis (i,j,k).
Mat rotation_so3(const Element& q);
// Matrix of x -> p x q^{-1} on the basis (1,i,j,k).
Mat rotation_so4(const Element& p, const Element& q);

}  // namespace compalg

#endif
