#ifndef COMPALG_TRIALITY_HPP
#define COMPALG_TRIALITY_HPP

#include "compalg/algebra.hpp"

namespace compalg {

// An element of the triality Lie algebra: three operators, each skew with
// respect to the polar form, with d0(x*y) = d1(x)*y + x*d2(y). Produced by
// the constructors below, which verify both conditions.
struct TrialityTriple {
  Mat d0, d1, d2;
  Vec flattened() const;
  static TrialityTriple from_flat(const FieldPtr& f, std::size_t d, const Vec& flat);
};

// sigma_{x,y} = n(x,.)y - n(y,.)x
Mat sigma_op(const AlgebraPtr& s, const Vec& x, const Vec& y);

bool is_polar_skew(const AlgebraPtr& s, const Mat& d);
// d0(x*y) = d1(x)*y + x*d2(y) on all basis pairs
bool is_related_derivation(const AlgebraPtr& s, const TrialityTriple& t);

// Basis of the orthogonal Lie algebra so(S, n) generated from the
// sigma_{e_i,e_j}, rank-reduced deterministically. Dimension 8 and
// characteristic != 2 only.
std::vector<Mat> so_basis(const AlgebraPtr& s);

// t_{x,y} = (sigma_{x,y}, n(x,y)/2 id - R_x L_y, n(x,y)/2 id - L_x R_y),
// verified against the TrialityTriple invariants.
TrialityTriple t_triple(const AlgebraPtr& s, const Vec& x, const Vec& y);

// Span route: rank-reduction of the t_{e_i,e_j}; checks dimension 28 and
// closure under the componentwise bracket. Dimension-8 algebras only.
std::vector<TrialityTriple> tri_basis(const AlgebraPtr& s);

// Constraint route: the full solution space of the skewness + relation
// conditions. Works in any dimension; canonical RREF basis.
std::vector<TrialityTriple> tri_basis_constraints(const AlgebraPtr& s);

// The unique (d0, d1, d2) in tri(S) over a given skew d0.
TrialityTriple pi0_inverse(const AlgebraPtr& s, const Mat& d0);

// theta: (d0,d1,d2) -> (d2,d0,d1); the result is verified against the
// TrialityTriple invariants.
TrialityTriple theta(const AlgebraPtr& s, const TrialityTriple& t);

// f0(x*y) = f1(x)*f2(y) on all basis pairs, after checking each f_i is an
// invertible isometry of the norm.
bool check_related_isometry_triple(const AlgebraPtr& s, const Mat& f0, const Mat& f1,
                                   const Mat& f2);

// Dimension of the theta-fixed subalgebra of the given tri basis.
std::size_t theta_fixed_dimension(const AlgebraPtr& s,
                                  const std::vector<TrialityTriple>& basis);

}  // namespace compalg

#endif
