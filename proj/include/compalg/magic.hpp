#ifndef COMPALG_MAGIC_HPP
#define COMPALG_MAGIC_HPP

#include <array>

#include "compalg/triality.hpp"

namespace compalg {

// Anticommutative algebra by structure constants, stored on basis pairs
// i < j only so that [x,x] = 0 holds by construction. Basis is grouped
// into named sectors (tri(S), tri(S'), iota_0..2 for the magic square).
class LieAlgebra {
 public:
  using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

  static LieAlgebra make(FieldPtr f, std::vector<std::string> labels,
                         std::vector<std::pair<std::string, std::size_t>> sectors,
                         const std::vector<TensorEntry>& entries);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<std::string, std::size_t>>& sectors() const { return sectors_; }

  // stored upper rows (i < j); empty row for i >= j
  const SparseVec& upper(std::size_t i, std::size_t j) const { return rows_[i * dim_ + j]; }
  std::vector<TensorEntry> tensor_entries() const;

  // coefficient of e_k in [e_i, e_j], honoring antisymmetry
  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;
  Vec bracket(const Vec& x, const Vec& y) const;

 private:
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::size_t>> sectors_;
  std::vector<SparseVec> rows_;
};

enum class JacobiMode { full, sample };

struct JacobiReport {
  bool pass = true;
  JacobiMode mode = JacobiMode::full;
  std::uint64_t tested = 0;
  bool has_witness = false;
  std::array<std::size_t, 3> witness{0, 0, 0};  // lexicographically first
};

JacobiReport jacobi_check(const LieAlgebra& l, JacobiMode mode,
                          std::uint64_t sample_count = 1000000, std::uint64_t seed = 42,
                          unsigned jobs = 1);

struct LieInvariants {
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  std::size_t killing_rank = 0;
};

LieInvariants lie_invariants(const LieAlgebra& l);

// A symmetric composition algebra with its triality data: the canonical
// basis of tri(S) (full constraint solution space) and the coordinates of
// theta^i(t_{e_x,e_y}) in that basis.
struct PreparedSymComp {
  AlgebraPtr s;
  std::vector<TrialityTriple> tri;
  // coords[shift][x*d + y] for x < y; antisymmetric in (x, y)
  std::array<std::vector<Vec>, 3> t_coords;
};

PreparedSymComp prepare_symcomp(const AlgebraPtr& s);

// Freudenthal construction g(S,S') = tri(S) + tri(S') + 3 copies of S x S'.
LieAlgebra build_g(const PreparedSymComp& a, const PreparedSymComp& b);
LieAlgebra build_g(const AlgebraPtr& a, const AlgebraPtr& b);

enum class MagicSlot { s1, s2, s4, s8_para, s8_okubo };
AlgebraPtr magic_slot_algebra(const FieldPtr& f, MagicSlot slot);

enum class MagicFlavor { para, okubo_mix };

struct MagicSquare {
  std::array<std::array<std::size_t, 4>, 4> dims{};
};

MagicSquare magic_table(const FieldPtr& f, MagicFlavor flavor);

}  // namespace compalg

#endif
