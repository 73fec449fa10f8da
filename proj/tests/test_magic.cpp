#include <doctest.h>

#include "compalg/magic.hpp"
#include "compalg/symcomp.hpp"

using namespace compalg;

namespace {

LieAlgebra tiny_abelian(const FieldPtr& f) {
  return LieAlgebra::make(f, {"a", "b"}, {{"all", 2}}, {});
}

}  // namespace

TEST_CASE("g(S1,S1) is the three-dimensional cross-product algebra") {
  auto f = Field::rationals();
  auto g = build_g(magic_slot_algebra(f, MagicSlot::s1), magic_slot_algebra(f, MagicSlot::s1));
  CHECK(g.dim() == 3);
  // [i0, i1] = i2 cyclically
  CHECK(g.coeff(0, 1, 2).is_one());
  CHECK(g.coeff(1, 2, 0).is_one());
  CHECK(g.coeff(2, 0, 1).is_one());
  auto rep = jacobi_check(g, JacobiMode::full);
  CHECK(rep.pass);
  CHECK(rep.tested == 1);
  auto inv = lie_invariants(g);
  CHECK(inv.center_dim == 0);
  CHECK(inv.derived_dim == 3);
  CHECK(inv.killing_rank == 3);
}

TEST_CASE("small magic square entries have the right dimensions") {
  auto f = Field::rationals();
  auto s1 = prepare_symcomp(magic_slot_algebra(f, MagicSlot::s1));
  auto s2 = prepare_symcomp(magic_slot_algebra(f, MagicSlot::s2));
  auto s4 = prepare_symcomp(magic_slot_algebra(f, MagicSlot::s4));
  CHECK(s1.tri.empty());
  CHECK(s2.tri.size() == 2);
  CHECK(s4.tri.size() == 9);
  CHECK(build_g(s1, s2).dim() == 8);
  CHECK(build_g(s2, s2).dim() == 16);
  CHECK(build_g(s2, s4).dim() == 35);
  CHECK(build_g(s4, s4).dim() == 66);
  SUBCASE("A2 + A2 entry: full Jacobi and invariants") {
    auto g = build_g(s2, s2);
    CHECK(jacobi_check(g, JacobiMode::full).pass);
    auto inv = lie_invariants(g);
    CHECK(inv.center_dim == 0);
    CHECK(inv.derived_dim == 16);
    CHECK(inv.killing_rank == 16);
  }
  SUBCASE("C3 entry: full Jacobi") {
    CHECK(jacobi_check(build_g(s1, s4), JacobiMode::full).pass);
  }
}

TEST_CASE("F4 entry: dimension 52, full Jacobi, mutation sensitivity") {
  auto f = Field::rationals();
  auto s1 = prepare_symcomp(magic_slot_algebra(f, MagicSlot::s1));
  auto s8 = prepare_symcomp(magic_slot_algebra(f, MagicSlot::s8_para));
  auto g = build_g(s1, s8);
  CHECK(g.dim() == 52);
  auto rep = jacobi_check(g, JacobiMode::full, 0, 0, 2);
  CHECK(rep.pass);
  CHECK(rep.tested == 52ull * 51 * 50 / 6);
  SUBCASE("one flipped sign breaks the Jacobi identity") {
    auto entries = g.tensor_entries();
    // flip the first stored iota-iota sign
    std::size_t target = 0;
    for (std::size_t t = 0; t < entries.size(); ++t)
      if (entries[t].i >= 28 && entries[t].k >= 28) {
        target = t;
        break;
      }
    entries[target].c = -entries[target].c;
    auto mutated = LieAlgebra::make(g.field(), g.labels(), g.sectors(), entries);
    auto bad = jacobi_check(mutated, JacobiMode::full, 0, 0, 2);
    CHECK_FALSE(bad.pass);
    CHECK(bad.has_witness);
  }
}

TEST_CASE("any Okubo algebra in a dim-8 slot gives the same dimensions") {
  auto f7 = Field::prime(7);
  auto sl3 = prepare_symcomp(okubo_sl3(f7, f7->from_int(2)));
  auto s1 = prepare_symcomp(magic_slot_algebra(f7, MagicSlot::s1));
  auto s2 = prepare_symcomp(magic_slot_algebra(f7, MagicSlot::s2));
  CHECK(build_g(s1, sl3).dim() == 52);
  CHECK(build_g(s2, sl3).dim() == 78);
  CHECK(build_g(sl3, sl3).dim() == 248);
  CHECK(jacobi_check(build_g(s1, sl3), JacobiMode::full, 0, 0, 2).pass);
}

TEST_CASE("sampled Jacobi is deterministic and worker-count independent") {
  auto f = Field::rationals();
  auto s2 = prepare_symcomp(magic_slot_algebra(f, MagicSlot::s2));
  auto g = build_g(s2, s2);
  auto r1 = jacobi_check(g, JacobiMode::sample, 5000, 123, 1);
  auto r2 = jacobi_check(g, JacobiMode::sample, 5000, 123, 2);
  CHECK(r1.pass);
  CHECK(r2.pass);
  CHECK(r1.tested == 5000);
  CHECK(r2.tested == 5000);
}

TEST_CASE("abelian Lie algebra invariants") {
  for (const auto& f : {Field::rationals(), Field::prime(7)}) {
    auto g = tiny_abelian(f);
    auto inv = lie_invariants(g);
    CHECK(inv.center_dim == 2);
    CHECK(inv.derived_dim == 0);
    CHECK(inv.killing_rank == 0);
    CHECK(jacobi_check(g, JacobiMode::full).pass);
  }
}

TEST_CASE("invariants over a prime field") {
  auto f7 = Field::prime(7);
  auto g = build_g(magic_slot_algebra(f7, MagicSlot::s2), magic_slot_algebra(f7, MagicSlot::s2));
  REQUIRE(g.dim() == 16);
  CHECK(jacobi_check(g, JacobiMode::full).pass);
  auto inv = lie_invariants(g);
  CHECK(inv.center_dim == 0);
  CHECK(inv.derived_dim == 16);
  CHECK(inv.killing_rank == 16);
}

TEST_CASE("storage validation") {
  auto f = Field::rationals();
  std::vector<TensorEntry> bad = {{1, 0, 0, f->one()}};
  CHECK_THROWS_AS(LieAlgebra::make(f, {"a", "b"}, {}, bad), error);
}

TEST_CASE("theta-equivariance: cyclic sector relabeling is an automorphism") {
  auto f = Field::rationals();
  for (auto slot : {MagicSlot::s2, MagicSlot::s4}) {
    auto pa = prepare_symcomp(magic_slot_algebra(f, MagicSlot::s1));
    auto pb = prepare_symcomp(magic_slot_algebra(f, slot));
    auto g = build_g(pa, pb);
    std::size_t ma = pa.tri.size(), mb = pb.tri.size();
    std::size_t da = pa.s->dim(), db = pb.s->dim(), dd = da * db;
    std::size_t n = g.dim();
    // coordinates of theta on each tri basis
    auto theta_matrix = [&](const PreparedSymComp& pc) {
      std::size_t m = pc.tri.size();
      RowReducer red(f, 3 * pc.s->dim() * pc.s->dim());
      for (const auto& t : pc.tri) red.add(t.flattened());
      Mat tm(f, m, m);
      for (std::size_t p = 0; p < m; ++p) {
        Vec flat = theta(pc.s, pc.tri[p]).flattened();
        REQUIRE(red.contains(flat));
        Vec coords = red.coords_in_basis(flat);
        for (std::size_t r = 0; r < m; ++r) tm.at(r, p) = coords[r];
      }
      return tm;
    };
    Mat ta = theta_matrix(pa), tb = theta_matrix(pb);
    Mat phi(f, n, n);
    for (std::size_t p = 0; p < ma; ++p)
      for (std::size_t r = 0; r < ma; ++r) phi.at(r, p) = ta.at(r, p);
    for (std::size_t p = 0; p < mb; ++p)
      for (std::size_t r = 0; r < mb; ++r) phi.at(ma + r, ma + p) = tb.at(r, p);
    for (unsigned i = 0; i < 3; ++i)
      for (std::size_t e = 0; e < dd; ++e)
        phi.at(ma + mb + ((i + 1) % 3) * dd + e, ma + mb + i * dd + e) = f->one();
    // automorphism check on all basis brackets: phi([e_i,e_j]) = [phi e_i, phi e_j]
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec ei = zero_vec(f, n), ej = zero_vec(f, n);
        ei[i] = f->one();
        ej[j] = f->one();
        Vec lhs = phi.apply(g.bracket(ei, ej));
        Vec rhs = g.bracket(phi.col(i), phi.col(j));
        CHECK(eq_vec(lhs, rhs));
      }
  }
}
