#include <doctest.h>

#include "compalg/hurwitz.hpp"
#include "compalg/symcomp.hpp"

using namespace compalg;

namespace {

Vec mulb(const AlgebraPtr& a, std::size_t i, std::size_t j) {
  return a->mul(a->basis_vec(i), a->basis_vec(j));
}

Vec unit_vec(const AlgebraPtr& a, std::size_t i, int sign) {
  Vec v = zero_vec(a->field(), a->dim());
  v[i] = sign >= 0 ? a->field()->one() : -a->field()->one();
  return v;
}

void check_okubo_flavour(const AlgebraPtr& s) {
  CHECK(verify_symmetric(*s).pass());
  CHECK(verify_composition(*s, VerifyMode::symbolic).pass);
  CHECK_FALSE(find_unit(s).has_value());
  CHECK(commutative_center(*s).empty());
}

}  // namespace

TEST_CASE("para-Hurwitz algebras") {
  auto f = Field::rationals();
  SUBCASE("para of the ground field is the ground field") {
    auto g = ground(f);
    CHECK(para(g)->same_tensor(*g));
  }
  SUBCASE("para-quaternions: i . j = k, and the para-unit") {
    auto h = quaternions(f);
    auto p = para(h);
    CHECK(eq_vec(mulb(p, 1, 2), unit_vec(p, 3, +1)));  // (-i)(-j) = ij = k
    CHECK(verify_symmetric(*p).pass());
    CHECK_FALSE(find_unit(p).has_value());
    // the para-unit 1 lies in the commutative center
    auto center = commutative_center(*p);
    REQUIRE(center.size() >= 1);
    RowReducer r(f, 4);
    for (const auto& v : center) r.add(v);
    CHECK(r.contains(p->basis_vec(0)));
  }
  SUBCASE("para of the split Cayley algebra is symmetric composition") {
    auto p = para(split_cayley(f));
    CHECK(verify_symmetric(*p).pass());
    CHECK(verify_composition(*p, VerifyMode::symbolic).pass);
    // the para-unit e1+e2 lies in the commutative center
    auto center = commutative_center(*p);
    REQUIRE_FALSE(center.empty());
    RowReducer red(f, 8);
    for (const auto& v : center) red.add(v);
    CHECK(red.contains(add(p->basis_vec(0), p->basis_vec(1))));
    // unital split Cayley itself is not symmetric
    auto rep = verify_symmetric(*split_cayley(f));
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.norm_associativity.pass);
    CHECK_FALSE(rep.norm_associativity.witness.empty());
  }
  SUBCASE("para needs a unit") {
    CHECK_THROWS_AS(para(split_okubo(f)), error);
  }
}

TEST_CASE("order-3 automorphisms of the split Cayley algebra") {
  SUBCASE("grading automorphism over GF(7), omega = 2") {
    auto f7 = Field::prime(7);
    auto c = split_cayley(f7);
    auto phi = grading_automorphism(c, f7->from_int(2));
    // u2 -> 2 u2, v2 -> 4 v2
    CHECK(phi.op.at(3, 3) == f7->from_int(2));
    CHECK(phi.op.at(6, 6) == f7->from_int(4));
    for (std::size_t fixed : {0u, 1u, 2u, 5u})
      CHECK(eq_vec(phi.op.col(fixed), c->basis_vec(fixed)));
    CHECK(phi.op * phi.op * phi.op == Mat::identity(f7, 8));
    CHECK_THROWS_AS(grading_automorphism(c, f7->from_int(3)), error);
  }
  SUBCASE("cyclic automorphism permutes u's and v's") {
    auto c = split_cayley(Field::rationals());
    auto phi = cyclic_automorphism(c);
    CHECK(eq_vec(phi.op.col(4), c->basis_vec(2)));  // u3 -> u1
    CHECK(eq_vec(phi.op.col(0), c->basis_vec(0)));  // e1 fixed
    Mat p3 = phi.op * phi.op * phi.op;
    CHECK(p3 == Mat::identity(c->field(), 8));
    CHECK(phi.op != Mat::identity(c->field(), 8));
  }
  SUBCASE("non-automorphisms are rejected") {
    auto c = split_cayley(Field::rationals());
    Mat bad = Mat::identity(c->field(), 8);
    bad.at(0, 1) = c->field()->one();
    CHECK_THROWS_AS(make_automorphism(c, bad), error);
  }
}

TEST_CASE("Petersson algebras") {
  auto f = Field::rationals();
  auto c = split_cayley(f);
  SUBCASE("identity automorphism gives the para-Hurwitz algebra") {
    auto id = make_automorphism(c, Mat::identity(f, 8));
    CHECK(petersson(c, id)->same_tensor(*para(c)));
  }
  SUBCASE("cyclic automorphism gives the split Okubo algebra bit-exactly") {
    auto p = petersson(c, cyclic_automorphism(c));
    CHECK(p->same_tensor(*split_okubo(f)));
  }
  SUBCASE("grading automorphism also produces an Okubo-type algebra") {
    auto f7 = Field::prime(7);
    auto c7 = split_cayley(f7);
    auto p = petersson(c7, grading_automorphism(c7, f7->from_int(2)));
    CHECK(verify_symmetric(*p).pass());
    CHECK(verify_composition(*p, VerifyMode::symbolic).pass);
    CHECK_FALSE(find_unit(p).has_value());
    CHECK(commutative_center(*p).empty());
  }
  SUBCASE("order-2 automorphisms are rejected") {
    // exchange automorphism e1 <-> e2, u_j <-> v_j has order 2
    Mat swap(f, 8, 8);
    swap.at(1, 0) = swap.at(0, 1) = f->one();
    for (std::size_t j = 2; j < 5; ++j) {
      swap.at(j + 3, j) = f->one();
      swap.at(j, j + 3) = f->one();
    }
    auto phi = make_automorphism(c, swap);
    CHECK_THROWS_AS(petersson(c, phi), error);
    try {
      petersson(c, phi);
    } catch (const error& e) {
      CHECK(e.code() == errc::not_order_three);
    }
  }
}

TEST_CASE("split Okubo golden table") {
  auto f = Field::rationals();
  auto s = split_okubo(f);
  // e1*e1 = e2, u1*u1 = v1, u1*v3 = -e1, e1*u1 = 0, u1*e1 = -u2
  CHECK(eq_vec(mulb(s, 0, 0), unit_vec(s, 1, +1)));
  CHECK(eq_vec(mulb(s, 2, 2), unit_vec(s, 5, +1)));
  CHECK(eq_vec(mulb(s, 2, 7), unit_vec(s, 0, -1)));
  CHECK(is_zero_vec(mulb(s, 0, 2)));
  CHECK(eq_vec(mulb(s, 2, 0), unit_vec(s, 3, -1)));
  check_okubo_flavour(s);
  SUBCASE("symmetric over GF(5)") { CHECK(verify_symmetric(*split_okubo(Field::prime(5))).pass()); }
  SUBCASE("petersson route agrees over Q, GF(2), GF(3), GF(7)") {
    for (const auto& fld :
         {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(7)}) {
      auto c = split_cayley(fld);
      CHECK(petersson(c, cyclic_automorphism(c))->same_tensor(*split_okubo(fld)));
    }
  }
  SUBCASE("exhaustive composition check over GF(2)") {
    auto s2 = split_okubo(Field::prime(2));
    auto rep = verify_composition(*s2, VerifyMode::exhaustive);
    CHECK(rep.pass);
    CHECK(rep.mode == VerifyMode::exhaustive);
  }
  SUBCASE("exhaustive mode is refused over infinite fields") {
    CHECK_THROWS_AS(verify_composition(*s, VerifyMode::exhaustive), error);
  }
}

TEST_CASE("Okubo algebra on trace-zero matrices") {
  auto f7 = Field::prime(7);
  auto s = okubo_sl3(f7, f7->from_int(2));
  check_okubo_flavour(s);
  SUBCASE("norm values: n(h1) = -1 and s2 agrees with -tr(x^2)/2") {
    CHECK(s->norm_of(s->basis_vec(0)) == -f7->one());
    // coefficient-level identity between the two quadratic forms:
    // diagonal n(b_i) = -tr(b_i^2)/2, polar = -tr(b_i b_j)
    // (h1, h2 and the six elementary off-diagonal matrices)
    auto tr2 = [&](int bi, int bj) {
      // reconstruct the matrices: see basis order h1,h2,e12,e13,e21,e23,e31,e32
      int diag[2][3] = {{1, -1, 0}, {0, 1, -1}};
      int off[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
      Scalar m1[3][3], m2[3][3];
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          m1[r][c] = f7->zero();
          m2[r][c] = f7->zero();
        }
      if (bi < 2)
        for (int r = 0; r < 3; ++r) m1[r][r] = f7->from_int(diag[bi][r]);
      else
        m1[off[bi - 2][0]][off[bi - 2][1]] = f7->one();
      if (bj < 2)
        for (int r = 0; r < 3; ++r) m2[r][r] = f7->from_int(diag[bj][r]);
      else
        m2[off[bj - 2][0]][off[bj - 2][1]] = f7->one();
      Scalar tr = f7->zero();
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) tr += m1[r][c] * m2[c][r];
      return tr;
    };
    Scalar half = f7->from_int(2).inv();
    for (int i = 0; i < 8; ++i) {
      CHECK(s->norm_of(s->basis_vec(i)) == -half * tr2(i, i));
      for (int j = i + 1; j < 8; ++j)
        CHECK(s->polar_of(s->basis_vec(i), s->basis_vec(j)) == -tr2(i, j));
    }
  }
  SUBCASE("characteristic 3 and missing omega are rejected") {
    CHECK_THROWS_AS(okubo_sl3(Field::prime(3), Field::prime(3)->one()), error);
    auto f5 = Field::prime(5);
    CHECK_THROWS_AS(okubo_sl3(f5, f5->from_int(2)), error);
  }
}

TEST_CASE("Okubo algebra of the second kind") {
  SUBCASE("over Q") {
    auto s = okubo_second_kind(Field::rationals());
    CHECK(s->dim() == 8);
    check_okubo_flavour(s);
  }
  SUBCASE("over GF(5)") {
    auto s = okubo_second_kind(Field::prime(5));
    CHECK(s->dim() == 8);
    check_okubo_flavour(s);
  }
  SUBCASE("fields containing omega are redirected to okubo_sl3") {
    CHECK_THROWS_AS(okubo_second_kind(Field::prime(7)), error);
    try {
      okubo_second_kind(Field::prime(7));
    } catch (const error& e) {
      CHECK(e.code() == errc::omega_present);
    }
  }
}

TEST_CASE("characteristic-3 twisted forms O_{alpha,beta}") {
  auto f3 = Field::prime(3);
  SUBCASE("O_{1,1} over GF(3) is the split Okubo algebra") {
    auto s = okubo_char3(f3, f3->one(), f3->one());
    CHECK(s->same_tensor(*split_okubo(f3)));
    check_okubo_flavour(s);
  }
  SUBCASE("O_{t,1} over GF(3)(t)") {
    auto f3t = Field::rational_functions(f3, "t");
    auto s = okubo_char3(f3t, f3t->generator(), f3t->one());
    CHECK(s->dim() == 8);
    check_okubo_flavour(s);
  }
  SUBCASE("O_{t,t} over GF(3)(t)") {
    auto f3t = Field::rational_functions(f3, "t");
    auto s = okubo_char3(f3t, f3t->generator(), f3t->generator());
    CHECK(s->dim() == 8);
    check_okubo_flavour(s);
  }
  SUBCASE("O_{t+1,t}: the second cube root lives in the first extension") {
    auto f3t = Field::rational_functions(f3, "t");
    Scalar t = f3t->generator();
    // sanity for the underlying solver: (2+c)^3 = 2 + (t+1) = t
    auto e = Field::cubic_radical_ext(f3t, t + f3t->one());
    auto root = e->cube_root(e->embed(t));
    REQUIRE(root.has_value());
    CHECK(*root == e->generator() + e->from_int(2));
    auto s = okubo_char3(f3t, t + f3t->one(), t);
    CHECK(s->dim() == 8);
    check_okubo_flavour(s);
  }
  SUBCASE("wrong characteristic and zero parameters are rejected") {
    auto f5 = Field::prime(5);
    CHECK_THROWS_AS(okubo_char3(f5, f5->one(), f5->one()), error);
    CHECK_THROWS_AS(okubo_char3(f3, f3->zero(), f3->one()), error);
  }
}

TEST_CASE("two-dimensional characteristic-3 algebras") {
  auto f3t = Field::rational_functions(Field::prime(3), "t");
  Scalar t = f3t->generator();
  SUBCASE("table and derived norm") {
    auto s = char3_twodim(f3t, t);
    CHECK(eq_vec(mulb(s, 0, 1), unit_vec(s, 0, +1)));  // u*v = u
    CHECK(eq_vec(mulb(s, 1, 0), unit_vec(s, 0, +1)));  // v*u = u
    CHECK(eq_vec(mulb(s, 0, 0), unit_vec(s, 1, +1)));  // u*u = v
    CHECK(s->norm_of(s->basis_vec(0)).is_one());       // derived n(u) = 1
    CHECK(s->norm_of(s->basis_vec(1)).is_one());
    CHECK(s->polar_of(s->basis_vec(0), s->basis_vec(1)) == t);
    CHECK(verify_symmetric(*s).pass());
    CHECK(verify_composition(*s, VerifyMode::symbolic).pass);
  }
  SUBCASE("cube scalars are rejected when the check is requested") {
    CHECK_THROWS_AS(char3_twodim(f3t, f3t->one(), true), error);
    CHECK(char3_twodim(f3t, f3t->one(), false) != nullptr);
    CHECK_THROWS_AS(char3_twodim(f3t, f3t->zero()), error);
    CHECK_THROWS_AS(char3_twodim(Field::prime(5), Field::prime(5)->one()), error);
  }
}

TEST_CASE("recovering the associative algebra from a symmetric composition") {
  auto f7 = Field::prime(7);
  Scalar w = f7->from_int(2);
  SUBCASE("okubo_sl3 recovers an associative 9-dimensional algebra") {
    auto rec = recover_associative(okubo_sl3(f7, w), w);
    CHECK(rec.algebra->dim() == 9);
    CHECK(rec.associative);
    CHECK(rec.alternative);
    CHECK(rec.cayley_hamilton_sampled);
  }
  SUBCASE("para-Cayley recovers an alternative non-associative algebra") {
    auto rec = recover_associative(para(split_cayley(f7)), w);
    CHECK(rec.algebra->dim() == 9);
    CHECK_FALSE(rec.associative);
    CHECK(rec.alternative);
    CHECK(rec.cayley_hamilton_sampled);
  }
  SUBCASE("characteristic 3 is rejected") {
    auto f3 = Field::prime(3);
    auto s = okubo_char3(f3, f3->one(), f3->one());
    CHECK_THROWS_AS(recover_associative(s, f3->one()), error);
  }
}
