#include <doctest.h>

#include "compalg/hurwitz.hpp"

using namespace compalg;

namespace {

Vec ev(const AlgebraPtr& a, std::size_t i) { return a->basis_vec(i); }

Vec mulb(const AlgebraPtr& a, std::size_t i, std::size_t j) {
  return a->mul(a->basis_vec(i), a->basis_vec(j));
}

Vec unit_vec(const AlgebraPtr& a, std::size_t i, int sign) {
  Vec v = zero_vec(a->field(), a->dim());
  v[i] = sign >= 0 ? a->field()->one() : -a->field()->one();
  return v;
}

}  // namespace

TEST_CASE("ground field algebra") {
  auto q = ground(Field::rationals());
  CHECK(verify_composition(*q, VerifyMode::symbolic).pass);
  CHECK(eq_vec(*q->unit(), q->basis_vec(0)));
  auto g2 = ground(Field::prime(2));
  auto rep = verify_composition(*g2, VerifyMode::symbolic);
  CHECK(rep.pass);
  CHECK(rep.norm_kind == QuadraticForm::Kind::nonsingular_char2);
  CHECK(rep.radical_dim == 1);
}

TEST_CASE("quadratic etale algebras") {
  auto f = Field::rationals();
  SUBCASE("mu = 0 has idempotent v with isotropic norm") {
    auto k = quadratic_etale(f, f->zero());
    CHECK(eq_vec(mulb(k, 1, 1), ev(k, 1)));
    CHECK(k->norm_of(ev(k, 1)).is_zero());
    CHECK(verify_composition(*k, VerifyMode::symbolic).pass);
    CHECK(verify_hurwitz_properties(*k).pass());
  }
  SUBCASE("mu = 1 over GF(3) is valid") {
    auto f3 = Field::prime(3);
    CHECK((f3->from_int(4) * f3->one() + f3->one()) == f3->from_int(2));
    auto k = quadratic_etale(f3, f3->one());
    CHECK(verify_composition(*k, VerifyMode::symbolic).pass);
  }
  SUBCASE("mu = -1/4 is degenerate") {
    CHECK_THROWS_AS(quadratic_etale(f, f->parse("-1/4")), error);
  }
  SUBCASE("the Cayley-Hamilton cross term: eps*delta passes, 2*eps*delta fails") {
    auto k = quadratic_etale(f, f->from_int(1));
    CHECK(verify_composition(*k, VerifyMode::symbolic).pass);
    QuadraticForm printed(f, 2);  // the variant with polar n(1,v) = 2
    printed.set_coeff(0, 0, f->one());
    printed.set_coeff(1, 1, -f->one());
    printed.set_coeff(0, 1, f->from_int(2));
    auto bad = k->with_norm(printed);
    CHECK_FALSE(verify_composition(*bad, VerifyMode::symbolic).pass);
  }
}

TEST_CASE("Cayley-Dickson doubling") {
  auto f = Field::rationals();
  SUBCASE("CD(F,-1): u*u = -1") {
    auto c = cayley_dickson(ground(f), -f->one());
    CHECK(eq_vec(mulb(c, 1, 1), unit_vec(c, 0, -1)));
    CHECK(verify_composition(*c, VerifyMode::symbolic).pass);
  }
  SUBCASE("CD(CD(F,-1),-1) is the quaternion table") {
    auto h = quaternions(f);
    // oracle: the classical relations, written out independently
    // i*j = k, j*i = -k
    CHECK(eq_vec(mulb(h, 1, 2), unit_vec(h, 3, +1)));
    CHECK(eq_vec(mulb(h, 2, 1), unit_vec(h, 3, -1)));
    int sq[3] = {1, 2, 3};
    for (int m : sq) CHECK(eq_vec(mulb(h, m, m), unit_vec(h, 0, -1)));
    // j*k = i, k*j = -i, k*i = j, i*k = -j
    CHECK(eq_vec(mulb(h, 2, 3), unit_vec(h, 1, +1)));
    CHECK(eq_vec(mulb(h, 3, 2), unit_vec(h, 1, -1)));
    CHECK(eq_vec(mulb(h, 3, 1), unit_vec(h, 2, +1)));
    CHECK(eq_vec(mulb(h, 1, 3), unit_vec(h, 2, -1)));
    CHECK(verify_hurwitz_properties(*h).pass());
    CHECK(verify_law(*h, Law::associative).result.pass);
    CHECK_FALSE(verify_law(*h, Law::commutative).result.pass);
  }
  SUBCASE("doubling the split Cayley algebra breaks composition") {
    auto c16 = cayley_dickson(split_cayley(f), f->one());
    CHECK(c16->dim() == 16);
    auto rep = verify_composition(*c16, VerifyMode::symbolic);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.witness.empty());
  }
  SUBCASE("zero parameter is rejected") {
    CHECK_THROWS_AS(cayley_dickson(ground(f), f->zero()), error);
  }
}

TEST_CASE("dimension tower 1,2,4,8 composes; 16 fails") {
  for (const auto& f : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
    auto a = ground(f);
    for (int step = 0; step < 3; ++step) {
      CHECK(verify_composition(*a, VerifyMode::symbolic).pass);
      CHECK(verify_hurwitz_properties(*a).pass());
      auto next = cayley_dickson(a, -f->one());
      // CD(Q, alpha) associative iff Q commutative
      CHECK(verify_law(*next, Law::associative).result.pass ==
            verify_law(*a, Law::commutative).result.pass);
      a = next;
    }
    CHECK(verify_composition(*a, VerifyMode::symbolic).pass);
    CHECK(a->dim() == 8);
    CHECK_FALSE(verify_composition(*cayley_dickson(a, -f->one()), VerifyMode::symbolic).pass);
  }
}

TEST_CASE("split Cayley algebra table") {
  auto c = split_cayley(Field::rationals());
  // u1*v1 = -e1, v1*v2 = u3, e1*u1 = u1, u1*e1 = 0
  CHECK(eq_vec(mulb(c, 2, 5), unit_vec(c, 0, -1)));
  CHECK(eq_vec(mulb(c, 5, 6), unit_vec(c, 4, +1)));
  CHECK(eq_vec(mulb(c, 0, 2), unit_vec(c, 2, +1)));
  CHECK(is_zero_vec(mulb(c, 2, 0)));
  CHECK(verify_composition(*c, VerifyMode::symbolic).pass);
  auto hr = verify_hurwitz_properties(*c);
  CHECK(hr.pass());
  // associativity fails with an associator witness
  auto law = verify_law(*c, Law::associative);
  CHECK_FALSE(law.result.pass);
  CHECK(law.result.witness.find("associator") == 0);

  SUBCASE("unit is e1+e2 and conj(e1) = e2") {
    auto u = find_unit(c);
    REQUIRE(u.has_value());
    Vec expect = add(ev(c, 0), ev(c, 1));
    CHECK(eq_vec(u->coords, expect));
    CHECK(eq_vec(c->conj(ev(c, 0)), ev(c, 1)));
  }
  SUBCASE("norm polar matrix is hyperbolic") {
    Mat pm = c->norm()->polar_matrix();
    auto f = c->field();
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        bool paired = (i == 0 && j == 1) || (i == 1 && j == 0) || (i >= 2 && j == i + 3) ||
                      (j >= 2 && i == j + 3);
        CHECK(pm.at(i, j) == (paired ? f->one() : f->zero()));
      }
    CHECK(c->norm()->classify().kind == QuadraticForm::Kind::nondegenerate);
  }
  SUBCASE("span{e1,e2,u1,v1} is an associative (matrix) subalgebra") {
    std::size_t keep[4] = {0, 1, 2, 5};
    std::vector<TensorEntry> t;
    auto f = c->field();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Vec prod = mulb(c, keep[i], keep[j]);
        for (std::size_t k = 0; k < 4; ++k)
          if (!prod[keep[k]].is_zero()) t.push_back({i, j, k, prod[keep[k]]});
        // closure: nothing outside the span
        for (std::size_t m = 0; m < 8; ++m) {
          bool kept = false;
          for (std::size_t k = 0; k < 4; ++k) kept = kept || keep[k] == m;
          if (!kept) CHECK(prod[m].is_zero());
        }
      }
    QuadraticForm n(f, 4);
    n.set_coeff(0, 1, f->one());
    n.set_coeff(2, 3, f->one());
    Vec unit = {f->one(), f->one(), f->zero(), f->zero()};
    auto mat2 = Algebra::make(f, {"e1", "e2", "u1", "v1"}, t, unit, n);
    CHECK(verify_law(*mat2, Law::associative).result.pass);
    CHECK(verify_composition(*mat2, VerifyMode::symbolic).pass);
    CHECK(verify_hurwitz_properties(*mat2).pass());
  }
}

TEST_CASE("split_basis") {
  SUBCASE("split Cayley input verifies against itself") {
    auto c = split_cayley(Field::prime(5));
    auto bc = split_basis(c);
    CHECK(bc.source == c);
    CHECK(bc.target->same_tensor(*split_cayley(Field::prime(5))));
    // e1 column is idempotent in the source
    Vec e1 = bc.matrix.col(0);
    CHECK(eq_vec(c->mul(e1, e1), e1));
  }
  SUBCASE("doubled isotropic construction over Q lands on the split table") {
    auto f = Field::rationals();
    auto c = cayley_dickson(cayley_dickson(quadratic_etale(f, f->zero()), f->one()), f->one());
    REQUIRE(c->dim() == 8);
    REQUIRE(verify_composition(*c, VerifyMode::symbolic).pass);
    auto bc = split_basis(c);
    CHECK(bc.target->same_tensor(*split_cayley(f)));
    CHECK(transported(c, bc.matrix)->same_tensor(*split_cayley(f)));
  }
  SUBCASE("definite norm over Q exhausts the budget") {
    auto f = Field::rationals();
    auto o = cayley_dickson(
        cayley_dickson(cayley_dickson(ground(f), -f->one()), -f->one()), -f->one());
    CHECK_THROWS_AS(split_basis(o, 5000), error);
    try {
      split_basis(o, 5000);
    } catch (const error& e) {
      CHECK(e.code() == errc::no_isotropic_found);
    }
  }
  SUBCASE("non-8-dimensional input is rejected") {
    CHECK_THROWS_AS(split_basis(quaternions(Field::rationals())), error);
  }
}

TEST_CASE("isomorphism over finite fields") {
  auto f5 = Field::prime(5);
  SUBCASE("all dim-8 Hurwitz algebras over GF(5) are isomorphic") {
    auto a = split_cayley(f5);
    auto b = cayley_dickson(
        cayley_dickson(cayley_dickson(ground(f5), -f5->one()), -f5->one()), -f5->one());
    CHECK(hurwitz_isomorphic_gf(a, b));
  }
  SUBCASE("anisotropic vs isotropic 2-dimensional algebras differ") {
    auto f7 = Field::prime(7);
    // mu = 1: disc 4*1+1 = 5 is not a square mod 7, so the norm is anisotropic
    auto k1 = quadratic_etale(f7, f7->one());
    auto k0 = quadratic_etale(f7, f7->zero());
    CHECK_FALSE(hurwitz_isomorphic_gf(k1, k0));
    CHECK(hurwitz_isomorphic_gf(k0, k0));
  }
  SUBCASE("different dimensions are never isomorphic") {
    CHECK_FALSE(hurwitz_isomorphic_gf(quadratic_etale(f5, f5->zero()), quaternions(f5)));
  }
  SUBCASE("characteristic 2 and infinite fields are rejected") {
    CHECK_THROWS_AS(hurwitz_isomorphic_gf(ground(Field::prime(2)), ground(Field::prime(2))),
                    error);
    CHECK_THROWS_AS(
        hurwitz_isomorphic_gf(ground(Field::rationals()), ground(Field::rationals())), error);
  }
}

TEST_CASE("rotations from quaternions") {
  auto f = Field::rationals();
  auto h = quaternions(f);
  auto el = [&](long long a, long long b, long long c, long long d) {
    return Element{h, {f->from_int(a), f->from_int(b), f->from_int(c), f->from_int(d)}};
  };
  SUBCASE("q = 1 gives the identity") {
    CHECK(rotation_so3(el(1, 0, 0, 0)) == Mat::identity(f, 3));
    CHECK(rotation_so4(el(1, 0, 0, 0), el(1, 0, 0, 0)) == Mat::identity(f, 4));
  }
  SUBCASE("q = i gives diag(1,-1,-1)") {
    Mat m = rotation_so3(el(0, 1, 0, 0));
    Mat expect(f, 3, 3);
    expect.at(0, 0) = f->one();
    expect.at(1, 1) = -f->one();
    expect.at(2, 2) = -f->one();
    CHECK(m == expect);
  }
  SUBCASE("q = 1+i maps i->i, j->k, k->-j") {
    Mat m = rotation_so3(el(1, 1, 0, 0));
    Mat expect(f, 3, 3);
    expect.at(0, 0) = f->one();   // i -> i
    expect.at(2, 1) = f->one();   // j -> k
    expect.at(1, 2) = -f->one();  // k -> -j
    CHECK(m == expect);
  }
  SUBCASE("orthogonality w.r.t. the polar form and determinant 1") {
    Rng rng(2024);
    int done = 0;
    Mat g3(f, 3, 3);
    for (int i = 0; i < 3; ++i) g3.at(i, i) = f->from_int(2);
    while (done < 25) {
      Vec q = {f->random(rng), f->random(rng), f->random(rng), f->random(rng)};
      if (h->norm_of(q).is_zero()) continue;
      Mat m = rotation_so3(Element{h, q});
      CHECK(m.transposed() * g3 * m == g3);
      CHECK(det(m).is_one());
      ++done;
    }
  }
  SUBCASE("so3 is a homomorphism with kernel +-1") {
    Rng rng(77);
    int done = 0;
    while (done < 100) {
      Vec p = {f->random(rng), f->random(rng), f->random(rng), f->random(rng)};
      Vec q = {f->random(rng), f->random(rng), f->random(rng), f->random(rng)};
      if (h->norm_of(p).is_zero() || h->norm_of(q).is_zero()) continue;
      Mat lhs = rotation_so3(Element{h, h->mul(p, q)});
      Mat rhs = rotation_so3(Element{h, p}) * rotation_so3(Element{h, q});
      CHECK(lhs == rhs);
      ++done;
    }
    Vec q = {f->from_int(1), f->from_int(2), f->from_int(-1), f->from_int(3)};
    CHECK(rotation_so3(Element{h, q}) == rotation_so3(Element{h, scaled(q, -f->one())}));
  }
  SUBCASE("so4 blocks and homomorphism") {
    Element q = el(1, 2, 0, -1);
    Mat m = rotation_so4(q, q);
    Mat r3 = rotation_so3(q);
    CHECK(m.at(0, 0).is_one());
    for (int i = 1; i < 4; ++i) {
      CHECK(m.at(0, i).is_zero());
      CHECK(m.at(i, 0).is_zero());
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m.at(i + 1, j + 1) == r3.at(i, j));

    Element p1 = el(0, 1, 0, 0), q1 = el(0, 0, 1, 0);
    Element p2 = el(0, 0, 1, 0), q2 = el(0, 0, 0, 1);
    Mat lhs = rotation_so4(p1, q1) * rotation_so4(p2, q2);
    Mat rhs = rotation_so4(multiply(p1, p2), multiply(q1, q2));
    CHECK(lhs == rhs);

    Mat g4(f, 4, 4);
    for (int i = 0; i < 4; ++i) g4.at(i, i) = f->from_int(2);
    // pairs of equal norm (p = xy, q = yx) give exact isometries
    Rng rng(11);
    int done = 0;
    while (done < 20) {
      Vec x = {f->random(rng), f->random(rng), f->random(rng), f->random(rng)};
      Vec y = {f->random(rng), f->random(rng), f->random(rng), f->random(rng)};
      if (h->norm_of(x).is_zero() || h->norm_of(y).is_zero()) continue;
      Element p{h, h->mul(x, y)}, q2x{h, h->mul(y, x)};
      Mat m4 = rotation_so4(p, q2x);
      CHECK(m4.transposed() * g4 * m4 == g4);
      CHECK(det(m4).is_one());
      ++done;
    }
    // in general the polar form scales by n(p)/n(q) and det by its square
    Mat gen = rotation_so4(el(1, 1, 1, 0), el(2, 0, 1, 1));
    Scalar ratio = h->norm_of(el(1, 1, 1, 0).coords) / h->norm_of(el(2, 0, 1, 1).coords);
    CHECK(gen.transposed() * g4 * gen == g4.scaled(ratio));
    CHECK(det(gen) == ratio * ratio);
  }
  SUBCASE("isotropic quaternions are rejected") {
    CHECK_THROWS_AS(rotation_so3(el(0, 0, 0, 0)), error);
    auto f5 = Field::prime(5);
    auto h5 = quaternions(f5);
    // 1 + 2i has norm 1 + 4 = 0 over GF(5)
    Element iso{h5, {f5->one(), f5->from_int(2), f5->zero(), f5->zero()}};
    CHECK_THROWS_AS(rotation_so3(iso), error);
  }
}

TEST_CASE("urbanik-wright index bijection") {
  CHECK(urbanik_wright_index(1, 1) == 1);
  CHECK(urbanik_wright_index(3, 2) == 12);  // 2^2 * 3
  CHECK(urbanik_wright_inverse(12) == std::pair<std::uint64_t, std::uint64_t>{3, 2});
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t n = 1 + rng.below(20), m = 1 + rng.below(1000);
    auto [nn, mm] = urbanik_wright_inverse(urbanik_wright_index(n, m));
    CHECK(nn == n);
    CHECK(mm == m);
  }
}
