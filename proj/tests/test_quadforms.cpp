#include <doctest.h>

#include "compalg/hurwitz.hpp"
#include "compalg/quadform.hpp"

using namespace compalg;

TEST_CASE("polar matrices") {
  SUBCASE("x^2 over Q gives [2]") {
    auto f = Field::rationals();
    QuadraticForm q(f, 1);
    q.set_coeff(0, 0, f->one());
    Mat m = q.polar_matrix();
    CHECK(m.at(0, 0) == f->from_int(2));
  }
  SUBCASE("x^2 over GF(2) gives [0]") {
    auto f = Field::prime(2);
    QuadraticForm q(f, 1);
    q.set_coeff(0, 0, f->one());
    CHECK(q.polar_matrix().at(0, 0).is_zero());
  }
}

TEST_CASE("classification") {
  SUBCASE("x^2 over GF(2) is nonsingular of characteristic-2 type") {
    auto f = Field::prime(2);
    QuadraticForm q(f, 1);
    q.set_coeff(0, 0, f->one());
    auto c = q.classify();
    CHECK(c.kind == QuadraticForm::Kind::nonsingular_char2);
    CHECK(c.radical.size() == 1);
  }
  SUBCASE("the zero form is singular") {
    auto f = Field::rationals();
    QuadraticForm q(f, 2);
    auto c = q.classify();
    CHECK(c.kind == QuadraticForm::Kind::singular);
    CHECK(c.radical.size() == 2);
  }
  SUBCASE("split Cayley norm is nondegenerate over any field") {
    for (const auto& f : {Field::rationals(), Field::prime(2), Field::prime(7)})
      CHECK(split_cayley(f)->norm()->classify().kind == QuadraticForm::Kind::nondegenerate);
  }
}

TEST_CASE("isotropic search") {
  SUBCASE("hyperbolic plane over Q") {
    auto f = Field::rationals();
    QuadraticForm q(f, 2);
    q.set_coeff(0, 1, f->one());  // n = xy
    auto r = q.find_isotropic(100);
    REQUIRE(r.vec.has_value());
    CHECK(q.eval(*r.vec).is_zero());
    // deterministic order: (0,1) is the first nonzero box-1 vector
    CHECK(eq_vec(*r.vec, Vec{f->zero(), f->one()}));
  }
  SUBCASE("definite 8-dimensional form over Q is exhausted") {
    auto f = Field::rationals();
    auto o = cayley_dickson(
        cayley_dickson(cayley_dickson(ground(f), -f->one()), -f->one()), -f->one());
    auto r = o->norm()->find_isotropic(5000);
    CHECK_FALSE(r.vec.has_value());
    CHECK_FALSE(r.conclusive);
    CHECK(r.tested == 5000);
  }
  SUBCASE("every 4-dimensional nondegenerate form over GF(3) has a zero") {
    auto f3 = Field::prime(3);
    // oracle: exhaustive scan of all 81 vectors
    auto oracle_has_zero = [&](const QuadraticForm& q) {
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) {
              if (a == 0 && b == 0 && c == 0 && d == 0) continue;
              Vec v = {f3->from_int(a), f3->from_int(b), f3->from_int(c), f3->from_int(d)};
              if (q.eval(v).is_zero()) return true;
            }
      return false;
    };
    Rng rng(314);
    int tried = 0;
    while (tried < 10) {
      QuadraticForm q(f3, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) q.set_coeff(i, j, f3->random(rng));
      if (q.classify().kind != QuadraticForm::Kind::nondegenerate) continue;
      ++tried;
      auto r = q.find_isotropic(1000);
      CHECK(r.vec.has_value());  // Chevalley-Warning
      CHECK(oracle_has_zero(q));
      if (r.vec) CHECK(q.eval(*r.vec).is_zero());
    }
  }
  SUBCASE("conclusive anisotropy over finite fields") {
    auto f3 = Field::prime(3);
    QuadraticForm q(f3, 2);  // x^2 + y^2, anisotropic mod 3
    q.set_coeff(0, 0, f3->one());
    q.set_coeff(1, 1, f3->one());
    auto r = q.find_isotropic(1000);
    CHECK_FALSE(r.vec.has_value());
    CHECK(r.conclusive);
    CHECK(r.tested == 4);  // projective line over GF(3)
  }
}

TEST_CASE("polar form properties on random vectors") {
  for (const auto& f : {Field::rationals(), Field::prime(2), Field::prime(7)}) {
    Rng rng(555);
    QuadraticForm q(f, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) q.set_coeff(i, j, f->random(rng));
    for (int it = 0; it < 50; ++it) {
      Vec x, y;
      for (int i = 0; i < 4; ++i) {
        x.push_back(f->random(rng));
        y.push_back(f->random(rng));
      }
      CHECK(q.polar(x, y) == q.polar(y, x));
      CHECK(q.polar(x, x) == f->from_int(2) * q.eval(x));
      CHECK(q.polar(x, y) == q.eval(add(x, y)) - q.eval(x) - q.eval(y));
    }
  }
}

TEST_CASE("classification is invariant under basis change") {
  Rng rng(777);
  for (const auto& f : {Field::rationals(), Field::prime(5)}) {
    auto c8 = split_cayley(f);
    QuadraticForm forms[2] = {*c8->norm(), QuadraticForm(f, 8)};  // second: rank-deficient
    forms[1].set_coeff(0, 1, f->one());
    forms[1].set_coeff(2, 2, f->one());
    for (const auto& q : forms) {
      auto base_kind = q.classify().kind;
      std::size_t base_rad = q.classify().radical.size();
      int done = 0;
      while (done < 5) {
        Mat p(f, 8, 8);
        for (std::size_t i = 0; i < 8; ++i)
          for (std::size_t j = 0; j < 8; ++j) p.at(i, j) = f->random(rng);
        if (!inverse(p)) continue;
        auto moved = q.pulled_back(p).classify();
        CHECK(moved.kind == base_kind);
        CHECK(moved.radical.size() == base_rad);
        ++done;
      }
    }
  }
}
