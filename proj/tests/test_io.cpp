#include <doctest.h>

#include <fstream>
#include <sstream>

#include "compalg/hurwitz.hpp"
#include "compalg/io.hpp"
#include "compalg/symcomp.hpp"

using namespace compalg;

#ifndef COMPALG_GOLDEN_DIR
#define COMPALG_GOLDEN_DIR "tests/golden"
#endif

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(COMPALG_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("field descriptors round trip") {
  auto f3t = Field::rational_functions(Field::prime(3), "t");
  std::vector<FieldPtr> fields = {
      Field::rationals(), Field::prime(7),
      Field::quadratic_ext(Field::rationals(), Field::rationals()->one(),
                           Field::rationals()->one()),
      f3t, Field::cubic_radical_ext(f3t, f3t->generator())};
  for (const auto& f : fields) {
    auto back = field_from_json(field_to_json(f));
    CHECK(back->same(*f));
  }
}

TEST_CASE("field specs") {
  CHECK(field_from_spec("q")->kind() == FieldKind::rationals);
  CHECK(field_from_spec("gf:7")->modulus() == 7);
  CHECK(field_from_spec("omega:q")->kind() == FieldKind::quad_ext);
  CHECK(field_from_spec("omega:gf:7")->modulus() == 7);  // omega already present
  auto f3t = field_from_spec("ratfun:gf:3:t");
  CHECK(f3t->kind() == FieldKind::rat_fun);
  CHECK(f3t->characteristic() == 3);
  auto cub = field_from_spec("cubic:ratfun:gf:3:t:t");
  CHECK(cub->kind() == FieldKind::cubic_ext);
  CHECK_THROWS_AS(field_from_spec("nope"), error);
}

TEST_CASE("algebra JSON round trips bit-exactly") {
  auto c = split_cayley(Field::rationals());
  json j = algebra_to_json(c);
  auto back = algebra_from_json(j);
  CHECK(back->same_tensor(*c));
  CHECK(*back->norm() == *c->norm());
  CHECK(eq_vec(*back->unit(), *c->unit()));
  CHECK(algebra_to_json(back).dump() == j.dump());
}

TEST_CASE("scalars over GF(3)(t) are canonicalized on import") {
  auto f3t = Field::rational_functions(Field::prime(3), "t");
  json j = {{"field", {{"kind", "ratfun"}, {"base", {{"kind", "GF"}, {"p", 3}}}, {"var", "t"}}},
            {"dim", 1},
            {"basis", {"e"}},
            {"mul", {{0, 0, 0, "(t^2+t)/(t^2+2*t+1)"}}}};
  auto a = algebra_from_json(j);
  json out = algebra_to_json(a);
  CHECK(out["mul"][0][3] == "t/(t+1)");
}

TEST_CASE("schema violations carry a location") {
  json j = algebra_to_json(ground(Field::rationals()));
  j["mul"][0][2] = 7;  // index out of range
  CHECK_THROWS_AS(algebra_from_json(j), error);
  try {
    algebra_from_json(j);
  } catch (const error& e) {
    CHECK(e.code() == errc::schema_violation);
    CHECK(std::string(e.what()).find("algebra.mul") != std::string::npos);
  }
  json missing = {{"dim", 1}};
  CHECK_THROWS_AS(algebra_from_json(missing), error);
}

TEST_CASE("Lie algebra JSON round trips") {
  auto f = Field::rationals();
  auto g = build_g(magic_slot_algebra(f, MagicSlot::s1), magic_slot_algebra(f, MagicSlot::s2));
  json j = lie_to_json(g);
  auto back = lie_from_json(j);
  CHECK(back.dim() == g.dim());
  CHECK(lie_to_json(back).dump() == j.dump());
  CHECK(jacobi_check(back, JacobiMode::full).pass);
}

TEST_CASE("golden tables") {
  CHECK(render_table(split_cayley(Field::rationals()), TableLayout::figure1) ==
        read_golden("figure1_split_cayley.txt"));
  CHECK(render_table(split_okubo(Field::rationals()), TableLayout::figure2) ==
        read_golden("figure2_split_okubo.txt"));
  CHECK_THROWS_AS(render_table(ground(Field::rationals()), TableLayout::figure1), error);
}
