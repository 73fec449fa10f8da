#include <doctest.h>

#include <json.hpp>
#include <string>

#include "compalg.h"

using nlohmann::json;

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { compalg_string_free(s); }
  json parsed() const { return json::parse(std::string(s ? s : "null")); }
};

struct Alg {
  compalg_algebra* a = nullptr;
  ~Alg() { compalg_algebra_free(a); }
};

struct Lie {
  compalg_lie* l = nullptr;
  ~Lie() { compalg_lie_free(l); }
};

json build_json(const char* kind, const json& params) {
  Alg h;
  REQUIRE(compalg_build(kind, params.dump().c_str(), &h.a) == 0);
  Str out;
  REQUIRE(compalg_algebra_to_json(h.a, &out.s) == 0);
  return out.parsed();
}

json verify_suite(const json& algebra, const char* suite) {
  Alg h;
  REQUIRE(compalg_algebra_from_json(algebra.dump().c_str(), &h.a) == 0);
  Str rep;
  REQUIRE(compalg_verify(h.a, suite, "{}", &rep.s) == 0);
  return rep.parsed();
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::string(compalg_version()).find("compalg") == 0);
  Alg h;
  int rc = compalg_build("etale", R"({"field":"q","mu":"-1/4"})", &h.a);
  CHECK(rc != 0);
  CHECK(std::string(compalg_error_name(rc)) == "DegenerateParameter");
  CHECK(std::string(compalg_last_error()).find("4*mu") != std::string::npos);
  CHECK(compalg_last_error_code() == rc);
}

TEST_CASE("every build output passes its verify suite") {
  struct Case {
    const char* kind;
    json params;
    const char* suite;
  };
  const Case cases[] = {
      {"ground", {{"field", "q"}}, "composition"},
      {"etale", {{"field", "q"}, {"mu", "0"}}, "hurwitz"},
      {"split-cayley", {{"field", "gf:5"}}, "hurwitz"},
      {"quaternions", {{"field", "q"}}, "associative"},
      {"split-okubo", {{"field", "q"}}, "symmetric"},
      {"okubo-sl3", {{"field", "gf:7"}, {"omega", "2"}}, "symmetric"},
      {"okubo-j", {{"field", "q"}}, "symmetric"},
      {"okubo-char3", {{"field", "gf:3"}, {"alpha", "1"}, {"beta", "1"}}, "symmetric"},
      {"char3-dim2", {{"field", "ratfun:gf:3:t"}, {"lambda", "t"}}, "symmetric"},
  };
  for (const auto& c : cases) {
    json alg = build_json(c.kind, c.params);
    json rep = verify_suite(alg, c.suite);
    CAPTURE(c.kind);
    CHECK(rep["pass"].get<bool>());
  }
}

TEST_CASE("composite builds: cd, para, petersson, unitalize") {
  json ground_q = build_json("ground", {{"field", "q"}});
  json c2 = build_json("cd", {{"in", ground_q}, {"alpha", "-1"}});
  json c4 = build_json("cd", {{"in", c2}, {"alpha", "-1"}});
  CHECK(c4["dim"] == 4);
  CHECK(verify_suite(c4, "hurwitz")["pass"].get<bool>());

  json sc = build_json("split-cayley", {{"field", "q"}});
  json para8 = build_json("para", {{"in", sc}});
  CHECK(verify_suite(para8, "symmetric")["pass"].get<bool>());

  json pet = build_json("petersson", {{"in", sc}, {"autom", "cyclic"}});
  json so = build_json("split-okubo", {{"field", "q"}});
  CHECK(pet["mul"].dump() == so["mul"].dump());

  Alg h;
  REQUIRE(compalg_algebra_from_json(so.dump().c_str(), &h.a) == 0);
  Alg unital;
  json point = json::array({"1", "1", "0", "0", "0", "0", "0", "0"});
  REQUIRE(compalg_unitalize(h.a, point.dump().c_str(), &unital.a) == 0);
  Str uj;
  REQUIRE(compalg_algebra_to_json(unital.a, &uj.s) == 0);
  CHECK(verify_suite(uj.parsed(), "hurwitz")["pass"].get<bool>());
}

TEST_CASE("verification failure reports a witness") {
  json sc = build_json("split-cayley", {{"field", "q"}});
  json rep = verify_suite(sc, "associative");
  CHECK_FALSE(rep["pass"].get<bool>());
  CHECK(rep.contains("witness"));
  json sym = verify_suite(sc, "symmetric");
  CHECK_FALSE(sym["pass"].get<bool>());
}

TEST_CASE("table, split-basis, rotation, triality through the C API") {
  json sc = build_json("split-cayley", {{"field", "q"}});
  Alg h;
  REQUIRE(compalg_algebra_from_json(sc.dump().c_str(), &h.a) == 0);

  Str table;
  REQUIRE(compalg_table(h.a, "figure1", &table.s) == 0);
  CHECK(std::string(table.s).find("e1") != std::string::npos);
  Str bad;
  CHECK(compalg_table(h.a, "bogus", &bad.s) != 0);

  Str sb;
  REQUIRE(compalg_split_basis(h.a, 0, &sb.s) == 0);
  json sbj = sb.parsed();
  CHECK(sbj["verified"].get<bool>());
  CHECK(sbj["matrix"].size() == 8);

  // split Cayley itself is unital, not symmetric: t_{x,y} construction fails
  Str tri;
  CHECK(compalg_triality(h.a, "verify", &tri.s) != 0);

  json quat = build_json("quaternions", {{"field", "q"}});
  Alg hq;
  REQUIRE(compalg_algebra_from_json(quat.dump().c_str(), &hq.a) == 0);
  Str rot;
  json qcoords = json::array({"1", "1", "0", "0"});
  REQUIRE(compalg_rotation(hq.a, "so3", nullptr, qcoords.dump().c_str(), &rot.s) == 0);
  json m = rot.parsed();
  CHECK(m[0][0] == "1");
  CHECK(m[2][1] == "1");   // j -> k
  CHECK(m[1][2] == "-1");  // k -> -j
}

TEST_CASE("triality report through the C API") {
  json so = build_json("split-okubo", {{"field", "gf:7"}});
  Alg h;
  REQUIRE(compalg_algebra_from_json(so.dump().c_str(), &h.a) == 0);
  Str rep;
  REQUIRE(compalg_triality(h.a, "fixed-dim", &rep.s) == 0);
  json j = rep.parsed();
  CHECK(j["tri_dim"] == 28);
  CHECK(j["theta_fixed_dim"] == 8);
  Str ver;
  REQUIRE(compalg_triality(h.a, "verify", &ver.s) == 0);
  CHECK(ver.parsed()["pass"].get<bool>());
}

TEST_CASE("magic square through the C API") {
  SUBCASE("single entry with jacobi and invariants") {
    Str rep;
    json opts = {{"field", "q"},       {"row", "1"},         {"col", "8"},
                 {"jacobi", "full"},   {"invariants", true}, {"jobs", 2}};
    REQUIRE(compalg_magic(opts.dump().c_str(), &rep.s) == 0);
    json j = rep.parsed();
    CHECK(j["dim"] == 52);
    CHECK(j["jacobi"]["pass"].get<bool>());
    CHECK(j["invariants"]["center_dim"] == 0);
    CHECK(j["invariants"]["killing_rank"] == 52);
  }
  SUBCASE("grid dims") {
    Str rep;
    REQUIRE(compalg_magic(R"({"field":"q"})", &rep.s) == 0);
    json dims = rep.parsed()["dims"];
    CHECK(dims[0][0] == 3);
    CHECK(dims[3][3] == 248);
    CHECK(dims[1][2] == 35);
  }
  SUBCASE("lie handle round trip") {
    Lie l;
    REQUIRE(compalg_magic_entry(R"({"field":"q","row":"2","col":"2"})", &l.l) == 0);
    Str js;
    REQUIRE(compalg_lie_to_json(l.l, &js.s) == 0);
    Lie back;
    REQUIRE(compalg_lie_from_json(js.s, &back.l) == 0);
    Str jac;
    REQUIRE(compalg_lie_jacobi(back.l, R"({"mode":"full"})", &jac.s) == 0);
    CHECK(jac.parsed()["pass"].get<bool>());
    Str inv;
    REQUIRE(compalg_lie_invariants(back.l, &inv.s) == 0);
    CHECK(inv.parsed()["derived_dim"] == 16);
  }
  SUBCASE("bad characteristic is reported") {
    Str rep;
    int rc = compalg_magic(R"({"field":"gf:3","row":"1","col":"1"})", &rep.s);
    CHECK(rc != 0);
    CHECK(std::string(compalg_error_name(rc)) == "BadCharacteristic");
  }
}
