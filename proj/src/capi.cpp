#include "compalg.h"

#include <cstring>
#include <string>

#include "compalg/hurwitz.hpp"
#include "compalg/io.hpp"
#include "compalg/symcomp.hpp"

using namespace compalg;

struct compalg_algebra {
  AlgebraPtr ptr;
};
struct compalg_lie {
  LieAlgebra lie;
};

namespace {

thread_local int g_last_code = 0;
thread_local std::string g_last_message;

int set_error(errc code, const std::string& msg) {
  g_last_code = static_cast<int>(code);
  g_last_message = msg;
  return g_last_code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_code = 0;
    return 0;
  } catch (const error& e) {
    return set_error(e.code(), e.what());
  } catch (const json::exception& e) {
    return set_error(errc::schema_violation, e.what());
  } catch (const std::exception& e) {
    return set_error(errc::internal, e.what());
  }
}

json parse_options(const char* options_json) {
  if (!options_json || !*options_json) return json::object();
  return json::parse(options_json);
}

FieldPtr field_from_option(const json& j, const char* key) {
  if (!j.contains(key)) fail(errc::usage, std::string("missing '") + key + "'");
  if (j[key].is_string()) return field_from_spec(j[key].get<std::string>());
  return field_from_json(j[key]);
}

Scalar scalar_option(const FieldPtr& f, const json& j, const char* key,
                     const char* fallback = nullptr) {
  if (!j.contains(key)) {
    if (fallback) return f->parse(fallback);
    fail(errc::usage, std::string("missing scalar option '") + key + "'");
  }
  return f->parse(j[key].get<std::string>());
}

Vec coords_from_json(const AlgebraPtr& a, const json& j, const char* where) {
  if (!j.is_array() || j.size() != a->dim())
    fail(errc::schema_violation, std::string(where) + ": expected dim scalar expressions");
  Vec v;
  for (const auto& c : j) v.push_back(a->field()->parse(c.get<std::string>()));
  return v;
}

AlgebraPtr build_from_params(const std::string& kind, const json& p) {
  auto input_algebra = [&]() {
    if (!p.contains("in")) fail(errc::usage, "'" + kind + "' needs an input algebra in 'in'");
    return algebra_from_json(p["in"]);
  };
  if (kind == "ground") return ground(field_from_option(p, "field"));
  if (kind == "etale") {
    FieldPtr f = field_from_option(p, "field");
    return quadratic_etale(f, scalar_option(f, p, "mu"));
  }
  if (kind == "cd") {
    AlgebraPtr in = input_algebra();
    return cayley_dickson(in, scalar_option(in->field(), p, "alpha"));
  }
  if (kind == "split-cayley") return split_cayley(field_from_option(p, "field"));
  if (kind == "quaternions") return quaternions(field_from_option(p, "field"));
  if (kind == "para") return para(input_algebra());
  if (kind == "petersson") {
    AlgebraPtr in = input_algebra();
    std::string which = p.value("autom", "cyclic");
    AlgebraAutomorphism phi = [&] {
      if (which == "cyclic") return cyclic_automorphism(in);
      if (which == "identity")
        return make_automorphism(in, Mat::identity(in->field(), in->dim()));
      if (which == "grading") {
        Scalar w = p.contains("omega")
                       ? scalar_option(in->field(), p, "omega")
                       : [&] {
                           auto r = in->field()->omega_root();
                           if (!r) fail(errc::no_omega, "field has no cube root of unity");
                           return *r;
                         }();
        return grading_automorphism(in, w);
      }
      fail(errc::usage, "autom must be cyclic | grading | identity");
    }();
    return petersson(in, phi);
  }
  if (kind == "split-okubo") return split_okubo(field_from_option(p, "field"));
  if (kind == "okubo-sl3") {
    FieldPtr f = field_from_option(p, "field");
    Scalar w = p.contains("omega") ? scalar_option(f, p, "omega") : [&] {
      auto r = f->omega_root();
      if (!r) fail(errc::no_omega, "field has no cube root of unity");
      return *r;
    }();
    return okubo_sl3(f, w);
  }
  if (kind == "okubo-j") return okubo_second_kind(field_from_option(p, "field"));
  if (kind == "okubo-char3") {
    FieldPtr f = field_from_option(p, "field");
    return okubo_char3(f, scalar_option(f, p, "alpha"), scalar_option(f, p, "beta"));
  }
  if (kind == "char3-dim2") {
    FieldPtr f = field_from_option(p, "field");
    return char3_twodim(f, scalar_option(f, p, "lambda"), p.value("check_cube", false));
  }
  if (kind == "unitalize") {
    AlgebraPtr in = input_algebra();
    if (!p.contains("point")) fail(errc::usage, "unitalize needs 'point'");
    return kaplansky_unitalize(in, coords_from_json(in, p["point"], "point"));
  }
  fail(errc::usage, "unknown build kind '" + kind + "'");
}

json check_to_json(const char* name, const CheckResult& c) {
  json out{{"check", name}, {"pass", c.pass}};
  if (!c.pass) out["witness"] = c.witness;
  return out;
}

const char* norm_kind_name(QuadraticForm::Kind k) {
  switch (k) {
    case QuadraticForm::Kind::nondegenerate: return "nondegenerate";
    case QuadraticForm::Kind::nonsingular_char2: return "nonsingular-char2";
    case QuadraticForm::Kind::singular: return "singular";
  }
  return "?";
}

json verify_to_json(const AlgebraPtr& a, const std::string& suite, const json& opts) {
  VerifyMode mode = opts.value("mode", "symbolic") == std::string("exhaustive")
                        ? VerifyMode::exhaustive
                        : VerifyMode::symbolic;
  std::uint64_t cap = opts.value("cap", kExhaustiveCap);
  json out{{"suite", suite}};
  if (suite == "composition") {
    auto rep = verify_composition(*a, mode, cap);
    out["pass"] = rep.pass;
    out["mode"] = rep.mode == VerifyMode::symbolic ? "symbolic" : "exhaustive";
    out["norm"] = norm_kind_name(rep.norm_kind);
    out["radical_dim"] = rep.radical_dim;
    if (!rep.pass) out["witness"] = rep.witness;
    return out;
  }
  if (suite == "hurwitz") {
    auto rep = verify_hurwitz_properties(*a);
    out["pass"] = rep.pass();
    out["checks"] = json::array({check_to_json("involution", rep.involution),
                                 check_to_json("antiautomorphism", rep.antiautomorphism),
                                 check_to_json("cayley-hamilton", rep.cayley_hamilton),
                                 check_to_json("left-alternative", rep.left_alternative),
                                 check_to_json("right-alternative", rep.right_alternative),
                                 check_to_json("adjoint-left", rep.adjoint_left),
                                 check_to_json("adjoint-right", rep.adjoint_right)});
    if (!rep.pass()) out["witness"] = rep.first_failure();
    return out;
  }
  if (suite == "symmetric") {
    auto rep = verify_symmetric(*a, mode, cap);
    out["pass"] = rep.pass();
    out["checks"] = json::array({check_to_json("norm-associativity", rep.norm_associativity),
                                 check_to_json("left-exchange", rep.left_exchange),
                                 check_to_json("right-exchange", rep.right_exchange)});
    for (const auto& c : {rep.norm_associativity, rep.left_exchange, rep.right_exchange})
      if (!c.pass) {
        out["witness"] = c.witness;
        break;
      }
    return out;
  }
  Law law;
  if (suite == "associative")
    law = Law::associative;
  else if (suite == "commutative")
    law = Law::commutative;
  else if (suite == "flexible")
    law = Law::flexible;
  else
    fail(errc::usage, "unknown verify suite '" + suite + "'");
  auto rep = verify_law(*a, law);
  out["pass"] = rep.result.pass;
  if (!rep.result.pass) out["witness"] = rep.result.witness;
  return out;
}

MagicSlot slot_from_string(const std::string& s) {
  if (s == "1") return MagicSlot::s1;
  if (s == "2") return MagicSlot::s2;
  if (s == "4") return MagicSlot::s4;
  if (s == "8") return MagicSlot::s8_para;
  if (s == "okubo8") return MagicSlot::s8_okubo;
  fail(errc::usage, "magic slots are 1 | 2 | 4 | 8 | okubo8");
}

json jacobi_to_json(const JacobiReport& rep) {
  json out{{"pass", rep.pass},
           {"mode", rep.mode == JacobiMode::full ? "full" : "sample"},
           {"tested", rep.tested}};
  if (rep.has_witness) out["witness"] = {rep.witness[0], rep.witness[1], rep.witness[2]};
  return out;
}

JacobiReport run_jacobi(const LieAlgebra& l, const std::string& spec, unsigned jobs) {
  if (spec == "full") return jacobi_check(l, JacobiMode::full, 0, 0, jobs);
  if (spec.rfind("sample:", 0) == 0) {
    auto rest = spec.substr(7);
    auto pos = rest.find(':');
    if (pos == std::string::npos) fail(errc::usage, "jacobi sample spec is sample:N:SEED");
    std::uint64_t count = std::stoull(rest.substr(0, pos));
    std::uint64_t seed = std::stoull(rest.substr(pos + 1));
    return jacobi_check(l, JacobiMode::sample, count, seed, jobs);
  }
  fail(errc::usage, "jacobi spec is 'full' or 'sample:N:SEED'");
}

json invariants_to_json(const LieInvariants& inv) {
  return json{{"center_dim", inv.center_dim},
              {"derived_dim", inv.derived_dim},
              {"killing_rank", inv.killing_rank}};
}

}  // namespace

extern "C" {

const char* compalg_version(void) { return "compalg 1.0.0"; }

int compalg_last_error_code(void) { return g_last_code; }

const char* compalg_last_error(void) { return g_last_message.c_str(); }

const char* compalg_error_name(int code) { return errc_name(static_cast<errc>(code)); }

void compalg_string_free(char* s) { std::free(s); }

void compalg_algebra_free(compalg_algebra* a) { delete a; }

void compalg_lie_free(compalg_lie* l) { delete l; }

int compalg_build(const char* kind, const char* params_json, compalg_algebra** out) {
  return guarded([&] {
    if (!kind || !out) fail(errc::usage, "null argument");
    *out = new compalg_algebra{build_from_params(kind, parse_options(params_json))};
  });
}

int compalg_algebra_from_json(const char* jsn, compalg_algebra** out) {
  return guarded([&] {
    if (!jsn || !out) fail(errc::usage, "null argument");
    *out = new compalg_algebra{algebra_from_json(json::parse(jsn))};
  });
}

int compalg_algebra_to_json(const compalg_algebra* a, char** out_json) {
  return guarded([&] {
    if (!a || !out_json) fail(errc::usage, "null argument");
    *out_json = dup_string(algebra_to_json(a->ptr).dump(2));
  });
}

int compalg_table(const compalg_algebra* a, const char* layout, char** out_text) {
  return guarded([&] {
    if (!a || !out_text) fail(errc::usage, "null argument");
    std::string l = layout ? layout : "canonical";
    TableLayout tl = l == "figure1"   ? TableLayout::figure1
                     : l == "figure2" ? TableLayout::figure2
                     : l == "canonical"
                         ? TableLayout::canonical
                         : throw error(errc::usage, "layout is canonical | figure1 | figure2");
    *out_text = dup_string(render_table(a->ptr, tl));
  });
}

int compalg_verify(const compalg_algebra* a, const char* suite, const char* options_json,
                   char** report_json) {
  return guarded([&] {
    if (!a || !suite || !report_json) fail(errc::usage, "null argument");
    *report_json = dup_string(verify_to_json(a->ptr, suite, parse_options(options_json)).dump(2));
  });
}

int compalg_split_basis(const compalg_algebra* a, unsigned long long budget,
                        char** result_json) {
  return guarded([&] {
    if (!a || !result_json) fail(errc::usage, "null argument");
    BasisChange bc = split_basis(a->ptr, budget ? budget : kIsotropicBudget);
    json out{{"matrix", matrix_to_json(bc.matrix)}, {"verified", true}};
    *result_json = dup_string(out.dump(2));
  });
}

int compalg_unitalize(const compalg_algebra* a, const char* point_json, compalg_algebra** out) {
  return guarded([&] {
    if (!a || !point_json || !out) fail(errc::usage, "null argument");
    Vec point = coords_from_json(a->ptr, json::parse(point_json), "point");
    *out = new compalg_algebra{kaplansky_unitalize(a->ptr, point)};
  });
}

int compalg_rotation(const compalg_algebra* a, const char* which, const char* p_json,
                     const char* q_json, char** matrix_json) {
  return guarded([&] {
    if (!a || !which || !q_json || !matrix_json) fail(errc::usage, "null argument");
    Element q{a->ptr, coords_from_json(a->ptr, json::parse(q_json), "q")};
    Mat m = [&] {
      if (std::string(which) == "so3") return rotation_so3(q);
      if (std::string(which) == "so4") {
        if (!p_json) fail(errc::usage, "so4 needs p");
        Element p{a->ptr, coords_from_json(a->ptr, json::parse(p_json), "p")};
        return rotation_so4(p, q);
      }
      fail(errc::usage, "rotation kind is so3 | so4");
    }();
    *matrix_json = dup_string(matrix_to_json(m).dump(2));
  });
}

int compalg_triality(const compalg_algebra* a, const char* what, char** report_json) {
  return guarded([&] {
    if (!a || !what || !report_json) fail(errc::usage, "null argument");
    std::string w = what;
    json out;
    if (w == "dim") {
      out = json{{"tri_dim", tri_basis(a->ptr).size()}};
    } else if (w == "fixed-dim") {
      auto basis = tri_basis(a->ptr);
      out = json{{"tri_dim", basis.size()},
                 {"theta_fixed_dim", theta_fixed_dimension(a->ptr, basis)}};
    } else if (w == "verify") {
      auto basis = tri_basis(a->ptr);
      bool ok = true;
      std::size_t d = a->ptr->dim();
      for (std::size_t i = 0; i < d && ok; ++i)
        for (std::size_t j = i + 1; j < d && ok; ++j)
          ok = is_related_derivation(
              a->ptr, t_triple(a->ptr, a->ptr->basis_vec(i), a->ptr->basis_vec(j)));
      // pi0 round trip on the basis
      for (const auto& t : basis) {
        if (!ok) break;
        auto back = pi0_inverse(a->ptr, t.d0);
        ok = back.d1 == t.d1 && back.d2 == t.d2;
      }
      out = json{{"pass", ok}, {"tri_dim", basis.size()}};
    } else {
      fail(errc::usage, "triality action is dim | fixed-dim | verify");
    }
    *report_json = dup_string(out.dump(2));
  });
}

namespace {

json magic_report(const json& opts, compalg_lie** entry_out) {
  FieldPtr f = field_from_option(opts, "field");
  unsigned jobs = opts.value("jobs", 0u);
  bool has_row = opts.contains("row"), has_col = opts.contains("col");
  if (has_row != has_col) fail(errc::usage, "magic needs both row and col (or neither)");
  if (!has_row) {
    bool okubo_mix = opts.value("flavor", "para") == std::string("okubo-mix");
    MagicSlot slots[4] = {MagicSlot::s1, MagicSlot::s2, MagicSlot::s4,
                          okubo_mix ? MagicSlot::s8_okubo : MagicSlot::s8_para};
    std::array<PreparedSymComp, 4> prepared;
    for (int i = 0; i < 4; ++i) prepared[i] = prepare_symcomp(magic_slot_algebra(f, slots[i]));
    json dims = json::array(), reports = json::array();
    bool want_jacobi = opts.contains("jacobi");
    bool want_inv = opts.value("invariants", false);
    for (int r = 0; r < 4; ++r) {
      json dim_row = json::array(), rep_row = json::array();
      for (int c = 0; c < 4; ++c) {
        LieAlgebra g = build_g(prepared[r], prepared[c]);
        dim_row.push_back(g.dim());
        if (want_jacobi || want_inv) {
          json entry{{"dim", g.dim()}};
          if (want_jacobi)
            entry["jacobi"] =
                jacobi_to_json(run_jacobi(g, opts["jacobi"].get<std::string>(), jobs));
          if (want_inv) entry["invariants"] = invariants_to_json(lie_invariants(g));
          rep_row.push_back(entry);
        }
      }
      dims.push_back(dim_row);
      if (want_jacobi || want_inv) reports.push_back(rep_row);
    }
    if (entry_out) *entry_out = nullptr;
    json out{{"dims", dims}};
    if (want_jacobi || want_inv) out["reports"] = reports;
    return out;
  }
  MagicSlot row = slot_from_string(opts["row"].get<std::string>());
  MagicSlot col = slot_from_string(opts["col"].get<std::string>());
  LieAlgebra g = build_g(magic_slot_algebra(f, row), magic_slot_algebra(f, col));
  json out{{"dim", g.dim()}};
  json sectors = json::array();
  for (const auto& [name, len] : g.sectors()) sectors.push_back({name, len});
  out["sectors"] = sectors;
  if (opts.contains("jacobi"))
    out["jacobi"] = jacobi_to_json(run_jacobi(g, opts["jacobi"].get<std::string>(), jobs));
  if (opts.value("invariants", false)) out["invariants"] = invariants_to_json(lie_invariants(g));
  if (entry_out) *entry_out = new compalg_lie{std::move(g)};
  return out;
}

}  // namespace

int compalg_magic(const char* options_json, char** report_json) {
  return guarded([&] {
    if (!report_json) fail(errc::usage, "null argument");
    *report_json = dup_string(magic_report(parse_options(options_json), nullptr).dump(2));
  });
}

int compalg_magic_entry(const char* options_json, compalg_lie** out) {
  return guarded([&] {
    if (!out) fail(errc::usage, "null argument");
    json opts = parse_options(options_json);
    if (!opts.contains("row") || !opts.contains("col"))
      fail(errc::usage, "magic entry needs row and col");
    compalg_lie* handle = nullptr;
    magic_report(opts, &handle);
    *out = handle;
  });
}

int compalg_lie_from_json(const char* jsn, compalg_lie** out) {
  return guarded([&] {
    if (!jsn || !out) fail(errc::usage, "null argument");
    *out = new compalg_lie{lie_from_json(json::parse(jsn))};
  });
}

int compalg_lie_to_json(const compalg_lie* l, char** out_json) {
  return guarded([&] {
    if (!l || !out_json) fail(errc::usage, "null argument");
    *out_json = dup_string(lie_to_json(l->lie).dump(2));
  });
}

int compalg_lie_jacobi(const compalg_lie* l, const char* options_json, char** report_json) {
  return guarded([&] {
    if (!l || !report_json) fail(errc::usage, "null argument");
    json opts = parse_options(options_json);
    std::string mode = opts.value("mode", "full");
    unsigned jobs = opts.value("jobs", 0u);
    JacobiReport rep =
        mode == "full"
            ? jacobi_check(l->lie, JacobiMode::full, 0, 0, jobs)
            : jacobi_check(l->lie, JacobiMode::sample, opts.value("count", 1000000ull),
                           opts.value("seed", 42ull), jobs);
    *report_json = dup_string(jacobi_to_json(rep).dump(2));
  });
}

int compalg_lie_invariants(const compalg_lie* l, char** report_json) {
  return guarded([&] {
    if (!l || !report_json) fail(errc::usage, "null argument");
    *report_json = dup_string(invariants_to_json(lie_invariants(l->lie)).dump(2));
  });
}

}  // extern "C"
