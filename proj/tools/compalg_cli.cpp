// Command-line front end for libcompalg. Talks to the library exclusively
// through the C API in compalg.h; all structured data moves as JSON.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "compalg.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct StringOut {
  char* s = nullptr;
  ~StringOut() { compalg_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct AlgebraHandle {
  compalg_algebra* a = nullptr;
  ~AlgebraHandle() { compalg_algebra_free(a); }
};

struct LieHandle {
  compalg_lie* l = nullptr;
  ~LieHandle() { compalg_lie_free(l); }
};

[[noreturn]] void die_api(int code) {
  std::cerr << "error [" << compalg_error_name(code) << "]: " << compalg_last_error() << "\n";
  std::exit(kExitUsage);
}

void check_api(int code) {
  if (code != 0) die_api(code);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(kExitUsage);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(kExitUsage);
  }
  out << text << "\n";
}

json csv_to_coords(const std::string& csv) {
  json arr = json::array();
  std::string cur;
  int depth = 0;
  for (char c : csv) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      arr.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  arr.push_back(cur);
  return arr;
}

bool looks_like_lie(const std::string& text) {
  auto parsed = json::parse(text, nullptr, false);
  return parsed.is_object() && parsed.contains("bracket");
}

}  // namespace

int run(int argc, char** argv);

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"compalg: exact composition algebras, triality and the magic square"};
  app.set_version_flag("--version", compalg_version());
  app.require_subcommand(1);
  unsigned long long seed = 42;
  unsigned jobs = 0;
  app.add_option("--seed", seed, "seed for sampled checks (default 42)");
  app.add_option("--jobs", jobs, "worker threads, 0 = hardware");

  // ---- build
  auto* build = app.add_subcommand("build", "construct an algebra");
  build->fallthrough();
  std::string kind, field_spec, mu, alpha, beta, lambda, omega, in_path, autom = "cyclic",
                    point_csv, out_path;
  bool check_cube = false;
  build->add_option("kind", kind,
                    "ground | etale | cd | split-cayley | quaternions | para | petersson | "
                    "split-okubo | okubo-sl3 | okubo-j | okubo-char3 | char3-dim2")
      ->required();
  build->add_option("--field", field_spec, "field spec, e.g. q, gf:7, ratfun:gf:3:t");
  build->add_option("--mu", mu);
  build->add_option("--alpha", alpha);
  build->add_option("--beta", beta);
  build->add_option("--lambda", lambda);
  build->add_option("--omega", omega);
  build->add_option("--in", in_path, "input algebra JSON file");
  build->add_option("--autom", autom, "petersson automorphism: cyclic | grading | identity");
  build->add_option("--point", point_csv, "comma-separated coordinates");
  build->add_flag("--check-cube", check_cube, "require lambda outside F^3 (char3-dim2)");
  build->add_option("--out", out_path, "write the algebra JSON here (default stdout)");

  // ---- table
  auto* table = app.add_subcommand("table", "print a multiplication table");
  table->fallthrough();
  std::string table_file, layout = "canonical";
  table->add_option("file", table_file)->required();
  table->add_option("--layout", layout, "canonical | figure1 | figure2");

  // ---- verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite, verify_file, mode = "symbolic", jacobi_spec;
  unsigned long long cap = 0;
  verify->add_option("suite", suite,
                     "composition | hurwitz | symmetric | associative | commutative | "
                     "flexible | jacobi")
      ->required();
  verify->add_option("file", verify_file)->required();
  verify->add_option("--mode", mode, "symbolic | exhaustive");
  verify->add_option("--cap", cap, "exhaustive cap on |F|^dim");
  verify->add_option("--jacobi", jacobi_spec, "full | sample:N[:SEED] (suite jacobi)");

  // ---- split-basis
  auto* sb = app.add_subcommand("split-basis", "find a split Cayley basis");
  sb->fallthrough();
  std::string sb_file;
  unsigned long long budget = 0;
  sb->add_option("file", sb_file)->required();
  sb->add_option("--budget", budget, "isotropic search budget");

  // ---- unitalize
  auto* unital = app.add_subcommand("unitalize", "Kaplansky unitalization");
  unital->fallthrough();
  std::string unital_file, unital_point, unital_out;
  unital->add_option("file", unital_file)->required();
  unital->add_option("--point", unital_point, "comma-separated coordinates")->required();
  unital->add_option("--out", unital_out);

  // ---- rotate
  auto* rotate = app.add_subcommand("rotate", "quaternion rotation matrices");
  rotate->fallthrough();
  std::string rot_kind, rot_file, rot_p, rot_q;
  rotate->add_option("kind", rot_kind, "so3 | so4")->required();
  rotate->add_option("file", rot_file, "quaternion algebra JSON")->required();
  rotate->add_option("--q", rot_q, "comma-separated coordinates")->required();
  rotate->add_option("--p", rot_p, "comma-separated coordinates (so4)");

  // ---- triality
  auto* tri = app.add_subcommand("triality", "triality Lie algebra checks");
  tri->fallthrough();
  std::string tri_what, tri_file;
  tri->add_option("action", tri_what, "dim | fixed-dim | verify")->required();
  tri->add_option("file", tri_file)->required();

  // ---- magic
  auto* magic = app.add_subcommand("magic", "Freudenthal magic square");
  magic->fallthrough();
  std::string m_field, m_row, m_col, m_flavor = "para", m_jacobi, m_out;
  bool m_invariants = false;
  magic->add_option("--field", m_field, "field spec")->required();
  magic->add_option("--row", m_row, "1 | 2 | 4 | 8 | okubo8");
  magic->add_option("--col", m_col, "1 | 2 | 4 | 8 | okubo8");
  magic->add_option("--flavor", m_flavor, "para | okubo-mix (grid mode)");
  magic->add_option("--jacobi", m_jacobi, "full | sample:N[:SEED]");
  magic->add_flag("--invariants", m_invariants, "compute center/derived/Killing data");
  magic->add_option("--out", m_out, "write the Lie algebra JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto normalize_jacobi = [&](std::string spec) {
    // allow sample:N to pick up --seed
    if (spec.rfind("sample:", 0) == 0 && spec.find(':', 7) == std::string::npos)
      spec += ":" + std::to_string(seed);
    return spec;
  };

  if (*build) {
    json params;
    if (!field_spec.empty()) params["field"] = field_spec;
    if (!mu.empty()) params["mu"] = mu;
    if (!alpha.empty()) params["alpha"] = alpha;
    if (!beta.empty()) params["beta"] = beta;
    if (!lambda.empty()) params["lambda"] = lambda;
    if (!omega.empty()) params["omega"] = omega;
    if (!in_path.empty()) params["in"] = json::parse(read_file(in_path));
    if (!autom.empty()) params["autom"] = autom;
    if (!point_csv.empty()) params["point"] = csv_to_coords(point_csv);
    if (check_cube) params["check_cube"] = true;
    AlgebraHandle h;
    check_api(compalg_build(kind.c_str(), params.dump().c_str(), &h.a));
    StringOut out;
    check_api(compalg_algebra_to_json(h.a, &out.s));
    write_output(out_path, out.str());
    return kExitPass;
  }

  if (*table) {
    AlgebraHandle h;
    check_api(compalg_algebra_from_json(read_file(table_file).c_str(), &h.a));
    StringOut out;
    check_api(compalg_table(h.a, layout.c_str(), &out.s));
    std::cout << out.str();
    return kExitPass;
  }

  if (*verify) {
    std::string text = read_file(verify_file);
    if (suite == "jacobi") {
      if (!looks_like_lie(text)) {
        std::cerr << "error: jacobi verification needs a Lie algebra JSON file\n";
        return kExitUsage;
      }
      LieHandle h;
      check_api(compalg_lie_from_json(text.c_str(), &h.l));
      json opts{{"jobs", jobs}};
      std::string spec = normalize_jacobi(jacobi_spec.empty() ? "full" : jacobi_spec);
      if (spec == "full") {
        opts["mode"] = "full";
      } else {
        opts["mode"] = "sample";
        auto rest = spec.substr(7);
        auto pos = rest.find(':');
        opts["count"] = std::stoull(rest.substr(0, pos));
        opts["seed"] = std::stoull(rest.substr(pos + 1));
      }
      StringOut out;
      check_api(compalg_lie_jacobi(h.l, opts.dump().c_str(), &out.s));
      std::cout << out.str() << "\n";
      return json::parse(out.str())["pass"].get<bool>() ? kExitPass : kExitFail;
    }
    AlgebraHandle h;
    check_api(compalg_algebra_from_json(text.c_str(), &h.a));
    json opts{{"mode", mode}};
    if (cap) opts["cap"] = cap;
    StringOut out;
    check_api(compalg_verify(h.a, suite.c_str(), opts.dump().c_str(), &out.s));
    std::cout << out.str() << "\n";
    return json::parse(out.str())["pass"].get<bool>() ? kExitPass : kExitFail;
  }

  if (*sb) {
    AlgebraHandle h;
    check_api(compalg_algebra_from_json(read_file(sb_file).c_str(), &h.a));
    StringOut out;
    check_api(compalg_split_basis(h.a, budget, &out.s));
    std::cout << out.str() << "\n";
    return kExitPass;
  }

  if (*unital) {
    AlgebraHandle h;
    check_api(compalg_algebra_from_json(read_file(unital_file).c_str(), &h.a));
    AlgebraHandle result;
    check_api(compalg_unitalize(h.a, csv_to_coords(unital_point).dump().c_str(), &result.a));
    StringOut out;
    check_api(compalg_algebra_to_json(result.a, &out.s));
    write_output(unital_out, out.str());
    return kExitPass;
  }

  if (*rotate) {
    AlgebraHandle h;
    check_api(compalg_algebra_from_json(read_file(rot_file).c_str(), &h.a));
    StringOut out;
    std::string pj = rot_p.empty() ? "" : csv_to_coords(rot_p).dump();
    check_api(compalg_rotation(h.a, rot_kind.c_str(), rot_p.empty() ? nullptr : pj.c_str(),
                               csv_to_coords(rot_q).dump().c_str(), &out.s));
    std::cout << out.str() << "\n";
    return kExitPass;
  }

  if (*tri) {
    AlgebraHandle h;
    check_api(compalg_algebra_from_json(read_file(tri_file).c_str(), &h.a));
    StringOut out;
    check_api(compalg_triality(h.a, tri_what.c_str(), &out.s));
    std::cout << out.str() << "\n";
    json rep = json::parse(out.str());
    if (rep.contains("pass") && !rep["pass"].get<bool>()) return kExitFail;
    return kExitPass;
  }

  if (*magic) {
    json opts{{"field", m_field}, {"jobs", jobs}};
    if (!m_row.empty()) opts["row"] = m_row;
    if (!m_col.empty()) opts["col"] = m_col;
    opts["flavor"] = m_flavor;
    if (!m_jacobi.empty()) opts["jacobi"] = normalize_jacobi(m_jacobi);
    if (m_invariants) opts["invariants"] = true;
    if (!m_out.empty()) {
      LieHandle h;
      check_api(compalg_magic_entry(opts.dump().c_str(), &h.l));
      StringOut lie_json;
      check_api(compalg_lie_to_json(h.l, &lie_json.s));
      write_output(m_out, lie_json.str());
      return kExitPass;
    }
    StringOut out;
    check_api(compalg_magic(opts.dump().c_str(), &out.s));
    std::cout << out.str() << "\n";
    json rep = json::parse(out.str());
    if (rep.contains("jacobi") && !rep["jacobi"]["pass"].get<bool>()) return kExitFail;
    return kExitPass;
  }

  return kExitUsage;
}
