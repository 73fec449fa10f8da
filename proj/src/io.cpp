#include "compalg/io.hpp"

#include <algorithm>
#include <sstream>

namespace compalg {

namespace {

[[noreturn]] void bad_schema(const std::string& where, const std::string& what) {
  fail(errc::schema_violation, "schema violation at " + where + ": " + what);
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad_schema(where, "expected a string");
  return j.get<std::string>();
}

std::size_t require_index(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad_schema(where, "expected a non-negative index");
  auto v = j.get<unsigned long long>();
  if (v >= bound) bad_schema(where, "index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

}  // namespace

json field_to_json(const FieldPtr& f) {
  switch (f->kind()) {
    case FieldKind::rationals:
      return json{{"kind", "Q"}};
    case FieldKind::prime:
      return json{{"kind", "GF"}, {"p", f->modulus()}};
    case FieldKind::quad_ext:
      return json{{"kind", "ext2"},
                  {"base", field_to_json(f->base())},
                  {"minpoly", {f->ext_c0().str(), f->ext_c1().str()}}};
    case FieldKind::cubic_ext:
      return json{{"kind", "ext3"},
                  {"base", field_to_json(f->base())},
                  {"alpha", f->ext_alpha().str()}};
    case FieldKind::rat_fun:
      return json{{"kind", "ratfun"}, {"base", field_to_json(f->base())}, {"var", f->symbol()}};
  }
  fail(errc::internal, "bad field kind");
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad_schema("field", "missing kind");
  std::string kind = require_string(j["kind"], "field.kind");
  if (kind == "Q") return Field::rationals();
  if (kind == "GF") {
    if (!j.contains("p") || !j["p"].is_number_integer() || j["p"].get<long long>() <= 0)
      bad_schema("field", "GF needs a prime p");
    return Field::prime(j["p"].get<std::uint64_t>());
  }
  if (kind == "ext2") {
    if (!j.contains("base")) bad_schema("field", "ext2 needs a base");
    FieldPtr base = field_from_json(j["base"]);
    Scalar c0 = base->one(), c1 = base->one();  // default x^2+x+1
    if (j.contains("minpoly")) {
      const json& mp = j["minpoly"];
      if (!mp.is_array() || mp.size() != 2) bad_schema("field.minpoly", "expected [c0, c1]");
      c0 = base->parse(require_string(mp[0], "field.minpoly[0]"));
      c1 = base->parse(require_string(mp[1], "field.minpoly[1]"));
    }
    return Field::quadratic_ext(base, c0, c1);
  }
  if (kind == "ext3") {
    if (!j.contains("base") || !j.contains("alpha")) bad_schema("field", "ext3 needs base, alpha");
    FieldPtr base = field_from_json(j["base"]);
    return Field::cubic_radical_ext(base, base->parse(require_string(j["alpha"], "field.alpha")));
  }
  if (kind == "ratfun") {
    if (!j.contains("base")) bad_schema("field", "ratfun needs a base");
    std::string var = j.contains("var") ? require_string(j["var"], "field.var") : "t";
    return Field::rational_functions(field_from_json(j["base"]), var);
  }
  bad_schema("field", "unknown kind '" + kind + "'");
}

FieldPtr field_from_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '{') return field_from_json(json::parse(spec));
  if (spec == "q" || spec == "Q") return Field::rationals();
  auto split_last = [](const std::string& s, std::string* head, std::string* tail) {
    auto pos = s.rfind(':');
    if (pos == std::string::npos) return false;
    *head = s.substr(0, pos);
    *tail = s.substr(pos + 1);
    return true;
  };
  if (spec.rfind("gf:", 0) == 0) {
    try {
      return Field::prime(std::stoull(spec.substr(3)));
    } catch (const std::invalid_argument&) {
      fail(errc::usage, "bad prime in field spec '" + spec + "'");
    }
  }
  if (spec.rfind("omega:", 0) == 0) {
    auto [f, w] = adjoin_omega(field_from_spec(spec.substr(6)));
    (void)w;
    return f;
  }
  if (spec.rfind("ratfun:", 0) == 0) {
    std::string head, var;
    if (!split_last(spec.substr(7), &head, &var))
      fail(errc::usage, "ratfun spec needs ratfun:<base>:<var>");
    return Field::rational_functions(field_from_spec(head), var);
  }
  if (spec.rfind("cubic:", 0) == 0) {
    std::string head, alpha;
    if (!split_last(spec.substr(6), &head, &alpha))
      fail(errc::usage, "cubic spec needs cubic:<base>:<alpha>");
    FieldPtr base = field_from_spec(head);
    return Field::cubic_radical_ext(base, base->parse(alpha));
  }
  fail(errc::usage, "unknown field spec '" + spec + "'");
}

json quadform_to_json(const QuadraticForm& q) {
  json coeffs = json::array();
  for (const auto& [ij, c] : q.coeffs()) coeffs.push_back({ij.first, ij.second, c.str()});
  return json{{"dim", q.dim()}, {"coeffs", coeffs}};
}

QuadraticForm quadform_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_object() || !j.contains("dim")) bad_schema("norm", "missing dim");
  QuadraticForm q(f, j["dim"].get<std::size_t>());
  if (j.contains("coeffs")) {
    for (const auto& e : j["coeffs"]) {
      if (!e.is_array() || e.size() != 3) bad_schema("norm.coeffs", "expected [i, j, scalar]");
      std::size_t i = require_index(e[0], q.dim(), "norm.coeffs[i]");
      std::size_t jj = require_index(e[1], q.dim(), "norm.coeffs[j]");
      if (i > jj) bad_schema("norm.coeffs", "coefficients use i <= j");
      q.set_coeff(i, jj, f->parse(require_string(e[2], "norm.coeffs[c]")));
    }
  }
  return q;
}

json algebra_to_json(const AlgebraPtr& a) {
  json mul = json::array();
  for (const auto& e : a->tensor_entries()) mul.push_back({e.i, e.j, e.k, e.c.str()});
  json out{{"field", field_to_json(a->field())},
           {"dim", a->dim()},
           {"basis", a->labels()},
           {"mul", mul}};
  if (a->unit()) {
    json u = json::array();
    for (const auto& c : *a->unit()) u.push_back(c.str());
    out["unit"] = u;
  }
  if (a->norm()) out["norm"] = quadform_to_json(*a->norm());
  return out;
}

AlgebraPtr algebra_from_json(const json& j) {
  if (!j.is_object()) bad_schema("algebra", "expected an object");
  for (const char* key : {"field", "dim", "basis", "mul"})
    if (!j.contains(key)) bad_schema("algebra", std::string("missing '") + key + "'");
  FieldPtr f = field_from_json(j["field"]);
  std::size_t dim = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  for (const auto& l : j["basis"]) labels.push_back(require_string(l, "algebra.basis"));
  if (labels.size() != dim) bad_schema("algebra.basis", "length does not match dim");
  std::vector<TensorEntry> entries;
  for (const auto& e : j["mul"]) {
    if (!e.is_array() || e.size() != 4) bad_schema("algebra.mul", "expected [i, j, k, scalar]");
    entries.push_back({require_index(e[0], dim, "algebra.mul[i]"),
                       require_index(e[1], dim, "algebra.mul[j]"),
                       require_index(e[2], dim, "algebra.mul[k]"),
                       f->parse(require_string(e[3], "algebra.mul[c]"))});
  }
  std::optional<Vec> unit;
  if (j.contains("unit")) {
    if (!j["unit"].is_array() || j["unit"].size() != dim)
      bad_schema("algebra.unit", "expected dim scalars");
    Vec u;
    for (const auto& c : j["unit"]) u.push_back(f->parse(require_string(c, "algebra.unit")));
    unit = std::move(u);
  }
  std::optional<QuadraticForm> norm;
  if (j.contains("norm")) {
    norm = quadform_from_json(f, j["norm"]);
    if (norm->dim() != dim) bad_schema("algebra.norm", "dimension mismatch");
  }
  return Algebra::make(f, std::move(labels), entries, std::move(unit), std::move(norm));
}

json lie_to_json(const LieAlgebra& l) {
  json bracket = json::array();
  for (const auto& e : l.tensor_entries()) bracket.push_back({e.i, e.j, e.k, e.c.str()});
  json sectors = json::array();
  for (const auto& [name, len] : l.sectors()) sectors.push_back({name, len});
  return json{{"field", field_to_json(l.field())},
              {"dim", l.dim()},
              {"labels", l.labels()},
              {"sectors", sectors},
              {"bracket", bracket}};
}

LieAlgebra lie_from_json(const json& j) {
  if (!j.is_object()) bad_schema("lie", "expected an object");
  for (const char* key : {"field", "dim", "bracket"})
    if (!j.contains(key)) bad_schema("lie", std::string("missing '") + key + "'");
  FieldPtr f = field_from_json(j["field"]);
  std::size_t dim = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(require_string(l, "lie.labels"));
    if (labels.size() != dim) bad_schema("lie.labels", "length does not match dim");
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  std::vector<std::pair<std::string, std::size_t>> sectors;
  if (j.contains("sectors"))
    for (const auto& s : j["sectors"]) {
      if (!s.is_array() || s.size() != 2) bad_schema("lie.sectors", "expected [name, size]");
      sectors.emplace_back(require_string(s[0], "lie.sectors"), s[1].get<std::size_t>());
    }
  std::vector<TensorEntry> entries;
  for (const auto& e : j["bracket"]) {
    if (!e.is_array() || e.size() != 4) bad_schema("lie.bracket", "expected [i, j, k, scalar]");
    entries.push_back({require_index(e[0], dim, "lie.bracket[i]"),
                       require_index(e[1], dim, "lie.bracket[j]"),
                       require_index(e[2], dim, "lie.bracket[k]"),
                       f->parse(require_string(e[3], "lie.bracket[c]"))});
  }
  return LieAlgebra::make(f, std::move(labels), std::move(sectors), entries);
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

std::string render_table(const AlgebraPtr& a, TableLayout layout) {
  std::size_t d = a->dim();
  std::vector<std::size_t> order(d);
  std::vector<std::size_t> group_after;  // column indices after which a separator goes
  if (layout == TableLayout::canonical) {
    for (std::size_t i = 0; i < d; ++i) order[i] = i;
  } else {
    if (d != 8) fail(errc::usage, "figure layouts need an 8-dimensional algebra");
    if (layout == TableLayout::figure1) {
      order = {0, 1, 2, 3, 4, 5, 6, 7};
      group_after = {1, 4};
    } else {
      order = {0, 1, 2, 5, 3, 6, 4, 7};
      group_after = {1, 3, 5};
    }
  }

  auto cell = [&](std::size_t i, std::size_t j) {
    Vec prod = a->mul(a->basis_vec(order[i]), a->basis_vec(order[j]));
    std::string out;
    for (std::size_t pos = 0; pos < d; ++pos) {
      std::size_t k = order[pos];
      if (prod[k].is_zero()) continue;
      std::string cs = prod[k].str();
      std::string term;
      if (cs == "1")
        term = a->labels()[k];
      else if (cs == "-1")
        term = "-" + a->labels()[k];
      else
        term = cs + "*" + a->labels()[k];
      if (out.empty())
        out = term;
      else if (term[0] == '-')
        out += term;
      else
        out += "+" + term;
    }
    return out.empty() ? std::string("0") : out;
  };

  std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
  std::vector<std::size_t> widths(d);
  for (std::size_t j = 0; j < d; ++j) widths[j] = a->labels()[order[j]].size();
  std::size_t head = 1;
  for (std::size_t i = 0; i < d; ++i) {
    head = std::max(head, a->labels()[order[i]].size());
    for (std::size_t j = 0; j < d; ++j) {
      cells[i][j] = cell(i, j);
      widths[j] = std::max(widths[j], cells[i][j].size());
    }
  }

  auto is_group_end = [&](std::size_t j) {
    return std::find(group_after.begin(), group_after.end(), j) != group_after.end();
  };
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << pad("*", head) << " |";
  for (std::size_t j = 0; j < d; ++j) {
    os << " " << pad(a->labels()[order[j]], widths[j]);
    if (is_group_end(j) && j + 1 < d) os << " |";
  }
  os << "\n";
  os << std::string(head, '-') << "-+";
  for (std::size_t j = 0; j < d; ++j) {
    os << std::string(widths[j] + 1, '-');
    if (is_group_end(j) && j + 1 < d) os << "-+";
  }
  os << "\n";
  for (std::size_t i = 0; i < d; ++i) {
    os << pad(a->labels()[order[i]], head) << " |";
    for (std::size_t j = 0; j < d; ++j) {
      os << " " << pad(cells[i][j], widths[j]);
      if (is_group_end(j) && j + 1 < d) os << " |";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace compalg
