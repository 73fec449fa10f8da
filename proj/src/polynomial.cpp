#include "compalg/polynomial.hpp"

#include <algorithm>

namespace compalg {

Polynomial Polynomial::constant(const FieldPtr& f, const Scalar& c) {
  Polynomial p(f);
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(const FieldPtr& f, unsigned var) {
  Polynomial p(f);
  p.add_term({static_cast<std::uint16_t>(var)}, f->one());
  return p;
}

std::optional<std::pair<Monomial, Scalar>> Polynomial::witness() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.field_);
  Monomial prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod.resize(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), prod.begin());
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(field_);
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin(), jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

std::string Polynomial::monomial_str(const Monomial& m,
                                     const std::function<std::string(unsigned)>& var_name) {
  if (m.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < m.size();) {
    size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += "*";
    out += var_name(m[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string Polynomial::str(const std::function<std::string(unsigned)>& var_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    std::string term;
    if (m.empty()) {
      term = cs;
    } else {
      std::string ms = monomial_str(m, var_name);
      if (cs == "1")
        term = ms;
      else if (cs == "-1")
        term = "-" + ms;
      else {
        bool parens = false;
        for (size_t i = 1; i < cs.size(); ++i)
          if (cs[i] == '+' || cs[i] == '-') parens = true;
        term = (parens ? "(" + cs + ")" : cs) + "*" + ms;
      }
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out;
}

}  // namespace compalg
