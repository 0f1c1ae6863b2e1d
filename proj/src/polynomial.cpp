#include "goedel/polynomial.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace goedel {

namespace {

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(const mpz_class& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(std::uint64_t index) {
  Polynomial p;
  p.add_term({{index, 1}}, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
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
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

std::vector<std::uint64_t> Polynomial::variables() const {
  std::set<std::uint64_t> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::uint32_t Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

mpz_class Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Polynomial::evaluate(const std::map<std::uint64_t, mpz_class>& at,
                               const mpz_class& fill) const {
  mpz_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class t = c;
    for (const auto& [v, e] : m) {
      auto it = at.find(v);
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), (it == at.end() ? fill : it->second).get_mpz_t(), e);
      t *= p;
    }
    total += t;
  }
  return total;
}

mpz_class Polynomial::evaluate_all(const mpz_class& value) const { return evaluate({}, value); }

std::vector<mpz_class> Polynomial::univariate(std::uint64_t x) const {
  std::vector<mpz_class> out(degree() + 1, 0);
  for (const auto& [m, c] : terms_) {
    if (m.empty()) out[0] += c;
    else if (m.size() == 1 && m[0].first == x) out[m[0].second] += c;
    else throw std::invalid_argument("polynomial is not univariate in x" + std::to_string(x));
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class mag = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

Polynomial Polynomial::parse(const std::string& text) {
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto digits = [&] {
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) throw std::invalid_argument("polynomial: expected digits at " + std::to_string(s));
    return text.substr(s, i - s);
  };
  Polynomial out;
  int sign = 1;
  ws();
  if (i < text.size() && text[i] == '-') {
    sign = -1;
    ++i;
  }
  while (true) {
    ws();
    Polynomial term = constant(sign);
    bool more = true;
    while (more) {
      ws();
      if (i < text.size() && text[i] == 'x') {
        ++i;
        std::uint64_t v = std::stoull(digits());
        std::uint32_t e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<std::uint32_t>(std::stoul(digits()));
        }
        for (std::uint32_t k = 0; k < e; ++k) term = term * variable(v);
      } else {
        term = term * constant(mpz_class(digits(), 10));
      }
      ws();
      more = i < text.size() && text[i] == '*';
      if (more) ++i;
    }
    out += term;
    ws();
    if (i == text.size()) break;
    if (text[i] == '+') sign = 1;
    else if (text[i] == '-') sign = -1;
    else throw std::invalid_argument("polynomial: unexpected character at " + std::to_string(i));
    ++i;
  }
  return out;
}

}  // namespace goedel
