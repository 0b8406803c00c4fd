#include "qfock/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qfock {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  LaurentPoly f;
  f.add_term(exponent, c);
  return f;
}

void LaurentPoly::add_term(int exponent, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return *this = std::move(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  LaurentPoly quotient;
  if (is_zero()) return quotient;
  LaurentPoly rem = *this;
  const int dmax = divisor.max_degree();
  const mpz_class& lead = divisor.terms_.rbegin()->second;
  const int qmin = min_degree() - divisor.min_degree();
  while (!rem.is_zero()) {
    const int e = rem.max_degree() - dmax;
    const mpz_class& top = rem.terms_.rbegin()->second;
    if (e < qmin || !mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error(to_string(divisor) + " does not divide " + to_string(*this));
    LaurentPoly t = monomial(top / lead, e);
    quotient += t;
    rem -= t * divisor;
  }
  return quotient;
}

bool LaurentPoly::in_q_zq() const { return is_zero() || min_degree() > 0; }

mpz_class LaurentPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

int q_exponent_of_residue(int i, const HParams& p) {
  if (i < 0 || i > p.n()) throw std::invalid_argument("residue out of range");
  if (i == 0) return 1;
  return i == p.n() ? 4 : 2;
}

LaurentPoly q_of_residue(int i, const HParams& p) {
  return LaurentPoly::q_power(q_exponent_of_residue(i, p));
}

LaurentPoly quantum_integer(int k, int e) {
  if (k < 0) return -quantum_integer(-k, e);
  // v^(k-1) + v^(k-3) + ... + v^(1-k)
  LaurentPoly out;
  for (int j = k - 1; j >= 1 - k; j -= 2) out += LaurentPoly::q_power(j * e);
  return out;
}

LaurentPoly quantum_factorial(int k, int e) {
  if (k < 0) throw std::invalid_argument("negative quantum factorial");
  LaurentPoly out(1);
  for (int j = 2; j <= k; ++j) out *= quantum_integer(j, e);
  return out;
}

LaurentPoly symmetric_correction(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) break;
    out += LaurentPoly::monomial(c, e);
    if (e < 0) out += LaurentPoly::monomial(c, -e);
  }
  return out;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

mpz_class parse_integer(const std::string& digits, const std::string& whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char ch) { return std::isdigit(ch); }))
    throw std::invalid_argument("bad coefficient in '" + whole + "'");
  return mpz_class(digits);
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  LaurentPoly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected a sign in '" + text + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^')) ++end;
    const std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw std::invalid_argument("empty term in '" + text + "'");
    const auto qpos = term.find('q');
    mpz_class c;
    int exponent = 0;
    if (qpos == std::string::npos) {
      c = parse_integer(term, text);
    } else {
      std::string coeff = term.substr(0, qpos);
      if (coeff.empty()) {
        c = 1;
      } else {
        if (coeff.back() != '*') throw std::invalid_argument("expected '*' in '" + text + "'");
        coeff.pop_back();
        c = parse_integer(coeff, text);
      }
      const std::string rest = term.substr(qpos + 1);
      if (rest.empty()) {
        exponent = 1;
      } else {
        if (rest.front() != '^' || rest.size() < 2)
          throw std::invalid_argument("bad exponent in '" + text + "'");
        std::string digits = rest.substr(1);
        bool neg = false;
        if (digits.front() == '-' || digits.front() == '+') {
          neg = digits.front() == '-';
          digits.erase(0, 1);
        }
        mpz_class e = parse_integer(digits, text);
        if (!e.fits_sint_p()) throw std::invalid_argument("exponent too large in '" + text + "'");
        exponent = static_cast<int>(e.get_si()) * (neg ? -1 : 1);
      }
    }
    out += LaurentPoly::monomial(c * sign, exponent);
  }
  return out;
}

}  // namespace qfock
