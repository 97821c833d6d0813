#include <sstream>

#include "starform/symbol.hpp"

namespace starform {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string to_string(const GaussianRational& z) {
  std::string s = "(" + to_string(z.re);
  s += (z.im < 0) ? "-" : "+";
  Rational a = z.im < 0 ? Rational(-z.im) : z.im;
  s += to_string(a) + "i)";
  return s;
}

std::string to_string(const TauScalar& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (int d = 0; d <= t.degree(); ++d) {
    if (t.coeff(d).is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += to_string(t.coeff(d));
    if (d == 1) s += "tau";
    if (d > 1) s += "tau^" + std::to_string(d);
  }
  return s;
}

std::string TauScalar::str() const { return to_string(*this); }

namespace {

void append_powers(std::string& s, const char* name, const MultiIndex& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    s += " " + std::string(name) + std::to_string(i);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
}

}  // namespace

// Canonical rendering: terms sorted by (k, beta, alpha), which is the map
// order; coefficients in the "(a+bi)tau^d" form.
std::string to_string(const Symbol& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(c) + "]";
    append_powers(out, "q", key.qpow);
    append_powers(out, "p", key.ppow);
    bool osc = false;
    for (int k : key.freq) osc |= (k != 0);
    if (osc) {
      out += " e(";
      for (size_t i = 0; i < key.freq.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(key.freq[i]);
      }
      out += ")";
    }
  }
  return out;
}

std::string Symbol::str() const { return to_string(*this); }

Symbol Symbol::substitute_offset(const MultiIndex& s) const {
  if (static_cast<int>(s.size()) != dim_)
    throw std::invalid_argument("substitute_offset: offset dimension mismatch");
  Symbol r(dim_, glob_);
  for (const auto& [key, c] : terms_) {
    // Expand prod_i (q_i + s_i)^{beta_i}.
    std::vector<std::pair<MultiIndex, Rational>> expansion{{MultiIndex(dim_, 0), Rational(1)}};
    for (int i = 0; i < dim_; ++i) {
      int b = key.qpow[i];
      if (b == 0 || s[i] == 0) {
        for (auto& [m, w] : expansion) m[i] = b;
        continue;
      }
      std::vector<std::pair<MultiIndex, Rational>> next;
      Rational binom = 1;
      BigInt sp = 1;
      for (int j = b; j >= 0; --j) {
        // q_i^j * s_i^{b-j} * C(b, j); iterate j downward so sp = s_i^{b-j}.
        for (const auto& [m, w] : expansion) {
          MultiIndex mi = m;
          mi[i] = j;
          next.emplace_back(std::move(mi), w * binom * Rational(sp));
        }
        sp *= s[i];
        binom = binom * j / (b - j + 1);
      }
      expansion = std::move(next);
    }
    for (const auto& [m, w] : expansion)
      r.add_term(TermKey{key.freq, m, key.ppow}, c * TauScalar(w));
  }
  return r;
}

}  // namespace starform
