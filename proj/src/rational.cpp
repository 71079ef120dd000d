#include "sympair/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympair {

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  std::string d(den);
  if (!d.empty() && d[0] == '+') d.erase(0, 1);
  Integer dz(d);
  if (dz == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(Integer(n), dz);
}

std::string to_string(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

int sign(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

Integer floor_of(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil_of(const Rational& value) { return -floor_of(-value); }

bool is_integral(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RatVector add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector scale(const Rational& s, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

bool proportional(const RatVector& a, const RatVector& b, Rational* factor) {
  if (a.size() != b.size()) return false;
  std::size_t pivot = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == a.size()) throw std::invalid_argument("proportional: reference vector is zero");
  const Rational r = b[pivot] / a[pivot];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != r * a[i]) return false;
  }
  if (factor) *factor = r;
  return true;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace sympair
