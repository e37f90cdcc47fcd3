#include "hilbloc/rational.hpp"

#include <cctype>

#include "hilbloc/error.hpp"

namespace hilbloc {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty rational literal");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' || ch == '+')) {
      throw Error("malformed rational literal '" + s + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Rational ratio(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational binomial(const Rational& x, int k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (x - i);
    r /= (i + 1);
  }
  return r;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace hilbloc
