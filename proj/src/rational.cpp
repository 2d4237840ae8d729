#include "hartogs/rational.hpp"

#include <cmath>
#include <regex>

#include "hartogs/error.hpp"

namespace hartogs {

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(\s*(-?[0-9]+)(?:/([0-9]+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, kPattern)) {
    throw Error(ErrorKind::MalformedInput, "not a rational: '" + text + "'");
  }
  Integer num(match[1].str(), 10);
  Integer den(1);
  if (match[2].matched) den = Integer(match[2].str(), 10);
  if (den == 0) throw Error(ErrorKind::MalformedInput, "zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

double log_integer(const Integer& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

double log_rational(const Rational& q) {
  if (sgn(q) <= 0) throw Error(ErrorKind::MalformedInput, "log of nonpositive rational");
  return log_integer(q.get_num()) - log_integer(q.get_den());
}

}  // namespace hartogs
