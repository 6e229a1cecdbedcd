#include "hyperham/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperham {

namespace mp = boost::multiprecision;

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial_exact(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational acc = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= acc;
    exponent >>= 1U;
    if (exponent != 0) acc *= acc;
  }
  return result;
}

const Rational& e_rational_50() {
  static const Rational value = [] {
    BigInt digits("271828182845904523536028747135266249775724709369995");
    BigInt scale = mp::pow(BigInt(10), 50);
    return Rational(digits, scale);
  }();
  return value;
}

double log_abs(const BigInt& x) {
  if (x == 0) throw std::domain_error("log_abs: zero");
  BigInt v = mp::abs(x);
  const unsigned bits = static_cast<unsigned>(mp::msb(v)) + 1;
  if (bits <= 1000) return std::log(v.convert_to<double>());
  // Keep the top 64 bits; the rest changes the log by < 2^-60 relatively.
  const unsigned shift = bits - 64;
  BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double log_rational(const Rational& x) {
  if (x <= 0) throw std::domain_error("log_rational: nonpositive argument");
  return log_abs(mp::numerator(x)) - log_abs(mp::denominator(x));
}

double to_double(const Rational& x) {
  if (x == 0) return 0.0;
  const double sign = x < 0 ? -1.0 : 1.0;
  return sign * std::exp(log_rational(mp::abs(x)));
}

Rational rational_from_double(double p) {
  if (!std::isfinite(p)) throw std::invalid_argument("rational_from_double: non-finite value");
  const double scaled = std::ldexp(p, 53);
  if (std::fabs(scaled) >= 0x1.0p62) {
    // Large magnitude: the double itself is an integer multiple of a power of two.
    int exp = 0;
    const double mant = std::frexp(p, &exp);
    const Rational m(BigInt(static_cast<std::int64_t>(std::ldexp(mant, 53))));
    const int e2 = exp - 53;
    if (e2 >= 0) return m * Rational(mp::pow(BigInt(2), static_cast<unsigned>(e2)));
    return m / Rational(mp::pow(BigInt(2), static_cast<unsigned>(-e2)));
  }
  const auto numer = static_cast<std::int64_t>(std::llround(scaled));
  return Rational(BigInt(numer), mp::pow(BigInt(2), 53));
}

Rational parse_rational(std::string_view text) {
  const auto fail = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  BigInt mantissa = 0;
  long exponent = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --exponent;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    ++i;
    const std::string rest(text.substr(i));
    if (rest.empty()) fail();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(rest, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != rest.size()) fail();
    exponent += e;
  }
  Rational value(mantissa);
  if (exponent > 0) value *= Rational(mp::pow(BigInt(10), static_cast<unsigned>(exponent)));
  if (exponent < 0) value /= Rational(mp::pow(BigInt(10), static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

std::string to_decimal_string(const Rational& x, unsigned digits) {
  const bool negative = x < 0;
  const Rational ax = negative ? Rational(-x) : x;
  const BigInt scale = mp::pow(BigInt(10), digits);
  // Round half up on the scaled magnitude.
  const BigInt scaled = (mp::numerator(ax) * scale * 2 + mp::denominator(ax)) / (mp::denominator(ax) * 2);
  std::string whole = BigInt(scaled / scale).str();
  std::string out = negative ? "-" : "";
  out += whole;
  if (digits > 0) {
    std::string frac = BigInt(scaled % scale).str();
    frac.insert(0, digits - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

}  // namespace hyperham
