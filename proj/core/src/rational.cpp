#include "bbpmcs/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "bbpmcs/errors.hpp"

namespace bbpmcs {

std::string to_fraction_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r, int digits) {
  long long num = r.numerator();
  long long den = r.denominator();
  bool negative = num < 0;
  if (negative) num = -num;

  long long whole = num / den;
  long long rem = num % den;
  std::string frac;
  frac.reserve(digits);
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    frac.push_back(static_cast<char>('0' + rem / den));
    rem %= den;
  }
  // round half away from zero on the remainder
  if (2 * rem >= den) {
    int i = digits - 1;
    while (i >= 0 && frac[i] == '9') frac[i--] = '0';
    if (i >= 0) {
      ++frac[i];
    } else {
      ++whole;
    }
  }
  std::string out = (negative ? "-" : "") + std::to_string(whole);
  if (digits > 0) out += "." + frac;
  return out;
}

namespace {

long long parse_ll(const std::string& s, bool* ok) {
  if (s.empty()) {
    *ok = false;
    return 0;
  }
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &pos);
  } catch (const std::exception&) {
    *ok = false;
    return 0;
  }
  *ok = pos == s.size();
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  bool ok = true;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = parse_ll(text.substr(0, slash), &ok);
    bool ok2 = true;
    long long den = parse_ll(text.substr(slash + 1), &ok2);
    if (!ok || !ok2 || den == 0) {
      throw ParseError(0, "malformed rational '" + text + "'");
    }
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) {
      throw ParseError(0, "malformed rational '" + text + "'");
    }
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-") whole += "0";
    long long w = parse_ll(whole, &ok);
    bool ok2 = true;
    long long f = parse_ll(frac, &ok2);
    if (!ok || !ok2 || f < 0) {
      throw ParseError(0, "malformed rational '" + text + "'");
    }
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational magnitude = Rational(w < 0 ? -w : w) + Rational(f, den);
    return negative ? -magnitude : magnitude;
  }
  long long value = parse_ll(text, &ok);
  if (!ok) throw ParseError(0, "malformed rational '" + text + "'");
  return Rational(value);
}

}  // namespace bbpmcs
