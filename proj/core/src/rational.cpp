#include <anick/rational.hpp>

#include <anick/errors.hpp>

#include <cctype>
#include <sstream>

namespace anick {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational parse_rational(const std::string& s) {
  size_t i = 0;
  const size_t n = s.size();
  auto digits = [&](size_t from) {
    size_t j = from;
    while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  size_t numStart = 0;  // BigInt rejects an explicit '+', so drop it here
  if (i < n && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '+') numStart = 1;
    ++i;
  }
  size_t numEnd = digits(i);
  if (numEnd == i) throw InputError("bad rational literal: '" + s + "'");
  if (numEnd == n) return Rational(BigInt(s.substr(numStart)));
  if (s[numEnd] != '/') throw InputError("bad rational literal: '" + s + "'");
  size_t denEnd = digits(numEnd + 1);
  if (denEnd == numEnd + 1 || denEnd != n)
    throw InputError("bad rational literal: '" + s + "'");
  BigInt num(s.substr(numStart, numEnd - numStart));
  BigInt den(s.substr(numEnd + 1));
  if (den == 0) throw InputError("zero denominator in rational literal: '" + s + "'");
  return Rational(num, den);
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n >= 0 && k > n) return 0;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r /= BigInt(i + 1);  // exact: prefix products of binomials divide evenly
  }
  return r;
}

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt falling_factorial(long n, long k) {
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= BigInt(n - i);
  return r;
}

}  // namespace anick
