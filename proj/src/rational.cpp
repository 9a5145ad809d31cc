#include "heyde/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace heyde {

std::optional<Rat> rationalize(double x, double tol, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool negative = x < 0;
  double v = std::fabs(x);
  // Continued-fraction convergents p/q of v.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e17) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0 || p2 < 0) return std::nullopt;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::fabs(approx - v) <= tol) return Rat(negative ? -p1 : p1, q1);
    double rem = frac - fl;
    if (rem <= 0) break;
    frac = 1.0 / rem;
  }
  return std::nullopt;
}

Rat parse_rational(const std::string& text) {
  const auto bad = [&]() {
    return std::invalid_argument("malformed rational '" + text + "' (expected p or p/q)");
  };
  size_t slash = text.find('/');
  const std::string num_s = text.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num_s.empty() || den_s.empty()) throw bad();
  size_t pos = 0;
  long long num = 0, den = 1;
  try {
    num = std::stoll(num_s, &pos);
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (pos != num_s.size()) throw bad();
  try {
    den = std::stoll(den_s, &pos);
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (pos != den_s.size()) throw bad();
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rat(num, den);
}

std::string format_rational(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace heyde
