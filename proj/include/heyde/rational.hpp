// Exact rational scalars and complex rationals used throughout the library.

#ifndef HEYDE_RATIONAL_HPP_
#define HEYDE_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace heyde {

using Rat = boost::rational<long long>;

// Float comparisons against characteristic-function values use this unless a
// caller overrides it.
inline constexpr double kDefaultTol = 1e-9;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

/// Complex number with exact rational real/imaginary parts.
struct RatComplex {
  Rat re{0};
  Rat im{0};

  RatComplex() = default;
  RatComplex(Rat real, Rat imag = Rat(0)) : re(std::move(real)), im(std::move(imag)) {}

  bool operator==(const RatComplex&) const = default;

  RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
  RatComplex operator-(const RatComplex& o) const { return {re - o.re, im - o.im}; }
  RatComplex operator*(const RatComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  RatComplex operator-() const { return {-re, -im}; }

  RatComplex conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }
  bool is_zero() const { return re == Rat(0) && im == Rat(0); }
  bool is_real() const { return im == Rat(0); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

/// Nearest rational to x within tol, by continued fractions. Fails when no
/// approximation with denominator <= max_den is close enough.
std::optional<Rat> rationalize(double x, double tol, long long max_den = 1000000);

/// "p/q" or "p". Throws std::invalid_argument on malformed input or q == 0.
Rat parse_rational(const std::string& text);

std::string format_rational(const Rat& r);

}  // namespace heyde

#endif  // HEYDE_RATIONAL_HPP_
