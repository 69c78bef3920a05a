#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace gammabnd {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kLnPi = 1.144729885849400174143427351353058712;
inline constexpr double kLnTwoPi = 1.837877066409345483560659472811235279;

// Reduce an angle to the principal interval (-pi, pi].
inline double wrap_angle(double x) {
  double r = std::remainder(x, kTwoPi);
  if (r <= -kPi) r = kPi;
  return r;
}

// Distance between two angles on the circle, in [0, pi].
inline double circle_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

// A complex number stored as (ln|w|, arg w).  Survives magnitudes far outside
// the double range; w == 0 is encoded as log_modulus == -inf.
struct LogComplex {
  double log_modulus = -std::numeric_limits<double>::infinity();
  double argument = 0.0;  // radians, principal (-pi, pi] unless noted otherwise

  static LogComplex zero() { return {}; }

  bool is_zero() const {
    return std::isinf(log_modulus) && log_modulus < 0.0;
  }

  static LogComplex from_complex(std::complex<double> w) {
    if (w.real() == 0.0 && w.imag() == 0.0) return zero();
    return {std::log(std::abs(w)), std::arg(w)};
  }

  // From a complex logarithm value; the imaginary part is reduced to (-pi, pi].
  static LogComplex from_log(std::complex<double> lw) {
    return {lw.real(), wrap_angle(lw.imag())};
  }

  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    const double m = std::exp(log_modulus);
    return {m * std::cos(argument), m * std::sin(argument)};
  }

  std::complex<double> as_log() const { return {log_modulus, argument}; }
};

inline LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() || b.is_zero()) return LogComplex::zero();
  return {a.log_modulus + b.log_modulus, wrap_angle(a.argument + b.argument)};
}

// 1/w in log form; w must be nonzero.
inline LogComplex reciprocal(const LogComplex& a) {
  return {-a.log_modulus, wrap_angle(-a.argument)};
}

}  // namespace gammabnd
