#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "gammabnd/errors.hpp"
#include "gammabnd/log_complex.hpp"

namespace gammabnd {

// Distance below which u counts as sitting on the excluded lattice
// -N - (2vi/pi) Z, and the wider band in which it is accepted but flagged.
inline constexpr double kLatticeTolerance = 1e-10;
inline constexpr double kLatticeWarnBand = 1e-6;

struct Parameters {
  std::complex<double> u;
  double v = 0.0;
};

struct ValidityReport {
  bool valid = true;
  bool ill_conditioned = false;  // u within the warn band of the lattice
  long m = 0;                    // nearest lattice point u ~ -m - (2vi/pi) k
  long k = 0;
  double distance = std::numeric_limits<double>::infinity();
};

// Accepts iff v != 0 and u stays at least kLatticeTolerance away from every
// lattice point -m - (2vi/pi) k, m in N, k in Z.  Only the nearest (m, k) can
// violate the bound, so the check is O(1).
inline ValidityReport validate_params(const Parameters& p) {
  ValidityReport r;
  if (p.v == 0.0 || !std::isfinite(p.v)) {
    r.valid = false;
    r.distance = 0.0;
    return r;
  }
  if (!std::isfinite(p.u.real()) || !std::isfinite(p.u.imag())) {
    r.valid = false;
    r.distance = 0.0;
    return r;
  }
  const double m_real = std::max(0.0, std::round(-p.u.real()));
  const long m = static_cast<long>(m_real);
  const long k = std::lround(-p.u.imag() * kPi / (2.0 * p.v));
  const double dre = p.u.real() + m_real;
  const double dim = p.u.imag() + (2.0 * p.v / kPi) * static_cast<double>(k);
  const double dist = std::hypot(dre, dim);
  r.m = m;
  r.k = k;
  r.distance = dist;
  if (dist <= kLatticeTolerance) {
    r.valid = false;
  } else if (dist < kLatticeWarnBand) {
    r.ill_conditioned = true;
  }
  return r;
}

inline void require_valid(const Parameters& p) {
  const ValidityReport r = validate_params(p);
  if (r.valid) return;
  std::ostringstream msg;
  if (p.v == 0.0 || !std::isfinite(p.v)) {
    msg << "v must be a nonzero finite real (got " << p.v << ")";
  } else {
    msg << "u = " << p.u.real() << (p.u.imag() < 0 ? "" : "+") << p.u.imag()
        << "i lies on the excluded lattice -m - (2vi/pi)k at (m, k) = (" << r.m
        << ", " << r.k << ")";
  }
  throw InvalidParameters(msg.str(), r.m, r.k);
}

// Point of the annulus e^{-|v|} < |z| < e^{|v|}, with arg z in (-pi, pi] and
// ln|z| cached.  A signed-zero imaginary part is canonicalized to +0 so that
// negative reals land on the arg = +pi side of the cut.
struct AnnulusPoint {
  std::complex<double> z;
  double log_abs;

  explicit AnnulusPoint(std::complex<double> zz)
      : z(zz.imag() == 0.0 ? std::complex<double>(zz.real(), +0.0) : zz),
        log_abs(std::log(std::abs(z))) {}

  double arg() const { return std::arg(z); }
  bool inside(double v) const {
    return std::isfinite(log_abs) && std::abs(log_abs) < std::abs(v);
  }
};

inline std::string annulus_message(const AnnulusPoint& z, double v) {
  std::ostringstream msg;
  msg << "|z| = " << std::abs(z.z) << " outside the open annulus (e^-" << std::abs(v)
      << ", e^" << std::abs(v) << ")";
  return msg.str();
}

}  // namespace gammabnd
