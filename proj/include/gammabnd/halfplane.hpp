#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "gammabnd/errors.hpp"
#include "gammabnd/log_complex.hpp"
#include "gammabnd/parameters.hpp"

namespace gammabnd {

// Transport of the annulus onto the right half-plane: t_z is the base of the
// spiral t_z * v_tilde^Z of solutions of z * t^{2iv/pi} = 1, and z lies in
// the annulus iff Re t_z > 0 (equivalently |arg t_z| = pi |ln|z|| / (2v) < pi/2).
// |t_z| = e^{-pi arg z / (2v)}.
struct HalfPlaneImage {
  std::complex<double> t_z;
  double v_tilde = 0.0;                // e^{pi^2 / v}, > 1 for v > 0
  std::complex<double> prefactor;      // (pi^2 / v) e^{(u pi i / 2v) Log z}
  std::complex<double> log_t_z;        // (i pi / 2v) Log z, for overflow-free work
  double log_v_tilde = 0.0;            // pi^2 / v
};

inline HalfPlaneImage map_to_halfplane(const Parameters& p, const AnnulusPoint& z) {
  if (!(p.v > 0.0)) {
    throw InvalidParameters("half-plane transport requires v > 0");
  }
  if (!std::isfinite(z.log_abs)) {
    throw OutsideDomain("z = 0 has no half-plane image");
  }
  const std::complex<double> log_z(z.log_abs, z.arg());
  HalfPlaneImage h;
  h.log_t_z = std::complex<double>(0.0, kPi / (2.0 * p.v)) * log_z;
  h.t_z = std::exp(h.log_t_z);
  h.log_v_tilde = kPi * kPi / p.v;
  h.v_tilde = std::exp(h.log_v_tilde);
  h.prefactor = (kPi * kPi / p.v) * std::exp(p.u * h.log_t_z);
  return h;
}

// Points t_z * v_tilde^k for k in [k_lo, k_hi].  Each point is checked
// internally to satisfy 1 - z * point^{2iv/pi} = 0 to residual <= 1e-10; the
// check works in the log domain, so it holds even for indices whose point
// magnitude exceeds the double range (those entries come back as inf).
inline std::vector<std::complex<double>> pole_spiral(const Parameters& p,
                                                     const AnnulusPoint& z, long k_lo,
                                                     long k_hi) {
  if (k_lo > k_hi) throw std::invalid_argument("pole_spiral: k_lo > k_hi");
  const HalfPlaneImage h = map_to_halfplane(p, z);
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  const std::complex<double> rot(0.0, 2.0 * p.v / kPi);
  for (long k = k_lo; k <= k_hi; ++k) {
    const std::complex<double> log_p =
        h.log_t_z + static_cast<double>(k) * h.log_v_tilde;
    const double residual = std::abs(1.0 - z.z * std::exp(rot * log_p));
    if (!(residual <= 1e-10)) {
      std::ostringstream msg;
      msg << "pole spiral self-check failed at k = " << k << " (residual "
          << residual << ")";
      throw Error("InternalCheck", msg.str());
    }
    out.push_back(std::exp(log_p));
  }
  return out;
}

}  // namespace gammabnd
