#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gammabnd/dirichlet.hpp"
#include "gammabnd/errors.hpp"
#include "gammabnd/gamma.hpp"
#include "gammabnd/parameters.hpp"

namespace gammabnd {

// Radial scan toward the annulus boundary.  Diagnostic only: values and
// conditioning are reported, no divergence claim is made.
struct ProbeReport {
  double direction = 0.0;  // theta = arg z
  std::vector<double> radii;
  std::vector<std::complex<double>> values;
  std::vector<long> term_counts;      // S+ term counts (decay-onset indicator)
  std::vector<std::string> status;    // "ok" or the error code at that radius
  Method method = Method::dirichlet;
};

// Radii e^{v (1 - delta_j)}, delta_j = max(2^-j, closeness), j = 1..r_count,
// evaluated with the Dirichlet representation (best conditioned near the
// boundary).  SlowConvergence at a radius is recorded, not propagated.
inline ProbeReport radial_probe(const Parameters& p, double theta, int r_count,
                                double closeness, double tol = 1e-10) {
  if (!(p.u.real() > 0.0) || !(p.v > 0.0)) {
    throw InvalidParameters("radial probe requires Re u > 0 and v > 0");
  }
  if (r_count < 1) throw std::invalid_argument("radial_probe: r_count must be >= 1");
  if (!(closeness > 0.0) || closeness >= 1.0) {
    throw std::invalid_argument("radial_probe: closeness must lie in (0, 1)");
  }
  ProbeReport report;
  report.direction = theta;
  double prev_delta = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= r_count; ++j) {
    const double delta = std::max(std::ldexp(1.0, -j), closeness);
    if (delta >= prev_delta) break;  // clamp reached; keep radii strictly increasing
    prev_delta = delta;
    const double r = std::exp(p.v * (1.0 - delta));
    report.radii.push_back(r);
    const AnnulusPoint z(std::polar(r, theta));
    try {
      const SeriesEval e = eval_dirichlet(p, z, tol);
      report.values.push_back(e.value);
      report.term_counts.push_back(e.n_pos + 1);
      report.status.push_back("ok");
    } catch (const SlowConvergence& err) {
      report.values.push_back({std::numeric_limits<double>::quiet_NaN(),
                               std::numeric_limits<double>::quiet_NaN()});
      report.term_counts.push_back(-1);
      report.status.push_back(err.code());
    }
  }
  return report;
}

// One step of the coefficient-phase law: phi(n) = arg Gamma(u + 2ivn/pi)
// (principal, i.e. mod 2pi) against the model increment
// (2v/pi) ln(2vn/pi) mod 2pi; residual is the circle distance.
struct PhaseRecord {
  long n = 0;
  double phi = 0.0;
  double delta_model = 0.0;
  double delta_observed = 0.0;
  double residual = 0.0;
};

// Phases come from log_gamma up to the index where e^{-vn} underflows and
// from the Stirling form beyond it, with a 10-point consistency check in the
// overlap window whenever the switch is exercised.
inline std::vector<PhaseRecord> phase_increments(const Parameters& p, long n_lo,
                                                 long n_hi) {
  if (!(p.u.real() > 0.0) || !(p.v > 0.0)) {
    throw InvalidParameters("phase increments require Re u > 0 and v > 0");
  }
  if (n_lo < 1 || n_hi < n_lo) {
    throw std::invalid_argument("phase_increments: need 1 <= n_lo <= n_hi");
  }
  const long n_switch = static_cast<long>(std::ceil(708.0 / p.v));
  const auto direct_phi = [&](long n) {
    return log_gamma(vertical_argument(p, n)).argument;
  };
  const auto asym_phi = [&](long n) { return asymptotic_log_gamma(p, n).argument; };
  if (n_hi + 1 >= n_switch) {
    for (long n = std::max<long>(1, n_switch - 10); n < n_switch; ++n) {
      const double d = circle_distance(direct_phi(n), asym_phi(n));
      if (!(d <= 1e-6)) {
        std::ostringstream msg;
        msg << "phase routes disagree by " << d << " at overlap index n = " << n;
        throw Error("InternalCheck", msg.str());
      }
    }
  }
  std::vector<double> phi(static_cast<std::size_t>(n_hi - n_lo + 2));
  for (long n = n_lo; n <= n_hi + 1; ++n) {
    phi[static_cast<std::size_t>(n - n_lo)] =
        n >= n_switch ? asym_phi(n) : direct_phi(n);
  }
  std::vector<PhaseRecord> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (long n = n_lo; n <= n_hi; ++n) {
    PhaseRecord rec;
    rec.n = n;
    rec.phi = phi[static_cast<std::size_t>(n - n_lo)];
    rec.delta_observed =
        wrap_angle(phi[static_cast<std::size_t>(n - n_lo + 1)] - rec.phi);
    rec.delta_model =
        wrap_angle((2.0 * p.v / kPi) *
                   std::log(2.0 * p.v * static_cast<double>(n) / kPi));
    rec.residual = circle_distance(rec.delta_observed, rec.delta_model);
    out.push_back(rec);
  }
  return out;
}

// Gap hypothesis for the frequencies lambda_k = q^k: strictly increasing with
// strictly increasing gaps q^k (q - 1), which exceed any threshold M from
// k >= log_q(M / (q-1)) on.
struct GapReport {
  double q = 0.0;
  long k_max = 0;
  double threshold = 0.0;
  bool strictly_increasing = false;
  bool gaps_increasing = false;
  long threshold_index = 0;  // smallest k with q^k (q-1) > threshold
  bool hypothesis_holds = false;
  std::vector<double> lambda;  // q^k, k = 0..k_max
  std::vector<double> gap;     // lambda_{k+1} - lambda_k, k = 0..k_max-1
};

inline GapReport gap_check(double q, long k_max, double threshold = 1e6) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    std::ostringstream msg;
    msg << "gap ratio q must be finite and exceed 1 (got " << q << ")";
    throw InvalidParameters(msg.str());
  }
  if (k_max < 2) throw std::invalid_argument("gap_check: k_max must be >= 2");
  GapReport r;
  r.q = q;
  r.k_max = k_max;
  r.threshold = threshold;
  r.lambda.reserve(static_cast<std::size_t>(k_max + 1));
  for (long k = 0; k <= k_max; ++k) {
    r.lambda.push_back(std::exp(static_cast<double>(k) * std::log(q)));
  }
  r.strictly_increasing = true;
  r.gaps_increasing = true;
  for (long k = 0; k < k_max; ++k) {
    const double g = r.lambda[static_cast<std::size_t>(k + 1)] -
                     r.lambda[static_cast<std::size_t>(k)];
    r.gap.push_back(g);
    if (std::isfinite(r.lambda[static_cast<std::size_t>(k + 1)])) {
      if (!(r.lambda[static_cast<std::size_t>(k + 1)] >
            r.lambda[static_cast<std::size_t>(k)])) {
        r.strictly_increasing = false;
      }
      if (k > 0 && !(g > r.gap[static_cast<std::size_t>(k - 1)])) {
        r.gaps_increasing = false;
      }
    }
  }
  r.threshold_index = std::max<long>(
      0, static_cast<long>(std::ceil(std::log(threshold / (q - 1.0)) / std::log(q))));
  bool exceeds = true;
  if (r.threshold_index < k_max) {
    const double g = r.gap[static_cast<std::size_t>(r.threshold_index)];
    exceeds = !std::isfinite(g) || g > threshold;
  }
  r.hypothesis_holds = r.strictly_increasing && r.gaps_increasing && exceeds;
  return r;
}

// Distance to the annulus boundary and its transported image: d_annulus in
// log-radius, and Re(t_z)/|t_z| = cos(pi ln|z| / (2v)) computed directly from
// ln|z| (independent of map_to_halfplane, which the tests cross-check).
struct BoundaryDistance {
  double d_annulus = 0.0;
  double re_zeta_ratio = 0.0;
};

inline BoundaryDistance boundary_distance_map(const Parameters& p,
                                              const AnnulusPoint& z) {
  if (!(p.v > 0.0)) throw InvalidParameters("boundary map requires v > 0");
  if (!z.inside(p.v)) throw OutsideDomain(annulus_message(z, p.v));
  return {p.v - std::abs(z.log_abs), std::cos(kPi * z.log_abs / (2.0 * p.v))};
}

}  // namespace gammabnd
