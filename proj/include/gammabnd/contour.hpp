#pragma once

#include <cmath>
#include <complex>
#include <sstream>

#include "gammabnd/errors.hpp"
#include "gammabnd/parameters.hpp"
#include "gammabnd/series_eval.hpp"

namespace gammabnd {

struct RayContour {
  double epsilon = 0.0;      // ray half-angle, strictly inside (0, pi/2)
  double s_max = 0.0;        // truncation radius; remainder certified < tol/10
  long node_budget = 200000; // maximum integrand evaluations
};

struct EpsilonInterval {
  double lo = 0.0;
  double hi = 0.0;
  double midpoint() const { return 0.5 * (lo + hi); }
};

// Ray half-angles for which the geometric expansions converge on both rays:
// (pi |ln|z|| / (2v), pi/2).  Empty exactly off the annulus.
inline EpsilonInterval admissible_epsilon(const Parameters& p, const AnnulusPoint& z) {
  if (!(p.v > 0.0)) throw InvalidParameters("ray contour requires v > 0");
  if (!std::isfinite(z.log_abs)) throw OutsideDomain("z = 0 admits no ray contour");
  const double lo = kPi * std::abs(z.log_abs) / (2.0 * p.v);
  if (!(lo < kPi / 2.0)) {
    throw OutsideDomain(annulus_message(z, p.v));
  }
  return {lo, kPi / 2.0};
}

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1] (QUADPACK values).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kGK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
  std::complex<double> value;
  double error;
};

template <class F>
PanelEstimate gk15_panel(const F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::complex<double> k15(0.0, 0.0);
  std::complex<double> g7(0.0, 0.0);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    const std::complex<double> pair = f(mid - dx) + f(mid + dx);
    k15 += kGK15Weights[i] * pair;
    if (i % 2 == 1) g7 += kG7Weights[i / 2] * pair;
  }
  const std::complex<double> centre = f(mid);
  k15 += kGK15Weights[7] * centre;
  g7 += kG7Weights[3] * centre;
  k15 *= half;
  g7 *= half;
  return {k15, std::abs(k15 - g7)};
}

struct QuadAccumulator {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
  long evals = 0;
};

// Deterministic recursive bisection: the tolerance halves with each split and
// the traversal order is fixed, so results do not depend on scheduling.  A
// panel still unconverged at the depth cap or budget contributes its estimate
// to the global error, which is what the caller gates on.
template <class F>
void integrate_adaptive(const F& f, double a, double b, double tol, long* budget,
                        int depth, QuadAccumulator* acc) {
  const PanelEstimate est = gk15_panel(f, a, b);
  *budget -= 15;
  acc->evals += 15;
  if (est.error <= tol || depth >= 48 || *budget <= 0) {
    acc->value += est.value;
    acc->error += est.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  integrate_adaptive(f, a, mid, 0.5 * tol, budget, depth + 1, acc);
  integrate_adaptive(f, mid, b, 0.5 * tol, budget, depth + 1, acc);
}

}  // namespace detail

// Contour for the ray integral at tolerance tol: epsilon defaults to the
// midpoint of the admissible interval (farthest from both failure modes:
// the convergence constraint at the low end, degraded e^{-t} decay at pi/2);
// s_max certifies the truncated tail below tol/10 including the denominator
// floor on both rays.
inline RayContour make_contour(const Parameters& p, const AnnulusPoint& z, double tol,
                               double epsilon = 0.0, long node_budget = 200000) {
  const EpsilonInterval iv = admissible_epsilon(p, z);
  const double eps = epsilon > 0.0 ? epsilon : iv.midpoint();
  if (!(eps > iv.lo && eps < iv.hi)) {
    std::ostringstream msg;
    msg << "epsilon = " << eps << " outside the admissible interval (" << iv.lo
        << ", " << iv.hi << ")";
    throw OutsideDomain(msg.str());
  }
  const double c = std::cos(eps);
  const double a = p.u.real();
  const double rho_plus = std::exp(z.log_abs - (2.0 * p.v / kPi) * eps);
  const double rho_minus = std::exp(z.log_abs + (2.0 * p.v / kPi) * eps);
  const double denom_floor = std::min(1.0 - rho_plus, rho_minus - 1.0);
  const double log_tol = std::log(tol / 10.0);
  // remainder past S on both rays: (2/denom_floor) S^{a-1} e^{-cS} / c,
  // inflated by 1/(1 - (a-1)/(cS)) when s^{a-1} still grows
  const auto log_remainder = [&](double s) {
    const double corr = 1.0 - std::max(a - 1.0, 0.0) / (c * s);
    if (corr <= 0.0) return std::numeric_limits<double>::infinity();
    return std::log(2.0 / denom_floor) + (a - 1.0) * std::log(s) - c * s -
           std::log(c) - std::log(corr);
  };
  double s_max = std::max(4.0, 2.0 * (a + 1.0) / c);
  while (log_remainder(s_max) > log_tol) s_max *= 1.3;
  return {eps, s_max, node_budget};
}

// Psi(u, v, z) as the ray integral of e^{-t} t^{u-1} / (1 - z t^{2iv/pi})
// along t = s e^{i eps} minus t = s e^{-i eps}, principal Log t on each ray.
// Requires Re u > 0 (integrable endpoint at t -> 0).  When Re u < 1 the
// (0, 1] piece is flattened by the substitution s = sigma^{1/Re u}.
inline SeriesEval eval_integral(const Parameters& p, const AnnulusPoint& z, double tol,
                                const RayContour& contour) {
  if (!(p.u.real() > 0.0)) {
    throw InvalidParameters("ray integral requires Re u > 0");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double eps = contour.epsilon;

  const auto legs = [&](double s) -> std::complex<double> {
    const double ls = std::log(s);
    std::complex<double> total(0.0, 0.0);
    for (const int sign : {+1, -1}) {
      const std::complex<double> log_t(ls, sign * eps);
      const std::complex<double> t = std::polar(s, sign * eps);
      const std::complex<double> num = std::exp(-t + (p.u - 1.0) * log_t);
      const std::complex<double> den =
          1.0 - z.z * std::exp(std::complex<double>(0.0, 2.0 * p.v / kPi) * log_t);
      const std::complex<double> dt = std::polar(1.0, sign * eps);
      total += static_cast<double>(sign) * num / den * dt;
    }
    return total;
  };

  const double a = p.u.real();
  // amplitude constant of |legs| near s = 0: 2 e^{|Im u| eps} / denom_floor
  const double rho_plus = std::exp(z.log_abs - (2.0 * p.v / kPi) * eps);
  const double rho_minus = std::exp(z.log_abs + (2.0 * p.v / kPi) * eps);
  const double denom_floor = std::min(1.0 - rho_plus, rho_minus - 1.0);
  const double amp = 2.0 * std::exp(std::abs(p.u.imag()) * eps) / denom_floor;

  long budget = contour.node_budget;
  detail::QuadAccumulator acc;
  if (a < 1.0) {
    // endpoint piece in sigma with s = sigma^{1/a}: modulus flattened to O(1);
    // the remaining (0, sigma_0] sliver is certified below tol/20
    const double sigma0 = std::max(a * tol / (20.0 * amp), 1e-280);
    const auto flattened = [&](double sigma) -> std::complex<double> {
      const double s = std::exp(std::log(sigma) / a);
      return legs(s) * (s / (a * sigma));
    };
    detail::integrate_adaptive(flattened, sigma0, 1.0, 0.35 * tol, &budget, 0, &acc);
    acc.error += sigma0 * amp / a;
  } else {
    // contribution of (0, s_0] bounded by amp * s_0^a / a
    const double s0 = std::max(std::pow(a * tol / (20.0 * amp), 1.0 / a), 1e-280);
    detail::integrate_adaptive(legs, s0, 1.0, 0.35 * tol, &budget, 0, &acc);
    acc.error += amp * std::pow(s0, a) / a;
  }
  detail::integrate_adaptive(legs, 1.0, contour.s_max, 0.35 * tol, &budget, 0, &acc);

  if (acc.error > 0.9 * tol) {
    std::ostringstream msg;
    msg << "adaptive quadrature stopped at error estimate " << acc.error
        << " > tolerance " << tol << " within " << contour.node_budget << " nodes";
    throw QuadratureFailure(msg.str(), acc.error);
  }

  SeriesEval out;
  out.value = acc.value;
  out.n_neg = 0;
  out.n_pos = acc.evals;
  out.tail_bound = acc.error + tol / 10.0;  // quadrature estimate + truncation
  out.method = Method::integral;
  return out;
}

inline SeriesEval eval_integral(const Parameters& p, const AnnulusPoint& z,
                                double tol) {
  return eval_integral(p, z, tol, make_contour(p, z, tol));
}

}  // namespace gammabnd
