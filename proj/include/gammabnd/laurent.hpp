#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "gammabnd/accum.hpp"
#include "gammabnd/errors.hpp"
#include "gammabnd/gamma.hpp"
#include "gammabnd/parameters.hpp"
#include "gammabnd/series_eval.hpp"

namespace gammabnd {

// One-sided term cap before SlowConvergence; keeps worst-case evaluations
// near the annulus boundary under a second at desk scale.
inline constexpr long kSeriesTermCap = 1000000;

namespace detail {

inline double log_add(double la, double lb) {
  if (la < lb) std::swap(la, lb);
  if (std::isinf(la)) return la;  // +inf dominates; both -inf stay -inf
  return la + std::log1p(std::exp(lb - la));
}

// ln of a certificate for sum_{n > N} C n^a rho^n with rho < 1:
//   C (N+1)^a rho^{N+1} / (1 - rho_eff),  rho_eff = rho (1 + 1/(N+1))^{max(a,0)},
// since for n >= N+1 each term ratio is at most rho_eff.  Returns +inf while
// rho_eff >= 1 (no certificate at this N yet).
inline double log_geometric_tail(double log_c, double a, double log_rho, long n) {
  const double np1 = static_cast<double>(n + 1);
  const double log_rho_eff = log_rho + std::max(a, 0.0) * std::log1p(1.0 / np1);
  if (log_rho_eff >= 0.0) return std::numeric_limits<double>::infinity();
  const double one_minus = -std::expm1(log_rho_eff);
  return log_c + a * std::log(np1) + np1 * log_rho - std::log(one_minus);
}

// Term n^p * coeff * z^n from the log-domain coefficient; underflows cleanly.
inline std::complex<double> series_term(const LogComplex& coeff, long n,
                                        std::complex<double> log_z, int index_power) {
  if (coeff.is_zero()) return {0.0, 0.0};
  const double lm = coeff.log_modulus + static_cast<double>(n) * log_z.real();
  if (lm < -745.0) return {0.0, 0.0};
  const double ph = coeff.argument + static_cast<double>(n) * log_z.imag();
  std::complex<double> t = std::exp(lm) * std::complex<double>(std::cos(ph), std::sin(ph));
  if (index_power != 0) t *= static_cast<double>(n);
  return t;
}

// Two-sided engine for sum_{n in Z} n^p Gamma(u + 2ivn/pi) z^n.  The tail
// certificate uses |Gamma_n| <= C |n|^{Re u - 1/2} e^{-|v n|} with C taken as
// twice the prefix maximum of the normalized coefficient magnitudes, so the
// remaining tails are dominated by geometric series on both sides.  Pairs
// (n, -n) are accumulated from large |n| downward (smallest terms first) with
// compensated summation.  coeff_scale, when set, multiplies coefficient n
// (test hook for sensitivity checks).
inline SeriesEval sum_two_sided(const Parameters& p, const AnnulusPoint& z, double tol,
                                int index_power,
                                const std::function<std::complex<double>(long)>& coeff_scale,
                                Method tag) {
  require_valid(p);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!z.inside(p.v)) throw OutsideDomain(annulus_message(z, p.v));

  const double va = std::abs(p.v);
  const double a = p.u.real() - 0.5 + static_cast<double>(index_power);
  const std::complex<double> log_z(z.log_abs, z.arg());
  const double log_rho_pos = z.log_abs - va;
  const double log_rho_neg = -z.log_abs - va;
  const double log_tol = std::log(tol);
  constexpr long kPrefixFloor = 16;  // minimum prefix feeding the constant C

  std::vector<std::complex<double>> pair_sums;
  double peak = 0.0;
  double norm_max_pos = -std::numeric_limits<double>::infinity();
  double norm_max_neg = norm_max_pos;
  double tail_log = std::numeric_limits<double>::infinity();
  long used = 0;

  for (long n = 1;; ++n) {
    if (n > kSeriesTermCap) {
      std::ostringstream msg;
      msg << "term cap " << kSeriesTermCap << " reached before the tail bound met "
          << tol << " (achieved " << std::exp(tail_log) << ")";
      throw SlowConvergence(msg.str(), std::exp(tail_log));
    }
    LogComplex gp = log_gamma(vertical_argument(p, n));
    LogComplex gn = log_gamma(vertical_argument(p, -n));
    const double ln_n = std::log(static_cast<double>(n));
    const double norm = va * static_cast<double>(n) - (p.u.real() - 0.5) * ln_n;
    norm_max_pos = std::max(norm_max_pos, gp.log_modulus + norm);
    norm_max_neg = std::max(norm_max_neg, gn.log_modulus + norm);

    std::complex<double> tp = series_term(gp, n, log_z, index_power);
    std::complex<double> tn = series_term(gn, -n, log_z, index_power);
    if (coeff_scale) {
      tp *= coeff_scale(n);
      tn *= coeff_scale(-n);
    }
    peak = std::max({peak, std::abs(tp), std::abs(tn)});
    pair_sums.push_back(tp + tn);

    if (n >= kPrefixFloor) {
      const double tl = log_add(
          log_geometric_tail(kLn2 + norm_max_pos, a, log_rho_pos, n),
          log_geometric_tail(kLn2 + norm_max_neg, a, log_rho_neg, n));
      tail_log = std::min(tail_log, tl);
      if (tl <= log_tol) {
        used = n;
        break;
      }
    }
  }

  ComplexCompensatedSum acc;
  for (auto it = pair_sums.rbegin(); it != pair_sums.rend(); ++it) acc.add(*it);
  std::complex<double> t0 =
      index_power != 0 ? std::complex<double>(0.0, 0.0) : log_gamma(p.u).to_complex();
  if (coeff_scale && index_power == 0) t0 *= coeff_scale(0);
  acc.add(t0);
  peak = std::max(peak, std::abs(t0));

  SeriesEval out;
  out.value = acc.value();
  out.n_neg = -used;
  out.n_pos = used;
  out.tail_bound = std::exp(tail_log);
  out.method = tag;
  out.peak_term = peak;
  return out;
}

// One-sided engine shared by the power and reciprocal series.  coeff(n) must
// satisfy |coeff(n)| <= C n^a e^{rate * n} with C certified as for the
// two-sided engine; log_rho = rate + ln|z| must be negative on the domain.
template <class CoeffFn>
SeriesEval sum_one_sided(const CoeffFn& coeff, std::complex<double> z, double tol,
                         double rate, double a, Method tag) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::complex<double> log_z(std::log(std::abs(z)), std::arg(z));
  const double log_rho = rate + log_z.real();
  const double log_tol = std::log(tol);
  constexpr long kPrefixFloor = 16;

  std::vector<std::complex<double>> terms;
  double peak = 0.0;
  double norm_max = -std::numeric_limits<double>::infinity();
  double tail_log = std::numeric_limits<double>::infinity();
  long used = 0;

  for (long n = 1;; ++n) {
    if (n > kSeriesTermCap) {
      std::ostringstream msg;
      msg << "term cap " << kSeriesTermCap << " reached before the tail bound met "
          << tol << " (achieved " << std::exp(tail_log) << ")";
      throw SlowConvergence(msg.str(), std::exp(tail_log));
    }
    const LogComplex c = coeff(n);
    const double ln_n = std::log(static_cast<double>(n));
    if (!c.is_zero()) {
      norm_max = std::max(norm_max, c.log_modulus - rate * static_cast<double>(n) - a * ln_n);
    }
    terms.push_back(series_term(c, n, log_z, 0));
    peak = std::max(peak, std::abs(terms.back()));
    if (n >= kPrefixFloor) {
      const double tl = log_geometric_tail(kLn2 + norm_max, a, log_rho, n);
      tail_log = std::min(tail_log, tl);
      if (tl <= log_tol) {
        used = n;
        break;
      }
    }
  }

  ComplexCompensatedSum acc;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc.add(*it);
  const std::complex<double> t0 = coeff(0).to_complex();
  acc.add(t0);
  peak = std::max(peak, std::abs(t0));

  SeriesEval out;
  out.value = acc.value();
  out.n_neg = 0;
  out.n_pos = used;
  out.tail_bound = std::exp(tail_log);
  out.method = tag;
  out.peak_term = peak;
  return out;
}

}  // namespace detail

// Psi(u, v, z) = sum_{n in Z} Gamma(u + 2ivn/pi) z^n on the open annulus
// e^{-|v|} < |z| < e^{|v|}.
inline SeriesEval eval_laurent(const Parameters& p, const AnnulusPoint& z, double tol) {
  return detail::sum_two_sided(p, z, tol, 0, nullptr, Method::laurent);
}

// Term-wise derivative sum_{n in Z} n Gamma(u + 2ivn/pi) z^{n-1}; same annulus.
inline SeriesEval eval_laurent_derivative(const Parameters& p, const AnnulusPoint& z,
                                          double tol) {
  const double az = std::abs(z.z);
  SeriesEval e = detail::sum_two_sided(p, z, tol * az, 1, nullptr, Method::laurent);
  e.value /= z.z;
  e.tail_bound /= az;
  e.peak_term /= az;
  return e;
}

// One-sided series sum_{n >= 0} Gamma(u + 2ivn/pi) z^n on |z| < e^{|v|}.
// Requires that no coefficient index n >= 0 hits a Gamma pole, i.e.
// u != -m - (2iv/pi) n for m, n in N; this is weaker than the two-sided
// lattice exclusion, so parameters rejected by eval_laurent may be accepted.
inline SeriesEval eval_power_series(const Parameters& p, std::complex<double> z,
                                    double tol) {
  if (p.v == 0.0 || !std::isfinite(p.v)) {
    throw InvalidParameters("v must be a nonzero finite real");
  }
  const long n0 = std::lround(-p.u.imag() * kPi / (2.0 * p.v));
  if (n0 >= 0) {
    const double m_real = std::max(0.0, std::round(-p.u.real()));
    const double dre = p.u.real() + m_real;
    const double dim = p.u.imag() + (2.0 * p.v / kPi) * static_cast<double>(n0);
    if (std::hypot(dre, dim) <= kLatticeTolerance) {
      std::ostringstream msg;
      msg << "coefficient index n = " << n0 << " hits a Gamma pole (m = "
          << static_cast<long>(m_real) << ")";
      throw InvalidParameters(msg.str(), static_cast<long>(m_real), n0);
    }
  }
  const double va = std::abs(p.v);
  if (std::abs(z) == 0.0) {
    return {log_gamma(p.u).to_complex(), 0, 0, 0.0, Method::power};
  }
  if (!(std::log(std::abs(z)) < va)) {
    std::ostringstream msg;
    msg << "|z| = " << std::abs(z) << " outside the convergence disk |z| < e^" << va;
    throw OutsideDomain(msg.str());
  }
  return detail::sum_one_sided(
      [&](long n) { return log_gamma(vertical_argument(p, n)); }, z, tol, -va,
      p.u.real() - 0.5, Method::power);
}

// One-sided series sum_{n >= 0} z^n / Gamma(u + 2ivn/pi) on |z| < e^{-|v|}.
// 1/Gamma is entire, so there is no lattice condition: coefficients at the
// poles of Gamma contribute exact zeros.
inline SeriesEval eval_reciprocal_series(const Parameters& p, std::complex<double> z,
                                         double tol) {
  if (p.v == 0.0 || !std::isfinite(p.v)) {
    throw InvalidParameters("v must be a nonzero finite real");
  }
  const double va = std::abs(p.v);
  if (std::abs(z) == 0.0) {
    return {log_rgamma(p.u).to_complex(), 0, 0, 0.0, Method::reciprocal};
  }
  if (!(std::log(std::abs(z)) < -va)) {
    std::ostringstream msg;
    msg << "|z| = " << std::abs(z) << " outside the convergence disk |z| < e^-" << va;
    throw OutsideDomain(msg.str());
  }
  return detail::sum_one_sided(
      [&](long n) { return log_rgamma(vertical_argument(p, n)); }, z, tol, va,
      0.5 - p.u.real(), Method::reciprocal);
}

// Relative residual of the reflection-formula transfer at index n:
//   2 pi i / Gamma(u + 2ivn/pi) = (e^{pi u i - 2vn} - e^{-pi u i + 2vn})
//                                 * Gamma(1 - u - 2ivn/pi),
// both sides evaluated in the log domain.
inline double reflection_transfer(const Parameters& p, long n) {
  const std::complex<double> w = vertical_argument(p, n);
  const std::complex<double> lgw = log_gamma(w).as_log();
  const std::complex<double> lg1mw = log_gamma(1.0 - w).as_log();
  // factor e^A - e^B with A = i pi w (= i pi u - 2vn), B = -A, kept in log
  // form via the dominant exponential
  const std::complex<double> A = std::complex<double>(0.0, kPi) * w;
  const std::complex<double> B = -A;
  const std::complex<double> log_2i(kLn2, kPi / 2.0);
  const std::complex<double> consts(kLnPi - kLnTwoPi, -kPi / 2.0);

  if (std::abs(w.imag()) < 8.0) {
    // both sides assembled directly; every magnitude here is O(10)
    const std::complex<double> lf =
        A.real() >= B.real() ? A + std::log(1.0 - std::exp(B - A))
                             : B + std::log(std::exp(A - B) - 1.0);
    const std::complex<double> d = lf + lg1mw + lgw - std::complex<double>(kLnTwoPi, kPi / 2.0);
    return std::abs(std::exp(d) - 1.0);
  }

  // Large |Im w|: both sides carry the exponential e^{pi |Im w|}, and any
  // route that rounds it inside a finished double loses ~ulp(2vn) > 1e-11 at
  // n = 1e4, v = 3.  Pair the dominant parts before any large sum forms:
  // with ipz = i pi (w - m) they cancel exactly against A (or B), leaving the
  // factor-vs-sin comparison at O(1) magnitudes.
  const double m = std::nearbyint(w.real());
  const std::complex<double> ipz = std::complex<double>(0.0, kPi) * (w - m);
  std::complex<double> d;
  if (w.imag() > 0.0) {
    d = (B + ipz) + std::log(std::exp(2.0 * A) - 1.0) -
        std::log(1.0 - std::exp(2.0 * ipz)) + log_2i + consts -
        std::complex<double>(0.0, kPi);
  } else {
    d = (A - ipz) + std::log(1.0 - std::exp(-2.0 * A)) -
        std::log(1.0 - std::exp(-2.0 * ipz)) + log_2i + consts;
  }
  if (std::llround(m) % 2 != 0) d -= std::complex<double>(0.0, kPi);
  return std::abs(std::exp(d) - 1.0);
}

// Relative residual of Psi(u+1, v, z) = ((2vi/pi) z d/dz + u) Psi(u, v, z),
// the right side using the term-wise derivative series.  The coefficient
// recurrence Gamma(w+1) = w Gamma(w) forces the Euler operator z d/dz here:
// sum (u + 2ivn/pi) Gamma_n z^n = u Psi + (2iv/pi) z Psi'.
inline double contiguity_residual(const Parameters& p, const AnnulusPoint& z,
                                  double tol) {
  const Parameters up{p.u + 1.0, p.v};
  require_valid(up);
  const SeriesEval lhs = eval_laurent(up, z, tol);
  const SeriesEval psi = eval_laurent(p, z, tol);
  const SeriesEval dpsi = eval_laurent_derivative(p, z, tol);
  const double dz_weight = 2.0 * p.v / kPi * std::abs(z.z);
  const std::complex<double> euler =
      std::complex<double>(0.0, 2.0 * p.v / kPi) * z.z * dpsi.value;
  const std::complex<double> rhs = euler + p.u * psi.value;
  // both sides can cancel far below their term scale at zeros of
  // Psi(u+1, v, .); the residual is relative to the scale the sums were
  // actually computed at, never to a cancelled value alone
  const double scale = std::max(
      {std::abs(lhs.value), std::abs(euler) + std::abs(p.u * psi.value),
       lhs.peak_term, std::abs(p.u) * psi.peak_term, dz_weight * dpsi.peak_term});
  return std::abs(lhs.value - rhs) / scale;
}

// Relative residual of Psi(u, v, 1/z) = Psi(u, -v, z).
inline double inversion_residual(const Parameters& p, const AnnulusPoint& z,
                                 double tol) {
  const AnnulusPoint zi(1.0 / z.z);
  const SeriesEval lhs = eval_laurent(p, zi, tol);
  const SeriesEval rhs = eval_laurent({p.u, -p.v}, z, tol);
  return std::abs(lhs.value - rhs.value) / std::abs(lhs.value);
}

}  // namespace gammabnd
