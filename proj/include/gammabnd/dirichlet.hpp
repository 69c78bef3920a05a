#pragma once

#include <cmath>
#include <complex>
#include <sstream>

#include "gammabnd/accum.hpp"
#include "gammabnd/errors.hpp"
#include "gammabnd/halfplane.hpp"
#include "gammabnd/parameters.hpp"
#include "gammabnd/series_eval.hpp"

namespace gammabnd {

struct DirichletParams {
  std::complex<double> u;
  double q = 2.0;  // > 1
  std::complex<double> zeta;
};

namespace detail {

inline void require_q(const DirichletParams& dp) {
  if (!(dp.q > 1.0) || !std::isfinite(dp.q)) {
    std::ostringstream msg;
    msg << "frequency ratio q must be finite and exceed 1 (got " << dp.q << ")";
    throw InvalidParameters(msg.str());
  }
}

}  // namespace detail

// S-(u, q, zeta) = sum_{k < 0} q^{ku} e^{-zeta q^k}; entire in zeta.  The tail
// is geometric with ratio q^{-Re u}: |sum_{k <= -K-1}| is bounded by
// e^{|zeta| q^{-K-1}} q^{-(K+1) Re u} / (1 - q^{-Re u}).
inline SeriesEval s_minus(const DirichletParams& dp, double tol) {
  detail::require_q(dp);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double lnq = std::log(dp.q);
  if (!(dp.u.real() * lnq > 1e-6)) {
    std::ostringstream msg;
    msg << "geometric ratio q^-Re(u) = " << std::exp(-dp.u.real() * lnq)
        << " too close to 1 (Re(u) ln q = " << dp.u.real() * lnq << ")";
    throw SlowConvergence(msg.str());
  }
  const double log_denom = std::log(-std::expm1(-dp.u.real() * lnq));
  const double azeta = std::abs(dp.zeta);
  const double log_tol = std::log(tol);
  long K = 1;
  double tail_log;
  for (;; ++K) {
    tail_log = azeta * std::exp(-static_cast<double>(K + 1) * lnq) -
               static_cast<double>(K + 1) * dp.u.real() * lnq - log_denom;
    if (tail_log <= log_tol) break;
  }
  ComplexCompensatedSum acc;
  for (long k = -K; k <= -1; ++k) {
    const double dk = static_cast<double>(k);
    acc.add(std::exp(dk * dp.u * lnq - dp.zeta * std::exp(dk * lnq)));
  }
  return {acc.value(), -K, -1, std::exp(tail_log), Method::dirichlet};
}

// S+(u, q, zeta) = sum_{k >= 0} q^{ku} e^{-zeta q^k} on Re zeta > 0, with
// double-exponential decay once q^k Re zeta dominates.  The term-ratio
// r_k = q^{Re u} e^{-q^k (q-1) Re zeta} is exact and decreasing, so once
// r_k <= 1/2 the tail past k is bounded by 2 r_k |t_k|.
inline SeriesEval s_plus(const DirichletParams& dp, double tol) {
  detail::require_q(dp);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double rez = dp.zeta.real();
  if (!(rez > 0.0)) {
    std::ostringstream msg;
    msg << "S+ converges only on Re zeta > 0 (got Re zeta = " << rez << ")";
    throw OutsideDomain(msg.str());
  }
  const double lnq = std::log(dp.q);
  // past this index e^{-q^k Re zeta} underflows double precision
  const long cap =
      std::max<long>(4, 64 + static_cast<long>(std::ceil(std::log(702.0 / rez) / lnq)));
  const double log_tol = std::log(tol);

  ComplexCompensatedSum acc;
  for (long k = 0; k <= cap; ++k) {
    const double qk = std::exp(static_cast<double>(k) * lnq);
    const std::complex<double> log_term =
        static_cast<double>(k) * dp.u * lnq - dp.zeta * qk;
    if (log_term.real() > 709.0) {
      std::ostringstream msg;
      msg << "partial sums exceed the double range before decay onset (Re zeta = "
          << rez << ")";
      throw SlowConvergence(msg.str());
    }
    acc.add(log_term.real() < -745.0 ? std::complex<double>(0.0, 0.0)
                                     : std::exp(log_term));
    const double log_ratio = dp.u.real() * lnq - qk * (dp.q - 1.0) * rez;
    if (log_ratio <= -kLn2) {
      const double tail_log = log_term.real() + log_ratio + kLn2;
      if (tail_log <= log_tol) {
        return {acc.value(), 0, k, std::exp(tail_log), Method::dirichlet};
      }
    }
  }
  std::ostringstream msg;
  msg << "term cap " << cap << " reached before the tail bound met " << tol
      << " (Re zeta = " << rez << ")";
  throw SlowConvergence(msg.str());
}

// Psi(u, v, z) through the lacunary Dirichlet representation:
//   prefactor * (S-(u, v_tilde, t_z) + S+(u, v_tilde, t_z)),
// valid for Re u > 0, v > 0, z in the annulus.  Sub-tolerances are scaled so
// the combined tail bound stays below tol.
inline SeriesEval eval_dirichlet(const Parameters& p, const AnnulusPoint& z,
                                 double tol) {
  if (!(p.u.real() > 0.0)) {
    throw InvalidParameters("Dirichlet representation requires Re u > 0");
  }
  if (!(p.v > 0.0)) {
    throw InvalidParameters("Dirichlet representation requires v > 0");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!z.inside(p.v)) throw OutsideDomain(annulus_message(z, p.v));
  const HalfPlaneImage h = map_to_halfplane(p, z);
  if (!std::isfinite(h.v_tilde)) {
    std::ostringstream msg;
    msg << "frequency ratio e^(pi^2/v) overflows for v = " << p.v;
    throw SlowConvergence(msg.str());
  }
  const double pref_mag = std::abs(h.prefactor);
  const DirichletParams dp{p.u, h.v_tilde, h.t_z};
  const SeriesEval sm = s_minus(dp, 0.5 * tol / pref_mag);
  const SeriesEval sp = s_plus(dp, 0.5 * tol / pref_mag);

  SeriesEval out;
  out.value = h.prefactor * (sm.value + sp.value);
  out.n_neg = sm.n_neg;
  out.n_pos = sp.n_pos;
  out.tail_bound = pref_mag * (sm.tail_bound + sp.tail_bound);
  out.method = Method::dirichlet;
  return out;
}

struct FunctionalResiduals {
  double r_minus = 0.0;
  double r_plus = 0.0;
  double r_total = 0.0;
};

// Residuals of the q-difference relations
//   q^u S-(u,q,q zeta) - S-(u,q,zeta) = e^{-zeta},
//   q^u S+(u,q,q zeta) - S+(u,q,zeta) = -e^{-zeta},
//   q^u S(u,q,q zeta) = S(u,q,zeta),
// each normalized (the first two by |e^{-zeta}|, the last by |S(zeta)| so a
// small S cannot pass vacuously).  All residuals <= 10 * tol by contract.
inline FunctionalResiduals functional_residuals(std::complex<double> u, double q,
                                                std::complex<double> zeta, double tol) {
  const DirichletParams at_z{u, q, zeta};
  const DirichletParams at_qz{u, q, q * zeta};
  const std::complex<double> qu = std::exp(u * std::log(q));
  const std::complex<double> em = std::exp(-zeta);

  // first pass sizes the normalizers; the sums at q*zeta get multiplied by
  // q^u, so their tails must be tightened by that factor to keep the
  // residuals at the 10*tol contract
  const double s_mag = std::abs(s_minus(at_z, 1e-6 * std::abs(em)).value +
                                s_plus(at_z, 1e-6 * std::abs(em)).value);
  const double target = tol * std::min({1.0, std::abs(em), s_mag});
  const double tol_z = target;
  const double tol_qz = target / std::max(1.0, std::abs(qu));

  const SeriesEval sm = s_minus(at_z, tol_z);
  const SeriesEval sp = s_plus(at_z, tol_z);
  const SeriesEval smq = s_minus(at_qz, tol_qz);
  const SeriesEval spq = s_plus(at_qz, tol_qz);

  FunctionalResiduals r;
  r.r_minus = std::abs(qu * smq.value - sm.value - em) / std::abs(em);
  r.r_plus = std::abs(qu * spq.value - sp.value + em) / std::abs(em);
  const std::complex<double> s = sm.value + sp.value;
  const std::complex<double> sq = smq.value + spq.value;
  r.r_total = std::abs(qu * sq - s) / std::abs(s);
  return r;
}

}  // namespace gammabnd
