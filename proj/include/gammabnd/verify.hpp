#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "gammabnd/dirichlet.hpp"
#include "gammabnd/halfplane.hpp"
#include "gammabnd/laurent.hpp"
#include "gammabnd/parallel.hpp"
#include "gammabnd/thresholds.hpp"

namespace gammabnd {

// The canonical evaluation grid the identity battery runs on:
// u in {1, 0.5+0.3i, 2}, v in {1, pi/2, 3}, z on radii {e^{-v/2}, 1, e^{v/2}}
// times 8 angles.
inline std::vector<std::complex<double>> standard_u() {
  return {{1.0, 0.0}, {0.5, 0.3}, {2.0, 0.0}};
}

inline std::vector<double> standard_v() { return {1.0, kPi / 2.0, 3.0}; }

inline std::vector<AnnulusPoint> standard_z(double v) {
  std::vector<AnnulusPoint> out;
  out.reserve(24);
  for (const double beta : {-0.5, 0.0, 0.5}) {
    const double r = std::exp(beta * v);
    for (int j = 0; j < 8; ++j) {
      const double theta = -kPi + kTwoPi * (j + 1) / 8.0;
      out.emplace_back(std::polar(r, theta));
    }
  }
  return out;
}

struct CheckResult {
  std::string name;
  long points = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  unsigned long seed = 0;
  double tol = thresholds::kVerifyTol;
  double perturb = 0.0;  // test hook: scales Laurent coefficient n = 1
};

namespace detail {

inline double max_over(std::vector<double>& residuals) {
  double m = 0.0;
  for (const double r : residuals) m = std::max(m, r);
  return m;
}

// Random (u, v) kept well inside validity and convergence margins.
inline Parameters random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re_u(0.4, 2.2);
  std::uniform_real_distribution<double> im_u(-0.8, 0.8);
  std::uniform_real_distribution<double> vv(0.7, 3.2);
  return {{re_u(rng), im_u(rng)}, vv(rng)};
}

inline AnnulusPoint random_point(std::mt19937_64& rng, double v) {
  std::uniform_real_distribution<double> beta(-0.6, 0.6);
  std::uniform_real_distribution<double> theta(-kPi, kPi);
  return AnnulusPoint(std::polar(std::exp(beta(rng) * v), theta(rng)));
}

}  // namespace detail

inline CheckResult check_contiguity(const VerifyOptions& opt) {
  struct Case {
    Parameters p;
    AnnulusPoint z;
  };
  std::vector<Case> cases;
  for (const auto& u : standard_u()) {
    for (const double v : standard_v()) {
      cases.push_back({{u, v}, AnnulusPoint(std::polar(std::exp(-v / 2.0), 2.0 * kPi / 7.0))});
      cases.push_back({{u, v}, AnnulusPoint(std::polar(std::exp(v / 3.0), -kPi / 3.0))});
    }
  }
  std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + 1);
  for (int i = 0; i < 100; ++i) {
    const Parameters p = detail::random_params(rng);
    cases.push_back({p, detail::random_point(rng, p.v)});
  }
  std::vector<double> residuals(cases.size());
  const std::function<std::complex<double>(long)> hook =
      opt.perturb != 0.0
          ? std::function<std::complex<double>(long)>(
                [s = 1.0 + opt.perturb](long n) -> std::complex<double> {
                  return n == 1 ? std::complex<double>(s, 0.0)
                                : std::complex<double>(1.0, 0.0);
                })
          : nullptr;
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    if (!hook) {
      residuals[i] = contiguity_residual(c.p, c.z, opt.tol);
      return;
    }
    // perturbed variant: left side summed with one coefficient scaled
    const Parameters up{c.p.u + 1.0, c.p.v};
    const SeriesEval lhs = detail::sum_two_sided(up, c.z, opt.tol, 0, hook, Method::laurent);
    const SeriesEval psi = eval_laurent(c.p, c.z, opt.tol);
    const SeriesEval dpsi = eval_laurent_derivative(c.p, c.z, opt.tol);
    const double dz_weight = 2.0 * c.p.v / kPi * std::abs(c.z.z);
    const std::complex<double> euler =
        std::complex<double>(0.0, 2.0 * c.p.v / kPi) * c.z.z * dpsi.value;
    const std::complex<double> rhs = euler + c.p.u * psi.value;
    const double scale =
        std::max({std::abs(lhs.value), std::abs(euler) + std::abs(c.p.u * psi.value),
                  lhs.peak_term, std::abs(c.p.u) * psi.peak_term,
                  dz_weight * dpsi.peak_term});
    residuals[i] = std::abs(lhs.value - rhs) / scale;
  });
  const double m = detail::max_over(residuals);
  return {"contiguity", static_cast<long>(cases.size()), m,
          thresholds::kContiguityMax, m <= thresholds::kContiguityMax};
}

inline CheckResult check_inversion(const VerifyOptions& opt) {
  struct Case {
    Parameters p;
    AnnulusPoint z;
  };
  std::vector<Case> cases;
  for (const auto& u : standard_u()) {
    for (const double v : standard_v()) {
      cases.push_back({{u, v}, AnnulusPoint(std::polar(0.8, kPi / 3.0))});
      cases.push_back({{u, v}, AnnulusPoint(std::polar(std::exp(0.4 * v), -2.0))});
    }
  }
  std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + 2);
  for (int i = 0; i < 100; ++i) {
    const Parameters p = detail::random_params(rng);
    cases.push_back({p, detail::random_point(rng, p.v)});
  }
  std::vector<double> residuals(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    residuals[i] = inversion_residual(cases[i].p, cases[i].z, opt.tol);
  });
  const double m = detail::max_over(residuals);
  return {"inversion", static_cast<long>(cases.size()), m, thresholds::kInversionMax,
          m <= thresholds::kInversionMax};
}

inline CheckResult check_reflection(const VerifyOptions& opt) {
  struct Case {
    Parameters p;
    long n;
  };
  std::vector<Case> cases;
  const long ns[] = {0, 1, -1, 2, -2, 7, -7, 10, -10, 100, -100, 1000, -1000, 10000, -10000};
  std::vector<std::complex<double>> us = standard_u();
  us.push_back({0.5, 0.0});
  us.push_back({0.3, 0.0});
  const auto off_poles = [](const Parameters& p, long n) {
    const std::complex<double> w = vertical_argument(p, n);
    return !detail::near_gamma_pole(w) && !detail::near_gamma_pole(1.0 - w);
  };
  for (const auto& u : us) {
    for (const double v : standard_v()) {
      for (const long n : ns) {
        if (off_poles({u, v}, n)) cases.push_back({{u, v}, n});
      }
    }
  }
  std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + 3);
  std::uniform_int_distribution<long> nd(-10000, 10000);
  for (int i = 0; i < 100; ++i) {
    const Parameters p = detail::random_params(rng);
    const long n = nd(rng);
    if (off_poles(p, n)) cases.push_back({p, n});
  }
  std::vector<double> residuals(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    residuals[i] = reflection_transfer(cases[i].p, cases[i].n);
  });
  const double m = detail::max_over(residuals);
  return {"reflection", static_cast<long>(cases.size()), m,
          thresholds::kReflectionMax, m <= thresholds::kReflectionMax};
}

inline CheckResult check_functional(const VerifyOptions& opt) {
  struct Case {
    std::complex<double> u;
    double q;
    std::complex<double> zeta;
  };
  std::vector<Case> cases = {
      {{1.0, 0.0}, 2.0, {1.0, 0.0}},
      {{0.5, 0.5}, std::exp(1.0), {2.0, 1.0}},
      {{2.0, 0.0}, 1.5, {0.3, 2.0}},
  };
  // transported triples (u, v_tilde, t_z) from the standard grid
  for (const auto& u : standard_u()) {
    for (const double v : standard_v()) {
      const Parameters p{u, v};
      const AnnulusPoint z(std::polar(std::exp(v / 2.0), kPi / 3.0));
      const HalfPlaneImage h = map_to_halfplane(p, z);
      cases.push_back({u, h.v_tilde, h.t_z});
    }
  }
  std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + 4);
  std::uniform_real_distribution<double> re_u(0.3, 2.0);
  std::uniform_real_distribution<double> im_u(-1.0, 1.0);
  std::uniform_real_distribution<double> qd(1.3, 8.0);
  std::uniform_real_distribution<double> rez(0.1, 3.0);
  std::uniform_real_distribution<double> imz(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    cases.push_back({{re_u(rng), im_u(rng)}, qd(rng), {rez(rng), imz(rng)}});
  }
  std::vector<double> residuals(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const FunctionalResiduals r = functional_residuals(
        cases[i].u, cases[i].q, cases[i].zeta, thresholds::kFunctionalTol);
    residuals[i] = std::max({r.r_minus, r.r_plus, r.r_total});
  });
  const double m = detail::max_over(residuals);
  return {"functional_equations", static_cast<long>(cases.size()), m,
          thresholds::kFunctionalEqMax, m <= thresholds::kFunctionalEqMax};
}

inline CheckResult check_cross_representation(const VerifyOptions& opt) {
  struct Case {
    Parameters p;
    AnnulusPoint z;
  };
  std::vector<Case> cases;
  for (const auto& u : standard_u()) {
    for (const double v : standard_v()) {
      for (const auto& z : standard_z(v)) cases.push_back({{u, v}, z});
    }
  }
  // evaluate two decades below the pass threshold: the fixed grid contains
  // points where |Psi| is small and the value-relative difference magnifies
  // the certified tails
  const double tol_eval = std::max(0.01 * opt.tol, 1e-13);
  std::vector<double> residuals(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    const SeriesEval a = eval_laurent(cases[i].p, cases[i].z, tol_eval);
    const SeriesEval b = eval_dirichlet(cases[i].p, cases[i].z, tol_eval);
    residuals[i] = std::abs(a.value - b.value) / std::abs(a.value);
  });
  const double m = detail::max_over(residuals);
  return {"cross_representation", static_cast<long>(cases.size()), m,
          thresholds::kCrossRepMax, m <= thresholds::kCrossRepMax};
}

// Both factors of the Dirichlet representation jump across arg z = pi; their
// product must not.  The smooth variation of Psi between the two probe points
// is already O(delta), so the single-valuedness residual is the disagreement
// with the branch-free Laurent sum at the same points on both sides of the
// cut (a mishandled branch shows up as an O(1) jump there).
inline CheckResult check_branch_cut(const VerifyOptions& opt) {
  struct Case {
    Parameters p;
    double r;
  };
  std::vector<Case> cases;
  for (const auto& u : standard_u()) {
    for (const double v : standard_v()) {
      cases.push_back({{u, v}, std::exp(v / 2.0)});
    }
  }
  constexpr double kDelta = 1e-6;
  std::vector<double> residuals(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    double worst = 0.0;
    for (const double theta : {kPi - kDelta, -(kPi - kDelta)}) {
      const AnnulusPoint z(std::polar(cases[i].r, theta));
      const SeriesEval d = eval_dirichlet(cases[i].p, z, opt.tol);
      const SeriesEval l = eval_laurent(cases[i].p, z, opt.tol);
      worst = std::max(worst, std::abs(d.value - l.value) / std::abs(l.value));
    }
    residuals[i] = worst;
  });
  const double m = detail::max_over(residuals);
  return {"branch_cut_continuity", static_cast<long>(cases.size()), m,
          thresholds::kBranchCutMax, m <= thresholds::kBranchCutMax};
}

// The full residual battery, in a fixed order.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  return {check_contiguity(opt),         check_inversion(opt),
          check_reflection(opt),         check_functional(opt),
          check_cross_representation(opt), check_branch_cut(opt)};
}

}  // namespace gammabnd
