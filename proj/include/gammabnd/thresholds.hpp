#pragma once

namespace gammabnd::thresholds {

// Every pass/fail threshold used by the verification battery (`verify`
// command and the acceptance suite) lives here; nothing is scattered.
//
//   check                      threshold   evaluation tolerance
//   -------------------------  ----------  --------------------
//   cross-representation       1e-8        1e-10 per evaluation
//   three-way (ray integral)   1e-6        1e-8 quadrature
//   contiguity relation        1e-9        1e-10 (contract: 10x tol)
//   inversion relation         1e-9        1e-10
//   reflection transfer        1e-11       (log-domain, |n| <= 1e4)
//   q-difference equations     1e-10       1e-11 per sum
//   branch-cut continuity      1e-7        1e-10 per evaluation
//   phase-law median decay     0.12        (1/n rate with 20% slack)
//   Stirling ratio at n=1000   1e-3
//   closed-form spot values    1e-14       (v_tilde at 1e-15)

inline constexpr double kCrossRepMax = 1e-8;
inline constexpr double kThreeWayMax = 1e-6;
inline constexpr double kContiguityMax = 1e-9;
inline constexpr double kInversionMax = 1e-9;
inline constexpr double kReflectionMax = 1e-11;
inline constexpr double kFunctionalEqMax = 1e-10;
inline constexpr double kBranchCutMax = 1e-7;
inline constexpr double kPhaseMedianFactor = 0.12;
inline constexpr double kStirlingRatioMax = 1e-3;
inline constexpr double kSpotValueMax = 1e-14;
inline constexpr double kVtildeMax = 1e-15;

inline constexpr double kVerifyTol = 1e-10;      // series tolerance in the battery
inline constexpr double kFunctionalTol = 1e-11;  // per-sum tolerance for S-, S+
inline constexpr double kIntegralTol = 1e-8;     // quadrature tolerance

}  // namespace gammabnd::thresholds
