#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "gammabnd/boundary.hpp"
#include "gammabnd/halfplane.hpp"
#include "gammabnd/laurent.hpp"

using namespace gammabnd;
using cplx = std::complex<double>;

// 60-digit reference values for Psi(1, 1, e^{1 - 2^-j}) (see tests/reference).
namespace {
const cplx kProbeTable[8] = {
    {4.85184715469473941137, 0.3809684868588199481698},
    {6.515206051307073823393, 1.693328728815988521843},
    {7.499302004260459126386, 3.115231126554178202537},
    {7.947545610820802295717, 4.112202870329495443099},
    {8.141296811224266005422, 4.69343941980566927229},
    {8.227411776415509117068, 5.005842788155843232788},
    {8.267333789817715651848, 5.167595487898807624423},
    {8.286452161606366946368, 5.249870167659879905051},
};
constexpr double kArgGamma1PlusI = -0.3016403204675331978875;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}
}  // namespace

TEST_CASE("radial probe values against the extended-precision table") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  const ProbeReport r = radial_probe(p, 0.0, 8, 1e-6);
  REQUIRE(r.radii.size() == 8);
  for (int j = 1; j <= 8; ++j) {
    CHECK(r.radii[j - 1] ==
          Catch::Approx(std::exp(1.0 - std::ldexp(1.0, -j))).epsilon(1e-14));
    CHECK(r.status[j - 1] == "ok");
    CHECK(std::abs(r.values[j - 1] - kProbeTable[j - 1]) /
              std::abs(kProbeTable[j - 1]) <
          1e-9);
  }
}

TEST_CASE("radial probe term counts grow toward the boundary") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  const ProbeReport r = radial_probe(p, 0.7, 10, 1e-8);
  REQUIRE(r.term_counts.size() == 10);
  for (std::size_t i = 1; i < r.term_counts.size(); ++i) {
    CHECK(r.term_counts[i] >= r.term_counts[i - 1]);
  }
  // radii strictly increasing and inside the annulus
  for (std::size_t i = 0; i < r.radii.size(); ++i) {
    if (i) CHECK(r.radii[i] > r.radii[i - 1]);
    CHECK(r.radii[i] < std::exp(p.v));
  }
}

TEST_CASE("radial probe clamps the ladder at the closeness floor") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  const ProbeReport r = radial_probe(p, 0.0, 12, 1.0 / 32.0);
  CHECK(r.radii.size() == 5);  // 2^-j hits the floor at j = 5
}

TEST_CASE("probe values agree with the direct Laurent sum where both succeed") {
  const Parameters p{cplx(0.5, 0.3), kPi / 2.0};
  const ProbeReport r = radial_probe(p, 0.9, 5, 1e-6);
  for (std::size_t i = 0; i < r.radii.size(); ++i) {
    if (r.status[i] != "ok") continue;
    const SeriesEval l =
        eval_laurent(p, AnnulusPoint(std::polar(r.radii[i], r.direction)), 1e-10);
    CHECK(std::abs(l.value - r.values[i]) / std::abs(l.value) < 1e-8);
  }
}

TEST_CASE("transported angle of the probe points") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  for (int j = 1; j <= 8; ++j) {
    const double delta = std::ldexp(1.0, -j);
    const AnnulusPoint z(cplx(std::exp(p.v * (1.0 - delta)), 0.0));
    const HalfPlaneImage h = map_to_halfplane(p, z);
    CHECK(std::arg(h.t_z) ==
          Catch::Approx((kPi / 2.0) * (1.0 - delta)).epsilon(1e-12));
  }
}

TEST_CASE("phase increments follow the (2v/pi) ln(2vn/pi) law") {
  const Parameters p{cplx(1.0, 0.0), kPi / 2.0};
  const auto recs = phase_increments(p, 1, 4);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].phi == Catch::Approx(kArgGamma1PlusI).epsilon(1e-9));
  // 2v/pi = 1 makes the model increment ln(n) mod 2 pi
  for (const auto& rec : recs) {
    CHECK(rec.delta_model ==
          Catch::Approx(wrap_angle(std::log(static_cast<double>(rec.n)))).margin(1e-13));
    CHECK(rec.residual >= 0.0);
    CHECK(rec.residual <= kPi);
  }
}

TEST_CASE("phase residual decays at the 1/n rate") {
  for (const cplx u : {cplx(1.0, 0.0), cplx(0.5, 0.3), cplx(2.0, 0.0)}) {
    for (const double v : {1.0, kPi / 2.0, 3.0}) {
      const Parameters p{u, v};
      const auto lo = phase_increments(p, 100, 200);
      const auto hi = phase_increments(p, 1000, 2000);
      std::vector<double> rlo, rhi;
      for (const auto& r : lo) rlo.push_back(r.residual);
      for (const auto& r : hi) rhi.push_back(r.residual);
      CHECK(median(rhi) <= 0.12 * median(rlo));
    }
  }
}

TEST_CASE("fitted phase constant is stable under window doubling") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  const auto fit = [&](long n_lo, long n_hi) {
    double c = 0.0;
    for (const auto& r : phase_increments(p, n_lo, n_hi)) {
      c = std::max(c, static_cast<double>(r.n) * r.residual);
    }
    return c;
  };
  const double c1 = fit(100, 5000);
  const double c2 = fit(100, 10000);
  CHECK(std::isfinite(c1));
  CHECK(c2 < 10.0 * c1);
  CHECK(c2 >= c1);  // sup over a superset
}

TEST_CASE("phase route switch keeps the asymptotic and direct forms consistent") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  // n_switch = ceil(708 / v) = 708: spans the overlap window and the switch
  const auto recs = phase_increments(p, 690, 730);
  for (const auto& r : recs) {
    CHECK(r.residual < 1e-2);  // law residual stays tiny through the switch
  }
}

TEST_CASE("gap report for doubling frequencies") {
  const GapReport r = gap_check(2.0, 20);
  REQUIRE(r.gap.size() == 20);
  for (int k = 0; k < 20; ++k) {
    CHECK(r.gap[k] == Catch::Approx(std::ldexp(1.0, k)));
  }
  CHECK(r.strictly_increasing);
  CHECK(r.gaps_increasing);
  CHECK(r.hypothesis_holds);
}

TEST_CASE("gap threshold index matches the closed form") {
  const GapReport r = gap_check(std::exp(1.0), 30, 1e6);
  CHECK(r.threshold_index == 14);
  CHECK(r.gap[14] > 1e6);
  CHECK(r.gap[13] <= 1e6);
  CHECK(r.hypothesis_holds);
}

TEST_CASE("gap check rejects a degenerate ratio") {
  CHECK_THROWS_AS(gap_check(1.0, 10), InvalidParameters);
  CHECK_THROWS_AS(gap_check(0.5, 10), InvalidParameters);
}

TEST_CASE("gap hypothesis holds for every transported frequency ratio") {
  for (const double v : {1.0, kPi / 2.0, 3.0, kPi * kPi}) {
    const double v_tilde = std::exp(kPi * kPi / v);
    const long k_max = v_tilde > 100.0 ? 60 : 200;
    const GapReport r = gap_check(v_tilde, k_max);
    CHECK(r.hypothesis_holds);
  }
}

TEST_CASE("boundary distance map and transport consistency") {
  const Parameters p{cplx(1.0, 0.0), 2.0};
  const BoundaryDistance centre = boundary_distance_map(p, AnnulusPoint(cplx(1.0, 0.0)));
  CHECK(centre.d_annulus == Catch::Approx(p.v));
  CHECK(centre.re_zeta_ratio == Catch::Approx(1.0));

  const AnnulusPoint near(cplx(std::exp(p.v * (1.0 - 1e-3)), 0.0));
  const BoundaryDistance nb = boundary_distance_map(p, near);
  CHECK(nb.re_zeta_ratio == Catch::Approx(std::sin(kPi * 1e-3 / 2.0)).epsilon(1e-9));

  double prev = 1.1;
  for (const double delta : {0.5, 0.2, 0.05, 0.01, 1e-3, 1e-5}) {
    const AnnulusPoint z(std::polar(std::exp(p.v * (1.0 - delta)), 0.9));
    const BoundaryDistance b = boundary_distance_map(p, z);
    CHECK(b.re_zeta_ratio < prev);
    prev = b.re_zeta_ratio;
    const HalfPlaneImage h = map_to_halfplane(p, z);
    CHECK(std::abs(b.re_zeta_ratio - h.t_z.real() / std::abs(h.t_z)) < 1e-14);
  }

  CHECK_THROWS_AS(boundary_distance_map(p, AnnulusPoint(cplx(9.0, 0.0))), OutsideDomain);
}
