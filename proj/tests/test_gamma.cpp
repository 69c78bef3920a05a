#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "gammabnd/gamma.hpp"
#include "gammabnd/log_complex.hpp"
#include "gammabnd/parameters.hpp"

using namespace gammabnd;
using cplx = std::complex<double>;

// Reference values below were computed with 60-digit brute-force evaluations
// (product/recurrence summation) and frozen; see tests/reference.
namespace {
const cplx kGamma1PlusI(0.4980156681183560427137, -0.154949828301810685125);
const cplx kGamma1Plus2I(0.1519040026700361374482, 0.01980488016185498197191);
const cplx kGamma1Plus3I(0.01929275896401660601131, 0.03389601054320949656173);
const cplx kGammaHalfPlus03I(1.260992786396576933201, -0.7317595056918335954856);
constexpr double kLnSqrtPi = 0.5723649429247000870717;

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("log_gamma identity and classical values") {
  const LogComplex one = log_gamma(cplx(1.0, 0.0));
  CHECK(one.log_modulus == Catch::Approx(0.0).margin(1e-15));
  CHECK(one.argument == Catch::Approx(0.0).margin(1e-15));

  const LogComplex half = log_gamma(cplx(0.5, 0.0));
  CHECK(half.log_modulus == Catch::Approx(kLnSqrtPi).margin(1e-13));
  CHECK(half.argument == Catch::Approx(0.0).margin(1e-15));

  CHECK(rel_err(log_gamma(cplx(1.0, 1.0)).to_complex(), kGamma1PlusI) < 1e-13);
  CHECK(rel_err(log_gamma(cplx(1.0, 2.0)).to_complex(), kGamma1Plus2I) < 1e-13);
  CHECK(rel_err(log_gamma(cplx(1.0, 3.0)).to_complex(), kGamma1Plus3I) < 1e-13);
  CHECK(rel_err(log_gamma(cplx(0.5, 0.3)).to_complex(), kGammaHalfPlus03I) < 1e-13);
}

TEST_CASE("log_gamma pole detection") {
  CHECK_THROWS_AS(log_gamma(cplx(0.0, 0.0)), GammaPole);
  CHECK_THROWS_AS(log_gamma(cplx(-1.0, 0.0)), GammaPole);
  CHECK_THROWS_AS(log_gamma(cplx(-5.0, 0.0)), GammaPole);
  CHECK_THROWS_AS(log_gamma(cplx(-3.0, 1e-13)), GammaPole);
  CHECK_NOTHROW(log_gamma(cplx(-3.0 + 1e-9, 0.0)));
  CHECK_NOTHROW(log_gamma(cplx(-3.0, 1e-9)));
}

TEST_CASE("LogComplex round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lm(-650.0, 650.0);
  std::uniform_real_distribution<double> ang(-kPi + 1e-6, kPi);
  for (int i = 0; i < 2000; ++i) {
    const LogComplex a{lm(rng), ang(rng)};
    if (std::abs(a.log_modulus) > 690.0) continue;
    const LogComplex b = LogComplex::from_complex(a.to_complex());
    CHECK(std::abs(b.log_modulus - a.log_modulus) < 1e-12);
    CHECK(circle_distance(b.argument, a.argument) < 1e-12);
  }
  CHECK(LogComplex::zero().is_zero());
  CHECK(LogComplex::zero().to_complex() == cplx(0.0, 0.0));
  CHECK(LogComplex::from_complex(cplx(0.0, 0.0)).is_zero());
}

TEST_CASE("recurrence Gamma(z+1) = z Gamma(z) on a random grid") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-10.0, 10.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  int tested = 0;
  while (tested < 500) {
    cplx z(re(rng), im(rng));
    if (std::abs(z) < 1.0 || std::abs(z) > 100.0) continue;
    if (z.real() < 0.5 && std::abs(z.imag()) < 1e-3 &&
        std::abs(z.real() - std::round(z.real())) < 1e-3) {
      continue;  // too close to a pole for the ratio to be meaningful
    }
    const cplx lhs = std::exp(log_gamma(z + 1.0).as_log() - log_gamma(z).as_log());
    CHECK(std::abs(lhs - z) / std::abs(z) < 1e-12);
    ++tested;
  }
}

TEST_CASE("reflection Gamma(z) Gamma(1-z) = pi / sin(pi z) on Re z in (0,1)") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> re(0.02, 0.98);
  std::uniform_real_distribution<double> im(-30.0, 30.0);
  for (int i = 0; i < 500; ++i) {
    const cplx z(re(rng), im(rng));
    const std::complex<double> sum =
        log_gamma(z).as_log() + log_gamma(1.0 - z).as_log();
    const std::complex<double> target = kLnPi - detail::log_sin_pi(z);
    // compare modulo 2 pi i in the argument
    CHECK(std::abs(std::exp(sum - target) - 1.0) < 1e-12);
  }
}

TEST_CASE("conjugation symmetry") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> re(-8.0, 8.0);
  std::uniform_real_distribution<double> im(0.1, 20.0);
  for (int i = 0; i < 300; ++i) {
    const cplx z(re(rng), im(rng));
    const LogComplex a = log_gamma(z);
    const LogComplex b = log_gamma(std::conj(z));
    CHECK(b.log_modulus == a.log_modulus);
    CHECK(b.argument == Catch::Approx(-a.argument).margin(1e-15));
  }
}

TEST_CASE("gamma_vertical spot values and decay envelope") {
  const Parameters p{cplx(1.0, 0.0), kPi / 2.0};
  const auto seq = gamma_vertical(p, 0, 3);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0].n == 0);
  CHECK(rel_err(seq[0].value.to_complex(), cplx(1.0, 0.0)) < 1e-14);
  CHECK(rel_err(seq[1].value.to_complex(), kGamma1PlusI) < 1e-13);
  CHECK(rel_err(seq[2].value.to_complex(), kGamma1Plus2I) < 1e-13);

  // |Gamma(u+2ivn/pi)| <= C n^{Re u - 1/2} e^{-v n}: the normalized sequence
  // stays bounded
  const Parameters q{cplx(1.3, -0.4), 1.0};
  const auto tail = gamma_vertical(q, 100, 2000);
  double bound = -1e300;
  for (const auto& e : tail) {
    const double norm = e.value.log_modulus + q.v * static_cast<double>(e.n) -
                        (q.u.real() - 0.5) * std::log(static_cast<double>(e.n));
    bound = std::max(bound, norm);
  }
  CHECK(bound < 2.0);  // ln sqrt(2 pi) ~ 0.919 plus slack
}

TEST_CASE("gamma_vertical propagates pole hits only for invalid parameters") {
  CHECK_THROWS_AS(gamma_vertical({cplx(-2.0, 0.0), 1.0}, -3, 3), InvalidParameters);
  CHECK_NOTHROW(gamma_vertical({cplx(1.0, 0.0), 1.0}, -1000, 1000));
}

TEST_CASE("log-domain coefficients stay finite out to n = 1e6") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  const auto far = gamma_vertical(p, 1000000, 1000000);
  REQUIRE(far.size() == 1);
  CHECK(std::isfinite(far[0].value.log_modulus));
  CHECK(std::isfinite(far[0].value.argument));
  // decay envelope: ln|Gamma| ~ -v n + (Re u - 1/2) ln(2vn/pi) + ln sqrt(2 pi)
  const double expected = -1e6 + 0.5 * std::log(2e6 / kPi) + 0.5 * kLnTwoPi;
  CHECK(far[0].value.log_modulus == Catch::Approx(expected).epsilon(1e-6));
}

TEST_CASE("asymptotic form against the direct evaluation") {
  for (const double v : {1.0, kPi / 2.0, 3.0}) {
    for (const cplx u : {cplx(1.0, 0.0), cplx(0.5, 0.3), cplx(2.0, 0.0)}) {
      const Parameters p{u, v};
      const long n = 1000;
      const double direct = log_gamma(vertical_argument(p, n)).log_modulus;
      const double asym = asymptotic_log_gamma(p, n).log_modulus;
      CHECK(std::abs(std::exp(direct - asym) - 1.0) < 1e-3);
    }
  }
  // at n = 1e4 the two routes agree much more tightly (ratio test, no literal)
  const Parameters p{cplx(1.0, 0.0), 1.0};
  const double d = log_gamma(vertical_argument(p, 10000)).log_modulus;
  const double a = asymptotic_log_gamma(p, 10000).log_modulus;
  CHECK(std::abs(std::exp(d - a) - 1.0) < 1e-6);
}

TEST_CASE("asymptotic decay slope approaches -v") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  const double s2000 = asymptotic_log_gamma(p, 2001).log_modulus -
                       asymptotic_log_gamma(p, 2000).log_modulus;
  CHECK(std::abs(s2000 + p.v) < 1e-3);
  const Parameters q{cplx(0.7, 0.2), kPi / 2.0};
  const double s5000 = asymptotic_log_gamma(q, 5001).log_modulus -
                       asymptotic_log_gamma(q, 5000).log_modulus;
  CHECK(std::abs(s5000 + q.v) < 1e-3);
}

TEST_CASE("asymptotic argument grows like (2vn/pi) ln(2vn/pi)") {
  const Parameters p{cplx(1.0, 0.0), 1.0};
  for (const long n : {100000L, 400000L}) {
    const double y = 2.0 * p.v * static_cast<double>(n) / kPi;
    const double im = detail::asymptotic_log_gamma_raw(vertical_argument(p, n)).imag();
    CHECK(im / (y * std::log(y)) == Catch::Approx(1.0).margin(0.1));
  }
}

TEST_CASE("validate_params accepts and rejects per the lattice") {
  CHECK(validate_params({cplx(1.0, 0.0), 1.0}).valid);

  const ValidityReport r1 = validate_params({cplx(-2.0, 0.0), 1.0});
  CHECK_FALSE(r1.valid);
  CHECK(r1.m == 2);
  CHECK(r1.k == 0);

  const ValidityReport r2 = validate_params({cplx(-1.0, 2.0 / kPi), 1.0});
  CHECK_FALSE(r2.valid);
  CHECK(r2.m == 1);
  CHECK(r2.k == -1);

  CHECK_FALSE(validate_params({cplx(1.0, 0.0), 0.0}).valid);
}

TEST_CASE("validate_params flags the near-lattice band instead of rejecting") {
  const ValidityReport r = validate_params({cplx(-1.0 + 1e-8, 2.0 / kPi), 1.0});
  CHECK(r.valid);
  CHECK(r.ill_conditioned);
  CHECK(r.distance == Catch::Approx(1e-8).epsilon(1e-3));

  const ValidityReport far = validate_params({cplx(1.0, 0.0), 1.0});
  CHECK_FALSE(far.ill_conditioned);
}

TEST_CASE("log_rgamma is total and vanishes at the poles of Gamma") {
  CHECK(log_rgamma(cplx(-3.0, 0.0)).is_zero());
  CHECK(log_rgamma(cplx(0.0, 0.0)).is_zero());
  const cplx w(0.5, 0.3);
  const cplx product =
      log_rgamma(w).to_complex() * log_gamma(w).to_complex();
  CHECK(std::abs(product - 1.0) < 1e-13);
  // entire continuation agrees with 1/Gamma on the right half-plane too
  const cplx v(3.2, -1.1);
  CHECK(std::abs(log_rgamma(v).to_complex() * log_gamma(v).to_complex() - 1.0) < 1e-13);
}
