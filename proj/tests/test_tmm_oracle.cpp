#include <doctest.h>

#include "oracles.hpp"
#include "thinfilm/errors.hpp"
#include "thinfilm/tmm_oracle.hpp"

using namespace thinfilm;

TEST_CASE("slab residual limits") {
  SUBCASE("vanishing thickness leaves the exterior term") {
    const Complex w{0.15, 0.0};
    CHECK(std::abs(tmm_residual(w, 0.2, 1e-14, 0.0) - alpha(0.2, w)) <= 1e-14);
  }
  SUBCASE("on the light line only the interior term remains") {
    const double K = 0.2;
    const double D = 0.05;
    const Complex eps = epsilon_drude(K, 0.0);
    const Complex k1 = std::sqrt(K * K - eps * K * K);
    const Complex expected = k1 / eps * std::tanh(k1 * D / 2.0);
    CHECK(std::abs(tmm_residual(K, K, D, 0.0) - expected) <= 1e-15);
  }
  SUBCASE("sign change just below the light line") {
    const double lo = tmm_residual(0.19, 0.2, 0.05, 0.0).real();
    const double hi = tmm_residual(0.1999999, 0.2, 0.05, 0.0).real();
    CHECK(lo > 0.0);
    CHECK(hi < 0.0);
  }
  SUBCASE("real below the light line without collisions") {
    for (double K = 0.05; K <= 2.0; K += 0.05) {
      for (double f = 0.05; f < 1.0; f += 0.05) {
        const Complex r = tmm_residual(f * K, K, 0.1, 0.0);
        CHECK(std::abs(r.imag()) <= 1e-14);
      }
    }
  }
  SUBCASE("large arguments stay finite") {
    const Complex r = tmm_residual({0.3, 0.0}, 50.0, 100.0, 0.0);
    CHECK(std::isfinite(r.real()));
    CHECK(std::isfinite(r.imag()));
  }
  CHECK_THROWS_AS(tmm_residual({1.0, 0.0}, 2.0, 0.1, 0.0), SingularityError);
}

TEST_CASE("tmm_solve") {
  SUBCASE("bound mode below the light line") {
    const SlabMode m = tmm_solve(0.2, 0.05, 0.0, default_seed(0.2, 0.05));
    REQUIRE(m.converged);
    CHECK(m.Omega.real() > 0.0);
    CHECK(m.Omega.real() < 0.2);
    CHECK(m.kappa_out.real() > 0.0);
    CHECK(m.symmetry == SlabSymmetry::HySymmetric);
    const double ref = static_cast<double>(oracle::slab_root(0.2L, 0.05L));
    CHECK(std::abs(m.Omega.real() - ref) <= 1e-13);
    CHECK(std::abs(m.Omega.real() - 0.19999728858517564443) <= 1e-14);

    const Complex k0sq = 0.2 * 0.2 - m.Omega * m.Omega;
    const Complex eps_w2 = epsilon_drude(m.Omega, 0.0) * m.Omega * m.Omega;
    const Complex k1sq = 0.2 * 0.2 - eps_w2;
    CHECK(std::abs(m.kappa_out * m.kappa_out - k0sq) <= 1e-13 * (0.04 + std::norm(m.Omega)));
    CHECK(std::abs(m.kappa_in * m.kappa_in - k1sq) <= 1e-13 * (0.04 + std::abs(eps_w2)));
    CHECK(std::abs(tmm_residual(m.Omega, 0.2, 0.05, 0.0)) <= 1e-11);
  }
  SUBCASE("vanishing thickness approaches the light line") {
    const SlabMode m = tmm_solve(0.2, 1e-6, 0.0, default_seed(0.2, 1e-6));
    REQUIRE(m.converged);
    CHECK(std::abs(m.Omega - 0.2) <= 1e-6 * 0.2);
    CHECK(m.kappa_out.real() > 0.0);
    // kappa_out ~ (K^2 D / 2)(1 - 1/eps) for a vanishing film.
    const double eps = 1.0 - 1.0 / 0.04;
    CHECK(m.kappa_out.real() == doctest::Approx(0.02 * 1e-6 * (1.0 - 1.0 / eps)).epsilon(1e-4));
  }
  SUBCASE("agrees with the thin-film Drude model") {
    const double model = 0.19999728738476564851;  // mpmath
    const SlabMode m = tmm_solve(0.2, 0.05, 0.0, model);
    REQUIRE(m.converged);
    CHECK(std::abs(m.Omega.real() - model) / m.Omega.real() <= 1e-2);
  }
  SUBCASE("damped slab mode") {
    const SlabMode m = tmm_solve(0.2, 0.05, 0.01, default_seed(0.2, 0.05));
    REQUIRE(m.converged);
    CHECK(m.Omega.imag() < 0.0);
  }
  CHECK_THROWS_AS(tmm_solve(0.0, 0.05, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(tmm_solve(0.2, 0.0, 0.0, 0.1), DomainError);
}

TEST_CASE("slab and thin-film roots converge as the film thins") {
  double prev = 1.0;
  for (const long double D : {0.1L, 0.05L, 0.025L}) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const long double K = 0.05L + i * 0.45L / 19.0L;
      const long double a = oracle::drude_film_root(K, D);
      const long double b = oracle::slab_root(K, D);
      const SlabMode m = tmm_solve(static_cast<double>(K), static_cast<double>(D), 0.0,
                                   static_cast<double>(a));
      REQUIRE(m.converged);
      CHECK(std::abs(m.Omega.real() - static_cast<double>(b)) <= 1e-13);
      worst = std::max(worst, static_cast<double>(std::abs(a - b) / b));
    }
    CHECK(worst < prev);
    prev = worst;
  }
}
