#include <doctest.h>

#include <random>

#include "thinfilm/core_model.hpp"
#include "thinfilm/errors.hpp"

using namespace thinfilm;

TEST_CASE("normalize maps physical inputs onto skin-depth units") {
  const Scaling s(1e16, 3e10);
  CHECK(s.skin_depth() == doctest::Approx(3e-6));

  const auto n = normalize(s, 3e-6, 1e6 / 3.0, Complex{1e15, 0.0});
  CHECK(n.D == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(n.K == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(n.Omega.real() == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(n.Omega.imag() == 0.0);

  const auto unit = normalize(s, s.skin_depth(), 1.0 / s.skin_depth(), Complex{1e16, 0.0});
  CHECK(unit.D == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit.K == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit.Omega.real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("normalize rejects non-physical input") {
  const Scaling s(1e16);
  CHECK_THROWS_AS(normalize(s, 0.0, 1.0, {}), DomainError);
  CHECK_THROWS_AS(normalize(s, -1e-6, 1.0, {}), DomainError);
  CHECK_THROWS_AS(normalize(s, 1e-6, -1.0, {}), DomainError);
  CHECK_THROWS_AS(Scaling(0.0), DomainError);
  CHECK_THROWS_AS(Scaling(1e16, -3e10), DomainError);
}

TEST_CASE("normalize and denormalize are inverse") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> e(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const Scaling s(std::pow(10.0, 15.0 + e(rng)), std::pow(10.0, 10.0 + e(rng)));
    const double d = std::pow(10.0, -6.0 + e(rng));
    const double k = std::pow(10.0, 5.0 + e(rng));
    const Complex w{std::pow(10.0, 15.0 + e(rng)), -std::pow(10.0, 12.0 + e(rng))};
    const auto back = denormalize(s, normalize(s, d, k, w));
    CHECK(std::abs(back.d - d) <= 1e-15 * d);
    CHECK(std::abs(back.k - k) <= 1e-15 * k);
    CHECK(std::abs(back.omega - w) <= 1e-15 * std::abs(w));
  }
}

TEST_CASE("alpha picks the decaying branch") {
  CHECK(alpha(1.0, {0.8, 0.0}) == Complex{0.6, 0.0});
  CHECK(alpha(1.0, {1.0, 0.0}) == Complex{0.0, 0.0});
  const Complex above = alpha(1.0, {1.25, 0.0});
  CHECK(above.real() == 0.0);
  CHECK(above.imag() == doctest::Approx(0.75));
  // Negative-zero imaginary part must not flip the tie-break.
  const Complex cut = alpha(1.0, {1.25, -0.0});
  CHECK(cut.imag() > 0.0);
  CHECK(decaying_sqrt({-4.0, -0.0}) == Complex{0.0, 2.0});
}

TEST_CASE("alpha branch property on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_real_distribution<double> kd(0.0, 10.0);
  int checked = 0;
  while (checked < 10000) {
    const Complex w{u(rng), u(rng)};
    if (std::abs(w) > 10.0) continue;
    const double K = kd(rng);
    const Complex a = alpha(K, w);
    REQUIRE(a.real() >= 0.0);
    const Complex target = K * K - w * w;
    CHECK(std::abs(a * a - target) <= 1e-13 * (K * K + std::norm(w)));
    ++checked;
  }
}

TEST_CASE("Drude permittivity") {
  CHECK(epsilon_drude({0.5, 0.0}, 0.0) == Complex{-3.0, 0.0});
  CHECK(epsilon_drude({1.0, 0.0}, 0.0) == Complex{0.0, 0.0});
  const Complex lossy = epsilon_drude({0.5, 0.0}, 0.1);
  CHECK(lossy.real() == doctest::Approx(-2.846154).epsilon(1e-6));
  CHECK(lossy.imag() == doctest::Approx(0.769231).epsilon(1e-6));

  SUBCASE("real for real frequency without collisions") {
    for (double w = 0.05; w < 5.0; w += 0.05) CHECK(epsilon_drude({w, 0.0}, 0.0).imag() == 0.0);
  }
  SUBCASE("tends to vacuum at high frequency") {
    for (const double nu : {0.0, 0.1, 1.0}) {
      CHECK(std::abs(std::abs(epsilon_drude(std::polar(1e3, 0.3), nu)) - 1.0) <= 1e-5);
      CHECK(std::abs(std::abs(epsilon_drude({-1e3, 0.0}, nu)) - 1.0) <= 1e-5);
    }
  }
  SUBCASE("poles") {
    CHECK_THROWS_WITH_AS(epsilon_drude({0.0, 0.0}, 0.1), doctest::Contains("Omega = 0"),
                         DomainError);
    CHECK_THROWS_WITH_AS(epsilon_drude({0.0, -0.1}, 0.1), doctest::Contains("-i*nu"), DomainError);
  }
}
