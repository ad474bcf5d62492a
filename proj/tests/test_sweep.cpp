#include <doctest.h>

#include "thinfilm/sweep.hpp"

using namespace thinfilm;

namespace {

SweepRequest zero_request() {
  SweepRequest req;
  req.k_min = 0.1;
  req.k_max = 2.0;
  req.n_points = 20;
  req.film = FilmParams(1.0, 0.0, ZeroG{});
  return req;
}

}  // namespace

TEST_CASE("k_grid") {
  SweepRequest req = zero_request();
  auto ks = k_grid(req);
  REQUIRE(ks.size() == 20);
  CHECK(ks.front() == 0.1);
  CHECK(ks.back() == 2.0);
  CHECK(ks[1] - ks[0] == doctest::Approx(0.1));

  req.grid = GridKind::Logarithmic;
  req.k_min = 0.01;
  req.k_max = 5.0;
  req.n_points = 50;
  ks = k_grid(req);
  CHECK(ks.front() == 0.01);
  CHECK(ks.back() == 5.0);
  CHECK(ks[1] / ks[0] == doctest::Approx(ks[49] / ks[48]));
}

TEST_CASE("request validation") {
  SweepRequest req = zero_request();
  req.k_max = req.k_min;
  CHECK_THROWS_AS(sweep_dispersion(req), DomainError);
  req = zero_request();
  req.n_points = 1;
  CHECK_THROWS_AS(sweep_dispersion(req), DomainError);
  req = zero_request();
  req.k_min = 0.0;
  CHECK_THROWS_AS(sweep_dispersion(req), DomainError);
}

TEST_CASE("G = 0 sweep follows the closed form") {
  const SweepResult res = sweep_dispersion(zero_request());
  CHECK(res.failures.empty());
  REQUIRE(res.points.size() == 20);
  CHECK_FALSE(res.tmm_points);
  CHECK(res.version.rfind("thinfilm ", 0) == 0);
  for (std::size_t i = 0; i < res.points.size(); ++i) {
    const auto& p = res.points[i];
    CHECK(p.converged);
    CHECK(std::abs(p.Omega - closed_form_lowfreq(p.K, 1.0)) <= 1e-10);
    if (i > 0) {
      const auto& q = res.points[i - 1];
      CHECK(p.K > q.K);
      CHECK(p.Omega.real() > q.Omega.real());
      CHECK(std::abs(p.Omega - q.Omega) <= 5.0 * (p.K - q.K));
    }
  }
}

TEST_CASE("continuation through a damped branch") {
  SweepRequest req = zero_request();
  req.film = FilmParams(0.2, 0.02, DrudeG{});
  req.k_min = 0.02;
  req.k_max = 0.6;
  req.n_points = 30;
  const SweepResult a = sweep_dispersion(req);
  const SweepResult b = sweep_dispersion(req);
  CHECK(a.failures.empty());
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].Omega == b.points[i].Omega);
    CHECK(a.points[i].iterations == b.points[i].iterations);
    CHECK(a.points[i].Omega.imag() < 0.0);
  }
}

TEST_CASE("failures are recorded and continuation resumes") {
  SweepRequest req = zero_request();
  // Table only covers Omega in [0.3, 2]; small-K modes fall below it.
  std::vector<GTablePoint> pts = {{0.3, {}}, {2.0, {}}};
  req.film = FilmParams(0.5, 0.0, TabulatedG(pts));
  req.k_min = 0.1;
  req.k_max = 1.0;
  req.n_points = 10;
  const SweepResult res = sweep_dispersion(req);
  CHECK(res.points.size() + res.failures.size() == 10);
  CHECK_FALSE(res.failures.empty());
  CHECK_FALSE(res.points.empty());
  for (const auto& f : res.failures) CHECK_FALSE(f.reason.empty());
  for (const auto& p : res.points) {
    CHECK(std::abs(p.Omega - closed_form_lowfreq(p.K, 0.5)) <= 1e-10);
  }

  req.film = FilmParams(0.5, 0.0, TabulatedG({{5.0, {}}, {6.0, {}}}));
  try {
    sweep_dispersion(req);
    FAIL("expected SweepError");
  } catch (const SweepError& e) {
    CHECK(e.failures().size() == 10);
  }
}

TEST_CASE("slab comparison") {
  SweepRequest req = zero_request();
  req.film = FilmParams(0.05, 0.0, DrudeG{});
  req.k_min = 0.05;
  req.k_max = 0.5;
  req.compare_tmm = true;
  const SweepResult res = sweep_dispersion(req);
  REQUIRE(res.tmm_points);
  REQUIRE(res.tmm_points->size() == res.points.size());
  const auto rows = compare_tmm(res);
  REQUIRE(rows.size() == 20);
  CHECK(max_rel_diff(rows) <= 1e-2);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].K > rows[i - 1].K);

  SUBCASE("thinner films agree better") {
    req.film = FilmParams(0.1, 0.0, DrudeG{});
    const double thick = max_rel_diff(compare_tmm(sweep_dispersion(req)));
    CHECK(max_rel_diff(rows) < thick);
  }
}

TEST_CASE("compare_tmm arithmetic") {
  SweepResult res{zero_request(), "v", {}, {}, std::vector<SlabMode>{}};
  DispersionPoint p;
  p.K = 1.0;
  p.Omega = 1.0;
  p.converged = true;
  SlabMode m;
  m.K = 1.0;
  m.Omega = 0.99;
  m.converged = true;
  res.points.push_back(p);
  res.tmm_points->push_back(m);
  auto rows = compare_tmm(res);
  CHECK(rows[0].rel_diff == doctest::Approx(0.010101).epsilon(1e-5));

  (*res.tmm_points)[0].Omega = 1.0;
  rows = compare_tmm(res);
  CHECK(rows[0].rel_diff == 0.0);

  (*res.tmm_points)[0].converged = false;
  CHECK(std::isinf(max_rel_diff(compare_tmm(res))));

  res.tmm_points.reset();
  CHECK_THROWS_AS(compare_tmm(res), StateError);
}
