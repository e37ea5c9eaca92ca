#include <cmath>
#include <random>

#include <doctest.h>

#include "radcomp/models.hpp"
#include "test_helpers.hpp"

using namespace radcomp;
using namespace radcomp::testing;

TEST_SUITE_BEGIN("models");

TEST_CASE("comparison constant closed form") {
  CHECK(comparison_constant(0.0, 0.0) == 1.0);
  CHECK(comparison_constant(-1.0, 0.5) ==
        doctest::Approx(11.0835841483959753).epsilon(1e-12));
  // bounded-density model constants: a = -b, c = sup r |phi_r| = b/4 at r = 1
  CHECK(comparison_constant(-1.0, 0.25) ==
        doctest::Approx(9.2363201236633128).epsilon(1e-12));
  CHECK_THROWS_AS(comparison_constant(0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(comparison_constant(0.0, -0.1), std::invalid_argument);
}

TEST_CASE("comparison constant monotone, K >= 1") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> neg(-3.0, 0.0), pos(0.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double a = neg(rng), c = pos(rng);
    const double K = comparison_constant(a, c);
    CHECK(K >= 1.0);
    CHECK(comparison_constant(a, c + 0.5) >= K);       // nondecreasing in c
    CHECK(comparison_constant(a - 0.5, c) >= K);       // nonincreasing in a
  }
}

TEST_CASE("built-in jets match analytic derivatives") {
  const WarpJet e = euclidean().warp(2.0);
  CHECK(e.f == 2.0);
  CHECK(e.fp == 1.0);
  CHECK(e.fpp == 0.0);

  const WarpJet c = cone(2.0).warp(0.5);
  CHECK(c.f == doctest::Approx(0.25));
  CHECK(c.fp == doctest::Approx(1.0));
  CHECK(c.fpp == doctest::Approx(2.0));

  const DensityJet d = bounded_density(1.0).density(1.0);
  CHECK(d.phi == doctest::Approx(-0.5));
  CHECK(d.phi_r == doctest::Approx(0.25));
  CHECK(d.phi_rr == doctest::Approx(-0.25));
  CHECK(d.phi_th == 0.0);
}

TEST_CASE("jet consistency against central finite differences") {
  const double h = 1e-4;
  const auto models = {euclidean(), cone(2.0), cone(0.5), sphere_warp(),
                       hyperbolic_warp(), bounded_density(),
                       cone_with_log_density(0.5)};
  for (const auto& model : models) {
    for (double r : {0.5, 1.0, 2.0, 2.8}) {
      const WarpJet lo = model.warp(r - h), mid = model.warp(r),
                    hi = model.warp(r + h);
      const double fp_fd = (hi.f - lo.f) / (2.0 * h);
      const double fpp_fd = (hi.f - 2.0 * mid.f + lo.f) / (h * h);
      CHECK(fp_fd == doctest::Approx(mid.fp).epsilon(1e-6));
      if (std::abs(mid.fpp) > 1e-10)
        CHECK(fpp_fd == doctest::Approx(mid.fpp).epsilon(1e-5));

      const DensityJet dlo = model.density(r - h), dmid = model.density(r),
                       dhi = model.density(r + h);
      const double phir_fd = (dhi.phi - dlo.phi) / (2.0 * h);
      CHECK(phir_fd == doctest::Approx(dmid.phi_r).epsilon(1e-6));
    }
  }
}

TEST_CASE("non-radial density jets consistent in theta") {
  ModelSpec spec;
  spec.n = 2;
  spec.density.kind = "cone_log";
  spec.density.params["K"] = 0.5;
  spec.density.params["F_sin_amp"] = 0.1;
  const ManifoldModel model = build_model(spec);
  CHECK_FALSE(model.radial_density());
  const double h = 1e-4, r = 2.0, th = 0.7;
  const DensityJet lo = model.density(r, th - h), mid = model.density(r, th),
                   hi = model.density(r, th + h);
  CHECK((hi.phi - lo.phi) / (2.0 * h) ==
        doctest::Approx(mid.phi_th).epsilon(1e-6));
  CHECK((hi.phi - 2.0 * mid.phi + lo.phi) / (h * h) ==
        doctest::Approx(mid.phi_thth).epsilon(1e-4));
}

TEST_CASE("build_model rejections") {
  ModelSpec spec;
  spec.warp.kind = "nope";
  CHECK_THROWS_AS(build_model(spec), std::invalid_argument);

  spec.warp.kind = "sin";
  spec.r_max = 3.5;  // past pi
  CHECK_THROWS_AS(build_model(spec), std::invalid_argument);

  spec = ModelSpec{};
  spec.n = 1;
  CHECK_THROWS_AS(build_model(spec), std::invalid_argument);

  spec = ModelSpec{};
  spec.n = 3;
  spec.density.kind = "cone_log";
  spec.density.params["K"] = 0.5;
  spec.density.params["F_sin_amp"] = 0.1;  // non-radial needs n = 2
  CHECK_THROWS_AS(build_model(spec), std::invalid_argument);
}

TEST_CASE("custom tabulated warp reproduces sin jets") {
  ModelSpec spec;
  spec.warp.kind = "custom";
  for (int i = 0; i <= 400; ++i) {
    const double r = 0.2 + (2.8 - 0.2) * i / 400.0;
    spec.warp.r_table.push_back(r);
    spec.warp.f_table.push_back(std::sin(r));
  }
  spec.r_min = 0.2;
  spec.r_max = 2.8;
  const ManifoldModel model = build_model(spec);
  for (double r : {0.8, 1.4, 2.1}) {
    const WarpJet w = model.warp(r);
    CHECK(w.f == doctest::Approx(std::sin(r)).epsilon(1e-7));
    CHECK(w.fp == doctest::Approx(std::cos(r)).epsilon(1e-5));
    CHECK(w.fpp == doctest::Approx(-std::sin(r)).epsilon(1e-3));
  }
}

TEST_CASE("reparametrized distance") {
  CHECK(reparam_distance(euclidean(), 2.0) == doctest::Approx(2.0).epsilon(1e-12));

  ModelSpec spec;
  spec.density.kind = "constant";
  spec.density.params["value"] = -1.0;
  CHECK(reparam_distance(build_model(spec), 2.0) ==
        doctest::Approx(14.7781121978613005).epsilon(1e-10));

  // quadrature oracle value for phi = -1/(1+t)
  CHECK(reparam_distance(bounded_density(1.0), 1.0) ==
        doctest::Approx(4.1657406372793471).epsilon(1e-9));

  CHECK_THROWS_AS(reparam_distance(euclidean(), 11.0), std::invalid_argument);
}

TEST_CASE("s(r) >= r whenever phi <= 0") {
  ModelSpec const_spec;
  const_spec.density.kind = "constant";
  const_spec.density.params["value"] = -0.3;
  for (const auto& model : {euclidean(), bounded_density(1.0),
                            bounded_density(0.2), build_model(const_spec)}) {
    for (int i = 1; i <= 10; ++i) {
      const double r = i;
      CHECK(reparam_distance(model, r) >= r - 1e-12);
    }
  }
}

TEST_SUITE_END();
