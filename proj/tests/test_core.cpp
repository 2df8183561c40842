/******************************************************************************
 * Copyright 2026 The saft authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * @file test_core.cpp Parameter validation, grids, norms, phase factors
 *
 *****************************************************************************/
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "saft/params.hpp"
#include "saft/types.hpp"

#include "oracles.hpp"

using namespace saft;

namespace {
const ParamSet kA{2.0, 3.0, 7.0 / 3.0, 4.0, 0.0, 0.0};
}

TEST_CASE("parameter validation enforces the determinant and b")
{
    CHECK_NOTHROW(validate_params(kA));

    ParamSet bad = kA;
    bad.c = 2.0;
    CHECK_THROWS_AS(validate_params(bad), DeterminantError);

    ParamSet zb = kA;
    zb.b = 0.0;
    CHECK_THROWS_AS(validate_params(zb), ZeroBError);

    // determinant tolerance is tight: a 1e-9 defect must be rejected
    ParamSet off = kA;
    off.d += 1e-9;
    CHECK_THROWS_AS(validate_params(off), DeterminantError);
}

TEST_CASE("presets satisfy the determinant constraint")
{
    CHECK_NOTHROW(validate_params(preset_fourier()));
    CHECK_NOTHROW(validate_params(preset_inverse_fourier()));
    CHECK_NOTHROW(validate_params(preset_frft(0.7)));
    CHECK_NOTHROW(validate_params(preset_fresnel(0.5)));
    CHECK_NOTHROW(validate_params(preset_hyperbolic(0.3)));
    CHECK(preset_fourier().b == 1.0);
    CHECK(preset_frft(0.7).b == Catch::Approx(std::sin(0.7)));
}

TEST_CASE("phase factors match their closed forms")
{
    // eta(1) = exp(i (d + 2(bq - dp)) / (2b)) = exp(2i/3) for these params
    const Complex e1 = eta(kA, 1.0);
    CHECK(e1.real() == Catch::Approx(std::cos(2.0 / 3.0)).margin(1e-15));
    CHECK(e1.imag() == Catch::Approx(std::sin(2.0 / 3.0)).margin(1e-15));

    // rho(1) = exp(i (a + 2p) / (2b)) = exp(i/3)
    const Complex r1 = rho(kA, 1.0);
    CHECK(r1.real() == Catch::Approx(std::cos(1.0 / 3.0)).margin(1e-15));
    CHECK(r1.imag() == Catch::Approx(std::sin(1.0 / 3.0)).margin(1e-15));

    CHECK(rho(kA, 0.0) == Complex{1.0, 0.0});
    CHECK(eta(kA, 0.0) == Complex{1.0, 0.0});

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const double w = testutil::uniform(rng, -30.0, 30.0);
        CHECK(std::abs(eta(kA, w)) == Catch::Approx(1.0).margin(1e-14));
        CHECK(std::abs(rho(kA, w)) == Catch::Approx(1.0).margin(1e-14));
    }
}

TEST_CASE("spectral half width is |b| pi")
{
    CHECK(spectral_half_width(kA) == Catch::Approx(3.0 * pi));
    CHECK(spectral_half_width(preset_fourier()) == Catch::Approx(pi));
}

TEST_CASE("uniform grid accessors")
{
    const UniformGrid g{-1.0, 0.25, 9};
    CHECK(g.point(0) == -1.0);
    CHECK(g.point(8) == Catch::Approx(1.0));
    CHECK(g.back() == Catch::Approx(1.0));
    CHECK(g.span() == Catch::Approx(2.25)); // count * step

    CHECK_THROWS_AS(validate_grid(UniformGrid{0.0, 0.0, 4}, 1), GridError);
    CHECK_THROWS_AS(validate_grid(UniformGrid{0.0, 0.1, 1}, 2), GridError);
}

TEST_CASE("grid_index finds aligned points and rejects the rest")
{
    const UniformGrid g{-2.0, 0.5, 9};
    REQUIRE(grid_index(g, -2.0).has_value());
    CHECK(*grid_index(g, -2.0) == 0);
    REQUIRE(grid_index(g, 1.5).has_value());
    CHECK(*grid_index(g, 1.5) == 7);
    CHECK_FALSE(grid_index(g, 1.72).has_value());
    CHECK_FALSE(grid_index(g, 2.5).has_value()); // outside
    // rounding-level perturbations still resolve
    CHECK(grid_index(g, 1.5 + 1e-13).has_value());
}

TEST_CASE("norms and inner products use the grid step")
{
    Signal f;
    f.grid = UniformGrid{0.0, 0.5, 4};
    f.values = {Complex{1, 0}, Complex{0, 2}, Complex{1, 1}, Complex{0, 0}};

    CHECK(l2_norm(f) == Catch::Approx(std::sqrt(0.5 * (1 + 4 + 2))));
    CHECK(l1_norm(f) ==
          Catch::Approx(0.5 * (1 + 2 + std::sqrt(2.0))));
    CHECK(sup_norm(f) == Catch::Approx(2.0));

    const Complex ip = inner_product(f, f);
    CHECK(ip.real() == Catch::Approx(l2_norm(f) * l2_norm(f)));
    CHECK(ip.imag() == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("signal validation checks value count")
{
    Signal f;
    f.grid = UniformGrid{0.0, 0.1, 5};
    f.values.resize(4);
    CHECK_THROWS_AS(validate_signal(f), GridError);
}

TEST_CASE("library errors derive from the common base")
{
    CHECK_THROWS_AS(
        []() { throw DeterminantError("x"); }(), Error);
    CHECK_THROWS_AS(
        []() { throw NotReconstructibleError("x"); }(), Error);
    CHECK_THROWS_AS(
        []() { throw IoError("x"); }(), Error);
}

TEST_CASE("max_abs_diff")
{
    const std::vector<Complex> u{{1, 0}, {0, 1}};
    const std::vector<Complex> v{{1, 0}, {0, 1.5}};
    CHECK(max_abs_diff(u, v) == Catch::Approx(0.5));
}
