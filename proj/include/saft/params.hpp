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
 * @file params.hpp Six-parameter transform sets and their chirp factors
 *
 *****************************************************************************/
#ifndef SAFT_PARAMS_HPP
#define SAFT_PARAMS_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "saft/errors.hpp"
#include "saft/types.hpp"

namespace saft {

inline constexpr double pi = std::numbers::pi_v<double>;

/**
 * @brief Parameter set A = {(a, b; c, d), (p, q)} of the offset linear
 *        canonical transform.
 *
 * Invariants: ad - bc = 1 (to 1e-12) and |b| > 1e-12. All parameters real.
 * Construct via validate_params() or one of the presets; aggregate
 * initialization is available for already-validated literals.
 */
struct ParamSet {
    double a = 0.0;
    double b = 1.0;
    double c = -1.0;
    double d = 0.0;
    double p = 0.0;
    double q = 0.0;
};

inline constexpr double det_tolerance = 1e-12;
inline constexpr double zero_b_tolerance = 1e-12;

/**
 * @brief Validate a raw parameter tuple.
 *
 * @throws DeterminantError if |ad - bc - 1| > 1e-12
 * @throws ZeroBError       if |b| <= 1e-12 (the b = 0 ray is a pure chirp
 *                          multiplication and is out of scope)
 */
inline ParamSet validate_params(double a, double b, double c, double d,
                                double p = 0.0, double q = 0.0)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
        !std::isfinite(d) || !std::isfinite(p) || !std::isfinite(q))
        throw DeterminantError("parameters must be finite");
    if (std::abs(b) <= zero_b_tolerance)
        throw ZeroBError("|b| <= 1e-12: degenerate (chirp-multiplication) ray");
    if (std::abs(a * d - b * c - 1.0) > det_tolerance)
        throw DeterminantError("ad - bc must equal 1 to 1e-12, got " +
                               std::to_string(a * d - b * c));
    return ParamSet{a, b, c, d, p, q};
}

inline ParamSet validate_params(const ParamSet& A)
{
    return validate_params(A.a, A.b, A.c, A.d, A.p, A.q);
}

/**
 * @brief Frequency-domain chirp factor
 *        eta_A(w) = exp(i (d w^2 + 2 (bq - dp) w) / (2b)).
 */
inline Complex eta(const ParamSet& A, double w)
{
    return unit_phase((A.d * w * w + 2.0 * (A.b * A.q - A.d * A.p) * w) / (2.0 * A.b));
}

/**
 * @brief Time-domain chirp factor rho_A(t) = exp(i (a t^2 + 2 p t) / (2b)).
 */
inline Complex rho(const ParamSet& A, double t)
{
    return unit_phase((A.a * t * t + 2.0 * A.p * t) / (2.0 * A.b));
}

/// Half-width |b|*pi of the fundamental frequency cell I = [-|b|pi, |b|pi].
inline double spectral_half_width(const ParamSet& A)
{
    return std::abs(A.b) * pi;
}

// ---------------------------------------------------------------- presets --

inline ParamSet preset_fourier()
{
    return validate_params(0.0, 1.0, -1.0, 0.0);
}

inline ParamSet preset_inverse_fourier()
{
    return validate_params(0.0, -1.0, 1.0, 0.0);
}

/**
 * @brief Fractional-Fourier preset (cos t, sin t; -sin t, cos t).
 *
 * The angle is reduced modulo 2pi; multiples of pi make b = sin(theta)
 * vanish and are rejected.
 */
inline ParamSet preset_frft(double theta)
{
    double t = std::fmod(theta, 2.0 * pi);
    if (t < 0.0) t += 2.0 * pi;
    double s = std::sin(t);
    if (std::abs(s) <= zero_b_tolerance)
        throw ZeroBError("fractional angle is a multiple of pi");
    return validate_params(std::cos(t), s, -s, std::cos(t));
}

/// Fresnel preset (1, lambda; 0, 1) with lambda != 0.
inline ParamSet preset_fresnel(double lambda)
{
    if (std::abs(lambda) <= zero_b_tolerance)
        throw ZeroBError("fresnel parameter must be nonzero");
    return validate_params(1.0, lambda, 0.0, 1.0);
}

/// Hyperbolic preset (cosh t, sinh t; sinh t, cosh t) with t != 0.
inline ParamSet preset_hyperbolic(double theta)
{
    double s = std::sinh(theta);
    if (std::abs(s) <= zero_b_tolerance)
        throw ZeroBError("hyperbolic angle must be nonzero");
    return validate_params(std::cosh(theta), s, s, std::cosh(theta));
}

} // namespace saft

#endif // SAFT_PARAMS_HPP
