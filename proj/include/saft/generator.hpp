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
 * @file generator.hpp Shift-invariant-space generators
 *
 *****************************************************************************/
#ifndef SAFT_GENERATOR_HPP
#define SAFT_GENERATOR_HPP

#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "saft/errors.hpp"
#include "saft/params.hpp"
#include "saft/types.hpp"

namespace saft {

/// sin(pi t)/(pi t), continuous at 0.
inline double sinc(double t)
{
    const double x = pi * t;
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

/// Pointwise decay envelope |phi(x)| <= m1 / |x|^(1/2 + eps),
/// |phi'(x)| <= m2 / |x|^(1/2 + eps); used to pick truncation ranges.
struct DecayInfo {
    double m1 = 1.0;
    double m2 = 1.0;
    double eps = 0.5;
};

enum class GeneratorKind { chirped_sinc, bspline2, tabulated };

/**
 * @brief Generator of an A-shift-invariant space.
 *
 * Analytic kinds:
 *  - chirped_sinc: psi(t) = exp(-i a t^2 / (2b)) sinc(t); evaluation needs
 *    the parameter set, so all accessors take one.
 *  - bspline2: the triangular second-order B-spline, supported on [0, 2]
 *    (value t, then 2 - t), or on [-1, 1] (value 1 - |t|) when centered.
 *
 * Tabulated generators carry samples on a uniform grid; off-grid values use
 * 4-point (cubic) interpolation with the usual O(step^4 |phi''''|) error,
 * and zero outside the grid.
 */
struct Generator {
    GeneratorKind kind = GeneratorKind::chirped_sinc;
    bool centered = false;           // bspline2 only
    Signal samples;                  // tabulated only
    std::optional<DecayInfo> decay;

    static Generator chirped_sinc()
    {
        Generator g;
        g.kind = GeneratorKind::chirped_sinc;
        g.decay = DecayInfo{1.0, 4.0, 0.5};
        return g;
    }

    static Generator bspline2(bool centered = false)
    {
        Generator g;
        g.kind = GeneratorKind::bspline2;
        g.centered = centered;
        return g;
    }

    static Generator tabulated(Signal s, std::optional<DecayInfo> decay = std::nullopt)
    {
        validate_signal(s, 2);
        Generator g;
        g.kind = GeneratorKind::tabulated;
        g.samples = std::move(s);
        g.decay = decay;
        return g;
    }
};

/// Compact support of the generator, when it has one.
inline std::optional<std::pair<double, double>> generator_support(const Generator& g)
{
    switch (g.kind) {
    case GeneratorKind::chirped_sinc:
        return std::nullopt;
    case GeneratorKind::bspline2:
        return g.centered ? std::make_pair(-1.0, 1.0) : std::make_pair(0.0, 2.0);
    case GeneratorKind::tabulated:
        return std::make_pair(g.samples.grid.start, g.samples.grid.back());
    }
    return std::nullopt;
}

/// Knots between smooth pieces, for piecewise quadrature.
inline std::vector<double> generator_breakpoints(const Generator& g)
{
    if (g.kind == GeneratorKind::bspline2)
        return g.centered ? std::vector<double>{-1.0, 0.0, 1.0}
                          : std::vector<double>{0.0, 1.0, 2.0};
    if (auto s = generator_support(g)) return {s->first, s->second};
    return {};
}

namespace detail {

/// 4-point Lagrange interpolation of tabulated samples; zero off the grid.
inline Complex interp_cubic(const Signal& f, double x)
{
    const UniformGrid& g = f.grid;
    const double u = (x - g.start) / g.step;
    if (u < -1e-9 || u > static_cast<double>(g.count - 1) + 1e-9)
        return Complex(0.0, 0.0);
    if (g.count < 4) {
        // too short for cubic; snap to nearest sample
        const std::size_t j = static_cast<std::size_t>(
            std::min(std::max(std::round(u), 0.0), static_cast<double>(g.count - 1)));
        return f.values[j];
    }
    double base = std::floor(u);
    long i1 = static_cast<long>(base);
    if (i1 < 1) i1 = 1;
    if (i1 > static_cast<long>(g.count) - 3) i1 = static_cast<long>(g.count) - 3;
    const double s = u - static_cast<double>(i1);
    const Complex f0 = f.values[static_cast<std::size_t>(i1 - 1)];
    const Complex f1 = f.values[static_cast<std::size_t>(i1)];
    const Complex f2 = f.values[static_cast<std::size_t>(i1 + 1)];
    const Complex f3 = f.values[static_cast<std::size_t>(i1 + 2)];
    const double sm1 = s + 1.0, s0 = s, s1 = s - 1.0, s2 = s - 2.0;
    const double w0 = -s0 * s1 * s2 / 6.0;
    const double w1 = sm1 * s1 * s2 / 2.0;
    const double w2 = -sm1 * s0 * s2 / 2.0;
    const double w3 = sm1 * s0 * s1 / 6.0;
    return w0 * f0 + w1 * f1 + w2 * f2 + w3 * f3;
}

} // namespace detail

/// Pointwise value phi(t).
inline Complex generator_value(const ParamSet& A, const Generator& g, double t)
{
    switch (g.kind) {
    case GeneratorKind::chirped_sinc:
        return unit_phase(-A.a * t * t / (2.0 * A.b)) * sinc(t);
    case GeneratorKind::bspline2: {
        const double u = g.centered ? t + 1.0 : t;
        if (u <= 0.0 || u >= 2.0) return Complex(0.0, 0.0);
        return Complex(u <= 1.0 ? u : 2.0 - u, 0.0);
    }
    case GeneratorKind::tabulated:
        return detail::interp_cubic(g.samples, t);
    }
    return Complex(0.0, 0.0);
}

/**
 * @brief Integer samples phi(n) for |n| <= N, omitting exact-support zeros.
 *
 * These drive the discrete symbol sum_n phi(n) rho_A(n) e^{-i n w / b}.
 * chirped_sinc and bspline2 have exactly one nonzero integer sample.
 */
inline std::map<long, Complex> integer_samples(const ParamSet& A,
                                               const Generator& g, long N)
{
    std::map<long, Complex> out;
    switch (g.kind) {
    case GeneratorKind::chirped_sinc:
        out[0] = Complex(1.0, 0.0);
        return out;
    case GeneratorKind::bspline2:
        out[g.centered ? 0 : 1] = Complex(1.0, 0.0);
        return out;
    case GeneratorKind::tabulated: {
        for (long n = -N; n <= N; ++n) {
            const Complex v = generator_value(A, g, static_cast<double>(n));
            if (std::abs(v) > 0.0) out[n] = v;
        }
        return out;
    }
    }
    return out;
}

} // namespace saft

#endif // SAFT_GENERATOR_HPP
