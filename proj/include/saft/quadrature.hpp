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
 * @file quadrature.hpp Adaptive Simpson and oscillation-aware Gauss rules
 *
 *****************************************************************************/
#ifndef SAFT_QUADRATURE_HPP
#define SAFT_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "saft/errors.hpp"
#include "saft/types.hpp"

namespace saft {

namespace detail {

template <class F>
Complex simpson_step(F& f, double lo, double hi, Complex flo, Complex fmid,
                     Complex fhi, Complex whole, double tol, int depth)
{
    const double mid = 0.5 * (lo + hi);
    const double lq = 0.5 * (lo + mid);
    const double rq = 0.5 * (mid + hi);
    const Complex flq = f(lq);
    const Complex frq = f(rq);
    const double h = hi - lo;
    const Complex left = (h / 12.0) * (flo + 4.0 * flq + fmid);
    const Complex right = (h / 12.0) * (fmid + 4.0 * frq + fhi);
    const Complex both = left + right;
    if (std::abs(both - whole) <= 15.0 * tol || h < 1e-14)
        return both + (both - whole) / 15.0;
    if (depth <= 0)
        throw QuadratureError("adaptive refinement exhausted before tolerance");
    return simpson_step(f, lo, mid, flo, flq, fmid, left, 0.5 * tol, depth - 1) +
           simpson_step(f, mid, hi, fmid, frq, fhi, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/**
 * @brief Adaptive Simpson integration of a complex-valued integrand.
 *
 * @param tol    absolute tolerance on the integral
 * @param depth  maximum recursion depth before QuadratureError
 */
template <class F>
Complex integrate_adaptive(F f, double lo, double hi, double tol = 1e-12,
                           int depth = 48)
{
    if (!(hi > lo)) return Complex(0.0, 0.0);
    const double mid = 0.5 * (lo + hi);
    const Complex flo = f(lo), fmid = f(mid), fhi = f(hi);
    const Complex whole = ((hi - lo) / 6.0) * (flo + 4.0 * fmid + fhi);
    return detail::simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol, depth);
}

namespace detail {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).
inline constexpr std::array<double, 8> gl16_x = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr std::array<double, 8> gl16_w = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

} // namespace detail

/**
 * @brief Integrate u(t) * exp(i (alpha t^2 + beta t)) over [lo, hi].
 *
 * Composite 16-point Gauss-Legendre with the panel count tied to the local
 * phase speed |theta'| <= |beta| + 2|alpha| max|t|, so each panel sees well
 * under one oscillation and the rule converges to machine precision on
 * smooth u. Use one call per smooth piece of u.
 */
template <class U>
Complex integrate_oscillatory(U u, double lo, double hi, double alpha, double beta)
{
    if (!(hi > lo)) return Complex(0.0, 0.0);
    const double tmax = std::max(std::abs(lo), std::abs(hi));
    const double speed = std::abs(beta) + 2.0 * std::abs(alpha) * tmax;
    const double len = hi - lo;
    const std::size_t panels =
        4 + static_cast<std::size_t>(std::ceil(speed * len / (2.0 * pi)));
    const double h = len / static_cast<double>(panels);

    Complex total(0.0, 0.0);
    for (std::size_t p = 0; p < panels; ++p) {
        const double a = lo + static_cast<double>(p) * h;
        const double ctr = a + 0.5 * h;
        const double hw = 0.5 * h;
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < detail::gl16_x.size(); ++i) {
            const double dx = hw * detail::gl16_x[i];
            const double t1 = ctr + dx;
            const double t2 = ctr - dx;
            acc += detail::gl16_w[i] *
                   (u(t1) * unit_phase(alpha * t1 * t1 + beta * t1) +
                    u(t2) * unit_phase(alpha * t2 * t2 + beta * t2));
        }
        total += hw * acc;
    }
    return total;
}

} // namespace saft

#endif // SAFT_QUADRATURE_HPP
