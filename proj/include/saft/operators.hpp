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
 * @file operators.hpp Twisted translation, chirp modulation, convolution
 *
 *****************************************************************************/
#ifndef SAFT_OPERATORS_HPP
#define SAFT_OPERATORS_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "saft/detail/fft.hpp"
#include "saft/params.hpp"
#include "saft/transform.hpp"
#include "saft/types.hpp"

namespace saft {

/**
 * @brief Twisted translation T_x f(t) = exp(-i (a/b) x (t - x)) f(t - x).
 *
 * x must be an integer multiple of the grid step (relative tolerance 1e-9);
 * values are re-indexed on the same grid and phase-multiplied exactly, with
 * zeros shifted in at the trailing edge. No interpolation ever happens, so
 * repeated translations compose without drift.
 *
 * @throws AlignmentError when x is off the step lattice
 */
inline Signal a_translate(const ParamSet& A, const Signal& f, double x)
{
    validate_signal(f);
    const double u = x / f.grid.step;
    const double r = std::round(u);
    if (std::abs(u - r) > 1e-9 * std::max(1.0, std::abs(u)))
        throw AlignmentError("translation is not a grid-step multiple");
    const long m = static_cast<long>(r);

    Signal out;
    out.grid = f.grid;
    out.values.assign(f.grid.count, Complex(0.0, 0.0));
    const double coef = -A.a / A.b * x;
    for (long j = 0; j < static_cast<long>(f.grid.count); ++j) {
        const long src = j - m;
        if (src < 0 || src >= static_cast<long>(f.grid.count)) continue;
        const double t = f.grid.point(static_cast<std::size_t>(j));
        out.values[static_cast<std::size_t>(j)] =
            unit_phase(coef * (t - x)) * f.values[static_cast<std::size_t>(src)];
    }
    return out;
}

/// Chirp modulation C_s f(t) = exp(i s t^2 / 2) f(t).
inline Signal chirp_mod(double s, const Signal& f)
{
    validate_signal(f);
    Signal out;
    out.grid = f.grid;
    out.values.resize(f.grid.count);
    for (std::size_t j = 0; j < f.grid.count; ++j) {
        const double t = f.grid.point(j);
        out.values[j] = unit_phase(0.5 * s * t * t) * f.values[j];
    }
    return out;
}

/**
 * @brief Twisted convolution of two signals sharing one step.
 *
 * Realized through the chirp factorization: multiply both inputs by rho_A,
 * convolve classically with the (2 pi)^{-1/2} * dt rectangle-rule weight,
 * then strip the chirp and scale by |b|^{-1/2}. The output grid starts at
 * the sum of the input starts and has N + M - 1 points.
 */
inline Signal a_convolve(const ParamSet& A, const Signal& g, const Signal& f)
{
    validate_signal(g, 1);
    validate_signal(f, 1);
    if (std::abs(g.grid.step - f.grid.step) > 1e-12 * f.grid.step)
        throw GridError("convolution requires equal grid steps");

    std::vector<Complex> u(g.grid.count), v(f.grid.count);
    for (std::size_t j = 0; j < g.grid.count; ++j)
        u[j] = g.values[j] * rho(A, g.grid.point(j));
    for (std::size_t j = 0; j < f.grid.count; ++j)
        v[j] = f.values[j] * rho(A, f.grid.point(j));

    const std::vector<Complex> s = detail::linear_convolve(u, v);
    const double pref = f.grid.step / std::sqrt(2.0 * pi * std::abs(A.b));

    Signal out;
    out.grid.start = g.grid.start + f.grid.start;
    out.grid.step = f.grid.step;
    out.grid.count = s.size();
    out.values.resize(s.size());
    for (std::size_t m = 0; m < s.size(); ++m)
        out.values[m] = pref * std::conj(rho(A, out.grid.point(m))) * s[m];
    return out;
}

/// Point mass at location x with complex weight w.
struct DiscreteMeasure {
    struct Atom {
        double location;
        Complex weight;
    };
    std::vector<Atom> atoms;
};

/**
 * @brief Convolution of a discrete measure with a signal:
 *        (2 pi |b|)^{-1/2} sum_i w_i T_{x_i} f on f's own grid.
 *
 * Atom locations must be grid-step multiples (AlignmentError otherwise).
 */
inline Signal a_convolve_measure(const ParamSet& A, const DiscreteMeasure& mu,
                                 const Signal& f)
{
    validate_signal(f);
    Signal out;
    out.grid = f.grid;
    out.values.assign(f.grid.count, Complex(0.0, 0.0));
    const double pref = 1.0 / std::sqrt(2.0 * pi * std::abs(A.b));
    for (const DiscreteMeasure::Atom& atom : mu.atoms) {
        const Signal shifted = a_translate(A, f, atom.location);
        for (std::size_t j = 0; j < f.grid.count; ++j)
            out.values[j] += pref * atom.weight * shifted.values[j];
    }
    return out;
}

/// Frequency-domain multiplier symbol.
using MultiplierSymbol = std::function<Complex(double)>;

/**
 * @brief Apply a frequency multiplier: transform, multiply, invert.
 *
 * The working window defaults to the full resolvable band of f's grid
 * (default_omega_window); callers with wider spectra pass their own. f must
 * be band-concentrated inside the window for the round trip to be faithful.
 */
inline Signal multiplier_apply(const ParamSet& A, const MultiplierSymbol& symbol,
                               const Signal& f,
                               const UniformGrid* omega = nullptr)
{
    validate_signal(f, 2);
    const UniformGrid w = omega ? *omega : default_omega_window(A, f.grid);
    Spectrum F = saft_fast(A, f, w);
    for (std::size_t k = 0; k < w.count; ++k)
        F.values[k] *= symbol(w.point(k));
    return isaft(A, F, f.grid);
}

using SignalOp = std::function<Signal(const Signal&)>;

/**
 * @brief Largest relative commutation defect
 *        max ||op(T_s f) - T_s(op f)||_2 / ||f||_2
 * over the given shifts and probe signals. Multipliers commute with every
 * twisted translation, so a near-zero defect is the operational test for
 * "op is a multiplier".
 */
inline double wendel_commutation_defect(const ParamSet& A, const SignalOp& op,
                                        const std::vector<double>& shifts,
                                        const std::vector<Signal>& probes)
{
    double worst = 0.0;
    for (const Signal& f : probes) {
        const double nf = l2_norm(f);
        if (nf == 0.0) continue;
        const Signal opf = op(f);
        for (double s : shifts) {
            const Signal lhs = op(a_translate(A, f, s));
            const Signal rhs = a_translate(A, opf, s);
            double acc = 0.0;
            for (std::size_t j = 0; j < f.grid.count; ++j)
                acc += std::norm(lhs.values[j] - rhs.values[j]);
            worst = std::max(worst, std::sqrt(f.grid.step * acc) / nf);
        }
    }
    return worst;
}

/**
 * @brief Result of the lattice summation identity check.
 *
 * lhs(t) = sqrt(2 pi |b|) sum_{|k|<=K} T_{-2 k b pi} f(t) exp(-2 i a b k^2 pi^2)
 * rhs(t) = sum_{|n|<=N} conj(eta_A)(n+p) F_A f(n+p) exp(-i (a t^2 - 2 n t)/(2b))
 *
 * defect is the max absolute deviation over the t list. The warning flag is
 * raised when the last included term on either side still exceeds 1e-10.
 */
struct PoissonResult {
    std::vector<Complex> lhs;
    std::vector<Complex> rhs;
    double defect = 0.0;
    bool convergence_warning = false;
    double lhs_last_term = 0.0;
    double rhs_last_term = 0.0;
};

/**
 * @brief Evaluate both sides of the lattice summation identity.
 *
 * f's samples supply the left side, so every t + 2 k b pi that falls inside
 * the window must land on f's grid (choose step = 2 b pi / integer); points
 * outside the window count as zero. The right side evaluates the forward
 * transform at the unit lattice n + p by rectangle rule.
 *
 * @throws AlignmentError when a required lattice point is inside the window
 *                        but off the grid
 */
inline PoissonResult poisson_check(const ParamSet& A, const Signal& f,
                                   const std::vector<double>& tpoints,
                                   long K, long N)
{
    validate_signal(f, 2);
    const double absb = std::abs(A.b);
    const double period = 2.0 * A.b * pi;
    const double root = std::sqrt(2.0 * pi * absb);

    PoissonResult res;
    res.lhs.assign(tpoints.size(), Complex(0.0, 0.0));
    res.rhs.assign(tpoints.size(), Complex(0.0, 0.0));

    auto sample = [&](double x) -> Complex {
        const double lo = f.grid.start - 0.5 * f.grid.step;
        const double hi = f.grid.back() + 0.5 * f.grid.step;
        if (x < lo || x > hi) return Complex(0.0, 0.0);
        if (auto idx = grid_index(f.grid, x, 1e-7))
            return f.values[*idx];
        throw AlignmentError("lattice point falls off the sample grid");
    };

    // left side: twisted translates over the 2 b pi lattice
    for (std::size_t i = 0; i < tpoints.size(); ++i) {
        const double t = tpoints[i];
        Complex acc(0.0, 0.0);
        for (long k = -K; k <= K; ++k) {
            const double kd = static_cast<double>(k);
            const Complex value = sample(t + kd * period);
            if (value == Complex(0.0, 0.0)) continue;
            const double theta = 2.0 * A.a * kd * pi * t +
                                 2.0 * A.a * A.b * kd * kd * pi * pi;
            const Complex term = root * unit_phase(theta) * value;
            acc += term;
            if (std::abs(k) == K)
                res.lhs_last_term = std::max(res.lhs_last_term, std::abs(term));
        }
        res.lhs[i] = acc;
    }

    // right side: transform samples on the unit lattice shifted by p
    UniformGrid lattice;
    lattice.start = A.p - static_cast<double>(N);
    lattice.step = 1.0;
    lattice.count = static_cast<std::size_t>(2 * N + 1);
    const Spectrum F = saft_quadrature(A, f, lattice);

    const double inv2b = 1.0 / (2.0 * A.b);
    for (std::size_t i = 0; i < tpoints.size(); ++i) {
        const double t = tpoints[i];
        Complex acc(0.0, 0.0);
        for (long n = -N; n <= N; ++n) {
            const double nd = static_cast<double>(n);
            const double w = nd + A.p;
            const Complex term = std::conj(eta(A, w)) *
                                 F.values[static_cast<std::size_t>(n + N)] *
                                 unit_phase(-(A.a * t * t - 2.0 * nd * t) * inv2b);
            acc += term;
            if (std::abs(n) == N)
                res.rhs_last_term = std::max(res.rhs_last_term, std::abs(term));
        }
        res.rhs[i] = acc;
    }

    for (std::size_t i = 0; i < tpoints.size(); ++i)
        res.defect = std::max(res.defect, std::abs(res.lhs[i] - res.rhs[i]));
    res.convergence_warning =
        res.lhs_last_term > 1e-10 || res.rhs_last_term > 1e-10;
    return res;
}

} // namespace saft

#endif // SAFT_OPERATORS_HPP
