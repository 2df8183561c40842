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
 * @file siv.hpp Shift-invariant space analysis: weight function, frame
 *       classification, Gramian, Bernstein constant, reproducing kernel
 *
 *****************************************************************************/
#ifndef SAFT_SIV_HPP
#define SAFT_SIV_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "saft/detail/parallel.hpp"
#include "saft/generator.hpp"
#include "saft/params.hpp"
#include "saft/quadrature.hpp"
#include "saft/transform.hpp"
#include "saft/types.hpp"

namespace saft {

/**
 * @brief Discrete-time symbol of the generator,
 *        phi_dag(w) = sum_n phi(n) rho_A(n) exp(-i n w / b),
 *        a 2 pi |b| periodic trigonometric polynomial in w.
 *
 * @param N half-width of the integer-sample scan for tabulated generators
 */
inline Complex phi_dagger(const ParamSet& A, const Generator& g, double w,
                          long N = 64)
{
    Complex acc(0.0, 0.0);
    for (const auto& [n, v] : integer_samples(A, g, N)) {
        const double nd = static_cast<double>(n);
        acc += v * rho(A, nd) * unit_phase(-nd * w / A.b);
    }
    return acc;
}

/**
 * @brief Trigonometric polynomial sum_k c_k rho_A(k) exp(-i k w / b); the
 *        expansion basis is orthogonal on [-|b|pi, |b|pi].
 */
struct PeriodicSymbol {
    std::map<long, Complex> coeffs;

    Complex eval(const ParamSet& A, double w) const
    {
        Complex acc(0.0, 0.0);
        for (const auto& [k, c] : coeffs) {
            const double kd = static_cast<double>(k);
            acc += c * rho(A, kd) * unit_phase(-kd * w / A.b);
        }
        return acc;
    }
};

inline PeriodicSymbol phi_dagger_symbol(const ParamSet& A, const Generator& g,
                                        long N = 64)
{
    PeriodicSymbol s;
    for (const auto& [n, v] : integer_samples(A, g, N))
        if (v != Complex(0.0, 0.0)) s.coeffs[n] = v;
    return s;
}

/**
 * @brief Periodized power spectrum
 *        w_phi(w) = sum_{|k|<=K} |F_A phi(w + 2 k b pi)|^2.
 *
 * The tail beyond K decays like the square of the generator's transform, so
 * K = 64 is ample for the built-in generators.
 */
inline double weight_function(const ParamSet& A, const Generator& g, double w,
                              long K = 64)
{
    const double period = 2.0 * A.b * pi;
    double acc = 0.0;
    for (long k = -K; k <= K; ++k)
        acc += std::norm(generator_saft(A, g, w + static_cast<double>(k) * period));
    return acc;
}

inline std::vector<double> weight_function_grid(const ParamSet& A,
                                                const Generator& g,
                                                const UniformGrid& grid,
                                                long K = 64)
{
    validate_grid(grid, 1);
    std::vector<double> out(grid.count);
    detail::parallel_for(grid.count, [&](std::size_t j) {
        out[j] = weight_function(A, g, grid.point(j), K);
    });
    return out;
}

enum class SystemVerdict { orthonormal, riesz, frame, degenerate };

inline const char* to_string(SystemVerdict v)
{
    switch (v) {
    case SystemVerdict::orthonormal: return "orthonormal";
    case SystemVerdict::riesz: return "riesz";
    case SystemVerdict::frame: return "frame";
    default: return "degenerate";
    }
}

/**
 * @brief Result of classifying the twisted integer-translate system of a
 *        generator.
 *
 * m and M are the sharp frame bounds 2 pi |b| * (min, max) of the weight
 * function over the essential support mask; e_mask marks grid cells where
 * w exceeds tol * max(w). The grid is the midpoint discretization of
 * [-|b|pi, |b|pi] the verdict was decided on.
 */
struct SystemClassification {
    SystemVerdict verdict = SystemVerdict::degenerate;
    double m = 0.0;
    double M = 0.0;
    double w_min = 0.0;
    double w_max = 0.0;
    std::vector<std::uint8_t> e_mask;
    UniformGrid grid;
};

inline SystemClassification classify_system(const ParamSet& A, const Generator& g,
                                            std::size_t resolution = 2048,
                                            long K = 64, double tol = 1e-8)
{
    if (resolution < 8) throw GridError("classification needs at least 8 cells");
    const double half = spectral_half_width(A);
    const double dw = 2.0 * half / static_cast<double>(resolution);
    SystemClassification r;
    r.grid = UniformGrid{-half + 0.5 * dw, dw, resolution};

    const std::vector<double> w = weight_function_grid(A, g, r.grid, K);
    r.w_max = *std::max_element(w.begin(), w.end());

    r.e_mask.assign(resolution, 0);
    if (r.w_max <= 0.0) return r;

    const double cut = tol * r.w_max;
    std::size_t covered = 0;
    double wmin_mask = r.w_max;
    for (std::size_t j = 0; j < resolution; ++j) {
        if (w[j] > cut) {
            r.e_mask[j] = 1;
            ++covered;
            wmin_mask = std::min(wmin_mask, w[j]);
        }
    }
    if (covered == 0) return r;

    r.w_min = wmin_mask;
    const double scale = 2.0 * pi * std::abs(A.b);
    r.m = scale * r.w_min;
    r.M = scale * r.w_max;

    const double unit = 1.0 / scale;
    bool all_unit = true;
    for (std::size_t j = 0; j < resolution; ++j)
        if (std::abs(w[j] - unit) > tol) { all_unit = false; break; }

    if (all_unit)
        r.verdict = SystemVerdict::orthonormal;
    else if (covered == resolution)
        r.verdict = SystemVerdict::riesz;
    else
        r.verdict = SystemVerdict::frame;
    return r;
}

namespace detail {

// Adaptive integration split at the knots where the integrand loses
// smoothness (generator breakpoints of both factors).
template <class F>
Complex integrate_piecewise(F f, double lo, double hi, std::vector<double> knots,
                            double tol)
{
    knots.push_back(lo);
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());
    Complex acc(0.0, 0.0);
    double prev = lo;
    for (double x : knots) {
        if (x <= prev + 1e-14 || x > hi + 1e-14) continue;
        const double cur = std::min(x, hi);
        acc += integrate_adaptive(f, prev, cur, tol);
        prev = cur;
    }
    return acc;
}

} // namespace detail

/**
 * @brief Inner product gamma(m) = <T_m phi, phi> of a twisted translate with
 *        the generator.
 *
 * Compactly supported generators integrate in the time domain over the
 * support overlap; the chirped sinc has no integrable time tail, so its
 * inner product is taken in the transform domain where its spectrum is a
 * box.
 */
inline Complex translate_inner(const ParamSet& A, const Generator& g, long m,
                               double tol = 1e-12)
{
    const double md = static_cast<double>(m);
    const auto support = generator_support(g);
    if (support) {
        const double lo = support->first + std::max(md, 0.0);
        const double hi = support->second + std::min(md, 0.0);
        if (!(hi > lo)) return Complex(0.0, 0.0);
        std::vector<double> knots = generator_breakpoints(g);
        for (double bp : generator_breakpoints(g)) knots.push_back(bp + md);
        const double coef = -A.a / A.b * md;
        auto f = [&](double t) {
            return unit_phase(coef * (t - md)) * generator_value(A, g, t - md) *
                   std::conj(generator_value(A, g, t));
        };
        return detail::integrate_piecewise(f, lo, hi, std::move(knots), tol);
    }
    // spectral route: <T_m phi, phi> = rho(m) Int e^{-i m w / b} |F phi(w)|^2 dw.
    // The Gauss panels keep every node strictly inside the band, where the
    // spectrum is smooth; an endpoint rule would sample the boundary
    // half-values and stall on that jump.
    const double half = spectral_half_width(A);
    auto u = [&](double w) { return std::norm(generator_saft(A, g, w)); };
    return rho(A, md) *
           integrate_oscillatory(u, A.p - half, A.p + half, 0.0, -md / A.b);
}

/**
 * @brief Gramian G(j,k) = <T_k phi, T_j phi> for j,k in [kmin, kmax].
 *
 * Entries reduce to G(j,k) = exp(i (a/b) j (k-j)) gamma(k-j); each gamma is
 * evaluated by adaptive quadrature once per offset.
 */
inline Eigen::MatrixXcd gramian(const ParamSet& A, const Generator& g, long kmin,
                                long kmax, double tol = 1e-12)
{
    if (kmax < kmin) throw GridError("gramian index range is empty");
    const long n = kmax - kmin + 1;

    long reach = n - 1;
    if (const auto support = generator_support(g)) {
        const double len = support->second - support->first;
        reach = std::min<long>(reach, static_cast<long>(std::ceil(len)));
    }

    std::vector<Complex> gam(static_cast<std::size_t>(reach) + 1);
    for (long m = 0; m <= reach; ++m) gam[static_cast<std::size_t>(m)] =
        translate_inner(A, g, m, tol);

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(n, n);
    const double ab = A.a / A.b;
    for (long j = 0; j < n; ++j) {
        for (long k = j; k < n; ++k) {
            const long off = k - j;
            if (off > reach) break;
            const double jd = static_cast<double>(j + kmin);
            const Complex v =
                unit_phase(ab * jd * static_cast<double>(off)) *
                gam[static_cast<std::size_t>(off)];
            G(j, k) = v;
            G(k, j) = std::conj(v);
        }
    }
    return G;
}

/**
 * @brief Closed-form tridiagonal Gramian row for the second-order spline on
 *        [0, 2] with unit peak.
 *
 * upper is the entry at (j, j+1) and lower the entry at (j+1, j). Two
 * diagonal conventions circulate for this system: the unit-normalized
 * tabulated value 1 and the straight inner product <phi, phi> = 2/3; both
 * are carried so callers can report either. The off-diagonal is exact for
 * the unnormalized Gramian.
 */
struct SplineGramianClosed {
    Complex upper;
    Complex lower;
    double diag_tabulated = 1.0;
    double diag_integral = 2.0 / 3.0;
};

inline SplineGramianClosed gramian_bspline_closed(const ParamSet& A, long j)
{
    validate_params(A);
    const double theta = A.a / A.b;
    Complex base; // Int_0^1 u (1-u) e^{-i theta u} du
    if (std::abs(theta) < 0.5) {
        // series in theta; the closed form cancels catastrophically near 0
        Complex term(1.0, 0.0);
        base = Complex(0.0, 0.0);
        for (int nn = 0; nn < 24; ++nn) {
            base += term / static_cast<double>((nn + 2) * (nn + 3));
            term *= Complex(0.0, -theta) / static_cast<double>(nn + 1);
            if (std::abs(term) < 1e-20) break;
        }
    } else {
        const Complex i2ba(0.0, 2.0 * A.b / A.a);
        base = (1.0 / (theta * theta)) *
               (unit_phase(-theta) * (i2ba - 1.0) - (1.0 + i2ba));
    }
    SplineGramianClosed r;
    r.upper = unit_phase(theta * static_cast<double>(j)) * base;
    r.lower = std::conj(r.upper);
    return r;
}

/**
 * @brief Squared lower and upper bounds (inf^2, sup^2) of |phi_dag| over one
 *        period, the operator bounds of the integer-sampling map on the
 *        space generated by phi.
 */
inline std::pair<double, double> u_operator_bounds(const ParamSet& A,
                                                   const Generator& g,
                                                   std::size_t resolution = 2048,
                                                   long N = 64)
{
    if (resolution < 8) throw GridError("bounds need at least 8 cells");
    const double half = spectral_half_width(A);
    const double dw = 2.0 * half / static_cast<double>(resolution);
    const PeriodicSymbol sym = phi_dagger_symbol(A, g, N);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t jj = 0; jj < resolution; ++jj) {
        const double v = std::abs(sym.eval(A, -half + (0.5 + static_cast<double>(jj)) * dw));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo * lo, hi * hi};
}

/**
 * @brief Sharp constant M in the derivative bound ||f' + i (a/b) t f|| <=
 *        sqrt(M) ||f|| over the space generated by phi:
 *        M = sup_w  sum_k ((w + 2 k b pi - p)/b)^2 |F phi(w + 2 k b pi)|^2
 *                 / sum_k |F phi(w + 2 k b pi)|^2.
 *
 * The sup is taken on an endpoint-inclusive grid of [-|b|pi, |b|pi]; for
 * band-limited generators the extreme ratio sits exactly at the band edge.
 * Grid points where the denominator vanishes are skipped.
 */
inline double bernstein_constant(const ParamSet& A, const Generator& g,
                                 std::size_t resolution = 1025, long K = 64)
{
    if (resolution < 9) throw GridError("bernstein grid needs at least 9 points");
    const double half = spectral_half_width(A);
    const double dw = 2.0 * half / static_cast<double>(resolution - 1);
    const double period = 2.0 * A.b * pi;

    std::vector<double> ratio(resolution, -1.0);
    detail::parallel_for(resolution, [&](std::size_t jj) {
        const double w = -half + static_cast<double>(jj) * dw;
        double num = 0.0, den = 0.0;
        for (long k = -K; k <= K; ++k) {
            const double wk = w + static_cast<double>(k) * period;
            const double s = std::norm(generator_saft(A, g, wk));
            const double freq = (wk - A.p) / A.b;
            num += freq * freq * s;
            den += s;
        }
        if (den > 1e-14) ratio[jj] = num / den;
    });

    double best = -1.0;
    for (double r : ratio) best = std::max(best, r);
    if (best < 0.0)
        throw DegenerateError("transform of the generator vanishes on the whole period");
    return best;
}

/// Minimum of |F_A f| over a frequency grid.
inline double min_abs_saft(const ParamSet& A, const Signal& f,
                           const UniformGrid& omega)
{
    const Spectrum F = saft_fast(A, f, omega);
    double lo = std::numeric_limits<double>::infinity();
    for (const Complex& v : F.values) lo = std::min(lo, std::abs(v));
    return lo;
}

/**
 * @brief Reproducing kernel of the space generated by phi,
 *        K(x, y) = sum_k conj(T_k phi(x)) (T_k S^{-1} phi)(y),
 *        with S^{-1} phi expanded as sum_j d_j T_j phi and the d_j taken
 *        from the reciprocal weight symbol 1 / (2 pi |b| w_phi).
 *
 * Construction verifies that the truncated coefficient resummation
 * reproduces the symbol between the extraction nodes; failure means the
 * weight is too rough for the requested truncation.
 */
class RkhsKernel {
public:
    RkhsKernel(const ParamSet& A, const Generator& g,
               std::size_t resolution = 1024, long coeff_cutoff = 48,
               long translate_cutoff = 48)
        : A_(A), gen_(g), kmax_(translate_cutoff)
    {
        validate_params(A);
        const SystemClassification cls = classify_system(A, g, resolution);
        if (cls.verdict == SystemVerdict::degenerate)
            throw DegenerateError("system carries no frame, kernel undefined");

        const std::vector<double> w = weight_function_grid(A, g, cls.grid);
        const double cut = 1e-8 * cls.w_max;
        const double scale = 2.0 * pi * std::abs(A_.b);
        std::vector<double> sigma(w.size(), 0.0);
        for (std::size_t jj = 0; jj < w.size(); ++jj)
            if (w[jj] > cut) sigma[jj] = 1.0 / (scale * w[jj]);

        // d_k = (1/(2 pi |b|)) conj(rho(k)) Int_I sigma(w) e^{i k w / b} dw
        const double dw = cls.grid.step;
        for (long k = -coeff_cutoff; k <= coeff_cutoff; ++k) {
            const double kd = static_cast<double>(k);
            Complex acc(0.0, 0.0);
            for (std::size_t jj = 0; jj < sigma.size(); ++jj)
                acc += sigma[jj] * unit_phase(kd * cls.grid.point(jj) / A_.b);
            const Complex d = std::conj(rho(A_, kd)) * acc * dw / scale;
            if (std::abs(d) > 1e-15) d_[k] = d;
        }

        // resummation must give the symbol back away from extraction nodes
        PeriodicSymbol s;
        s.coeffs = d_;
        double worst = 0.0, ref = 0.0;
        for (std::size_t jj = 0; jj < sigma.size(); jj += 7) {
            const double wp = cls.grid.point(jj) + dw / 3.0;
            const double direct =
                1.0 / (scale * std::max(weight_function(A_, gen_, wp), cut));
            worst = std::max(worst, std::abs(s.eval(A_, wp) - direct));
            ref = std::max(ref, std::abs(direct));
        }
        if (cls.verdict != SystemVerdict::frame && worst > 1e-6 * ref)
            throw DegenerateError("reciprocal weight is not resolved by the truncation");
    }

    /// S^{-1} phi evaluated at u.
    Complex inverse_frame_generator(double u) const
    {
        Complex acc(0.0, 0.0);
        const double ab = A_.a / A_.b;
        for (const auto& [j, d] : d_) {
            const double jd = static_cast<double>(j);
            acc += d * unit_phase(-ab * jd * (u - jd)) *
                   generator_value(A_, gen_, u - jd);
        }
        return acc;
    }

    Complex operator()(double x, double y) const
    {
        const double ab = A_.a / A_.b;
        const long c = static_cast<long>(std::floor(x));
        Complex acc(0.0, 0.0);
        for (long k = c - kmax_; k <= c + kmax_; ++k) {
            const double kd = static_cast<double>(k);
            const Complex tx = unit_phase(-ab * kd * (x - kd)) *
                               generator_value(A_, gen_, x - kd);
            if (tx == Complex(0.0, 0.0)) continue;
            acc += std::conj(tx) * unit_phase(-ab * kd * (y - kd)) *
                   inverse_frame_generator(y - kd);
        }
        return acc;
    }

    const std::map<long, Complex>& coefficients() const { return d_; }

private:
    ParamSet A_;
    Generator gen_;
    std::map<long, Complex> d_;
    long kmax_;
};

inline Complex rkhs_kernel(const ParamSet& A, const Generator& g, double x,
                           double y, std::size_t resolution = 1024)
{
    return RkhsKernel(A, g, resolution)(x, y);
}

} // namespace saft

#endif // SAFT_SIV_HPP
