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
 * @file sampling.hpp Sampling and reconstruction: cardinal interpolation,
 *       dual generator, stability bounds, local least-squares recovery
 *
 *****************************************************************************/
#ifndef SAFT_SAMPLING_HPP
#define SAFT_SAMPLING_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saft/detail/parallel.hpp"
#include "saft/generator.hpp"
#include "saft/siv.hpp"
#include "saft/transform.hpp"
#include "saft/types.hpp"

namespace saft {

namespace detail {

// Verifies |phi_dag| is bounded away from zero on the period. A zero of the
// symbol makes the grid minimum collapse under refinement, a positive
// minimum stabilizes; both signals are checked.
inline std::pair<double, double> symbol_range_checked(const ParamSet& A,
                                                      const PeriodicSymbol& sym,
                                                      std::size_t resolution)
{
    const double half = spectral_half_width(A);
    auto scan = [&](std::size_t n) {
        const double dw = 2.0 * half / static_cast<double>(n);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = std::abs(sym.eval(A, -half + (0.5 + static_cast<double>(j)) * dw));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::pair<double, double>{lo, hi};
    };
    const auto [lo1, hi1] = scan(resolution);
    const auto [lo2, hi2] = scan(2 * resolution);
    const double hi = std::max(hi1, hi2);
    if (hi <= 0.0)
        throw NotReconstructibleError("generator has no nonzero integer samples");
    if (std::min(lo1, lo2) < 1e-8 * hi || lo2 < 0.6 * lo1)
        throw NotReconstructibleError(
            "integer-sample symbol of the generator vanishes on the period");
    return {std::min(lo1, lo2), hi};
}

// Coefficients of a 2 pi |b| periodic function in the basis
// rho(k) e^{-i k w / b}, extracted by the midpoint rectangle rule, which is
// spectrally accurate for smooth periodic integrands.
template <class F>
std::map<long, Complex> periodic_expansion(const ParamSet& A, F f,
                                           std::size_t resolution, long cutoff)
{
    const double half = spectral_half_width(A);
    const double dw = 2.0 * half / static_cast<double>(resolution);
    std::vector<double> wp(resolution);
    std::vector<Complex> fv(resolution);
    for (std::size_t j = 0; j < resolution; ++j) {
        wp[j] = -half + (0.5 + static_cast<double>(j)) * dw;
        fv[j] = f(wp[j]);
    }
    const double scale = dw / (2.0 * pi * std::abs(A.b));
    std::map<long, Complex> out;
    for (long k = -cutoff; k <= cutoff; ++k) {
        const double kd = static_cast<double>(k);
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < resolution; ++j)
            acc += fv[j] * unit_phase(kd * wp[j] / A.b);
        const Complex c = std::conj(rho(A, kd)) * acc * scale;
        if (std::abs(c) > 1e-15) out[k] = c;
    }
    return out;
}

} // namespace detail

/**
 * @brief Transform of the cardinal interpolant, F_A S = F_A phi / phi_dag,
 *        sampled on the given frequency grid.
 *
 * The reciprocal symbol must be square-integrable over one period; this is
 * checked by requiring the grid integral of |phi_dag|^{-2} to stay finite
 * and stable when the grid is refined.
 *
 * @throws NotReconstructibleError when the square-integrability check fails
 *         or |phi_dag| drops below 1e-10 at a grid point where F_A phi is
 *         not negligible
 */
inline Spectrum reconstruction_filter(const ParamSet& A, const Generator& g,
                                      const UniformGrid& omega,
                                      std::size_t resolution = 2048, long N = 64)
{
    validate_params(A);
    validate_grid(omega, 1);
    const PeriodicSymbol sym = phi_dagger_symbol(A, g, N);

    const double half = spectral_half_width(A);
    auto recip_energy = [&](std::size_t n) {
        const double dw = 2.0 * half / static_cast<double>(n);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v =
                std::abs(sym.eval(A, -half + (0.5 + static_cast<double>(j)) * dw));
            if (v <= 0.0) return std::numeric_limits<double>::infinity();
            acc += dw / (v * v);
        }
        return acc;
    };
    const double e1 = recip_energy(resolution);
    const double e2 = recip_energy(2 * resolution);
    if (!std::isfinite(e1) || !std::isfinite(e2) || e2 > 1.6 * e1)
        throw NotReconstructibleError(
            "reciprocal of the integer-sample symbol is not square-integrable");

    Spectrum out;
    out.grid = omega;
    out.values.resize(omega.count);
    std::vector<double> mag(omega.count);
    detail::parallel_for(omega.count, [&](std::size_t j) {
        mag[j] = std::abs(generator_saft(A, g, omega.point(j)));
    });
    const double fmax = *std::max_element(mag.begin(), mag.end());
    detail::parallel_for(omega.count, [&](std::size_t j) {
        const double w = omega.point(j);
        const Complex dag = sym.eval(A, w);
        if (std::abs(dag) < 1e-10 && mag[j] > 1e-8 * fmax)
            throw NotReconstructibleError(
                "integer-sample symbol vanishes where the generator spectrum does not");
        out.values[j] = std::abs(dag) < 1e-300
                            ? Complex(0.0, 0.0)
                            : generator_saft(A, g, w) / dag;
    });
    return out;
}

/**
 * @brief Cardinal interpolant S of the space generated by phi: S lies in the
 *        space, S(n) = delta_{n 0}, and uniform recovery is
 *        f(t) = sum_n f(n) (T_n S)(t).
 *
 * S is expanded as sum_k c_k T_k phi with the c_k the expansion coefficients
 * of 1 / phi_dag; construction validates that the truncated expansion
 * actually inverts the symbol.
 */
class CardinalInterpolant {
public:
    CardinalInterpolant(const ParamSet& A, const Generator& g,
                        std::size_t resolution = 4096, long cutoff = 96,
                        long N = 64)
        : A_(A), gen_(g)
    {
        validate_params(A);
        const PeriodicSymbol sym = phi_dagger_symbol(A, g, N);
        detail::symbol_range_checked(A_, sym, resolution);

        c_ = detail::periodic_expansion(
            A_, [&](double w) { return 1.0 / sym.eval(A_, w); }, resolution,
            cutoff);

        PeriodicSymbol recip;
        recip.coeffs = c_;
        const double half = spectral_half_width(A_);
        double worst = 0.0;
        for (int j = 0; j < 257; ++j) {
            const double w = -half + 2.0 * half * (static_cast<double>(j) + 0.37) / 257.0;
            worst = std::max(worst,
                             std::abs(recip.eval(A_, w) * sym.eval(A_, w) - 1.0));
        }
        if (worst > 1e-8)
            throw NotReconstructibleError(
                "reciprocal symbol is not resolved by the coefficient cutoff");
    }

    /// S(t)
    Complex operator()(double t) const
    {
        const double ab = A_.a / A_.b;
        Complex acc(0.0, 0.0);
        for (const auto& [k, c] : c_) {
            const double kd = static_cast<double>(k);
            const Complex v = generator_value(A_, gen_, t - kd);
            if (v == Complex(0.0, 0.0)) continue;
            acc += c * unit_phase(-ab * kd * (t - kd)) * v;
        }
        return acc;
    }

    const std::map<long, Complex>& coefficients() const { return c_; }
    const ParamSet& params() const { return A_; }
    const Generator& generator() const { return gen_; }

private:
    ParamSet A_;
    Generator gen_;
    std::map<long, Complex> c_;
};

namespace detail {

inline std::vector<double> integer_points_checked(const SampleSet& samples,
                                                  const char* what)
{
    if (samples.points.size() != samples.values.size())
        throw GridError("sample points and values differ in length");
    std::vector<double> ns(samples.points.size());
    for (std::size_t i = 0; i < samples.points.size(); ++i) {
        const double n = std::round(samples.points[i]);
        if (std::abs(samples.points[i] - n) > 1e-9 * std::max(1.0, std::abs(n)))
            throw AlignmentError(std::string(what) +
                                 " expects integer sample points");
        ns[i] = n;
    }
    return ns;
}

} // namespace detail

/**
 * @brief Uniform recovery f(t) = sum_n y_n (T_n S)(t) from integer samples
 *        (x_n, y_n), with the interpolant S evaluated analytically.
 *
 * @throws AlignmentError when a sample point is not an integer
 */
inline Signal reconstruct_uniform(const CardinalInterpolant& S,
                                  const SampleSet& samples,
                                  const UniformGrid& tgrid)
{
    validate_grid(tgrid, 1);
    const ParamSet& A = S.params();
    const double ab = A.a / A.b;
    const std::vector<double> ns =
        detail::integer_points_checked(samples, "uniform recovery");

    Signal out;
    out.grid = tgrid;
    out.values.assign(tgrid.count, Complex(0.0, 0.0));
    detail::parallel_for(tgrid.count, [&](std::size_t j) {
        const double t = tgrid.point(j);
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < ns.size(); ++i)
            acc += samples.values[i] * unit_phase(-ab * ns[i] * (t - ns[i])) *
                   S(t - ns[i]);
        out.values[j] = acc;
    });
    return out;
}

/**
 * @brief Uniform recovery from a sampled interpolant: every t - n that lies
 *        inside S's window must land exactly on S's grid (same step as the
 *        output grid, integer-aligned origin); points outside the window
 *        count as zero.
 *
 * @throws AlignmentError on non-integer sample points or misaligned grids
 */
inline Signal reconstruct_uniform(const ParamSet& A, const Signal& S,
                                  const SampleSet& samples,
                                  const UniformGrid& tgrid)
{
    validate_params(A);
    validate_signal(S, 1);
    validate_grid(tgrid, 1);
    const double ab = A.a / A.b;
    const std::vector<double> ns =
        detail::integer_points_checked(samples, "uniform recovery");

    const double lo = S.grid.start - 0.5 * S.grid.step;
    const double hi = S.grid.back() + 0.5 * S.grid.step;
    Signal out;
    out.grid = tgrid;
    out.values.assign(tgrid.count, Complex(0.0, 0.0));
    detail::parallel_for(tgrid.count, [&](std::size_t j) {
        const double t = tgrid.point(j);
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double x = t - ns[i];
            if (x < lo || x > hi) continue;
            const auto idx = grid_index(S.grid, x, 1e-7);
            if (!idx)
                throw AlignmentError("interpolant grid is not aligned with the output grid");
            acc += samples.values[i] * unit_phase(-ab * ns[i] * (t - ns[i])) *
                   S.values[*idx];
        }
        out.values[j] = acc;
    });
    return out;
}

/**
 * @brief Band-limited recovery from integer samples at a single point,
 *        f(t) = sum_k y_k exp(i a (k^2 - t^2) / (2 b)) sinc(t - k),
 *        valid on the space generated by the chirped sinc.
 */
inline Complex shannon_saft(const ParamSet& A, const SampleSet& samples, double t)
{
    validate_params(A);
    const double c = A.a / (2.0 * A.b);
    const std::vector<double> ns =
        detail::integer_points_checked(samples, "band-limited recovery");
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < ns.size(); ++i)
        acc += samples.values[i] * unit_phase(c * (ns[i] * ns[i] - t * t)) *
               sinc(t - ns[i]);
    return acc;
}

/// shannon_saft evaluated over a grid.
inline Signal shannon_saft_grid(const ParamSet& A, const SampleSet& samples,
                                const UniformGrid& tgrid)
{
    validate_params(A);
    validate_grid(tgrid, 1);
    const double c = A.a / (2.0 * A.b);
    const std::vector<double> ns =
        detail::integer_points_checked(samples, "band-limited recovery");

    Signal out;
    out.grid = tgrid;
    out.values.assign(tgrid.count, Complex(0.0, 0.0));
    detail::parallel_for(tgrid.count, [&](std::size_t j) {
        const double t = tgrid.point(j);
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < ns.size(); ++i)
            acc += samples.values[i] * unit_phase(c * (ns[i] * ns[i] - t * t)) *
                   sinc(t - ns[i]);
        out.values[j] = acc;
    });
    return out;
}

/**
 * @brief Dual generator for sample recovery,
 *        F_A psi~ = conj(phi_dag) / w_phi * F_A phi on the essential support
 *        of w_phi and zero elsewhere.
 *
 * The constant kappa relating this dual to the sampling-recovery identity is
 * not hard-coded: it is measured at build time as
 * kappa = <phi, T_k* psi~> / phi(k*) at the integer k* where |phi| peaks,
 * and recorded as `normalization` (the weight normalization and the
 * transform prefactor interact, and the measurement settles the product).
 * The rescaled dual psi~ / kappa satisfies <f, T_k (psi~/kappa)> = f(k) on
 * the generated space; its expansion coefficients are `recovery_coeffs`.
 */
struct DualGeneratorResult {
    Spectrum spectrum;
    std::map<long, Complex> coeffs;          // psi~ = sum_k coeff_k T_k phi
    std::map<long, Complex> recovery_coeffs; // psi~ / kappa
    Complex normalization;                   // kappa, ~ 2 pi |b| for unit peak
    double normalization_deviation = 0.0;    // |kappa - 2 pi |b||
};

inline DualGeneratorResult dual_generator(const ParamSet& A, const Generator& g,
                                          const UniformGrid& omega,
                                          std::size_t resolution = 2048,
                                          long K = 64, double tol = 1e-8)
{
    validate_params(A);
    validate_grid(omega, 1);
    const double half = spectral_half_width(A);
    const double dw = 2.0 * half / static_cast<double>(resolution);

    std::vector<double> wgrid(resolution), wv(resolution);
    double w_max = 0.0;
    for (std::size_t j = 0; j < resolution; ++j) {
        wgrid[j] = -half + (0.5 + static_cast<double>(j)) * dw;
        wv[j] = weight_function(A, g, wgrid[j], K);
        w_max = std::max(w_max, wv[j]);
    }
    if (w_max <= 0.0)
        throw ConditionError("weight function vanishes identically");
    const double cut = tol * w_max;

    const PeriodicSymbol sym = phi_dagger_symbol(A, g, K);
    double dag_lo = std::numeric_limits<double>::infinity(), dag_hi = 0.0;
    double dag_off = 0.0;
    for (std::size_t j = 0; j < resolution; ++j) {
        const double v = std::abs(sym.eval(A, wgrid[j]));
        if (wv[j] > cut) {
            dag_lo = std::min(dag_lo, v);
            dag_hi = std::max(dag_hi, v);
        } else {
            dag_off = std::max(dag_off, v);
        }
    }
    if (dag_hi <= 0.0 || dag_lo < 1e-8 * dag_hi)
        throw ConditionError(
            "integer-sample symbol is not bounded below on the support of the weight");
    if (dag_off > 1e-8 * dag_hi)
        throw ConditionError(
            "integer-sample symbol does not vanish off the support of the weight");

    auto sigma = [&](double w) -> Complex {
        const double wf = weight_function(A, g, w, K);
        if (wf <= cut) return Complex(0.0, 0.0);
        return std::conj(sym.eval(A, w)) / wf;
    };

    DualGeneratorResult r;
    r.spectrum.grid = omega;
    r.spectrum.values.resize(omega.count);
    detail::parallel_for(omega.count, [&](std::size_t j) {
        const double w = omega.point(j);
        r.spectrum.values[j] = sigma(w) * generator_saft(A, g, w);
    });

    r.coeffs = detail::periodic_expansion(A, sigma, resolution, K);

    long kstar = 0;
    double best = -1.0;
    Complex peak(0.0, 0.0);
    for (const auto& [n, v] : integer_samples(A, g, K)) {
        if (std::abs(v) > best) {
            best = std::abs(v);
            kstar = n;
            peak = v;
        }
    }
    const double ab = A.a / A.b;
    Complex measured(0.0, 0.0); // <phi, T_k* psi~>
    for (const auto& [j, d] : r.coeffs) {
        const double jd = static_cast<double>(j);
        measured += std::conj(d * unit_phase(-ab * static_cast<double>(kstar) * jd)) *
                    std::conj(translate_inner(A, g, kstar + j));
    }
    r.normalization = measured / peak;
    r.normalization_deviation =
        std::abs(r.normalization - 2.0 * pi * std::abs(A.b));
    for (const auto& [j, d] : r.coeffs) r.recovery_coeffs[j] = d / r.normalization;
    return r;
}

/**
 * @brief Squared extreme singular values (s_min^2, s_max^2) of the synthesis
 *        matrix U(i, k) = (T_k phi)(x_i) over the given sample points and
 *        translate range.
 */
inline std::pair<double, double> stability_bounds(const ParamSet& A,
                                                  const Generator& g,
                                                  const std::vector<double>& points,
                                                  long kmin, long kmax)
{
    validate_params(A);
    if (points.empty()) return {0.0, 0.0};
    if (kmax < kmin) throw GridError("translate range is empty");
    const long m = kmax - kmin + 1;
    const double ab = A.a / A.b;

    Eigen::MatrixXcd U(static_cast<Eigen::Index>(points.size()), m);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (long k = 0; k < m; ++k) {
            const double kd = static_cast<double>(k + kmin);
            U(static_cast<Eigen::Index>(i), k) =
                unit_phase(-ab * kd * (points[i] - kd)) *
                generator_value(A, g, points[i] - kd);
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(U);
    const auto& s = svd.singularValues();
    const double smax = s(0);
    const double smin = s(s.size() - 1);
    return {smin * smin, smax * smax};
}

/// Options for local least-squares recovery on an interval.
struct LocalOptions {
    bool enforce_count = true; // require #X >= 2M + (hi - lo) - 1
    long rank_slack = 0;       // tolerated rank deficit vs structural columns
    double svd_cutoff = 1e-12; // relative singular value threshold
    double dense_step = 0.01;  // grid step for ground-truth comparison
    std::function<Complex(double)> ground_truth; // optional reference
};

/// Outcome of a local least-squares recovery.
struct SamplingReport {
    std::vector<Complex> coefficients;
    long k_min = 0;
    double residual_max = 0.0;
    double residual_l2 = 0.0;
    std::vector<double> singular_values;
    std::size_t rank = 0;
    std::size_t structural_columns = 0;
    std::size_t sample_count = 0;
    long M = 0;
    double interval_lo = 0.0;
    double interval_hi = 0.0;
    std::optional<double> truth_error_max;
    std::optional<double> truth_error_l2;
};

/**
 * @brief Recovers the translate coefficients of a function in the space
 *        generated by phi from samples on [lo, hi], using the translates
 *        k in [lo - M + 1, hi + M - 1] and a pseudoinverse solve.
 *
 * @throws RankError when the sample count bound #X >= 2M + (hi-lo) - 1 is
 *         violated (with enforce_count) or when the numerical rank falls
 *         short of the structurally visible columns by more than rank_slack
 */
inline SamplingReport local_reconstruct(const ParamSet& A, const Generator& g,
                                        const SampleSet& X, double lo, double hi,
                                        long M, const LocalOptions& opts = {})
{
    validate_params(A);
    if (!(hi > lo)) throw GridError("interval is empty");
    if (M < 1) throw GridError("margin M must be positive");
    if (X.points.empty() || X.points.size() != X.values.size())
        throw GridError("sample set is empty or inconsistent");
    for (std::size_t i = 0; i < X.points.size(); ++i) {
        if (X.points[i] < lo - 1e-9 || X.points[i] > hi + 1e-9)
            throw GridError("sample point outside the reconstruction interval");
        if (i > 0 && !(X.points[i] > X.points[i - 1]))
            throw GridError("sample points must be strictly increasing");
    }

    const double need = 2.0 * static_cast<double>(M) + (hi - lo) - 1.0;
    if (opts.enforce_count && static_cast<double>(X.points.size()) < need - 1e-9)
        throw RankError("sample count violates #X >= 2M + (hi - lo) - 1");

    const long klo = static_cast<long>(std::ceil(lo - static_cast<double>(M) + 1.0 - 1e-9));
    const long khi = static_cast<long>(std::floor(hi + static_cast<double>(M) - 1.0 + 1e-9));
    const long m = khi - klo + 1;
    const std::size_t n = X.points.size();
    const double ab = A.a / A.b;

    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), m);
    Eigen::VectorXcd y(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        y(static_cast<Eigen::Index>(i)) = X.values[i];
        for (long k = 0; k < m; ++k) {
            const double kd = static_cast<double>(k + klo);
            U(static_cast<Eigen::Index>(i), k) =
                unit_phase(-ab * kd * (X.points[i] - kd)) *
                generator_value(A, g, X.points[i] - kd);
        }
    }

    std::size_t structural = 0;
    for (long k = 0; k < m; ++k)
        if (U.col(k).cwiseAbs().maxCoeff() > 0.0) ++structural;

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(U, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double smax = s.size() > 0 ? s(0) : 0.0;
    const double cutoff = opts.svd_cutoff * smax;

    SamplingReport rep;
    rep.k_min = klo;
    rep.sample_count = n;
    rep.M = M;
    rep.interval_lo = lo;
    rep.interval_hi = hi;
    rep.structural_columns = structural;
    rep.singular_values.assign(s.data(), s.data() + s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cutoff) ++rep.rank;

    if (rep.rank + static_cast<std::size_t>(std::max<long>(opts.rank_slack, 0)) <
        structural)
        throw RankError("synthesis matrix is rank deficient on the visible translates");

    Eigen::VectorXcd pc = svd.matrixU().adjoint() * y;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        pc(i) = s(i) > cutoff ? pc(i) / s(i) : Complex(0.0, 0.0);
    Eigen::VectorXcd c = svd.matrixV() * pc;

    rep.coefficients.assign(c.data(), c.data() + c.size());

    const Eigen::VectorXcd resid = U * c - y;
    rep.residual_max = resid.cwiseAbs().maxCoeff();
    rep.residual_l2 = resid.norm();

    if (opts.ground_truth) {
        const double step = opts.dense_step;
        const std::size_t cnt =
            static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        double emax = 0.0, e2 = 0.0;
        for (std::size_t j = 0; j < cnt; ++j) {
            const double t = lo + static_cast<double>(j) * step;
            Complex acc(0.0, 0.0);
            for (long k = 0; k < m; ++k) {
                const double kd = static_cast<double>(k + klo);
                const Complex v = generator_value(A, g, t - kd);
                if (v == Complex(0.0, 0.0)) continue;
                acc += rep.coefficients[static_cast<std::size_t>(k)] *
                       unit_phase(-ab * kd * (t - kd)) * v;
            }
            const double e = std::abs(acc - opts.ground_truth(t));
            emax = std::max(emax, e);
            e2 += e * e * step;
        }
        rep.truth_error_max = emax;
        rep.truth_error_l2 = std::sqrt(e2);
    }
    return rep;
}

} // namespace saft

#endif // SAFT_SAMPLING_HPP
