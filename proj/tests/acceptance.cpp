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
 * @file acceptance.cpp One binary that checks every release gate and prints
 *       a PASS/FAIL line per gate
 *
 *****************************************************************************/
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "saft/saft.hpp"

using namespace saft;

namespace {

const ParamSet kA{2.0, 3.0, 7.0 / 3.0, 4.0, 0.0, 0.0};
const ParamSet kFourier{0.0, 1.0, -1.0, 0.0, 0.0, 0.0};
const ParamSet kShifted{1.0, 0.5, 4.0, 3.0, 0.4, -0.7};

int g_failures = 0;

void report(int id, bool pass, const std::string& label,
            const std::string& detail)
{
    if (!pass) ++g_failures;
    std::printf("[%2d] %s  %s: %s\n", id, pass ? "PASS" : "FAIL",
                label.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

/// sum_k c_k (T_k phi)(t) with contiguous c indexed from k_min.
Complex translate_sum(const ParamSet& A, const Generator& g,
                      const std::vector<Complex>& c, long k_min, double t)
{
    const double ab = A.a / A.b;
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double kd = static_cast<double>(k_min + static_cast<long>(i));
        const Complex v = generator_value(A, g, t - kd);
        if (v == Complex(0.0, 0.0)) continue;
        acc += c[i] * unit_phase(-ab * kd * (t - kd)) * v;
    }
    return acc;
}

Signal gaussian_bump(const UniformGrid& grid, double center, double width,
                     double alpha, double beta)
{
    Signal f;
    f.grid = grid;
    f.values.resize(grid.count);
    for (std::size_t j = 0; j < grid.count; ++j) {
        const double t = grid.point(j);
        const double u = (t - center) / width;
        f.values[j] = std::exp(-0.5 * u * u) *
                      unit_phase(alpha * t + 0.5 * beta * t * t);
    }
    return f;
}

// ---------------------------------------------------------------------------
// 1. Local reconstruction sweep: 61 random samples on [-10,10], margins
//    M in {10,50,250,400}, per-row error <= 1e-9, total <= 60 s.

void criterion_benchmark()
{
    const Generator gen = Generator::bspline2(true);
    const double lo = -10.0, hi = 10.0;
    const long kc = 10;
    std::mt19937_64 rng(20260818);

    SampleSet X;
    X.points.resize(61);
    for (double& x : X.points) x = uniform(rng, lo, hi);
    std::sort(X.points.begin(), X.points.end());

    std::vector<Complex> coef(2 * kc + 1);
    for (Complex& c : coef)
        c = Complex(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);

    const auto truth = [&](double t) {
        return translate_sum(kA, gen, coef, -kc, t);
    };
    X.values.resize(X.points.size());
    for (std::size_t j = 0; j < X.points.size(); ++j)
        X.values[j] = truth(X.points[j]);

    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool ok = true;
    std::string rows;
    for (long M : {10L, 50L, 250L, 400L}) {
        LocalOptions opts;
        opts.enforce_count = false;
        opts.ground_truth = truth;
        const SamplingReport r = local_reconstruct(kA, gen, X, lo, hi, M, opts);
        const double err = r.truth_error_max.value_or(1.0);
        worst = std::max(worst, err);
        ok = ok && err <= 1e-9;
        rows += " M=" + std::to_string(M) + ":" + num(err);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    ok = ok && secs <= 60.0;
    report(1, ok, "local reconstruction sweep",
           "max row error " + num(worst) + " (tol 1e-9)," + rows + ", " +
               num(secs) + " s (limit 60)");
}

// ---------------------------------------------------------------------------
// 2. Energy conservation and inversion: 20 random band-concentrated signals
//    at three parameter sets, |l2 out - l2 in| / l2 in < 1e-4 and round-trip
//    relative l2 error < 1e-6.

void criterion_unitarity()
{
    const UniformGrid grid{-16.0, 1.0 / 64.0, 2049};
    std::mt19937_64 rng(12);
    double worst_u = 0.0, worst_rt = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Signal f =
            gaussian_bump(grid, uniform(rng, -2.0, 2.0), uniform(rng, 0.7, 1.6),
                          uniform(rng, -2.0, 2.0), uniform(rng, -0.6, 0.6));
        const double nf = l2_norm(f);
        for (const ParamSet& A : {kA, kFourier, kShifted}) {
            const UniformGrid wg = default_omega_window(A, grid);
            const Spectrum F = saft_fast(A, f, wg);
            worst_u = std::max(worst_u, std::abs(l2_norm(F) - nf) / nf);

            const Signal back = isaft(A, F, grid);
            double acc = 0.0;
            for (std::size_t j = 0; j < grid.count; ++j)
                acc += std::norm(back.values[j] - f.values[j]);
            worst_rt = std::max(worst_rt, std::sqrt(grid.step * acc) / nf);
        }
    }
    report(2, worst_u < 1e-4 && worst_rt < 1e-6,
           "energy conservation and inversion",
           "unitarity defect " + num(worst_u) + " (tol 1e-4), round trip " +
               num(worst_rt) + " (tol 1e-6)");
}

// ---------------------------------------------------------------------------
// 3. Fast path vs reference sum on the bundled fixtures, max abs < 1e-8.

void criterion_oracle()
{
    const Signal f = read_sampled_csv(std::string(SAFT_FIXTURES_DIR) +
                                      "/gaussian.csv");
    const UniformGrid wg{-4.0, 0.05, 161};
    double worst = 0.0;
    for (const char* name : {"a2b3.json", "a2b3_no_c.json", "fourier.json"}) {
        const LoadedParams lp =
            load_params(std::string(SAFT_FIXTURES_DIR) + "/" + name);
        const Spectrum fast = saft_fast(lp.A, f, wg);
        const Spectrum slow = saft_quadrature(lp.A, f, wg);
        worst = std::max(worst, max_abs_diff(fast, slow));
    }
    report(3, worst < 1e-8, "fast path vs reference sum",
           "max deviation " + num(worst) + " over 3 fixtures (tol 1e-8)");
}

// ---------------------------------------------------------------------------
// 4. Translation algebra: composition, adjoint, character product rule, and
//    spectral covariance, each < 1e-10 on 10 random grid-aligned triples.

void criterion_operators()
{
    const UniformGrid grid{-20.0, 1.0 / 64.0, 2561};
    const UniformGrid wg{-6.0, 0.05, 241};
    const double theta = kA.a / kA.b;
    std::mt19937_64 rng(7);

    double d_comp = 0.0, d_adj = 0.0, d_prod = 0.0, d_cov = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double x = std::round(uniform(rng, -2.0, 2.0) * 64.0) / 64.0;
        const double y = std::round(uniform(rng, -2.0, 2.0) * 64.0) / 64.0;
        const Signal f =
            gaussian_bump(grid, uniform(rng, -2.0, 2.0), uniform(rng, 0.8, 1.5),
                          uniform(rng, -1.0, 1.0), uniform(rng, -0.4, 0.4));
        const Signal g =
            gaussian_bump(grid, uniform(rng, -2.0, 2.0), uniform(rng, 0.8, 1.5),
                          uniform(rng, -1.0, 1.0), uniform(rng, -0.4, 0.4));

        // T_x T_y = e^{-i (a/b) x y} T_{x+y}
        const Signal lhs1 = a_translate(kA, a_translate(kA, f, y), x);
        Signal rhs1 = a_translate(kA, f, x + y);
        for (Complex& v : rhs1.values) v *= unit_phase(-theta * x * y);
        d_comp = std::max(d_comp, max_abs_diff(lhs1, rhs1));

        // <T_x f, g> = <f, e^{-i (a/b) x^2} T_{-x} g>
        const Complex lhs2 = inner_product(a_translate(kA, f, x), g);
        Signal adj = a_translate(kA, g, -x);
        for (Complex& v : adj.values) v *= unit_phase(-theta * x * x);
        d_adj = std::max(d_adj, std::abs(lhs2 - inner_product(f, adj)));

        // character rule: T_x chi_w = conj(chi_w)(x) chi_w on the overlap
        const double w = uniform(rng, -3.0, 3.0);
        Signal chi;
        chi.grid = grid;
        chi.values.resize(grid.count);
        for (std::size_t j = 0; j < grid.count; ++j) {
            const double t = grid.point(j);
            chi.values[j] = std::conj(rho(kA, t)) * unit_phase(w * t / kA.b);
        }
        const Signal tchi = a_translate(kA, chi, x);
        const Complex scale =
            rho(kA, x) * unit_phase(-w * x / kA.b); // conj(chi_w(x))
        const long m = static_cast<long>(std::llround(x * 64.0));
        for (long j = 0; j < static_cast<long>(grid.count); ++j) {
            if (j - m < 0 || j - m >= static_cast<long>(grid.count)) continue;
            d_prod = std::max(
                d_prod, std::abs(tchi.values[static_cast<std::size_t>(j)] -
                                 scale * chi.values[static_cast<std::size_t>(j)]));
        }

        // spectral covariance: F(T_x f)(w) = rho(x) e^{-i x w / b} F f(w)
        const Spectrum lhs4 = saft_fast(kA, a_translate(kA, f, x), wg);
        Spectrum rhs4 = saft_fast(kA, f, wg);
        for (std::size_t k = 0; k < wg.count; ++k)
            rhs4.values[k] *= rho(kA, x) * unit_phase(-x * wg.point(k) / kA.b);
        d_cov = std::max(d_cov, max_abs_diff(lhs4, rhs4));
    }
    const double worst = std::max({d_comp, d_adj, d_prod, d_cov});
    report(4, worst < 1e-10, "translation algebra",
           "composition " + num(d_comp) + ", adjoint " + num(d_adj) +
               ", product rule " + num(d_prod) + ", covariance " + num(d_cov) +
               " (tol 1e-10)");
}

// ---------------------------------------------------------------------------
// 5. Convolution identity: F(f conv g) = conj(eta) F f F g within 1e-6 on 10
//    compactly supported pairs, and commutativity within 1e-10.

void criterion_convolution()
{
    const double dt = 1.0 / 128.0;
    const UniformGrid gf{-3.0, dt, 769};
    const UniformGrid gg{-2.0, dt, 513};
    const UniformGrid wg{-4.0, 0.04, 201};
    std::mt19937_64 rng(9);

    const auto window = [](double t, double half) {
        const double u = t / half;
        const double s = 1.0 - u * u;
        return s > 0.0 ? s * s : 0.0;
    };

    double d_spec = 0.0, d_comm = 0.0;
    for (int i = 0; i < 10; ++i) {
        Signal f, g;
        f.grid = gf;
        g.grid = gg;
        f.values.resize(gf.count);
        g.values.resize(gg.count);
        const Complex a0(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const Complex a1(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const Complex b0(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const Complex b1(uniform(rng, -1, 1), uniform(rng, -1, 1));
        for (std::size_t j = 0; j < gf.count; ++j) {
            const double t = gf.point(j);
            f.values[j] = window(t, 3.0) * (a0 + a1 * unit_phase(2.0 * t));
        }
        for (std::size_t j = 0; j < gg.count; ++j) {
            const double t = gg.point(j);
            g.values[j] = window(t, 2.0) * (b0 + b1 * unit_phase(-1.3 * t));
        }

        const Signal conv = a_convolve(kA, f, g);
        const Spectrum lhs = saft_fast(kA, conv, wg);
        const Spectrum Ff = saft_fast(kA, f, wg);
        const Spectrum Fg = saft_fast(kA, g, wg);
        for (std::size_t k = 0; k < wg.count; ++k) {
            const Complex rhs = std::conj(eta(kA, wg.point(k))) *
                                Ff.values[k] * Fg.values[k];
            d_spec = std::max(d_spec, std::abs(lhs.values[k] - rhs));
        }

        d_comm = std::max(d_comm, max_abs_diff(conv, a_convolve(kA, g, f)));
    }
    report(5, d_spec < 1e-6 && d_comm < 1e-10, "convolution identity",
           "spectral product " + num(d_spec) + " (tol 1e-6), commutativity " +
               num(d_comm) + " (tol 1e-10)");
}

// ---------------------------------------------------------------------------
// 6. Lattice summation identity on a Gaussian at two parameter sets, < 1e-6.

void criterion_poisson()
{
    const auto gaussian_on = [](const UniformGrid& grid) {
        Signal f;
        f.grid = grid;
        f.values.resize(grid.count);
        for (std::size_t j = 0; j < grid.count; ++j) {
            const double t = grid.point(j);
            f.values[j] = std::exp(-0.5 * t * t);
        }
        return f;
    };

    const double step1 = 6.0 * pi / 256.0;
    const Signal f1 = gaussian_on(UniformGrid{-12.0 * pi, step1, 1025});
    const std::vector<double> tp1 = {0.0, 7.0 * step1, -13.0 * step1,
                                     13.0 * step1};
    const PoissonResult r1 = poisson_check(kA, f1, tp1, 3, 25);

    const double step2 = 2.0 * pi / 256.0;
    const Signal f2 = gaussian_on(UniformGrid{-16.0 * pi, step2, 4097});
    const std::vector<double> tp2 = {0.0, 11.0 * step2, -29.0 * step2};
    const PoissonResult r2 = poisson_check(kFourier, f2, tp2, 8, 10);

    const double worst = std::max(r1.defect, r2.defect);
    report(6, worst < 1e-6, "lattice summation identity",
           "defects " + num(r1.defect) + " and " + num(r2.defect) +
               " (tol 1e-6)");
}

// ---------------------------------------------------------------------------
// 7. Time-frequency isometry: defect < 1e-4 at resolution 512 and observed
//    order >= 1 under refinement, on a piecewise-linear probe.

void criterion_zak()
{
    Signal f;
    f.grid = UniformGrid{-8.5, 1.0 / 8192.0, 18 * 8192 + 1};
    f.values.resize(f.grid.count);
    for (std::size_t j = 0; j < f.grid.count; ++j) {
        const double t = f.grid.point(j);
        f.values[j] = (t <= 0.0 || t >= 2.0) ? 0.0 : (t <= 1.0 ? t : 2.0 - t);
    }
    const double d256 = zak_isometry_defect(kA, f, 256, 8);
    const double d512 = zak_isometry_defect(kA, f, 512, 8);
    const double order = std::log2(d256 / d512);
    report(7, d512 < 1e-4 && order >= 1.0, "time-frequency isometry",
           "defect " + num(d512) + " at 512 (tol 1e-4), order " + num(order) +
               " (min 1)");
}

// ---------------------------------------------------------------------------
// 8. Orthonormal generator: weight function flat at 1/(2 pi |b|) within 1e-8
//    on 1024 midpoints, Gramian section equal to the identity within 1e-8.

void criterion_onb()
{
    const Generator sinc = Generator::chirped_sinc();
    const double target = 1.0 / (2.0 * pi * std::abs(kA.b));
    const double half = spectral_half_width(kA);
    const double dw = 2.0 * half / 1024.0;
    double d_w = 0.0;
    for (int j = 0; j < 1024; ++j) {
        const double w = -half + (0.5 + static_cast<double>(j)) * dw;
        d_w = std::max(d_w, std::abs(weight_function(kA, sinc, w, 64) - target));
    }

    const Eigen::MatrixXcd G = gramian(kA, sinc, -4, 4);
    double d_g = 0.0;
    for (Eigen::Index r = 0; r < G.rows(); ++r)
        for (Eigen::Index c = 0; c < G.cols(); ++c)
            d_g = std::max(d_g,
                           std::abs(G(r, c) - (r == c ? 1.0 : 0.0)));

    report(8, d_w < 1e-8 && d_g < 1e-8, "orthonormal generator",
           "weight deviation " + num(d_w) + ", gramian deviation " + num(d_g) +
               " (tol 1e-8)");
}

// ---------------------------------------------------------------------------
// 9. Integer-sample recovery on [-10,10] for both analytic generators,
//    max error <= 1e-9.

double integer_recovery_error(const Generator& gen, long sample_lo,
                              long sample_hi, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Complex> coef(25);
    for (Complex& c : coef)
        c = Complex(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
    const long k_min = -12;

    SampleSet samples;
    for (long n = sample_lo; n <= sample_hi; ++n) {
        samples.points.push_back(static_cast<double>(n));
        samples.values.push_back(
            translate_sum(kA, gen, coef, k_min, static_cast<double>(n)));
    }

    const CardinalInterpolant S(kA, gen);
    const UniformGrid dense{-10.0, 0.05, 401};
    const Signal rec = reconstruct_uniform(S, samples, dense);

    double worst = 0.0;
    for (std::size_t j = 0; j < dense.count; ++j)
        worst = std::max(worst,
                         std::abs(rec.values[j] -
                                  translate_sum(kA, gen, coef, k_min,
                                                dense.point(j))));
    return worst;
}

void criterion_reconstruction()
{
    const double e_sinc =
        integer_recovery_error(Generator::chirped_sinc(), -30, 30, 101);
    const double e_hat =
        integer_recovery_error(Generator::bspline2(false), -14, 16, 102);
    report(9, e_sinc <= 1e-9 && e_hat <= 1e-9, "integer-sample recovery",
           "band-limited " + num(e_sinc) + ", spline " + num(e_hat) +
               " (tol 1e-9)");
}

// ---------------------------------------------------------------------------
// 10. Sampling stability on the integers: finite-section singular value
//     bounds and the symbol bounds both equal (1,1) within 5e-2.

void criterion_stability()
{
    const Generator sinc = Generator::chirped_sinc();
    std::vector<double> pts;
    for (int n = -24; n <= 24; ++n) pts.push_back(static_cast<double>(n));
    const auto [slo, shi] = stability_bounds(kA, sinc, pts, -12, 12);
    const auto [ulo, uhi] = u_operator_bounds(kA, sinc);
    const double worst = std::max({std::abs(slo - 1.0), std::abs(shi - 1.0),
                                   std::abs(ulo - 1.0), std::abs(uhi - 1.0)});
    report(10, worst < 5e-2, "sampling stability on the integers",
           "section bounds (" + num(slo) + ", " + num(shi) +
               "), symbol bounds (" + num(ulo) + ", " + num(uhi) +
               ") vs (1,1) (tol 5e-2)");
}

// ---------------------------------------------------------------------------
// 11. Derivative bound: ||f' + i (a/b) t f|| <= sqrt(M) ||f|| (1 + 1e-3) on
//     20 random translate combinations via finite differences (step 1e-4);
//     the band-limited constant equals pi^2 within 1e-6.

double bernstein_ratio(const Generator& gen, const std::vector<Complex>& coef,
                       long k_min, double lo, double hi, double dt)
{
    const double h = 1e-4;
    const double theta = kA.a / kA.b;
    const std::size_t count = static_cast<std::size_t>((hi - lo) / dt);
    double n2f = 0.0, n2B = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        const double t = lo + (0.5 + static_cast<double>(j)) * dt;
        const Complex fm = translate_sum(kA, gen, coef, k_min, t - h);
        const Complex f0 = translate_sum(kA, gen, coef, k_min, t);
        const Complex fp = translate_sum(kA, gen, coef, k_min, t + h);
        const Complex Bf = (fp - fm) / (2.0 * h) +
                           Complex(0.0, theta * t) * f0;
        n2f += std::norm(f0);
        n2B += std::norm(Bf);
    }
    return std::sqrt(n2B / n2f);
}

void criterion_bernstein()
{
    const Generator sinc = Generator::chirped_sinc();
    const Generator hat = Generator::bspline2(false);
    const double M_sinc = bernstein_constant(kA, sinc);
    const double M_hat = bernstein_constant(kA, hat);
    const double pi2_dev = std::abs(M_sinc - pi * pi);

    std::mt19937_64 rng(31);
    const auto draw = [&](std::size_t n) {
        std::vector<Complex> c(n);
        for (Complex& v : c)
            v = Complex(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
        return c;
    };

    double worst_margin = 0.0; // max ratio / bound over all combinations
    for (int i = 0; i < 12; ++i) {
        const double r = bernstein_ratio(sinc, draw(21), -10, -60.0, 60.0,
                                         1.0 / 32.0);
        worst_margin = std::max(worst_margin, r / std::sqrt(M_sinc));
    }
    for (int i = 0; i < 8; ++i) {
        const double r = bernstein_ratio(hat, draw(15), -8, -10.0, 10.0,
                                         1.0 / 128.0);
        worst_margin = std::max(worst_margin, r / std::sqrt(M_hat));
    }

    report(11, worst_margin <= 1.0 + 1e-3 && pi2_dev < 1e-6,
           "derivative bound",
           "worst ratio/bound " + num(worst_margin) +
               " (limit 1.001), band-limited constant off pi^2 by " +
               num(pi2_dev) + " (tol 1e-6)");
}

// ---------------------------------------------------------------------------
// 12. Multiplier diagnostic: frequency multipliers commute with the twisted
//     translations (< 1e-6); pointwise multiplication by t does not (> 0.1).

void criterion_wendel()
{
    const UniformGrid grid{-16.0, 1.0 / 64.0, 2049};
    std::mt19937_64 rng(51);
    std::vector<Signal> probes;
    for (int i = 0; i < 3; ++i)
        probes.push_back(gaussian_bump(grid, uniform(rng, -1.5, 1.5),
                                       uniform(rng, 0.8, 1.4),
                                       uniform(rng, -1.0, 1.0), 0.0));
    const std::vector<double> shifts = {0.5, 1.25, -2.0};

    const MultiplierSymbol symbol = [](double w) {
        return Complex(std::exp(-0.05 * w * w), 0.0) *
               (Complex(1.0, 0.0) + Complex(0.0, 0.2) * std::sin(w / 3.0));
    };
    const SignalOp mult = [&](const Signal& f) {
        return multiplier_apply(kA, symbol, f);
    };
    const double d_mult = wendel_commutation_defect(kA, mult, shifts, probes);

    const SignalOp not_mult = [](const Signal& f) {
        Signal out = f;
        for (std::size_t j = 0; j < f.grid.count; ++j)
            out.values[j] *= f.grid.point(j);
        return out;
    };
    const double d_ctr = wendel_commutation_defect(kA, not_mult, shifts, probes);

    report(12, d_mult < 1e-6 && d_ctr > 0.1, "multiplier diagnostic",
           "multiplier defect " + num(d_mult) +
               " (tol 1e-6), counterexample " + num(d_ctr) + " (min 0.1)");
}

} // namespace

int main()
{
    criterion_benchmark();
    criterion_unitarity();
    criterion_oracle();
    criterion_operators();
    criterion_convolution();
    criterion_poisson();
    criterion_zak();
    criterion_onb();
    criterion_reconstruction();
    criterion_stability();
    criterion_bernstein();
    criterion_wendel();

    std::printf("%d/12 criteria passed\n", 12 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
