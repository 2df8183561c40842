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
 * @file saft_main.cpp Command line driver: transform, analyze, reconstruct,
 *       benchmark
 *
 *****************************************************************************/
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "saft/saft.hpp"

namespace {

using saft::Complex;
using saft::Generator;
using saft::ParamSet;
using saft::SampleSet;
using saft::Signal;
using saft::Spectrum;
using saft::UniformGrid;

// Exit codes: 0 ok, 1 benchmark threshold exceeded, 2 I/O failure,
// 3 validation failure.
constexpr int kExitOk = 0;
constexpr int kExitThreshold = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

Generator make_generator(const std::string& name, const std::string& file)
{
    if (name == "chirped_sinc") return Generator::chirped_sinc();
    if (name == "bspline2") return Generator::bspline2(false);
    if (name == "bspline2_centered") return Generator::bspline2(true);
    if (name == "tabulated") {
        if (file.empty())
            throw saft::UnsupportedGeneratorError(
                "generator 'tabulated' needs --gen-file");
        return Generator::tabulated(saft::read_sampled_csv(file));
    }
    throw saft::UnsupportedGeneratorError("unknown generator '" + name + "'");
}

/// sum_k c_k (T_k phi)(t) with c indexed from k_min.
Complex translate_sum(const ParamSet& A, const Generator& g,
                      const std::vector<Complex>& c, long k_min, double t)
{
    const double ab = A.a / A.b;
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == Complex{0.0, 0.0}) continue;
        const double k = static_cast<double>(k_min + static_cast<long>(i));
        acc += c[i] * saft::unit_phase(-ab * k * (t - k)) *
               saft::generator_value(A, g, t - k);
    }
    return acc;
}

Signal translate_sum_grid(const ParamSet& A, const Generator& g,
                          const std::vector<Complex>& c, long k_min,
                          const UniformGrid& tgrid)
{
    Signal out;
    out.grid = tgrid;
    out.values.resize(tgrid.count);
    saft::detail::parallel_for(tgrid.count, [&](std::size_t j) {
        out.values[j] = translate_sum(A, g, c, k_min, tgrid.point(j));
    });
    return out;
}

struct GridFlags {
    double start = 0.0;
    double step = 0.0;
    long count = 0;

    bool any() const { return start != 0.0 || step != 0.0 || count != 0; }
    bool complete() const { return step > 0.0 && count > 0; }
    UniformGrid grid() const
    {
        return UniformGrid{start, step, static_cast<std::size_t>(count)};
    }
};

void add_grid_flags(CLI::App* cmd, const std::string& prefix, GridFlags& g,
                    const std::string& what)
{
    cmd->add_option("--" + prefix + "-start", g.start, "First " + what + " grid point");
    cmd->add_option("--" + prefix + "-step", g.step, "Grid step for " + what);
    cmd->add_option("--" + prefix + "-count", g.count, "Number of " + what + " grid points");
}

// ---------------------------------------------------------------------------
// transform

struct TransformArgs {
    std::string params, in, out, report;
    bool inverse = false;
    bool oracle = false;
    double oversample = 2.0;
    GridFlags omega, tgrid;
};

int run_transform(const TransformArgs& a)
{
    const saft::LoadedParams lp = saft::load_params(a.params);
    nlohmann::json rep{{"params", saft::params_json(lp.A)},
                       {"c_filled", lp.c_filled},
                       {"in", a.in},
                       {"out", a.out}};

    if (!a.inverse) {
        if (a.omega.any() && !a.omega.complete())
            throw saft::GridError(
                "--omega-start/--omega-step/--omega-count must be given together");
        const Signal f = saft::read_sampled_csv(a.in);
        const UniformGrid wg = a.omega.complete()
                                   ? a.omega.grid()
                                   : saft::default_omega_window(lp.A, f.grid,
                                                                a.oversample);
        const Spectrum F = saft::saft_fast(lp.A, f, wg);
        saft::write_spectrum_csv(a.out, F);

        const double nin = saft::l2_norm(f);
        const double nout = saft::l2_norm(F);
        rep["mode"] = "forward";
        rep["input_grid"] = saft::grid_json(f.grid);
        rep["output_grid"] = saft::grid_json(wg);
        rep["l2_in"] = nin;
        rep["l2_out"] = nout;
        if (nin > 0.0) rep["unitarity_defect"] = std::abs(nout - nin) / nin;
        if (a.oracle) {
            const Spectrum Fq = saft::saft_quadrature(lp.A, f, wg);
            const double defect = saft::max_abs_diff(F.values, Fq.values);
            rep["oracle_defect"] = defect;
            std::cout << "oracle defect (fast vs quadrature): " << defect << "\n";
        }
    } else {
        if (a.oracle)
            throw saft::GridError("--oracle applies to the forward transform only");
        if (!a.tgrid.complete())
            throw saft::GridError(
                "inverse transform needs --t-start, --t-step and --t-count");
        const Spectrum F = saft::read_sampled_csv(a.in);
        const Signal f = saft::isaft(lp.A, F, a.tgrid.grid());
        saft::write_signal_csv(a.out, f);
        rep["mode"] = "inverse";
        rep["input_grid"] = saft::grid_json(F.grid);
        rep["output_grid"] = saft::grid_json(f.grid);
        rep["l2_in"] = saft::l2_norm(F);
        rep["l2_out"] = saft::l2_norm(f);
    }

    if (!a.report.empty()) saft::write_json(a.report, rep);
    std::cout << "wrote " << a.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
    std::string params, gen = "bspline2", gen_file, report;
    long resolution = 2048;
    long periodization = 64;
    long cross_points = 9;
};

int run_analyze(const AnalyzeArgs& a)
{
    const saft::LoadedParams lp = saft::load_params(a.params);
    const Generator gen = make_generator(a.gen, a.gen_file);
    const std::size_t res = static_cast<std::size_t>(a.resolution);
    const long K = a.periodization;

    const saft::SystemClassification cls =
        saft::classify_system(lp.A, gen, res, K);
    const auto [ulo, uhi] = saft::u_operator_bounds(lp.A, gen, res, K);
    const double bern = saft::bernstein_constant(lp.A, gen, 1025, K);

    // Cross check: the zero-offset Zak section equals the discrete symbol,
    // Z phi(0, w) = conj(eta(w)) / sqrt(2 pi |b|) * phi_dagger(w).
    Signal tab;
    tab.grid = UniformGrid{-static_cast<double>(K + 1), 1.0,
                           2 * static_cast<std::size_t>(K) + 3};
    tab.values.resize(tab.grid.count);
    for (std::size_t j = 0; j < tab.grid.count; ++j)
        tab.values[j] = saft::generator_value(lp.A, gen, tab.grid.point(j));

    const double half = saft::spectral_half_width(lp.A);
    const double root = std::sqrt(2.0 * saft::pi * std::abs(lp.A.b));
    nlohmann::json cross_rows = nlohmann::json::array();
    double cross_defect = 0.0;
    for (long j = 0; j < a.cross_points; ++j) {
        const double w = -half + 2.0 * half * (static_cast<double>(j) + 0.5) /
                                     static_cast<double>(a.cross_points);
        const Complex sym = saft::phi_dagger(lp.A, gen, w, K);
        const UniformGrid t0{0.0, 1.0, 1};
        const UniformGrid w0{w, 1.0, 1};
        const saft::ZakField z = saft::zak(lp.A, tab, t0, w0, K);
        const Complex via_zak = z.at(0, 0) * root / std::conj(saft::eta(lp.A, w));
        cross_defect = std::max(cross_defect, std::abs(sym - via_zak));
        cross_rows.push_back({{"omega", w},
                              {"symbol", saft::complex_json(sym)},
                              {"zak_route", saft::complex_json(via_zak)}});
    }

    std::cout << "verdict:            " << saft::to_string(cls.verdict) << "\n"
              << "frame bounds:       m = " << cls.m << ", M = " << cls.M << "\n"
              << "weight range:       [" << cls.w_min << ", " << cls.w_max << "]\n"
              << "symbol bounds:      [" << ulo << ", " << uhi << "]\n"
              << "bernstein constant: " << bern << "\n"
              << "symbol/zak defect:  " << cross_defect << "\n";

    if (!a.report.empty()) {
        nlohmann::json rep{
            {"classification", saft::classification_json(cls)},
            {"u_operator_bounds", {ulo, uhi}},
            {"bernstein_constant", bern},
            {"symbol_zak_cross_check",
             {{"max_abs_diff", cross_defect}, {"rows", cross_rows}}},
            {"config",
             {{"params", saft::params_json(lp.A)},
              {"c_filled", lp.c_filled},
              {"generator", a.gen},
              {"resolution", a.resolution},
              {"periodization", a.periodization}}}};
        saft::write_json(a.report, rep);
        std::cout << "wrote " << a.report << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// reconstruct

struct ReconstructArgs {
    std::string params, gen = "chirped_sinc", gen_file, samples, mode, out,
                report;
    GridFlags tgrid;
    double lo = 0.0, hi = 0.0;
    long M = 0;
    long rank_slack = 0;
    double svd_cutoff = 1e-12;
    bool no_enforce_count = false;
};

UniformGrid default_tgrid(const SampleSet& s, double lo, double hi, double step)
{
    double a = s.points.empty() ? lo : std::floor(s.points.front()) - 2.0;
    double b = s.points.empty() ? hi : std::ceil(s.points.back()) + 2.0;
    if (hi > lo) {
        a = lo;
        b = hi;
    }
    const std::size_t n =
        static_cast<std::size_t>(std::floor((b - a) / step + 0.5)) + 1;
    return UniformGrid{a, step, n};
}

int run_reconstruct(const ReconstructArgs& a)
{
    const saft::LoadedParams lp = saft::load_params(a.params);
    const SampleSet samples = saft::read_samples_csv(a.samples);
    if (a.tgrid.any() && !a.tgrid.complete())
        throw saft::GridError(
            "--t-start/--t-step/--t-count must be given together");

    nlohmann::json rep{{"mode", a.mode},
                       {"params", saft::params_json(lp.A)},
                       {"c_filled", lp.c_filled},
                       {"samples", a.samples},
                       {"sample_count", samples.points.size()}};

    if (a.mode == "uniform") {
        const Generator gen = make_generator(a.gen, a.gen_file);
        const saft::CardinalInterpolant S(lp.A, gen);
        const UniformGrid tg = a.tgrid.complete()
                                   ? a.tgrid.grid()
                                   : default_tgrid(samples, 0, 0, 0.01);
        const Signal out = saft::reconstruct_uniform(S, samples, tg);
        saft::write_signal_csv(a.out, out);

        double rmax = 0.0;
        for (std::size_t j = 0; j < samples.points.size(); ++j) {
            const UniformGrid one{samples.points[j], 1.0, 1};
            const Signal v = saft::reconstruct_uniform(S, samples, one);
            rmax = std::max(rmax, std::abs(v.values[0] - samples.values[j]));
        }
        rep["generator"] = a.gen;
        rep["residual_max"] = rmax;
        rep["output_grid"] = saft::grid_json(tg);
        std::cout << "residual at sample points: " << rmax << "\n";
    } else if (a.mode == "shannon") {
        const UniformGrid tg = a.tgrid.complete()
                                   ? a.tgrid.grid()
                                   : default_tgrid(samples, 0, 0, 0.01);
        const Signal out = saft::shannon_saft_grid(lp.A, samples, tg);
        saft::write_signal_csv(a.out, out);

        double rmax = 0.0;
        for (std::size_t j = 0; j < samples.points.size(); ++j)
            rmax = std::max(
                rmax, std::abs(saft::shannon_saft(lp.A, samples,
                                                  samples.points[j]) -
                               samples.values[j]));
        rep["residual_max"] = rmax;
        rep["output_grid"] = saft::grid_json(tg);
        std::cout << "residual at sample points: " << rmax << "\n";
    } else if (a.mode == "local") {
        if (!(a.hi > a.lo) || a.M < 1)
            throw saft::GridError("local mode needs --lo < --hi and --M >= 1");
        const Generator gen = make_generator(a.gen, a.gen_file);
        saft::LocalOptions opts;
        opts.enforce_count = !a.no_enforce_count;
        opts.rank_slack = a.rank_slack;
        opts.svd_cutoff = a.svd_cutoff;
        const saft::SamplingReport r = saft::local_reconstruct(
            lp.A, gen, samples, a.lo, a.hi, a.M, opts);

        const UniformGrid tg = a.tgrid.complete()
                                   ? a.tgrid.grid()
                                   : default_tgrid(samples, a.lo, a.hi, 0.01);
        const Signal out =
            translate_sum_grid(lp.A, gen, r.coefficients, r.k_min, tg);
        saft::write_signal_csv(a.out, out);

        rep = saft::sampling_report_json(r, lp.A, a.gen);
        rep["mode"] = "local";
        rep["config"]["rank_slack"] = a.rank_slack;
        rep["config"]["svd_cutoff"] = a.svd_cutoff;
        rep["config"]["enforce_count"] = !a.no_enforce_count;
        std::cout << "residual_max = " << r.residual_max
                  << ", rank = " << r.rank << "/" << r.structural_columns
                  << "\n";
    }

    if (!a.report.empty()) saft::write_json(a.report, rep);
    std::cout << "wrote " << a.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// benchmark

struct BenchmarkArgs {
    std::vector<long> rows{10, 50, 250, 400};
    std::uint64_t seed = 20260818;
    std::string out_dir = ".";
    std::string coeffs;
    double threshold = 1e-9;
    double dense_step = 0.01;
};

/// Portable uniform double in [0, 1): top 53 bits of the raw engine word.
double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int run_benchmark(const BenchmarkArgs& a)
{
    ParamSet A;
    A.a = 2.0;
    A.b = 3.0;
    A.d = 4.0;
    A.c = (A.a * A.d - 1.0) / A.b;
    A.p = 0.0;
    A.q = 0.0;
    saft::validate_params(A);
    const Generator gen = Generator::bspline2(true);
    const double lo = -10.0, hi = 10.0;
    const std::size_t nx = 61;
    const long kc = 10; // coefficients on k in [-kc, kc]

    std::mt19937_64 rng(a.seed);

    // Draw order is fixed: sample points first, then coefficients, so a
    // --coeffs override never changes the point set.
    SampleSet X;
    X.points.resize(nx);
    for (std::size_t j = 0; j < nx; ++j)
        X.points[j] = lo + (hi - lo) * uniform01(rng);
    std::sort(X.points.begin(), X.points.end());
    for (std::size_t j = 1; j < nx; ++j)
        if (!(X.points[j] > X.points[j - 1]))
            throw saft::DegenerateError("seed produced duplicate sample points");

    std::vector<Complex> coef(2 * kc + 1);
    for (Complex& c : coef) {
        const double re = 2.0 * uniform01(rng) - 1.0;
        const double im = 2.0 * uniform01(rng) - 1.0;
        c = Complex{re, im};
    }
    long coef_min = -kc;
    if (!a.coeffs.empty()) {
        const SampleSet file = saft::read_samples_csv(a.coeffs);
        coef.clear();
        for (std::size_t j = 0; j < file.points.size(); ++j) {
            const double r = std::round(file.points[j]);
            if (std::abs(file.points[j] - r) > 1e-9)
                throw saft::IoError("'" + a.coeffs +
                                    "': coefficient indices must be integers");
            if (j == 0) coef_min = static_cast<long>(r);
            if (static_cast<long>(r) !=
                coef_min + static_cast<long>(j))
                throw saft::IoError("'" + a.coeffs +
                                    "': coefficient indices must be contiguous");
            coef.push_back(file.values[j]);
        }
        if (coef.empty())
            throw saft::IoError("'" + a.coeffs + "': no coefficients");
    }

    const auto truth = [&](double t) {
        return translate_sum(A, gen, coef, coef_min, t);
    };
    X.values.resize(nx);
    for (std::size_t j = 0; j < nx; ++j) X.values[j] = truth(X.points[j]);

    const std::string dir = a.out_dir.empty() ? "." : a.out_dir;
    saft::write_samples_csv(dir + "/samples.csv", X);
    {
        SampleSet cs;
        for (std::size_t j = 0; j < coef.size(); ++j) {
            cs.points.push_back(
                static_cast<double>(coef_min + static_cast<long>(j)));
            cs.values.push_back(coef[j]);
        }
        saft::write_samples_csv(dir + "/coefficients.csv", cs);
    }

    const UniformGrid dense = default_tgrid(X, lo, hi, a.dense_step);
    Signal truth_dense;
    truth_dense.grid = dense;
    truth_dense.values.resize(dense.count);
    saft::detail::parallel_for(dense.count, [&](std::size_t j) {
        truth_dense.values[j] = truth(dense.point(j));
    });

    nlohmann::json jrows = nlohmann::json::array();
    std::string table = "M,error\n";
    bool ok = true;
    for (long M : a.rows) {
        saft::LocalOptions opts;
        opts.enforce_count = false; // rows with 2M + 19 > 61 stay admissible
        opts.svd_cutoff = 1e-12;
        opts.dense_step = a.dense_step;
        opts.ground_truth = truth;

        const auto t0 = std::chrono::steady_clock::now();
        const saft::SamplingReport r =
            saft::local_reconstruct(A, gen, X, lo, hi, M, opts);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();

        const double err = r.truth_error_max.value_or(
            std::numeric_limits<double>::quiet_NaN());
        ok = ok && err <= a.threshold;
        table += std::to_string(M) + "," + saft::detail::format_sig17(err) + "\n";

        Signal recon = translate_sum_grid(A, gen, r.coefficients, r.k_min, dense);
        std::string csv = "t,recon_re,recon_im,truth_re,truth_im\n";
        for (std::size_t j = 0; j < dense.count; ++j) {
            csv += saft::detail::format_sig17(dense.point(j)) + "," +
                   saft::detail::format_sig17(recon.values[j].real()) + "," +
                   saft::detail::format_sig17(recon.values[j].imag()) + "," +
                   saft::detail::format_sig17(truth_dense.values[j].real()) + "," +
                   saft::detail::format_sig17(truth_dense.values[j].imag()) + "\n";
        }
        saft::atomic_write_text(dir + "/recon_M" + std::to_string(M) + ".csv",
                                csv);

        nlohmann::json jr = saft::sampling_report_json(r, A, "bspline2_centered");
        jr["table1_row"] = {{"M", M}, {"error", err}};
        jr["seconds"] = secs;
        saft::write_json(dir + "/row_M" + std::to_string(M) + ".json", jr);
        jrows.push_back(std::move(jr));

        std::cout << "M = " << M << ": max error = " << err << "  ("
                  << r.rank << "/" << r.structural_columns << " columns, "
                  << secs << " s)\n";
    }
    saft::atomic_write_text(dir + "/table1.csv", table);

    nlohmann::json rep{{"seed", a.seed},
                       {"params", saft::params_json(A)},
                       {"generator", "bspline2_centered"},
                       {"interval", {lo, hi}},
                       {"sample_count", nx},
                       {"threshold", a.threshold},
                       {"coefficients_source",
                        a.coeffs.empty() ? std::string("seed") : a.coeffs},
                       {"rows", jrows},
                       {"pass", ok}};
    saft::write_json(dir + "/benchmark.json", rep);

    std::cout << (ok ? "PASS" : "FAIL") << ": all rows within "
              << a.threshold << "\n";
    return ok ? kExitOk : kExitThreshold;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"special affine Fourier transform toolkit"};
    app.require_subcommand(1);

    TransformArgs ta;
    CLI::App* t = app.add_subcommand(
        "transform", "Apply the transform (or its inverse) to a sampled signal");
    t->add_option("--params", ta.params, "Parameter JSON file")->required();
    t->add_option("--in", ta.in, "Input CSV (t,re,im or omega,re,im)")->required();
    t->add_option("--out", ta.out, "Output CSV")->required();
    t->add_flag("--inverse", ta.inverse, "Invert: spectrum in, signal out");
    t->add_flag("--oracle", ta.oracle,
                "Also run the direct quadrature path and report the defect");
    t->add_option("--oversample", ta.oversample,
                  "Oversampling factor for the default frequency window");
    t->add_option("--report", ta.report, "Write a JSON run report here");
    add_grid_flags(t, "omega", ta.omega, "frequency");
    add_grid_flags(t, "t", ta.tgrid, "time");

    AnalyzeArgs aa;
    CLI::App* an = app.add_subcommand(
        "analyze", "Classify the translate system of a generator");
    an->add_option("--params", aa.params, "Parameter JSON file")->required();
    an->add_option("--gen", aa.gen,
                   "Generator: chirped_sinc, bspline2, bspline2_centered, tabulated");
    an->add_option("--gen-file", aa.gen_file, "Sample CSV for --gen tabulated");
    an->add_option("--resolution", aa.resolution, "Frequency grid resolution");
    an->add_option("--periodization", aa.periodization,
                   "Periodization / symbol truncation order");
    an->add_option("--cross-check-points", aa.cross_points,
                   "Number of symbol cross check frequencies");
    an->add_option("--report", aa.report, "Write a JSON report here");

    ReconstructArgs ra;
    CLI::App* rc = app.add_subcommand(
        "reconstruct", "Rebuild a function from samples");
    rc->add_option("--params", ra.params, "Parameter JSON file")->required();
    rc->add_option("--mode", ra.mode, "uniform, shannon or local")
        ->required()
        ->check(CLI::IsMember({"uniform", "shannon", "local"}));
    rc->add_option("--samples", ra.samples, "Sample CSV (x,re,im)")->required();
    rc->add_option("--out", ra.out, "Output signal CSV")->required();
    rc->add_option("--gen", ra.gen,
                   "Generator: chirped_sinc, bspline2, bspline2_centered, tabulated");
    rc->add_option("--gen-file", ra.gen_file, "Sample CSV for --gen tabulated");
    rc->add_option("--report", ra.report, "Write a JSON report here");
    rc->add_option("--lo", ra.lo, "Local mode: interval start");
    rc->add_option("--hi", ra.hi, "Local mode: interval end");
    rc->add_option("--M", ra.M, "Local mode: translate margin");
    rc->add_option("--rank-slack", ra.rank_slack,
                   "Local mode: tolerated rank deficit");
    rc->add_option("--svd-cutoff", ra.svd_cutoff,
                   "Local mode: relative singular value cutoff");
    rc->add_flag("--no-enforce-count", ra.no_enforce_count,
                 "Local mode: skip the #X >= 2M + (hi - lo) - 1 check");
    add_grid_flags(rc, "t", ra.tgrid, "time");

    BenchmarkArgs ba;
    CLI::App* bm = app.add_subcommand(
        "benchmark", "Local reconstruction error sweep over the margin M");
    bm->add_option("--rows", ba.rows, "Margins M to run")->delimiter(',');
    bm->add_option("--seed", ba.seed, "Seed for sample points and coefficients");
    bm->add_option("--out-dir", ba.out_dir, "Directory for CSV and JSON output");
    bm->add_option("--coeffs", ba.coeffs,
                   "Coefficient CSV (k,re,im) overriding the seeded draw");
    bm->add_option("--threshold", ba.threshold,
                   "Maximum admissible per-row error");
    bm->add_option("--dense-step", ba.dense_step,
                   "Grid step for the error comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (t->parsed()) return run_transform(ta);
        if (an->parsed()) return run_analyze(aa);
        if (rc->parsed()) return run_reconstruct(ra);
        if (bm->parsed()) return run_benchmark(ba);
    } catch (const saft::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const saft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
