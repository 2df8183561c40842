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
 * @file types.hpp Grids, sampled signals and norms
 *
 *****************************************************************************/
#ifndef SAFT_TYPES_HPP
#define SAFT_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "saft/errors.hpp"

namespace saft {

using Complex = std::complex<double>;

/// e^{i theta} with the phase computed directly from the exponent.
inline Complex unit_phase(double theta)
{
    return Complex(std::cos(theta), std::sin(theta));
}

/**
 * @brief Uniform grid t_j = start + j*step, j = 0..count-1.
 *
 * step must be strictly positive; grids are ascending by construction.
 */
struct UniformGrid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;

    double point(std::size_t j) const { return start + static_cast<double>(j) * step; }
    double back() const { return point(count == 0 ? 0 : count - 1); }
    double span() const { return static_cast<double>(count) * step; }
};

inline void validate_grid(const UniformGrid& g, std::size_t min_count = 1)
{
    if (!(g.step > 0.0) || !std::isfinite(g.step) || !std::isfinite(g.start))
        throw GridError("grid step must be finite and > 0");
    if (g.count < min_count)
        throw GridError("grid has too few points");
}

/// Index of x on the grid if x coincides with a grid point to 1e-9*step.
inline std::optional<std::size_t> grid_index(const UniformGrid& g, double x,
                                             double rel_tol = 1e-9)
{
    double u = (x - g.start) / g.step;
    double r = std::round(u);
    if (std::abs(u - r) > rel_tol * std::max(1.0, std::abs(u)))
        return std::nullopt;
    if (r < -0.5 || r > static_cast<double>(g.count) - 0.5)
        return std::nullopt;
    return static_cast<std::size_t>(r);
}

/// Sampled function on a uniform grid. Signals live on time grids,
/// spectra on frequency grids; the layout is identical.
struct SampledFn {
    UniformGrid grid;
    std::vector<Complex> values;
};

using Signal = SampledFn;
using Spectrum = SampledFn;

inline void validate_signal(const SampledFn& f, std::size_t min_count = 1)
{
    validate_grid(f.grid, min_count);
    if (f.values.size() != f.grid.count)
        throw GridError("value count does not match grid count");
}

/// Rectangle-rule L2 norm: sqrt(step * sum |f_j|^2).
inline double l2_norm(const SampledFn& f)
{
    double s = 0.0;
    for (const Complex& v : f.values) s += std::norm(v);
    return std::sqrt(f.grid.step * s);
}

/// Rectangle-rule L1 norm.
inline double l1_norm(const SampledFn& f)
{
    double s = 0.0;
    for (const Complex& v : f.values) s += std::abs(v);
    return f.grid.step * s;
}

inline double sup_norm(const SampledFn& f)
{
    double s = 0.0;
    for (const Complex& v : f.values) s = std::max(s, std::abs(v));
    return s;
}

/// Rectangle-rule inner product <f,g> = step * sum f_j * conj(g_j).
/// Both operands must share one grid.
inline Complex inner_product(const SampledFn& f, const SampledFn& g)
{
    if (f.grid.count != g.grid.count ||
        std::abs(f.grid.start - g.grid.start) > 1e-9 * std::max(1.0, std::abs(f.grid.start)) ||
        std::abs(f.grid.step - g.grid.step) > 1e-12 * f.grid.step)
        throw GridError("inner product requires a common grid");
    Complex s(0.0, 0.0);
    for (std::size_t j = 0; j < f.values.size(); ++j)
        s += f.values[j] * std::conj(g.values[j]);
    return f.grid.step * s;
}

/// Max pointwise deviation between two equally long value vectors.
inline double max_abs_diff(const std::vector<Complex>& f,
                           const std::vector<Complex>& g)
{
    if (f.size() != g.size()) throw GridError("size mismatch");
    double m = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        m = std::max(m, std::abs(f[j] - g[j]));
    return m;
}

/// Max pointwise deviation between two sampled functions on one grid.
inline double max_abs_diff(const SampledFn& f, const SampledFn& g)
{
    return max_abs_diff(f.values, g.values);
}

/// Scattered samples (x_j, y_j); x need not be uniform.
struct SampleSet {
    std::vector<double> points;
    std::vector<Complex> values;
};

} // namespace saft

#endif // SAFT_TYPES_HPP
