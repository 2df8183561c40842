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
 * @file zak.hpp Chirped Zak transform on [0,1] x [-|b|pi, |b|pi]
 *
 *****************************************************************************/
#ifndef SAFT_ZAK_HPP
#define SAFT_ZAK_HPP

#include <cmath>
#include <vector>

#include "saft/detail/parallel.hpp"
#include "saft/params.hpp"
#include "saft/types.hpp"

namespace saft {

/**
 * @brief Sampled Zak field Z(t_i, w_j), stored row-major with t as the slow
 *        index.
 *
 * truncation_warning is raised when the boundary terms |f(t -/+ K)| of the
 * lattice sum still exceed 1e-12, i.e. the truncation K was too small for
 * the signal's decay.
 */
struct ZakField {
    UniformGrid tgrid;
    UniformGrid wgrid;
    std::vector<Complex> values; // tgrid.count * wgrid.count
    bool truncation_warning = false;
    double boundary_term = 0.0;

    Complex at(std::size_t ti, std::size_t wj) const
    {
        return values[ti * wgrid.count + wj];
    }
};

/**
 * @brief Zak transform
 *        Z f(t, w) = conj(eta_A)(w) (2 pi |b|)^{-1/2}
 *                    sum_{|k|<=K} f(t-k) exp(i (a k^2 - 2 a k t + 2 k w - 2 p k)/(2b)).
 *
 * Every t - k that falls inside f's window must land on f's grid (the t grid
 * is typically a refinement of the unit interval on the same lattice as f);
 * points outside the window count as zero.
 *
 * @throws AlignmentError when a required point is inside the window but off
 *                        the grid
 */
inline ZakField zak(const ParamSet& A, const Signal& f, const UniformGrid& tgrid,
                    const UniformGrid& wgrid, long K)
{
    validate_signal(f, 2);
    validate_grid(tgrid, 1);
    validate_grid(wgrid, 1);

    const double pref = 1.0 / std::sqrt(2.0 * pi * std::abs(A.b));
    const double inv2b = 1.0 / (2.0 * A.b);

    ZakField z;
    z.tgrid = tgrid;
    z.wgrid = wgrid;
    z.values.assign(tgrid.count * wgrid.count, Complex(0.0, 0.0));

    const double lo = f.grid.start - 0.5 * f.grid.step;
    const double hi = f.grid.back() + 0.5 * f.grid.step;

    std::vector<double> boundary(tgrid.count, 0.0);
    detail::parallel_for(tgrid.count, [&](std::size_t ti) {
        const double t = tgrid.point(ti);

        // gather the in-window samples f(t-k) once per t
        std::vector<std::pair<double, Complex>> terms; // (k, f(t-k))
        for (long k = -K; k <= K; ++k) {
            const double x = t - static_cast<double>(k);
            if (x < lo || x > hi) continue;
            const auto idx = grid_index(f.grid, x, 1e-7);
            if (!idx)
                throw AlignmentError("zak: t - k falls off the sample grid");
            const Complex v = f.values[*idx];
            if (std::abs(k) == K)
                boundary[ti] = std::max(boundary[ti], std::abs(v));
            if (v == Complex(0.0, 0.0)) continue;
            terms.emplace_back(static_cast<double>(k), v);
        }

        for (std::size_t wj = 0; wj < wgrid.count; ++wj) {
            const double w = wgrid.point(wj);
            Complex acc(0.0, 0.0);
            for (const auto& [kd, v] : terms) {
                const double theta =
                    (A.a * kd * kd - 2.0 * A.a * kd * t + 2.0 * kd * w -
                     2.0 * A.p * kd) * inv2b;
                acc += v * unit_phase(theta);
            }
            z.values[ti * wgrid.count + wj] =
                pref * std::conj(eta(A, w)) * acc;
        }
    });

    for (double btv : boundary) z.boundary_term = std::max(z.boundary_term, btv);
    z.truncation_warning = z.boundary_term > 1e-12;
    return z;
}

/**
 * @brief Relative defect | ||Zf||^2 - ||f||^2 | / ||f||^2 on a resolution^2
 *        rectangle-rule grid over [0,1) x [-|b|pi, |b|pi].
 *
 * The t grid is {j/resolution, j = 0..resolution-1}; its step must be an
 * integer multiple of f's grid step so that no interpolation is involved.
 * The reference norm ||f||^2 is taken on f's own (finer) grid, so the
 * defect measures how fast the field's rectangle rule converges to the
 * continuum isometry under t refinement. The w grid uses cell midpoints,
 * which keeps the periodization seam out of the sample set.
 */
inline double zak_isometry_defect(const ParamSet& A, const Signal& f,
                                  std::size_t resolution, long K)
{
    validate_signal(f, 2);
    if (resolution < 2) throw GridError("resolution must be >= 2");

    const double h = 1.0 / static_cast<double>(resolution);
    const double ratio = h / f.grid.step;
    const double rr = std::round(ratio);
    if (std::abs(ratio - rr) > 1e-9 * std::max(1.0, ratio) || rr < 1.0)
        throw AlignmentError("1/resolution must be an integer multiple of the grid step");

    UniformGrid tg{0.0, h, resolution};
    const double half = spectral_half_width(A);
    const double dw = 2.0 * half / static_cast<double>(resolution);
    UniformGrid wg{-half + 0.5 * dw, dw, resolution};

    const ZakField z = zak(A, f, tg, wg, K);

    double zn = 0.0;
    for (const Complex& v : z.values) zn += std::norm(v);
    zn *= h * dw;

    const double fn = l2_norm(f);
    if (fn == 0.0) throw DegenerateError("zero signal has no isometry defect");
    return std::abs(zn - fn * fn) / (fn * fn);
}

} // namespace saft

#endif // SAFT_ZAK_HPP
