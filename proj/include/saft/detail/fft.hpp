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
 * @file fft.hpp Radix-2 FFT and Bluestein evaluation of exponential sums
 *
 *****************************************************************************/
#ifndef SAFT_DETAIL_FFT_HPP
#define SAFT_DETAIL_FFT_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "saft/params.hpp"
#include "saft/types.hpp"

namespace saft::detail {

inline std::size_t next_pow2(std::size_t n)
{
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/**
 * @brief In-place iterative radix-2 FFT (decimation in time).
 *
 * v.size() must be a power of two. inverse = true applies the conjugate
 * kernel without the 1/n normalization; callers divide where needed.
 */
inline void fft_pow2(std::vector<Complex>& v, bool inverse)
{
    const std::size_t n = v.size();
    if (n < 2) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }

    const double sgn = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sgn * 2.0 * pi / static_cast<double>(len);
        const Complex wlen = unit_phase(ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                Complex u = v[i + k];
                Complex t = v[i + k + len / 2] * w;
                v[i + k] = u + t;
                v[i + k + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
}

/// Linear convolution (u * w)[m] = sum_j u[j] w[m-j] via zero-padded FFT.
inline std::vector<Complex> linear_convolve(const std::vector<Complex>& u,
                                            const std::vector<Complex>& w)
{
    if (u.empty() || w.empty()) return {};
    const std::size_t m = u.size() + w.size() - 1;
    const std::size_t n = next_pow2(m);
    std::vector<Complex> a(n, Complex(0.0, 0.0)), b(n, Complex(0.0, 0.0));
    std::copy(u.begin(), u.end(), a.begin());
    std::copy(w.begin(), w.end(), b.begin());
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t j = 0; j < n; ++j) a[j] *= b[j];
    fft_pow2(a, true);
    const double inv = 1.0 / static_cast<double>(n);
    std::vector<Complex> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = a[j] * inv;
    return out;
}

/**
 * @brief Bluestein evaluation of S_k = sum_j v_j exp(sign * i * x_j * y_k)
 *        for x_j = x0 + j dx and y_k = y0 + k dy, k = 0..m-1.
 *
 * The cross term exp(i alpha j k), alpha = sign*dx*dy, is folded into a
 * linear convolution with the chirp exp(-i alpha n^2 / 2), so only
 * power-of-two FFTs are needed. dx and dy may carry either sign.
 *
 * Accuracy note: chirp phases are alpha*n^2/2 evaluated in double; for the
 * desk-scale grids used here (|alpha| n^2 up to ~1e6) the phase rounding
 * stays below 1e-10 radians.
 */
inline std::vector<Complex> chirp_exp_sum(const std::vector<Complex>& v,
                                          double x0, double dx,
                                          double y0, double dy,
                                          std::size_t m, double sign)
{
    const std::size_t n = v.size();
    std::vector<Complex> out(m, Complex(0.0, 0.0));
    if (n == 0 || m == 0) return out;

    const double alpha = sign * dx * dy;

    // a_j = v_j exp(i sign dx y0 j + i alpha j^2/2)
    std::vector<Complex> a(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double jd = static_cast<double>(j);
        a[j] = v[j] * unit_phase(sign * dx * y0 * jd + 0.5 * alpha * jd * jd);
    }

    // chirp c_t = exp(-i alpha t^2/2) for lags t = k - j in [-(n-1), m-1]
    std::vector<Complex> c(n + m - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double t = static_cast<double>(i) - static_cast<double>(n - 1);
        c[i] = unit_phase(-0.5 * alpha * t * t);
    }

    const std::vector<Complex> conv = linear_convolve(a, c);
    for (std::size_t k = 0; k < m; ++k) {
        const double kd = static_cast<double>(k);
        const double yk = y0 + kd * dy;
        out[k] = conv[k + n - 1] *
                 unit_phase(sign * x0 * yk + 0.5 * alpha * kd * kd);
    }
    return out;
}

} // namespace saft::detail

#endif // SAFT_DETAIL_FFT_HPP
