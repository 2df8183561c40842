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
 * @file roundtrip_demo.cpp Forward/inverse transform of a Gaussian
 *
 *****************************************************************************/
#include <cmath>
#include <iostream>

#include "saft/saft.hpp"

int main()
{
    using namespace saft;

    ParamSet A{2.0, 3.0, 7.0 / 3.0, 4.0, 0.0, 0.0};
    Signal f;
    f.grid = UniformGrid{-20.0, 0.01, 4001};
    f.values.resize(f.grid.count);
    for (std::size_t j = 0; j < f.grid.count; ++j) {
        const double t = f.grid.point(j);
        f.values[j] = std::exp(-0.5 * t * t);
    }

    const UniformGrid wg = default_omega_window(A, f.grid);
    const Spectrum F = saft_fast(A, f, wg);
    const Signal back = isaft(A, F, f.grid);

    double defect = 0.0;
    for (std::size_t j = 0; j < f.grid.count; ++j)
        defect = std::max(defect, std::abs(back.values[j] - f.values[j]));

    std::cout << "||f||          = " << l2_norm(f) << "\n"
              << "||Ff||         = " << l2_norm(F) << "\n"
              << "max |back - f| = " << defect << "\n";
    return defect < 1e-6 ? 0 : 1;
}
