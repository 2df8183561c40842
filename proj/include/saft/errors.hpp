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
 * @file errors.hpp Exception hierarchy
 *
 *****************************************************************************/
#ifndef SAFT_ERRORS_HPP
#define SAFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace saft {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SAFT_DEFINE_ERROR(NAME)                                     \
    class NAME : public Error {                                     \
    public:                                                         \
        explicit NAME(const std::string& msg) : Error(msg) {}       \
    }

SAFT_DEFINE_ERROR(DeterminantError);        // ad - bc deviates from 1
SAFT_DEFINE_ERROR(ZeroBError);              // |b| below threshold
SAFT_DEFINE_ERROR(GridError);               // malformed or too-short grid
SAFT_DEFINE_ERROR(AlignmentError);          // shift/sample point off the grid
SAFT_DEFINE_ERROR(UnsupportedGeneratorError);
SAFT_DEFINE_ERROR(QuadratureError);         // adaptive refinement exhausted
SAFT_DEFINE_ERROR(DegenerateError);         // vanishing denominator / system
SAFT_DEFINE_ERROR(NotReconstructibleError); // 1/phi_dagger not square-integrable
SAFT_DEFINE_ERROR(ConditionError);          // dual-frame hypothesis violated
SAFT_DEFINE_ERROR(RankError);               // normal equations rank-deficient
SAFT_DEFINE_ERROR(IoError);                 // file parse/serialize failure

#undef SAFT_DEFINE_ERROR

} // namespace saft

#endif // SAFT_ERRORS_HPP
