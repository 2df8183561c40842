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
 * @file saft.hpp Umbrella header for the whole library
 *
 *****************************************************************************/
#ifndef SAFT_SAFT_HPP
#define SAFT_SAFT_HPP

#include "saft/errors.hpp"
#include "saft/generator.hpp"
#include "saft/io.hpp"
#include "saft/operators.hpp"
#include "saft/params.hpp"
#include "saft/quadrature.hpp"
#include "saft/sampling.hpp"
#include "saft/siv.hpp"
#include "saft/transform.hpp"
#include "saft/types.hpp"
#include "saft/zak.hpp"

#endif // SAFT_SAFT_HPP
