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
 * @file classify_demo.cpp Translate-system classification of two generators
 *
 *****************************************************************************/
#include <iostream>

#include "saft/saft.hpp"

int main()
{
    using namespace saft;

    ParamSet A{2.0, 3.0, 7.0 / 3.0, 4.0, 0.0, 0.0};
    for (const auto& [name, gen] :
         {std::pair<const char*, Generator>{"chirped_sinc",
                                            Generator::chirped_sinc()},
          std::pair<const char*, Generator>{"bspline2",
                                            Generator::bspline2(false)}}) {
        const SystemClassification cls = classify_system(A, gen);
        std::cout << name << ": " << to_string(cls.verdict)
                  << "  frame bounds [" << cls.m << ", " << cls.M << "]\n";
    }
    return 0;
}
