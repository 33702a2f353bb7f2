/*
   Copyright 2026 The supertab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "supertab/error.hpp"

#include <sstream>

namespace supertab {

namespace {

std::string describe_witnesses(const std::vector<std::array<int, 3>>& w) {
    std::ostringstream out;
    out << "pair set is not closed; missing composites for";
    for (const auto& [i, j, k] : w) out << " (" << i << "," << j << "," << k << ")";
    return out.str();
}

std::string describe_sequence(const std::vector<int>& w) {
    std::ostringstream out;
    out << "structure constants not nilpotent; nonzero product along basis indices";
    for (int i : w) out << ' ' << i;
    return out.str();
}

}  // namespace

NotClosed::NotClosed(std::vector<std::array<int, 3>> witnesses)
    : Error(describe_witnesses(witnesses)), witnesses_(std::move(witnesses)) {}

NotNilpotent::NotNilpotent(std::vector<int> witness)
    : Error(describe_sequence(witness)), witness_(std::move(witness)) {}

}  // namespace supertab
