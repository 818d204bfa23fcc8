#pragma once

#include <vector>

#include "latexp/rational.hpp"

namespace latexp {

// LLL size reduction of an approximate basis, used only to tighten
// enumeration boxes. Input: columns of the embedded basis (any common scale).
// Output: an exactly unimodular integer transform U (z = U w); completeness of
// the enumeration never depends on the quality of this reduction. Falls back
// to the identity on any trouble.
std::vector<std::vector<long long>> lll_transform(const std::vector<std::vector<Rat>>& cols);

}  // namespace latexp
