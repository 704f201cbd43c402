#pragma once

#include <array>

#include "widthone/sum_matrix.hpp"

namespace widthone {

// Reference values of the 5x5 sum matrices for d = 1..8, kept as verbatim
// integer tables. Every formula path must reproduce them exactly.
const std::array<SumMatrix, 8>& known_sum_matrices_5();

}  // namespace widthone
