#pragma once

// Finite quiver representations over the rationals and brute-force Hom
// dimensions by exact linear algebra. Used as the independent discrete oracle.

#include "nakarep/rational.hpp"

#include <cstddef>
#include <vector>

namespace nakarep {

using Matrix = std::vector<std::vector<Rational>>;  // row-major, rows x cols

struct QuiverArrow {
    std::size_t from;
    std::size_t to;
};

struct QuiverRep {
    std::vector<std::size_t> dims;   // per vertex
    std::vector<Matrix> maps;        // per arrow, dims[to] x dims[from]
};

// Rank of a rational matrix (Gaussian elimination).
std::size_t rank(Matrix rows);

// dim Hom(m, n) for representations of the same quiver.
std::size_t hom_dimension(const std::vector<QuiverArrow>& arrows, const QuiverRep& m, const QuiverRep& n);

}  // namespace nakarep
