#include "nakarep/quiver.hpp"

#include "nakarep/errors.hpp"

#include <utility>

namespace nakarep {

std::size_t rank(Matrix rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t hom_dimension(const std::vector<QuiverArrow>& arrows, const QuiverRep& m, const QuiverRep& n) {
    if (m.dims.size() != n.dims.size() || m.maps.size() != arrows.size() || n.maps.size() != arrows.size())
        throw DomainError("representations of different quivers");
    // Unknowns: entries of X_v (n.dims[v] x m.dims[v]) for every vertex v.
    std::vector<std::size_t> offset(m.dims.size() + 1, 0);
    for (std::size_t v = 0; v < m.dims.size(); ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    const std::size_t unknowns = offset.back();
    const auto var = [&](std::size_t v, std::size_t row, std::size_t col) { return offset[v] + row * m.dims[v] + col; };

    Matrix system;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const auto [v, w] = arrows[a];
        const Matrix& ma = m.maps[a];  // m.dims[w] x m.dims[v]
        const Matrix& na = n.maps[a];  // n.dims[w] x n.dims[v]
        // n_a X_v - X_w m_a = 0, entry (p, q) with p < n.dims[w], q < m.dims[v].
        for (std::size_t p = 0; p < n.dims[w]; ++p)
            for (std::size_t q = 0; q < m.dims[v]; ++q) {
                std::vector<Rational> row(unknowns);
                for (std::size_t k = 0; k < n.dims[v]; ++k)
                    if (!na[p][k].is_zero()) row[var(v, k, q)] += na[p][k];
                for (std::size_t k = 0; k < m.dims[w]; ++k)
                    if (!ma[k][q].is_zero()) row[var(w, p, k)] -= ma[k][q];
                system.push_back(std::move(row));
            }
    }
    return unknowns - rank(std::move(system));
}

}  // namespace nakarep
