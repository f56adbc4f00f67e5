#include "arnoldnf/linalg.hpp"

namespace arnoldnf {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        AlgebraicScalar inv = m[row][c].inverse();
        for (auto& v : m[row]) if (!v.is_zero()) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            AlgebraicScalar f = m[r][c];
            for (std::size_t k = c; k < m[r].size(); ++k)
                if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

std::optional<std::vector<AlgebraicScalar>> solve(Matrix a, std::vector<AlgebraicScalar> b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    auto pivots = rref(a, n);
    for (std::size_t r = pivots.size(); r < a.size(); ++r)
        if (!a[r][n].is_zero()) return std::nullopt;
    std::vector<AlgebraicScalar> x(n, AlgebraicScalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
    return x;
}

}  // namespace arnoldnf
