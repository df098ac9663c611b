#include "nudcode/gf256.hpp"

#include <utility>

#include "nudcode/errors.hpp"

namespace nudcode::gf256 {

Element inv(Element a) {
    if (a == 0) throw ZeroInverseError("zero has no multiplicative inverse");
    return detail::tables.exp[255 - detail::tables.log[a]];
}

Element div(Element a, Element b) { return mul(a, inv(b)); }

namespace {

// Gauss-Jordan on m; returns the rank and leaves m in reduced form.
std::size_t eliminate(Matrix& m, Matrix* companion) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        if (companion) std::swap((*companion)[piv], (*companion)[r]);
        const Element f = inv(m[r][c]);
        for (auto& x : m[r]) x = mul(x, f);
        if (companion) {
            for (auto& x : (*companion)[r]) x = mul(x, f);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Element k = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= mul(k, m[r][j]);
            if (companion) {
                auto& ci = (*companion)[i];
                const auto& cr = (*companion)[r];
                for (std::size_t j = 0; j < ci.size(); ++j) ci[j] ^= mul(k, cr[j]);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, nullptr); }

bool invertible(const Matrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) return false;
    }
    return rank(m) == m.size();
}

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw ZeroInverseError("matrix is not square");
    }
    Matrix a = m;
    Matrix id(n, std::vector<Element>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    if (eliminate(a, &id) != n) throw ZeroInverseError("matrix is singular");
    return id;
}

std::vector<Element> multiply(const Matrix& m, const std::vector<Element>& x) {
    std::vector<Element> y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < x.size() && j < m[i].size(); ++j) y[i] ^= mul(m[i][j], x[j]);
    }
    return y;
}

}  // namespace nudcode::gf256
