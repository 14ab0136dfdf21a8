#include "spherical/linalg.hpp"

#include <utility>

#include "spherical/errors.hpp"

namespace spherical {

RationalMatrix RationalMatrix::from_columns(std::span<const std::vector<Rational>> columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw InvalidInput("from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw InvalidInput("multiply: dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
    return out;
}

RowEchelon row_reduce(RationalMatrix m) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));

        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero()) m(row, c) *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const RowEchelon ech = row_reduce(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t p : ech.pivots) is_pivot[p] = 1;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw InvalidInput("solve_exact: right-hand side has wrong length");
    RationalMatrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
        augmented(r, m.cols()) = b[r];
    }
    const RowEchelon ech = row_reduce(std::move(augmented));
    if (ech.rank() != m.cols()) return std::nullopt;  // rank deficient or inconsistent
    for (std::size_t r = 0; r < ech.rank(); ++r)
        if (ech.pivots[r] != r) return std::nullopt;

    std::vector<Rational> x(m.cols());
    for (std::size_t r = 0; r < m.cols(); ++r) x[r] = ech.reduced(r, m.cols());

    // Residual must vanish identically.
    const std::vector<Rational> check = m.multiply(x);
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (check[r] != b[r]) return std::nullopt;
    return x;
}

}  // namespace spherical
