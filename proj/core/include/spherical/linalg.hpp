#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spherical/rational.hpp"

namespace spherical {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Matrix whose columns are the given vectors (all of equal length).
    static RationalMatrix from_columns(std::span<const std::vector<Rational>> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> multiply(std::span<const Rational> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    RationalMatrix reduced;            // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Unique exact solution of m x = b when m has full column rank and the
/// (possibly overdetermined) system is consistent; nullopt otherwise.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& m, std::span<const Rational> b);

}  // namespace spherical
