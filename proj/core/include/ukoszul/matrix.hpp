#ifndef UKOSZUL_MATRIX_HPP
#define UKOSZUL_MATRIX_HPP

#include "ukoszul/fp.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ukoszul {

/// Dense matrix over F_p, row-major uint16_t entries. Vectors of F_p^n are
/// rows (std::vector<uint16_t>); a matrix acts on column vectors via apply().
class Matrix {
public:
    Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static Matrix identity(std::uint32_t p, std::size_t n);
    static Matrix from_rows(std::uint32_t p, std::size_t cols,
                            const std::vector<std::vector<std::uint16_t>>& rows);

    std::uint32_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint16_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint16_t v) { data_[r * cols_ + c] = v; }

    std::span<const std::uint16_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<std::uint16_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const std::uint16_t> v);

    Matrix transpose() const;
    Matrix multiply(const Matrix& other) const;

    /// y = M x for a column vector x of length cols().
    std::vector<std::uint16_t> apply(std::span<const std::uint16_t> x) const;

    /// Stack other's rows below this matrix (same modulus and column count).
    Matrix stacked(const Matrix& other) const;

    bool operator==(const Matrix& other) const = default;

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint16_t> data_;
};

struct EchelonForm {
    Matrix mat;                       // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column per row, strictly increasing
};

/// Unique reduced row-echelon form; row space is unchanged. Uses a bit-packed
/// elimination for p = 2 and uint16 arithmetic otherwise.
EchelonForm rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One solution x of A x = b, or nullopt when inconsistent.
std::optional<std::vector<std::uint16_t>> solve(const Matrix& a,
                                                std::span<const std::uint16_t> b);

} // namespace ukoszul

#endif
