#include "ukoszul/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ukoszul {

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    fp::require_prime(p);
}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(std::uint32_t p, std::size_t cols,
                         const std::vector<std::vector<std::uint16_t>>& rows) {
    Matrix m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch in Matrix::from_rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] >= p)
                throw std::invalid_argument("matrix entry not reduced mod p");
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

void Matrix::append_row(std::span<const std::uint16_t> v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::multiply(const Matrix& other) const {
    if (p_ != other.p_) throw std::invalid_argument("modulus mismatch in multiply");
    if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch in multiply");
    Matrix out(p_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint16_t a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                std::uint16_t prod = fp::mul(p_, a, other.at(k, j));
                out.set(i, j, fp::add(p_, out.at(i, j), prod));
            }
        }
    return out;
}

std::vector<std::uint16_t> Matrix::apply(std::span<const std::uint16_t> x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    std::vector<std::uint16_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += std::uint32_t(at(i, j)) * x[j] % p_;
            if (acc >= p_) acc -= p_;
        }
        y[i] = static_cast<std::uint16_t>(acc);
    }
    return y;
}

Matrix Matrix::stacked(const Matrix& other) const {
    if (p_ != other.p_ || cols_ != other.cols_)
        throw std::invalid_argument("stacked: shape or modulus mismatch");
    Matrix out(p_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + data_.size());
    return out;
}

namespace {

// Bit-packed elimination over F_2; rows are arrays of 64-bit words.
EchelonForm rref_f2(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m.at(r, c)) bits[r * words + c / 64] |= std::uint64_t(1) << (c % 64);

    auto test = [&](std::size_t r, std::size_t c) {
        return (bits[r * words + c / 64] >> (c % 64)) & 1;
    };
    auto xor_rows = [&](std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words; ++w) bits[dst * words + w] ^= bits[src * words + w];
    };

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t sel = lead;
        while (sel < rows && !test(sel, col)) ++sel;
        if (sel == rows) continue;
        if (sel != lead)
            for (std::size_t w = 0; w < words; ++w)
                std::swap(bits[sel * words + w], bits[lead * words + w]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != lead && test(r, col)) xor_rows(r, lead);
        pivots.push_back(col);
        ++lead;
    }

    Matrix out(2, pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (test(r, c)) out.set(r, c, 1);
    return {std::move(out), std::move(pivots)};
}

EchelonForm rref_generic(const Matrix& m) {
    const std::uint32_t p = m.modulus();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint16_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t sel = lead;
        while (sel < rows && a[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != lead)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(a[sel * cols + c], a[lead * cols + c]);
        std::uint16_t invp = fp::inv(p, a[lead * cols + col]);
        for (std::size_t c = col; c < cols; ++c)
            a[lead * cols + c] = fp::mul(p, a[lead * cols + c], invp);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead) continue;
            std::uint16_t f = a[r * cols + col];
            if (!f) continue;
            for (std::size_t c = col; c < cols; ++c) {
                std::uint16_t sub = fp::mul(p, f, a[lead * cols + c]);
                a[r * cols + c] = fp::sub(p, a[r * cols + c], sub);
            }
        }
        pivots.push_back(col);
        ++lead;
    }

    Matrix out(p, pivots.size(), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, a[r * cols + c]);
    return {std::move(out), std::move(pivots)};
}

} // namespace

EchelonForm rref(const Matrix& m) {
    return m.modulus() == 2 ? rref_f2(m) : rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<std::vector<std::uint16_t>> solve(const Matrix& a,
                                                std::span<const std::uint16_t> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: length mismatch");
    Matrix aug(a.modulus(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    EchelonForm e = rref(aug);
    std::vector<std::uint16_t> x(a.cols(), 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;  // pivot in the rhs column
        x[e.pivots[r]] = e.mat.at(r, a.cols());
    }
    return x;
}

} // namespace ukoszul
