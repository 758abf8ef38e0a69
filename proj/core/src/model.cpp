#include "ukoszul/model.hpp"

#include <stdexcept>

namespace ukoszul {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
    constexpr std::size_t kMax = static_cast<std::size_t>(-1);
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > kMax / base)
            return kMax;
        r *= base;
    }
    return r;
}

} // namespace

GradedAlgebraModel::GradedAlgebraModel(QuadraticPresentation pres, std::size_t cap,
                                       std::size_t tensor_budget)
    : pres_(std::move(pres)), cap_(cap) {
    if (cap_ < 2)
        throw std::invalid_argument("model cap must be at least 2");
    const std::size_t n = pres_.n();
    const std::uint32_t p = pres_.p;
    const std::size_t top = checked_pow(n, cap_);
    if (top > tensor_budget)
        throw budget_error("tensor dimension n^cap exceeds budget: required " +
                               std::to_string(top),
                           top);

    kernels_.reserve(cap_ + 1);
    kernels_.emplace_back(p, 1);
    kernels_.emplace_back(p, n);
    kernels_.push_back(pres_.relations);
    std::size_t dim_prev = n * n;
    std::size_t words = n; // n^{d-2}
    for (std::size_t d = 3; d <= cap_; ++d) {
        const std::size_t dim_d = dim_prev * n;
        const Matrix& prev = kernels_[d - 1].basis();
        const Matrix& rel = pres_.relations.basis();
        Matrix gens(p, 0, dim_d);
        std::vector<std::uint16_t> row(dim_d, 0);
        for (std::size_t r = 0; r < prev.rows(); ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                std::fill(row.begin(), row.end(), 0);
                for (std::size_t u = 0; u < dim_prev; ++u)
                    row[u * n + j] = prev.at(r, u);
                gens.append_row(row);
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            for (std::size_t r = 0; r < rel.rows(); ++r) {
                std::fill(row.begin(), row.end(), 0);
                for (std::size_t u = 0; u < n * n; ++u)
                    row[w * n * n + u] = rel.at(r, u);
                gens.append_row(row);
            }
        }
        kernels_.push_back(Subspace::span_of(gens));
        dim_prev = dim_d;
        words *= n;
    }

    piece_dims_.reserve(cap_ + 1);
    std::size_t nd = 1;
    for (std::size_t d = 0; d <= cap_; ++d) {
        piece_dims_.push_back(nd - kernels_[d].dim());
        nd *= n;
    }
}

std::size_t GradedAlgebraModel::tensor_dim(std::size_t d) const {
    std::size_t r = 1;
    for (std::size_t i = 0; i < d; ++i)
        r *= n();
    return r;
}

std::vector<std::uint16_t> GradedAlgebraModel::lift(std::size_t d,
                                                    std::span<const std::uint16_t> coords) const {
    if (coords.size() != dim(d))
        throw std::invalid_argument("coordinate length does not match piece dimension");
    std::vector<std::uint16_t> out(tensor_dim(d), 0);
    const auto& free_cols = kernels_[d].complement_columns();
    for (std::size_t i = 0; i < coords.size(); ++i)
        out[free_cols[i]] = coords[i];
    return out;
}

std::vector<std::uint16_t> GradedAlgebraModel::reduce(std::size_t d,
                                                      std::span<const std::uint16_t> tensor) const {
    const auto reduced = kernels_[d].reduce(tensor);
    const auto& free_cols = kernels_[d].complement_columns();
    std::vector<std::uint16_t> out;
    out.reserve(free_cols.size());
    for (std::size_t c : free_cols)
        out.push_back(reduced[c]);
    return out;
}

std::vector<std::string> GradedAlgebraModel::basis_labels(std::size_t d) const {
    std::vector<std::string> labels;
    if (d == 0) {
        labels.push_back("1");
        return labels;
    }
    const auto& free_cols = kernels_[d].complement_columns();
    labels.reserve(free_cols.size());
    for (std::size_t word : free_cols) {
        std::vector<std::size_t> letters(d);
        std::size_t w = word;
        for (std::size_t k = d; k-- > 0;) {
            letters[k] = w % n();
            w /= n();
        }
        std::string label = pres_.gen_labels[letters[0]];
        for (std::size_t k = 1; k < d; ++k) {
            label += '*';
            label += pres_.gen_labels[letters[k]];
        }
        labels.push_back(std::move(label));
    }
    return labels;
}

std::optional<std::size_t> GradedAlgebraModel::nilpotency_degree() const {
    for (std::size_t d = 0; d <= cap_; ++d)
        if (piece_dims_[d] == 0)
            return d;
    return std::nullopt;
}

ModelPtr build_model(QuadraticPresentation pres, std::size_t cap, std::size_t tensor_budget) {
    return std::shared_ptr<const GradedAlgebraModel>(
        new GradedAlgebraModel(std::move(pres), cap, tensor_budget));
}

GradedElement multiply(const GradedAlgebraModel& model, const GradedElement& a,
                       const GradedElement& b) {
    const std::size_t d = a.degree + b.degree;
    if (d > model.cap())
        throw std::invalid_argument("product degree exceeds model cap");
    const auto ta = model.lift(a.degree, a.coords);
    const auto tb = model.lift(b.degree, b.coords);
    const std::uint32_t p = model.p();
    std::vector<std::uint16_t> prod(ta.size() * tb.size(), 0);
    for (std::size_t u = 0; u < ta.size(); ++u) {
        if (ta[u] == 0)
            continue;
        for (std::size_t v = 0; v < tb.size(); ++v)
            prod[u * tb.size() + v] = fp::mul(p, ta[u], tb[v]);
    }
    return {d, model.reduce(d, prod)};
}

std::vector<std::size_t> hilbert_dims(const GradedAlgebraModel& model) {
    return model.piece_dims();
}

Matrix right_multiplication_matrix(const GradedAlgebraModel& model, std::size_t d,
                                   std::span<const std::uint16_t> x) {
    if (d + 1 > model.cap())
        throw std::invalid_argument("multiplication target degree exceeds model cap");
    if (x.size() != model.n())
        throw std::invalid_argument("x must be given in A_1 coordinates");
    const std::size_t cols = model.dim(d);
    const std::size_t rows = model.dim(d + 1);
    Matrix m(model.p(), rows, cols);
    std::vector<std::uint16_t> basis_vec(cols, 0);
    for (std::size_t k = 0; k < cols; ++k) {
        std::fill(basis_vec.begin(), basis_vec.end(), 0);
        basis_vec[k] = 1;
        const GradedElement img =
            multiply(model, {d, basis_vec}, {1, std::vector<std::uint16_t>(x.begin(), x.end())});
        for (std::size_t r = 0; r < rows; ++r)
            m.set(r, k, img.coords[r]);
    }
    return m;
}

} // namespace ukoszul
