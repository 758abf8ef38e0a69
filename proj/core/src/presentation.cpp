#include "ukoszul/presentation.hpp"

#include <set>
#include <stdexcept>

namespace ukoszul {

QuadraticPresentation::QuadraticPresentation(std::uint32_t p_, std::vector<std::string> gen_labels_,
                                             Subspace relations_)
    : p(p_), gen_labels(std::move(gen_labels_)), relations(std::move(relations_)) {
    fp::require_prime(p);
    const std::size_t count = gen_labels.size();
    std::set<std::string> distinct(gen_labels.begin(), gen_labels.end());
    if (distinct.size() != count)
        throw std::invalid_argument("generator labels must be distinct");
    if (relations.modulus() != p)
        throw std::invalid_argument("relation subspace modulus does not match p");
    if (relations.ambient() != count * count)
        throw std::invalid_argument("relation subspace must live in F_p^{n^2}");
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("x" + std::to_string(i));
    return labels;
}

Subspace graded_commutative_canonical_relations(std::size_t n, std::uint32_t p) {
    fp::require_prime(p);
    Matrix rows(p, 0, n * n);
    std::vector<std::uint16_t> row(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::fill(row.begin(), row.end(), 0);
            row[tensor_index(n, i, j)] = 1;
            row[tensor_index(n, j, i)] = 1;
            rows.append_row(row);
        }
    }
    if (p != 2) {
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(row.begin(), row.end(), 0);
            row[tensor_index(n, i, i)] = 1;
            rows.append_row(row);
        }
    }
    return Subspace::span_of(rows);
}

bool is_graded_commutative(const QuadraticPresentation& pres) {
    const auto canonical = graded_commutative_canonical_relations(pres.n(), pres.p);
    return pres.relations.contains(canonical);
}

QuadraticPresentation presentation_from_cup(std::uint32_t p, std::size_t n, const Matrix& cup) {
    if (cup.cols() != n * n)
        throw std::invalid_argument("cup matrix must have n^2 columns");
    if (cup.modulus() != p)
        throw std::invalid_argument("cup matrix modulus does not match p");
    return QuadraticPresentation(p, default_labels(n), kernel(cup));
}

QuadraticPresentation polynomial_presentation(std::size_t n, std::uint32_t p) {
    fp::require_prime(p);
    Matrix rows(p, 0, n * n);
    std::vector<std::uint16_t> row(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::fill(row.begin(), row.end(), 0);
            row[tensor_index(n, i, j)] = 1;
            row[tensor_index(n, j, i)] = fp::neg(p, 1);
            rows.append_row(row);
        }
    }
    return QuadraticPresentation(p, default_labels(n), Subspace::span_of(rows));
}

QuadraticPresentation random_presentation(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
    fp::require_prime(p);
    const auto canonical = graded_commutative_canonical_relations(n, p);
    const std::size_t ambient = n * n;
    const std::size_t base = canonical.dim();
    std::uniform_int_distribution<std::size_t> extra_dist(0, ambient - base);
    const std::size_t target = base + extra_dist(rng);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);

    Matrix rows = canonical.basis();
    Subspace span = canonical;
    std::vector<std::uint16_t> row(ambient, 0);
    while (span.dim() < target) {
        for (auto& c : row)
            c = static_cast<std::uint16_t>(coeff(rng));
        if (span.reduce(row) == std::vector<std::uint16_t>(ambient, 0))
            continue;
        rows.append_row(row);
        span = Subspace::span_of(rows);
    }
    return QuadraticPresentation(p, default_labels(n), span);
}

} // namespace ukoszul
