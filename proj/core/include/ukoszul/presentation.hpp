#ifndef UKOSZUL_PRESENTATION_HPP
#define UKOSZUL_PRESENTATION_HPP

#include "ukoszul/subspace.hpp"

#include <random>
#include <string>
#include <vector>

namespace ukoszul {

/// Tensor coordinate of x_i ⊗ x_j inside F_p^{n²}.
inline std::size_t tensor_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * n + j;
}

/// A quadratic presentation: n degree-1 generators over F_p and a relation
/// subspace R ⊆ F_p^{n²} in tensor coordinates.
struct QuadraticPresentation {
    std::uint32_t p;
    std::vector<std::string> gen_labels;
    Subspace relations;

    QuadraticPresentation(std::uint32_t p, std::vector<std::string> gen_labels,
                          Subspace relations);

    std::size_t n() const { return gen_labels.size(); }

    bool operator==(const QuadraticPresentation& other) const = default;
};

/// Default generator labels x1..xn.
std::vector<std::string> default_labels(std::size_t n);

/// Relations every graded-commutative algebra must contain: commutators
/// x_i⊗x_j + x_j⊗x_i for i < j, plus squares x_i⊗x_i when p is odd. Squares
/// are not forced mod 2.
Subspace graded_commutative_canonical_relations(std::size_t n, std::uint32_t p);

/// True iff the canonical graded-commutative relations lie inside R.
bool is_graded_commutative(const QuadraticPresentation& pres);

/// Presentation whose relation space is the kernel of a (1,1)-degree cup
/// product matrix F_p^{n²} -> F_p^m.
QuadraticPresentation presentation_from_cup(std::uint32_t p, std::size_t n, const Matrix& cup);

/// Symmetric-algebra presentation: relations x_i⊗x_j − x_j⊗x_i for i < j.
QuadraticPresentation polynomial_presentation(std::size_t n, std::uint32_t p);

/// Seeded random graded-commutative presentation: draws a relation subspace
/// containing the canonical relations, with dimension uniform over the
/// possible range.
QuadraticPresentation random_presentation(std::size_t n, std::uint32_t p, std::mt19937_64& rng);

} // namespace ukoszul

#endif
