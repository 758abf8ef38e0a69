#ifndef UKOSZUL_SUBSPACE_HPP
#define UKOSZUL_SUBSPACE_HPP

#include "ukoszul/matrix.hpp"

#include <functional>
#include <random>

namespace ukoszul {

inline constexpr std::uint64_t kDefaultSubspaceBudget = 1'000'000;

/// A subspace of F_p^n held in reduced row-echelon form. The form is unique,
/// so equality of subspaces is equality of the stored bases.
class Subspace {
public:
    /// The zero subspace of F_p^ambient.
    Subspace(std::uint32_t p, std::size_t ambient);

    static Subspace span_of(const Matrix& generators);
    static Subspace span_of(std::uint32_t p, std::size_t ambient,
                            const std::vector<std::vector<std::uint16_t>>& generators);
    static Subspace full(std::uint32_t p, std::size_t ambient);

    std::uint32_t modulus() const { return basis_.modulus(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }

    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Ambient coordinates not used as pivots, ascending. They index a
    /// complement: quotient_coords() reads a vector's class in F^n / this.
    std::vector<std::size_t> complement_columns() const;

    bool contains(std::span<const std::uint16_t> v) const;
    bool contains(const Subspace& other) const;  // other ⊆ this

    /// v minus its projection onto the subspace; zero iff v is a member.
    std::vector<std::uint16_t> reduce(std::span<const std::uint16_t> v) const;

    /// reduce(v) restricted to complement_columns(); kernel is exactly this subspace.
    std::vector<std::uint16_t> quotient_coords(std::span<const std::uint16_t> v) const;

    /// Matrix of quotient_coords as a linear map F^n -> F^codim.
    Matrix quotient_map() const;

    bool operator==(const Subspace& other) const = default;

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;  // RREF, no zero rows
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

/// Null space {x : m x = 0}, canonical form. rank(m) + dim = cols(m).
Subspace kernel(const Matrix& m);

/// Column space of m as a subspace of F^rows.
Subspace image(const Matrix& m);

/// {x : m x ∈ target}.
Subspace preimage(const Matrix& m, const Subspace& target);

/// Total number of subspaces of F_p^n (sum of Gaussian binomials), saturating
/// at 2^64-1 on overflow.
std::uint64_t count_subspaces(std::size_t n, std::uint32_t p);

/// Gaussian binomial [n choose k]_p, saturating.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p);

/// Visit every subspace of F_p^n exactly once: rank ascending, then pivot
/// columns lexicographic, then free entries lexicographic. Throws budget_error
/// (naming the required budget) if the total count exceeds the budget.
void for_each_subspace(std::size_t n, std::uint32_t p, std::uint64_t budget,
                       const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(std::size_t n, std::uint32_t p,
                                    std::uint64_t budget = kDefaultSubspaceBudget);

/// Seeded sample: rank uniform, then pivot pattern uniform, then free entries
/// uniform. Not uniform over subspaces; intended for randomized search.
Subspace random_subspace(std::size_t n, std::uint32_t p, std::mt19937_64& rng);

} // namespace ukoszul

#endif
