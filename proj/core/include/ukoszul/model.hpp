#ifndef UKOSZUL_MODEL_HPP
#define UKOSZUL_MODEL_HPP

#include "ukoszul/presentation.hpp"

#include <memory>
#include <optional>
#include <span>

namespace ukoszul {

/// Largest tensor dimension n^cap a model build will attempt by default.
inline constexpr std::size_t kDefaultTensorBudget = 4096;

/// Homogeneous element, stored in the coordinates of the owning model's
/// degree-`degree` basis.
struct GradedElement {
    std::size_t degree;
    std::vector<std::uint16_t> coords;

    bool operator==(const GradedElement& other) const = default;
};

/// Degreewise model of A = T(V)/<R> through a fixed cap. Each A_d is
/// realized as F_p^{n^d}/K_d where K_d is the degree-d slice of the
/// two-sided ideal, computed by the recursion
///   K_d = (K_{d-1} (x) V) + (V^{(x)(d-2)} (x) R).
/// Coordinates on A_d are the entries at the pivot-complement columns of
/// K_d (a monomial basis). Immutable after construction.
class GradedAlgebraModel {
public:
    const QuadraticPresentation& presentation() const { return pres_; }
    std::uint32_t p() const { return pres_.p; }
    std::size_t n() const { return pres_.n(); }
    std::size_t cap() const { return cap_; }

    const std::vector<std::size_t>& piece_dims() const { return piece_dims_; }
    std::size_t dim(std::size_t d) const { return piece_dims_.at(d); }

    /// K_d as a subspace of F_p^{n^d}; zero for d < 2.
    const Subspace& kernel_space(std::size_t d) const { return kernels_.at(d); }

    std::size_t tensor_dim(std::size_t d) const;

    /// Section A_d -> V^{(x)d}: place coordinates at the pivot-complement
    /// columns of K_d, zero elsewhere.
    std::vector<std::uint16_t> lift(std::size_t d, std::span<const std::uint16_t> coords) const;

    /// Quotient map V^{(x)d} -> A_d in the chosen coordinates.
    std::vector<std::uint16_t> reduce(std::size_t d, std::span<const std::uint16_t> tensor) const;

    /// Monomial word labels of the chosen basis of A_d.
    std::vector<std::string> basis_labels(std::size_t d) const;

    /// Least e <= cap with A_e = 0, if any. All higher pieces vanish too.
    std::optional<std::size_t> nilpotency_degree() const;

    GradedElement zero(std::size_t d) const { return {d, std::vector<std::uint16_t>(dim(d), 0)}; }
    GradedElement unit() const { return {0, {1}}; }

private:
    friend std::shared_ptr<const GradedAlgebraModel>
    build_model(QuadraticPresentation pres, std::size_t cap, std::size_t tensor_budget);

    GradedAlgebraModel(QuadraticPresentation pres, std::size_t cap, std::size_t tensor_budget);

    QuadraticPresentation pres_;
    std::size_t cap_;
    std::vector<Subspace> kernels_;
    std::vector<std::size_t> piece_dims_;
};

using ModelPtr = std::shared_ptr<const GradedAlgebraModel>;

/// Build the degreewise model. Requires cap >= 2 and n^cap within the
/// tensor budget; throws budget_error naming the required budget otherwise.
ModelPtr build_model(QuadraticPresentation pres, std::size_t cap,
                     std::size_t tensor_budget = kDefaultTensorBudget);

/// Product in A: lift both factors, tensor, reduce.
GradedElement multiply(const GradedAlgebraModel& model, const GradedElement& a,
                       const GradedElement& b);

std::vector<std::size_t> hilbert_dims(const GradedAlgebraModel& model);

/// Matrix of (-)*x : A_d -> A_{d+1} for x given in A_1 coordinates.
Matrix right_multiplication_matrix(const GradedAlgebraModel& model, std::size_t d,
                                   std::span<const std::uint16_t> x);

} // namespace ukoszul

#endif
