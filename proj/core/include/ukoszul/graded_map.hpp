#ifndef UKOSZUL_GRADED_MAP_HPP
#define UKOSZUL_GRADED_MAP_HPP

#include "ukoszul/model.hpp"

namespace ukoszul {

/// Map of graded algebras determined by its degree-1 matrix. Construction
/// checks that the tensor square carries the source relations into the
/// target relations, so the induced maps on every A_d are well defined.
/// Matrices for all degrees up to min(cap, cap) are precomputed; instances
/// are immutable and cheap to copy.
class GradedMap {
public:
    GradedMap(ModelPtr source, ModelPtr target, Matrix degree1);

    static GradedMap identity(ModelPtr model);

    const ModelPtr& source() const { return source_; }
    const ModelPtr& target() const { return target_; }
    const Matrix& degree1_matrix() const { return degree_matrices_[1]; }

    /// Largest degree on which the map is defined.
    std::size_t max_degree() const { return degree_matrices_.size() - 1; }

    /// Matrix of the induced map A_d(source) -> A_d(target) in the models'
    /// chosen bases.
    const Matrix& matrix_on_degree(std::size_t d) const { return degree_matrices_.at(d); }

    GradedElement apply(const GradedElement& a) const;

private:
    ModelPtr source_;
    ModelPtr target_;
    std::vector<Matrix> degree_matrices_;
};

inline GradedElement apply_map(const GradedMap& f, const GradedElement& a) {
    return f.apply(a);
}

/// g after f; requires f's target model to be g's source model.
GradedMap compose(const GradedMap& g, const GradedMap& f);

} // namespace ukoszul

#endif
