#include "ukoszul/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ukoszul {

DegreeOneIdeal ideal_from_degree_one(ModelPtr model, const Subspace& i1) {
    if (i1.ambient() != model->n() || i1.modulus() != model->p())
        throw std::invalid_argument("I_1 must be a subspace of A_1");
    const std::uint32_t p = model->p();
    std::vector<Subspace> components;
    components.reserve(model->cap() + 1);
    components.emplace_back(p, 1);
    components.push_back(i1);
    for (std::size_t d = 2; d <= model->cap(); ++d) {
        // I_d = A_{d-1} I_1: sum of the images of right multiplication by
        // each generator of I_1.
        Subspace acc(p, model->dim(d));
        for (std::size_t r = 0; r < i1.dim(); ++r) {
            const Matrix m = right_multiplication_matrix(*model, d - 1, i1.basis().row(r));
            acc = sum(acc, image(m));
        }
        components.push_back(std::move(acc));
    }
    return {std::move(model), std::move(components)};
}

ColonResult colon(const DegreeOneIdeal& ideal, const GradedElement& x, std::size_t up_to) {
    const ModelPtr& model = ideal.model;
    if (x.degree != 1)
        throw std::invalid_argument("colon divisor must have degree 1");
    const bool zero =
        std::all_of(x.coords.begin(), x.coords.end(), [](std::uint16_t c) { return c == 0; });
    if (zero)
        throw std::invalid_argument("colon divisor must be nonzero");
    if (ideal.gen_space().contains(x.coords))
        throw std::invalid_argument("colon divisor must lie outside I_1");
    if (up_to + 1 > model->cap())
        throw std::invalid_argument("colon degree bound exceeds model cap");

    const std::uint32_t p = model->p();
    ColonResult result;
    result.checked_up_to = up_to;
    result.components.reserve(up_to + 1);
    // (I:x)_0 = 0: a scalar c has c x in I_1 only for c = 0 since x is outside I_1.
    result.components.emplace_back(p, 1);
    for (std::size_t d = 1; d <= up_to; ++d) {
        const Matrix mx = right_multiplication_matrix(*model, d, x.coords);
        result.components.push_back(preimage(mx, ideal[d + 1]));
    }

    // Compare against the ideal generated by (I:x)_1, degree by degree.
    const DegreeOneIdeal generated = ideal_from_degree_one(model, result.components[1]);
    for (std::size_t d = 2; d <= up_to; ++d) {
        const Subspace& have = result.components[d];
        const Subspace& gen = generated[d];
        if (gen == have)
            continue;
        for (std::size_t r = 0; r < have.dim(); ++r) {
            const auto row = have.basis().row(r);
            if (!gen.contains(row)) {
                result.failure = ColonResult::Failure{
                    d, GradedElement{d, std::vector<std::uint16_t>(row.begin(), row.end())}};
                break;
            }
        }
        break;
    }
    return result;
}

} // namespace ukoszul
