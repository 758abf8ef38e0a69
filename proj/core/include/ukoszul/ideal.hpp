#ifndef UKOSZUL_IDEAL_HPP
#define UKOSZUL_IDEAL_HPP

#include "ukoszul/model.hpp"

namespace ukoszul {

/// Left ideal I = A I_1 generated by a subspace I_1 of A_1, stored as its
/// graded components I_d through the model cap. Never contains 1, so
/// components[0] is always zero.
struct DegreeOneIdeal {
    ModelPtr model;
    std::vector<Subspace> components;

    const Subspace& gen_space() const { return components[1]; }
    const Subspace& operator[](std::size_t d) const { return components.at(d); }
};

DegreeOneIdeal ideal_from_degree_one(ModelPtr model, const Subspace& i1);

/// Colon components (I:x)_d and the generated-in-degree-1 verdict. The
/// witness, when present, lies in (I:x)_degree but not in the ideal
/// generated by (I:x)_1.
struct ColonResult {
    std::vector<Subspace> components;

    struct Failure {
        std::size_t degree;
        GradedElement witness;

        bool operator==(const Failure& other) const = default;
    };
    std::optional<Failure> failure;
    std::size_t checked_up_to;

    bool generated_in_degree_one() const { return !failure.has_value(); }

    bool operator==(const ColonResult& other) const = default;
};

/// Left colon ideal I : x = {a | a x in I}, computed degreewise as the
/// preimage of I_{d+1} under right multiplication by x, for d <= up_to.
/// Requires x of degree 1 with x not in I_1 and up_to < model cap.
ColonResult colon(const DegreeOneIdeal& ideal, const GradedElement& x, std::size_t up_to);

} // namespace ukoszul

#endif
