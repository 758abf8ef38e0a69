#ifndef UKOSZUL_UK_HPP
#define UKOSZUL_UK_HPP

#include "ukoszul/ideal.hpp"

namespace ukoszul {

enum class UKVerdict { UK_Complete, UK_UpToCap, NotUK };

const char* to_string(UKVerdict v);

struct UKStrategy {
    enum class Kind { Exhaustive, Randomized };
    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;

    static UKStrategy exhaustive() { return {}; }
    static UKStrategy randomized(std::uint64_t seed, std::size_t samples = 1000) {
        return {Kind::Randomized, seed, samples};
    }

    bool operator==(const UKStrategy& other) const = default;
};

struct UKCounterexample {
    Subspace i1;
    GradedElement x;
    ColonResult colon;

    bool operator==(const UKCounterexample& other) const = default;
};

struct UKReport {
    UKVerdict verdict;
    std::uint64_t checked_pairs;
    std::optional<UKCounterexample> counterexample;
    UKStrategy strategy;
    std::size_t build_cap;
    std::size_t colon_cap;
    /// Metadata: ideals here are two-sided when the presentation is
    /// graded-commutative.
    bool two_sided;
    std::optional<std::size_t> nilpotency_degree;

    bool passed() const { return verdict != UKVerdict::NotUK; }

    bool operator==(const UKReport& other) const = default;
};

/// Decide universal Koszulity through the caps: iterate I_1 over subspaces
/// of A_1 (all of them, or a seeded random sample) and x over lifted
/// representatives of the nonzero projective classes of A_1 / I_1, and test
/// that each colon ideal I : x is generated in degree 1 up to colon_cap.
/// First failure in canonical order is returned as the counterexample, so
/// reports do not depend on `jobs`. Verdict is UK_Complete only when the
/// model vanishes at some degree e <= cap and colon_cap >= e - 1; otherwise
/// a clean pass is UK_UpToCap.
UKReport check_universal_koszul(ModelPtr model, const UKStrategy& strategy,
                                std::size_t colon_cap, std::size_t jobs = 1,
                                std::uint64_t subspace_budget = kDefaultSubspaceBudget);

/// Re-check a counterexample from first principles: witness is nonzero,
/// witness * x lies in I_{d+1}, and witness is outside the ideal generated
/// by (I:x)_1 in degree d.
bool verify_witness(ModelPtr model, const Subspace& i1, const GradedElement& x,
                    const GradedElement& witness);

/// Representatives of the nonzero projective classes of A_1 / I_1, lifted to
/// vectors of A_1 outside I_1 (zero at the pivots of I_1), in canonical
/// order. Each class representative has leading quotient coordinate 1.
std::vector<GradedElement> colon_divisor_representatives(const GradedAlgebraModel& model,
                                                         const Subspace& i1);

} // namespace ukoszul

#endif
