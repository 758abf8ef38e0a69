#ifndef UKOSZUL_SUBALGEBRA_HPP
#define UKOSZUL_SUBALGEBRA_HPP

#include "ukoszul/graded_map.hpp"
#include "ukoszul/uk.hpp"

namespace ukoszul {

/// B_W: the subalgebra of the parent generated by W <= A_1, presented on a
/// basis of W with relation space R_parent intersected with W (x) W.
struct CanonicalSubalgebra {
    ModelPtr parent;
    Subspace w;
    ModelPtr induced;
    GradedMap embedding;

    const QuadraticPresentation& induced_presentation() const { return induced->presentation(); }
};

CanonicalSubalgebra canonical_subalgebra(ModelPtr model, const Subspace& w,
                                         std::size_t tensor_budget = kDefaultTensorBudget);

/// Outcome of the compatibility hypothesis R_C = R_W (+) R_U with
/// C_1 = W (+) U. When the relation clause fails, the first relation with
/// mixed support is returned together with its three components in the
/// basis adapted to the direct sum.
struct SplitCheck {
    bool direct_sum;
    bool relations_split;

    struct MixedWitness {
        std::vector<std::uint16_t> relation;
        std::vector<std::uint16_t> ww_part;
        std::vector<std::uint16_t> uu_part;
        std::vector<std::uint16_t> mixed_part;
    };
    std::optional<MixedWitness> witness;

    bool ok() const { return direct_sum && relations_split; }
};

SplitCheck check_split_relations(ModelPtr model, const Subspace& w, const Subspace& u);

/// descend_uk outcome: the split hypothesis, the parent's report (the
/// justification), the direct check of D = B_W, and whether the two verdicts
/// agree.
struct DescentReport {
    SplitCheck split;
    UKReport parent_report;
    UKReport direct_report;
    bool agree;
};

class descent_error : public std::runtime_error {
public:
    descent_error(const std::string& what, std::optional<SplitCheck> split = std::nullopt)
        : std::runtime_error(what), split_(std::move(split)) {}
    const std::optional<SplitCheck>& split() const { return split_; }

private:
    std::optional<SplitCheck> split_;
};

/// Descend universal Koszulity from C to D = B_W along the split-relation
/// hypothesis: refuses (descent_error) when the hypothesis fails or when C
/// itself is not UK, otherwise reports the descended verdict together with
/// an independent direct check of D.
DescentReport descend_uk(ModelPtr model, const Subspace& w, const Subspace& u,
                         const UKStrategy& strategy, std::size_t colon_cap, std::size_t jobs = 1);

/// Filtered family of subspaces of A_1. order lists every containment
/// W_i <= W_j; certificates[{i,j}] is an item index k with W_i + W_j <= W_k,
/// absent when the family has no internal upper bound for the pair.
struct FilteredSystem {
    ModelPtr model;
    std::vector<Subspace> items;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    std::vector<std::vector<std::optional<std::size_t>>> certificates;

    std::optional<std::size_t> certificate(std::size_t i, std::size_t j) const {
        return certificates[i][j];
    }
    bool directed() const;
};

/// Build a filtered system from a family. With close_under_sums the family
/// is saturated under pairwise sums to a fixpoint (budgeted); otherwise only
/// the given items are used and certificates are filled in where some given
/// item already contains a pairwise sum.
FilteredSystem build_filtered_system(ModelPtr model, const std::vector<Subspace>& family,
                                     bool close_under_sums,
                                     std::uint64_t budget = kDefaultSubspaceBudget);

enum class AUKCondition { I, II, III, IV };

const char* to_string(AUKCondition c);

struct AUKFailure {
    AUKCondition condition;
    std::string detail;
    std::optional<std::size_t> item;
    std::optional<std::pair<std::size_t, std::size_t>> missing_pair;
    std::optional<std::size_t> degree;
    std::optional<std::vector<std::uint16_t>> witness;
};

struct AUKCoverage {
    std::size_t degree;
    std::size_t union_dim;
    std::size_t ambient_dim;
};

struct AUKReport {
    bool verified;
    std::size_t verified_up_to;
    std::optional<AUKFailure> failure;
    std::vector<Subspace> item_subspaces;
    std::vector<UKReport> item_reports;
    std::vector<std::vector<std::size_t>> item_dims;
    std::vector<AUKCoverage> coverage;

    bool passed() const { return verified; }
};

/// Asymptotic universal Koszulity of the model along the system, checked in
/// the order (i) finite type, (ii) per-item UK, (iii) degreewise union
/// equality plus directedness, (iv) coverage of A_1 by an item.
AUKReport check_asymptotic_uk(ModelPtr model, const FilteredSystem& system, std::size_t colon_cap,
                              std::size_t union_cap, const UKStrategy& strategy = UKStrategy::exhaustive(),
                              std::size_t jobs = 1,
                              std::uint64_t subspace_budget = kDefaultSubspaceBudget);

} // namespace ukoszul

#endif
