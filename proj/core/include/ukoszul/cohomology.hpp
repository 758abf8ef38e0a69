#ifndef UKOSZUL_COHOMOLOGY_HPP
#define UKOSZUL_COHOMOLOGY_HPP

#include "ukoszul/subalgebra.hpp"

namespace ukoszul {

/// Exterior algebra on n generators: squares and commutators.
QuadraticPresentation exterior_presentation(std::size_t n, std::uint32_t p);

/// Cohomological dimension <= 1 surrogate: every quadratic product
/// vanishes, R = V (x) V.
QuadraticPresentation cd1_presentation(std::size_t n, std::uint32_t p);

/// Directed family of algebra maps into a common target, playing the role
/// of inflation from the cohomology of a tower of quotients.
struct InflationSystem {
    struct Transition {
        std::size_t from;
        std::size_t to;
        GradedMap map;
    };

    ModelPtr target;
    std::vector<GradedMap> items;        // item -> target
    std::vector<Transition> transitions; // order data: item -> item
};

/// Checks the order data: every transition triangle must commute in
/// degree 1 and every pair of items needs an upper bound reachable through
/// transitions. Throws std::invalid_argument("malformed system...") on a
/// non-commuting triangle.
void validate_inflation_system(const InflationSystem& system);

struct ColimitReport {
    enum class Stage { None, Generated, ItemInjectivity, Surjectivity, Directedness };

    bool ok;
    bool generated_in_degree_1;
    std::vector<bool> item_injective_low_degrees;
    std::vector<AUKCoverage> coverage;

    Stage failed_stage = Stage::None;
    std::optional<std::size_t> item;
    std::optional<std::size_t> degree;
    std::optional<std::vector<std::uint16_t>> witness;
    std::optional<std::pair<std::size_t, std::size_t>> missing_pair;
};

const char* to_string(ColimitReport::Stage s);

/// Low-degree colimit check: target generated in degree 1 up to cap, item
/// maps injective in degrees 1 and 2, images jointly surjective in every
/// degree <= cap, and the order directed so the colimit comparison is an
/// isomorphism in degrees <= 2.
ColimitReport check_colimit_low_degree(const InflationSystem& system, std::size_t cap);

class galois_error : public std::runtime_error {
public:
    galois_error(const std::string& hypothesis, const std::string& what)
        : std::runtime_error("hypothesis (" + hypothesis + "): " + what),
          hypothesis_(hypothesis) {}
    const std::string& hypothesis() const { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// Galois-flavored pipeline: run the low-degree colimit check, form the
/// degree-1 image W_i of every item, verify each item is isomorphic to
/// B_{W_i} as a quadratic algebra under the degree-1 identification, then
/// delegate to check_asymptotic_uk on the family of the W_i. Hypothesis
/// failures throw galois_error tagged (i)/(ii)/(iii).
AUKReport check_galois_pipeline(const InflationSystem& system, std::size_t colon_cap,
                                std::size_t union_cap,
                                const UKStrategy& strategy = UKStrategy::exhaustive(),
                                std::size_t jobs = 1);

enum class CaptureStage { Injectivity1, Injectivity2, ImageNeqBW, RelationsMismatch };

const char* to_string(CaptureStage s);

struct CaptureDims {
    std::size_t degree;
    std::size_t q_dim;
    std::size_t bw_dim;
    std::size_t image_dim;
};

struct CaptureReport {
    bool captured;
    std::optional<CaptureStage> failed_stage;
    Subspace w;
    std::vector<CaptureDims> dims;
    std::optional<std::vector<std::uint16_t>> witness;
    std::optional<std::size_t> witness_degree;

    bool passed() const { return captured; }
};

/// Quotient-capture check for pi_star : Q -> A: injectivity in degrees 1
/// and 2, image equal to B_W degreewise for W = pi_star(Q_1), and relation
/// spaces matching under the degree-1 identification.
CaptureReport check_quotient_capture(ModelPtr a_model, ModelPtr q_model, const GradedMap& pi_star,
                                     std::size_t cap);

/// One local-global datum: a subspace W of the global degree-1 piece, the
/// local restriction maps out of the global algebra, and optionally an
/// externally supplied presentation the induced B_W must match.
struct LocalGlobalDatum {
    Subspace w;
    std::vector<GradedMap> locals; // each: global A -> local model
    std::optional<QuadraticPresentation> b_w_target;
};

struct LocalGlobalDatumReport {
    bool joint_injective;
    std::optional<std::size_t> injectivity_degree;
    std::optional<std::vector<std::uint16_t>> injectivity_witness;
    UKReport image_uk;
    std::optional<bool> target_matches;

    bool passed() const { return joint_injective && image_uk.passed() &&
                                 target_matches.value_or(true); }
};

struct LocalGlobalReport {
    std::vector<LocalGlobalDatumReport> data;
    bool compatibility_ok;
    std::optional<std::string> compatibility_gap;
    std::optional<AUKReport> aggregate;
    bool ok;
};

/// Local-global criterion at the algebra level: per datum, joint
/// injectivity of the local maps on B_W and universal Koszulity of B_W;
/// across data, containment compatibility; and, when the family of W's is
/// directed as supplied, an aggregate asymptotic-UK conclusion.
LocalGlobalReport check_local_global(ModelPtr a_model, const std::vector<LocalGlobalDatum>& data,
                                     std::size_t colon_cap,
                                     const UKStrategy& strategy = UKStrategy::exhaustive(),
                                     std::size_t jobs = 1);

} // namespace ukoszul

#endif
