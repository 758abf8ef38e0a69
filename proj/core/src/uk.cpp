#include "ukoszul/uk.hpp"

#include "ukoszul/parallel.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace ukoszul {

const char* to_string(UKVerdict v) {
    switch (v) {
    case UKVerdict::UK_Complete: return "UK_Complete";
    case UKVerdict::UK_UpToCap: return "UK_UpToCap";
    case UKVerdict::NotUK: return "NotUK";
    }
    return "?";
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// (p^q - 1) / (p - 1): number of projective classes of F_p^q.
std::uint64_t projective_class_count(std::uint32_t p, std::size_t q) {
    return q == 0 ? 0 : (pow_u64(p, q) - 1) / (p - 1);
}

} // namespace

std::vector<GradedElement> colon_divisor_representatives(const GradedAlgebraModel& model,
                                                         const Subspace& i1) {
    const std::uint32_t p = model.p();
    const std::size_t n = model.n();
    const auto free_cols = i1.complement_columns();
    const std::size_t q = free_cols.size();
    std::vector<GradedElement> reps;
    if (q == 0)
        return reps;
    reps.reserve(projective_class_count(p, q));
    std::vector<std::uint16_t> digits(q, 0);
    const std::uint64_t total = pow_u64(p, q);
    for (std::uint64_t w = 1; w < total; ++w) {
        std::uint64_t v = w;
        for (std::size_t i = q; i-- > 0;) {
            digits[i] = static_cast<std::uint16_t>(v % p);
            v /= p;
        }
        std::uint16_t lead = 0;
        for (std::size_t i = 0; i < q; ++i)
            if (digits[i] != 0) {
                lead = digits[i];
                break;
            }
        if (lead != 1)
            continue;
        std::vector<std::uint16_t> x(n, 0);
        for (std::size_t i = 0; i < q; ++i)
            x[free_cols[i]] = digits[i];
        reps.push_back(GradedElement{1, std::move(x)});
    }
    return reps;
}

namespace {

struct FirstFailure {
    std::mutex mu;
    std::atomic<std::uint64_t> best_index{std::numeric_limits<std::uint64_t>::max()};
    std::optional<UKCounterexample> data;

    void offer(std::uint64_t index, UKCounterexample ce) {
        std::lock_guard lock(mu);
        if (index < best_index.load(std::memory_order_relaxed)) {
            best_index.store(index, std::memory_order_relaxed);
            data = std::move(ce);
        }
    }
};

} // namespace

UKReport check_universal_koszul(ModelPtr model, const UKStrategy& strategy, std::size_t colon_cap,
                                std::size_t jobs, std::uint64_t subspace_budget) {
    if (colon_cap < 2)
        throw std::invalid_argument("colon cap must be at least 2");
    if (model->cap() < colon_cap + 1)
        throw std::invalid_argument("model cap must exceed the colon cap");

    const std::uint32_t p = model->p();
    const std::size_t n = model->n();

    std::vector<Subspace> pool;
    if (strategy.kind == UKStrategy::Kind::Exhaustive) {
        pool = all_subspaces(n, p, subspace_budget);
    } else {
        std::mt19937_64 rng(strategy.seed);
        pool.reserve(strategy.samples);
        for (std::size_t s = 0; s < strategy.samples; ++s)
            pool.push_back(random_subspace(n, p, rng));
    }

    // Global pair index = prefix[i] + ordinal of the x-class; the report is
    // a function of the minimal failing index, independent of scheduling.
    std::vector<std::uint64_t> prefix(pool.size() + 1, 0);
    for (std::size_t i = 0; i < pool.size(); ++i)
        prefix[i + 1] = prefix[i] + projective_class_count(p, n - pool[i].dim());
    const std::uint64_t total_pairs = prefix[pool.size()];

    FirstFailure first;
    parallel_for(pool.size(), jobs, [&](std::size_t i) {
        const Subspace& i1 = pool[i];
        const std::uint64_t base = prefix[i];
        if (base >= first.best_index.load(std::memory_order_relaxed))
            return;
        const auto reps = colon_divisor_representatives(*model, i1);
        if (reps.empty())
            return;
        const DegreeOneIdeal ideal = ideal_from_degree_one(model, i1);
        for (std::size_t c = 0; c < reps.size(); ++c) {
            const std::uint64_t g = base + c;
            if (g >= first.best_index.load(std::memory_order_relaxed))
                return;
            ColonResult cr = colon(ideal, reps[c], colon_cap);
            if (!cr.generated_in_degree_one())
                first.offer(g, UKCounterexample{i1, reps[c], std::move(cr)});
        }
    });

    UKReport report;
    report.strategy = strategy;
    report.build_cap = model->cap();
    report.colon_cap = colon_cap;
    report.two_sided = is_graded_commutative(model->presentation());
    report.nilpotency_degree = model->nilpotency_degree();
    if (first.data.has_value()) {
        report.verdict = UKVerdict::NotUK;
        report.checked_pairs = first.best_index.load() + 1;
        report.counterexample = std::move(first.data);
    } else {
        report.checked_pairs = total_pairs;
        const auto nil = report.nilpotency_degree;
        const bool complete = nil.has_value() && (*nil == 0 || colon_cap >= *nil - 1);
        report.verdict = complete ? UKVerdict::UK_Complete : UKVerdict::UK_UpToCap;
    }
    return report;
}

bool verify_witness(ModelPtr model, const Subspace& i1, const GradedElement& x,
                    const GradedElement& witness) {
    if (x.degree != 1 || witness.degree < 1 || witness.degree + 1 > model->cap())
        return false;
    const auto is_zero = [](const std::vector<std::uint16_t>& v) {
        return std::all_of(v.begin(), v.end(), [](std::uint16_t c) { return c == 0; });
    };
    if (is_zero(x.coords) || is_zero(witness.coords))
        return false;
    if (i1.ambient() != model->n() || i1.contains(x.coords))
        return false;

    const std::size_t d = witness.degree;
    const DegreeOneIdeal ideal = ideal_from_degree_one(model, i1);
    const Matrix mx = right_multiplication_matrix(*model, d, x.coords);
    const auto wx = mx.apply(witness.coords);
    if (!ideal[d + 1].contains(wx))
        return false;
    const Matrix m1 = right_multiplication_matrix(*model, 1, x.coords);
    const Subspace colon1 = preimage(m1, ideal[2]);
    const DegreeOneIdeal generated = ideal_from_degree_one(model, colon1);
    return !generated[d].contains(witness.coords);
}

} // namespace ukoszul
