#include "ukoszul/cohomology.hpp"
#include "ukoszul/subalgebra.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ukoszul;

namespace {

// dim ker(W (x) W -> A_2): columns are the multiplication images of the
// tensor-square basis of W.
std::size_t multiplication_kernel_dim(const GradedAlgebraModel& model, const Subspace& w) {
    const std::size_t k = w.dim();
    const std::size_t n = model.n();
    Matrix mult(model.p(), model.dim(2), k * k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            std::vector<std::uint16_t> t(n * n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    t[tensor_index(n, i, j)] =
                        fp::mul(model.p(), w.basis().at(a, i), w.basis().at(b, j));
            const auto img = model.reduce(2, t);
            for (std::size_t r = 0; r < img.size(); ++r)
                mult.set(r, a * k + b, img[r]);
        }
    }
    return kernel(mult).dim();
}

QuadraticPresentation anticommutator_free_presentation() {
    // F_2<a,b> / (aa, bb): squares vanish but a and b do not commute, so the
    // relation space splits along the coordinate lines.
    Matrix rows = Matrix::from_rows(2, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}});
    return QuadraticPresentation(2, {"a", "b"}, Subspace::span_of(rows));
}

} // namespace

TEST_CASE("canonical subalgebra relation dims match the kernel oracle") {
    auto ext = build_model(exterior_presentation(3, 2), 4);
    for (const auto& w : all_subspaces(3, 2)) {
        const auto sub = canonical_subalgebra(ext, w);
        CHECK(sub.w == w);
        CHECK(sub.induced_presentation().n() == w.dim());
        CHECK(sub.induced_presentation().relations.dim() == multiplication_kernel_dim(*ext, w));
    }
}

TEST_CASE("coordinate subalgebras of the exterior algebra are exterior") {
    auto ext = build_model(exterior_presentation(4, 2), 4);
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<std::vector<std::uint16_t>> gens;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::uint16_t> e(4, 0);
            e[i] = 1;
            gens.push_back(e);
        }
        const auto sub = canonical_subalgebra(ext, Subspace::span_of(2, 4, gens));
        CHECK(sub.induced_presentation().relations == exterior_presentation(k, 2).relations);
        std::vector<std::size_t> expected;
        for (std::size_t d = 0; d <= 4; ++d) {
            // Binomial coefficients C(k, d).
            std::size_t c = 1;
            for (std::size_t i = 0; i < d; ++i)
                c = c * (k >= i + 1 ? k - i : 0) / (i + 1);
            expected.push_back(d <= k ? c : 0);
        }
        CHECK(hilbert_dims(*sub.induced) == expected);
    }
}

TEST_CASE("embedding is injective and multiplicative") {
    auto ext = build_model(exterior_presentation(3, 2), 4);
    const Subspace w = Subspace::span_of(2, 3, {{1, 1, 0}, {0, 0, 1}});
    const auto sub = canonical_subalgebra(ext, w);
    const auto& emb = sub.embedding;
    for (std::size_t d = 1; d <= 4; ++d)
        CHECK(kernel(emb.matrix_on_degree(d)).dim() == 0);

    const GradedElement u{1, {1, 0}};
    const GradedElement v{1, {0, 1}};
    const auto lhs = apply_map(emb, multiply(*sub.induced, u, v));
    const auto rhs = multiply(*ext, apply_map(emb, u), apply_map(emb, v));
    CHECK(lhs == rhs);
}

TEST_CASE("split check accepts a genuinely split presentation") {
    auto model = build_model(anticommutator_free_presentation(), 4);
    const Subspace w = Subspace::span_of(2, 2, {{1, 0}});
    const Subspace u = Subspace::span_of(2, 2, {{0, 1}});
    const auto split = check_split_relations(model, w, u);
    CHECK(split.direct_sum);
    CHECK(split.relations_split);
    CHECK(split.ok());
    CHECK_FALSE(split.witness.has_value());
}

TEST_CASE("split check reports the mixed relation of the exterior plane") {
    auto ext = build_model(exterior_presentation(2, 2), 4);
    const Subspace w = Subspace::span_of(2, 2, {{1, 0}});
    const Subspace u = Subspace::span_of(2, 2, {{0, 1}});
    const auto split = check_split_relations(ext, w, u);
    CHECK(split.direct_sum);
    CHECK_FALSE(split.relations_split);
    REQUIRE(split.witness.has_value());
    const auto& mixed = *split.witness;
    CHECK(mixed.relation == std::vector<std::uint16_t>{0, 1, 1, 0});
    CHECK_FALSE(std::all_of(mixed.mixed_part.begin(), mixed.mixed_part.end(),
                            [](std::uint16_t c) { return c == 0; }));

    // Degenerate covers are rejected in the first clause.
    const auto overlap = check_split_relations(ext, w, w);
    CHECK_FALSE(overlap.direct_sum);
}

TEST_CASE("descent agrees with the direct check") {
    auto model = build_model(anticommutator_free_presentation(), 4);
    const Subspace w = Subspace::span_of(2, 2, {{1, 0}});
    const Subspace u = Subspace::span_of(2, 2, {{0, 1}});
    const auto report = descend_uk(model, w, u, UKStrategy::exhaustive(), 3);
    CHECK(report.split.ok());
    CHECK(report.parent_report.passed());
    CHECK(report.direct_report.passed());
    CHECK(report.agree);

    auto ext = build_model(exterior_presentation(2, 2), 4);
    try {
        descend_uk(ext, w, u, UKStrategy::exhaustive(), 3);
        FAIL("expected descent_error");
    } catch (const descent_error& e) {
        REQUIRE(e.split().has_value());
        CHECK_FALSE(e.split()->relations_split);
    }
}

TEST_CASE("filtered system saturation and certificates") {
    auto ext = build_model(exterior_presentation(3, 2), 4);
    std::vector<Subspace> lines;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::uint16_t> e(3, 0);
        e[i] = 1;
        lines.push_back(Subspace::span_of(2, 3, {e}));
    }

    const auto closed = build_filtered_system(ext, lines, true);
    CHECK(closed.items.size() == 7);
    CHECK(closed.directed());
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            const auto cert = closed.certificate(i, j);
            REQUIRE(cert.has_value());
            CHECK(closed.items[*cert].contains(sum(closed.items[i], closed.items[j])));
        }
    // Containment order includes reflexive pairs.
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(std::count(closed.order.begin(), closed.order.end(), std::make_pair(i, i)) == 1);

    const auto open = build_filtered_system(ext, lines, false);
    CHECK(open.items.size() == 3);
    CHECK_FALSE(open.directed());
    CHECK_FALSE(open.certificate(0, 1).has_value());

    try {
        build_filtered_system(ext, lines, true, 4);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.required() > 4);
    }
}

TEST_CASE("asymptotic UK verified on the coordinate family") {
    auto ext = build_model(exterior_presentation(3, 2), 4);
    std::vector<Subspace> lines;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::uint16_t> e(3, 0);
        e[i] = 1;
        lines.push_back(Subspace::span_of(2, 3, {e}));
    }
    const auto system = build_filtered_system(ext, lines, true);
    const auto report = check_asymptotic_uk(ext, system, 3, 4);
    CHECK(report.verified);
    CHECK(report.verified_up_to == 4);
    CHECK(report.item_reports.size() == 7);
    CHECK(report.item_subspaces.size() == 7);
    for (const auto& item : report.item_reports)
        CHECK(item.passed());
    for (const auto& cov : report.coverage)
        CHECK(cov.union_dim == cov.ambient_dim);
    // Finite directed family: the top item attains A_1.
    CHECK(std::any_of(report.item_subspaces.begin(), report.item_subspaces.end(),
                      [](const Subspace& s) { return s.dim() == s.ambient(); }));
}

TEST_CASE("asymptotic UK failure modes") {
    auto ext = build_model(exterior_presentation(3, 2), 4);
    std::vector<Subspace> lines;
    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<std::uint16_t> e(3, 0);
        e[i] = 1;
        lines.push_back(Subspace::span_of(2, 3, {e}));
    }

    // Two incomparable lines, not closed: directedness certificate missing.
    const auto open = build_filtered_system(ext, lines, false);
    const auto undirected = check_asymptotic_uk(ext, open, 3, 4);
    CHECK_FALSE(undirected.verified);
    REQUIRE(undirected.failure.has_value());
    CHECK(undirected.failure->condition == AUKCondition::III);
    CHECK(undirected.failure->missing_pair == std::make_pair<std::size_t, std::size_t>(0, 1));

    // A directed chain that never reaches the third coordinate: union gap.
    std::vector<Subspace> chain{lines[0], sum(lines[0], lines[1])};
    const auto chain_system = build_filtered_system(ext, chain, false);
    CHECK(chain_system.directed());
    const auto gap = check_asymptotic_uk(ext, chain_system, 3, 4);
    CHECK_FALSE(gap.verified);
    REQUIRE(gap.failure.has_value());
    CHECK(gap.failure->condition == AUKCondition::III);
    CHECK(gap.failure->degree == 1);
    REQUIRE(gap.failure->witness.has_value());
    CHECK(*gap.failure->witness == std::vector<std::uint16_t>{0, 0, 1});
}

TEST_CASE("asymptotic UK report is jobs-invariant") {
    auto ext = build_model(exterior_presentation(3, 2), 4);
    std::vector<Subspace> lines;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::uint16_t> e(3, 0);
        e[i] = 1;
        lines.push_back(Subspace::span_of(2, 3, {e}));
    }
    const auto system = build_filtered_system(ext, lines, true);
    const auto one = check_asymptotic_uk(ext, system, 3, 4, UKStrategy::exhaustive(), 1);
    const auto many = check_asymptotic_uk(ext, system, 3, 4, UKStrategy::exhaustive(), 8);
    CHECK(one.verified == many.verified);
    CHECK(one.item_subspaces == many.item_subspaces);
    CHECK(one.item_reports == many.item_reports);
    CHECK(one.item_dims == many.item_dims);
}
