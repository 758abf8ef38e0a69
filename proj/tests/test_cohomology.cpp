#include "ukoszul/cohomology.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ukoszul;

namespace {

Matrix coordinate_inclusion(std::uint32_t p, std::size_t target_n, std::size_t source_n) {
    Matrix m(p, target_n, source_n);
    for (std::size_t i = 0; i < source_n; ++i)
        m.set(i, i, 1);
    return m;
}

InflationSystem exterior_tower(std::size_t cap) {
    InflationSystem system;
    system.target = build_model(exterior_presentation(3, 2), cap);
    std::vector<ModelPtr> items;
    for (std::size_t k = 1; k <= 3; ++k) {
        items.push_back(build_model(exterior_presentation(k, 2), cap));
        system.items.emplace_back(items.back(), system.target, coordinate_inclusion(2, 3, k));
    }
    system.transitions.push_back({0, 1, GradedMap(items[0], items[1], coordinate_inclusion(2, 2, 1))});
    system.transitions.push_back({1, 2, GradedMap(items[1], items[2], coordinate_inclusion(2, 3, 2))});
    system.transitions.push_back({0, 2, GradedMap(items[0], items[2], coordinate_inclusion(2, 3, 1))});
    return system;
}

InflationSystem cd1_tower(std::size_t cap) {
    InflationSystem system;
    system.target = build_model(cd1_presentation(3, 2), cap);
    std::vector<ModelPtr> items;
    for (std::size_t k = 1; k <= 3; ++k) {
        items.push_back(build_model(cd1_presentation(k, 2), cap));
        system.items.emplace_back(items.back(), system.target, coordinate_inclusion(2, 3, k));
    }
    system.transitions.push_back({0, 1, GradedMap(items[0], items[1], coordinate_inclusion(2, 2, 1))});
    system.transitions.push_back({1, 2, GradedMap(items[1], items[2], coordinate_inclusion(2, 3, 2))});
    system.transitions.push_back({0, 2, GradedMap(items[0], items[2], coordinate_inclusion(2, 3, 1))});
    return system;
}

} // namespace

TEST_CASE("presentation families") {
    CHECK(exterior_presentation(3, 2).relations.dim() == 6);
    CHECK(exterior_presentation(2, 3).relations.dim() == 3);
    CHECK(cd1_presentation(2, 2).relations.dim() == 4);
    auto cd1 = build_model(cd1_presentation(4, 2), 3);
    CHECK(hilbert_dims(*cd1) == std::vector<std::size_t>{1, 4, 0, 0});
}

TEST_CASE("inflation system validation") {
    auto system = exterior_tower(4);
    CHECK_NOTHROW(validate_inflation_system(system));

    // Break the triangle 0 -> 1 -> 2 against 0 -> 2.
    auto broken = exterior_tower(4);
    Matrix wrong(2, 3, 1);
    wrong.set(1, 0, 1);  // x1 of the smallest item now lands on x2
    broken.transitions[2].map =
        GradedMap(broken.transitions[2].map.source(), broken.transitions[2].map.target(), wrong);
    CHECK_THROWS_AS(validate_inflation_system(broken), std::invalid_argument);

    auto dangling = exterior_tower(4);
    dangling.transitions[0].to = 9;
    CHECK_THROWS_AS(validate_inflation_system(dangling), std::invalid_argument);
}

TEST_CASE("colimit low degree checks pass on both towers") {
    for (auto* build : {&exterior_tower, &cd1_tower}) {
        const auto system = (*build)(4);
        const auto report = check_colimit_low_degree(system, 4);
        CHECK(report.ok);
        CHECK(report.generated_in_degree_1);
        CHECK(report.item_injective_low_degrees ==
              std::vector<bool>{true, true, true});
        CHECK(report.failed_stage == ColimitReport::Stage::None);
        for (const auto& cov : report.coverage)
            CHECK(cov.union_dim == cov.ambient_dim);
    }
}

TEST_CASE("colimit failure stages") {
    // Zero item map: fails injectivity in degree 1.
    {
        InflationSystem system;
        system.target = build_model(exterior_presentation(2, 2), 4);
        auto item = build_model(exterior_presentation(2, 2), 4);
        system.items.emplace_back(item, system.target, Matrix(2, 2, 2));
        system.items.emplace_back(item, system.target, coordinate_inclusion(2, 2, 2));
        const auto report = check_colimit_low_degree(system, 4);
        CHECK_FALSE(report.ok);
        CHECK(report.failed_stage == ColimitReport::Stage::ItemInjectivity);
        CHECK(report.item == 0);
        CHECK(report.degree == 1);
        REQUIRE(report.witness.has_value());
    }

    // Images that never reach x3: joint surjectivity fails in degree 1.
    {
        InflationSystem system;
        system.target = build_model(exterior_presentation(3, 2), 4);
        auto item = build_model(exterior_presentation(2, 2), 4);
        system.items.emplace_back(item, system.target, coordinate_inclusion(2, 3, 2));
        const auto report = check_colimit_low_degree(system, 4);
        CHECK_FALSE(report.ok);
        CHECK(report.failed_stage == ColimitReport::Stage::Surjectivity);
        CHECK(report.degree == 1);
        CHECK(report.witness == std::vector<std::uint16_t>{0, 0, 1});
    }

    // Two incomparable items with no transitions: directedness fails.
    {
        InflationSystem system;
        system.target = build_model(exterior_presentation(2, 2), 4);
        auto big = build_model(exterior_presentation(2, 2), 4);
        auto small = build_model(exterior_presentation(1, 2), 4);
        system.items.emplace_back(big, system.target, coordinate_inclusion(2, 2, 2));
        system.items.emplace_back(small, system.target, coordinate_inclusion(2, 2, 1));
        const auto report = check_colimit_low_degree(system, 4);
        CHECK_FALSE(report.ok);
        CHECK(report.failed_stage == ColimitReport::Stage::Directedness);
        REQUIRE(report.missing_pair.has_value());
    }
}

TEST_CASE("galois pipeline delivers the asymptotic verdict") {
    const auto system = exterior_tower(4);
    const auto report = check_galois_pipeline(system, 3, 4);
    CHECK(report.verified);
    CHECK(report.verified_up_to == 4);
    CHECK(report.item_reports.size() == 3);

    const auto cd1_report = check_galois_pipeline(cd1_tower(4), 3, 4);
    CHECK(cd1_report.verified);
}

TEST_CASE("galois pipeline tags hypothesis failures") {
    // Zero map: the item embeds nothing, hypothesis (ii).
    {
        InflationSystem system;
        system.target = build_model(exterior_presentation(2, 2), 4);
        auto item = build_model(exterior_presentation(2, 2), 4);
        system.items.emplace_back(item, system.target, Matrix(2, 2, 2));
        system.items.emplace_back(item, system.target, coordinate_inclusion(2, 2, 2));
        try {
            check_galois_pipeline(system, 3, 4);
            FAIL("expected galois_error");
        } catch (const galois_error& e) {
            CHECK(e.hypothesis() == "ii");
        }
    }

    // Missing coverage: hypothesis (i).
    {
        InflationSystem system;
        system.target = build_model(exterior_presentation(3, 2), 4);
        auto item = build_model(exterior_presentation(2, 2), 4);
        system.items.emplace_back(item, system.target, coordinate_inclusion(2, 3, 2));
        try {
            check_galois_pipeline(system, 3, 4);
            FAIL("expected galois_error");
        } catch (const galois_error& e) {
            CHECK(e.hypothesis() == "i");
        }
    }
}

TEST_CASE("quotient capture on coordinate inclusions") {
    auto ext3 = build_model(exterior_presentation(3, 2), 4);
    for (std::size_t k = 1; k <= 2; ++k) {
        auto q = build_model(exterior_presentation(k, 2), 4);
        const GradedMap pi(q, ext3, coordinate_inclusion(2, 3, k));
        const auto report = check_quotient_capture(ext3, q, pi, 4);
        CHECK(report.captured);
        CHECK_FALSE(report.failed_stage.has_value());
        for (const auto& d : report.dims) {
            CHECK(d.q_dim == d.bw_dim);
            CHECK(d.q_dim == d.image_dim);
        }
    }
}

TEST_CASE("quotient capture failure stages") {
    auto ext3 = build_model(exterior_presentation(3, 2), 4);

    // Collapsing map: x1 and x2 meet, degree-1 kernel.
    {
        auto q = build_model(exterior_presentation(2, 2), 4);
        Matrix collapse(2, 3, 2);
        collapse.set(0, 0, 1);
        collapse.set(0, 1, 1);
        const GradedMap pi(q, ext3, collapse);
        const auto report = check_quotient_capture(ext3, q, pi, 4);
        CHECK_FALSE(report.captured);
        CHECK(report.failed_stage == CaptureStage::Injectivity1);
        CHECK(report.witness_degree == 1);
        REQUIRE(report.witness.has_value());
        CHECK(*report.witness == std::vector<std::uint16_t>{1, 1});
    }

    // Polynomial source: xx dies in the exterior target, degree-2 kernel.
    {
        auto q = build_model(polynomial_presentation(1, 2), 4);
        const GradedMap pi(q, ext3, coordinate_inclusion(2, 3, 1));
        const auto report = check_quotient_capture(ext3, q, pi, 4);
        CHECK_FALSE(report.captured);
        CHECK(report.failed_stage == CaptureStage::Injectivity2);
        CHECK(report.witness_degree == 2);
    }

    // cd1 source kills x1 x2 while the exterior target keeps it, so the map
    // is not relation-compatible and never reaches the capture stages.
    {
        auto q = build_model(cd1_presentation(2, 2), 4);
        CHECK_THROWS_AS(GradedMap(q, ext3, coordinate_inclusion(2, 3, 2)),
                        std::invalid_argument);
    }
}

TEST_CASE("local global passes on the coordinate family with identity locals") {
    auto ext3 = build_model(exterior_presentation(3, 2), 4);
    std::vector<LocalGlobalDatum> data;
    for (const auto& w : all_subspaces(3, 2)) {
        if (w.dim() == 0)
            continue;
        LocalGlobalDatum datum{w, {}, std::nullopt};
        datum.locals.emplace_back(ext3, ext3, Matrix::identity(2, 3));
        data.push_back(std::move(datum));
    }
    const auto report = check_local_global(ext3, data, 3);
    CHECK(report.ok);
    CHECK(report.compatibility_ok);
    CHECK_FALSE(report.compatibility_gap.has_value());
    REQUIRE(report.aggregate.has_value());
    CHECK(report.aggregate->verified);
    CHECK(report.aggregate->verified_up_to == 4);
    for (const auto& datum : report.data)
        CHECK(datum.passed());
}

TEST_CASE("local global failure modes") {
    auto ext3 = build_model(exterior_presentation(3, 2), 4);

    // Zero locals cannot be jointly injective.
    {
        std::vector<LocalGlobalDatum> data;
        LocalGlobalDatum datum{Subspace::span_of(2, 3, {{1, 0, 0}}), {}, std::nullopt};
        datum.locals.emplace_back(ext3, ext3, Matrix(2, 3, 3));
        data.push_back(std::move(datum));
        const auto report = check_local_global(ext3, data, 3);
        CHECK_FALSE(report.ok);
        REQUIRE_FALSE(report.data.empty());
        CHECK_FALSE(report.data[0].joint_injective);
        CHECK(report.data[0].injectivity_degree == 1);
        REQUIRE(report.data[0].injectivity_witness.has_value());
    }

    // Non-directed family: data reports pass but no aggregate is drawn.
    {
        std::vector<LocalGlobalDatum> data;
        for (std::size_t i = 0; i < 2; ++i) {
            std::vector<std::uint16_t> e(3, 0);
            e[i] = 1;
            LocalGlobalDatum datum{Subspace::span_of(2, 3, {e}), {}, std::nullopt};
            datum.locals.emplace_back(ext3, ext3, Matrix::identity(2, 3));
            data.push_back(std::move(datum));
        }
        const auto report = check_local_global(ext3, data, 3);
        CHECK_FALSE(report.ok);
        CHECK_FALSE(report.aggregate.has_value());
        REQUIRE(report.compatibility_gap.has_value());
        for (const auto& datum : report.data)
            CHECK(datum.passed());
    }

    // Supplied target presentations are compared against the induced B_W.
    {
        std::vector<LocalGlobalDatum> data;
        LocalGlobalDatum good{Subspace::span_of(2, 3, {{1, 0, 0}, {0, 1, 0}}), {},
                              exterior_presentation(2, 2)};
        good.locals.emplace_back(ext3, ext3, Matrix::identity(2, 3));
        data.push_back(std::move(good));
        const auto ok_report = check_local_global(ext3, data, 3);
        CHECK(ok_report.data[0].target_matches == true);

        data[0].b_w_target = cd1_presentation(2, 2);
        const auto bad_report = check_local_global(ext3, data, 3);
        CHECK(bad_report.data[0].target_matches == false);
        CHECK_FALSE(bad_report.ok);
    }
}

TEST_CASE("local global rejects malformed data") {
    auto ext3 = build_model(exterior_presentation(3, 2), 4);
    std::vector<LocalGlobalDatum> data;
    data.push_back(LocalGlobalDatum{Subspace::span_of(2, 3, {{1, 0, 0}}), {}, std::nullopt});
    CHECK_THROWS_AS(check_local_global(ext3, data, 3), std::invalid_argument);
}
