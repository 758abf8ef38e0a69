#include "ukoszul/cohomology.hpp"
#include "ukoszul/graded_map.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ukoszul;

namespace {

// Degree-d slice of the two-sided ideal generated by R, assembled position by
// position as sum_i V^i (x) R (x) V^(d-2-i). Independent of the recursive
// closure the model uses.
std::size_t ideal_slice_dim_oracle(const QuadraticPresentation& pres, std::size_t d) {
    const std::size_t n = pres.n();
    const std::uint32_t p = pres.p;
    std::size_t dim_d = 1;
    for (std::size_t i = 0; i < d; ++i)
        dim_d *= n;
    Matrix rows(p, 0, dim_d);
    const Matrix& rel = pres.relations.basis();
    for (std::size_t pos = 0; pos + 2 <= d; ++pos) {
        std::size_t left = 1, right = 1;
        for (std::size_t i = 0; i < pos; ++i)
            left *= n;
        for (std::size_t i = 0; i < d - 2 - pos; ++i)
            right *= n;
        for (std::size_t w1 = 0; w1 < left; ++w1) {
            for (std::size_t r = 0; r < rel.rows(); ++r) {
                for (std::size_t w2 = 0; w2 < right; ++w2) {
                    std::vector<std::uint16_t> row(dim_d, 0);
                    for (std::size_t u = 0; u < n * n; ++u)
                        row[(w1 * n * n + u) * right + w2] = rel.at(r, u);
                    rows.append_row(row);
                }
            }
        }
    }
    return rank(rows);
}

std::vector<std::size_t> dims_oracle(const QuadraticPresentation& pres, std::size_t cap) {
    std::vector<std::size_t> dims{1, pres.n()};
    for (std::size_t d = 2; d <= cap; ++d) {
        std::size_t full = 1;
        for (std::size_t i = 0; i < d; ++i)
            full *= pres.n();
        dims.push_back(full - ideal_slice_dim_oracle(pres, d));
    }
    return dims;
}

GradedElement random_element(const GradedAlgebraModel& model, std::size_t d,
                             std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, model.p() - 1);
    GradedElement e{d, std::vector<std::uint16_t>(model.dim(d))};
    for (auto& c : e.coords)
        c = static_cast<std::uint16_t>(dist(rng));
    return e;
}

} // namespace

TEST_CASE("presentation invariants") {
    CHECK_THROWS_AS(QuadraticPresentation(4, {"x"}, Subspace(4, 1)), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticPresentation(2, {"x", "x"}, Subspace(2, 4)), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticPresentation(2, {"x", "y"}, Subspace(2, 3)), std::invalid_argument);
    CHECK(default_labels(3) == std::vector<std::string>{"x1", "x2", "x3"});

    const auto canon2 = graded_commutative_canonical_relations(2, 2);
    CHECK(canon2.dim() == 1);  // the commutator only; no squares in char 2
    const auto canon23 = graded_commutative_canonical_relations(2, 3);
    CHECK(canon23.dim() == 3);  // commutators plus odd-degree squares
    CHECK(canon23.contains(std::vector<std::uint16_t>{1, 0, 0, 0}));
    CHECK(canon23.contains(std::vector<std::uint16_t>{0, 1, 1, 0}));

    CHECK(is_graded_commutative(exterior_presentation(3, 2)));
    CHECK(is_graded_commutative(polynomial_presentation(2, 2)));
    // Odd characteristic: graded-commutative forces squares to vanish, so the
    // polynomial algebra does not qualify.
    CHECK_FALSE(is_graded_commutative(polynomial_presentation(2, 3)));
    CHECK(is_graded_commutative(cd1_presentation(2, 5)));
    const QuadraticPresentation free_algebra(2, default_labels(2), Subspace(2, 4));
    CHECK_FALSE(is_graded_commutative(free_algebra));
}

TEST_CASE("exterior and cd1 and polynomial dims") {
    auto ext3 = build_model(exterior_presentation(3, 2), 4);
    CHECK(hilbert_dims(*ext3) == std::vector<std::size_t>{1, 3, 3, 1, 0});
    CHECK(ext3->nilpotency_degree() == 4);

    auto ext23 = build_model(exterior_presentation(2, 3), 4);
    CHECK(hilbert_dims(*ext23) == std::vector<std::size_t>{1, 2, 1, 0, 0});

    auto cd1 = build_model(cd1_presentation(3, 2), 3);
    CHECK(hilbert_dims(*cd1) == std::vector<std::size_t>{1, 3, 0, 0});
    CHECK(cd1->nilpotency_degree() == 2);

    auto poly = build_model(polynomial_presentation(2, 2), 4);
    CHECK(hilbert_dims(*poly) == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK_FALSE(poly->nilpotency_degree().has_value());
}

TEST_CASE("dims match the span-closure oracle") {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 2; ++n) {
        std::vector<QuadraticPresentation> cases{
            exterior_presentation(n, 2), cd1_presentation(n, 2), polynomial_presentation(n, 2)};
        for (int i = 0; i < 5; ++i)
            cases.push_back(random_presentation(n, 2, rng));
        for (const auto& pres : cases) {
            auto model = build_model(pres, 4);
            CHECK(hilbert_dims(*model) == dims_oracle(pres, 4));
        }
    }
}

TEST_CASE("lift reduce roundtrip and basis labels") {
    auto model = build_model(exterior_presentation(2, 2), 3);
    for (std::size_t d = 0; d <= 3; ++d) {
        for (std::size_t k = 0; k < model->dim(d); ++k) {
            std::vector<std::uint16_t> coords(model->dim(d), 0);
            coords[k] = 1;
            CHECK(model->reduce(d, model->lift(d, coords)) == coords);
        }
    }
    CHECK(model->basis_labels(0) == std::vector<std::string>{"1"});
    CHECK(model->basis_labels(1) == std::vector<std::string>{"x1", "x2"});
    CHECK(model->basis_labels(2) == std::vector<std::string>{"x2*x1"});
}

TEST_CASE("multiplication structure") {
    std::mt19937_64 rng(5);
    auto ext = build_model(exterior_presentation(3, 2), 4);

    const GradedElement one = ext->unit();
    const GradedElement x1{1, {1, 0, 0}};
    const GradedElement x2{1, {0, 1, 0}};
    CHECK(multiply(*ext, one, x1) == x1);
    CHECK(multiply(*ext, x1, one) == x1);
    CHECK(multiply(*ext, x1, x1) == ext->zero(2));
    CHECK(multiply(*ext, x1, x2) == multiply(*ext, x2, x1));

    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_element(*ext, 1, rng);
        const auto b = random_element(*ext, 1, rng);
        const auto c = random_element(*ext, 2, rng);
        CHECK(multiply(*ext, multiply(*ext, a, b), c) == multiply(*ext, a, multiply(*ext, b, c)));
    }

    // Sign rule in odd characteristic: xy = -yx for degree-1 elements.
    auto ext5 = build_model(exterior_presentation(2, 5), 3);
    const GradedElement u{1, {1, 2}};
    const GradedElement v{1, {3, 1}};
    const auto uv = multiply(*ext5, u, v);
    const auto vu = multiply(*ext5, v, u);
    REQUIRE(uv.coords.size() == vu.coords.size());
    for (std::size_t i = 0; i < uv.coords.size(); ++i)
        CHECK(uv.coords[i] == fp::neg(5, vu.coords[i]));
}

TEST_CASE("build_model budget and cap validation") {
    CHECK_THROWS_AS(build_model(exterior_presentation(2, 2), 1), std::invalid_argument);
    try {
        build_model(exterior_presentation(4, 2), 6, 100);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.required() == 4096);
    }
}

TEST_CASE("presentation_from_cup recovers the relations") {
    for (const auto& pres :
         {exterior_presentation(2, 2), exterior_presentation(2, 3), cd1_presentation(2, 2),
          polynomial_presentation(2, 3)}) {
        auto model = build_model(pres, 2);
        const std::size_t n = pres.n();
        Matrix cup(pres.p, model->dim(2), n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::uint16_t> t(n * n, 0);
                t[tensor_index(n, i, j)] = 1;
                const auto img = model->reduce(2, t);
                for (std::size_t r = 0; r < img.size(); ++r)
                    cup.set(r, tensor_index(n, i, j), img[r]);
            }
        }
        const auto recovered = presentation_from_cup(pres.p, n, cup);
        CHECK(recovered.relations == pres.relations);
        CHECK(recovered.p == pres.p);
    }
}

TEST_CASE("random_presentation is graded-commutative and seed-stable") {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 10; ++i) {
        const auto pa = random_presentation(3, 2, a);
        const auto pb = random_presentation(3, 2, b);
        CHECK(pa == pb);
        CHECK(is_graded_commutative(pa));
        CHECK(pa.relations.contains(graded_commutative_canonical_relations(3, 2)));
    }
}

TEST_CASE("graded maps respect products") {
    std::mt19937_64 rng(17);
    auto ext2 = build_model(exterior_presentation(2, 2), 4);
    auto ext3 = build_model(exterior_presentation(3, 2), 4);

    Matrix incl(2, 3, 2);
    incl.set(0, 0, 1);
    incl.set(1, 1, 1);
    const GradedMap f(ext2, ext3, incl);
    CHECK(f.max_degree() == 4);

    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_element(*ext2, 1, rng);
        const auto b = random_element(*ext2, 1, rng);
        const auto lhs = apply_map(f, multiply(*ext2, a, b));
        const auto rhs = multiply(*ext3, apply_map(f, a), apply_map(f, b));
        CHECK(lhs == rhs);
    }

    const GradedMap id3 = GradedMap::identity(ext3);
    const GradedMap g = compose(id3, f);
    for (std::size_t d = 0; d <= 4; ++d)
        CHECK(g.matrix_on_degree(d) == f.matrix_on_degree(d));

    // Exterior relations cannot land in polynomial relations.
    auto poly = build_model(polynomial_presentation(2, 2), 2);
    CHECK_THROWS_AS(GradedMap(ext2, poly, Matrix::identity(2, 2)), std::invalid_argument);
}
