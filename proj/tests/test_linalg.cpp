#include "ukoszul/subspace.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ukoszul;

namespace {

Matrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(p, rows, cols);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, static_cast<std::uint16_t>(dist(rng)));
    return m;
}

Subspace random_space(std::size_t ambient, std::uint32_t p, std::mt19937_64& rng) {
    return Subspace::span_of(random_matrix(p, ambient, ambient, rng));
}

// Row spaces of every n x n matrix over F_p, deduplicated. Independent of the
// pivot-pattern enumeration used by for_each_subspace.
std::set<std::vector<std::uint16_t>> brute_force_row_spaces(std::size_t n, std::uint32_t p) {
    std::set<std::vector<std::uint16_t>> seen;
    const std::size_t entries = n * n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < entries; ++i)
        total *= p;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix m(p, n, n);
        std::size_t rest = code;
        for (std::size_t i = 0; i < entries; ++i) {
            m.set(i / n, i % n, static_cast<std::uint16_t>(rest % p));
            rest /= p;
        }
        const auto canon = rref(m).mat;
        std::vector<std::uint16_t> key;
        for (std::size_t r = 0; r < canon.rows(); ++r)
            key.insert(key.end(), canon.row(r).begin(), canon.row(r).end());
        key.push_back(static_cast<std::uint16_t>(canon.rows()));
        seen.insert(std::move(key));
    }
    return seen;
}

} // namespace

TEST_CASE("prime field arithmetic") {
    CHECK(fp::is_prime(2));
    CHECK(fp::is_prime(65521));
    CHECK_FALSE(fp::is_prime(1));
    CHECK_FALSE(fp::is_prime(4));
    CHECK_THROWS_AS(fp::require_prime(6), std::invalid_argument);
    CHECK_THROWS_AS(fp::require_prime(65537), std::invalid_argument);

    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 251u}) {
        for (std::uint32_t a = 1; a < std::min(p, 30u); ++a) {
            const auto inv = fp::inv(p, static_cast<std::uint16_t>(a));
            CHECK(fp::mul(p, static_cast<std::uint16_t>(a), inv) == 1);
        }
        CHECK(fp::neg(p, 0) == 0);
        CHECK(fp::add(p, static_cast<std::uint16_t>(p - 1), 1) == 0);
    }
    CHECK(fp::reduce(7, -1) == 6);
    CHECK(fp::reduce(7, 15) == 1);
    CHECK(fp::pow(5, 2, 4) == 1);
}

TEST_CASE("matrix multiply and apply") {
    Matrix a = Matrix::from_rows(7, 2, {{1, 2}, {3, 4}, {5, 6}});
    Matrix b = Matrix::from_rows(7, 3, {{1, 0, 1}, {2, 1, 0}});
    Matrix c = a.multiply(b);
    REQUIRE(c.rows() == 3);
    REQUIRE(c.cols() == 3);
    CHECK(c.at(0, 0) == 5);
    CHECK(c.at(0, 1) == 2);
    CHECK(c.at(0, 2) == 1);
    CHECK(c.at(2, 0) == 3);
    CHECK(c.at(2, 1) == 6);
    CHECK(c.at(2, 2) == 5);

    const auto y = a.apply(std::vector<std::uint16_t>{1, 1});
    CHECK(y == std::vector<std::uint16_t>{3, 0, 4});

    CHECK(a.transpose().transpose() == a);
    CHECK(a.stacked(a).rows() == 6);
}

TEST_CASE("rref is canonical") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            Matrix m = random_matrix(p, 4, 5, rng);
            const auto e = rref(m);
            CHECK(rref(e.mat).mat == e.mat);
            CHECK(e.pivots.size() == e.mat.rows());
            CHECK(std::is_sorted(e.pivots.begin(), e.pivots.end()));
            for (std::size_t r = 0; r < e.mat.rows(); ++r) {
                CHECK(e.mat.at(r, e.pivots[r]) == 1);
                for (std::size_t r2 = 0; r2 < e.mat.rows(); ++r2)
                    if (r2 != r)
                        CHECK(e.mat.at(r2, e.pivots[r]) == 0);
            }

            // Appending random row combinations does not change the form.
            Matrix mix = random_matrix(p, 6, 4, rng);
            CHECK(Subspace::span_of(m).contains(Subspace::span_of(mix.multiply(m))));
            CHECK(rref(m.stacked(mix.multiply(m))).mat == e.mat);
            CHECK(rref(e.mat.stacked(m)).mat == e.mat);
        }
    }
}

TEST_CASE("solve") {
    Matrix a = Matrix::from_rows(5, 2, {{1, 2}, {2, 4}, {0, 1}});
    const auto sol = solve(a, std::vector<std::uint16_t>{0, 0, 1});
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == std::vector<std::uint16_t>{0, 0, 1});
    CHECK_FALSE(solve(a, std::vector<std::uint16_t>{1, 0, 0}).has_value());
}

TEST_CASE("subspace counts match brute force") {
    CHECK(count_subspaces(2, 2) == 5);
    CHECK(count_subspaces(3, 2) == 16);
    CHECK(count_subspaces(4, 2) == 67);
    CHECK(count_subspaces(2, 3) == 6);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);

    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t n = 1; n <= (p == 2 ? 3u : 2u); ++n) {
            const auto oracle = brute_force_row_spaces(n, p);
            CHECK(oracle.size() == count_subspaces(n, p));
            const auto all = all_subspaces(n, p);
            CHECK(all.size() == oracle.size());
            std::set<std::vector<std::uint16_t>> seen;
            for (const auto& s : all) {
                std::vector<std::uint16_t> key;
                for (std::size_t r = 0; r < s.dim(); ++r)
                    key.insert(key.end(), s.basis().row(r).begin(), s.basis().row(r).end());
                key.push_back(static_cast<std::uint16_t>(s.dim()));
                seen.insert(std::move(key));
            }
            CHECK(seen == oracle);
        }
    }
}

TEST_CASE("for_each_subspace order is deterministic and budgeted") {
    std::vector<std::size_t> dims1, dims2;
    for_each_subspace(3, 2, 100, [&](const Subspace& s) { dims1.push_back(s.dim()); });
    for_each_subspace(3, 2, 100, [&](const Subspace& s) { dims2.push_back(s.dim()); });
    CHECK(dims1 == dims2);
    CHECK(std::is_sorted(dims1.begin(), dims1.end()));
    CHECK(dims1.size() == 16);

    try {
        for_each_subspace(4, 2, 10, [](const Subspace&) {});
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.required() == 67);
    }
}

TEST_CASE("modular dimension law") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 60; ++trial) {
            const Subspace u = random_space(4, p, rng);
            const Subspace v = random_space(4, p, rng);
            const Subspace s = sum(u, v);
            const Subspace i = intersect(u, v);
            CHECK(s.dim() + i.dim() == u.dim() + v.dim());
            CHECK(s.contains(u));
            CHECK(s.contains(v));
            CHECK(u.contains(i));
            CHECK(v.contains(i));
            CHECK(sum(u, v) == sum(v, u));
            CHECK(intersect(u, v) == intersect(v, u));
        }
    }
}

TEST_CASE("kernel image preimage") {
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 40; ++trial) {
            Matrix m = random_matrix(p, 3, 4, rng);
            const Subspace k = kernel(m);
            const Subspace im = image(m);
            CHECK(k.dim() + rank(m) == m.cols());
            CHECK(im.dim() == rank(m));
            for (std::size_t r = 0; r < k.dim(); ++r) {
                const auto y = m.apply(k.basis().row(r));
                CHECK(std::all_of(y.begin(), y.end(), [](std::uint16_t v) { return v == 0; }));
            }

            const Subspace target = random_space(3, p, rng);
            const Subspace pre = preimage(m, target);
            CHECK(pre.contains(k));
            for (std::size_t r = 0; r < pre.dim(); ++r)
                CHECK(target.contains(m.apply(pre.basis().row(r))));
            // Dimension check: preimage/kernel maps onto image ∩ target.
            CHECK(pre.dim() == k.dim() + intersect(im, target).dim());
        }
    }
}

TEST_CASE("membership and quotient coordinates") {
    const Subspace s = Subspace::span_of(2, 4, {{1, 0, 1, 0}, {0, 1, 1, 1}});
    CHECK(s.contains(std::vector<std::uint16_t>{1, 1, 0, 1}));
    CHECK_FALSE(s.contains(std::vector<std::uint16_t>{0, 0, 1, 0}));
    CHECK(s.complement_columns() == std::vector<std::size_t>{2, 3});

    const std::vector<std::uint16_t> v{1, 1, 1, 0};
    const auto r = s.reduce(v);
    CHECK(s.contains(std::vector<std::uint16_t>{fp::sub(2, v[0], r[0]), fp::sub(2, v[1], r[1]),
                                                fp::sub(2, v[2], r[2]), fp::sub(2, v[3], r[3])}));
    const auto q = s.quotient_coords(v);
    CHECK(q.size() == 2);
    CHECK(s.quotient_map().apply(v) == q);
    CHECK(s.contains(v) == std::all_of(q.begin(), q.end(), [](std::uint16_t x) { return x == 0; }));
}

TEST_CASE("random_subspace is deterministic per seed") {
    std::mt19937_64 a(99), b(99);
    for (int i = 0; i < 20; ++i)
        CHECK(random_subspace(4, 2, a) == random_subspace(4, 2, b));
}
