#include "ukoszul/subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ukoszul {

Subspace::Subspace(std::uint32_t p, std::size_t ambient)
    : basis_(p, 0, ambient), pivots_() {}

Subspace Subspace::span_of(const Matrix& generators) {
    EchelonForm e = rref(generators);
    return Subspace(std::move(e.mat), std::move(e.pivots));
}

Subspace Subspace::span_of(std::uint32_t p, std::size_t ambient,
                           const std::vector<std::vector<std::uint16_t>>& generators) {
    return span_of(Matrix::from_rows(p, ambient, generators));
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
    return span_of(Matrix::identity(p, ambient));
}

std::vector<std::size_t> Subspace::complement_columns() const {
    std::vector<std::size_t> out;
    out.reserve(ambient() - dim());
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < ambient(); ++c) {
        if (next_pivot < pivots_.size() && pivots_[next_pivot] == c) {
            ++next_pivot;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::uint16_t> Subspace::reduce(std::span<const std::uint16_t> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("reduce: ambient mismatch");
    const std::uint32_t p = modulus();
    std::vector<std::uint16_t> r(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        std::uint16_t c = r[pivots_[i]];
        if (!c) continue;
        auto row = basis_.row(i);
        for (std::size_t j = pivots_[i]; j < ambient(); ++j)
            r[j] = fp::sub(p, r[j], fp::mul(p, c, row[j]));
    }
    return r;
}

std::vector<std::uint16_t> Subspace::quotient_coords(std::span<const std::uint16_t> v) const {
    std::vector<std::uint16_t> r = reduce(v);
    std::vector<std::uint16_t> out;
    out.reserve(ambient() - dim());
    for (std::size_t c : complement_columns()) out.push_back(r[c]);
    return out;
}

Matrix Subspace::quotient_map() const {
    const std::uint32_t p = modulus();
    auto comp = complement_columns();
    Matrix q(p, comp.size(), ambient());
    for (std::size_t r = 0; r < comp.size(); ++r) {
        q.set(r, comp[r], 1);
        for (std::size_t i = 0; i < dim(); ++i)
            q.set(r, pivots_[i], fp::neg(p, basis_.at(i, comp[r])));
    }
    return q;
}

bool Subspace::contains(std::span<const std::uint16_t> v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint16_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient() != ambient() || other.modulus() != modulus())
        throw std::invalid_argument("contains: ambient or modulus mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i))) return false;
    return true;
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient() || s.modulus() != t.modulus())
        throw std::invalid_argument("sum: ambient or modulus mismatch");
    return Subspace::span_of(s.basis().stacked(t.basis()));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient() || s.modulus() != t.modulus())
        throw std::invalid_argument("intersect: ambient or modulus mismatch");
    return kernel(s.quotient_map().stacked(t.quotient_map()));
}

Subspace kernel(const Matrix& m) {
    EchelonForm e = rref(m);
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    Matrix gens(p, 0, n);
    std::vector<std::uint16_t> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = fp::neg(p, e.mat.at(r, free));
        gens.append_row(v);
    }
    return Subspace::span_of(gens);
}

Subspace image(const Matrix& m) { return Subspace::span_of(m.transpose()); }

Subspace preimage(const Matrix& m, const Subspace& target) {
    if (target.ambient() != m.rows())
        throw std::invalid_argument("preimage: ambient mismatch");
    return kernel(target.quotient_map().multiply(m));
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r = sat_mul(r, base);
    return r;
}

} // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p) {
    if (k > n) return 0;
    // [n k]_p = prod_{i=0}^{k-1} (p^{n-i} - 1) / (p^{i+1} - 1); computed via the
    // pivot-pattern sum instead to stay in integers: sum over k-subsets of
    // columns of p^(free entries). Equivalent and exact.
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    if (k == 0) return 1;
    std::uint64_t total = 0;
    while (true) {
        // free entries for this pivot pattern
        std::uint64_t free_count = 0;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t later_nonpivot = (n - comb[i] - 1) - (k - i - 1);
            free_count += later_nonpivot;
        }
        total = sat_add(total, sat_pow(p, free_count));
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (comb[i] != i + n - k) {
                ++comb[i];
                for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0) return total;
        }
    }
}

std::uint64_t count_subspaces(std::size_t n, std::uint32_t p) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) total = sat_add(total, gaussian_binomial(n, k, p));
    return total;
}

void for_each_subspace(std::size_t n, std::uint32_t p, std::uint64_t budget,
                       const std::function<void(const Subspace&)>& visit) {
    fp::require_prime(p);
    std::uint64_t total = count_subspaces(n, p);
    if (total > budget)
        throw budget_error("subspace enumeration needs budget " + std::to_string(total) +
                               " but only " + std::to_string(budget) + " allowed",
                           total);

    for (std::size_t r = 0; r <= n; ++r) {
        std::vector<std::size_t> comb(r);
        for (std::size_t i = 0; i < r; ++i) comb[i] = i;
        while (true) {
            // free positions (row-major) for this pivot pattern
            std::vector<bool> is_pivot(n, false);
            for (std::size_t c : comb) is_pivot[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t c = comb[i] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(i, c);

            Matrix base(p, r, n);
            for (std::size_t i = 0; i < r; ++i) base.set(i, comb[i], 1);

            std::vector<std::uint16_t> digits(free_pos.size(), 0);
            while (true) {
                Matrix m = base;
                for (std::size_t t = 0; t < free_pos.size(); ++t)
                    m.set(free_pos[t].first, free_pos[t].second, digits[t]);
                // already canonical by construction
                visit(Subspace::span_of(m));

                // increment digits, last position fastest
                std::size_t t = digits.size();
                bool done = true;
                while (t > 0) {
                    --t;
                    if (digits[t] + 1u < p) {
                        ++digits[t];
                        std::fill(digits.begin() + t + 1, digits.end(), 0);
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }

            if (r == 0) break;
            std::size_t i = r;
            bool advanced = false;
            while (i > 0) {
                --i;
                if (comb[i] != i + n - r) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
}

std::vector<Subspace> all_subspaces(std::size_t n, std::uint32_t p, std::uint64_t budget) {
    std::vector<Subspace> out;
    for_each_subspace(n, p, budget, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

Subspace random_subspace(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> rank_dist(0, n);
    std::size_t r = rank_dist(rng);
    // uniform pivot pattern: reservoir-free via ranked combination index
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    std::vector<std::size_t> comb;
    for (std::size_t i = 0; i < r; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
        std::size_t j = pick(rng);
        comb.push_back(cols[j]);
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    }
    std::sort(comb.begin(), comb.end());

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : comb) is_pivot[c] = true;
    Matrix m(p, r, n);
    for (std::size_t i = 0; i < r; ++i) m.set(i, comb[i], 1);
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = comb[i] + 1; c < n; ++c)
            if (!is_pivot[c]) m.set(i, c, static_cast<std::uint16_t>(entry(rng)));
    return Subspace::span_of(m);
}

} // namespace ukoszul
