#include "ukoszul/subalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ukoszul {

namespace {

// Columns are the tensor squares b_a (x) b_b of the basis rows of s, as
// vectors of F_p^{n^2}; column order (a,b) = a * dim + b.
Matrix tensor_square_columns(const Subspace& s) {
    const std::uint32_t p = s.modulus();
    const std::size_t n = s.ambient();
    const std::size_t k = s.dim();
    Matrix t(p, n * n, k * k);
    for (std::size_t a = 0; a < k; ++a) {
        const auto ra = s.basis().row(a);
        for (std::size_t b = 0; b < k; ++b) {
            const auto rb = s.basis().row(b);
            for (std::size_t i = 0; i < n; ++i) {
                if (ra[i] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    t.set(i * n + j, a * k + b, fp::mul(p, ra[i], rb[j]));
            }
        }
    }
    return t;
}

} // namespace

CanonicalSubalgebra canonical_subalgebra(ModelPtr model, const Subspace& w,
                                         std::size_t tensor_budget) {
    if (w.ambient() != model->n() || w.modulus() != model->p())
        throw std::invalid_argument("W must be a subspace of A_1");
    const std::uint32_t p = model->p();
    const std::size_t k = w.dim();

    const Matrix t = tensor_square_columns(w);
    const Subspace ww = image(t);
    const Subspace r_int = intersect(model->presentation().relations, ww);

    // Express the intersected relations in W (x) W coordinates.
    Matrix induced_rows(p, 0, k * k);
    for (std::size_t r = 0; r < r_int.dim(); ++r) {
        const auto coords = solve(t, r_int.basis().row(r));
        if (!coords.has_value())
            throw std::logic_error("relation outside W (x) W after intersection");
        induced_rows.append_row(*coords);
    }

    QuadraticPresentation pres(p, default_labels(k), Subspace::span_of(induced_rows));
    ModelPtr induced = build_model(std::move(pres), model->cap(), tensor_budget);

    Matrix embed(p, model->n(), k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < model->n(); ++i)
            embed.set(i, a, w.basis().at(a, i));
    GradedMap embedding(induced, model, std::move(embed));
    return {std::move(model), w, std::move(induced), std::move(embedding)};
}

SplitCheck check_split_relations(ModelPtr model, const Subspace& w, const Subspace& u) {
    const std::size_t n = model->n();
    const std::uint32_t p = model->p();
    if (w.ambient() != n || u.ambient() != n)
        throw std::invalid_argument("W and U must be subspaces of A_1");

    SplitCheck out{};
    out.direct_sum = sum(w, u) == Subspace::full(p, n) && intersect(w, u).dim() == 0;

    const Matrix tw = tensor_square_columns(w);
    const Matrix tu = tensor_square_columns(u);
    const Subspace& rel = model->presentation().relations;
    const Subspace rw = intersect(rel, image(tw));
    const Subspace ru = intersect(rel, image(tu));
    const Subspace split_sum = sum(rw, ru);
    out.relations_split =
        split_sum == rel && rw.dim() + ru.dim() == split_sum.dim();

    if (out.direct_sum && !out.relations_split) {
        for (std::size_t r = 0; r < rel.dim(); ++r) {
            const auto row = rel.basis().row(r);
            if (split_sum.contains(row))
                continue;
            // Decompose in the basis adapted to C_1 = W (+) U: the columns
            // (w,w), (u,u), (w,u), (u,w) together span V (x) V.
            const std::size_t k = w.dim();
            const std::size_t m = u.dim();
            Matrix full(p, n * n, k * k + m * m + 2 * k * m);
            std::size_t col = 0;
            const auto put = [&](const Subspace& left, std::size_t a, const Subspace& right,
                                 std::size_t b) {
                const auto ra = left.basis().row(a);
                const auto rb = right.basis().row(b);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        full.set(i * n + j, col, fp::mul(p, ra[i], rb[j]));
                ++col;
            };
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    put(w, a, w, b);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    put(u, a, u, b);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    put(w, a, u, b);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    put(u, a, w, b);
            const auto coords = solve(full, row);
            if (!coords.has_value())
                throw std::logic_error("direct-sum basis fails to span V (x) V");
            SplitCheck::MixedWitness wit;
            wit.relation.assign(row.begin(), row.end());
            wit.ww_part.assign(n * n, 0);
            wit.uu_part.assign(n * n, 0);
            wit.mixed_part.assign(n * n, 0);
            const auto accumulate = [&](std::vector<std::uint16_t>& dst, std::size_t e) {
                const std::uint16_t c = (*coords)[e];
                if (c == 0)
                    return;
                for (std::size_t i = 0; i < n * n; ++i)
                    dst[i] = fp::add(p, dst[i], fp::mul(p, c, full.at(i, e)));
            };
            for (std::size_t e = 0; e < k * k; ++e)
                accumulate(wit.ww_part, e);
            for (std::size_t e = k * k; e < k * k + m * m; ++e)
                accumulate(wit.uu_part, e);
            for (std::size_t e = k * k + m * m; e < full.cols(); ++e)
                accumulate(wit.mixed_part, e);
            out.witness = std::move(wit);
            break;
        }
    }
    return out;
}

DescentReport descend_uk(ModelPtr model, const Subspace& w, const Subspace& u,
                         const UKStrategy& strategy, std::size_t colon_cap, std::size_t jobs) {
    SplitCheck split = check_split_relations(model, w, u);
    if (!split.ok()) {
        std::string what = "split-relation hypothesis fails: ";
        what += split.direct_sum ? "relations do not split along W and U"
                                 : "C_1 is not the direct sum of W and U";
        throw descent_error(what, std::move(split));
    }
    UKReport parent_report = check_universal_koszul(model, strategy, colon_cap, jobs);
    if (!parent_report.passed())
        throw descent_error("parent algebra is not universally Koszul; nothing to descend",
                            std::move(split));
    CanonicalSubalgebra d = canonical_subalgebra(model, w);
    UKReport direct_report = check_universal_koszul(d.induced, strategy, colon_cap, jobs);
    const bool agree = direct_report.passed();
    return {std::move(split), std::move(parent_report), std::move(direct_report), agree};
}

bool FilteredSystem::directed() const {
    for (const auto& row : certificates)
        for (const auto& c : row)
            if (!c.has_value())
                return false;
    return true;
}

FilteredSystem build_filtered_system(ModelPtr model, const std::vector<Subspace>& family,
                                     bool close_under_sums, std::uint64_t budget) {
    for (const auto& s : family)
        if (s.ambient() != model->n() || s.modulus() != model->p())
            throw std::invalid_argument("family members must be subspaces of A_1");

    std::vector<Subspace> items = family;
    if (close_under_sums) {
        bool grew = true;
        while (grew) {
            grew = false;
            const std::size_t count = items.size();
            for (std::size_t i = 0; i < count; ++i) {
                for (std::size_t j = i + 1; j < count; ++j) {
                    Subspace s = sum(items[i], items[j]);
                    if (std::find(items.begin(), items.end(), s) == items.end()) {
                        if (items.size() + 1 > budget)
                            throw budget_error(
                                "sum closure exceeds the item budget: required " +
                                    std::to_string(items.size() + 1),
                                items.size() + 1);
                        items.push_back(std::move(s));
                        grew = true;
                    }
                }
            }
        }
    }

    FilteredSystem system;
    system.model = std::move(model);
    system.items = std::move(items);
    const std::size_t count = system.items.size();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (system.items[j].contains(system.items[i]))
                system.order.emplace_back(i, j);
    system.certificates.assign(count, std::vector<std::optional<std::size_t>>(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            const Subspace s = sum(system.items[i], system.items[j]);
            for (std::size_t k = 0; k < count; ++k)
                if (system.items[k].contains(s)) {
                    system.certificates[i][j] = k;
                    break;
                }
        }
    return system;
}

const char* to_string(AUKCondition c) {
    switch (c) {
    case AUKCondition::I: return "i";
    case AUKCondition::II: return "ii";
    case AUKCondition::III: return "iii";
    case AUKCondition::IV: return "iv";
    }
    return "?";
}

AUKReport check_asymptotic_uk(ModelPtr model, const FilteredSystem& system, std::size_t colon_cap,
                              std::size_t union_cap, const UKStrategy& strategy, std::size_t jobs,
                              std::uint64_t subspace_budget) {
    if (system.model != model)
        throw std::invalid_argument("system was built over a different model");
    if (union_cap > model->cap())
        throw std::invalid_argument("union cap exceeds the model cap");

    AUKReport report{};
    report.verified_up_to = union_cap;
    report.item_subspaces = system.items;

    // (i) each B_W is quadratic of finite type by construction; record dims.
    std::vector<CanonicalSubalgebra> subs;
    subs.reserve(system.items.size());
    for (const auto& w : system.items) {
        subs.push_back(canonical_subalgebra(model, w));
        report.item_dims.push_back(hilbert_dims(*subs.back().induced));
    }

    // (ii) universal Koszulity of every item.
    for (const auto& sub : subs)
        report.item_reports.push_back(
            check_universal_koszul(sub.induced, strategy, colon_cap, jobs, subspace_budget));

    // (iii) degreewise union of the item images against the full pieces.
    const std::uint32_t p = model->p();
    std::vector<Subspace> unions;
    for (std::size_t d = 1; d <= union_cap; ++d) {
        Subspace acc(p, model->dim(d));
        for (const auto& sub : subs)
            acc = sum(acc, image(sub.embedding.matrix_on_degree(d)));
        report.coverage.push_back({d, acc.dim(), model->dim(d)});
        unions.push_back(std::move(acc));
    }

    const auto fail = [&](AUKFailure f) {
        report.verified = false;
        report.failure = std::move(f);
        return report;
    };

    for (std::size_t i = 0; i < report.item_reports.size(); ++i)
        if (!report.item_reports[i].passed()) {
            AUKFailure f{AUKCondition::II,
                         "item " + std::to_string(i) + " is not universally Koszul",
                         i,
                         std::nullopt,
                         std::nullopt,
                         std::nullopt};
            return fail(std::move(f));
        }

    for (std::size_t i = 0; i < system.items.size(); ++i)
        for (std::size_t j = 0; j < system.items.size(); ++j)
            if (!system.certificate(i, j).has_value()) {
                AUKFailure f{AUKCondition::III,
                             "no item bounds the pair (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") from above",
                             std::nullopt,
                             std::make_pair(i, j),
                             std::nullopt,
                             std::nullopt};
                return fail(std::move(f));
            }

    for (std::size_t d = 1; d <= union_cap; ++d) {
        const auto& cov = report.coverage[d - 1];
        if (cov.union_dim == cov.ambient_dim)
            continue;
        const Subspace& acc = unions[d - 1];
        std::vector<std::uint16_t> witness(model->dim(d), 0);
        for (std::size_t k = 0; k < model->dim(d); ++k) {
            std::fill(witness.begin(), witness.end(), 0);
            witness[k] = 1;
            if (!acc.contains(witness))
                break;
        }
        AUKFailure f{AUKCondition::III,
                     "item images span a proper subspace of the degree-" + std::to_string(d) +
                         " piece",
                     std::nullopt,
                     std::nullopt,
                     d,
                     witness};
        return fail(std::move(f));
    }

    // (iv) A_1 itself must appear: in a directed family covering A_1 some
    // item contains the total sum, hence equals A_1.
    Subspace total(p, model->n());
    for (const auto& w : system.items)
        total = sum(total, w);
    const bool top_attained =
        std::any_of(system.items.begin(), system.items.end(),
                    [&](const Subspace& w) { return w.dim() == model->n(); });
    if (!top_attained) {
        if (total.dim() < model->n()) {
            std::vector<std::uint16_t> witness(model->n(), 0);
            for (std::size_t k = 0; k < model->n(); ++k) {
                std::fill(witness.begin(), witness.end(), 0);
                witness[k] = 1;
                if (!total.contains(witness))
                    break;
            }
            AUKFailure f{AUKCondition::IV,
                         "the family does not cover A_1",
                         std::nullopt,
                         std::nullopt,
                         std::size_t{1},
                         witness};
            return fail(std::move(f));
        }
        AUKFailure f{AUKCondition::IV,
                     "the family covers A_1 but no item attains it",
                     std::nullopt,
                     std::nullopt,
                     std::nullopt,
                     std::nullopt};
        return fail(std::move(f));
    }

    report.verified = true;
    return report;
}

} // namespace ukoszul
