#include "ukoszul/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ukoszul {

QuadraticPresentation exterior_presentation(std::size_t n, std::uint32_t p) {
    fp::require_prime(p);
    Matrix rows(p, 0, n * n);
    std::vector<std::uint16_t> row(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), 0);
        row[tensor_index(n, i, i)] = 1;
        rows.append_row(row);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::fill(row.begin(), row.end(), 0);
            row[tensor_index(n, i, j)] = 1;
            row[tensor_index(n, j, i)] = 1;
            rows.append_row(row);
        }
    return QuadraticPresentation(p, default_labels(n), Subspace::span_of(rows));
}

QuadraticPresentation cd1_presentation(std::size_t n, std::uint32_t p) {
    fp::require_prime(p);
    return QuadraticPresentation(p, default_labels(n), Subspace::full(p, n * n));
}

namespace {

// Reachability over the transition edges, reflexive-transitive.
std::vector<std::vector<bool>> reachability(const InflationSystem& system) {
    const std::size_t count = system.items.size();
    std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
        reach[i][i] = true;
    for (const auto& t : system.transitions)
        reach[t.from][t.to] = true;
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < count; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < count; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    return reach;
}

// Coordinates of the columns of `degree1` in the echelon basis of w. Valid
// when every column lies in w; with RREF rows the coordinate along row b is
// the entry at that row's pivot.
Matrix degree1_in_w_coords(const Matrix& degree1, const Subspace& w) {
    const std::size_t k = w.dim();
    Matrix phi(degree1.modulus(), k, degree1.cols());
    for (std::size_t a = 0; a < degree1.cols(); ++a)
        for (std::size_t b = 0; b < k; ++b)
            phi.set(b, a, degree1.at(w.pivots()[b], a));
    return phi;
}

// span{ (phi (x) phi) r : r in rel } as a subspace of F_p^{k^2}.
Subspace tensor_square_image(const Matrix& phi, const Subspace& rel) {
    const std::uint32_t p = phi.modulus();
    const std::size_t k = phi.rows();
    const std::size_t s = phi.cols();
    Matrix rows(p, 0, k * k);
    std::vector<std::uint16_t> img(k * k, 0);
    for (std::size_t r = 0; r < rel.dim(); ++r) {
        const auto row = rel.basis().row(r);
        std::fill(img.begin(), img.end(), 0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                const std::uint16_t c = row[i * s + j];
                if (c == 0)
                    continue;
                for (std::size_t a = 0; a < k; ++a) {
                    if (phi.at(a, i) == 0)
                        continue;
                    const std::uint16_t ca = fp::mul(p, c, phi.at(a, i));
                    for (std::size_t b = 0; b < k; ++b)
                        img[a * k + b] = fp::add(p, img[a * k + b], fp::mul(p, ca, phi.at(b, j)));
                }
            }
        rows.append_row(img);
    }
    return Subspace::span_of(rows);
}

std::vector<std::uint16_t> first_uncovered_basis_vector(const Subspace& s, std::size_t ambient) {
    std::vector<std::uint16_t> v(ambient, 0);
    for (std::size_t k = 0; k < ambient; ++k) {
        std::fill(v.begin(), v.end(), 0);
        v[k] = 1;
        if (!s.contains(v))
            return v;
    }
    return v;
}

} // namespace

void validate_inflation_system(const InflationSystem& system) {
    if (!system.target)
        throw std::invalid_argument("malformed system: missing target model");
    for (const auto& item : system.items)
        if (item.target() != system.target)
            throw std::invalid_argument("malformed system: item map not into the target");
    for (const auto& t : system.transitions) {
        if (t.from >= system.items.size() || t.to >= system.items.size())
            throw std::invalid_argument("malformed system: transition index out of range");
        if (t.map.source() != system.items[t.from].source() ||
            t.map.target() != system.items[t.to].source())
            throw std::invalid_argument("malformed system: transition endpoints do not match");
        const Matrix composed =
            system.items[t.to].degree1_matrix().multiply(t.map.degree1_matrix());
        if (!(composed == system.items[t.from].degree1_matrix()))
            throw std::invalid_argument("malformed system: transition " + std::to_string(t.from) +
                                        " -> " + std::to_string(t.to) +
                                        " does not commute with the maps into the target");
    }
}

const char* to_string(ColimitReport::Stage s) {
    switch (s) {
    case ColimitReport::Stage::None: return "none";
    case ColimitReport::Stage::Generated: return "generated_in_degree_1";
    case ColimitReport::Stage::ItemInjectivity: return "item_injectivity";
    case ColimitReport::Stage::Surjectivity: return "surjectivity";
    case ColimitReport::Stage::Directedness: return "directedness";
    }
    return "?";
}

ColimitReport check_colimit_low_degree(const InflationSystem& system, std::size_t cap) {
    validate_inflation_system(system);
    const ModelPtr& target = system.target;
    if (cap > target->cap())
        throw std::invalid_argument("colimit cap exceeds the target model cap");
    for (const auto& item : system.items)
        if (item.max_degree() < std::min<std::size_t>(cap, 2))
            throw std::invalid_argument("item model cap too small for the colimit check");

    ColimitReport report{};
    const std::uint32_t p = target->p();

    // Hypothesis: target generated in degree 1 through cap.
    report.generated_in_degree_1 = true;
    std::optional<std::pair<std::size_t, std::vector<std::uint16_t>>> generated_gap;
    for (std::size_t d = 2; d <= cap && !generated_gap; ++d) {
        Subspace acc(p, target->dim(d));
        std::vector<std::uint16_t> e(target->n(), 0);
        for (std::size_t i = 0; i < target->n(); ++i) {
            std::fill(e.begin(), e.end(), 0);
            e[i] = 1;
            acc = sum(acc, image(right_multiplication_matrix(*target, d - 1, e)));
        }
        if (acc.dim() != target->dim(d)) {
            report.generated_in_degree_1 = false;
            generated_gap = {d, first_uncovered_basis_vector(acc, target->dim(d))};
        }
    }

    // Hypothesis: each item map injective in degrees 1 and 2.
    struct InjectivityGap {
        std::size_t item;
        std::size_t degree;
        std::vector<std::uint16_t> witness;
    };
    std::optional<InjectivityGap> injectivity_gap;
    for (std::size_t i = 0; i < system.items.size(); ++i) {
        bool injective = true;
        const std::size_t top = std::min<std::size_t>(cap, 2);
        for (std::size_t d = 1; d <= top; ++d) {
            const Subspace ker_d = kernel(system.items[i].matrix_on_degree(d));
            if (ker_d.dim() == 0)
                continue;
            injective = false;
            if (!injectivity_gap) {
                const auto row = ker_d.basis().row(0);
                injectivity_gap = {i, d, std::vector<std::uint16_t>(row.begin(), row.end())};
            }
            break;
        }
        report.item_injective_low_degrees.push_back(injective);
    }

    // Conclusion: images jointly surjective in every degree through cap.
    std::optional<std::pair<std::size_t, std::vector<std::uint16_t>>> surjectivity_gap;
    for (std::size_t d = 1; d <= cap; ++d) {
        Subspace acc(p, target->dim(d));
        for (const auto& item : system.items)
            acc = sum(acc, image(item.matrix_on_degree(d)));
        report.coverage.push_back({d, acc.dim(), target->dim(d)});
        if (!surjectivity_gap && acc.dim() != target->dim(d))
            surjectivity_gap = {d, first_uncovered_basis_vector(acc, target->dim(d))};
    }

    // Conclusion: directedness makes the degree <= 2 comparison injective.
    std::optional<std::pair<std::size_t, std::size_t>> undirected_pair;
    const auto reach = reachability(system);
    for (std::size_t i = 0; i < system.items.size() && !undirected_pair; ++i)
        for (std::size_t j = 0; j < system.items.size() && !undirected_pair; ++j) {
            bool bounded = false;
            for (std::size_t k = 0; k < system.items.size(); ++k)
                if (reach[i][k] && reach[j][k]) {
                    bounded = true;
                    break;
                }
            if (!bounded)
                undirected_pair = {i, j};
        }

    report.ok = true;
    if (generated_gap) {
        report.ok = false;
        report.failed_stage = ColimitReport::Stage::Generated;
        report.degree = generated_gap->first;
        report.witness = generated_gap->second;
    } else if (injectivity_gap) {
        report.ok = false;
        report.failed_stage = ColimitReport::Stage::ItemInjectivity;
        report.item = injectivity_gap->item;
        report.degree = injectivity_gap->degree;
        report.witness = injectivity_gap->witness;
    } else if (surjectivity_gap) {
        report.ok = false;
        report.failed_stage = ColimitReport::Stage::Surjectivity;
        report.degree = surjectivity_gap->first;
        report.witness = surjectivity_gap->second;
    } else if (undirected_pair) {
        report.ok = false;
        report.failed_stage = ColimitReport::Stage::Directedness;
        report.missing_pair = undirected_pair;
    }
    return report;
}

AUKReport check_galois_pipeline(const InflationSystem& system, std::size_t colon_cap,
                                std::size_t union_cap, const UKStrategy& strategy,
                                std::size_t jobs) {
    const ColimitReport colimit = check_colimit_low_degree(system, union_cap);
    if (!colimit.ok) {
        const char* tag =
            colimit.failed_stage == ColimitReport::Stage::ItemInjectivity ? "ii" : "i";
        throw galois_error(tag, std::string("low-degree colimit check failed at stage ") +
                                    to_string(colimit.failed_stage));
    }

    const ModelPtr& target = system.target;
    std::vector<Subspace> w_images;
    w_images.reserve(system.items.size());
    for (std::size_t i = 0; i < system.items.size(); ++i) {
        const Matrix& m1 = system.items[i].degree1_matrix();
        Subspace w = image(m1);
        CanonicalSubalgebra b_w = canonical_subalgebra(target, w);
        // The item must be isomorphic to B_W under the degree-1
        // identification: same relation space in W (x) W coordinates.
        const Matrix phi = degree1_in_w_coords(m1, w);
        const Subspace transported =
            tensor_square_image(phi, system.items[i].source()->presentation().relations);
        if (!(transported == b_w.induced_presentation().relations))
            throw galois_error("ii", "item " + std::to_string(i) +
                                         " is not isomorphic to B_W: relation spaces differ "
                                         "under the degree-1 identification");
        w_images.push_back(std::move(w));
    }

    const FilteredSystem filtered = build_filtered_system(target, w_images, false);
    return check_asymptotic_uk(target, filtered, colon_cap, union_cap, strategy, jobs);
}

const char* to_string(CaptureStage s) {
    switch (s) {
    case CaptureStage::Injectivity1: return "injectivity_1";
    case CaptureStage::Injectivity2: return "injectivity_2";
    case CaptureStage::ImageNeqBW: return "image_neq_BW";
    case CaptureStage::RelationsMismatch: return "relations_mismatch";
    }
    return "?";
}

CaptureReport check_quotient_capture(ModelPtr a_model, ModelPtr q_model, const GradedMap& pi_star,
                                     std::size_t cap) {
    if (pi_star.source() != q_model || pi_star.target() != a_model)
        throw std::invalid_argument("pi_star must map the quotient model into the target model");
    if (cap > pi_star.max_degree())
        throw std::invalid_argument("capture cap exceeds the map's degree range");

    CaptureReport report{false, std::nullopt, image(pi_star.degree1_matrix()), {}, std::nullopt,
                         std::nullopt};

    const auto fail = [&](CaptureStage stage, std::size_t degree,
                          std::vector<std::uint16_t> witness) {
        report.failed_stage = stage;
        report.witness_degree = degree;
        report.witness = std::move(witness);
        return report;
    };

    for (std::size_t d = 1; d <= std::min<std::size_t>(cap, 2); ++d) {
        const Subspace ker_d = kernel(pi_star.matrix_on_degree(d));
        if (ker_d.dim() != 0) {
            const auto row = ker_d.basis().row(0);
            return fail(d == 1 ? CaptureStage::Injectivity1 : CaptureStage::Injectivity2, d,
                        std::vector<std::uint16_t>(row.begin(), row.end()));
        }
    }

    const CanonicalSubalgebra b_w = canonical_subalgebra(a_model, report.w);
    for (std::size_t d = 1; d <= cap; ++d) {
        const Subspace img_q = image(pi_star.matrix_on_degree(d));
        const Subspace img_bw = image(b_w.embedding.matrix_on_degree(d));
        report.dims.push_back({d, q_model->dim(d), b_w.induced->dim(d), img_q.dim()});
        if (img_q == img_bw)
            continue;
        for (std::size_t r = 0; r < img_q.dim(); ++r) {
            const auto row = img_q.basis().row(r);
            if (!img_bw.contains(row))
                return fail(CaptureStage::ImageNeqBW, d,
                            std::vector<std::uint16_t>(row.begin(), row.end()));
        }
        for (std::size_t r = 0; r < img_bw.dim(); ++r) {
            const auto row = img_bw.basis().row(r);
            if (!img_q.contains(row))
                return fail(CaptureStage::ImageNeqBW, d,
                            std::vector<std::uint16_t>(row.begin(), row.end()));
        }
    }

    const Matrix phi = degree1_in_w_coords(pi_star.degree1_matrix(), report.w);
    const Subspace transported = tensor_square_image(phi, q_model->presentation().relations);
    if (!(transported == b_w.induced_presentation().relations)) {
        const Subspace& want = b_w.induced_presentation().relations;
        std::vector<std::uint16_t> witness;
        for (std::size_t r = 0; r < transported.dim(); ++r) {
            const auto row = transported.basis().row(r);
            if (!want.contains(row)) {
                witness.assign(row.begin(), row.end());
                break;
            }
        }
        if (witness.empty())
            for (std::size_t r = 0; r < want.dim(); ++r) {
                const auto row = want.basis().row(r);
                if (!transported.contains(row)) {
                    witness.assign(row.begin(), row.end());
                    break;
                }
            }
        return fail(CaptureStage::RelationsMismatch, 2, std::move(witness));
    }

    report.captured = true;
    return report;
}

LocalGlobalReport check_local_global(ModelPtr a_model, const std::vector<LocalGlobalDatum>& data,
                                     std::size_t colon_cap, const UKStrategy& strategy,
                                     std::size_t jobs) {
    LocalGlobalReport report{};
    std::vector<CanonicalSubalgebra> subs;
    subs.reserve(data.size());

    for (std::size_t idx = 0; idx < data.size(); ++idx) {
        const LocalGlobalDatum& datum = data[idx];
        if (datum.locals.empty())
            throw std::invalid_argument("datum " + std::to_string(idx) + " has no local maps");
        for (const auto& lambda : datum.locals)
            if (lambda.source() != a_model)
                throw std::invalid_argument("local maps must start from the global algebra");

        CanonicalSubalgebra b_w = canonical_subalgebra(a_model, datum.w);
        LocalGlobalDatumReport dr{};
        dr.joint_injective = true;

        std::size_t dmax = b_w.embedding.max_degree();
        for (const auto& lambda : datum.locals)
            dmax = std::min(dmax, lambda.max_degree());
        for (std::size_t d = 1; d <= dmax && dr.joint_injective; ++d) {
            Subspace joint = Subspace::full(a_model->p(), b_w.induced->dim(d));
            for (const auto& lambda : datum.locals) {
                const Matrix composite =
                    lambda.matrix_on_degree(d).multiply(b_w.embedding.matrix_on_degree(d));
                joint = intersect(joint, kernel(composite));
            }
            if (joint.dim() != 0) {
                dr.joint_injective = false;
                dr.injectivity_degree = d;
                const auto row = joint.basis().row(0);
                dr.injectivity_witness = std::vector<std::uint16_t>(row.begin(), row.end());
            }
        }

        dr.image_uk = check_universal_koszul(b_w.induced, strategy, colon_cap, jobs);

        if (datum.b_w_target.has_value()) {
            const QuadraticPresentation& want = *datum.b_w_target;
            dr.target_matches = want.p == b_w.induced_presentation().p &&
                                want.n() == b_w.induced_presentation().n() &&
                                want.relations == b_w.induced_presentation().relations;
        }

        report.data.push_back(std::move(dr));
        subs.push_back(std::move(b_w));
    }

    // Cross-datum compatibility: containment of W forces degreewise
    // containment of the subalgebras.
    report.compatibility_ok = true;
    for (std::size_t i = 0; i < data.size() && report.compatibility_ok; ++i)
        for (std::size_t j = 0; j < data.size() && report.compatibility_ok; ++j) {
            if (i == j || !data[j].w.contains(data[i].w))
                continue;
            for (std::size_t d = 1; d <= a_model->cap(); ++d) {
                const Subspace img_i = image(subs[i].embedding.matrix_on_degree(d));
                const Subspace img_j = image(subs[j].embedding.matrix_on_degree(d));
                if (!img_j.contains(img_i)) {
                    report.compatibility_ok = false;
                    report.compatibility_gap =
                        "B_W containment fails in degree " + std::to_string(d) + " for data " +
                        std::to_string(i) + " and " + std::to_string(j);
                    break;
                }
            }
        }

    std::vector<Subspace> family;
    family.reserve(data.size());
    for (const auto& datum : data)
        family.push_back(datum.w);
    const FilteredSystem system = build_filtered_system(a_model, family, false);
    if (report.compatibility_ok && system.directed()) {
        report.aggregate =
            check_asymptotic_uk(a_model, system, colon_cap, a_model->cap(), strategy, jobs);
    } else if (report.compatibility_ok) {
        for (std::size_t i = 0; i < system.items.size(); ++i)
            for (std::size_t j = 0; j < system.items.size(); ++j)
                if (!system.certificate(i, j).has_value()) {
                    report.compatibility_gap = "no datum bounds the pair (" + std::to_string(i) +
                                               ", " + std::to_string(j) +
                                               ") from above; no aggregate conclusion";
                    i = system.items.size();
                    break;
                }
    }

    report.ok = report.compatibility_ok && report.aggregate.has_value() &&
                report.aggregate->verified &&
                std::all_of(report.data.begin(), report.data.end(),
                            [](const LocalGlobalDatumReport& d) { return d.passed(); });
    return report;
}

} // namespace ukoszul
