#include "ukoszul/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ukoszul::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

bool parse_uint(const std::string& s, std::uint64_t& out) {
    if (s.empty())
        return false;
    out = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            return false;
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
        if (out > (1ull << 32))
            return false;
    }
    return true;
}

std::size_t label_index(const std::string& label, const std::vector<std::string>& labels,
                        std::size_t line_no) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return i;
    throw parse_error(line_no, "unknown generator '" + label + "'");
}

// "[coeff] body" with the coefficient separated by whitespace.
std::pair<std::uint64_t, std::string> parse_term(const std::string& term, std::size_t line_no) {
    const auto toks = split_ws(term);
    if (toks.empty())
        throw parse_error(line_no, "empty term");
    if (toks.size() == 1)
        return {1, toks[0]};
    if (toks.size() == 2) {
        std::uint64_t coeff = 0;
        if (!parse_uint(toks[0], coeff))
            throw parse_error(line_no, "bad coefficient '" + toks[0] + "'");
        return {coeff, toks[1]};
    }
    throw parse_error(line_no, "malformed term '" + trim(term) + "'");
}

std::vector<std::uint16_t> parse_relation_line(const std::string& text,
                                               const std::vector<std::string>& labels,
                                               std::uint32_t p, std::size_t line_no) {
    const std::size_t n = labels.size();
    std::vector<std::uint16_t> row(n * n, 0);
    for (const auto& term : split_on(text, '+')) {
        const auto [coeff, body] = parse_term(term, line_no);
        if (body == "0" && coeff == 1)
            continue;
        const auto parts = split_on(body, '*');
        if (parts.size() != 2)
            throw parse_error(line_no, "expected a product g*g, got '" + body + "'");
        const std::size_t i = label_index(trim(parts[0]), labels, line_no);
        const std::size_t j = label_index(trim(parts[1]), labels, line_no);
        const std::size_t idx = tensor_index(n, i, j);
        row[idx] = fp::add(p, row[idx], fp::reduce(p, static_cast<long long>(coeff)));
    }
    return row;
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::vector<std::uint16_t> parse_combo(const std::string& text,
                                       const std::vector<std::string>& labels, std::uint32_t p,
                                       std::size_t line_no) {
    std::vector<std::uint16_t> v(labels.size(), 0);
    if (trim(text).empty())
        return v;
    for (const auto& term : split_on(text, '+')) {
        const auto [coeff, body] = parse_term(term, line_no);
        if (body == "0")
            continue;
        const std::size_t i = label_index(body, labels, line_no);
        v[i] = fp::add(p, v[i], fp::reduce(p, static_cast<long long>(coeff)));
    }
    return v;
}

QuadraticPresentation parse_presentation(const std::string& text) {
    enum class State { P, Generators, RelationsHeader, Relations };
    State state = State::P;
    std::uint32_t p = 0;
    std::vector<std::string> labels;
    Matrix rows(2, 0, 0);
    bool have_rows_matrix = false;

    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        switch (state) {
        case State::P: {
            const auto toks = split_ws(line);
            std::uint64_t value = 0;
            if (toks.size() != 3 || toks[0] != "p" || toks[1] != "=" ||
                !parse_uint(toks[2], value))
                throw parse_error(line_no, "expected 'p = <prime>'");
            try {
                fp::require_prime(static_cast<std::uint32_t>(value));
            } catch (const std::invalid_argument& e) {
                throw parse_error(line_no, e.what());
            }
            p = static_cast<std::uint32_t>(value);
            state = State::Generators;
            break;
        }
        case State::Generators: {
            auto toks = split_ws(line);
            if (toks.size() < 2 || toks[0] != "generators" || toks[1] != "=")
                throw parse_error(line_no, "expected 'generators = <labels>'");
            labels.assign(toks.begin() + 2, toks.end());
            for (std::size_t i = 0; i < labels.size(); ++i)
                for (std::size_t j = i + 1; j < labels.size(); ++j)
                    if (labels[i] == labels[j])
                        throw parse_error(line_no, "duplicate generator '" + labels[i] + "'");
            rows = Matrix(p, 0, labels.size() * labels.size());
            have_rows_matrix = true;
            state = State::RelationsHeader;
            break;
        }
        case State::RelationsHeader:
            if (line != "relations:")
                throw parse_error(line_no, "expected 'relations:'");
            state = State::Relations;
            break;
        case State::Relations:
            rows.append_row(parse_relation_line(line, labels, p, line_no));
            break;
        }
    }
    if (state != State::Relations || !have_rows_matrix)
        throw parse_error(line_no + 1, "unexpected end of file");
    return QuadraticPresentation(p, std::move(labels), Subspace::span_of(rows));
}

std::string print_presentation(const QuadraticPresentation& pres) {
    std::ostringstream out;
    out << "p = " << pres.p << "\n";
    out << "generators =";
    for (const auto& label : pres.gen_labels)
        out << ' ' << label;
    out << "\nrelations:\n";
    const std::size_t n = pres.n();
    const Matrix& basis = pres.relations.basis();
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        bool first = true;
        for (std::size_t idx = 0; idx < n * n; ++idx) {
            const std::uint16_t c = basis.at(r, idx);
            if (c == 0)
                continue;
            if (!first)
                out << " + ";
            if (c != 1)
                out << c << ' ';
            out << pres.gen_labels[idx / n] << '*' << pres.gen_labels[idx % n];
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

QuadraticPresentation load_presentation(const std::filesystem::path& file) {
    try {
        return parse_presentation(read_file(file));
    } catch (const parse_error& e) {
        throw parse_error(file.string(), e.line(),
                          std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
}

SubspaceFamily parse_family(const std::string& text, const QuadraticPresentation& pres) {
    SubspaceFamily family;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(line_no, "expected 'close_under_sums = ...' or 'subspace = ...'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "close_under_sums") {
            if (value == "true")
                family.close_under_sums = true;
            else if (value == "false")
                family.close_under_sums = false;
            else
                throw parse_error(line_no, "expected true or false, got '" + value + "'");
        } else if (key == "subspace") {
            std::vector<std::vector<std::uint16_t>> vectors;
            if (!value.empty())
                for (const auto& combo : split_on(value, ';'))
                    vectors.push_back(parse_combo(combo, pres.gen_labels, pres.p, line_no));
            family.subspaces.push_back(
                Subspace::span_of(pres.p, pres.n(), vectors));
        } else {
            throw parse_error(line_no, "unknown key '" + key + "'");
        }
    }
    return family;
}

Matrix parse_arrow_block(const std::vector<std::pair<std::size_t, std::string>>& lines,
                         const std::vector<std::string>& source_labels,
                         const std::vector<std::string>& target_labels, std::uint32_t p) {
    Matrix m(p, target_labels.size(), source_labels.size());
    std::vector<bool> seen(source_labels.size(), false);
    std::size_t last_line = 0;
    for (const auto& [line_no, text] : lines) {
        last_line = line_no;
        const auto arrow = text.find("->");
        if (arrow == std::string::npos)
            throw parse_error(line_no, "expected 'label -> combination'");
        const std::string lhs = trim(text.substr(0, arrow));
        const std::string rhs = trim(text.substr(arrow + 2));
        const std::size_t col = label_index(lhs, source_labels, line_no);
        if (seen[col])
            throw parse_error(line_no, "generator '" + lhs + "' mapped twice");
        seen[col] = true;
        const auto v = parse_combo(rhs, target_labels, p, line_no);
        for (std::size_t r = 0; r < target_labels.size(); ++r)
            m.set(r, col, v[r]);
    }
    for (std::size_t c = 0; c < source_labels.size(); ++c)
        if (!seen[c])
            throw parse_error(last_line, "generator '" + source_labels[c] + "' has no image");
    return m;
}

InflationSystem load_inflation_system(const std::filesystem::path& file, std::size_t cap,
                                      std::size_t tensor_budget) {
    const std::filesystem::path base = file.parent_path();
    const std::string text = read_file(file);

    InflationSystem system;
    std::vector<std::vector<std::pair<std::size_t, std::string>>> item_arrows;
    std::vector<std::pair<std::size_t, std::size_t>> transition_heads;
    std::vector<std::vector<std::pair<std::size_t, std::string>>> transition_arrows;
    std::vector<ModelPtr> item_models;
    enum class Block { None, Item, Transition };
    Block block = Block::None;

    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        const auto toks = split_ws(line);
        if (toks[0] == "target") {
            if (toks.size() != 3 || toks[1] != "=")
                throw parse_error(line_no, "expected 'target = FILE'");
            if (system.target)
                throw parse_error(line_no, "duplicate target");
            system.target =
                build_model(load_presentation(base / toks[2]), cap, tensor_budget);
            block = Block::None;
        } else if (toks[0] == "item") {
            if (toks.size() != 2)
                throw parse_error(line_no, "expected 'item FILE'");
            if (!system.target)
                throw parse_error(line_no, "item before target");
            item_models.push_back(
                build_model(load_presentation(base / toks[1]), cap, tensor_budget));
            item_arrows.emplace_back();
            block = Block::Item;
        } else if (toks[0] == "order") {
            // order I -> J
            std::uint64_t from = 0, to = 0;
            if (toks.size() != 4 || toks[2] != "->" || !parse_uint(toks[1], from) ||
                !parse_uint(toks[3], to))
                throw parse_error(line_no, "expected 'order I -> J'");
            if (from >= item_models.size() || to >= item_models.size())
                throw parse_error(line_no, "order refers to an unknown item");
            transition_heads.emplace_back(from, to);
            transition_arrows.emplace_back();
            block = Block::Transition;
        } else if (line.find("->") != std::string::npos) {
            if (block == Block::Item)
                item_arrows.back().emplace_back(line_no, line);
            else if (block == Block::Transition)
                transition_arrows.back().emplace_back(line_no, line);
            else
                throw parse_error(line_no, "mapping line outside an item or order block");
        } else {
            throw parse_error(line_no, "unrecognized line '" + line + "'");
        }
    }
    if (!system.target)
        throw parse_error(line_no + 1, "missing 'target = FILE'");

    for (std::size_t i = 0; i < item_models.size(); ++i) {
        Matrix m = parse_arrow_block(item_arrows[i], item_models[i]->presentation().gen_labels,
                                     system.target->presentation().gen_labels,
                                     system.target->p());
        system.items.emplace_back(item_models[i], system.target, std::move(m));
    }
    for (std::size_t t = 0; t < transition_heads.size(); ++t) {
        const auto [from, to] = transition_heads[t];
        Matrix m = parse_arrow_block(transition_arrows[t],
                                     item_models[from]->presentation().gen_labels,
                                     item_models[to]->presentation().gen_labels,
                                     system.target->p());
        system.transitions.push_back({from, to, GradedMap(item_models[from], item_models[to],
                                                          std::move(m))});
    }
    return system;
}

std::vector<LocalGlobalDatum> load_local_global_manifest(const std::filesystem::path& file,
                                                         ModelPtr a_model,
                                                         std::size_t tensor_budget) {
    const std::filesystem::path base = file.parent_path();
    const std::string text = read_file(file);
    const auto& global_labels = a_model->presentation().gen_labels;
    const std::uint32_t p = a_model->p();

    std::vector<LocalGlobalDatum> data;
    std::optional<LocalGlobalDatum> current;
    bool have_w = false;
    std::optional<ModelPtr> pending_local;
    std::vector<std::pair<std::size_t, std::string>> pending_arrows;

    const auto flush_local = [&]() {
        if (!pending_local.has_value())
            return;
        Matrix m = parse_arrow_block(pending_arrows, global_labels,
                                     (*pending_local)->presentation().gen_labels, p);
        current->locals.emplace_back(a_model, *pending_local, std::move(m));
        pending_local.reset();
        pending_arrows.clear();
    };
    const auto flush_datum = [&](std::size_t line_no) {
        if (!current.has_value())
            return;
        flush_local();
        if (!have_w)
            throw parse_error(line_no, "datum missing its 'W = ...' line");
        data.push_back(std::move(*current));
        current.reset();
    };

    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty())
            continue;
        const auto toks = split_ws(line);
        if (toks[0] == "datum") {
            flush_datum(line_no);
            current = LocalGlobalDatum{Subspace(p, a_model->n()), {}, std::nullopt};
            have_w = false;
        } else if (toks[0] == "W") {
            if (!current.has_value())
                throw parse_error(line_no, "'W = ...' outside a datum");
            flush_local();
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw parse_error(line_no, "expected 'W = combo; ...'");
            std::vector<std::vector<std::uint16_t>> vectors;
            const std::string value = trim(line.substr(eq + 1));
            if (!value.empty())
                for (const auto& combo : split_on(value, ';'))
                    vectors.push_back(parse_combo(combo, global_labels, p, line_no));
            current->w = Subspace::span_of(p, a_model->n(), vectors);
            have_w = true;
        } else if (toks[0] == "local") {
            if (!current.has_value())
                throw parse_error(line_no, "'local FILE' outside a datum");
            if (toks.size() != 2)
                throw parse_error(line_no, "expected 'local FILE'");
            flush_local();
            pending_local = build_model(load_presentation(base / toks[1]), a_model->cap(),
                                        tensor_budget);
        } else if (toks[0] == "target") {
            if (!current.has_value())
                throw parse_error(line_no, "'target FILE' outside a datum");
            if (toks.size() != 2)
                throw parse_error(line_no, "expected 'target FILE'");
            flush_local();
            current->b_w_target = load_presentation(base / toks[1]);
        } else if (line.find("->") != std::string::npos) {
            if (!pending_local.has_value())
                throw parse_error(line_no, "mapping line outside a local block");
            pending_arrows.emplace_back(line_no, line);
        } else {
            throw parse_error(line_no, "unrecognized line '" + line + "'");
        }
    }
    flush_datum(line_no + 1);
    return data;
}

std::uint64_t fnv1a_extend(std::uint64_t state, std::string_view data) {
    for (unsigned char c : data) {
        state ^= c;
        state *= 1099511628211ull;
    }
    return state;
}

std::uint64_t fnv1a(std::string_view data) {
    return fnv1a_extend(14695981039346656037ull, data);
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (std::size_t i = 16; i-- > 0;) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

namespace {

ordered_json subspace_json(const Subspace& s) {
    ordered_json basis = ordered_json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < s.ambient(); ++c)
            row.push_back(s.basis().at(r, c));
        basis.push_back(std::move(row));
    }
    return ordered_json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

ordered_json element_json(const GradedElement& e) {
    return ordered_json{{"degree", e.degree}, {"coords", e.coords}};
}

ordered_json strategy_json(const UKStrategy& s) {
    if (s.kind == UKStrategy::Kind::Exhaustive)
        return ordered_json{{"kind", "exhaustive"}};
    return ordered_json{{"kind", "randomized"}, {"seed", s.seed}, {"samples", s.samples}};
}

ordered_json uk_json(const UKReport& r) {
    ordered_json j;
    j["verdict"] = to_string(r.verdict);
    j["checked_pairs"] = r.checked_pairs;
    j["strategy"] = strategy_json(r.strategy);
    j["build_cap"] = r.build_cap;
    j["colon_cap"] = r.colon_cap;
    j["two_sided"] = r.two_sided;
    if (r.nilpotency_degree.has_value())
        j["nilpotency_degree"] = *r.nilpotency_degree;
    else
        j["nilpotency_degree"] = nullptr;
    if (r.counterexample.has_value()) {
        const auto& ce = *r.counterexample;
        ordered_json colon;
        ordered_json dims = ordered_json::array();
        for (const auto& comp : ce.colon.components)
            dims.push_back(comp.dim());
        colon["component_dims"] = std::move(dims);
        colon["fails_at_degree"] = ce.colon.failure->degree;
        colon["witness"] = element_json(ce.colon.failure->witness);
        j["counterexample"] = ordered_json{{"I1", subspace_json(ce.i1)},
                                           {"x", ce.x.coords},
                                           {"colon", std::move(colon)}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

ordered_json coverage_json(const std::vector<AUKCoverage>& coverage) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : coverage)
        arr.push_back(ordered_json{{"degree", c.degree},
                                   {"union_dim", c.union_dim},
                                   {"ambient_dim", c.ambient_dim}});
    return arr;
}

ordered_json auk_json(const AUKReport& r) {
    ordered_json j;
    if (r.verified)
        j["verdict"] = "AUK_VerifiedUpTo(" + std::to_string(r.verified_up_to) + ")";
    else
        j["verdict"] = std::string("Fails(") + to_string(r.failure->condition) + ")";
    ordered_json items = ordered_json::array();
    for (std::size_t i = 0; i < r.item_reports.size(); ++i) {
        ordered_json item;
        if (i < r.item_subspaces.size())
            item["W"] = subspace_json(r.item_subspaces[i]);
        item["dims"] = r.item_dims[i];
        item["uk"] = uk_json(r.item_reports[i]);
        items.push_back(std::move(item));
    }
    j["items"] = std::move(items);
    j["coverage"] = coverage_json(r.coverage);
    if (r.failure.has_value()) {
        const auto& f = *r.failure;
        ordered_json fail;
        fail["condition"] = to_string(f.condition);
        fail["detail"] = f.detail;
        fail["item"] = f.item.has_value() ? ordered_json(*f.item) : ordered_json(nullptr);
        fail["missing_pair"] = f.missing_pair.has_value()
                                   ? ordered_json{f.missing_pair->first, f.missing_pair->second}
                                   : ordered_json(nullptr);
        fail["degree"] = f.degree.has_value() ? ordered_json(*f.degree) : ordered_json(nullptr);
        fail["witness"] = f.witness.has_value() ? ordered_json(*f.witness) : ordered_json(nullptr);
        j["failure"] = std::move(fail);
    } else {
        j["failure"] = nullptr;
    }
    return j;
}

ordered_json capture_json(const CaptureReport& r) {
    ordered_json j;
    if (r.captured)
        j["verdict"] = "Captured";
    else
        j["verdict"] = std::string("Fails(") + to_string(*r.failed_stage) + ")";
    j["W"] = subspace_json(r.w);
    ordered_json dims = ordered_json::array();
    for (const auto& d : r.dims)
        dims.push_back(ordered_json{{"degree", d.degree},
                                    {"q_dim", d.q_dim},
                                    {"bw_dim", d.bw_dim},
                                    {"image_dim", d.image_dim}});
    j["dims"] = std::move(dims);
    if (r.witness.has_value())
        j["witness"] = ordered_json{{"degree", *r.witness_degree}, {"coords", *r.witness}};
    else
        j["witness"] = nullptr;
    return j;
}

ordered_json colimit_json(const ColimitReport& r) {
    ordered_json j;
    j["ok"] = r.ok;
    j["generated_in_degree_1"] = r.generated_in_degree_1;
    j["item_injective_low_degrees"] = r.item_injective_low_degrees;
    j["coverage"] = coverage_json(r.coverage);
    j["failed_stage"] = to_string(r.failed_stage);
    j["item"] = r.item.has_value() ? ordered_json(*r.item) : ordered_json(nullptr);
    j["degree"] = r.degree.has_value() ? ordered_json(*r.degree) : ordered_json(nullptr);
    j["witness"] = r.witness.has_value() ? ordered_json(*r.witness) : ordered_json(nullptr);
    j["missing_pair"] = r.missing_pair.has_value()
                            ? ordered_json{r.missing_pair->first, r.missing_pair->second}
                            : ordered_json(nullptr);
    return j;
}

ordered_json local_global_json(const LocalGlobalReport& r) {
    ordered_json j;
    ordered_json data = ordered_json::array();
    for (const auto& d : r.data) {
        ordered_json e;
        e["joint_injective"] = d.joint_injective;
        e["injectivity_degree"] = d.injectivity_degree.has_value()
                                      ? ordered_json(*d.injectivity_degree)
                                      : ordered_json(nullptr);
        e["injectivity_witness"] = d.injectivity_witness.has_value()
                                       ? ordered_json(*d.injectivity_witness)
                                       : ordered_json(nullptr);
        e["uk"] = uk_json(d.image_uk);
        e["target_matches"] = d.target_matches.has_value() ? ordered_json(*d.target_matches)
                                                           : ordered_json(nullptr);
        data.push_back(std::move(e));
    }
    j["data"] = std::move(data);
    j["compatibility_ok"] = r.compatibility_ok;
    j["compatibility_gap"] = r.compatibility_gap.has_value() ? ordered_json(*r.compatibility_gap)
                                                             : ordered_json(nullptr);
    j["aggregate"] = r.aggregate.has_value() ? auk_json(*r.aggregate) : ordered_json(nullptr);
    j["ok"] = r.ok;
    return j;
}

ordered_json meta_head(const ReportMeta& meta) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = meta.command;
    j["inputs"] = ordered_json{{"files", meta.inputs}, {"digest", hex64(meta.digest)}};
    ordered_json params;
    for (const auto& [key, value] : meta.params) {
        if (std::holds_alternative<std::int64_t>(value))
            params[key] = std::get<std::int64_t>(value);
        else if (std::holds_alternative<bool>(value))
            params[key] = std::get<bool>(value);
        else
            params[key] = std::get<std::string>(value);
    }
    j["parameters"] = std::move(params);
    return j;
}

std::string finish(ordered_json j, const ReportMeta& meta) {
    j["timing_ms"] = meta.timing_ms;
    return j.dump(2) + "\n";
}

} // namespace

std::string machine_report_dims(const ReportMeta& meta, const std::vector<std::size_t>& dims) {
    ordered_json j = meta_head(meta);
    j["dims"] = dims;
    return finish(std::move(j), meta);
}

std::string machine_report_uk(const ReportMeta& meta, const UKReport& report) {
    ordered_json j = meta_head(meta);
    j.update(uk_json(report));
    return finish(std::move(j), meta);
}

std::string machine_report_auk(const ReportMeta& meta, const AUKReport& report) {
    ordered_json j = meta_head(meta);
    j.update(auk_json(report));
    return finish(std::move(j), meta);
}

std::string machine_report_capture(const ReportMeta& meta, const CaptureReport& report) {
    ordered_json j = meta_head(meta);
    j.update(capture_json(report));
    return finish(std::move(j), meta);
}

std::string machine_report_colimit(const ReportMeta& meta, const ColimitReport& report) {
    ordered_json j = meta_head(meta);
    j.update(colimit_json(report));
    return finish(std::move(j), meta);
}

std::string machine_report_galois(const ReportMeta& meta, const ColimitReport& colimit,
                                  const AUKReport& auk) {
    ordered_json j = meta_head(meta);
    j["colimit"] = colimit_json(colimit);
    j["auk"] = auk_json(auk);
    return finish(std::move(j), meta);
}

std::string machine_report_local_global(const ReportMeta& meta, const LocalGlobalReport& report) {
    ordered_json j = meta_head(meta);
    j.update(local_global_json(report));
    return finish(std::move(j), meta);
}

std::string machine_report_error(const ReportMeta& meta, const std::string& verdict,
                                 const std::string& detail) {
    ordered_json j = meta_head(meta);
    j["verdict"] = verdict;
    j["detail"] = detail;
    return finish(std::move(j), meta);
}

namespace {

std::string join_dims(const std::vector<std::size_t>& dims) {
    std::string out = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(dims[i]);
    }
    return out + "]";
}

std::string coords_text(const std::vector<std::uint16_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

} // namespace

std::string human_report_dims(const std::vector<std::size_t>& dims) {
    // The algebra is generated in degree 1, so every dimension past the first
    // zero is zero as well; stop printing there.
    std::vector<std::size_t> shown;
    for (std::size_t d : dims) {
        shown.push_back(d);
        if (d == 0)
            break;
    }
    return "dims: " + join_dims(shown) + "\n";
}

std::string human_report_uk(const UKReport& report) {
    std::ostringstream out;
    out << "verdict: " << to_string(report.verdict) << "\n";
    out << "checked pairs: " << report.checked_pairs << "\n";
    if (report.strategy.kind == UKStrategy::Kind::Exhaustive)
        out << "strategy: exhaustive\n";
    else
        out << "strategy: randomized (seed " << report.strategy.seed << ", samples "
            << report.strategy.samples << ")\n";
    out << "caps: build " << report.build_cap << ", colon " << report.colon_cap << "\n";
    out << "two-sided ideals: " << (report.two_sided ? "yes" : "no") << "\n";
    if (report.nilpotency_degree.has_value())
        out << "nilpotency degree: " << *report.nilpotency_degree << "\n";
    if (report.counterexample.has_value()) {
        const auto& ce = *report.counterexample;
        out << "counterexample: I_1 of dim " << ce.i1.dim() << ", x = " << coords_text(ce.x.coords)
            << ", colon fails at degree " << ce.colon.failure->degree << " with witness "
            << coords_text(ce.colon.failure->witness.coords) << "\n";
    }
    return out.str();
}

std::string human_report_auk(const AUKReport& report) {
    std::ostringstream out;
    if (report.verified)
        out << "verdict: AUK_VerifiedUpTo(" << report.verified_up_to << ")\n";
    else
        out << "verdict: Fails(" << to_string(report.failure->condition)
            << "): " << report.failure->detail << "\n";
    out << "items: " << report.item_reports.size() << "\n";
    for (std::size_t i = 0; i < report.item_reports.size(); ++i)
        out << "  item " << i << ": dims " << join_dims(report.item_dims[i]) << ", uk "
            << to_string(report.item_reports[i].verdict) << "\n";
    for (const auto& c : report.coverage)
        out << "coverage degree " << c.degree << ": " << c.union_dim << "/" << c.ambient_dim
            << "\n";
    return out.str();
}

std::string human_report_capture(const CaptureReport& report) {
    std::ostringstream out;
    if (report.captured)
        out << "verdict: Captured\n";
    else
        out << "verdict: Fails(" << to_string(*report.failed_stage) << ")\n";
    out << "W: dim " << report.w.dim() << " in ambient " << report.w.ambient() << "\n";
    for (const auto& d : report.dims)
        out << "degree " << d.degree << ": dim Q = " << d.q_dim << ", dim B_W = " << d.bw_dim
            << ", dim image = " << d.image_dim << "\n";
    if (report.witness.has_value())
        out << "witness (degree " << *report.witness_degree << "): " << coords_text(*report.witness)
            << "\n";
    return out.str();
}

std::string human_report_colimit(const ColimitReport& report) {
    std::ostringstream out;
    out << (report.ok ? "colimit checks: pass\n" : "colimit checks: fail\n");
    out << "generated in degree 1: " << (report.generated_in_degree_1 ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < report.item_injective_low_degrees.size(); ++i)
        out << "item " << i << " injective in degrees <= 2: "
            << (report.item_injective_low_degrees[i] ? "yes" : "no") << "\n";
    for (const auto& c : report.coverage)
        out << "coverage degree " << c.degree << ": " << c.union_dim << "/" << c.ambient_dim
            << "\n";
    if (!report.ok)
        out << "failed stage: " << to_string(report.failed_stage) << "\n";
    return out.str();
}

std::string human_report_galois(const ColimitReport& colimit, const AUKReport& auk) {
    return human_report_colimit(colimit) + human_report_auk(auk);
}

std::string human_report_local_global(const LocalGlobalReport& report) {
    std::ostringstream out;
    out << (report.ok ? "local-global: pass\n" : "local-global: fail\n");
    for (std::size_t i = 0; i < report.data.size(); ++i) {
        const auto& d = report.data[i];
        out << "datum " << i << ": joint injectivity "
            << (d.joint_injective ? "holds" : "fails");
        if (!d.joint_injective)
            out << " at degree " << *d.injectivity_degree << " with class "
                << coords_text(*d.injectivity_witness);
        out << ", image uk " << to_string(d.image_uk.verdict);
        if (d.target_matches.has_value())
            out << ", target " << (*d.target_matches ? "matches" : "differs");
        out << "\n";
    }
    if (report.compatibility_gap.has_value())
        out << "compatibility: " << *report.compatibility_gap << "\n";
    if (report.aggregate.has_value())
        out << "aggregate:\n" << human_report_auk(*report.aggregate);
    return out.str();
}

std::string human_report_error(const std::string& verdict, const std::string& detail) {
    return "verdict: " + verdict + "\n" + detail + "\n";
}

} // namespace ukoszul::io
