// ukoszul command line tool.
//
// Exit codes: 0 when the requested check passes, 1 when it produces a
// negative verdict, 2 on malformed input or an exceeded budget.

#include "ukoszul/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace ukoszul;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CommonOptions {
    std::size_t cap = 4;
    std::size_t colon_cap = 3;
    std::size_t union_cap = 4;
    std::string strategy = "exhaustive";
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::size_t jobs = 1;
    std::string format = "human";
    std::string output;
};

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value)
        return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end == value || *end != '\0')
        throw std::runtime_error(std::string(name) + ": not a number: " + value);
    return static_cast<std::size_t>(parsed);
}

std::size_t tensor_budget() { return env_size("UKOSZUL_MAX_TENSOR", kDefaultTensorBudget); }
std::uint64_t subspace_budget() {
    return env_size("UKOSZUL_MAX_SUBSPACES", kDefaultSubspaceBudget);
}

UKStrategy make_strategy(const CommonOptions& opts) {
    if (opts.strategy == "exhaustive")
        return UKStrategy::exhaustive();
    return UKStrategy::randomized(opts.seed, opts.samples);
}

std::string read_bytes(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

io::ReportMeta make_meta(const std::string& command, const std::vector<std::string>& inputs) {
    io::ReportMeta meta;
    meta.command = command;
    meta.inputs = inputs;
    std::uint64_t digest = io::fnv1a("");
    for (const auto& file : inputs)
        digest = io::fnv1a_extend(digest, read_bytes(file));
    meta.digest = digest;
    return meta;
}

void add_param(io::ReportMeta& meta, const std::string& key, std::int64_t value) {
    meta.params.emplace_back(key, io::ParamValue(value));
}

void add_param(io::ReportMeta& meta, const std::string& key, const std::string& value) {
    meta.params.emplace_back(key, io::ParamValue(value));
}

void add_strategy_params(io::ReportMeta& meta, const CommonOptions& opts) {
    add_param(meta, "strategy", opts.strategy);
    if (opts.strategy == "random") {
        add_param(meta, "seed", static_cast<std::int64_t>(opts.seed));
        add_param(meta, "samples", static_cast<std::int64_t>(opts.samples));
    }
}

void emit(const CommonOptions& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + opts.output);
    out << text;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void add_format_option(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_option("-o,--output", opts.output, "Write the report to a file");
}

void add_strategy_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--strategy", opts.strategy, "Subspace enumeration strategy")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    cmd->add_option("--seed", opts.seed, "Seed for the random strategy");
    cmd->add_option("--samples", opts.samples, "Sample count for the random strategy");
    cmd->add_option("--jobs", opts.jobs, "Worker thread count");
}

Matrix load_arrow_file(const std::filesystem::path& file,
                       const std::vector<std::string>& source_labels,
                       const std::vector<std::string>& target_labels, std::uint32_t p) {
    const std::string text = read_bytes(file);
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto pos = raw.find('#');
        std::string line = pos == std::string::npos ? raw : raw.substr(0, pos);
        const auto begin = line.find_first_not_of(" \t\r\n");
        if (begin == std::string::npos)
            continue;
        const auto end = line.find_last_not_of(" \t\r\n");
        lines.emplace_back(line_no, line.substr(begin, end - begin + 1));
    }
    return io::parse_arrow_block(lines, source_labels, target_labels, p);
}

int run_gen(const std::string& kind, std::size_t n, std::uint32_t p, std::uint64_t seed,
            const CommonOptions& opts) {
    QuadraticPresentation pres = [&]() {
        if (kind == "exterior")
            return exterior_presentation(n, p);
        if (kind == "cd1")
            return cd1_presentation(n, p);
        if (kind == "polynomial")
            return polynomial_presentation(n, p);
        std::mt19937_64 rng(seed);
        return random_presentation(n, p, rng);
    }();
    emit(opts, io::print_presentation(pres));
    return kExitPass;
}

int run_dims(const std::string& file, const CommonOptions& opts) {
    Timer timer;
    auto model = build_model(io::load_presentation(file), opts.cap, tensor_budget());
    const auto dims = hilbert_dims(*model);
    if (opts.format == "machine") {
        auto meta = make_meta("dims", {file});
        add_param(meta, "cap", static_cast<std::int64_t>(opts.cap));
        meta.timing_ms = timer.elapsed_ms();
        emit(opts, io::machine_report_dims(meta, dims));
    } else {
        emit(opts, io::human_report_dims(dims));
    }
    return kExitPass;
}

int run_check_uk(const std::string& file, const CommonOptions& opts) {
    Timer timer;
    auto model = build_model(io::load_presentation(file), opts.cap, tensor_budget());
    const UKReport report = check_universal_koszul(model, make_strategy(opts), opts.colon_cap,
                                                   opts.jobs, subspace_budget());
    if (opts.format == "machine") {
        auto meta = make_meta("check-uk", {file});
        add_param(meta, "cap", static_cast<std::int64_t>(opts.cap));
        add_param(meta, "colon_cap", static_cast<std::int64_t>(opts.colon_cap));
        add_strategy_params(meta, opts);
        meta.timing_ms = timer.elapsed_ms();
        emit(opts, io::machine_report_uk(meta, report));
    } else {
        emit(opts, io::human_report_uk(report));
    }
    return report.passed() ? kExitPass : kExitFail;
}

int run_check_auk(const std::string& pres_file, const std::string& family_file,
                  const CommonOptions& opts) {
    Timer timer;
    const auto pres = io::load_presentation(pres_file);
    auto model = build_model(pres, opts.cap, tensor_budget());
    const auto family = io::parse_family(read_bytes(family_file), pres);
    const auto system = build_filtered_system(model, family.subspaces, family.close_under_sums,
                                              subspace_budget());
    const AUKReport report = check_asymptotic_uk(model, system, opts.colon_cap, opts.union_cap,
                                                 make_strategy(opts), opts.jobs,
                                                 subspace_budget());
    if (opts.format == "machine") {
        auto meta = make_meta("check-auk", {pres_file, family_file});
        add_param(meta, "cap", static_cast<std::int64_t>(opts.cap));
        add_param(meta, "colon_cap", static_cast<std::int64_t>(opts.colon_cap));
        add_param(meta, "union_cap", static_cast<std::int64_t>(opts.union_cap));
        add_strategy_params(meta, opts);
        meta.timing_ms = timer.elapsed_ms();
        emit(opts, io::machine_report_auk(meta, report));
    } else {
        emit(opts, io::human_report_auk(report));
    }
    return report.passed() ? kExitPass : kExitFail;
}

int run_check_capture(const std::string& global_file, const std::string& quotient_file,
                      const std::string& map_file, const CommonOptions& opts) {
    Timer timer;
    auto a_model = build_model(io::load_presentation(global_file), opts.cap, tensor_budget());
    auto q_model = build_model(io::load_presentation(quotient_file), opts.cap, tensor_budget());
    Matrix m = load_arrow_file(map_file, q_model->presentation().gen_labels,
                               a_model->presentation().gen_labels, a_model->p());
    const GradedMap pi_star(q_model, a_model, std::move(m));
    const CaptureReport report = check_quotient_capture(a_model, q_model, pi_star, opts.cap);
    if (opts.format == "machine") {
        auto meta = make_meta("check-capture", {global_file, quotient_file, map_file});
        add_param(meta, "cap", static_cast<std::int64_t>(opts.cap));
        meta.timing_ms = timer.elapsed_ms();
        emit(opts, io::machine_report_capture(meta, report));
    } else {
        emit(opts, io::human_report_capture(report));
    }
    return report.passed() ? kExitPass : kExitFail;
}

int run_check_colimit(const std::string& system_file, const CommonOptions& opts) {
    Timer timer;
    const auto system = io::load_inflation_system(system_file, opts.cap, tensor_budget());
    const ColimitReport report = check_colimit_low_degree(system, opts.cap);
    if (opts.format == "machine") {
        auto meta = make_meta("check-colimit", {system_file});
        add_param(meta, "cap", static_cast<std::int64_t>(opts.cap));
        meta.timing_ms = timer.elapsed_ms();
        emit(opts, io::machine_report_colimit(meta, report));
    } else {
        emit(opts, io::human_report_colimit(report));
    }
    return report.ok ? kExitPass : kExitFail;
}

int run_check_galois(const std::string& system_file, const CommonOptions& opts) {
    Timer timer;
    const auto system = io::load_inflation_system(system_file, opts.cap, tensor_budget());
    auto meta = make_meta("check-galois", {system_file});
    add_param(meta, "cap", static_cast<std::int64_t>(opts.cap));
    add_param(meta, "colon_cap", static_cast<std::int64_t>(opts.colon_cap));
    add_param(meta, "union_cap", static_cast<std::int64_t>(opts.union_cap));
    add_strategy_params(meta, opts);
    try {
        const ColimitReport colimit = check_colimit_low_degree(system, opts.union_cap);
        const AUKReport auk = check_galois_pipeline(system, opts.colon_cap, opts.union_cap,
                                                    make_strategy(opts), opts.jobs);
        if (opts.format == "machine") {
            meta.timing_ms = timer.elapsed_ms();
            emit(opts, io::machine_report_galois(meta, colimit, auk));
        } else {
            emit(opts, io::human_report_galois(colimit, auk));
        }
        return auk.passed() ? kExitPass : kExitFail;
    } catch (const galois_error& e) {
        const std::string verdict = "HypothesisFails(" + e.hypothesis() + ")";
        if (opts.format == "machine") {
            meta.timing_ms = timer.elapsed_ms();
            emit(opts, io::machine_report_error(meta, verdict, e.what()));
        } else {
            emit(opts, io::human_report_error(verdict, e.what()));
        }
        return kExitFail;
    }
}

int run_check_local_global(const std::string& global_file, const std::string& manifest_file,
                           const CommonOptions& opts) {
    Timer timer;
    auto a_model = build_model(io::load_presentation(global_file), opts.cap, tensor_budget());
    const auto data = io::load_local_global_manifest(manifest_file, a_model, tensor_budget());
    const LocalGlobalReport report =
        check_local_global(a_model, data, opts.colon_cap, make_strategy(opts), opts.jobs);
    if (opts.format == "machine") {
        auto meta = make_meta("check-local-global", {global_file, manifest_file});
        add_param(meta, "cap", static_cast<std::int64_t>(opts.cap));
        add_param(meta, "colon_cap", static_cast<std::int64_t>(opts.colon_cap));
        add_strategy_params(meta, opts);
        meta.timing_ms = timer.elapsed_ms();
        emit(opts, io::machine_report_local_global(meta, report));
    } else {
        emit(opts, io::human_report_local_global(report));
    }
    return report.ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal Koszulity toolkit for quadratic algebras over F_p"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string kind = "exterior";
    std::size_t gen_n = 2;
    std::uint32_t gen_p = 2;
    std::uint64_t gen_seed = 0;
    std::string pres_file, family_file, quotient_file, map_file, system_file, manifest_file;

    auto* gen = app.add_subcommand("gen", "Generate a presentation file");
    gen->add_option("--kind", kind, "Presentation family")
        ->check(CLI::IsMember({"exterior", "cd1", "polynomial", "random"}));
    gen->add_option("-n,--generators", gen_n, "Number of generators")->required();
    gen->add_option("-p,--prime", gen_p, "Coefficient prime")->required();
    gen->add_option("--seed", gen_seed, "Seed for the random family");
    gen->add_option("-o,--output", opts.output, "Write the presentation to a file");

    auto* dims = app.add_subcommand("dims", "Graded dimensions of a presented algebra");
    dims->add_option("presentation", pres_file, "Presentation file")->required();
    dims->add_option("--cap", opts.cap, "Top degree of the model");
    add_format_option(dims, opts);

    auto* uk = app.add_subcommand("check-uk", "Check universal Koszulity");
    uk->add_option("presentation", pres_file, "Presentation file")->required();
    uk->add_option("--cap", opts.cap, "Top degree of the model");
    uk->add_option("--colon-cap", opts.colon_cap, "Top degree for colon ideals");
    add_strategy_options(uk, opts);
    add_format_option(uk, opts);

    auto* auk = app.add_subcommand("check-auk", "Check asymptotic universal Koszulity");
    auk->add_option("presentation", pres_file, "Presentation file")->required();
    auk->add_option("family", family_file, "Subspace family file")->required();
    auk->add_option("--cap", opts.cap, "Top degree of the model");
    auk->add_option("--colon-cap", opts.colon_cap, "Top degree for colon ideals");
    auk->add_option("--union-cap", opts.union_cap, "Top degree for union coverage");
    add_strategy_options(auk, opts);
    add_format_option(auk, opts);

    auto* capture = app.add_subcommand("check-capture", "Check quotient capture along a map");
    capture->add_option("global", pres_file, "Global presentation file")->required();
    capture->add_option("quotient", quotient_file, "Quotient presentation file")->required();
    capture->add_option("map", map_file, "Arrow file for the inflation map")->required();
    capture->add_option("--cap", opts.cap, "Top degree of the models");
    capture->add_option("--jobs", opts.jobs, "Worker thread count");
    add_format_option(capture, opts);

    auto* colimit = app.add_subcommand("check-colimit", "Check low-degree colimit behavior");
    colimit->add_option("system", system_file, "Inflation system file")->required();
    colimit->add_option("--cap", opts.cap, "Top degree of the models");
    colimit->add_option("--jobs", opts.jobs, "Worker thread count");
    add_format_option(colimit, opts);

    auto* galois = app.add_subcommand("check-galois", "Run the directed-system pipeline");
    galois->add_option("system", system_file, "Inflation system file")->required();
    galois->add_option("--cap", opts.cap, "Top degree of the models");
    galois->add_option("--colon-cap", opts.colon_cap, "Top degree for colon ideals");
    galois->add_option("--union-cap", opts.union_cap, "Top degree for union coverage");
    add_strategy_options(galois, opts);
    add_format_option(galois, opts);

    auto* lg = app.add_subcommand("check-local-global", "Run the local-global criterion");
    lg->add_option("global", pres_file, "Global presentation file")->required();
    lg->add_option("manifest", manifest_file, "Local-global manifest file")->required();
    lg->add_option("--cap", opts.cap, "Top degree of the model");
    lg->add_option("--colon-cap", opts.colon_cap, "Top degree for colon ideals");
    add_strategy_options(lg, opts);
    add_format_option(lg, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(kind, gen_n, gen_p, gen_seed, opts);
        if (dims->parsed())
            return run_dims(pres_file, opts);
        if (uk->parsed())
            return run_check_uk(pres_file, opts);
        if (auk->parsed())
            return run_check_auk(pres_file, family_file, opts);
        if (capture->parsed())
            return run_check_capture(pres_file, quotient_file, map_file, opts);
        if (colimit->parsed())
            return run_check_colimit(system_file, opts);
        if (galois->parsed())
            return run_check_galois(system_file, opts);
        if (lg->parsed())
            return run_check_local_global(pres_file, manifest_file, opts);
    } catch (const budget_error& e) {
        std::cerr << "ukoszul: budget exceeded: " << e.what() << "\n";
        return kExitError;
    } catch (const io::parse_error& e) {
        std::cerr << "ukoszul: parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "ukoszul: error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
