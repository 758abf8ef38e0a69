#ifndef UKOSZUL_IO_HPP
#define UKOSZUL_IO_HPP

#include "ukoszul/cohomology.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>

namespace ukoszul::io {

inline constexpr const char* kToolName = "ukoszul";
inline constexpr const char* kToolVersion = "0.1.0";

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    parse_error(const std::string& file, std::size_t line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A linear combination of generator labels, e.g. "x1 + 2 x3" or "0".
std::vector<std::uint16_t> parse_combo(const std::string& text,
                                       const std::vector<std::string>& labels, std::uint32_t p,
                                       std::size_t line_no);

QuadraticPresentation parse_presentation(const std::string& text);
std::string print_presentation(const QuadraticPresentation& pres);

QuadraticPresentation load_presentation(const std::filesystem::path& file);

struct SubspaceFamily {
    bool close_under_sums = false;
    std::vector<Subspace> subspaces;
};

/// Family file over the generators of an already-parsed presentation:
/// `close_under_sums = <bool>` plus `subspace = combo; combo; ...` lines.
SubspaceFamily parse_family(const std::string& text, const QuadraticPresentation& pres);

/// Degree-1 matrix from `label -> combo` arrow lines, one per source label.
Matrix parse_arrow_block(const std::vector<std::pair<std::size_t, std::string>>& lines,
                         const std::vector<std::string>& source_labels,
                         const std::vector<std::string>& target_labels, std::uint32_t p);

/// Inflation-system file: `target = FILE`, then `item FILE` blocks with
/// arrow lines into the target's generators, then optional `order I -> J`
/// blocks with arrow lines between the named items. Referenced paths are
/// resolved relative to the system file.
InflationSystem load_inflation_system(const std::filesystem::path& file, std::size_t cap,
                                      std::size_t tensor_budget = kDefaultTensorBudget);

/// Local-global manifest: `datum` blocks holding `W = combo; ...`, one or
/// more `local FILE` blocks with arrow lines over the global generators,
/// and an optional `target FILE` presentation for B_W.
std::vector<LocalGlobalDatum> load_local_global_manifest(const std::filesystem::path& file,
                                                         ModelPtr a_model,
                                                         std::size_t tensor_budget = kDefaultTensorBudget);

std::uint64_t fnv1a(std::string_view data);
std::uint64_t fnv1a_extend(std::uint64_t state, std::string_view data);
std::string hex64(std::uint64_t v);

using ParamValue = std::variant<std::int64_t, bool, std::string>;

/// Shared head of every report document; keys are emitted in a fixed order
/// and `timing_ms` is always the last key of the document.
struct ReportMeta {
    std::string command;
    std::vector<std::string> inputs;
    std::uint64_t digest = 0;
    std::vector<std::pair<std::string, ParamValue>> params;
    std::int64_t timing_ms = 0;
};

std::string machine_report_dims(const ReportMeta& meta, const std::vector<std::size_t>& dims);
std::string machine_report_uk(const ReportMeta& meta, const UKReport& report);
std::string machine_report_auk(const ReportMeta& meta, const AUKReport& report);
std::string machine_report_capture(const ReportMeta& meta, const CaptureReport& report);
std::string machine_report_colimit(const ReportMeta& meta, const ColimitReport& report);
std::string machine_report_galois(const ReportMeta& meta, const ColimitReport& colimit,
                                  const AUKReport& auk);
std::string machine_report_local_global(const ReportMeta& meta, const LocalGlobalReport& report);
std::string machine_report_error(const ReportMeta& meta, const std::string& verdict,
                                 const std::string& detail);

std::string human_report_dims(const std::vector<std::size_t>& dims);
std::string human_report_uk(const UKReport& report);
std::string human_report_auk(const AUKReport& report);
std::string human_report_capture(const CaptureReport& report);
std::string human_report_colimit(const ColimitReport& report);
std::string human_report_galois(const ColimitReport& colimit, const AUKReport& auk);
std::string human_report_local_global(const LocalGlobalReport& report);
std::string human_report_error(const std::string& verdict, const std::string& detail);

} // namespace ukoszul::io

#endif
