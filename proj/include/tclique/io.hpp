#pragma once

#include <tclique/constructions.hpp>
#include <tclique/reduction.hpp>
#include <tclique/subword.hpp>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tclique {

using Json = nlohmann::ordered_json;

inline constexpr const char * version_string = "0.1.0";

/// Input error with a 1-based location; line 0 means the whole input.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string & message);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// ".trn" text: `tournament <n>` then n rows of n '0'/'1' characters, or the
/// JSON mirror {"n": n, "rows": [...]} when the text starts with '{'.
Tournament parse_tournament(std::string_view text, const std::string & source = "<input>");
std::string format_trn(const Tournament & t);
Json tournament_json(const Tournament & t);

Tournament load_tournament(const std::filesystem::path & path);
/// Writes the JSON mirror when the extension is ".json", else ".trn" text.
void save_tournament(const Tournament & t, const std::filesystem::path & path);

std::string read_file(const std::filesystem::path & path);
void write_file(const std::filesystem::path & path, std::string_view contents);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

/// A JSON array of vertex ids, or whitespace/comma separated ids.
Ordering parse_ordering(std::string_view text, const std::string & source = "<input>");
Json ordering_json(const Ordering & ordering, bool one_based = false);

Json sizing_json(const SizingReport & s);
Json layout_json(const CopyLayout & layout);

/// Landmarks plus what witness translation needs: the formula, the gadget
/// certified orderings and W's ordering.
Json landmarks_json(const ReductionInstance & inst);
/// Rebuilds an instance from its tournament and landmark file.
ReductionInstance instance_from_json(const Tournament & t, const Json & landmarks);

Json pass_json(const PassInstance & inst);
PassInstance pass_from_json(const Json & j);

struct ReportEnvelope
{
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // name, digest
    Json result = Json::object();
    double elapsed_ms = 0;
    std::optional<std::uint64_t> nodes_explored;
    std::string budget_status = "ok"; // ok | exhausted | unbounded
    std::string version = version_string;
};

Json envelope_json(const ReportEnvelope & e);

} // namespace tclique
