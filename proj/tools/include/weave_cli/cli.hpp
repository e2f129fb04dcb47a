#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "weave/contact.hpp"
#include "weave/ideal.hpp"

namespace weave::cli {

using Json = nlohmann::ordered_json;

/// Validated input file.
struct InputDocument {
  int n = 0;
  std::vector<BiHomogPde> pdes;
  bool asserted_irreducible = false;
  bool asserted_quasi_smooth = false;
  /// "sha256:" followed by the hex digest of the raw input bytes.
  std::string digest;
};

/// Throws InputError on malformed JSON or invalid polynomials; messages name the
/// PDE and term index.
InputDocument parse_input_text(std::string_view text);
InputDocument parse_input(const std::filesystem::path& path);

enum class Format { Json, Text };

struct Options {
  /// Restrict chart-wise commands to one chart; empty means the full atlas.
  std::optional<Chart> chart;
  Format format = Format::Json;
  IdealOptions ideal;
};

/// "i,j" -> Chart. Throws UsageError on malformed text.
Chart parse_chart(std::string_view text);

struct Report {
  std::string command;
  std::string input_digest;
  /// "all" or "i,j".
  std::string charts;
  Json result;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

const std::vector<std::string>& commands();

/// Throws UsageError for unknown commands, InputError for documents unfit for
/// the command, CapExceeded (naming the chart) when the pair cap is hit.
Report run(std::string_view command, const InputDocument& doc, const Options& options);

std::string to_json(const Report& r);
/// Aligned "key  value" lines.
std::string to_text(const Report& r);
std::string render(const Report& r, Format format);

/// Inverse of to_json. Throws InputError when the schema does not match.
Report parse_report(std::string_view text);

}  // namespace weave::cli
