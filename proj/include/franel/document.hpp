#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "franel/errors.hpp"
#include "franel/operator.hpp"
#include "franel/telescoper.hpp"

namespace franel {

/// Malformed JSON or a document that violates the schema.
class DocumentError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct Provenance {
  std::string tool_version;
  std::string timestamp;
  int r_max = 0;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A telescoper for binom(n, k)^s with its certificate, as persisted on disk.
struct OperatorDocument {
  static constexpr int kSchemaVersion = 1;

  int s = 1;
  RecurrenceOperator op{{UPoly(1L)}};
  Certificate certificate;
  Provenance provenance;
  friend bool operator==(const OperatorDocument&, const OperatorDocument&) = default;
};

/// Pretty-printed JSON, newline-terminated. Integers are decimal strings.
std::string serialize(const OperatorDocument& doc);

/// Throws DocumentError on malformed JSON, missing fields, or non-integer
/// coefficient strings. The certificate is renormalized on load.
OperatorDocument parse_document(const std::string& text);

/// UTC ISO-8601 time, taken from SOURCE_DATE_EPOCH when set.
std::string current_timestamp();

std::string tool_version();

/// Tag naming the operator/certificate normalization convention.
inline constexpr const char* kNormalizationTag = "prim-poslead-grlex";

/// File name under the cache directory for a telescope run.
std::string cache_file_name(int s, int r_max);

/// Cache directory: FRANEL_CACHE_DIR, else $XDG_CACHE_HOME/franel, else
/// $HOME/.cache/franel, else ./.franel-cache.
std::filesystem::path default_cache_dir();

/// Whole file contents, or nullopt when the file cannot be opened.
std::optional<std::string> read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace franel
