#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "padiccf/convergence.hpp"
#include "padiccf/schemes.hpp"

namespace padiccf::cli {

inline constexpr const char* kSchemaVersion = "1";

// Raised for documents that do not match the schema (unknown or missing
// fields, wrong types, malformed numbers).
class DocumentError : public Error {
 public:
  using Error::Error;
};

nlohmann::ordered_json quad_descriptor(const QuadIrr& alpha);
nlohmann::ordered_json input_descriptor(const QuadIrr& input);

// Trace document: every big integer and fraction is a decimal string.
nlohmann::ordered_json trace_to_json(const ExpansionTrace& trace);
ExpansionTrace trace_from_json(const nlohmann::ordered_json& doc);

// Aligned plain-text rendering with the same numeric content as the JSON.
void write_trace_table(std::ostream& os, const ExpansionTrace& trace);

// Shared table writer: one row per entry, columns padded to the widest cell.
void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

std::string optional_to_string(const std::optional<long>& value);
nlohmann::ordered_json optional_to_json(const std::optional<long>& value);
template <typename T>
nlohmann::ordered_json optional_to_json(const std::optional<T>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

}  // namespace padiccf::cli
