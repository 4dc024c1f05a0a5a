#pragma once

// Report assembly for the command line tool.  Reports are JSON objects with
// a fixed header (tool, version, command echo, input digest) followed by the
// command payload; key order is insertion order, so identical inputs render
// byte-identically.  The text format is a cosmetic view of the same tree.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace stratalab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "stratalab";
inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a over the raw bytes.
std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a:" followed by 16 lowercase hex digits.
std::string input_digest(std::string_view bytes);

/// Header object every report starts from; digest_source is the exact input
/// bytes the command consumed.
Json report_header(const std::string& command, std::string_view digest_source);

/// Renders the report; format is "json" (the contract, dump with 2-space
/// indent) or "text" (indented key/value view with aligned tables).
std::string render_report(const Json& report, const std::string& format);

}  // namespace stratalab
