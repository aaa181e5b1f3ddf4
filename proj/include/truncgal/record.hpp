#pragma once

#include <string>

#include <json.hpp>

#include "truncgal/classify.hpp"

namespace truncgal {

inline constexpr int kSchemaVersion = 1;

// One line of JSON-lines output. Records are compared without duration.
struct VerificationRecord {
  int schema_version = kSchemaVersion;
  GaloisVerdict verdict;
  i64 duration_ms = 0;

  int r() const { return verdict.r; }
  i64 t() const { return verdict.t; }
  i64 n() const { return verdict.n; }
};

// Integers within +-(2^53 - 1) become JSON numbers, anything larger a decimal string.
nlohmann::json json_integer(const mpz_class& value);
mpz_class integer_from_json(const nlohmann::json& j);

nlohmann::json evidence_to_json(const Evidence& ev);
Evidence evidence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationRecord& rec);
VerificationRecord record_from_json(const nlohmann::json& j);

// Compact single-line JSON, no trailing newline.
std::string to_line(const VerificationRecord& rec);

}  // namespace truncgal
