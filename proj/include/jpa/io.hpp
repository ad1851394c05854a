#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "jpa/jpa.hpp"

namespace jpa {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr size_t kDefaultDigitLimit = 500;

// One self-contained JSONL record; re-runnable from its params field.
struct ScanRecord {
  std::string kind;  // expand | family | nthroot | conjecture | analyze
  json params;
  std::string status;
  long l0 = -1;  // -1 encodes "absent"
  long l1 = -1;
  long steps_used = 0;
  std::vector<std::vector<mpz_class>> digits;
  bool digits_truncated = false;
  std::vector<mpq_class> unit_coeffs;
  std::string unit_norm;  // exact decimal/rational text; empty when absent
  std::vector<std::string> findings;
  long wall_ms = 0;

  json to_json(size_t digit_limit = kDefaultDigitLimit) const;
  static ScanRecord from_json(const json& j);
};

// Copies status/lengths/digits/unit out of an engine outcome.
void fill_from_outcome(ScanRecord& rec, const ExpansionOutcome& out, bool with_unit);

// Append-only JSONL writer with exact-params resume. On open with resume=true,
// a partial (unterminated or unparsable) final line is truncated away and the
// params of all intact records are collected for skipping.
class JsonlWriter {
 public:
  JsonlWriter(const std::string& path, bool resume);
  bool already_done(const json& params) const;
  void write(const ScanRecord& rec, size_t digit_limit = kDefaultDigitLimit);
  size_t skipped() const { return skipped_; }

 private:
  std::ofstream out_;
  std::set<std::string> done_;  // canonical dump of params
  size_t skipped_ = 0;
};

std::vector<ScanRecord> read_jsonl(const std::string& path);  // skips corrupt lines

}  // namespace jpa
