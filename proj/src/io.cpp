#include "jpa/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace jpa {

namespace {

// Integers beyond 64 bits must survive JSON transit exactly: encode as
// decimal strings, keep plain numbers otherwise.
json encode_z(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

mpz_class decode_z(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long>()));
  return mpz_class(j.get<std::string>());
}

}  // namespace

json ScanRecord::to_json(size_t digit_limit) const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["params"] = params;
  j["status"] = status;
  if (l0 >= 0) j["l0"] = l0;
  if (l1 >= 0) j["l1"] = l1;
  j["steps_used"] = steps_used;
  json digs = json::array();
  size_t count = std::min(digits.size(), digit_limit);
  for (size_t nu = 0; nu < count; ++nu) {
    json row = json::array();
    for (const auto& d : digits[nu]) row.push_back(encode_z(d));
    digs.push_back(std::move(row));
  }
  j["digits"] = std::move(digs);
  j["digits_truncated"] = digits_truncated || digits.size() > digit_limit;
  if (!unit_coeffs.empty()) {
    json uc = json::array();
    for (const auto& q : unit_coeffs) uc.push_back(format_q(q));
    j["unit_coeffs"] = std::move(uc);
  }
  if (!unit_norm.empty()) j["unit_norm"] = unit_norm;
  j["findings"] = findings;
  j["wall_ms"] = wall_ms;
  return j;
}

ScanRecord ScanRecord::from_json(const json& j) {
  ScanRecord r;
  r.kind = j.at("kind").get<std::string>();
  r.params = j.at("params");
  r.status = j.at("status").get<std::string>();
  r.l0 = j.value("l0", -1l);
  r.l1 = j.value("l1", -1l);
  r.steps_used = j.value("steps_used", 0l);
  for (const auto& row : j.value("digits", json::array())) {
    std::vector<mpz_class> d;
    for (const auto& x : row) d.push_back(decode_z(x));
    r.digits.push_back(std::move(d));
  }
  r.digits_truncated = j.value("digits_truncated", false);
  for (const auto& x : j.value("unit_coeffs", json::array()))
    r.unit_coeffs.push_back(parse_q(x.get<std::string>()));
  r.unit_norm = j.value("unit_norm", std::string());
  r.findings = j.value("findings", std::vector<std::string>());
  r.wall_ms = j.value("wall_ms", 0l);
  return r;
}

void fill_from_outcome(ScanRecord& rec, const ExpansionOutcome& out, bool with_unit) {
  rec.status = status_name(out.status);
  rec.steps_used = out.steps_used;
  rec.digits = out.digits;
  if (out.periodic()) {
    rec.l0 = out.l0;
    rec.l1 = out.l1;
    if (with_unit) {
      FieldElem eps = hasse_bernstein_unit(out);
      rec.unit_coeffs = eps.coeffs();
      rec.unit_norm = format_q(eps.norm());
    }
  }
}

JsonlWriter::JsonlWriter(const std::string& path, bool resume) {
  namespace fs = std::filesystem;
  if (resume && fs::exists(path)) {
    std::ifstream in(path);
    std::string line;
    std::streampos good_end = 0;
    while (std::getline(in, line)) {
      if (in.eof() && !line.empty()) break;  // final line without newline: partial write
      try {
        json j = json::parse(line);
        done_.insert(j.at("params").dump());
        good_end = in.tellg();
      } catch (const json::exception&) {
        std::cerr << "warning: skipping corrupt record line in " << path << "\n";
        good_end = in.tellg();
      }
      if (good_end == std::streampos(-1)) good_end = static_cast<std::streamoff>(fs::file_size(path));
    }
    in.close();
    auto size = fs::file_size(path);
    if (static_cast<std::streamoff>(size) > static_cast<std::streamoff>(good_end))
      fs::resize_file(path, static_cast<uintmax_t>(static_cast<std::streamoff>(good_end)));
    out_.open(path, std::ios::app);
  } else {
    out_.open(path, resume ? std::ios::app : std::ios::trunc);
  }
  if (!out_) throw std::runtime_error("JsonlWriter: cannot open " + path);
}

bool JsonlWriter::already_done(const json& params) const {
  return done_.count(params.dump()) > 0;
}

void JsonlWriter::write(const ScanRecord& rec, size_t digit_limit) {
  if (already_done(rec.params)) {
    ++skipped_;
    return;
  }
  out_ << rec.to_json(digit_limit).dump() << "\n";
  out_.flush();
}

std::vector<ScanRecord> read_jsonl(const std::string& path) {
  std::vector<ScanRecord> out;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_jsonl: cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(ScanRecord::from_json(json::parse(line)));
    } catch (const json::exception& e) {
      std::cerr << "warning: skipping corrupt record: " << e.what() << "\n";
    }
  }
  return out;
}

}  // namespace jpa
