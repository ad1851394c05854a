#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "jpa/analysis.hpp"
#include "jpa/families.hpp"
#include "jpa/io.hpp"
#include "jpa/pureroot.hpp"

namespace {

using namespace jpa;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResourceLimit = 3;

ExpandLimits limits_from_env() {
  ExpandLimits lim;
  if (const char* v = std::getenv("JPA_BIT_LIMIT")) {
    char* end = nullptr;
    long bits = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || bits < 1)
      throw std::invalid_argument("JPA_BIT_LIMIT must be a positive integer");
    lim.bit_limit = static_cast<size_t>(bits);
  }
  return lim;
}

std::vector<mpz_class> parse_mpz_list(const std::string& s) {
  std::vector<mpz_class> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty entry in integer list");
    out.emplace_back(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json interval_json(const Interval& I) {
  return json{{"lo", format_q(I.lo)}, {"hi", format_q(I.hi)}};
}

FieldPtr field_for(const IntPoly& f) {
  return field_new(f, steep_shape_ok(f) ? NumberField::Mode::steep
                                         : NumberField::Mode::positive_root);
}

json report_json(const VerificationReport& r) {
  json j;
  j["n"] = r.params.n;
  j["m"] = r.params.m;
  j["t"] = r.params.t.get_str();
  json cs = json::array();
  for (const auto& c : r.params.c) cs.push_back(c.get_str());
  j["c"] = cs;
  j["pass"] = r.pass;
  j["status"] = status_name(r.status);
  j["l0"] = r.l0;
  j["l1"] = r.l1;
  j["digits_ok"] = r.digits_ok;
  j["unit_ok"] = r.unit_ok;
  j["norm_ok"] = r.norm_ok;
  j["closed_forms_ok"] = r.closed_forms_ok;
  json uc = json::array();
  for (const auto& q : r.unit_coeffs) uc.push_back(format_q(q));
  j["unit_coeffs"] = uc;
  j["unit_norm"] = format_q(r.unit_norm);
  if (!r.first_divergence.empty()) j["first_divergence"] = r.first_divergence;
  if (!r.findings.empty()) j["findings"] = r.findings;
  return j;
}

int cmd_expand(const std::string& poly_s, const std::string& alpha_s, long budget,
               const std::string& out_path, const ExpandLimits& limits) {
  IntPoly f = parse_intpoly(poly_s);
  FieldPtr F = field_for(f);
  std::vector<FieldElem> a0;
  size_t pos = 0;
  while (pos <= alpha_s.size()) {
    size_t semi = alpha_s.find(';', pos);
    std::string tok =
        alpha_s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    if (!tok.empty()) a0.push_back(parse_elem(F, tok));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (a0.empty()) throw std::invalid_argument("expand: no starting coordinates given");
  ScanRecord rec;
  rec.kind = "expand";
  rec.params = {{"poly", format_intpoly(f)}, {"budget", budget}};
  json as = json::array();
  for (const auto& a : a0) as.push_back(format_elem(a));
  rec.params["alpha"] = as;
  try {
    ExpansionOutcome out = expand(a0, budget, limits);
    fill_from_outcome(rec, out, /*with_unit=*/true);
  } catch (const ZeroDivisorError& e) {
    rec.status = "ZeroDivisor";
    rec.findings.push_back(std::string(e.what()) + "; factor witness " +
                           format_intpoly(e.witness));
  }
  std::cout << rec.to_json().dump(2) << "\n";
  if (!out_path.empty()) {
    JsonlWriter w(out_path, /*resume=*/false);
    w.write(rec);
  }
  return kExitOk;
}

int cmd_family_verify(int n, int m, const std::string& t_s, const std::string& c_s,
                      long budget) {
  FamilyParams p;
  p.n = n;
  p.m = m;
  p.t = mpz_class(t_s);
  p.c = parse_mpz_list(c_s);
  p.validate();
  VerificationReport r = verify_family(p, budget);
  std::cout << report_json(r).dump(2) << "\n";
  return r.pass ? kExitOk : kExitVerifyFail;
}

int cmd_family_grid(int n_max, int m_span, const std::string& t_s, int c_max, long budget,
                    int threads) {
  auto cases = grid_cases(n_max, m_span, parse_mpz_list(t_s), c_max);
  std::vector<VerificationReport> reports(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      reports[i] = verify_family(cases[i], budget);
    }
  };
  int nthreads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) {
      ++failed;
      std::cout << report_json(r).dump() << "\n";
    }
  }
  std::cout << "grid: " << cases.size() - failed << "/" << cases.size() << " cases pass\n";
  return failed == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_analyze(const std::string& poly_s) {
  RootReport r = analyze(parse_intpoly(poly_s));
  json j;
  j["poly"] = format_intpoly(r.poly);
  j["poly_pretty"] = r.poly.str();
  if (r.had_multiple_roots) j["squarefree"] = format_intpoly(r.squarefree);
  j["inside_unit_disk"] = r.inside;
  j["on_unit_circle"] = r.on_circle;
  j["outside_unit_disk"] = r.outside;
  if (r.dominant_root) j["dominant_root"] = interval_json(*r.dominant_root);
  if (r.pisot) {
    j["pisot"] = pisot_name(r.pisot->verdict);
    if (!r.pisot->note.empty()) j["pisot_note"] = r.pisot->note;
  }
  json negs = json::array();
  for (const auto& I : r.negative_real_roots) negs.push_back(interval_json(I));
  j["negative_real_roots"] = negs;
  if (r.max_nonreal_modulus) {
    j["max_nonreal_modulus"] = interval_json(*r.max_nonreal_modulus);
    j["max_nonreal_modulus_kind"] = r.modulus_kind;
  }
  j["cyclotomic_divisors"] = r.cyclotomic_divisors;
  switch (r.irreducibility.kind) {
    case IrreducibilityVerdict::Kind::Irreducible: j["irreducibility"] = "Irreducible"; break;
    case IrreducibilityVerdict::Kind::Reducible:
      j["irreducibility"] = "Reducible";
      j["factor_witness"] = format_intpoly(r.irreducibility.witness);
      break;
    case IrreducibilityVerdict::Kind::Unknown: j["irreducibility"] = "Unknown"; break;
  }
  if (!r.irreducibility.note.empty()) j["irreducibility_note"] = r.irreducibility.note;
  if (!r.findings.empty()) j["findings"] = r.findings;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_unit(int n, int m, const std::string& t_s, const std::string& c_s) {
  FamilyParams p;
  p.n = n;
  p.m = m;
  p.t = mpz_class(t_s);
  p.c = parse_mpz_list(c_s);
  p.validate();
  FieldPtr F = family_field(p);
  FieldElem eps = expected_unit(p, F);
  mpq_class nrm = eps.norm();
  json j;
  j["poly"] = format_intpoly(F->poly());
  j["unit"] = format_elem(eps);
  j["unit_pretty"] = eps.str();
  j["norm"] = format_q(nrm);
  std::cout << j.dump(2) << "\n";
  return abs(nrm) == 1 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jacobi-Perron expansions: periodic families, n-th root scans, "
               "root analytics"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads (1 = deterministic sequential)")
      ->capture_default_str();

  // expand
  auto* exp = app.add_subcommand("expand", "run the expansion of an explicit starting vector");
  std::string e_poly, e_alpha, e_out;
  long e_budget = 100;
  exp->add_option("--poly", e_poly, "defining polynomial, c0,c1,...,1 (constant first)")
      ->required();
  exp->add_option("--alpha", e_alpha, "start vector, elements 'c0,c1,...' joined by ';'")
      ->required();
  exp->add_option("--budget", e_budget, "maximum steps")->capture_default_str();
  exp->add_option("--out", e_out, "append the record to this JSONL file");

  // family verify / grid
  auto* fam = app.add_subcommand("family", "periodic-family construction and verification");
  fam->require_subcommand(1);
  auto* fv = fam->add_subcommand("verify", "verify one parameter tuple end to end");
  int fv_n = 0, fv_m = 0;
  std::string fv_t = "1", fv_c;
  long fv_budget = 0;
  fv->add_option("--n", fv_n, "degree")->required();
  fv->add_option("--m", fv_m, "period length")->required();
  fv->add_option("--t", fv_t, "parameter t >= 1")->capture_default_str();
  fv->add_option("--c", fv_c, "c0,c1,...,c_{n-1}")->required();
  fv->add_option("--budget", fv_budget, "step budget (0 = expected period + 2)");
  auto* fg = fam->add_subcommand("grid", "verify the whole parameter grid");
  int fg_nmax = 5, fg_mspan = 5, fg_cmax = 3;
  std::string fg_t = "1,2,7";
  long fg_budget = 0;
  fg->add_option("--n-max", fg_nmax)->capture_default_str();
  fg->add_option("--m-span", fg_mspan)->capture_default_str();
  fg->add_option("--t-list", fg_t)->capture_default_str();
  fg->add_option("--c-max", fg_cmax)->capture_default_str();
  fg->add_option("--budget", fg_budget);

  // scan nthroot / conjecture
  auto* scan = app.add_subcommand("scan", "parameter sweeps with JSONL output");
  scan->require_subcommand(1);
  auto* sn = scan->add_subcommand("nthroot", "expansions of (m^{1/n}, ..., m^{(n-1)/n})");
  int sn_n = 3;
  long sn_from = 0, sn_to = 0, sn_budget = 2000;
  std::string sn_out;
  bool sn_resume = false;
  sn->add_option("--n", sn_n)->capture_default_str();
  sn->add_option("--from", sn_from, "first m")->required();
  sn->add_option("--to", sn_to, "last m")->required();
  sn->add_option("--budget", sn_budget)->capture_default_str();
  sn->add_option("--out", sn_out, "JSONL output path")->required();
  sn->add_flag("--resume", sn_resume, "skip params already in the output file");
  auto* sc = scan->add_subcommand("conjecture", "expansions for m = x^3 - x");
  long sc_from = 2, sc_to = 0, sc_budget = 2000;
  std::string sc_out;
  bool sc_resume = false;
  sc->add_option("--x-from", sc_from)->capture_default_str();
  sc->add_option("--x-to", sc_to)->required();
  sc->add_option("--budget", sc_budget)->capture_default_str();
  sc->add_option("--out", sc_out, "JSONL output path")->required();
  sc->add_flag("--resume", sc_resume, "skip params already in the output file");

  // analyze
  auto* an = app.add_subcommand("analyze", "root-location report for a polynomial");
  std::string an_poly;
  an->add_option("--poly", an_poly, "c0,c1,...,cn (constant first)")->required();

  // unit
  auto* un = app.add_subcommand("unit", "closed-form fundamental unit of a family");
  int un_n = 0, un_m = 0;
  std::string un_t = "1", un_c;
  un->add_option("--n", un_n)->required();
  un->add_option("--m", un_m)->required();
  un->add_option("--t", un_t)->capture_default_str();
  un->add_option("--c", un_c)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    ExpandLimits limits = limits_from_env();
    if (exp->parsed()) return cmd_expand(e_poly, e_alpha, e_budget, e_out, limits);
    if (fv->parsed()) return cmd_family_verify(fv_n, fv_m, fv_t, fv_c, fv_budget);
    if (fg->parsed())
      return cmd_family_grid(fg_nmax, fg_mspan, fg_t, fg_cmax, fg_budget, threads);
    if (sn->parsed() || sc->parsed()) {
      const std::string& path = sn->parsed() ? sn_out : sc_out;
      bool resume = sn->parsed() ? sn_resume : sc_resume;
      JsonlWriter writer(path, resume);
      auto sink = [&](const ScanRecord& r) {
        writer.write(r);
        std::cout << r.kind << " " << r.params.dump() << " -> " << r.status;
        if (r.l0 >= 0) std::cout << " l0=" << r.l0 << " l1=" << r.l1;
        std::cout << "\n";
      };
      auto skip = [&](const json& params) { return writer.already_done(params); };
      if (sn->parsed())
        scan_nth_roots(sn_n, sn_from, sn_to, sn_budget, sink, threads, limits, skip);
      else
        conjecture_scan(sc_from, sc_to, sc_budget, sink, threads, limits, skip);
      return kExitOk;
    }
    if (an->parsed()) return cmd_analyze(an_poly);
    if (un->parsed()) return cmd_unit(un_n, un_m, un_t, un_c);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitBadInput;
}
