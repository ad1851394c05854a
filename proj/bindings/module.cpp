#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "jpa/analysis.hpp"
#include "jpa/families.hpp"
#include "jpa/io.hpp"
#include "jpa/pureroot.hpp"

namespace py = pybind11;
using namespace jpa;

namespace {

// Arbitrary-precision values cross the boundary as strings; callers get
// structured data by json-decoding the returned text.
py::object loads(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

FamilyParams make_params(int n, int m, const std::string& t,
                         const std::vector<std::string>& c) {
  FamilyParams p;
  p.n = n;
  p.m = m;
  p.t = mpz_class(t);
  for (const auto& s : c) p.c.emplace_back(s);
  p.validate();
  return p;
}

json record_json(const ScanRecord& r) { return r.to_json(); }

}  // namespace

PYBIND11_MODULE(_jpalib, mod) {
  mod.doc() = "Exact Jacobi-Perron expansions over real algebraic number fields";

  py::register_exception<ZeroDivisorError>(mod, "ZeroDivisorError");
  py::register_exception<ResourceLimitError>(mod, "ResourceLimitError");

  mod.def("expand", [](const std::string& poly, const std::vector<std::string>& alpha,
                       long budget) {
    IntPoly f = parse_intpoly(poly);
    FieldPtr F = field_new(f, steep_shape_ok(f) ? NumberField::Mode::steep
                                                 : NumberField::Mode::positive_root);
    std::vector<FieldElem> a0;
    for (const auto& s : alpha) a0.push_back(parse_elem(F, s));
    ExpansionOutcome out = expand(a0, budget);
    ScanRecord rec;
    rec.kind = "expand";
    rec.params = {{"poly", poly}, {"alpha", alpha}, {"budget", budget}};
    fill_from_outcome(rec, out, true);
    return loads(record_json(rec));
  },
  py::arg("poly"), py::arg("alpha"), py::arg("budget") = 100,
  "Run the expansion; poly is 'c0,c1,...,1', each alpha entry 'c0,c1,...'.");

  mod.def("family_poly", [](int n, int m, const std::string& t,
                            const std::vector<std::string>& c) {
    return format_intpoly(family_poly(make_params(n, m, t, c)));
  }, py::arg("n"), py::arg("m"), py::arg("t"), py::arg("c"));

  mod.def("family_verify", [](int n, int m, const std::string& t,
                              const std::vector<std::string>& c, long budget) {
    VerificationReport r = verify_family(make_params(n, m, t, c), budget);
    json j;
    j["pass"] = r.pass;
    j["status"] = status_name(r.status);
    j["l0"] = r.l0;
    j["l1"] = r.l1;
    j["unit_norm"] = format_q(r.unit_norm);
    json uc = json::array();
    for (const auto& q : r.unit_coeffs) uc.push_back(format_q(q));
    j["unit_coeffs"] = uc;
    if (!r.first_divergence.empty()) j["first_divergence"] = r.first_divergence;
    j["findings"] = r.findings;
    return loads(j);
  }, py::arg("n"), py::arg("m"), py::arg("t"), py::arg("c"), py::arg("budget") = 0);

  mod.def("family_unit", [](int n, int m, const std::string& t,
                            const std::vector<std::string>& c) {
    FamilyParams p = make_params(n, m, t, c);
    FieldPtr F = family_field(p);
    FieldElem eps = expected_unit(p, F);
    json j;
    j["unit"] = format_elem(eps);
    j["norm"] = format_q(eps.norm());
    return loads(j);
  }, py::arg("n"), py::arg("m"), py::arg("t"), py::arg("c"));

  mod.def("nth_root_expand", [](long m, int n, long budget) {
    auto [prc, a0] = pure_root_alpha0(m, n);
    ExpansionOutcome out = expand(a0, budget);
    ScanRecord rec;
    rec.kind = "nthroot";
    rec.params = {{"n", n}, {"m", m}, {"budget", budget}};
    fill_from_outcome(rec, out, true);
    return loads(record_json(rec));
  }, py::arg("m"), py::arg("n") = 3, py::arg("budget") = 2000);

  mod.def("unit_disk_count", [](const std::string& poly) {
    auto c = unit_disk_count(parse_intpoly(poly));
    return py::make_tuple(c.inside, c.on_circle);
  }, py::arg("poly"));

  mod.def("is_pisot", [](const std::string& poly) {
    PisotResult r = is_pisot(parse_intpoly(poly));
    return py::make_tuple(std::string(pisot_name(r.verdict)), r.note);
  }, py::arg("poly"));

  mod.def("analyze", [](const std::string& poly) {
    RootReport r = analyze(parse_intpoly(poly));
    json j;
    j["poly"] = format_intpoly(r.poly);
    j["inside_unit_disk"] = r.inside;
    j["on_unit_circle"] = r.on_circle;
    j["outside_unit_disk"] = r.outside;
    if (r.pisot) j["pisot"] = pisot_name(r.pisot->verdict);
    if (r.max_nonreal_modulus)
      j["max_nonreal_modulus"] = {format_q(r.max_nonreal_modulus->lo),
                                  format_q(r.max_nonreal_modulus->hi)};
    j["cyclotomic_divisors"] = r.cyclotomic_divisors;
    j["findings"] = r.findings;
    return loads(j);
  }, py::arg("poly"));
}
