#include "rothkit/serialize.hpp"

#include <sstream>

namespace rothkit {

using nlohmann::json;

json json_int(const mpz_class& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json to_json(const ScrollSpec& s) {
  json j;
  j["twists"] = s.twists();
  j["dim"] = s.dim();
  j["degree"] = s.degree();
  j["ambient_dim"] = s.ambient_dim();
  const auto v = s.vertex_dim();
  j["vertex_dim"] = v ? json(*v) : json(nullptr);
  return j;
}

json to_json(const ChowClass& c) {
  const int r = c.context().rank();
  json terms = json::array();
  for (int i = r - 1; i >= 0; --i)
    for (int f = 1; f >= 0; --f) {
      const mpz_class k = c.coeff(i, f);
      if (k == 0) continue;
      terms.push_back({{"h", i}, {"f", f}, {"coeff", json_int(k)}});
    }
  json j;
  j["rank"] = r;
  j["twist_sum"] = c.context().twist_sum();
  j["normal_form"] = c.to_string();
  j["terms"] = terms;
  const auto codim = c.codimension();
  j["codimension"] = codim ? json(*codim) : json(nullptr);
  const bool top = c.is_zero() || (codim && *codim == r);
  j["degree"] = top ? json_int(degree(c)) : json(nullptr);
  return j;
}

json to_json(const RothReport& r) {
  json j;
  j["n"] = r.n;
  j["a"] = r.a_list;
  j["b"] = r.b;
  j["d"] = r.d;
  j["N"] = r.N;
  j["sectional_genus"] = json_int(r.sectional_genus);
  j["double_point_class"] = {{"H", json_int(r.double_point_h)}, {"F", json_int(r.double_point_f)}};
  j["cx_dot_l"] = json_int(r.cx_dot_l);
  j["cx_top_power"] = json_int(r.cx_top_power);
  j["normal_bundle_twists"] = r.normal_bundle_twists;
  j["normal_bundle_c1"] = r.normal_bundle_c1;
  j["is_big"] = r.is_big;
  j["is_castelnuovo"] = r.is_castelnuovo;
  j["generic_curve_section_castelnuovo"] = r.generic_curve_section_castelnuovo;
  j["is_rational_normal_scroll"] = r.is_rational_normal_scroll;
  j["scroll_type"] = r.scroll_type ? json(r.scroll_type->twists()) : json(nullptr);
  j["linearly_normal"] = r.linearly_normal;
  j["projectively_normal"] = r.projectively_normal;
  j["intermediate_cohomology_vanishes"] = r.intermediate_cohomology_vanishes;
  j["adjoint_vanishing"] = r.adjoint_vanishing;
  j["section_through_l"] = {{"curve_count", r.section_through_l.curve_count},
                            {"component_degree", r.section_through_l.component_degree}};
  return j;
}

json to_json(const Verification& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    json item{{"name", c.name}, {"applicable", c.applicable}};
    if (c.applicable) {
      item["passed"] = c.passed;
      item["computed"] = json_int(c.computed);
      item["expected"] = json_int(c.expected);
    } else {
      item["passed"] = nullptr;
      item["computed"] = nullptr;
      item["expected"] = nullptr;
    }
    checks.push_back(item);
  }
  return {{"checks", checks}, {"all_passed", v.all_passed()}};
}

json to_json(const CastelnuovoParams& p) {
  return {{"M", p.m}, {"epsilon", p.epsilon}, {"bound", json_int(p.bound)}};
}

json to_json(const CohomologyTable& t) {
  json h = json::array();
  for (const auto& v : t.h) h.push_back(json_int(v));
  return {{"h", h}, {"euler_characteristic", json_int(t.euler_characteristic())}};
}

json to_json(const WitnessMatrix& t) { return json(t.to_grid()); }

std::string to_text(const ScrollSpec& s) {
  std::ostringstream os;
  os << "scroll=" << s.to_string() << '\n'
     << "dim=" << s.dim() << '\n'
     << "degree=" << s.degree() << '\n'
     << "ambient_dim=" << s.ambient_dim() << '\n'
     << "vertex_dim=" << (s.vertex_dim() ? std::to_string(*s.vertex_dim()) : "none") << '\n';
  return os.str();
}

namespace {
const char* yes_no(bool b) { return b ? "true" : "false"; }
}  // namespace

std::string to_text(const RothReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << '\n'
     << "a=" << format_tuple(r.a_list) << '\n'
     << "b=" << r.b << '\n'
     << "d=" << r.d << '\n'
     << "N=" << r.N << '\n'
     << "sectional_genus=" << r.sectional_genus.get_str() << '\n'
     << "double_point_class=" << r.double_point_h.get_str() << "*H"
     << (r.double_point_f < 0 ? " - " : " + ") << mpz_class(abs(r.double_point_f)).get_str()
     << "*F\n"
     << "cx_dot_l=" << r.cx_dot_l.get_str() << '\n'
     << "cx_top_power=" << r.cx_top_power.get_str() << '\n'
     << "normal_bundle_twists=" << format_tuple(r.normal_bundle_twists) << '\n'
     << "normal_bundle_c1=" << r.normal_bundle_c1 << '\n'
     << "is_big=" << yes_no(r.is_big) << '\n'
     << "is_castelnuovo=" << yes_no(r.is_castelnuovo) << '\n'
     << "generic_curve_section_castelnuovo=" << yes_no(r.generic_curve_section_castelnuovo) << '\n'
     << "is_rational_normal_scroll=" << yes_no(r.is_rational_normal_scroll) << '\n'
     << "scroll_type=" << (r.scroll_type ? r.scroll_type->to_string() : "none") << '\n'
     << "linearly_normal=" << yes_no(r.linearly_normal) << '\n'
     << "projectively_normal=" << yes_no(r.projectively_normal) << '\n'
     << "intermediate_cohomology_vanishes=" << yes_no(r.intermediate_cohomology_vanishes) << '\n'
     << "adjoint_vanishing=" << yes_no(r.adjoint_vanishing) << '\n'
     << "section_through_l=" << r.section_through_l.curve_count << " curves of degree "
     << r.section_through_l.component_degree << '\n';
  return os.str();
}

std::string to_text(const Verification& v) {
  std::ostringstream os;
  for (const auto& c : v.checks) {
    os << "check " << c.name << ": ";
    if (!c.applicable) {
      os << "n/a\n";
      continue;
    }
    os << (c.passed ? "PASS" : "FAIL") << " (computed " << c.computed.get_str() << ", expected "
       << c.expected.get_str() << ")\n";
  }
  return os.str();
}

std::string to_text(const CastelnuovoParams& p) {
  std::ostringstream os;
  os << "M=" << p.m << " epsilon=" << p.epsilon << " bound=" << p.bound.get_str() << '\n';
  return os.str();
}

}  // namespace rothkit
