#include "qmoy/json_io.hpp"

namespace qmoy {

namespace {

nlohmann::json laurent_to_json(const LaurentX& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, rat_str(c)});
  return arr;
}

LaurentX laurent_from_json(const nlohmann::json& j) {
  LaurentX p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw parse_error("bad laurent term");
    p.add_term(term[0].get<int>(), rat_from_string(term[1].get<std::string>()));
  }
  return p;
}

std::string half_str(int x2) { return std::to_string(x2) + "/2"; }

}  // namespace

nlohmann::json linkpoly_to_json(const LinkPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [aexp, c] : p.terms()) {
    arr.push_back({{"a_half_exp", aexp},
                   {"num", laurent_to_json(c.num())},
                   {"den", laurent_to_json(c.den())}});
  }
  return arr;
}

LinkPoly linkpoly_from_json(const nlohmann::json& j) {
  LinkPoly p;
  if (!j.is_array()) throw parse_error("polynomial JSON must be an array");
  for (const auto& term : j) {
    const int aexp = term.at("a_half_exp").get<int>();
    const LaurentX num = laurent_from_json(term.at("num"));
    const LaurentX den = laurent_from_json(term.at("den"));
    p.add_term(aexp, RatFuncX(num, den));
  }
  return p;
}

std::pair<Poset, LinearForm> poset_from_json(const nlohmann::json& j) {
  Poset p;
  for (const auto& e : j.at("elements")) p.elements.push_back(e.get<std::string>());
  const auto index_of = [&](const std::string& name) {
    for (int i = 0; i < p.size(); ++i)
      if (p.elements[static_cast<size_t>(i)] == name) return i;
    throw parse_error("unknown poset element: " + name);
  };
  if (j.contains("covers"))
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw parse_error("bad cover pair");
      p.covers.push_back({index_of(c[0].get<std::string>()), index_of(c[1].get<std::string>())});
    }
  p.validate();
  LinearForm lam;
  lam.coeffs.assign(static_cast<size_t>(p.size()), 0);
  if (j.contains("form"))
    for (const auto& [name, v] : j.at("form").items())
      lam.coeffs[static_cast<size_t>(index_of(name))] = v.get<long>();
  return {p, lam};
}

nlohmann::json bounds_to_json(const BoundsReport& rep) {
  nlohmann::json j;
  j["color"] = rep.r;
  j["diagram"] = {{"c_plus", rep.diagram.c_plus},
                  {"c_minus", rep.diagram.c_minus},
                  {"s_plus", rep.diagram.s_plus},
                  {"s_minus", rep.diagram.s_minus},
                  {"writhe", rep.diagram.writhe}};
  j["a_bound"] = half_str(rep.a_bound_x2);
  j["q_upper_bound"] = half_str(rep.q_upper_x2);
  if (rep.q_lower_x2) j["q_lower_bound_positive"] = half_str(*rep.q_lower_x2);
  j["a_actual"] = rep.a_actual_x2 ? half_str(*rep.a_actual_x2) : "-inf";
  j["q_actual"] = rep.q_actual_x2 ? half_str(*rep.q_actual_x2) : "-inf";
  j["a_satisfied"] = rep.a_satisfied;
  j["q_satisfied"] = rep.q_satisfied;
  j["p_satisfied"] = rep.p_satisfied;
  j["a_attained"] = rep.a_attained;
  j["q_conjectured_equality"] = rep.q_conjectured_equality;
  return j;
}

nlohmann::json head_to_json(const HeadReport& rep) {
  nlohmann::json j;
  j["color"] = rep.r;
  j["d_r"] = half_str(rep.d_r_x2);
  j["f_r"] = half_str(rep.f_r_alpha);
  j["lead_sign"] = rep.lead_sign;
  nlohmann::json slices = nlohmann::json::array();
  for (const auto& sl : rep.slices) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& [e, c] : sl) s.push_back({e, rat_str(c)});
    slices.push_back(s);
  }
  j["slices"] = slices;
  return j;
}

nlohmann::json slopes_to_json(const std::vector<SlopePoint>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t i = 0; i < pts.size(); ++i) {
    nlohmann::json j;
    j["r"] = pts[i].r;
    j["maxdeg_q"] = half_str(pts[i].maxdeg_q_x2);
    j["normalized"] = rat_str(pts[i].normalized);
    if (i > 0) {
      Rat d = pts[i].normalized - pts[i - 1].normalized;
      j["delta"] = rat_str(d);
    }
    arr.push_back(j);
  }
  return arr;
}

}  // namespace qmoy
