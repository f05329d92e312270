#pragma once

// JSON encodings of the library's external interfaces. Big integers
// and rationals travel as exact decimal strings ("123", "-4/7");
// small structural integers (indices, degrees, table entries) are
// plain JSON numbers.

#include <json.hpp>

#include "logk3/brauer.hpp"
#include "logk3/charclass.hpp"
#include "logk3/petersen.hpp"
#include "logk3/quadratic_order.hpp"
#include "logk3/rewrite.hpp"
#include "logk3/structure.hpp"
#include "logk3/surface.hpp"

namespace logk3 {

using json = nlohmann::json;

inline json to_json(const Int& n) { return n.str(); }
inline json to_json(const Rat& q) { return to_string(q); }

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  return parse_int(j.get<std::string>());
}

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  return parse_rat(j.get<std::string>());
}

// --- groups and actions ---------------------------------------------------

inline json to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order;
  j["table"] = g.table;
  j["generators"] = g.generators;
  if (!g.name.empty()) j["name"] = g.name;
  return j;
}

inline FiniteGroup group_from_json(const json& j) {
  FiniteGroup g;
  g.order = j.at("order").get<int>();
  g.table = j.at("table").get<std::vector<std::vector<int>>>();
  g.generators = j.at("generators").get<std::vector<int>>();
  if (j.contains("name")) g.name = j["name"].get<std::string>();
  require_valid_group(g);
  return g;
}

inline json to_json(const DihedralElement& g) {
  return json{{"rot", g.rot}, {"refl", g.refl}};
}

inline DihedralElement dihedral_from_json(const json& j) {
  return {j.at("rot").get<int>(), j.at("refl").get<bool>()};
}

inline json to_json(const CycleAction& a) {
  json images = json::array();
  for (const auto& g : a.images) images.push_back(to_json(g));
  return json{{"n", a.n}, {"group", to_json(a.group)}, {"images", images}};
}

inline CycleAction action_from_json(const json& j) {
  CycleAction a;
  a.n = j.at("n").get<int>();
  a.group = group_from_json(j.at("group"));
  for (const auto& jj : j.at("images")) a.images.push_back(dihedral_from_json(jj));
  require_valid_action(a);
  return a;
}

// --- structures and rewriting ----------------------------------------------

inline json to_json(const LogK3Structure& s) {
  return json{{"degree", s.degree},
              {"seq", s.seq},
              {"action", to_json(s.action)},
              {"ample", s.ample}};
}

inline LogK3Structure structure_from_json(const json& j) {
  LogK3Structure s;
  s.degree = j.at("degree").get<int>();
  s.seq = j.at("seq").get<SelfIntersectionSeq>();
  if (j.contains("action")) {
    s.action = action_from_json(j.at("action"));
  } else {
    s.action = trivial_action(static_cast<int>(s.seq.size()));
  }
  s.ample = j.value("ample", true);
  require_valid_structure(s);
  return s;
}

inline json to_json(const RewriteTrace& trace) {
  json out = json::array();
  for (const auto& step : trace)
    out.push_back(
        json{{"op", step.op == RewriteStep::Op::BlowUp ? "blow_up" : "blow_down"},
             {"orbit", step.orbit},
             {"result_seq", step.result_seq}});
  return out;
}

// --- classes and models ------------------------------------------------------

inline json to_json(const CocycleClass& c) {
  json rep = json::array();
  for (const auto& g : c.rep) rep.push_back(to_json(g));
  return json{{"group", to_json(c.group)}, {"rep", rep}};
}

inline CocycleClass class_from_json(const json& j) {
  CocycleClass c;
  c.group = group_from_json(j.at("group"));
  for (const auto& jj : j.at("rep")) c.rep.push_back(dihedral_from_json(jj));
  return c;
}

inline json to_json(const ModelDescriptor& m) {
  json j;
  switch (m.kind) {
    case ModelDescriptor::Kind::Trivial:
      j["kind"] = "trivial";
      j["equation"] = {{"family", "bilinear"},
                       {"coeffs",
                        {{"a", "1"}, {"b", "0"}, {"c", "0"}, {"d", "-1"},
                         {"e", "1"}, {"f", "-1"}}}};
      break;
    case ModelDescriptor::Kind::Quadratic:
      j["kind"] = "quadratic";
      j["equation"] = {{"family", "normform"},
                       {"coeffs",
                        {{"a", to_json(*m.a)}, {"b", "0"}, {"c", "1"},
                         {"d", "-1"}}}};
      break;
    case ModelDescriptor::Kind::NonExplicit:
      j["kind"] = "non-explicit";
      j["note"] = "no explicit equation for classes of image order 5 or 10";
      break;
  }
  if (!m.equation().empty()) j["display"] = m.equation();
  return j;
}

// --- surfaces and points ------------------------------------------------------

inline json to_json(const SurfaceModel& m) {
  json coeffs = json::array();
  for (const auto& q : m.coeffs) coeffs.push_back(to_json(q));
  std::string family;
  switch (m.family) {
    case SurfaceModel::Family::Bilinear: family = "bilinear"; break;
    case SurfaceModel::Family::NormForm: family = "normform"; break;
    case SurfaceModel::Family::GeneralD7: family = "generald7"; break;
  }
  return json{{"family", family}, {"coeffs", coeffs}};
}

inline SurfaceModel surface_model_from_json(const json& j) {
  std::string family = j.at("family").get<std::string>();
  std::vector<Rat> coeffs;
  for (const auto& jj : j.at("coeffs")) coeffs.push_back(rat_from_json(jj));
  auto want = [&](size_t k) {
    if (coeffs.size() != k)
      bad_input("surface model '" + family + "' needs " + std::to_string(k) +
                " coefficients");
  };
  if (family == "trivial") return trivial_model();
  if (family == "bilinear") {
    want(6);
    return bilinear_model(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4],
                          coeffs[5]);
  }
  auto as_int = [](const Rat& q) {
    if (q.denominator() != 1) bad_input("coefficient must be an integer");
    return q.numerator();
  };
  if (family == "normform") {
    want(4);
    return norm_form_model(as_int(coeffs[0]), as_int(coeffs[1]),
                           as_int(coeffs[2]), as_int(coeffs[3]));
  }
  if (family == "generald7") {
    want(5);
    return general_d7_model(as_int(coeffs[0]), as_int(coeffs[1]),
                            as_int(coeffs[2]), as_int(coeffs[3]),
                            as_int(coeffs[4]));
  }
  bad_input("unknown surface family '" + family + "'");
}

inline json to_json(const MPoint& p) {
  return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"t", to_json(p.t)}};
}

inline MPoint mpoint_from_json(const json& j, const Int& M = 1) {
  return {rat_from_json(j.at("x")), rat_from_json(j.at("y")),
          rat_from_json(j.at("t")), M};
}

inline json to_json(const NonDensityReport& r) {
  json violations = json::array();
  for (const auto& p : r.violations) violations.push_back(to_json(p));
  return json{{"pass", r.pass},
              {"M", to_json(r.M)},
              {"bound", to_json(r.B)},
              {"solutions", r.solution_count},
              {"curves",
               {{"t_zero", r.on_t_zero},
                {"y_constant", r.on_y_curves},
                {"x_constant", r.on_x_curves}}},
              {"violations", violations}};
}

// --- quadratic order reports ---------------------------------------------------

inline json to_json(const QuadInt& q) {
  return json{{"u", to_json(q.u)}, {"v", to_json(q.v)}};
}

inline json to_json(const SplitPrimeDatum& d) {
  return json{{"p", to_json(d.p)}, {"r", to_json(d.r)}, {"pi", to_json(d.pi)}};
}

inline json to_json(const CurvePoint& p) {
  json j = to_json(p.point);
  j["norm"] = to_json(p.norm);
  j["unit_order"] = p.unit_order;
  return j;
}

inline json to_json(const DensityReport& r) {
  json curves = json::array();
  for (const auto& c : r.curves) {
    json points = json::array();
    json ratios = json::array();
    for (const auto& p : c.points) points.push_back(to_json(p));
    for (size_t i = 1; i < c.points.size(); ++i) {
      // exact growth ratio of successive x-coordinates
      Rat ratio(abs(c.points[i].element.u), abs(c.points[i - 1].element.u));
      ratios.push_back(to_json(ratio));
    }
    curves.push_back(json{{"datum", to_json(c.datum)},
                          {"points", points},
                          {"growth_ratios", ratios}});
  }
  json j{{"a", to_json(r.a)}, {"curves", curves}, {"verified", r.all_verified}};
  j["caveat"] =
      "finitely many primes certified; class-group and surjectivity "
      "hypotheses of the ambient field are assumed, not tested";
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// --- brauer reports ---------------------------------------------------------------

inline json to_json(const LocalPoint& p) {
  return json{{"place", p.place.str()},
              {"x", to_json(p.x)},
              {"y", to_json(p.y)},
              {"t", to_json(p.t)}};
}

inline json to_json(const ResidueReport& r) {
  json j{{"p", to_json(r.p)},
         {"coefficient", to_json(r.coefficient)},
         {"square_classes", r.values},
         {"surjective", r.surjective}};
  if (r.surjective) {
    j["witness_trivial"] = to_json(r.witness_trivial);
    j["witness_nontrivial"] = to_json(r.witness_nontrivial);
  }
  return j;
}

inline json to_json(const LocalScanReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_json(w.point));
  return json{{"all_soluble", r.all_soluble}, {"witnesses", witnesses}};
}

inline json to_json(const CounterexampleReport& r) {
  return json{
      {"emptiness",
       {{"inequality_window", r.emptiness.inequality_window},
        {"inequality_tails", r.emptiness.inequality_tails},
        {"box_empty", r.emptiness.box_empty},
        {"window", r.emptiness.window},
        {"box", to_json(r.emptiness.box)}}},
      {"local", to_json(r.local)},
      {"residue", to_json(r.residue)},
      {"no_bm_obstruction", r.no_bm_obstruction},
      {"verdict", r.verdict ? "BM obstruction trivial; X(Z) = empty"
                            : "sub-check failed"}};
}

inline json to_json(const PetersenReport& r) {
  return json{{"five_cycles", r.five_cycles},
              {"aut_order", r.aut_order},
              {"stabilizer_order", r.stabilizer_order},
              {"incidence_rule", "j=2i mod 5"},
              {"incidence_verified", r.incidence_law_verified}};
}

}  // namespace logk3
