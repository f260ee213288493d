#include "chatelet_tools/report.hpp"

#include <sstream>

namespace chatelet::tools {

namespace {

template <class Range, class Fn>
std::string join(const Range& r, const std::string& sep, Fn fn) {
  std::string out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out += sep;
    first = false;
    out += fn(x);
  }
  return out;
}

std::string place_list(const std::vector<Place>& v) {
  return "{" + join(v, ", ", [](const Place& p) { return p.to_string(); }) + "}";
}

std::string integer_list(const std::vector<BigInt>& v) {
  return "[" + join(v, ", ", [](const BigInt& m) { return m.get_str(); }) + "]";
}

std::string vector_string(unsigned vec, int generators) {
  std::string s = "(";
  for (int i = 0; i < generators; ++i) {
    if (i > 0) s += ",";
    s += ((vec >> static_cast<unsigned>(i)) & 1U) != 0 ? "1/2" : "0";
  }
  return s + ")";
}

}  // namespace

std::string tool_version() { return CHATELET_VERSION; }

Json document(const std::string& command, const SurfaceInput& input) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = tool_version();
  j["command"] = command;
  j["surface"] = to_json(input);
  return j;
}

Json to_json(const LocalVerdict& v) {
  Json j;
  j["place"] = v.place;
  j["nonempty"] = v.nonempty;
  j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  return j;
}

Json to_json(const AdelicResult& r) {
  Json j;
  j["nonempty"] = r.nonempty;
  j["blocking"] = r.blocking;
  Json places = Json::array();
  for (const auto& v : r.verdicts) places.push_back(to_json(v));
  j["places"] = places;
  return j;
}

Json to_json(const BrauerGroupDesc& b) {
  Json j;
  j["field"] = b.field.to_string();
  Json points = Json::array();
  for (const auto& p : b.points) points.push_back(to_string(p.f));
  j["points"] = points;
  j["pattern"] = b.pattern();
  j["structure"] = to_string(b.structure);
  j["admissible_rank"] = b.admissible_rank;
  Json gens = Json::array();
  for (const auto& g : b.generators) gens.push_back(Json{{"eps", to_string(g.eps)}, {"symbol", g.to_string()}});
  j["generators"] = gens;
  j["informational"] = b.informational;
  return j;
}

Json to_json(const InvariantProfile& p) {
  Json j;
  j["place"] = p.place;
  Json vecs = Json::array();
  for (unsigned v : p.vectors) vecs.push_back(vector_string(v, p.generators));
  j["vectors"] = vecs;
  j["good_reduction"] = p.good_reduction;
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["field"] = r.field.to_string();
  j["m"] = r.field.m.get_str();
  j["adelic"] = to_json(r.adelic);
  j["brauer"] = to_json(r.brauer);
  Json profiles = Json::array();
  for (const auto& p : r.profiles) profiles.push_back(to_json(p));
  j["profiles"] = profiles;
  Json reach = Json::array();
  for (unsigned v : r.reachable) reach.push_back(vector_string(v, static_cast<int>(r.brauer.generators.size())));
  j["reachable_sums"] = reach;
  j["verdict"] = to_string(r.verdict);
  j["interpretation"] = r.interpretation;
  return j;
}

Json to_json(const RestrictionAnalysis& r) {
  Json j;
  j["base"] = to_json(r.base);
  j["ext"] = to_json(r.ext);
  j["refinement"] = r.refinement;
  Json image = Json::array();
  for (const auto& e : r.image) image.push_back(to_string(e));
  j["image"] = image;
  j["image_rank"] = r.image_rank;
  j["surjective"] = r.surjective;
  return j;
}

Json to_json(const ParityCertificate& c) {
  Json j;
  j["m"] = c.m.get_str();
  j["c_model"] = c.c_model.to_string();
  j["parity"] = c.parity.to_string();
  Json split = Json::array();
  for (const auto& v : c.split_places) split.push_back(v.to_string());
  j["split_places"] = split;
  Json table = Json::object();
  for (const auto& v : c.contributions) table[v.to_string()] = "1/2";
  j["table"] = table;
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["pattern"] = r.pattern;
  j["galois"] = r.galois ? Json(to_string(*r.galois)) : Json(nullptr);
  j["brauer"] = to_json(r.brauer);
  j["adelic"] = to_json(r.adelic);
  j["conditions"] = Json{{"brauer_nontrivial", r.condition_brauer},
                         {"adelic_points", r.condition_adelic},
                         {"galois_A4_or_S4", r.condition_galois}};
  j["rational_point_fiber"] = r.rational_point_fiber ? Json(r.rational_point_fiber->to_string()) : Json(nullptr);
  Json prob = Json::array();
  for (const auto& m : r.problematic) prob.push_back(m.get_str());
  j["problematic"] = prob;
  Json ext = Json::array();
  for (const auto& e : r.extensions) ext.push_back(to_json(e));
  j["extensions"] = ext;
  Json par = Json::array();
  for (const auto& c : r.parity) par.push_back(to_json(c));
  j["parity"] = par;
  j["notes"] = r.notes;
  return j;
}

std::string render_header(const std::string& command, const SurfaceInput& input, const ChateletSurface& X) {
  std::ostringstream os;
  os << kToolName << " " << tool_version() << " " << command << "\n";
  os << "surface: " << X.to_string() << "\n";
  os << "input: " << to_json(input).dump() << "\n";
  return os.str();
}

std::string render(const AdelicResult& r) {
  std::ostringstream os;
  for (const auto& v : r.verdicts) {
    os << "  " << v.place << ": " << (v.nonempty ? "points" : "EMPTY");
    if (v.witness) os << " (" << v.witness->to_string() << ")";
    os << "\n";
  }
  os << "  adelic: " << (r.nonempty ? "nonempty" : "empty, blocking {" + join(r.blocking, ", ", [](const std::string& s) { return s; }) + "}") << "\n";
  return os.str();
}

std::string render(const BrauerGroupDesc& b) {
  std::ostringstream os;
  os << "  Br X/Br k over " << b.field.to_string() << ": " << to_string(b.structure) << "  (pattern " << b.pattern()
     << ", admissible rank " << b.admissible_rank << ")\n";
  for (const auto& p : b.points) os << "    point: " << to_string(p.f) << "\n";
  for (const auto& g : b.generators) os << "    generator " << to_string(g.eps) << ": " << g.to_string() << "\n";
  if (b.informational) os << "    note: X also has a rational point; the group value is informational\n";
  return os.str();
}

std::string render(const ObstructionReport& r) {
  std::ostringstream os;
  os << "field " << r.field.to_string() << "\n";
  os << render(r.adelic);
  os << render(r.brauer);
  for (const auto& p : r.profiles) os << "  inv " << p.place << ": " << p.to_string() << "\n";
  if (!r.profiles.empty()) {
    const int g = static_cast<int>(r.brauer.generators.size());
    os << "  reachable sums: {" << join(r.reachable, ", ", [g](unsigned v) { return vector_string(v, g); }) << "}\n";
  }
  os << "  verdict: " << to_string(r.verdict) << "\n";
  os << "  " << r.interpretation << "\n";
  return os.str();
}

std::string render(const RestrictionAnalysis& r) {
  std::ostringstream os;
  os << "  restriction " << r.base.field.to_string() << " -> " << r.ext.field.to_string() << ": "
     << to_string(r.base.structure) << " -> " << to_string(r.ext.structure) << ", image rank " << r.image_rank
     << (r.surjective ? ", surjective" : ", not surjective") << "\n";
  return os.str();
}

std::string render(const ParityCertificate& c) {
  std::ostringstream os;
  os << "  parity over Q(sqrt(" << c.m << ")): " << c.parity.to_string() << "  (c = " << c.c_model.to_string()
     << ", split places " << place_list(c.split_places) << ")\n";
  for (const auto& v : c.contributions) os << "    " << v.to_string() << " -> 1/2\n";
  return os.str();
}

std::string render(const AnalysisReport& r) {
  std::ostringstream os;
  os << "pattern: " << r.pattern << "\n";
  if (r.galois) os << "galois: " << to_string(*r.galois) << "\n";
  os << "field Q\n" << render(r.adelic) << render(r.brauer);
  os << "conditions: brauer-nontrivial=" << (r.condition_brauer ? "yes" : "no")
     << " adelic-points=" << (r.condition_adelic ? "yes" : "no")
     << " galois-A4/S4=" << (r.condition_galois ? "yes" : "no") << "\n";
  os << "problematic: " << integer_list(r.problematic) << "\n";
  for (const auto& e : r.extensions) os << render(e);
  for (const auto& c : r.parity) os << render(c);
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace chatelet::tools
