#include "chatelet_tools/surface_io.hpp"

#include <fstream>
#include <sstream>

namespace chatelet::tools {

namespace {

std::string rational_field(const nlohmann::json& v, const std::string& what) {
  Rational q;
  if (v.is_string()) {
    try {
      q = Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(what + ": " + e.what());
    }
  } else if (v.is_number_integer()) {
    q = Rational(BigInt(v.dump()));
  } else {
    throw InputError(what + " must be a rational string");
  }
  return q.to_string();
}

}  // namespace

SurfaceInput parse_input(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("surface file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "a" && key != "c" && key != "P") throw InputError("unknown key '" + key + "'");
  }
  for (const char* key : {"a", "c", "P"}) {
    if (!j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  }
  SurfaceInput s;
  s.a = rational_field(j.at("a"), "a");
  s.c = rational_field(j.at("c"), "c");
  const auto& P = j.at("P");
  if (!P.is_array()) throw InputError("P must be an array of coefficients");
  if (P.size() != 5) throw InputError("degree-4 quartic required (P needs 5 coefficients, ascending)");
  for (std::size_t i = 0; i < 5; ++i) s.P[i] = rational_field(P[i], "P[" + std::to_string(i) + "]");
  return s;
}

SurfaceInput parse_input_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed surface file: ") + e.what());
  }
  return parse_input(j);
}

SurfaceInput load_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

nlohmann::ordered_json to_json(const SurfaceInput& input) {
  nlohmann::ordered_json j;
  j["a"] = input.a;
  j["c"] = input.c;
  j["P"] = input.P;
  return j;
}

ChateletSurface build_surface(const SurfaceInput& input) {
  std::vector<Rational> coeffs;
  for (const std::string& s : input.P) coeffs.push_back(Rational::parse(s));
  return {Rational::parse(input.a), Rational::parse(input.c), QPoly(std::move(coeffs))};
}

SurfaceInput input_of(const ChateletSurface& X) {
  SurfaceInput s;
  s.a = X.a().to_string();
  s.c = X.c().to_string();
  for (int i = 0; i < 5; ++i) s.P[static_cast<std::size_t>(i)] = X.P().coeff(i).to_string();
  return s;
}

}  // namespace chatelet::tools
