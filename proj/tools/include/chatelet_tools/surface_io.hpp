#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "chatelet/surface.hpp"

namespace chatelet::tools {

/// Malformed surface file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"a": "5", "c": "3/5", "P": ["1", "0", "7", "0", "5"]}, coefficients
/// ascending. Strings are kept in canonical rational form.
struct SurfaceInput {
  std::string a;
  std::string c;
  std::array<std::string, 5> P;

  friend bool operator==(const SurfaceInput&, const SurfaceInput&) = default;
};

SurfaceInput parse_input(const nlohmann::json& j);
SurfaceInput parse_input_text(const std::string& text);
SurfaceInput load_input(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const SurfaceInput& input);

/// Throws InvalidSurface naming the violated condition.
ChateletSurface build_surface(const SurfaceInput& input);

SurfaceInput input_of(const ChateletSurface& X);

}  // namespace chatelet::tools
