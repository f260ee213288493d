#pragma once

#include <string>

#include "json.hpp"

#include "chatelet/obstruction.hpp"
#include "chatelet_tools/surface_io.hpp"

namespace chatelet::tools {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "chatelet";
std::string tool_version();

/// Envelope shared by every report: tool, version, command, surface echo.
Json document(const std::string& command, const SurfaceInput& input);

Json to_json(const LocalVerdict& v);
Json to_json(const AdelicResult& r);
Json to_json(const BrauerGroupDesc& b);
Json to_json(const InvariantProfile& p);
Json to_json(const ObstructionReport& r);
Json to_json(const RestrictionAnalysis& r);
Json to_json(const ParityCertificate& c);
Json to_json(const AnalysisReport& r);

std::string render(const AdelicResult& r);
std::string render(const BrauerGroupDesc& b);
std::string render(const ObstructionReport& r);
std::string render(const RestrictionAnalysis& r);
std::string render(const ParityCertificate& c);
std::string render(const AnalysisReport& r);

/// Header lines naming the surface.
std::string render_header(const std::string& command, const SurfaceInput& input, const ChateletSurface& X);

}  // namespace chatelet::tools
