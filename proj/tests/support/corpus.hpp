#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "chatelet/surface.hpp"
#include "chatelet_tools/surface_io.hpp"

namespace chatelet::testing {

struct CorpusEntry {
  std::string name;
  ChateletSurface X;
};

inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir = CHATELET_CORPUS_DIR) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".surface") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back({f.stem().string(), tools::build_surface(tools::load_input(f))});
  return out;
}

inline ChateletSurface counterexample() { return {Rational(5), Rational(3, 5), QPoly{1, 0, 7, 0, 5}}; }

}  // namespace chatelet::testing
