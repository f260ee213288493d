#include "chatelet_tools/batch.hpp"

#include <algorithm>

#include "chatelet/obstruction.hpp"
#include "chatelet_tools/surface_io.hpp"

namespace chatelet::tools {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i > 0 ? sep : "") + v[i];
  return out;
}

}  // namespace

std::vector<std::string> batch_columns() {
  return {"file", "pattern", "galois", "brauer_Q", "adelic_Q", "blocking", "problematic", "verdicts", "flags", "error"};
}

std::string batch_row(const std::filesystem::path& file) {
  std::vector<std::string> cols(batch_columns().size());
  cols[0] = file.filename().string();
  try {
    const ChateletSurface X = build_surface(load_input(file));
    const QFactorization fq = factor_over_Q(X.P());
    cols[1] = pattern_string(fq.degrees());
    cols[2] = fq.factors.size() == 1 ? to_string(quartic_galois_group(X.P())) : "reducible";
    const BrauerGroupDesc br = brauer_group(X, Field{});
    cols[3] = to_string(br.structure);
    const AdelicResult ad = adelic_points(X, Field{});
    cols[4] = ad.nonempty ? "nonempty" : "empty";
    cols[5] = join(ad.blocking, ";");
    std::vector<std::string> prob;
    std::vector<std::string> verdicts;
    std::vector<std::string> flags;
    if (!rational_roots(X.P()).empty()) flags.emplace_back("rational_point");
    for (const BigInt& m : problematic_extensions(X)) {
      prob.push_back(m.get_str());
      const ObstructionReport rep = bm_verdict(X, Field{m});
      verdicts.push_back(m.get_str() + ":" + to_string(rep.verdict));
      if (rep.verdict == Verdict::obstruction) flags.push_back("php_failure_over=" + m.get_str());
    }
    cols[6] = join(prob, ";");
    cols[7] = join(verdicts, ";");
    cols[8] = join(flags, ";");
  } catch (const std::exception& e) {
    std::fill(cols.begin() + 1, cols.end() - 1, "");
    cols.back() = e.what();
  }
  std::vector<std::string> quoted;
  for (const auto& c : cols) quoted.push_back(csv_field(c));
  return join(quoted, ",");
}

std::string batch_csv(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension();
    if (ext == ".surface" || ext == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(), [](const auto& x, const auto& y) { return x.filename() < y.filename(); });
  std::string out = std::string(kBatchFormat) + "\n" + join(batch_columns(), ",") + "\n";
  for (const auto& f : files) out += batch_row(f) + "\n";
  return out;
}

}  // namespace chatelet::tools
