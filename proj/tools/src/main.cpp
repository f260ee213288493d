#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "chatelet/obstruction.hpp"
#include "chatelet_tools/batch.hpp"
#include "chatelet_tools/report.hpp"
#include "chatelet_tools/repro.hpp"
#include "chatelet_tools/selftest.hpp"
#include "chatelet_tools/surface_io.hpp"

using namespace chatelet;
using namespace chatelet::tools;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kInternal = 3 };

struct Common {
  std::string file;
  std::string ext;
  std::string json_path;
};

std::optional<Field> parse_ext(const std::string& text) {
  if (text.empty()) return std::nullopt;
  BigInt m;
  try {
    m = parse_integer(text);
  } catch (const std::exception&) {
    throw InputError("--ext expects a squarefree integer, got '" + text + "'");
  }
  if (m == 0) throw InputError("--ext expects a squarefree integer other than 0 and 1");
  return make_field(m);
}

void emit(const Common& opts, const std::string& text, const Json& doc) {
  std::cout << text;
  if (opts.json_path.empty()) return;
  std::ofstream out(opts.json_path);
  if (!out) throw InputError("cannot write " + opts.json_path);
  out << doc.dump(2) << "\n";
}

using Handler = std::function<void(const ChateletSurface&, const std::optional<Field>&, std::string&, Json&)>;

int run_surface_command(const std::string& name, const Common& opts, const Handler& fn) {
  const SurfaceInput input = load_input(opts.file);
  const ChateletSurface X = build_surface(input);
  const std::optional<Field> field = parse_ext(opts.ext);
  std::string text = render_header(name, input, X);
  Json doc = document(name, input);
  if (field) doc["field"] = field->to_string();
  Json result;
  fn(X, field, text, result);
  doc["result"] = result;
  emit(opts, text, doc);
  return kOk;
}

void cmd_analyze(const ChateletSurface& X, const std::optional<Field>& field, std::string& text, Json& out) {
  if (!field) {
    const AnalysisReport r = analyze(X);
    text += render(r);
    out = to_json(r);
    return;
  }
  const RestrictionAnalysis ra = restriction_analysis(X, field->m);
  const ObstructionReport rep = bm_verdict(X, *field);
  text += render(ra) + render(rep);
  out["restriction"] = to_json(ra);
  out["obstruction"] = to_json(rep);
  out["parity"] = nullptr;
  for (const NormForm& nf : detect_norm_form(X.P())) {
    if (nf.m != field->m) continue;
    const ParityCertificate pc = norm_form_parity(X, nf);
    text += render(pc);
    out["parity"] = to_json(pc);
  }
}

void cmd_brauer(const ChateletSurface& X, const std::optional<Field>& field, std::string& text, Json& out) {
  const BrauerGroupDesc b = brauer_group(X, field.value_or(Field{}));
  text += render(b);
  out = to_json(b);
}

void cmd_local(const ChateletSurface& X, const std::optional<Field>& field, std::string& text, Json& out) {
  const AdelicResult r = adelic_points(X, field.value_or(Field{}));
  text += render(r);
  out = to_json(r);
}

void cmd_obstruction(const ChateletSurface& X, const std::optional<Field>& field, std::string& text, Json& out) {
  const ObstructionReport r = bm_verdict(X, field.value_or(Field{}));
  text += render(r);
  out = to_json(r);
}

void cmd_extensions(const ChateletSurface& X, const std::optional<Field>& /*field*/, std::string& text, Json& out) {
  const auto ms = problematic_extensions(X);
  out["problematic"] = Json::array();
  out["restrictions"] = Json::array();
  text += "problematic extensions: [";
  for (std::size_t i = 0; i < ms.size(); ++i) text += (i > 0 ? ", " : "") + ms[i].get_str();
  text += "]\n";
  for (const BigInt& m : ms) {
    const RestrictionAnalysis ra = restriction_analysis(X, m);
    text += render(ra);
    out["problematic"].push_back(m.get_str());
    out["restrictions"].push_back(to_json(ra));
  }
}

void cmd_parity(const ChateletSurface& X, const std::optional<Field>& field, std::string& text, Json& out) {
  out = Json::array();
  if (field) {
    const ParityCertificate pc = norm_form_parity(X, field->m);
    text += render(pc);
    out.push_back(to_json(pc));
    return;
  }
  const auto forms = detect_norm_form(X.P());
  if (forms.empty()) text += "P is not a norm form from any quadratic field\n";
  for (const NormForm& nf : forms) {
    const ParityCertificate pc = norm_form_parity(X, nf);
    text += render(pc);
    out.push_back(to_json(pc));
  }
}

int cmd_repro(bool verbose, bool corrupt) {
  const ReproResult r = reproduce_counterexample(ReproOptions{corrupt});
  for (const auto& s : r.steps) {
    std::cout << (s.ok ? "ok    " : "FAIL  ") << s.name;
    if (verbose && !s.detail.empty()) std::cout << "  [" << s.detail << "]";
    std::cout << "\n";
  }
  if (verbose) {
    std::cout << "invariants of (5, t^2 + (7+sqrt(29))/10) over Q(sqrt(29)):\n";
    for (const auto& line : r.table) std::cout << "  " << line << "\n";
  }
  if (const auto f = r.first_failure()) {
    std::cerr << "repro-thm3: failed assertion: " << f->name << "\n";
    return kFailed;
  }
  std::cout << "repro-thm3: all " << r.steps.size() << " assertions hold\n";
  return kOk;
}

int cmd_selftest(const SelftestOptions& opts) {
  const SelftestResult r = run_selftest(opts);
  std::cout << "product formula: " << r.product_formula_pairs << " pairs (seed " << opts.seed << ")\n";
  std::cout << "hilbert symbol vs brute force: " << r.conic_checks << " checks\n";
  std::cout << "local points vs brute force: " << r.surface_checks << " checks\n";
  for (const auto& f : r.failures) std::cout << "counterexample: " << f << "\n";
  std::cout << (r.ok() ? "selftest: pass\n" : "selftest: FAIL\n");
  return r.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer-Manin analysis of Chatelet surfaces y^2 - a z^2 = c P(t)"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    Handler fn;
    bool takes_ext;
  };
  const std::vector<Sub> subs = {
      {"analyze", "Full report over Q and every problematic extension", cmd_analyze, true},
      {"brauer", "Br X/Br k with explicit generators", cmd_brauer, true},
      {"local", "Local solvability at every place that needs checking", cmd_local, true},
      {"obstruction", "Brauer-Manin verdict over one field", cmd_obstruction, true},
      {"extensions", "Problematic quadratic extensions and restriction maps", cmd_extensions, false},
      {"parity", "Parity certificate for norm-form quartics", cmd_parity, true},
  };
  std::vector<Common> common(subs.size());
  std::vector<CLI::App*> apps;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    CLI::App* sc = app.add_subcommand(subs[i].name, subs[i].help);
    sc->add_option("file", common[i].file, "Surface file")->required();
    if (subs[i].takes_ext) sc->add_option("--ext", common[i].ext, "Work over Q(sqrt(m))");
    sc->add_option("--json", common[i].json_path, "Also write the JSON report to this path");
    apps.push_back(sc);
  }

  bool verbose = false;
  bool corrupt = false;
  CLI::App* repro = app.add_subcommand("repro-thm3", "Check the y^2 - 5z^2 = (3/5)(5t^4+7t^2+1) counterexample");
  repro->add_flag("--verbose", verbose, "Print details and the invariant table");
  repro->add_flag("--corrupt-symbols", corrupt, "Negative control")->group("");

  std::string dir;
  std::string output;
  CLI::App* batch = app.add_subcommand("batch", "CSV summary of a directory of surface files");
  batch->add_option("directory", dir, "Directory of *.surface files")->required()->check(CLI::ExistingDirectory);
  batch->add_option("--output", output, "Write the CSV here instead of stdout");

  SelftestOptions st;
  CLI::App* self = app.add_subcommand("selftest", "Product formula sweep and brute-force oracle comparison");
  self->add_option("--pairs", st.pairs, "Number of random product-formula pairs")->check(CLI::NonNegativeNumber);
  self->add_option("--seed", st.seed, "Seed of the random sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (apps[i]->parsed()) return run_surface_command(subs[i].name, common[i], subs[i].fn);
    }
    if (repro->parsed()) return cmd_repro(verbose, corrupt);
    if (self->parsed()) return cmd_selftest(st);
    if (batch->parsed()) {
      const std::string csv = batch_csv(dir);
      if (output.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(output);
        if (!out) throw InputError("cannot write " + output);
        out << csv;
      }
      return kOk;
    }
  } catch (const PrecisionExhausted& e) {
    std::cerr << "internal precision failure: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
