#include "chatelet_tools/repro.hpp"

#include <algorithm>

#include "chatelet/obstruction.hpp"

namespace chatelet::tools {

bool ReproResult::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const ReproStep& s) { return s.ok; });
}

std::optional<ReproStep> ReproResult::first_failure() const {
  for (const auto& s : steps) {
    if (!s.ok) return s;
  }
  return std::nullopt;
}

namespace {

std::string set_string(const std::set<InvariantValue>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ", ";
    out += it->to_string();
  }
  return out + "}";
}

}  // namespace

ReproResult reproduce_counterexample(const ReproOptions& opts) {
  ReproResult r;
  auto check = [&r](std::string name, bool ok, std::string detail = {}) {
    r.steps.push_back({std::move(name), ok, std::move(detail)});
  };
  auto symbol = [&opts](const Rational& a, const Rational& b, const Place& v) {
    const int s = hilbert_symbol(a, b, v);
    return opts.corrupt_symbols ? -s : s;
  };

  const QPoly P{1, 0, 7, 0, 5};
  const ChateletSurface X(Rational(5), Rational(3, 5), P);
  const Place p3 = Place::finite(BigInt(3));
  const Place p5 = Place::finite(BigInt(5));

  const QFactorization fq = factor_over_Q(P);
  check("5t^4 + 7t^2 + 1 is irreducible over Q", fq.factors.size() == 1 && fq.factors[0].second == 1,
        "factors: " + pattern_string(fq.degrees()));
  const ModPFactorization f3 = factor_mod_p(P, BigInt(3));
  check("5t^4 + 7t^2 + 1 is irreducible over F_3", f3.is_irreducible());
  const BrauerGroupDesc brq = brauer_group(X, Field{});
  check("Br X/Br Q is trivial", brq.structure == BrauerStructure::trivial, to_string(brq.structure));

  check("(5, 10) is nonsplit at 5", symbol(Rational(5), Rational(10), p5) == -1);
  check("(5, 3) is nonsplit at 3", symbol(Rational(5), Rational(3), p3) == -1);
  check("(1, b) = +1 at 3 and 5",
        symbol(Rational(1), Rational(3, 5), p3) == 1 && symbol(Rational(1), Rational(39, 5), p5) == 1);
  check("5 is not a square in Q_3", !is_square_local(Rational(5), p3));
  check("1239 is a square in Q_5", is_square_local(Rational(1239), p5));
  check("(5, cP(1)) = (5, 39/5) = +1 at 5", symbol(Rational(5), Rational(39, 5), p5) == 1);

  const LocalVerdict at3 = local_points(X, Completion::of(p3));
  check("X(Q_3) is empty", !at3.nonempty);
  const LocalVerdict at5 = local_points(X, Completion::of(p5));
  check("X(Q_5) is nonempty with a certified witness",
        at5.nonempty && at5.witness && recertify(X, Completion::of(p5), *at5.witness),
        at5.witness ? at5.witness->to_string() : "no witness");

  const AdelicResult adq = adelic_points(X, Field{});
  bool others = true;
  for (const auto& v : adq.verdicts) {
    if (v.place != "3" && !v.nonempty) others = false;
  }
  check("X(Q_v) is nonempty at every checked place other than 3", others);
  check("X(A_Q) is empty with blocking set {3}", !adq.nonempty && adq.blocking == std::vector<std::string>{"3"});

  const BigInt m(29);
  const KFactorization fk = factor_over_quad(P, m);
  std::vector<std::string> kf;
  for (const auto& [f, e] : fk.factors) kf.push_back(to_string(f));
  std::sort(kf.begin(), kf.end());
  check("5t^4 + 7t^2 + 1 = 5 (t^2 + (7+sqrt(29))/10)(t^2 + (7-sqrt(29))/10) over Q(sqrt(29))",
        fk.unit.x() == Rational(5) && fk.unit.y().is_zero() &&
            kf == std::vector<std::string>{"t^2 + (7+sqrt(29))/10", "t^2 + (7-sqrt(29))/10"},
        fk.unit.to_string() + " * " + kf.front() + " * " + kf.back());
  const auto above3 = places_above(p3, m);
  const auto above5 = places_above(p5, m);
  check("3 is inert and 5 splits in Q(sqrt(29))",
        above3.size() == 1 && above3[0].behavior == Splitting::inert && above5.size() == 2);

  const ObstructionReport rep = bm_verdict(X, Field{m});
  check("X(A_L) is nonempty for L = Q(sqrt(29))", rep.adelic.nonempty);
  check("Br X_L/Br L = Z/2 generated by (5, t^2 + (7+sqrt(29))/10)",
        rep.brauer.structure == BrauerStructure::Z2 && rep.brauer.generators.size() == 1 &&
            rep.brauer.generators[0].to_string() == "(5, t^2 + (7+sqrt(29))/10)",
        rep.brauer.generators.empty() ? "" : rep.brauer.generators[0].to_string());

  const std::set<InvariantValue> half{InvariantValue::half()};
  const std::set<InvariantValue> zero{InvariantValue{}};
  bool w1 = false;
  bool w2 = false;
  bool rest = true;
  std::string rest_detail;
  for (const auto& prof : rep.profiles) {
    const auto vals = prof.values(0);
    r.table.push_back(prof.place + " -> " + set_string(vals));
    if (prof.place == "w1|5") {
      w1 = vals == half;
    } else if (prof.place == "w2|5") {
      w2 = vals == zero;
    } else if (vals != zero) {
      rest = false;
      rest_detail = prof.place;
    }
  }
  check("inv at w1 over 5 is {1/2}", w1);
  check("inv at w2 over 5 is {0}", w2);
  check("inv at every other place is {0}", rest, rest_detail);
  check("verdict over Q(sqrt(29)) is obstruction with every adelic sum 1/2",
        rep.verdict == Verdict::obstruction && rep.reachable == std::set<unsigned>{1U}, to_string(rep.verdict));

  check("problematic extensions are exactly [29]", problematic_extensions(X) == std::vector<BigInt>{m});
  const ParityCertificate pc = norm_form_parity(X, m);
  check("parity over Q(sqrt(29)) is 1/2 with table {5 -> 1/2}",
        pc.parity.is_half() && pc.contributions == std::vector<Place>{p5}, pc.parity.to_string());
  return r;
}

}  // namespace chatelet::tools
