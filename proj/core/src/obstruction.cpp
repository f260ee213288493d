#include "chatelet/obstruction.hpp"

#include <algorithm>

#include "chatelet/arith.hpp"

namespace chatelet {

std::vector<Place> bad_places(const ChateletSurface& X, const Field& field) {
  std::set<BigInt> primes{BigInt(2)};
  auto add = [&](const Rational& q) {
    if (q.is_zero()) return;
    for (const BigInt& p : prime_support(q)) primes.insert(p);
  };
  add(X.a());
  add(X.c());
  add(X.P().lc());
  add(discriminant(X.P()));
  const QPoly monic = X.monic_P();
  for (const Rational& c : monic.coeffs()) add(Rational(c.den()));
  if (!field.is_rational()) add(Rational(field.m));
  std::vector<Place> out;
  for (const BigInt& p : primes) out.push_back(Place::finite(p));
  out.push_back(Place::real());
  return out;
}

AdelicResult adelic_points(const ChateletSurface& X, const Field& field) {
  std::vector<Place> places = bad_places(X, field);
  for (unsigned p : primes_up_to(kGoodPlaceCutoff)) places.push_back(Place::finite(BigInt(p)));
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  AdelicResult out;
  for (const Place& v : places) {
    for (const Completion& w : completions_above(v, field)) {
      LocalVerdict lv = local_points(X, w);
      if (!lv.nonempty) out.blocking.push_back(lv.place);
      out.verdicts.push_back(std::move(lv));
    }
  }
  out.nonempty = out.blocking.empty();
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no_adelic_points: return "no-adelic-points";
    case Verdict::obstruction: return "obstruction";
    case Verdict::no_obstruction: return "no-obstruction";
  }
  return "?";
}

ObstructionReport bm_verdict(const ChateletSurface& X, const Field& field) {
  ObstructionReport r;
  r.surface = X.to_string();
  r.field = field;
  r.adelic = adelic_points(X, field);
  r.brauer = brauer_group(X, field);
  if (!r.adelic.nonempty) {
    r.verdict = Verdict::no_adelic_points;
    r.interpretation = "X has no adelic points over " + field.to_string() + "; there is nothing to obstruct";
    return r;
  }
  if (r.brauer.generators.empty()) {
    r.verdict = Verdict::no_obstruction;
    r.reachable = {0};
    r.interpretation = "Br X/Br k is trivial over " + field.to_string() +
                       ", so the Brauer-Manin set is the whole adelic set and there is no obstruction";
    return r;
  }
  std::set<unsigned> reachable{0};
  for (const Place& v : bad_places(X, field)) {
    for (const Completion& w : completions_above(v, field)) {
      InvariantProfile prof = evaluation_profile(X, field, r.brauer.generators, w);
      std::set<unsigned> next;
      for (unsigned s : reachable) {
        for (unsigned vec : prof.vectors) next.insert(s ^ vec);
      }
      reachable = std::move(next);
      r.profiles.push_back(std::move(prof));
    }
  }
  r.reachable = reachable;
  if (reachable.count(0) == 0) {
    r.verdict = Verdict::obstruction;
    r.interpretation = "adelic points exist but none is orthogonal to Br X; X fails the Hasse principle over " +
                       field.to_string();
  } else {
    r.verdict = Verdict::no_obstruction;
    r.interpretation = "some adelic point is orthogonal to Br X over " + field.to_string() +
                       "; no Brauer-Manin obstruction";
  }
  return r;
}

ParityCertificate norm_form_parity(const ChateletSurface& X, const NormForm& nf) {
  ParityCertificate cert;
  cert.m = nf.m;
  cert.c_model = X.c() * nf.scalar;
  std::set<BigInt> primes{BigInt(2)};
  for (const BigInt& p : prime_support(X.a())) primes.insert(p);
  for (const BigInt& p : prime_support(cert.c_model)) primes.insert(p);
  std::vector<Place> places;
  for (const BigInt& p : primes) places.push_back(Place::finite(p));
  places.push_back(Place::real());
  for (const Place& v : places) {
    const auto above = places_above(v, nf.m);
    if (above.front().behavior != Splitting::split) continue;
    cert.split_places.push_back(v);
    const InvariantValue inv = invariant(hilbert_symbol(X.a(), cert.c_model, v));
    cert.parity += inv;
    if (inv.is_half()) cert.contributions.push_back(v);
  }
  return cert;
}

ParityCertificate norm_form_parity(const ChateletSurface& X, const BigInt& m) {
  for (const NormForm& nf : detect_norm_form(X.P())) {
    if (nf.m == m) return norm_form_parity(X, nf);
  }
  throw std::invalid_argument("P is not a norm form from Q(sqrt(" + m.get_str() + "))");
}

AnalysisReport analyze(const ChateletSurface& X) {
  AnalysisReport r;
  r.surface = X.to_string();
  const QFactorization fq = factor_over_Q(X.P());
  r.pattern = pattern_string(fq.degrees());
  if (fq.factors.size() == 1) r.galois = quartic_galois_group(X.P());
  r.brauer = brauer_group(X, Field{});
  r.adelic = adelic_points(X, Field{});
  r.condition_brauer = r.brauer.structure != BrauerStructure::trivial;
  r.condition_adelic = r.adelic.nonempty;
  r.condition_galois = r.galois && (*r.galois == GaloisType::A4 || *r.galois == GaloisType::S4);
  if (r.brauer.informational) {
    r.notes.push_back("S has both a degree-1 and a degree-2 point; the Brauer group value is informational");
  }
  const auto roots = rational_roots(X.P());
  if (!roots.empty()) {
    r.rational_point_fiber = roots.front();
    r.notes.push_back("rational point: singular point of the fiber over t = " + roots.front().to_string());
    return r;
  }
  const auto forms = detect_norm_form(X.P());
  for (const NormForm& nf : forms) r.problematic.push_back(nf.m);
  if (r.condition_brauer || r.condition_adelic || r.condition_galois) {
    r.notes.push_back("a sufficient condition holds: X(L) is nonempty iff X(A_L) is nonempty for every even-degree L");
    return r;
  }
  if (forms.empty()) r.notes.push_back("no quadratic field splits S into two conjugate points");
  for (const NormForm& nf : forms) {
    r.extensions.push_back(bm_verdict(X, Field{nf.m}));
    r.parity.push_back(norm_form_parity(X, nf));
  }
  return r;
}

}  // namespace chatelet
