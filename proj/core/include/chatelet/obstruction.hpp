#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chatelet/brauer.hpp"
#include "chatelet/factor.hpp"
#include "chatelet/local_solver.hpp"

namespace chatelet {

/// Odd primes above this bound with good reduction always carry local points.
inline constexpr unsigned kGoodPlaceCutoff = 83;

/// Places of Q where X or the field has bad reduction: 2, infinity, and the
/// primes of a, c, lc(P), disc(P), the denominators of P / lc(P) and m.
std::vector<Place> bad_places(const ChateletSurface& X, const Field& field);

struct AdelicResult {
  bool nonempty = false;
  std::vector<std::string> blocking;
  std::vector<LocalVerdict> verdicts;
};

/// Local points at the bad places and at every place above p <= 83.
AdelicResult adelic_points(const ChateletSurface& X, const Field& field);

enum class Verdict { no_adelic_points, obstruction, no_obstruction };
std::string to_string(Verdict v);

struct ObstructionReport {
  std::string surface;
  Field field;
  AdelicResult adelic;
  BrauerGroupDesc brauer;
  std::vector<InvariantProfile> profiles;
  /// Joint sums over all adelic points (bit masks over the generators).
  std::set<unsigned> reachable;
  Verdict verdict = Verdict::no_obstruction;
  std::string interpretation;
};

ObstructionReport bm_verdict(const ChateletSurface& X, const Field& field);

struct ParityCertificate {
  BigInt m;
  /// c' with X: y^2 - a z^2 = c' N(g(t)).
  Rational c_model;
  InvariantValue parity;
  std::vector<Place> split_places;
  /// Split places with inv_v(a, c') = 1/2.
  std::vector<Place> contributions;
};

ParityCertificate norm_form_parity(const ChateletSurface& X, const NormForm& nf);
/// std::invalid_argument unless P is a norm form from Q(sqrt(m)).
ParityCertificate norm_form_parity(const ChateletSurface& X, const BigInt& m);

struct AnalysisReport {
  std::string surface;
  std::string pattern;
  std::optional<GaloisType> galois;
  BrauerGroupDesc brauer;
  AdelicResult adelic;
  bool condition_brauer = false;
  bool condition_adelic = false;
  bool condition_galois = false;
  /// Root of P: the singular point of that fibre is rational.
  std::optional<Rational> rational_point_fiber;
  std::vector<BigInt> problematic;
  std::vector<ObstructionReport> extensions;
  std::vector<ParityCertificate> parity;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const ChateletSurface& X);

}  // namespace chatelet
