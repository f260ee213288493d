#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chatelet/brauer.hpp"
#include "chatelet/local_symbols.hpp"

namespace chatelet {

/// A completion Q_v, or L_w for L = Q(sqrt(m)).
class Completion {
 public:
  enum class Kind { rational_finite, rational_real, split_finite, nonsplit_finite, real_split, complex };

  static Completion of(const Place& v);
  static Completion of(const ExtPlace& w);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool archimedean() const { return base_.is_real(); }
  [[nodiscard]] const Place& base() const { return base_; }
  [[nodiscard]] const std::optional<ExtPlace>& ext() const { return ext_; }
  /// 0 over Q.
  [[nodiscard]] const BigInt& m() const { return m_; }
  [[nodiscard]] std::string to_string() const;

  /// Normalized valuation; finite places only.
  [[nodiscard]] int valuation(const QuadElem& x) const;
  /// (a, x) in the completion.
  [[nodiscard]] int symbol(const Rational& a, const QuadElem& x) const;
  /// Sign of x under the embedding; real places only.
  [[nodiscard]] int real_sign(const QuadElem& x) const;
  [[nodiscard]] bool is_square(const Rational& a) const;

  [[nodiscard]] int ramification() const { return e_; }
  /// w(2).
  [[nodiscard]] int two_valuation() const { return w2_; }
  [[nodiscard]] const QuadElem& uniformizer() const { return pi_; }
  /// Representatives of O / p.
  [[nodiscard]] const std::vector<QuadElem>& residues() const { return residues_; }

  /// Element of the global field tagged for this completion.
  [[nodiscard]] QuadElem embed(const Rational& x) const { return m_ == 0 ? QuadElem(x) : in_field(x, m_); }

 private:
  Completion() = default;
  void init_finite();

  Kind kind_ = Kind::rational_real;
  Place base_ = Place::real();
  std::optional<ExtPlace> ext_;
  BigInt m_ = 0;
  int e_ = 1;
  int w2_ = 0;
  QuadElem pi_;
  std::vector<QuadElem> residues_;
};

/// Every completion of the field above v.
std::vector<Completion> completions_above(const Place& v, const Field& field);

enum class WitnessKind { fiber, infinity_fiber, singular_fiber };

struct Witness {
  WitnessKind kind = WitnessKind::infinity_fiber;
  /// Fibre coordinate (kind == fiber) or a centre of a ball around the root
  /// (kind == singular_fiber).
  QuadElem t;
  /// t holds the coordinate 1/t of the chart at infinity.
  bool inverted = false;
  [[nodiscard]] std::string to_string() const;
};

struct LocalVerdict {
  std::string place;
  bool nonempty = false;
  std::optional<Witness> witness;
};

/// Checks a witness independently of the search that produced it.
bool recertify(const ChateletSurface& X, const Completion& v, const Witness& w);

/// Whether X has a point over the completion.
LocalVerdict local_points(const ChateletSurface& X, const Completion& v);

/// Joint achievable invariants at one place. Bit i of a vector is set when
/// generator i evaluates to 1/2.
struct InvariantProfile {
  std::string place;
  int generators = 0;
  std::set<unsigned> vectors;
  bool good_reduction = false;

  /// Achievable values of generator i alone.
  [[nodiscard]] std::set<InvariantValue> values(int i) const;
  [[nodiscard]] std::string to_string() const;
};

/// Exact set of joint evaluation vectors of the classes over X(completion).
/// Empty when X has no point there.
InvariantProfile evaluation_profile(const ChateletSurface& X, const Field& field,
                                    const std::vector<BrauerClass>& classes, const Completion& v);

/// Values of inv(A(x)) over x in X(completion).
std::set<InvariantValue> achievable_invariants(const ChateletSurface& X, const Field& field, const BrauerClass& A,
                                               const Completion& v);

/// Depth bound on ball refinement at this completion.
int refinement_depth(const ChateletSurface& X, const Completion& v);

}  // namespace chatelet
