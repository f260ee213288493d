#include <gtest/gtest.h>

#include "chatelet/arith.hpp"
#include "chatelet/obstruction.hpp"
#include "corpus.hpp"

using namespace chatelet;
using chatelet::testing::counterexample;

namespace {

Completion at(long p) { return Completion::of(Place::finite(BigInt(p))); }

Completion ext_at(long p, long m, std::size_t i = 0) {
  return Completion::of(places_above(Place::finite(BigInt(p)), BigInt(m)).at(i));
}

std::set<InvariantValue> half() { return {InvariantValue::half()}; }
std::set<InvariantValue> zero() { return {InvariantValue{}}; }

std::vector<Completion> checked_completions(const ChateletSurface& X, const Field& field) {
  std::vector<Completion> out;
  for (const Place& v : bad_places(X, field)) {
    for (Completion& w : completions_above(v, field)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

TEST(LocalPoints, CounterexampleExamples) {
  const ChateletSurface X = counterexample();
  EXPECT_FALSE(local_points(X, at(3)).nonempty);
  const LocalVerdict five = local_points(X, at(5));
  ASSERT_TRUE(five.nonempty);
  ASSERT_TRUE(five.witness);
  EXPECT_EQ(five.witness->to_string(), "t = 1");
  EXPECT_EQ(hilbert_symbol(Rational(5), X.cP().eval(Rational(1)), Place::finite(BigInt(5))), 1);
  EXPECT_EQ(X.cP().eval(Rational(1)), Rational(39, 5));
  const LocalVerdict seven = local_points(X, at(7));
  ASSERT_TRUE(seven.witness);
  EXPECT_EQ(seven.witness->kind, WitnessKind::infinity_fiber);
  // X(Q_3(sqrt(29))) is nonempty: 3 is inert.
  EXPECT_TRUE(local_points(X, ext_at(3, 29)).nonempty);
}

TEST(LocalPoints, CPAtTwoIsNotASquareClassShortcut) {
  // cP(2) = 327/5 and (5, 327/5) = -1 at 5: t = 2 is not a witness.
  const ChateletSurface X = counterexample();
  EXPECT_EQ(X.cP().eval(Rational(2)), Rational(327, 5));
  EXPECT_EQ(hilbert_symbol(Rational(5), Rational(327, 5), Place::finite(BigInt(5))), -1);
  EXPECT_FALSE(recertify(X, at(5), Witness{WitnessKind::fiber, QuadElem(Rational(2)), false}));
}

TEST(AdelicPoints, Examples) {
  const AdelicResult q = adelic_points(counterexample(), Field{});
  EXPECT_FALSE(q.nonempty);
  EXPECT_EQ(q.blocking, std::vector<std::string>{"3"});
  EXPECT_TRUE(adelic_points(counterexample(), Field{29}).nonempty);
  const ChateletSurface Y(Rational(-1), Rational(1), QPoly{1, 0, 0, 0, 1});
  EXPECT_TRUE(adelic_points(Y, Field{}).nonempty);
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(2), Place::real()), 1);
}

TEST(AchievableInvariants, CounterexampleOverSqrt29) {
  const ChateletSurface X = counterexample();
  const Field L{29};
  const BrauerClass A = brauer_group(X, L).generators.at(0);
  EXPECT_EQ(achievable_invariants(X, L, A, ext_at(5, 29, 0)), half());
  EXPECT_EQ(achievable_invariants(X, L, A, ext_at(5, 29, 1)), zero());
  EXPECT_EQ(achievable_invariants(X, L, A, ext_at(3, 29)), zero());
  EXPECT_EQ(achievable_invariants(X, L, A, ext_at(2, 29)), zero());
  EXPECT_EQ(achievable_invariants(X, L, A, ext_at(29, 29)), zero());
  EXPECT_EQ(achievable_invariants(X, L, A, ext_at(7, 29)), zero());
}

TEST(BmVerdict, Examples) {
  const ChateletSurface X = counterexample();
  EXPECT_EQ(bm_verdict(X, Field{}).verdict, Verdict::no_adelic_points);
  const ObstructionReport r = bm_verdict(X, Field{29});
  EXPECT_EQ(r.verdict, Verdict::obstruction);
  EXPECT_EQ(r.reachable, std::set<unsigned>{1});
  const ObstructionReport two = bm_verdict(X, Field{2});
  EXPECT_EQ(two.verdict, Verdict::no_obstruction);
  EXPECT_EQ(two.brauer.structure, BrauerStructure::trivial);
}

TEST(BmVerdict, SplitSurfaceHasNoObstruction) {
  const ChateletSurface X(Rational(-1), Rational(1), QPoly{0, 2, -1, -2, 1});
  const ObstructionReport r = bm_verdict(X, Field{});
  EXPECT_EQ(r.brauer.structure, BrauerStructure::Z2xZ2);
  EXPECT_EQ(r.verdict, Verdict::no_obstruction);
  EXPECT_TRUE(r.reachable.count(0));
}

TEST(Parity, Examples) {
  const ParityCertificate a = norm_form_parity(counterexample(), BigInt(29));
  EXPECT_TRUE(a.parity.is_half());
  EXPECT_EQ(a.c_model, Rational(3));
  EXPECT_EQ(a.contributions, std::vector<Place>{Place::finite(BigInt(5))});
  const ChateletSurface Y(Rational(5), Rational(3), QPoly{-18, 0, 2, 0, 1});
  const ParityCertificate b = norm_form_parity(Y, BigInt(19));
  EXPECT_FALSE(b.parity.is_half());
  EXPECT_EQ(b.contributions, (std::vector<Place>{Place::finite(BigInt(3)), Place::finite(BigInt(5))}));
  // a, c > 0, odd units away from 2 and a real field: parity 0.
  const ChateletSurface Z(Rational(3), Rational(1), QPoly{1, 0, 0, 0, 1});
  EXPECT_FALSE(norm_form_parity(Z, BigInt(2)).parity.is_half());
  EXPECT_THROW((void)norm_form_parity(Y, BigInt(2)), std::invalid_argument);
}

TEST(Analyze, Examples) {
  const AnalysisReport r = analyze(counterexample());
  EXPECT_FALSE(r.condition_brauer);
  EXPECT_FALSE(r.condition_adelic);
  EXPECT_FALSE(r.condition_galois);
  EXPECT_EQ(r.galois, GaloisType::D4);
  EXPECT_EQ(r.problematic, std::vector<BigInt>{29});
  ASSERT_EQ(r.extensions.size(), 1U);
  EXPECT_EQ(r.extensions[0].verdict, Verdict::obstruction);
  const ChateletSurface V(Rational(3), Rational(1), QPoly{1, 0, 0, 0, 1});
  const AnalysisReport v = analyze(V);
  EXPECT_TRUE(v.condition_adelic);
  EXPECT_TRUE(v.extensions.empty());
  const ChateletSurface S(Rational(-1), Rational(1), QPoly{0, 2, -1, -2, 1});
  const AnalysisReport s = analyze(S);
  ASSERT_TRUE(s.rational_point_fiber);
  EXPECT_EQ(S.P().eval(*s.rational_point_fiber), Rational(0));
  EXPECT_THROW(ChateletSurface(Rational(4), Rational(1), QPoly{1, 0, 0, 0, 1}), InvalidSurface);
}

TEST(Properties, WitnessRecertification) {
  for (const auto& [name, X] : chatelet::testing::load_corpus()) {
    for (const Field& field : {Field{}, Field{-1}, Field{29}}) {
      for (const Completion& v : checked_completions(X, field)) {
        const LocalVerdict lv = local_points(X, v);
        if (!lv.nonempty) continue;
        ASSERT_TRUE(lv.witness) << name << " " << lv.place;
        EXPECT_TRUE(recertify(X, v, *lv.witness)) << name << " " << lv.place << " " << lv.witness->to_string();
      }
    }
  }
}

TEST(Properties, GeneratorsVanishAtInfinity) {
  for (const auto& [name, X] : chatelet::testing::load_corpus()) {
    for (const Field& field : {Field{}, Field{29}, Field{-1}}) {
      const BrauerGroupDesc b = brauer_group(X, field);
      for (const BrauerClass& g : b.generators) {
        EXPECT_EQ(g.F.lc().to_string(), "1") << name;
        for (const Completion& v : checked_completions(X, field)) {
          EXPECT_EQ(v.symbol(X.a(), v.embed(Rational(1))), 1);
        }
      }
    }
  }
}

TEST(Properties, ClassComplementConsistency) {
  const std::vector<Rational> ts = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2),
                                    Rational(3), Rational(-3, 2), Rational(5), Rational(1, 5), Rational(7, 3)};
  for (const auto& [name, X] : chatelet::testing::load_corpus()) {
    for (const Field& field : {Field{}, Field{29}, Field{-1}, Field{2}}) {
      const BrauerGroupDesc b = brauer_group(X, field);
      for (const BrauerClass& A : b.generators) {
        const BrauerClass B = class_complement(X, field, A);
        const KPoly fa = A.symbol_poly();
        const KPoly fb = B.symbol_poly();
        for (const Completion& v : checked_completions(X, field)) {
          for (const Rational& t : ts) {
            const QuadElem tt = v.embed(t);
            const QuadElem xa = fa.eval(tt);
            const QuadElem xb = fb.eval(tt);
            const QuadElem fiber = v.embed(X.cP().eval(t));
            if (xa.is_zero() || xb.is_zero() || fiber.is_zero()) continue;
            if (v.symbol(X.a(), fiber) != 1) continue;
            EXPECT_EQ(v.symbol(X.a(), xa), v.symbol(X.a(), xb)) << name << " " << v.to_string() << " t=" << t.to_string();
          }
        }
      }
    }
  }
}

TEST(Properties, EvenDegreeLocalTrivialization) {
  int cases = 0;
  for (const auto& [name, X] : chatelet::testing::load_corpus()) {
    for (const Place& v : bad_places(X, Field{})) {
      if (v.is_real() || local_points(X, Completion::of(v)).nonempty) continue;
      const BigInt p = v.prime();
      std::vector<BigInt> ms;
      if (p == 2) {
        ms = {BigInt(5), BigInt(-1), BigInt(2)};
      } else {
        ms.push_back(p);
        for (long m = 2;; ++m) {
          if (squarefree_part(Rational(m)) == m && kronecker_symbol(BigInt(m), p) == -1) {
            ms.emplace_back(m);
            break;
          }
        }
      }
      for (const BigInt& m : ms) {
        for (const ExtPlace& w : places_above(v, m)) {
          ASSERT_EQ(w.local_degree(), 2);
          const LocalVerdict lv = local_points(X, Completion::of(w));
          ASSERT_TRUE(lv.nonempty) << name << " " << w.to_string();
          EXPECT_EQ(lv.witness->kind, WitnessKind::infinity_fiber);
          ++cases;
        }
      }
    }
  }
  EXPECT_GE(cases, 6);
}
