#include "chatelet/real_roots.hpp"

#include <algorithm>

#include "chatelet/factor.hpp"

namespace chatelet {

namespace {

QPoly squarefree(const QPoly& p) { return exact_div(p, gcd(p, p.derivative())).monic(); }

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const QPoly& f : chain) {
    const int s = f.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational cauchy_bound(const QPoly& p) {
  Rational b(0);
  for (int i = 0; i < p.degree(); ++i) b = std::max(b, (p.coeff(i) / p.lc()).abs());
  return b + Rational(1);
}

}  // namespace

int count_real_roots(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(squarefree(p));
  return variations(chain, lo) - variations(chain, hi);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() < 1) return out;
  QPoly q = squarefree(p);
  const auto rat = rational_roots(q);
  for (const Rational& r : rat) q = exact_div(q, QPoly{-r, Rational(1)});
  if (q.degree() >= 1) {
    const auto chain = sturm_chain(q);
    const Rational b = cauchy_bound(q);
    std::vector<std::pair<Rational, Rational>> work{{-b, b}};
    while (!work.empty()) {
      auto [lo, hi] = work.back();
      work.pop_back();
      const int n = variations(chain, lo) - variations(chain, hi);
      if (n == 0) continue;
      bool clash = false;
      for (const Rational& r : rat) clash = clash || (lo <= r && r <= hi);
      if (n == 1 && !clash) {
        out.emplace_back(lo, hi);
        continue;
      }
      const Rational mid = (lo + hi) / Rational(2);
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  for (const Rational& r : rat) out.emplace_back(r, r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> real_sample_points(const QPoly& p) {
  const auto iv = isolate_real_roots(p);
  if (iv.empty()) return {Rational(0)};
  std::vector<Rational> out;
  out.push_back(iv.front().first - Rational(1));
  for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
    const Rational& u = iv[i].second;
    const Rational& l = iv[i + 1].first;
    out.push_back(u == l ? u : (u + l) / Rational(2));
  }
  out.push_back(iv.back().second + Rational(1));
  return out;
}

}  // namespace chatelet
