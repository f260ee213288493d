#include <algorithm>
#include <random>
#include <stdexcept>

#include "chatelet/arith.hpp"
#include "chatelet/factor.hpp"

namespace chatelet {

namespace {

using U = std::uint64_t;
using V = std::vector<U>;

class Fp {
 public:
  explicit Fp(U p) : p_(p) {}
  [[nodiscard]] U p() const { return p_; }
  [[nodiscard]] U add(U a, U b) const { return (a + b) % p_; }
  [[nodiscard]] U sub(U a, U b) const { return (a + p_ - b) % p_; }
  [[nodiscard]] U mul(U a, U b) const { return static_cast<U>((static_cast<unsigned __int128>(a) * b) % p_); }
  [[nodiscard]] U pow(U a, U e) const {
    U r = 1;
    while (e > 0) {
      if ((e & 1U) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  [[nodiscard]] U inv(U a) const { return pow(a, p_ - 2); }

  void trim(V& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  [[nodiscard]] static int deg(const V& f) { return static_cast<int>(f.size()) - 1; }

  [[nodiscard]] V monic(V f) const {
    trim(f);
    if (f.empty()) return f;
    const U il = inv(f.back());
    for (U& c : f) c = mul(c, il);
    return f;
  }
  [[nodiscard]] V sub(V a, const V& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  [[nodiscard]] V mul(const V& a, const V& b) const {
    if (a.empty() || b.empty()) return {};
    V out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
    trim(out);
    return out;
  }
  [[nodiscard]] std::pair<V, V> divmod(V a, const V& b) const {
    if (b.empty()) throw std::domain_error("F_p division by zero");
    trim(a);
    if (a.size() < b.size()) return {V{}, a};
    V q(a.size() - b.size() + 1, 0);
    const U il = inv(b.back());
    for (std::size_t i = a.size(); i-- >= b.size();) {
      const U c = mul(a[i], il);
      q[i - (b.size() - 1)] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[i - (b.size() - 1) + j] = sub(a[i - (b.size() - 1) + j], mul(c, b[j]));
      }
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }
  [[nodiscard]] V mod(const V& a, const V& b) const { return divmod(a, b).second; }
  [[nodiscard]] V div(const V& a, const V& b) const { return divmod(a, b).first; }
  [[nodiscard]] V gcd(V a, V b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      V r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  [[nodiscard]] V powmod(V base, const BigInt& e, const V& f) const {
    V r{1};
    base = mod(base, f);
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), f);
      if (mpz_tstbit(e.get_mpz_t(), i) != 0) r = mod(mul(r, base), f);
    }
    return r;
  }
  [[nodiscard]] V derivative(const V& f) const {
    V d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p_));
    trim(d);
    return d;
  }

 private:
  U p_;
};

// f(t) = g(t^p) -> g.
V pth_root(const V& f, U p) {
  V g;
  for (std::size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
  return g;
}

void squarefree_decompose(const Fp& F, const V& f, int mult, std::vector<std::pair<V, int>>& out) {
  if (Fp::deg(f) < 1) return;
  const V d = F.derivative(f);
  if (d.empty()) {
    squarefree_decompose(F, pth_root(f, F.p()), mult * static_cast<int>(F.p()), out);
    return;
  }
  V c = F.gcd(f, d);
  V w = F.div(f, c);
  int i = 1;
  while (Fp::deg(w) > 0) {
    const V y = F.gcd(w, c);
    const V z = F.div(w, y);
    if (Fp::deg(z) > 0) out.emplace_back(F.monic(z), i * mult);
    ++i;
    w = y;
    c = F.div(c, y);
  }
  if (Fp::deg(c) > 0) squarefree_decompose(F, pth_root(F.monic(c), F.p()), mult * static_cast<int>(F.p()), out);
}

void equal_degree(const Fp& F, const V& g, int d, std::mt19937_64& rng, std::vector<V>& out) {
  if (Fp::deg(g) == d) {
    out.push_back(g);
    return;
  }
  const U p = F.p();
  for (;;) {
    V a(static_cast<std::size_t>(Fp::deg(g)));
    for (U& c : a) c = rng() % p;
    F.trim(a);
    if (Fp::deg(a) < 1) continue;
    V b;
    if (p == 2) {
      V term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = F.mod(F.mul(term, term), g);
        V sum = b;
        if (term.size() > sum.size()) sum.resize(term.size(), 0);
        for (std::size_t k = 0; k < term.size(); ++k) sum[k] = F.add(sum[k], term[k]);
        F.trim(sum);
        b = sum;
      }
    } else {
      const BigInt e = (ipow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned>(d)) - 1) / 2;
      b = F.sub(F.powmod(a, e, g), V{1});
    }
    const V h = F.gcd(g, b);
    if (Fp::deg(h) > 0 && Fp::deg(h) < Fp::deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.monic(F.div(g, h)), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<int> ModPFactorization::degrees() const {
  std::vector<int> d;
  for (const auto& [f, e] : factors) {
    for (int i = 0; i < e; ++i) d.push_back(static_cast<int>(f.size()) - 1);
  }
  std::sort(d.begin(), d.end());
  return d;
}

ModPFactorization factor_mod_p(const QPoly& poly, const BigInt& prime) {
  if (!is_prime(prime)) throw std::invalid_argument("factor_mod_p: modulus is not prime");
  if (prime >= (BigInt(1) << 62)) throw std::invalid_argument("factor_mod_p: prime too large");
  if (poly.degree() < 1) throw std::invalid_argument("factor_mod_p: constant polynomial");
  const U p = prime.get_ui();
  const Fp F(p);
  V f;
  for (const Rational& c : poly.coeffs()) {
    if (valuation(c.den(), prime) > 0) throw std::invalid_argument("factor_mod_p: bad reduction (denominator)");
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), c.den().get_mpz_t(), prime.get_mpz_t());
    BigInt r = (c.num() * inv) % prime;
    if (r < 0) r += prime;
    f.push_back(r.get_ui());
  }
  if (f.back() == 0) throw std::invalid_argument("factor_mod_p: bad reduction (leading coefficient)");
  ModPFactorization out;
  out.p = p;
  out.unit = f.back();
  const V monic = F.monic(f);

  std::vector<std::pair<V, int>> sqf;
  squarefree_decompose(F, monic, 1, sqf);
  std::mt19937_64 rng(p * 0x9E3779B97F4A7C15ULL + 1);
  for (const auto& [g0, e] : sqf) {
    V g = g0;
    V h = F.mod(V{0, 1}, g);
    for (int d = 1; Fp::deg(g) >= 2 * d; ++d) {
      h = F.powmod(h, BigInt(static_cast<unsigned long>(p)), g);
      const V part = F.gcd(g, F.sub(h, V{0, 1}));
      if (Fp::deg(part) > 0) {
        std::vector<V> pieces;
        equal_degree(F, part, d, rng, pieces);
        for (auto& piece : pieces) out.factors.emplace_back(piece, e);
        g = F.monic(F.div(g, part));
        h = F.mod(h, g);
      }
    }
    if (Fp::deg(g) > 0) out.factors.emplace_back(g, e);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

}  // namespace chatelet
