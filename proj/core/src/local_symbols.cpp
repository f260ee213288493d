#include "chatelet/local_symbols.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "chatelet/arith.hpp"

namespace chatelet {

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

// Image of a p-integral rational in Z/nZ (den coprime to n).
BigInt reduce(const Rational& x, const BigInt& n) {
  BigInt inv;
  const BigInt den = mod_pos(x.den(), n);
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw std::domain_error("reduce: denominator not invertible");
  }
  return mod_pos(x.num() * inv, n);
}

// Unit part of x at p: x / p^v(x).
Rational unit_part(const Rational& x, const BigInt& p, int v) {
  return v >= 0 ? x / Rational(ipow(p, static_cast<unsigned>(v))) : x * Rational(ipow(p, static_cast<unsigned>(-v)));
}

int legendre_of_unit(const Rational& u, const BigInt& p) {
  return legendre_symbol(u.num(), p) * legendre_symbol(u.den(), p);
}

QuadElem pow_elem(const QuadElem& x, int e) {
  QuadElem out(1);
  QuadElem base = e >= 0 ? x : x.inverse();
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) out *= base;
  return out;
}

int val_or_max(const Rational& x, const BigInt& p) {
  return x.is_zero() ? std::numeric_limits<int>::max() / 4 : padic_valuation(x, p);
}

}  // namespace

// ---------------------------------------------------------------- places

Place Place::finite(const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("place: " + p.get_str() + " is not prime");
  return Place(p);
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_real() || b.is_real()) {
    if (a.is_real() && b.is_real()) return std::strong_ordering::equal;
    return a.is_real() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const int c = cmp(a.p_, b.p_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtPlace::to_string() const {
  if (base.is_real()) {
    if (behavior == Splitting::split) return "inf" + std::to_string(which);
    return "inf(complex)";
  }
  switch (behavior) {
    case Splitting::split:
      return "w" + std::to_string(which) + "|" + base.to_string();
    case Splitting::inert:
      return "w|" + base.to_string() + "(inert)";
    case Splitting::ramified:
      return "w|" + base.to_string() + "(ramified)";
  }
  return "?";
}

std::vector<ExtPlace> places_above(const Place& v, const BigInt& m) {
  std::vector<ExtPlace> out;
  auto make = [&](Splitting s, int which, BigInt root) {
    ExtPlace w;
    w.base = v;
    w.m = m;
    w.behavior = s;
    w.which = which;
    w.residue_root = std::move(root);
    out.push_back(std::move(w));
  };
  if (v.is_real()) {
    if (m > 0) {
      make(Splitting::split, 1, 0);
      make(Splitting::split, 2, 0);
    } else {
      make(Splitting::ramified, 0, 0);
    }
    return out;
  }
  const BigInt& p = v.prime();
  if (p == 2) {
    const BigInt r8 = mod_pos(m, 8);
    if (r8 == 1) {
      make(Splitting::split, 1, 1);
      make(Splitting::split, 2, 3);
    } else if (r8 == 5) {
      make(Splitting::inert, 0, 0);
    } else {
      make(Splitting::ramified, 0, 0);
    }
    return out;
  }
  switch (kronecker_symbol(m, p)) {
    case 1: {
      const BigInt r = sqrt_mod_prime(m, p);
      make(Splitting::split, 1, r);
      make(Splitting::split, 2, p - r);
      break;
    }
    case -1:
      make(Splitting::inert, 0, 0);
      break;
    default:
      make(Splitting::ramified, 0, 0);
      break;
  }
  return out;
}

InvariantValue invariant(int symbol) { return symbol == -1 ? InvariantValue::half() : InvariantValue(); }

// ---------------------------------------------------------------- over Q_p

int padic_valuation(const Rational& x, const BigInt& p) {
  if (x.is_zero()) throw std::domain_error("padic_valuation: valuation of zero is +infinity");
  const int vn = valuation(x.num(), p);
  const int vd = valuation(x.den(), p);
  return vn - vd;
}

bool is_square_local(const Rational& x, const Place& place) {
  if (x.is_zero()) throw std::domain_error("is_square_local: zero");
  if (place.is_real()) return x.sign() > 0;
  const BigInt& p = place.prime();
  const int v = padic_valuation(x, p);
  if (v % 2 != 0) return false;
  const Rational u = unit_part(x, p, v);
  if (p == 2) return reduce(u, 8) == 1;
  return legendre_of_unit(u, p) == 1;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert_symbol: arguments must be nonzero");
  if (place.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const BigInt& p = place.prime();
  const int alpha = padic_valuation(a, p);
  const int beta = padic_valuation(b, p);
  const Rational u = unit_part(a, p, alpha);
  const Rational v = unit_part(b, p, beta);
  const bool alpha_odd = (alpha % 2) != 0;
  const bool beta_odd = (beta % 2) != 0;
  if (p == 2) {
    const long u8 = reduce(u, 8).get_si();
    const long v8 = reduce(v, 8).get_si();
    const int eps_u = ((u8 - 1) / 2) % 2;
    const int eps_v = ((v8 - 1) / 2) % 2;
    const int omega_u = ((u8 * u8 - 1) / 8) % 2;
    const int omega_v = ((v8 * v8 - 1) / 8) % 2;
    const int e = eps_u * eps_v + (alpha_odd ? omega_v : 0) + (beta_odd ? omega_u : 0);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  if (alpha_odd && beta_odd && mod_pos(p, 4) == 3) s = -s;
  if (beta_odd) s *= legendre_of_unit(u, p);
  if (alpha_odd) s *= legendre_of_unit(v, p);
  return s;
}

// ---------------------------------------------------------------- over L_w

Rational split_image(const QuadElem& x, const ExtPlace& w) {
  if (w.base.is_real() || w.behavior != Splitting::split) {
    throw std::domain_error("split_image: place " + w.to_string() + " is not a finite split place");
  }
  if (x.is_rational()) return x.x();
  const BigInt& p = w.base.prime();
  const int vx = val_or_max(x.x(), p);
  const int vy = padic_valuation(x.y(), p);
  const int vnorm = padic_valuation(x.norm(), p);
  const int two = p == 2 ? 1 : 0;
  // w(x) <= v(N x) - min(v(x0), v(y0)); the image is pinned once the error
  // y * (r - r_N) sits past the square-class radius.
  const int prec = std::max(3, vnorm - std::min(vx, vy) - vy + 2 * two + 2);
  const BigInt r = sqrt_mod_prime_power(w.m, p, static_cast<unsigned>(prec), w.residue_root);
  return x.x() + x.y() * Rational(r);
}

int ext_valuation(const QuadElem& x, const ExtPlace& w) {
  if (x.is_zero()) throw std::domain_error("ext_valuation: zero");
  if (w.base.is_real()) throw std::domain_error("ext_valuation: archimedean place");
  if (w.behavior == Splitting::split) return padic_valuation(split_image(x, w), w.base.prime());
  const int vn = padic_valuation(x.is_rational() ? x.x() * x.x() : x.norm(), w.base.prime());
  return w.behavior == Splitting::inert ? vn / 2 : vn;
}

namespace {

QuadElem uniformizer(const ExtPlace& w) {
  const BigInt& p = w.base.prime();
  if (w.behavior == Splitting::inert) return QuadElem(Rational(p));
  if (p == 2 && mod_pos(w.m, 4) == 3) return QuadElem(Rational(1), Rational(1), w.m);
  return QuadElem::sqrt_of(w.m);
}

// Tame symbol at a non-split place over an odd prime.
int tame_symbol(const QuadElem& a, const QuadElem& b, const ExtPlace& w) {
  const BigInt& p = w.base.prime();
  const QuadElem pi = uniformizer(w);
  const int alpha = ext_valuation(a, w);
  const int beta = ext_valuation(b, w);
  const QuadElem ua = in_field(Rational(1), w.m) * a * pow_elem(pi, -alpha);
  const QuadElem ub = in_field(Rational(1), w.m) * b * pow_elem(pi, -beta);
  int s = 1;
  if (w.behavior == Splitting::inert) {
    const Fp2 field(p, w.m);
    auto residue = [&](const QuadElem& u) { return Fp2::Elem{reduce(u.x(), p), reduce(u.y(), p)}; };
    if (beta % 2 != 0) s *= field.quadratic_character(residue(ua));
    if (alpha % 2 != 0) s *= field.quadratic_character(residue(ub));
    return s;  // -1 is a square in F_{p^2}
  }
  // Ramified: residue field F_p, residue of x + y sqrt(m) is x mod p.
  if (alpha % 2 != 0 && beta % 2 != 0 && mod_pos(p, 4) == 3) s = -s;
  if (beta % 2 != 0) s *= legendre_symbol(reduce(ua.x(), p), p);
  if (alpha % 2 != 0) s *= legendre_symbol(reduce(ub.x(), p), p);
  return s;
}

// ---- 2-adic isotropy search for non-split places over 2.

constexpr unsigned kWorkBits = 16;
constexpr std::uint64_t kWorkMask = (std::uint64_t{1} << kWorkBits) - 1;

struct TwoAdicRing {
  // O = Z_2[omega], omega^2 = s*omega + n, worked modulo 2^16.
  std::uint64_t s = 0;
  std::uint64_t n = 0;
  int f = 1;  // residue degree
  int e = 1;  // ramification index

  struct E {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
  };

  [[nodiscard]] E mul(E a, E b) const {
    const std::uint64_t uu = a.u * b.u + n * ((a.v * b.v) & kWorkMask);
    const std::uint64_t vv = a.u * b.v + a.v * b.u + s * ((a.v * b.v) & kWorkMask);
    return {uu & kWorkMask, vv & kWorkMask};
  }
  [[nodiscard]] static E sub(E a, E b) { return {(a.u - b.u) & kWorkMask, (a.v - b.v) & kWorkMask}; }
  // Lower bound on w(x): exact when below kWorkBits / f.
  [[nodiscard]] int val(E x) const {
    const std::uint64_t nn = (x.u * x.u + s * ((x.u * x.v) & kWorkMask) - n * ((x.v * x.v) & kWorkMask)) & kWorkMask;
    if (nn == 0) return static_cast<int>(kWorkBits) / f;
    return __builtin_ctzll(nn) / f;
  }
};

std::uint64_t reduce_word(const Rational& x) { return reduce(x, BigInt(1) << kWorkBits).get_ui(); }

TwoAdicRing ring_for(const ExtPlace& w) {
  TwoAdicRing r;
  if (w.behavior == Splitting::inert) {
    r.s = 1;
    r.n = reduce_word(Rational(BigInt((w.m - 1) / 4)));
    r.f = 2;
    r.e = 1;
  } else {
    r.s = 0;
    r.n = reduce_word(Rational(w.m));
    r.f = 1;
    r.e = 2;
  }
  return r;
}

TwoAdicRing::E to_ring(const QuadElem& x, const ExtPlace& w) {
  if (w.behavior == Splitting::inert) {
    // x + y sqrt(m) = (x - y) + 2y * theta, theta = (1 + sqrt(m)) / 2.
    return {reduce_word(x.x() - x.y()), reduce_word(Rational(2) * x.y())};
  }
  return {reduce_word(x.x()), reduce_word(x.y())};
}

// x * pi^(-2k) with w in {0, 1}.
QuadElem normalize_square_class(const QuadElem& x, const ExtPlace& w) {
  const int v = ext_valuation(x, w);
  const int k = v >= 0 ? v / 2 : -((-v + 1) / 2);
  const QuadElem pi2 = uniformizer(w) * uniformizer(w);
  return in_field(Rational(1), w.m) * x * pow_elem(pi2, -k);
}

std::vector<TwoAdicRing::E> reps_mod_prime_power(const TwoAdicRing& ring, int k) {
  std::vector<TwoAdicRing::E> out;
  if (ring.f == 2) {
    const std::uint64_t lim = std::uint64_t{1} << k;
    for (std::uint64_t u = 0; u < lim; ++u) {
      for (std::uint64_t v = 0; v < lim; ++v) out.push_back({u, v});
    }
  } else {
    const std::uint64_t ulim = std::uint64_t{1} << ((k + 1) / 2);
    const std::uint64_t vlim = std::uint64_t{1} << (k / 2);
    for (std::uint64_t u = 0; u < ulim; ++u) {
      for (std::uint64_t v = 0; v < vlim; ++v) out.push_back({u, v});
    }
  }
  return out;
}

int two_adic_symbol(const QuadElem& a, const QuadElem& b, const ExtPlace& w) {
  const QuadElem an = normalize_square_class(a, w);
  const QuadElem bn = normalize_square_class(b, w);
  const TwoAdicRing ring = ring_for(w);
  const TwoAdicRing::E ea = to_ring(an, w);
  const TwoAdicRing::E eb = to_ring(bn, w);

  using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t, int>;
  static std::mutex mu;
  static std::map<Key, int> cache;
  const Key key{ea.u, ea.v, eb.u, eb.v, ring.n, ring.f};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  // A primitive zero of X^2 - aY^2 - bZ^2 modulo p^K lifts by Hensel once
  // K > 2 * (e + 1); conversely every zero reduces to one.
  const int big_k = 2 * ring.e + 3;
  if (static_cast<int>(kWorkBits) < ring.f * big_k) throw PrecisionExhausted("2-adic search precision too small");
  const auto reps = reps_mod_prime_power(ring, big_k);
  std::vector<TwoAdicRing::E> a_sq;
  std::vector<TwoAdicRing::E> b_sq;
  std::vector<TwoAdicRing::E> x_sq;
  std::vector<bool> in_prime;
  a_sq.reserve(reps.size());
  b_sq.reserve(reps.size());
  for (const auto& r : reps) {
    const auto sq = ring.mul(r, r);
    a_sq.push_back(ring.mul(ea, sq));
    b_sq.push_back(ring.mul(eb, sq));
    x_sq.push_back(sq);
    in_prime.push_back(ring.val(r) >= 1);
  }
  const TwoAdicRing::E one{1, 0};
  auto zero = [&](TwoAdicRing::E q) { return ring.val(q) >= big_k; };
  int result = -1;
  // X = 1.
  for (std::size_t y = 0; y < reps.size() && result < 0; ++y) {
    const auto base = TwoAdicRing::sub(one, a_sq[y]);
    for (std::size_t z = 0; z < reps.size(); ++z) {
      if (zero(TwoAdicRing::sub(base, b_sq[z]))) {
        result = 1;
        break;
      }
    }
  }
  // X in p, Y = 1.
  for (std::size_t x = 0; x < reps.size() && result < 0; ++x) {
    if (!in_prime[x]) continue;
    const auto base = TwoAdicRing::sub(x_sq[x], ea);
    for (std::size_t z = 0; z < reps.size(); ++z) {
      if (zero(TwoAdicRing::sub(base, b_sq[z]))) {
        result = 1;
        break;
      }
    }
  }
  // X, Y in p, Z = 1.
  for (std::size_t x = 0; x < reps.size() && result < 0; ++x) {
    if (!in_prime[x]) continue;
    for (std::size_t y = 0; y < reps.size(); ++y) {
      if (!in_prime[y]) continue;
      if (zero(TwoAdicRing::sub(TwoAdicRing::sub(x_sq[x], a_sq[y]), eb))) {
        result = 1;
        break;
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, result);
  return result;
}

bool two_adic_is_square(const QuadElem& x, const ExtPlace& w) {
  const QuadElem xn = normalize_square_class(x, w);
  if (ext_valuation(xn, w) != 0) return false;
  const TwoAdicRing ring = ring_for(w);
  const auto ex = to_ring(xn, w);
  // Y^2 = x mod 4*pi certifies a square; every square reduces to one.
  const int k = 2 * ring.e + 1;
  for (const auto& r : reps_mod_prime_power(ring, k)) {
    if (ring.val(TwoAdicRing::sub(ring.mul(r, r), ex)) >= k) return true;
  }
  return false;
}

}  // namespace

int hilbert_symbol_ext(const QuadElem& a, const QuadElem& b, const ExtPlace& w) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("hilbert_symbol_ext: arguments must be nonzero");
  if (w.base.is_real()) {
    if (w.behavior != Splitting::split) return 1;
    return (a.real_sign(w.which) < 0 && b.real_sign(w.which) < 0) ? -1 : 1;
  }
  if (w.behavior == Splitting::split) {
    return hilbert_symbol(split_image(a, w), split_image(b, w), w.base);
  }
  if (w.base.prime() != 2) return tame_symbol(a, b, w);
  return two_adic_symbol(a, b, w);
}

bool is_square_ext(const QuadElem& x, const ExtPlace& w) {
  if (x.is_zero()) throw std::domain_error("is_square_ext: zero");
  if (w.base.is_real()) {
    if (w.behavior != Splitting::split) return true;
    return x.real_sign(w.which) > 0;
  }
  if (w.behavior == Splitting::split) return is_square_local(split_image(x, w), w.base);
  const BigInt& p = w.base.prime();
  if (p == 2) return two_adic_is_square(x, w);
  const int v = ext_valuation(x, w);
  if (v % 2 != 0) return false;
  const QuadElem u = in_field(Rational(1), w.m) * x * pow_elem(uniformizer(w), -v);
  if (w.behavior == Splitting::inert) {
    return Fp2(p, w.m).quadratic_character({reduce(u.x(), p), reduce(u.y(), p)}) == 1;
  }
  return legendre_symbol(reduce(u.x(), p), p) == 1;
}

// ---------------------------------------------------------------- F_{p^2}

Fp2::Fp2(BigInt p, BigInt m) : p_(std::move(p)), m_(mod_pos(m, p_)) {
  if (legendre_symbol(m_, p_) != -1) throw std::invalid_argument("Fp2: m must be a non-residue mod p");
}

Fp2::Elem Fp2::mul(const Elem& a, const Elem& b) const {
  return {mod_pos(a.u * b.u + m_ * a.v * b.v, p_), mod_pos(a.u * b.v + a.v * b.u, p_)};
}

Fp2::Elem Fp2::pow(Elem a, BigInt e) const {
  Elem r{1, 0};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()) != 0) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int Fp2::quadratic_character(const Elem& a) const {
  if (mod_pos(a.u, p_) == 0 && mod_pos(a.v, p_) == 0) return 0;
  const Elem r = pow(a, (p_ * p_ - 1) / 2);
  return (r.u == 1 && r.v == 0) ? 1 : -1;
}

}  // namespace chatelet
