#include "chatelet/poly.hpp"

namespace chatelet {

KPoly lift(const QPoly& p, const BigInt& m) {
  std::vector<QuadElem> c;
  c.reserve(p.coeffs().size());
  for (const Rational& v : p.coeffs()) c.push_back(m == 0 ? QuadElem(v) : in_field(v, m));
  return KPoly(std::move(c));
}

QPoly to_rational(const KPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const QuadElem& v : p.coeffs()) {
    if (!v.is_rational()) throw std::domain_error("to_rational: irrational coefficient " + v.to_string());
    c.push_back(v.x());
  }
  return QPoly(std::move(c));
}

KPoly conjugate(const KPoly& p) {
  std::vector<QuadElem> c;
  c.reserve(p.coeffs().size());
  for (const QuadElem& v : p.coeffs()) c.push_back(v.conj());
  return KPoly(std::move(c));
}

Rational resultant(const QPoly& a, const QPoly& b) {
  const int n = a.degree();
  const int m = b.degree();
  if (n < 0 || m < 0) return Rational(0);
  if (n == 0) return a.lc().pow(m);
  if (m == 0) return b.lc().pow(n);
  const int size = n + m;
  std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[r][r + i] = a.coeff(n - i);
  }
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[m + r][r + i] = b.coeff(m - i);
  }
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r) {
      if (!mat[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (mat[r][col].is_zero()) continue;
      const Rational f = mat[r][col] / mat[col][col];
      for (int k = col; k < size; ++k) mat[r][k] -= f * mat[col][k];
    }
  }
  return det;
}

Rational discriminant(const QPoly& p) {
  const int n = p.degree();
  if (n < 1) throw std::domain_error("discriminant of a constant polynomial");
  const Rational r = resultant(p, p.derivative()) / p.lc();
  return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

namespace {

template <class T>
std::string render(const Poly<T>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const T& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    const bool rational = c.is_rational();
    const bool pure = !rational && c.x().is_zero();
    const int sign = rational ? c.x().sign() : (pure ? c.y().sign() : 1);
    std::string body;
    if (rational) {
      const Rational mag = c.x().abs();
      if (!(mag == Rational(1)) || i == 0) body = mag.to_string();
    } else if (pure) {
      body = (sign < 0 ? -c : c).to_string();
    } else {
      const std::string s = c.to_string();
      body = s.front() == '(' ? s : "(" + s + ")";
    }
    std::string term = body;
    if (!body.empty() && !mono.empty()) term += "*";
    term += mono;
    if (out.empty()) {
      out = (sign < 0 ? "-" : "") + term;
    } else {
      out += (sign < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const QPoly& p) { return render(lift(p, 0)); }
std::string to_string(const KPoly& p) { return render(p); }

std::vector<std::string> coefficient_strings(const QPoly& p) {
  std::vector<std::string> out;
  for (const Rational& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

std::vector<std::string> coefficient_strings(const KPoly& p) {
  std::vector<std::string> out;
  for (const QuadElem& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

}  // namespace chatelet
