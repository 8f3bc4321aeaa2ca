#include "ssg4/weil.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ssg4/error.hpp"

namespace ssg4 {

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

bool divisible(const mpz_class& value, const mpz_class& divisor) {
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const mpz_class& root) { return IntPoly({-root, 1}); }

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> v(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(int e) const {
  IntPoly result({1});
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "X";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------- Weil polynomials

bool satisfies_functional_equation(const IntPoly& poly, int n) {
  if (poly.is_zero() || poly.degree() % 2 != 0 || poly.leading() != 1) return false;
  const int g = poly.degree() / 2;
  const mpz_class q = pow2(static_cast<unsigned long>(n));
  mpz_class scale = 1;  // q^(g-i), built from i = g downwards
  for (int i = g; i >= 0; --i) {
    if (poly.coeff(i) != scale * poly.coeff(2 * g - i)) return false;
    scale *= q;
  }
  return true;
}

WeilPoly make_weil_poly(IntPoly poly, int n, std::string label) {
  if (!satisfies_functional_equation(poly, n)) {
    throw Error(Errc::MalformedWeilPoly, poly.to_string() + " violates the functional equation for n = " +
                                             std::to_string(n));
  }
  WeilPoly w;
  w.g = poly.degree() / 2;
  w.n = n;
  w.poly = std::move(poly);
  w.label = std::move(label);
  return w;
}

bool sx_check(const WeilPoly& p, unsigned long prime) {
  if (!satisfies_functional_equation(p.poly, p.n)) {
    throw Error(Errc::MalformedWeilPoly, p.poly.to_string());
  }
  for (int j = 1; j <= p.g; ++j) {
    const auto exponent = static_cast<unsigned long>((j * p.n + 1) / 2);
    mpz_class divisor;
    mpz_ui_pow_ui(divisor.get_mpz_t(), prime, exponent);
    if (!divisible(p.a(j), divisor)) return false;
  }
  return true;
}

std::vector<WeilPoly> simple_ss_factors(int n) {
  if (n % 2 == 0 || n < 3 || n > 63) {
    throw Error(n % 2 == 0 ? Errc::NEven : Errc::NOutOfRange, "n = " + std::to_string(n));
  }
  const mpz_class q = pow2(static_cast<unsigned long>(n));
  const mpz_class s = pow2(static_cast<unsigned long>((n + 1) / 2));
  const mpz_class q2 = q * q, q3 = q2 * q, q4 = q3 * q;

  std::vector<WeilPoly> out;
  auto add = [&](std::vector<mpz_class> c, const char* label) {
    out.push_back(make_weil_poly(IntPoly(std::move(c)), n, label));
  };
  add({q, s, 1}, "X^2+sX+q");
  add({q, -s, 1}, "X^2-sX+q");
  add({q, 0, 1}, "X^2+q");
  add({q2, 0, q, 0, 1}, "X^4+qX^2+q^2");
  add({q2, 0, -q, 0, 1}, "X^4-qX^2+q^2");
  add({q2, q * s, q, s, 1}, "X^4+sX^3+qX^2+qsX+q^2");
  add({q2, -q * s, q, -s, 1}, "X^4-sX^3+qX^2-qsX+q^2");
  add({q2, 0, -2 * q, 0, 1}, "(X^2-q)^2");
  add({q4, q3 * s, q3, 0, -q2, 0, q, s, 1}, "X^8+sX^7+qX^6-q^2X^4+q^3X^2+q^3sX+q^4");
  add({q4, -q3 * s, q3, 0, -q2, 0, q, -s, 1}, "X^8-sX^7+qX^6-q^2X^4+q^3X^2-q^3sX+q^4");
  add({q4, 0, 0, 0, 0, 0, 0, 0, 1}, "X^8+q^4");
  add({q4, 0, -q3, 0, q2, 0, -q, 0, 1}, "X^8-qX^6+q^2X^4-q^3X^2+q^4");
  return out;
}

mpz_class hw_serre_bound(int g, int n) {
  mpz_class root;
  const mpz_class four_q = pow2(static_cast<unsigned long>(n + 2));
  mpz_sqrt(root.get_mpz_t(), four_q.get_mpz_t());
  return root * g;
}

// ---------------------------------------------------------------- products

IntPoly FactorMultiset::product() const {
  IntPoly result({1});
  for (const auto& [factor, mult] : factors) result = result * factor.poly.pow(mult);
  return result;
}

std::string FactorMultiset::label() const {
  std::string out;
  for (const auto& [factor, mult] : factors) {
    if (!out.empty()) out += "*";
    out += "(" + factor.label + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

std::vector<FactorMultiset> enumerate_products(int n, int target_degree) {
  const std::vector<WeilPoly> catalog = simple_ss_factors(n);
  std::vector<FactorMultiset> out;
  if (target_degree < 0 || target_degree % 2 != 0) return out;

  std::vector<int> counts(catalog.size(), 0);
  std::function<void(std::size_t, int)> visit = [&](std::size_t index, int remaining) {
    if (remaining == 0) {
      FactorMultiset ms;
      ms.total_degree = target_degree;
      ms.a1 = 0;
      for (std::size_t i = 0; i < catalog.size(); ++i) {
        if (counts[i] == 0) continue;
        ms.factors.emplace_back(catalog[i], counts[i]);
        ms.a1 += catalog[i].a1() * counts[i];
      }
      out.push_back(std::move(ms));
      return;
    }
    if (index == catalog.size()) return;
    const int deg = catalog[index].poly.degree();
    for (int k = remaining / deg; k >= 0; --k) {
      counts[index] = k;
      visit(index + 1, remaining - k * deg);
    }
    counts[index] = 0;
  };
  visit(0, target_degree);

  std::vector<std::string> labels;
  labels.reserve(out.size());
  for (const auto& ms : out) labels.push_back(ms.label());
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int c = cmp(out[x].a1, out[y].a1);
    if (c != 0) return c < 0;
    return labels[x] < labels[y];
  });
  std::vector<FactorMultiset> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<FactorMultiset> filter_by_serre(const std::vector<FactorMultiset>& ms, int g, int n) {
  const mpz_class bound = hw_serre_bound(g, n);
  std::vector<FactorMultiset> out;
  for (const auto& m : ms) {
    if (abs(m.a1) <= bound) out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------- Frob + Ver

IntPoly reduced_frobver_factor(const WeilPoly& p) {
  const int d = p.g;
  const mpz_class q = pow2(static_cast<unsigned long>(p.n));
  // P(X) = X^d h(X + q/X): peel h from the top, using X^d (X + q/X)^k = X^(d-k) (X^2 + q)^k.
  const IntPoly x2_plus_q({q, 0, 1});
  IntPoly rest = p.poly;
  std::vector<mpz_class> h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = d; k >= 0; --k) {
    const mpz_class hk = rest.coeff(d + k);
    h[static_cast<std::size_t>(k)] = hk;
    rest = rest - IntPoly::monomial(hk, d - k) * x2_plus_q.pow(k);
  }
  if (!rest.is_zero()) throw Error(Errc::NotReducible, p.poly.to_string() + " has no real Weil polynomial");

  // Roots scaled by 2^(-(n-1)/2): coefficient k divides by 2^((d-k)(n-1)/2).
  const auto shift = static_cast<unsigned long>((p.n - 1) / 2);
  for (int k = 0; k <= d; ++k) {
    const mpz_class divisor = pow2(static_cast<unsigned long>(d - k) * shift);
    mpz_class& c = h[static_cast<std::size_t>(k)];
    if (!divisible(c, divisor)) {
      throw Error(Errc::NotReducible, p.poly.to_string() + ": root sums not divisible by 2^((n-1)/2)");
    }
    c /= divisor;
  }
  return IntPoly(std::move(h));
}

ReducedFrobVer reduced_frobver_poly(const FactorMultiset& ms) {
  ReducedFrobVer out;
  out.product = IntPoly({1});
  for (const auto& [factor, mult] : ms.factors) {
    const IntPoly reduced = reduced_frobver_factor(factor);
    out.product = out.product * reduced.pow(mult);
    auto it = std::find_if(out.distinct_factors.begin(), out.distinct_factors.end(),
                           [&](const auto& entry) { return entry.first == reduced; });
    if (it == out.distinct_factors.end()) {
      out.distinct_factors.emplace_back(reduced, mult);
    } else {
      it->second += mult;
    }
  }
  return out;
}

// ---------------------------------------------------------------- resultant

mpz_class resultant(const IntPoly& p, const IntPoly& r) {
  if (p.is_zero() || r.is_zero()) throw Error(Errc::ZeroPolynomial, "resultant with the zero polynomial");
  const int m = p.degree();
  const int l = r.degree();
  const int size = m + l;
  if (size == 0) return 1;

  // Sylvester matrix: l shifted rows of p, then m shifted rows of r,
  // coefficients from the leading one down.
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(size),
                                        std::vector<mpz_class>(static_cast<std::size_t>(size), 0));
  for (int row = 0; row < l; ++row) {
    for (int i = 0; i <= m; ++i) a[row][row + i] = p.coeff(m - i);
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= l; ++i) a[l + row][row + i] = r.coeff(l - i);
  }

  // Bareiss fraction-free elimination.
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = k + 1;
      while (swap < size && a[swap][k] == 0) ++swap;
      if (swap == size) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

}  // namespace ssg4
