#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ssg4 {

// Dense integer polynomial, constant term first, no trailing zeros (the zero
// polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly monomial(const mpz_class& c, int degree);
  // X - root
  static IntPoly linear(const mpz_class& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of X^i; zero past the degree.
  mpz_class coeff(int i) const;
  const mpz_class& leading() const { return coeffs_.back(); }

  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly pow(int e) const;
  mpz_class eval(const mpz_class& x) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // "X^2 + 4*X + 8"
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Characteristic polynomial of Frobenius on a g-dimensional abelian variety
// over F_{2^n}: degree 2g, monic, c_i = q^(g-i) c_(2g-i).
struct WeilPoly {
  int g = 0;
  int n = 0;
  IntPoly poly;
  std::string label;

  // a_j = coefficient of X^(2g-j).
  mpz_class a(int j) const { return poly.coeff(2 * g - j); }
  mpz_class a1() const { return a(1); }
};

// Builds a WeilPoly, throwing MalformedWeilPoly unless poly is monic of even
// degree 2g and satisfies the functional equation for q = 2^n.
WeilPoly make_weil_poly(IntPoly poly, int n, std::string label = {});
bool satisfies_functional_equation(const IntPoly& poly, int n);

// prime^ceil(j n / 2) divides a_j for 1 <= j <= g.
bool sx_check(const WeilPoly& p, unsigned long prime = 2);

// Every sign choice of the simple supersingular characteristic polynomials of
// dimension <= 4 over F_{2^n}: 12 polynomials, written in s = 2^((n+1)/2), q = 2^n.
std::vector<WeilPoly> simple_ss_factors(int n);

// g * floor(2 sqrt(2^n)).
mpz_class hw_serre_bound(int g, int n);

struct FactorMultiset {
  std::vector<std::pair<WeilPoly, int>> factors;  // catalog order
  int total_degree = 0;
  mpz_class a1;

  IntPoly product() const;
  // "(X^2+sX+q)^3*(X^2+q)"
  std::string label() const;
};

// All multisets of simple_ss_factors(n) of total degree target_degree,
// ordered by a1 then label.
std::vector<FactorMultiset> enumerate_products(int n, int target_degree);

std::vector<FactorMultiset> filter_by_serre(const std::vector<FactorMultiset>& ms, int g, int n);

// Polynomial in Y whose roots are (w + q/w) / 2^((n-1)/2) over the root pairs
// of the product, with multiplicity. The distinct per-factor polynomials are
// kept alongside the product.
struct ReducedFrobVer {
  IntPoly product;
  std::vector<std::pair<IntPoly, int>> distinct_factors;
};

ReducedFrobVer reduced_frobver_poly(const FactorMultiset& ms);
// Same for one Weil polynomial of degree 2d; throws NotReducible when the
// real polynomial does not exist or the rescaling leaves non-integers.
IntPoly reduced_frobver_factor(const WeilPoly& p);

// Sylvester determinant: Res(p, r) = lc(p)^deg(r) * prod r(alpha_i).
mpz_class resultant(const IntPoly& p, const IntPoly& r);

}  // namespace ssg4
