#include "cheblat/chebyshev.hpp"

#include <stdexcept>

#include "cheblat/io.hpp"

namespace cheblat {

IntPoly cheb_coeffs(ChebKind kind, int n) {
  if (n < 0) throw std::invalid_argument("cheb_coeffs: order must be nonnegative");
  IntPoly prev = IntPoly::constant(1);
  if (n == 0) return prev;
  IntPoly cur = IntPoly::monomial(BigInt(kind == ChebKind::FirstKind ? 1 : 2), 1);
  for (int k = 2; k <= n; ++k) {
    IntPoly next = cur.shifted_up(1).scaled(BigInt(2)) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double cheb_eval(ChebKind kind, int n, double x) {
  if (n < 0) throw std::invalid_argument("cheb_eval: order must be nonnegative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = (kind == ChebKind::FirstKind) ? x : 2.0 * x;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

IntPoly explicit_first_kind(int n) {
  if (n < 1) throw std::invalid_argument("explicit_first_kind: order must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int l = 0; 2 * l <= n; ++l) {
    BigInt term = BigInt::binomial(static_cast<unsigned>(n - l), static_cast<unsigned>(l)) *
                  BigInt(n) * BigInt::pow2(static_cast<unsigned>(n - 2 * l));
    term = term.exact_div(BigInt(2 * (n - l)));
    if (l % 2) term = -term;
    c[static_cast<std::size_t>(n - 2 * l)] = std::move(term);
  }
  return IntPoly(std::move(c));
}

IntPoly explicit_second_kind_times_x(int n) {
  if (n < 1) throw std::invalid_argument("explicit_second_kind_times_x: order must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int l = 0; 2 * l <= n; ++l) {
    BigInt b = BigInt::binomial(static_cast<unsigned>(n - l - 1), static_cast<unsigned>(l));
    if (b.is_zero()) continue;  // the l = n/2 term of even orders vanishes
    BigInt term = (b * BigInt::pow2(static_cast<unsigned>(n - 2 * l))).exact_div(BigInt(2));
    if (l % 2) term = -term;
    c[static_cast<std::size_t>(n - 2 * l)] = std::move(term);
  }
  return IntPoly(std::move(c));
}

bool explicit_formula_check(int n) {
  if (n < 1) throw std::invalid_argument("explicit_formula_check: order must be positive");
  return explicit_first_kind(n) == cheb_coeffs(ChebKind::FirstKind, n) &&
         explicit_second_kind_times_x(n) ==
             cheb_coeffs(ChebKind::SecondKind, n - 1).shifted_up(1);
}

MasterIdentityReport prove_master_identity(int n) {
  if (n < 1) throw std::invalid_argument("prove_master_identity: order must be positive");
  const IntPoly t = cheb_coeffs(ChebKind::FirstKind, n);
  const IntPoly u = cheb_coeffs(ChebKind::SecondKind, n - 1);
  const IntPoly one_minus_y2(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-1)});
  IntPoly residual = t * t + one_minus_y2 * (u * u) - IntPoly::constant(1);
  MasterIdentityReport report;
  report.n = n;
  report.verdict = residual.is_zero();
  report.residual = std::move(residual);
  return report;
}

std::string MasterIdentityReport::to_json() const {
  json::Value obj = json::Value::object();
  obj.set("kind", json::Value("master"));
  obj.set("N", json::Value(static_cast<long long>(n)));
  json::Value coeffs = json::Value::array();
  for (const BigInt& c : residual.coeffs()) coeffs.push_back(json::Value(c.to_string()));
  obj.set("residual_coeffs", std::move(coeffs));
  obj.set("verdict", json::Value(verdict ? "zero" : "nonzero"));
  return obj.dump();
}

}  // namespace cheblat
