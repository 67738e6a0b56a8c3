#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "aledg/euler.hpp"

namespace aledg {

/// Highest supported polynomial degree.
inline constexpr int kMaxDegree = 3;

/// Scaled Legendre basis on the reference cell [-1, 1]:
///   phi_m(xi) = sqrt(2m+1) P_m(xi),  integral phi_l phi_m dxi = 2 delta_lm.
inline double eval_basis(int m, double xi) {
  switch (m) {
    case 0: return 1.0;
    case 1: return std::sqrt(3.0) * xi;
    case 2: return std::sqrt(5.0) * 0.5 * (3.0 * xi * xi - 1.0);
    case 3: return std::sqrt(7.0) * 0.5 * (5.0 * xi * xi - 3.0) * xi;
    default: throw std::out_of_range("eval_basis: degree out of range");
  }
}

/// d/dxi of the scaled Legendre basis. The chain-rule factor 2/h for the
/// physical derivative is applied by the caller.
inline double eval_basis_deriv(int m, double xi) {
  switch (m) {
    case 0: return 0.0;
    case 1: return std::sqrt(3.0);
    case 2: return std::sqrt(5.0) * 3.0 * xi;
    case 3: return std::sqrt(7.0) * 0.5 * (15.0 * xi * xi - 3.0);
    default: throw std::out_of_range("eval_basis_deriv: degree out of range");
  }
}

/// Value of basis m at the right (+1) or left (-1) end of the cell.
inline double basis_at_right(int m) { return std::sqrt(2.0 * m + 1.0); }
inline double basis_at_left(int m) { return (m % 2 == 0 ? 1.0 : -1.0) * std::sqrt(2.0 * m + 1.0); }

/// Gauss-Legendre rule on [-1, 1]; weights sum to 2, exact through degree
/// 2n-1.
struct QuadratureRule {
  int n = 0;
  std::array<double, 5> points{};
  std::array<double, 5> weights{};
};

inline const QuadratureRule& gauss_rule(int n) {
  static const std::array<QuadratureRule, 5> rules = [] {
    std::array<QuadratureRule, 5> r{};
    r[0] = {1, {0.0}, {2.0}};
    const double q3 = 1.0 / std::sqrt(3.0);
    r[1] = {2, {-q3, q3}, {1.0, 1.0}};
    const double q5 = std::sqrt(3.0 / 5.0);
    r[2] = {3, {-q5, 0.0, q5}, {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0}};
    const double a4 = std::sqrt((3.0 - 2.0 * std::sqrt(6.0 / 5.0)) / 7.0);
    const double b4 = std::sqrt((3.0 + 2.0 * std::sqrt(6.0 / 5.0)) / 7.0);
    const double wa4 = (18.0 + std::sqrt(30.0)) / 36.0;
    const double wb4 = (18.0 - std::sqrt(30.0)) / 36.0;
    r[3] = {4, {-b4, -a4, a4, b4}, {wb4, wa4, wa4, wb4}};
    const double a5 = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double b5 = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double wa5 = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    const double wb5 = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    r[4] = {5, {-b5, -a5, 0.0, a5, b5}, {wb5, wa5, 128.0 / 225.0, wa5, wb5}};
    return r;
  }();
  if (n < 1 || n > 5) throw std::out_of_range("gauss_rule: unsupported point count");
  return rules[n - 1];
}

/// Interpolation nodes (the k+1 Gauss points) with the change-of-basis
/// matrices between nodal values and modal Legendre coefficients.
struct NodalModalMap {
  int degree = 0;
  std::array<double, 4> nodes{};
  // to_nodal[i][m]: value of basis m at node i (Vandermonde matrix)
  std::array<std::array<double, 4>, 4> to_nodal{};
  // to_modal[m][i]: discrete-orthogonality inverse, w_i phi_m(xi_i) / 2
  std::array<std::array<double, 4>, 4> to_modal{};
};

inline const NodalModalMap& nodal_modal_map(int degree) {
  static const std::array<NodalModalMap, 4> maps = [] {
    std::array<NodalModalMap, 4> out{};
    for (int k = 0; k <= kMaxDegree; ++k) {
      NodalModalMap& map = out[k];
      map.degree = k;
      const QuadratureRule& rule = gauss_rule(k + 1);
      for (int i = 0; i <= k; ++i) {
        map.nodes[i] = rule.points[i];
        for (int m = 0; m <= k; ++m) {
          map.to_nodal[i][m] = eval_basis(m, rule.points[i]);
          map.to_modal[m][i] = 0.5 * rule.weights[i] * eval_basis(m, rule.points[i]);
        }
      }
    }
    return out;
  }();
  if (degree < 0 || degree > kMaxDegree)
    throw std::out_of_range("nodal_modal_map: degree out of range");
  return maps[degree];
}

template <class Value>
inline std::array<Value, 4> nodal_to_modal(const std::array<Value, 4>& nodal, int degree) {
  const NodalModalMap& map = nodal_modal_map(degree);
  std::array<Value, 4> modal{};
  for (int m = 0; m <= degree; ++m) {
    Value acc = map.to_modal[m][0] * nodal[0];
    for (int i = 1; i <= degree; ++i) acc += map.to_modal[m][i] * nodal[i];
    modal[m] = acc;
  }
  return modal;
}

template <class Value>
inline std::array<Value, 4> modal_to_nodal(const std::array<Value, 4>& modal, int degree) {
  const NodalModalMap& map = nodal_modal_map(degree);
  std::array<Value, 4> nodal{};
  for (int i = 0; i <= degree; ++i) {
    Value acc = map.to_nodal[i][0] * modal[0];
    for (int m = 1; m <= degree; ++m) acc += map.to_nodal[i][m] * modal[m];
    nodal[i] = acc;
  }
  return nodal;
}

/// Modal coefficients of the L2 projection of f onto polynomials of the
/// given degree on [-1, 1]:  u_m = (1/2) integral f phi_m dxi, computed with
/// a (degree+2)-point Gauss rule. Exact when f is a polynomial of degree
/// <= degree + 2.
template <class F>
inline std::array<double, 4> l2_project(F&& f, int degree) {
  const QuadratureRule& rule = gauss_rule(degree + 2);
  std::array<double, 4> modal{};
  for (int q = 0; q < rule.n; ++q) {
    const double fq = f(rule.points[q]);
    for (int m = 0; m <= degree; ++m)
      modal[m] += 0.5 * rule.weights[q] * fq * eval_basis(m, rule.points[q]);
  }
  return modal;
}

/// State-valued L2 projection, componentwise.
template <class F>
inline std::array<ConservedState, 4> l2_project_state(F&& f, int degree) {
  const QuadratureRule& rule = gauss_rule(degree + 2);
  std::array<ConservedState, 4> modal{};
  for (int q = 0; q < rule.n; ++q) {
    const ConservedState fq = f(rule.points[q]);
    for (int m = 0; m <= degree; ++m)
      modal[m] += (0.5 * rule.weights[q] * eval_basis(m, rule.points[q])) * fq;
  }
  return modal;
}

}  // namespace aledg
