/*
 * Copyright 2026 The phicyclic Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "phicyclic/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include <Eigen/Eigenvalues>

namespace phicyclic::oracles {

namespace {

std::int64_t checked_power(std::int64_t base, int exp, std::int64_t bound) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > bound) fail(Errc::kTooLarge, "search space exceeds " + std::to_string(bound));
  }
  return r;
}

// v reduced against the echelon rows `basis` whose pivot columns are `pivots`.
bool in_span(const std::vector<std::vector<FieldElement>>& basis, const std::vector<int>& pivots,
             std::vector<FieldElement> v) {
  for (size_t i = 0; i < basis.size(); ++i) {
    const FieldElement c = v[static_cast<size_t>(pivots[i])];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * basis[i][j];
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

IdealCensus enumerate_ideals_bruteforce(const PhiContext& ctx, std::int64_t bound) {
  const Field& field = ctx.field();
  const int n = ctx.n();
  checked_power(field.order(), n, bound);
  const std::vector<FieldElement> elems = field.elements();
  IdealCensus census;

  // Choose pivot columns, then fill the free slots of the echelon form.
  std::vector<int> pivots;
  std::function<void(int)> choose_pivots = [&](int next_col) {
    const int r = static_cast<int>(pivots.size());
    // Free slots: in row i, columns after pivots[i] that are not pivots.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
      for (int j = pivots[static_cast<size_t>(i)] + 1; j < n; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) slots.emplace_back(i, j);
    const std::int64_t fillings = checked_power(field.order(), static_cast<int>(slots.size()),
                                                std::numeric_limits<std::int64_t>::max() / 4);
    for (std::int64_t idx = 0; idx < fillings; ++idx) {
      std::vector<std::vector<FieldElement>> basis(
          static_cast<size_t>(r), std::vector<FieldElement>(static_cast<size_t>(n), field.zero()));
      for (int i = 0; i < r; ++i)
        basis[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = field.one();
      std::int64_t rest = idx;
      for (const auto& [i, j] : slots) {
        basis[static_cast<size_t>(i)][static_cast<size_t>(j)] = elems[static_cast<size_t>(rest % field.order())];
        rest /= field.order();
      }
      bool closed = true;
      for (const auto& row : basis) {
        std::vector<FieldElement> image(static_cast<size_t>(n), field.zero());
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            image[static_cast<size_t>(a)] =
                image[static_cast<size_t>(a)] + ctx.T()(a, b) * row[static_cast<size_t>(b)];
        if (!in_span(basis, pivots, image)) {
          closed = false;
          break;
        }
      }
      if (!closed) continue;
      FieldMatrix m = FieldMatrix::Constant(r, n, field.zero());
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
      census.subspaces.push_back(std::move(m));
    }
    for (int c = next_col; c < n; ++c) {
      pivots.push_back(c);
      choose_pivots(c + 1);
      pivots.pop_back();
    }
  };
  choose_pivots(0);
  census.count = static_cast<std::int64_t>(census.subspaces.size());
  return census;
}

int min_distance_oracle(const PhiCyclicCode& code, std::int64_t bound) {
  const int k = code.k(), n = code.n();
  if (k == 0) fail(Errc::kTrivialCode, "zero-dimensional code");
  const Field& field = code.context().field();
  const std::int64_t total = checked_power(field.order(), k, bound);
  const auto& g = code.g().coefficients();
  int best = n + 1;
  for (std::int64_t idx = 1; idx < total; ++idx) {
    std::vector<FieldElement> b(static_cast<size_t>(k), field.zero());
    std::int64_t rest = idx;
    for (int i = 0; i < k; ++i) {
      b[static_cast<size_t>(i)] = field.element(rest % field.order());
      rest /= field.order();
    }
    std::vector<FieldElement> c(static_cast<size_t>(n), field.zero());
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < g.size(); ++j) c[i + j] = c[i + j] + b[i] * g[j];
    int w = 0;
    for (const auto& x : c) w += !x.is_zero();
    best = std::min(best, w);
  }
  return best;
}

BigInt det_oracle(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::kDimensionMismatch, "non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const BigInt term = m(0, j) * det_oracle(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

namespace {

// f(x) v(x) mod (x^n - a_{n-1} x^{n-1} - ... - a_0), reduced mod q.
std::vector<BigInt> mulmod_phi(const IntVector& a, const IntVector& f,
                               const std::vector<BigInt>& v, const BigInt& q) {
  const size_t n = static_cast<size_t>(a.size());
  std::vector<BigInt> prod(2 * n, BigInt(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) prod[i + j] += f(static_cast<Eigen::Index>(i)) * v[j];
  for (size_t k = 2 * n - 1; k >= n; --k) {
    const BigInt top = prod[k];
    prod[k] = 0;
    for (size_t i = 0; i < n; ++i) prod[k - n + i] += top * a(static_cast<Eigen::Index>(i));
  }
  prod.resize(n);
  for (auto& x : prod) {
    x %= q;
    if (x < 0) x += q;
  }
  return prod;
}

}  // namespace

bool lattice_member_bruteforce(const ConvLattice& lat, const IntVector& y, std::int64_t bound) {
  const int n = lat.n();
  if (y.size() != 2 * n) fail(Errc::kDimensionMismatch, "lattice vector must have length 2n");
  if (lat.q() > bound) fail(Errc::kTooLarge, "search space exceeds " + std::to_string(bound));
  const auto q = lat.q().convert_to<std::int64_t>();
  const std::int64_t total = checked_power(q, n, bound);
  std::vector<BigInt> target(2 * static_cast<size_t>(n));
  for (int i = 0; i < 2 * n; ++i) {
    target[static_cast<size_t>(i)] = y(i) % lat.q();
    if (target[static_cast<size_t>(i)] < 0) target[static_cast<size_t>(i)] += lat.q();
  }
  const IntVector& a = lat.context().a();
  std::vector<BigInt> x(static_cast<size_t>(n));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rest = idx;
    for (auto& xi : x) {
      xi = rest % q;
      rest /= q;
    }
    const auto top = mulmod_phi(a, lat.f(), x, lat.q());
    if (!std::equal(top.begin(), top.end(), target.begin())) continue;
    const auto bottom = mulmod_phi(a, lat.g(), x, lat.q());
    if (std::equal(bottom.begin(), bottom.end(), target.begin() + n)) return true;
  }
  return false;
}

RootProduct root_product_check(const IntPhiContext& ctx, const IntVector& f,
                               const BigInt& expected, double tolerance) {
  using Real = long double;
  using Complex = std::complex<Real>;
  const int n = ctx.n();
  std::vector<Real> a(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = ctx.a()(i).convert_to<Real>();

  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> h =
      Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int i = 1; i < n; ++i) h(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) h(i, n - 1) = a[static_cast<size_t>(i)];
  Eigen::EigenSolver<decltype(h)> solver(h, false);

  // phi(w) = w^n - sum a_i w^i and its derivative.
  auto phi = [&](Complex w, Complex& d) {
    Complex v = 1, dv = 0;
    for (int i = n - 1; i >= 0; --i) {
      dv = dv * w + v;
      v = v * w - a[static_cast<size_t>(i)];
    }
    d = dv;
    return v;
  };
  auto poly = [&](Complex w, Complex& d) {
    Complex v = 0, dv = 0;
    for (int i = n - 1; i >= 0; --i) {
      dv = dv * w + v;
      v = v * w + f(i).convert_to<Real>();
    }
    d = dv;
    return v;
  };

  RootProduct out;
  Complex prod = 1;
  Real sensitivity = 0;
  Real worst_root = 0;
  for (int i = 0; i < n; ++i) {
    Complex w = solver.eigenvalues()(i);
    for (int step = 0; step < 3; ++step) {
      Complex d;
      const Complex v = phi(w, d);
      if (std::abs(d) == 0) break;
      w -= v / d;
    }
    Complex dphi;
    phi(w, dphi);
    const Real r = std::abs(w);
    Real scale = std::pow(r, static_cast<Real>(n));
    for (int j = 0; j < n; ++j) scale += std::abs(a[static_cast<size_t>(j)]) * std::pow(r, static_cast<Real>(j));
    const Real kappa = (r == 0 || std::abs(dphi) == 0)
                           ? std::numeric_limits<Real>::infinity()
                           : scale / (r * std::abs(dphi));
    worst_root = std::max(worst_root, kappa);
    Complex df;
    const Complex fw = poly(w, df);
    prod *= fw;
    sensitivity += std::abs(fw) == 0 ? std::numeric_limits<Real>::infinity()
                                      : std::abs(w * df / fw) * kappa;
  }
  out.product = static_cast<double>(prod.real());
  out.imaginary = static_cast<double>(prod.imag());
  out.root_condition = static_cast<double>(worst_root);
  out.product_condition = static_cast<double>(sensitivity);
  const Real exact = expected.convert_to<Real>();
  out.relative_error =
      static_cast<double>(std::abs(prod - Complex(exact)) / std::max<Real>(std::abs(exact), 1));
  out.agree = out.relative_error <= tolerance;
  return out;
}

}  // namespace phicyclic::oracles
