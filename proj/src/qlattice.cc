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

#include "phicyclic/qlattice.hpp"

#include <boost/multiprecision/integer.hpp>

#include "phicyclic/linalg.hpp"

namespace phicyclic {

namespace {

void check_2n(const ConvLattice& lat, const IntVector& y) {
  if (y.size() != 2 * lat.n())
    fail(Errc::kDimensionMismatch, "expected length " + std::to_string(2 * lat.n()) +
                                       ", got " + std::to_string(y.size()));
}

bool congruent(const IntVector& a, const IntVector& b, const BigInt& q) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (mod_floor(a(i) - b(i), q) != 0) return false;
  return true;
}

bool brute_force_member(const ConvLattice& lat, const IntVector& y, std::int64_t bound) {
  const int n = lat.n();
  BigInt total = 1;
  for (int i = 0; i < n; ++i) total *= lat.q();
  if (total > bound)
    fail(Errc::kUndecidable, "H*(f) is not invertible mod q and q^n exceeds the search bound");
  const std::int64_t count = total.convert_to<std::int64_t>();
  const std::int64_t q = lat.q().convert_to<std::int64_t>();
  IntVector x(n);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t rest = idx;
    for (int i = 0; i < n; ++i) {
      x(i) = rest % q;
      rest /= q;
    }
    if (congruent(int_product(lat.A_prime(), x), y, lat.q())) return true;
  }
  return false;
}

}  // namespace

ConvLattice build_lattice(const IntPhiContext& ctx, const IntVector& f, const IntVector& g,
                          const BigInt& q) {
  ctx.check_length(f);
  ctx.check_length(g);
  if (q < 2) fail(Errc::kInvalidArgument, "q must be at least 2");
  ConvLattice lat(ctx, f, g, q);
  const int n = ctx.n();
  const IntMatrix hf = ideal_matrix(ctx, f);
  const IntMatrix hg = ideal_matrix(ctx, g);
  lat.a_prime_.resize(2 * n, n);
  lat.a_prime_ << hf, hg;
  const BigInt det = bareiss_determinant(hf);
  if (boost::multiprecision::gcd(mod_floor(det, q), q) == 1) {
    lat.f_inv_ = inverse_mod(hf, q);
    lat.h_ = mod_floor(int_product(*lat.f_inv_, g), q);
  }
  return lat;
}

bool lat_member(const ConvLattice& lat, const IntVector& y, std::int64_t bound) {
  check_2n(lat, y);
  const int n = lat.n();
  if (!lat.f_inverse()) return brute_force_member(lat, y, bound);
  const IntVector x = mod_floor(int_product(*lat.f_inverse(), y.head(n)), lat.q());
  return congruent(int_product(lat.A_prime().bottomRows(n), x), y.tail(n), lat.q());
}

bool lat_member_public(const IntPhiContext& ctx, const IntVector& h, const BigInt& q,
                       const IntVector& y) {
  const int n = ctx.n();
  if (y.size() != 2 * n)
    fail(Errc::kDimensionMismatch, "expected length " + std::to_string(2 * n));
  return congruent(star(ctx, h, y.head(n)), y.tail(n), q);
}

IntVector sigma_apply(const ConvLattice& lat, const IntVector& y) {
  check_2n(lat, y);
  const int n = lat.n();
  const IntMatrix& H = lat.context().H();
  IntVector out(2 * n);
  out << int_product(H, y.head(n)), int_product(H, y.tail(n));
  return out;
}

IntMatrix hnf_basis(const IntPhiContext& ctx, const IntVector& h, const BigInt& q) {
  const int n = ctx.n();
  IntMatrix basis = IntMatrix::Zero(2 * n, 2 * n);
  basis.topLeftCorner(n, n) = IntMatrix::Identity(n, n);
  basis.topRightCorner(n, n) = ideal_matrix(ctx, h).transpose();
  for (int i = 0; i < n; ++i) basis(n + i, n + i) = q;
  return basis;
}

IntMatrix hnf_basis(const ConvLattice& lat) {
  if (!lat.h()) fail(Errc::kNotInvertibleModQ, "H*(f) is not invertible mod q");
  return hnf_basis(lat.context(), *lat.h(), lat.q());
}

BasisReport check_basis(const ConvLattice& lat, const IntMatrix& basis) {
  const int n = lat.n();
  if (basis.rows() != 2 * n || basis.cols() != 2 * n)
    fail(Errc::kDimensionMismatch, "basis must be 2n x 2n");
  BasisReport report;

  report.rows_are_members = true;
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
    if (!lat_member(lat, basis.row(i).transpose())) report.rows_are_members = false;

  // The basis is block upper triangular with identity and qI diagonal
  // blocks, so y = z^T basis is solved by back substitution:
  // z_top = y_top, z_bottom = (y_bottom - B^T z_top) / q with B the upper
  // right block. A non-conforming candidate fails this clause.
  const IntMatrix top_left = basis.topLeftCorner(n, n);
  const IntMatrix bottom_left = basis.bottomLeftCorner(n, n);
  IntMatrix q_block = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) q_block(i, i) = lat.q();
  const bool shaped = matrices_equal(top_left, IntMatrix::Identity(n, n)) &&
                      is_zero_matrix(bottom_left) &&
                      matrices_equal(basis.bottomRightCorner(n, n), q_block);
  report.generators_in_span = shaped;
  if (shaped) {
    const IntMatrix upper_right_t = basis.topRightCorner(n, n).transpose();
    auto in_span = [&](const IntVector& y) {
      const IntVector rest = y.tail(n) - int_product(upper_right_t, y.head(n));
      for (Eigen::Index i = 0; i < rest.size(); ++i)
        if (mod_floor(rest(i), lat.q()) != 0) return false;
      return true;
    };
    for (int j = 0; j < n && report.generators_in_span; ++j)
      report.generators_in_span = in_span(mod_floor(lat.A_prime().col(j), lat.q()));
    for (int i = 0; i < 2 * n && report.generators_in_span; ++i) {
      IntVector e = IntVector::Zero(2 * n);
      e(i) = lat.q();
      report.generators_in_span = in_span(e);
    }
  }

  report.determinant = bareiss_determinant(basis);
  BigInt expected = 1;
  for (int i = 0; i < n; ++i) expected *= lat.q();
  report.determinant_ok = boost::multiprecision::abs(report.determinant) == expected;

  if (!report.rows_are_members)
    report.failed_clause = "a";
  else if (!report.generators_in_span)
    report.failed_clause = "b";
  else if (!report.determinant_ok)
    report.failed_clause = "c";
  return report;
}

BasisReport verify_basis(const ConvLattice& lat, const IntMatrix& basis) {
  BasisReport report = check_basis(lat, basis);
  if (!report.ok()) {
    static const char* const kClause[] = {"a basis row is not a lattice member",
                                          "a lattice generator is outside the row span",
                                          "|det N| differs from q^n"};
    fail(Errc::kVerificationFailed,
         "(" + report.failed_clause + ") " + kClause[report.failed_clause[0] - 'a']);
  }
  return report;
}

BasisReport verify_basis(const ConvLattice& lat) { return verify_basis(lat, hnf_basis(lat)); }

}  // namespace phicyclic
