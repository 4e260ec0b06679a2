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

#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "phicyclic/errors.hpp"
#include "phicyclic/linalg.hpp"
#include "phicyclic/oracles.hpp"

namespace phicyclic {
namespace {

IntMatrix Mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Errc CodeOf(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternalMismatch;
}

IntVector Stack(const IntVector& top, const IntVector& bottom) {
  IntVector y(top.size() + bottom.size());
  y << top, bottom;
  return y;
}

ConvLattice Worked() {
  return build_lattice(IntPhiContext{1, 0}, to_int_vector({1, 3}), to_int_vector({3, 0}), 29);
}

// Every vector of {lo..hi}^len in index order.
std::vector<IntVector> Box(int len, long long lo, long long hi) {
  std::vector<IntVector> out;
  const long long span = hi - lo + 1;
  long long total = 1;
  for (int i = 0; i < len; ++i) total *= span;
  for (long long idx = 0; idx < total; ++idx) {
    IntVector v(len);
    long long rest = idx;
    for (int i = 0; i < len; ++i) {
      v(i) = lo + rest % span;
      rest /= span;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<long long> Key(const IntVector& v, const BigInt& q) {
  std::vector<long long> k;
  for (Eigen::Index i = 0; i < v.size(); ++i) k.push_back(mod_floor(v(i), q).convert_to<long long>());
  return k;
}

// Random lattice with n in [2, 5], small a, ternary-like f and g.
struct LatticeGen {
  explicit LatticeGen(std::uint64_t seed) : rng(seed) {}

  ConvLattice Next(bool require_public) {
    const long long moduli[] = {3, 5, 7, 29, 64, 128, 257};
    while (true) {
      const int n = std::uniform_int_distribution<int>(2, 5)(rng);
      const BigInt q = moduli[std::uniform_int_distribution<int>(0, 6)(rng)];
      std::uniform_int_distribution<long long> small(-3, 3);
      IntVector a(n), f(n), g(n);
      for (int i = 0; i < n; ++i) {
        a(i) = small(rng);
        f(i) = small(rng);
        g(i) = small(rng);
      }
      if (a(0) == 0) a(0) = 1;
      ConvLattice lat = build_lattice(IntPhiContext(a), f, g, q);
      if (!require_public || lat.has_public_basis()) return lat;
    }
  }

  IntVector RandomMember(const ConvLattice& lat) {
    std::uniform_int_distribution<long long> d(-40, 40);
    IntVector x(lat.n()), z(2 * lat.n());
    for (auto& v : x) v = d(rng);
    for (auto& v : z) v = d(rng);
    return IntVector(int_product(lat.A_prime(), x)) + lat.q() * z;
  }

  std::mt19937_64 rng;
};

TEST(BuildLattice, WorkedPublicVector) {
  const ConvLattice lat = Worked();
  ASSERT_TRUE(lat.has_public_basis());
  EXPECT_TRUE(matrices_equal(*lat.h(), to_int_vector({25, 12})));
  EXPECT_TRUE(matrices_equal(*lat.f_inverse(), Mat({{18, 4}, {4, 18}})));
}

TEST(BuildLattice, StacksIdealMatrices) {
  const ConvLattice lat = Worked();
  EXPECT_TRUE(matrices_equal(lat.A_prime(), Mat({{1, 3}, {3, 1}, {3, 0}, {0, 3}})));
  EXPECT_TRUE(matrices_equal(lat.A(), Mat({{1, 3, 3, 0}, {3, 1, 0, 3}})));
}

TEST(BuildLattice, UnitFGivesReducedG) {
  const IntPhiContext ctx{2, -1, 3};
  const ConvLattice lat = build_lattice(ctx, to_int_vector({1, 0, 0}), to_int_vector({-4, 9, 2}), 7);
  EXPECT_TRUE(matrices_equal(*lat.h(), to_int_vector({3, 2, 2})));
}

TEST(BuildLattice, NonInvertibleHasNoPublicBasis) {
  const ConvLattice lat =
      build_lattice(IntPhiContext{1, 0}, to_int_vector({1, 1}), to_int_vector({2, 3}), 5);
  EXPECT_FALSE(lat.has_public_basis());
  EXPECT_FALSE(lat.f_inverse().has_value());
  EXPECT_EQ(CodeOf([&] { hnf_basis(lat); }), Errc::kNotInvertibleModQ);
}

TEST(BuildLattice, Errors) {
  const IntPhiContext ctx{1, 0};
  EXPECT_EQ(CodeOf([&] { build_lattice(ctx, to_int_vector({1, 3, 0}), to_int_vector({3, 0}), 29); }),
            Errc::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] { build_lattice(ctx, to_int_vector({1, 3}), to_int_vector({3, 0}), 1); }),
            Errc::kInvalidArgument);
  const ConvLattice lat = Worked();
  EXPECT_EQ(CodeOf([&] { lat_member(lat, to_int_vector({1, 2, 3})); }), Errc::kDimensionMismatch);
  EXPECT_EQ(CodeOf([&] { sigma_apply(lat, to_int_vector({1, 2})); }), Errc::kDimensionMismatch);
}

TEST(Membership, WorkedExamples) {
  const ConvLattice lat = Worked();
  EXPECT_TRUE(lat_member(lat, Stack(lat.f(), lat.g())));
  for (int i = 0; i < 4; ++i) {
    IntVector y = IntVector::Zero(4);
    y(i) = 29;
    EXPECT_TRUE(lat_member(lat, y));
  }
  EXPECT_FALSE(lat_member(lat, to_int_vector({1, 0, 0, 0})));
  EXPECT_FALSE(oracles::lattice_member_bruteforce(lat, to_int_vector({1, 0, 0, 0})));
}

TEST(Membership, UndecidableWithoutInverse) {
  const ConvLattice lat = build_lattice(IntPhiContext{1, 0, 0, 0, 0},
                                        to_int_vector({1, 1, 1, 1, 1}),
                                        to_int_vector({1, 0, 0, 0, 0}), 5);
  ASSERT_FALSE(lat.has_public_basis());
  EXPECT_EQ(CodeOf([&] { lat_member(lat, IntVector::Zero(10), 1000); }), Errc::kUndecidable);
  EXPECT_TRUE(lat_member(lat, IntVector::Zero(10)));
}

TEST(LatticeOracle, Examples) {
  const ConvLattice lat = Worked();
  EXPECT_TRUE(oracles::lattice_member_bruteforce(lat, Stack(lat.f(), lat.g())));
  EXPECT_TRUE(oracles::lattice_member_bruteforce(lat, to_int_vector({29, 0, 0, 0})));
  EXPECT_EQ(CodeOf([&] { oracles::lattice_member_bruteforce(lat, IntVector::Zero(4), 100); }),
            Errc::kTooLarge);
}

TEST(Sigma, Examples) {
  const ConvLattice lat = Worked();
  EXPECT_TRUE(matrices_equal(sigma_apply(lat, to_int_vector({1, 2, 3, 4})),
                             to_int_vector({2, 1, 4, 3})));
  EXPECT_TRUE(is_zero_matrix(sigma_apply(lat, IntVector::Zero(4))));
}

TEST(Hnf, WorkedBasis) {
  const ConvLattice lat = Worked();
  const IntMatrix n = hnf_basis(lat);
  EXPECT_TRUE(matrices_equal(
      n, Mat({{1, 0, 25, 12}, {0, 1, 12, 25}, {0, 0, 29, 0}, {0, 0, 0, 29}})));
  const BasisReport report = verify_basis(lat);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.rows_are_members);
  EXPECT_TRUE(report.generators_in_span);
  EXPECT_TRUE(report.determinant_ok);
  EXPECT_EQ(report.determinant, 29 * 29);
}

TEST(Hnf, UnitFZeroG) {
  const ConvLattice lat =
      build_lattice(IntPhiContext{3, 1, 4}, to_int_vector({1, 0, 0}), IntVector::Zero(3), 11);
  IntMatrix expected = IntMatrix::Identity(6, 6);
  expected.bottomRightCorner(3, 3) *= BigInt(11);
  EXPECT_TRUE(matrices_equal(hnf_basis(lat), expected));
  EXPECT_TRUE(verify_basis(lat).ok());
}

TEST(Hnf, PublicOverloadMatches) {
  const ConvLattice lat = Worked();
  EXPECT_TRUE(matrices_equal(hnf_basis(lat), hnf_basis(lat.context(), *lat.h(), lat.q())));
}

// Reading the block matrix with basis vectors as columns does not give
// lattice vectors: (1, 0, 0, 0) is such a column.
TEST(Hnf, ColumnReadingFailsMembership) {
  const ConvLattice lat = Worked();
  const BasisReport report = check_basis(lat, hnf_basis(lat).transpose());
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.failed_clause, "a");
}

TEST(Hnf, EverySingleEntryTamperIsDetected) {
  const ConvLattice lat = Worked();
  const IntMatrix n = hnf_basis(lat);
  for (Eigen::Index i = 0; i < n.rows(); ++i)
    for (Eigen::Index j = 0; j < n.cols(); ++j) {
      IntMatrix bad = n;
      bad(i, j) += 1;
      EXPECT_EQ(check_basis(lat, bad).failed_clause, "a") << i << "," << j;
      try {
        verify_basis(lat, bad);
        ADD_FAILURE() << "tamper at " << i << "," << j << " not detected";
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::kVerificationFailed);
        EXPECT_NE(std::string(e.what()).find("(a)"), std::string::npos);
      }
    }
}

TEST(Hnf, MissingGeneratorsAreReported) {
  const ConvLattice lat = Worked();
  // 2 (qZ^4) consists of members but misses (f; g).
  const IntMatrix doubled = BigInt(2) * hnf_basis(lat);
  EXPECT_EQ(check_basis(lat, doubled).failed_clause, "b");
}

TEST(LatticeProperties, SigmaClosureOnRandomMembers) {
  LatticeGen gen(2026);
  for (int t = 0; t < 1000; ++t) {
    const ConvLattice lat = gen.Next(true);
    const IntVector y = gen.RandomMember(lat);
    ASSERT_TRUE(lat_member(lat, y)) << "trial " << t;
    ASSERT_TRUE(lat_member(lat, sigma_apply(lat, y))) << "trial " << t;
    ASSERT_TRUE(lat_member(lat, Stack(lat.f(), lat.g())));
    ASSERT_TRUE(lat_member_public(lat.context(), *lat.h(), lat.q(), y));
    for (int i = 0; i < 2 * lat.n(); ++i) {
      IntVector e = IntVector::Zero(2 * lat.n());
      e(i) = lat.q();
      ASSERT_TRUE(lat_member(lat, e));
    }
  }
}

TEST(LatticeProperties, PrimaryPathMatchesBruteForce) {
  LatticeGen gen(7);
  int checked = 0, members = 0;
  for (int t = 0; t < 40; ++t) {
    const IntPhiContext ctx(to_int_vector({1 + t % 2, t % 3 - 1}));
    std::uniform_int_distribution<long long> d(-1, 1);
    const IntVector f = to_int_vector({1, d(gen.rng) * 3});
    const IntVector g = to_int_vector({d(gen.rng) * 3 + 1, d(gen.rng)});
    const ConvLattice lat = build_lattice(ctx, f, g, 3);
    for (const IntVector& y : Box(4, -1, 1)) {
      const bool expected = oracles::lattice_member_bruteforce(lat, y);
      ASSERT_EQ(lat_member(lat, y), expected) << "trial " << t;
      ++checked;
      members += expected;
    }
  }
  EXPECT_EQ(checked, 40 * 81);
  EXPECT_GT(members, 0);
  EXPECT_LT(members, checked);
}

TEST(LatticeProperties, RandomBasesVerify) {
  LatticeGen gen(99);
  for (int t = 0; t < 100; ++t) {
    const ConvLattice lat = gen.Next(true);
    ASSERT_TRUE(verify_basis(lat).ok()) << "trial " << t;
  }
}

// The row span of N mod q equals {A' x mod q}, exhaustively for q <= 3, n = 2.
TEST(LatticeProperties, BasisSpanEqualsImageModQ) {
  int lattices = 0;
  for (long long q : {2, 3})
    for (const IntVector& a : Box(2, -1, 1)) {
      if (a(0) == 0) continue;
      for (const IntVector& f : Box(2, -1, 1))
        for (const IntVector& g : Box(2, -1, 1)) {
          const ConvLattice lat = build_lattice(IntPhiContext(a), f, g, q);
          if (!lat.has_public_basis()) continue;
          ++lattices;
          const IntMatrix n = hnf_basis(lat);
          std::set<std::vector<long long>> span, image;
          for (const IntVector& c : Box(4, 0, q - 1))
            span.insert(Key(IntMatrix(n.transpose()) * c, q));
          for (const IntVector& x : Box(2, 0, q - 1))
            image.insert(Key(IntVector(int_product(lat.A_prime(), x)), q));
          ASSERT_EQ(span, image);
        }
    }
  EXPECT_GT(lattices, 20);
}

}  // namespace
}  // namespace phicyclic
