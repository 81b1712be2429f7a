#include "fixtures.hpp"

#include "hominduce/cohomology.hpp"
#include "hominduce/errors.hpp"
#include "hominduce/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hominduce;
using namespace hominduce::testing;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int r, int c) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
  return m;
}

}  // namespace

TEST(Scalar, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "-3", "7/4", "-2/6"}) {
    const Scalar x = parse_scalar(s);
    EXPECT_EQ(parse_scalar(to_string(x)), x);
  }
  EXPECT_EQ(parse_scalar("-2/6"), Scalar(-1, 3));
}

TEST(Scalar, RejectsGarbage) {
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar("abc"), Error);
  EXPECT_THROW(parse_scalar(""), Error);
}

TEST(Linalg, ZeroAndIdentityRanks) {
  const Matrix z(3, 3);
  EXPECT_EQ(rank(z), 0);
  EXPECT_EQ(kernel_basis(z).size(), 3u);
  const Matrix id = Matrix::identity(4);
  EXPECT_EQ(rank(id), 4);
  EXPECT_TRUE(kernel_basis(id).empty());
}

TEST(Linalg, RandomMatricesKernelImageConsistent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    Matrix m = random_matrix(rng, r, c);
    if (trial % 3 == 0 && r > 1)
      for (int j = 0; j < c; ++j) m.at(r - 1, j) = m.at(0, j) * 2;  // force dependence
    const int rk = rank(m);
    EXPECT_EQ(rk, rank(m.transpose()));
    const auto ker = kernel_basis(m);
    EXPECT_EQ(static_cast<int>(ker.size()), c - rk);
    for (const auto& v : ker) {
      for (int i = 0; i < r; ++i) {
        Scalar s = 0;
        for (int j = 0; j < c; ++j) s += m.at(i, j) * v[j];
        EXPECT_TRUE(is_zero(s));
      }
    }
    EXPECT_EQ(static_cast<int>(image_basis(m).size()), rk);
  }
}

TEST(Linalg, SolveOrWitness) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(rng, 4, 3);
    const SparseMatrix sm = to_sparse(m);
    DenseVec b(4);
    for (auto& x : b) x = Scalar(static_cast<long>(rng() % 5) - 2);
    const auto x = solve(sm, b);
    const auto w = inconsistency_witness(sm, b);
    ASSERT_NE(x.has_value(), w.has_value());
    if (x) {
      for (int i = 0; i < 4; ++i) {
        Scalar s = 0;
        for (int j = 0; j < 3; ++j) s += m.at(i, j) * (*x)[j];
        EXPECT_EQ(s, b[i]);
      }
    } else {
      Scalar yb = 0;
      for (int i = 0; i < 4; ++i) yb += (*w)[i] * b[i];
      EXPECT_FALSE(is_zero(yb));
      for (int j = 0; j < 3; ++j) {
        Scalar s = 0;
        for (int i = 0; i < 4; ++i) s += (*w)[i] * m.at(i, j);
        EXPECT_TRUE(is_zero(s));
      }
    }
  }
}

TEST(Linalg, InverseOfInvertible) {
  Matrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  Matrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 2;
  EXPECT_FALSE(inverse(sing).has_value());
}

TEST(Graded, ComposeWithIdentityAndSquareOfDifferential) {
  const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  EXPECT_EQ(compose(GradedMap::identity(inst.B()), inst.dB()), inst.dB());
  EXPECT_TRUE(compose(inst.dB(), inst.dB()).is_zero());
  // Z Y = 1 on A for the interval
  EXPECT_EQ(compose(inst.Z(), inst.Y()), GradedMap::identity(inst.A()));
}

TEST(Graded, IntervalDifferentialRankInDegreeZero) {
  const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  for (const auto& rki : rank_kernel_image(inst.dB()))
    if (rki.degree == 0) {
      EXPECT_EQ(rki.rank, 1);  // u -> du
    }
}

TEST(Graded, DegreeMismatchThrows) {
  const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  EXPECT_THROW(compose(inst.dA(), inst.dB()), Error);
}

TEST(Cohomology, ZeroDifferentialGivesWholeSpace) {
  const Dga a = catalogue_dga("exterior:2");
  const CohomologyModel cm = cohomology(a.space, a.d);
  EXPECT_EQ(cm.H->total(), a.space->total());
  EXPECT_TRUE(cm.h_split.is_zero());
  EXPECT_TRUE(cm.failed_identities().empty());
}

TEST(Cohomology, IntervalMatchesA) {
  const HomotopyData inst = gen_interval(catalogue_dga("exterior:1"));
  const CohomologyModel cm = cohomology(inst.B(), inst.dB());
  EXPECT_EQ(cm.H->dim(0), 1);
  EXPECT_EQ(cm.H->dim(1), 1);
  EXPECT_EQ(cm.H->dim(2), 0);
  EXPECT_TRUE(cm.failed_identities().empty());
}

TEST(Cohomology, ModelIdentitiesOnEveryFixture) {
  for (const auto& f : all_fixtures()) {
    const CohomologyModel cm = cohomology(f.inst.B(), f.inst.dB());
    EXPECT_TRUE(cm.failed_identities().empty()) << f.name;
    EXPECT_EQ(compose(cm.p, cm.i), GradedMap::identity(cm.H)) << f.name;
  }
}

TEST(Cohomology, RejectsNonDifferential) {
  const SpacePtr s = make_space(GradedSpace::from_dims(0, {1, 1}));
  GradedMap d = GradedMap::zero(s, s, 1);
  d.set(1, 0, 1);
  EXPECT_NO_THROW(cohomology(s, d));
  GradedMap bad = GradedMap::zero(s, s, 0);
  bad.set(0, 0, 1);
  EXPECT_THROW(cohomology(s, bad), Error);
}
