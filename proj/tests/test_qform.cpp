#include <gtest/gtest.h>

#include <set>

#include "looijenga/errors.hpp"
#include "looijenga/qform.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace looijenga;
using looijenga::cli::Rng;

namespace {

const QuadraticForm A1 = QuadraticForm::scalar(IntMatrix{{2}});
const QuadraticForm A2 = QuadraticForm::scalar(IntMatrix{{2, -1}, {-1, 2}});
const QuadraticForm D2 = QuadraticForm::scalar(IntMatrix{{2, 0}, {0, 2}});

// y^T M y' with plain longs.
long bilinear(const IntMatrix& m, const IntVector& y, const IntVector& y2) {
  long acc = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y2.size(); ++j) acc += m(i, j).get_si() * y[i].get_si() * y2[j].get_si();
  return acc;
}

}  // namespace

TEST(QForm, PhiExamples) {
  EXPECT_EQ(eval_phi(A1, IntVector{3})[0], 9);
  EXPECT_EQ(eval_phi(A2, IntVector{0, 0})[0], 0);
  EXPECT_EQ(eval_phi(A2, IntVector{1, 1})[0], 1);
  EXPECT_THROW(eval_phi(A2, IntVector{1}), DimensionError);
  const RatVector half = eval_phi(A1, RatVector{Rat(1, 2)});
  EXPECT_EQ(half[0], Rat(1, 4));
}

TEST(QForm, BetaExamples) {
  EXPECT_EQ(eval_beta(A1, IntVector{1}, IntVector{1})[0], 2);
  EXPECT_EQ(eval_beta(A2, IntVector{1, 0}, IntVector{0, 1})[0], -1);
}

TEST(QForm, DefaultExtension) {
  EXPECT_EQ(default_extension(IntMatrix{{2}}), (IntMatrix{{1}}));
  EXPECT_EQ(default_extension(IntMatrix{{2, -1}, {-1, 2}}), (IntMatrix{{1, -1}, {0, 1}}));
  EXPECT_EQ(default_extension(IntMatrix{{4}}), (IntMatrix{{2}}));
  EXPECT_THROW(default_extension(IntMatrix{{3}}), InvariantError);
  EXPECT_THROW(QuadraticForm::scalar(IntMatrix{{2, 1}, {0, 2}}), InvariantError);
  EXPECT_THROW(QuadraticForm(1, {IntMatrix{{2}}}, {IntMatrix{{2}}}), InvariantError);
}

TEST(QForm, RandomIdentities) {
  Rng rng(21);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t d = 1 + k % 4, e = 1 + k % 2;
    const QuadraticForm q = looijenga::cli::random_form(rng, d, e);
    const IntVector y = looijenga::cli::random_vector(rng, d), y2 = looijenga::cli::random_vector(rng, d);
    IntVector sum(d), scaled(d);
    const long n = rng.uniform_int(-10, 10);
    for (std::size_t i = 0; i < d; ++i) {
      sum[i] = y[i] + y2[i];
      scaled[i] = n * y[i];
    }
    const IntVector ps = eval_phi(q, sum), p1 = eval_phi(q, y), p2 = eval_phi(q, y2), b = eval_beta(q, y, y2);
    const IntVector pn = eval_phi(q, scaled), bb = eval_beta(q, y, y);
    for (std::size_t c = 0; c < e; ++c) {
      ASSERT_EQ(ps[c] - p1[c] - p2[c], b[c]);
      ASSERT_EQ(pn[c], n * n * p1[c]);
      ASSERT_EQ(bb[c], 2 * p1[c]);
      // phi(y) = omega(y, y) through the extension.
      ASSERT_EQ(p1[c], bilinear(q.extension(c), y, y));
      ASSERT_EQ(b[c], bilinear(q.hessian(c), y, y2));
    }
  }
}

TEST(QForm, OmegaWedgeExamples) {
  const IntMatrix m{{1, 0}}, m2{{0, 1}};
  const AltForm w = omega_wedge(A1, m, m2);
  EXPECT_EQ(w.value(0, 0, 1), 1);
  EXPECT_TRUE(omega_wedge(A1, m, IntMatrix(1, 2)).is_zero());
}

TEST(QForm, OmegaAntisymmetrizationDependsOnlyOnPhi) {
  Rng rng(22);
  for (int k = 0; k < 300; ++k) {
    const std::size_t r = 2 + k % 2, d = 1 + k % 3, e = 1 + k % 2;
    const QuadraticForm q = looijenga::cli::random_form(rng, d, e);
    const IntMatrix m = looijenga::cli::random_matrix(rng, d, r), m2 = looijenga::cli::random_matrix(rng, d, r);
    const AltForm anti = omega_wedge(q, m, m2) - omega_wedge(q, m2, m);
    for (std::size_t c = 0; c < e; ++c)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
          const long expected = bilinear(q.hessian(c), m.column(i), m2.column(j)) -
                                bilinear(q.hessian(c), m.column(j), m2.column(i));
          ASSERT_EQ(anti.value(c, i, j), expected);
        }
    ASSERT_EQ(anti, beta_wedge(q, m, m2));
  }
}

TEST(QForm, DualCosetExamples) {
  const auto a1 = dual_coset_reps(A1);
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0].u, RatVector{Rat(0)});
  EXPECT_EQ(a1[1].u, RatVector{Rat(1, 2)});
  EXPECT_EQ(dual_coset_reps(A2).size(), 3u);
  EXPECT_EQ(dual_coset_reps(D2).size(), 4u);
  EXPECT_THROW(dual_coset_reps(QuadraticForm::scalar(IntMatrix{{2, 2}, {2, 2}})), DegeneracyError);
}

TEST(QForm, DualCosetsCompleteAndDistinct) {
  Rng rng(23);
  for (int k = 0; k < 60; ++k) {
    const std::size_t d = 1 + k % 3;
    const QuadraticForm q = looijenga::cli::random_form(rng, d, 1);
    const Int det = q.hessian(0).determinant();
    if (det == 0) continue;
    const auto reps = dual_coset_reps(q);
    ASSERT_EQ(Int(static_cast<unsigned long>(reps.size())), abs(det));
    std::set<std::vector<std::string>> seen;
    for (const auto& u : reps) {
      std::vector<std::string> key;
      for (std::size_t i = 0; i < d; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < d; ++j) s += q.hessian(0)(i, j) * u.u[j];
        ASSERT_EQ(s.get_den(), 1) << "c u must be integral";
        ASSERT_GE(u.u[i], 0);
        ASSERT_LT(u.u[i], 1);
        key.push_back(u.u[i].get_str());
      }
      ASSERT_TRUE(seen.insert(key).second) << "duplicate representative";
    }
  }
}

TEST(QForm, Definiteness) {
  EXPECT_TRUE(is_positive_definite(A1));
  EXPECT_FALSE(is_positive_definite(QuadraticForm::scalar(IntMatrix{{2, -3}, {-3, 2}})));
  EXPECT_TRUE(is_positive_definite(A2));
  EXPECT_FALSE(is_positive_definite(QuadraticForm::scalar(IntMatrix{{-2}})));
}

TEST(QForm, RegularSequenceExamples) {
  const std::size_t n = 4;
  auto v = [&](std::size_t i) { return Polynomial::variable(n, i); };
  const std::vector<Polynomial> rel = {v(0) * v(2) + v(1) * v(3)};
  EXPECT_TRUE(regular_sequence_check(rel, n));
  const std::vector<Polynomial> twice = {v(0) * v(1), v(0) * v(1)};
  EXPECT_FALSE(regular_sequence_check(twice, n));

  const std::size_t n5 = 5;
  auto w = [&](std::size_t i) { return Polynomial::variable(n5, i); };
  const std::vector<Polynomial> sharp = {w(2) * w(2) + w(0) * w(3) + w(1) * w(4)};
  EXPECT_TRUE(regular_sequence_check(sharp, n5));
  EXPECT_THROW(regular_sequence_check(sharp, n5, 5), InvariantError);
  const std::vector<Polynomial> linear = {w(0)};
  EXPECT_THROW(regular_sequence_check(linear, n5), InvariantError);
}

TEST(QForm, PhiPolynomial) {
  const Polynomial p = phi_polynomial(A2, 0);
  EXPECT_EQ(p.to_string(std::vector<std::string>{"y1", "y2"}), "y1^2 - y1*y2 + y2^2");
}
