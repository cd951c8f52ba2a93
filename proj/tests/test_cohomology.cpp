#include <gtest/gtest.h>

#include <map>

#include "looijenga/cohomology.hpp"
#include "looijenga/errors.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace looijenga;
using namespace looijenga::cli;

namespace {

QuadraticForm form(std::size_t d, std::size_t e) {
  IntMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i) c(i, i) = 2;
  return QuadraticForm(d, std::vector<IntMatrix>(e, c));
}

// Coefficients of (1 - q^2)^e / (1 - q)^n by plain convolution.
std::vector<long> series(long n, long e, long len) {
  std::vector<long> s(len, 0);
  s[0] = 1;
  for (long k = 0; k < n; ++k)
    for (long i = 1; i < len; ++i) s[i] += s[i - 1];
  for (long k = 0; k < e; ++k)
    for (long i = len - 1; i >= 2; --i) s[i] -= s[i - 2];
  return s;
}

std::vector<std::size_t> dense_dims(const GradedPresentation& p, unsigned max_poly) {
  const std::size_t n = p.nvars();
  std::vector<std::size_t> out;
  for (unsigned k = 0; k <= max_poly; ++k) {
    const auto basis = monomials_of_degree(n, k);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& rel : p.relations) {
      if (rel.total_degree() > k) continue;
      for (const auto& mono : monomials_of_degree(n, k - rel.total_degree())) {
        std::vector<mpq_class> row(basis.size(), 0);
        for (const auto& [m, c] : rel.terms()) {
          Monomial prod = m;
          for (std::size_t i = 0; i < n; ++i) prod[i] += mono[i];
          row[index.at(prod)] += c;
        }
        rows.push_back(std::move(row));
      }
    }
    out.push_back(basis.size() - oracle::dense_rank(rows));
  }
  return out;
}

AltForm alt12(long v) {
  AltForm n(2, 1);
  n.set(0, 0, 1, v);
  return n;
}

}  // namespace

TEST(Presentation, Examples) {
  const GradedPresentation p = presentation(form(1, 1), 2);
  EXPECT_EQ(p.names, (std::vector<std::string>{"t1", "t2", "y1", "x1", "x2"}));
  EXPECT_EQ(p.degrees, (std::vector<unsigned>(5, 2)));
  ASSERT_EQ(p.relations.size(), 1u);
  EXPECT_EQ(p.relations[0].to_string(p.names), "y1^2 + t1*x1 + t2*x2");

  const GradedPresentation torus = presentation(form(0, 1), 2);
  EXPECT_EQ(torus.names, (std::vector<std::string>{"t1", "t2", "x1", "x2"}));
  ASSERT_EQ(torus.relations.size(), 1u);
  EXPECT_EQ(torus.relations[0].to_string(torus.names), "t1*x1 + t2*x2");

  const GradedPresentation free = presentation(form(1, 0), 2);
  EXPECT_EQ(free.nvars(), 3u);
  EXPECT_TRUE(free.relations.empty());

  const GradedPresentation two = presentation(form(2, 2), 2);
  EXPECT_EQ(two.nvars(), 2u + 2u + 4u);
  EXPECT_EQ(two.relations.size(), 2u);
  EXPECT_EQ(two.names[x_generator(2, 2, 2, 1, 0)], "x2_1");
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_function(presentation(form(1, 1), 2), 8), (std::vector<std::size_t>{1, 5, 14, 30, 55}));
  EXPECT_EQ(hilbert_function(presentation(form(0, 1), 2), 8), (std::vector<std::size_t>{1, 4, 9, 16, 25}));
  EXPECT_THROW(hilbert_function(presentation(form(1, 1), 2), 7), InvariantError);
}

TEST(Hilbert, MatchesSeriesAndDenseOracle) {
  struct Case {
    std::size_t r, d, e;
  };
  for (const Case c : {Case{2, 1, 1}, Case{2, 2, 1}, Case{2, 0, 1}, Case{2, 1, 2}, Case{3, 1, 1}}) {
    const GradedPresentation p = presentation(form(c.d, c.e), c.r);
    const auto dims = hilbert_function(p, 12);
    const auto want = series(static_cast<long>(c.r + c.d + c.r * c.e), static_cast<long>(c.e), 7);
    for (std::size_t k = 0; k < dims.size(); ++k) ASSERT_EQ(static_cast<long>(dims[k]), want[k]) << k;
    if (p.nvars() <= 6) EXPECT_EQ(dims, dense_dims(p, 6));
  }
  for (long k = 0; k <= 4; ++k) EXPECT_EQ(series(5, 1, 5)[k], oracle::one_quadric_dim(5, k));
}

TEST(Substitution, IdentityAndNOnly) {
  const QuadraticForm q0 = form(0, 1);
  const GradedPresentation p = presentation(q0, 2);
  EXPECT_EQ(substitution_from_wreath(q0, WreathElement::identity(2, 0, 1)), RingSubstitution::identity(4));
  WreathElement w = WreathElement::identity(2, 0, 1);
  w.ext.n = alt12(3);
  const RingSubstitution s = substitution_from_wreath(q0, w);
  const auto res = ideal_invariance_check(p, s);
  EXPECT_TRUE(res.invariant);
  EXPECT_TRUE(res.on_the_nose);
  EXPECT_EQ(s.apply(p.relations[0]), p.relations[0]);
}

TEST(Substitution, Contravariant) {
  Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = 1 + k % 2;
    const QuadraticForm q = random_form(rng, d, 1);
    const WreathElement w = random_wreath(rng, 2, d, 1), w2 = random_wreath(rng, 2, d, 1);
    const RingSubstitution lhs = substitution_from_wreath(q, wreath_mul(q, w, w2));
    const RingSubstitution rhs = substitution_from_wreath(q, w).then(substitution_from_wreath(q, w2));
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(Substitution, IdealInvariance) {
  Rng rng(62);
  struct Case {
    std::size_t r, d, e;
  };
  for (const Case c : {Case{2, 1, 1}, Case{2, 2, 1}, Case{3, 2, 2}}) {
    const QuadraticForm q = random_form(rng, c.d, c.e);
    const GradedPresentation p = presentation(q, c.r);
    for (int k = 0; k < 100; ++k) {
      const auto res = ideal_invariance_check(p, substitution_from_wreath(q, random_wreath(rng, c.r, c.d, c.e)));
      ASSERT_TRUE(res.invariant);
      ASSERT_TRUE(res.on_the_nose);
    }
  }
}

TEST(Substitution, CorruptedIsRejected) {
  const QuadraticForm q = form(1, 1);
  const GradedPresentation p = presentation(q, 2);
  RingSubstitution s = RingSubstitution::identity(p.nvars());
  const std::size_t x1 = x_generator(2, 1, 1, 0, 0);
  s.images[x1] = s.images[x1] + Polynomial::variable(p.nvars(), 0);
  EXPECT_FALSE(ideal_invariance_check(p, s).invariant);
}

TEST(Orbit, PresentationExamples) {
  const Polynomial half = orbit_module(2, 1, 0).relations[0];
  EXPECT_EQ(half.coefficient({0, 0, 1}), 1);
  EXPECT_EQ(half.coefficient({1, 0, 0}), Rat(-1, 2));
  EXPECT_EQ(half.coefficient({0, 1, 0}), 0);
  EXPECT_EQ(orbit_module(1, 0, 0).relations[0], Polynomial::variable(3, 2));
  const Polynomial third = orbit_module(3, 2, 1).relations[0];
  EXPECT_EQ(third.coefficient({1, 0, 0}), Rat(-2, 3));
  EXPECT_EQ(third.coefficient({0, 1, 0}), Rat(-1, 3));
  EXPECT_EQ(orbit_module(3, 2, 1).names, (std::vector<std::string>{"t1", "t2", "y"}));
  EXPECT_THROW(orbit_module(0, 1, 0), InvariantError);
}

TEST(Orbit, IndexMapExamples) {
  const auto id = orbit_equivariance_check(2, WreathElement::identity(2, 1, 1));
  EXPECT_TRUE(id.bijective);
  for (const auto& [n, image] : id.entries) EXPECT_EQ(n, image);

  WreathElement shift = WreathElement::identity(2, 1, 1);
  shift.ext.m = IntMatrix{{1, 0}};
  const auto sh = orbit_equivariance_check(2, shift);
  EXPECT_TRUE(sh.bijective);
  for (const auto& [n, image] : sh.entries) EXPECT_EQ(image, std::make_pair(n.first - 2, n.second));

  const WreathElement a = WreathElement::from_aut(IntMatrix{{1, 1}, {0, 1}}, 1, 1);
  const auto am = orbit_equivariance_check(3, a);
  EXPECT_TRUE(am.bijective);
  for (const auto& [n, image] : am.entries) EXPECT_EQ(image, std::make_pair(n.first, n.first + n.second));
}

TEST(Orbit, RandomElementsPermuteWindow) {
  Rng rng(63);
  for (long N : {1L, 2L, 3L}) {
    for (int k = 0; k < 10; ++k) {
      const auto map = orbit_equivariance_check(N, random_wreath(rng, 2, 1, 1));
      ASSERT_EQ(map.window, 5 * N);
      ASSERT_EQ(static_cast<long>(map.entries.size()), (2 * map.window + 1) * (2 * map.window + 1));
      ASSERT_TRUE(map.injective);
      ASSERT_TRUE(map.bijective);
    }
  }
}

TEST(MonomialString, Format) {
  EXPECT_EQ(monomial_string({2, 0, 1}, {"a", "b", "c"}), "a^2*c");
  EXPECT_EQ(monomial_string({0, 0}, {"a", "b"}), "1");
}
