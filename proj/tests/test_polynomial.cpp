#include <gtest/gtest.h>

#include <map>

#include "looijenga/polynomial.hpp"
#include "oracles.hpp"

using namespace looijenga;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

// Independent Hilbert function: dense rank of (relation x monomial) products
// inside the monomial basis of each degree.
std::vector<std::size_t> dense_quotient_dims(const std::vector<Polynomial>& rels, std::size_t n, unsigned max) {
  std::vector<std::size_t> out;
  for (unsigned k = 0; k <= max; ++k) {
    const auto basis = monomials_of_degree(n, k);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& rel : rels) {
      const unsigned dr = rel.total_degree();
      if (dr > k) continue;
      for (const auto& mono : monomials_of_degree(n, k - dr)) {
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

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  const std::vector<std::string> names = {"t1", "t2", "y1", "x1"};
  const Polynomial p = var(4, 2) * var(4, 2) + var(4, 0) * var(4, 3) - var(4, 1) * Rat(1, 2);
  EXPECT_EQ(p.to_string(names), "y1^2 + t1*x1 - 1/2*t2");
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(Polynomial(3).to_string(), "0");
}

TEST(Polynomial, Substitute) {
  // (a + b)^2 with a -> b, b -> a is unchanged.
  const Polynomial a = var(2, 0), b = var(2, 1);
  const Polynomial sq = (a + b) * (a + b);
  const std::vector<Polynomial> swap = {b, a};
  EXPECT_EQ(sq.substitute(swap), sq);
  const std::vector<Polynomial> kill = {a, Polynomial(2)};
  EXPECT_EQ(sq.substitute(kill), a * a);
}

TEST(Polynomial, MonomialCounts) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (unsigned k = 0; k <= 5; ++k)
      EXPECT_EQ(static_cast<long>(monomials_of_degree(n, k).size()), oracle::binomial(k + n - 1, n - 1));
}

TEST(QuotientDimensions, MatchDenseOracle) {
  const std::size_t n = 5;
  const std::vector<Polynomial> rel = {var(n, 2) * var(n, 2) + var(n, 0) * var(n, 3) + var(n, 1) * var(n, 4)};
  const auto dims = quotient_dimensions(rel, n, 5);
  EXPECT_EQ(dims, dense_quotient_dims(rel, n, 5));
  for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(static_cast<long>(dims[k]), oracle::one_quadric_dim(5, k));

  const std::vector<Polynomial> two = {var(4, 0) * var(4, 1), var(4, 0) * var(4, 1) + var(4, 2) * var(4, 3),
                                       var(4, 0) * var(4, 0)};
  EXPECT_EQ(quotient_dimensions(two, 4, 5), dense_quotient_dims(two, 4, 5));
}

TEST(QuotientDimensions, NoRelations) {
  const auto dims = quotient_dimensions({}, 3, 4);
  for (unsigned k = 0; k <= 4; ++k) EXPECT_EQ(static_cast<long>(dims[k]), oracle::binomial(k + 2, 2));
}

TEST(InIdeal, MembershipAndNonMembership) {
  const Polynomial x = var(3, 0), y = var(3, 1), z = var(3, 2);
  const std::vector<Polynomial> rels = {x * y, z * z};
  EXPECT_TRUE(in_ideal(x * x * y + z * z * y * Rat(3), rels));
  EXPECT_FALSE(in_ideal(x * z, rels));
  EXPECT_TRUE(in_ideal(Polynomial(3), rels));
}

TEST(CompleteIntersectionSeries, Values) {
  const std::vector<unsigned> one = {2};
  EXPECT_EQ(complete_intersection_series(one, 5, 4), (std::vector<Int>{1, 5, 14, 30, 55}));
  EXPECT_EQ(complete_intersection_series(one, 4, 4), (std::vector<Int>{1, 4, 9, 16, 25}));
  const std::vector<unsigned> none;
  EXPECT_EQ(complete_intersection_series(none, 2, 3), (std::vector<Int>{1, 2, 3, 4}));
}
