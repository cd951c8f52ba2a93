#include <gtest/gtest.h>

#include "looijenga/errors.hpp"
#include "looijenga/wreath.hpp"
#include "rng.hpp"

using namespace looijenga;
using namespace looijenga::cli;

namespace {

const QuadraticForm A1 = QuadraticForm::scalar(IntMatrix{{2}});

AltForm alt12(long v) {
  AltForm n(2, 1);
  n.set(0, 0, 1, v);
  return n;
}

ExtElement ext(IntMatrix m, AltForm n) { return ExtElement{std::move(m), std::move(n)}; }

struct Config {
  std::size_t r, d, e;
};
const Config kConfigs[] = {{2, 1, 1}, {2, 2, 1}, {3, 2, 2}};

}  // namespace

TEST(Ext, MultiplicationExamples) {
  const ExtElement a = ext(IntMatrix{{1, 0}}, AltForm(2, 1));
  const ExtElement b = ext(IntMatrix{{0, 1}}, AltForm(2, 1));
  EXPECT_EQ(ext_mul(A1, ExtElement::identity(2, 1, 1), a), a);
  const ExtElement ab = ext_mul(A1, a, b), ba = ext_mul(A1, b, a);
  EXPECT_EQ(ab, ext(IntMatrix{{1, 1}}, alt12(1)));
  EXPECT_EQ(ba, ext(IntMatrix{{1, 1}}, alt12(-1)));
  // Commutator value 2 = beta(1, 1).
  EXPECT_EQ(ab.n.value(0, 0, 1) - ba.n.value(0, 0, 1), 2);
}

TEST(Ext, InverseExamples) {
  EXPECT_EQ(ext_inv(A1, ExtElement::identity(2, 1, 1)), ExtElement::identity(2, 1, 1));
  const ExtElement a = ext(IntMatrix{{1, 0}}, AltForm(2, 1));
  const ExtElement inv = ext_inv(A1, a);
  EXPECT_EQ(inv.m, (IntMatrix{{-1, 0}}));
  EXPECT_EQ(ext_mul(A1, a, inv), ExtElement::identity(2, 1, 1));
  EXPECT_EQ(ext_mul(A1, inv, a), ExtElement::identity(2, 1, 1));
}

TEST(Ext, AutomorphismExamples) {
  const ExtElement g = ext(IntMatrix{{2, 3}}, alt12(1));
  EXPECT_EQ(aut_on_ext(A1, IntMatrix::identity(2), g), g);
  const ExtElement swapped = aut_on_ext(A1, IntMatrix{{0, 1}, {1, 0}}, g);
  EXPECT_EQ(swapped.n.value(0, 0, 1), -1);
  EXPECT_EQ(swapped.m, (IntMatrix{{3, 2}}));
}

TEST(Wreath, Examples) {
  const WreathElement w{IntMatrix{{1, 1}, {0, 1}}, ext(IntMatrix{{1, -2}}, alt12(3))};
  EXPECT_EQ(wreath_mul(A1, WreathElement::identity(2, 1, 1), w), w);
  EXPECT_EQ(wreath_mul(A1, w, WreathElement::identity(2, 1, 1)), w);
  EXPECT_THROW(check_wreath(A1, WreathElement{IntMatrix{{2, 0}, {0, 1}}, ExtElement::identity(2, 1, 1)}),
               InvariantError);
}

TEST(Wreath, GroupAxioms) {
  Rng rng(31);
  for (const auto& c : kConfigs) {
    const QuadraticForm q = random_form(rng, c.d, c.e);
    const WreathElement id = WreathElement::identity(c.r, c.d, c.e);
    for (int k = 0; k < 1000; ++k) {
      const ExtElement g = random_ext(rng, c.r, c.d, c.e), h = random_ext(rng, c.r, c.d, c.e),
                       f = random_ext(rng, c.r, c.d, c.e);
      ASSERT_EQ(ext_mul(q, ext_mul(q, g, h), f), ext_mul(q, g, ext_mul(q, h, f)));
      ASSERT_EQ(ext_mul(q, g, ext_inv(q, g)), ExtElement::identity(c.r, c.d, c.e));

      const WreathElement u = random_wreath(rng, c.r, c.d, c.e), v = random_wreath(rng, c.r, c.d, c.e),
                          w = random_wreath(rng, c.r, c.d, c.e);
      ASSERT_EQ(wreath_mul(q, wreath_mul(q, u, v), w), wreath_mul(q, u, wreath_mul(q, v, w)));
      ASSERT_EQ(wreath_mul(q, u, id), u);
      ASSERT_EQ(wreath_mul(q, id, u), u);
      ASSERT_EQ(wreath_mul(q, u, wreath_inv(q, u)), id);
      ASSERT_EQ(wreath_mul(q, wreath_inv(q, u), u), id);

      // Aut(L) acts on E by group automorphisms.
      const IntMatrix A = u.A;
      ASSERT_EQ(aut_on_ext(q, A, ext_mul(q, g, h)), ext_mul(q, aut_on_ext(q, A, g), aut_on_ext(q, A, h)));
    }
  }
}

TEST(Pi2, ActionExample) {
  const WreathElement w = WreathElement::from_ext(ext(IntMatrix{{1, 0}}, AltForm(2, 1)));
  const Pi2Element p{IntVector{1, 0}, IntVector{2}, IntMatrix{{0, 0}}};
  const Pi2Element out = act_pi2(A1, w, p);
  EXPECT_EQ(out.t, (IntVector{1, 0}));
  EXPECT_EQ(out.y, IntVector{3});
  EXPECT_EQ(out.x, (IntMatrix{{-5, 0}}));
  EXPECT_EQ(quad_invariant_sharp(A1, p).c, IntVector{4});
  EXPECT_EQ(quad_invariant_sharp(A1, out).c, IntVector{4});
  EXPECT_EQ(act_pi2(A1, WreathElement::identity(2, 1, 1), p), p);
  const Pi2Element zero{IntVector{3, -1}, IntVector{0}, IntMatrix{{0, 0}}};
  EXPECT_EQ(quad_invariant_sharp(A1, zero).c, IntVector{0});
}

TEST(Pi2, ActionAxiomsAndInvariance) {
  Rng rng(32);
  for (const auto& c : kConfigs) {
    const QuadraticForm q = random_form(rng, c.d, c.e);
    for (int k = 0; k < 1000; ++k) {
      const WreathElement u = random_wreath(rng, c.r, c.d, c.e), v = random_wreath(rng, c.r, c.d, c.e);
      const Pi2Element p = random_pi2(rng, c.r, c.d, c.e);
      ASSERT_EQ(act_pi2(q, wreath_mul(q, u, v), p), act_pi2(q, u, act_pi2(q, v, p)));
      ASSERT_EQ(act_pi2(q, WreathElement::identity(c.r, c.d, c.e), p), p);
      ASSERT_EQ(quad_invariant_sharp(q, act_pi2(q, u, p)), quad_invariant_sharp(q, p));
      const Pi3Element c3{random_vector(rng, c.e)};
      ASSERT_EQ(act_pi3(u, c3), c3);
    }
  }
}

TEST(Specialize, OnlyN) {
  const WreathElement w = WreathElement::from_ext(ext(IntMatrix{{0, 0}}, alt12(4)));
  const Pi2Element p{IntVector{2, -3}, IntVector{1}, IntMatrix{{5, 7}}};
  const Pi2Element out = specialize_rank2(A1, w, p);
  // x1 - n t2, x2 + n t1
  EXPECT_EQ(out.x, (IntMatrix{{5 - 4 * -3, 7 + 4 * 2}}));
  EXPECT_EQ(out, act_pi2(A1, w, p));
}

TEST(Specialize, OnlyA) {
  const IntMatrix A{{2, 1}, {1, 1}};
  const WreathElement w = WreathElement::from_aut(A, 1, 1);
  const Pi2Element p{IntVector{1, 4}, IntVector{-2}, IntMatrix{{3, -5}}};
  const Pi2Element out = specialize_rank2(A1, w, p);
  // (a t1 + b t2, c t1 + d t2); ((d x1 - c x2)/det, (-b x1 + a x2)/det), det = 1
  EXPECT_EQ(out.t, (IntVector{2 * 1 + 1 * 4, 1 * 1 + 1 * 4}));
  EXPECT_EQ(out.x, (IntMatrix{{1 * 3 - 1 * -5, -1 * 3 + 2 * -5}}));
  EXPECT_EQ(out.y, IntVector{-2});
  EXPECT_EQ(out, act_pi2(A1, w, p));
}

TEST(Specialize, MatchesGeneralAction) {
  Rng rng(33);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t d = 1 + k % 2;
    const QuadraticForm q = random_form(rng, d, 1);
    const WreathElement w = random_wreath(rng, 2, d, 1);
    const Pi2Element p = random_pi2(rng, 2, d, 1);
    ASSERT_EQ(specialize_rank2(q, w, p), act_pi2(q, w, p));
  }
  EXPECT_THROW(specialize_rank2(QuadraticForm(1, {IntMatrix{{2}}, IntMatrix{{2}}}),
                                WreathElement::identity(2, 1, 2),
                                Pi2Element{IntVector{0, 0}, IntVector{0}, IntMatrix(2, 2)}),
               DimensionError);
}

TEST(Extension, CommutatorCocycleIndependentOfExtension) {
  Rng rng(34);
  for (int k = 0; k < 500; ++k) {
    const std::size_t d = 1 + k % 3, e = 1 + k % 2, r = 2 + k % 2;
    const QuadraticForm q = random_form(rng, d, e);
    std::vector<IntMatrix> shift;
    for (std::size_t c = 0; c < e; ++c) {
      IntMatrix s(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          s(i, j) = rng.uniform_int(-5, 5);
          s(j, i) = -s(i, j);
        }
      shift.push_back(s);
    }
    const QuadraticForm q2 = q.with_extension_shift(shift);
    const IntMatrix m = random_matrix(rng, d, r), m2 = random_matrix(rng, d, r);
    const AltForm gamma = commutator_cocycle(q, m, m2);
    ASSERT_EQ(gamma, commutator_cocycle(q2, m, m2));
    for (std::size_t c = 0; c < e; ++c) {
      // beta(m1, m2') - beta(m2, m1') on e1 ^ e2.
      Int expect = eval_beta(q, m.column(0), m2.column(1))[c] - eval_beta(q, m.column(1), m2.column(0))[c];
      ASSERT_EQ(gamma.value(c, 0, 1), expect);
    }
    // phi# is unchanged too.
    const Pi2Element p = random_pi2(rng, r, d, e);
    ASSERT_EQ(quad_invariant_sharp(q, p), quad_invariant_sharp(q2, p));
  }
}
