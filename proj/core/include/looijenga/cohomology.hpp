#pragma once

// Graded quotient presentations Q[t, y, x] / (phi_k#) of equivariant
// cohomology rings, their Hilbert functions, and the pullback action of the
// wreath group on generators.
//
// Every generator sits in cohomological degree 2; polynomial degree k is
// cohomological degree 2k.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "looijenga/polynomial.hpp"
#include "looijenga/qform.hpp"
#include "looijenga/wreath.hpp"

namespace looijenga {

struct GradedPresentation {
  std::vector<std::string> names;
  std::vector<unsigned> degrees;  // cohomological
  std::vector<Polynomial> relations;

  std::size_t nvars() const noexcept { return names.size(); }
};

/// Generators t1..tr, y1..yd, then x_i (e = 1) or x{i}_{k}; one relation
/// phi_k(y) + sum_i t_i x_ik per component k of C.
GradedPresentation presentation(const QuadraticForm& q, std::size_t r);

/// Index of x_ik among the generators of presentation(q, r).
std::size_t x_generator(std::size_t r, std::size_t d, std::size_t e, std::size_t i, std::size_t k);

/// Graded dimensions in cohomological degrees 0, 2, ..., max_degree.
std::vector<std::size_t> hilbert_function(const GradedPresentation& p, unsigned max_degree);

/// Each generator mapped to a linear form in the generators.
struct RingSubstitution {
  std::vector<Polynomial> images;

  static RingSubstitution identity(std::size_t nvars);
  std::size_t nvars() const noexcept { return images.size(); }
  Polynomial apply(const Polynomial& p) const;
  /// (this.then(s))(f) = s(this(f)).
  RingSubstitution then(const RingSubstitution& s) const;

  friend bool operator==(const RingSubstitution&, const RingSubstitution&) = default;
};

/// The pullback g -> g o w of coordinate functions along the pi_2 action.
/// subst(w w') = subst(w') o subst(w).
RingSubstitution substitution_from_wreath(const QuadraticForm& q, const WreathElement& w);

struct IdealInvarianceResult {
  bool invariant = false;
  bool on_the_nose = false;
};

IdealInvarianceResult ideal_invariance_check(const GradedPresentation& p, const RingSubstitution& s);

/// Q[t1, t2, y] / (y - (n1/N) t1 - (n2/N) t2).
GradedPresentation orbit_module(long N, long n1, long n2);

struct OrbitIndexMap {
  long N = 0;
  long window = 0;  // |n_i| <= window
  /// (n, n*) with subst(R_n) in the ideal of R_{n*}.
  std::vector<std::pair<std::pair<long, long>, std::pair<long, long>>> entries;
  bool injective = false;
  bool bijective = false;
};

/// Requires d = 1 and r = 2. Every image is confirmed by exact ideal
/// membership; a non-integral index raises InvariantError.
OrbitIndexMap orbit_equivariance_check(long N, const WreathElement& w);

/// Monomial -> "p/q" text.
std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace looijenga
