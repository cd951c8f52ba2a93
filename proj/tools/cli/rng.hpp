#pragma once

// Seeded generators for property suites. std::mt19937_64 is fully specified
// by the standard; the bounded draws below avoid the implementation-defined
// std distributions so a seed reproduces on every toolchain.

#include <cstdint>
#include <random>

#include "looijenga/intlat.hpp"
#include "looijenga/moduli.hpp"
#include "looijenga/qform.hpp"
#include "looijenga/theta.hpp"
#include "looijenga/wreath.hpp"

namespace looijenga::cli {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform in [lo, hi], by rejection.
  long uniform_int(long lo, long hi);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 eng_;
};

inline constexpr long kEntryBound = 5;

IntVector random_vector(Rng& rng, std::size_t n, long bound = kEntryBound);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = kEntryBound);
/// Random word in elementary matrices, kept only if every entry is within bound.
IntMatrix random_unimodular(Rng& rng, std::size_t r, long bound = kEntryBound);
AltForm random_alt(Rng& rng, std::size_t r, std::size_t e, long bound = kEntryBound);

/// Symmetric, even diagonal, with a randomly shifted (non-default) extension.
QuadraticForm random_form(Rng& rng, std::size_t d, std::size_t e, long bound = kEntryBound);
/// Random positive definite scalar form, d <= 3.
QuadraticForm random_definite_form(Rng& rng, std::size_t d);

ExtElement random_ext(Rng& rng, std::size_t r, std::size_t d, std::size_t e);
WreathElement random_wreath(Rng& rng, std::size_t r, std::size_t d, std::size_t e);
Pi2Element random_pi2(Rng& rng, std::size_t r, std::size_t d, std::size_t e);
LatticeVector random_lattice_vector(Rng& rng, std::size_t d);

/// tau with Re in [-1/2, 1/2], Im in [im_lo, im_hi].
Complex random_tau(Rng& rng, double im_lo, double im_hi);
/// z = a tau + b with a, b in [0, 1)^d.
ComplexVector random_z(Rng& rng, Complex tau, std::size_t d);

}  // namespace looijenga::cli
