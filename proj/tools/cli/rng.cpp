#include "rng.hpp"

#include <limits>

#include "looijenga/errors.hpp"

namespace looijenga::cli {

long Rng::uniform_int(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<long>(v % span);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

IntVector random_vector(Rng& rng, std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = rng.uniform_int(-bound, bound);
  return v;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_int(-bound, bound);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t r, long bound) {
  for (;;) {
    IntMatrix a = IntMatrix::identity(r);
    const long steps = rng.uniform_int(0, 3 * static_cast<long>(r) + 2);
    for (long s = 0; s < steps && r > 1; ++s) {
      const auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(r) - 1));
      auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(r) - 2));
      if (j >= i) ++j;
      const long k = rng.uniform_int(0, 1) ? 1 : -1;
      for (std::size_t c = 0; c < r; ++c) a(i, c) += k * a(j, c);
    }
    // Random signs reach the det -1 component.
    for (std::size_t i = 0; i < r; ++i)
      if (rng.uniform_int(0, 3) == 0)
        for (std::size_t c = 0; c < r; ++c) a(i, c) = -a(i, c);
    bool ok = true;
    for (const Int& x : a.entries()) ok = ok && abs(x) <= bound;
    if (ok) return a;
  }
}

AltForm random_alt(Rng& rng, std::size_t r, std::size_t e, long bound) {
  AltForm n(r, e);
  for (std::size_t k = 0; k < e; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) n.set(k, i, j, Int(rng.uniform_int(-bound, bound)));
  return n;
}

QuadraticForm random_form(Rng& rng, std::size_t d, std::size_t e, long bound) {
  std::vector<IntMatrix> hessians, shifts;
  for (std::size_t k = 0; k < e; ++k) {
    IntMatrix c(d, d), alt(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      c(i, i) = 2 * rng.uniform_int(-bound / 2, bound / 2);
      for (std::size_t j = i + 1; j < d; ++j) {
        c(i, j) = rng.uniform_int(-bound, bound);
        c(j, i) = c(i, j);
        alt(i, j) = rng.uniform_int(-2, 2);
        alt(j, i) = -alt(i, j);
      }
    }
    hessians.push_back(std::move(c));
    shifts.push_back(std::move(alt));
  }
  return QuadraticForm(d, std::move(hessians)).with_extension_shift(shifts);
}

QuadraticForm random_definite_form(Rng& rng, std::size_t d) {
  for (;;) {
    IntMatrix c(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      c(i, i) = 2 * rng.uniform_int(1, 3);
      for (std::size_t j = i + 1; j < d; ++j) {
        c(i, j) = rng.uniform_int(-2, 2);
        c(j, i) = c(i, j);
      }
    }
    if (is_positive_definite(c)) return QuadraticForm::scalar(c);
  }
}

ExtElement random_ext(Rng& rng, std::size_t r, std::size_t d, std::size_t e) {
  return {random_matrix(rng, d, r), random_alt(rng, r, e)};
}

WreathElement random_wreath(Rng& rng, std::size_t r, std::size_t d, std::size_t e) {
  return {random_unimodular(rng, r), random_ext(rng, r, d, e)};
}

Pi2Element random_pi2(Rng& rng, std::size_t r, std::size_t d, std::size_t e) {
  return {random_vector(rng, r), random_vector(rng, d), random_matrix(rng, e, r)};
}

LatticeVector random_lattice_vector(Rng& rng, std::size_t d) {
  return {random_vector(rng, d), random_vector(rng, d)};
}

Complex random_tau(Rng& rng, double im_lo, double im_hi) {
  const double re = rng.uniform(-0.5, 0.5);
  return {re, rng.uniform(im_lo, im_hi)};
}

ComplexVector random_z(Rng& rng, Complex tau, std::size_t d) {
  ComplexVector z(d);
  for (auto& v : z) {
    const double a = rng.uniform01();
    v = a * tau + rng.uniform01();
  }
  return z;
}

}  // namespace looijenga::cli
