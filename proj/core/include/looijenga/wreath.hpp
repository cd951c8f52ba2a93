#pragma once

// The discrete group Aut(L) |x E, E = Hom(L, B) x Hom(Lambda^2 L, C), with
// group law (m, n)(m', n') = (m + m', omega(m (x) m') + n + n'), and its
// action on pi_2 = L x B x Hom(L, C) and pi_3 = C.
//
// Conventions: L = Z^r, B = Z^d, C = Z^e. m is d x r, x is e x r, and an
// element (A, m, n) acts as first (m, n), then A.

#include <cstddef>

#include "looijenga/intlat.hpp"
#include "looijenga/qform.hpp"

namespace looijenga {

struct ExtElement {
  IntMatrix m;  // d x r
  AltForm n;    // Lambda^2 Z^r -> Z^e

  static ExtElement identity(std::size_t r, std::size_t d, std::size_t e);
  std::size_t rank() const noexcept { return m.cols(); }

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

struct WreathElement {
  IntMatrix A;  // r x r, unimodular
  ExtElement ext;

  static WreathElement identity(std::size_t r, std::size_t d, std::size_t e);
  static WreathElement from_aut(const IntMatrix& A, std::size_t d, std::size_t e);
  static WreathElement from_ext(ExtElement g);
  std::size_t rank() const noexcept { return A.rows(); }

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

struct Pi2Element {
  IntVector t;  // length r
  IntVector y;  // length d
  IntMatrix x;  // e x r

  friend bool operator==(const Pi2Element&, const Pi2Element&) = default;
};

struct Pi3Element {
  IntVector c;  // length e
  friend bool operator==(const Pi3Element&, const Pi3Element&) = default;
};

/// Throws DimensionError unless g is d x r / rank r / target e for q.
void check_ext(const QuadraticForm& q, const ExtElement& g);
void check_wreath(const QuadraticForm& q, const WreathElement& w);
void check_pi2(const QuadraticForm& q, const Pi2Element& p, std::size_t r);

ExtElement ext_mul(const QuadraticForm& q, const ExtElement& g, const ExtElement& h);
ExtElement ext_inv(const QuadraticForm& q, const ExtElement& g);

/// A . (m, n) = (m A^{-1}, n o Lambda^2 A^{-1}).
ExtElement aut_on_ext(const QuadraticForm& q, const IntMatrix& A, const ExtElement& g);

/// (A, g)(A', g') = (A A', (A'^{-1} . g) g').
WreathElement wreath_mul(const QuadraticForm& q, const WreathElement& w, const WreathElement& w2);
WreathElement wreath_inv(const QuadraticForm& q, const WreathElement& w);

/// (m, n) . (t, y, x) = (t, y + m t, x - beta(y, m) - omega(m t, m) + n contracted with t),
/// then A . (t, y, x) = (A t, y, x A^{-1}).
Pi2Element act_pi2(const QuadraticForm& q, const WreathElement& w, const Pi2Element& p);
Pi2Element act_pi2(const QuadraticForm& q, const ExtElement& g, const Pi2Element& p);
Pi2Element act_pi2(const QuadraticForm& q, const IntMatrix& A, const Pi2Element& p);

/// The group acts trivially on pi_3.
Pi3Element act_pi3(const WreathElement& w, const Pi3Element& c);

/// phi#(t, y, x) = phi(y) + x t.
Pi3Element quad_invariant_sharp(const QuadraticForm& q, const Pi2Element& p);

/// Rank-2, e = 1 action written out coordinate by coordinate:
///   m: y + m1 t1 + m2 t2,  x_j - beta(y, m_j) - omega(m1 t1 + m2 t2, m_j)
///   n: x1 - n t2, x2 + n t1
///   A: (a t1 + b t2, c t1 + d t2), ((d x1 - c x2)/det A, (-b x1 + a x2)/det A)
/// applied in the order n, m, A.
Pi2Element specialize_rank2(const QuadraticForm& q, const WreathElement& w, const Pi2Element& p);

/// Antisymmetrization gamma(m, m') - gamma(m', m) of the E-cocycle
/// gamma(m, m') = omega(m (x) m'), computed through omega. On e1 ^ e2 it is
/// beta(m1, m2') - beta(m2, m1') for every choice of extension.
AltForm commutator_cocycle(const QuadraticForm& q, const IntMatrix& m, const IntMatrix& m2);

}  // namespace looijenga
