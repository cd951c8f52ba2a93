#pragma once

// Framed lattices Z t1 + Z t2 in C and the actions of GL2(Z), C^x and
// Hom(L, B) on them; reduction of tau = t1/t2 to the standard fundamental
// domain; descent of points of the locus t1 x1 + t2 x2 = -phi(y) to
// (tau, z, u) coordinates; isogenies attached to an integer matrix B.
//
// All complex arithmetic is double precision. Quadratic forms used here are
// scalar (e = 1) and are extended C-bilinearly (no conjugation).

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "looijenga/intlat.hpp"
#include "looijenga/qform.hpp"
#include "looijenga/wreath.hpp"

namespace looijenga {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kLinearTol = 1e-12;
inline constexpr double kDescentTol = 1e-9;

class FramedLattice {
 public:
  /// Throws InvariantError unless R t1 + R t2 = C.
  FramedLattice(Complex t1, Complex t2);

  Complex t1() const noexcept { return t1_; }
  Complex t2() const noexcept { return t2_; }
  Complex tau() const noexcept { return t1_ / t2_; }

 private:
  Complex t1_;
  Complex t2_;
};

struct CurveTuple {
  FramedLattice lattice;
  ComplexVector y;
};

/// A point (t, y, x) of C^2 x C^d x C^2 (r = 2, e = 1), not necessarily on the locus.
struct GeometricPoint {
  FramedLattice lattice;
  ComplexVector y;
  Complex x1;
  Complex x2;
};

struct DescendedPoint {
  Complex tau;
  ComplexVector z;
  Complex u;
};

Complex phi_complex(const QuadraticForm& q, const ComplexVector& z);
Complex beta_complex(const QuadraticForm& q, const ComplexVector& z, const ComplexVector& w);
Complex omega_complex(const QuadraticForm& q, const ComplexVector& z, const ComplexVector& w);

/// (a tau + b) / (c tau + d).
Complex mobius(const IntMatrix& A, Complex tau);

FramedLattice act_gl2(const IntMatrix& A, const FramedLattice& lat);
CurveTuple act_gl2(const IntMatrix& A, const CurveTuple& p);

FramedLattice act_scale(Complex lambda, const FramedLattice& lat);
CurveTuple act_scale(Complex lambda, const CurveTuple& p);
GeometricPoint act_scale(Complex lambda, const GeometricPoint& p);

/// y -> y + m1 t1 + m2 t2 with m = (m1 | m2) a d x 2 integer matrix.
CurveTuple act_translate(const IntMatrix& m, const CurveTuple& p);

struct ReducedTau {
  Complex tau;
  IntMatrix A;  // mobius(A, input) == tau
};

/// Reduction into Im > 0, Re in [-1/2, 1/2), |tau| >= 1, with Re <= 0 when
/// |tau| = 1. A lower half-plane input is first flipped by diag(-1, 1).
ReducedTau reduce_tau(Complex tau);

struct LatticeIsomorphism {
  IntMatrix A;
  Complex lambda;  // lambda * (A . lat) == lat'
};

std::optional<LatticeIsomorphism> curves_isomorphic(const FramedLattice& lat, const FramedLattice& lat2,
                                                    double tol = kDescentTol);

/// The action of the rank-2 wreath group on points (t, y, x): first (m, n), then A.
GeometricPoint act_geometric(const QuadraticForm& q, const WreathElement& w, const GeometricPoint& p);

/// (t, y, x) -> (t1/t2, y/t2, exp(2 pi i x1/t2)); requires the locus
/// t1 x1 + t2 x2 = -phi(y) to hold to relative tolerance tol.
DescendedPoint descend(const QuadraticForm& q, const GeometricPoint& p, double tol = kDescentTol);

/// m . (tau, z, u) = (tau, z + m1 tau + m2, u exp(2 pi i [-beta(z, m1) - phi(m1) tau])).
DescendedPoint descended_act(const QuadraticForm& q, const IntMatrix& m, const DescendedPoint& p);
/// A . (tau, z, u) = (A tau, z/(c tau + d), u^{1/det A} exp(2 pi i/det A [c phi(z)/(c tau + d)])).
DescendedPoint descended_act_aut(const QuadraticForm& q, const IntMatrix& A, const DescendedPoint& p);
/// Whole wreath element: the m part, then A (n acts trivially after descent).
DescendedPoint descended_act(const QuadraticForm& q, const WreathElement& w, const DescendedPoint& p);

/// A in GL2(Z) with B^{-1} A B in GL2(Z); for B = diag(1, N) this is c = 0 mod N.
bool gamma_B_member(const IntMatrix& B, const IntMatrix& A);

struct IsogenyNormalForm {
  Int M;
  Int N;
};

/// B ~ diag(M, M N) by the Smith normal form.
IsogenyNormalForm isogeny_normal_form(const IntMatrix& B);
Int isogeny_degree(const IntMatrix& B);

/// Coordinates (a, b) in [0, 1)^2 with p = a s1 + b s2 mod Z s1 + Z s2.
std::pair<double, double> lattice_coordinates(Complex p, Complex s1, Complex s2);
Complex reduce_mod_lattice(Complex p, Complex s1, Complex s2);

/// The projection C/((Bt)1 Z + (Bt)2 Z) -> C/(t1 Z + t2 Z): identity on C,
/// returned reduced mod the target lattice.
Complex isogeny_map(const IntMatrix& B, const FramedLattice& lat, Complex y);

/// The |det B| points of t-lattice / Bt-lattice, reduced mod the source lattice.
std::vector<Complex> isogeny_kernel(const IntMatrix& B, const FramedLattice& lat);

}  // namespace looijenga
