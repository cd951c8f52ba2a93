#pragma once

// Sections of the line bundle L_phi on C_tau^d for a positive definite scalar
// quadratic form: the factor of automorphy, its Chern and Hermitian forms, and
// theta series
//   theta_u(tau, z) = sum_{v in Z^d} exp(2 pi i [-beta(z, u + v) + phi(u + v) tau])
// for characteristics u in B^# / B.

#include <complex>
#include <cstddef>
#include <vector>

#include "looijenga/intlat.hpp"
#include "looijenga/moduli.hpp"
#include "looijenga/qform.hpp"

namespace looijenga {

/// u = m1 tau + m2 in U = Z^d tau + Z^d.
struct LatticeVector {
  IntVector m1;
  IntVector m2;
};

/// c_tau tau + sum_k c_z[k] z_k + constant, exact rational coefficients.
struct LinearForm {
  Rat tau;
  RatVector z;
  Rat constant;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  bool is_constant() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// f_u(z) = -beta(z, m1) - 1/2 beta(m1, m1) tau.
Complex cocycle_f(const QuadraticForm& q, const LatticeVector& u, Complex tau, const ComplexVector& z);

/// f_u(z + shift) as a linear form in (tau, z).
LinearForm cocycle_f_symbolic(const QuadraticForm& q, const LatticeVector& u, const LatticeVector& shift);

/// f_u(z + u') + f_{u'}(z) - f_{u + u'}(z); always the constant -beta(m2', m1).
LinearForm cocycle_defect(const QuadraticForm& q, const LatticeVector& u, const LatticeVector& u2);

/// E(m1 tau + m2, m1' tau + m2') = beta(m1, m2') - beta(m2, m1').
Int chern_form(const QuadraticForm& q, const LatticeVector& u, const LatticeVector& u2);

/// E extended R-linearly to C^d, writing x = a tau + b with a, b real.
double chern_form_real(const QuadraticForm& q, Complex tau, const ComplexVector& x, const ComplexVector& x2);

/// H(x, y) = (Im tau)^{-1} sum c_ij x_i conj(y_j).
Complex hermitian_form(const QuadraticForm& q, Complex tau, const ComplexVector& x, const ComplexVector& y);
double hermitian_norm(const QuadraticForm& q, const ComplexVector& x, Complex tau);

inline constexpr double kDefaultThetaTol = 1e-10;
inline constexpr int kDefaultMaxRadius = 64;

class ThetaContext {
 public:
  /// Requires e = 1, a positive definite form, Im tau > 0, tol > 0.
  ThetaContext(QuadraticForm form, Complex tau, double tol = kDefaultThetaTol,
               int max_radius = kDefaultMaxRadius);

  const QuadraticForm& form() const noexcept { return form_; }
  Complex tau() const noexcept { return tau_; }
  double tol() const noexcept { return tol_; }
  int max_radius() const noexcept { return max_radius_; }
  /// Certified 0 < lambda <= smallest eigenvalue of c.
  double lambda_lower_bound() const noexcept { return lambda_min_; }

 private:
  QuadraticForm form_;
  Complex tau_;
  double tol_;
  int max_radius_;
  double lambda_min_;
};

/// Certified lower bound for the smallest eigenvalue of a positive definite c:
/// a floating estimate is shrunk until c - lambda I passes the exact Sylvester test.
double certified_lambda_min(const IntMatrix& c);

/// Rigorous bound on the sum over shells |v|_inf > radius; +inf when the
/// Gaussian bound is not yet monotone at that radius.
double theta_tail_bound(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z, int radius);

/// Smallest radius whose tail bound is below ctx.tol(); ConvergenceError past the cap.
int theta_radius(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z);

/// Sum over |v|_inf <= radius, shell by shell, lexicographic within a shell,
/// with compensated summation.
Complex theta_partial_sum(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z, int radius);

Complex theta_eval(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z);

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-30) for
/// theta(tau, z + m1 tau + m2) = theta(tau, z) exp(2 pi i [-beta(z, m1) - phi(m1) tau]).
double translation_check(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z,
                         const IntVector& m1, const IntVector& m2);

/// exp(2 pi i c phi(z) / (c tau + d)) for A in SL2(Z).
Complex modular_factor(const QuadraticForm& q, const IntMatrix& A, Complex tau, const ComplexVector& z);

/// det(c), the dimension of the space of sections.
Int section_dimension(const QuadraticForm& q);

/// Numerical rank (singular values above 1e-6 of the largest) of
/// [theta_u(tau, z_j)] over all characteristics u and sample points z_j.
std::size_t theta_basis_gram_rank(const ThetaContext& ctx, const std::vector<ComplexVector>& sample_points);

/// Worker cap for lattice sums: LOOIJENGA_THREADS if set, else hardware concurrency.
unsigned theta_worker_count();

}  // namespace looijenga
