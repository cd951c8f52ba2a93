#pragma once

// Quadratic functions phi: B -> C with B = Z^d, C = Z^e, given by symmetric
// even-diagonal matrices c^k, together with a bilinear extension omega
// (matrices d^k with c^k = d^k + (d^k)^T).
//
// phi(y)_k = 1/2 y^T c^k y,  beta(y, y')_k = y^T c^k y',  omega(y, y')_k = y^T d^k y'.
//
// The divided-power square of B and its universal quadratic map are not
// modelled as a type; phi and omega_wedge carry everything they are used for.

#include <cstddef>
#include <span>
#include <vector>

#include "looijenga/intlat.hpp"
#include "looijenga/polynomial.hpp"

namespace looijenga {

/// Upper-triangular extension: d_ij = c_ij (i < j), d_ii = c_ii / 2, 0 below.
IntMatrix default_extension(const IntMatrix& c);
std::vector<IntMatrix> default_extension(std::span<const IntMatrix> c);

class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// Uses default_extension for omega.
  QuadraticForm(std::size_t d, std::vector<IntMatrix> hessians);
  QuadraticForm(std::size_t d, std::vector<IntMatrix> hessians, std::vector<IntMatrix> extension);

  /// Convenience for the e = 1 case.
  static QuadraticForm scalar(const IntMatrix& c);

  std::size_t source_rank() const noexcept { return d_; }
  std::size_t target_rank() const noexcept { return c_.size(); }
  const IntMatrix& hessian(std::size_t k) const { return c_.at(k); }
  const IntMatrix& extension(std::size_t k) const { return dext_.at(k); }
  const std::vector<IntMatrix>& hessians() const noexcept { return c_; }
  const std::vector<IntMatrix>& extensions() const noexcept { return dext_; }

  /// Same phi, extension replaced by dext + alt (alt alternating per component).
  QuadraticForm with_extension_shift(std::span<const IntMatrix> alt) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<IntMatrix> c_;
  std::vector<IntMatrix> dext_;
};

IntVector eval_phi(const QuadraticForm& q, std::span<const Int> y);
RatVector eval_phi(const QuadraticForm& q, std::span<const Rat> y);
IntVector eval_beta(const QuadraticForm& q, std::span<const Int> y, std::span<const Int> y2);
RatVector eval_beta(const QuadraticForm& q, std::span<const Rat> y, std::span<const Rat> y2);
IntVector eval_omega(const QuadraticForm& q, std::span<const Int> y, std::span<const Int> y2);
RatVector eval_omega(const QuadraticForm& q, std::span<const Rat> y, std::span<const Rat> y2);

/// omega(m (x) m') in Hom(Lambda^2 L, C): on e_i ^ e_j it is
/// omega(m e_i, m' e_j) - omega(m e_j, m' e_i). m, m' are d x r.
AltForm omega_wedge(const QuadraticForm& q, const IntMatrix& m, const IntMatrix& m2);

/// Same construction with beta in place of omega: the antisymmetrized cocycle
/// beta(m e_i, m' e_j) - beta(m e_j, m' e_i), which depends only on phi.
AltForm beta_wedge(const QuadraticForm& q, const IntMatrix& m, const IntMatrix& m2);

/// A representative u of a class in B^# / B, B^# = {u : c u in Z^d}.
struct DualCosetRep {
  RatVector u;
  friend bool operator==(const DualCosetRep&, const DualCosetRep&) = default;
};

/// Complete duplicate-free representatives of B^# / B with entries in [0, 1).
/// Requires e = 1 and det c != 0; the count is |det c|.
std::vector<DualCosetRep> dual_coset_reps(const QuadraticForm& q);

/// Exact Sylvester criterion on the single Hessian (e = 1).
bool is_positive_definite(const QuadraticForm& q);
bool is_positive_definite(const IntMatrix& c);
bool is_positive_definite(const std::vector<Rat>& symmetric, std::size_t n);

/// Certifies that homogeneous quadratics form a regular sequence up to
/// polynomial degree max_degree / 2 by comparing quotient dimensions with
/// prod (1 - q^2) / (1 - q)^nvars. max_degree counts cohomological degree
/// (each variable has degree 2), must be even and >= 4.
bool regular_sequence_check(std::span<const Polynomial> forms, std::size_t nvars,
                            unsigned max_degree = 12);

/// phi_k as a polynomial in d variables.
Polynomial phi_polynomial(const QuadraticForm& q, std::size_t k);

}  // namespace looijenga
