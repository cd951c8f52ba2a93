#pragma once

// Exact integer linear algebra over Z: matrices with GMP entries, Smith normal
// form, second exterior powers and the contraction pairing on alternating forms.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "looijenga/errors.hpp"

namespace looijenga {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static IntMatrix diagonal(std::span<const Int> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Int> entries() const noexcept { return entries_; }
  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  /// Determinant by fraction-free (Bareiss) elimination.
  Int determinant() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Int& s, const IntMatrix& a);
IntVector operator*(const IntMatrix& a, std::span<const Int> v);
/// Row vector times matrix.
IntVector operator*(std::span<const Int> v, const IntMatrix& a);

std::string to_string(const IntMatrix& m);

bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix (adjugate times det, det = +-1).
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Adjugate: adj(A) * A = det(A) * I.
IntMatrix adjugate(const IntMatrix& a);

struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal d_1 | d_2 | ... of D (length min(rows, cols)).
  IntVector invariants() const;
};

/// U * B * V = D with U, V unimodular and D = diag(d_1 | d_2 | ...), d_i >= 0.
/// Pivot: smallest nonzero absolute value, ties broken in row-major order.
SmithForm smith_normal_form(const IntMatrix& b);

/// Number of unordered pairs i < j among r basis vectors.
constexpr std::size_t wedge_count(std::size_t r) { return r * (r - 1) / 2; }

/// Position of e_i ^ e_j (i < j) in the lexicographic wedge basis.
std::size_t wedge_index(std::size_t r, std::size_t i, std::size_t j);

/// A homomorphism Lambda^2 L -> C with L = Z^r and C = Z^e, stored on the
/// wedges e_i ^ e_j with i < j.
class AltForm {
 public:
  AltForm() = default;
  AltForm(std::size_t rank, std::size_t target_rank);
  AltForm(std::size_t rank, std::size_t target_rank, std::vector<Int> values);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t target_rank() const noexcept { return target_rank_; }

  /// Component k on e_i ^ e_j for any i, j, expanded by antisymmetry.
  Int value(std::size_t k, std::size_t i, std::size_t j) const;
  void set(std::size_t k, std::size_t i, std::size_t j, const Int& v);

  /// Raw storage, component-major: values()[k * wedge_count(r) + w].
  std::span<const Int> values() const noexcept { return values_; }
  bool is_zero() const;

  AltForm operator+(const AltForm& other) const;
  AltForm operator-(const AltForm& other) const;
  AltForm operator-() const;

  /// n o Lambda^2(M): the precomposition with a linear map of L.
  AltForm pullback(const IntMatrix& lambda2) const;

  friend bool operator==(const AltForm&, const AltForm&) = default;

 private:
  std::size_t rank_ = 0;
  std::size_t target_rank_ = 0;
  std::vector<Int> values_;
};

/// The map t' -> n(t ^ t') as a target_rank x rank matrix.
IntMatrix contract(const AltForm& n, std::span<const Int> t);

/// Matrix of 2x2 minors of A on the wedge basis; Lambda^2(AB) = Lambda^2(A) Lambda^2(B).
IntMatrix lambda2_induced(const IntMatrix& a);

}  // namespace looijenga
