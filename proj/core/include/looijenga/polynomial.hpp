#pragma once

// Sparse multivariate polynomials over Q and the graded linear algebra used to
// count dimensions of quotient rings degree by degree (no Groebner bases).

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "looijenga/intlat.hpp"

namespace looijenga {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<unsigned>;

unsigned degree(const Monomial& m);

/// All monomials of total degree k in nvars variables, in lexicographic order
/// (x_0^k first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k);

class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rat& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rat coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c);

  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& s) const;
  Polynomial& operator+=(const Polynomial& o);

  /// Replace variable i by images[i] everywhere.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// e.g. "y1^2 + t1*x1 - 1/2*t2"; names default to v0, v1, ...
  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<Monomial, Rat> terms_;
};

/// Incremental row echelon basis over Q for sparse vectors indexed by column.
class RowEchelon {
 public:
  using SparseRow = std::map<std::size_t, Rat>;

  /// Adds the row if it is independent of the basis; returns whether it was.
  bool insert(SparseRow row);
  /// Reduces against the basis; an empty result means the row is in the span.
  SparseRow reduce(SparseRow row) const;
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  // pivot column -> row normalized to 1 at its pivot
  std::map<std::size_t, SparseRow> basis_;
};

/// Dimensions of the graded pieces of Q[v_0..v_{n-1}]/(relations) for
/// polynomial degrees 0..max_poly_degree. Relations must be homogeneous.
std::vector<std::size_t> quotient_dimensions(std::span<const Polynomial> relations,
                                             std::size_t nvars, unsigned max_poly_degree);

/// Whether a homogeneous polynomial lies in the ideal generated by homogeneous
/// relations, decided in its own degree by exact linear algebra.
bool in_ideal(const Polynomial& p, std::span<const Polynomial> relations);

/// Coefficients of prod (1 - q^{d_j}) / (1 - q)^nvars through q^max_poly_degree,
/// the Hilbert series of a complete intersection with relation degrees d_j.
std::vector<Int> complete_intersection_series(std::span<const unsigned> relation_degrees,
                                              std::size_t nvars, unsigned max_poly_degree);

}  // namespace looijenga
