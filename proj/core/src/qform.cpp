#include "looijenga/qform.hpp"

#include <string>

namespace looijenga {

namespace {

void validate_hessian(const IntMatrix& c, std::size_t d) {
  if (c.rows() != d || c.cols() != d)
    throw DimensionError("Hessian must be " + std::to_string(d) + "x" + std::to_string(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (!mpz_even_p(c(i, i).get_mpz_t()))
      throw InvariantError("Hessian diagonal entry c_" + std::to_string(i + 1) +
                           std::to_string(i + 1) + " = " + c(i, i).get_str() + " is odd");
    for (std::size_t j = i + 1; j < d; ++j)
      if (c(i, j) != c(j, i)) throw InvariantError("Hessian is not symmetric");
  }
}

template <typename Scalar>
std::vector<Scalar> bilinear(const std::vector<IntMatrix>& mats, std::span<const Scalar> y,
                             std::span<const Scalar> y2, std::size_t d) {
  if (y.size() != d || y2.size() != d)
    throw DimensionError("expected vectors of length " + std::to_string(d));
  std::vector<Scalar> out(mats.size(), Scalar(0));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const IntMatrix& m = mats[k];
    Scalar acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (y[i] == 0) continue;
      Scalar row = 0;
      for (std::size_t j = 0; j < d; ++j) row += m(i, j) * y2[j];
      acc += y[i] * row;
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

IntMatrix default_extension(const IntMatrix& c) {
  validate_hessian(c, c.rows());
  const std::size_t d = c.rows();
  IntMatrix dext(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    mpz_divexact_ui(dext(i, i).get_mpz_t(), c(i, i).get_mpz_t(), 2);
    for (std::size_t j = i + 1; j < d; ++j) dext(i, j) = c(i, j);
  }
  return dext;
}

std::vector<IntMatrix> default_extension(std::span<const IntMatrix> c) {
  std::vector<IntMatrix> out;
  out.reserve(c.size());
  for (const auto& ck : c) out.push_back(default_extension(ck));
  return out;
}

QuadraticForm::QuadraticForm(std::size_t d, std::vector<IntMatrix> hessians)
    : QuadraticForm(d, hessians, default_extension(std::span<const IntMatrix>(hessians))) {}

QuadraticForm::QuadraticForm(std::size_t d, std::vector<IntMatrix> hessians,
                             std::vector<IntMatrix> extension)
    : d_(d), c_(std::move(hessians)), dext_(std::move(extension)) {
  if (c_.size() != dext_.size())
    throw DimensionError("QuadraticForm: " + std::to_string(c_.size()) + " Hessians but " +
                         std::to_string(dext_.size()) + " extension matrices");
  for (std::size_t k = 0; k < c_.size(); ++k) {
    validate_hessian(c_[k], d_);
    const IntMatrix& dk = dext_[k];
    if (dk.rows() != d_ || dk.cols() != d_) throw DimensionError("extension matrix has wrong size");
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        if (c_[k](i, j) != dk(i, j) + dk(j, i))
          throw InvariantError("extension violates c_ij = d_ij + d_ji at (" + std::to_string(i + 1) +
                               "," + std::to_string(j + 1) + ")");
  }
}

QuadraticForm QuadraticForm::scalar(const IntMatrix& c) { return QuadraticForm(c.rows(), {c}); }

QuadraticForm QuadraticForm::with_extension_shift(std::span<const IntMatrix> alt) const {
  if (alt.size() != dext_.size()) throw DimensionError("with_extension_shift: component count");
  std::vector<IntMatrix> shifted;
  for (std::size_t k = 0; k < alt.size(); ++k) shifted.push_back(dext_[k] + alt[k]);
  return QuadraticForm(d_, c_, std::move(shifted));
}

IntVector eval_beta(const QuadraticForm& q, std::span<const Int> y, std::span<const Int> y2) {
  return bilinear<Int>(q.hessians(), y, y2, q.source_rank());
}

RatVector eval_beta(const QuadraticForm& q, std::span<const Rat> y, std::span<const Rat> y2) {
  return bilinear<Rat>(q.hessians(), y, y2, q.source_rank());
}

IntVector eval_omega(const QuadraticForm& q, std::span<const Int> y, std::span<const Int> y2) {
  return bilinear<Int>(q.extensions(), y, y2, q.source_rank());
}

RatVector eval_omega(const QuadraticForm& q, std::span<const Rat> y, std::span<const Rat> y2) {
  return bilinear<Rat>(q.extensions(), y, y2, q.source_rank());
}

IntVector eval_phi(const QuadraticForm& q, std::span<const Int> y) {
  // Integral because the diagonal is even.
  IntVector b = eval_beta(q, y, y);
  for (auto& v : b) mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
  return b;
}

RatVector eval_phi(const QuadraticForm& q, std::span<const Rat> y) {
  RatVector b = eval_beta(q, y, y);
  for (auto& v : b) v /= 2;
  return b;
}

namespace {

template <typename Pairing>
AltForm wedge_of(const QuadraticForm& q, const IntMatrix& m, const IntMatrix& m2, Pairing pair) {
  const std::size_t d = q.source_rank();
  if (m.rows() != d || m2.rows() != d || m.cols() != m2.cols())
    throw DimensionError("omega_wedge: m and m' must both be " + std::to_string(d) + " x r");
  const std::size_t r = m.cols();
  AltForm out(r, q.target_rank());
  std::vector<IntVector> mc(r), m2c(r);
  for (std::size_t i = 0; i < r; ++i) {
    mc[i] = m.column(i);
    m2c[i] = m2.column(i);
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      IntVector a = pair(mc[i], m2c[j]);
      IntVector b = pair(mc[j], m2c[i]);
      for (std::size_t k = 0; k < q.target_rank(); ++k) out.set(k, i, j, a[k] - b[k]);
    }
  return out;
}

}  // namespace

AltForm omega_wedge(const QuadraticForm& q, const IntMatrix& m, const IntMatrix& m2) {
  return wedge_of(q, m, m2, [&](const IntVector& a, const IntVector& b) { return eval_omega(q, a, b); });
}

AltForm beta_wedge(const QuadraticForm& q, const IntMatrix& m, const IntMatrix& m2) {
  return wedge_of(q, m, m2, [&](const IntVector& a, const IntVector& b) { return eval_beta(q, a, b); });
}

std::vector<DualCosetRep> dual_coset_reps(const QuadraticForm& q) {
  if (q.target_rank() != 1)
    throw DimensionError("dual_coset_reps: needs a scalar-valued form (e = 1)");
  const IntMatrix& c = q.hessian(0);
  const std::size_t d = c.rows();
  if (c.determinant() == 0) throw DegeneracyError("dual_coset_reps: Hessian is singular");

  // U c V = D, so c^{-1} Z^d = V D^{-1} Z^d and the classes mod Z^d are
  // V (j_1/d_1, ..., j_d/d_d) with 0 <= j_i < d_i.
  SmithForm snf = smith_normal_form(c);
  IntVector inv = snf.invariants();
  std::vector<DualCosetRep> reps;
  std::vector<unsigned long> j(d, 0);
  for (;;) {
    RatVector scaled(d);
    for (std::size_t i = 0; i < d; ++i) {
      scaled[i] = Rat(Int(j[i]), inv[i]);
      scaled[i].canonicalize();
    }
    RatVector u(d, Rat(0));
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) u[a] += snf.V(a, b) * scaled[b];
      // Fractional part in [0, 1).
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), u[a].get_num_mpz_t(), u[a].get_den_mpz_t());
      u[a] -= fl;
      u[a].canonicalize();
    }
    reps.push_back({std::move(u)});

    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++j[pos] < inv[pos]) break;
      j[pos] = 0;
      if (pos == 0) return reps;
    }
    if (d == 0) return reps;
  }
}

bool is_positive_definite(const std::vector<Rat>& a, std::size_t n) {
  if (a.size() != n * n) throw DimensionError("is_positive_definite: size mismatch");
  // Leading principal minors via exact Gaussian elimination: all pivots > 0.
  std::vector<Rat> m = a;
  for (std::size_t k = 0; k < n; ++k) {
    const Rat pivot = m[k * n + k];
    if (pivot <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat f = m[i * n + k] / pivot;
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
    }
  }
  return true;
}

bool is_positive_definite(const IntMatrix& c) {
  if (!c.is_square()) throw DimensionError("is_positive_definite: matrix is not square");
  std::vector<Rat> a(c.entries().begin(), c.entries().end());
  return is_positive_definite(a, c.rows());
}

bool is_positive_definite(const QuadraticForm& q) {
  if (q.target_rank() != 1) throw DimensionError("is_positive_definite: needs e = 1");
  return is_positive_definite(q.hessian(0));
}

bool regular_sequence_check(std::span<const Polynomial> forms, std::size_t nvars,
                            unsigned max_degree) {
  if (max_degree < 4 || max_degree % 2 != 0)
    throw InvariantError("regular_sequence_check: max_degree must be even and >= 4");
  std::vector<unsigned> degrees;
  for (const auto& f : forms) {
    if (f.nvars() != nvars) throw DimensionError("regular_sequence_check: variable count");
    if (!f.is_homogeneous() || f.is_zero() || f.total_degree() != 2)
      throw InvariantError("regular_sequence_check: forms must be nonzero homogeneous quadratics");
    degrees.push_back(2);
  }
  const unsigned top = max_degree / 2;
  auto dims = quotient_dimensions(forms, nvars, top);
  auto expected = complete_intersection_series(degrees, nvars, top);
  for (unsigned k = 0; k <= top; ++k)
    if (expected[k] != Int(static_cast<unsigned long>(dims[k]))) return false;
  return true;
}

Polynomial phi_polynomial(const QuadraticForm& q, std::size_t k) {
  const std::size_t d = q.source_rank();
  const IntMatrix& c = q.hessian(k);
  Polynomial p(d);
  for (std::size_t i = 0; i < d; ++i) {
    Monomial sq(d, 0);
    sq[i] = 2;
    Rat half(c(i, i), 2);
    half.canonicalize();
    p.add_term(sq, half);
    for (std::size_t j = i + 1; j < d; ++j) {
      Monomial mixed(d, 0);
      mixed[i] = 1;
      mixed[j] = 1;
      p.add_term(mixed, Rat(c(i, j)));
    }
  }
  return p;
}

}  // namespace looijenga
