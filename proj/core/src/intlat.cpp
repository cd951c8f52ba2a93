#include "looijenga/intlat.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace looijenga {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("IntMatrix: expected " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Int> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

IntVector IntMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch");
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -c(i, j);
  return c;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Int> v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  IntVector out(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

IntVector operator*(std::span<const Int> v, const IntMatrix& a) {
  if (a.rows() != v.size()) throw DimensionError("vector-matrix product: length mismatch");
  IntVector out(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a(i, j);
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("is_unimodular: matrix is not square");
  Int det = a.determinant();
  return det == 1 || det == -1;
}

IntMatrix adjugate(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("adjugate: matrix is not square");
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      Int cof = minor.determinant();
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("unimodular_inverse: matrix is not square");
  Int det = a.determinant();
  if (det != 1 && det != -1)
    throw InvariantError("unimodular_inverse: det = " + det.get_str() + " is not +-1");
  return det * adjugate(a);
}

IntVector SmithForm::invariants() const {
  const std::size_t k = std::min(D.rows(), D.cols());
  IntVector out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = D(i, i);
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& b) {
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  IntMatrix D = b;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool exhausted = false;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          Int mag = abs(D(i, j));
          if (!pivot || mag < best) {
            pivot = {i, j};
            best = mag;
          }
        }
      if (!pivot) {
        exhausted = true;
        break;
      }
      swap_rows(D, t, pivot->first);
      swap_rows(U, t, pivot->first);
      swap_cols(D, t, pivot->second);
      swap_cols(V, t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row(D, i, t, -q);
        add_row(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col(D, j, t, -q);
        add_col(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      add_row(D, t, *bad_row, Int(1));
      add_row(U, t, *bad_row, Int(1));
    }
    if (exhausted) break;
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

std::size_t wedge_index(std::size_t r, std::size_t i, std::size_t j) {
  if (!(i < j && j < r)) throw DimensionError("wedge_index: need i < j < r");
  // Pairs (0,1..r-1), (1,2..r-1), ...
  return i * r - i * (i + 1) / 2 + (j - i - 1);
}

AltForm::AltForm(std::size_t rank, std::size_t target_rank)
    : rank_(rank), target_rank_(target_rank), values_(wedge_count(rank) * target_rank, Int(0)) {}

AltForm::AltForm(std::size_t rank, std::size_t target_rank, std::vector<Int> values)
    : rank_(rank), target_rank_(target_rank), values_(std::move(values)) {
  if (values_.size() != wedge_count(rank) * target_rank)
    throw DimensionError("AltForm: expected " + std::to_string(wedge_count(rank) * target_rank) +
                         " values, got " + std::to_string(values_.size()));
}

Int AltForm::value(std::size_t k, std::size_t i, std::size_t j) const {
  if (k >= target_rank_ || i >= rank_ || j >= rank_) throw DimensionError("AltForm::value: index out of range");
  if (i == j) return 0;
  const std::size_t w = wedge_count(rank_);
  if (i < j) return values_[k * w + wedge_index(rank_, i, j)];
  return -values_[k * w + wedge_index(rank_, j, i)];
}

void AltForm::set(std::size_t k, std::size_t i, std::size_t j, const Int& v) {
  if (k >= target_rank_ || i >= rank_ || j >= rank_) throw DimensionError("AltForm::set: index out of range");
  if (i == j) throw InvariantError("AltForm::set: alternating form vanishes on e_i ^ e_i");
  const std::size_t w = wedge_count(rank_);
  if (i < j)
    values_[k * w + wedge_index(rank_, i, j)] = v;
  else
    values_[k * w + wedge_index(rank_, j, i)] = -v;
}

bool AltForm::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Int& v) { return v == 0; });
}

AltForm AltForm::operator+(const AltForm& other) const {
  if (rank_ != other.rank_ || target_rank_ != other.target_rank_)
    throw DimensionError("AltForm sum: shape mismatch");
  AltForm out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += other.values_[i];
  return out;
}

AltForm AltForm::operator-(const AltForm& other) const { return *this + (-other); }

AltForm AltForm::operator-() const {
  AltForm out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

AltForm AltForm::pullback(const IntMatrix& lambda2) const {
  const std::size_t w = wedge_count(rank_);
  if (lambda2.rows() != w || lambda2.cols() != w)
    throw DimensionError("AltForm::pullback: induced matrix has wrong size");
  AltForm out(rank_, target_rank_);
  for (std::size_t k = 0; k < target_rank_; ++k)
    for (std::size_t col = 0; col < w; ++col) {
      Int acc = 0;
      for (std::size_t row = 0; row < w; ++row) acc += values_[k * w + row] * lambda2(row, col);
      out.values_[k * w + col] = std::move(acc);
    }
  return out;
}

IntMatrix contract(const AltForm& n, std::span<const Int> t) {
  if (t.size() != n.rank())
    throw DimensionError("contract: vector of length " + std::to_string(t.size()) +
                         " against form of rank " + std::to_string(n.rank()));
  IntMatrix out(n.target_rank(), n.rank());
  for (std::size_t k = 0; k < n.target_rank(); ++k)
    for (std::size_t j = 0; j < n.rank(); ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i < n.rank(); ++i)
        if (t[i] != 0 && i != j) acc += t[i] * n.value(k, i, j);
      out(k, j) = std::move(acc);
    }
  return out;
}

IntMatrix lambda2_induced(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("lambda2_induced: matrix is not square");
  const std::size_t r = a.rows();
  const std::size_t w = wedge_count(r);
  IntMatrix out(w, w);
  // Column (i,j) holds A e_i ^ A e_j expanded on the wedge basis.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const std::size_t col = wedge_index(r, i, j);
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k + 1; l < r; ++l)
          out(wedge_index(r, k, l), col) = a(k, i) * a(l, j) - a(l, i) * a(k, j);
    }
  return out;
}

}  // namespace looijenga
