#include "looijenga/wreath.hpp"

#include <string>

namespace looijenga {

ExtElement ExtElement::identity(std::size_t r, std::size_t d, std::size_t e) {
  return {IntMatrix(d, r), AltForm(r, e)};
}

WreathElement WreathElement::identity(std::size_t r, std::size_t d, std::size_t e) {
  return {IntMatrix::identity(r), ExtElement::identity(r, d, e)};
}

WreathElement WreathElement::from_aut(const IntMatrix& A, std::size_t d, std::size_t e) {
  if (!A.is_square()) throw DimensionError("automorphism must be square");
  return {A, ExtElement::identity(A.rows(), d, e)};
}

WreathElement WreathElement::from_ext(ExtElement g) {
  const std::size_t r = g.rank();
  return {IntMatrix::identity(r), std::move(g)};
}

void check_ext(const QuadraticForm& q, const ExtElement& g) {
  if (g.m.rows() != q.source_rank())
    throw DimensionError("ext element: m has " + std::to_string(g.m.rows()) + " rows, expected d = " +
                         std::to_string(q.source_rank()));
  if (g.n.rank() != g.m.cols() || g.n.target_rank() != q.target_rank())
    throw DimensionError("ext element: n has shape (r=" + std::to_string(g.n.rank()) + ", e=" +
                         std::to_string(g.n.target_rank()) + ")");
}

void check_wreath(const QuadraticForm& q, const WreathElement& w) {
  check_ext(q, w.ext);
  if (!w.A.is_square() || w.A.rows() != w.ext.rank())
    throw DimensionError("wreath element: A must be r x r with r = " + std::to_string(w.ext.rank()));
  if (!is_unimodular(w.A)) throw InvariantError("wreath element: A is not unimodular");
}

void check_pi2(const QuadraticForm& q, const Pi2Element& p, std::size_t r) {
  if (p.t.size() != r || p.y.size() != q.source_rank() || p.x.rows() != q.target_rank() ||
      p.x.cols() != r)
    throw DimensionError("pi_2 element does not match (r, d, e) = (" + std::to_string(r) + ", " +
                         std::to_string(q.source_rank()) + ", " + std::to_string(q.target_rank()) + ")");
}

ExtElement ext_mul(const QuadraticForm& q, const ExtElement& g, const ExtElement& h) {
  check_ext(q, g);
  check_ext(q, h);
  if (g.rank() != h.rank()) throw DimensionError("ext_mul: ranks differ");
  return {g.m + h.m, omega_wedge(q, g.m, h.m) + g.n + h.n};
}

ExtElement ext_inv(const QuadraticForm& q, const ExtElement& g) {
  check_ext(q, g);
  // (m, n)(-m, n'') = (0, -omega(m (x) m) + n + n'') forces n'' = omega(m (x) m) - n.
  return {-g.m, omega_wedge(q, g.m, g.m) - g.n};
}

ExtElement aut_on_ext(const QuadraticForm& q, const IntMatrix& A, const ExtElement& g) {
  check_ext(q, g);
  if (!A.is_square() || A.rows() != g.rank()) throw DimensionError("aut_on_ext: A must be r x r");
  if (!is_unimodular(A)) throw InvariantError("aut_on_ext: A is not unimodular");
  const IntMatrix inv = unimodular_inverse(A);
  return {g.m * inv, g.n.pullback(lambda2_induced(inv))};
}

WreathElement wreath_mul(const QuadraticForm& q, const WreathElement& w, const WreathElement& w2) {
  check_wreath(q, w);
  check_wreath(q, w2);
  if (w.rank() != w2.rank()) throw DimensionError("wreath_mul: ranks differ");
  const IntMatrix inv2 = unimodular_inverse(w2.A);
  return {w.A * w2.A, ext_mul(q, aut_on_ext(q, inv2, w.ext), w2.ext)};
}

WreathElement wreath_inv(const QuadraticForm& q, const WreathElement& w) {
  check_wreath(q, w);
  return {unimodular_inverse(w.A), ext_inv(q, aut_on_ext(q, w.A, w.ext))};
}

Pi2Element act_pi2(const QuadraticForm& q, const ExtElement& g, const Pi2Element& p) {
  check_ext(q, g);
  const std::size_t r = g.rank();
  check_pi2(q, p, r);
  const std::size_t e = q.target_rank();

  const IntVector mt = g.m * std::span<const Int>(p.t);
  Pi2Element out{p.t, p.y, p.x};
  for (std::size_t i = 0; i < mt.size(); ++i) out.y[i] += mt[i];

  const IntMatrix n_t = contract(g.n, p.t);
  for (std::size_t j = 0; j < r; ++j) {
    const IntVector mj = g.m.column(j);
    const IntVector b = eval_beta(q, p.y, mj);
    const IntVector w = eval_omega(q, mt, mj);
    for (std::size_t k = 0; k < e; ++k) out.x(k, j) += n_t(k, j) - b[k] - w[k];
  }
  return out;
}

Pi2Element act_pi2(const QuadraticForm& q, const IntMatrix& A, const Pi2Element& p) {
  if (!A.is_square()) throw DimensionError("act_pi2: A must be square");
  check_pi2(q, p, A.rows());
  if (!is_unimodular(A)) throw InvariantError("act_pi2: A is not unimodular");
  return {A * std::span<const Int>(p.t), p.y, p.x * unimodular_inverse(A)};
}

Pi2Element act_pi2(const QuadraticForm& q, const WreathElement& w, const Pi2Element& p) {
  check_wreath(q, w);
  return act_pi2(q, w.A, act_pi2(q, w.ext, p));
}

Pi3Element act_pi3(const WreathElement&, const Pi3Element& c) { return c; }

Pi3Element quad_invariant_sharp(const QuadraticForm& q, const Pi2Element& p) {
  check_pi2(q, p, p.t.size());
  IntVector v = eval_phi(q, p.y);
  const IntVector xt = p.x * std::span<const Int>(p.t);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += xt[k];
  return {std::move(v)};
}

Pi2Element specialize_rank2(const QuadraticForm& q, const WreathElement& w, const Pi2Element& p) {
  if (w.rank() != 2 || q.target_rank() != 1)
    throw DimensionError("specialize_rank2: requires r = 2 and e = 1");
  check_wreath(q, w);
  check_pi2(q, p, 2);

  Int t1 = p.t[0], t2 = p.t[1];
  IntVector y = p.y;
  Int x1 = p.x(0, 0), x2 = p.x(0, 1);

  // n . (t, y, x) = (t, y, x1 - n t2, x2 + n t1)
  const Int n = w.ext.n.value(0, 0, 1);
  x1 -= n * t2;
  x2 += n * t1;

  // (m1, m2) . (t, y, x)
  const IntVector m1 = w.ext.m.column(0);
  const IntVector m2 = w.ext.m.column(1);
  IntVector shift(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) shift[i] = m1[i] * t1 + m2[i] * t2;
  const Int nx1 = x1 - eval_beta(q, y, m1)[0] - eval_omega(q, shift, m1)[0];
  const Int nx2 = x2 - eval_beta(q, y, m2)[0] - eval_omega(q, shift, m2)[0];
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift[i];
  x1 = nx1;
  x2 = nx2;

  // A . (t, y, x)
  const IntMatrix& A = w.A;
  const Int a = A(0, 0), b = A(0, 1), c = A(1, 0), dd = A(1, 1);
  const Int det = a * dd - b * c;
  Int nt1 = a * t1 + b * t2;
  Int nt2 = c * t1 + dd * t2;
  Int ax1 = dd * x1 - c * x2;
  Int ax2 = -b * x1 + a * x2;
  mpz_divexact(ax1.get_mpz_t(), ax1.get_mpz_t(), det.get_mpz_t());
  mpz_divexact(ax2.get_mpz_t(), ax2.get_mpz_t(), det.get_mpz_t());

  IntMatrix x(1, 2);
  x(0, 0) = ax1;
  x(0, 1) = ax2;
  return {{nt1, nt2}, std::move(y), std::move(x)};
}

AltForm commutator_cocycle(const QuadraticForm& q, const IntMatrix& m, const IntMatrix& m2) {
  return omega_wedge(q, m, m2) - omega_wedge(q, m2, m);
}

}  // namespace looijenga
