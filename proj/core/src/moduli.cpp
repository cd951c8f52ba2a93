#include "looijenga/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace looijenga {

namespace {

constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

double to_double(const Int& v) { return v.get_d(); }

void require_scalar(const QuadraticForm& q, const char* where) {
  if (q.target_rank() != 1) throw DimensionError(std::string(where) + ": needs a scalar form (e = 1)");
}

void require_gl2(const IntMatrix& A, const char* where) {
  if (A.rows() != 2 || A.cols() != 2) throw DimensionError(std::string(where) + ": A must be 2x2");
  if (!is_unimodular(A)) throw InvariantError(std::string(where) + ": A is not in GL2(Z)");
}

Complex bilinear_complex(const IntMatrix& m, const ComplexVector& z, const ComplexVector& w) {
  if (z.size() != m.rows() || w.size() != m.rows())
    throw DimensionError("complex form evaluation: vector length mismatch");
  Complex acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) acc += to_double(m(i, j)) * z[i] * w[j];
  return acc;
}

ComplexVector to_complex(std::span<const Int> v) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

}  // namespace

FramedLattice::FramedLattice(Complex t1, Complex t2) : t1_(t1), t2_(t2) {
  const double cross = std::imag(t1 * std::conj(t2));
  const double scale = std::abs(t1) * std::abs(t2);
  if (!(std::abs(cross) > 1e-14 * scale) || scale == 0.0)
    throw InvariantError("framed lattice: t1 and t2 do not span C over R");
}

Complex phi_complex(const QuadraticForm& q, const ComplexVector& z) {
  require_scalar(q, "phi");
  return 0.5 * bilinear_complex(q.hessian(0), z, z);
}

Complex beta_complex(const QuadraticForm& q, const ComplexVector& z, const ComplexVector& w) {
  require_scalar(q, "beta");
  return bilinear_complex(q.hessian(0), z, w);
}

Complex omega_complex(const QuadraticForm& q, const ComplexVector& z, const ComplexVector& w) {
  require_scalar(q, "omega");
  return bilinear_complex(q.extension(0), z, w);
}

Complex mobius(const IntMatrix& A, Complex tau) {
  if (A.rows() != 2 || A.cols() != 2) throw DimensionError("mobius: A must be 2x2");
  const Complex den = to_double(A(1, 0)) * tau + to_double(A(1, 1));
  if (den == Complex(0.0)) throw DegeneracyError("mobius: c tau + d = 0");
  return (to_double(A(0, 0)) * tau + to_double(A(0, 1))) / den;
}

FramedLattice act_gl2(const IntMatrix& A, const FramedLattice& lat) {
  require_gl2(A, "act_gl2");
  return {to_double(A(0, 0)) * lat.t1() + to_double(A(0, 1)) * lat.t2(),
          to_double(A(1, 0)) * lat.t1() + to_double(A(1, 1)) * lat.t2()};
}

CurveTuple act_gl2(const IntMatrix& A, const CurveTuple& p) { return {act_gl2(A, p.lattice), p.y}; }

FramedLattice act_scale(Complex lambda, const FramedLattice& lat) {
  if (lambda == Complex(0.0)) throw InvariantError("act_scale: lambda = 0");
  return {lambda * lat.t1(), lambda * lat.t2()};
}

CurveTuple act_scale(Complex lambda, const CurveTuple& p) {
  CurveTuple out{act_scale(lambda, p.lattice), p.y};
  for (auto& v : out.y) v *= lambda;
  return out;
}

GeometricPoint act_scale(Complex lambda, const GeometricPoint& p) {
  GeometricPoint out{act_scale(lambda, p.lattice), p.y, lambda * p.x1, lambda * p.x2};
  for (auto& v : out.y) v *= lambda;
  return out;
}

CurveTuple act_translate(const IntMatrix& m, const CurveTuple& p) {
  if (m.rows() != p.y.size() || m.cols() != 2) throw DimensionError("act_translate: m must be d x 2");
  CurveTuple out = p;
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.y[i] += to_double(m(i, 0)) * p.lattice.t1() + to_double(m(i, 1)) * p.lattice.t2();
  return out;
}

ReducedTau reduce_tau(Complex tau) {
  if (!(std::abs(tau.imag()) > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
    throw InvariantError("reduce_tau: tau must have nonzero imaginary part");
  IntMatrix A = IntMatrix::identity(2);
  if (tau.imag() < 0) {
    A = IntMatrix{{-1, 0}, {0, 1}};
    tau = -tau;
  }
  const IntMatrix S{{0, -1}, {1, 0}};
  constexpr double kBoundary = 1e-13;
  for (int iter = 0; iter < 100000; ++iter) {
    const double shift = std::floor(tau.real() + 0.5);
    if (shift != 0.0) {
      tau -= shift;
      IntMatrix T = IntMatrix::identity(2);
      T(0, 1) = Int(-shift);
      A = T * A;
    }
    const double r2 = std::norm(tau);
    const bool inside = r2 < 1.0 - kBoundary;
    const bool on_arc_right = std::abs(r2 - 1.0) <= kBoundary && tau.real() > 0.0;
    if (!(inside || on_arc_right)) return {tau, A};
    tau = -1.0 / tau;
    A = S * A;
  }
  throw ConvergenceError("reduce_tau: no convergence", 0.0, 0);
}

std::optional<LatticeIsomorphism> curves_isomorphic(const FramedLattice& lat, const FramedLattice& lat2,
                                                    double tol) {
  const ReducedTau r1 = reduce_tau(lat.tau());
  const ReducedTau r2 = reduce_tau(lat2.tau());
  // Also try the boundary identifications so points straddling an edge match.
  const IntMatrix candidates[] = {IntMatrix::identity(2), IntMatrix{{1, 1}, {0, 1}},
                                  IntMatrix{{1, -1}, {0, 1}}, IntMatrix{{0, -1}, {1, 0}}};
  for (const IntMatrix& M : candidates) {
    const Complex tau2 = mobius(M, r2.tau);
    if (std::abs(tau2 - r1.tau) > tol * std::max(1.0, std::abs(r1.tau))) continue;
    const IntMatrix A2 = M * r2.A;
    const FramedLattice l1 = act_gl2(r1.A, lat);
    const FramedLattice l2 = act_gl2(A2, lat2);
    const Complex lambda = l2.t2() / l1.t2();
    const IntMatrix B = unimodular_inverse(A2) * r1.A;
    const FramedLattice check = act_scale(lambda, act_gl2(B, lat));
    const double scale = std::max(std::abs(lat2.t1()), std::abs(lat2.t2()));
    if (std::abs(check.t1() - lat2.t1()) <= tol * scale && std::abs(check.t2() - lat2.t2()) <= tol * scale)
      return LatticeIsomorphism{B, lambda};
  }
  return std::nullopt;
}

GeometricPoint act_geometric(const QuadraticForm& q, const WreathElement& w, const GeometricPoint& p) {
  require_scalar(q, "act_geometric");
  check_wreath(q, w);
  if (w.rank() != 2) throw DimensionError("act_geometric: needs r = 2");
  if (p.y.size() != q.source_rank()) throw DimensionError("act_geometric: y has wrong length");
  const Complex t1 = p.lattice.t1(), t2 = p.lattice.t2();

  // n
  const double n = to_double(w.ext.n.value(0, 0, 1));
  Complex x1 = p.x1 - n * t2;
  Complex x2 = p.x2 + n * t1;

  // m
  const ComplexVector m1 = to_complex(w.ext.m.column(0));
  const ComplexVector m2 = to_complex(w.ext.m.column(1));
  ComplexVector mt(p.y.size());
  for (std::size_t i = 0; i < mt.size(); ++i) mt[i] = m1[i] * t1 + m2[i] * t2;
  const Complex nx1 = x1 - beta_complex(q, p.y, m1) - omega_complex(q, mt, m1);
  const Complex nx2 = x2 - beta_complex(q, p.y, m2) - omega_complex(q, mt, m2);
  ComplexVector y = p.y;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += mt[i];

  // A: (A t, y, x A^{-1})
  const IntMatrix inv = unimodular_inverse(w.A);
  const Complex ax1 = nx1 * to_double(inv(0, 0)) + nx2 * to_double(inv(1, 0));
  const Complex ax2 = nx1 * to_double(inv(0, 1)) + nx2 * to_double(inv(1, 1));
  return {act_gl2(w.A, p.lattice), std::move(y), ax1, ax2};
}

DescendedPoint descend(const QuadraticForm& q, const GeometricPoint& p, double tol) {
  require_scalar(q, "descend");
  if (p.y.size() != q.source_rank()) throw DimensionError("descend: y has wrong length");
  const Complex t1 = p.lattice.t1(), t2 = p.lattice.t2();
  const Complex a = t1 * p.x1, b = t2 * p.x2, f = phi_complex(q, p.y);
  const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(f)});
  if (std::abs(a + b + f) > tol * scale)
    throw LocusError("descend: t1 x1 + t2 x2 + phi(y) = " + std::to_string(std::abs(a + b + f)) +
                     " is off the locus");
  DescendedPoint out{t1 / t2, p.y, std::exp(kTwoPiI * (p.x1 / t2))};
  for (auto& v : out.z) v /= t2;
  return out;
}

DescendedPoint descended_act(const QuadraticForm& q, const IntMatrix& m, const DescendedPoint& p) {
  require_scalar(q, "descended_act");
  if (m.rows() != q.source_rank() || m.cols() != 2 || p.z.size() != q.source_rank())
    throw DimensionError("descended_act: m must be d x 2 and z of length d");
  if (p.u == Complex(0.0)) throw InvariantError("descended_act: u = 0");
  const ComplexVector m1 = to_complex(m.column(0));
  const ComplexVector m2 = to_complex(m.column(1));
  DescendedPoint out = p;
  for (std::size_t i = 0; i < out.z.size(); ++i) out.z[i] += m1[i] * p.tau + m2[i];
  out.u = p.u * std::exp(kTwoPiI * (-beta_complex(q, p.z, m1) - phi_complex(q, m1) * p.tau));
  return out;
}

DescendedPoint descended_act_aut(const QuadraticForm& q, const IntMatrix& A, const DescendedPoint& p) {
  require_scalar(q, "descended_act");
  require_gl2(A, "descended_act");
  if (p.u == Complex(0.0)) throw InvariantError("descended_act: u = 0");
  const double c = to_double(A(1, 0)), d = to_double(A(1, 1));
  const double det = to_double(A.determinant());
  const Complex j = c * p.tau + d;
  if (j == Complex(0.0)) throw DegeneracyError("descended_act: c tau + d = 0");
  DescendedPoint out{mobius(A, p.tau), p.z, det > 0 ? p.u : 1.0 / p.u};
  for (auto& v : out.z) v /= j;
  out.u *= std::exp(kTwoPiI / det * (c / j * phi_complex(q, p.z)));
  return out;
}

DescendedPoint descended_act(const QuadraticForm& q, const WreathElement& w, const DescendedPoint& p) {
  check_wreath(q, w);
  return descended_act_aut(q, w.A, descended_act(q, w.ext.m, p));
}

bool gamma_B_member(const IntMatrix& B, const IntMatrix& A) {
  if (!B.is_square() || !A.is_square() || A.rows() != B.rows())
    throw DimensionError("gamma_B_member: B and A must be square of the same size");
  const Int det = B.determinant();
  if (det == 0) throw DegeneracyError("gamma_B_member: B is singular");
  if (!is_unimodular(A)) throw InvariantError("gamma_B_member: A is not unimodular");
  // B^{-1} A B = adj(B) A B / det B; its determinant is det A = +-1.
  const IntMatrix scaled = adjugate(B) * A * B;
  for (const Int& v : scaled.entries())
    if (!mpz_divisible_p(v.get_mpz_t(), det.get_mpz_t())) return false;
  return true;
}

IsogenyNormalForm isogeny_normal_form(const IntMatrix& B) {
  if (B.rows() != 2 || B.cols() != 2) throw DimensionError("isogeny_normal_form: B must be 2x2");
  if (B.determinant() == 0) throw DegeneracyError("isogeny_normal_form: B is singular");
  const IntVector d = smith_normal_form(B).invariants();
  return {d[0], d[1] / d[0]};
}

Int isogeny_degree(const IntMatrix& B) {
  if (!B.is_square()) throw DimensionError("isogeny_degree: B must be square");
  const Int det = B.determinant();
  if (det == 0) throw DegeneracyError("isogeny_degree: B is singular");
  return abs(det);
}

std::pair<double, double> lattice_coordinates(Complex p, Complex s1, Complex s2) {
  const double den = std::imag(s1 * std::conj(s2));
  if (den == 0.0) throw DegeneracyError("lattice_coordinates: basis is degenerate");
  double a = std::imag(p * std::conj(s2)) / den;
  double b = std::imag(s1 * std::conj(p)) / den;
  auto frac = [](double v) {
    double f = v - std::floor(v);
    if (f > 1.0 - 1e-9 || f < 1e-9) f = 0.0;
    return f;
  };
  return {frac(a), frac(b)};
}

Complex reduce_mod_lattice(Complex p, Complex s1, Complex s2) {
  const auto [a, b] = lattice_coordinates(p, s1, s2);
  return a * s1 + b * s2;
}

Complex isogeny_map(const IntMatrix& B, const FramedLattice& lat, Complex y) {
  if (B.rows() != 2 || B.cols() != 2) throw DimensionError("isogeny_map: B must be 2x2");
  if (B.determinant() == 0) throw DegeneracyError("isogeny_map: B is singular");
  return reduce_mod_lattice(y, lat.t1(), lat.t2());
}

std::vector<Complex> isogeny_kernel(const IntMatrix& B, const FramedLattice& lat) {
  if (B.rows() != 2 || B.cols() != 2) throw DimensionError("isogeny_kernel: B must be 2x2");
  if (B.determinant() == 0) throw DegeneracyError("isogeny_kernel: B is singular");
  // Row lattice Z^2 B = Z^2 D V^{-1}; classes of Z^2 / Z^2 B are k V^{-1}, 0 <= k_i < d_i.
  const SmithForm snf = smith_normal_form(B);
  const IntMatrix vinv = unimodular_inverse(snf.V);
  const IntVector d = snf.invariants();
  const Complex s1 = to_double(B(0, 0)) * lat.t1() + to_double(B(0, 1)) * lat.t2();
  const Complex s2 = to_double(B(1, 0)) * lat.t1() + to_double(B(1, 1)) * lat.t2();
  std::vector<Complex> out;
  for (unsigned long k0 = 0; k0 < d[0]; ++k0)
    for (unsigned long k1 = 0; k1 < d[1]; ++k1) {
      const IntVector k{Int(k0), Int(k1)};
      const IntVector m = std::span<const Int>(k) * vinv;
      const Complex p = to_double(m[0]) * lat.t1() + to_double(m[1]) * lat.t2();
      out.push_back(reduce_mod_lattice(p, s1, s2));
    }
  return out;
}

}  // namespace looijenga
