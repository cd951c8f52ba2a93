#include "looijenga/theta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include <Eigen/Dense>

namespace looijenga {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kTwoPiI{0.0, 2.0 * kPi};

void require_dims(const QuadraticForm& q, const LatticeVector& u) {
  if (u.m1.size() != q.source_rank() || u.m2.size() != q.source_rank())
    throw DimensionError("lattice vector must have components of length d");
}

void require_scalar(const QuadraticForm& q, const char* where) {
  if (q.target_rank() != 1) throw DimensionError(std::string(where) + ": needs a scalar form (e = 1)");
}

std::vector<double> hessian_doubles(const QuadraticForm& q) {
  const IntMatrix& c = q.hessian(0);
  std::vector<double> out(c.rows() * c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) out[i * c.cols() + j] = c(i, j).get_d();
  return out;
}

// Neumaier compensated sum of doubles.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Points of the shell |v|_inf == k in lexicographic order.
std::vector<std::vector<int>> shell_points(std::size_t d, int k) {
  std::vector<std::vector<int>> out;
  if (d == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> v(d, -k);
  for (;;) {
    int norm = 0;
    for (int x : v) norm = std::max(norm, std::abs(x));
    if (norm == k) out.push_back(v);
    std::size_t pos = d;
    for (;;) {
      if (pos == 0) return out;
      --pos;
      if (v[pos] < k) {
        ++v[pos];
        break;
      }
      v[pos] = -k;
    }
  }
}

double shell_size(std::size_t d, int k) {
  if (k == 0) return 1.0;
  return std::pow(2.0 * k + 1.0, static_cast<double>(d)) - std::pow(2.0 * k - 1.0, static_cast<double>(d));
}

std::vector<double> characteristic(const ThetaContext& ctx, const DualCosetRep& u) {
  const IntMatrix& c = ctx.form().hessian(0);
  const std::size_t d = c.rows();
  if (u.u.size() != d) throw DimensionError("theta: characteristic has wrong length");
  for (std::size_t i = 0; i < d; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < d; ++j) acc += c(i, j) * u.u[j];
    if (acc.get_den() != 1)
      throw InvariantError("theta: characteristic u is not in the dual lattice (beta(u, B) not integral)");
  }
  std::vector<double> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = u.u[i].get_d();
  return out;
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(theta_worker_count(), n / 2048 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    pool.emplace_back([&fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
}

}  // namespace

LinearForm LinearForm::operator+(const LinearForm& o) const {
  if (z.size() != o.z.size()) throw DimensionError("LinearForm sum: length mismatch");
  LinearForm out{tau + o.tau, z, constant + o.constant};
  for (std::size_t i = 0; i < z.size(); ++i) out.z[i] += o.z[i];
  return out;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
  if (z.size() != o.z.size()) throw DimensionError("LinearForm difference: length mismatch");
  LinearForm out{tau - o.tau, z, constant - o.constant};
  for (std::size_t i = 0; i < z.size(); ++i) out.z[i] -= o.z[i];
  return out;
}

bool LinearForm::is_constant() const {
  return tau == 0 && std::all_of(z.begin(), z.end(), [](const Rat& v) { return v == 0; });
}

Complex cocycle_f(const QuadraticForm& q, const LatticeVector& u, Complex tau, const ComplexVector& z) {
  require_scalar(q, "cocycle_f");
  require_dims(q, u);
  ComplexVector m1(u.m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) m1[i] = u.m1[i].get_d();
  return -beta_complex(q, z, m1) - 0.5 * eval_beta(q, u.m1, u.m1)[0].get_d() * tau;
}

LinearForm cocycle_f_symbolic(const QuadraticForm& q, const LatticeVector& u, const LatticeVector& shift) {
  require_scalar(q, "cocycle_f");
  require_dims(q, u);
  require_dims(q, shift);
  const IntMatrix& c = q.hessian(0);
  const std::size_t d = q.source_rank();
  // -beta(z + s1 tau + s2, m1) - 1/2 beta(m1, m1) tau
  LinearForm f{Rat(0), RatVector(d, Rat(0)), Rat(0)};
  for (std::size_t i = 0; i < d; ++i) {
    Int cm = 0;
    for (std::size_t j = 0; j < d; ++j) cm += c(i, j) * u.m1[j];
    f.z[i] = -cm;
  }
  Rat half(eval_beta(q, u.m1, u.m1)[0], 2);
  half.canonicalize();
  f.tau = Rat(-eval_beta(q, shift.m1, u.m1)[0]) - half;
  f.constant = -eval_beta(q, shift.m2, u.m1)[0];
  return f;
}

namespace {

LatticeVector zero_vector(std::size_t d) { return {IntVector(d, Int(0)), IntVector(d, Int(0))}; }

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector out = a;
  for (std::size_t i = 0; i < a.m1.size(); ++i) {
    out.m1[i] += b.m1[i];
    out.m2[i] += b.m2[i];
  }
  return out;
}

}  // namespace

LinearForm cocycle_defect(const QuadraticForm& q, const LatticeVector& u, const LatticeVector& u2) {
  const LatticeVector zero = zero_vector(q.source_rank());
  return cocycle_f_symbolic(q, u, u2) + cocycle_f_symbolic(q, u2, zero) -
         cocycle_f_symbolic(q, add(u, u2), zero);
}

Int chern_form(const QuadraticForm& q, const LatticeVector& u, const LatticeVector& u2) {
  require_scalar(q, "chern_form");
  require_dims(q, u);
  require_dims(q, u2);
  return eval_beta(q, u.m1, u2.m2)[0] - eval_beta(q, u.m2, u2.m1)[0];
}

double chern_form_real(const QuadraticForm& q, Complex tau, const ComplexVector& x, const ComplexVector& x2) {
  require_scalar(q, "chern_form_real");
  const std::size_t d = q.source_rank();
  if (x.size() != d || x2.size() != d) throw DimensionError("chern_form_real: length mismatch");
  if (tau.imag() == 0.0) throw InvariantError("chern_form_real: tau is real");
  const std::vector<double> c = hessian_doubles(q);
  // x = a tau + b with a, b in R^d
  auto split = [&](const ComplexVector& v) {
    std::vector<double> a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = v[i].imag() / tau.imag();
      b[i] = v[i].real() - a[i] * tau.real();
    }
    return std::pair{a, b};
  };
  const auto [a1, b1] = split(x);
  const auto [a2, b2] = split(x2);
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) acc += c[i * d + j] * (a1[i] * b2[j] - b1[i] * a2[j]);
  return acc;
}

Complex hermitian_form(const QuadraticForm& q, Complex tau, const ComplexVector& x, const ComplexVector& y) {
  require_scalar(q, "hermitian_form");
  if (!(tau.imag() > 0.0)) throw InvariantError("hermitian_form: needs Im tau > 0");
  const std::size_t d = q.source_rank();
  if (x.size() != d || y.size() != d) throw DimensionError("hermitian_form: length mismatch");
  const std::vector<double> c = hessian_doubles(q);
  Complex acc = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) acc += c[i * d + j] * x[i] * std::conj(y[j]);
  return acc / tau.imag();
}

double hermitian_norm(const QuadraticForm& q, const ComplexVector& x, Complex tau) {
  return hermitian_form(q, tau, x, x).real();
}

double certified_lambda_min(const IntMatrix& c) {
  if (!is_positive_definite(c)) throw InvariantError("certified_lambda_min: form is not positive definite");
  const std::size_t d = c.rows();
  Eigen::MatrixXd m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = c(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  double lambda = es.eigenvalues().minCoeff() * (1.0 - 1e-6);
  if (!(lambda > 0.0)) lambda = 1.0 / (1.0 + static_cast<double>(d) * m.cwiseAbs().maxCoeff());
  for (int attempt = 0; attempt < 1100; ++attempt) {
    std::vector<Rat> shifted(c.entries().begin(), c.entries().end());
    const Rat l(lambda);  // exact binary value of the double
    for (std::size_t i = 0; i < d; ++i) shifted[i * d + i] -= l;
    if (is_positive_definite(shifted, d)) return lambda;
    lambda *= 0.5;
  }
  throw DegeneracyError("certified_lambda_min: could not certify a positive eigenvalue bound");
}

ThetaContext::ThetaContext(QuadraticForm form, Complex tau, double tol, int max_radius)
    : form_(std::move(form)), tau_(tau), tol_(tol), max_radius_(max_radius) {
  if (form_.target_rank() != 1) throw DimensionError("ThetaContext: needs a scalar form (e = 1)");
  if (!is_positive_definite(form_)) throw InvariantError("ThetaContext: form is not positive definite");
  if (!(tau_.imag() > 0.0)) throw InvariantError("ThetaContext: needs Im tau > 0");
  if (!(tol_ > 0.0)) throw InvariantError("ThetaContext: tolerance must be positive");
  if (max_radius_ < 0) throw InvariantError("ThetaContext: max_radius must be >= 0");
  lambda_min_ = certified_lambda_min(form_.hessian(0));
}

double theta_tail_bound(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z, int radius) {
  const std::vector<double> uu = characteristic(ctx, u);
  const std::size_t d = uu.size();
  if (z.size() != d) throw DimensionError("theta: z has wrong length");
  const std::vector<double> c = hessian_doubles(ctx.form());

  double unorm = 0.0;
  for (double v : uu) unorm = std::max(unorm, std::abs(v));
  // |exp(-2 pi i beta(z, w))| <= exp(2 pi |c Im z| |w|)
  double b2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += c[i * d + j] * z[j].imag();
    b2 += row * row;
  }
  const double b = std::sqrt(b2);
  const double a = kPi * ctx.lambda_lower_bound() * ctx.tau().imag();
  const double peak = b / (ctx.lambda_lower_bound() * ctx.tau().imag());

  const double rho_first = static_cast<double>(radius + 1) - unorm;
  if (rho_first <= 0.0 || rho_first < peak) return std::numeric_limits<double>::infinity();

  double total = 0.0;
  for (int k = radius + 1; k < radius + 100000; ++k) {
    const double rho = static_cast<double>(k) - unorm;
    const double term = shell_size(d, k) * std::exp(-a * rho * rho + 2.0 * kPi * b * rho);
    total += term;
    if (term == 0.0 || (term < total * 1e-18 && k > radius + 2)) break;
  }
  return total;
}

int theta_radius(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z) {
  for (int r = 0; r <= ctx.max_radius(); ++r)
    if (theta_tail_bound(ctx, u, z, r) < ctx.tol()) return r;
  const double achieved = theta_tail_bound(ctx, u, z, ctx.max_radius());
  throw ConvergenceError("theta: truncation cap " + std::to_string(ctx.max_radius()) +
                             " reached with tail bound " + std::to_string(achieved) + " > tol",
                         achieved, ctx.max_radius());
}

Complex theta_partial_sum(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z, int radius) {
  const std::vector<double> uu = characteristic(ctx, u);
  const std::size_t d = uu.size();
  if (z.size() != d) throw DimensionError("theta: z has wrong length");
  const std::vector<double> c = hessian_doubles(ctx.form());
  const Complex tau = ctx.tau();

  CompensatedSum re, im;
  for (int k = 0; k <= radius; ++k) {
    const auto pts = shell_points(d, k);
    std::vector<Complex> terms(pts.size());
    parallel_for(pts.size(), [&](std::size_t idx) {
      std::vector<double> w(d);
      for (std::size_t i = 0; i < d; ++i) w[i] = uu[i] + pts[idx][i];
      Complex beta = 0.0;
      double phi = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        double cw = 0.0;
        for (std::size_t j = 0; j < d; ++j) cw += c[i * d + j] * w[j];
        beta += z[i] * cw;
        phi += 0.5 * w[i] * cw;
      }
      terms[idx] = std::exp(kTwoPiI * (-beta + phi * tau));
    });
    for (const Complex& t : terms) {
      re.add(t.real());
      im.add(t.imag());
    }
  }
  return {re.value(), im.value()};
}

Complex theta_eval(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z) {
  return theta_partial_sum(ctx, u, z, theta_radius(ctx, u, z));
}

double translation_check(const ThetaContext& ctx, const DualCosetRep& u, const ComplexVector& z,
                         const IntVector& m1, const IntVector& m2) {
  const QuadraticForm& q = ctx.form();
  const std::size_t d = q.source_rank();
  if (z.size() != d || m1.size() != d || m2.size() != d)
    throw DimensionError("translation_check: length mismatch");
  ComplexVector shifted = z;
  ComplexVector m1c(d);
  for (std::size_t i = 0; i < d; ++i) {
    m1c[i] = m1[i].get_d();
    shifted[i] += m1[i].get_d() * ctx.tau() + m2[i].get_d();
  }
  const Complex lhs = theta_eval(ctx, u, shifted);
  const Complex factor =
      std::exp(kTwoPiI * (-beta_complex(q, z, m1c) - eval_phi(q, m1)[0].get_d() * ctx.tau()));
  const Complex rhs = theta_eval(ctx, u, z) * factor;
  const double denom = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
  return std::abs(lhs - rhs) / denom;
}

Complex modular_factor(const QuadraticForm& q, const IntMatrix& A, Complex tau, const ComplexVector& z) {
  require_scalar(q, "modular_factor");
  if (A.rows() != 2 || A.cols() != 2) throw DimensionError("modular_factor: A must be 2x2");
  if (A.determinant() != 1) throw InvariantError("modular_factor: A must lie in SL2(Z)");
  if (!(tau.imag() > 0.0)) throw InvariantError("modular_factor: needs Im tau > 0");
  const double c = A(1, 0).get_d(), d = A(1, 1).get_d();
  if (c == 0.0) return 1.0;
  return std::exp(kTwoPiI * (c / (c * tau + d) * phi_complex(q, z)));
}

Int section_dimension(const QuadraticForm& q) {
  require_scalar(q, "section_dimension");
  if (!is_positive_definite(q)) throw InvariantError("section_dimension: form is not positive definite");
  return q.hessian(0).determinant();
}

std::size_t theta_basis_gram_rank(const ThetaContext& ctx, const std::vector<ComplexVector>& sample_points) {
  const auto reps = dual_coset_reps(ctx.form());
  if (sample_points.empty()) return 0;
  Eigen::MatrixXcd m(reps.size(), sample_points.size());
  for (std::size_t j = 0; j < sample_points.size(); ++j) {
    for (std::size_t i = 0; i < reps.size(); ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = theta_eval(ctx, reps[i], sample_points[j]);
    // Column scaling does not change the rank but evens out magnitudes.
    const double norm = m.col(static_cast<Eigen::Index>(j)).norm();
    if (norm > 0.0) m.col(static_cast<Eigen::Index>(j)) /= norm;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-6 * sv(0)) ++rank;
  return rank;
}

unsigned theta_worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LOOIJENGA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

}  // namespace looijenga
