// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "looijenga/cohomology.hpp"
#include "looijenga/moduli.hpp"
#include "looijenga/theta.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "suites.hpp"

using namespace looijenga;
using namespace looijenga::cli;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!v.pass) ++failures;
  std::printf("%s  #%-2d %s [%s] (%.3f s)\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), v.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Verdict suites(std::initializer_list<const char*> names, long cases) {
  long total = 0, failed = 0;
  std::string first;
  for (const char* name : names) {
    const SuiteOutcome s = run_suite(name, 20240607, cases);
    for (const auto& c : s.configs) {
      total += c.cases;
      failed += c.failures;
      if (c.failures && first.empty()) first = std::string(name) + " " + c.label + ": " + c.counterexample;
    }
  }
  return {failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " cases" +
                           (first.empty() ? "" : "; " + first)};
}

const QuadraticForm A1 = QuadraticForm::scalar(IntMatrix{{2}});
const QuadraticForm A2 = QuadraticForm::scalar(IntMatrix{{2, -1}, {-1, 2}});
const QuadraticForm D2 = QuadraticForm::scalar(IntMatrix{{2, 0}, {0, 2}});

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

IntMatrix random_sl2(Rng& rng) {
  IntMatrix A = random_unimodular(rng, 2, 3);
  if (A.determinant() != 1) A = A * IntMatrix{{0, 1}, {1, 0}};
  return A;
}

GeometricPoint locus_point(Rng& rng, const QuadraticForm& q) {
  const Complex tau = random_tau(rng, 0.6, 2.0);
  const Complex t2(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0));
  const FramedLattice lat(tau * t2, t2);
  ComplexVector y(q.source_rank());
  for (auto& v : y) v = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const Complex x1(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return {lat, y, x1, (-phi_complex(q, y) - lat.t1() * x1) / lat.t2()};
}

}  // namespace

int main() {
  report(1, "group and action axioms, (r,d,e) in {(2,1,1),(2,2,1),(3,2,2)}, < 5 s", [] {
    const auto t = Clock::now();
    Verdict v = suites({"group-axioms", "action-axioms"}, 1000);
    const double s = seconds_since(t);
    v.detail += "; " + std::to_string(s) + " s";
    v.pass = v.pass && s < 5.0;
    return v;
  });

  report(2, "phi# invariance under wreath actions, exact", [] { return suites({"phi-sharp-invariance"}, 1000); });

  report(3, "rank-2 coordinate formulas equal the general action, exact",
         [] { return suites({"specialize"}, 1000); });

  report(4, "cocycle defect is the integer constant -beta(m2', m1)", [] { return suites({"cocycle"}, 500); });

  report(5, "Chern form equals the four-term expression", [] { return suites({"chern"}, 500); });

  report(6, "theta translation law, residual < 1e-9, A1 and A2, < 10 s", [] {
    const auto t = Clock::now();
    Rng rng(6);
    double worst = 0;
    int cases = 0;
    for (const QuadraticForm* q : {&A1, &A2}) {
      const auto reps = dual_coset_reps(*q);
      for (int k = 0; k < 50; ++k, ++cases) {
        const Complex tau = random_tau(rng, 0.8, 2.0);
        const ThetaContext ctx(*q, tau);
        const DualCosetRep& u = reps[rng.uniform_int(0, static_cast<long>(reps.size()) - 1)];
        const std::size_t d = q->source_rank();
        const ComplexVector z = random_z(rng, tau, d);
        worst = std::max(worst, translation_check(ctx, u, z, random_vector(rng, d, 3), random_vector(rng, d, 3)));
      }
    }
    const double s = seconds_since(t);
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d cases, max residual %.3g, %.3f s", cases, worst, s);
    return Verdict{worst < 1e-9 && s < 10.0, buf};
  });

  report(7, "det c = dual cosets = theta Gram rank for A1, A2, diag(2,2)", [] {
    Rng rng(7);
    bool ok = true;
    std::string detail;
    for (const auto& [name, q, want] : {std::tuple{"A1", &A1, 2L}, std::tuple{"A2", &A2, 3L},
                                        std::tuple{"diag(2,2)", &D2, 4L}}) {
      const long det = section_dimension(*q).get_si();
      const long cosets = static_cast<long>(dual_coset_reps(*q).size());
      const Complex tau = random_tau(rng, 0.8, 1.5);
      const ThetaContext ctx(*q, tau);
      std::vector<ComplexVector> pts;
      for (int k = 0; k < 12; ++k) pts.push_back(random_z(rng, tau, q->source_rank()));
      const long rank = static_cast<long>(theta_basis_gram_rank(ctx, pts));
      ok = ok && det == want && cosets == want && rank == want;
      detail += std::string(detail.empty() ? "" : "; ") + name + ": " + std::to_string(det) + "/" +
                std::to_string(cosets) + "/" + std::to_string(rank);
    }
    return Verdict{ok, detail};
  });

  report(8, "theta_0 for A1 matches the Jacobi series, rel. err < 1e-10", [] {
    Rng rng(8);
    const DualCosetRep u0 = dual_coset_reps(A1)[0];
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const Complex tau = random_tau(rng, 0.5, 2.0);
      const Complex z = random_z(rng, tau, 1)[0];
      const Complex got = theta_eval(ThetaContext(A1, tau), u0, {z});
      const Complex want = oracle::jacobi_theta_a1(tau, z);
      worst = std::max(worst, std::abs(got - want) / std::abs(want));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "20 points, max rel. err %.3g", worst);
    return Verdict{worst < 1e-10, buf};
  });

  report(9, "Hilbert functions 1,5,14,30,55 and 1,4,9,16,25, < 5 s", [] {
    const auto t = Clock::now();
    auto form = [](std::size_t d) {
      IntMatrix c(d, d);
      for (std::size_t i = 0; i < d; ++i) c(i, i) = 2;
      return QuadraticForm(d, {c});
    };
    const auto h1 = hilbert_function(presentation(form(1), 2), 8);
    const auto h0 = hilbert_function(presentation(form(0), 2), 8);
    const std::vector<unsigned> quad = {2};
    const auto s1 = complete_intersection_series(quad, 5, 4);
    bool ok = h1 == std::vector<std::size_t>{1, 5, 14, 30, 55} && h0 == std::vector<std::size_t>{1, 4, 9, 16, 25};
    for (std::size_t k = 0; k < h1.size(); ++k) ok = ok && Int(static_cast<unsigned long>(h1[k])) == s1[k];
    for (std::size_t k = 0; k < h1.size(); ++k)
      ok = ok && static_cast<long>(h1[k]) == oracle::one_quadric_dim(5, static_cast<long>(k));
    const double s = seconds_since(t);
    std::string detail;
    for (auto v : h1) detail += std::to_string(v) + ",";
    detail.back() = ';';
    for (auto v : h0) detail += " " + std::to_string(v);
    detail += "; " + std::to_string(s) + " s";
    return Verdict{ok && s < 5.0, detail};
  });

  report(10, "ideal invariance, 100 wreath elements per configuration", [] {
    return suites({"ideal-invariance"}, 100);
  });

  report(11, "Gamma_B = Gamma_0(N), normal form (1,6), kernel sizes = |det B|", [] {
    Rng rng(11);
    long mismatches = 0, kernels = 0, bad_kernels = 0;
    for (long N : {2L, 3L, 5L}) {
      const IntMatrix B{{1, 0}, {0, N}};
      for (int k = 0; k < 200; ++k) {
        const IntMatrix A = random_unimodular(rng, 2);
        if (gamma_B_member(B, A) != (A(1, 0) % N == 0)) ++mismatches;
      }
    }
    const auto nf = isogeny_normal_form(IntMatrix{{2, 1}, {0, 3}});
    while (kernels < 50) {
      const IntMatrix B = random_matrix(rng, 2, 2, 4);
      const Int det = abs(B.determinant());
      if (det == 0 || det > 12) continue;
      ++kernels;
      const FramedLattice lat(random_tau(rng, 0.8, 1.5), 1.0);
      if (Int(static_cast<unsigned long>(isogeny_kernel(B, lat).size())) != det) ++bad_kernels;
    }
    const bool ok = mismatches == 0 && nf.M == 1 && nf.N == 6 && bad_kernels == 0;
    return Verdict{ok, "600 memberships, " + std::to_string(mismatches) + " mismatches; normal form (" +
                           nf.M.get_str() + "," + nf.N.get_str() + "); " + std::to_string(kernels - bad_kernels) +
                           "/" + std::to_string(kernels) + " kernels"};
  });

  report(12, "descent commutes with translations and SL2, within 1e-9", [] {
    Rng rng(12);
    int ok_cases = 0;
    for (int k = 0; k < 100; ++k) {
      const QuadraticForm& q = k % 4 < 2 ? A1 : A2;
      const GeometricPoint p = locus_point(rng, q);
      WreathElement w = WreathElement::identity(2, q.source_rank(), 1);
      if (k % 2 == 0)
        w.ext.m = random_matrix(rng, q.source_rank(), 2, 3);
      else
        w.A = random_sl2(rng);
      const DescendedPoint up = descend(q, act_geometric(q, w, p));
      const DescendedPoint down = descended_act(q, w, descend(q, p));
      bool ok = near(up.tau, down.tau, 1e-9) && near(up.u, down.u, 1e-9);
      for (std::size_t i = 0; i < up.z.size(); ++i) ok = ok && near(up.z[i], down.z[i], 1e-9);
      ok_cases += ok;
    }
    return Verdict{ok_cases == 100, std::to_string(ok_cases) + "/100 cases"};
  });

  report(13, "orbit presentation y-(n1/N)t1-(n2/N)t2 and bijective index action, N in {1,2,3}", [] {
    Rng rng(13);
    bool ok = true;
    for (long N : {1L, 2L, 3L}) {
      for (long n1 = -N; n1 <= N; ++n1)
        for (long n2 = -N; n2 <= N; ++n2) {
          const Polynomial rel = orbit_module(N, n1, n2).relations.at(0);
          Rat a(-n1, N), b(-n2, N);
          a.canonicalize();
          b.canonicalize();
          Polynomial want = Polynomial::variable(3, 2);
          want += Polynomial::variable(3, 0) * a;
          want += Polynomial::variable(3, 1) * b;
          ok = ok && rel == want;
        }
      for (int k = 0; k < 20; ++k) ok = ok && orbit_equivariance_check(N, random_wreath(rng, 2, 1, 1)).bijective;
    }
    WreathElement shift = WreathElement::identity(2, 1, 1);
    shift.ext.m = IntMatrix{{1, 0}};
    for (const auto& [n, image] : orbit_equivariance_check(2, shift).entries)
      ok = ok && image == std::make_pair(n.first - 2, n.second);
    return Verdict{ok, "3 x 20 random elements + shift example"};
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
