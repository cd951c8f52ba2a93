#include "suites.hpp"

#include <functional>
#include <stdexcept>

#include "looijenga/cohomology.hpp"
#include "looijenga/json_io.hpp"
#include "looijenga/theta.hpp"
#include "looijenga/wreath.hpp"
#include "rng.hpp"

namespace looijenga::cli {

namespace {

struct Shape {
  std::size_t r, d, e;
  std::string label() const {
    return "(r,d,e)=(" + std::to_string(r) + "," + std::to_string(d) + "," + std::to_string(e) + ")";
  }
};

const std::vector<Shape> kAlgebraShapes = {{2, 1, 1}, {2, 2, 1}, {3, 2, 2}};
const std::vector<Shape> kRank2Shapes = {{2, 1, 1}, {2, 2, 1}};

Json pi2_json(const Pi2Element& p) {
  return Json{{"t", to_json(p.t)}, {"y", to_json(p.y)}, {"x", to_json(p.x)}};
}

Json ext_json(const ExtElement& g) { return Json{{"m", to_json(g.m)}, {"n", to_json(g.n)}}; }

Json lattice_vector_json(const LatticeVector& u) {
  return Json{{"m1", to_json(u.m1)}, {"m2", to_json(u.m2)}};
}

// Runs `cases` trials; a trial returns an empty Json on success, the
// counterexample otherwise.
ConfigOutcome run_config(const std::string& label, long cases, const std::function<Json()>& trial) {
  ConfigOutcome out{label, cases, 0, {}};
  for (long i = 0; i < cases; ++i) {
    Json bad = trial();
    if (!bad.is_null()) {
      if (out.failures == 0) out.counterexample = bad.dump();
      ++out.failures;
    }
  }
  return out;
}

SuiteOutcome group_axioms(Rng& rng, long cases) {
  SuiteOutcome s{"group-axioms", {}};
  for (const Shape& sh : kAlgebraShapes)
    s.configs.push_back(run_config(sh.label(), cases, [&]() -> Json {
      const QuadraticForm q = random_form(rng, sh.d, sh.e);
      const ExtElement a = random_ext(rng, sh.r, sh.d, sh.e), b = random_ext(rng, sh.r, sh.d, sh.e),
                       c = random_ext(rng, sh.r, sh.d, sh.e);
      const ExtElement one = ExtElement::identity(sh.r, sh.d, sh.e);
      const WreathElement u = random_wreath(rng, sh.r, sh.d, sh.e), v = random_wreath(rng, sh.r, sh.d, sh.e),
                          w = random_wreath(rng, sh.r, sh.d, sh.e);
      const WreathElement id = WreathElement::identity(sh.r, sh.d, sh.e);
      const IntMatrix A = random_unimodular(rng, sh.r);

      std::string failed;
      if (ext_mul(q, ext_mul(q, a, b), c) != ext_mul(q, a, ext_mul(q, b, c))) failed = "ext associativity";
      else if (ext_mul(q, a, one) != a || ext_mul(q, one, a) != a) failed = "ext identity";
      else if (ext_mul(q, a, ext_inv(q, a)) != one || ext_mul(q, ext_inv(q, a), a) != one) failed = "ext inverse";
      else if (aut_on_ext(q, A, ext_mul(q, a, b)) != ext_mul(q, aut_on_ext(q, A, a), aut_on_ext(q, A, b)))
        failed = "Aut acts by automorphisms";
      else if (wreath_mul(q, wreath_mul(q, u, v), w) != wreath_mul(q, u, wreath_mul(q, v, w)))
        failed = "wreath associativity";
      else if (wreath_mul(q, u, id) != u || wreath_mul(q, id, u) != u) failed = "wreath identity";
      else if (wreath_mul(q, u, wreath_inv(q, u)) != id || wreath_mul(q, wreath_inv(q, u), u) != id)
        failed = "wreath inverse";
      else if (wreath_mul(q,
                          wreath_mul(q, WreathElement::from_aut(A, sh.d, sh.e), WreathElement::from_ext(a)),
                          WreathElement::from_aut(unimodular_inverse(A), sh.d, sh.e)) !=
               WreathElement::from_ext(aut_on_ext(q, A, a)))
        failed = "conjugation A g A^-1 = A.g";
      if (failed.empty()) return {};
      return Json{{"law", failed}, {"form", to_json(q)}, {"g", ext_json(a)}, {"h", ext_json(b)},
                  {"k", ext_json(c)}, {"w", to_json(u)}, {"w2", to_json(v)}, {"w3", to_json(w)},
                  {"A", to_json(A)}};
    }));
  return s;
}

SuiteOutcome action_axioms(Rng& rng, long cases) {
  SuiteOutcome s{"action-axioms", {}};
  for (const Shape& sh : kAlgebraShapes)
    s.configs.push_back(run_config(sh.label(), cases, [&]() -> Json {
      const QuadraticForm q = random_form(rng, sh.d, sh.e);
      const WreathElement w = random_wreath(rng, sh.r, sh.d, sh.e), w2 = random_wreath(rng, sh.r, sh.d, sh.e);
      const Pi2Element p = random_pi2(rng, sh.r, sh.d, sh.e);
      const Pi3Element c{random_vector(rng, sh.e)};
      std::string failed;
      if (act_pi2(q, w, act_pi2(q, w2, p)) != act_pi2(q, wreath_mul(q, w, w2), p)) failed = "w.(w'.p) = (ww').p";
      else if (act_pi2(q, WreathElement::identity(sh.r, sh.d, sh.e), p) != p) failed = "identity acts trivially";
      else if (act_pi3(w, c) != c) failed = "pi_3 action trivial";
      if (failed.empty()) return {};
      return Json{{"law", failed}, {"form", to_json(q)}, {"w", to_json(w)}, {"w2", to_json(w2)},
                  {"p", pi2_json(p)}};
    }));
  return s;
}

SuiteOutcome phi_sharp(Rng& rng, long cases) {
  SuiteOutcome s{"phi-sharp-invariance", {}};
  for (const Shape& sh : kAlgebraShapes)
    s.configs.push_back(run_config(sh.label(), cases, [&]() -> Json {
      const QuadraticForm q = random_form(rng, sh.d, sh.e);
      const WreathElement w = random_wreath(rng, sh.r, sh.d, sh.e);
      const Pi2Element p = random_pi2(rng, sh.r, sh.d, sh.e);
      const Pi3Element before = quad_invariant_sharp(q, p);
      const Pi3Element after = quad_invariant_sharp(q, act_pi2(q, w, p));
      if (before == after) return {};
      return Json{{"form", to_json(q)}, {"w", to_json(w)}, {"p", pi2_json(p)},
                  {"before", to_json(before.c)}, {"after", to_json(after.c)}};
    }));
  return s;
}

SuiteOutcome specialize(Rng& rng, long cases) {
  SuiteOutcome s{"specialize", {}};
  for (const Shape& sh : kRank2Shapes)
    s.configs.push_back(run_config(sh.label(), cases, [&]() -> Json {
      const QuadraticForm q = random_form(rng, sh.d, sh.e);
      const WreathElement w = random_wreath(rng, sh.r, sh.d, sh.e);
      const Pi2Element p = random_pi2(rng, sh.r, sh.d, sh.e);
      const Pi2Element general = act_pi2(q, w, p), coords = specialize_rank2(q, w, p);
      if (general == coords) return {};
      return Json{{"form", to_json(q)}, {"w", to_json(w)}, {"p", pi2_json(p)},
                  {"act_pi2", pi2_json(general)}, {"specialize_rank2", pi2_json(coords)}};
    }));
  return s;
}

SuiteOutcome cocycle(Rng& rng, long cases) {
  SuiteOutcome s{"cocycle", {}};
  for (std::size_t d = 1; d <= 3; ++d)
    s.configs.push_back(run_config("d=" + std::to_string(d), cases, [&, d]() -> Json {
      const QuadraticForm q = random_form(rng, d, 1);
      const LatticeVector u = random_lattice_vector(rng, d), u2 = random_lattice_vector(rng, d);
      const LinearForm defect = cocycle_defect(q, u, u2);
      const Int expected = -eval_beta(q, u2.m2, u.m1)[0];
      if (defect.is_constant() && defect.constant == Rat(expected)) return {};
      return Json{{"form", to_json(q)}, {"u", lattice_vector_json(u)}, {"u2", lattice_vector_json(u2)},
                  {"defect_constant", rat_string(defect.constant)}, {"expected", expected.get_str()}};
    }));
  return s;
}

SuiteOutcome chern(Rng& rng, long cases) {
  SuiteOutcome s{"chern", {}};
  for (std::size_t d = 1; d <= 3; ++d)
    s.configs.push_back(run_config("d=" + std::to_string(d), cases, [&, d]() -> Json {
      const QuadraticForm q = random_form(rng, d, 1);
      const LatticeVector u = random_lattice_vector(rng, d), u2 = random_lattice_vector(rng, d);
      const LatticeVector zero{IntVector(d, Int(0)), IntVector(d, Int(0))};
      // f_{u'}(z + u) + f_u(z) - f_u(z + u') - f_{u'}(z)
      const LinearForm four = cocycle_f_symbolic(q, u2, u) + cocycle_f_symbolic(q, u, zero) -
                              cocycle_f_symbolic(q, u, u2) - cocycle_f_symbolic(q, u2, zero);
      const Int closed = chern_form(q, u, u2);
      if (four.is_constant() && four.constant == Rat(closed)) return {};
      return Json{{"form", to_json(q)}, {"u", lattice_vector_json(u)}, {"u2", lattice_vector_json(u2)},
                  {"four_term", rat_string(four.constant)}, {"closed_form", closed.get_str()}};
    }));
  return s;
}

SuiteOutcome ideal_invariance(Rng& rng, long cases) {
  SuiteOutcome s{"ideal-invariance", {}};
  for (const Shape& sh : kAlgebraShapes)
    s.configs.push_back(run_config(sh.label(), cases, [&]() -> Json {
      const QuadraticForm q = random_form(rng, sh.d, sh.e);
      const WreathElement w = random_wreath(rng, sh.r, sh.d, sh.e);
      const GradedPresentation p = presentation(q, sh.r);
      const IdealInvarianceResult res = ideal_invariance_check(p, substitution_from_wreath(q, w));
      if (res.invariant && res.on_the_nose) return {};
      return Json{{"form", to_json(q)}, {"w", to_json(w)}, {"invariant", res.invariant},
                  {"on_the_nose", res.on_the_nose}};
    }));
  return s;
}

SuiteOutcome orbit(Rng& rng, long cases) {
  SuiteOutcome s{"orbit", {}};
  for (long N = 1; N <= 3; ++N)
    s.configs.push_back(run_config("N=" + std::to_string(N), cases, [&, N]() -> Json {
      const WreathElement w = random_wreath(rng, 2, 1, 1);
      std::string why;
      try {
        const OrbitIndexMap map = orbit_equivariance_check(N, w);
        if (map.bijective) return {};
        why = map.injective ? "inverse element does not invert" : "not injective on window";
      } catch (const std::exception& e) {
        why = e.what();
      }
      return Json{{"N", N}, {"w", to_json(w)}, {"reason", why}};
    }));
  return s;
}

}  // namespace

bool SuiteOutcome::passed() const {
  for (const auto& c : configs)
    if (c.failures != 0) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"group-axioms", "action-axioms",    "phi-sharp-invariance",
                                                 "cocycle",      "chern",            "ideal-invariance",
                                                 "specialize",   "orbit"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

long default_cases(const std::string& name) {
  if (name == "cocycle" || name == "chern") return 500;
  if (name == "ideal-invariance") return 100;
  if (name == "orbit") return 50;
  return 1000;
}

SuiteOutcome run_suite(const std::string& name, std::uint64_t seed, long cases) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  if (cases <= 0) cases = default_cases(name);
  Rng rng(seed);
  if (name == "group-axioms") return group_axioms(rng, cases);
  if (name == "action-axioms") return action_axioms(rng, cases);
  if (name == "phi-sharp-invariance") return phi_sharp(rng, cases);
  if (name == "specialize") return specialize(rng, cases);
  if (name == "cocycle") return cocycle(rng, cases);
  if (name == "chern") return chern(rng, cases);
  if (name == "ideal-invariance") return ideal_invariance(rng, cases);
  return orbit(rng, cases);
}

}  // namespace looijenga::cli
