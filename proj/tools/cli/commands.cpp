#include "commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "looijenga/cohomology.hpp"
#include "looijenga/errors.hpp"
#include "looijenga/json_io.hpp"
#include "looijenga/moduli.hpp"
#include "looijenga/qform.hpp"
#include "looijenga/theta.hpp"
#include "looijenga/wreath.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "suites.hpp"

namespace looijenga::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw UsageError("not a number: \"" + s + "\"");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not a number: \"" + s + "\"");
  }
}

IntVector parse_int_list(const std::string& s) {
  IntVector out;
  for (const auto& part : split(s, ',')) {
    Int v;
    if (part.empty() || v.set_str(part, 10) != 0) throw UsageError("not an integer list: \"" + s + "\"");
    out.push_back(v);
  }
  return out;
}

long parse_long(const Int& v) {
  if (!v.fits_slong_p()) throw UsageError("integer out of range: " + v.get_str());
  return v.get_si();
}

/// "re" or "re,im".
Complex parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw UsageError("expected re or re,im: \"" + s + "\"");
}

/// Coordinates separated by ';'.
ComplexVector parse_complex_vector(const std::string& s) {
  ComplexVector out;
  for (const auto& part : split(s, ';')) out.push_back(parse_complex(part));
  return out;
}

IntMatrix parse_square2(const std::string& s, const char* what) {
  const IntVector v = parse_int_list(s);
  if (v.size() != 4) throw UsageError(std::string(what) + " needs four entries a,b,c,d");
  return IntMatrix(2, 2, v);
}

Json complex_json(Complex z) { return Json::array({double_string(z.real()), double_string(z.imag())}); }

Json complex_vector_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Complex z : v) out.push_back(complex_json(z));
  return out;
}

struct Session {
  Fnv1a digest;

  std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    digest.add(buf.str());
    return buf.str();
  }

  Json load(const std::string& path) {
    try {
      return parse_json(read_file(path));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  QuadraticForm form(const std::string& path) {
    const Json j = load(path);
    return form_from_json(j.contains("form") ? j.at("form") : j);
  }

  /// Inline JSON (starting with '{') or a file path.
  Json json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') {
      digest.add(arg);
      return parse_json(arg);
    }
    return load(arg);
  }
};

QuadraticForm default_form(std::size_t d, std::size_t e) {
  IntMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i) c(i, i) = 2;
  return QuadraticForm(d, std::vector<IntMatrix>(e, c));
}

Json presentation_text(const GradedPresentation& p) {
  Json rels = Json::array();
  for (const auto& rel : p.relations) rels.push_back(rel.to_string(p.names));
  return rels;
}

struct ThetaArgs {
  std::string file;
  std::string tau = "0,1";
  std::string z;
  long u_index = 0;
  double tol = kDefaultThetaTol;
  int max_radius = kDefaultMaxRadius;
};

// Storage bound to CLI11 options, one per invocation.
struct Options {
  std::string q_file, q_y, q_y2;

  std::string v_suite;
  std::uint64_t v_seed = 1;
  long v_cases = 0;

  ThetaArgs th;
  std::string th_m1, th_m2;
  long th_points = 0;
  std::uint64_t th_seed = 1;

  std::string mo_tau, mo_lat1, mo_lat2, mo_B, mo_A, mo_action, mo_file;
  std::string mo_t1 = "0,1", mo_t2 = "1,0", mo_y, mo_x1 = "0,0", mo_x2;

  std::string co_file, co_element, co_index = "0,0";
  long co_r = 2, co_d = -1, co_e = 1, co_N = 1, co_cases = 100;
  unsigned co_max = 12;
  std::uint64_t co_seed = 1;
};

using Action = std::function<RunReport()>;

// ---------------------------------------------------------------- qform

void add_qform(CLI::App& app, Session& s, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("qform", "Quadratic form utilities");
  cmd->require_subcommand(1);

  auto* eval = cmd->add_subcommand("eval", "Evaluate phi (and beta, omega with --y2)");
  eval->add_option("form", o.q_file, "Form JSON file")->required();
  eval->add_option("--y", o.q_y, "Vector y, comma separated")->required();
  eval->add_option("--y2", o.q_y2, "Second vector y'");
  eval->callback([&s, &o, &action] {
    action = [&s, &o] {
      RunReport r;
      const QuadraticForm q = s.form(o.q_file);
      const IntVector v = parse_int_list(o.q_y);
      if (v.size() != q.source_rank()) throw UsageError("--y must have d entries");
      r.results["phi"] = to_json(eval_phi(q, v));
      if (!o.q_y2.empty()) {
        const IntVector w = parse_int_list(o.q_y2);
        if (w.size() != q.source_rank()) throw UsageError("--y2 must have d entries");
        const IntVector beta = eval_beta(q, v, w);
        r.results["beta"] = to_json(beta);
        r.results["omega"] = to_json(eval_omega(q, v, w));
        IntVector sum(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) sum[i] = v[i] + w[i];
        const IntVector a = eval_phi(q, sum), b = eval_phi(q, v), c = eval_phi(q, w);
        bool ok = true;
        for (std::size_t k = 0; k < a.size(); ++k) ok = ok && (a[k] - b[k] - c[k] == beta[k]);
        r.check("phi(y+y') - phi(y) - phi(y') = beta(y, y')", ok);
      }
      return r;
    };
  });

  auto* hess = cmd->add_subcommand("hessian", "Print the Hessians c and the extension");
  hess->add_option("form", o.q_file, "Form JSON file")->required();
  hess->callback([&s, &o, &action] {
    action = [&s, &o] {
      RunReport r;
      r.results = to_json(s.form(o.q_file));
      return r;
    };
  });

  auto* cosets = cmd->add_subcommand("dual-cosets", "Representatives of B#/B");
  cosets->add_option("form", o.q_file, "Form JSON file")->required();
  cosets->callback([&s, &o, &action] {
    action = [&s, &o] {
      RunReport r;
      const QuadraticForm q = s.form(o.q_file);
      const auto reps = dual_coset_reps(q);
      Json list = Json::array();
      for (const auto& u : reps) list.push_back(to_json(u.u));
      r.results["count"] = reps.size();
      r.results["representatives"] = list;
      r.check("count = |det c|", Int(static_cast<unsigned long>(reps.size())) == abs(q.hessian(0).determinant()));
      return r;
    };
  });

  auto* def = cmd->add_subcommand("definiteness", "Exact positive definiteness test");
  def->add_option("form", o.q_file, "Form JSON file")->required();
  def->callback([&s, &o, &action] {
    action = [&s, &o] {
      RunReport r;
      const QuadraticForm q = s.form(o.q_file);
      if (q.target_rank() != 1) throw UsageError("definiteness needs e = 1");
      r.results["positive_definite"] = is_positive_definite(q);
      r.results["det"] = q.hessian(0).determinant().get_str();
      return r;
    };
  });
}

// ---------------------------------------------------------------- verify

void add_verify(CLI::App& app, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("verify", "Run a seeded property suite");
  cmd->add_option("suite", o.v_suite,
                  "group-axioms | action-axioms | phi-sharp-invariance | cocycle | chern | "
                  "ideal-invariance | specialize | orbit")
      ->required();
  cmd->add_option("--seed", o.v_seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--cases", o.v_cases, "Cases per configuration (default depends on suite)");
  cmd->callback([&o, &action] {
    action = [&o] {
      if (!is_suite(o.v_suite)) throw UsageError("unknown suite \"" + o.v_suite + "\"");
      const SuiteOutcome outcome = run_suite(o.v_suite, o.v_seed, o.v_cases);
      RunReport r;
      r.results["suite"] = o.v_suite;
      r.results["seed"] = std::to_string(o.v_seed);
      Json configs = Json::array();
      for (const auto& c : outcome.configs) {
        Json entry{{"config", c.label}, {"cases", c.cases}, {"failures", c.failures}};
        if (!c.counterexample.empty()) entry["counterexample"] = parse_json(c.counterexample);
        configs.push_back(std::move(entry));
        r.check(o.v_suite + " " + c.label, c.failures == 0,
                std::to_string(c.cases - c.failures) + "/" + std::to_string(c.cases) + " cases" +
                    (c.counterexample.empty() ? "" : "; counterexample " + c.counterexample));
      }
      r.results["configurations"] = configs;
      return r;
    };
  });
}

// ---------------------------------------------------------------- theta

struct ThetaSetup {
  QuadraticForm form;
  Complex tau;
  ComplexVector z;
  std::size_t u_index;
  double tol;
};

ThetaSetup theta_setup(Session& s, const ThetaArgs& a, const CLI::App& cmd) {
  const Json j = s.load(a.file);
  ThetaSetup out{form_from_json(j.contains("form") ? j.at("form") : j), parse_complex(a.tau), {}, 0, a.tol};
  // A theta context file may carry tau, z, u_index and tol; flags override.
  if (j.contains("tau") && cmd.count("--tau") == 0) out.tau = complex_from_json(j.at("tau"));
  if (j.contains("tol") && cmd.count("--tol") == 0) out.tol = j.at("tol").get<double>();
  if (j.contains("u_index") && cmd.count("--u") == 0)
    out.u_index = j.at("u_index").get<std::size_t>();
  else if (a.u_index < 0)
    throw UsageError("--u must be >= 0");
  else
    out.u_index = static_cast<std::size_t>(a.u_index);
  if (!a.z.empty())
    out.z = parse_complex_vector(a.z);
  else if (j.contains("z"))
    out.z = complex_vector_from_json(j.at("z"));
  else
    out.z.assign(out.form.source_rank(), Complex(0.0, 0.0));
  if (out.z.size() != out.form.source_rank()) throw UsageError("--z must have d coordinates");
  return out;
}

DualCosetRep characteristic(const ThetaContext& ctx, std::size_t index) {
  const auto reps = dual_coset_reps(ctx.form());
  if (index >= reps.size()) throw UsageError("--u out of range; there are " + std::to_string(reps.size()));
  return reps[index];
}

void theta_common(CLI::App* sub, ThetaArgs& a) {
  sub->add_option("form", a.file, "Form or theta-context JSON file")->required();
  sub->add_option("--tau", a.tau, "tau as re,im")->capture_default_str();
  sub->add_option("--z", a.z, "z coordinates, ';' separated, each re or re,im (default 0)");
  sub->add_option("--u", a.u_index, "Characteristic index into dual-cosets order")->capture_default_str();
  sub->add_option("--tol", a.tol, "Truncation tolerance")->capture_default_str();
  sub->add_option("--max-radius", a.max_radius, "Truncation radius cap")->capture_default_str();
}

void add_theta(CLI::App& app, Session& s, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("theta", "Theta functions of a positive definite form");
  cmd->require_subcommand(1);

  auto* eval = cmd->add_subcommand("eval", "Evaluate theta_u(tau, z)");
  theta_common(eval, o.th);
  eval->callback([&s, &o, &action, eval] {
    action = [&s, &o, eval] {
      const ThetaSetup setup = theta_setup(s, o.th, *eval);
      const ThetaContext ctx(setup.form, setup.tau, setup.tol, o.th.max_radius);
      const DualCosetRep u = characteristic(ctx, setup.u_index);
      const int radius = theta_radius(ctx, u, setup.z);
      RunReport r;
      r.results["u"] = to_json(u.u);
      r.results["tau"] = complex_json(setup.tau);
      r.results["z"] = complex_vector_json(setup.z);
      r.results["value"] = complex_json(theta_partial_sum(ctx, u, setup.z, radius));
      r.results["radius"] = radius;
      r.results["tail_bound"] = double_string(theta_tail_bound(ctx, u, setup.z, radius));
      return r;
    };
  });

  auto* trans = cmd->add_subcommand("translation-check", "Residual of the translation law");
  theta_common(trans, o.th);
  trans->add_option("--m1", o.th_m1, "m1, comma separated (default 1,...,1)");
  trans->add_option("--m2", o.th_m2, "m2, comma separated (default 0,...,0)");
  trans->callback([&s, &o, &action, trans] {
    action = [&s, &o, trans] {
      const ThetaSetup setup = theta_setup(s, o.th, *trans);
      const ThetaContext ctx(setup.form, setup.tau, setup.tol, o.th.max_radius);
      const DualCosetRep u = characteristic(ctx, setup.u_index);
      const std::size_t d = ctx.form().source_rank();
      const IntVector v1 = o.th_m1.empty() ? IntVector(d, Int(1)) : parse_int_list(o.th_m1);
      const IntVector v2 = o.th_m2.empty() ? IntVector(d, Int(0)) : parse_int_list(o.th_m2);
      if (v1.size() != d || v2.size() != d) throw UsageError("--m1/--m2 must have d entries");
      const double residual = translation_check(ctx, u, setup.z, v1, v2);
      const double limit = std::max(1e-9, 10 * ctx.tol());
      RunReport r;
      r.results["residual"] = double_string(residual);
      r.check("translation law residual < " + double_string(limit), residual < limit);
      return r;
    };
  });

  auto* dim = cmd->add_subcommand("dim", "Dimension of the space of sections");
  dim->add_option("form", o.th.file, "Form JSON file")->required();
  dim->callback([&s, &o, &action] {
    action = [&s, &o] {
      const QuadraticForm q = s.form(o.th.file);
      const Int det = section_dimension(q);
      const auto reps = dual_coset_reps(q);
      RunReport r;
      r.results["dimension"] = det.get_str();
      r.results["dual_cosets"] = reps.size();
      r.check("det c = |B#/B|", det == Int(static_cast<unsigned long>(reps.size())));
      return r;
    };
  });

  auto* gram = cmd->add_subcommand("gram-rank", "Numerical rank of the theta basis on sample points");
  theta_common(gram, o.th);
  gram->add_option("--points", o.th_points, "Sample points (default 2 det c + 2)");
  gram->add_option("--seed", o.th_seed, "Seed for sample points")->capture_default_str();
  gram->callback([&s, &o, &action, gram] {
    action = [&s, &o, gram] {
      const ThetaSetup setup = theta_setup(s, o.th, *gram);
      const ThetaContext ctx(setup.form, setup.tau, setup.tol, o.th.max_radius);
      const long det = parse_long(section_dimension(ctx.form()));
      const long n = o.th_points > 0 ? o.th_points : 2 * det + 2;
      Rng rng(o.th_seed);
      std::vector<ComplexVector> pts;
      for (long i = 0; i < n; ++i) pts.push_back(random_z(rng, setup.tau, ctx.form().source_rank()));
      const std::size_t rank = theta_basis_gram_rank(ctx, pts);
      RunReport r;
      r.results["rank"] = rank;
      r.results["det"] = std::to_string(det);
      r.results["points"] = n;
      if (n >= det) r.check("Gram rank = det c", static_cast<long>(rank) == det);
      return r;
    };
  });
}

// ---------------------------------------------------------------- moduli

FramedLattice lattice_arg(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("lattice needs t1re,t1im,t2re,t2im");
  try {
    return FramedLattice({parse_double(parts[0]), parse_double(parts[1])},
                         {parse_double(parts[2]), parse_double(parts[3])});
  } catch (const InvariantError& e) {
    throw UsageError(e.what());
  }
}

void add_moduli(CLI::App& app, Session& s, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("moduli", "Lattices, the modular action and isogenies");
  cmd->require_subcommand(1);

  auto* red = cmd->add_subcommand("reduce-tau", "Move tau into the standard fundamental domain");
  red->add_option("tau", o.mo_tau, "tau as re,im")->required();
  red->callback([&o, &action] {
    action = [&o] {
      const Complex t = parse_complex(o.mo_tau);
      const ReducedTau rt = reduce_tau(t);
      RunReport r;
      r.results["tau"] = complex_json(rt.tau);
      r.results["A"] = to_json(rt.A);
      const bool in_domain = rt.tau.imag() > 0 && rt.tau.real() >= -0.5 - 1e-12 &&
                             rt.tau.real() < 0.5 + 1e-12 && std::norm(rt.tau) >= 1 - 1e-12;
      r.check("A . tau = reduced tau",
              std::abs(mobius(rt.A, t) - rt.tau) <= 1e-9 * std::max(1.0, std::abs(rt.tau)));
      r.check("reduced tau in fundamental domain", in_domain);
      return r;
    };
  });

  auto* iso = cmd->add_subcommand("isomorphic", "Decide whether two framed lattices give isomorphic curves");
  iso->add_option("--lattice1", o.mo_lat1, "t1re,t1im,t2re,t2im")->required();
  iso->add_option("--lattice2", o.mo_lat2, "t1re,t1im,t2re,t2im")->required();
  iso->callback([&o, &action] {
    action = [&o] {
      const auto result = curves_isomorphic(lattice_arg(o.mo_lat1), lattice_arg(o.mo_lat2));
      RunReport r;
      r.results["isomorphic"] = result.has_value();
      if (result) {
        r.results["A"] = to_json(result->A);
        r.results["lambda"] = complex_json(result->lambda);
      }
      return r;
    };
  });

  auto* isog = cmd->add_subcommand("isogeny", "Isogeny invariants of an integer matrix B");
  isog->add_option("--B", o.mo_B, "B as a,b,c,d")->required();
  isog->add_option("action", o.mo_action, "normal-form | degree | kernel")
      ->required()
      ->check(CLI::IsMember({"normal-form", "degree", "kernel"}));
  isog->add_option("--lattice", o.mo_lat1, "t1re,t1im,t2re,t2im for kernel (default i,1)");
  isog->callback([&o, &action] {
    action = [&o] {
      const IntMatrix b = parse_square2(o.mo_B, "--B");
      RunReport r;
      if (o.mo_action == "normal-form") {
        const IsogenyNormalForm nf = isogeny_normal_form(b);
        r.results["M"] = nf.M.get_str();
        r.results["N"] = nf.N.get_str();
      } else if (o.mo_action == "degree") {
        r.results["degree"] = isogeny_degree(b).get_str();
      } else {
        const FramedLattice lat = o.mo_lat1.empty() ? FramedLattice({0, 1}, {1, 0}) : lattice_arg(o.mo_lat1);
        const auto kernel = isogeny_kernel(b, lat);
        r.results["count"] = kernel.size();
        r.results["points"] = complex_vector_json(kernel);
        r.check("kernel size = |det B|", Int(static_cast<unsigned long>(kernel.size())) == abs(b.determinant()));
      }
      return r;
    };
  });

  auto* gm = cmd->add_subcommand("gamma-member", "Membership of A in Gamma_B");
  gm->add_option("--B", o.mo_B, "B as a,b,c,d")->required();
  gm->add_option("--A", o.mo_A, "A as a,b,c,d")->required();
  gm->callback([&o, &action] {
    action = [&o] {
      RunReport r;
      r.results["member"] = gamma_B_member(parse_square2(o.mo_B, "--B"), parse_square2(o.mo_A, "--A"));
      return r;
    };
  });

  auto* desc = cmd->add_subcommand("descend", "Map a point (t, y, x) on the locus to (tau, z, u)");
  desc->add_option("form", o.mo_file, "Form JSON file (e = 1)")->required();
  desc->add_option("--t1", o.mo_t1, "t1 as re,im")->capture_default_str();
  desc->add_option("--t2", o.mo_t2, "t2 as re,im")->capture_default_str();
  desc->add_option("--y", o.mo_y, "y coordinates, ';' separated (default 0)");
  desc->add_option("--x1", o.mo_x1, "x1 as re,im")->capture_default_str();
  desc->add_option("--x2", o.mo_x2, "x2 as re,im (default: solved from the locus)");
  desc->callback([&s, &o, &action] {
    action = [&s, &o] {
      const QuadraticForm q = s.form(o.mo_file);
      if (q.target_rank() != 1) throw UsageError("descend needs e = 1");
      const FramedLattice lat = [&] {
        try {
          return FramedLattice(parse_complex(o.mo_t1), parse_complex(o.mo_t2));
        } catch (const InvariantError& e) {
          throw UsageError(e.what());
        }
      }();
      const ComplexVector y = o.mo_y.empty() ? ComplexVector(q.source_rank()) : parse_complex_vector(o.mo_y);
      if (y.size() != q.source_rank()) throw UsageError("--y must have d coordinates");
      const Complex x1 = parse_complex(o.mo_x1);
      const Complex x2 =
          o.mo_x2.empty() ? (-phi_complex(q, y) - lat.t1() * x1) / lat.t2() : parse_complex(o.mo_x2);
      const DescendedPoint p = descend(q, GeometricPoint{lat, y, x1, x2});
      RunReport r;
      r.results["tau"] = complex_json(p.tau);
      r.results["z"] = complex_vector_json(p.z);
      r.results["u"] = complex_json(p.u);
      return r;
    };
  });
}

// ---------------------------------------------------------------- cohomology

void cohomology_form_options(CLI::App* sub, Options& o) {
  sub->add_option("form", o.co_file, "Form JSON file (default: c = 2 I_d for each of e components)");
  sub->add_option("--r", o.co_r, "Rank of L")->capture_default_str();
  sub->add_option("--d", o.co_d, "Rank of B (checked against the form file; default 1)");
  sub->add_option("--e", o.co_e, "Rank of C when no form file is given")->capture_default_str();
}

QuadraticForm cohomology_form(Session& s, const Options& o) {
  if (o.co_r < 1) throw UsageError("--r must be >= 1");
  if (!o.co_file.empty()) {
    QuadraticForm q = s.form(o.co_file);
    if (o.co_d >= 0 && static_cast<std::size_t>(o.co_d) != q.source_rank())
      throw UsageError("--d does not match the form file");
    return q;
  }
  if (o.co_e < 0) throw UsageError("--e must be >= 0");
  return default_form(static_cast<std::size_t>(o.co_d < 0 ? 1L : o.co_d), static_cast<std::size_t>(o.co_e));
}

void add_cohomology(CLI::App& app, Session& s, Options& o, Action& action) {
  auto* cmd = app.add_subcommand("cohomology", "Graded ring presentations");
  cmd->require_subcommand(1);

  auto* pres = cmd->add_subcommand("presentation", "Q[t, y, x] / (phi#)");
  cohomology_form_options(pres, o);
  pres->callback([&s, &o, &action] {
    action = [&s, &o] {
      const GradedPresentation p = presentation(cohomology_form(s, o), static_cast<std::size_t>(o.co_r));
      RunReport r;
      r.results["relations_text"] = presentation_text(p);
      r.results["presentation"] = to_json(p);
      return r;
    };
  });

  auto* hilb = cmd->add_subcommand("hilbert", "Graded dimensions of the presentation");
  cohomology_form_options(hilb, o);
  hilb->add_option("--max", o.co_max, "Largest cohomological degree (even)")->capture_default_str();
  hilb->callback([&s, &o, &action] {
    action = [&s, &o] {
      if (o.co_max % 2 != 0) throw UsageError("--max must be even");
      const GradedPresentation p = presentation(cohomology_form(s, o), static_cast<std::size_t>(o.co_r));
      const auto dims = hilbert_function(p, o.co_max);
      const std::vector<unsigned> degs(p.relations.size(), 2);
      const auto series = complete_intersection_series(degs, p.nvars(), o.co_max / 2);
      Json dj = Json::array(), sj = Json::array(), deg = Json::array();
      bool match = true;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        deg.push_back(2 * k);
        dj.push_back(dims[k]);
        sj.push_back(series[k].get_str());
        match = match && Int(static_cast<unsigned long>(dims[k])) == series[k];
      }
      RunReport r;
      r.results["degrees"] = deg;
      r.results["dimensions"] = dj;
      r.results["complete_intersection_series"] = sj;
      r.check("Hilbert function = (1-q^2)^e/(1-q)^n", match);
      return r;
    };
  });

  auto* act = cmd->add_subcommand("action-check", "Wreath substitutions preserve the relation ideal");
  cohomology_form_options(act, o);
  act->add_option("--element", o.co_element, "Wreath element JSON (inline or file); default random");
  act->add_option("--seed", o.co_seed, "Seed for random elements")->capture_default_str();
  act->add_option("--cases", o.co_cases, "Random elements to try")->capture_default_str();
  act->callback([&s, &o, &action] {
    action = [&s, &o] {
      const QuadraticForm q = cohomology_form(s, o);
      const auto r_sz = static_cast<std::size_t>(o.co_r);
      const GradedPresentation p = presentation(q, r_sz);
      std::vector<WreathElement> elements;
      if (!o.co_element.empty()) {
        elements.push_back(wreath_from_json(q, s.json_arg(o.co_element)));
        if (elements.back().rank() != r_sz) throw UsageError("element rank does not match --r");
      } else {
        Rng rng(o.co_seed);
        for (long i = 0; i < o.co_cases; ++i)
          elements.push_back(random_wreath(rng, r_sz, q.source_rank(), q.target_rank()));
      }
      long invariant = 0, nose = 0;
      std::string first_bad;
      for (const auto& w : elements) {
        const auto res = ideal_invariance_check(p, substitution_from_wreath(q, w));
        invariant += res.invariant;
        nose += res.on_the_nose;
        if (!res.invariant && first_bad.empty()) first_bad = to_json(w).dump();
      }
      const auto total = static_cast<long>(elements.size());
      RunReport r;
      r.results["elements"] = total;
      r.results["invariant"] = invariant;
      r.results["on_the_nose"] = nose;
      r.check("relation ideal preserved", invariant == total, first_bad.empty() ? "" : "counterexample " + first_bad);
      r.check("relations preserved on the nose", nose == total);
      return r;
    };
  });

  auto* orb = cmd->add_subcommand("orbit", "Orbit-module factor y - (n1/N) t1 - (n2/N) t2");
  orb->add_option("--N", o.co_N, "Level N >= 1")->required();
  orb->add_option("--index", o.co_index, "n1,n2")->capture_default_str();
  orb->add_option("--element", o.co_element, "Wreath element (d = 1, r = 2) for the equivariance check");
  orb->callback([&s, &o, &action] {
    action = [&s, &o] {
      if (o.co_N < 1) throw UsageError("--N must be >= 1");
      const IntVector n = parse_int_list(o.co_index);
      if (n.size() != 2) throw UsageError("--index needs n1,n2");
      const std::pair<long, long> idx{parse_long(n[0]), parse_long(n[1])};
      const GradedPresentation p = orbit_module(o.co_N, idx.first, idx.second);
      RunReport r;
      // Printed in the order y, t1, t2.
      const Polynomial& rel = p.relations[0];
      const std::vector<std::string> names = {"y", "t1", "t2"};
      const std::array<Polynomial, 3> images = {Polynomial::variable(3, 1), Polynomial::variable(3, 2),
                                                Polynomial::variable(3, 0)};
      r.results["relation"] = rel.substitute(images).to_string(names);
      r.results["presentation"] = to_json(p);
      if (!o.co_element.empty()) {
        const WreathElement w = wreath_from_json(default_form(1, 1), s.json_arg(o.co_element));
        const OrbitIndexMap map = orbit_equivariance_check(o.co_N, w);
        for (const auto& [src, dst] : map.entries)
          if (src == idx) r.results["image_index"] = Json::array({dst.first, dst.second});
        r.results["window"] = map.window;
        r.check("index map is a bijection on the window", map.bijective);
      }
      return r;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Looijenga line bundles, theta functions and wreath-group actions", "looijenga"};
  app.require_subcommand(1);
  bool json = false, timing = false;
  app.add_flag("--json", json, "Machine-readable report");
  app.add_flag("--timing", timing, "Include wall time in the JSON report");
  app.fallthrough();

  Session session;
  Options opts;
  Action action;
  add_qform(app, session, opts, action);
  add_verify(app, opts, action);
  add_theta(app, session, opts, action);
  add_moduli(app, session, opts, action);
  add_cohomology(app, session, opts, action);

  std::string echo = "looijenga";
  for (const auto& a : args) {
    session.digest.add(a);
    echo += " " + a;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!action) {
    err << "error: no command\n";
    return kExitUsage;
  }

  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = action();
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.command = echo;
  report.inputs_digest = session.digest.hex();

  if (json)
    write_json(out, report, timing);
  else
    write_text(out, report);
  if (!report.passed()) {
    for (const auto& c : report.checks)
      if (!c.pass) err << "check failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace looijenga::cli
