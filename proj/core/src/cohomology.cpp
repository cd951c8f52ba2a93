#include "looijenga/cohomology.hpp"

#include <set>

#include "looijenga/errors.hpp"

namespace looijenga {

std::size_t x_generator(std::size_t r, std::size_t d, std::size_t e, std::size_t i, std::size_t k) {
  return r + d + i * e + k;
}

GradedPresentation presentation(const QuadraticForm& q, std::size_t r) {
  const std::size_t d = q.source_rank(), e = q.target_rank();
  GradedPresentation p;
  for (std::size_t i = 0; i < r; ++i) p.names.push_back("t" + std::to_string(i + 1));
  for (std::size_t i = 0; i < d; ++i) p.names.push_back("y" + std::to_string(i + 1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < e; ++k)
      p.names.push_back(e == 1 ? "x" + std::to_string(i + 1)
                               : "x" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
  p.degrees.assign(p.names.size(), 2);
  const std::size_t n = p.names.size();

  std::vector<Polynomial> y_images;
  for (std::size_t i = 0; i < d; ++i) y_images.push_back(Polynomial::variable(n, r + i));
  for (std::size_t k = 0; k < e; ++k) {
    Polynomial rel = d == 0 ? Polynomial(n) : phi_polynomial(q, k).substitute(y_images);
    for (std::size_t i = 0; i < r; ++i)
      rel += Polynomial::variable(n, i) * Polynomial::variable(n, x_generator(r, d, e, i, k));
    p.relations.push_back(std::move(rel));
  }
  return p;
}

std::vector<std::size_t> hilbert_function(const GradedPresentation& p, unsigned max_degree) {
  if (max_degree % 2 != 0) throw InvariantError("hilbert_function: max_degree must be even");
  for (const Polynomial& rel : p.relations)
    if (rel.nvars() != p.nvars() || !rel.is_homogeneous() || rel.is_zero())
      throw InvariantError("hilbert_function: relations must be nonzero homogeneous polynomials");
  return quotient_dimensions(p.relations, p.nvars(), max_degree / 2);
}

RingSubstitution RingSubstitution::identity(std::size_t nvars) {
  RingSubstitution s;
  for (std::size_t i = 0; i < nvars; ++i) s.images.push_back(Polynomial::variable(nvars, i));
  return s;
}

Polynomial RingSubstitution::apply(const Polynomial& p) const {
  if (p.nvars() != nvars()) throw DimensionError("RingSubstitution: arity mismatch");
  return p.substitute(images);
}

RingSubstitution RingSubstitution::then(const RingSubstitution& s) const {
  if (s.nvars() != nvars()) throw DimensionError("RingSubstitution: arity mismatch");
  RingSubstitution out;
  for (const Polynomial& img : images) out.images.push_back(s.apply(img));
  return out;
}

RingSubstitution substitution_from_wreath(const QuadraticForm& q, const WreathElement& w) {
  const std::size_t r = w.rank();
  if (r == 0) throw DimensionError("substitution_from_wreath: unsupported rank 0");
  check_wreath(q, w);
  const std::size_t d = q.source_rank(), e = q.target_rank();
  const std::size_t n = r + d + r * e;

  auto basis = [&](std::size_t l) {
    Pi2Element p{IntVector(r, Int(0)), IntVector(d, Int(0)), IntMatrix(e, r)};
    if (l < r)
      p.t[l] = 1;
    else if (l < r + d)
      p.y[l - r] = 1;
    else
      p.x((l - r - d) % e, (l - r - d) / e) = 1;
    return p;
  };
  auto coordinate = [&](const Pi2Element& p, std::size_t k) -> const Int& {
    if (k < r) return p.t[k];
    if (k < r + d) return p.y[k - r];
    return p.x((k - r - d) % e, (k - r - d) / e);
  };

  // The action is linear; column l of its matrix is w . e_l.
  RingSubstitution s;
  s.images.assign(n, Polynomial(n));
  for (std::size_t l = 0; l < n; ++l) {
    const Pi2Element image = act_pi2(q, w, basis(l));
    for (std::size_t k = 0; k < n; ++k) {
      const Int& v = coordinate(image, k);
      if (v != 0) s.images[k] += Polynomial::variable(n, l) * Rat(v);
    }
  }
  return s;
}

IdealInvarianceResult ideal_invariance_check(const GradedPresentation& p, const RingSubstitution& s) {
  if (s.nvars() != p.nvars()) throw DimensionError("ideal_invariance_check: arity mismatch");
  IdealInvarianceResult res{true, true};
  for (const Polynomial& rel : p.relations) {
    const Polynomial image = s.apply(rel);
    if (image != rel) res.on_the_nose = false;
    if (!in_ideal(image, p.relations)) {
      res.invariant = false;
      res.on_the_nose = false;
    }
  }
  return res;
}

GradedPresentation orbit_module(long N, long n1, long n2) {
  if (N <= 0) throw InvariantError("orbit_module: N must be >= 1");
  GradedPresentation p;
  p.names = {"t1", "t2", "y"};
  p.degrees = {2, 2, 2};
  Polynomial rel = Polynomial::variable(3, 2);
  Rat a(n1, N), b(n2, N);
  a.canonicalize();
  b.canonicalize();
  rel += Polynomial::variable(3, 0) * Rat(-a);
  rel += Polynomial::variable(3, 1) * Rat(-b);
  p.relations.push_back(std::move(rel));
  return p;
}

namespace {

// Substitution on (t1, t2, y) read off from the pi_2 action; the x coordinates
// never feed into t or y.
RingSubstitution orbit_substitution(const WreathElement& w) {
  if (w.rank() != 2 || w.ext.m.rows() != 1)
    throw DimensionError("orbit_equivariance_check: needs d = 1 and r = 2");
  const QuadraticForm q(1, {IntMatrix{{2}}}, {IntMatrix{{1}}});
  WreathElement scalar = w;
  if (scalar.ext.n.target_rank() != 1) scalar.ext.n = AltForm(2, 1);
  const RingSubstitution full = substitution_from_wreath(q, scalar);
  RingSubstitution s;
  for (std::size_t k = 0; k < 3; ++k) {
    Polynomial img(3);
    for (const auto& [mono, coef] : full.images[k].terms()) {
      Monomial small(3, 0);
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (i >= 3) throw InvariantError("orbit_equivariance_check: t, y images involve x");
        small[i] = mono[i];
      }
      img.add_term(small, coef);
    }
    s.images.push_back(std::move(img));
  }
  return s;
}

}  // namespace

OrbitIndexMap orbit_equivariance_check(long N, const WreathElement& w) {
  if (N <= 0) throw InvariantError("orbit_equivariance_check: N must be >= 1");
  const RingSubstitution s = orbit_substitution(w);
  OrbitIndexMap out;
  out.N = N;
  out.window = 5 * N;

  auto image_index = [&](long n1, long n2) {
    const Polynomial img = s.apply(orbit_module(N, n1, n2).relations[0]);
    const Rat cy = img.coefficient({0, 0, 1});
    if (cy == 0) throw InvariantError("orbit_equivariance_check: substituted relation lost y");
    Rat m1 = -img.coefficient({1, 0, 0}) * N / cy;
    Rat m2 = -img.coefficient({0, 1, 0}) * N / cy;
    m1.canonicalize();
    m2.canonicalize();
    if (m1.get_den() != 1 || m2.get_den() != 1 || !m1.get_num().fits_slong_p() || !m2.get_num().fits_slong_p())
      throw InvariantError("orbit_equivariance_check: substitution does not permute the relations");
    const std::pair<long, long> target{m1.get_num().get_si(), m2.get_num().get_si()};
    const GradedPresentation ideal = orbit_module(N, target.first, target.second);
    if (!in_ideal(img, ideal.relations))
      throw InvariantError("orbit_equivariance_check: image not in the target ideal");
    return target;
  };

  std::set<std::pair<long, long>> seen;
  bool injective = true;
  for (long n1 = -out.window; n1 <= out.window; ++n1)
    for (long n2 = -out.window; n2 <= out.window; ++n2) {
      const auto target = image_index(n1, n2);
      if (!seen.insert(target).second) injective = false;
      out.entries.push_back({{n1, n2}, target});
    }
  out.injective = injective;

  // Surjectivity on all of Z^2: the inverse element supplies preimages.
  bool inverse_ok = true;
  const QuadraticForm q(1, {IntMatrix{{2}}}, {IntMatrix{{1}}});
  WreathElement scalar = w;
  if (scalar.ext.n.target_rank() != 1) scalar.ext.n = AltForm(2, 1);
  const RingSubstitution back = orbit_substitution(wreath_inv(q, scalar));
  for (const auto& [src, dst] : out.entries) {
    const Polynomial img = back.apply(orbit_module(N, dst.first, dst.second).relations[0]);
    if (!in_ideal(img, orbit_module(N, src.first, src.second).relations)) inverse_ok = false;
  }
  out.bijective = injective && inverse_ok;
  return out;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace looijenga
