#include "looijenga/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace looijenga {

unsigned degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

namespace {

void enumerate(std::size_t var, unsigned remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Monomial cur(nvars, 0);
  enumerate(0, k, cur, out);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("Polynomial::variable: index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  Polynomial p(nvars);
  p.add_term(m, Rat(1));
  return p;
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (m.size() != nvars_) throw DimensionError("Polynomial::add_term: monomial has wrong arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (degree(m) != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  out += o;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DimensionError("Polynomial sum: variable counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rat(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw DimensionError("Polynomial product: variable counts differ");
  Polynomial out(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(multiply(m1, m2), c1 * c2);
  return out;
}

Polynomial Polynomial::operator*(const Rat& s) const {
  Polynomial out(nvars_);
  if (s == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) throw DimensionError("Polynomial::substitute: need one image per variable");
  const std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) term = term * images[i];
    out += term;
  }
  return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "v" + std::to_string(i); };
  std::ostringstream os;
  bool first = true;
  // Graded reverse lexicographic order, largest first.
  std::vector<const std::pair<const Monomial, Rat>*> order;
  for (const auto& term : terms_) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    const unsigned da = degree(a->first), db = degree(b->first);
    if (da != db) return da > db;
    for (std::size_t i = a->first.size(); i-- > 0;)
      if (a->first[i] != b->first[i]) return a->first[i] < b->first[i];
    return false;
  });
  for (const auto* term : order) {
    const auto& [m, c] = *term;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant_term = degree(m) == 0;
    if (constant_term || mag != 1) {
      os << mag.get_str();
      if (!constant_term) os << '*';
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << name(i);
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

RowEchelon::SparseRow RowEchelon::reduce(SparseRow row) const {
  std::size_t floor = 0;
  for (;;) {
    auto lead = row.lower_bound(floor);
    // Skip leading entries that have no pivot; they stay in the remainder.
    while (lead != row.end() && !basis_.contains(lead->first)) ++lead;
    if (lead == row.end()) return row;
    const std::size_t col = lead->first;
    const Rat factor = lead->second;
    for (const auto& [c, v] : basis_.at(col)) {
      auto [it, inserted] = row.try_emplace(c, 0);
      it->second -= factor * v;
      if (it->second == 0) row.erase(it);
    }
    floor = col + 1;
  }
}

bool RowEchelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t pivot = row.begin()->first;
  const Rat inv = 1 / row.begin()->second;
  for (auto& [c, v] : row) v *= inv;
  // Keep the basis fully reduced so that reduce() never revisits a column.
  for (auto& [p, other] : basis_) {
    auto it = other.find(pivot);
    if (it == other.end()) continue;
    const Rat factor = it->second;
    for (const auto& [c, v] : row) {
      auto [jt, inserted] = other.try_emplace(c, 0);
      jt->second -= factor * v;
      if (jt->second == 0) other.erase(jt);
    }
  }
  basis_.emplace(pivot, std::move(row));
  return true;
}

namespace {

void require_homogeneous(std::span<const Polynomial> relations, std::size_t nvars) {
  for (const auto& r : relations) {
    if (r.nvars() != nvars) throw DimensionError("relation has the wrong number of variables");
    if (!r.is_homogeneous()) throw InvariantError("relation is not homogeneous: " + r.to_string());
  }
}

// Echelon basis of the degree-k piece of the ideal, columns indexed by `index`.
RowEchelon ideal_piece(std::span<const Polynomial> relations, std::size_t nvars, unsigned k,
                       const std::map<Monomial, std::size_t>& index) {
  RowEchelon ech;
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    const unsigned rd = rel.total_degree();
    if (rd > k) continue;
    for (const auto& mult : monomials_of_degree(nvars, k - rd)) {
      RowEchelon::SparseRow row;
      for (const auto& [m, c] : rel.terms()) row.emplace(index.at(multiply(m, mult)), c);
      ech.insert(std::move(row));
    }
  }
  return ech;
}

std::map<Monomial, std::size_t> index_monomials(std::size_t nvars, unsigned k) {
  std::map<Monomial, std::size_t> index;
  for (const auto& m : monomials_of_degree(nvars, k)) index.emplace(m, index.size());
  return index;
}

}  // namespace

std::vector<std::size_t> quotient_dimensions(std::span<const Polynomial> relations,
                                             std::size_t nvars, unsigned max_poly_degree) {
  require_homogeneous(relations, nvars);
  std::vector<std::size_t> dims;
  for (unsigned k = 0; k <= max_poly_degree; ++k) {
    auto index = index_monomials(nvars, k);
    RowEchelon ech = ideal_piece(relations, nvars, k, index);
    dims.push_back(index.size() - ech.rank());
  }
  return dims;
}

bool in_ideal(const Polynomial& p, std::span<const Polynomial> relations) {
  if (p.is_zero()) return true;
  if (!p.is_homogeneous()) throw InvariantError("in_ideal: target is not homogeneous");
  const std::size_t nvars = p.nvars();
  require_homogeneous(relations, nvars);
  const unsigned k = p.total_degree();
  auto index = index_monomials(nvars, k);
  RowEchelon ech = ideal_piece(relations, nvars, k, index);
  RowEchelon::SparseRow row;
  for (const auto& [m, c] : p.terms()) row.emplace(index.at(m), c);
  return ech.reduce(std::move(row)).empty();
}

std::vector<Int> complete_intersection_series(std::span<const unsigned> relation_degrees,
                                              std::size_t nvars, unsigned max_poly_degree) {
  const std::size_t len = max_poly_degree + 1;
  std::vector<Int> series(len, Int(0));
  // 1 / (1 - q)^nvars
  for (std::size_t k = 0; k < len; ++k) {
    if (nvars == 0) {
      series[k] = k == 0 ? 1 : 0;
      continue;
    }
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), k + nvars - 1, nvars - 1);
    series[k] = binom;
  }
  for (unsigned d : relation_degrees) {
    std::vector<Int> next = series;
    for (std::size_t k = d; k < len; ++k) next[k] -= series[k - d];
    series = std::move(next);
  }
  return series;
}

}  // namespace looijenga
