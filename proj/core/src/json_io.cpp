#include "looijenga/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "looijenga/errors.hpp"

namespace looijenga {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.dump());
    return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat v;
    if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0)
      throw ParseError("not a rational: " + j.dump());
    v.canonicalize();
    return v;
  }
  throw ParseError("expected a rational, got " + j.dump());
}

Json to_json(const Int& v) { return v.get_str(); }
Json to_json(const Rat& v) { return rat_string(v); }

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
  IntVector out;
  for (const auto& v : j) out.push_back(int_from_json(v));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows), got " + j.dump());
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Int> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const IntVector row = int_vector_from_json(j[i]);
    if (i == 0) cols = row.size();
    if (row.size() != cols) throw ParseError("ragged matrix: " + j.dump());
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(rows, cols, std::move(entries));
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(rat_string(x));
  return out;
}

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<IntMatrix> matrix_list(const Json& j) {
  std::vector<IntMatrix> out;
  // A single matrix is an array of arrays of scalars.
  const bool single = j.is_array() && !j.empty() && j[0].is_array() && (j[0].empty() || !j[0][0].is_array());
  if (single) {
    out.push_back(matrix_from_json(j));
    return out;
  }
  if (!j.is_array()) throw ParseError("expected a list of matrices");
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

QuadraticForm form_from_json(const Json& j) {
  const std::size_t d = size_field(j, "d");
  std::vector<IntMatrix> c = matrix_list(require(j, "c"));
  if (j.contains("e") && size_field(j, "e") != c.size())
    throw ParseError("\"e\" does not match the number of Hessians");
  try {
    if (j.contains("dext")) return QuadraticForm(d, std::move(c), matrix_list(j.at("dext")));
    return QuadraticForm(d, std::move(c));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("invalid form: ") + e.what());
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid form: ") + e.what());
  }
}

Json to_json(const QuadraticForm& q) {
  Json c = Json::array(), dext = Json::array();
  for (const IntMatrix& m : q.hessians()) c.push_back(to_json(m));
  for (const IntMatrix& m : q.extensions()) dext.push_back(to_json(m));
  return Json{{"d", q.source_rank()}, {"e", q.target_rank()}, {"c", c}, {"dext", dext}};
}

AltForm alt_form_from_json(const Json& j, std::size_t r, std::size_t e) {
  AltForm n(r, e);
  auto fill = [&](const Json& comp, std::size_t k) {
    if (!comp.is_object()) throw ParseError("alternating form component must be an object {\"i,j\": v}");
    for (const auto& [key, value] : comp.items()) {
      unsigned i = 0, jj = 0;
      char tail = 0;
      if (std::sscanf(key.c_str(), "%u,%u%c", &i, &jj, &tail) != 2 || i == 0 || jj == 0 || i > r || jj > r ||
          i == jj)
        throw ParseError("bad wedge key \"" + key + "\" (expected \"i,j\", 1-based, i != j)");
      n.set(k, i - 1, jj - 1, int_from_json(value));
    }
  };
  if (j.is_object()) {
    if (e != 1 && !j.empty()) throw ParseError("alternating form: give one object per component when e != 1");
    if (e == 1) fill(j, 0);
  } else if (j.is_array()) {
    if (j.size() != e) throw ParseError("alternating form: wrong number of components");
    for (std::size_t k = 0; k < e; ++k) fill(j[k], k);
  } else {
    throw ParseError("alternating form must be an object or an array of objects");
  }
  return n;
}

Json to_json(const AltForm& n) {
  Json comps = Json::array();
  for (std::size_t k = 0; k < n.target_rank(); ++k) {
    Json comp = Json::object();
    for (std::size_t i = 0; i < n.rank(); ++i)
      for (std::size_t j = i + 1; j < n.rank(); ++j)
        comp[std::to_string(i + 1) + "," + std::to_string(j + 1)] = n.value(k, i, j).get_str();
    comps.push_back(std::move(comp));
  }
  if (n.target_rank() == 1) return comps[0];
  return comps;
}

WreathElement wreath_from_json(const QuadraticForm& q, const Json& j) {
  const std::size_t d = q.source_rank(), e = q.target_rank();
  IntMatrix A = j.contains("A") ? matrix_from_json(j.at("A")) : IntMatrix();
  std::size_t r = A.rows();
  IntMatrix m;
  if (j.contains("m")) {
    m = matrix_from_json(j.at("m"));
    if (r == 0) r = m.cols();
  }
  if (r == 0) r = 2;
  if (A.rows() == 0) A = IntMatrix::identity(r);
  if (m.rows() == 0 && d > 0 && !j.contains("m")) m = IntMatrix(d, r);
  if (d == 0) m = IntMatrix(0, r);
  AltForm n = j.contains("n") ? alt_form_from_json(j.at("n"), r, e) : AltForm(r, e);
  WreathElement w{A, {m, n}};
  try {
    check_wreath(q, w);
  } catch (const Error& err) {
    throw ParseError(std::string("invalid wreath element: ") + err.what());
  }
  return w;
}

Json to_json(const WreathElement& w) {
  return Json{{"A", to_json(w.A)}, {"m", to_json(w.ext.m)}, {"n", to_json(w.ext.n)}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("expected a complex number [re, im], got " + j.dump());
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

ComplexVector complex_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of complex numbers");
  ComplexVector out;
  for (const auto& v : j) out.push_back(complex_from_json(v));
  return out;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Complex z : v) out.push_back(to_json(z));
  return out;
}

FramedLattice lattice_from_json(const Json& j) {
  try {
    return FramedLattice(complex_from_json(require(j, "t1")), complex_from_json(require(j, "t2")));
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid lattice: ") + e.what());
  }
}

Json to_json(const FramedLattice& lat) { return Json{{"t1", to_json(lat.t1())}, {"t2", to_json(lat.t2())}}; }

Json to_json(const GradedPresentation& p) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < p.names.size(); ++i)
    gens.push_back(Json{{"name", p.names[i]}, {"degree", p.degrees[i]}});
  Json rels = Json::array();
  for (const Polynomial& rel : p.relations) {
    Json terms = Json::object();
    for (auto it = rel.terms().rbegin(); it != rel.terms().rend(); ++it)
      terms[monomial_string(it->first, p.names)] = rat_string(it->second);
    rels.push_back(std::move(terms));
  }
  return Json{{"generators", gens}, {"relations", rels}};
}

GradedPresentation presentation_from_json(const Json& j) {
  GradedPresentation p;
  for (const auto& g : require(j, "generators")) {
    p.names.push_back(require(g, "name").get<std::string>());
    p.degrees.push_back(require(g, "degree").get<unsigned>());
  }
  const std::size_t n = p.names.size();
  for (const auto& rel : require(j, "relations")) {
    Polynomial poly(n);
    for (const auto& [key, value] : rel.items()) {
      Monomial mono(n, 0);
      if (key != "1") {
        std::stringstream ss(key);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
          unsigned power = 1;
          const auto caret = factor.find('^');
          std::string name = factor.substr(0, caret);
          if (caret != std::string::npos) power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
          std::size_t idx = n;
          for (std::size_t i = 0; i < n; ++i)
            if (p.names[i] == name) idx = i;
          if (idx == n) throw ParseError("unknown generator \"" + name + "\" in relation");
          mono[idx] += power;
        }
      }
      poly.add_term(mono, rat_from_json(value));
    }
    p.relations.push_back(std::move(poly));
  }
  return p;
}

std::string rat_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return c.get_str();
}

std::string double_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace looijenga
