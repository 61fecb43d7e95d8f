#include "courant/cli/model.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "courant/calc/text.hpp"
#include "courant/errors.hpp"

namespace courant::cli {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 1, column = 1;
};

Position position_at(const std::string& text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Floats are rejected before json sees them so the error can carry a position.
void reject_floats(const std::string& text) {
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
      continue;
    }
    if (c == '-' || (c >= '0' && c <= '9')) {
      std::size_t j = i;
      bool fractional = false;
      while (j < text.size() && std::string_view("+-0123456789.eE").find(text[j]) != std::string_view::npos) {
        if (text[j] == '.' || text[j] == 'e' || text[j] == 'E') fractional = true;
        ++j;
      }
      if (fractional) {
        const auto p = position_at(text, i);
        throw ParseError("floating-point literal " + text.substr(i, j - i) + "; write rationals as \"n/d\"", p.line,
                         p.column);
      }
      i = j - 1;
    }
  }
}

// Offset of the n-th occurrence (0-based) of "key" followed by a colon.
std::size_t key_offset(const std::string& text, const std::string& key, std::size_t n) {
  const std::string quoted = "\"" + key + "\"";
  std::size_t pos = 0;
  std::size_t seen = 0;
  while ((pos = text.find(quoted, pos)) != std::string::npos) {
    std::size_t j = pos + quoted.size();
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && text[j] == ':' && seen++ == n) return pos;
    pos += quoted.size();
  }
  return 0;
}

struct DuplicateKey {
  std::string key;
};

json parse_json(const std::string& text) {
  reject_floats(text);
  std::vector<std::set<std::string>> scopes;
  json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: scopes.emplace_back(); break;
      case json::parse_event_t::object_end: scopes.pop_back(); break;
      case json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!scopes.back().insert(key).second) throw DuplicateKey{key};
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const DuplicateKey& d) {
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = text.find("\"" + d.key + "\"", pos)) != std::string::npos; ++pos) ++count;
    const auto p = position_at(text, key_offset(text, d.key, count > 1 ? 1 : 0));
    throw ParseError("duplicate name \"" + d.key + "\"", p.line, p.column);
  } catch (const json::parse_error& e) {
    const auto p = position_at(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (const auto colon = msg.rfind(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError(msg, p.line, p.column);
  }
}

[[noreturn]] void invalid(const std::string& block, const std::string& what) {
  throw ValidationError("block '" + block + "': " + what);
}

void allow_keys(const json& j, const std::string& block, std::initializer_list<const char*> keys) {
  if (!j.is_object()) invalid(block, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok |= k == allowed;
    if (!ok) invalid(block, "unknown key '" + k + "'");
  }
}

Rational rational(const json& j, const std::string& block) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      invalid(block, e.what());
    }
  }
  invalid(block, "expected an integer or a rational string, got " + j.dump());
}

std::vector<Rational> rationals(const json& j, const std::string& block) {
  if (!j.is_array()) invalid(block, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational(x, block));
  return out;
}

ChartPtr chart_from(const json& j, const std::string& block) {
  if (!j.is_array()) invalid(block, "expected an array of coordinate names");
  std::vector<std::string> names;
  for (const auto& n : j) {
    if (!n.is_string()) invalid(block, "coordinate names must be strings");
    names.push_back(n.get<std::string>());
  }
  try {
    return make_chart(std::move(names));
  } catch (const std::exception& e) {
    invalid(block, e.what());
  }
}

// One sparse term: exponents, numerator, denominator and, for tensors,
// 1-based frame indices.
Poly term_poly(const json& t, const Chart& chart, const std::string& block) {
  allow_keys(t, block, {"exponents", "numerator", "denominator", "indices"});
  if (!t.contains("numerator")) invalid(block, "term without numerator");
  Rational c = rational(t.at("numerator"), block);
  if (t.contains("denominator")) {
    const Rational den = rational(t.at("denominator"), block);
    if (den == 0) invalid(block, "zero denominator");
    c /= den;
  }
  Monomial m;
  if (t.contains("exponents")) {
    const auto& e = t.at("exponents");
    if (!e.is_array() || e.size() != chart.dim())
      invalid(block, "exponents must list " + std::to_string(chart.dim()) + " entries");
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v].is_number_integer() || e[v].get<long long>() < 0) invalid(block, "exponents must be non-negative");
      const auto p = e[v].get<unsigned>();
      if (p > 0) m = m * Monomial::variable(v, p);
    }
  }
  return Poly::monomial(m, c);
}

Poly poly_from(const json& j, const Chart& chart, const std::string& block) {
  if (j.is_string()) {
    try {
      return parse_poly(j.get<std::string>(), chart);
    } catch (const std::exception& e) {
      invalid(block, e.what());
    }
  }
  if (j.is_number()) return Poly(rational(j, block));
  if (!j.is_array()) invalid(block, "expected a polynomial string or term list");
  Poly p;
  for (const auto& t : j) {
    if (t.contains("indices")) invalid(block, "polynomial terms take no indices");
    p += term_poly(t, chart, block);
  }
  return p;
}

enum class Kind { Vector, Form };

// A multivector or form: text, or a term list with "indices".
AltTensor tensor_from(const json& j, const ChartPtr& chart, Kind kind, std::size_t default_degree,
                      const std::string& block) {
  if (j.is_string()) {
    try {
      const auto text = j.get<std::string>();
      AltTensor t = kind == Kind::Vector ? parse_multivector(text, chart).tensor() : parse_form(text, chart).tensor();
      return t.is_zero() ? AltTensor(chart->dim(), default_degree) : t;
    } catch (const std::exception& e) {
      invalid(block, e.what());
    }
  }
  if (!j.is_array()) invalid(block, "expected a string or a term list");
  std::optional<AltTensor> out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("indices") || !t.at("indices").is_array())
      invalid(block, "tensor terms need an 'indices' array");
    IndexMask mask = 0;
    for (const auto& i : t.at("indices")) {
      if (!i.is_number_integer()) invalid(block, "indices must be integers");
      const auto k = i.get<long long>();
      if (k < 1 || static_cast<std::size_t>(k) > chart->dim()) invalid(block, "index out of range");
      const IndexMask bit = IndexMask(1) << (k - 1);
      if (mask & bit) invalid(block, "repeated index");
      mask |= bit;
    }
    // Indices in the given order: sign of the sorting permutation.
    const auto& idx = t.at("indices");
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (idx[a].get<long long>() > idx[b].get<long long>()) sign = -sign;
    AltTensor term = AltTensor::basis(chart->dim(), mask, term_poly(t, *chart, block) * Poly(sign));
    if (out && out->degree() != term.degree()) invalid(block, "terms of different degrees");
    out = out ? *out + term : term;
  }
  return out ? *out : AltTensor(chart->dim(), default_degree);
}

std::vector<Poly> polys_from(const json& j, const Chart& chart, const std::string& block) {
  if (!j.is_array()) invalid(block, "expected an array of polynomials");
  std::vector<Poly> out;
  for (const auto& p : j) out.push_back(poly_from(p, chart, block));
  return out;
}

DiracBlock dirac_from(const json& j, const Model& m, const std::string& block) {
  allow_keys(j, block, {"on", "frame", "graph_bivector", "graph_form", "null", "point"});
  DiracBlock d;
  if (j.contains("on")) {
    const auto on = j.at("on");
    if (on == "source") d.side = Side::Source;
    else if (on == "target") d.side = Side::Target;
    else invalid(block, "'on' must be \"source\" or \"target\"");
  }
  ChartPtr chart = m.chart;
  if (d.side == Side::Target) {
    if (!m.surjection) invalid(block, "'on: target' needs a surjection block");
    chart = m.surjection->target;
  }
  int forms = 0;
  if (j.contains("frame")) {
    ++forms;
    if (!j.at("frame").is_array()) invalid(block, "frame must be an array");
    for (const auto& s : j.at("frame")) {
      allow_keys(s, block, {"vector", "form"});
      AltTensor x(chart->dim(), 1), xi(chart->dim(), 1);
      if (s.contains("vector")) x = tensor_from(s.at("vector"), chart, Kind::Vector, 1, block);
      if (s.contains("form")) xi = tensor_from(s.at("form"), chart, Kind::Form, 1, block);
      if (x.degree() != 1 || xi.degree() != 1) invalid(block, "frame entries must be vector fields and 1-forms");
      d.frame.emplace_back(x, xi);
    }
  }
  if (j.contains("graph_bivector")) {
    ++forms;
    d.graph_bivector = tensor_from(j.at("graph_bivector"), chart, Kind::Vector, 2, block);
    if (d.graph_bivector->degree() != 2) invalid(block, "graph_bivector must be a bivector");
  }
  if (j.contains("graph_form")) {
    ++forms;
    d.graph_form = tensor_from(j.at("graph_form"), chart, Kind::Form, 2, block);
    if (d.graph_form->degree() != 2) invalid(block, "graph_form must be a 2-form");
  }
  if (j.contains("null")) {
    ++forms;
    if (!j.at("null").is_array()) invalid(block, "null must be an array of vector fields");
    std::vector<AltTensor> fields;
    for (const auto& v : j.at("null")) {
      fields.push_back(tensor_from(v, chart, Kind::Vector, 1, block));
      if (fields.back().degree() != 1) invalid(block, "null entries must be vector fields");
    }
    d.null = std::move(fields);
  }
  if (forms != 1) invalid(block, "give exactly one of frame, graph_bivector, graph_form, null");
  if (j.contains("point")) {
    d.point = rationals(j.at("point"), block);
    if (d.point->size() != chart->dim()) invalid(block, "point has the wrong dimension");
  }
  return d;
}

LieBialgebra bialgebra_from(const json& j) {
  const std::string block = "bialgebra";
  allow_keys(j, block, {"dim", "c", "f"});
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 1)
    invalid(block, "dim must be a positive integer");
  const auto n = j.at("dim").get<std::size_t>();
  LieBialgebra b(n);
  // Entries [i, j, k, value]: the e_k (resp. e^k) component of [e_i, e_j], 1-based.
  auto entries = [&](const char* key, bool dual) {
    if (!j.contains(key)) return;
    const auto& list = j.at(key);
    if (!list.is_array()) invalid(block, std::string(key) + " must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 4) invalid(block, "structure constants are [i, j, k, value]");
      std::size_t idx[3];
      for (int a = 0; a < 3; ++a) {
        if (!e[a].is_number_integer() || e[a].get<long long>() < 1 || e[a].get<std::size_t>() > n)
          invalid(block, "index out of range in " + e.dump());
        idx[a] = e[a].get<std::size_t>() - 1;
      }
      if (idx[0] == idx[1]) invalid(block, "[e_i, e_i] must vanish: " + e.dump());
      const Rational v = rational(e[3], block);
      if (dual) b.set_f(idx[0], idx[1], idx[2], v);
      else b.set_c(idx[0], idx[1], idx[2], v);
    }
  };
  entries("c", false);
  entries("f", true);
  return b;
}

SubalgebraBlock subalgebra_from(const json& j, std::size_t n, const std::string& block) {
  allow_keys(j, block, {"basis", "factor", "r"});
  if (j.size() != 1) invalid(block, "give exactly one of basis, factor, r");
  if (j.contains("factor")) {
    if (j.at("factor") == "g") return {g_factor(n)};
    if (j.at("factor") == "gstar") return {gstar_factor(n)};
    invalid(block, "factor must be \"g\" or \"gstar\"");
  }
  std::vector<std::vector<Rational>> rows;
  const auto& list = j.contains("basis") ? j.at("basis") : j.at("r");
  if (!list.is_array()) invalid(block, "expected an array of rows");
  for (const auto& r : list) rows.push_back(rationals(r, block));
  if (j.contains("basis")) {
    for (const auto& r : rows)
      if (r.size() != 2 * n) invalid(block, "basis vectors need " + std::to_string(2 * n) + " entries");
    return {Subspace::span(2 * n, rows)};
  }
  if (rows.size() != n) invalid(block, "r must be " + std::to_string(n) + " x " + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) invalid(block, "r must be square");
    for (std::size_t b = 0; b <= a; ++b)
      if (rows[a][b] != -rows[b][a]) invalid(block, "r must be skew");
  }
  return {graph_of_r(n, rows)};
}

}  // namespace

Model parse_model(const std::string& text) {
  const json root = parse_json(text);
  allow_keys(root, "model",
             {"chart", "poisson", "options", "dirac", "quotient", "surjection", "hamiltonian", "bialgebra",
              "subalgebras"});
  Model m;
  m.chart = root.contains("chart") ? chart_from(root.at("chart"), "chart") : make_chart({});
  m.poisson = AltTensor(m.chart->dim(), 2);
  if (root.contains("poisson")) {
    const auto t = tensor_from(root.at("poisson"), m.chart, Kind::Vector, 2, "poisson");
    if (t.degree() != 2) invalid("poisson", "expected a bivector");
    m.poisson = t;
  }
  if (root.contains("options")) {
    const auto& o = root.at("options");
    allow_keys(o, "options", {"degree_cap", "point"});
    if (o.contains("degree_cap")) {
      if (!o.at("degree_cap").is_number_integer() || o.at("degree_cap").get<long long>() < 0)
        invalid("options", "degree_cap must be a non-negative integer");
      m.degree_cap = o.at("degree_cap").get<unsigned>();
    }
    if (o.contains("point")) {
      m.point = rationals(o.at("point"), "options");
      if (m.point->size() != m.chart->dim()) invalid("options", "point has the wrong dimension");
    }
  }
  if (root.contains("quotient")) {
    const auto& q = root.at("quotient");
    allow_keys(q, "quotient", {"target", "map", "bracket"});
    if (!q.contains("target") || !q.contains("map")) invalid("quotient", "needs target and map");
    QuotientBlock b{chart_from(q.at("target"), "quotient"), polys_from(q.at("map"), *m.chart, "quotient"), AltTensor()};
    if (b.map.size() != b.target->dim()) invalid("quotient", "map needs one component per target coordinate");
    b.bracket = AltTensor(b.target->dim(), 2);
    if (q.contains("bracket")) {
      const auto t = tensor_from(q.at("bracket"), b.target, Kind::Vector, 2, "quotient");
      if (t.degree() != 2) invalid("quotient", "bracket must be a bivector");
      b.bracket = t;
    }
    m.quotient = std::move(b);
  }
  if (root.contains("surjection")) {
    const auto& s = root.at("surjection");
    allow_keys(s, "surjection", {"target", "map", "target_poisson"});
    if (!s.contains("target") || !s.contains("map")) invalid("surjection", "needs target and map");
    SurjectionBlock b{chart_from(s.at("target"), "surjection"), polys_from(s.at("map"), *m.chart, "surjection"), AltTensor()};
    if (b.map.size() != b.target->dim()) invalid("surjection", "map needs one component per target coordinate");
    b.target_poisson = AltTensor(b.target->dim(), 2);
    if (s.contains("target_poisson")) {
      const auto t = tensor_from(s.at("target_poisson"), b.target, Kind::Vector, 2, "surjection");
      if (t.degree() != 2) invalid("surjection", "target_poisson must be a bivector");
      b.target_poisson = t;
    }
    m.surjection = std::move(b);
  }
  if (root.contains("dirac")) {
    const auto& d = root.at("dirac");
    if (!d.is_object()) invalid("dirac", "expected an object of named blocks");
    for (const auto& [name, block] : d.items()) m.dirac.emplace(name, dirac_from(block, m, "dirac." + name));
  }
  if (root.contains("hamiltonian")) {
    const auto& h = root.at("hamiltonian");
    if (!h.is_object()) invalid("hamiltonian", "expected an object of named blocks");
    for (const auto& [name, block] : h.items()) {
      const std::string label = "hamiltonian." + name;
      allow_keys(block, label, {"form", "bivector"});
      if (block.size() != 1) invalid(label, "give exactly one of form, bivector");
      HamiltonianBlock b;
      b.bivector = block.contains("bivector");
      b.i = b.bivector ? tensor_from(block.at("bivector"), m.chart, Kind::Vector, 2, label)
                       : tensor_from(block.at("form"), m.chart, Kind::Form, 2, label);
      if (b.i.degree() != 2) invalid(label, "expected degree 2");
      m.hamiltonian.emplace(name, std::move(b));
    }
  }
  if (root.contains("bialgebra")) m.bialgebra = bialgebra_from(root.at("bialgebra"));
  if (root.contains("subalgebras")) {
    if (!m.bialgebra) invalid("subalgebras", "needs a bialgebra block");
    const auto& s = root.at("subalgebras");
    if (!s.is_object()) invalid("subalgebras", "expected an object of named blocks");
    for (const auto& [name, block] : s.items())
      m.subalgebras.emplace(name, subalgebra_from(block, m.bialgebra->dim(), "subalgebras." + name));
  }
  return m;
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace courant::cli
