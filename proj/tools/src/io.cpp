#include "io.hpp"

#include <fstream>
#include <sstream>

#include "tlalg/error.hpp"

namespace tlalg::cli {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaViolation, msg); }

const Json& require(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) schema(what + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t rank_of(const Json& j, const std::string& what) {
  if (!j.contains("rank")) return 1;
  const auto& r = j.at("rank");
  if (!r.is_number_unsigned() || r.get<std::size_t>() == 0) schema(what + ": rank must be a positive integer");
  return r.get<std::size_t>();
}

Simplex parse_simplex_key(const std::string& key) {
  const std::string prefix = "simplex_";
  if (key.rfind(prefix, 0) != 0) schema("cochain key '" + key + "' must look like simplex_0_4_7");
  Simplex s;
  std::stringstream ss(key.substr(prefix.size()));
  std::string part;
  while (std::getline(ss, part, '_')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      schema("cochain key '" + key + "' must look like simplex_0_4_7");
    s.push_back(std::stoi(part));
  }
  return s;
}

Simplex parse_edge_key(const Complex& c, const std::string& key) {
  auto e = parse_edge_name(key);
  if (!e) schema("transport key '" + key + "' must look like edge_i_j");
  if (!c.contains(*e)) throw Error(ErrorCode::InvalidArgument, "'" + key + "' is not an edge of the complex", {*e});
  return *e;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

ComplexPtr complex_from_json(const Json& j, const std::string& name) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.rfind("builtin:", 0) == 0) return std::make_shared<const Complex>(builtin_model(s.substr(8)));
    schema("complex strings must be builtin:NAME");
  }
  const auto& n = require(j, "vertices", "complex");
  const auto& list = require(j, "simplices", "complex");
  if (!n.is_number_integer() || n.get<int>() <= 0) schema("complex: vertices must be a positive integer");
  if (!list.is_array()) schema("complex: simplices must be an array");
  std::vector<Simplex> simplices;
  for (const auto& s : list) {
    if (!s.is_array()) schema("complex: each simplex must be an array of vertices");
    Simplex t;
    for (const auto& v : s) {
      if (!v.is_number_integer()) schema("complex: vertices must be integers");
      t.push_back(v.get<int>());
    }
    simplices.push_back(std::move(t));
  }
  return std::make_shared<const Complex>(Complex::from_simplices(n.get<int>(), std::move(simplices), name));
}

ComplexPtr load_complex(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return complex_from_json(Json(source), source);
  return complex_from_json(read_json_file(source), source);
}

Json complex_to_json(const Complex& c) {
  Json counts = Json::array();
  for (int n = 0; n <= c.dimension(); ++n) counts.push_back(c.count(n));
  return Json{{"name", c.name()}, {"vertices", c.vertex_count()}, {"dimension", c.dimension()},
              {"counts", counts}, {"euler_characteristic", c.euler_characteristic()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  schema("exact values must be strings like \"3/2\" or integers");
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

RationalMatrix matrix_from_json(const Json& j, std::size_t rank) {
  RationalMatrix m(rank, rank);
  if (!j.is_array()) {
    if (rank != 1) schema("rank-" + std::to_string(rank) + " entries must be row-major arrays");
    m(0, 0) = rational_from_json(j);
    return m;
  }
  // Nested rows or one flat row-major list.
  std::vector<Json> flat;
  for (const auto& row : j) {
    if (row.is_array()) {
      if (row.size() != rank) schema("matrix row has the wrong length");
      for (const auto& x : row) flat.push_back(x);
    } else {
      flat.push_back(row);
    }
  }
  if (flat.size() != rank * rank) schema("matrix needs " + std::to_string(rank * rank) + " entries");
  for (std::size_t i = 0; i < flat.size(); ++i) m(i / rank, i % rank) = rational_from_json(flat[i]);
  return m;
}

Json matrix_to_json(const RationalMatrix& m) {
  if (m.rows() == 1 && m.cols() == 1) return rational_to_json(m(0, 0));
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

LocalSystem representation_from_json(const ComplexPtr& c, const Json& j) {
  const std::size_t rank = rank_of(j, "representation");
  const auto& entries = require(j, "entries", "representation");
  if (!entries.is_object()) schema("representation: entries must be an object");
  std::map<std::string, RationalMatrix> images;
  for (const auto& [key, value] : entries.items()) images.emplace(key, matrix_from_json(value, rank));
  return from_representation(c, rank, images);
}

LocalSystem transports_from_json(const ComplexPtr& c, const Json& j) {
  const std::size_t rank = rank_of(j, "transports");
  const auto& entries = require(j, "transports", "transports");
  if (!entries.is_object()) schema("transports must be an object");
  std::vector<RationalMatrix> tr(c->count(1), RationalMatrix::identity(rank));
  for (const auto& [key, value] : entries.items()) {
    tr[*c->index_of(parse_edge_key(*c, key))] = matrix_from_json(value, rank);
  }
  return LocalSystem::from_transports(c, rank, std::move(tr));
}

LocalSystem representation_from_inline(const ComplexPtr& c, const std::string& text) {
  std::map<std::string, Rational> images;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::ParseError, "--rep expects name=value pairs, got '" + item + "'");
    }
    images[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return from_representation(c, images);
}

std::string simplex_key(const Simplex& s) {
  std::string out = "simplex";
  for (Vertex v : s) out += "_" + std::to_string(v);
  return out;
}

TwistedCochain cochain_from_json(const SystemPtr& system, const Json& j) {
  const auto& deg = require(j, "degree", "cochain");
  if (!deg.is_number_integer()) schema("cochain: degree must be an integer");
  const int n = deg.get<int>();
  const auto& values = require(j, "values", "cochain");
  if (!values.is_object()) schema("cochain: values must be an object");
  const auto& c = system->base();
  const std::size_t r = system->rank();
  TwistedCochain out(system, n);
  for (const auto& [key, value] : values.items()) {
    auto s = parse_simplex_key(key);
    if (static_cast<int>(s.size()) != n + 1) schema("cochain: '" + key + "' is not a " + std::to_string(n) + "-simplex");
    auto idx = c.index_of(s);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "'" + key + "' is not a simplex of the complex", {s});
    RationalVector v;
    if (value.is_array()) {
      for (const auto& x : value) v.push_back(rational_from_json(x));
    } else {
      v.push_back(rational_from_json(value));
    }
    if (v.size() != r) schema("cochain: '" + key + "' needs " + std::to_string(r) + " components");
    out.set_value(*idx, v);
  }
  return out;
}

Json cochain_to_json(const TwistedCochain& c) {
  Json values = Json::object();
  const auto& simplices = c.system().base().simplices(c.degree());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    auto v = c.value(i);
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rational_to_json(x));
    values[simplex_key(simplices[i])] = arr;
  }
  return Json{{"degree", c.degree()}, {"values", values}};
}

AlgebroidParts algebroid_from_json(const Json& j, const ComplexPtr& fallback_complex) {
  if (!j.is_object()) schema("algebroid must be an object");
  ComplexPtr c = j.contains("complex") ? complex_from_json(j.at("complex"), "algebroid") : fallback_complex;
  if (!c) schema("algebroid: no complex given (use a \"complex\" block or --complex)");
  LocalSystem l = LocalSystem::trivial(c, 1);
  if (j.contains("representation") && j.contains("transports")) schema("algebroid: give representation or transports, not both");
  if (j.contains("representation")) {
    l = representation_from_json(c, j.at("representation"));
  } else if (j.contains("transports")) {
    l = transports_from_json(c, j.at("transports"));
  } else {
    schema("algebroid: missing \"representation\" or \"transports\"");
  }
  auto s = share(std::move(l));
  TwistedCochain omega = j.contains("omega") ? cochain_from_json(s, j.at("omega")) : TwistedCochain(s, 2);
  return {c, s, omega};
}

SimplicialMap map_from_json(const Json& j) {
  auto source = complex_from_json(require(j, "source", "map"), "source");
  auto target = complex_from_json(require(j, "target", "map"), "target");
  const auto& vm = require(j, "vertex_map", "map");
  if (!vm.is_array()) schema("map: vertex_map must be an array");
  std::vector<Vertex> m;
  for (const auto& v : vm) {
    if (!v.is_number_integer()) schema("map: vertex_map entries must be integers");
    m.push_back(v.get<int>());
  }
  return SimplicialMap(source, target, m);
}

Json error_to_json(const Error& e) {
  return Json{{"schema_version", kSchemaVersion},
              {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"witnesses", e.witnesses()}}}};
}

Json certificate_to_json(const std::vector<CertificateEntry>& certificate) {
  Json out = Json::array();
  for (const auto& entry : certificate) {
    Json terms = Json::array();
    for (const auto& [term, coeff] : entry.terms) terms.push_back({{"term", term}, {"coefficient", rational_to_json(coeff)}});
    out.push_back({{"degree", entry.degree}, {"target", entry.target}, {"terms", terms}});
  }
  return out;
}

}  // namespace tlalg::cli
