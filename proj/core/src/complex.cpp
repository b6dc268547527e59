#include "tlalg/complex.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tlalg/error.hpp"

namespace tlalg {

namespace {

std::string show(const Simplex& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

Simplex drop(const Simplex& s, std::size_t i) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != i) f.push_back(s[k]);
  return f;
}

}  // namespace

Complex Complex::from_simplices(int vertex_count, std::vector<Simplex> simplices, std::string name) {
  if (vertex_count < 1) throw Error(ErrorCode::InvalidArgument, "complex needs at least one vertex");
  Complex c;
  c.vertex_count_ = vertex_count;
  c.name_ = std::move(name);
  c.by_dim_.resize(1);
  for (Vertex v = 0; v < vertex_count; ++v) c.by_dim_[0].push_back({v});

  for (auto& s : simplices) {
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= vertex_count) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex out of range in simplex " + show(s), {s});
      }
      if (i > 0 && s[i] <= s[i - 1]) {
        throw Error(ErrorCode::NonIncreasingTuple, "simplex " + show(s) + " is not strictly increasing", {s});
      }
    }
    if (s.size() == 1) continue;
    const std::size_t n = s.size() - 1;
    if (c.by_dim_.size() <= n) c.by_dim_.resize(n + 1);
    c.by_dim_[n].push_back(s);
  }

  c.index_.resize(c.by_dim_.size());
  for (std::size_t n = 0; n < c.by_dim_.size(); ++n) {
    auto& list = c.by_dim_[n];
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0 && list[i] == list[i - 1]) {
        throw Error(ErrorCode::DuplicateSimplex, "duplicate simplex " + show(list[i]), {list[i]});
      }
      c.index_[n].emplace(list[i], i);
    }
  }
  // Trim empty top dimensions (e.g. only triangles were listed above edges).
  while (c.by_dim_.size() > 1 && c.by_dim_.back().empty()) {
    c.by_dim_.pop_back();
    c.index_.pop_back();
  }

  for (std::size_t n = 2; n < c.by_dim_.size(); ++n) {
    for (const auto& s : c.by_dim_[n]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = drop(s, i);
        if (!c.index_[n - 1].contains(face)) {
          throw Error(ErrorCode::MissingFace, "face " + show(face) + " of " + show(s) + " is not listed", {s, face});
        }
      }
    }
  }

  c.neighbors_.assign(static_cast<std::size_t>(vertex_count), {});
  for (const auto& e : c.simplices(1)) {
    c.neighbors_[static_cast<std::size_t>(e[0])].push_back(e[1]);
    c.neighbors_[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& nb : c.neighbors_) std::sort(nb.begin(), nb.end());

  std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : c.neighbors_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    Vertex first_missing = static_cast<Vertex>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw Error(ErrorCode::Disconnected, "complex is disconnected: vertex " + std::to_string(first_missing) +
                                             " is unreachable from vertex 0",
                {{first_missing}});
  }
  return c;
}

const std::vector<Simplex>& Complex::simplices(int n) const {
  static const std::vector<Simplex> kEmpty;
  if (n < 0 || n >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> Complex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

int Complex::euler_characteristic() const {
  int chi = 0;
  for (int n = 0; n <= dimension(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<int>(count(n));
  return chi;
}

const NamedLoop* Complex::find_loop(const std::string& name) const {
  for (const auto& l : loops_)
    if (l.name == name) return &l;
  return nullptr;
}

Complex circle_model(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "circle model needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  Complex c = Complex::from_simplices(n, edges, "circle" + std::to_string(n));
  c.generators_ = {"a"};
  c.winding_.assign(c.count(1), {0});
  // Traversing 0 -> n-1 crosses the seam backwards.
  c.winding_[*c.index_of({0, n - 1})] = {-1};
  NamedLoop a{"a", {}};
  for (int i = 0; i < n; ++i) a.path.push_back(i);
  a.path.push_back(0);
  c.loops_ = {a};
  return c;
}

Complex torus_model(int rows, int cols) {
  if (rows < 3 || cols < 3) throw Error(ErrorCode::InvalidArgument, "torus model needs at least a 3x3 grid");
  auto id = [cols](int r, int c) { return r * cols + c; };
  auto wrap = [](int x, int m) { return ((x % m) + m) % m; };

  struct Step {
    Simplex edge;
    int wa, wb;
  };
  std::vector<Step> steps;
  std::vector<Simplex> simplices;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (auto [dr, dc] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) {
        int r2 = wrap(r + dr, rows), c2 = wrap(c + dc, cols);
        int u = id(r, c), w = id(r2, c2);
        int wa = (c + dc - c2) / cols;
        int wb = (r + dr - r2) / rows;
        if (u < w) {
          steps.push_back({{u, w}, wa, wb});
        } else {
          steps.push_back({{w, u}, -wa, -wb});
        }
        simplices.push_back(steps.back().edge);
      }
      int r1 = wrap(r + 1, rows), c1 = wrap(c + 1, cols);
      Simplex t1{id(r, c), id(r, c1), id(r1, c1)};
      Simplex t2{id(r, c), id(r1, c), id(r1, c1)};
      std::sort(t1.begin(), t1.end());
      std::sort(t2.begin(), t2.end());
      simplices.push_back(t1);
      simplices.push_back(t2);
    }
  }
  Complex t = Complex::from_simplices(rows * cols, simplices,
                                      "torus" + std::to_string(rows) + "x" + std::to_string(cols));
  t.generators_ = {"a", "b"};
  t.winding_.assign(t.count(1), {0, 0});
  for (const auto& s : steps) t.winding_[*t.index_of(s.edge)] = {s.wa, s.wb};
  NamedLoop a{"a", {}}, b{"b", {}};
  for (int c = 0; c <= cols; ++c) a.path.push_back(id(0, c % cols));
  for (int r = 0; r <= rows; ++r) b.path.push_back(id(r % rows, 0));
  t.loops_ = {a, b};
  t.torus_model_ = true;
  return t;
}

Complex sphere_model() {
  std::vector<Simplex> s;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s.push_back({i, j});
  s.push_back({0, 1, 2});
  s.push_back({0, 1, 3});
  s.push_back({0, 2, 3});
  s.push_back({1, 2, 3});
  return Complex::from_simplices(4, s, "sphere");
}

Complex simplex_model(int n) {
  if (n < 0 || n > 10) throw Error(ErrorCode::InvalidArgument, "simplex model dimension out of range");
  std::vector<Simplex> s;
  for (unsigned mask = 1; mask < (1U << (n + 1)); ++mask) {
    Simplex t;
    for (int v = 0; v <= n; ++v)
      if (mask & (1U << v)) t.push_back(v);
    s.push_back(t);
  }
  return Complex::from_simplices(n + 1, s, "simplex" + std::to_string(n));
}

Complex builtin_model(const std::string& name) {
  auto number = [&](std::size_t pos, std::size_t len) {
    std::string digits = name.substr(pos, len);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4) {
      throw Error(ErrorCode::InvalidArgument, "unknown builtin model '" + name + "'");
    }
    return std::stoi(digits);
  };
  if (name == "circle") return circle_model(3);
  if (name == "torus") return torus_model(3, 3);
  if (name == "sphere") return sphere_model();
  if (name.rfind("circle", 0) == 0) return circle_model(number(6, std::string::npos));
  if (name.rfind("simplex", 0) == 0) return simplex_model(number(7, std::string::npos));
  if (name.rfind("torus", 0) == 0) {
    auto x = name.find('x', 5);
    if (x == std::string::npos) throw Error(ErrorCode::InvalidArgument, "unknown builtin model '" + name + "'");
    return torus_model(number(5, x - 5), number(x + 1, std::string::npos));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin model '" + name + "'");
}

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  if (static_cast<int>(map_.size()) != source_->vertex_count()) {
    throw Error(ErrorCode::InvalidMap, "vertex map has " + std::to_string(map_.size()) + " entries, source has " +
                                           std::to_string(source_->vertex_count()) + " vertices");
  }
  for (Vertex v : map_) {
    if (v < 0 || v >= target_->vertex_count()) {
      throw Error(ErrorCode::InvalidMap, "vertex map points outside the target complex");
    }
  }
  for (int n = 1; n <= source_->dimension(); ++n) {
    for (const auto& s : source_->simplices(n)) {
      if (!target_->contains(image(s))) {
        throw Error(ErrorCode::InvalidMap, "image of " + show(s) + " is not a simplex of the target", {s});
      }
    }
  }
}

SimplicialMap SimplicialMap::identity(ComplexPtr c) {
  std::vector<Vertex> m(static_cast<std::size_t>(c->vertex_count()));
  for (std::size_t v = 0; v < m.size(); ++v) m[v] = static_cast<Vertex>(v);
  return SimplicialMap(c, c, std::move(m));
}

SimplicialMap SimplicialMap::constant(ComplexPtr source, ComplexPtr target, Vertex v) {
  std::vector<Vertex> m(static_cast<std::size_t>(source->vertex_count()), v);
  return SimplicialMap(std::move(source), std::move(target), std::move(m));
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(map_[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorCode::SourceTargetMismatch, "compose: target of f differs from source of g");
  }
  std::vector<Vertex> m;
  m.reserve(f.vertex_map().size());
  for (Vertex v : f.vertex_map()) m.push_back(g(v));
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(m));
}

bool contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorCode::SourceTargetMismatch, "contiguous: maps have different source or target");
  }
  for (int n = 0; n <= f.source().dimension(); ++n) {
    for (const auto& s : f.source().simplices(n)) {
      Simplex u = f.image(s);
      Simplex gs = g.image(s);
      u.insert(u.end(), gs.begin(), gs.end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      if (!f.target().contains(u)) return false;
    }
  }
  return true;
}

std::vector<Vertex> SpanningTree::path_from_root(Vertex v) const {
  std::vector<Vertex> path{v};
  while (path.back() != root) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

SpanningTree spanning_tree(const Complex& c) {
  SpanningTree t;
  const auto n = static_cast<std::size_t>(c.vertex_count());
  t.parent.assign(n, -1);
  t.tree_edge.assign(c.count(1), false);
  t.parent[0] = 0;
  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (Vertex w : c.neighbors(v)) {
      if (t.parent[static_cast<std::size_t>(w)] != -1) continue;
      t.parent[static_cast<std::size_t>(w)] = v;
      t.tree_edge[*c.index_of({std::min(v, w), std::max(v, w)})] = true;
      queue.push_back(w);
    }
  }
  if (t.order.size() != n) throw Error(ErrorCode::Disconnected, "spanning_tree: complex is disconnected");
  return t;
}

std::vector<std::size_t> non_tree_edges(const Complex& c, const SpanningTree& t) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < c.count(1); ++e)
    if (!t.tree_edge[e]) out.push_back(e);
  return out;
}

std::vector<Vertex> fundamental_loop(const SpanningTree& t, const Simplex& edge) {
  auto path = t.path_from_root(edge[0]);
  auto back = t.path_from_root(edge[1]);
  path.insert(path.end(), back.rbegin(), back.rend());
  return path;
}

std::string edge_name(const Simplex& edge) {
  return "edge_" + std::to_string(edge.at(0)) + "_" + std::to_string(edge.at(1));
}

std::optional<Simplex> parse_edge_name(const std::string& name) {
  if (name.rfind("edge_", 0) != 0) return std::nullopt;
  auto sep = name.find('_', 5);
  if (sep == std::string::npos) return std::nullopt;
  auto digits = [](const std::string& s) {
    return !s.empty() && s.size() < 9 && std::all_of(s.begin(), s.end(), ::isdigit);
  };
  std::string a = name.substr(5, sep - 5), b = name.substr(sep + 1);
  if (!digits(a) || !digits(b)) return std::nullopt;
  return Simplex{std::stoi(a), std::stoi(b)};
}

std::vector<NamedLoop> generator_loops(const Complex& c) {
  if (!c.loops().empty()) return c.loops();
  auto tree = spanning_tree(c);
  std::vector<NamedLoop> out;
  for (auto e : non_tree_edges(c, tree)) {
    const auto& edge = c.simplices(1)[e];
    out.push_back({edge_name(edge), fundamental_loop(tree, edge)});
  }
  return out;
}

}  // namespace tlalg
