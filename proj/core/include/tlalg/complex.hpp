#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tlalg {

using Vertex = int;
/// Strictly increasing vertex tuple.
using Simplex = std::vector<Vertex>;

/// A closed loop given as a vertex path v0, v1, ..., vk = v0 whose
/// consecutive vertices span edges (or coincide).
struct NamedLoop {
  std::string name;
  std::vector<Vertex> path;
};

/// Finite ordered simplicial complex: face-closed, connected, simplices
/// stored as strictly increasing tuples sorted lexicographically per
/// dimension. Dimension 0 holds the singletons {v}.
///
/// Built-in models additionally carry named generator loops and, per edge,
/// the integer winding of the edge around each generator. The winding data
/// lets a representation of the (abelian) fundamental group be realized as
/// edge transports.
class Complex {
 public:
  /// Validates and builds a complex. Every face of every listed simplex must
  /// also be listed (vertices are implicit). Throws Error with code
  /// NonIncreasingTuple, VertexOutOfRange, DuplicateSimplex, MissingFace or
  /// Disconnected on the first violation found.
  static Complex from_simplices(int vertex_count, std::vector<Simplex> simplices, std::string name = "");

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::string& name() const { return name_; }

  /// Simplices of dimension n, sorted; empty for n < 0 or n > dimension().
  const std::vector<Simplex>& simplices(int n) const;
  std::size_t count(int n) const { return simplices(n).size(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  int euler_characteristic() const;

  /// Sorted neighbors of v along edges.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[static_cast<std::size_t>(v)]; }

  const std::vector<NamedLoop>& loops() const { return loops_; }
  const NamedLoop* find_loop(const std::string& name) const;

  /// Generator names with per-edge winding numbers; empty for user complexes.
  const std::vector<std::string>& generators() const { return generators_; }
  /// Winding of edge index e (traversed from its smaller to larger vertex)
  /// around each generator.
  const std::vector<int>& winding(std::size_t edge) const { return winding_[edge]; }

  /// Grid tori (any size) report true.
  bool is_torus_model() const { return torus_model_; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
  }

  // Built-in models.
  friend Complex circle_model(int n);
  friend Complex torus_model(int rows, int cols);

 private:
  Complex() = default;

  int vertex_count_ = 0;
  std::string name_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<NamedLoop> loops_;
  std::vector<std::string> generators_;
  std::vector<std::vector<int>> winding_;
  bool torus_model_ = false;
};

using ComplexPtr = std::shared_ptr<const Complex>;

/// n-cycle on vertices 0..n-1 (n >= 3) with generator loop "a" = 0,1,...,n-1,0.
Complex circle_model(int n = 3);

/// rows x cols grid triangulation of the torus (rows, cols >= 3). Vertex
/// (r, c) has index r*cols + c; each grid square is split along the diagonal
/// (r,c)-(r+1,c+1). Loop "a" runs along row 0 (increasing column), loop "b"
/// along column 0 (increasing row).
Complex torus_model(int rows = 3, int cols = 3);

/// Boundary of the tetrahedron (a 2-sphere, simply connected).
Complex sphere_model();

/// Full n-simplex with all faces (contractible).
Complex simplex_model(int n);

/// Resolves "circle", "circleN", "torus3x3", "torusRxC", "sphere", "simplexN".
/// Throws Error{InvalidArgument} for unknown names.
Complex builtin_model(const std::string& name);

/// Vertex-level map whose image of each source simplex spans a target simplex.
class SimplicialMap {
 public:
  /// Throws Error{InvalidMap} when the vertex map has the wrong size, points
  /// outside the target, or sends a simplex to a non-simplex.
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> vertex_map);

  static SimplicialMap identity(ComplexPtr c);
  static SimplicialMap constant(ComplexPtr source, ComplexPtr target, Vertex v);

  const Complex& source() const { return *source_; }
  const Complex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  Vertex operator()(Vertex v) const { return map_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& vertex_map() const { return map_; }

  /// Sorted, deduplicated image of a simplex.
  Simplex image(const Simplex& s) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<Vertex> map_;
};

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// True iff f(s) U g(s) spans a target simplex for every source simplex s.
/// Throws Error{SourceTargetMismatch} when the maps have different
/// source or target complexes.
bool contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Breadth-first spanning tree from vertex 0, neighbors visited in ascending
/// order.
struct SpanningTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // parent[root] == root
  std::vector<Vertex> order;   // BFS visit order
  std::vector<bool> tree_edge; // indexed by edge index

  /// Vertex path root -> ... -> v along the tree.
  std::vector<Vertex> path_from_root(Vertex v) const;
};

SpanningTree spanning_tree(const Complex& c);

/// Edges (as indices) not in the tree, ascending.
std::vector<std::size_t> non_tree_edges(const Complex& c, const SpanningTree& t);

/// Fundamental loop of a non-tree edge (i, j): root ->...-> i -> j ->...-> root.
std::vector<Vertex> fundamental_loop(const SpanningTree& t, const Simplex& edge);

/// "edge_i_j" naming used by representation files.
std::string edge_name(const Simplex& edge);
std::optional<Simplex> parse_edge_name(const std::string& name);

/// Generator loops used for reports: the complex's named loops when present,
/// otherwise the fundamental loops of the non-tree edges.
std::vector<NamedLoop> generator_loops(const Complex& c);

}  // namespace tlalg
