#include "tlalg/local_system.hpp"

#include <algorithm>

#include "tlalg/error.hpp"

namespace tlalg {

namespace {

RationalMatrix power(const RationalMatrix& m, int e) {
  RationalMatrix base = e < 0 ? inverse(m) : m;
  RationalMatrix out = RationalMatrix::identity(m.rows());
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

void require_same_base(const Complex& a, const Complex& b, const char* what) {
  if (!(a == b)) throw Error(ErrorCode::BaseMismatch, std::string(what) + ": base complexes differ");
}

}  // namespace

LocalSystem LocalSystem::from_transports(ComplexPtr base, std::size_t rank, std::vector<RationalMatrix> transports) {
  if (transports.size() != base->count(1)) {
    throw Error(ErrorCode::DimensionMismatch, "expected one transport per edge (" + std::to_string(base->count(1)) +
                                                  "), got " + std::to_string(transports.size()));
  }
  for (std::size_t e = 0; e < transports.size(); ++e) {
    const auto& t = transports[e];
    if (t.rows() != rank || t.cols() != rank) {
      throw Error(ErrorCode::DimensionMismatch, "transport on " + edge_name(base->simplices(1)[e]) + " is not " +
                                                    std::to_string(rank) + "x" + std::to_string(rank));
    }
    if (!is_invertible(t)) {
      throw Error(ErrorCode::SingularMatrix, "transport on " + edge_name(base->simplices(1)[e]) + " is singular",
                  {base->simplices(1)[e]});
    }
  }
  return LocalSystem(std::move(base), rank, std::move(transports));
}

LocalSystem LocalSystem::trivial(ComplexPtr base, std::size_t rank) {
  std::vector<RationalMatrix> t(base->count(1), RationalMatrix::identity(rank));
  return LocalSystem(std::move(base), rank, std::move(t));
}

RationalMatrix LocalSystem::transport(Vertex u, Vertex v) const {
  if (u == v) return RationalMatrix::identity(rank_);
  auto e = base_->index_of({std::min(u, v), std::max(u, v)});
  if (!e) {
    throw Error(ErrorCode::InvalidArgument,
                "no edge between vertices " + std::to_string(u) + " and " + std::to_string(v));
  }
  return u < v ? transports_[*e] : inverse(transports_[*e]);
}

std::vector<Simplex> check_flat(const LocalSystem& system) {
  std::vector<Simplex> bad;
  const auto& c = system.base();
  for (const auto& t : c.simplices(2)) {
    const auto& ij = system.transport(*c.index_of({t[0], t[1]}));
    const auto& jk = system.transport(*c.index_of({t[1], t[2]}));
    const auto& ik = system.transport(*c.index_of({t[0], t[2]}));
    if (!(ij * jk == ik)) bad.push_back(t);
  }
  return bad;
}

RationalMatrix path_transport(const LocalSystem& system, const std::vector<Vertex>& path) {
  RationalMatrix out = RationalMatrix::identity(system.rank());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out = out * system.transport(path[i], path[i + 1]);
  return out;
}

LocalSystem gauge_transform(const LocalSystem& system, const std::vector<RationalMatrix>& gauge) {
  const auto& c = system.base();
  if (gauge.size() != static_cast<std::size_t>(c.vertex_count())) {
    throw Error(ErrorCode::DimensionMismatch, "gauge needs one matrix per vertex");
  }
  std::vector<RationalMatrix> inv;
  inv.reserve(gauge.size());
  for (const auto& g : gauge) inv.push_back(inverse(g));
  std::vector<RationalMatrix> t;
  t.reserve(c.count(1));
  for (std::size_t e = 0; e < c.count(1); ++e) {
    const auto& edge = c.simplices(1)[e];
    t.push_back(gauge[static_cast<std::size_t>(edge[0])] * system.transport(e) *
                inv[static_cast<std::size_t>(edge[1])]);
  }
  return LocalSystem::from_transports(system.base_ptr(), system.rank(), std::move(t));
}

LocalSystem to_tree_gauge(const LocalSystem& system, const SpanningTree& tree) {
  // gauge(v) carries the fiber at v to the root along the tree path.
  std::vector<RationalMatrix> gauge(static_cast<std::size_t>(system.base().vertex_count()));
  for (Vertex v : tree.order) {
    if (v == tree.root) {
      gauge[static_cast<std::size_t>(v)] = RationalMatrix::identity(system.rank());
    } else {
      Vertex p = tree.parent[static_cast<std::size_t>(v)];
      gauge[static_cast<std::size_t>(v)] = gauge[static_cast<std::size_t>(p)] * system.transport(p, v);
    }
  }
  return gauge_transform(system, gauge);
}

LocalSystem from_representation(ComplexPtr base, std::size_t rank,
                                 const std::map<std::string, RationalMatrix>& images) {
  if (rank == 0) throw Error(ErrorCode::InvalidArgument, "representation rank must be positive");
  const auto& c = *base;
  const auto& gens = c.generators();
  bool named = false, edges = false;
  for (const auto& [key, m] : images) {
    if (m.rows() != rank || m.cols() != rank) {
      throw Error(ErrorCode::DimensionMismatch, "image of '" + key + "' is not " + std::to_string(rank) + "x" +
                                                    std::to_string(rank));
    }
    if (!is_invertible(m)) throw Error(ErrorCode::SingularMatrix, "image of '" + key + "' is singular");
    if (std::find(gens.begin(), gens.end(), key) != gens.end()) {
      named = true;
    } else if (parse_edge_name(key)) {
      edges = true;
    } else {
      throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + key + "' for complex " + c.name());
    }
  }
  if (named && edges) {
    throw Error(ErrorCode::InvalidArgument, "representation mixes named generators and edge entries");
  }

  auto tree = spanning_tree(c);
  const auto id = RationalMatrix::identity(rank);
  std::vector<RationalMatrix> transports(c.count(1), id);

  if (named) {
    std::vector<RationalMatrix> g;
    for (const auto& name : gens) {
      auto it = images.find(name);
      g.push_back(it == images.end() ? id : it->second);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (!(g[i] * g[j] == g[j] * g[i])) {
          throw Error(ErrorCode::RelationViolation,
                      "images of '" + gens[i] + "' and '" + gens[j] + "' do not commute");
        }
      }
    }
    for (std::size_t e = 0; e < c.count(1); ++e) {
      RationalMatrix t = id;
      for (std::size_t k = 0; k < g.size(); ++k) t = t * power(g[k], c.winding(e)[k]);
      transports[e] = std::move(t);
    }
    auto seam = LocalSystem::from_transports(base, rank, std::move(transports));
    auto gauged = to_tree_gauge(seam, tree);
    if (auto bad = check_flat(gauged); !bad.empty()) {
      throw Error(ErrorCode::RelationViolation, "representation violates triangle relations", bad);
    }
    return gauged;
  }

  for (const auto& [key, m] : images) {
    auto edge = *parse_edge_name(key);
    auto e = c.index_of(edge);
    if (!e) throw Error(ErrorCode::UnknownGenerator, "'" + key + "' is not an edge of " + c.name());
    if (tree.tree_edge[*e]) {
      throw Error(ErrorCode::UnknownGenerator, "'" + key + "' is a spanning-tree edge, not a generator");
    }
    transports[*e] = m;
  }
  auto system = LocalSystem::from_transports(base, rank, std::move(transports));
  if (auto bad = check_flat(system); !bad.empty()) {
    throw Error(ErrorCode::RelationViolation, "representation violates triangle relations", bad);
  }
  return system;
}

LocalSystem from_representation(ComplexPtr base, const std::map<std::string, Rational>& images) {
  std::map<std::string, RationalMatrix> m;
  for (const auto& [k, v] : images) m.emplace(k, RationalMatrix::from_rows({{v}}));
  return from_representation(std::move(base), 1, m);
}

Holonomy holonomy(const LocalSystem& system) {
  if (auto bad = check_flat(system); !bad.empty()) {
    throw Error(ErrorCode::NotFlat, "holonomy: local system is not flat", bad);
  }
  Holonomy h;
  const auto& c = system.base();
  h.tree = spanning_tree(c);
  auto gauged = to_tree_gauge(system, h.tree);
  for (auto e : non_tree_edges(c, h.tree)) h.generator_images.emplace(edge_name(c.simplices(1)[e]), gauged.transport(e));
  for (const auto& loop : c.loops()) h.loop_images.emplace(loop.name, path_transport(system, loop.path));
  h.relations_checked = true;
  return h;
}

LocalSystem dual(const LocalSystem& system) {
  std::vector<RationalMatrix> t;
  t.reserve(system.transports().size());
  for (const auto& m : system.transports()) t.push_back(inverse(m).transpose());
  return LocalSystem::from_transports(system.base_ptr(), system.rank(), std::move(t));
}

std::vector<std::vector<std::size_t>> monomials(std::size_t rank, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < rank; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

RationalMatrix sym_power_matrix(const RationalMatrix& t, std::size_t k) {
  const std::size_t r = t.rows();
  auto basis = monomials(r, k);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  RationalMatrix out(basis.size(), basis.size());
  // Column beta: expand prod_m (sum_i t(i, beta_m) x_i) over all index tuples.
  std::vector<std::size_t> tuple(k, 0);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& beta = basis[col];
    std::fill(tuple.begin(), tuple.end(), 0);
    while (true) {
      Rational coeff = 1;
      for (std::size_t m = 0; m < k && coeff != 0; ++m) coeff *= t(tuple[m], beta[m]);
      if (coeff != 0) {
        auto key = tuple;
        std::sort(key.begin(), key.end());
        out(index.at(key), col) += coeff;
      }
      std::size_t pos = 0;
      while (pos < k && ++tuple[pos] == r) tuple[pos++] = 0;
      if (pos == k) break;
    }
  }
  return out;
}

std::vector<Rational> apolar_weights(std::size_t rank, std::size_t k) {
  std::vector<Rational> w;
  for (const auto& mono : monomials(rank, k)) {
    Integer f = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      run = (i > 0 && mono[i] == mono[i - 1]) ? run + 1 : 1;
      f *= run;
    }
    w.emplace_back(f);
  }
  return w;
}

LocalSystem sym_power(const LocalSystem& system, std::size_t k) {
  std::vector<RationalMatrix> t;
  t.reserve(system.transports().size());
  for (const auto& m : system.transports()) t.push_back(sym_power_matrix(m, k));
  std::size_t r = monomials(system.rank(), k).size();
  return LocalSystem::from_transports(system.base_ptr(), r, std::move(t));
}

LocalSystem tensor_product(const LocalSystem& a, const LocalSystem& b) {
  require_same_base(a.base(), b.base(), "tensor_product");
  std::vector<RationalMatrix> t;
  t.reserve(a.transports().size());
  for (std::size_t e = 0; e < a.transports().size(); ++e) t.push_back(kronecker(a.transport(e), b.transport(e)));
  return LocalSystem::from_transports(a.base_ptr(), a.rank() * b.rank(), std::move(t));
}

LocalSystem pullback_system(const SimplicialMap& f, const LocalSystem& system) {
  require_same_base(f.target(), system.base(), "pullback_system");
  const auto& src = f.source();
  std::vector<RationalMatrix> t;
  t.reserve(src.count(1));
  for (const auto& e : src.simplices(1)) t.push_back(system.transport(f(e[0]), f(e[1])));
  return LocalSystem::from_transports(f.source_ptr(), system.rank(), std::move(t));
}

bool iso_rank1(const LocalSystem& a, const LocalSystem& b) {
  if (a.rank() != 1 || b.rank() != 1) {
    throw Error(ErrorCode::UnsupportedRank, "iso_rank1: isomorphism testing is only supported for rank 1");
  }
  require_same_base(a.base(), b.base(), "iso_rank1");
  return holonomy(a).generator_images == holonomy(b).generator_images;
}

}  // namespace tlalg
