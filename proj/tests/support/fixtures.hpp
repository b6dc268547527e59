#pragma once

// Shared generators and constructed maps for the unit and acceptance suites.

#include <memory>
#include <random>
#include <vector>

#include "tlalg/algebroid.hpp"
#include "tlalg/cochain.hpp"
#include "tlalg/complex.hpp"
#include "tlalg/local_system.hpp"

namespace tlalg::testing {

inline ComplexPtr make(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

inline ComplexPtr circle(int n = 3) { return make(circle_model(n)); }
inline ComplexPtr torus(int rows = 3, int cols = 3) { return make(torus_model(rows, cols)); }

inline RationalMatrix scalar(const Rational& q) { return RationalMatrix::from_rows({{q}}); }

inline Rational random_nonzero(std::mt19937& rng, int max_num = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den), sign(0, 1);
  Rational q(num(rng), den(rng));
  return sign(rng) ? Rational(-q) : q;
}

inline Rational random_rational(std::mt19937& rng, int max_num = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, 3);
  return Rational(num(rng), den(rng));
}

inline RationalMatrix random_invertible(std::mt19937& rng, std::size_t r) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    RationalMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m(i, j) = entry(rng);
    if (is_invertible(m)) return m;
  }
}

/// Random gauge change G(v), applied to a flat system.
inline LocalSystem random_gauge(const LocalSystem& l, std::mt19937& rng) {
  std::vector<RationalMatrix> g;
  for (int v = 0; v < l.base().vertex_count(); ++v) {
    g.push_back(l.rank() == 1 ? scalar(random_nonzero(rng, 3, 3)) : random_invertible(rng, l.rank()));
  }
  return gauge_transform(l, g);
}

/// Flat system with random commuting generator images (built-in models) or
/// the trivial holonomy (simply connected models), in a random gauge.
inline LocalSystem random_flat_system(const ComplexPtr& c, std::size_t rank, std::mt19937& rng) {
  LocalSystem l = LocalSystem::trivial(c, rank);
  if (!c->generators().empty()) {
    std::map<std::string, RationalMatrix> images;
    if (rank == 1) {
      for (const auto& g : c->generators()) images.emplace(g, scalar(random_nonzero(rng)));
    } else {
      // Simultaneously diagonalizable images commute.
      auto p = random_invertible(rng, rank);
      auto pinv = inverse(p);
      for (const auto& g : c->generators()) {
        RationalMatrix d(rank, rank);
        for (std::size_t i = 0; i < rank; ++i) d(i, i) = random_nonzero(rng, 3, 2);
        images.emplace(g, p * d * pinv);
      }
    }
    l = from_representation(c, rank, images);
  }
  return random_gauge(l, rng);
}

inline TwistedCochain random_cochain(const SystemPtr& s, int degree, std::mt19937& rng) {
  RationalVector v(s->base().count(degree) * s->rank());
  for (auto& x : v) x = random_rational(rng);
  return TwistedCochain(s, degree, std::move(v));
}

/// circle(2n) -> circle(n), v -> v mod n (degree 2).
inline SimplicialMap circle_double_cover(int n) {
  std::vector<Vertex> m;
  for (int v = 0; v < 2 * n; ++v) m.push_back(v % n);
  return SimplicialMap(circle(2 * n), circle(n), m);
}

/// torus(rows, k*cols) -> torus(rows, cols), wrapping loop a k times.
inline SimplicialMap torus_wrap_a(int rows, int cols, int k) {
  std::vector<Vertex> m;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < k * cols; ++c) m.push_back(r * cols + c % cols);
  return SimplicialMap(torus(rows, k * cols), torus(rows, cols), m);
}

/// (r, c) -> (c, r) on the square torus.
inline SimplicialMap torus_swap(int n = 3) {
  std::vector<Vertex> m;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.push_back(c * n + r);
  auto t = torus(n, n);
  return SimplicialMap(t, t, m);
}

/// (r, c) -> (r, r - c): reverses loop a and sends b to the diagonal.
/// A plain reflection c -> -c would not keep the diagonals simplicial.
inline SimplicialMap torus_shear_reflect(int n = 3) {
  std::vector<Vertex> m;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.push_back(r * n + ((r - c) % n + n) % n);
  auto t = torus(n, n);
  return SimplicialMap(t, t, m);
}

/// torus(6,6) -> torus(3,3), (r, c) -> (r/2, c/2).
inline SimplicialMap torus_lazy_halving() {
  std::vector<Vertex> m;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m.push_back((r / 2) * 3 + c / 2);
  return SimplicialMap(torus(6, 6), torus(3, 3), m);
}

inline SimplicialMap with_vertex(const SimplicialMap& f, Vertex v, Vertex w) {
  auto m = f.vertex_map();
  m[static_cast<std::size_t>(v)] = w;
  return SimplicialMap(f.source_ptr(), f.target_ptr(), m);
}

struct MapPair {
  const char* name;
  SimplicialMap f;
  SimplicialMap g;
};

/// Constructed contiguous pairs on circle and torus models.
inline std::vector<MapPair> contiguous_pairs() {
  std::vector<MapPair> out;
  auto t33 = torus(3, 3);
  auto c6 = circle(6);
  // circle(6) runs lazily around loop a of the torus; vertex 1 pushed across a triangle.
  SimplicialMap lazy_a(c6, t33, {0, 0, 1, 1, 2, 2});
  out.push_back({"lazy loop a, push 1->(1,1)", lazy_a, with_vertex(lazy_a, 1, 4)});
  SimplicialMap lazy_b(c6, t33, {0, 0, 3, 3, 6, 6});
  out.push_back({"lazy loop b, push 1->(1,1)", lazy_b, with_vertex(lazy_b, 1, 4)});
  SimplicialMap lazy_diag(c6, t33, {0, 0, 4, 4, 8, 8});
  out.push_back({"lazy diagonal, push 1->(1,0)", lazy_diag, with_vertex(lazy_diag, 1, 3)});
  auto halving = torus_lazy_halving();
  out.push_back({"torus halving, push 1->1", halving, with_vertex(halving, 1, 1)});
  out.push_back({"torus halving, push 0->8", halving, with_vertex(halving, 0, 8)});
  return out;
}

}  // namespace tlalg::testing
