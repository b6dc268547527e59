#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "tlalg/complex.hpp"
#include "tlalg/local_system.hpp"
#include "tlalg/matrix.hpp"

namespace tlalg {

using SystemPtr = std::shared_ptr<const LocalSystem>;

inline SystemPtr share(LocalSystem s) { return std::make_shared<const LocalSystem>(std::move(s)); }

/// Degree-n cochain with values in a local system: one fiber vector per
/// n-simplex, stored contiguously (simplex-major, in the complex's order).
class TwistedCochain {
 public:
  TwistedCochain(SystemPtr system, int degree);
  TwistedCochain(SystemPtr system, int degree, RationalVector values);

  const LocalSystem& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }
  int degree() const { return degree_; }
  std::size_t rank() const { return system_->rank(); }
  std::size_t simplex_count() const { return values_.size() / std::max<std::size_t>(rank(), 1); }

  const RationalVector& values() const { return values_; }
  RationalVector value(std::size_t simplex) const;
  void set_value(std::size_t simplex, const RationalVector& v);
  const Rational& at(std::size_t simplex, std::size_t component) const { return values_[simplex * rank() + component]; }

  bool is_zero() const;

  TwistedCochain& operator+=(const TwistedCochain& o);
  TwistedCochain& operator-=(const TwistedCochain& o);
  friend TwistedCochain operator+(TwistedCochain a, const TwistedCochain& b) { return a += b; }
  friend TwistedCochain operator-(TwistedCochain a, const TwistedCochain& b) { return a -= b; }
  friend TwistedCochain operator*(const Rational& s, TwistedCochain a);

  friend bool operator==(const TwistedCochain& a, const TwistedCochain& b) {
    return a.degree_ == b.degree_ && a.values_ == b.values_ && *a.system_ == *b.system_;
  }

 private:
  void check_compatible(const TwistedCochain& o) const;

  SystemPtr system_;
  int degree_;
  RationalVector values_;
};

/// Matrix of d on C^n(X; L) -> C^{n+1}(X; L) with the front-vertex
/// convention
///   (d phi)(v0..v{n+1}) = T(v0,v1) phi(v1..v{n+1}) + sum_{i>=1} (-1)^i phi(..^vi..).
/// n = -1 yields the zero map from the zero space.
RationalMatrix coboundary_matrix(const LocalSystem& system, int n);
TwistedCochain coboundary(const TwistedCochain& phi);

/// Untwisted coboundary over any field.
template <Field F>
Matrix<F> untwisted_coboundary_matrix(const Complex& c, int n) {
  Matrix<F> d(c.count(n + 1), n < 0 ? 0 : c.count(n));
  if (n < 0) return d;
  const auto& upper = c.simplices(n + 1);
  for (std::size_t row = 0; row < upper.size(); ++row) {
    const auto& s = upper[row];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != i) face.push_back(s[k]);
      d(row, *c.index_of(face)) += (i % 2 == 0) ? F(1) : F(-1);
    }
  }
  return d;
}

/// Basis of H^n = ker(d_n) / im(d_{n-1}) for a cochain complex given by its
/// two adjacent differentials. Representatives are first-pivot RREF picks.
template <Field F>
class CohomologyBasis {
 public:
  CohomologyBasis() = default;
  CohomologyBasis(const Matrix<F>& d_prev, const Matrix<F>& d_next) : d_next_(d_next) {
    const std::size_t dim = d_next.cols();
    auto cycles = kernel_basis(d_next);
    std::vector<Vector<F>> bounds;
    for (auto c : rref(d_prev).pivot_cols) bounds.push_back(d_prev.column(c));
    representatives_ = quotient_basis(cycles, bounds);
    image_basis_ = std::move(bounds);
    std::vector<Vector<F>> all = image_basis_;
    all.insert(all.end(), representatives_.begin(), representatives_.end());
    solver_ = Matrix<F>::from_columns(all, dim);
  }

  std::size_t dimension() const { return representatives_.size(); }
  const std::vector<Vector<F>>& representatives() const { return representatives_; }
  const std::vector<Vector<F>>& boundaries() const { return image_basis_; }

  bool is_cocycle(const Vector<F>& z) const {
    auto dz = d_next_ * z;
    return std::all_of(dz.begin(), dz.end(), [](const F& x) { return tlalg::is_zero(x); });
  }

  /// Coordinates of the class of z in the representative basis. Throws
  /// Error{NotACocycle} when d z != 0.
  Vector<F> coordinates(const Vector<F>& z) const {
    if (!is_cocycle(z)) throw Error(ErrorCode::NotACocycle, "cochain is not a cocycle");
    auto x = solve(solver_, z);
    if (!x) throw Error(ErrorCode::NotACocycle, "cocycle not expressible in cohomology basis");
    return Vector<F>(x->begin() + static_cast<std::ptrdiff_t>(image_basis_.size()), x->end());
  }

  bool is_coboundary(const Vector<F>& z) const {
    auto c = coordinates(z);
    return std::all_of(c.begin(), c.end(), [](const F& x) { return tlalg::is_zero(x); });
  }

 private:
  Matrix<F> d_next_;
  std::vector<Vector<F>> representatives_;
  std::vector<Vector<F>> image_basis_;
  Matrix<F> solver_;
};

template <Field F>
CohomologyBasis<F> untwisted_cohomology(const Complex& c, int n) {
  return CohomologyBasis<F>(untwisted_coboundary_matrix<F>(c, n - 1), untwisted_coboundary_matrix<F>(c, n));
}

/// Twisted cohomology H^n(X; L) with cocycle representatives.
class CohomologySpace {
 public:
  CohomologySpace(SystemPtr system, int degree);

  int degree() const { return degree_; }
  std::size_t dimension() const { return basis_.dimension(); }
  const std::vector<TwistedCochain>& representatives() const { return reps_; }
  const LocalSystem& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }

  /// Class coordinates of a cocycle in the representative basis.
  RationalVector coordinates(const TwistedCochain& z) const;
  bool is_coboundary(const TwistedCochain& z) const;

 private:
  SystemPtr system_;
  int degree_;
  CohomologyBasis<Rational> basis_;
  std::vector<TwistedCochain> reps_;
};

/// Throws Error{NotFlat} when the system is not flat. Degrees outside
/// [0, dim X] give the zero space.
CohomologySpace cohomology(SystemPtr system, int n);
CohomologySpace cohomology(const LocalSystem& system, int n);

/// Sign of the permutation sorting `tuple`, and the sorted tuple.
std::pair<int, Simplex> sort_with_sign(Simplex tuple);

/// Cochain pullback along f by precomposition: for a source simplex with
/// distinct images, the value is sign * T(f(v0), w0) * phi(w), w the sorted
/// image; simplices with repeated images get zero. `pulled` must be
/// pullback_system(f, phi.system()).
TwistedCochain pullback_cochain(const SimplicialMap& f, const TwistedCochain& phi, SystemPtr pulled);
TwistedCochain pullback_cochain(const SimplicialMap& f, const TwistedCochain& phi);

template <Field F>
Vector<F> pullback_untwisted(const SimplicialMap& f, const Vector<F>& phi, int n) {
  const auto& src = f.source();
  Vector<F> out(src.count(n), F(0));
  for (std::size_t i = 0; i < src.count(n); ++i) {
    Simplex img;
    for (Vertex v : src.simplices(n)[i]) img.push_back(f(v));
    auto [sign, sorted] = sort_with_sign(img);
    if (sign == 0) continue;
    const F& val = phi[*f.target().index_of(sorted)];
    out[i] = sign > 0 ? val : -val;
  }
  return out;
}

/// Matrix of f^*: H^n(target; L) -> H^n(source; f^*L) in the
/// representative bases (rows: source classes, columns: target classes).
RationalMatrix induced_map(const SimplicialMap& f, const LocalSystem& system, int n);

template <Field F>
Matrix<F> induced_map_untwisted(const SimplicialMap& f, int n) {
  auto target = untwisted_cohomology<F>(f.target(), n);
  auto source = untwisted_cohomology<F>(f.source(), n);
  std::vector<Vector<F>> cols;
  for (const auto& rep : target.representatives()) cols.push_back(source.coordinates(pullback_untwisted(f, rep, n)));
  return Matrix<F>::from_columns(cols, source.dimension());
}

/// (a u b)(v0..v{p+q}) = a(v0..vp) (x) T_b(v0,vp) b(vp..v{p+q}), valued in
/// the tensor product system. Throws Error{BaseMismatch}.
TwistedCochain cup(const TwistedCochain& a, const TwistedCochain& b);

/// k-fold cup power projected onto the k-th symmetric power of the
/// coefficient system. k = 0 gives the constant 1 over sym_power(L, 0).
TwistedCochain symmetric_cup_power(const TwistedCochain& omega, std::size_t k);

/// Pointwise pairing <phi(v0), omega(v0..vn)> of a flat section of the dual
/// system with omega; the result is an untwisted (trivial rank-1) cochain.
/// Errors: BaseMismatch when phi is not over dual(omega.system()),
/// InvalidArgument for non-zero degree, NotInvariant when d phi != 0.
TwistedCochain pair_flat(const TwistedCochain& phi, const TwistedCochain& omega);

/// Untwisted rational cochain over the trivial rank-1 system.
TwistedCochain untwisted_cochain(const ComplexPtr& base, int degree, RationalVector values);

/// A top-degree rational cycle: basis vector of ker(boundary) in degree n,
/// normalized so its first nonzero coefficient is +1. Throws
/// Error{InvalidArgument} unless that kernel is one-dimensional.
RationalVector fundamental_cycle(const Complex& c, int n);

/// Sum over the path's edges of the untwisted 1-cochain value, with sign by
/// traversal direction. Stationary steps contribute zero.
template <Field F>
F evaluate_on_loop(const Complex& c, const Vector<F>& cochain, const std::vector<Vertex>& path) {
  F total(0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Vertex u = path[i], w = path[i + 1];
    if (u == w) continue;
    auto e = c.index_of({std::min(u, w), std::max(u, w)});
    if (!e) throw Error(ErrorCode::InvalidArgument, "loop step is not an edge");
    total += u < w ? cochain[*e] : F(-cochain[*e]);
  }
  return total;
}

}  // namespace tlalg
