#pragma once

#include <cstddef>
#include <vector>

#include "tlalg/cochain.hpp"

namespace tlalg {

/// Discrete transitive Lie algebroid with commutative structural algebra:
/// a flat adjoint system together with a closed extension 2-cocycle
/// (the curvature of a splitting). Instances are only created through
/// make_algebroid, so both invariants always hold.
class CommAlgebroid {
 public:
  const LocalSystem& adjoint() const { return *adjoint_; }
  const SystemPtr& adjoint_ptr() const { return adjoint_; }
  const TwistedCochain& omega() const { return omega_; }
  const Complex& base() const { return adjoint_->base(); }

  friend bool operator==(const CommAlgebroid& a, const CommAlgebroid& b) {
    return *a.adjoint_ == *b.adjoint_ && a.omega_ == b.omega_;
  }

 private:
  CommAlgebroid(SystemPtr adjoint, TwistedCochain omega) : adjoint_(std::move(adjoint)), omega_(std::move(omega)) {}
  friend CommAlgebroid make_algebroid(SystemPtr adjoint, TwistedCochain omega);

  SystemPtr adjoint_;
  TwistedCochain omega_;
};

/// Accepts (L, omega) iff L is flat and d omega = 0.
/// Errors: NotFlat (witnesses: non-flat triangles), NotClosed (witnesses:
/// (n+1)-simplices where d omega is nonzero), BaseMismatch when omega is not
/// a 2-cochain over L.
CommAlgebroid make_algebroid(SystemPtr adjoint, TwistedCochain omega);

/// Identity transports and zero curvature. fiber_dim = 0 is rejected.
CommAlgebroid trivial_algebroid(const ComplexPtr& base, std::size_t fiber_dim);

/// omega -> omega + d eta.
CommAlgebroid change_splitting(const CommAlgebroid& a, const TwistedCochain& eta);

CommAlgebroid pullback_algebroid(const SimplicialMap& f, const CommAlgebroid& a);

/// Flat sections of Sym^k(L*): the invariant polynomials of degree k.
struct InvariantSectionSpace {
  std::size_t k = 0;
  SystemPtr system;  // sym_power(dual(adjoint), k)
  std::vector<TwistedCochain> basis;

  std::size_t dimension() const { return basis.size(); }
};

InvariantSectionSpace invariant_sections(const CommAlgebroid& a, std::size_t k);

/// An untwisted class in H^{2k}(X; Q): a closed representative and its
/// coordinates in the representative basis of untwisted_cohomology.
struct ChernWeilClass {
  int degree = 0;
  TwistedCochain cocycle;
  RationalVector coordinates;

  bool is_zero() const;
};

/// (1/k!) <phi, omega^k>: pairs an invariant section of Sym^k(L*) with the
/// k-th symmetric cup power of omega under the invariant (apolar) pairing.
/// Throws Error{NotInvariant} unless phi is a flat 0-cochain of
/// sym_power(dual(adjoint), k).
ChernWeilClass chern_weil(const CommAlgebroid& a, const TwistedCochain& phi, std::size_t k);

/// Images of a basis of the invariant sections of degree k.
std::vector<ChernWeilClass> chern_weil_image(const CommAlgebroid& a, std::size_t k);

/// Dimension of the image span in H^{2k}(X; Q).
std::size_t chern_weil_image_dimension(const CommAlgebroid& a, std::size_t k);

}  // namespace tlalg
