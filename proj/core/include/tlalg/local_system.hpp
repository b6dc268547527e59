#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tlalg/complex.hpp"
#include "tlalg/matrix.hpp"
#include "tlalg/scalar.hpp"

namespace tlalg {

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Edge transports of a rank-r bundle over a complex. The transport stored
/// for edge (i, j), i < j, carries the fiber at j to the fiber at i.
///
/// Flatness (triangle products equal the identity) is not enforced here so
/// that defective systems can be represented and diagnosed; see check_flat.
class LocalSystem {
 public:
  /// Throws Error{DimensionMismatch} on wrong sizes and
  /// Error{SingularMatrix} (witness: the edge) on a non-invertible transport.
  static LocalSystem from_transports(ComplexPtr base, std::size_t rank, std::vector<RationalMatrix> transports);
  static LocalSystem trivial(ComplexPtr base, std::size_t rank);

  const Complex& base() const { return *base_; }
  const ComplexPtr& base_ptr() const { return base_; }
  std::size_t rank() const { return rank_; }

  const RationalMatrix& transport(std::size_t edge) const { return transports_[edge]; }
  const std::vector<RationalMatrix>& transports() const { return transports_; }
  /// Transport from the fiber at v to the fiber at u, for u, v adjacent or
  /// equal (identity).
  RationalMatrix transport(Vertex u, Vertex v) const;

  friend bool operator==(const LocalSystem& a, const LocalSystem& b) {
    return a.rank_ == b.rank_ && a.transports_ == b.transports_ && *a.base_ == *b.base_;
  }

 private:
  LocalSystem(ComplexPtr base, std::size_t rank, std::vector<RationalMatrix> transports)
      : base_(std::move(base)), rank_(rank), transports_(std::move(transports)) {}

  ComplexPtr base_;
  std::size_t rank_ = 0;
  std::vector<RationalMatrix> transports_;
};

/// Triangles (i, j, k) where transport(i,j) * transport(j,k) != transport(i,k).
std::vector<Simplex> check_flat(const LocalSystem& system);
inline bool is_flat(const LocalSystem& system) { return check_flat(system).empty(); }

/// Ordered transport product T(v0,v1) T(v1,v2) ... along a vertex path.
RationalMatrix path_transport(const LocalSystem& system, const std::vector<Vertex>& path);

/// Builds a flat system in spanning-tree gauge (identity on tree edges).
///
/// Keys of `images` are either generator names of a built-in model ("a",
/// "b"), realized through the model's edge windings (the images must
/// commute), or edge names "edge_i_j" of non-tree edges, set directly; the
/// two styles cannot be mixed. Unlisted generators/edges default to the
/// identity.
///
/// Errors: SingularMatrix, UnknownGenerator, DimensionMismatch,
/// RelationViolation (witnesses: violating triangles).
LocalSystem from_representation(ComplexPtr base, std::size_t rank,
                                 const std::map<std::string, RationalMatrix>& images);

/// Convenience overload for rank-1 systems.
LocalSystem from_representation(ComplexPtr base, const std::map<std::string, Rational>& images);

/// T'(i,j) = G(i) T(i,j) G(j)^{-1}.
LocalSystem gauge_transform(const LocalSystem& system, const std::vector<RationalMatrix>& gauge);

/// Equivalent system with identity transport on spanning-tree edges.
LocalSystem to_tree_gauge(const LocalSystem& system, const SpanningTree& tree);

struct Holonomy {
  SpanningTree tree;
  /// Tree-gauge transport of each non-tree edge, keyed by edge_name.
  std::map<std::string, RationalMatrix> generator_images;
  /// Transport around each named loop of the base (built-in models only).
  std::map<std::string, RationalMatrix> loop_images;
  bool relations_checked = false;
};

/// Throws Error{NotFlat} (witnesses: violating triangles) on non-flat input.
Holonomy holonomy(const LocalSystem& system);

/// Inverse-transpose transports.
LocalSystem dual(const LocalSystem& system);

/// Degree-k monomials in `rank` variables as sorted index tuples, in
/// lexicographic order. This fixes the basis of every symmetric power.
std::vector<std::vector<std::size_t>> monomials(std::size_t rank, std::size_t k);

/// Induced action of t on degree-k polynomials in the monomial basis.
RationalMatrix sym_power_matrix(const RationalMatrix& t, std::size_t k);

/// Multiplicities factorial (alpha!) of each monomial: the diagonal of the
/// GL-invariant (apolar) pairing between Sym^k(V*) and Sym^k(V).
std::vector<Rational> apolar_weights(std::size_t rank, std::size_t k);

LocalSystem sym_power(const LocalSystem& system, std::size_t k);

/// Kronecker product of transports; bases must agree.
LocalSystem tensor_product(const LocalSystem& a, const LocalSystem& b);

/// Pulls a system on f's target back to f's source. Collapsed edges carry
/// the identity. Throws Error{BaseMismatch} if system.base() != f.target().
LocalSystem pullback_system(const SimplicialMap& f, const LocalSystem& system);

/// Isomorphism test for flat rank-1 systems over the same base.
/// Errors: UnsupportedRank, BaseMismatch, NotFlat.
bool iso_rank1(const LocalSystem& a, const LocalSystem& b);

}  // namespace tlalg
