#include "tlalg/algebroid.hpp"

#include "tlalg/error.hpp"

namespace tlalg {

CommAlgebroid make_algebroid(SystemPtr adjoint, TwistedCochain omega) {
  if (auto bad = check_flat(*adjoint); !bad.empty()) {
    throw Error(ErrorCode::NotFlat, "no extension exists: adjoint system is not flat on " +
                                        std::to_string(bad.size()) + " triangle(s)",
                bad);
  }
  if (omega.degree() != 2 || !(omega.system() == *adjoint)) {
    throw Error(ErrorCode::BaseMismatch, "omega must be a 2-cochain over the adjoint system");
  }
  auto d = coboundary(omega);
  std::vector<Simplex> bad;
  const auto& c = adjoint->base();
  for (std::size_t i = 0; i < d.simplex_count(); ++i) {
    auto v = d.value(i);
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) bad.push_back(c.simplices(3)[i]);
  }
  if (!bad.empty()) {
    throw Error(ErrorCode::NotClosed, "omega is not closed on " + std::to_string(bad.size()) + " simplex(es)", bad);
  }
  return CommAlgebroid(std::move(adjoint), std::move(omega));
}

CommAlgebroid trivial_algebroid(const ComplexPtr& base, std::size_t fiber_dim) {
  if (fiber_dim == 0) throw Error(ErrorCode::InvalidArgument, "trivial_algebroid: fiber dimension must be positive");
  auto adjoint = share(LocalSystem::trivial(base, fiber_dim));
  TwistedCochain omega(adjoint, 2);
  return make_algebroid(adjoint, std::move(omega));
}

CommAlgebroid change_splitting(const CommAlgebroid& a, const TwistedCochain& eta) {
  if (eta.degree() != 1 || !(eta.system() == a.adjoint())) {
    throw Error(ErrorCode::BaseMismatch, "change_splitting: eta must be a 1-cochain over the adjoint system");
  }
  auto shifted = coboundary(TwistedCochain(a.adjoint_ptr(), 1, eta.values()));
  return make_algebroid(a.adjoint_ptr(), a.omega() + shifted);
}

CommAlgebroid pullback_algebroid(const SimplicialMap& f, const CommAlgebroid& a) {
  auto pulled = share(pullback_system(f, a.adjoint()));
  auto omega = pullback_cochain(f, a.omega(), pulled);
  return make_algebroid(pulled, std::move(omega));
}

InvariantSectionSpace invariant_sections(const CommAlgebroid& a, std::size_t k) {
  InvariantSectionSpace out;
  out.k = k;
  out.system = share(sym_power(dual(a.adjoint()), k));
  out.basis = cohomology(out.system, 0).representatives();
  return out;
}

bool ChernWeilClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Rational& x) { return x == 0; });
}

ChernWeilClass chern_weil(const CommAlgebroid& a, const TwistedCochain& phi, std::size_t k) {
  const auto& L = a.adjoint();
  if (phi.degree() != 0 || !(phi.system() == sym_power(dual(L), k))) {
    throw Error(ErrorCode::NotInvariant, "chern_weil: phi is not a section of Sym^" + std::to_string(k) + "(L*)");
  }
  if (!coboundary(phi).is_zero()) throw Error(ErrorCode::NotInvariant, "chern_weil: phi is not invariant");

  // Re-express phi in the basis dual to the monomial basis of Sym^k(L).
  const auto weights = apolar_weights(L.rank(), k);
  auto paired_system = share(dual(sym_power(L, k)));
  RationalVector values = phi.values();
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= weights[i % weights.size()];
  TwistedCochain section(paired_system, 0, std::move(values));

  auto power = symmetric_cup_power(a.omega(), k);
  auto form = pair_flat(section, power);
  Integer factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) factorial *= i;
  form = Rational(Integer(1), factorial) * form;

  const int degree = static_cast<int>(2 * k);
  auto h = cohomology(form.system_ptr(), degree);
  auto coords = h.coordinates(form);
  return ChernWeilClass{degree, std::move(form), std::move(coords)};
}

std::vector<ChernWeilClass> chern_weil_image(const CommAlgebroid& a, std::size_t k) {
  std::vector<ChernWeilClass> out;
  for (const auto& phi : invariant_sections(a, k).basis) out.push_back(chern_weil(a, phi, k));
  return out;
}

std::size_t chern_weil_image_dimension(const CommAlgebroid& a, std::size_t k) {
  auto classes = chern_weil_image(a, k);
  if (classes.empty() || classes.front().coordinates.empty()) return 0;
  std::vector<RationalVector> cols;
  for (const auto& c : classes) cols.push_back(c.coordinates);
  return rank(RationalMatrix::from_columns(cols, cols.front().size()));
}

}  // namespace tlalg
