#include "tlalg/cochain.hpp"

#include "tlalg/error.hpp"

namespace tlalg {

TwistedCochain::TwistedCochain(SystemPtr system, int degree)
    : system_(std::move(system)), degree_(degree), values_(system_->base().count(degree) * system_->rank(), Rational(0)) {}

TwistedCochain::TwistedCochain(SystemPtr system, int degree, RationalVector values)
    : system_(std::move(system)), degree_(degree), values_(std::move(values)) {
  if (values_.size() != system_->base().count(degree) * system_->rank()) {
    throw Error(ErrorCode::DimensionMismatch, "cochain value vector has wrong length for degree " +
                                                  std::to_string(degree));
  }
}

RationalVector TwistedCochain::value(std::size_t simplex) const {
  const auto r = rank();
  return RationalVector(values_.begin() + static_cast<std::ptrdiff_t>(simplex * r),
                        values_.begin() + static_cast<std::ptrdiff_t>((simplex + 1) * r));
}

void TwistedCochain::set_value(std::size_t simplex, const RationalVector& v) {
  if (v.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "fiber vector has wrong length");
  std::copy(v.begin(), v.end(), values_.begin() + static_cast<std::ptrdiff_t>(simplex * rank()));
}

bool TwistedCochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& x) { return x == 0; });
}

void TwistedCochain::check_compatible(const TwistedCochain& o) const {
  if (degree_ != o.degree_ || !(*system_ == *o.system_)) {
    throw Error(ErrorCode::BaseMismatch, "cochains live in different degrees or systems");
  }
}

TwistedCochain& TwistedCochain::operator+=(const TwistedCochain& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

TwistedCochain& TwistedCochain::operator-=(const TwistedCochain& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

TwistedCochain operator*(const Rational& s, TwistedCochain a) {
  for (auto& x : a.values_) x *= s;
  return a;
}

RationalMatrix coboundary_matrix(const LocalSystem& system, int n) {
  const auto& c = system.base();
  const std::size_t r = system.rank();
  if (n < 0) return RationalMatrix(c.count(0) * r, 0);
  RationalMatrix d(c.count(n + 1) * r, c.count(n) * r);
  const auto& upper = c.simplices(n + 1);
  for (std::size_t row = 0; row < upper.size(); ++row) {
    const auto& s = upper[row];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != i) face.push_back(s[k]);
      const std::size_t col = *c.index_of(face);
      if (i == 0) {
        const RationalMatrix t = system.transport(s[0], s[1]);
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b) d(row * r + a, col * r + b) += t(a, b);
      } else {
        const Rational sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < r; ++a) d(row * r + a, col * r + a) += sign;
      }
    }
  }
  return d;
}

TwistedCochain coboundary(const TwistedCochain& phi) {
  auto d = coboundary_matrix(phi.system(), phi.degree());
  return TwistedCochain(phi.system_ptr(), phi.degree() + 1, d * phi.values());
}

CohomologySpace::CohomologySpace(SystemPtr system, int degree) : system_(std::move(system)), degree_(degree) {
  if (degree < 0) {
    basis_ = CohomologyBasis<Rational>(RationalMatrix(0, 0), RationalMatrix(0, 0));
    return;
  }
  basis_ = CohomologyBasis<Rational>(coboundary_matrix(*system_, degree - 1), coboundary_matrix(*system_, degree));
  for (const auto& v : basis_.representatives()) reps_.emplace_back(system_, degree, v);
}

RationalVector CohomologySpace::coordinates(const TwistedCochain& z) const {
  if (z.degree() != degree_ || !(z.system() == *system_)) {
    throw Error(ErrorCode::BaseMismatch, "cochain does not belong to this cohomology space");
  }
  if (degree_ < 0) return {};
  return basis_.coordinates(z.values());
}

bool CohomologySpace::is_coboundary(const TwistedCochain& z) const {
  auto c = coordinates(z);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

CohomologySpace cohomology(SystemPtr system, int n) {
  if (auto bad = check_flat(*system); !bad.empty()) {
    throw Error(ErrorCode::NotFlat, "cohomology: local system is not flat", bad);
  }
  return CohomologySpace(std::move(system), n);
}

CohomologySpace cohomology(const LocalSystem& system, int n) { return cohomology(share(system), n); }

std::pair<int, Simplex> sort_with_sign(Simplex tuple) {
  int sign = 1;
  // Insertion sort counting transpositions.
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] == tuple[i - 1]) return {0, tuple};
  return {sign, tuple};
}

TwistedCochain pullback_cochain(const SimplicialMap& f, const TwistedCochain& phi, SystemPtr pulled) {
  if (!(phi.system().base() == f.target())) {
    throw Error(ErrorCode::BaseMismatch, "pullback_cochain: cochain is not over the map's target");
  }
  const int n = phi.degree();
  TwistedCochain out(std::move(pulled), n);
  const auto& src = f.source();
  for (std::size_t i = 0; i < src.count(n); ++i) {
    const auto& s = src.simplices(n)[i];
    Simplex img;
    for (Vertex v : s) img.push_back(f(v));
    auto [sign, sorted] = sort_with_sign(img);
    if (sign == 0) continue;
    auto value = phi.system().transport(img[0], sorted[0]) * phi.value(*f.target().index_of(sorted));
    if (sign < 0)
      for (auto& x : value) x = -x;
    out.set_value(i, value);
  }
  return out;
}

TwistedCochain pullback_cochain(const SimplicialMap& f, const TwistedCochain& phi) {
  return pullback_cochain(f, phi, share(pullback_system(f, phi.system())));
}

RationalMatrix induced_map(const SimplicialMap& f, const LocalSystem& system, int n) {
  auto target = cohomology(system, n);
  auto pulled = share(pullback_system(f, system));
  auto source = cohomology(pulled, n);
  std::vector<RationalVector> cols;
  for (const auto& rep : target.representatives()) {
    cols.push_back(source.coordinates(pullback_cochain(f, rep, pulled)));
  }
  return RationalMatrix::from_columns(cols, source.dimension());
}

TwistedCochain cup(const TwistedCochain& a, const TwistedCochain& b) {
  if (!(a.system().base() == b.system().base())) {
    throw Error(ErrorCode::BaseMismatch, "cup: cochains live over different complexes");
  }
  const int p = a.degree(), q = b.degree();
  const auto& c = a.system().base();
  TwistedCochain out(share(tensor_product(a.system(), b.system())), p + q);
  for (std::size_t i = 0; i < c.count(p + q); ++i) {
    const auto& s = c.simplices(p + q)[i];
    Simplex front(s.begin(), s.begin() + p + 1);
    Simplex back(s.begin() + p, s.end());
    auto moved = b.system().transport(s[0], s[static_cast<std::size_t>(p)]) * b.value(*c.index_of(back));
    out.set_value(i, kronecker(a.value(*c.index_of(front)), moved));
  }
  return out;
}

TwistedCochain symmetric_cup_power(const TwistedCochain& omega, std::size_t k) {
  const auto& base = omega.system();
  auto target = share(sym_power(base, k));
  if (k == 0) {
    const auto& c = base.base();
    return TwistedCochain(target, 0, RationalVector(c.count(0), Rational(1)));
  }
  TwistedCochain power = omega;
  for (std::size_t i = 1; i < k; ++i) power = cup(power, omega);

  const std::size_t r = base.rank();
  auto basis = monomials(r, k);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<std::size_t> projection(power.rank());
  for (std::size_t t = 0; t < power.rank(); ++t) {
    std::vector<std::size_t> digits(k);
    std::size_t rest = t;
    for (std::size_t m = k; m-- > 0;) {
      digits[m] = rest % r;
      rest /= r;
    }
    std::sort(digits.begin(), digits.end());
    projection[t] = index.at(digits);
  }

  TwistedCochain out(target, power.degree());
  for (std::size_t s = 0; s < power.simplex_count(); ++s) {
    RationalVector v(basis.size(), Rational(0));
    for (std::size_t t = 0; t < power.rank(); ++t) v[projection[t]] += power.at(s, t);
    out.set_value(s, v);
  }
  return out;
}

TwistedCochain pair_flat(const TwistedCochain& phi, const TwistedCochain& omega) {
  if (phi.degree() != 0) throw Error(ErrorCode::InvalidArgument, "pair_flat: phi must be a 0-cochain");
  if (!(phi.system() == dual(omega.system()))) {
    throw Error(ErrorCode::BaseMismatch, "pair_flat: phi is not a section of the dual coefficient system");
  }
  if (!coboundary(phi).is_zero()) throw Error(ErrorCode::NotInvariant, "pair_flat: phi is not a flat section");
  const auto& c = omega.system().base();
  const int n = omega.degree();
  RationalVector values(c.count(n), Rational(0));
  for (std::size_t i = 0; i < c.count(n); ++i) {
    const std::size_t v0 = static_cast<std::size_t>(c.simplices(n)[i][0]);
    for (std::size_t a = 0; a < omega.rank(); ++a) values[i] += phi.at(v0, a) * omega.at(i, a);
  }
  return untwisted_cochain(omega.system().base_ptr(), n, std::move(values));
}

TwistedCochain untwisted_cochain(const ComplexPtr& base, int degree, RationalVector values) {
  return TwistedCochain(share(LocalSystem::trivial(base, 1)), degree, std::move(values));
}

RationalVector fundamental_cycle(const Complex& c, int n) {
  auto boundary = untwisted_coboundary_matrix<Rational>(c, n - 1).transpose();
  auto ker = kernel_basis(boundary);
  if (ker.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "degree-" + std::to_string(n) + " cycles of " + c.name() +
                                                " are not one-dimensional");
  }
  auto z = ker.front();
  auto first = std::find_if(z.begin(), z.end(), [](const Rational& x) { return x != 0; });
  const Rational scale = Rational(1) / *first;
  for (auto& x : z) x *= scale;
  return z;
}

}  // namespace tlalg
