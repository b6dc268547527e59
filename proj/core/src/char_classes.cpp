#include "tlalg/char_classes.hpp"

#include <set>

#include "tlalg/error.hpp"

namespace tlalg {

namespace {

void require_flat_line(const LocalSystem& system, const char* what) {
  if (system.rank() != 1) {
    throw Error(ErrorCode::UnsupportedRank, std::string(what) + ": characteristic classes need a rank-1 system");
  }
  if (auto bad = check_flat(system); !bad.empty()) {
    throw Error(ErrorCode::NotFlat, std::string(what) + ": local system is not flat", bad);
  }
}

std::string log_label(std::uint64_t p) { return "l" + std::to_string(p); }

TwistedCochain as_cochain(const ComplexPtr& base, const RationalVector& v, int degree) {
  return untwisted_cochain(base, degree, v);
}

Rational evaluate_on_cycle(const TwistedCochain& z, const RationalVector& cycle) {
  Rational total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) total += cycle[i] * z.at(i, 0);
  return total;
}

std::vector<std::uint64_t> parse_term(const std::string& term) {
  std::vector<std::uint64_t> primes;
  std::size_t pos = 0;
  while (pos < term.size()) {
    auto star = term.find('*', pos);
    std::string piece = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (piece.size() < 2 || piece[0] != 'l') throw Error(ErrorCode::ParseError, "bad certificate term '" + term + "'");
    primes.push_back(std::stoull(piece.substr(1)));
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return primes;
}

}  // namespace

bool SignClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](Bit b) { return !b.value(); });
}

std::vector<FormalLog> log_cocycle(const LocalSystem& system) {
  require_flat_line(system, "log_cocycle");
  std::vector<FormalLog> out;
  out.reserve(system.transports().size());
  for (const auto& t : system.transports()) out.push_back(FormalLog::log_abs(t(0, 0)));
  return out;
}

SignClass sign_class(const LocalSystem& system) {
  require_flat_line(system, "sign_class");
  const auto& c = system.base();
  SignClass out;
  for (const auto& t : system.transports()) out.cocycle.push_back(Bit(t(0, 0) < 0 ? 1 : 0));
  out.coordinates = untwisted_cohomology<Bit>(c, 1).coordinates(out.cocycle);
  for (const auto& loop : generator_loops(c)) {
    out.loop_values.emplace_back(loop.name, evaluate_on_loop(c, out.cocycle, loop.path));
  }
  return out;
}

std::map<std::uint64_t, LogClass> log_classes(const LocalSystem& system) {
  auto logs = log_cocycle(system);
  const auto& c = system.base();
  std::set<std::uint64_t> primes;
  for (const auto& l : logs)
    for (const auto& [p, q] : l.terms()) primes.insert(p);

  auto h1 = untwisted_cohomology<Rational>(c, 1);
  auto loops = generator_loops(c);
  std::map<std::uint64_t, LogClass> out;
  for (auto p : primes) {
    LogClass lc;
    lc.prime = p;
    for (const auto& l : logs) lc.cocycle.push_back(l.coefficient(p));
    lc.coordinates = h1.coordinates(lc.cocycle);
    if (std::all_of(lc.coordinates.begin(), lc.coordinates.end(), [](const Rational& x) { return x == 0; })) continue;
    for (const auto& loop : loops) lc.loop_values.emplace_back(loop.name, evaluate_on_loop(c, lc.cocycle, loop.path));
    out.emplace(p, std::move(lc));
  }
  return out;
}

std::map<int, ImageSpace> brho_image(const LocalSystem& system) {
  const auto& c = system.base();
  const auto& base = system.base_ptr();
  auto logs = log_classes(system);
  std::map<int, ImageSpace> out;
  if (c.dimension() < 1) return out;

  // Degree 1: span of the log classes.
  std::vector<TwistedCochain> gens;
  std::vector<std::string> gen_labels;
  {
    ImageSpace& img = out[1];
    std::vector<RationalVector> coords;
    std::vector<TwistedCochain> cocycles;
    for (const auto& [p, lc] : logs) {
      coords.push_back(lc.coordinates);
      cocycles.push_back(as_cochain(base, lc.cocycle, 1));
      gen_labels.push_back(log_label(p));
    }
    const std::size_t dim1 = untwisted_cohomology<Rational>(c, 1).dimension();
    for (auto i : independent_subset(coords, dim1)) {
      img.basis.push_back(coords[i]);
      img.cocycles.push_back(cocycles[i]);
      img.labels.push_back(gen_labels[i]);
    }
    img.dimension = img.basis.size();
    gens = img.cocycles;
    gen_labels = img.labels;
  }

  // Degree d: d-fold products of degree-1 basis elements, indices non-decreasing.
  std::vector<std::vector<std::size_t>> prev_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) prev_idx.push_back({i});

  for (int d = 2; d <= c.dimension(); ++d) {
    auto h = untwisted_cohomology<Rational>(c, d);
    std::vector<std::vector<std::size_t>> next_idx;
    std::vector<TwistedCochain> products;
    std::vector<RationalVector> coords;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < prev_idx.size(); ++k) {
      for (std::size_t j = prev_idx[k].back(); j < gens.size(); ++j) {
        auto idx = prev_idx[k];
        idx.push_back(j);
        auto prod = gens[idx[0]];
        for (std::size_t m = 1; m < idx.size(); ++m) prod = cup(prod, gens[idx[m]]);
        prod = untwisted_cochain(base, d, prod.values());
        coords.push_back(h.coordinates(prod.values()));
        std::string label;
        for (std::size_t m = 0; m < idx.size(); ++m) label += (m ? "*" : "") + gen_labels[idx[m]];
        labels.push_back(label);
        products.push_back(std::move(prod));
        next_idx.push_back(std::move(idx));
      }
    }
    ImageSpace& img = out[d];
    for (auto i : independent_subset(coords, h.dimension())) {
      img.basis.push_back(coords[i]);
      img.cocycles.push_back(products[i]);
      img.labels.push_back(labels[i]);
    }
    img.dimension = img.basis.size();
    prev_idx = std::move(next_idx);
  }
  return out;
}

SurjectivityResult surjectivity_check(const LocalSystem& system) {
  const auto& c = system.base();
  if (!c.is_torus_model()) {
    throw Error(ErrorCode::UnsupportedBase, "surjectivity_check: base must be a torus model, got '" + c.name() + "'");
  }
  const auto& base = system.base_ptr();
  auto logs = log_classes(system);
  auto image = brho_image(system);
  const std::size_t h1 = untwisted_cohomology<Rational>(c, 1).dimension();
  const std::size_t h2 = untwisted_cohomology<Rational>(c, 2).dimension();

  SurjectivityResult out;
  out.surjective = image[1].dimension == h1 && image[2].dimension == h2;
  if (!out.surjective) return out;

  // Degree 1: solve sum_p c_p * (l_p(a), l_p(b)) = target.
  const auto& loops = c.loops();
  std::vector<std::uint64_t> primes;
  std::vector<RationalVector> evals;
  for (const auto& [p, lc] : logs) {
    primes.push_back(p);
    RationalVector e;
    for (const auto& [name, v] : lc.loop_values) e.push_back(v);
    evals.push_back(e);
  }
  auto eval_matrix = RationalMatrix::from_columns(evals, loops.size());
  for (std::size_t t = 0; t < loops.size(); ++t) {
    RationalVector target(loops.size(), Rational(0));
    target[t] = 1;
    auto coeffs = solve(eval_matrix, target);
    if (!coeffs) throw Error(ErrorCode::InvalidArgument, "surjectivity_check: inconsistent degree-1 certificate");
    CertificateEntry entry{1, loops[t].name + "*", {}};
    for (std::size_t i = 0; i < primes.size(); ++i)
      if ((*coeffs)[i] != 0) entry.terms.emplace_back(log_label(primes[i]), (*coeffs)[i]);
    out.certificate.push_back(std::move(entry));
  }

  // Degree 2: solve sum_{p<=q} c_pq * <l_p u l_q, [T]> = 1.
  auto cycle = fundamental_cycle(c, 2);
  std::vector<std::string> labels;
  RationalVector row;
  for (auto pi = logs.begin(); pi != logs.end(); ++pi) {
    for (auto qi = pi; qi != logs.end(); ++qi) {
      auto prod = cup(as_cochain(base, pi->second.cocycle, 1), as_cochain(base, qi->second.cocycle, 1));
      row.push_back(evaluate_on_cycle(prod, cycle));
      labels.push_back(log_label(pi->first) + "*" + log_label(qi->first));
    }
  }
  auto coeffs = solve(RationalMatrix::from_rows({row}), RationalVector{Rational(1)});
  if (!coeffs) throw Error(ErrorCode::InvalidArgument, "surjectivity_check: inconsistent degree-2 certificate");
  CertificateEntry entry{2, "[T]*", {}};
  for (std::size_t i = 0; i < labels.size(); ++i)
    if ((*coeffs)[i] != 0) entry.terms.emplace_back(labels[i], (*coeffs)[i]);
  out.certificate.push_back(std::move(entry));
  return out;
}

bool verify_certificate(const LocalSystem& system, const std::vector<CertificateEntry>& certificate) {
  const auto& c = system.base();
  const auto& base = system.base_ptr();
  auto logs = log_classes(system);
  auto cocycle_of = [&](std::uint64_t p) {
    auto it = logs.find(p);
    if (it == logs.end()) throw Error(ErrorCode::InvalidArgument, "certificate uses a prime with no class");
    return as_cochain(base, it->second.cocycle, 1);
  };
  for (const auto& entry : certificate) {
    TwistedCochain sum = untwisted_cochain(base, entry.degree, RationalVector(c.count(entry.degree), Rational(0)));
    for (const auto& [term, coeff] : entry.terms) {
      auto primes = parse_term(term);
      if (static_cast<int>(primes.size()) != entry.degree) return false;
      auto prod = cocycle_of(primes[0]);
      for (std::size_t i = 1; i < primes.size(); ++i) prod = cup(prod, cocycle_of(primes[i]));
      sum += coeff * untwisted_cochain(base, entry.degree, prod.values());
    }
    if (entry.degree == 1) {
      for (const auto& loop : c.loops()) {
        Rational expect = (loop.name + "*" == entry.target) ? 1 : 0;
        if (evaluate_on_loop(c, sum.values(), loop.path) != expect) return false;
      }
    } else if (entry.degree == 2) {
      if (entry.target != "[T]*" || evaluate_on_cycle(sum, fundamental_cycle(c, 2)) != 1) return false;
    } else {
      return false;
    }
  }
  return true;
}

CharClassReport characteristic_classes(const LocalSystem& system, bool check_surjectivity) {
  CharClassReport r;
  for (const auto& loop : generator_loops(system.base())) r.generators.push_back(loop.name);
  r.sign = sign_class(system);
  r.logs = log_classes(system);
  r.image = brho_image(system);
  if (check_surjectivity) r.surjectivity = surjectivity_check(system);
  return r;
}

}  // namespace tlalg
