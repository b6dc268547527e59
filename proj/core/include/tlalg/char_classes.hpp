#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlalg/cochain.hpp"

namespace tlalg {

// Characteristic classes of a flat line bundle read off its holonomy. The
// structure group of nonzero rationals splits as {+1,-1} x (positive
// rationals), and the positive part is a free abelian group on the primes;
// each factor contributes a 1-cocycle:
//   sign:    edge -> 1 if the transport is negative          (in GF(2))
//   log_p:   edge -> exponent of p in |transport|            (in Q)
// All inputs must be flat rank-1 systems; other ranks raise
// Error{UnsupportedRank}.

struct SignClass {
  Vector<Bit> cocycle;                     // per edge
  Vector<Bit> coordinates;                 // in untwisted_cohomology<Bit>(X, 1)
  std::vector<std::pair<std::string, Bit>> loop_values;  // per generator loop

  bool is_zero() const;
};

struct LogClass {
  std::uint64_t prime = 0;
  RationalVector cocycle;                  // per edge
  RationalVector coordinates;              // in untwisted_cohomology<Rational>(X, 1)
  std::vector<std::pair<std::string, Rational>> loop_values;
};

/// Edge cocycle of log|transport| as formal sums of prime logarithms.
std::vector<FormalLog> log_cocycle(const LocalSystem& system);

SignClass sign_class(const LocalSystem& system);

/// One entry per prime whose class is nonzero.
std::map<std::uint64_t, LogClass> log_classes(const LocalSystem& system);

/// Span in H^d(X; Q) of the d-fold cup products of log classes.
struct ImageSpace {
  std::size_t dimension = 0;
  std::vector<RationalVector> basis;       // coordinates in untwisted_cohomology<Rational>(X, d)
  std::vector<TwistedCochain> cocycles;    // representatives of `basis`
  std::vector<std::string> labels;         // e.g. "l2", "l2*l3"
};

/// Degrees 1..dim X.
std::map<int, ImageSpace> brho_image(const LocalSystem& system);

/// One certified preimage: sum of coeff * term (terms are log classes or
/// their cup products) whose class equals `target`.
struct CertificateEntry {
  int degree = 0;
  std::string target;                      // "a*", "b*" or "[T]*"
  std::vector<std::pair<std::string, Rational>> terms;
};

struct SurjectivityResult {
  bool surjective = false;
  std::vector<CertificateEntry> certificate;
};

/// Whether the log classes generate H^1 and H^2 of a grid torus.
/// Targets: the classes dual to loops a, b and the class evaluating to 1 on
/// fundamental_cycle(X, 2). Throws Error{UnsupportedBase} on other bases.
SurjectivityResult surjectivity_check(const LocalSystem& system);

/// Re-evaluates every certificate entry from the log cocycles and checks it
/// against its target.
bool verify_certificate(const LocalSystem& system, const std::vector<CertificateEntry>& certificate);

struct CharClassReport {
  std::vector<std::string> generators;
  SignClass sign;
  std::map<std::uint64_t, LogClass> logs;
  std::map<int, ImageSpace> image;
  std::optional<SurjectivityResult> surjectivity;
};

CharClassReport characteristic_classes(const LocalSystem& system, bool check_surjectivity);

}  // namespace tlalg
