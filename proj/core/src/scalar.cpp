#include "tlalg/scalar.hpp"

#include <limits>
#include <numeric>

#include "tlalg/error.hpp"

namespace tlalg {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Pollard rho (Floyd cycle detection); n is odd and composite.
std::uint64_t find_factor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = find_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::uint64_t to_u64(const Integer& v) {
  if (v > Integer(std::numeric_limits<std::uint64_t>::max())) {
    throw Error(ErrorCode::InvalidArgument, "value too large to factor: " + v.str());
  }
  return v.convert_to<std::uint64_t>();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  // Boost's rational constructor expects a positive denominator.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Bit operator/(Bit a, Bit b) {
  if (!b.value()) throw Error(ErrorCode::SingularMatrix, "division by zero in GF(2)");
  return a;
}

std::map<std::uint64_t, int> factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor zero");
  std::map<std::uint64_t, int> out;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

FormalLog FormalLog::log_abs(const Rational& q) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "log of zero");
  FormalLog out;
  for (auto [p, e] : factorize(to_u64(abs(numerator(q))))) out.add_term(p, Rational(e));
  for (auto [p, e] : factorize(to_u64(denominator(q)))) out.add_term(p, Rational(-e));
  return out;
}

Rational FormalLog::coefficient(std::uint64_t p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalLog::add_term(std::uint64_t p, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalLog& FormalLog::operator+=(const FormalLog& o) {
  for (const auto& [p, q] : o.terms_) add_term(p, q);
  return *this;
}

FormalLog& FormalLog::operator-=(const FormalLog& o) {
  for (const auto& [p, q] : o.terms_) add_term(p, -q);
  return *this;
}

FormalLog& FormalLog::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, q] : terms_) q *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FormalLog& x) {
  if (x.terms_.empty()) return os << "0";
  bool first = true;
  for (const auto& [p, q] : x.terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(q) << "*log(" << p << ")";
  }
  return os;
}

}  // namespace tlalg
