#include "biggs/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "biggs/colored_tree.hpp"

namespace biggs {
namespace {

namespace mp = boost::multiprecision;

// Deterministic witnesses for n < 3317044064679887385961981.
constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
const BigInt kWitnessBound("3317044064679887385961981");

// Largest r with r^e <= q.
BigInt iroot(const BigInt& q, unsigned e) {
  if (e == 1 || q < 2) return q;
  const unsigned bits = static_cast<unsigned>(mp::msb(q)) / e + 1;
  BigInt lo = 1, hi = BigInt(1) << (bits + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (mp::pow(mid, e) <= q)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

BigInt gcd_big(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

BigInt lcm_leq(unsigned n) {
  if (n < 1) throw ParameterError("lcm_leq needs n >= 1");
  BigInt out = 1;
  for (std::uint32_t p : primes_up_to(n)) {
    std::uint64_t pk = p;
    while (pk * p <= n) pk *= p;
    out *= pk;
  }
  return out;
}

BigInt odd_lcm_leq(unsigned n) {
  if (n < 1) throw ParameterError("odd_lcm_leq needs n >= 1");
  BigInt out = 1;
  for (std::uint32_t p : primes_up_to(n)) {
    if (p == 2) continue;
    std::uint64_t pk = p;
    while (pk * p <= n) pk *= p;
    out *= pk;
  }
  return out;
}

std::vector<double> chebyshev_psi_table(std::uint32_t n) {
  std::vector<double> step(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::uint32_t p : primes_up_to(n)) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p; pk <= n; pk *= p) step[pk] = lp;
  }
  std::vector<double> psi(step.size(), 0.0);
  for (std::size_t k = 1; k < psi.size(); ++k) psi[k] = psi[k - 1] + step[k];
  return psi;
}

double chebyshev_psi(double x) {
  if (!(x >= 2)) throw ParameterError("chebyshev_psi needs x >= 2");
  if (x > 4e9) throw CapacityError("chebyshev_psi argument too large");
  const auto n = static_cast<std::uint32_t>(std::floor(x));
  double sum = 0;
  for (std::uint32_t p : primes_up_to(n)) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p; pk <= n; pk *= p) sum += lp;
  }
  return sum;
}

bool dusart_holds(double x, double psi) { return std::fabs(psi - x) < 0.85 * x / std::log(x); }

bool dusart_check(double x) { return dusart_holds(x, chebyshev_psi(x)); }

BigInt landau(unsigned n) {
  // best[m]: largest lcm of a partition of (at most) m, built one prime at a
  // time; each prime contributes at most one power.
  std::vector<BigInt> best(static_cast<std::size_t>(n) + 1, BigInt(1));
  for (std::uint32_t p : primes_up_to(n)) {
    for (std::size_t m = n; m >= p; --m) {
      for (std::uint64_t pk = p; pk <= m; pk *= p) {
        BigInt candidate = best[m - pk] * pk;
        if (candidate > best[m]) best[m] = std::move(candidate);
      }
    }
  }
  return best[n];
}

double ln_big(const BigInt& n) {
  if (n <= 0) throw ParameterError("ln of a non-positive integer");
  const auto bits = static_cast<long>(mp::msb(n));
  const long shift = std::max(0L, bits - 62);
  const BigInt top = n >> shift;
  return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift) * std::numbers::ln2;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n >= kWitnessBound) throw CapacityError("primality of " + n.str() + " is beyond the deterministic range");
  BigInt d = n - 1;
  unsigned s = 0;
  while (!mp::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  const BigInt n_minus_1 = n - 1;
  for (unsigned a : kWitnesses) {
    BigInt x = mp::powm(BigInt(a), d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(const BigInt& n, std::uint32_t trial_limit) {
  if (n < 2) throw ParameterError("factorize needs n >= 2");
  Factorization out;
  BigInt rest = n;
  for (std::uint32_t p : primes_up_to(trial_limit)) {
    if (BigInt(p) * p > rest) break;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.push_back({BigInt(p), e});
  }
  if (rest > 1) {
    bool prime = false;
    const BigInt bound = BigInt(trial_limit) * trial_limit;
    if (rest < bound) {
      prime = true;  // no factor below its square root
    } else {
      try {
        prime = is_prime(rest);
      } catch (const CapacityError&) {
        prime = false;
      }
    }
    if (!prime) throw PartialFactorizationError("could not factor cofactor " + rest.str(), rest);
    out.push_back({rest, 1});
  }
  return out;
}

std::string to_string(const Factorization& f) {
  std::string s;
  for (const auto& [p, e] : f) {
    if (!s.empty()) s += "·";
    s += p.str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::optional<PrimePower> prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  const auto max_e = static_cast<unsigned>(mp::msb(q));
  for (unsigned e = max_e; e >= 2; --e) {
    BigInt r = iroot(q, e);
    if (r >= 2 && mp::pow(r, e) == q && is_prime(r)) return PrimePower{r, e};
  }
  if (is_prime(q)) return PrimePower{q, 1};
  return std::nullopt;
}

std::vector<ProjectiveMatch> projective_matches(const BigInt& n) {
  if (n < 3) throw ParameterError("projective_matches needs n >= 3");
  std::vector<ProjectiveMatch> out;
  auto record = [&](const BigInt& q, unsigned d) {
    if (auto pp = prime_power(q)) out.push_back({q, d, pp->prime, pp->exponent});
  };
  record(n - 1, 2);
  const auto max_d = static_cast<unsigned>(mp::msb(n)) + 1;
  for (unsigned d = 3; d <= max_d; ++d) {
    // 1 + q + ... + q^{d-1} is increasing in q and exceeds q^{d-1}.
    BigInt lo = 2, hi = iroot(n, d - 1);
    while (lo <= hi) {
      BigInt q = (lo + hi) / 2;
      BigInt value = (mp::pow(q, d) - 1) / (q - 1);
      if (value == n) {
        record(q, d);
        break;
      }
      if (value < n)
        lo = q + 1;
      else
        hi = q - 1;
    }
  }
  return out;
}

std::optional<int> primary_cycle_condition(int colors, int radius) {
  if (colors < 3) throw ParameterError("primary_cycle_condition needs C >= 3");
  if (radius < 1) throw ParameterError("primary_cycle_condition needs R >= 1");
  for (int cp = 2; cp < colors; ++cp) {
    const BigInt top = vertex_count_formula(cp, radius);
    bool coprime = true;
    for (int r = 1; r < radius && coprime; ++r) coprime = gcd_big(top, vertex_count_formula(cp, r)) == 1;
    if (coprime) return cp;
  }
  return std::nullopt;
}

bool secondary_cycle_condition(int colors, int radius) {
  if (colors < 3) throw ParameterError("secondary_cycle_condition needs C >= 3");
  if (radius < 2) throw ParameterError("secondary_cycle_condition needs R >= 2");
  const int cp = colors - 1;
  const BigInt pivot = vertex_count_formula(cp, radius - 1);
  for (int r = 1; r <= radius; ++r) {
    if (r == radius - 1) continue;
    if (gcd_big(pivot, vertex_count_formula(cp, r)) != 1) return false;
  }
  return true;
}

double meo_pgammal_upper_ln(double n) {
  if (!(n >= 3)) throw ParameterError("meo bound needs N >= 3");
  return std::log(n * std::log(n) / std::numbers::ln2);
}

double ord_c1c2_lower_ln(int radius) {
  if (radius < 1) throw ParameterError("ord(c1c2) bound needs R >= 1");
  const double m = 2.0 * radius + 1.0;
  const double lm = std::log(m);
  return std::log(std::numbers::ln2 * std::exp((1.0 - 0.85 / lm) * m) / lm);
}

double sqrt_n_ln_n(double n) {
  if (!(n >= 1)) throw ParameterError("sqrt(n ln n) needs n >= 1");
  return std::sqrt(n * std::log(n));
}

double landau_lower_sqrt(double n) {
  if (!(n >= 906)) throw ParameterError("the sqrt(n ln n) Landau bound holds only for n >= 906");
  return sqrt_n_ln_n(n);
}

std::string to_string(GirthBoundWinner w) {
  switch (w) {
    case GirthBoundWinner::TwoN_smaller: return "TwoN_smaller";
    case GirthBoundWinner::OddLcm_smaller: return "OddLcm_smaller";
    case GirthBoundWinner::Equal: return "Equal";
  }
  return "?";
}

GirthBoundComparison girth_bound_comparison(int colors, int radius) {
  if (colors < 3 || radius < 1) throw ParameterError("girth_bound_comparison needs C >= 3, R >= 1");
  GirthBoundComparison out;
  out.two_n = 2 * vertex_count_formula(colors, radius);
  out.two_odd_lcm = 2 * odd_lcm_leq(static_cast<unsigned>(2 * radius + 1));
  out.winner = out.two_n < out.two_odd_lcm   ? GirthBoundWinner::TwoN_smaller
               : out.two_odd_lcm < out.two_n ? GirthBoundWinner::OddLcm_smaller
                                             : GirthBoundWinner::Equal;
  return out;
}

}  // namespace biggs
