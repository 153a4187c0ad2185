#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biggs/types.hpp"

namespace biggs {

/// lcm(1, 2, ..., n).
BigInt lcm_leq(unsigned n);
/// lcm of the odd numbers in 1..n.
BigInt odd_lcm_leq(unsigned n);

/// Primes up to `limit`, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Sum of ln p over prime powers p^k <= x. Throws ParameterError for x < 2.
double chebyshev_psi(double x);
/// psi(k) for k = 0..n (entries 0 and 1 are 0).
std::vector<double> chebyshev_psi_table(std::uint32_t n);
/// |psi(x) - x| < 0.85 x / ln x.
bool dusart_check(double x);
/// Same inequality for a precomputed psi value.
bool dusart_holds(double x, double psi);

/// Largest element order in Sym(n); landau(0) = 1.
BigInt landau(unsigned n);

/// Natural log of a positive big integer.
double ln_big(const BigInt& n);

/// Deterministic Miller-Rabin, exact for n < 3.3e24; CapacityError above that.
bool is_prime(const BigInt& n);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

/// Trial division by primes below `trial_limit`, then a primality test of the
/// cofactor. Throws PartialFactorizationError (carrying the cofactor) when a
/// composite cofactor remains.
Factorization factorize(const BigInt& n, std::uint32_t trial_limit = 1'000'000);

/// "2·11·2969", "2^10", "4373".
std::string to_string(const Factorization& f);

/// (p, e) with q = p^e and e >= 1, if q is a prime power.
std::optional<PrimePower> prime_power(const BigInt& q);

struct ProjectiveMatch {
  BigInt q;
  unsigned d = 0;
  BigInt p;
  unsigned e = 0;
  bool operator==(const ProjectiveMatch&) const = default;
};

/// Every (q, d) with d >= 2, q a prime power and (q^d - 1)/(q - 1) == n.
/// Ordered by d. Throws ParameterError for n < 3.
std::vector<ProjectiveMatch> projective_matches(const BigInt& n);

/// Smallest C' in [2, C) with gcd(N_{C',R}, N_{C',r}) = 1 for every r < R.
/// At R = 1 the condition is vacuous and C' = 2.
std::optional<int> primary_cycle_condition(int colors, int radius);
/// gcd(N_{C-1,R-1}, N_{C-1,r}) = 1 for r in 1..R-2 and r = R. Needs R >= 2.
bool secondary_cycle_condition(int colors, int radius);

/// ln(N ln N / ln 2). Needs N >= 3.
double meo_pgammal_upper_ln(double n);
/// ln(ln 2 * exp((1 - 0.85/ln(2R+1)) (2R+1)) / ln(2R+1)). Needs R >= 1.
double ord_c1c2_lower_ln(int radius);
/// sqrt(n ln n); a lower bound for ln landau(n) once n >= 906. Throws below.
double landau_lower_sqrt(double n);
/// sqrt(n ln n) with no validity check; needs n >= 1.
double sqrt_n_ln_n(double n);

enum class GirthBoundWinner { TwoN_smaller, OddLcm_smaller, Equal };
std::string to_string(GirthBoundWinner w);

struct GirthBoundComparison {
  GirthBoundWinner winner;
  BigInt two_n;
  BigInt two_odd_lcm;
};

/// Exact comparison of 2 N_{C,R} with 2 odd_lcm_leq(2R+1).
GirthBoundComparison girth_bound_comparison(int colors, int radius);

}  // namespace biggs
