// Exact elementary arithmetic kernels: k-fold divisor sieves, multiplicative
// helpers (mu, phi, factorization), Ramanujan sums
//
//   c_q(n) = sum_{(a,q)=1, a<=q} e(an/q) = mu(q/(q,n)) phi(q) / phi(q/(q,n))
//
// and the rational weights theta_n(q) = mu(q/(q,n)) / phi(q/(q,n)).
// Everything here is integer/rational exact; the only complex-valued entry
// point is the brute-force Ramanujan oracle.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace d4ap {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// multiplicative helpers
// ---------------------------------------------------------------------------

bool is_prime(u64 n);

// prime factorization as (p, e) pairs, trial division (fine for q <= 1e7)
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

int mobius(u64 n);
u64 euler_phi(u64 n);

// all divisors of n, ascending
std::vector<u64> divisors(u64 n);

// primes <= limit by Eratosthenes
std::vector<u64> primes_up_to(u64 limit);

// largest prime q with q^7 <= x^4, exact integer arithmetic (q <= x^{4/7})
u64 largest_prime_below_x47(u64 x);

u64 mod_pow(u64 base, u64 exp, u64 mod);
u64 mod_inverse(u64 a, u64 prime_mod);

// ---------------------------------------------------------------------------
// divisor table
// ---------------------------------------------------------------------------

// Sieved values of d_k(n) for 1 <= n <= limit.  d_k(n) counts ordered k-tuples
// with product n; multiplicative with d_k(p^e) = C(e+k-1, k-1).
struct DivisorTable {
    unsigned k = 4;
    u64 limit = 0;
    std::vector<u32> values;  // values[n-1] = d_k(n)

    u32 operator()(u64 n) const;  // bounds-checked lookup
};

// Segmented factorization sieve; block_size entries are resident per worker.
// Throws std::overflow_error if any d_k value exceeds the 32-bit store.
DivisorTable sieve_divisor_table(unsigned k, u64 limit,
                                 std::size_t block_size = std::size_t(1) << 20,
                                 unsigned jobs = 1);

// Flat binary dump: magic "D4AP", u32 version, u32 k, u64 limit, then
// limit u32 values, all little-endian.
void dump_divisor_table(const DivisorTable& table, const std::string& path);
DivisorTable load_divisor_table(const std::string& path);

// ---------------------------------------------------------------------------
// Ramanujan sums and theta weights
// ---------------------------------------------------------------------------

// c_q(n) via the closed form; exact integer, total in n (uses n mod q).
i64 ramanujan_sum(u64 q, i64 n);

// literal sum over residues coprime to q; oracle, intended for q <= 1e4
std::complex<double> ramanujan_sum_bruteforce(u64 q, i64 n);

// reduced rational, denominator > 0
struct RationalValue {
    i64 num = 0;
    i64 den = 1;

    RationalValue() = default;
    RationalValue(i64 n, i64 d);  // reduces, normalizes sign

    double to_double() const { return double(num) / double(den); }
    bool operator==(const RationalValue&) const = default;
};

// theta_n(q) = mu(q/(q,n)) / phi(q/(q,n))
RationalValue theta(u64 q, i64 n);

}  // namespace d4ap
