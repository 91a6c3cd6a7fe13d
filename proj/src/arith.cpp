#include "d4ap/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace d4ap {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mobius(u64 n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be positive");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    u64 out = n;
    for (auto [p, e] : factorize(n)) out = out / p * (p - 1);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (u64 p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (u64 m = p * p; m <= limit; m += p) comp[m] = true;
    }
    return out;
}

u64 largest_prime_below_x47(u64 x) {
    // largest prime q with q^7 <= x^4; compare in 128-bit to dodge pow rounding
    auto ok = [&](u64 q) {
        unsigned __int128 q7 = 1, x4 = 1;
        for (int i = 0; i < 7; ++i) q7 *= q;
        for (int i = 0; i < 4; ++i) x4 *= x;
        return q7 <= x4;
    };
    u64 q = u64(std::floor(std::pow(double(x), 4.0 / 7.0))) + 2;
    while (q > 2 && !ok(q)) --q;
    while (q > 2 && !is_prime(q)) --q;
    return q;
}

u64 mod_pow(u64 base, u64 exp, u64 mod) {
    unsigned __int128 acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return u64(acc);
}

u64 mod_inverse(u64 a, u64 prime_mod) {
    a %= prime_mod;
    if (a == 0) throw std::invalid_argument("mod_inverse: zero residue");
    return mod_pow(a, prime_mod - 2, prime_mod);
}

// ---------------------------------------------------------------------------
// divisor table
// ---------------------------------------------------------------------------

u32 DivisorTable::operator()(u64 n) const {
    if (n < 1 || n > limit)
        throw std::out_of_range("DivisorTable: n outside [1, limit]");
    return values[n - 1];
}

namespace {

// d_k(p^e) = C(e+k-1, k-1), checked against the u32 store
u64 prime_power_dk(unsigned k, unsigned e) {
    u64 v = 1;
    for (unsigned i = 1; i < k; ++i) {
        v = v * (e + i) / i;  // exact: product of i consecutive integers / i!
    }
    return v;
}

void sieve_block(unsigned k, u64 lo, u64 hi, const std::vector<u64>& primes,
                 u32* out) {
    const u64 len = hi - lo + 1;
    std::vector<u64> rem(len);
    std::vector<u64> val(len, 1);
    for (u64 i = 0; i < len; ++i) rem[i] = lo + i;

    for (u64 p : primes) {
        if (p * p > hi) break;
        u64 first = ((lo + p - 1) / p) * p;
        for (u64 m = first; m <= hi; m += p) {
            u64 i = m - lo;
            unsigned e = 0;
            while (rem[i] % p == 0) { rem[i] /= p; ++e; }
            val[i] *= prime_power_dk(k, e);
        }
    }
    for (u64 i = 0; i < len; ++i) {
        u64 v = val[i];
        if (rem[i] > 1) v *= k;  // leftover cofactor is a prime, exponent 1
        if (v > 0xffffffffULL)
            throw std::overflow_error("sieve_divisor_table: d_k value exceeds u32");
        out[i] = u32(v);
    }
}

}  // namespace

DivisorTable sieve_divisor_table(unsigned k, u64 limit, std::size_t block_size,
                                 unsigned jobs) {
    if (k < 1 || limit < 1)
        throw std::invalid_argument("sieve_divisor_table: k and limit must be >= 1");
    if (block_size < 64) block_size = 64;

    DivisorTable table;
    table.k = k;
    table.limit = limit;
    table.values.resize(limit);

    const u64 root = u64(std::sqrt(double(limit))) + 2;
    const std::vector<u64> primes = primes_up_to(root);

    const u64 nblocks = (limit + block_size - 1) / block_size;
    if (jobs <= 1 || nblocks == 1) {
        for (u64 b = 0; b < nblocks; ++b) {
            u64 lo = b * block_size + 1;
            u64 hi = std::min(limit, lo + block_size - 1);
            sieve_block(k, lo, hi, primes, table.values.data() + (lo - 1));
        }
        return table;
    }

    std::exception_ptr fail;
    std::vector<std::thread> pool;
    std::atomic<u64> next{0};
    std::mutex fail_mx;
    for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
            for (;;) {
                u64 b = next.fetch_add(1);
                if (b >= nblocks) return;
                u64 lo = b * block_size + 1;
                u64 hi = std::min(limit, lo + block_size - 1);
                try {
                    sieve_block(k, lo, hi, primes, table.values.data() + (lo - 1));
                } catch (...) {
                    std::lock_guard<std::mutex> g(fail_mx);
                    if (!fail) fail = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (fail) std::rethrow_exception(fail);
    return table;
}

namespace {

void put_u32(std::ofstream& f, u32 v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = (unsigned char)((v >> (8 * i)) & 0xff);
    f.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ofstream& f, u64 v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (unsigned char)((v >> (8 * i)) & 0xff);
    f.write(reinterpret_cast<const char*>(b), 8);
}

u32 get_u32(std::ifstream& f) {
    unsigned char b[4];
    f.read(reinterpret_cast<char*>(b), 4);
    return u32(b[0]) | u32(b[1]) << 8 | u32(b[2]) << 16 | u32(b[3]) << 24;
}

u64 get_u64(std::ifstream& f) {
    unsigned char b[8];
    f.read(reinterpret_cast<char*>(b), 8);
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(b[i]) << (8 * i);
    return v;
}

}  // namespace

void dump_divisor_table(const DivisorTable& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("dump_divisor_table: cannot open " + path);
    f.write("D4AP", 4);
    put_u32(f, 1);  // version
    put_u32(f, table.k);
    put_u64(f, table.limit);
    for (u32 v : table.values) put_u32(f, v);
    if (!f) throw std::runtime_error("dump_divisor_table: write failed");
}

DivisorTable load_divisor_table(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_divisor_table: cannot open " + path);
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, "D4AP", 4) != 0)
        throw std::runtime_error("load_divisor_table: bad magic");
    u32 version = get_u32(f);
    if (version != 1) throw std::runtime_error("load_divisor_table: unsupported version");
    DivisorTable table;
    table.k = get_u32(f);
    table.limit = get_u64(f);
    table.values.resize(table.limit);
    for (u64 i = 0; i < table.limit; ++i) table.values[i] = get_u32(f);
    if (!f) throw std::runtime_error("load_divisor_table: truncated file");
    return table;
}

// ---------------------------------------------------------------------------
// Ramanujan sums, theta
// ---------------------------------------------------------------------------

i64 ramanujan_sum(u64 q, i64 n) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be positive");
    u64 nn = u64(((n % i64(q)) + i64(q)) % i64(q));
    u64 g = std::gcd(nn, q);
    if (nn == 0) g = q;
    u64 d = q / g;
    int mu = mobius(d);
    if (mu == 0) return 0;
    return i64(mu) * i64(euler_phi(q) / euler_phi(d));
}

std::complex<double> ramanujan_sum_bruteforce(u64 q, i64 n) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum_bruteforce: q must be positive");
    u64 nn = u64(((n % i64(q)) + i64(q)) % i64(q));
    std::complex<double> acc = 0;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (u64 a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        double ph = two_pi * double(a * nn % q) / double(q);
        acc += std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return acc;
}

RationalValue::RationalValue(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("RationalValue: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

RationalValue theta(u64 q, i64 n) {
    if (q < 1) throw std::invalid_argument("theta: q must be positive");
    u64 nn = u64(((n % i64(q)) + i64(q)) % i64(q));
    u64 g = std::gcd(nn, q);
    if (nn == 0) g = q;
    u64 d = q / g;
    return RationalValue(mobius(d), i64(euler_phi(d)));
}

}  // namespace d4ap
