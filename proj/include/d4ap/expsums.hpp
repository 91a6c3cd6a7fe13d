// Complete exponential sums for the k=4 divisor problem:
//
//   R_{a,b,c,d}(h/q) = sum_{x,y,z,w=1}^q e((ax+by+cz+dw - h xyzw)/q)
//   A_{h/q}(n)       = (1/2) sum_{abcd=n} R_{a,b,c,d}(h/q)
//
// plus their correlations over h.  r_sum_bruteforce is the literal q^4-term
// oracle; r_sum_reduced collapses the innermost sum to a divisibility
// condition, giving O(q^2) work with the third variable solved by modular
// inversion, and handles the q | d boundary by explicit strata.

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>

#include "d4ap/arith.hpp"

namespace d4ap {

struct RSumSpec {
    u64 q = 2;       // prime modulus (q = 1 tolerated as the degenerate case)
    i64 a = 0, b = 0, c = 0, d = 0;
    i64 h = 1;
};

// literal q^4-term sum; oracle only, rejects q > 13
std::complex<double> r_sum_bruteforce(const RSumSpec& spec);

// O(q^2) reduction, exact for every gcd stratum; h = 0 mod q degenerates to
// the full product sum
std::complex<double> r_sum_reduced(const RSumSpec& spec);

// ordered quadruples (a,b,c,d) with a*b*c*d = n, by recursive divisor
// splitting; divisor lists are memoized internally
void for_each_ordered_quadruple(u64 n, const std::function<void(const std::array<u64, 4>&)>& fn);

// Cache of r_sum_reduced values keyed by (sorted residues, h); R is invariant
// under permutations of (a,b,c,d).
class RSumCache {
  public:
    explicit RSumCache(u64 q) : q_(q) {}
    std::complex<double> get(u64 a, u64 b, u64 c, u64 d, u64 h);

  private:
    u64 q_;
    std::map<std::array<u64, 5>, std::complex<double>> cache_;
};

// A_{h/q}(n); the quadruple count is cross-checked against table when n is in
// range.  n must factor into enumerable quadruples (n <= 1e6 intended).
std::complex<double> a_sum(u64 n, i64 h, u64 q, const DivisorTable& table);

// sum over h = 1..q-1 of A_{h/q}(n) * conj(A_{h/q}(m))
std::complex<double> h_correlation(u64 n, u64 m, u64 q, const DivisorTable& table);

// Closed form of sum'_h R(h nbar/q) conj(R(h mbar/q)) for one quadruple pair
// whose entries are coprime to q, depending only on the products mod q:
//   q^2 ( q (q c_q(n-m) + mu(q)) + mu(q)^3 ).
// Rejected when q | nProd*mProd.
std::complex<double> h_correlation_quadruple_formula(u64 n_prod, u64 m_prod, u64 q);

}  // namespace d4ap
