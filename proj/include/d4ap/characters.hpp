// Multiplicative character table mod a prime q.
//
// Characters are indexed j = 0..q-2 against a fixed primitive root g:
//   chi_j(n) = e(j * log_g(n) / (q-1))   for (n,q)=1,   chi_j(n) = 0 otherwise.
// Values are carried as exact root-of-unity indices (integers mod q-1) and
// only materialized to complex doubles when a sum is accumulated, so
// orthogonality checks can stay in the exact index domain.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "d4ap/arith.hpp"

namespace d4ap {

class CharacterGroup {
  public:
    u64 modulus() const { return q_; }
    u64 generator() const { return g_; }
    u64 order() const { return q_ - 1; }  // number of characters

    // discrete log of n base g, defined for (n,q)=1
    u64 log_index(u64 n) const;

    // root-of-unity index of chi_j(n): chi_j(n) = e(index / (q-1));
    // nullopt when q | n
    std::optional<u64> chi_index(u64 j, u64 n) const;

    // materialized complex value (0 when q | n)
    std::complex<double> chi(u64 j, u64 n) const;

    // e(r / (q-1)) from the precomputed root table
    std::complex<double> root(u64 r) const { return roots_[r % (q_ - 1)]; }

  private:
    friend CharacterGroup build_character_group(u64 q);
    u64 q_ = 0;
    u64 g_ = 0;
    std::vector<u32> log_;                     // log_[n] for n in [1, q)
    std::vector<std::complex<double>> roots_;  // e(r/(q-1)), r in [0, q-1)
};

// Rejects non-prime q (explicit diagnostic) and q < 3.  Primitive root found
// by trial over ascending candidates with factored q-1.
CharacterGroup build_character_group(u64 q);

// f_chi(N) = sum_{n<=N} d_k(n) chi(n); requires N <= table.limit
std::complex<double> character_partial_sum(const CharacterGroup& group, u64 chi_index,
                                           u64 N, const DivisorTable& table);

}  // namespace d4ap
