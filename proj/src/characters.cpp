#include "d4ap/characters.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace d4ap {

namespace {

u64 find_primitive_root(u64 q) {
    const auto fac = factorize(q - 1);
    for (u64 g = 2; g < q; ++g) {
        bool ok = true;
        for (auto [p, e] : fac) {
            if (mod_pow(g, (q - 1) / p, q) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive_root: none found (q not prime?)");
}

}  // namespace

CharacterGroup build_character_group(u64 q) {
    if (q < 3 || !is_prime(q))
        throw std::invalid_argument("build_character_group: modulus " + std::to_string(q) +
                                    " is not an odd prime");
    CharacterGroup G;
    G.q_ = q;
    G.g_ = find_primitive_root(q);
    G.log_.assign(q, 0);
    u64 acc = 1;
    for (u64 j = 0; j < q - 1; ++j) {
        G.log_[acc] = u32(j);
        acc = acc * G.g_ % q;
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    G.roots_.resize(q - 1);
    for (u64 r = 0; r < q - 1; ++r) {
        double ph = two_pi * double(r) / double(q - 1);
        G.roots_[r] = {std::cos(ph), std::sin(ph)};
    }
    return G;
}

u64 CharacterGroup::log_index(u64 n) const {
    u64 r = n % q_;
    if (r == 0) throw std::invalid_argument("CharacterGroup::log_index: q | n");
    return log_[r];
}

std::optional<u64> CharacterGroup::chi_index(u64 j, u64 n) const {
    u64 r = n % q_;
    if (r == 0) return std::nullopt;
    return (j % (q_ - 1)) * u64(log_[r]) % (q_ - 1);
}

std::complex<double> CharacterGroup::chi(u64 j, u64 n) const {
    auto idx = chi_index(j, n);
    if (!idx) return {0.0, 0.0};
    return roots_[*idx];
}

std::complex<double> character_partial_sum(const CharacterGroup& group, u64 chi_index,
                                           u64 N, const DivisorTable& table) {
    if (N > table.limit)
        throw std::invalid_argument("character_partial_sum: N exceeds table limit");
    const u64 q = group.modulus();
    // accumulate per root-of-unity index first; exact integer weights
    std::vector<double> weight(q - 1, 0.0);
    for (u64 n = 1; n <= N; ++n) {
        auto idx = group.chi_index(chi_index, n);
        if (idx) weight[*idx] += double(table.values[n - 1]);
    }
    std::complex<double> acc = 0;
    for (u64 r = 0; r < q - 1; ++r)
        if (weight[r] != 0.0) acc += weight[r] * group.root(r);
    return acc;
}

}  // namespace d4ap
