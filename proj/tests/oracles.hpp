// Test-only brute-force oracles.  Everything here is written from the
// definitions with plain loops, independent of the library's sieve and
// convolution paths, so the two sides of every comparison share no code.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracles {

using u64 = std::uint64_t;

inline u64 d_naive(u64 n) {
    u64 c = 0;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

inline int mu_naive(u64 n) {
    int primes = 0;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++primes;
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

inline u64 phi_naive(u64 n) {
    u64 c = 0;
    for (u64 a = 1; a <= n; ++a) {
        u64 x = a, y = n;
        while (y) { u64 t = x % y; x = y; y = t; }
        if (x == 1) ++c;
    }
    return c;
}

inline int omega_naive(u64 n) {
    int c = 0;
    for (u64 p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        ++c;
        while (n % p == 0) n /= p;
    }
    return c;
}

// ordered k-tuples of positive integers with product n
inline u64 dk_naive(int k, u64 n) {
    if (k == 1) return 1;
    u64 total = 0;
    for (u64 a = 1; a <= n; ++a)
        if (n % a == 0) total += dk_naive(k - 1, n / a);
    return total;
}

// ordered k-tuples in [1,B]^k with product c
inline u64 tau_naive(u64 c, int k, u64 B) {
    if (k == 1) return c >= 1 && c <= B ? 1 : 0;
    u64 total = 0;
    for (u64 a = 1; a <= B; ++a)
        if (c % a == 0) total += tau_naive(c / a, k - 1, B);
    return total;
}

// N_k(B) by enumerating both sides as product multisets
inline u64 count_nk_brute(int k, u64 B) {
    std::map<u64, u64> mult;
    std::vector<u64> tuple(k + 1, 1);
    for (;;) {
        u64 prod = 1;
        for (u64 v : tuple) prod *= v;
        ++mult[prod];
        int i = 0;
        while (i <= k && ++tuple[i] > B) tuple[i++] = 1;
        if (i > k) break;
    }
    u64 total = 0;
    for (auto& [c, f] : mult) total += f * f;
    return total;
}

// N(B,F) by enumerating (n1, n2) products
inline u64 count_nbf_brute(u64 B, const std::vector<u64>& F) {
    std::map<u64, u64> mult;
    for (u64 a = 1; a <= B; ++a)
        for (u64 b : F) ++mult[a * b];
    u64 total = 0;
    for (auto& [c, f] : mult) total += f * f;
    return total;
}

inline std::set<u64> product_set_brute(int k, u64 B) {
    std::set<u64> cur{1};
    for (int i = 0; i < k; ++i) {
        std::set<u64> next;
        for (u64 c : cur)
            for (u64 a = 1; a <= B; ++a) next.insert(c * a);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace oracles
