#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace sdlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse mod a prime p.
inline u64 invmod_prime(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("invmod_prime: zero has no inverse");
    return powmod(a % p, p - 2, p);
}

// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Multiplicative order of g in F_p^x by brute multiplication; intended for
// small p (enumeration-scale fields). Returns 0 if g == 0 mod p.
inline u64 multiplicative_order(u64 g, u64 p) {
    g %= p;
    if (g == 0) return 0;
    u64 x = g, ord = 1;
    while (x != 1) {
        x = mulmod(x, g, p);
        ++ord;
        if (ord > p) throw std::logic_error("multiplicative_order: p not prime?");
    }
    return ord;
}

// Montgomery arithmetic for a fixed odd modulus < 2^63.  Used by the hot
// mod-p elimination loops; plain mulmod costs a 128-bit division per product.
class Montgomery64 {
public:
    explicit Montgomery64(u64 mod) : n_(mod) {
        if ((mod & 1) == 0) throw std::invalid_argument("Montgomery64: modulus must be odd");
        ninv_ = 1;
        for (int i = 0; i < 6; ++i) ninv_ *= 2 - n_ * ninv_;  // Newton: n*ninv = 1 mod 2^64
        ninv_ = ~ninv_ + 1;                                   // -n^{-1} mod 2^64
        r2_ = static_cast<u64>((u128(1) << 64) % n_);
        r2_ = mulmod(r2_, r2_, n_);  // 2^128 mod n
    }

    u64 modulus() const { return n_; }

    u64 to(u64 x) const { return redc(u128(x % n_) * r2_); }
    u64 from(u64 x) const { return redc(u128(x)); }
    u64 mul(u64 a, u64 b) const { return redc(u128(a) * b); }
    u64 add(u64 a, u64 b) const { return addmod(a, b, n_); }
    u64 sub(u64 a, u64 b) const { return submod(a, b, n_); }

private:
    u64 redc(u128 t) const {
        u64 m = static_cast<u64>(t) * ninv_;
        u128 s = t + u128(m) * n_;
        u64 r = static_cast<u64>(s >> 64);
        return r >= n_ ? r - n_ : r;
    }

    u64 n_, ninv_, r2_;
};

// SplitMix64: deterministic by construction, identical on every platform.
// std::mt19937_64 would also be portable, but the distributions on top of it
// are not pinned by the standard, and reports promise byte-identical reruns.
class Rng {
public:
    explicit Rng(u64 seed) : state_(seed) {}

    // Independent stream for (seed, index); used to hand each trial its own
    // generator so parallel runs merge deterministically.
    static Rng derive(u64 seed, u64 index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        mix.next();
        return mix;
    }

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, n) by rejection.
    u64 below(u64 n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        u64 lim = ~u64(0) - ~u64(0) % n;
        u64 x;
        do { x = next(); } while (x >= lim);
        return x % n;
    }

private:
    u64 state_;
};

}  // namespace sdlab
