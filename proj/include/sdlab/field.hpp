#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdlab/numeric.hpp"
#include "sdlab/rational.hpp"

namespace sdlab {

// Extension degree guard: everything in the artifact runs over small fields
// or the rationals, so e > 8 is refused outright.
constexpr int kMaxExtDegree = 8;

// Dynamic descriptor of a finite field F_{p^e}.  Two specs with equal (p,e)
// denote the same field: the modulus polynomial is derived deterministically
// from (p,e), never stored externally.
struct FieldSpec {
    u64 p = 2;
    int e = 1;

    FieldSpec() = default;
    FieldSpec(u64 p_, int e_) : p(p_), e(e_) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FieldSpec: p is not prime");
        if (e < 1 || e > kMaxExtDegree) throw std::invalid_argument("FieldSpec: e out of range");
        u64 q = 1;
        for (int i = 0; i < e; ++i) {
            if (q > ~u64(0) / p) throw std::invalid_argument("FieldSpec: p^e overflows");
            q *= p;
        }
    }

    u64 order() const {
        u64 q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        return q;
    }

    bool operator==(const FieldSpec& o) const { return p == o.p && e == o.e; }

    std::string str() const {
        if (e == 1) return std::to_string(p);
        return std::to_string(p) + "^" + std::to_string(e);
    }

    static FieldSpec parse(const std::string& s) {
        auto caret = s.find('^');
        if (caret == std::string::npos) return FieldSpec(std::stoull(s), 1);
        return FieldSpec(std::stoull(s.substr(0, caret)), std::stoi(s.substr(caret + 1)));
    }
};

// ---------------------------------------------------------------------------
// Prime field F_p, elements as canonical residues in [0, p).

struct PrimeField {
    using Elem = u64;

    u64 p;

    explicit PrimeField(u64 p_) : p(p_) {
        if (!is_prime_u64(p)) throw std::invalid_argument("PrimeField: p is not prime");
    }
    explicit PrimeField(const FieldSpec& fs) : PrimeField(fs.p) {
        if (fs.e != 1) throw std::invalid_argument("PrimeField: spec has e > 1");
    }

    FieldSpec spec() const { return FieldSpec(p, 1); }
    u64 order() const { return p; }
    bool finite() const { return true; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const { return addmod(a, b, p); }
    Elem sub(Elem a, Elem b) const { return submod(a, b, p); }
    Elem mul(Elem a, Elem b) const { return mulmod(a, b, p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const { return invmod_prime(a, p); }

    Elem from_int(i64 v) const {
        i64 m = v % static_cast<i64>(p);
        if (m < 0) m += static_cast<i64>(p);
        return static_cast<u64>(m);
    }
    Elem from_index(u64 i) const { return i % p; }
    u64 to_index(Elem a) const { return a; }

    std::string str(Elem a) const { return std::to_string(a); }
};

// ---------------------------------------------------------------------------
// Extension field F_{p^e}, elements as coefficient vectors mod the canonical
// modulus polynomial for (p,e).

struct ExtElem {
    std::array<u64, kMaxExtDegree> c{};
    bool operator==(const ExtElem&) const = default;
};

namespace detail {

// Dense polynomial arithmetic over F_p used only for modulus generation.
using FpPoly = std::vector<u64>;

inline FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    return fp_trim(std::move(r));
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, u64 p) {
    a = fp_trim(std::move(a));
    u64 lead_inv = invmod_prime(m.back(), p);
    while (a.size() >= m.size()) {
        u64 f = mulmod(a.back(), lead_inv, p);
        size_t off = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[off + i] = submod(a[off + i], mulmod(f, m[i], p), p);
        a = fp_trim(std::move(a));
    }
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod f via square-and-multiply on the exponent p^k.
inline FpPoly fp_xpow_pk(const FpPoly& f, u64 p, int k, u64 /*deg*/) {
    Int exp = 1;
    for (int i = 0; i < k; ++i) exp *= static_cast<unsigned long>(p);
    FpPoly base = fp_mod(FpPoly{0, 1}, f, p);
    FpPoly acc{1};
    Int e = exp;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = fp_mod(fp_mul(acc, base, p), f, p);
        base = fp_mod(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

// Rabin irreducibility test for a monic degree-e polynomial over F_p.
inline bool fp_irreducible(const FpPoly& f, u64 p, int e) {
    // x^(p^e) == x mod f
    FpPoly xq = fp_xpow_pk(f, p, e, e);
    FpPoly x = fp_mod(FpPoly{0, 1}, f, p);
    FpPoly diff = xq;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = submod(diff[i], x[i], p);
    if (!fp_trim(diff).empty()) return false;
    // gcd(x^(p^(e/r)) - x, f) == 1 for prime divisors r of e
    for (int r = 2; r <= e; ++r) {
        if (e % r != 0) continue;
        bool rprime = true;
        for (int d = 2; d < r; ++d)
            if (r % d == 0) rprime = false;
        if (!rprime) continue;
        FpPoly xs = fp_xpow_pk(f, p, e / r, e);
        FpPoly d2 = xs;
        d2.resize(std::max(d2.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) d2[i] = submod(d2[i], x[i], p);
        FpPoly g = fp_gcd(f, fp_trim(std::move(d2)), p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Canonical modulus for F_{p^e}: the monic irreducible x^e + c_{e-1}x^{e-1} +
// ... + c_0 whose coefficient tuple, read as the base-p integer
// c_0 + c_1 p + ..., is smallest.
inline FpPoly canonical_modulus(u64 p, int e) {
    u64 count = 1;
    for (int i = 0; i < e; ++i) count *= p;  // FieldSpec guards the overflow
    for (u64 v = 0; v < count; ++v) {
        FpPoly f(e + 1, 0);
        u64 t = v;
        for (int i = 0; i < e; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[e] = 1;
        if (fp_irreducible(f, p, e)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace detail

struct ExtField {
    using Elem = ExtElem;

    u64 p;
    int e;
    std::array<u64, kMaxExtDegree> mod{};  // x^e + sum mod[i] x^i

    explicit ExtField(const FieldSpec& fs) : p(fs.p), e(fs.e) {
        if (e < 2) throw std::invalid_argument("ExtField: use PrimeField for e = 1");
        auto m = detail::canonical_modulus(p, e);
        for (int i = 0; i < e; ++i) mod[i] = m[i];
    }

    FieldSpec spec() const { return FieldSpec(p, e); }
    u64 order() const { return spec().order(); }
    bool finite() const { return true; }

    Elem zero() const { return {}; }
    Elem one() const {
        Elem r{};
        r.c[0] = 1;
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (int i = 0; i < e; ++i)
            if (a.c[i]) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (int i = 0; i < e; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r{};
        for (int i = 0; i < e; ++i) r.c[i] = addmod(a.c[i], b.c[i], p);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r{};
        for (int i = 0; i < e; ++i) r.c[i] = submod(a.c[i], b.c[i], p);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r{};
        for (int i = 0; i < e; ++i) r.c[i] = a.c[i] ? p - a.c[i] : 0;
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::array<u64, 2 * kMaxExtDegree> t{};
        for (int i = 0; i < e; ++i) {
            if (!a.c[i]) continue;
            for (int j = 0; j < e; ++j)
                t[i + j] = addmod(t[i + j], mulmod(a.c[i], b.c[j], p), p);
        }
        // reduce by the monic modulus
        for (int d = 2 * e - 2; d >= e; --d) {
            u64 f = t[d];
            if (!f) continue;
            t[d] = 0;
            for (int i = 0; i < e; ++i)
                t[d - e + i] = submod(t[d - e + i], mulmod(f, mod[i], p), p);
        }
        Elem r{};
        for (int i = 0; i < e; ++i) r.c[i] = t[i];
        return r;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("ExtField: zero has no inverse");
        // extended Euclid in F_p[x] on (modulus, a)
        detail::FpPoly r0(e + 1, 0), r1;
        for (int i = 0; i < e; ++i) r0[i] = mod[i];
        r0[e] = 1;
        for (int i = 0; i < e; ++i) r1.push_back(a.c[i]);
        r1 = detail::fp_trim(std::move(r1));
        detail::FpPoly s0{}, s1{1};
        while (!r1.empty()) {
            // divide r0 by r1
            detail::FpPoly q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
            detail::FpPoly rem = r0;
            u64 lead_inv = invmod_prime(r1.back(), p);
            while (rem.size() >= r1.size() && !rem.empty()) {
                u64 f = mulmod(rem.back(), lead_inv, p);
                size_t off = rem.size() - r1.size();
                q[off] = f;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[off + i] = submod(rem[off + i], mulmod(f, r1[i], p), p);
                rem = detail::fp_trim(std::move(rem));
            }
            detail::FpPoly s2 = s0;  // s2 = s0 - q*s1
            detail::FpPoly qs = detail::fp_mul(q, s1, p);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (size_t i = 0; i < qs.size(); ++i) s2[i] = submod(s2[i], qs[i], p);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = detail::fp_trim(std::move(s2));
        }
        // r0 = gcd (a nonzero constant since modulus irreducible)
        u64 scale = invmod_prime(r0[0], p);
        Elem out{};
        for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(e); ++i)
            out.c[i] = mulmod(s0[i], scale, p);
        return out;
    }

    Elem from_int(i64 v) const {
        Elem r{};
        i64 m = v % static_cast<i64>(p);
        if (m < 0) m += static_cast<i64>(p);
        r.c[0] = static_cast<u64>(m);
        return r;
    }
    Elem from_index(u64 idx) const {
        Elem r{};
        for (int i = 0; i < e; ++i) {
            r.c[i] = idx % p;
            idx /= p;
        }
        return r;
    }
    u64 to_index(const Elem& a) const {
        u64 idx = 0;
        for (int i = e - 1; i >= 0; --i) idx = idx * p + a.c[i];
        return idx;
    }

    std::string str(const Elem& a) const {
        std::string s = "[";
        for (int i = 0; i < e; ++i) s += (i ? "," : "") + std::to_string(a.c[i]);
        return s + "]";
    }
};

// ---------------------------------------------------------------------------
// The rationals, backed by GMP.

struct RationalField {
    using Elem = Rational;

    FieldSpec spec() const { throw std::logic_error("RationalField has no FieldSpec"); }
    u64 order() const { return 0; }
    bool finite() const { return false; }

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: zero has no inverse");
        return 1 / a;
    }

    Elem from_int(i64 v) const { return Rational(static_cast<long>(v)); }
    Elem from_index(u64) const { throw std::logic_error("RationalField is not enumerable"); }
    u64 to_index(const Elem&) const { throw std::logic_error("RationalField is not enumerable"); }

    std::string str(const Elem& a) const { return rational_to_string(a); }
};

// Multiplicative order of a field element (finite fields; brute force, small q).
template <class F>
u64 element_order(const F& field, const typename F::Elem& g) {
    if (field.is_zero(g)) return 0;
    auto x = g;
    u64 ord = 1;
    while (!field.eq(x, field.one())) {
        x = field.mul(x, g);
        ++ord;
        if (ord > field.order()) throw std::logic_error("element_order overflow");
    }
    return ord;
}

}  // namespace sdlab
