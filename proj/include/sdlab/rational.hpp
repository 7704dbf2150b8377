#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "sdlab/numeric.hpp"

namespace sdlab {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serialized form is "num/den" (lowest terms, positive denominator); plain
// integers print without the "/1".
inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline u64 mod_u64(const Int& x, u64 p) {
    Int r = x % Int(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return static_cast<u64>(r.get_ui());
}

// Image of a rational in F_p; fails if the denominator vanishes mod p.
inline std::optional<u64> rational_mod_u64(const Rational& x, u64 p) {
    u64 den = mod_u64(Int(x.get_den()), p);
    if (den == 0) return std::nullopt;
    u64 num = mod_u64(Int(x.get_num()), p);
    return mulmod(num, invmod_prime(den, p), p);
}

// Incremental CRT accumulator: value mod (product of attached primes).
class CrtAccumulator {
public:
    CrtAccumulator() : value_(0), modulus_(1) {}

    void add(u64 residue, u64 prime) {
        Int p(static_cast<unsigned long>(prime));
        Int cur = value_ % p;
        u64 cur_u = static_cast<u64>(cur.get_ui());
        u64 minv = invmod_prime(mod_u64(modulus_, prime), prime);
        u64 delta = mulmod(submod(residue % prime, cur_u, prime), minv, prime);
        value_ += modulus_ * Int(static_cast<unsigned long>(delta));
        modulus_ *= p;
    }

    const Int& value() const { return value_; }
    const Int& modulus() const { return modulus_; }

private:
    Int value_, modulus_;
};

// Rational reconstruction (Wang): recover n/d from n*d^{-1} mod M with
// |n|, d <= sqrt(M/2).  Returns nullopt when no admissible pair exists.
inline std::optional<Rational> rational_reconstruct(const Int& residue, const Int& modulus) {
    Int bound = sqrt(modulus / 2);
    Int r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    Int s0 = 0, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    Int num = r1, den = s1;
    if (den < 0) { den = -den; num = -num; }
    if (gcd(num, den) != 1) return std::nullopt;
    return make_rational(num, den);
}

}  // namespace sdlab
