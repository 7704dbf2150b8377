#pragma once

#include <stdexcept>
#include <vector>

#include "sdlab/field.hpp"

namespace sdlab {

// Dense univariate polynomial over an exact field; coefficient 0 is the
// constant term, no trailing zero coefficients, deg(0) = -1.
template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    explicit Poly(const F& field) : field_(field) {}
    Poly(const F& field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& field, const Elem& e) { return Poly(field, {e}); }
    static Poly x(const F& field) { return Poly(field, {field.zero(), field.one()}); }

    const F& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    Elem coeff(int i) const {
        if (i < 0 || i > degree()) return field_.zero();
        return c_[i];
    }

    bool equals(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!field_.eq(c_[i], o.c_[i])) return false;
        return true;
    }

    Poly add(const Poly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
        return Poly(field_, std::move(r));
    }

    Poly sub(const Poly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.sub(r[i], o.c_[i]);
        return Poly(field_, std::move(r));
    }

    Poly neg() const {
        std::vector<Elem> r = c_;
        for (auto& x : r) x = field_.neg(x);
        return Poly(field_, std::move(r));
    }

    Poly mul(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(field_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
        }
        return Poly(field_, std::move(r));
    }

    Poly scale(const Elem& s) const {
        std::vector<Elem> r = c_;
        for (auto& x : r) x = field_.mul(x, s);
        return Poly(field_, std::move(r));
    }

    // f(gamma * X): coefficient i picks up gamma^i.
    Poly compose_scaled_arg(const Elem& gamma) const {
        std::vector<Elem> r = c_;
        Elem g = field_.one();
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] = field_.mul(r[i], g);
            g = field_.mul(g, gamma);
        }
        return Poly(field_, std::move(r));
    }

    Elem eval(const Elem& x) const {
        Elem acc = field_.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("poly division by zero");
        Poly rem = *this;
        std::vector<Elem> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0, field_.zero());
        Elem lead_inv = field_.inv(d.c_.back());
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            Elem f = field_.mul(rem.c_.back(), lead_inv);
            q[shift] = f;
            std::vector<Elem> r = rem.c_;
            for (int i = 0; i <= d.degree(); ++i)
                r[shift + i] = field_.sub(r[shift + i], field_.mul(f, d.c_[i]));
            rem = Poly(field_, std::move(r));
        }
        return {Poly(field_, std::move(q)), rem};
    }

    bool divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

    // Multiplicity of root r (0 when p(r) != 0; error on the zero polynomial).
    int root_multiplicity(const Elem& r) const {
        if (is_zero()) throw std::domain_error("root multiplicity of zero polynomial");
        Poly lin(field_, {field_.neg(r), field_.one()});
        Poly cur = *this;
        int mult = 0;
        while (true) {
            auto [q, rem] = cur.divmod(lin);
            if (!rem.is_zero()) return mult;
            ++mult;
            cur = q;
        }
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Elem> c_;
};

}  // namespace sdlab
