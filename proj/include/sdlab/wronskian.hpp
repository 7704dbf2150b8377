#pragma once

#include <stdexcept>
#include <vector>

#include "sdlab/matrix.hpp"
#include "sdlab/poly.hpp"

namespace sdlab {

// Entry (i,j) of the gamma-folded Wronskian is f_j(gamma^i * X).
template <class F>
std::vector<std::vector<Poly<F>>> folded_wronskian(const std::vector<Poly<F>>& fs,
                                                   const typename F::Elem& gamma) {
    if (fs.empty()) throw std::invalid_argument("folded_wronskian: empty input");
    const F& field = fs[0].field();
    if (field.is_zero(gamma)) throw std::invalid_argument("folded_wronskian: gamma = 0");
    size_t l = fs.size();
    std::vector<std::vector<Poly<F>>> w(l, std::vector<Poly<F>>(l, Poly<F>(field)));
    for (size_t i = 0; i < l; ++i) {
        auto g = field.one();
        for (size_t r = 0; r < i; ++r) g = field.mul(g, gamma);
        for (size_t j = 0; j < l; ++j) w[i][j] = fs[j].compose_scaled_arg(g);
    }
    return w;
}

namespace detail {

// Laplace expansion along the first remaining row, columns tracked by mask.
template <class F>
Poly<F> poly_det_rec(const std::vector<std::vector<Poly<F>>>& m, size_t row, unsigned cols_mask) {
    const F& field = m[0][0].field();
    size_t l = m.size();
    if (row == l) return Poly<F>::constant(field, field.one());
    Poly<F> acc(field);
    int sign = 1;
    for (size_t j = 0; j < l; ++j) {
        if (!(cols_mask & (1u << j))) continue;
        if (!m[row][j].is_zero()) {
            auto sub = poly_det_rec(m, row + 1, cols_mask & ~(1u << j));
            auto term = m[row][j].mul(sub);
            acc = (sign > 0) ? acc.add(term) : acc.sub(term);
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace detail

template <class F>
Poly<F> poly_matrix_det(const std::vector<std::vector<Poly<F>>>& m) {
    size_t l = m.size();
    if (l > 16) throw std::invalid_argument("poly_matrix_det: matrix too large");
    for (const auto& row : m)
        if (row.size() != l) throw std::invalid_argument("poly_matrix_det: not square");
    return detail::poly_det_rec(m, 0, (1u << l) - 1);
}

template <class F>
Poly<F> wronskian_det(const std::vector<Poly<F>>& fs, const typename F::Elem& gamma) {
    return poly_matrix_det(folded_wronskian(fs, gamma));
}

// Coefficient vector <-> polynomial of degree < k.
template <class F>
Poly<F> poly_from_vec(const F& field, const std::vector<typename F::Elem>& v) {
    return Poly<F>(field, v);
}

template <class F>
std::vector<typename F::Elem> poly_to_vec(const Poly<F>& p, int k) {
    if (p.degree() >= k) throw std::invalid_argument("poly_to_vec: degree too large");
    std::vector<typename F::Elem> v(k, p.field().zero());
    for (int i = 0; i <= p.degree(); ++i) v[i] = p.coeff(i);
    return v;
}

// Wronskian criterion: with ord(gamma) >= k (k = dim of the ambient
// polynomial space), f_1..f_l are linearly independent iff the folded
// Wronskian determinant is nonzero.
template <class F>
bool independence_via_wronskian(const std::vector<Poly<F>>& fs, const typename F::Elem& gamma,
                                int k) {
    const F& field = fs[0].field();
    for (const auto& f : fs)
        if (f.degree() >= k) throw std::invalid_argument("independence_via_wronskian: degree >= k");
    if constexpr (!std::is_same_v<F, RationalField>) {
        if (static_cast<u64>(k) >= field.order())
            throw std::invalid_argument("independence_via_wronskian: requires k < q");
        if (element_order(field, gamma) < static_cast<u64>(k))
            throw std::invalid_argument("independence_via_wronskian: ord(gamma) < k");
    } else {
        if (field.is_zero(gamma) || gamma == 1 || gamma == -1)
            throw std::invalid_argument("independence_via_wronskian: gamma must have infinite order");
    }
    return !wronskian_det(fs, gamma).is_zero();
}

}  // namespace sdlab
