#include "qhowe/oqn.hpp"

#include <map>

namespace qhowe {

AlgebraElement l_adjacent(int i) {
    if (i < 1) throw std::invalid_argument("l_adjacent: site must be >= 1");
    // prefactor q^{-(A_i^0-1/2)/2} = q^{1/4} w_i^{-2}. The scale is fixed by the
    // Serre relations: with q^{-1/4} the cubic combination closes on -q^{-1}L
    // instead of -L, and the Pluecker and pairing identities fail with it.
    AlgebraElement pre = scale(QScalar::t_power(1), gen_weight(i, -2));
    AlgebraElement inner =
        sub(scale(QScalar::t_power(1), mul(gen_a_plus(i), gen_a_minus(i + 1))),
            scale(QScalar::t_power(-1), mul(gen_a_minus(i), gen_a_plus(i + 1))));
    return mul(pre, inner);
}

AlgebraElement l_extended_via(int i, int j, int k, int sign) {
    if (!(i < j && j < k)) throw std::invalid_argument("l_extended_via: need i < j < k");
    AlgebraElement lij = (j == i + 1) ? l_adjacent(i) : l_extended_via(i, i + 1, j, sign);
    AlgebraElement ljk = (k == j + 1) ? l_adjacent(j) : l_extended_via(j, j + 1, k, sign);
    return q_commutator(lij, ljk, sign);  // q^{±1/4} L_ij L_jk - q^{∓1/4} L_jk L_ij
}

AlgebraElement l_extended(int i, int k, int sign) {
    if (i >= k) throw std::invalid_argument("l_extended: need i < k");
    if (sign != 1 && sign != -1) throw std::invalid_argument("l_extended: sign must be ±1");
    if (k == i + 1) return l_adjacent(i);
    thread_local std::map<std::tuple<int, int, int>, AlgebraElement> cache;
    auto key = std::make_tuple(i, k, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    AlgebraElement r = l_extended_via(i, i + 1, k, sign);
    cache.emplace(std::move(key), r);
    return r;
}

AlgebraElement casimir_full(IndexRange w) {
    if (w.empty() || w.size() % 2 != 0)
        throw std::invalid_argument("casimir_full: window must have even length >= 2");
    int len = w.size();
    AlgebraElement r;
    for (int i = w.lo; i < w.hi; ++i) {
        for (int j = i + 1; j <= w.hi; ++j) {
            int ip = i - w.lo + 1, jp = j - w.lo + 1;
            QScalar c = QScalar::t_power(2 * (-len + ip + jp - 1));  // q^{(-2n+i'+j'-1)/2}
            r = add(r, scale(c, mul(l_extended(i, j, +1), l_extended(i, j, -1))));
        }
    }
    return r;
}

AlgebraElement lambda_single(int couple) {
    AlgebraElement l = l_adjacent(2 * couple - 1);
    return mul(l, l);
}

AlgebraElement lambda_pair(int i, int j) {
    if (i >= j) throw std::invalid_argument("lambda_pair: need i < j");
    int a = 2 * i - 1, b = 2 * i, c = 2 * j - 1, d = 2 * j;
    AlgebraElement r = scale(q_int_power(-1), lambda_single(i));
    r = add(r, mul(l_extended(b, c, +1), l_extended(b, c, -1)));
    r = add(r, scale(q_int_power(1), lambda_single(j)));
    r = add(r, scale(QScalar::t_power(-2), mul(l_extended(a, c, +1), l_extended(a, c, -1))));
    r = add(r, scale(QScalar::t_power(2), mul(l_extended(b, d, +1), l_extended(b, d, -1))));
    r = add(r, mul(l_extended(a, d, +1), l_extended(a, d, -1)));
    return r;
}

AlgebraElement lambda_range(IndexRange r, int n) {
    if (r.empty()) return AlgebraElement::zero();
    if (r.lo < 1 || r.hi > n)
        throw std::invalid_argument("lambda_range: range not contained in [1;n]");
    int len = r.size();
    if (len == 1) return lambda_single(r.lo);
    if (len == 2) return lambda_pair(r.lo, r.hi);
    int k = r.lo, l = len;
    AlgebraElement acc;
    for (int i = 1; i < l; ++i)
        for (int j = i + 1; j <= l; ++j)
            acc = add(acc, scale(QScalar::t_power(4 * (i + j - (l + 1))),
                                 lambda_pair(k - 1 + i, k - 1 + j)));
    QScalar br = q_bracket(2 * (l - 2), 2);  // [l-2]_{q^{1/2}}
    for (int i = 1; i <= l; ++i)
        acc = sub(acc, scale(br * QScalar::t_power(4 * i - 2 * (l + 1)),
                             lambda_single(k - 1 + i)));
    return acc;
}

QScalar duality_shift(IndexRange r) {
    int m = r.size();
    return q_bracket(2 * (m + 1) - 2, 2) * q_bracket(2 * (m - 1) - 2, 2);
}

QScalar tilde_scale(TildePreset preset) {
    // (q^{1/2}-q^{-1/2})^2
    Laurent d = Laurent::t_power(2) - Laurent::t_power(-2);
    QScalar sq(d * d);
    switch (preset) {
        case TildePreset::CasMap:
            return -sq;
        case TildePreset::Sec41: {
            Laurent oneq = Laurent(1) + Laurent::t_power(4);
            return -(sq / QScalar(oneq * oneq));
        }
    }
    throw std::invalid_argument("tilde_scale: unknown preset");
}

AlgebraElement lambda_tilde(IndexRange r, int n, TildePreset preset) {
    QScalar u = tilde_scale(preset);
    AlgebraElement e = lambda_range(r, n);
    e = sub(e, scale(duality_shift(r), AlgebraElement::identity()));
    e = scale(u, e);
    return add(e, scale(q_bracket(4, 4), AlgebraElement::identity()));  // + [2]_q
}

}  // namespace qhowe
