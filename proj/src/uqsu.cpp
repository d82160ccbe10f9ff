#include "qhowe/uqsu.hpp"

namespace qhowe {

namespace {

const QScalar& inv_two_qhalf() {
    // 1/[2]_{q^{1/2}} = 1/(q^{1/2}+q^{-1/2})
    static const QScalar v = QScalar(Laurent(1),
                                     Laurent::t_power(2) + Laurent::t_power(-2));
    return v;
}

void check_range(IndexRange r, const char* what) {
    if (r.empty() || r.lo < 1)
        throw std::invalid_argument(std::string(what) + ": invalid range [" +
                                    std::to_string(r.lo) + ";" + std::to_string(r.hi) + "]");
}

}  // namespace

AlgebraElement SuTriple::weight_power(int c) const {
    Monomial m;
    for (int i : sites) m.factors.emplace_back(i, SiteMonomial{0, 2 * c, 0});
    return AlgebraElement::from_term(std::move(m),
                                     QScalar::t_power(c * static_cast<int>(sites.size())));
}

SuTriple metaplectic_site(int site) { return coproduct_range({site, site}); }

SuTriple coproduct_range(IndexRange r) {
    check_range(r, "coproduct_range");
    SuTriple t;
    for (int i = r.lo; i <= r.hi; ++i) t.sites.push_back(i);
    // J_± = (1/[2]_{q^{1/2}}) sum_i (A_i^±)^2 prod_{j>i} q^{A_j^0+1/2}
    for (int i = r.lo; i <= r.hi; ++i) {
        Monomial mp{{{i, SiteMonomial{2, 0, 0}}}};
        Monomial mm{{{i, SiteMonomial{0, 0, 2}}}};
        QScalar tail = QScalar::t_power(2 * (r.hi - i));  // q^{1/2} per trailing site
        for (int j = i + 1; j <= r.hi; ++j) {
            mp.factors.emplace_back(j, SiteMonomial{0, 4, 0});
            mm.factors.emplace_back(j, SiteMonomial{0, 4, 0});
        }
        QScalar c = inv_two_qhalf() * tail;
        t.jp = add(t.jp, AlgebraElement::from_term(std::move(mp), c));
        t.jm = add(t.jm, AlgebraElement::from_term(std::move(mm), c));
    }
    return t;
}

SuTriple paired_triple(int couple) {
    if (couple < 1) throw std::invalid_argument("paired_triple: couple must be >= 1");
    return coproduct_range({2 * couple - 1, 2 * couple});
}

SuTriple couple_coproduct(IndexRange couples) {
    check_range(couples, "couple_coproduct");
    SuTriple acc = paired_triple(couples.lo);
    for (int i = couples.lo + 1; i <= couples.hi; ++i) {
        SuTriple next = paired_triple(i);
        SuTriple merged;
        merged.sites = acc.sites;
        merged.sites.insert(merged.sites.end(), next.sites.begin(), next.sites.end());
        AlgebraElement w2 = next.weight_power(2);
        merged.jp = add(mul(acc.jp, w2), next.jp);
        merged.jm = add(mul(acc.jm, w2), next.jm);
        acc = std::move(merged);
    }
    return acc;
}

AlgebraElement casimir(const SuTriple& t) {
    // J_+ J_- q^{-2J_0+1}
    AlgebraElement first =
        scale(q_int_power(1), mul(mul(t.jp, t.jm), t.weight_power(-2)));
    // (1-q^{2J_0})(1-q^2 q^{-2J_0})/(1-q^2)^2
    Laurent one_minus_q2 = Laurent(1) - Laurent::t_power(8);
    QScalar denom(Laurent(1), one_minus_q2 * one_minus_q2);
    AlgebraElement second = scale(QScalar(Laurent(1) + Laurent::t_power(8)),
                                  AlgebraElement::identity());
    second = sub(second, t.weight_power(2));
    second = sub(second, scale(q_int_power(2), t.weight_power(-2)));
    return add(first, scale(denom, second));
}

AlgebraElement intermediate_casimir(IndexRange couples) {
    check_range(couples, "intermediate_casimir");
    return casimir(coproduct_range({2 * couples.lo - 1, 2 * couples.hi}));
}

SuTriple tilde_triple(const SuTriple& t) {
    SuTriple r;
    r.sites = t.sites;
    AlgebraElement winv = t.weight_power(-1);
    r.jp = mul(t.jp, winv);
    r.jm = mul(winv, t.jm);
    return r;
}

}  // namespace qhowe
