#include "test_main.hpp"

#include "qhowe/uqsu.hpp"

using namespace qhowe;

namespace {

QScalar q() { return q_int_power(1); }

// The three defining relations of one realized copy, as normal-form residues.
// J_0 enters through its group-like exponentials: [J_0, J_pm] = pm J_pm is
// equivalent to q^{J_0} J_pm = q^{pm 1} J_pm q^{J_0}.
void check_su_relations(const SuTriple& t) {
    AlgebraElement w1 = t.weight_power(1);
    CHECK(mul(w1, t.jp) == scale(q(), mul(t.jp, w1)));
    CHECK(mul(w1, t.jm) == scale(q_int_power(-1), mul(t.jm, w1)));
    // J_-J_+ - q^2 J_+J_- = q^{2J_0}[2J_0]_q = (q^{4J_0} - 1)/(q - q^{-1})
    QScalar inv = (q() - q_int_power(-1)).inverse();
    AlgebraElement rhs = scale(inv, sub(t.weight_power(4), AlgebraElement::identity()));
    CHECK(sub(mul(t.jm, t.jp), scale(q_int_power(2), mul(t.jp, t.jm))) == rhs);
}

}  // namespace

TEST_CASE("metaplectic realization satisfies the defining relations") {
    check_su_relations(metaplectic_site(1));
    check_su_relations(metaplectic_site(3));
}

TEST_CASE("metaplectic ground values") {
    SuTriple t = metaplectic_site(1);
    // q^{2J_0} on the ground state is q^{1/2}.
    CHECK(std::get<QScalar>(ground_expectation(t.weight_power(2))) == QScalar::t_power(2));
    CHECK(std::get<QScalar>(ground_expectation(mul(t.jm, t.jm))).is_zero());
}

TEST_CASE("coproduct ranges are algebra morphisms") {
    check_su_relations(coproduct_range({1, 2}));
    check_su_relations(coproduct_range({1, 4}));
    check_su_relations(coproduct_range({2, 5}));
}

TEST_CASE("coproduct_range on a single site reduces to the metaplectic copy") {
    SuTriple a = coproduct_range({1, 1}), b = metaplectic_site(1);
    CHECK(a.jp == b.jp);
    CHECK(a.jm == b.jm);
    CHECK(a.weight_power(2) == b.weight_power(2));
}

TEST_CASE("paired triples") {
    SuTriple p1 = paired_triple(1), c12 = coproduct_range({1, 2});
    CHECK(p1.jp == c12.jp);
    CHECK(p1.jm == c12.jm);
    CHECK(p1.weight_power(4) == c12.weight_power(4));
    // Disjoint couples commute elementwise.
    SuTriple p2 = paired_triple(2);
    CHECK(commutator(p1.jp, p2.jm).is_zero());
    CHECK(commutator(p1.jm, p2.jp).is_zero());
    CHECK(commutator(p1.weight_power(2), p2.jp).is_zero());
}

TEST_CASE("coassociativity: couple coproduct equals the site-range coproduct") {
    for (IndexRange couples : {IndexRange{1, 2}, IndexRange{1, 3}, IndexRange{2, 3}}) {
        SuTriple via_couples = couple_coproduct(couples);
        SuTriple via_sites = coproduct_range({2 * couples.lo - 1, 2 * couples.hi});
        CHECK(via_couples.jp == via_sites.jp);
        CHECK(via_couples.jm == via_sites.jm);
        CHECK(via_couples.weight_power(2) == via_sites.weight_power(2));
    }
}

TEST_CASE("empty coproduct range is rejected") {
    CHECK_THROWS_AS(coproduct_range({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(intermediate_casimir({1, 0}), std::invalid_argument);
}

TEST_CASE("Casimir centrality") {
    for (const SuTriple& t : {metaplectic_site(1), coproduct_range({1, 2})}) {
        AlgebraElement c = casimir(t);
        CHECK(commutator(c, t.jp).is_zero());
        CHECK(commutator(c, t.jm).is_zero());
        CHECK(commutator(c, t.weight_power(2)).is_zero());
    }
}

TEST_CASE("Casimir ground values on couple ranges") {
    QScalar opq = QScalar(1) + q();
    CHECK(std::get<QScalar>(ground_expectation(casimir(paired_triple(1)))) ==
          (opq * opq).inverse());
    // (1+q)^2 C^{[1;m]} on the ground state is -[m]_{q^1/2}[m-2]_{q^1/2}.
    for (int m = 1; m <= 3; ++m) {
        QScalar got = std::get<QScalar>(
            ground_expectation(scale(opq * opq, intermediate_casimir({1, m}))));
        CHECK(got == -(q_bracket(2 * m, 2) * q_bracket(2 * m - 4, 2)));
    }
}

TEST_CASE("intermediate Casimirs: non-commutation and total centrality") {
    AlgebraElement c12 = intermediate_casimir({1, 2});
    AlgebraElement c1 = intermediate_casimir({1, 1});
    CHECK_FALSE(commutator(c12, intermediate_casimir({2, 3})).is_zero());
    CHECK(commutator(c12, c1).is_zero());  // nested ranges commute
    SuTriple total = coproduct_range({1, 6});
    CHECK(commutator(c12, total.jp).is_zero());
    CHECK(commutator(c12, total.jm).is_zero());
}

TEST_CASE("tilde triple standard presentation") {
    for (const SuTriple& base : {metaplectic_site(1), coproduct_range({1, 2})}) {
        SuTriple t = tilde_triple(base);
        // [J~_-, J~_+] = [2J~_0]_q = (q^{2J_0} - q^{-2J_0})/(q - q^{-1})
        QScalar inv = (q() - q_int_power(-1)).inverse();
        AlgebraElement rhs =
            scale(inv, sub(t.weight_power(2), t.weight_power(-2)));
        CHECK(commutator(t.jm, t.jp) == rhs);
        // Weight conjugation is unchanged.
        AlgebraElement w1 = t.weight_power(1);
        CHECK(mul(w1, t.jp) == scale(q(), mul(t.jp, w1)));
        CHECK(mul(w1, t.jm) == scale(q_int_power(-1), mul(t.jm, w1)));
    }
}
