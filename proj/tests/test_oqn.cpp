#include "test_main.hpp"

#include "qhowe/oqn.hpp"

using namespace qhowe;

namespace {

QScalar q() { return q_int_power(1); }
QScalar qh() { return QScalar::t_power(2); }  // q^{1/2}

}  // namespace

TEST_CASE("adjacent generator shape") {
    AlgebraElement l = l_adjacent(1);
    CHECK(l.term_count() == 2);
    CHECK(std::get<QScalar>(ground_expectation(mul(l, l))).is_zero());
    CHECK_THROWS_AS(l_adjacent(0), std::invalid_argument);
}

TEST_CASE("Serre relations on three sites") {
    for (int i = 1; i <= 2; ++i) {
        AlgebraElement a = l_adjacent(i), b = l_adjacent(i + 1);
        QScalar c = qh() + qh().inverse();
        AlgebraElement lhs1 = add(sub(mul(a, mul(b, b)), scale(c, mul(b, mul(a, b)))),
                                  mul(mul(b, b), a));
        CHECK(lhs1 == scale(QScalar(-1), a));
        AlgebraElement lhs2 = add(sub(mul(b, mul(a, a)), scale(c, mul(a, mul(b, a)))),
                                  mul(mul(a, a), b));
        CHECK(lhs2 == scale(QScalar(-1), b));
    }
}

TEST_CASE("distant adjacent generators commute") {
    CHECK(commutator(l_adjacent(1), l_adjacent(3)).is_zero());
    CHECK(commutator(l_adjacent(2), l_adjacent(5)).is_zero());
    CHECK_FALSE(commutator(l_adjacent(1), l_adjacent(2)).is_zero());
}

TEST_CASE("extended generators: base case and recursion") {
    CHECK(l_extended(1, 2, +1) == l_adjacent(1));
    CHECK(l_extended(1, 2, -1) == l_adjacent(1));
    AlgebraElement l13 = q_commutator(l_adjacent(1), l_adjacent(2), +1);
    CHECK(l_extended(1, 3, +1) == l13);
    CHECK_THROWS_AS(l_extended(2, 2, +1), std::invalid_argument);
    CHECK_THROWS_AS(l_extended(1, 3, 2), std::invalid_argument);
}

TEST_CASE("splitting independence of the recursion") {
    for (int sign : {+1, -1}) {
        CHECK(l_extended_via(1, 2, 4, sign) == l_extended_via(1, 3, 4, sign));
        CHECK(l_extended_via(1, 3, 5, sign) == l_extended(1, 5, sign));
        CHECK(l_extended_via(2, 4, 5, sign) == l_extended(2, 5, sign));
    }
}

TEST_CASE("Pluecker identities on four sites") {
    auto pluecker = [](int sign) {
        AlgebraElement p1 = mul(l_extended(1, 2, sign), l_extended(3, 4, sign));
        AlgebraElement p2 = mul(l_extended(1, 3, sign), l_extended(2, 4, sign));
        AlgebraElement p3 = mul(l_extended(1, 4, sign), l_extended(2, 3, sign));
        return add(sub(scale(QScalar::t_power(-2 * sign), p1), p2),
                   scale(QScalar::t_power(2 * sign), p3));
    };
    CHECK(pluecker(+1).is_zero());
    CHECK(pluecker(-1).is_zero());
    // Negative control: flipping both outer coefficients breaks the identity.
    AlgebraElement wrong =
        add(sub(scale(qh(), mul(l_extended(1, 2, +1), l_extended(3, 4, +1))),
                mul(l_extended(1, 3, +1), l_extended(2, 4, +1))),
            scale(qh().inverse(), mul(l_extended(1, 4, +1), l_extended(2, 3, +1))));
    CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("full Casimir windows") {
    CHECK(casimir_full({1, 2}) == mul(l_adjacent(1), l_adjacent(1)));
    CHECK(casimir_full({1, 4}) == lambda_pair(1, 2));
    AlgebraElement l123 = add(add(scale(q_int_power(-1), lambda_pair(1, 2)),
                                  lambda_pair(1, 3)),
                              scale(q(), lambda_pair(2, 3)));
    AlgebraElement singles = add(add(scale(q_int_power(-1), lambda_single(1)),
                                     lambda_single(2)),
                                 scale(q(), lambda_single(3)));
    CHECK(casimir_full({1, 6}) == sub(l123, singles));
    CHECK_THROWS_AS(casimir_full({1, 3}), std::invalid_argument);
}

TEST_CASE("lambda_range cases and the basis-change inverse") {
    const int n = 4;
    CHECK(lambda_range({2, 2}, n) == lambda_single(2));
    CHECK(lambda_range({1, 2}, n) == lambda_pair(1, 2));
    CHECK(lambda_range({3, 2}, n).is_zero());  // empty range
    CHECK(lambda_range({1, 3}, 3) ==
          sub(add(add(scale(q_int_power(-1), lambda_pair(1, 2)), lambda_pair(1, 3)),
                  scale(q(), lambda_pair(2, 3))),
              add(add(scale(q_int_power(-1), lambda_single(1)), lambda_single(2)),
                  scale(q(), lambda_single(3)))));
    CHECK_THROWS_AS(lambda_range({1, 5}, n), std::invalid_argument);

    // Inverse round trip: Lambda_ij recovered from the window elements.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            AlgebraElement rhs = lambda_range({i, j}, n);
            rhs = add(rhs, scale(q_int_power(-1), lambda_range({i, i}, n)));
            rhs = add(rhs, scale(q(), lambda_range({j, j}, n)));
            rhs = sub(rhs, scale(q_int_power(-1), lambda_range({i, j - 1}, n)));
            rhs = sub(rhs, scale(q(), lambda_range({i + 1, j}, n)));
            rhs = add(rhs, lambda_range({i + 1, j - 1}, n));
            CHECK(rhs == lambda_pair(i, j));
        }
}

TEST_CASE("commutant of the couple generators") {
    for (int k = 1; k <= 3; ++k) {
        AlgebraElement lk = l_adjacent(2 * k - 1);
        CHECK(commutator(lambda_single(1), lk).is_zero());
        CHECK(commutator(lambda_pair(1, 2), lk).is_zero());
        CHECK(commutator(lambda_pair(2, 3), lk).is_zero());
    }
    // L_23 straddles couples 1 and 2; Lambda_1 does not commute with it.
    CHECK_FALSE(commutator(lambda_single(1), l_adjacent(2)).is_zero());
}

TEST_CASE("duality shift scalars") {
    CHECK(duality_shift({2, 2}) == QScalar(-1));
    CHECK(duality_shift({1, 2}).is_zero());
    CHECK(duality_shift({1, 3}) == q_bracket(6, 2));  // [3]_{q^1/2}
    CHECK(duality_shift({1, 4}) == q_bracket(8, 2) * q_bracket(4, 2));
}

TEST_CASE("tilde normalization presets") {
    QScalar d = qh() - qh().inverse();
    CHECK(tilde_scale(TildePreset::CasMap) == -(d * d));
    QScalar opq = QScalar(1) + q();
    CHECK(tilde_scale(TildePreset::Sec41) == -(d * d) / (opq * opq));
    CHECK(tilde_scale(TildePreset::CasMap) ==
          tilde_scale(TildePreset::Sec41) * opq * opq);
    // lambda_tilde on a single couple: u(Lambda_i + 1) + [2]_q; ground value
    // u + [2]_q since Lambda_i kills the ground state.
    QScalar ground = std::get<QScalar>(
        ground_expectation(lambda_tilde({1, 1}, 3, TildePreset::CasMap)));
    CHECK(ground == -(d * d) + q_bracket(4, 4));
}
