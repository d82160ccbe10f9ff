#include "test_main.hpp"

#include "qhowe/qscalar.hpp"

using namespace qhowe;

namespace {

QScalar q() { return QScalar::t_power(4); }
QScalar qinv() { return QScalar::t_power(-4); }

Laurent random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> lo(-6, 2);
    std::uniform_int_distribution<int> len(1, 6);
    Laurent r;
    int base = lo(rng), n = len(rng);
    for (int k = 0; k < n; ++k) r = r + Laurent::t_power(base + k, Int(coeff(rng)));
    return r;
}

QScalar random_qscalar(std::mt19937_64& rng) {
    Laurent den = random_laurent(rng);
    while (den.is_zero()) den = random_laurent(rng);
    return QScalar(random_laurent(rng), den);
}

}  // namespace

TEST_CASE("canonical form basics") {
    QScalar x(Laurent::t_power(4) + Laurent(1));
    CHECK((x / x).is_one());

    QScalar sum = q() + qinv();  // q + q^{-1}
    CHECK(sum.den().is_one());
    CHECK(sum.num() == Laurent::t_power(4) + Laurent::t_power(-4));

    // Denominator normalization: lowest t-power zero, positive leading coeff.
    QScalar y(Laurent::t_power(3), Laurent::t_power(-2) - Laurent::t_power(1));
    CHECK(y.den().low() == 0);
    CHECK(y.den().lead() > 0);
    // Renormalizing a canonical value is the identity.
    CHECK(QScalar(y.num(), y.den()) == y);
}

TEST_CASE("division by zero is an explicit error") {
    CHECK_THROWS_AS(QScalar(1) / QScalar(), DivisionByZero);
    CHECK_THROWS_AS(QScalar().inverse(), DivisionByZero);
}

TEST_CASE("q(q-q^-1)^2/(1+q)^2 equals (q^1/2 - q^-1/2)^2") {
    QScalar d = q() - qinv();
    QScalar one_plus_q = QScalar(1) + q();
    QScalar lhs = q() * d * d / (one_plus_q * one_plus_q);
    QScalar h = QScalar::t_power(2) - QScalar::t_power(-2);
    CHECK(lhs == h * h);
}

TEST_CASE("q_bracket values") {
    CHECK(q_bracket(4, 4) == q() + qinv());             // [2]_q
    CHECK(q_bracket(0, 2).is_zero());                   // [0]
    CHECK(q_bracket(-2, 2) == QScalar(-1));             // [-1]_{q^1/2}
    CHECK(q_bracket(-6, 2) == -q_bracket(6, 2));        // antisymmetry
    // -[3]_{q^1/2}[1]_{q^1/2} = -(q + 1 + q^-1)
    QScalar v = -(q_bracket(6, 2) * q_bracket(2, 2));
    CHECK(v == -(q() + QScalar(1) + qinv()));
}

TEST_CASE("q_bracket defining identity on random half-integers") {
    auto rng = make_rng(1);
    std::uniform_int_distribution<int> pick(-9, 9);
    for (int rep = 0; rep < 50; ++rep) {
        long x2 = pick(rng), e4 = 2 * pick(rng);
        if (e4 == 0 || (x2 * e4) % 2 != 0) continue;
        QScalar base = QScalar::t_power(e4) - QScalar::t_power(-e4);
        CHECK(q_bracket(x2, e4) * base ==
              QScalar::t_power(x2 * e4 / 2) - QScalar::t_power(-x2 * e4 / 2));
    }
}

TEST_CASE("q_paren values") {
    CHECK(q_paren(2, 8).is_one());  // (1)_{q^2}
    QScalar half = q_paren(1, 8);   // (1/2)_{q^2} = 1/(1+q)
    CHECK(half == (QScalar(1) + q()).inverse());
    QScalar other = q_paren(1, 8);  // (1 - 1/2)_{q^2}
    QScalar prod = half * other;
    QScalar opq = QScalar(1) + q();
    CHECK(prod == (opq * opq).inverse());
}

TEST_CASE("field axioms on random values") {
    auto rng = make_rng(2);
    for (int rep = 0; rep < 40; ++rep) {
        QScalar a = random_qscalar(rng), b = random_qscalar(rng), c = random_qscalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QScalar());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("numeric evaluation") {
    CHECK(((QScalar(1) + q()).inverse()).eval(1.0) == doctest::Approx(0.5));
    double t = std::pow(0.9, 0.25);
    CHECK((q() + qinv()).eval(t) == doctest::Approx(0.9 + 1.0 / 0.9));
    // m = 2 shift -[2][0] vanishes identically.
    CHECK((-(q_bracket(4, 2) * q_bracket(0, 2))).eval(0.77) == doctest::Approx(0.0));
    CHECK_THROWS_AS((q() - QScalar(1)).inverse().eval(1.0), PoleError);  // 1/(q-1) at q=1
}

TEST_CASE("eval is a ring homomorphism on random values") {
    auto rng = make_rng(3);
    const double t = 0.9;
    for (int rep = 0; rep < 40; ++rep) {
        QScalar a = random_qscalar(rng), b = random_qscalar(rng);
        double ea = a.eval(t), eb = b.eval(t);
        double scale = std::max({1.0, std::fabs(ea), std::fabs(eb), std::fabs(ea * eb)});
        CHECK((a + b).eval(t) == doctest::Approx(ea + eb).epsilon(1e-12).scale(scale));
        CHECK((a * b).eval(t) == doctest::Approx(ea * eb).epsilon(1e-12).scale(scale));
    }
}

TEST_CASE("serialization round trip is bit exact") {
    auto rng = make_rng(4);
    for (int rep = 0; rep < 25; ++rep) {
        QScalar a = random_qscalar(rng);
        QScalar back = QScalar::parse(a.str());
        CHECK(back == a);
        CHECK(back.str() == a.str());
    }
    CHECK(QScalar::parse(QScalar().str()).is_zero());
}
