#pragma once

#include "qhowe/laurent.hpp"

namespace qhowe {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("QScalar: division by zero") {}
};
struct PoleError : std::runtime_error {
    explicit PoleError(double t)
        : std::runtime_error("QScalar: denominator vanishes at t = " + std::to_string(t)) {}
};

/// Element of the fraction field Q(t), t = q^{1/4}. Canonical form:
/// numerator and denominator coprime and content-reduced, denominator with
/// positive leading coefficient and lowest t-power zero.
class QScalar {
public:
    QScalar() = default;                       // zero
    QScalar(long v) : num_(v), den_(1) {}
    QScalar(Int v) : num_(std::move(v)), den_(1) {}
    QScalar(Laurent num) : num_(std::move(num)), den_(1) { normalize_trivial(); }
    QScalar(Laurent num, Laurent den);         // reduces; throws DivisionByZero

    static QScalar t_power(long k) { return QScalar(Laurent::t_power(k)); }
    static QScalar q_power4(long quarter_units) { return t_power(quarter_units); }
    static QScalar fraction(long num, long den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    friend QScalar operator+(const QScalar& x, const QScalar& y);
    friend QScalar operator-(const QScalar& x, const QScalar& y);
    friend QScalar operator*(const QScalar& x, const QScalar& y);
    friend QScalar operator/(const QScalar& x, const QScalar& y);  // throws on y == 0
    friend QScalar operator-(const QScalar& x);
    friend bool operator==(const QScalar& x, const QScalar& y);

    QScalar inverse() const;                   // throws on zero

    double eval(double t) const;               // throws PoleError at a pole

    std::string str() const;                   // "(num)/(den)", bit-exact round trip
    static QScalar parse(std::string_view s);

    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    Laurent num_;        // zero QScalar <=> zero numerator
    Laurent den_ = Laurent(1);
    void normalize_trivial();
};

// q-number helpers. Arguments: x2 = 2x (half-integer x), e4 = 4e (the base is
// q^e with e a multiple of 1/4). x2*e4 must be even so the result lies in Q(t).

/// [x]_{q^e} = (q^{ex} - q^{-ex}) / (q^e - q^{-e})
QScalar q_bracket(long x2, long e4);

/// (x)_{q^e} = (1 - q^{ex}) / (1 - q^e)
QScalar q_paren(long x2, long e4);

inline QScalar q_int_power(long k) { return QScalar::t_power(4 * k); }  // q^k

}  // namespace qhowe
