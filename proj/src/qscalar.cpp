#include "qhowe/qscalar.hpp"

namespace qhowe {

void QScalar::normalize_trivial() {
    if (num_.is_zero()) den_ = Laurent(1);
}

QScalar::QScalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    Laurent g = Laurent::gcd(num_, den_);
    if (!g.is_one()) {
        Laurent q;
        // gcd divides both polynomial parts exactly (shift carried by the input).
        Laurent::div_exact(num_, g, q);
        num_ = std::move(q);
        Laurent::div_exact(den_, g, q);
        den_ = std::move(q);
    }
    Int cg = boost::multiprecision::gcd(num_.content(), den_.content());
    if (cg > 1) {
        num_ = num_.divided_by_int(cg);
        den_ = den_.divided_by_int(cg);
    }
    // Absorb the denominator's Laurent shift into the numerator.
    long shift = den_.low();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar QScalar::fraction(long num, long den) {
    return QScalar(Laurent(num), Laurent(den));
}

QScalar operator+(const QScalar& x, const QScalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return QScalar(x.num_ + y.num_, x.den_);
    return QScalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

QScalar operator-(const QScalar& x) {
    QScalar r = x;
    r.num_ = -r.num_;
    return r;
}

QScalar operator-(const QScalar& x, const QScalar& y) { return x + (-y); }

QScalar operator*(const QScalar& x, const QScalar& y) {
    if (x.is_zero() || y.is_zero()) return QScalar();
    if (x.den_.is_one() && y.den_.is_one()) {
        QScalar r;
        r.num_ = x.num_ * y.num_;
        r.den_ = Laurent(1);
        return r;
    }
    // Cross-reduce before multiplying to keep intermediate degrees low.
    QScalar a(x.num_, y.den_);
    QScalar b(y.num_, x.den_);
    QScalar r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    return r;
}

QScalar operator/(const QScalar& x, const QScalar& y) {
    if (y.is_zero()) throw DivisionByZero();
    return x * y.inverse();
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return QScalar(den_, num_);
}

bool operator==(const QScalar& x, const QScalar& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
}

double QScalar::eval(double t) const {
    double d = den_.eval(t);
    if (d == 0.0) throw PoleError(t);
    return num_.eval(t) / d;
}

std::string QScalar::str() const {
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QScalar QScalar::parse(std::string_view s) {
    auto mid = s.find(")/(");
    if (s.empty() || s.front() != '(' || s.back() != ')' || mid == std::string_view::npos)
        throw std::runtime_error("QScalar::parse: malformed input");
    Laurent num = Laurent::parse(s.substr(1, mid - 1));
    Laurent den = Laurent::parse(s.substr(mid + 3, s.size() - mid - 4));
    return QScalar(std::move(num), std::move(den));
}

QScalar q_bracket(long x2, long e4) {
    if ((x2 * e4) % 2 != 0)
        throw std::runtime_error("q_bracket: q^{ex} does not lie in Q(t)");
    if (x2 == 0) return QScalar();
    long k = x2 * e4 / 2;
    return QScalar(Laurent::t_power(k) - Laurent::t_power(-k),
                   Laurent::t_power(e4) - Laurent::t_power(-e4));
}

QScalar q_paren(long x2, long e4) {
    if ((x2 * e4) % 2 != 0)
        throw std::runtime_error("q_paren: q^{ex} does not lie in Q(t)");
    if (x2 == 0) return QScalar();
    long k = x2 * e4 / 2;
    return QScalar(Laurent(1) - Laurent::t_power(k), Laurent(1) - Laurent::t_power(e4));
}

}  // namespace qhowe
