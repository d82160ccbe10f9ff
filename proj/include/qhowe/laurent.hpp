#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qhowe {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable t with arbitrary-precision integer
/// coefficients. Stored densely: coeff(low()+k) == c_[k]. The zero polynomial
/// has an empty coefficient vector; otherwise both ends of c_ are nonzero.
class Laurent {
public:
    Laurent() = default;
    Laurent(long constant) { if (constant != 0) { c_ = {Int(constant)}; } }
    Laurent(Int constant) { if (constant != 0) { c_ = {std::move(constant)}; } }

    static Laurent t_power(long k, Int coeff = Int(1));

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }

    long low() const { return low_; }              // lowest exponent (0 if zero)
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    long term_count() const;

    const Int& coeff(long k) const;                // coefficient of t^k
    const Int& lead() const { return c_.back(); }  // coefficient of t^high()

    Laurent shifted(long k) const;                 // multiply by t^k

    Int content() const;                           // gcd of coefficients, >= 0
    Laurent primitive_part() const;

    friend Laurent operator+(const Laurent& x, const Laurent& y);
    friend Laurent operator-(const Laurent& x, const Laurent& y);
    friend Laurent operator*(const Laurent& x, const Laurent& y);
    friend Laurent operator-(const Laurent& x);
    friend bool operator==(const Laurent& x, const Laurent& y);

    Laurent divided_by_int(const Int& d) const;    // exact, throws otherwise

    // Exact division: sets q with x == q*y, returns false if not divisible.
    static bool div_exact(const Laurent& x, const Laurent& y, Laurent& q);

    // GCD of the polynomial parts (t-shifts ignored). Result is primitive with
    // positive leading coefficient and low() == 0. gcd(0,0) == 0.
    static Laurent gcd(const Laurent& x, const Laurent& y);

    double eval(double t) const;

    std::string str() const;                       // "c*t^k + ..." descending k
    static Laurent parse(std::string_view s);

    std::size_t hash() const;

private:
    std::vector<Int> c_;
    long low_ = 0;
    void trim();
};

}  // namespace qhowe
