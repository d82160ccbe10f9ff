#include "qhowe/laurent.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qhowe {

void Laurent::trim() {
    std::size_t lo = 0;
    while (lo < c_.size() && c_[lo] == 0) ++lo;
    std::size_t hi = c_.size();
    while (hi > lo && c_[hi - 1] == 0) --hi;
    if (lo == hi) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (lo > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lo));
        low_ += static_cast<long>(lo);
    }
    c_.resize(hi - lo);
}

Laurent Laurent::t_power(long k, Int coeff) {
    Laurent r;
    if (coeff != 0) {
        r.c_ = {std::move(coeff)};
        r.low_ = k;
    }
    return r;
}

long Laurent::term_count() const {
    long n = 0;
    for (const auto& c : c_)
        if (c != 0) ++n;
    return n;
}

const Int& Laurent::coeff(long k) const {
    static const Int zero(0);
    if (is_zero() || k < low_ || k > high()) return zero;
    return c_[static_cast<std::size_t>(k - low_)];
}

Laurent Laurent::shifted(long k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

Int Laurent::content() const {
    Int g(0);
    for (const auto& c : c_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Laurent Laurent::primitive_part() const {
    if (is_zero()) return Laurent();
    Int g = content();
    return divided_by_int(g);
}

Laurent Laurent::divided_by_int(const Int& d) const {
    if (d == 0) throw std::runtime_error("Laurent: division by zero integer");
    Laurent r = *this;
    for (auto& c : r.c_) {
        Int q = c / d;
        if (q * d != c) throw std::runtime_error("Laurent: inexact integer division");
        c = std::move(q);
    }
    r.trim();
    return r;
}

Laurent operator+(const Laurent& x, const Laurent& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    long lo = std::min(x.low_, y.low_);
    long hi = std::max(x.high(), y.high());
    Laurent r;
    r.low_ = lo;
    r.c_.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i)
        r.c_[static_cast<std::size_t>(x.low_ - lo) + i] += x.c_[i];
    for (std::size_t i = 0; i < y.c_.size(); ++i)
        r.c_[static_cast<std::size_t>(y.low_ - lo) + i] += y.c_[i];
    r.trim();
    return r;
}

Laurent operator-(const Laurent& x) {
    Laurent r = x;
    for (auto& c : r.c_) c = -c;
    return r;
}

Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }

Laurent operator*(const Laurent& x, const Laurent& y) {
    if (x.is_zero() || y.is_zero()) return Laurent();
    Laurent r;
    r.low_ = x.low_ + y.low_;
    r.c_.assign(x.c_.size() + y.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            r.c_[i + j] += x.c_[i] * y.c_[j];
        }
    }
    r.trim();
    return r;
}

bool operator==(const Laurent& x, const Laurent& y) {
    return x.low_ == y.low_ && x.c_ == y.c_;
}

bool Laurent::div_exact(const Laurent& x, const Laurent& y, Laurent& q) {
    if (y.is_zero()) return false;
    if (x.is_zero()) {
        q = Laurent();
        return true;
    }
    // Long division on coefficient vectors; the t-shift divides trivially.
    std::vector<Int> rem = x.c_;
    const std::vector<Int>& d = y.c_;
    if (rem.size() < d.size()) return false;
    std::vector<Int> quot(rem.size() - d.size() + 1, Int(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int top = rem[k + d.size() - 1];
        if (top == 0) continue;
        Int qi = top / d.back();
        if (qi * d.back() != top) return false;
        quot[k] = qi;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= qi * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    Laurent res;
    res.c_ = std::move(quot);
    res.low_ = x.low_ - y.low_;
    res.trim();
    q = std::move(res);
    return true;
}

namespace {

// Pseudo-remainder of a by b (coefficient vectors, b nonzero, |a| >= |b|).
std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        Int la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

std::vector<Int> prim(std::vector<Int> v) {
    Int g(0);
    for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& x, const Laurent& y) {
    if (x.is_zero()) {
        Laurent r = y.primitive_part();
        if (!r.is_zero()) {
            r.low_ = 0;
            if (r.lead() < 0) r = -r;
        }
        return r;
    }
    if (y.is_zero()) return gcd(y, x);
    std::vector<Int> a = prim(x.c_);
    std::vector<Int> b = prim(y.c_);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Int> r = prim(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    Laurent r;
    r.c_ = std::move(a);
    r.low_ = 0;
    r.trim();
    if (!r.is_zero() && r.lead() < 0) r = -r;
    return r;
}

double Laurent::eval(double t) const {
    // Horner in 50-digit floating point: integer coefficients can be huge and
    // alternate in sign (e.g. Casimir numerators near t = 1), and plain double
    // accumulation then loses every significant digit of the small result.
    if (is_zero()) return 0.0;
    using Big = boost::multiprecision::cpp_bin_float_50;
    Big tb(t), acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * tb + Big(c_[i]);
    acc *= pow(tb, static_cast<int>(low_));
    return acc.convert_to<double>();
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i] << "*t^" << (low_ + static_cast<long>(i));
        first = false;
    }
    return os.str();
}

Laurent Laurent::parse(std::string_view s) {
    Laurent r;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    skip_ws();
    if (s.substr(pos) == "0") return r;
    while (pos < s.size()) {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::runtime_error("Laurent::parse: expected coefficient");
        Int c(std::string(s.substr(start, pos - start)));
        if (pos + 3 > s.size() || s.substr(pos, 3) != "*t^")
            throw std::runtime_error("Laurent::parse: expected '*t^'");
        pos += 3;
        start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        long k = std::stol(std::string(s.substr(start, pos - start)));
        r = r + Laurent::t_power(k, c);
        skip_ws();
        if (pos == s.size()) break;
        if (s.substr(pos, 1) != "+") throw std::runtime_error("Laurent::parse: expected '+'");
        ++pos;
    }
    return r;
}

std::size_t Laurent::hash() const {
    std::size_t h = static_cast<std::size_t>(low_) * 1099511628211ull;
    for (const auto& c : c_) {
        h ^= std::hash<std::string>{}(c.str()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace qhowe
