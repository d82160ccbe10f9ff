#include "qhowe/oscalg.hpp"

#include <algorithm>
#include <sstream>

namespace qhowe {

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](long v) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    };
    for (const auto& [site, sm] : factors) {
        mix(site);
        mix(sm.a);
        mix(sm.s);
        mix(sm.b);
    }
    return h;
}

AlgebraElement AlgebraElement::identity() {
    AlgebraElement e;
    e.terms_.emplace(Monomial{}, QScalar(1));
    return e;
}

AlgebraElement AlgebraElement::from_term(Monomial m, QScalar c) {
    AlgebraElement e;
    if (!c.is_zero()) e.terms_.emplace(std::move(m), std::move(c));
    return e;
}

void AlgebraElement::add_term(const Monomial& m, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::vector<std::pair<Monomial, QScalar>> AlgebraElement::sorted_terms() const {
    std::vector<std::pair<Monomial, QScalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (const auto& [m, c] : x.terms_) {
        auto it = y.terms_.find(m);
        if (it == y.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

AlgebraElement gen_a_plus(int site) {
    return AlgebraElement::from_term(Monomial{{{site, SiteMonomial{1, 0, 0}}}}, QScalar(1));
}

AlgebraElement gen_a_minus(int site) {
    return AlgebraElement::from_term(Monomial{{{site, SiteMonomial{0, 0, 1}}}}, QScalar(1));
}

AlgebraElement gen_weight(int site, int s) {
    if (s == 0) return AlgebraElement::identity();
    return AlgebraElement::from_term(Monomial{{{site, SiteMonomial{0, s, 0}}}}, QScalar(1));
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r = x;
    for (const auto& [m, c] : y.terms()) r.add_term(m, c);
    return r;
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r = x;
    for (const auto& [m, c] : y.terms()) r.add_term(m, -c);
    return r;
}

AlgebraElement scale(const QScalar& c, const AlgebraElement& x) {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, cm] : x.terms()) r.add_term(m, c * cm);
    return r;
}

AlgebraElement operator-(const AlgebraElement& x) { return scale(QScalar(-1), x); }

namespace detail {

namespace {

// 1/(1-q) as a QScalar, built once.
const QScalar& inv_one_minus_q() {
    static const QScalar v(Laurent(1), Laurent(1) - Laurent::t_power(4));
    return v;
}

// (b)_q = 1 + q + ... + q^{b-1} as an integer Laurent polynomial.
Laurent paren_int(int b) {
    Laurent r;
    for (int j = 0; j < b; ++j) r = r + Laurent::t_power(4 * j);
    return r;
}

// Rewrites (A^+)^a w^s (A^-)^b with a,b possibly both positive into canonical
// terms via A^+A^- = (1 - w^4)/(1-q), accumulating coeff * monomial into out.
void reduce_mixed(int a, int s, int b, const QScalar& coeff, SiteTerms& out) {
    if (a == 0 || b == 0) {
        out.emplace_back(SiteMonomial{a, s, b}, coeff);
        return;
    }
    QScalar c = coeff * QScalar::t_power(-s) * inv_one_minus_q();
    reduce_mixed(a - 1, s, b - 1, c, out);
    reduce_mixed(a - 1, s + 4, b - 1, -c, out);
}

void collect(SiteTerms& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SiteTerms out;
    for (auto& [m, c] : v) {
        if (!out.empty() && out.back().first == m)
            out.back().second = out.back().second + c;
        else
            out.emplace_back(m, c);
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    v = std::move(out);
}

SiteTerms apply_a_plus(const SiteTerms& in) {
    SiteTerms out;
    for (const auto& [m, c] : in) {
        if (m.b == 0) {
            out.emplace_back(SiteMonomial{m.a + 1, m.s, 0}, c * QScalar::t_power(m.s));
        } else {
            // (A^-)^b A^+ = q^b A^+ (A^-)^b + (b)_q (A^-)^{b-1}
            reduce_mixed(m.a + 1, m.s, m.b,
                         c * QScalar::t_power(m.s) * QScalar(Laurent::t_power(4 * m.b)), out);
            out.emplace_back(SiteMonomial{m.a, m.s, m.b - 1}, c * QScalar(paren_int(m.b)));
        }
    }
    collect(out);
    return out;
}

SiteTerms apply_a_minus(const SiteTerms& in) {
    SiteTerms out;
    for (const auto& [m, c] : in) reduce_mixed(m.a, m.s, m.b + 1, c, out);
    collect(out);
    return out;
}

SiteTerms apply_weight(const SiteTerms& in, int k) {
    if (k == 0) return in;
    SiteTerms out;
    for (const auto& [m, c] : in)
        out.emplace_back(SiteMonomial{m.a, m.s + k, m.b}, c * QScalar::t_power(k * m.b));
    return out;
}

struct SiteMulKey {
    SiteMonomial m1, m2;
    bool operator==(const SiteMulKey&) const = default;
};
struct SiteMulKeyHash {
    std::size_t operator()(const SiteMulKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (long v : {k.m1.a, k.m1.s, k.m1.b, k.m2.a, k.m2.s, k.m2.b}) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

const SiteTerms& site_mul(const SiteMonomial& m1, const SiteMonomial& m2) {
    thread_local std::unordered_map<SiteMulKey, SiteTerms, SiteMulKeyHash> cache;
    SiteMulKey key{m1, m2};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SiteTerms acc{{m1, QScalar(1)}};
    for (int j = 0; j < m2.a; ++j) acc = apply_a_plus(acc);
    acc = apply_weight(acc, m2.s);
    for (int j = 0; j < m2.b; ++j) acc = apply_a_minus(acc);
    return cache.emplace(std::move(key), std::move(acc)).first->second;
}

// Product of one term pair, accumulated into acc.
void term_product(const Monomial& m1, const QScalar& c1, const Monomial& m2,
                  const QScalar& c2, AlgebraElement& acc) {
    // Expand site by site; distinct sites commute freely.
    std::vector<std::pair<Monomial, QScalar>> partial{{Monomial{}, c1 * c2}};
    std::size_t i = 0, j = 0;
    auto extend_single = [&partial](int site, const SiteMonomial& sm) {
        for (auto& [m, c] : partial) m.factors.emplace_back(site, sm);
    };
    while (i < m1.factors.size() || j < m2.factors.size()) {
        int s1 = i < m1.factors.size() ? m1.factors[i].first : INT32_MAX;
        int s2 = j < m2.factors.size() ? m2.factors[j].first : INT32_MAX;
        if (s1 < s2) {
            extend_single(s1, m1.factors[i].second);
            ++i;
        } else if (s2 < s1) {
            extend_single(s2, m2.factors[j].second);
            ++j;
        } else {
            const SiteTerms& st = site_mul(m1.factors[i].second, m2.factors[j].second);
            std::vector<std::pair<Monomial, QScalar>> next;
            next.reserve(partial.size() * st.size());
            for (const auto& [m, c] : partial) {
                for (const auto& [sm, sc] : st) {
                    auto mm = m;
                    if (!sm.is_identity()) mm.factors.emplace_back(s1, sm);
                    next.emplace_back(std::move(mm), c * sc);
                }
            }
            partial = std::move(next);
            ++i;
            ++j;
        }
    }
    for (auto& [m, c] : partial) acc.add_term(m, c);
}

}  // namespace detail

AlgebraElement mul_serial(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement r;
    for (const auto& [m1, c1] : x.terms())
        for (const auto& [m2, c2] : y.terms())
            detail::term_product(m1, c1, m2, c2, r);
    return r;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return mul(x, y) - mul(y, x);
}

AlgebraElement q_commutator(const AlgebraElement& x, const AlgebraElement& y, int k) {
    return scale(QScalar::t_power(k), mul(x, y)) - scale(QScalar::t_power(-k), mul(y, x));
}

AlgebraElement normal_form(const std::vector<RawTerm>& raw) {
    AlgebraElement r;
    for (const auto& term : raw) {
        AlgebraElement acc = scale(term.coeff, AlgebraElement::identity());
        for (const auto& g : term.word) {
            AlgebraElement gen;
            switch (g.kind) {
                case GenFactor::APlus: gen = gen_a_plus(g.site); break;
                case GenFactor::AMinus: gen = gen_a_minus(g.site); break;
                case GenFactor::Weight: gen = gen_weight(g.site, g.k); break;
            }
            acc = mul(acc, gen);
        }
        r = add(r, acc);
    }
    return r;
}

GroundResult ground_expectation(const AlgebraElement& e) {
    QScalar value;
    NotDiagonal nd;
    for (const auto& [m, c] : e.sorted_terms()) {
        bool kills = false, raises = false;
        for (const auto& [site, sm] : m.factors) {
            if (sm.b > 0) kills = true;
            if (sm.a > 0) raises = true;
        }
        if (kills) continue;  // any lowering factor annihilates |0,...,0>
        if (raises)
            nd.survivors.push_back(m);
        else
            value = value + c;  // weight factors act as 1 on the ground state
    }
    if (!nd.survivors.empty()) return nd;
    return value;
}

std::map<int, SupportDegree> support_degree(const AlgebraElement& e) {
    std::map<int, SupportDegree> r;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [site, sm] : m.factors) {
            auto& d = r[site];
            d.max_a = std::max(d.max_a, sm.a);
            d.max_b = std::max(d.max_b, sm.b);
            d.max_abs_s = std::max(d.max_abs_s, std::abs(sm.s));
        }
    }
    return r;
}

std::string AlgebraElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " * ";
        if (m.is_identity()) {
            os << "1";
            continue;
        }
        bool ffirst = true;
        for (const auto& [site, sm] : m.factors) {
            if (sm.a != 0) {
                os << (ffirst ? "" : " ") << "Ap[" << site << "]^" << sm.a;
                ffirst = false;
            }
            if (sm.s != 0) {
                os << (ffirst ? "" : " ") << "W[" << site << "]^" << sm.s;
                ffirst = false;
            }
            if (sm.b != 0) {
                os << (ffirst ? "" : " ") << "Am[" << site << "]^" << sm.b;
                ffirst = false;
            }
        }
    }
    return os.str();
}

namespace {

// Splits "a + b + ..." at top level (no parens nesting in element bodies other
// than QScalar wrappers, so split on " + " outside parentheses).
std::vector<std::string_view> split_terms(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (depth == 0 && s.compare(i, 3, " + ") == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 3;
            i += 2;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

}  // namespace

AlgebraElement AlgebraElement::parse(std::string_view s) {
    AlgebraElement e;
    if (s == "0") return e;
    for (auto term : split_terms(s)) {
        auto sep = term.find(") * ");
        if (sep == std::string_view::npos)
            throw std::runtime_error("AlgebraElement::parse: malformed term");
        QScalar c = QScalar::parse(term.substr(0, sep + 1));
        std::string_view body = term.substr(sep + 4);
        Monomial m;
        if (body != "1") {
            std::size_t pos = 0;
            while (pos < body.size()) {
                while (pos < body.size() && body[pos] == ' ') ++pos;
                if (pos >= body.size()) break;
                std::string_view rest = body.substr(pos);
                int kind;
                if (rest.starts_with("Ap[")) { kind = 0; pos += 3; }
                else if (rest.starts_with("W[")) { kind = 1; pos += 2; }
                else if (rest.starts_with("Am[")) { kind = 2; pos += 3; }
                else throw std::runtime_error("AlgebraElement::parse: bad factor");
                std::size_t close = body.find(']', pos);
                int site = std::stoi(std::string(body.substr(pos, close - pos)));
                pos = close + 1;
                if (body[pos] != '^') throw std::runtime_error("AlgebraElement::parse: expected '^'");
                ++pos;
                std::size_t end = pos;
                if (end < body.size() && body[end] == '-') ++end;
                while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
                int exp = std::stoi(std::string(body.substr(pos, end - pos)));
                pos = end;
                if (m.factors.empty() || m.factors.back().first != site)
                    m.factors.emplace_back(site, SiteMonomial{});
                auto& sm = m.factors.back().second;
                if (kind == 0) sm.a = exp;
                else if (kind == 1) sm.s = exp;
                else sm.b = exp;
            }
        }
        e.add_term(m, c);
    }
    return e;
}

}  // namespace qhowe
