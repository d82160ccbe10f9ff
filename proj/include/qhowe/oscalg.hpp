#pragma once

#include "qhowe/qscalar.hpp"

#include <map>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

namespace qhowe {

/// Consecutive integer set [lo;hi]. Empty iff hi < lo.
struct IndexRange {
    int lo = 1;
    int hi = 0;
    bool empty() const { return hi < lo; }
    int size() const { return empty() ? 0 : hi - lo + 1; }
};

/// Single-site factor (A^+)^a w^s (A^-)^b in that fixed order, with
/// w = q^{A^0/4} and min(a,b) == 0. s is the w-exponent in quarter units.
struct SiteMonomial {
    int a = 0;
    int s = 0;
    int b = 0;
    bool is_identity() const { return a == 0 && s == 0 && b == 0; }
    friend bool operator==(const SiteMonomial&, const SiteMonomial&) = default;
    friend auto operator<=>(const SiteMonomial&, const SiteMonomial&) = default;
};

/// Product of site factors over distinct sites, stored sparsely in ascending
/// site order (identity factors omitted). The total order (lexicographic by
/// site, then (a,s,b)) fixes canonical printing and deterministic iteration.
struct Monomial {
    std::vector<std::pair<int, SiteMonomial>> factors;

    bool is_identity() const { return factors.empty(); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    std::size_t hash() const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct SupportDegree {
    int max_a = 0;
    int max_b = 0;
    int max_abs_s = 0;
};

/// Surviving raising monomials from a ground-state application that is not a
/// scalar multiple of the ground state.
struct NotDiagonal {
    std::vector<Monomial> survivors;
};
using GroundResult = std::variant<QScalar, NotDiagonal>;

/// Generator word entry for normal_form input: A^+_i, A^-_i, or w_i^k.
struct GenFactor {
    enum Kind { APlus, AMinus, Weight } kind;
    int site;
    int k = 0;  // weight exponent in quarter units (Weight only)
};
struct RawTerm {
    QScalar coeff;
    std::vector<GenFactor> word;
};

/// Sparse sum of canonical normal-ordered monomials with QScalar coefficients.
/// Invariants: no stored coefficient is zero; every stored monomial satisfies
/// the SiteMonomial invariants. The zero element is the empty map.
class AlgebraElement {
public:
    using TermMap = std::unordered_map<Monomial, QScalar, MonomialHash>;

    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement identity();
    static AlgebraElement from_term(Monomial m, QScalar c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Terms sorted by the documented monomial order.
    std::vector<std::pair<Monomial, QScalar>> sorted_terms() const;

    void add_term(const Monomial& m, const QScalar& c);  // accumulates, drops zeros

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

    std::string str() const;
    static AlgebraElement parse(std::string_view s);

private:
    TermMap terms_;
};

// Generators (single-term canonical elements).
AlgebraElement gen_a_plus(int site);
AlgebraElement gen_a_minus(int site);
AlgebraElement gen_weight(int site, int s);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const QScalar& c, const AlgebraElement& x);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);         // OpenMP kernel
AlgebraElement mul_serial(const AlgebraElement& x, const AlgebraElement& y);  // reference

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) { return add(x, y); }
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return sub(x, y); }
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return mul(x, y); }
inline AlgebraElement operator*(const QScalar& c, const AlgebraElement& x) { return scale(c, x); }
AlgebraElement operator-(const AlgebraElement& x);

/// [x,y] = xy - yx
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);
/// q^{k/4} xy - q^{-k/4} yx  (k in quarter units)
AlgebraElement q_commutator(const AlgebraElement& x, const AlgebraElement& y, int k);

/// Exhaustive rewrite of an arbitrary generator word sum into canonical form.
AlgebraElement normal_form(const std::vector<RawTerm>& raw);

/// e|0,...,0>: scalar if the survivor is a multiple of the ground state,
/// otherwise the list of surviving raising monomials.
GroundResult ground_expectation(const AlgebraElement& e);

std::map<int, SupportDegree> support_degree(const AlgebraElement& e);

namespace detail {
/// Single-site product of two canonical site monomials, as a canonical
/// site-local term list. Memoized per thread.
using SiteTerms = std::vector<std::pair<SiteMonomial, QScalar>>;
const SiteTerms& site_mul(const SiteMonomial& m1, const SiteMonomial& m2);

/// Product of one term pair, accumulated into acc (the mul kernels' core).
void term_product(const Monomial& m1, const QScalar& c1, const Monomial& m2,
                  const QScalar& c2, AlgebraElement& acc);
}  // namespace detail

}  // namespace qhowe
