#pragma once

#include "qhowe/focknum.hpp"
#include "qhowe/oqn.hpp"
#include "qhowe/uqsu.hpp"

#include <memory>
#include <optional>
#include <string>

namespace qhowe {

using ElemPtr = std::shared_ptr<const AlgebraElement>;
ElemPtr elem(AlgebraElement e);

/// Linear combination of products of algebra elements. Exact evaluation
/// multiplies out through the rewrite engine; numeric evaluation applies the
/// factors successively to Fock basis states, which keeps the two routes of a
/// relation check independent at the identity level.
struct OpExpr {
    struct Prod {
        QScalar coeff;
        std::vector<ElemPtr> factors;  // operator product, leftmost acts last
    };
    std::vector<Prod> terms;

    static OpExpr atom(ElemPtr e, QScalar c = QScalar(1));
    static OpExpr constant(QScalar c);
    static OpExpr product(std::vector<ElemPtr> factors, QScalar c = QScalar(1));
    static OpExpr commutator(ElemPtr x, ElemPtr y);
    /// q^{k/4} xy - q^{-k/4} yx
    static OpExpr q_commutator(ElemPtr x, ElemPtr y, int k);

    OpExpr operator+(const OpExpr& other) const;
    OpExpr operator-(const OpExpr& other) const;
    OpExpr scaled(const QScalar& c) const;

    MarginInfo margin() const;
};

AlgebraElement exact_eval(const OpExpr& e);

/// Max over sampled basis states of ||expr |state>||. States are enumerated on
/// the simplex sum(n_i) <= cutoff - 1 and deterministically subsampled when
/// more than max_states.
double numeric_residual(const OpExpr& e, int n_sites, int cutoff, double t,
                        std::size_t max_states = 2048);

struct ZhedanovParams {
    QScalar b, c0, c1, d0, d1;
    QScalar sqrt_c0, sqrt_c1;  // user-supplied square roots, checked
};

struct UniversalTriple {
    AlgebraElement ka, kb, kc;
    AlgebraElement alpha, beta, gamma;  // central, possibly scalar multiples of 1
};

struct RacahPresentation {
    AlgebraElement q1, q2, q3;
    QScalar r, xi1, xi2;
    AlgebraElement xi3, xi5, xi7;  // central
};

struct VerificationReport {
    struct Entry {
        std::string relation;
        bool zero = false;
        std::optional<double> residual;  // numeric mode only
        long witness_terms = 0;
        long ms = 0;
    };
    std::string suite;
    int n = 0;
    std::string mode;                 // "exact" | "numeric"
    std::optional<std::string> preset;
    std::vector<Entry> entries;

    bool all_zero() const;
    std::string to_json() const;      // schema-stable; deterministic ordering
    std::string table() const;        // human-readable
};

/// Rescaling of a Zhedanov presentation (K0, K1) into the Z_3-symmetric
/// universal triple. Throws if the supplied square roots are inconsistent.
UniversalTriple zhedanov_to_universal(const ZhedanovParams& p,
                                      const AlgebraElement& k0,
                                      const AlgebraElement& k1);

/// AW(3) generators from the U_q(su(1,1)) side (6 oscillator sites).
UniversalTriple universal_from_su();

/// AW(3) generators from the o_{q^{1/2}}(6) side under a tilde normalization.
UniversalTriple universal_from_oq(TildePreset preset);

RacahPresentation racah_presentation();

/// C_A = [2]_q - q(q-q^{-1})^2 C^{A-bar} for a consecutive couple range.
AlgebraElement gen_set_map(IndexRange couples);

struct SuiteConfig {
    std::string suite;
    int n = 3;
    bool numeric = false;
    std::optional<TildePreset> preset;  // default: the adjudicated CasMap
    int cutoff = 0;                     // 0 = auto (max reach + 2)
    double t_value = 0.95;
    double tolerance = 1e-8;
    bool deep = false;
    std::size_t max_states = 2048;
};

/// Suite ids: oscillator, su11, oq-serre, pluecker, commutant, aw3-universal,
/// aw3-qracah, duality, basis-change, normalization-adjudicate, all.
VerificationReport run_suite(const SuiteConfig& cfg);

/// The universalAW relations of a triple, for reuse by the adjudicator.
std::vector<std::pair<std::string, OpExpr>> universal_relations(
    const UniversalTriple& t, const std::string& prefix);

}  // namespace qhowe
