#pragma once

#include "qhowe/oscalg.hpp"

#include <cstdint>

namespace qhowe {

/// Sparse vector over the Fock basis |n_1,...,n_N>. Keys pack 8 bits per site
/// (site 1 in the low byte); indices are unbounded during application, the
/// cutoff only delimits which basis states are enumerated as inputs.
struct FockVector {
    int n_sites = 0;
    std::unordered_map<std::uint64_t, double> amp;

    double norm() const;
};

std::uint64_t fock_encode(const std::vector<int>& ns);
std::vector<int> fock_decode(std::uint64_t key, int n_sites);

struct MarginError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-site raising reach of an operator expression. An identity check at
/// cutoff D is certified on basis states with n_i <= D - 1 - reach_i.
struct MarginInfo {
    std::map<int, int> reach;  // site -> max raising power
    int max_reach() const;
    static MarginInfo of(const AlgebraElement& e);
    MarginInfo operator+(const MarginInfo& other) const;  // composition
};

/// An AlgebraElement with coefficients evaluated at a sample point t, ready
/// for repeated Fock application. Throws PoleError if a coefficient has a
/// pole at t.
class CompiledElement {
public:
    CompiledElement(const AlgebraElement& e, double t);

    FockVector apply(const FockVector& v) const;
    double t() const { return t_; }

private:
    struct Factor {
        int site;
        int a, s, b;
    };
    struct Term {
        double coeff;
        std::vector<Factor> factors;
    };
    std::vector<Term> terms_;
    double t_ = 0;
};

/// Direct action of one generator on a Fock vector, independent of the
/// rewrite machinery (the raw oracle for confluence checks).
FockVector apply_gen(const FockVector& v, const GenFactor& g, double t);

FockVector apply(const AlgebraElement& e, const FockVector& v, double t);

FockVector basis_state(const std::vector<int>& ns);

/// Max over interior basis states (per MarginInfo) of ||e |state>||.
/// Requires D >= max reach + 2; the error message names the minimum.
double residual(const AlgebraElement& e, int n_sites, int cutoff, double t);

/// Parallel variant of residual's interior sweep and its serial reference.
double residual_serial(const AlgebraElement& e, int n_sites, int cutoff, double t);

/// Sorted eigenvalues of the matrix of e restricted to the box n_i < D.
/// Requires every term of e to have zero net shift (sum a == sum b).
std::vector<double> spectrum(const AlgebraElement& e, int n_sites, int cutoff, double t);

}  // namespace qhowe
