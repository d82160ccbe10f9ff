#pragma once

#include "qhowe/oscalg.hpp"

namespace qhowe {

/// Normalization preset for lambda_tilde (see adjudication suite).
enum class TildePreset {
    Sec41,   // u = -((q^{1/2}-q^{-1/2})/(1+q))^2
    CasMap,  // u = -q(q-q^{-1})^2/(1+q)^2 = -(q^{1/2}-q^{-1/2})^2
};

/// L_{i,i+1} = q^{-(A_i^0-1/2)/2} (q^{1/4} A_i^+ A_{i+1}^- - q^{-1/4} A_i^- A_{i+1}^+)
/// (the prefactor scale is pinned by the Serre relations; see l_adjacent).
AlgebraElement l_adjacent(int i);

/// L_{ik}^± via the q^{±1/4}-commutator recursion with splitting j = i+1.
/// sign: +1 or -1. Memoized per thread.
AlgebraElement l_extended(int i, int k, int sign);

/// Same recursion with an explicit middle index j (uncached; for the
/// splitting-independence checks).
AlgebraElement l_extended_via(int i, int j, int k, int sign);

/// Quadratic Casimir over an even-length consecutive site window:
/// sum_{i<j} q^{(-2n+i'+j'-1)/2} L_{ij}^+ L_{ij}^- with window-relative (i',j').
AlgebraElement casimir_full(IndexRange sites);

AlgebraElement lambda_single(int couple);            // Lambda_i = L_{2i-1,2i}^2
AlgebraElement lambda_pair(int i, int j);            // the six-term Lambda_ij

/// Lambda^{[k;l]} over couples, three-case linear combination; the empty range
/// gives the zero element. Throws if r is not contained in [1;n].
AlgebraElement lambda_range(IndexRange couples, int n);

/// Shift scalar [j-i+1]_{q^{1/2}} [j-i-1]_{q^{1/2}} of a consecutive couple range.
QScalar duality_shift(IndexRange couples);

QScalar tilde_scale(TildePreset preset);

/// u * (Lambda^{r} - shift(r)) + [2]_q with u given by the preset.
AlgebraElement lambda_tilde(IndexRange couples, int n, TildePreset preset);

}  // namespace qhowe
