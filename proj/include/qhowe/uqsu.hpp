#pragma once

#include "qhowe/oscalg.hpp"

namespace qhowe {

/// One realized copy of U_q(su(1,1)). J_0 = sum over `sites` of (A_i^0+1/2)/2
/// is not itself an algebra element; its group-like exponentials are, and
/// weight_power(c) returns q^{c J_0}.
struct SuTriple {
    std::vector<int> sites;
    AlgebraElement jp;
    AlgebraElement jm;

    /// q^{c J_0} = t^{c |sites|} * prod_i w_i^{2c}
    AlgebraElement weight_power(int c) const;
};

SuTriple metaplectic_site(int site);

/// Iterated coproduct over a consecutive site range. Throws on empty range.
SuTriple coproduct_range(IndexRange sites);

/// The i-th pairwise-coupled copy, acting on sites 2i-1, 2i.
SuTriple paired_triple(int couple);

/// Nested coproduct over a consecutive couple range, built couple by couple
/// via Delta (for the coassociativity cross-check against coproduct_range).
SuTriple couple_coproduct(IndexRange couples);

/// C = J_+ J_- q^{-2J_0+1} + (J_0)_{q^2}(1-J_0)_{q^2}, with the q-parentheses
/// expanded through the group-like weight: (1-q^{2J_0})(1-q^2 q^{-2J_0})/(1-q^2)^2.
AlgebraElement casimir(const SuTriple& t);

/// C^{i..j} over a consecutive couple range: casimir(coproduct_range([2i-1;2j])).
AlgebraElement intermediate_casimir(IndexRange couples);

/// Standard-presentation generators: (J_0, J_+ q^{-J_0}, q^{-J_0} J_-).
SuTriple tilde_triple(const SuTriple& t);

}  // namespace qhowe
