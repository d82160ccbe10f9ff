#include "qhowe/oscalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhowe {

// OpenMP term-pair kernel. Each thread accumulates into a private element;
// the merge is a plain sum, and QScalar addition is exact and commutative, so
// the result is independent of the partition.
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
#ifndef _OPENMP
    return mul_serial(x, y);
#else
    if (x.term_count() * y.term_count() < 256) return mul_serial(x, y);

    std::vector<const std::pair<const Monomial, QScalar>*> xs;
    xs.reserve(x.term_count());
    for (const auto& t : x.terms()) xs.push_back(&t);

    int nthreads = omp_get_max_threads();
    std::vector<AlgebraElement> locals(static_cast<std::size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
    {
        AlgebraElement& acc = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
        for (long i = 0; i < static_cast<long>(xs.size()); ++i) {
            for (const auto& [m2, c2] : y.terms())
                detail::term_product(xs[static_cast<std::size_t>(i)]->first,
                                     xs[static_cast<std::size_t>(i)]->second, m2, c2, acc);
        }
    }

    AlgebraElement r;
    for (auto& loc : locals)
        for (const auto& [m, c] : loc.terms()) r.add_term(m, c);
    return r;
#endif
}

}  // namespace qhowe
