#include "qhowe/focknum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhowe {

double FockVector::norm() const {
    double s = 0;
    for (const auto& [k, a] : amp) s += a * a;
    return std::sqrt(s);
}

std::uint64_t fock_encode(const std::vector<int>& ns) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < ns.size(); ++i)
        key |= static_cast<std::uint64_t>(ns[i] & 0xff) << (8 * i);
    return key;
}

std::vector<int> fock_decode(std::uint64_t key, int n_sites) {
    std::vector<int> ns(static_cast<std::size_t>(n_sites));
    for (int i = 0; i < n_sites; ++i)
        ns[static_cast<std::size_t>(i)] = static_cast<int>((key >> (8 * i)) & 0xff);
    return ns;
}

int MarginInfo::max_reach() const {
    int m = 0;
    for (const auto& [site, r] : reach) m = std::max(m, r);
    return m;
}

MarginInfo MarginInfo::of(const AlgebraElement& e) {
    MarginInfo mi;
    for (const auto& [site, d] : support_degree(e)) mi.reach[site] = d.max_a;
    return mi;
}

MarginInfo MarginInfo::operator+(const MarginInfo& other) const {
    MarginInfo mi = *this;
    for (const auto& [site, r] : other.reach) mi.reach[site] += r;
    return mi;
}

namespace {

// sqrt((1-q^n)/(1-q)) with q = t^4; positive for all q > 0, q != 1.
inline double ladder(double t, int n) {
    double q = t * t * t * t;
    return std::sqrt((1.0 - std::pow(q, n)) / (1.0 - q));
}

}  // namespace

CompiledElement::CompiledElement(const AlgebraElement& e, double t) : t_(t) {
    for (const auto& [m, c] : e.sorted_terms()) {
        Term term;
        term.coeff = c.eval(t);
        for (const auto& [site, sm] : m.factors)
            term.factors.push_back({site, sm.a, sm.s, sm.b});
        terms_.push_back(std::move(term));
    }
}

FockVector CompiledElement::apply(const FockVector& v) const {
    FockVector out;
    out.n_sites = v.n_sites;
    for (const auto& [key, amp0] : v.amp) {
        for (const auto& term : terms_) {
            double amp = amp0 * term.coeff;
            std::uint64_t key2 = key;
            bool dead = false;
            for (const auto& f : term.factors) {
                int n = static_cast<int>((key2 >> (8 * (f.site - 1))) & 0xff);
                if (n < f.b) {
                    dead = true;
                    break;
                }
                for (int j = 0; j < f.b; ++j) amp *= ladder(t_, n - j);
                int m = n - f.b;
                if (f.s != 0) amp *= std::pow(t_, f.s * m);
                for (int j = 0; j < f.a; ++j) amp *= ladder(t_, m + j + 1);
                int nn = m + f.a;
                if (nn > 250) throw std::runtime_error("CompiledElement::apply: index overflow");
                key2 = (key2 & ~(0xffull << (8 * (f.site - 1)))) |
                       (static_cast<std::uint64_t>(nn) << (8 * (f.site - 1)));
            }
            if (dead || amp == 0.0) continue;
            out.amp[key2] += amp;
        }
    }
    return out;
}

FockVector apply_gen(const FockVector& v, const GenFactor& g, double t) {
    FockVector out;
    out.n_sites = v.n_sites;
    for (const auto& [key, amp0] : v.amp) {
        int n = static_cast<int>((key >> (8 * (g.site - 1))) & 0xff);
        double amp = amp0;
        int nn = n;
        switch (g.kind) {
            case GenFactor::APlus:
                amp *= ladder(t, n + 1);
                nn = n + 1;
                break;
            case GenFactor::AMinus:
                if (n == 0) continue;
                amp *= ladder(t, n);
                nn = n - 1;
                break;
            case GenFactor::Weight:
                amp *= std::pow(t, g.k * n);
                break;
        }
        std::uint64_t key2 = (key & ~(0xffull << (8 * (g.site - 1)))) |
                             (static_cast<std::uint64_t>(nn) << (8 * (g.site - 1)));
        out.amp[key2] += amp;
    }
    return out;
}

FockVector apply(const AlgebraElement& e, const FockVector& v, double t) {
    return CompiledElement(e, t).apply(v);
}

FockVector basis_state(const std::vector<int>& ns) {
    FockVector v;
    v.n_sites = static_cast<int>(ns.size());
    v.amp[fock_encode(ns)] = 1.0;
    return v;
}

namespace {

// Enumerate interior states n_i <= bound_i and report max ||e|state>||.
template <typename Body>
void for_each_state(const std::vector<int>& bounds, Body&& body) {
    std::vector<int> ns(bounds.size(), 0);
    for (;;) {
        body(ns);
        std::size_t i = 0;
        while (i < ns.size()) {
            if (++ns[i] <= bounds[i]) break;
            ns[i] = 0;
            ++i;
        }
        if (i == ns.size()) break;
    }
}

std::vector<int> interior_bounds(const AlgebraElement& e, int n_sites, int cutoff) {
    MarginInfo mi = MarginInfo::of(e);
    int need = mi.max_reach() + 2;
    if (cutoff < need)
        throw MarginError("residual: cutoff too small, need D >= " + std::to_string(need));
    std::vector<int> bounds(static_cast<std::size_t>(n_sites));
    for (int i = 1; i <= n_sites; ++i) {
        int r = mi.reach.count(i) ? mi.reach.at(i) : 0;
        bounds[static_cast<std::size_t>(i - 1)] = cutoff - 1 - r;
    }
    return bounds;
}

}  // namespace

double residual_serial(const AlgebraElement& e, int n_sites, int cutoff, double t) {
    std::vector<int> bounds = interior_bounds(e, n_sites, cutoff);
    CompiledElement ce(e, t);
    double worst = 0;
    for_each_state(bounds, [&](const std::vector<int>& ns) {
        worst = std::max(worst, ce.apply(basis_state(ns)).norm());
    });
    return worst;
}

double residual(const AlgebraElement& e, int n_sites, int cutoff, double t) {
    std::vector<int> bounds = interior_bounds(e, n_sites, cutoff);
    CompiledElement ce(e, t);
    std::vector<std::vector<int>> states;
    for_each_state(bounds, [&](const std::vector<int>& ns) { states.push_back(ns); });
    double worst = 0;
#pragma omp parallel for reduction(max : worst) schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(states.size()); ++i)
        worst = std::max(worst,
                         ce.apply(basis_state(states[static_cast<std::size_t>(i)])).norm());
    return worst;
}

std::vector<double> spectrum(const AlgebraElement& e, int n_sites, int cutoff, double t) {
    for (const auto& [m, c] : e.terms()) {
        int net = 0;
        for (const auto& [site, sm] : m.factors) net += sm.a - sm.b;
        if (net != 0)
            throw std::invalid_argument("spectrum: element has a term with nonzero net shift");
    }
    std::vector<int> bounds(static_cast<std::size_t>(n_sites), cutoff - 1);
    std::vector<std::uint64_t> keys;
    std::unordered_map<std::uint64_t, int> index;
    for_each_state(bounds, [&](const std::vector<int>& ns) {
        std::uint64_t k = fock_encode(ns);
        index[k] = static_cast<int>(keys.size());
        keys.push_back(k);
    });
    int dim = static_cast<int>(keys.size());
    CompiledElement ce(e, t);
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
        FockVector v;
        v.n_sites = n_sites;
        v.amp[keys[static_cast<std::size_t>(col)]] = 1.0;
        FockVector w = ce.apply(v);
        for (const auto& [k, a] : w.amp) {
            auto it = index.find(k);
            if (it != index.end()) mat(it->second, col) = a;  // project to the box
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(mat, /*computeEigenvectors=*/false);
    std::vector<double> eig(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) eig[static_cast<std::size_t>(i)] = es.eigenvalues()[i].real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace qhowe
