#pragma once

#include "comin/incidence.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace comin {

/// Kunneth coefficients of the i-fold chain locus C^i inside X^{i+1}:
/// sparse map over (i+1)-tuples of Schubert classes.
struct ChainTensor {
    std::string space_name;
    int level = 0;
    std::map<std::vector<Ideal>, Int> coeff;
};

inline int chain_dim(const Space& sp, int level) {
    return level * (sp.desc.vmrt.dim_v + 1) + sp.dim();
}

inline void check_chain_dims(const Space& sp, const ChainTensor& t) {
    int want = chain_dim(sp, t.level);
    for (const auto& [tup, v] : t.coeff) {
        int got = 0;
        for (Ideal s : tup) got += sp.dim_class(s);
        ensure(got == want, "chain tensor tuple dimension");
        ensure(v > 0, "chain tensor coefficients are positive");
    }
}

inline ChainTensor chain_level1(const Space& sp, const IncidenceMatrix& a) {
    ChainTensor t;
    t.space_name = sp.desc.name;
    t.level = 1;
    for (const auto& [key, v] : a.entries) t.coeff[{key.first, key.second}] = v;
    check_chain_dims(sp, t);
    return t;
}

/// Append one more line factor: contract the last slot of t against the
/// incidence matrix through the Littlewood-Richardson coefficients.
inline ChainTensor extend_chain(const Space& sp, const ChainTensor& t, const IncidenceMatrix& a) {
    if (t.space_name != sp.desc.name || a.space_name != sp.desc.name)
        throw std::invalid_argument("chain tensor and incidence matrix belong to " +
                                    t.space_name + "/" + a.space_name + ", not " + sp.desc.name);
    ChainTensor out;
    out.space_name = t.space_name;
    out.level = t.level + 1;
    for (const auto& [tup, tv] : t.coeff) {
        Ideal tau = tup.back();
        for (const auto& [key, av] : a.entries) {
            Ideal sigma = key.first, rho_new = key.second;
            Int f = tv * av;
            for (const auto& [rho_mid, mu] : sp.lr_pair(tau, sigma)) {
                std::vector<Ideal> nt(tup.begin(), tup.end() - 1);
                nt.push_back(rho_mid);
                nt.push_back(rho_new);
                auto [it, fresh] = out.coeff.emplace(std::move(nt), 0);
                it->second += f * mu;
            }
        }
    }
    for (auto it = out.coeff.begin(); it != out.coeff.end();)
        it = it->second == 0 ? out.coeff.erase(it) : std::next(it);
    check_chain_dims(sp, out);
    return out;
}

inline int chain_excess(const Space& sp, int level) {
    return level * (sp.desc.vmrt.dim_v + 1) - sp.dim();
}

inline void check_chain_level(const Space& sp, int level) {
    if (level < 1) throw std::invalid_argument("chain level must be >= 1");
    int d = chain_excess(sp, level);
    if (d < 0)
        throw std::invalid_argument(
            "d_" + std::to_string(level) + " = " + std::to_string(level) + "*(dim V + 1) - dim X = " +
            std::to_string(level) + "*" + std::to_string(sp.desc.vmrt.dim_v + 1) + " - " +
            std::to_string(sp.dim()) + " = " + std::to_string(d) +
            " < 0: chains of this length cannot dominate X x X");
}

/// Reference evaluation of delta_X(i) by materializing the full tensor.
inline Int delta_naive(const Space& sp, const IncidenceMatrix& a, int level) {
    check_chain_level(sp, level);
    unsigned d = static_cast<unsigned>(chain_excess(sp, level));
    ChainTensor t = chain_level1(sp, a);
    for (int k = 1; k < level; ++k) t = extend_chain(sp, t, a);
    Int total = 0;
    for (const auto& [tup, v] : t.coeff) {
        if (tup.front() != sp.xi || tup.back() != sp.xi) continue;
        std::vector<unsigned> dims;
        Int degs = 1;
        for (size_t j = 1; j + 1 < tup.size(); ++j) {
            dims.push_back(static_cast<unsigned>(sp.dim_class(tup[j])));
            degs *= sp.degree(tup[j]);
        }
        total += multinomial(d, dims) * v * degs;
    }
    return total;
}

struct TransferCostModel {
    int basis_size = 0;
    int d = 0;       // truncation degree
    int steps = 0;   // transfer contractions
    unsigned long long structure_terms = 0;  // nonzero (tau, sigma, rho) triples
    unsigned long long coefficient_ops = 0;  // structure_terms * steps * (d+1)
};

struct DeltaRun {
    Int value;
    int d = 0;
    int basis_size = 0;
    int level = 0;
    double seconds = 0;
    TransferCostModel cost;
};

namespace detail {

struct TransferStructure {
    // For each sigma appearing in the incidence support: contributions
    // (tau, shift = dim rho, scale = mu * deg rho).
    struct Term {
        int tau;
        unsigned shift;
        Int scale;
    };
    std::vector<int> sigmas;
    std::vector<std::vector<Term>> terms_by_sigma;  // parallel to sigmas
    std::vector<std::vector<std::pair<int, Int>>> a_by_sigma;  // (tau', a) pairs
    unsigned long long total_terms = 0;
};

inline TransferStructure build_transfer_structure(const Space& sp, const IncidenceMatrix& a) {
    TransferStructure st;
    std::map<int, std::vector<std::pair<int, Int>>> a_cols;
    for (const auto& [key, v] : a.entries)
        a_cols[sp.basis_index(key.first)].push_back({sp.basis_index(key.second), v});
    for (auto& [sigma, col] : a_cols) {
        st.sigmas.push_back(sigma);
        st.a_by_sigma.push_back(col);
        std::vector<TransferStructure::Term> terms;
        for (size_t ti = 0; ti < sp.basis.size(); ++ti) {
            for (const auto& [rho, mu] : sp.lr_pair(sp.basis[ti], sp.basis[sigma])) {
                TransferStructure::Term t;
                t.tau = static_cast<int>(ti);
                t.shift = static_cast<unsigned>(sp.dim_class(rho));
                t.scale = mu * sp.degree(rho);
                terms.push_back(std::move(t));
            }
        }
        st.total_terms += terms.size();
        st.terms_by_sigma.push_back(std::move(terms));
    }
    return st;
}

inline void parallel_over(int jobs, int threads, const std::function<void(int, int)>& body) {
    if (threads <= 1 || jobs <= 1) {
        for (int j = 0; j < jobs; ++j) body(j, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int k = std::min(threads, jobs);
    for (int t = 0; t < k; ++t)
        pool.emplace_back([&, t] {
            for (int j = next.fetch_add(1); j < jobs; j = next.fetch_add(1)) body(j, t);
        });
    for (auto& th : pool) th.join();
}

}  // namespace detail

inline TransferCostModel transfer_cost_model(const Space& sp, const IncidenceMatrix& a,
                                             int level) {
    auto st = detail::build_transfer_structure(sp, a);
    TransferCostModel m;
    m.basis_size = static_cast<int>(sp.basis.size());
    m.d = chain_excess(sp, level);
    m.steps = level - 1;
    m.structure_terms = st.total_terms;
    m.coefficient_ops = st.total_terms * static_cast<unsigned long long>(m.steps) *
                        (static_cast<unsigned long long>(m.d) + 1);
    return m;
}

/// delta_X(i) via the generating-function transfer method: a basis-indexed
/// vector of divided-power polynomials, contracted level-1 times against the
/// Littlewood-Richardson structure and the incidence matrix, truncated at the
/// excess dimension. Row products are independent, so the result does not
/// depend on the thread count.
inline DeltaRun delta_transfer(const Space& sp, const IncidenceMatrix& a, int level,
                               int threads = 1, std::optional<unsigned> truncate = std::nullopt) {
    check_chain_level(sp, level);
    auto start = std::chrono::steady_clock::now();
    unsigned d = static_cast<unsigned>(chain_excess(sp, level));
    unsigned cap = truncate.value_or(d);
    ensure(cap >= d, "truncation cap below the target degree");
    auto st = detail::build_transfer_structure(sp, a);

    int nb = static_cast<int>(sp.basis.size());
    int xi = sp.basis_index(sp.xi);
    std::vector<EgfPoly> v(nb);
    for (size_t si = 0; si < st.sigmas.size(); ++si)
        if (st.sigmas[si] == xi)
            for (const auto& [tp, av] : st.a_by_sigma[si]) {
                v[tp].c.assign(1, Int(0));
                v[tp].c[0] = av;
            }

    std::vector<BinomialTable> binoms(std::max(1, threads));
    for (int step = 1; step < level; ++step) {
        std::vector<EgfPoly> w(st.sigmas.size());
        detail::parallel_over(static_cast<int>(st.sigmas.size()), threads, [&](int si, int tid) {
            BinomialTable& bt = binoms[tid];
            for (const auto& t : st.terms_by_sigma[si])
                if (!v[t.tau].c.empty())
                    w[si].add_scaled_shift(v[t.tau], t.shift, t.scale, cap, bt);
        });
        std::vector<EgfPoly> nv(nb);
        for (size_t si = 0; si < st.sigmas.size(); ++si)
            for (const auto& [tp, av] : st.a_by_sigma[si])
                nv[tp].add_scaled_shift(w[si], 0, av, cap, binoms[0]);
        v = std::move(nv);
    }

    DeltaRun run;
    run.value = v[xi].coeff(d);
    run.d = static_cast<int>(d);
    run.basis_size = nb;
    run.level = level;
    run.cost.basis_size = nb;
    run.cost.d = static_cast<int>(d);
    run.cost.steps = level - 1;
    run.cost.structure_terms = st.total_terms;
    run.cost.coefficient_ops =
        st.total_terms * static_cast<unsigned long long>(level - 1) * (d + 1ull);
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

}  // namespace comin
