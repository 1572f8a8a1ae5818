#pragma once

#include "comin/chow.hpp"

#include <map>
#include <utility>
#include <vector>

namespace comin {

/// Kunneth coefficients of the class of point pairs joined by a line:
/// [C] = sum a^{st} [X_s] (x) [X_t], a symmetric matrix with nonnegative
/// entries supported where dim s + dim t = dim X + dim V + 1.
struct IncidenceMatrix {
    std::string space_name;
    int dim_support = 0;  // dim X + dim V + 1
    std::map<std::pair<Ideal, Ideal>, Int> entries;

    Int at(Ideal s, Ideal t) const {
        auto it = entries.find({s, t});
        return it == entries.end() ? Int(0) : it->second;
    }
};

/// Degree-one part of hyperplane quantum multiplication, computed from the
/// root-theoretic divisor formula with coset-minimal representatives.
class QuantumChevalley {
  public:
    explicit QuantumChevalley(const Space& sp) : sp_(&sp), W_(sp.rs) {
        int node = sp.desc.marked_node;
        for (int j = 0; j < sp.rs.rank; ++j)
            if (j != node) p_nodes_.push_back(j);
        for (int p = 0; p < sp.rs.num_positive(); ++p) {
            const Root& b = sp.rs.positive_roots[p];
            if (b.rc[node] == 0) continue;
            if (sp.rs.coroot_coordinate(b, node) != 1) continue;  // degree-one curves only
            int n_beta = 0;
            for (const Root& g : sp.rs.positive_roots)
                if (g.rc[node] != 0) n_beta += sp.rs.pair_coroot(g.rc, b);
            ensure(n_beta == sp.desc.index, "degree-one anticanonical pairing equals the index");
            degree_one_roots_.push_back(p);
        }
    }

    /// q-linear term of H * [X_s], expressed in the Schubert basis. Lands in
    /// dimension dim s + dim V + 1.
    ChowElement q_part(Ideal s) const {
        ChowElement out;
        out.space = sp_;
        WeylGroup::Elt u = W_.min_coset_rep(
            WeylGroup::compose(W_.w0(), weyl_of_ideal(W_, sp_->poset.root_of, s)), p_nodes_);
        int lu = W_.length(u);
        for (int p : degree_one_roots_) {
            WeylGroup::Elt v = W_.min_coset_rep(WeylGroup::compose(u, W_.reflection(p)), p_nodes_);
            if (W_.length(v) != lu + 1 - sp_->desc.index) continue;
            WeylGroup::Elt back = W_.min_coset_rep(WeylGroup::compose(W_.w0(), v), p_nodes_);
            out.add(ideal_of_weyl(W_, sp_->poset.root_of, back), 1);
        }
        return out;
    }

  private:
    const Space* sp_;
    WeylGroup W_;
    std::vector<int> p_nodes_;
    std::vector<int> degree_one_roots_;
};

inline IncidenceMatrix incidence_matrix(const Space& sp) {
    QuantumChevalley qc(sp);
    IncidenceMatrix m;
    m.space_name = sp.desc.name;
    m.dim_support = sp.dim() + sp.desc.vmrt.dim_v + 1;
    for (Ideal s : sp.basis) {
        ChowElement row = qc.q_part(sp.dual(s));
        for (const auto& [t, v] : row.c) {
            ensure(v >= 0, "incidence entries are nonnegative");
            ensure(sp.dim_class(s) + sp.dim_class(t) == m.dim_support,
                   "incidence support dimension");
            m.entries[{s, t}] = v;
        }
    }
    // symmetry and the fundamental-class row structure
    for (const auto& [key, v] : m.entries) ensure(m.at(key.second, key.first) == v, "a^{st} = a^{ts}");
    int xi_nonzero = 0;
    for (Ideal t : sp.basis)
        if (m.at(sp.xi, t) != 0) {
            ++xi_nonzero;
            ensure(m.at(sp.xi, t) == 1, "fundamental-class row entry is 1");
        }
    ensure(xi_nonzero == 1, "fundamental-class row has a single entry");
    return m;
}

/// The class of the cone of lines through a point: the unique Schubert class
/// paired with the fundamental class in the incidence matrix. For projective
/// space this is the fundamental class itself.
inline Ideal cone_class(const Space& sp, const IncidenceMatrix& m) {
    for (Ideal t : sp.basis)
        if (m.at(sp.xi, t) != 0) {
            ensure(sp.dim_class(t) == sp.desc.vmrt.dim_v + 1 ||
                       (sp.desc.is_projective_space && t == sp.xi),
                   "cone class dimension is dim V + 1");
            return t;
        }
    throw std::logic_error("incidence matrix has an empty fundamental-class row");
}

inline Ideal cone_class(const Space& sp) { return cone_class(sp, incidence_matrix(sp)); }

}  // namespace comin
