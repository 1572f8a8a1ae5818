#pragma once

#include "comin/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace comin {

enum class TypeLabel { A, B, C, D, E6, E7 };

inline std::string to_string(TypeLabel t) {
    switch (t) {
        case TypeLabel::A: return "A";
        case TypeLabel::B: return "B";
        case TypeLabel::C: return "C";
        case TypeLabel::D: return "D";
        case TypeLabel::E6: return "E6";
        case TypeLabel::E7: return "E7";
    }
    return "?";
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("internal invariant violated: " + msg);
}

struct Root {
    std::vector<int> rc;           // coordinates in the simple-root basis
    std::vector<long long> amb;    // ambient lattice coordinates
    int height = 0;
    long long norm2x = 0;          // 2*(beta,beta) in the type normalization
};

/// Exact root-system data for the simple types A..D, E6, E7, with Bourbaki
/// numbering of simple roots. All arithmetic is over integers/rationals.
class RootSystem {
  public:
    TypeLabel type;
    int rank;
    std::vector<std::vector<long long>> simple_roots;  // ambient (E-types: doubled coords)
    std::vector<std::vector<int>> cartan;              // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<Root> positive_roots;                  // sorted by (height, coords)
    std::vector<std::vector<Rat>> fundamental_weights; // ambient, rational

    static RootSystem build(TypeLabel type, int rank) {
        check_admissible(type, rank);
        RootSystem rs;
        rs.type = type;
        rs.rank = rank;
        rs.build_cartan();
        rs.build_ambient();
        rs.build_form();
        rs.generate_positive_roots();
        rs.build_weights();
        rs.validate();
        return rs;
    }

    static void check_admissible(TypeLabel type, int rank) {
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("unsupported root system " + to_string(type) + "_" +
                                        std::to_string(rank) + ": " + why);
        };
        switch (type) {
            case TypeLabel::A:
                if (rank < 1) fail("type A needs rank >= 1");
                break;
            case TypeLabel::B:
                if (rank < 2) fail("type B needs rank >= 2 (B_1 = A_1)");
                break;
            case TypeLabel::C:
                if (rank < 2) fail("type C needs rank >= 2 (C_1 = A_1)");
                break;
            case TypeLabel::D:
                if (rank < 3) fail("D_2 is not simple and D_3 = A_3; rank >= 3 accepted");
                break;
            case TypeLabel::E6:
                if (rank != 6) fail("type E6 has rank 6");
                break;
            case TypeLabel::E7:
                if (rank != 7) fail("type E7 has rank 7");
                break;
        }
    }

    int num_positive() const { return static_cast<int>(positive_roots.size()); }

    /// <beta, alpha_i^vee> for beta given in simple-root coordinates.
    int pair_simple_coroot(const std::vector<int>& rc, int i) const {
        int s = 0;
        for (int j = 0; j < rank; ++j) s += rc[j] * cartan[i][j];
        return s;
    }

    /// <gamma, beta^vee> = 2(gamma,beta)/(beta,beta), exact.
    int pair_coroot(const std::vector<int>& gamma_rc, const Root& beta) const {
        long long num = 0;
        for (int i = 0; i < rank; ++i) {
            if (gamma_rc[i] == 0) continue;
            long long row = 0;
            for (int j = 0; j < rank; ++j) row += static_cast<long long>(form2_[i][j]) * beta.rc[j];
            num += gamma_rc[i] * row;
        }
        num *= 2;
        ensure(num % beta.norm2x == 0, "coroot pairing not integral");
        return static_cast<int>(num / beta.norm2x);
    }

    /// Coefficient of alpha_i^vee when beta^vee is written in simple coroots.
    int coroot_coordinate(const Root& beta, int i) const {
        long long num = static_cast<long long>(beta.rc[i]) * form2_[i][i];
        ensure(num % beta.norm2x == 0, "coroot coordinate not integral");
        return static_cast<int>(num / beta.norm2x);
    }

    /// Cartan pairing of an ambient rational weight with a simple coroot.
    Rat pairing(const std::vector<Rat>& w, int coroot_index) const {
        const auto& a = simple_roots[coroot_index];
        Rat dot = 0, norm = 0;
        for (size_t k = 0; k < a.size(); ++k) {
            dot += w[k] * a[k];
            norm += Rat(a[k]) * a[k];
        }
        return 2 * dot / norm;
    }

    const Root& highest_root() const { return positive_roots.back(); }

    /// Nodes whose coefficient in the highest root equals 1.
    std::vector<int> cominuscule_nodes() const {
        std::vector<int> out;
        const Root& th = highest_root();
        for (int i = 0; i < rank; ++i)
            if (th.rc[i] == 1) out.push_back(i);
        return out;
    }

    bool is_cominuscule_node(int i) const { return highest_root().rc[i] == 1; }

    /// dim G/P_i = #{beta > 0 : coefficient of alpha_i in beta is nonzero}.
    int dim_of(int node) const {
        int d = 0;
        for (const Root& b : positive_roots)
            if (b.rc[node] != 0) ++d;
        return d;
    }

    /// dim G/P_S for a set of marked simple roots.
    int dim_of_parabolic(const std::vector<int>& nodes) const {
        int d = 0;
        for (const Root& b : positive_roots)
            for (int i : nodes)
                if (b.rc[i] != 0) {
                    ++d;
                    break;
                }
        return d;
    }

    /// Fano index: sum over beta outside the parabolic of <beta, alpha^vee>.
    int index_of(int node) const {
        if (!is_cominuscule_node(node))
            throw std::invalid_argument("node alpha_" + std::to_string(node + 1) + " of " +
                                        to_string(type) + "_" + std::to_string(rank) +
                                        " is not cominuscule (highest-root coefficient != 1)");
        int s = 0;
        for (const Root& b : positive_roots)
            if (b.rc[node] != 0) s += pair_simple_coroot(b.rc, node);
        return s;
    }

    std::vector<int> dynkin_neighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < rank; ++j)
            if (j != i && cartan[i][j] != 0) out.push_back(j);
        return out;
    }

    int root_index(const std::vector<int>& rc) const {
        auto it = index_.find(rc);
        ensure(it != index_.end(), "unknown root");
        return it->second;
    }

    std::optional<int> try_root_index(const std::vector<int>& rc) const {
        auto it = index_.find(rc);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    long long form2(int i, int j) const { return form2_[i][j]; }

  private:
    std::vector<std::vector<int>> form2_;  // 2*(alpha_i, alpha_j)
    std::map<std::vector<int>, int> index_;

    void build_cartan() {
        cartan.assign(rank, std::vector<int>(rank, 0));
        for (int i = 0; i < rank; ++i) cartan[i][i] = 2;
        auto edge = [&](int i, int j) { cartan[i][j] = cartan[j][i] = -1; };
        switch (type) {
            case TypeLabel::A:
                for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
                break;
            case TypeLabel::B:
                for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
                cartan[rank - 2][rank - 1] = -1;
                cartan[rank - 1][rank - 2] = -2;
                break;
            case TypeLabel::C:
                for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
                cartan[rank - 2][rank - 1] = -2;
                cartan[rank - 1][rank - 2] = -1;
                break;
            case TypeLabel::D:
                for (int i = 0; i + 3 < rank; ++i) edge(i, i + 1);
                edge(rank - 3, rank - 2);
                edge(rank - 3, rank - 1);
                break;
            case TypeLabel::E6:
            case TypeLabel::E7:
                edge(0, 2);
                edge(2, 3);
                edge(3, 4);
                edge(4, 5);
                edge(1, 3);
                if (type == TypeLabel::E7) edge(5, 6);
                break;
        }
    }

    void build_ambient() {
        auto unit = [&](int dim, int k, long long v) {
            std::vector<long long> e(dim, 0);
            e[k] = v;
            return e;
        };
        simple_roots.clear();
        switch (type) {
            case TypeLabel::A: {
                int d = rank + 1;
                for (int i = 0; i < rank; ++i) {
                    auto v = unit(d, i, 1);
                    v[i + 1] = -1;
                    simple_roots.push_back(v);
                }
                break;
            }
            case TypeLabel::B:
            case TypeLabel::C:
            case TypeLabel::D: {
                int d = rank;
                for (int i = 0; i + 1 < rank; ++i) {
                    auto v = unit(d, i, 1);
                    v[i + 1] = -1;
                    simple_roots.push_back(v);
                }
                if (type == TypeLabel::B) {
                    simple_roots.push_back(unit(d, rank - 1, 1));
                } else if (type == TypeLabel::C) {
                    simple_roots.push_back(unit(d, rank - 1, 2));
                } else {
                    auto v = unit(d, rank - 2, 1);
                    v[rank - 1] = 1;
                    simple_roots.push_back(v);
                }
                break;
            }
            case TypeLabel::E6:
            case TypeLabel::E7: {
                // Bourbaki coordinates in R^8, scaled by 2 to stay integral.
                simple_roots = {
                    {1, -1, -1, -1, -1, -1, -1, 1},  // alpha_1
                    {2, 2, 0, 0, 0, 0, 0, 0},        // alpha_2
                    {-2, 2, 0, 0, 0, 0, 0, 0},       // alpha_3
                    {0, -2, 2, 0, 0, 0, 0, 0},       // alpha_4
                    {0, 0, -2, 2, 0, 0, 0, 0},       // alpha_5
                    {0, 0, 0, -2, 2, 0, 0, 0},       // alpha_6
                    {0, 0, 0, 0, -2, 2, 0, 0},       // alpha_7
                };
                simple_roots.resize(rank);
                break;
            }
        }
    }

    void build_form() {
        // t_j = (alpha_j, alpha_j) with long roots normalized to 2
        std::vector<int> t(rank, 2);
        if (type == TypeLabel::B) t[rank - 1] = 1;
        if (type == TypeLabel::C) t[rank - 1] = 4;
        form2_.assign(rank, std::vector<int>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) form2_[i][j] = t[j] * cartan[j][i];
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) ensure(form2_[i][j] == form2_[j][i], "form symmetry");
    }

    void make_root(const std::vector<int>& rc, Root& out) const {
        out.rc = rc;
        out.height = 0;
        for (int v : rc) out.height += v;
        out.amb.assign(simple_roots[0].size(), 0);
        for (int j = 0; j < rank; ++j)
            for (size_t k = 0; k < out.amb.size(); ++k) out.amb[k] += rc[j] * simple_roots[j][k];
        long long n = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                n += static_cast<long long>(rc[i]) * form2_[i][j] * rc[j];
        out.norm2x = n;
    }

    void generate_positive_roots() {
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> queue;
        for (int i = 0; i < rank; ++i) {
            std::vector<int> e(rank, 0);
            e[i] = 1;
            seen.insert(e);
            queue.push_back(e);
        }
        while (!queue.empty()) {
            auto rc = queue.back();
            queue.pop_back();
            for (int i = 0; i < rank; ++i) {
                int p = pair_simple_coroot(rc, i);
                if (p == 0) continue;
                auto im = rc;
                im[i] -= p;
                bool pos = false, neg = false;
                for (int v : im) {
                    if (v > 0) pos = true;
                    if (v < 0) neg = true;
                }
                if (neg || !pos) continue;
                if (seen.insert(im).second) queue.push_back(im);
            }
        }
        positive_roots.clear();
        for (const auto& rc : seen) {
            Root r;
            make_root(rc, r);
            positive_roots.push_back(std::move(r));
        }
        std::sort(positive_roots.begin(), positive_roots.end(), [](const Root& a, const Root& b) {
            if (a.height != b.height) return a.height < b.height;
            return a.rc < b.rc;
        });
        for (int i = 0; i < num_positive(); ++i) index_[positive_roots[i].rc] = i;
    }

    void build_weights() {
        // Solve cartan * c = e_i exactly; omega_i = sum_j c_j alpha_j in ambient coords.
        int n = rank;
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = cartan[i][j];
            m[i][n + i] = 1;
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            ensure(piv >= 0, "cartan matrix singular");
            std::swap(m[col], m[piv]);
            Rat inv = Rat(1) / m[col][col];
            for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
            }
        }
        fundamental_weights.assign(n, std::vector<Rat>(simple_roots[0].size(), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat c = m[j][n + i];  // coefficient of alpha_j in omega_i
                for (size_t k = 0; k < simple_roots[0].size(); ++k)
                    fundamental_weights[i][k] += c * simple_roots[j][k];
            }
    }

    void validate() const {
        size_t expect = 0;
        switch (type) {
            case TypeLabel::A: expect = static_cast<size_t>(rank) * (rank + 1) / 2; break;
            case TypeLabel::B:
            case TypeLabel::C: expect = static_cast<size_t>(rank) * rank; break;
            case TypeLabel::D: expect = static_cast<size_t>(rank) * (rank - 1); break;
            case TypeLabel::E6: expect = 36; break;
            case TypeLabel::E7: expect = 63; break;
        }
        ensure(positive_roots.size() == expect, "positive root count");
        for (int i = 0; i < rank; ++i) {
            for (int j = 0; j < rank; ++j) {
                Rat p = pairing(fundamental_weights[i], j);
                ensure(p == (i == j ? 1 : 0), "fundamental weight pairing");
            }
        }
    }
};

/// Weyl group elements as permutations of the root set. Index convention:
/// positive root p is p, its negative is p + m where m = |Phi^+|.
class WeylGroup {
  public:
    using Elt = std::vector<int32_t>;

    explicit WeylGroup(const RootSystem& rs) : rs_(&rs), m_(rs.num_positive()) {
        simple_.resize(rs.rank);
        for (int i = 0; i < rs.rank; ++i) {
            std::vector<int> e(rs.rank, 0);
            e[i] = 1;
            simple_[i] = reflection_by_coords(e, rs.positive_roots[rs.root_index(e)]);
        }
        w0_ = longest_element();
    }

    const RootSystem& roots() const { return *rs_; }
    int num_positive() const { return m_; }

    Elt identity() const {
        Elt e(2 * m_);
        for (int i = 0; i < 2 * m_; ++i) e[i] = i;
        return e;
    }

    const Elt& simple_reflection(int i) const { return simple_[i]; }
    const Elt& w0() const { return w0_; }

    /// Reflection in the positive root with index p.
    Elt reflection(int p) const {
        return reflection_by_coords(rs_->positive_roots[p].rc, rs_->positive_roots[p]);
    }

    static int apply(const Elt& w, int root) { return w[root]; }

    /// w followed by v, i.e. (v*w)(x) = v(w(x)).
    static Elt compose(const Elt& v, const Elt& w) {
        Elt r(w.size());
        for (size_t i = 0; i < w.size(); ++i) r[i] = v[w[i]];
        return r;
    }

    int neg(int root) const { return root < m_ ? root + m_ : root - m_; }
    bool is_negative(int root) const { return root >= m_; }

    int length(const Elt& w) const {
        int L = 0;
        for (int p = 0; p < m_; ++p)
            if (is_negative(w[p])) ++L;
        return L;
    }

    /// Right-inversion set {beta > 0 : w(beta) < 0} as positive-root indices.
    std::vector<int> inversions(const Elt& w) const {
        std::vector<int> out;
        for (int p = 0; p < m_; ++p)
            if (is_negative(w[p])) out.push_back(p);
        return out;
    }

    /// Minimal representative of w W_P where P-simples are given as node list.
    Elt min_coset_rep(Elt w, const std::vector<int>& p_nodes) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int j : p_nodes) {
                int img = w[simple_root_index(j)];
                if (is_negative(img)) {
                    w = compose(w, simple_[j]);
                    changed = true;
                }
            }
        }
        return w;
    }

    bool is_min_rep(const Elt& w, const std::vector<int>& p_nodes) const {
        for (int j : p_nodes)
            if (is_negative(w[simple_root_index(j)])) return false;
        return true;
    }

    int simple_root_index(int i) const {
        std::vector<int> e(rs_->rank, 0);
        e[i] = 1;
        return rs_->root_index(e);
    }

  private:
    const RootSystem* rs_;
    int m_;
    std::vector<Elt> simple_;
    Elt w0_;

    Elt reflection_by_coords(const std::vector<int>&, const Root& beta) const {
        Elt perm(2 * m_);
        for (int p = 0; p < m_; ++p) {
            const Root& g = rs_->positive_roots[p];
            int c = rs_->pair_coroot(g.rc, beta);
            std::vector<int> im = g.rc;
            for (int j = 0; j < rs_->rank; ++j) im[j] -= c * beta.rc[j];
            bool negv = std::all_of(im.begin(), im.end(), [](int v) { return v <= 0; });
            if (negv) {
                for (int& v : im) v = -v;
                perm[p] = rs_->root_index(im) + m_;
            } else {
                perm[p] = rs_->root_index(im);
            }
            perm[p + m_] = perm[p] < m_ ? perm[p] + m_ : perm[p] - m_;
        }
        return perm;
    }

    Elt longest_element() const {
        Elt w = identity();
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < rs_->rank; ++i) {
                if (!is_negative(w[simple_root_index(i)])) {
                    w = compose(w, simple_[i]);
                    moved = true;
                }
            }
        }
        ensure(length(w) == m_, "longest element length");
        return w;
    }
};

}  // namespace comin
