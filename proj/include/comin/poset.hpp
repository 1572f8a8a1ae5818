#pragma once

#include "comin/catalog.hpp"
#include "comin/numeric.hpp"
#include "comin/root_system.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace comin {

using Ideal = uint64_t;  // bitset over the fixed element order

/// Weyl element whose right-inversion set is the given ideal, built by
/// walking any linear extension (the element order is one): adding x turns
/// w into s_j w where alpha_j = w(beta_x).
inline WeylGroup::Elt weyl_of_ideal(const WeylGroup& W, const std::vector<int>& root_of,
                                    Ideal s) {
    WeylGroup::Elt w = W.identity();
    for (size_t x = 0; x < root_of.size(); ++x) {
        if (!(s >> x & 1)) continue;
        int img = w[root_of[x]];
        ensure(!W.is_negative(img), "ideal walk stays positive");
        const Root& r = W.roots().positive_roots[img];
        ensure(r.height == 1, "new inversion is a simple root");
        int j = 0;
        while (r.rc[j] == 0) ++j;
        w = WeylGroup::compose(W.simple_reflection(j), w);
    }
    return w;
}

inline Ideal ideal_of_weyl(const WeylGroup& W, const std::vector<int>& root_of,
                           const WeylGroup::Elt& w) {
    Ideal s = 0;
    for (size_t x = 0; x < root_of.size(); ++x)
        if (W.is_negative(w[root_of[x]])) s |= Ideal(1) << x;
    ensure(W.length(w) == __builtin_popcountll(s), "inversions stay outside the parabolic");
    return s;
}

/// Poset on the roots outside the marked parabolic; order ideals index the
/// Schubert basis. Element order is by (height, coordinates), which is a
/// linear extension; bit k of an Ideal refers to element k.
class MinusculePoset {
  public:
    int n = 0;                      // number of elements = dim of the space
    std::vector<int> root_of;       // element -> positive root index
    std::vector<int> chev;          // <omega, beta^vee>, 1 or 2
    std::vector<int> rank_of;       // height of the label minus 1
    std::vector<Ideal> up_covers;   // covers of x (y > x)
    std::vector<Ideal> down_covers; // cocovers of x
    std::vector<Ideal> strictly_below;
    std::vector<int> involution;    // order-reversing involution on elements
    Ideal full = 0;

    static MinusculePoset build(const RootSystem& rs, int node) {
        MinusculePoset p;
        std::vector<int> elems;
        for (int i = 0; i < rs.num_positive(); ++i)
            if (rs.positive_roots[i].rc[node] != 0) elems.push_back(i);
        p.n = static_cast<int>(elems.size());
        if (p.n > 63)
            throw std::invalid_argument("space dimension " + std::to_string(p.n) +
                                        " exceeds the 63-element ideal representation");
        p.root_of = elems;
        std::map<int, int> elt_of_root;
        for (int x = 0; x < p.n; ++x) elt_of_root[elems[x]] = x;

        p.chev.resize(p.n);
        p.rank_of.resize(p.n);
        p.up_covers.assign(p.n, 0);
        p.down_covers.assign(p.n, 0);
        for (int x = 0; x < p.n; ++x) {
            const Root& b = rs.positive_roots[elems[x]];
            ensure(b.rc[node] == 1, "cominuscule coefficient must be 1");
            p.chev[x] = rs.coroot_coordinate(b, node);
            p.rank_of[x] = b.height - 1;
            for (int j = 0; j < rs.rank; ++j) {
                auto up = b.rc;
                up[j] += 1;
                if (auto idx = rs.try_root_index(up)) {
                    auto it = elt_of_root.find(*idx);
                    ensure(it != elt_of_root.end(), "cover left the poset");
                    p.up_covers[x] |= Ideal(1) << it->second;
                    p.down_covers[it->second] |= Ideal(1) << x;
                }
            }
        }
        p.full = p.n == 63 ? ~Ideal(0) >> 1 : (Ideal(1) << p.n) - 1;

        // transitive closure
        p.strictly_below.assign(p.n, 0);
        for (int x = 0; x < p.n; ++x) {  // element order extends the partial order
            Ideal below = 0;
            Ideal dc = p.down_covers[x];
            for (int y = 0; y < x; ++y)
                if (dc >> y & 1) below |= p.strictly_below[y] | (Ideal(1) << y);
            p.strictly_below[x] = below;
        }

        // The ordering must coincide with "difference is a nonnegative root combination".
        for (int x = 0; x < p.n; ++x)
            for (int y = 0; y < p.n; ++y) {
                if (x == y) continue;
                const auto& bx = rs.positive_roots[elems[x]].rc;
                const auto& by = rs.positive_roots[elems[y]].rc;
                bool dominated = true;
                for (int j = 0; j < rs.rank; ++j)
                    if (bx[j] > by[j]) dominated = false;
                ensure(dominated == bool(p.strictly_below[y] >> x & 1),
                       "root order vs cover reachability");
            }

        // Order-reversing involution, from Poincare duality: the dual of an
        // ideal I is the inversion set of the minimal representative of
        // w0 * w_I, and on the complement of the up-closure of x that dual is
        // the principal ideal of the image of x.
        p.involution.assign(p.n, -1);
        {
            WeylGroup W(rs);
            std::vector<int> p_nodes;
            for (int j = 0; j < rs.rank; ++j)
                if (j != node) p_nodes.push_back(j);
            std::vector<Ideal> strictly_above(p.n, 0);
            for (int x = p.n - 1; x >= 0; --x) {
                Ideal above = 0;
                for (int y = x + 1; y < p.n; ++y)
                    if (p.up_covers[x] >> y & 1) above |= strictly_above[y] | (Ideal(1) << y);
                strictly_above[x] = above;
            }
            for (int x = 0; x < p.n; ++x) {
                Ideal cx = p.full & ~(strictly_above[x] | Ideal(1) << x);
                auto w = weyl_of_ideal(W, p.root_of, cx);
                auto dual = W.min_coset_rep(WeylGroup::compose(W.w0(), w), p_nodes);
                Ideal d = ideal_of_weyl(W, p.root_of, dual);
                Ideal mx = p.maxima(d);
                ensure(__builtin_popcountll(mx) == 1, "principal dual has a unique maximum");
                p.involution[x] = __builtin_ctzll(mx);
            }
        }
        for (int x = 0; x < p.n; ++x) {
            ensure(p.involution[p.involution[x]] == x, "involution is involutive");
            for (int y = 0; y < p.n; ++y)
                if (p.up_covers[x] >> y & 1)
                    ensure(p.up_covers[p.involution[y]] >> p.involution[x] & 1,
                           "involution reverses covers");
        }
        return p;
    }

    bool is_ideal(Ideal s) const {
        for (int x = 0; x < n; ++x)
            if (s >> x & 1)
                if ((strictly_below[x] & ~s) != 0) return false;
        return true;
    }

    /// Elements of s with no cover inside s.
    Ideal maxima(Ideal s) const {
        Ideal out = 0;
        for (int x = 0; x < n; ++x)
            if ((s >> x & 1) && (up_covers[x] & s) == 0) out |= Ideal(1) << x;
        return out;
    }

    /// Elements outside s whose down-covers all lie in s (ideal stays an ideal).
    Ideal addable(Ideal s) const {
        Ideal out = 0;
        for (int x = 0; x < n; ++x)
            if (!(s >> x & 1) && (down_covers[x] & ~s) == 0) out |= Ideal(1) << x;
        return out;
    }

    Ideal dual_ideal(Ideal s) const {
        Ideal out = 0;
        for (int x = 0; x < n; ++x)
            if (!(s >> x & 1)) out |= Ideal(1) << involution[x];
        return out;
    }

    int size_of(Ideal s) const { return __builtin_popcountll(s); }
};

/// All order ideals, sorted by (size, bitset value).
inline std::vector<Ideal> order_ideals(const MinusculePoset& p) {
    std::vector<Ideal> out;
    std::map<Ideal, bool> seen;
    std::vector<Ideal> frontier{0};
    seen[0] = true;
    while (!frontier.empty()) {
        Ideal s = frontier.back();
        frontier.pop_back();
        out.push_back(s);
        Ideal add = p.addable(s);
        for (int x = 0; x < p.n; ++x)
            if (add >> x & 1) {
                Ideal t = s | Ideal(1) << x;
                if (!seen[t]) {
                    seen[t] = true;
                    frontier.push_back(t);
                }
            }
    }
    std::sort(out.begin(), out.end(), [&](Ideal a, Ideal b) {
        int pa = p.size_of(a), pb = p.size_of(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

/// Number of linear extensions of the ideal, by removal of maxima.
/// Thread-safe memo: concurrent readers, single writer.
class LinearExtensionCounter {
  public:
    explicit LinearExtensionCounter(const MinusculePoset& p) : p_(&p) {}

    Int count(Ideal s) {
        {
            std::shared_lock lk(mu_);
            auto it = memo_.find(s);
            if (it != memo_.end()) return it->second;
        }
        Int r = compute(s);
        std::unique_lock lk(mu_);
        memo_.emplace(s, r);
        return r;
    }

  private:
    Int compute(Ideal s) {
        if (s == 0) return 1;
        Int total = 0;
        Ideal mx = p_->maxima(s);
        for (int x = 0; x < p_->n; ++x)
            if (mx >> x & 1) total += count(s & ~(Ideal(1) << x));
        return total;
    }

    const MinusculePoset* p_;
    std::map<Ideal, Int> memo_;
    std::shared_mutex mu_;
};

inline std::string ideal_bits(const MinusculePoset& p, Ideal s) {
    std::string out(p.n, '0');
    for (int x = 0; x < p.n; ++x)
        if (s >> x & 1) out[x] = '1';
    return out;
}

inline Ideal parse_ideal_bits(const MinusculePoset& p, const std::string& bits) {
    if (static_cast<int>(bits.size()) != p.n)
        throw std::invalid_argument("ideal bitstring must have length " + std::to_string(p.n));
    Ideal s = 0;
    for (int x = 0; x < p.n; ++x) {
        if (bits[x] == '1')
            s |= Ideal(1) << x;
        else if (bits[x] != '0')
            throw std::invalid_argument("ideal bitstring must be over {0,1}");
    }
    if (!p.is_ideal(s)) throw std::invalid_argument("bitstring is not a down-closed set");
    return s;
}

}  // namespace comin
