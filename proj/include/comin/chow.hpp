#pragma once

#include "comin/poset.hpp"

#include <array>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace comin {

class Space;

/// Finitely supported Int-linear combination of Schubert classes of one space.
struct ChowElement {
    const Space* space = nullptr;
    std::map<Ideal, Int> c;

    void add(Ideal k, const Int& v) {
        if (v == 0) return;
        auto it = c.find(k);
        if (it == c.end()) {
            c.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0) c.erase(it);
        }
    }

    Int coeff(Ideal k) const {
        auto it = c.find(k);
        return it == c.end() ? Int(0) : it->second;
    }

    bool is_zero() const { return c.empty(); }
};

/// One cominuscule space with its Schubert basis and exact Chow arithmetic.
/// Immutable combinatorial data; memo tables allow concurrent readers.
class Space {
  public:
    SpaceDescriptor desc;
    RootSystem rs;
    MinusculePoset poset;
    std::vector<Ideal> basis;  // sorted by (size, value)
    Ideal xi = 0;              // fundamental class

    static std::shared_ptr<Space> create(const SpaceDescriptor& d) {
        auto s = std::shared_ptr<Space>(new Space(d));
        return s;
    }

    int dim() const { return desc.dim; }

    int basis_index(Ideal s) const {
        auto it = index_.find(s);
        ensure(it != index_.end(), "not a basis ideal");
        return it->second;
    }

    int dim_class(Ideal s) const { return poset.size_of(s); }

    Ideal dual(Ideal s) const { return poset.dual_ideal(s); }

    Ideal point_class() const { return 0; }

    /// The hyperplane class: the unique codimension-one Schubert class.
    Ideal hyperplane_ideal() const {
        Ideal mx = poset.maxima(poset.full);
        ensure(__builtin_popcountll(mx) == 1, "unique maximal element");
        return poset.full & ~mx;
    }

    ChowElement element(Ideal s, Int v = 1) const {
        ChowElement e;
        e.space = this;
        e.add(s, v);
        return e;
    }

    /// Product with the hyperplane class: remove one maximal element x of the
    /// ideal, with coefficient <omega, beta_x^vee>.
    ChowElement chevalley_H(const ChowElement& e) const {
        check_same(e);
        ChowElement out;
        out.space = this;
        for (const auto& [s, v] : e.c) {
            Ideal mx = poset.maxima(s);
            for (int x = 0; x < poset.n; ++x)
                if (mx >> x & 1) out.add(s & ~(Ideal(1) << x), v * poset.chev[x]);
        }
        return out;
    }

    /// deg X_s = (product of Chevalley weights over s) * #linear extensions.
    Int degree(Ideal s) const {
        Int w = 1;
        for (int x = 0; x < poset.n; ++x)
            if (s >> x & 1) w *= poset.chev[x];
        return w * le_->count(s);
    }

    Int linear_extensions(Ideal s) const { return le_->count(s); }

    /// Littlewood-Richardson expansion of [X_a] * [X_b].
    const std::map<Ideal, Int>& lr_pair(Ideal a, Ideal b) const {
        Ideal ka = a, kb = b;
        // the filling enumeration runs over the codimension of the second
        // factor, so put the smaller-codimension class second
        if (poset.size_of(kb) < poset.size_of(ka)) std::swap(ka, kb);
        auto key = std::make_pair(ka, kb);
        {
            std::shared_lock lk(mu_);
            auto it = lr_memo_.find(key);
            if (it != lr_memo_.end()) return it->second;
        }
        auto result = lr_pair_oriented(ka, kb);
        std::unique_lock lk(mu_);
        return lr_memo_.emplace(key, std::move(result)).first->second;
    }

    /// Same expansion without the symmetry shortcut (test hook).
    std::map<Ideal, Int> lr_pair_oriented(Ideal a, Ideal b) const {
        std::map<Ideal, Int> out;
        int sz = poset.size_of(a) + poset.size_of(b) - poset.n;
        if (sz < 0) return out;
        Ideal inner = dual(a);
        Ideal target = dual(b);
        for (Ideal k : basis) {
            if (poset.size_of(k) != sz) continue;
            if ((k & ~a) != 0) continue;  // support lies below the first factor
            Int mu = structure_constant(inner, dual(k), target, a, b, k);
            if (mu != 0) out.emplace(k, std::move(mu));
        }
        return out;
    }

    std::map<Ideal, Int> lr_coefficients(Ideal a, Ideal b) const { return lr_pair(a, b); }

    ChowElement multiply(const ChowElement& a, const ChowElement& b) const {
        check_same(a);
        check_same(b);
        ChowElement out;
        out.space = this;
        for (const auto& [sa, va] : a.c)
            for (const auto& [sb, vb] : b.c) {
                Int f = va * vb;
                for (const auto& [k, mu] : lr_pair(sa, sb)) out.add(k, f * mu);
            }
        return out;
    }

    ChowElement unit() const { return element(xi); }

    /// Number of Chevalley-weight-2 elements inside an ideal (nonzero only
    /// for the odd-quadric and Lagrangian families).
    int short_count(Ideal s) const {
        int k = 0;
        for (int x = 0; x < poset.n; ++x)
            if ((s >> x & 1) && poset.chev[x] == 2) ++k;
        return k;
    }

    /// Snapshot/preload of the multiplication memo, for the disk cache.
    std::vector<std::tuple<Ideal, Ideal, std::vector<std::pair<Ideal, Int>>>> lr_snapshot() const {
        std::shared_lock lk(mu_);
        std::vector<std::tuple<Ideal, Ideal, std::vector<std::pair<Ideal, Int>>>> out;
        for (const auto& [key, m] : lr_memo_) {
            std::vector<std::pair<Ideal, Int>> entries(m.begin(), m.end());
            out.emplace_back(key.first, key.second, std::move(entries));
        }
        return out;
    }

    void lr_preload(Ideal a, Ideal b, std::vector<std::pair<Ideal, Int>> entries) const {
        std::map<Ideal, Int> m(entries.begin(), entries.end());
        std::unique_lock lk(mu_);
        lr_memo_[{a, b}] = std::move(m);
    }

  private:
    explicit Space(const SpaceDescriptor& d)
        : desc(d),
          rs(RootSystem::build(d.root_type, d.root_rank)),
          poset(MinusculePoset::build(rs, d.marked_node)) {
        ensure(poset.n == desc.dim, "poset size equals the space dimension");
        basis = order_ideals(poset);
        for (size_t i = 0; i < basis.size(); ++i) index_[basis[i]] = static_cast<int>(i);
        xi = poset.full;
        le_ = std::make_unique<LinearExtensionCounter>(poset);
    }

    void check_same(const ChowElement& e) const {
        if (e.space != this)
            throw std::invalid_argument("Chow elements over different spaces cannot be combined");
    }

    /// mu = 2^E * (number of standard fillings of outer/inner rectifying to
    /// the canonical filling of target). E corrects for the short-root
    /// weights in the non-simply-laced families.
    Int structure_constant(Ideal inner, Ideal outer, Ideal target, Ideal a, Ideal b,
                           Ideal k) const {
        unsigned long long count = count_fillings(inner, outer, target);
        if (count == 0) return 0;
        int e = short_count(a) + short_count(b) - short_count(k) - short_count(xi);
        ensure(e >= 0, "short-root exponent is nonnegative on the support");
        Int mu = count;
        mu <<= e;
        return mu;
    }

    unsigned long long count_fillings(Ideal inner, Ideal outer, Ideal target) const {
        int m = poset.size_of(outer) - poset.size_of(inner);
        if (m == 0) return inner == outer ? canonical_match(inner, target) : 0;
        std::array<int8_t, 64> labels{};
        unsigned long long count = 0;
        dfs_fillings(inner, outer, inner, 1, m, labels, target, count);
        return count;
    }

    void dfs_fillings(Ideal inner, Ideal outer, Ideal cur, int next, int total,
                      std::array<int8_t, 64>& labels, Ideal target,
                      unsigned long long& count) const {
        if (next > total) {
            if (rectifies_to(labels, inner, outer, target)) ++count;
            return;
        }
        Ideal add = poset.addable(cur) & outer;
        for (int x = 0; x < poset.n; ++x)
            if (add >> x & 1) {
                labels[x] = static_cast<int8_t>(next);
                dfs_fillings(inner, outer, cur | Ideal(1) << x, next + 1, total, labels, target,
                             count);
                labels[x] = 0;
            }
    }

    static int canonical_match(Ideal, Ideal target) { return target == 0 ? 1 : 0; }

    /// Jeu-de-taquin rectification of the skew standard filling; returns
    /// whether the result is the canonical (element-order) filling of target.
    bool rectifies_to(const std::array<int8_t, 64>& labels_in, Ideal inner, Ideal outer,
                      Ideal target) const {
        std::array<int8_t, 64> labels = labels_in;
        Ideal domain = outer & ~inner;  // labeled cells
        while (inner != 0) {
            Ideal mx = poset.maxima(inner);
            int c = 63 - __builtin_clzll(mx);
            inner &= ~(Ideal(1) << c);
            int h = c;
            for (;;) {
                Ideal covers = poset.up_covers[h] & domain;
                if (covers == 0) break;
                int best = -1;
                for (int y = 0; y < poset.n; ++y)
                    if (covers >> y & 1)
                        if (best < 0 || labels[y] < labels[best]) best = y;
                labels[h] = labels[best];
                domain |= Ideal(1) << h;
                domain &= ~(Ideal(1) << best);
                labels[best] = 0;
                h = best;
            }
        }
        if (domain != target) return false;
        int expect = 1;
        for (int x = 0; x < poset.n; ++x)
            if (domain >> x & 1)
                if (labels[x] != expect++) return false;
        return true;
    }

    std::map<Ideal, int> index_;
    std::unique_ptr<LinearExtensionCounter> le_;
    mutable std::map<std::pair<Ideal, Ideal>, std::map<Ideal, Int>> lr_memo_;
    mutable std::shared_mutex mu_;
};

}  // namespace comin
