#pragma once

#include "comin/catalog.hpp"
#include "comin/numeric.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <optional>

namespace comin {

inline Int very_ample_twist(int d) {
    if (d < 1) throw std::invalid_argument("twist degree must be positive");
    return Int(d) * (d + 1) / 2;
}

/// e(e-1)^m: length bound for the singular locus of a degree-e subscheme of
/// pure dimension m under hyperplane slicing.
inline Int smoothness_bound(const Int& e, int m) {
    if (e < 1 || m < 1) throw std::invalid_argument("smoothness bound needs e >= 1, m >= 1");
    Int r = e;
    Int f = e - 1;
    for (int k = 0; k < m; ++k) r *= f;
    return r;
}

inline Int int_pow(const Int& b, int e) {
    Int r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

/// Characteristic lower bound for d-rigidity; the three components are kept
/// separate so the binding condition stays visible. Case 3 recurses through
/// the variety of line tangents at twist d(d+1)/2.
struct BoundReport {
    SpaceDescriptor space;
    int d = 0;
    int case_id = 0;  // 1: type A, 2: type C, 3: remaining types
    Int smoothness_term;
    Int index_term;
    std::optional<Int> delta_term;  // absent when skipped
    int chain_length = 0;           // argument of the delta component
    Int bound;                      // max of the components present
    bool delta_pending = false;
    std::unique_ptr<BoundReport> child;

    /// Maximum over the whole recursion tower (case-3 rigidity also needs
    /// p above every child bound).
    Int tower_bound() const {
        Int b = bound;
        for (const BoundReport* r = child.get(); r; r = r->child.get())
            if (r->bound > b) b = r->bound;
        return b;
    }
};

struct BoundOptions {
    bool skip_delta = false;
    std::optional<int> chain_length;  // override for the delta argument
    // delta_X(i) evaluator; bounds stays decoupled from the chains engine
    std::function<Int(const SpaceDescriptor&, int)> delta;
};

inline BoundReport char_bound(const SpaceDescriptor& s, int d, const BoundOptions& opt,
                              const std::function<Int(const SpaceDescriptor&)>& vmrt_degree) {
    if (d < 1) throw std::invalid_argument("rigidity degree d must be positive");
    BoundReport r;
    r.space = s;
    r.d = d;
    Int T = very_ample_twist(d);
    int n = s.root_rank;
    switch (s.root_type) {
        case TypeLabel::A: {
            r.case_id = 1;
            int i = s.marked_node + 1;
            Int e = int_pow(T, n - 1) * binomial(n - 1, i - 1);
            r.smoothness_term = n > 1 ? smoothness_bound(e, n - 1) : Int(1);
            r.index_term = n + 1;
            r.chain_length = i * (n + 1 - i);
            break;
        }
        case TypeLabel::C: {
            r.case_id = 2;
            Int e = int_pow(2 * T, n - 1);
            r.smoothness_term = smoothness_bound(e, n - 1);
            r.index_term = n + 1;
            r.chain_length = n * (n + 1) / 2;
            break;
        }
        default: {
            r.case_id = 3;
            int m = s.vmrt.dim_v;
            Int dv = s.vmrt.kind == VmrtDescriptor::Kind::Cominuscule
                         ? vmrt_degree(*s.vmrt.inner)
                         : vmrt_closed_form_degree(s.vmrt);
            Int e = int_pow(T, m) * dv;
            r.smoothness_term = smoothness_bound(e, m);
            r.index_term = s.index;
            r.chain_length = s.dim;
            break;
        }
    }
    if (opt.chain_length) r.chain_length = *opt.chain_length;
    if (opt.skip_delta) {
        r.delta_pending = true;
    } else {
        ensure(static_cast<bool>(opt.delta), "bound options carry a delta evaluator");
        r.delta_term = opt.delta(s, r.chain_length);
    }
    r.bound = r.smoothness_term;
    if (r.index_term > r.bound) r.bound = r.index_term;
    if (r.delta_term && *r.delta_term > r.bound) r.bound = *r.delta_term;

    if (r.case_id == 3) {
        ensure(s.vmrt.kind == VmrtDescriptor::Kind::Cominuscule,
               "case-3 variety of line tangents is cominuscule");
        const SpaceDescriptor& v = *s.vmrt.inner;
        if (!v.is_projective_space) {
            // projective-space tangent varieties are rigid in every characteristic
            if (T > std::numeric_limits<int>::max())
                throw std::invalid_argument("recursive twist d(d+1)/2 exceeds supported range");
            BoundOptions copt = opt;
            copt.chain_length.reset();
            r.child = std::make_unique<BoundReport>(
                char_bound(v, static_cast<int>(T), copt, vmrt_degree));
        }
    }
    return r;
}

}  // namespace comin
