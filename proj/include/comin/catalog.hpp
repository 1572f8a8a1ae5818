#pragma once

#include "comin/root_system.hpp"

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace comin {

enum class Family {
    Grassmannian,     // Gr(i, N), type A_{N-1} node i
    OddQuadric,       // Q^m in P^{m+1}, m odd, type B node 1
    LagrangianGrass,  // LG(n, 2n), type C_n node n
    OrthogonalGrass,  // OG(n, 2n), type D_n node n
    EvenQuadric,      // Q^m, m even, type D node 1
    CayleyPlane,      // E6
    Freudenthal,      // E7
};

struct SpaceDescriptor;

struct VmrtDescriptor {
    enum class Kind { Segre, Veronese, Cominuscule };
    Kind kind = Kind::Segre;
    int a = 0;  // Segre(a,b) = P^a x P^b; Veronese(a,2) = P^a
    int b = 0;
    std::shared_ptr<SpaceDescriptor> inner;  // set for Kind::Cominuscule
    int dim_v = 0;
    std::string embedding;  // O(1,1), O(2) or O(1)

    std::string to_string() const;
};

/// One cominuscule variety: classification data plus the chain-length
/// constant r and the variety of line tangents through a point.
struct SpaceDescriptor {
    Family family;
    int p1 = 0, p2 = 0;  // Gr(i,N): (i,N); quadrics: (m,0); LG/OG: (n,0)
    TypeLabel root_type;
    int root_rank = 0;
    int marked_node = 0;  // 0-based Bourbaki index
    int dim = 0;
    int index = 0;
    int r = 0;
    bool is_projective_space = false;
    VmrtDescriptor vmrt;
    std::string name;  // canonical id, e.g. "Gr(2,4)"

    bool operator==(const SpaceDescriptor& o) const { return name == o.name; }
};

inline std::string VmrtDescriptor::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Segre: os << "Segre(" << a << "," << b << ")"; break;
        case Kind::Veronese: os << "Veronese(" << a << ",2)"; break;
        case Kind::Cominuscule: os << inner->name; break;
    }
    os << " dim " << dim_v << " in |" << embedding << "|";
    return os.str();
}

namespace detail {

inline SpaceDescriptor describe_family(Family f, int p1, int p2);

inline VmrtDescriptor segre_vmrt(int a, int b) {
    VmrtDescriptor v;
    v.kind = VmrtDescriptor::Kind::Segre;
    v.a = a;
    v.b = b;
    v.dim_v = a + b;
    v.embedding = "O(1,1)";
    return v;
}

inline VmrtDescriptor veronese_vmrt(int a) {
    VmrtDescriptor v;
    v.kind = VmrtDescriptor::Kind::Veronese;
    v.a = a;
    v.b = 2;
    v.dim_v = a;
    v.embedding = "O(2)";
    return v;
}

inline VmrtDescriptor cominuscule_vmrt(const SpaceDescriptor& inner) {
    VmrtDescriptor v;
    v.kind = VmrtDescriptor::Kind::Cominuscule;
    v.inner = std::make_shared<SpaceDescriptor>(inner);
    v.dim_v = inner.dim;
    v.embedding = "O(1)";
    return v;
}

inline SpaceDescriptor describe_family(Family f, int p1, int p2) {
    SpaceDescriptor s;
    s.family = f;
    s.p1 = p1;
    s.p2 = p2;
    std::ostringstream nm;
    switch (f) {
        case Family::Grassmannian: {
            int i = p1, N = p2;
            if (N < 2 || i < 1 || i >= N)
                throw std::invalid_argument("Gr(i,N) needs 1 <= i < N, N >= 2");
            s.root_type = TypeLabel::A;
            s.root_rank = N - 1;
            s.marked_node = i - 1;
            s.dim = i * (N - i);
            s.index = N;
            s.r = std::min(i, N - i);
            s.is_projective_space = (i == 1 || i == N - 1);
            s.vmrt = segre_vmrt(i - 1, N - 1 - i);
            nm << "Gr(" << i << "," << N << ")";
            break;
        }
        case Family::OddQuadric: {
            int m = p1;
            if (m < 3 || m % 2 == 0) throw std::invalid_argument("OddQuadric(m) needs odd m >= 3");
            if (m == 3) return describe_family(Family::LagrangianGrass, 2, 0);
            int n = (m + 1) / 2;  // B_n
            s.root_type = TypeLabel::B;
            s.root_rank = n;
            s.marked_node = 0;
            s.dim = m;
            s.index = m;
            s.r = 2;
            s.vmrt = cominuscule_vmrt(describe_family(Family::OddQuadric, m - 2, 0));
            nm << "Q(" << m << ")";
            break;
        }
        case Family::EvenQuadric: {
            int m = p1;
            if (m < 4 || m % 2 == 1) throw std::invalid_argument("EvenQuadric(m) needs even m >= 4");
            if (m == 4) return describe_family(Family::Grassmannian, 2, 4);
            int n = (m + 2) / 2;  // D_n
            s.root_type = TypeLabel::D;
            s.root_rank = n;
            s.marked_node = 0;
            s.dim = m;
            s.index = m;
            s.r = 2;
            s.vmrt = cominuscule_vmrt(describe_family(Family::EvenQuadric, m - 2, 0));
            nm << "Q(" << m << ")";
            break;
        }
        case Family::LagrangianGrass: {
            int n = p1;
            if (n < 2) throw std::invalid_argument("LG(n) needs n >= 2");
            s.root_type = TypeLabel::C;
            s.root_rank = n;
            s.marked_node = n - 1;
            s.dim = n * (n + 1) / 2;
            s.index = n + 1;
            s.r = n;
            s.vmrt = veronese_vmrt(n - 1);
            nm << "LG(" << n << ")";
            break;
        }
        case Family::OrthogonalGrass: {
            int n = p1;
            if (n < 3) throw std::invalid_argument("OG(n) needs n >= 3");
            if (n == 3) return describe_family(Family::Grassmannian, 1, 4);  // OG(3,6) = P^3
            s.root_type = TypeLabel::D;
            s.root_rank = n;
            s.marked_node = n - 1;
            s.dim = n * (n - 1) / 2;
            s.index = 2 * n - 2;
            s.r = n / 2;
            s.vmrt = cominuscule_vmrt(describe_family(Family::Grassmannian, 2, n));
            nm << "OG(" << n << ")";
            break;
        }
        case Family::CayleyPlane: {
            s.root_type = TypeLabel::E6;
            s.root_rank = 6;
            s.marked_node = 5;
            s.dim = 16;
            s.index = 12;
            s.r = 2;
            s.vmrt = cominuscule_vmrt(describe_family(Family::OrthogonalGrass, 5, 0));
            nm << "E6";
            break;
        }
        case Family::Freudenthal: {
            s.root_type = TypeLabel::E7;
            s.root_rank = 7;
            s.marked_node = 6;
            s.dim = 27;
            s.index = 18;
            s.r = 3;
            s.vmrt = cominuscule_vmrt(describe_family(Family::CayleyPlane, 0, 0));
            nm << "E7";
            break;
        }
    }
    s.name = nm.str();
    return s;
}

}  // namespace detail

/// Classification lookup; low-rank coincidences are normalized here
/// (Q^3 -> LG(2), Q^4 -> Gr(2,4), OG(3,6) -> Gr(1,4)).
inline SpaceDescriptor describe(Family f, int p1 = 0, int p2 = 0) {
    SpaceDescriptor s = detail::describe_family(f, p1, p2);
    // Cross-check the table values against the root data.
    RootSystem rs = RootSystem::build(s.root_type, s.root_rank);
    ensure(rs.is_cominuscule_node(s.marked_node), "marked node must be cominuscule");
    ensure(rs.dim_of(s.marked_node) == s.dim, "descriptor dim vs root data");
    ensure(rs.index_of(s.marked_node) == s.index, "descriptor index vs root data");
    ensure(s.index == s.vmrt.dim_v + 2, "index = dim V + 2");
    return s;
}

/// Resolve a marked Dynkin diagram to its catalog entry.
inline SpaceDescriptor describe_root(TypeLabel t, int rank, int node_1based) {
    RootSystem::check_admissible(t, rank);
    int node = node_1based - 1;
    if (node < 0 || node >= rank) throw std::invalid_argument("marked node out of range");
    switch (t) {
        case TypeLabel::A: return describe(Family::Grassmannian, node + 1, rank + 1);
        case TypeLabel::B:
            if (node == 0) return describe(Family::OddQuadric, 2 * rank - 1, 0);
            break;
        case TypeLabel::C:
            if (node == rank - 1) return describe(Family::LagrangianGrass, rank, 0);
            break;
        case TypeLabel::D:
            if (node == 0) return describe(Family::EvenQuadric, 2 * rank - 2, 0);
            if (node >= rank - 2) return describe(Family::OrthogonalGrass, rank, 0);
            break;
        case TypeLabel::E6:
            if (node == 0 || node == 5) return describe(Family::CayleyPlane, 0, 0);
            break;
        case TypeLabel::E7:
            if (node == 6) return describe(Family::Freudenthal, 0, 0);
            break;
    }
    throw std::invalid_argument("node alpha_" + std::to_string(node_1based) + " of " +
                                to_string(t) + "_" + std::to_string(rank) +
                                " is not cominuscule");
}

/// Parse a space name: Gr(i,N), Q(m), LG(n), OG(n), E6, E7.
inline SpaceDescriptor parse_space(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    auto args = [&](size_t open) {
        std::vector<int> out;
        if (s.back() != ')') throw std::invalid_argument("expected ')' in space name: " + raw);
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    try {
        if (s == "E6") return describe(Family::CayleyPlane);
        if (s == "E7") return describe(Family::Freudenthal);
        size_t open = s.find('(');
        if (open != std::string::npos) {
            std::string head = s.substr(0, open);
            auto a = args(open);
            if (head == "Gr" && a.size() == 2) return describe(Family::Grassmannian, a[0], a[1]);
            if (head == "P" && a.size() == 1) return describe(Family::Grassmannian, 1, a[0] + 1);
            if (head == "Q" && a.size() == 1)
                return describe(a[0] % 2 ? Family::OddQuadric : Family::EvenQuadric, a[0], 0);
            if (head == "LG" && a.size() == 1) return describe(Family::LagrangianGrass, a[0], 0);
            if (head == "OG" && a.size() == 1) return describe(Family::OrthogonalGrass, a[0], 0);
        }
    } catch (const std::invalid_argument&) {
        throw;
    }
    throw std::invalid_argument(
        "unknown space '" + raw +
        "'; valid families: Gr(i,N), Q(m), LG(n), OG(n), E6, E7 (or P(n) for Gr(1,n+1))");
}

/// Chain of varieties of line tangents, ending at the first Segre or
/// Veronese entry. Quadric steps descend by two in dimension; low-rank
/// entries are normalized through describe().
inline std::vector<VmrtDescriptor> vmrt_tower(const SpaceDescriptor& s) {
    std::vector<VmrtDescriptor> out;
    SpaceDescriptor cur = s;
    for (int guard = 0; guard <= s.dim + 1; ++guard) {
        VmrtDescriptor v = cur.vmrt;
        out.push_back(v);
        if (v.kind != VmrtDescriptor::Kind::Cominuscule) return out;
        cur = *v.inner;
    }
    throw std::logic_error("vmrt tower failed to terminate");
}

/// Degree of the variety of line tangents in its tangent-space embedding,
/// for the Segre and Veronese kinds; the cominuscule kind is handled by the
/// Chow module (minimal-embedding degree).
inline Int vmrt_closed_form_degree(const VmrtDescriptor& v) {
    switch (v.kind) {
        case VmrtDescriptor::Kind::Segre: return binomial(v.a + v.b, v.a);
        case VmrtDescriptor::Kind::Veronese: {
            Int r = 1;
            for (int k = 0; k < v.a; ++k) r *= 2;
            return r;
        }
        case VmrtDescriptor::Kind::Cominuscule:
            throw std::logic_error("cominuscule vmrt degree is computed by the chow module");
    }
    return 0;
}

}  // namespace comin
