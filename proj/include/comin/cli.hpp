#pragma once

#include "comin/engine.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace comin::cli {

struct Options {
    std::string format = "table";
    std::string cache_dir;
    int threads = 2;
};

inline bool json_mode(const Options& o) { return o.format == "json"; }

inline SpaceDescriptor resolve_space(const std::string& name, const std::string& root_spec) {
    if (!root_spec.empty()) {
        std::istringstream is(root_spec);
        std::string t, rank, node;
        if (!std::getline(is, t, ',') || !std::getline(is, rank, ',') || !std::getline(is, node))
            throw std::invalid_argument("--root expects TYPE,RANK,NODE, e.g. A,3,2");
        TypeLabel tl;
        if (t == "A") tl = TypeLabel::A;
        else if (t == "B") tl = TypeLabel::B;
        else if (t == "C") tl = TypeLabel::C;
        else if (t == "D") tl = TypeLabel::D;
        else if (t == "E6") tl = TypeLabel::E6;
        else if (t == "E7") tl = TypeLabel::E7;
        else throw std::invalid_argument("--root type must be one of A,B,C,D,E6,E7");
        return describe_root(tl, std::stoi(rank), std::stoi(node));
    }
    if (name.empty()) throw std::invalid_argument("no space given: use --space or --root");
    return parse_space(name);
}

inline std::string vmrt_kind_name(const VmrtDescriptor& v) {
    switch (v.kind) {
        case VmrtDescriptor::Kind::Segre: return "Segre";
        case VmrtDescriptor::Kind::Veronese: return "Veronese";
        case VmrtDescriptor::Kind::Cominuscule: return "Cominuscule";
    }
    return "?";
}

inline nlohmann::json vmrt_json(const VmrtDescriptor& v) {
    nlohmann::json j;
    j["kind"] = vmrt_kind_name(v);
    j["dim"] = v.dim_v;
    j["embedding"] = v.embedding;
    if (v.kind == VmrtDescriptor::Kind::Cominuscule)
        j["space"] = v.inner->name;
    else {
        j["a"] = v.a;
        j["b"] = v.b;
    }
    return j;
}

inline nlohmann::json descriptor_json(const SpaceDescriptor& s) {
    nlohmann::json j;
    j["family"] = s.name;
    j["root_type"] = {{"type", to_string(s.root_type)},
                      {"rank", s.root_rank},
                      {"node", s.marked_node + 1}};
    j["dim"] = s.dim;
    j["index"] = s.index;
    j["r"] = s.r;
    j["vmrt"] = vmrt_json(s.vmrt);
    j["projective_space"] = s.is_projective_space;
    return j;
}

inline int cmd_list(const Options& opt, std::ostream& out) {
    struct Row {
        const char* family;
        const char* names;
        const char* dim;
        const char* index;
    };
    const std::vector<Row> rows = {
        {"Grassmannian", "Gr(i,N), P(n)", "i(N-i)", "N"},
        {"OddQuadric", "Q(m), m odd >= 3", "m", "m"},
        {"EvenQuadric", "Q(m), m even >= 4", "m", "m"},
        {"LagrangianGrass", "LG(n)", "n(n+1)/2", "n+1"},
        {"OrthogonalGrass", "OG(n)", "n(n-1)/2", "2n-2"},
        {"CayleyPlane", "E6", "16", "12"},
        {"Freudenthal", "E7", "27", "18"},
    };
    if (json_mode(opt)) {
        nlohmann::json j = nlohmann::json::array();
        for (const Row& r : rows)
            j.push_back({{"family", r.family}, {"names", r.names}, {"dim", r.dim},
                         {"index", r.index}});
        out << j.dump(1) << "\n";
        return 0;
    }
    out << "family             names                dim        index\n";
    for (const Row& r : rows)
        out << std::left << std::setw(19) << r.family << std::setw(21) << r.names
            << std::setw(11) << r.dim << r.index << "\n";
    out << "\nRoot-coordinate spelling: --root TYPE,RANK,NODE (Bourbaki numbering),\n"
           "e.g. --root A,3,2 for Gr(2,4).\n";
    return 0;
}

inline int cmd_info(const Options& opt, const SpaceDescriptor& s, std::ostream& out) {
    if (json_mode(opt)) {
        out << descriptor_json(s).dump(1) << "\n";
        return 0;
    }
    out << "space               " << s.name << "\n";
    out << "root type           " << to_string(s.root_type) << "_" << s.root_rank << ", node alpha_"
        << s.marked_node + 1 << "\n";
    out << "dim                 " << s.dim << "\n";
    out << "index               " << s.index << "\n";
    out << "r (chain length)    " << s.r << "\n";
    out << "vmrt                " << s.vmrt.to_string() << "\n";
    if (s.is_projective_space) out << "projective space    yes\n";
    auto tower = vmrt_tower(s);
    if (tower.size() > 1) {
        out << "vmrt tower          ";
        for (size_t k = 0; k < tower.size(); ++k)
            out << (k ? " -> " : "") << tower[k].to_string();
        out << "\n";
    }
    return 0;
}

inline int cmd_basis(const Options& opt, Engine& eng, const SpaceDescriptor& s,
                     std::ostream& out) {
    auto sp = eng.space(s);
    if (json_mode(opt)) {
        nlohmann::json j = nlohmann::json::array();
        for (Ideal b : sp->basis)
            j.push_back({{"ideal", ideal_bits(sp->poset, b)},
                         {"dim", sp->dim_class(b)},
                         {"codim", sp->dim() - sp->dim_class(b)},
                         {"degree", sp->degree(b).str()},
                         {"dual", ideal_bits(sp->poset, sp->dual(b))}});
        out << j.dump(1) << "\n";
        return 0;
    }
    out << "basis of " << s.name << ": " << sp->basis.size() << " Schubert classes\n";
    out << std::left << std::setw(6) << "#" << std::setw(s.dim + 2) << "ideal" << std::setw(5)
        << "dim" << std::setw(7) << "codim" << std::setw(14) << "degree"
        << "dual\n";
    for (size_t i = 0; i < sp->basis.size(); ++i) {
        Ideal b = sp->basis[i];
        out << std::left << std::setw(6) << i << std::setw(s.dim + 2) << ideal_bits(sp->poset, b)
            << std::setw(5) << sp->dim_class(b) << std::setw(7) << sp->dim() - sp->dim_class(b)
            << std::setw(14) << sp->degree(b).str() << ideal_bits(sp->poset, sp->dual(b)) << "\n";
    }
    return 0;
}

/// Accepts an ideal bitstring, or a partition like "2,1" on Grassmannians
/// (codimension convention), or "point"/"one".
inline Ideal parse_class(const Space& sp, const std::string& text) {
    if (text == "point") return sp.point_class();
    if (text == "one" || text == "fundamental") return sp.xi;
    bool bits = text.size() == static_cast<size_t>(sp.poset.n);
    for (char c : text)
        if (c != '0' && c != '1') bits = false;
    if (bits) return parse_ideal_bits(sp.poset, text);
    if (sp.desc.family == Family::Grassmannian) {
        std::vector<int> lam;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) lam.push_back(std::stoi(tok));
        for (size_t j = 1; j < lam.size(); ++j)
            if (lam[j] > lam[j - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        int i = sp.desc.p1, w = sp.desc.p2 - sp.desc.p1;
        if (static_cast<int>(lam.size()) > i || (!lam.empty() && lam[0] > w))
            throw std::invalid_argument("partition does not fit in the " + std::to_string(i) +
                                        "x" + std::to_string(w) + " box");
        // remove the shape from the full grid, row by row
        Ideal s = sp.xi;
        std::vector<std::vector<int>> grid_elts(i + 1);
        for (int x = 0; x < sp.poset.n; ++x) {
            const Root& beta = sp.rs.positive_roots[sp.poset.root_of[x]];
            int a = -1, b = -1;
            for (int j = 0; j < sp.rs.rank; ++j)
                if (beta.rc[j] != 0) {
                    if (a < 0) a = j + 1;
                    b = j + 1;
                }
            int row = sp.desc.p1 + 1 - a;
            int col = b - sp.desc.p1 + 1;
            (void)col;
            grid_elts[row].push_back(x);
        }
        for (int r = 1; r <= i; ++r) {
            // within a grid row, larger column = higher root; sort by column
            std::sort(grid_elts[r].begin(), grid_elts[r].end());
        }
        for (size_t j = 0; j < lam.size(); ++j) {
            // partition row j trims the grid row i-j (codimension convention)
            int row = i - static_cast<int>(j);
            for (int kk = 0; kk < lam[j]; ++kk) {
                int x = grid_elts[row][grid_elts[row].size() - 1 - kk];
                s &= ~(Ideal(1) << x);
            }
        }
        if (!sp.poset.is_ideal(s))
            throw std::logic_error("partition trimming left a non-ideal");
        return s;
    }
    throw std::invalid_argument("class '" + text + "' is neither a " +
                                std::to_string(sp.poset.n) +
                                "-bit ideal string nor a partition (partitions are only "
                                "accepted on Grassmannians)");
}

inline int cmd_lr(const Options& opt, Engine& eng, const SpaceDescriptor& s,
                  const std::string& ca, const std::string& cb, std::ostream& out) {
    auto sp = eng.space(s);
    Ideal a = parse_class(*sp, ca);
    Ideal b = parse_class(*sp, cb);
    auto prod = sp->lr_coefficients(a, b);
    if (json_mode(opt)) {
        nlohmann::json j;
        j["space"] = s.name;
        j["a"] = ideal_bits(sp->poset, a);
        j["b"] = ideal_bits(sp->poset, b);
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [k, v] : prod)
            terms.push_back({{"ideal", ideal_bits(sp->poset, k)},
                             {"dim", sp->dim_class(k)},
                             {"coefficient", v.str()}});
        j["terms"] = std::move(terms);
        out << j.dump(1) << "\n";
        return 0;
    }
    out << "[" << ideal_bits(sp->poset, a) << "] * [" << ideal_bits(sp->poset, b) << "] on "
        << s.name << ":\n";
    if (prod.empty()) out << "  0\n";
    for (const auto& [k, v] : prod)
        out << "  " << std::left << std::setw(12) << v.str() << "[" << ideal_bits(sp->poset, k)
            << "]  dim " << sp->dim_class(k) << "\n";
    return 0;
}

inline int cmd_incidence(const Options& opt, Engine& eng, const SpaceDescriptor& s,
                         std::ostream& out) {
    auto sp = eng.space(s);
    const IncidenceMatrix& m = eng.incidence(s);
    if (json_mode(opt)) {
        out << Engine::incidence_to_json(*sp, m).dump(1) << "\n";
        return 0;
    }
    out << "line-incidence matrix of " << s.name << ": dim support " << m.dim_support
        << ", nonzero entries " << m.entries.size() << "\n";
    out << std::left << std::setw(s.dim + 2) << "sigma" << std::setw(s.dim + 2) << "tau"
        << std::setw(5) << "dims"
        << "value\n";
    for (const auto& [key, v] : m.entries)
        out << std::left << std::setw(s.dim + 2) << ideal_bits(sp->poset, key.first)
            << std::setw(s.dim + 2) << ideal_bits(sp->poset, key.second)
            << sp->dim_class(key.first) << "+" << sp->dim_class(key.second) << " " << v.str()
            << "\n";
    out << "cone class [C_x] = [" << ideal_bits(sp->poset, cone_class(*sp, m)) << "], dim "
        << sp->dim_class(cone_class(*sp, m)) << "\n";
    return 0;
}

inline int cmd_delta(const Options& opt, Engine& eng, const SpaceDescriptor& s, int level,
                     bool naive, std::ostream& out, std::ostream& err) {
    auto sp = eng.space(s);
    check_chain_level(*sp, level);
    const IncidenceMatrix& m = eng.incidence(s);
    TransferCostModel cost = transfer_cost_model(*sp, m, level);
    out << "transfer cost: " << cost.steps << " contractions over " << cost.basis_size
        << " classes, " << cost.structure_terms << " structure terms, truncation degree "
        << cost.d << ", ~" << cost.coefficient_ops << " coefficient operations\n";
    Int value;
    double seconds = 0;
    if (naive) {
        auto t0 = std::chrono::steady_clock::now();
        value = delta_naive(*sp, m, level);
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else {
        auto t0 = std::chrono::steady_clock::now();
        value = eng.delta(s, level, opt.threads);
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    err << "wall time " << std::fixed << std::setprecision(3) << seconds << "s\n";
    if (json_mode(opt)) {
        nlohmann::json j;
        j["space"] = s.name;
        j["i"] = level;
        j["d_i"] = cost.d;
        j["basis_size"] = cost.basis_size;
        j["truncation_degree"] = cost.d;
        j["method"] = naive ? "naive" : "transfer";
        j["value"] = value.str();
        out << j.dump(1) << "\n";
        return 0;
    }
    out << "space     " << s.name << "\n";
    out << "i         " << level << "\n";
    out << "d_i       " << cost.d << "\n";
    out << "basis     " << cost.basis_size << "\n";
    out << "method    " << (naive ? "naive" : "transfer") << "\n";
    out << "delta     " << value.str() << "\n";
    return 0;
}

inline nlohmann::json bound_json(const BoundReport& r) {
    nlohmann::json j;
    j["space"] = r.space.name;
    j["d"] = r.d;
    j["case"] = r.case_id;
    nlohmann::json comps;
    comps["smoothness_term"] = r.smoothness_term.str();
    comps["index_term"] = r.index_term.str();
    comps["delta_term"] = r.delta_term ? nlohmann::json(r.delta_term->str()) : nlohmann::json();
    j["components"] = std::move(comps);
    j["chain_length"] = r.chain_length;
    j["delta_pending"] = r.delta_pending;
    j["bound"] = r.bound.str();
    j["tower_bound"] = r.tower_bound().str();
    j["child"] = r.child ? bound_json(*r.child) : nlohmann::json();
    return j;
}

inline void bound_table(const BoundReport& r, std::ostream& out, int depth) {
    std::string pad(2 * depth, ' ');
    out << pad << r.space.name << "  d=" << r.d << "  case " << r.case_id << "\n";
    out << pad << "  smoothness_term  " << r.smoothness_term.str() << "\n";
    out << pad << "  index_term       " << r.index_term.str() << "\n";
    if (r.delta_term)
        out << pad << "  delta_term       " << r.delta_term->str() << "   (chain length "
            << r.chain_length << ")\n";
    else
        out << pad << "  delta_term       pending (chain length " << r.chain_length
            << "; run without --skip-delta)\n";
    out << pad << "  bound            " << r.bound.str() << "\n";
    if (r.case_id == 3) {
        if (r.child) {
            out << pad << "  rigidity of the tangent variety additionally requires p > child "
                << "bound:\n";
            bound_table(*r.child, out, depth + 1);
        } else {
            out << pad << "  tangent variety is a projective space: rigid in every "
                << "characteristic\n";
        }
    }
    if (depth == 0) out << "tower bound " << r.tower_bound().str() << "\n";
}

inline int cmd_bound(const Options& opt, Engine& eng, const SpaceDescriptor& s, int d,
                     bool skip_delta, std::optional<int> chain_length, bool force_json,
                     std::ostream& out) {
    BoundReport r = eng.bound(s, d, skip_delta, chain_length, opt.threads);
    if (force_json || json_mode(opt)) {
        out << bound_json(r).dump(1) << "\n";
        return 0;
    }
    bound_table(r, out, 0);
    return 0;
}

int selftest(const Options& opt, Engine& eng, bool include_e7, int max_dim, std::ostream& out);

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Schubert calculus and rigidity bounds for cominuscule spaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--cache-dir", opt.cache_dir,
                   "result cache directory (default: COMIN_CACHE_DIR or ~/.cache/comin)");
    app.add_option("--threads", opt.threads, "worker threads for chain contractions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string space_name, root_spec;
    auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_name, "space name, e.g. Gr(2,4), Q(5), LG(3), E7");
        cmd->add_option("--root", root_spec, "root datum TYPE,RANK,NODE, e.g. A,3,2");
    };

    CLI::App* list = app.add_subcommand("list", "list the catalog families");
    CLI::App* info = app.add_subcommand("info", "classification data for one space");
    add_space(info);
    CLI::App* basis = app.add_subcommand("basis", "Schubert basis with dimensions and degrees");
    add_space(basis);
    CLI::App* lr = app.add_subcommand("lr", "product of two Schubert classes");
    add_space(lr);
    std::string class_a, class_b;
    lr->add_option("a", class_a, "first class: ideal bitstring or partition")->required();
    lr->add_option("b", class_b, "second class")->required();
    CLI::App* inc = app.add_subcommand("incidence", "line-incidence matrix a^{sigma,tau}");
    add_space(inc);
    CLI::App* delta = app.add_subcommand("delta", "chain intersection number delta_X(i)");
    add_space(delta);
    int level = 0;
    bool naive = false;
    delta->add_option("--i", level, "chain length")->required();
    delta->add_flag("--naive", naive, "use the tuple-sum evaluation instead of the transfer");
    CLI::App* bound = app.add_subcommand("bound", "characteristic bound for d-rigidity");
    add_space(bound);
    int bdeg = 0;
    bool skip_delta = false, bound_json_flag = false;
    int chain_override = -1;
    bound->add_option("--d", bdeg, "very-ample twist degree d")->required();
    bound->add_flag("--skip-delta", skip_delta, "leave the delta component pending");
    bound->add_flag("--json", bound_json_flag, "JSON report");
    bound->add_option("--chain-length", chain_override,
                      "override the chain length used for the delta component");
    CLI::App* st = app.add_subcommand("selftest", "run the invariant suite");
    bool include_e7 = false;
    int st_max_dim = 10;
    st->add_flag("--include-e7", include_e7, "add the long-running E7 degree check");
    st->add_option("--max-dim", st_max_dim, "largest space dimension to sweep");

    std::vector<std::string> argv_vec = args;
    std::vector<const char*> argv;
    argv.push_back("comin");
    for (const std::string& a : argv_vec) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        auto cache = std::make_shared<DiskCache>(opt.cache_dir.empty()
                                                     ? DiskCache::default_dir()
                                                     : std::filesystem::path(opt.cache_dir));
        Engine eng(cache, &err);
        if (*list) return cmd_list(opt, out);
        if (*info) return cmd_info(opt, resolve_space(space_name, root_spec), out);
        if (*basis) return cmd_basis(opt, eng, resolve_space(space_name, root_spec), out);
        if (*lr)
            return cmd_lr(opt, eng, resolve_space(space_name, root_spec), class_a, class_b, out);
        if (*inc) return cmd_incidence(opt, eng, resolve_space(space_name, root_spec), out);
        if (*delta)
            return cmd_delta(opt, eng, resolve_space(space_name, root_spec), level, naive, out,
                             err);
        if (*bound)
            return cmd_bound(opt, eng, resolve_space(space_name, root_spec), bdeg, skip_delta,
                             chain_override >= 0 ? std::optional<int>(chain_override)
                                                 : std::nullopt,
                             bound_json_flag, out);
        if (*st) return selftest(opt, eng, include_e7, st_max_dim, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

/// Invariant sweep over the catalog up to the given dimension, plus E6 spot
/// checks. Returns nonzero if any group fails.
inline int selftest(const Options& opt, Engine& eng, bool include_e7, int max_dim,
                    std::ostream& out) {
    (void)opt;
    int failures = 0;
    auto group = [&](const std::string& name, auto&& body) {
        try {
            body();
            out << "[ ok ] " << name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            out << "[FAIL] " << name << ": " << e.what() << "\n";
        }
    };
    auto require = [](bool cond, const std::string& what) {
        if (!cond) throw std::runtime_error(what);
    };

    std::vector<SpaceDescriptor> sweep;
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i)
            if (i * (n + 1 - i) <= max_dim) sweep.push_back(describe(Family::Grassmannian, i, n + 1));
    for (int m = 3; m <= max_dim; ++m)
        sweep.push_back(describe(m % 2 ? Family::OddQuadric : Family::EvenQuadric, m, 0));
    for (int n = 2; n * (n + 1) / 2 <= max_dim; ++n)
        sweep.push_back(describe(Family::LagrangianGrass, n, 0));
    for (int n = 4; n * (n - 1) / 2 <= max_dim; ++n)
        sweep.push_back(describe(Family::OrthogonalGrass, n, 0));
    std::map<std::string, SpaceDescriptor> uniq;
    for (const auto& s : sweep) uniq.emplace(s.name, s);

    group("classification: dim and index recomputed from root data", [&] {
        for (const auto& [name, s] : uniq) {
            RootSystem rs = RootSystem::build(s.root_type, s.root_rank);
            require(rs.dim_of(s.marked_node) == s.dim, name + " dim");
            require(rs.index_of(s.marked_node) == s.index, name + " index");
        }
    });

    group("poset: ideal counts, palindromic Betti numbers, duality", [&] {
        for (const auto& [name, s] : uniq) {
            auto sp = eng.space(s);
            std::vector<int> betti(s.dim + 1, 0);
            for (Ideal b : sp->basis) ++betti[sp->dim_class(b)];
            for (int k = 0; k <= s.dim; ++k)
                require(betti[k] == betti[s.dim - k], name + " betti palindrome");
            for (Ideal b : sp->basis) {
                require(sp->dual(sp->dual(b)) == b, name + " dual involution");
                require(sp->dim_class(sp->dual(b)) == s.dim - sp->dim_class(b),
                        name + " dual dimension");
            }
        }
    });

    group("chow: degree consistency and duality pairing", [&] {
        for (const auto& [name, s] : uniq) {
            auto sp = eng.space(s);
            for (Ideal b : sp->basis) {
                ChowElement e = sp->element(b);
                for (int k = 0; k < sp->dim_class(b); ++k) e = sp->chevalley_H(e);
                require(e.coeff(sp->point_class()) == sp->degree(b), name + " degree");
                auto p = sp->lr_coefficients(b, sp->dual(b));
                require(p.size() == 1 && p.begin()->second == 1, name + " pairing");
            }
        }
    });

    group("chow: associativity on spaces of dimension <= 6", [&] {
        for (const auto& [name, s] : uniq) {
            if (s.dim > 6) continue;
            auto sp = eng.space(s);
            for (Ideal a : sp->basis)
                for (Ideal b : sp->basis)
                    for (Ideal c : sp->basis) {
                        ChowElement l = sp->multiply(sp->multiply(sp->element(a), sp->element(b)),
                                                     sp->element(c));
                        ChowElement r = sp->multiply(sp->element(a),
                                                     sp->multiply(sp->element(b), sp->element(c)));
                        require(l.c == r.c, name + " associativity");
                    }
        }
    });

    group("incidence: symmetry, support, fundamental row", [&] {
        for (const auto& [name, s] : uniq) eng.incidence(s);  // invariants asserted inside
    });

    group("chains: transfer vs naive and domination", [&] {
        for (const auto& [name, s] : uniq) {
            auto sp = eng.space(s);
            const IncidenceMatrix& m = eng.incidence(s);
            for (int i = 1; i <= s.dim + 2; ++i) {
                int d = chain_excess(*sp, i);
                if (d < 0) continue;
                if (s.dim <= 6 && d <= 12)
                    require(delta_naive(*sp, m, i) == delta_transfer(*sp, m, i).value,
                            name + " transfer vs naive");
                if (i >= s.r)
                    require(delta_transfer(*sp, m, i).value >= 1, name + " domination");
                if (d > 12) break;
            }
        }
    });

    group("cache: round trip and corruption recovery", [&] {
        DiskCache cache(std::filesystem::temp_directory_path() /
                        ("comin-selftest-" + std::to_string(::getpid())));
        nlohmann::json payload{{"value", "12345678901234567890"}};
        cache.put("X", "probe", "1", payload);
        auto got = cache.get("X", "probe", "1");
        require(got.has_value() && *got == payload, "cache round trip");
        // corrupt the file
        auto p = cache.path_for("X", "probe", "1");
        std::ofstream(p, std::ios::app) << "garbage";
        std::ostringstream warnings;
        require(!cache.get("X", "probe", "1", &warnings).has_value(), "corrupt entry is a miss");
        require(warnings.str().find("warning") != std::string::npos, "corruption warning");
        std::filesystem::remove_all(cache.dir());
    });

    group("E6 spot checks", [&] {
        SpaceDescriptor s = describe(Family::CayleyPlane);
        auto sp = eng.space(s);
        require(sp->basis.size() == 27, "E6 basis size");
        require(sp->degree(sp->xi) == 78, "E6 degree");
        eng.incidence(s);
        require(eng.delta(s, 2) >= 1, "E6 delta(2)");
    });

    if (include_e7) {
        group("E7 degree and fundamental row", [&] {
            SpaceDescriptor s = describe(Family::Freudenthal);
            auto sp = eng.space(s);
            require(sp->degree(sp->xi) == 13110, "E7 degree");
            eng.incidence(s);
        });
    }

    out << (failures ? "selftest: FAILURES\n" : "selftest: all groups passed\n");
    return failures ? 1 : 0;
}

}  // namespace comin::cli
