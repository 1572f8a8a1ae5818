#pragma once

#include "comin/bounds.hpp"
#include "comin/cache.hpp"
#include "comin/chains.hpp"

#include <map>
#include <memory>
#include <ostream>

namespace comin {

/// Shared computation context: constructed spaces, incidence matrices and
/// chain numbers, with optional disk persistence.
class Engine {
  public:
    explicit Engine(std::shared_ptr<DiskCache> cache = nullptr, std::ostream* warn = nullptr)
        : cache_(std::move(cache)), warn_(warn) {}

    std::shared_ptr<Space> space(const SpaceDescriptor& d) {
        auto it = spaces_.find(d.name);
        if (it != spaces_.end()) return it->second;
        auto sp = Space::create(d);
        spaces_[d.name] = sp;
        return sp;
    }

    const IncidenceMatrix& incidence(const SpaceDescriptor& d) {
        auto it = incidence_.find(d.name);
        if (it != incidence_.end()) return it->second;
        auto sp = space(d);
        if (cache_) {
            if (auto payload = cache_->get(d.name, "incidence", "", warn_)) {
                if (auto m = incidence_from_json(*sp, *payload))
                    return incidence_.emplace(d.name, std::move(*m)).first->second;
            }
        }
        IncidenceMatrix m = incidence_matrix(*sp);
        if (cache_) cache_->put(d.name, "incidence", "", incidence_to_json(*sp, m));
        return incidence_.emplace(d.name, std::move(m)).first->second;
    }

    Int delta(const SpaceDescriptor& d, int level, int threads = 1) {
        auto key = d.name + "#" + std::to_string(level);
        auto it = delta_.find(key);
        if (it != delta_.end()) return it->second;
        auto sp = space(d);
        check_chain_level(*sp, level);
        if (cache_) {
            if (auto payload = cache_->get(d.name, "delta", std::to_string(level), warn_)) {
                if (payload->contains("value")) {
                    Int v(payload->at("value").get<std::string>());
                    delta_[key] = v;
                    return v;
                }
            }
        }
        DeltaRun run = delta_transfer(*sp, incidence(d), level, threads);
        if (cache_) {
            nlohmann::json payload;
            payload["value"] = run.value.str();
            payload["d"] = run.d;
            cache_->put(d.name, "delta", std::to_string(level), payload);
        }
        delta_[key] = run.value;
        return run.value;
    }

    /// Minimal-embedding degree of a space (loads nothing heavy; basis only).
    Int fundamental_degree(const SpaceDescriptor& d) {
        auto sp = space(d);
        return sp->degree(sp->xi);
    }

    BoundReport bound(const SpaceDescriptor& d, int deg, bool skip_delta = false,
                      std::optional<int> chain_length = std::nullopt, int threads = 1) {
        BoundOptions opt;
        opt.skip_delta = skip_delta;
        opt.chain_length = chain_length;
        opt.delta = [this, threads](const SpaceDescriptor& s, int i) {
            return delta(s, i, threads);
        };
        auto vdeg = [this](const SpaceDescriptor& s) { return fundamental_degree(s); };
        return char_bound(d, deg, opt, vdeg);
    }

    static nlohmann::json incidence_to_json(const Space& sp, const IncidenceMatrix& m) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [key, v] : m.entries) {
            nlohmann::json e;
            e["sigma"] = ideal_bits(sp.poset, key.first);
            e["tau"] = ideal_bits(sp.poset, key.second);
            e["value"] = v.str();
            entries.push_back(std::move(e));
        }
        nlohmann::json out;
        out["space"] = sp.desc.name;
        out["dim_support"] = m.dim_support;
        out["entries"] = std::move(entries);
        return out;
    }

    static std::optional<IncidenceMatrix> incidence_from_json(const Space& sp,
                                                              const nlohmann::json& payload) {
        try {
            IncidenceMatrix m;
            m.space_name = payload.at("space").get<std::string>();
            if (m.space_name != sp.desc.name) return std::nullopt;
            m.dim_support = payload.at("dim_support").get<int>();
            for (const auto& e : payload.at("entries")) {
                Ideal s = parse_ideal_bits(sp.poset, e.at("sigma").get<std::string>());
                Ideal t = parse_ideal_bits(sp.poset, e.at("tau").get<std::string>());
                m.entries[{s, t}] = Int(e.at("value").get<std::string>());
            }
            return m;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

  private:
    std::shared_ptr<DiskCache> cache_;
    std::ostream* warn_;
    std::map<std::string, std::shared_ptr<Space>> spaces_;
    std::map<std::string, IncidenceMatrix> incidence_;
    std::map<std::string, Int> delta_;
};

}  // namespace comin
