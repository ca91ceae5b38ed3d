#pragma once
// JSON serialization for groups, cochains, cohomology results, and center
// reports, plus the on-disk cohomology cache (one file per
// (group-hash, degree, modulus), versioned, atomic single-writer updates).

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dwc/center.hpp"
#include "dwc/cochain.hpp"
#include "dwc/cohomology.hpp"
#include "dwc/group.hpp"

namespace dwc {

using json = nlohmann::ordered_json;

constexpr int kCacheFormatVersion = 1;

inline json group_to_json(const FiniteGroup& G) {
    json j;
    j["order"] = G.order;
    j["mult"] = G.mult;
    j["label"] = G.label;
    return j;
}

inline FiniteGroup group_from_json(const json& j) {
    if (!j.contains("mult") || !j["mult"].is_array())
        throw error(error::Kind::BadInput, "group JSON needs a \"mult\" table");
    std::vector<std::vector<int>> table = j["mult"].get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j["order"].get<int>() != static_cast<int>(table.size()))
        throw error(error::Kind::BadInput, "group JSON \"order\" disagrees with the table size");
    std::string label = j.value("label", std::string());
    if (static_cast<int>(table.size()) > kMaxGroupOrder)
        throw error(error::Kind::OrderTooLarge, "group order exceeds " + std::to_string(kMaxGroupOrder));
    return FiniteGroup(std::move(table), label);
}

// FNV-1a over the multiplication table: stable identity for cache file names.
inline std::string group_hash(const FiniteGroup& G) {
    unsigned long long h = 1469598103934665603ULL;
    auto mix = [&](unsigned long long x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(static_cast<unsigned long long>(G.order));
    for (const auto& row : G.mult)
        for (int v : row) mix(static_cast<unsigned long long>(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

inline json cochain_to_json(const Cochain& c) {
    json j;
    json g;
    g["label"] = c.group->label;
    g["order"] = c.group->order;
    g["hash"] = group_hash(*c.group);
    j["group"] = g;
    j["dom"] = c.dom;
    j["degree"] = c.degree;
    j["modulus"] = c.modulus;
    j["values"] = c.values;
    return j;
}

// The group is supplied by the caller; "dom" defaults to the full group.
inline Cochain cochain_from_json(const FiniteGroup& G, const json& j) {
    if (!j.contains("degree") || !j.contains("modulus") || !j.contains("values"))
        throw error(error::Kind::BadInput, "cochain JSON needs \"degree\", \"modulus\", \"values\"");
    int degree = j["degree"].get<int>();
    i64 modulus = j["modulus"].get<i64>();
    if (degree < 0 || modulus < 1) throw error(error::Kind::BadInput, "bad cochain degree or modulus");
    std::vector<int> dom;
    if (j.contains("dom")) {
        dom = j["dom"].get<std::vector<int>>();
    } else {
        dom.resize(G.order);
        for (int i = 0; i < G.order; ++i) dom[i] = i;
    }
    Cochain c(G, dom, degree, modulus);
    std::vector<i64> vals = j["values"].get<std::vector<i64>>();
    if (vals.size() != c.values.size())
        throw error(error::Kind::BadInput, "cochain JSON \"values\" has length " + std::to_string(vals.size()) +
                                               ", expected " + std::to_string(c.values.size()));
    for (size_t i = 0; i < vals.size(); ++i) c.values[i] = mod_norm(vals[i], modulus);
    return c;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(error::Kind::BadInput, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error(error::Kind::BadInput, "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

// ----- cohomology cache -----

struct CohomologyCacheEntry {
    std::vector<i64> invariant_factors;
    std::vector<std::vector<i64>> class_reps;  // normalized representative values, index 0 = zero class
    bool reps_complete = true;                 // false when the class count exceeded the enumeration cap
};

inline std::string cache_file_path(const std::string& dir, const FiniteGroup& G, int degree, i64 modulus) {
    return dir + "/coh-v" + std::to_string(kCacheFormatVersion) + "-" + group_hash(G) + "-d" +
           std::to_string(degree) + "-m" + std::to_string(modulus) + ".json";
}

inline std::optional<CohomologyCacheEntry> cache_load(const std::string& dir, const FiniteGroup& G,
                                                      int degree, i64 modulus) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(cache_file_path(dir, G, degree, modulus));
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        if (j.value("version", 0) != kCacheFormatVersion) return std::nullopt;
        CohomologyCacheEntry e;
        e.invariant_factors = j.at("invariant_factors").get<std::vector<i64>>();
        e.class_reps = j.at("class_reps").get<std::vector<std::vector<i64>>>();
        e.reps_complete = j.value("reps_complete", true);
        return e;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are ignored, not fatal
    }
}

inline void cache_store(const std::string& dir, const FiniteGroup& G, int degree, i64 modulus,
                        const CohomologyCacheEntry& e) {
    if (dir.empty()) return;
    json j;
    j["version"] = kCacheFormatVersion;
    j["group_hash"] = group_hash(G);
    j["degree"] = degree;
    j["modulus"] = modulus;
    j["invariant_factors"] = e.invariant_factors;
    j["class_reps"] = e.class_reps;
    j["reps_complete"] = e.reps_complete;
    std::string path = cache_file_path(dir, G, degree, modulus);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;  // cache is best-effort
        out << j.dump(1) << "\n";
    }
    std::rename(tmp.c_str(), path.c_str());
}

// ----- center report -----

// Deterministic object labels per class: I for H = G, T for H = 1, A<n>
// otherwise; grading subscript _<rep> for nonidentity classes; duplicate base
// names get an ordinal.
inline std::vector<std::vector<std::string>> object_labels(
    const CenterContext& ctx, const std::vector<std::vector<CenterObject>>& per_class) {
    std::vector<std::vector<std::string>> out;
    for (size_t ci = 0; ci < per_class.size(); ++ci) {
        std::vector<std::string> labels;
        std::map<std::string, int> seen;
        std::string suffix = ctx.classes.rep[ci] == 0 ? "" : "_" + std::to_string(ctx.classes.rep[ci]);
        for (size_t k = 0; k < per_class[ci].size(); ++k) {
            const CenterObject& ob = per_class[ci][k];
            std::string base;
            if (static_cast<int>(ob.H.size()) == ctx.group->order) base = "I";
            else if (ob.H.size() == 1) base = "T";
            else base = "A" + std::to_string(k + 1);
            int n = ++seen[base];
            if (n > 1) base += std::to_string(n);
            labels.push_back(base + suffix);
        }
        out.push_back(std::move(labels));
    }
    return out;
}

inline json psi_to_json(const Cochain& psi) {
    json j;
    j["degree"] = psi.degree;
    j["modulus"] = psi.modulus;
    j["values"] = psi.values;
    return j;
}

inline json center_report(const CenterContext& ctx, bool with_fusion, bool with_homs) {
    const FiniteGroup& G = *ctx.group;
    json rep;
    json g;
    g["label"] = G.label;
    g["order"] = G.order;
    g["hash"] = group_hash(G);
    rep["group"] = g;
    rep["omega_class"] = ctx.omega_coords();
    rep["normalized_input"] = ctx.input_was_normalized;
    std::vector<std::vector<CenterObject>> per_class;
    for (size_t ci = 0; ci < ctx.classes.classes.size(); ++ci)
        per_class.push_back(enumerate_objects(ctx, static_cast<int>(ci)));
    auto labels = object_labels(ctx, per_class);
    json classes = json::array();
    for (size_t ci = 0; ci < per_class.size(); ++ci) {
        json c;
        c["h"] = ctx.classes.rep[ci];
        c["centralizer"] = ctx.centralizers[ci];
        c["tau_class"] = ctx.tau_coords(static_cast<int>(ci));
        c["count"] = per_class[ci].size();
        json objs = json::array();
        for (size_t k = 0; k < per_class[ci].size(); ++k) {
            const CenterObject& ob = per_class[ci][k];
            json o;
            o["h"] = ob.h;
            o["H"] = ob.H;
            o["psi"] = psi_to_json(ob.psi);
            o["label"] = labels[ci][k];
            objs.push_back(std::move(o));
        }
        c["objects"] = std::move(objs);
        classes.push_back(std::move(c));
    }
    rep["classes"] = std::move(classes);
    std::vector<const CenterObject*> flat;
    std::vector<std::string> flat_labels;
    for (size_t ci = 0; ci < per_class.size(); ++ci)
        for (size_t k = 0; k < per_class[ci].size(); ++k) {
            flat.push_back(&per_class[ci][k]);
            flat_labels.push_back(labels[ci][k]);
        }
    auto label_of = [&](const CenterObject& ob) -> std::string {
        for (size_t i = 0; i < flat.size(); ++i)
            if (are_equivalent(ctx, *flat[i], ob)) return flat_labels[i];
        return "?";
    };
    if (with_fusion) {
        json table = json::array();
        for (size_t i = 0; i < flat.size(); ++i)
            for (size_t j2 = 0; j2 < flat.size(); ++j2) {
                FusionResult fr = fuse(ctx, *flat[i], *flat[j2]);
                json entry;
                entry["left"] = flat_labels[i];
                entry["right"] = flat_labels[j2];
                json result = json::array();
                for (const auto& [ob, mult] : fr.merged) {
                    json s;
                    s["label"] = label_of(ob);
                    s["multiplicity"] = mult;
                    result.push_back(std::move(s));
                }
                entry["result"] = std::move(result);
                entry["conservation"] = fr.conservation_ok;
                table.push_back(std::move(entry));
            }
        rep["fusion_table"] = std::move(table);
    }
    if (with_homs) {
        json homs = json::array();
        for (size_t i = 0; i < flat.size(); ++i)
            for (size_t j2 = 0; j2 < flat.size(); ++j2) {
                HomCount hc = hom_simple_count(ctx, *flat[i], *flat[j2]);
                json e;
                e["a"] = flat_labels[i];
                e["b"] = flat_labels[j2];
                if (hc.ambiguous) e["count"] = "ambiguous";
                else e["count"] = hc.count;
                homs.push_back(std::move(e));
            }
        rep["homs"] = std::move(homs);
    }
    auto syl = sylleptic_center_summary(ctx);
    rep["sylleptic"] = json::array({syl.first, syl.second});
    return rep;
}

}  // namespace dwc
