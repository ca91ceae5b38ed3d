#pragma once
// Exact cochain algebra for C^n(G, k^x) in additive form: a value v at modulus
// M stands for the root of unity exp(2*pi*i*v/M), so the paper's multiplicative
// formulas become addition mod M.  Cochains live on a subgroup domain of a
// parent group and are stored densely with mixed-radix indexing.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dwc/group.hpp"
#include "dwc/intlin.hpp"

namespace dwc {

struct Cochain {
    const FiniteGroup* group = nullptr;
    std::vector<int> dom;      // sorted element list (subgroup or full group)
    std::vector<int> pos;      // element -> position in dom, -1 if absent
    int degree = 0;
    i64 modulus = 1;
    std::vector<i64> values;   // length |dom|^degree

    Cochain() = default;
    Cochain(const FiniteGroup& G, std::vector<int> domain, int deg, i64 M)
        : group(&G), dom(std::move(domain)), degree(deg), modulus(M) {
        pos.assign(G.order, -1);
        for (int i = 0; i < static_cast<int>(dom.size()); ++i) pos[dom[i]] = i;
        size_t n = 1;
        for (int i = 0; i < deg; ++i) n *= dom.size();
        values.assign(n, 0);
    }
    static Cochain zero(const FiniteGroup& G, std::vector<int> domain, int deg, i64 M) {
        return Cochain(G, std::move(domain), deg, M);
    }

    int dn() const { return static_cast<int>(dom.size()); }

    size_t index(const std::vector<int>& args) const {
        size_t v = 0;
        for (int a : args) v = v * dom.size() + static_cast<size_t>(pos[a]);
        return v;
    }
    i64 at(const std::vector<int>& args) const { return values[index(args)]; }
    void set(const std::vector<int>& args, i64 v) { values[index(args)] = mod_norm(v, modulus); }

    // Decode a flat index into the argument tuple (element ids).
    std::vector<int> args_of(size_t idx) const {
        std::vector<int> out(degree);
        for (int i = degree - 1; i >= 0; --i) {
            out[i] = dom[idx % dom.size()];
            idx /= dom.size();
        }
        return out;
    }

    void reduce() {
        for (auto& v : values) v = mod_norm(v, modulus);
    }

    // Same cochain at a larger modulus M2 (a multiple of modulus): values scale
    // by M2/modulus so the represented root of unity is unchanged.
    Cochain with_modulus(i64 M2) const {
        if (M2 == modulus) return *this;
        if (M2 % modulus != 0)
            throw error(error::Kind::BadInput, "modulus escalation must be to a multiple");
        Cochain out = *this;
        i64 s = M2 / modulus;
        out.modulus = M2;
        for (auto& v : out.values) v *= s;
        return out;
    }

    bool same_domain(const Cochain& o) const {
        return group == o.group && dom == o.dom && degree == o.degree;
    }
};

// Pointwise combination at the lcm modulus.
inline Cochain add(const Cochain& a, const Cochain& b, i64 sb = 1) {
    if (!a.same_domain(b)) throw error(error::Kind::BadInput, "cochain domain mismatch");
    i64 M = lcm_i64(a.modulus, b.modulus);
    Cochain x = a.with_modulus(M), y = b.with_modulus(M);
    for (size_t i = 0; i < x.values.size(); ++i)
        x.values[i] = mod_norm(static_cast<i128>(x.values[i]) + static_cast<i128>(sb) * y.values[i], M);
    return x;
}
inline Cochain sub(const Cochain& a, const Cochain& b) { return add(a, b, -1); }

// Bar-resolution coboundary:
// (dc)(g1..g_{n+1}) = c(g2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{n+1} c(..g_n).
inline Cochain coboundary(const Cochain& c) {
    const FiniteGroup& G = *c.group;
    Cochain out(G, c.dom, c.degree + 1, c.modulus);
    int n = c.degree;
    std::vector<int> args(n + 1), key(n);
    for (size_t idx = 0; idx < out.values.size(); ++idx) {
        args = out.args_of(idx);
        i64 v = 0;
        if (n == 0) {
            // d of a 0-cochain vanishes
            out.values[idx] = 0;
            continue;
        }
        for (int i = 0; i < n; ++i) key[i] = args[i + 1];
        v += c.at(key);
        int sign = 1;
        for (int i = 1; i <= n; ++i) {
            sign = -sign;
            for (int k = 0; k < n; ++k) key[k] = args[k];
            key[i - 1] = G.mul(args[i - 1], args[i]);
            for (int k = i; k < n; ++k) key[k] = args[k + 1];
            v += sign * c.at(key);
        }
        sign = -sign;
        for (int k = 0; k < n; ++k) key[k] = args[k];
        v += sign * c.at(key);
        out.values[idx] = mod_norm(v, c.modulus);
    }
    return out;
}

inline bool is_cocycle(const Cochain& c) {
    Cochain d = coboundary(c);
    for (i64 v : d.values)
        if (v != 0) return false;
    return true;
}

inline bool is_normalized(const Cochain& c) {
    for (size_t idx = 0; idx < c.values.size(); ++idx) {
        if (c.values[idx] == 0) continue;
        std::vector<int> args = c.args_of(idx);
        for (int a : args)
            if (a == 0) return false;
    }
    return true;
}

inline Cochain restrict_cochain(const Cochain& c, const std::vector<int>& sub) {
    for (int x : sub)
        if (c.pos[x] < 0) throw error(error::Kind::NotSubgroup, "restriction target not inside domain");
    Cochain out(*c.group, sub, c.degree, c.modulus);
    for (size_t idx = 0; idx < out.values.size(); ++idx)
        out.values[idx] = c.at(out.args_of(idx));
    return out;
}

// (t^* c)(x1,..,xn) = c(t x1 t^-1, .., t xn t^-1), defined on t^-1 dom t.
inline Cochain conj_pullback(const Cochain& c, int t) {
    const FiniteGroup& G = *c.group;
    std::vector<int> nd;
    nd.reserve(c.dom.size());
    for (int x : c.dom) nd.push_back(G.conj(t, x));
    std::sort(nd.begin(), nd.end());
    Cochain out(G, nd, c.degree, c.modulus);
    int ti = G.inv[t];
    std::vector<int> key(c.degree);
    for (size_t idx = 0; idx < out.values.size(); ++idx) {
        std::vector<int> args = out.args_of(idx);
        for (int i = 0; i < c.degree; ++i) key[i] = G.conj(ti, args[i]);  // t x t^-1
        out.values[idx] = c.at(key);
    }
    return out;
}

inline Cochain random_cochain(const FiniteGroup& G, std::vector<int> dom, int deg, i64 M,
                              std::mt19937_64& rng, bool normalized = true) {
    Cochain c(G, std::move(dom), deg, M);
    std::uniform_int_distribution<i64> dist(0, M - 1);
    for (size_t idx = 0; idx < c.values.size(); ++idx) {
        if (normalized) {
            std::vector<int> args = c.args_of(idx);
            bool degen = false;
            for (int a : args)
                if (a == 0) { degen = true; break; }
            if (degen) continue;
        }
        c.values[idx] = dist(rng);
    }
    return c;
}

// Random normalized n-cocycle as the coboundary of a random normalized
// (n-1)-cochain (always a coboundary class, but exercises every formula).
inline Cochain random_coboundary_cocycle(const FiniteGroup& G, std::vector<int> dom, int deg, i64 M,
                                         std::mt19937_64& rng) {
    Cochain lam = random_cochain(G, std::move(dom), deg - 1, M, rng, true);
    return coboundary(lam);
}

}  // namespace dwc
