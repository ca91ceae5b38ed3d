#pragma once
// Transgression of group cochains: slicing a degree-(k+1) cochain omega along a
// group element h yields a degree-k cochain tau_h(omega) on the centralizer of
// h.  Includes the conjugation-tracked variant theta, the six-term double
// insertion twist for products of grading elements, the transport corrector
// kappa, and defect evaluators for the identities these satisfy.

#include <algorithm>
#include <vector>

#include "dwc/cochain.hpp"
#include "dwc/group.hpp"

namespace dwc {

// tau_h(omega)(x1..xk) = sum_i (-1)^i omega(x1..xi, h, x_{i+1}..xk).
inline i64 transgress_value(const Cochain& om, int h, const std::vector<int>& args) {
    int k = static_cast<int>(args.size());
    std::vector<int> key(k + 1);
    i64 v = 0;
    int sign = 1;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j < i; ++j) key[j] = args[j];
        key[i] = h;
        for (int j = i; j < k; ++j) key[j + 1] = args[j];
        v += sign * om.at(key);
        sign = -sign;
    }
    return mod_norm(v, om.modulus);
}

// Conjugation-tracked insertion: slot i receives (x1..xi)^-1 h (x1..xi).
inline i64 transgress_tracked_value(const Cochain& om, int h, const std::vector<int>& args) {
    const FiniteGroup& G = *om.group;
    int k = static_cast<int>(args.size());
    std::vector<int> key(k + 1);
    i64 v = 0;
    int sign = 1, pre = 0;
    for (int i = 0; i <= k; ++i) {
        int hi = i > 0 ? G.conj(pre, h) : h;
        for (int j = 0; j < i; ++j) key[j] = args[j];
        key[i] = hi;
        for (int j = i; j < k; ++j) key[j + 1] = args[j];
        v += sign * om.at(key);
        sign = -sign;
        if (i < k) pre = G.mul(pre, args[i]);
    }
    return mod_norm(v, om.modulus);
}

// tau_h(omega) as a cochain of degree (deg omega - 1) on dom (typically a
// subgroup of the centralizer of h, where it is a cocycle for cocycle omega).
inline Cochain transgress(const Cochain& om, int h, const std::vector<int>& dom) {
    if (om.degree < 1) throw error(error::Kind::BadInput, "transgression needs degree >= 1");
    Cochain out(*om.group, dom, om.degree - 1, om.modulus);
    for (size_t idx = 0; idx < out.values.size(); ++idx)
        out.values[idx] = transgress_value(om, h, out.args_of(idx));
    return out;
}

inline Cochain transgress_tracked(const Cochain& om, int h, const std::vector<int>& dom) {
    if (om.degree < 1) throw error(error::Kind::BadInput, "transgression needs degree >= 1");
    Cochain out(*om.group, dom, om.degree - 1, om.modulus);
    for (size_t idx = 0; idx < out.values.size(); ++idx)
        out.values[idx] = transgress_tracked_value(om, h, out.args_of(idx));
    return out;
}

// Six-term double-insertion twist for a 4-cochain omega: the 2-cochain pairing
// the grading elements a and b against (x1, x2).
inline i64 double_insertion_twist_value(const Cochain& om, int a, int b, int x1, int x2) {
    if (om.degree != 4) throw error(error::Kind::BadInput, "double insertion twist needs degree 4");
    i64 v = -om.at({a, b, x1, x2}) + om.at({a, x1, b, x2}) - om.at({a, x1, x2, b})
            - om.at({x1, a, b, x2}) + om.at({x1, a, x2, b}) - om.at({x1, x2, a, b});
    return mod_norm(v, om.modulus);
}

inline Cochain double_insertion_twist(const Cochain& om, int a, int b, const std::vector<int>& dom) {
    Cochain out(*om.group, dom, 2, om.modulus);
    for (size_t idx = 0; idx < out.values.size(); ++idx) {
        std::vector<int> x = out.args_of(idx);
        out.values[idx] = double_insertion_twist_value(om, a, b, x[0], x[1]);
    }
    return out;
}

// kappa_{h,t}(x,y) = theta_h(t,x,y) - theta_h(txt^-1, t, y) + theta_h(txt^-1, tyt^-1, t),
// the 2-cochain with d kappa = tau_{t^-1 h t} - t^*(tau_h) on t^-1 C_G(h) t.
inline i64 kappa_value(const Cochain& om, int h, int t, int x, int y) {
    const FiniteGroup& G = *om.group;
    int ti = G.inv[t];
    int y1 = G.conj(ti, x);  // t x t^-1
    int y2 = G.conj(ti, y);
    i64 v = transgress_tracked_value(om, h, {t, x, y}) - transgress_tracked_value(om, h, {y1, t, y})
            + transgress_tracked_value(om, h, {y1, y2, t});
    return mod_norm(v, om.modulus);
}

inline Cochain kappa_cochain(const Cochain& om, int h, int t, const std::vector<int>& dom) {
    Cochain out(*om.group, dom, 2, om.modulus);
    for (size_t idx = 0; idx < out.values.size(); ++idx) {
        std::vector<int> x = out.args_of(idx);
        out.values[idx] = kappa_value(om, h, t, x[0], x[1]);
    }
    return out;
}

// 2-cochain c on dom with d c = tau_{t^-1 h t} - t^*(tau_h) there.  When the
// pullback already equals the transgression on dom the corrector is zero, so
// plain transport is used whenever it is exact (always, for abelian groups);
// otherwise kappa supplies the exact corrector.
inline Cochain transport_correction(const Cochain& om, int h, int t, const std::vector<int>& dom) {
    const FiniteGroup& G = *om.group;
    int a = G.conj(t, h);  // t^-1 h t
    int ti = G.inv[t];
    int nd = static_cast<int>(dom.size());
    bool plain_ok = true;
    std::vector<int> x(3), y(3);
    for (int i0 = 0; i0 < nd && plain_ok; ++i0)
        for (int i1 = 0; i1 < nd && plain_ok; ++i1)
            for (int i2 = 0; i2 < nd && plain_ok; ++i2) {
                x = {dom[i0], dom[i1], dom[i2]};
                for (int j = 0; j < 3; ++j) y[j] = G.conj(ti, x[j]);  // t x t^-1
                if (transgress_value(om, a, x) != transgress_value(om, h, y)) plain_ok = false;
            }
    if (plain_ok) return Cochain(G, dom, 2, om.modulus);
    return kappa_cochain(om, h, t, dom);
}

// Defect of the product identity for a 4-cocycle omega and commuting grading
// elements a, b on a subgroup dom of their joint centralizer:
//   tau_{ab} - tau_a - tau_b + d(double_insertion_twist) == 0.
inline Cochain product_slice_defect(const Cochain& om, int a, int b, const std::vector<int>& dom) {
    const FiniteGroup& G = *om.group;
    Cochain lhs = transgress(om, G.mul(a, b), dom);
    lhs = sub(lhs, transgress(om, a, dom));
    lhs = sub(lhs, transgress(om, b, dom));
    return add(lhs, coboundary(double_insertion_twist(om, a, b, dom)));
}

// Defect of d(tau_h omega) on dom: zero for cocycle omega and dom inside the
// centralizer of h.
inline Cochain transgression_cocycle_defect(const Cochain& om, int h, const std::vector<int>& dom) {
    return coboundary(transgress(om, h, dom));
}

// Defect of d kappa - (tau_{t^-1 h t} - t^*(tau_h)) on dom.
inline Cochain kappa_defect(const Cochain& om, int h, int t, const std::vector<int>& dom) {
    const FiniteGroup& G = *om.group;
    int a = G.conj(t, h);
    Cochain lhs = coboundary(kappa_cochain(om, h, t, dom));
    lhs = sub(lhs, transgress(om, a, dom));
    Cochain pulled(G, dom, 3, om.modulus);
    int ti = G.inv[t];
    for (size_t idx = 0; idx < pulled.values.size(); ++idx) {
        std::vector<int> args = pulled.args_of(idx);
        for (auto& v : args) v = G.conj(ti, v);
        pulled.values[idx] = transgress_value(om, h, args);
    }
    return add(lhs, pulled);
}

// Five-term consistency of the tracked transgression for a 4-cocycle omega:
//   theta_{g^-1 h g}(g',g'',g''') - theta_h(gg',g'',g''') + theta_h(g,g'g'',g''')
//   - theta_h(g,g',g''g''') + theta_h(g,g',g'') == 0.
inline i64 twisted_cocycle_defect(const Cochain& om, int h, int g, int gp, int gpp, int gppp) {
    const FiniteGroup& G = *om.group;
    if (om.degree != 4) throw error(error::Kind::BadInput, "twisted cocycle defect needs degree 4");
    i64 v = transgress_tracked_value(om, G.conj(g, h), {gp, gpp, gppp})
            - transgress_tracked_value(om, h, {G.mul(g, gp), gpp, gppp})
            + transgress_tracked_value(om, h, {g, G.mul(gp, gpp), gppp})
            - transgress_tracked_value(om, h, {g, gp, G.mul(gpp, gppp)})
            + transgress_tracked_value(om, h, {g, gp, gpp});
    return mod_norm(v, om.modulus);
}

// Max additive distance from zero of the product identity over (H cap H')^3.
inline i64 lemma_identity_defect(const Cochain& om, int h, int hp, const std::vector<int>& H,
                                 const std::vector<int>& Hp) {
    std::vector<int> dom;
    for (int x : H)
        if (std::find(Hp.begin(), Hp.end(), x) != Hp.end()) dom.push_back(x);
    Cochain d = product_slice_defect(om, h, hp, dom);
    i64 m = 0;
    for (i64 v : d.values) {
        i64 dist = v < om.modulus - v ? v : om.modulus - v;
        if (dist > m) m = dist;
    }
    return m;
}

inline bool all_zero(const Cochain& c) {
    for (i64 v : c.values)
        if (v != 0) return false;
    return true;
}

}  // namespace dwc
