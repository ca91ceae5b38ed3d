#pragma once
// The center of the 2-category of omega-twisted G-graded 2-vector spaces,
// computed as data: simple objects A(h, H, psi) with d psi = -tau_h(omega)|_H,
// equivalence, enumeration by H^2-torsor orbits, fusion over double cosets with
// the six-term twist, hom-category simple counts by beta-regular classes,
// braiding swap predicates, and the sylleptic-center computation.
//
// All cochains attached to a context live at one work modulus: a multiple of
// |G| times the input modulus, large enough that every class trivial over Q/Z
// trivializes without further escalation (transfer bound).

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "dwc/cochain.hpp"
#include "dwc/cohomology.hpp"
#include "dwc/group.hpp"
#include "dwc/intlin.hpp"
#include "dwc/transgression.hpp"

namespace dwc {

class CenterContext {
public:
    const FiniteGroup* group = nullptr;
    Cochain omega;          // normalized 4-cocycle at the work modulus
    i64 base_modulus = 0;   // modulus of the input cocycle
    i64 work_modulus = 0;
    bool input_was_normalized = true;
    ConjClassTable classes;
    std::vector<std::vector<int>> centralizers;  // per class, of the min rep
    std::vector<Cochain> tau;                    // per class: tau_{rep}(omega) on the centralizer

    CenterContext(const FiniteGroup& G, const Cochain& omega_in) : group(&G) {
        if (omega_in.group != &G || omega_in.degree != 4 ||
            omega_in.dom.size() != static_cast<size_t>(G.order))
            throw error(error::Kind::BadInput, "context needs a 4-cochain on the full group");
        if (!is_cocycle(omega_in)) throw error(error::Kind::NotACocycle, "context cochain is not closed");
        base_modulus = omega_in.modulus;
        work_modulus = lcm_i64(base_modulus, G.order) * G.order;
        input_was_normalized = is_normalized(omega_in);
        Cochain om = input_was_normalized ? omega_in : normalize_cocycle(omega_in).z;
        omega = om.with_modulus(work_modulus);
        classes = conjugacy_classes(G);
        for (size_t ci = 0; ci < classes.classes.size(); ++ci) {
            centralizers.push_back(G.centralizer(classes.rep[ci]));
            tau.push_back(transgress(omega, classes.rep[ci], centralizers.back()));
        }
    }

    CenterContext(const CenterContext&) = delete;

    const CohomologyGroup& cohomology_of(const std::vector<int>& dom, int deg) const {
        auto key = std::make_pair(dom, deg);
        auto it = coh_cache_.find(key);
        if (it == coh_cache_.end())
            it = coh_cache_.emplace(key, CohomologyGroup(*group, dom, deg, work_modulus)).first;
        return it->second;
    }

    // Class coordinates of tau_{rep} in H^3 of the centralizer.
    const std::vector<i64>& tau_coords(int ci) const {
        auto it = tau_coords_.find(ci);
        if (it == tau_coords_.end())
            it = tau_coords_.emplace(ci, cohomology_of(centralizers[ci], 3).class_coords(tau[ci])).first;
        return it->second;
    }

    // Class coordinates of omega in H^4(G).
    const std::vector<i64>& omega_coords() const {
        if (!omega_coords_) {
            std::vector<int> full(group->order);
            for (int i = 0; i < group->order; ++i) full[i] = i;
            omega_coords_ = cohomology_of(full, 4).class_coords(omega);
        }
        return *omega_coords_;
    }

    Cochain correction(int h, int t, const std::vector<int>& dom) const {
        return transport_correction(omega, h, t, dom);
    }

private:
    mutable std::map<std::pair<std::vector<int>, int>, CohomologyGroup> coh_cache_;
    mutable std::map<int, std::vector<i64>> tau_coords_;
    mutable std::optional<std::vector<i64>> omega_coords_;
};

struct CenterObject {
    const CenterContext* ctx = nullptr;
    int h = 0;
    std::vector<int> H;  // sorted subgroup of C_G(h)
    Cochain psi;         // 2-cochain on H at the work modulus
};

inline void require_same_context(const CenterContext& ctx, const CenterObject& ob) {
    if (ob.ctx != &ctx) throw error(error::Kind::ContextMismatch, "object belongs to a different context");
}

// Exact check of d psi = -tau_h(omega)|_H (plus membership conditions).
inline bool object_is_valid(const CenterContext& ctx, const CenterObject& ob) {
    const FiniteGroup& G = *ctx.group;
    for (int x : ob.H)
        if (!G.commutes(x, ob.h)) return false;
    Cochain defect = add(coboundary(ob.psi), transgress(ctx.omega, ob.h, ob.H));
    return all_zero(defect);
}

// Equivalent presentation at grading element t^-1 h t; exact by construction.
inline CenterObject transport(const CenterContext& ctx, const CenterObject& ob, int t) {
    const FiniteGroup& G = *ctx.group;
    int a = G.conj(t, ob.h);
    Cochain psi = conj_pullback(ob.psi, t);
    psi = sub(psi, ctx.correction(ob.h, t, psi.dom));
    return CenterObject{&ctx, a, psi.dom, std::move(psi)};
}

// Move the object to the minimal class representative of its grading element.
inline CenterObject to_class_rep(const CenterContext& ctx, const CenterObject& ob) {
    const FiniteGroup& G = *ctx.group;
    int r = ctx.classes.rep[ctx.classes.class_of[ob.h]];
    if (ob.h == r) return ob;
    for (int t = 0; t < G.order; ++t)
        if (G.conj(t, ob.h) == r) return transport(ctx, ob, t);
    throw error(error::Kind::BadInput, "internal: class representative unreachable");
}

// Validates and canonicalizes (h, H, psi) into a CenterObject.
inline CenterObject validate_object(const CenterContext& ctx, int h, const std::vector<int>& H,
                                    const Cochain& psi_in) {
    const FiniteGroup& G = *ctx.group;
    if (h < 0 || h >= G.order) throw error(error::Kind::BadInput, "grading element out of range");
    Subgroup sub(G, H);  // throws NotSubgroup when not closed
    for (int x : sub.elems)
        if (!G.commutes(x, h))
            throw error(error::Kind::NotInCentralizer,
                        "element " + std::to_string(x) + " does not centralize " + std::to_string(h));
    if (psi_in.degree != 2 || psi_in.dom != sub.elems)
        throw error(error::Kind::BadInput, "psi must be a 2-cochain on H");
    if (ctx.work_modulus % psi_in.modulus != 0)
        throw error(error::Kind::BadInput, "psi modulus incompatible with context");
    Cochain psi = psi_in.with_modulus(ctx.work_modulus);
    Cochain defect = add(coboundary(psi), transgress(ctx.omega, h, sub.elems));
    for (size_t idx = 0; idx < defect.values.size(); ++idx)
        if (defect.values[idx] != 0) {
            std::vector<int> args = defect.args_of(idx);
            std::string at;
            for (size_t i = 0; i < args.size(); ++i) at += (i ? "," : "(") + std::to_string(args[i]);
            throw error(error::Kind::TwistMismatch, "d psi does not match the transgression at " + at + ")");
        }
    CenterObject ob{&ctx, h, sub.elems, std::move(psi)};
    return to_class_rep(ctx, ob);
}

inline bool are_equivalent(const CenterContext& ctx, const CenterObject& A, const CenterObject& B) {
    require_same_context(ctx, A);
    require_same_context(ctx, B);
    const FiniteGroup& G = *ctx.group;
    if (ctx.classes.class_of[A.h] != ctx.classes.class_of[B.h]) return false;
    CenterObject A1 = to_class_rep(ctx, A);
    CenterObject B1 = to_class_rep(ctx, B);
    for (int g : G.centralizer(A1.h)) {
        std::vector<int> Hg;
        Hg.reserve(A1.H.size());
        for (int x : A1.H) Hg.push_back(G.conj(g, x));
        std::sort(Hg.begin(), Hg.end());
        if (Hg != B1.H) continue;
        CenterObject A2 = transport(ctx, A1, g);
        Cochain z = sub(B1.psi, A2.psi);
        if (!is_cocycle(z)) continue;
        if (ctx.cohomology_of(B1.H, 2).is_coboundary(z)) return true;
    }
    return false;
}

// All pairwise inequivalent objects graded by the given conjugacy class:
// per conjugacy class (under the centralizer C) of admissible subgroup H, a
// base trivialization psi0 plus one representative per orbit of H^2(H)
// coordinates under the normalizer action.
inline std::vector<CenterObject> enumerate_objects(const CenterContext& ctx, int class_idx) {
    const FiniteGroup& G = *ctx.group;
    int h = ctx.classes.rep[class_idx];
    const std::vector<int>& C = ctx.centralizers[class_idx];
    std::set<int> Cset(C.begin(), C.end());
    std::vector<Subgroup> subs = subgroups_of(G, Subgroup(G, C));
    std::vector<std::vector<Subgroup>> sub_classes = subgroup_conj_classes(G, subs, C);
    std::vector<CenterObject> out;
    for (const auto& scls : sub_classes) {
        const std::vector<int>& H = scls.front().elems;
        Cochain tauH = transgress(ctx.omega, h, H);
        Cochain mtau = tauH;
        for (auto& v : mtau.values) v = mod_norm(-v, mtau.modulus);
        auto triv = trivialize(mtau);
        if (!triv) continue;  // tau_h(omega)|_H nontrivial: no objects on this H
        if (triv->psi.modulus != ctx.work_modulus)
            throw error(error::Kind::BadInput, "internal: trivialization escaped the work modulus");
        Cochain psi0 = triv->psi;
        const CohomologyGroup& coh = ctx.cohomology_of(H, 2);
        if (coh.class_count() > kMaxEnumeratedClasses)
            throw error(error::Kind::TooManyClasses, "object torsor too large to enumerate");
        // normalizer of H inside C
        std::vector<int> Ncl;
        for (int g : C) {
            std::vector<int> Hg;
            Hg.reserve(H.size());
            for (int x : H) Hg.push_back(G.conj(g, x));
            std::sort(Hg.begin(), Hg.end());
            if (Hg == H) Ncl.push_back(g);
        }
        // action of each normalizer element on H^2 coordinates: affine map
        // c -> shift + c * basis_matrix
        struct Act {
            std::vector<i64> shift;
            std::vector<std::vector<i64>> bas;
        };
        std::vector<Act> acts;
        for (int g : Ncl) {
            Act a;
            Cochain shift_ch = sub(sub(conj_pullback(psi0, g), ctx.correction(h, g, H)), psi0);
            a.shift = coh.class_coords(shift_ch);
            for (const Cochain& b : coh.basis) a.bas.push_back(coh.class_coords(conj_pullback(b, g)));
            acts.push_back(std::move(a));
        }
        const std::vector<i64>& fac = coh.invariant_factors;
        int nf = static_cast<int>(fac.size());
        std::set<std::vector<i64>> done;
        std::vector<std::vector<i64>> orbit_reps;
        std::vector<i64> c0(nf, 0);
        for (;;) {
            // next unvisited coordinate tuple in mixed-radix order
            std::set<std::vector<i64>> orb;
            std::vector<std::vector<i64>> stack{c0};
            while (!stack.empty()) {
                std::vector<i64> c = stack.back();
                stack.pop_back();
                if (!orb.insert(c).second) continue;
                for (const Act& a : acts) {
                    std::vector<i64> img = a.shift;
                    for (int i = 0; i < nf; ++i)
                        for (int k = 0; k < nf; ++k) img[k] = mod_norm(img[k] + c[i] * a.bas[i][k], fac[k]);
                    if (!orb.count(img)) stack.push_back(img);
                }
            }
            orbit_reps.push_back(*orb.begin());
            done.insert(orb.begin(), orb.end());
            // advance c0 to the next tuple not yet visited
            bool found = false;
            while (!found) {
                int i = nf - 1;
                for (; i >= 0; --i) {
                    if (++c0[i] < fac[i]) break;
                    c0[i] = 0;
                }
                if (i < 0) break;
                if (!done.count(c0)) found = true;
            }
            if (!found) break;
        }
        std::sort(orbit_reps.begin(), orbit_reps.end());
        for (const auto& c : orbit_reps) {
            Cochain psi = psi0;
            for (int i = 0; i < nf; ++i)
                if (c[i])
                    for (size_t k = 0; k < psi.values.size(); ++k)
                        psi.values[k] = mod_norm(psi.values[k] + c[i] * coh.basis[i].values[k],
                                                 psi.modulus);
            out.push_back(CenterObject{&ctx, h, H, std::move(psi)});
        }
    }
    return out;
}

inline i64 count_objects(const CenterContext& ctx, int class_idx) {
    return static_cast<i64>(enumerate_objects(ctx, class_idx).size());
}

struct FusionResult {
    std::vector<CenterObject> summands;                    // one per double coset, in rep order
    std::vector<std::pair<CenterObject, int>> merged;      // equivalence classes with multiplicity
    i64 component_count = 0;                               // sum of |H_t \ G|
    i64 expected_components = 0;                           // |H \ G| * |H' \ G|
    bool conservation_ok = false;
};

// Fusion A (x) B: one summand per double coset t in H_A \ G / H_B with
//   h_t = (t^-1 h_A t) h_B,  H_t = t^-1 H_A t  cap  H_B,
//   psi_t = t^*(psi_A)|_{H_t} + psi_B|_{H_t} + twist(omega; t^-1 h_A t, h_B) - c_t,
// where c_t is the transport corrector (zero whenever plain pullback is exact,
// in particular for abelian G).
inline FusionResult fuse(const CenterContext& ctx, const CenterObject& A, const CenterObject& B) {
    require_same_context(ctx, A);
    require_same_context(ctx, B);
    const FiniteGroup& G = *ctx.group;
    FusionResult res;
    DoubleCosets dc = double_cosets(G, Subgroup(G, A.H), Subgroup(G, B.H));
    std::set<int> Bset(B.H.begin(), B.H.end());
    for (int t : dc.reps) {
        int a = G.conj(t, A.h);
        int ht = G.mul(a, B.h);
        std::vector<int> Ht;
        for (int x : A.H)
            if (Bset.count(G.conj(t, x))) Ht.push_back(G.conj(t, x));
        std::sort(Ht.begin(), Ht.end());
        Cochain psi = restrict_cochain(conj_pullback(A.psi, t), Ht);
        psi = add(psi, restrict_cochain(B.psi, Ht));
        psi = add(psi, double_insertion_twist(ctx.omega, a, B.h, Ht));
        psi = sub(psi, ctx.correction(A.h, t, Ht));
        res.summands.push_back(CenterObject{&ctx, ht, Ht, std::move(psi)});
        res.component_count += G.order / static_cast<i64>(Ht.size());
    }
    res.expected_components =
        (G.order / static_cast<i64>(A.H.size())) * (G.order / static_cast<i64>(B.H.size()));
    res.conservation_ok = res.component_count == res.expected_components;
    for (const CenterObject& s : res.summands) {
        bool placed = false;
        for (auto& entry : res.merged)
            if (are_equivalent(ctx, entry.first, s)) {
                ++entry.second;
                placed = true;
                break;
            }
        if (!placed) res.merged.emplace_back(s, 1);
    }
    return res;
}

// Number of beta-regular conjugacy classes of the subgroup Ht under the
// 2-cocycle beta (classes x with beta(x,g) = beta(g,x) for all g in C_Ht(x)).
inline i64 beta_regular_classes(const FiniteGroup& G, const std::vector<int>& Ht, const Cochain& beta) {
    std::set<int> seen;
    i64 cnt = 0;
    for (int x : Ht) {
        if (seen.count(x)) continue;
        for (int g : Ht) seen.insert(G.conj(g, x));
        bool regular = true;
        for (int g : Ht) {
            if (!G.commutes(g, x)) continue;
            if (beta.at({x, g}) != beta.at({g, x})) { regular = false; break; }
        }
        if (regular) ++cnt;
    }
    return cnt;
}

struct HomCount {
    bool ambiguous = false;  // the twist corrector's coboundary class changes the count
    i64 count = 0;
};

// Number of simple summands of Hom(A,B): sum over double cosets t of
// H_A \ C_G(h) / H_B of the beta_t-regular class count of H_t, with
// beta_t = -t^*(psi_A) + psi_B + c_t.
inline HomCount hom_simple_count(const CenterContext& ctx, const CenterObject& A, const CenterObject& B) {
    require_same_context(ctx, A);
    require_same_context(ctx, B);
    const FiniteGroup& G = *ctx.group;
    if (ctx.classes.class_of[A.h] != ctx.classes.class_of[B.h]) return {false, 0};
    CenterObject A1 = to_class_rep(ctx, A);
    CenterObject B1 = to_class_rep(ctx, B);
    int h = A1.h;
    std::vector<int> C = G.centralizer(h);
    // double cosets H_A \ C / H_B inside the centralizer
    std::set<int> seen;
    std::vector<int> reps;
    for (int g : C) {
        if (seen.count(g)) continue;
        std::set<int> cos;
        for (int x : A1.H)
            for (int y : B1.H) cos.insert(G.mul(x, g, y));
        reps.push_back(*cos.begin());
        seen.insert(cos.begin(), cos.end());
    }
    std::sort(reps.begin(), reps.end());
    std::set<int> Bset(B1.H.begin(), B1.H.end());
    HomCount out;
    for (int t : reps) {
        std::vector<int> Ht;
        for (int x : A1.H)
            if (Bset.count(G.conj(t, x))) Ht.push_back(G.conj(t, x));
        std::sort(Ht.begin(), Ht.end());
        Cochain beta = restrict_cochain(conj_pullback(A1.psi, t), Ht);
        for (auto& v : beta.values) v = mod_norm(-v, beta.modulus);
        beta = add(beta, restrict_cochain(B1.psi, Ht));
        Cochain corr = ctx.correction(h, t, Ht);
        beta = add(beta, corr);
        out.count += beta_regular_classes(G, Ht, beta);
        if (!all_zero(corr)) {
            // the corrector is only canonical up to a coboundary class; scan
            // whether another class choice would change the count
            const CohomologyGroup& coh = ctx.cohomology_of(Ht, 2);
            if (!coh.invariant_factors.empty()) {
                i64 base = beta_regular_classes(G, Ht, beta);
                std::vector<i64> c(coh.invariant_factors.size(), 0);
                for (;;) {
                    int i = static_cast<int>(c.size()) - 1;
                    for (; i >= 0; --i) {
                        if (++c[i] < coh.invariant_factors[i]) break;
                        c[i] = 0;
                    }
                    if (i < 0) break;
                    Cochain b2 = beta;
                    for (size_t k = 0; k < c.size(); ++k)
                        if (c[k])
                            for (size_t j = 0; j < b2.values.size(); ++j)
                                b2.values[j] = mod_norm(b2.values[j] + c[k] * coh.basis[k].values[j],
                                                        b2.modulus);
                    if (beta_regular_classes(G, Ht, b2) != base) {
                        out.ambiguous = true;
                        return out;
                    }
                }
            }
        }
    }
    return out;
}

// True iff right multiplication by every element of B's grading class fixes
// every right coset H_A x (the component permutation of the braiding is the
// identity).
inline bool braiding_is_plain_swap(const CenterContext& ctx, const CenterObject& A,
                                   const CenterObject& B) {
    require_same_context(ctx, A);
    require_same_context(ctx, B);
    const FiniteGroup& G = *ctx.group;
    std::set<int> Hset(A.H.begin(), A.H.end());
    for (int g : ctx.classes.classes[ctx.classes.class_of[B.h]])
        for (int x = 0; x < G.order; ++x)
            if (!Hset.count(G.mul(x, g, G.inv[x]))) return false;  // H x g != H x
    return true;
}

// True iff the braiding restricted to the grading-1 sector is a plain swap in
// both orders for every pair of objects.
inline bool grading1_symmetry_check(const CenterContext& ctx) {
    int ci = ctx.classes.class_of[0];
    std::vector<CenterObject> objs = enumerate_objects(ctx, ci);
    for (const CenterObject& A : objs)
        for (const CenterObject& B : objs)
            if (!braiding_is_plain_swap(ctx, A, B) || !braiding_is_plain_swap(ctx, B, A)) return false;
    return true;
}

// Sylleptic center data: candidates are A(1, G, psi) with psi in Z^2(G); a
// class survives the syllepsis constraint iff its commuting-pair alternating
// form vanishes, which forces it to be a coboundary — one object.  The unit's
// endomorphisms collapse to the classes acting trivially by right
// multiplication, i.e. the identity class alone.
inline std::pair<i64, i64> sylleptic_center_summary(const CenterContext& ctx) {
    const FiniteGroup& G = *ctx.group;
    std::vector<int> full(G.order);
    for (int i = 0; i < G.order; ++i) full[i] = i;
    const CohomologyGroup& coh = ctx.cohomology_of(full, 2);
    std::vector<Cochain> reps = enumerate_classes(coh);
    i64 object_count = 0;
    for (const Cochain& psi : reps) {
        bool symmetric = true;
        for (int x = 0; x < G.order && symmetric; ++x)
            for (int y = 0; y < G.order && symmetric; ++y)
                if (G.commutes(x, y) && psi.at({x, y}) != psi.at({y, x})) symmetric = false;
        if (symmetric && coh.is_coboundary(psi)) ++object_count;
    }
    i64 unit_endos = 0;
    for (size_t ci = 0; ci < ctx.classes.classes.size(); ++ci) {
        int g = ctx.classes.rep[ci];
        bool trivial = true;
        for (int x = 0; x < G.order && trivial; ++x)
            if (G.mul(x, g) != x) trivial = false;
        if (trivial) ++unit_endos;
    }
    return {object_count, unit_endos};
}

}  // namespace dwc
