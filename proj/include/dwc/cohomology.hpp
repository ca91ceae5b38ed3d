#pragma once
// Group cohomology H^n(G, k^x) in the additive Z/M model, via a lattice
// quotient computed with Smith normal form:
//   Lam_Z = {integer vectors z : d_n z == 0 mod M}        (cocycles)
//   Lam_B = {z : |G| z lies in  col(d_{n-1}) + M|G| Z^N } (classes trivial in Q/Z)
// H^n = Lam_Z / Lam_B.  Scaling by |G| in Lam_B implements the transfer bound:
// every class is |G|-torsion, so triviality over Q/Z is decided at modulus M|G|.
// Also provides trivialization, normalization, and class enumeration.

#include <optional>
#include <vector>

#include "dwc/cochain.hpp"
#include "dwc/group.hpp"
#include "dwc/intlin.hpp"

namespace dwc {

constexpr long long kDefaultCohomologySizeBudget = 40000;  // |dom|^{n+1} cap
constexpr int kMaxEnumeratedClasses = 256;

// Runtime-adjustable budget (CLI --budget flag).
inline long long& cohomology_size_budget() {
    static long long budget = kDefaultCohomologySizeBudget;
    return budget;
}

// Dense coboundary matrix of d: C^deg -> C^{deg+1} on the given domain,
// returned row by row through a callback (rows can be huge in number).
template <typename RowFn>
void for_each_coboundary_row(const FiniteGroup& G, const std::vector<int>& dom, int deg, RowFn fn) {
    int nd = static_cast<int>(dom.size());
    std::vector<int> posv(G.order, -1);
    for (int i = 0; i < nd; ++i) posv[dom[i]] = i;
    size_t ncols = 1, nrows = 1;
    for (int i = 0; i < deg; ++i) ncols *= nd;
    for (int i = 0; i < deg + 1; ++i) nrows *= nd;
    std::vector<int> args(deg + 1), key(deg);
    std::vector<i64> row;
    auto enc = [&](const std::vector<int>& a) {
        size_t v = 0;
        for (int x : a) v = v * nd + static_cast<size_t>(posv[x]);
        return v;
    };
    for (size_t r = 0; r < nrows; ++r) {
        size_t tmp = r;
        for (int i = deg; i >= 0; --i) {
            args[i] = dom[tmp % nd];
            tmp /= nd;
        }
        row.assign(ncols, 0);
        if (deg > 0) {
            for (int k = 0; k < deg; ++k) key[k] = args[k + 1];
            row[enc(key)] += 1;
            int sign = 1;
            for (int i = 1; i <= deg; ++i) {
                sign = -sign;
                for (int k = 0; k < deg; ++k) key[k] = args[k];
                key[i - 1] = G.mul(args[i - 1], args[i]);
                for (int k = i; k < deg; ++k) key[k] = args[k + 1];
                row[enc(key)] += sign;
            }
            sign = -sign;
            for (int k = 0; k < deg; ++k) key[k] = args[k];
            row[enc(key)] += sign;
        }
        fn(row);
    }
}

class CohomologyGroup {
public:
    const FiniteGroup* group = nullptr;
    std::vector<int> dom;
    int degree = 0;
    i64 modulus = 0;
    std::vector<i64> invariant_factors;  // each > 1, divisibility chain
    std::vector<Cochain> basis;          // representative cocycles, coords = unit vectors

    CohomologyGroup() = default;

    CohomologyGroup(const FiniteGroup& G, std::vector<int> domain, int deg, i64 M)
        : group(&G), dom(std::move(domain)), degree(deg), modulus(M) {
        int nd = static_cast<int>(dom.size());
        if (M % nd != 0)
            throw error(error::Kind::BadInput, "cohomology modulus must be a multiple of the group order");
        long long sz = 1;
        for (int i = 0; i < deg + 1; ++i) {
            sz *= nd;
            if (sz > cohomology_size_budget())
                throw error(error::Kind::SizeBudgetExceeded,
                            "cohomology budget |G|^(n+1) <= " + std::to_string(cohomology_size_budget()) + " exceeded");
        }
        size_t N = 1;
        for (int i = 0; i < deg; ++i) N *= nd;
        N_ = static_cast<int>(N);
        i64 g = nd;
        i64 U = M * g;

        // Lam_Z: kernel of d_deg mod M as T * diag(Delta) with S*H*T = D.
        TriangularLattice HZ(N_, M);
        for_each_coboundary_row(G, dom, deg, [&](const std::vector<i64>& row) { HZ.insert(row); });
        IntMat H(N_, N_);
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j) H.at(i, j) = HZ.rows()[i][j];
        SmithResult sh = smith_normal_form(H, kNeedT | kNeedTinv, M);
        Tz_ = std::move(sh.T);
        Tzinv_ = std::move(sh.Tinv);
        Delta_.resize(N_);
        for (int i = 0; i < N_; ++i) {
            i64 d = i < static_cast<int>(sh.diag.size()) ? sh.diag[i] : 0;
            Delta_[i] = M / gcd_i64(d, M);  // d == 0 (mod M): no constraint, Delta = 1
        }

        // Lam_B basis: columns of d_{deg-1} together with U*I, then the
        // sublattice whose |G|-divisible part we keep.
        TriangularLattice HB(N_, U);
        if (deg >= 1) {
            size_t ncols_prev = 1;
            for (int i = 0; i < deg - 1; ++i) ncols_prev *= nd;
            std::vector<std::vector<i64>> cols(ncols_prev, std::vector<i64>(N_, 0));
            size_t r = 0;
            for_each_coboundary_row(G, dom, deg - 1, [&](const std::vector<i64>& row) {
                for (size_t c = 0; c < ncols_prev; ++c)
                    if (row[c]) cols[c][r] = row[c];
                ++r;
            });
            for (auto& c : cols) HB.insert(c);
        }
        IntMat B1(N_, N_);
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j) B1.at(j, i) = HB.rows()[i][j];  // columns = pivot rows
        SmithResult sb = smith_normal_form(B1, kNeedT, g);
        // w-columns spanning {w : B1 w == 0 mod g}: the solution set is
        // T * diag(f) * Z^N + g * Z^N (T is only invertible mod g), so
        // Lam_B = (1/g) B1 * T * diag(f)  together with  B1's own columns.
        IntMat W = sb.T;
        for (int i = 0; i < N_; ++i) {
            i64 d = i < static_cast<int>(sb.diag.size()) ? sb.diag[i] : 0;
            i64 f = g / gcd_i64(d, g);  // d == 0 (mod g): no constraint, f = 1
            for (int r2 = 0; r2 < N_; ++r2) W.at(r2, i) *= f;
        }
        IntMat LB = mat_mul(B1, W);
        for (auto& v : LB.a) {
            if (v % g != 0)
                throw error(error::Kind::BadInput, "internal: trivial lattice not |G|-divisible");
            v /= g;
        }

        // X = Delta^-1 * Tzinv * [LB | B1] must be integral mod M (Lam_B lies
        // inside Lam_Z, and Delta_r divides M).
        IntMat LB2(N_, 2 * N_);
        for (int r2 = 0; r2 < N_; ++r2)
            for (int c = 0; c < N_; ++c) {
                LB2.at(r2, c) = LB.at(r2, c);
                LB2.at(r2, N_ + c) = B1.at(r2, c);
            }
        IntMat X = mat_mul(Tzinv_, LB2);
        for (int r2 = 0; r2 < N_; ++r2)
            for (int c = 0; c < 2 * N_; ++c) {
                i64 s = mod_norm(X.at(r2, c), M);
                if (s % Delta_[r2] != 0)
                    throw error(error::Kind::BadInput, "internal: trivial lattice escapes the cocycle lattice");
                X.at(r2, c) = s / Delta_[r2];
            }
        // The quotient has exponent dividing M, so reduce X's columns against
        // M*I before the final SNF to keep entries small.
        TriangularLattice XR(N_, M);
        {
            // Coordinates are only defined mod M/Delta_r: the vector
            // (M/Delta_r) e_r stands for M * (Tz e_r) == 0 (mod M), the zero
            // class.  Inserting these makes the reduced coordinates of the
            // generators below independent of the representative chosen.
            std::vector<i64> col(N_);
            for (int r2 = 0; r2 < N_; ++r2) {
                col.assign(N_, 0);
                col[r2] = M / Delta_[r2];
                XR.insert(col);
            }
            for (int c = 0; c < 2 * N_; ++c) {
                for (int r2 = 0; r2 < N_; ++r2) col[r2] = mod_norm(X.at(r2, c), M);
                XR.insert(col);
            }
        }
        IntMat Xred(N_, N_);
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j) Xred.at(j, i) = XR.rows()[i][j];
        SmithResult sx = smith_normal_form(Xred, kNeedS | kNeedSinv, M);
        SX_ = std::move(sx.S);
        factors_all_.resize(N_);
        for (int i = 0; i < N_; ++i) {
            i64 d = i < static_cast<int>(sx.diag.size()) ? sx.diag[i] : 0;
            factors_all_[i] = gcd_i64(d, M);  // canonical invariant factor, never 0
        }
        for (int i = 0; i < N_; ++i)
            if (factors_all_[i] != 1) factor_pos_.push_back(i);
        for (int i : factor_pos_) invariant_factors.push_back(factors_all_[i]);
        if (invariant_factors.size() > 62)
            throw error(error::Kind::TooManyClasses, "cohomology group too large to enumerate");

        // Basis cocycles: columns of A * SXinv at the factor positions, with
        // A = Tz * diag(Delta).
        IntMat A = Tz_;
        for (int r2 = 0; r2 < N_; ++r2)
            for (int c = 0; c < N_; ++c) A.at(r2, c) *= Delta_[c];
        IntMat ASi = mat_mul(A, sx.Sinv);
        for (int bi : factor_pos_) {
            Cochain b(G, dom, deg, M);
            for (int r2 = 0; r2 < N_; ++r2) b.values[r2] = mod_norm(ASi.at(r2, bi), M);
            basis.push_back(std::move(b));
        }
    }

    // Class coordinates of a cocycle, one residue per invariant factor.
    std::vector<i64> class_coords(const Cochain& z) const {
        Cochain zz = z;
        if (zz.modulus != modulus) {
            if (modulus % zz.modulus == 0) zz = zz.with_modulus(modulus);
            else throw error(error::Kind::BadInput, "cocycle modulus incompatible with cohomology group");
        }
        if (zz.dom != dom || zz.degree != degree)
            throw error(error::Kind::BadInput, "cocycle domain mismatch");
        if (!is_cocycle(zz)) throw error(error::Kind::NotACocycle, "class_coords needs a cocycle");
        std::vector<i128> u(N_, 0);
        for (int r = 0; r < N_; ++r) {
            i128 s = 0;
            for (int c = 0; c < N_; ++c) s += Tzinv_.at(r, c) * zz.values[c];
            i64 sm = mod_norm(s, modulus);  // Delta_r | modulus, so the residue decides
            if (sm % Delta_[r] != 0) throw error(error::Kind::NotACocycle, "vector outside the cocycle lattice");
            u[r] = sm / Delta_[r];
        }
        std::vector<i64> out;
        out.reserve(factor_pos_.size());
        for (size_t k = 0; k < factor_pos_.size(); ++k) {
            int i = factor_pos_[k];
            i128 s = 0;
            for (int c = 0; c < N_; ++c) s += SX_.at(i, c) * u[c];
            out.push_back(mod_norm(s, invariant_factors[k]));
        }
        return out;
    }

    bool is_coboundary(const Cochain& z) const {
        for (i64 c : class_coords(z))
            if (c != 0) return false;
        return true;
    }

    Cochain rep_from_coords(const std::vector<i64>& coords) const {
        Cochain out(*group, dom, degree, modulus);
        for (size_t k = 0; k < coords.size() && k < basis.size(); ++k)
            for (size_t i = 0; i < out.values.size(); ++i)
                out.values[i] = mod_norm(out.values[i] + static_cast<i128>(coords[k]) * basis[k].values[i],
                                         modulus);
        return out;
    }

    i64 class_count() const {
        i64 n = 1;
        for (i64 f : invariant_factors) n *= f;
        return n;
    }

private:
    int N_ = 0;
    IntMat Tz_, Tzinv_, SX_;
    std::vector<i64> Delta_;
    std::vector<i64> factors_all_;
    std::vector<int> factor_pos_;
};

struct TrivializeResult {
    Cochain psi;   // d psi = z at psi.modulus (z scaled if escalated)
};

// Solve d psi = z; first at z's modulus, then once at modulus M*|dom| (the
// transfer bound).  nullopt iff the class of z is nontrivial over Q/Z.
inline std::optional<TrivializeResult> trivialize(const Cochain& z) {
    const FiniteGroup& G = *z.group;
    if (!is_cocycle(z)) throw error(error::Kind::NotACocycle, "trivialize needs a cocycle");
    int deg = z.degree;
    if (deg < 1) throw error(error::Kind::BadInput, "trivialize needs degree >= 1");
    int nd = z.dn();
    size_t ncols = 1;
    for (int i = 0; i < deg - 1; ++i) ncols *= nd;
    std::vector<std::vector<i64>> D;
    for_each_coboundary_row(G, z.dom, deg - 1, [&](const std::vector<i64>& row) { D.push_back(row); });
    for (int attempt = 0; attempt < 2; ++attempt) {
        i64 M = attempt == 0 ? z.modulus : z.modulus * nd;
        Cochain zz = z.with_modulus(M);
        std::vector<i64> rhs(zz.values.begin(), zz.values.end());
        auto x = solve_mod(D, rhs, M);
        if (x) {
            Cochain psi(G, z.dom, deg - 1, M);
            for (size_t i = 0; i < psi.values.size(); ++i) psi.values[i] = mod_norm((*x)[i], M);
            return TrivializeResult{std::move(psi)};
        }
    }
    return std::nullopt;
}

struct NormalizeResult {
    Cochain z;  // normalized cocycle cohomologous to the input
    Cochain b;  // witness with z = input + db
};

// Kill all degenerate-argument entries by a coboundary shift at the same
// modulus (the normalized subcomplex computes the same cohomology).
inline NormalizeResult normalize_cocycle(const Cochain& z) {
    const FiniteGroup& G = *z.group;
    if (!is_cocycle(z)) throw error(error::Kind::NotACocycle, "normalize_cocycle needs a cocycle");
    int deg = z.degree;
    if (deg == 0 || is_normalized(z)) {
        Cochain b = deg >= 1 ? Cochain(G, z.dom, deg - 1, z.modulus) : Cochain(G, z.dom, 0, z.modulus);
        return NormalizeResult{z, std::move(b)};
    }
    // constraint rows: (db)(args) = -z(args) for every degenerate tuple
    std::vector<std::vector<i64>> D;
    std::vector<i64> rhs;
    std::vector<std::vector<i64>> all_rows;
    for_each_coboundary_row(G, z.dom, deg - 1, [&](const std::vector<i64>& row) { all_rows.push_back(row); });
    for (size_t idx = 0; idx < z.values.size(); ++idx) {
        std::vector<int> args = z.args_of(idx);
        bool degen = false;
        for (int a : args)
            if (a == 0) { degen = true; break; }
        if (!degen) continue;
        D.push_back(all_rows[idx]);
        rhs.push_back(mod_norm(-z.values[idx], z.modulus));
    }
    auto x = solve_mod(D, rhs, z.modulus);
    if (!x)
        throw error(error::Kind::BadInput, "internal: normalization system unsolvable");
    Cochain b(G, z.dom, deg - 1, z.modulus);
    for (size_t i = 0; i < b.values.size(); ++i) b.values[i] = (*x)[i];
    Cochain zn = add(z, coboundary(b));
    return NormalizeResult{std::move(zn), std::move(b)};
}

// One normalized representative per cohomology class, zero class first,
// remaining classes in mixed-radix coordinate order.
inline std::vector<Cochain> enumerate_classes(const CohomologyGroup& coh) {
    i64 n = coh.class_count();
    if (n > kMaxEnumeratedClasses)
        throw error(error::Kind::TooManyClasses,
                    "class enumeration capped at " + std::to_string(kMaxEnumeratedClasses));
    std::vector<Cochain> out;
    std::vector<i64> coords(coh.invariant_factors.size(), 0);
    for (i64 k = 0; k < n; ++k) {
        i64 t = k;
        for (int i = static_cast<int>(coords.size()) - 1; i >= 0; --i) {
            coords[i] = t % coh.invariant_factors[i];
            t /= coh.invariant_factors[i];
        }
        out.push_back(normalize_cocycle(coh.rep_from_coords(coords)).z);
    }
    return out;
}

}  // namespace dwc
