#pragma once
// Exact integer linear algebra: extended gcd, linear solving mod M, and Smith
// normal form with invertible row/column transforms.  Matrices are dense
// row-major vectors of 128-bit integers so transform bookkeeping cannot
// silently overflow.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dwc {

using i64 = long long;
using i128 = __int128;

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<i128> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    i128& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const i128& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline IntMat mat_mul(const IntMat& A, const IntMat& B) {
    IntMat out(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            i128 v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j) out.at(i, j) += v * B.at(k, j);
        }
    return out;
}

// g = gcd(a,b) >= 0 with u*a + v*b = g.
inline i128 ext_gcd(i128 a, i128 b, i128& u, i128& v) {
    i128 old_r = a, r = b;
    i128 old_u = 1, cu = 0;
    i128 old_v = 0, cv = 1;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_u - q * cu; old_u = cu; cu = t;
        t = old_v - q * cv; old_v = cv; cv = t;
    }
    if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
    u = old_u;
    v = old_v;
    return old_r;
}

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

inline i64 lcm_i64(i64 a, i64 b) { return a / gcd_i64(a, b) * b; }

inline i64 mod_norm(i128 x, i64 M) {
    i128 r = x % M;
    if (r < 0) r += M;
    return static_cast<i64>(r);
}

struct SmithResult {
    std::vector<i64> diag;  // invariant diagonal d1 | d2 | ..., then zeros
    IntMat S, Sinv;         // row transforms: S*A*T = D
    IntMat T, Tinv;
};

enum SmithNeed : unsigned {
    kNeedS = 1,
    kNeedSinv = 2,
    kNeedT = 4,
    kNeedTinv = 8,
    kNeedAll = 15,
};

// Smith normal form with minimal-entry re-pivoting (keeps intermediate entries
// small for the lattice-style matrices this project produces).
//
// When Mod > 0 the computation is performed over Z/Mod: the matrix and all
// transforms are kept balanced-reduced modulo Mod after every elementary
// operation, so entries never exceed Mod/2 in magnitude and transform
// bookkeeping cannot overflow even for large matrices.  The identities
// S*A*T == D, S*Sinv == I and T*Tinv == I then hold modulo Mod, which is
// exactly what quotient computations on groups of exponent dividing Mod need.
// The diagonal is reported reduced into [0, Mod); a zero entry stands for the
// trivial relation (invariant factor gcd(0, Mod) == Mod), and the divisibility
// chain is enforced on gcd(d_i, Mod).
inline SmithResult smith_normal_form(IntMat A, unsigned need = kNeedAll, i64 Mod = 0) {
    int R = A.rows, C = A.cols;
    SmithResult res;
    if (need & kNeedS) res.S = IntMat::identity(R);
    if (need & kNeedSinv) res.Sinv = IntMat::identity(R);
    if (need & kNeedT) res.T = IntMat::identity(C);
    if (need & kNeedTinv) res.Tinv = IntMat::identity(C);

    auto reduce = [&](i128& x) {
        if (!Mod) return;
        x %= Mod;
        if (x < 0) x += Mod;
        if (2 * x > Mod) x -= Mod;  // balanced representative in (-Mod/2, Mod/2]
    };
    if (Mod)
        for (auto& v : A.a) reduce(v);

    auto row_swap = [&](int i, int j) {
        for (int k = 0; k < C; ++k) std::swap(A.at(i, k), A.at(j, k));
        if (need & kNeedS)
            for (int k = 0; k < R; ++k) std::swap(res.S.at(i, k), res.S.at(j, k));
        if (need & kNeedSinv)
            for (int k = 0; k < R; ++k) std::swap(res.Sinv.at(k, i), res.Sinv.at(k, j));
    };
    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < R; ++k) std::swap(A.at(k, i), A.at(k, j));
        if (need & kNeedT)
            for (int k = 0; k < C; ++k) std::swap(res.T.at(k, i), res.T.at(k, j));
        if (need & kNeedTinv)
            for (int k = 0; k < C; ++k) std::swap(res.Tinv.at(i, k), res.Tinv.at(j, k));
    };
    // (row_i, row_j) <- (u ri + v rj, -w2 ri + w1 rj), unimodular when u w1 + v w2 = 1
    auto row_op = [&](int i, int j, i128 u, i128 v, i128 w1, i128 w2) {
        for (int k = 0; k < C; ++k) {
            i128 x = A.at(i, k), y = A.at(j, k);
            A.at(i, k) = u * x + v * y;
            A.at(j, k) = -w2 * x + w1 * y;
            reduce(A.at(i, k));
            reduce(A.at(j, k));
        }
        if (need & kNeedS)
            for (int k = 0; k < R; ++k) {
                i128 x = res.S.at(i, k), y = res.S.at(j, k);
                res.S.at(i, k) = u * x + v * y;
                res.S.at(j, k) = -w2 * x + w1 * y;
                reduce(res.S.at(i, k));
                reduce(res.S.at(j, k));
            }
        if (need & kNeedSinv)
            for (int k = 0; k < R; ++k) {
                i128 x = res.Sinv.at(k, i), y = res.Sinv.at(k, j);
                res.Sinv.at(k, i) = w1 * x + w2 * y;
                res.Sinv.at(k, j) = -v * x + u * y;
                reduce(res.Sinv.at(k, i));
                reduce(res.Sinv.at(k, j));
            }
    };
    auto col_op = [&](int i, int j, i128 u, i128 v, i128 w1, i128 w2) {
        for (int k = 0; k < R; ++k) {
            i128 x = A.at(k, i), y = A.at(k, j);
            A.at(k, i) = u * x + v * y;
            A.at(k, j) = -w2 * x + w1 * y;
            reduce(A.at(k, i));
            reduce(A.at(k, j));
        }
        if (need & kNeedT)
            for (int k = 0; k < C; ++k) {
                i128 x = res.T.at(k, i), y = res.T.at(k, j);
                res.T.at(k, i) = u * x + v * y;
                res.T.at(k, j) = -w2 * x + w1 * y;
                reduce(res.T.at(k, i));
                reduce(res.T.at(k, j));
            }
        if (need & kNeedTinv)
            for (int k = 0; k < C; ++k) {
                i128 x = res.Tinv.at(i, k), y = res.Tinv.at(j, k);
                res.Tinv.at(i, k) = w1 * x + w2 * y;
                res.Tinv.at(j, k) = -v * x + u * y;
                reduce(res.Tinv.at(i, k));
                reduce(res.Tinv.at(j, k));
            }
    };
    auto negate_row = [&](int p) {
        for (int k = 0; k < C; ++k) A.at(p, k) = -A.at(p, k);
        if (need & kNeedS)
            for (int k = 0; k < R; ++k) res.S.at(p, k) = -res.S.at(p, k);
        if (need & kNeedSinv)
            for (int k = 0; k < R; ++k) res.Sinv.at(k, p) = -res.Sinv.at(k, p);
    };

    int m = R < C ? R : C;
    // Clears row p and column p beyond the pivot; returns false when the
    // remaining submatrix is zero.
    auto eliminate = [&](int p) -> bool {
        for (;;) {
            int bi = -1, bj = -1;
            i128 best = 0;
            for (int i = p; i < R; ++i)
                for (int j = p; j < C; ++j) {
                    i128 v = A.at(i, j);
                    if (v < 0) v = -v;
                    if (v != 0 && (bi < 0 || v < best)) { best = v; bi = i; bj = j; }
                }
            if (bi < 0) return false;
            if (bi != p) row_swap(p, bi);
            if (bj != p) col_swap(p, bj);
            bool clean = true;
            for (int i = p + 1; i < R; ++i) {
                if (A.at(i, p) != 0) {
                    i128 q = A.at(i, p) / A.at(p, p);
                    if (q != 0) row_op(p, i, 1, 0, 1, q);
                    if (A.at(i, p) != 0) clean = false;
                }
            }
            for (int j = p + 1; j < C; ++j) {
                if (A.at(p, j) != 0) {
                    i128 q = A.at(p, j) / A.at(p, p);
                    if (q != 0) col_op(p, j, 1, 0, 1, q);
                    if (A.at(p, j) != 0) clean = false;
                }
            }
            if (clean) return true;
        }
    };

    for (int p = 0; p < m; ++p) {
        if (!eliminate(p)) break;
        if (A.at(p, p) < 0) negate_row(p);
    }
    // Enforce the divisibility chain; elimination may reorder the diagonal, so
    // repeat until stable.  Over Z/Mod the chain is enforced on the canonical
    // divisors gcd(d, Mod); a diagonal entry that vanished mod Mod stands for
    // the factor Mod itself and must trail everything else.
    auto canon = [&](int p) -> i64 {
        i128 d = A.at(p, p);
        if (!Mod) return static_cast<i64>(d < 0 ? -d : d);
        return gcd_i64(mod_norm(d, Mod), Mod);  // gcd(0, Mod) == Mod
    };
    for (int pass = 0; pass <= m * m; ++pass) {
        bool ok = true;
        for (int p = 0; p < m; ++p) {
            i64 dp = canon(p);
            if (dp == 0) continue;
            for (int q = p + 1; q < m; ++q) {
                i64 dq = canon(q);
                if (dq % dp != 0) {
                    ok = false;
                    col_op(p, q, 1, 1, 1, 0);  // c_p += c_q
                    eliminate(p);
                    if (A.at(p, p) < 0) negate_row(p);
                    if (A.at(q, q) < 0) negate_row(q);
                }
            }
        }
        if (ok) break;
    }
    res.diag.resize(m);
    for (int i = 0; i < m; ++i) {
        i128 d = A.at(i, i);
        if (Mod) {
            res.diag[i] = mod_norm(d, Mod);
        } else {
            if (d < 0) d = -d;
            res.diag[i] = static_cast<i64>(d);
        }
    }
    return res;
}

// Hermite-style insertion of integer vectors into a lattice that already
// contains M*Z^n, working with an upper-triangular pivot basis whose diagonal
// entries divide M.  Rows of the result form the basis.
class TriangularLattice {
public:
    TriangularLattice(int n, i64 M) : n_(n), M_(M), rows_(n) {
        for (int i = 0; i < n; ++i) {
            rows_[i].assign(n, 0);
            rows_[i][i] = M;
        }
    }

    void insert(std::vector<i64> v) {
        for (auto& x : v) x = mod_norm(x, M_);
        for (int j = 0; j < n_; ++j) {
            if (v[j] == 0) continue;
            i128 u, w;
            i128 g = ext_gcd(rows_[j][j], v[j], u, w);
            i128 c1 = rows_[j][j] / g, c2 = v[j] / g;
            std::vector<i64> np(n_), nv(n_);
            for (int k = 0; k < n_; ++k) {
                np[k] = mod_norm(u * rows_[j][k] + w * v[k], M_);
                nv[k] = mod_norm(-c2 * rows_[j][k] + c1 * v[k], M_);
            }
            np[j] = static_cast<i64>(g);  // keep the pivot exact, not reduced to 0
            nv[j] = 0;
            rows_[j] = std::move(np);
            v = std::move(nv);
        }
    }

    const std::vector<std::vector<i64>>& rows() const { return rows_; }
    i64 pivot(int i) const { return rows_[i][i]; }
    int dim() const { return n_; }

private:
    int n_;
    i64 M_;
    std::vector<std::vector<i64>> rows_;
};

// Solve A x = rhs (mod M).  Complete over Z/M: the augmented rows [A_i | -b_i]
// are first compressed into a triangular lattice basis (preserving the
// solution set, since the basis generates the same row lattice together with
// M*Z^{C+1}), then the compressed square system is solved through its Smith
// normal form.  Free coordinates are set to zero, so the result is
// deterministic.  Returns nullopt when no solution exists.
inline std::optional<std::vector<i64>> solve_mod(const std::vector<std::vector<i64>>& rows,
                                                 const std::vector<i64>& rhs, i64 M) {
    int R = static_cast<int>(rows.size());
    int C = R ? static_cast<int>(rows[0].size()) : 0;
    if (C == 0) {
        for (i64 b : rhs)
            if (mod_norm(b, M) != 0) return std::nullopt;
        return std::vector<i64>{};
    }
    TriangularLattice L(C + 1, M);
    std::vector<i64> aug(C + 1);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) aug[j] = mod_norm(rows[i][j], M);
        aug[C] = mod_norm(-static_cast<i128>(rhs[i]), M);
        L.insert(aug);
    }
    // Equations: v[0..C-1] . x + v[C] == 0 (mod M) for every basis row v.
    IntMat A(C + 1, C);
    std::vector<i64> b(C + 1);
    for (int i = 0; i <= C; ++i) {
        for (int j = 0; j < C; ++j) A.at(i, j) = L.rows()[i][j];
        b[i] = mod_norm(-static_cast<i128>(L.rows()[i][C]), M);
    }
    SmithResult s = smith_normal_form(A, kNeedS | kNeedT, M);
    std::vector<i64> y(C, 0);
    for (int i = 0; i <= C; ++i) {
        i128 sb = 0;
        for (int j = 0; j <= C; ++j) sb += s.S.at(i, j) * static_cast<i128>(b[j]);
        i64 bi = mod_norm(sb, M);
        i64 d = (i < C && i < static_cast<int>(s.diag.size())) ? s.diag[i] : 0;
        i64 dm = d ? mod_norm(d, M) : 0;
        i64 g = gcd_i64(dm, M);  // gcd(d, M); equals M when d == 0 (mod M)
        if (d == 0 || g == M) {
            if (bi != 0) return std::nullopt;
            continue;
        }
        if (bi % g != 0) return std::nullopt;
        i64 Mg = M / g;
        i128 u, v;
        ext_gcd((dm / g) % Mg, Mg, u, v);  // u * (d/g) == 1 (mod Mg)
        y[i] = mod_norm(static_cast<i128>(bi / g) * u, Mg);
    }
    std::vector<i64> x(C, 0);
    for (int j = 0; j < C; ++j) {
        i128 sx = 0;
        for (int k = 0; k < C; ++k) sx += s.T.at(j, k) * static_cast<i128>(y[k]);
        x[j] = mod_norm(sx, M);
    }
    return x;
}

}  // namespace dwc
