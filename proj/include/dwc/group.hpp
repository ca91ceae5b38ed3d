#pragma once
// Finite group arithmetic and combinatorics on explicit multiplication tables:
// construction and validation, presets, conjugacy classes, centralizers,
// normalizers, subgroup lattice, double cosets, conjugation actions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwc {

// Error taxonomy shared by all modules.  `kind` carries the stable name used
// in messages and CLI exit-code mapping.
class error : public std::runtime_error {
public:
    enum class Kind {
        NotAssociative,
        NoIdentity,
        NoInverse,
        UnknownPreset,
        OrderTooLarge,
        NotSubgroup,
        SizeBudgetExceeded,
        NotACocycle,
        TooManyClasses,
        NotInCentralizer,
        TwistMismatch,
        ContextMismatch,
        BadInput,
    };
    error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

constexpr int kMaxGroupOrder = 24;

class FiniteGroup {
public:
    int order = 0;
    std::vector<std::vector<int>> mult;  // mult[a][b] = a*b
    std::vector<int> inv;                // inv[a]
    std::string label;

    FiniteGroup() = default;

    // Validates the table: square, in-range, identity at index 0, unique
    // inverses, associativity on all triples.
    explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "")
        : order(static_cast<int>(table.size())), mult(std::move(table)), label(std::move(name)) {
        if (order == 0)
            throw error(error::Kind::BadInput, "empty multiplication table");
        for (int a = 0; a < order; ++a) {
            if (static_cast<int>(mult[a].size()) != order)
                throw error(error::Kind::BadInput, "multiplication table is not square at row " + std::to_string(a));
            for (int b = 0; b < order; ++b)
                if (mult[a][b] < 0 || mult[a][b] >= order)
                    throw error(error::Kind::BadInput, "table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        for (int a = 0; a < order; ++a)
            if (mult[0][a] != a || mult[a][0] != a)
                throw error(error::Kind::NoIdentity, "index 0 is not a two-sided identity at element " + std::to_string(a));
        inv.assign(order, -1);
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b)
                if (mult[a][b] == 0 && mult[b][a] == 0) { inv[a] = b; break; }
            if (inv[a] < 0)
                throw error(error::Kind::NoInverse, "element " + std::to_string(a) + " has no inverse");
        }
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                        throw error(error::Kind::NotAssociative,
                                    "NotAssociative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }

    int mul(int a, int b) const { return mult[a][b]; }
    int mul(int a, int b, int c) const { return mult[mult[a][b]][c]; }
    // g^-1 h g
    int conj(int g, int h) const { return mul(inv[g], h, g); }

    bool commutes(int a, int b) const { return mult[a][b] == mult[b][a]; }

    std::vector<int> centralizer(int h) const {
        std::vector<int> out;
        for (int g = 0; g < order; ++g)
            if (commutes(g, h)) out.push_back(g);
        return out;
    }

    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (!commutes(a, b)) return false;
        return true;
    }
};

// Subgroup as a canonical (strictly increasing) element list of a parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elems;

    Subgroup() = default;
    Subgroup(const FiniteGroup& G, std::vector<int> elements) : parent(&G), elems(std::move(elements)) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        validate();
    }

    void validate() const {
        if (elems.empty() || elems[0] != 0)
            throw error(error::Kind::NotSubgroup, "subgroup does not contain the identity");
        std::set<int> s(elems.begin(), elems.end());
        for (int a : elems) {
            if (a < 0 || a >= parent->order)
                throw error(error::Kind::NotSubgroup, "subgroup element out of range");
            if (!s.count(parent->inv[a]))
                throw error(error::Kind::NotSubgroup, "subgroup not closed under inverse at " + std::to_string(a));
            for (int b : elems)
                if (!s.count(parent->mul(a, b)))
                    throw error(error::Kind::NotSubgroup,
                                "subgroup not closed at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }

    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int g) const { return std::binary_search(elems.begin(), elems.end(), g); }
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
    bool operator<(const Subgroup& o) const {
        if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
        return elems < o.elems;
    }
};

struct ConjClassTable {
    std::vector<std::vector<int>> classes;  // sorted element lists, ordered by min element
    std::vector<int> rep;                   // minimal element per class
    std::vector<int> class_of;              // element -> class index
};

inline ConjClassTable conjugacy_classes(const FiniteGroup& G) {
    ConjClassTable t;
    t.class_of.assign(G.order, -1);
    for (int x = 0; x < G.order; ++x) {
        if (t.class_of[x] >= 0) continue;
        std::set<int> cls;
        for (int g = 0; g < G.order; ++g) cls.insert(G.conj(g, x));
        int ci = static_cast<int>(t.classes.size());
        t.classes.emplace_back(cls.begin(), cls.end());
        t.rep.push_back(*cls.begin());
        for (int y : cls) t.class_of[y] = ci;
    }
    return t;
}

inline Subgroup centralizer_subgroup(const FiniteGroup& G, int h) {
    return Subgroup(G, G.centralizer(h));
}

inline Subgroup conjugate_subgroup(const FiniteGroup& G, int g, const Subgroup& H) {
    std::vector<int> out;
    out.reserve(H.elems.size());
    for (int x : H.elems) out.push_back(G.conj(g, x));
    return Subgroup(G, std::move(out));
}

inline int conjugate_element(const FiniteGroup& G, int g, int h) { return G.conj(g, h); }

inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
    std::vector<int> out;
    for (int g = 0; g < G.order; ++g) {
        std::vector<int> c;
        c.reserve(H.elems.size());
        for (int x : H.elems) c.push_back(G.conj(g, x));
        std::sort(c.begin(), c.end());
        if (c == H.elems) out.push_back(g);
    }
    return Subgroup(G, std::move(out));
}

// Closure of a generating set.
inline std::vector<int> generated_subgroup(const FiniteGroup& G, std::vector<int> gens) {
    std::set<int> s{0};
    for (int g : gens) s.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(G.mul(a, b)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

// Complete subgroup list, ordered by (size, element list).
inline std::vector<Subgroup> subgroups(const FiniteGroup& G) {
    if (G.order > kMaxGroupOrder)
        throw error(error::Kind::OrderTooLarge, "subgroup enumeration limited to order <= " + std::to_string(kMaxGroupOrder));
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier;
    found.insert({0});
    frontier.push_back({0});
    while (!frontier.empty()) {
        std::vector<int> H = frontier.back();
        frontier.pop_back();
        std::set<int> Hs(H.begin(), H.end());
        for (int g = 1; g < G.order; ++g) {
            if (Hs.count(g)) continue;
            std::vector<int> gens = H;
            gens.push_back(g);
            std::vector<int> K = generated_subgroup(G, gens);
            if (found.insert(K).second) frontier.push_back(K);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& e : found) out.emplace_back(G, e);
    std::sort(out.begin(), out.end());
    return out;
}

// Subgroups of `within` (a subgroup of G, given as an element list).
inline std::vector<Subgroup> subgroups_of(const FiniteGroup& G, const Subgroup& within) {
    std::vector<Subgroup> out;
    std::set<int> ws(within.elems.begin(), within.elems.end());
    for (auto& H : subgroups(G)) {
        bool inside = true;
        for (int x : H.elems)
            if (!ws.count(x)) { inside = false; break; }
        if (inside) out.push_back(H);
    }
    return out;
}

// Conjugacy classes of subgroups under conjugation by `ambient` (element list);
// each class is represented by its minimal member in (size, lex) order.
inline std::vector<std::vector<Subgroup>> subgroup_conj_classes(const FiniteGroup& G,
                                                                const std::vector<Subgroup>& subs,
                                                                const std::vector<int>& ambient) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<Subgroup>> out;
    for (const auto& H : subs) {
        if (seen.count(H.elems)) continue;
        std::set<std::vector<int>> orbit;
        for (int g : ambient) {
            std::vector<int> c;
            c.reserve(H.elems.size());
            for (int x : H.elems) c.push_back(G.conj(g, x));
            std::sort(c.begin(), c.end());
            orbit.insert(c);
        }
        std::vector<Subgroup> cls;
        for (const auto& e : orbit) {
            seen.insert(e);
            cls.emplace_back(G, e);
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

struct DoubleCosets {
    Subgroup left, right;
    std::vector<int> reps;        // minimal element per coset, sorted
    std::vector<int> membership;  // element -> coset index
};

inline DoubleCosets double_cosets(const FiniteGroup& G, const Subgroup& H, const Subgroup& Hp) {
    DoubleCosets dc;
    dc.left = H;
    dc.right = Hp;
    dc.membership.assign(G.order, -1);
    std::vector<std::pair<int, std::set<int>>> cosets;  // (min rep, elements)
    for (int g = 0; g < G.order; ++g) {
        if (dc.membership[g] >= 0) continue;
        std::set<int> cos;
        for (int x : H.elems)
            for (int y : Hp.elems) cos.insert(G.mul(x, g, y));
        cosets.emplace_back(*cos.begin(), cos);
        for (int e : cos) dc.membership[e] = 0;  // provisional, fixed below
    }
    std::sort(cosets.begin(), cosets.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < static_cast<int>(cosets.size()); ++i) {
        dc.reps.push_back(cosets[i].first);
        for (int e : cosets[i].second) dc.membership[e] = i;
    }
    return dc;
}

// ----- presets -----

inline FiniteGroup cyclic_group(int n) {
    if (n < 1 || n > kMaxGroupOrder) throw error(error::Kind::OrderTooLarge, "cyclic(n) needs 1 <= n <= 24");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return FiniteGroup(std::move(t), "Z" + std::to_string(n));
}

// Element (a,b) of A x B is numbered a*|B| + b (row-major pairing).
inline FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.order * B.order;
    if (n > kMaxGroupOrder) throw error(error::Kind::OrderTooLarge, "product order exceeds 24");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a1 = x / B.order, b1 = x % B.order;
            int a2 = y / B.order, b2 = y % B.order;
            t[x][y] = A.mult[a1][a2] * B.order + B.mult[b1][b2];
        }
    return FiniteGroup(std::move(t), A.label + "x" + B.label);
}

// Dihedral group of order 2n: element f*n + k is (reflection^f, rotation^k).
inline FiniteGroup dihedral_group(int n) {
    if (n < 1 || 2 * n > kMaxGroupOrder) throw error(error::Kind::OrderTooLarge, "dihedral(n) needs 2n <= 24");
    int N = 2 * n;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int f1 = x / n, k1 = x % n;
            int f2 = y / n, k2 = y % n;
            // (f1,k1)*(f2,k2): rotations compose with a flip twisting the first exponent
            int f = (f1 + f2) % 2;
            int k = ((f2 ? -k1 : k1) + k2) % n;
            if (k < 0) k += n;
            t[x][y] = f * n + k;
        }
    return FiniteGroup(std::move(t), "D" + std::to_string(n));
}

// Symmetric group on n letters, permutations numbered in lexicographic order,
// acting by composition (p*q)(i) = p(q(i)).  Identity is index 0.
inline FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4) throw error(error::Kind::OrderTooLarge, "symmetric(n) supports n <= 4");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) idx[perms[i]] = i;
    int N = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            std::vector<int> c(n);
            for (int k = 0; k < n; ++k) c[k] = perms[i][perms[j][k]];
            t[i][j] = idx[c];
        }
    return FiniteGroup(std::move(t), "S" + std::to_string(n));
}

// Quaternion group {±1, ±i, ±j, ±k}; unit u with sign s is numbered 2u + (s<0),
// units ordered (1, i, j, k).
inline FiniteGroup quaternion_group() {
    // multiplication of units with result sign
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = (a % 2) ? -1 : +1;
            int ub = b / 2, sb = (b % 2) ? -1 : +1;
            int uc = unit[ua][ub];
            int sc = sa * sb * sign[ua][ub];
            t[a][b] = uc * 2 + (sc < 0 ? 1 : 0);
        }
    return FiniteGroup(std::move(t), "Q8");
}

// Preset by name: "cyclic(n)", "dihedral(n)", "symmetric(n)", "quaternion8",
// "product(A,B)" with nested presets.
FiniteGroup preset(const std::string& name);

namespace detail {
inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}
}  // namespace detail

inline FiniteGroup preset(const std::string& name0) {
    std::string name = detail::strip(name0);
    if (name == "quaternion8" || name == "q8") return quaternion_group();
    auto paren = name.find('(');
    if (paren == std::string::npos || name.back() != ')')
        throw error(error::Kind::UnknownPreset, "unknown preset: " + name);
    std::string head = name.substr(0, paren);
    std::string args = name.substr(paren + 1, name.size() - paren - 2);
    if (head == "product") {
        // split at the top-level comma
        int depth = 0;
        size_t cut = std::string::npos;
        for (size_t i = 0; i < args.size(); ++i) {
            if (args[i] == '(') ++depth;
            else if (args[i] == ')') --depth;
            else if (args[i] == ',' && depth == 0) { cut = i; break; }
        }
        if (cut == std::string::npos)
            throw error(error::Kind::UnknownPreset, "product needs two arguments: " + name);
        return product_group(preset(args.substr(0, cut)), preset(args.substr(cut + 1)));
    }
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(detail::strip(args), &pos);
        if (pos != detail::strip(args).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw error(error::Kind::UnknownPreset, "bad preset argument: " + name);
    }
    if (head == "cyclic") return cyclic_group(n);
    if (head == "dihedral") return dihedral_group(n);
    if (head == "symmetric") return symmetric_group(n);
    throw error(error::Kind::UnknownPreset, "unknown preset: " + name);
}

// Commutator subgroup and abelianization order (used as an H^1 oracle).
inline Subgroup commutator_subgroup(const FiniteGroup& G) {
    std::vector<int> gens;
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            gens.push_back(G.mul(G.mul(G.inv[a], G.inv[b]), G.mul(a, b)));
    return Subgroup(G, generated_subgroup(G, gens));
}

}  // namespace dwc
