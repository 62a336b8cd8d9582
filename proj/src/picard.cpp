// The Picard lattice of the quintic del Pezzo surface and the restriction map
// to the pencil curve: intersection form, root basis, linear-equivalence
// chains, the induced (Z/5Z)^3 structure and its A5 action.
#include "dwork/picard.hpp"

#include "dwork/plueckerdiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

namespace dwork::pic {

namespace {

// The two indices completing {i, j} to {1, 2, 3, 4}.
std::pair<int, int> complement(int i, int j) {
    std::array<bool, 5> used{};
    used[i] = used[j] = true;
    int k = 0, l = 0;
    for (int m = 1; m <= 4; ++m)
        if (!used[m]) (k == 0 ? k : l) = m;
    return {k, l};
}

std::string dname(int i, int j) {
    if (i > j) std::swap(i, j);
    return "D" + std::to_string(i) + std::to_string(j);
}

// Formal integer combinations of the symbols l, D12, ..., D45 used to replay
// the divisor chains.
using FreeDiv = std::map<std::string, long>;

FreeDiv operator+(FreeDiv a, const FreeDiv& b) {
    for (const auto& [k, v] : b) a[k] += v;
    return a;
}
FreeDiv operator*(long n, FreeDiv a) {
    for (auto& [k, v] : a) v *= n;
    return a;
}
FreeDiv operator-(const FreeDiv& a, const FreeDiv& b) { return a + (-1L) * b; }

FreeDiv normalized(FreeDiv a) {
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

std::string fd_str(const FreeDiv& d) {
    std::ostringstream out;
    for (const auto& [k, v] : normalized(d)) out << v << "*" << k << " ";
    return out.str();
}

void expect_fd(const FreeDiv& got, const FreeDiv& want, const std::string& step) {
    if (normalized(got) != normalized(want))
        throw ChainFailed(step + ": got " + fd_str(got) + ", expected " + fd_str(want));
}

// Rewrite D_ij (i < j <= 4) as l - D_k5 - D_l5.
FreeDiv expand_interior(const FreeDiv& d) {
    FreeDiv out;
    for (const auto& [key, mult] : d) {
        if (key == "l" || key[2] == '5') {
            out[key] += mult;
            continue;
        }
        auto [k, l] = complement(key[1] - '0', key[2] - '0');
        out["l"] += mult;
        out[dname(k, 5)] -= mult;
        out[dname(l, 5)] -= mult;
    }
    return out;
}

// Rewrite l as D34 + D15 + D25 (the pullback of the line through p3, p4).
FreeDiv substitute_l(const FreeDiv& d) {
    FreeDiv out = d;
    long mult = out["l"];
    out.erase("l");
    out["D34"] += mult;
    out["D15"] += mult;
    out["D25"] += mult;
    return out;
}

int mod5(long x) { return static_cast<int>(((x % 5) + 5) % 5); }

F5Vec add5(F5Vec a, const F5Vec& b, int scale = 1) {
    for (int i = 0; i < 3; ++i) a[i] = mod5(a[i] + scale * b[i]);
    return a;
}

// The image in (Z/5Z)^3 of a formal combination of l and the D_ij, relative
// to the base point D45.  Only valid for degree-zero combinations.
F5Vec f5_image(const FreeDiv& d) {
    F5Vec v{};
    long deg = 0;  // in units of the degree-2 divisors D_ij; l counts 3
    for (const auto& [key, mult] : d) {
        if (key == "l") {
            v = add5(v, istar(3, 4), static_cast<int>(mod5(mult)));
            v = add5(v, istar(1, 5), static_cast<int>(mod5(mult)));
            v = add5(v, istar(2, 5), static_cast<int>(mod5(mult)));
            deg += 3 * mult;
        } else {
            v = add5(v, istar(key[1] - '0', key[2] - '0'), static_cast<int>(mod5(mult)));
            deg += mult;
        }
    }
    if (deg != 0) throw ChainFailed("f5_image applied to a nonzero-degree class");
    return v;
}

using Mat3 = std::array<std::array<int, 3>, 3>;

F5Vec mat_apply(const Mat3& m, const F5Vec& v) {
    F5Vec r{};
    for (int i = 0; i < 3; ++i)
        r[i] = mod5(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2]);
    return r;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = mod5(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]);
    return r;
}

// The matrix of the action of a permutation on im(i*), determined by the
// images of the basis e15, e25, e35.
Mat3 induced_matrix(const dp5::Perm& g) {
    Mat3 m{};
    F5Vec base = istar(g.apply(4), g.apply(5));
    for (int i = 1; i <= 3; ++i) {
        F5Vec col = add5(istar(g.apply(i), g.apply(5)), base, -1);
        for (int r = 0; r < 3; ++r) m[r][i - 1] = col[r];
    }
    return m;
}

// Gaussian elimination over F5.
int rank_mod5(std::vector<std::array<int, 3>> rows) {
    int rank = 0;
    for (int col = 0; col < 3; ++col) {
        size_t pivot = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = 1;
        while (mod5(rows[rank][col] * inv) != 1) ++inv;
        for (auto& x : rows[rank]) x = mod5(x * inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank) continue;
            int f = rows[r][col];
            for (int cc = 0; cc < 3; ++cc)
                rows[r][cc] = mod5(rows[r][cc] - f * rows[rank][cc]);
        }
        ++rank;
    }
    return rank;
}

// Smith normal form diagonal of a small integer matrix.
std::vector<long> smith_diagonal(std::vector<std::vector<long>> m) {
    size_t n = m.size();
    std::vector<long> diag;
    for (size_t t = 0; t < n; ++t) {
        // Move a nonzero pivot of minimal absolute value to (t, t).
        while (true) {
            size_t pr = n, pc = n;
            for (size_t r = t; r < n; ++r)
                for (size_t c = t; c < n; ++c)
                    if (m[r][c] != 0 &&
                        (pr == n || std::abs(m[r][c]) < std::abs(m[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == n) return diag;  // remaining block is zero
            std::swap(m[t], m[pr]);
            for (size_t r = 0; r < n; ++r) std::swap(m[r][t], m[r][pc]);
            bool clean = true;
            for (size_t r = t + 1; r < n; ++r)
                if (m[r][t] != 0) {
                    long q = m[r][t] / m[t][t];
                    for (size_t c = t; c < n; ++c) m[r][c] -= q * m[t][c];
                    clean = clean && m[r][t] == 0;
                }
            for (size_t c = t + 1; c < n; ++c)
                if (m[t][c] != 0) {
                    long q = m[t][c] / m[t][t];
                    for (size_t r = t; r < n; ++r) m[r][c] -= q * m[r][t];
                    clean = clean && m[t][c] == 0;
                }
            if (clean) break;
        }
        diag.push_back(std::abs(m[t][t]));
    }
    // Enforce the divisibility chain.
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            long g = std::gcd(diag[i], diag[j]);
            long lcm = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = lcm;
        }
    return diag;
}

const std::array<std::pair<int, int>, 10>& all_pairs() {
    static const std::array<std::pair<int, int>, 10> p = {{{1, 2}, {1, 3}, {1, 4},
                                                           {1, 5}, {2, 3}, {2, 4},
                                                           {2, 5}, {3, 4}, {3, 5},
                                                           {4, 5}}};
    return p;
}

} // namespace

PicClass l_class() { return PicClass{{1, 0, 0, 0, 0}}; }

PicClass e(int i, int j) {
    if (i > j) std::swap(i, j);
    if (j == 5) {
        PicClass r{};
        r.c[i] = 1;
        return r;
    }
    auto [k, l] = complement(i, j);
    return l_class() - e(k, 5) - e(l, 5);
}

PicClass canonical_class() {
    return (-1L) * (3 * l_class() - e(1, 5) - e(2, 5) - e(3, 5) - e(4, 5));
}

long intersect(const PicClass& a, const PicClass& b) {
    long s = a.c[0] * b.c[0];
    for (int i = 1; i < 5; ++i) s -= a.c[i] * b.c[i];
    return s;
}

void intersection_table_check() {
    for (auto [i, j] : all_pairs())
        for (auto [k, l] : all_pairs()) {
            std::set<int> labels = {i, j, k, l};
            long expected = labels.size() == 2   ? -1
                            : labels.size() == 3 ? 0
                                                 : 1;
            if (intersect(e(i, j), e(k, l)) != expected)
                throw ClassMismatch("pairing of E" + std::to_string(i) +
                                    std::to_string(j) + " and E" + std::to_string(k) +
                                    std::to_string(l));
        }
    // Each exceptional class is a smooth rational (-1)-curve by adjunction.
    PicClass K = canonical_class();
    for (auto [i, j] : all_pairs())
        if (intersect(e(i, j), e(i, j) + K) != -2)
            throw ClassMismatch("adjunction for E" + std::to_string(i) +
                                std::to_string(j));
}

namespace {

// The Cremona involution on the lattice: sigma_45.
PicClass cremona(const PicClass& d) {
    static const std::array<PicClass, 5> images = [] {
        std::array<PicClass, 5> im{};
        im[0] = 2 * l_class() - e(1, 5) - e(2, 5) - e(3, 5);  // l
        im[1] = l_class() - e(2, 5) - e(3, 5);                // E15
        im[2] = l_class() - e(1, 5) - e(3, 5);                // E25
        im[3] = l_class() - e(1, 5) - e(2, 5);                // E35
        im[4] = e(4, 5);                                      // E45
        return im;
    }();
    PicClass r{};
    for (int i = 0; i < 5; ++i) r = r + d.c[i] * images[i];
    return r;
}

} // namespace

void class_checks() {
    PicClass K = canonical_class();
    PicClass mK = (-1L) * K;
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw ClassMismatch(what);
    };

    expect(intersect(l_class(), l_class()) == 1, "l^2");
    expect(intersect(mK, mK) == 5, "(-K)^2");

    PicClass sum{};
    for (auto [i, j] : all_pairs()) sum = sum + e(i, j);
    PicClass esum = e(1, 5) + e(2, 5) + e(3, 5) + e(4, 5);
    expect(sum == 6 * l_class() - 2 * esum, "sum of exceptional classes, expanded");
    expect(sum == (-2L) * K, "sum of exceptional classes is -2K");
    expect(intersect((-2L) * K, (-2L) * K) == 20, "basepoint count of the pencil");

    // Pullbacks of the two rulings.
    expect(e(1, 5) + e(2, 4) == l_class() - e(3, 5), "class of sigma = 0");
    expect(e(2, 3) + e(1, 4) == 2 * l_class() - esum, "class of tau = 0");

    // Bidegree (n, m) pulls back to n(l - E35) + m(2l - sum E_i5); the strict
    // transform of a (2,2) curve through the three blown-up points is -K, and
    // of a (4,4) curve with double points there is -2K (the pencil members).
    PicClass ruling_s = l_class() - e(3, 5), ruling_t = 2 * l_class() - esum;
    PicClass nodes = e(1, 2) + e(1, 4) + e(2, 4);
    expect(2 * ruling_s + 2 * ruling_t - nodes == mK, "(2,2) strict transform");
    expect(4 * ruling_s + 4 * ruling_t - 2 * nodes == (-2L) * K,
           "(4,4) strict transform is the pencil class");

    // The five components of the totally degenerate member.
    PicClass degenerate = (l_class() - e(1, 5)) + (l_class() - e(2, 5)) +
                          (l_class() - e(3, 5)) + (l_class() - e(4, 5)) + ruling_t;
    expect(degenerate == (-2L) * K, "degenerate member component classes");

    // The Cremona generator: an isometry fixing K that swaps the labels 4, 5.
    expect(cremona(K) == K, "Cremona fixes K");
    for (auto [i, j] : all_pairs()) {
        auto swap45 = [](int x) { return x == 4 ? 5 : x == 5 ? 4 : x; };
        expect(cremona(e(i, j)) == e(swap45(i), swap45(j)), "Cremona label action");
        for (auto [k, l] : all_pairs())
            expect(intersect(cremona(e(i, j)), cremona(e(k, l))) ==
                       intersect(e(i, j), e(k, l)),
                   "Cremona preserves the form");
    }
}

std::array<PicClass, 4> root_basis() {
    return {e(1, 5) - e(2, 5), e(2, 5) - e(3, 5), e(3, 5) - e(4, 5),
            l_class() - e(1, 5) - e(2, 5) - e(3, 5)};
}

void root_basis_check() {
    auto alpha = root_basis();
    PicClass K = canonical_class();
    for (int i = 0; i < 4; ++i) {
        if (intersect(alpha[i], K) != 0) throw GramMismatch("alpha not orthogonal to K");
        for (int j = 0; j < 4; ++j) {
            long expected = i == j ? -2 : std::abs(i - j) == 1 ? 1 : 0;
            if (intersect(alpha[i], alpha[j]) != expected)
                throw GramMismatch("Gram entry (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
        }
    }
    // The alpha_i span all of K-perp: solve for a generating set by back
    // substitution (alpha_4 carries the l coefficient; alpha_1..alpha_3 are
    // triangular in the E_i5 coordinates).
    std::array<PicClass, 4> gens = {PicClass{{1, -3, 0, 0, 0}}, alpha[0], alpha[1],
                                    alpha[2]};
    for (const PicClass& g : gens) {
        if (intersect(g, K) != 0) throw GramMismatch("generator not in K-perp");
        PicClass r = g - g.c[0] * alpha[3];
        long x1 = r.c[1];
        r = r - x1 * alpha[0];
        long x2 = r.c[2];
        r = r - x2 * alpha[1];
        long x3 = r.c[3];
        r = r - x3 * alpha[2];
        if (!(r == PicClass{}))
            throw GramMismatch("K-perp element outside the alpha span");
    }
}

F5Vec istar(int i, int j) {
    if (i > j) std::swap(i, j);
    if (j == 5) {
        if (i == 4) return {0, 0, 0};
        F5Vec v{};
        v[i - 1] = 1;
        return v;
    }
    if (i == 3 && j == 4) return {1, 1, 2};  // derived in istar_map
    auto [k, l] = complement(i, j);
    // e_ij = (e34 + e15 + e25) - e_k5 - e_l5, from E_ij = l - E_k5 - E_l5.
    F5Vec v = add5(add5(istar(3, 4), istar(1, 5)), istar(2, 5));
    v = add5(v, istar(k, 5), -1);
    v = add5(v, istar(l, 5), -1);
    return v;
}

void istar_map() {
    // Intersection divisors with the pencil member, verified exactly upstream.
    auto to_free = [](const pluecker::Divisor& d) {
        FreeDiv f;
        for (const auto& [k, v] : d) f[k] = v;
        return f;
    };
    FreeDiv k14 = to_free(pluecker::curve_intersection("k14"));
    FreeDiv l1 = to_free(pluecker::curve_intersection("l1"));
    FreeDiv l2 = to_free(pluecker::curve_intersection("l2"));

    // Replay the chain for (k14).
    FreeDiv k14_exp = expand_interior(k14);
    expect_fd(k14_exp,
              {{"l", 7}, {"D15", -4}, {"D25", 1}, {"D35", -6}, {"D45", -4}},
              "(k14) expanded");
    FreeDiv k14_sub = substitute_l(k14_exp);
    expect_fd(k14_sub,
              {{"D34", 7}, {"D15", 3}, {"D25", 8}, {"D35", -6}, {"D45", -4}},
              "(k14) with l substituted");

    // And for (l1); (l2) contains no interior divisors.
    FreeDiv l1_sub = substitute_l(expand_interior(l1));
    expect_fd(l1_sub,
              {{"D34", 3}, {"D15", 1}, {"D25", 1}, {"D35", 1}, {"D45", -2}},
              "(l1) with l substituted");
    expect_fd(expand_interior(l2),
              {{"D15", 1}, {"D25", 1}, {"D35", 1}, {"D45", 1}}, "(l2)");

    // k14 / (l1 l2) is a meromorphic function on the curve, so the relation
    // R = (k14) - (l1) - (l2) = 0 holds in its Picard group.
    FreeDiv rel = k14_sub - l1_sub - expand_interior(l2);
    expect_fd(rel, {{"D34", 4}, {"D15", 1}, {"D25", 6}, {"D35", -8}, {"D45", -3}},
              "relation 4 D34 = -D15 - 6 D25 + 8 D35 + 3 D45");
    long deg = 0;
    for (const auto& [k, v] : rel) deg += v;
    if (deg != 0) throw ChainFailed("relation has nonzero degree");

    // Modulo the five-torsion identifications 5 D_ij = 5 D_kl the relation
    // reads 4 e34 = -e15 - e25 + 3 e35, so e34 = e15 + e25 + 2 e35.
    F5Vec rhs{};
    rhs = add5(rhs, F5Vec{1, 0, 0}, -mod5(rel.at("D15")));
    rhs = add5(rhs, F5Vec{0, 1, 0}, -mod5(rel.at("D25")));
    rhs = add5(rhs, F5Vec{0, 0, 1}, -mod5(rel.at("D35")));
    F5Vec e34 = add5(F5Vec{}, rhs, 4);  // 4^-1 = 4 mod 5
    if (e34 != F5Vec{1, 1, 2}) throw ChainFailed("derived image of e34");

    // The printed table of all nine nonzero images.
    const std::map<std::pair<int, int>, F5Vec> printed = {
        {{1, 5}, {1, 0, 0}}, {{2, 5}, {0, 1, 0}}, {{3, 5}, {0, 0, 1}},
        {{1, 2}, {2, 2, 1}}, {{1, 3}, {2, 1, 2}}, {{2, 3}, {1, 2, 2}},
        {{1, 4}, {2, 1, 1}}, {{2, 4}, {1, 2, 1}}, {{3, 4}, {1, 1, 2}}};
    for (const auto& [ij, v] : printed)
        if (istar(ij.first, ij.second) != v)
            throw ChainFailed("table image of e" + std::to_string(ij.first) +
                              std::to_string(ij.second));
    if (istar(4, 5) != F5Vec{0, 0, 0}) throw ChainFailed("e45 is the base point");

    // K_C = i*(-K) = 5 D_15: torsion part vanishes and the degree is five
    // divisor units (ten points).
    FreeDiv mK = {{"l", 3}, {"D15", -1}, {"D25", -1}, {"D35", -1}, {"D45", -1}};
    FreeDiv kc_deg_zero = mK - FreeDiv{{"D15", 5}};
    if (f5_image(kc_deg_zero) != F5Vec{0, 0, 0})
        throw ChainFailed("K_C is not 5 D_15");

    // The images of the root basis span (Z/5Z)^3.
    std::vector<std::array<int, 3>> rows;
    auto diff = [](F5Vec a, const F5Vec& b) { return add5(a, b, -1); };
    rows.push_back(diff(istar(1, 5), istar(2, 5)));
    rows.push_back(diff(istar(2, 5), istar(3, 5)));
    rows.push_back(diff(istar(3, 5), istar(4, 5)));
    rows.push_back(diff(istar(3, 4), istar(3, 5)));  // alpha_4 = E34 - E35
    if (rank_mod5(rows) != 3) throw RankMismatch("image rank over F5 is not 3");

    // The permutation action descends to im(i*): for every permutation the
    // linear map determined on the basis also matches on all ten e_ij.
    std::vector<dp5::Perm> all;
    std::array<int, 5> img = {0, 1, 2, 3, 4};  // 0-based images
    do {
        dp5::Perm p;
        for (int i = 0; i < 5; ++i) p.img[i] = img[i];
        all.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    if (all.size() != 120) throw RankMismatch("permutation enumeration");

    std::map<std::array<int, 5>, Mat3> rep;
    for (const dp5::Perm& g : all) {
        Mat3 m = induced_matrix(g);
        for (auto [i, j] : all_pairs()) {
            F5Vec lhs = mat_apply(m, istar(i, j));
            F5Vec rhsv = diff(istar(g.apply(i), g.apply(j)),
                              istar(g.apply(4), g.apply(5)));
            if (lhs != rhsv)
                throw ChainFailed("equivariance fails for " + g.str() + " on e" +
                                  std::to_string(i) + std::to_string(j));
        }
        rep[g.img] = m;
    }
    // Homomorphism property of the induced representation.
    for (size_t a = 0; a < all.size(); a += 7)
        for (size_t b = 0; b < all.size(); b += 11) {
            dp5::Perm prod = all[a] * all[b];
            if (rep.at(prod.img) != mat_mul(rep.at(all[a].img), rep.at(all[b].img)))
                throw ChainFailed("induced action is not a homomorphism");
        }
    // The even permutations act faithfully.
    std::set<Mat3> even_images;
    for (const dp5::Perm& g : all)
        if (g.parity() == 1) even_images.insert(rep.at(g.img));
    if (even_images.size() != 60)
        throw RankMismatch("induced A5 action is not injective");

    // The quotient Q(A4) / 5 P(A4): the weight lattice satisfies C P = Q for
    // the Cartan matrix C, so 5 P has coordinate matrix adj(C) with respect
    // to the root basis; its Smith normal form gives the quotient group.
    const std::vector<std::vector<long>> cartan = {{2, -1, 0, 0},
                                                   {-1, 2, -1, 0},
                                                   {0, -1, 2, -1},
                                                   {0, 0, -1, 2}};
    // Adjugate via cofactors.
    auto det3 = [](std::array<std::array<long, 3>, 3> m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::vector<std::vector<long>> adj(4, std::vector<long>(4));
    long det = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::array<std::array<long, 3>, 3> minor{};
            for (int r = 0, rr = 0; r < 4; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < 4; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = cartan[r][c];
                }
                ++rr;
            }
            adj[j][i] = ((i + j) % 2 == 0 ? 1 : -1) * det3(minor);
        }
    for (int j = 0; j < 4; ++j) det += cartan[0][j] * adj[j][0];
    if (det != 5) throw RankMismatch("det of the A4 Cartan matrix is not 5");

    std::vector<long> diag = smith_diagonal(adj);
    std::vector<long> expected = {1, 5, 5, 5};
    if (diag != expected)
        throw RankMismatch("Smith normal form of the lattice quotient");
    long index = 1;
    for (long d : diag) index *= d;
    if (index != 125) throw RankMismatch("lattice index is not 125");
}

} // namespace dwork::pic
