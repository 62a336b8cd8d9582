#include "dwork/fibers.hpp"

#include "dwork/lines.hpp"
#include "dwork/plueckerdiv.hpp"
#include "dwork/numeric.hpp"
#include "dwork/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <sstream>

namespace dwork::fib {

namespace {

const std::array<Var, 5>& ambient_vars() {
    static const std::array<Var, 5> xs = {Var::x1, Var::x2, Var::x3, Var::x4, Var::x5};
    return xs;
}

std::string pt_name(int i, int j) {
    std::ostringstream os;
    os << i << j;
    return os.str();
}

} // namespace

// ---------------------------------------------------------------------------
// Moebius maps
// ---------------------------------------------------------------------------

CycElem MoebiusMap::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

RatFunc MoebiusMap::apply(const RatFunc& z) const {
    return (RatFunc(MPoly(m[0][0])) * z + RatFunc(MPoly(m[0][1]))) /
           (RatFunc(MPoly(m[1][0])) * z + RatFunc(MPoly(m[1][1])));
}

MoebiusMap MoebiusMap::after(const MoebiusMap& inner) const {
    MoebiusMap out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.m[i][j] = m[i][0] * inner.m[0][j] + m[i][1] * inner.m[1][j];
    return out;
}

MoebiusMap moebius_m2() {
    // z -> -1/z
    return MoebiusMap{{{{CycElem(0), CycElem(-1)}, {CycElem(1), CycElem(0)}}}};
}

MoebiusMap moebius_m3() {
    // z -> omega z
    return MoebiusMap{{{{CycElem::omega(), CycElem(0)}, {CycElem(0), CycElem(1)}}}};
}

MoebiusMap moebius_m5() {
    // The conjugate of w -> zeta w by the dodecahedral/icosahedral coordinate
    // change omega z = (w_inf w + 1)/(w - w_inf).
    CycElem w = CycElem::omega(), zt = CycElem::zeta(), wi = CycElem::w_infinity();
    CycElem one(1);
    return MoebiusMap{{{{zt * wi * wi + one, (zt - one) * w * w * wi},
                        {(zt - one) * w * wi, zt + wi * wi}}}};
}

// ---------------------------------------------------------------------------
// psi = 0: Fermat combinatorics
// ---------------------------------------------------------------------------

std::vector<IsolatedLine> isolated_lines() {
    std::vector<IsolatedLine> out;
    out.reserve(375);
    for (int z = 1; z <= 5; ++z) {
        std::vector<int> rest;
        for (int i = 1; i <= 5; ++i)
            if (i != z) rest.push_back(i);
        // The first pair always contains the smallest remaining position, so
        // each geometric line is enumerated exactly once.
        for (int p = 1; p <= 3; ++p) {
            std::array<int, 2> a{rest[0], rest[static_cast<size_t>(p)]};
            std::array<int, 2> b{};
            int n = 0;
            for (int q = 1; q <= 3; ++q)
                if (q != p) b[static_cast<size_t>(n++)] = rest[static_cast<size_t>(q)];
            for (int k = 0; k < 5; ++k)
                for (int l = 0; l < 5; ++l) out.push_back({a, k, b, l, z});
        }
    }
    return out;
}

std::vector<Cone> cones() {
    std::vector<Cone> out;
    out.reserve(50);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = 0; k < 5; ++k) out.push_back({{i, j}, k});
    return out;
}

namespace {

std::map<Var, MPoly> isolated_line_bindings(const IsolatedLine& L) {
    const auto& xs = ambient_vars();
    MPoly u = var(Var::u), v = var(Var::v);
    std::map<Var, MPoly> bind;
    bind[xs[static_cast<size_t>(L.pair_a[0] - 1)]] = u;
    bind[xs[static_cast<size_t>(L.pair_a[1] - 1)]] = MPoly(-CycElem::zeta_pow(L.k)) * u;
    bind[xs[static_cast<size_t>(L.pair_b[0] - 1)]] = v;
    bind[xs[static_cast<size_t>(L.pair_b[1] - 1)]] = MPoly(-CycElem::zeta_pow(L.l)) * v;
    bind[xs[static_cast<size_t>(L.zero_pos - 1)]] = MPoly(0);
    return bind;
}

bool line_in_cone(const IsolatedLine& L, const Cone& C) {
    return (L.pair_a == C.pair && L.k == C.k) || (L.pair_b == C.pair && L.l == C.k);
}

void fermat_cubic_warm_up() {
    const std::array<Var, 4> xs = {Var::x1, Var::x2, Var::x3, Var::x4};
    MPoly cubic(0);
    for (Var x : xs) cubic = cubic + var(x).pow(3);
    MPoly u = var(Var::u), v = var(Var::v);
    const std::array<std::array<int, 4>, 3> splits = {
        {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    int count = 0;
    for (const auto& sp : splits)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                std::map<Var, MPoly> bind;
                bind[xs[static_cast<size_t>(sp[0])]] = u;
                bind[xs[static_cast<size_t>(sp[1])]] = MPoly(-CycElem::omega_pow(j)) * u;
                bind[xs[static_cast<size_t>(sp[2])]] = v;
                bind[xs[static_cast<size_t>(sp[3])]] = MPoly(-CycElem::omega_pow(k)) * v;
                require_zero(substitute_poly(cubic, bind), "cubic warm-up line");
                ++count;
            }
    if (count != 27) throw CountMismatch("Fermat cubic warm-up expects 27 lines");
}

} // namespace

void fermat_combinatorics() {
    const auto ls = isolated_lines();
    const auto cs = cones();
    if (ls.size() != 375) throw CountMismatch("expected 375 isolated lines");
    if (cs.size() != 50) throw CountMismatch("expected 50 cones");

    // Every isolated line lies on the quintic identically in psi.
    MPoly q = lines::quintic();
    for (const auto& L : ls)
        require_zero(substitute_poly(q, isolated_line_bindings(L)), "isolated line on quintic");

    // Every cone apex lies on the pencil identically in psi, and the
    // direction of any member line satisfies the plane-quintic equation
    // a^5 + b^5 + c^5 = 0 (one coordinate zero, the other two 1, -zeta^l).
    const auto& xs = ambient_vars();
    for (const auto& C : cs) {
        std::map<Var, MPoly> bind;
        for (Var x : xs) bind[x] = MPoly(0);
        bind[xs[static_cast<size_t>(C.pair[0] - 1)]] = MPoly(1);
        bind[xs[static_cast<size_t>(C.pair[1] - 1)]] = MPoly(-CycElem::zeta_pow(C.k));
        require_zero(substitute_poly(q, bind), "cone apex on quintic");
    }
    for (int l = 0; l < 5; ++l) {
        CycElem s = CycElem(1) + (-CycElem::zeta_pow(l)) * (-CycElem::zeta_pow(l)) *
                                     (-CycElem::zeta_pow(l)) * (-CycElem::zeta_pow(l)) *
                                     (-CycElem::zeta_pow(l));
        if (!s.is_zero()) throw CountMismatch("cone direction is not on the plane quintic");
    }

    // Incidence: 15 lines per cone, each line on exactly 2 cones, 15 cones
    // met per cone, meeting cones share exactly one line.
    std::vector<std::set<size_t>> members(cs.size());
    for (size_t ci = 0; ci < cs.size(); ++ci) {
        for (size_t li = 0; li < ls.size(); ++li)
            if (line_in_cone(ls[li], cs[ci])) members[ci].insert(li);
        if (members[ci].size() != 15) throw CountMismatch("cone does not contain 15 lines");
    }
    for (size_t li = 0; li < ls.size(); ++li) {
        int on = 0;
        for (size_t ci = 0; ci < cs.size(); ++ci) on += members[ci].count(li) ? 1 : 0;
        if (on != 2) throw CountMismatch("isolated line is not on exactly 2 cones");
    }
    for (size_t a = 0; a < cs.size(); ++a) {
        int met = 0;
        for (size_t b = 0; b < cs.size(); ++b) {
            if (a == b) continue;
            std::vector<size_t> common;
            std::set_intersection(members[a].begin(), members[a].end(), members[b].begin(),
                                  members[b].end(), std::back_inserter(common));
            bool disjoint_pairs = cs[a].pair[0] != cs[b].pair[0] && cs[a].pair[0] != cs[b].pair[1] &&
                                  cs[a].pair[1] != cs[b].pair[0] && cs[a].pair[1] != cs[b].pair[1];
            size_t expect = disjoint_pairs ? 1 : 0;
            if (common.size() != expect)
                throw CountMismatch("cone pair intersection is not a single line");
            if (!common.empty()) ++met;
        }
        if (met != 15) throw CountMismatch("cone does not meet exactly 15 cones");
    }

    fermat_cubic_warm_up();
}

// ---------------------------------------------------------------------------
// psi = 0: the cover of the parameter line sigma = 0
// ---------------------------------------------------------------------------

void fermat_fiber_cover() {
    auto pij = pluecker::pij_polynomials();
    const auto& pairs = pluecker::index_pairs();
    std::map<std::string, MPoly> r;
    for (int k = 0; k < 10; ++k)
        r[pt_name(pairs[static_cast<size_t>(k)].first, pairs[static_cast<size_t>(k)].second)] =
            pij[static_cast<size_t>(k)]
                .eval_var(Var::sigma1, CycElem(0))
                .eval_var(Var::sigma2, CycElem(1))
                .eval_var(Var::tau2, CycElem(1))
                .rename_var(Var::tau1, Var::tau);

    // Vanishing set {15, 23, 24, 34} and exact values of the rest.
    for (const std::string& id : {"15", "23", "24", "34"})
        if (!r[id].is_zero()) throw RestrictionMismatch("p" + id + " should vanish on sigma=0");
    MPoly tau = var(Var::tau), one(1);
    MPoly X = tau * tau - tau + one;
    auto expect = [&](const std::string& id, const MPoly& val) {
        if (!(r[id] - val).is_zero())
            throw RestrictionMismatch("restriction of p" + id + " differs from the derived value");
    };
    expect("12", (tau - one) * X);
    expect("25", (tau - one) * X);
    expect("13", X);
    expect("35", X);
    expect("45", MPoly(-1) * tau * X);
    expect("14", MPoly(-1) * tau * X);

    // The displayed restrictions match for 12, 25, 13 (printed in the 23
    // slot) and 35; the displayed (tau+1) factor of p45 = -p14 does not: the
    // true factor is tau.  Keep that corrected fact machine-checked.
    constant_ratio(r["12"], (tau - one) * X, "p12 restriction vs display");
    constant_ratio(r["13"], X, "p13 restriction vs display");
    bool printed_p45 = true;
    try {
        constant_ratio(r["45"], (tau + one) * X, "p45 restriction vs display");
    } catch (const IdentityFailed&) {
        printed_p45 = false;
    }
    if (printed_p45)
        throw RestrictionMismatch("p45 restriction unexpectedly matches the (tau+1) display");

    // The cover of the line is generated by fifth roots of the ratios
    // p_ij / p45; modulo fifth powers these are tau - 1 and tau.
    require_equal(RatFunc(r["12"]) / RatFunc(r["45"]), RatFunc(MPoly(-1) * (tau - one), tau),
                  "ratio p12/p45");
    require_equal(RatFunc(r["13"]) / RatFunc(r["45"]), RatFunc(MPoly(-1), tau), "ratio p13/p45");

    // T^5 = tau - 1 and U^5 = tau give, with t := T, the curve
    // U^5 - t^5 - 1 = 0, i.e. U^5 + (-t)^5 + (-1)^5 = 0: a Fermat quintic.
    MPoly U = var(Var::Ucov), t = var(Var::t);
    MPoly corrected = substitute_poly(U.pow(5) - tau, {{Var::tau, t.pow(5) + one}});
    require_zero(corrected - (U.pow(5) - t.pow(5) - one), "corrected cover after t^5 = tau - 1");
    require_zero(corrected - (U.pow(5) + (MPoly(-1) * t).pow(5) + MPoly(CycElem(-1)).pow(5)),
                 "corrected cover in Fermat form");
    // The displayed chain is internally consistent: U^5 + tau + 1 becomes
    // U^5 + t^5 + 2 under the same substitution.
    MPoly displayed = substitute_poly(U.pow(5) + tau + one, {{Var::tau, t.pow(5) + one}});
    require_zero(displayed - (U.pow(5) + t.pow(5) + MPoly(2)), "displayed cover substitution");

    // The recovered lines span((1,0,0,0,-zeta^a), (0,b,c,d,0)) lie on the
    // Fermat quintic exactly when b^5 + c^5 + d^5 = 0.
    MPoly fermat = lines::quintic().eval_var(Var::psi, CycElem(0));
    MPoly u = var(Var::u), v = var(Var::v);
    MPoly b = var(Var::b), c = var(Var::c), d = var(Var::d);
    for (int a = 0; a < 5; ++a) {
        std::map<Var, MPoly> bind = {{Var::x1, u},
                                     {Var::x2, v * b},
                                     {Var::x3, v * c},
                                     {Var::x4, v * d},
                                     {Var::x5, MPoly(-CycElem::zeta_pow(a)) * u}};
        MPoly res = substitute_poly(fermat, bind);
        require_zero(res - v.pow(5) * (b.pow(5) + c.pow(5) + d.pow(5)),
                     "recovered line reduces to the plane quintic condition");
    }
}

// ---------------------------------------------------------------------------
// psi = 1 (conifold): nodes and parametrization
// ---------------------------------------------------------------------------

CycElem conifold_phi() { return CycElem::sqrt5() * CycElem(Rat(5, 2)); }

namespace {

MPoly fplus_at(const CycElem& phi) { return lines::g_poly() + MPoly(phi) * lines::h_poly(); }

CycElem golden() { return (CycElem(1) + CycElem::sqrt5()) * CycElem(Rat(1, 2)); }
CycElem golden_conj() { return (CycElem(3) - CycElem::sqrt5()) * CycElem(Rat(1, 2)); }

// R1(z; phi) of the conifold parametrization, as a numerator/denominator pair
// in the given z variable with homogenizing partner absent (affine).
std::pair<MPoly, MPoly> r1_pair(const MPoly& phi) {
    MPoly z = var(Var::zline);
    MPoly num = MPoly(20) * z.pow(4) + (MPoly(15) - MPoly(2) * phi) * z.pow(3) +
                MPoly(3) * (MPoly(5) + MPoly(2) * phi) * z.pow(2) -
                (MPoly(15) - MPoly(2) * phi) * z + MPoly(20);
    MPoly den = MPoly(6) * z * (MPoly(5) * z * z + MPoly(2) * phi * z - MPoly(5));
    return {num, den};
}

std::pair<MPoly, MPoly> substituted_pair(const std::pair<MPoly, MPoly>& f,
                                         const std::map<Var, MPoly>& bind) {
    return {substitute_poly(f.first, bind), substitute_poly(f.second, bind)};
}

} // namespace

std::pair<RatFunc, RatFunc> conifold_rational_maps() {
    CycElem w2 = CycElem::omega() * CycElem::omega();
    auto [n1, d1] = r1_pair(MPoly(conifold_phi()));
    auto [n2raw, d2raw] = r1_pair(MPoly(-conifold_phi()));
    std::map<Var, MPoly> swap_z = {{Var::zline, MPoly(-w2) * var(Var::zline)}};
    // R2(z) = 1 / R1(-omega^2 z, -phi)
    return {RatFunc(n1, d1),
            RatFunc(substitute_poly(d2raw, swap_z), substitute_poly(n2raw, swap_z))};
}

std::pair<RatFunc, RatFunc> sigma_tau_action(const dp5::Perm& g, const RatFunc& s,
                                             const RatFunc& t) {
    auto z = dp5::psi_map(s, t);
    auto M = dp5::s5_rep(g.inverse());
    std::array<RatFunc, 6> zz;
    for (int i = 0; i < 6; ++i) {
        RatFunc acc;
        for (int j = 0; j < 6; ++j)
            acc += RatFunc(MPoly(M[static_cast<size_t>(i)][static_cast<size_t>(j)])) *
                   z[static_cast<size_t>(j)];
        zz[static_cast<size_t>(i)] = acc;
    }
    return {(zz[3] - zz[5]) / zz[4], (zz[3] - zz[4]) / zz[5]};
}

dp5::Perm conifold_g2() { return dp5::Perm::from_cycles({{1, 4}, {2, 5}}); }
dp5::Perm conifold_g3() { return dp5::Perm::from_cycles({{2, 5, 3}}); }
dp5::Perm conifold_g5() { return dp5::Perm::from_cycles({{1, 3, 5, 4, 2}}); }

void conifold_nodes() {
    MPoly F = fplus_at(conifold_phi());
    MPoly Fs = F.derivative(Var::sigma), Ft = F.derivative(Var::tau);
    MPoly Fss = Fs.derivative(Var::sigma), Fst = Fs.derivative(Var::tau),
          Ftt = Ft.derivative(Var::tau);

    CycElem g = golden(), h = golden_conj();
    const std::vector<std::pair<CycElem, CycElem>> nodes = {{g, g},  {-g, -g}, {g, h},
                                                            {-g, h}, {h, g},   {h, -g}};
    for (const auto& [sv, tv] : nodes) {
        std::map<Var, CycElem> at = {{Var::sigma, sv}, {Var::tau, tv}};
        if (!F.eval(at).is_zero() || !Fs.eval(at).is_zero() || !Ft.eval(at).is_zero())
            throw NodeFailed("listed point is not a singular point of F+");
        CycElem hess = Fss.eval(at) * Ftt.eval(at) - Fst.eval(at) * Fst.eval(at);
        if (hess.is_zero()) throw NodeFailed("degenerate Hessian at a listed node");
    }

    // Negative control: (2, 3) is not on the curve (and G(2,3) = 507).
    std::map<Var, CycElem> probe = {{Var::sigma, CycElem(2)}, {Var::tau, CycElem(3)}};
    if (F.eval(probe).is_zero()) throw NodeFailed("(2,3) unexpectedly lies on F+");
    if (!(lines::g_poly().eval(probe) == CycElem(507)))
        throw NodeFailed("G(2,3) != 507");

    // No unlisted affine singularities: the common sigma-locus of
    // Res_tau(F, F_tau) and Res_tau(F, F_sigma) is confined to the node
    // abscissae {0, 1, (1+sqrt5)/2, -(1+sqrt5)/2, (3-sqrt5)/2}.
    UPoly ra = u_from_mpoly(resultant(F, Ft, Var::tau), Var::sigma);
    UPoly rb = u_from_mpoly(resultant(F, Fs, Var::tau), Var::sigma);
    UPoly gc = u_gcd(ra, rb);
    for (const CycElem& root : {CycElem(1), g, -g, h})
        if (!u_eval(gc, root).is_zero())
            throw NodeFailed("singular locus misses a listed node abscissa");
    for (const CycElem& root : {CycElem(0), CycElem(1), g, -g, h}) {
        UPoly lin = {-root, CycElem(1)};
        for (;;) {
            UPoly quot;
            if (u_degree(u_mod(gc, lin, &quot)) >= 0) break;
            if (quot.empty()) break;
            gc = quot;
            if (u_degree(gc) == 0) break;
        }
    }
    if (u_degree(gc) != 0) throw NodeFailed("extra singular sigma-values at phi = 5 sqrt5/2");
}

void conifold_parametrization(uint64_t seed, int words) {
    auto [R1, R2] = conifold_rational_maps();

    // F+(R1(z), R2(z)) = 0 exactly.
    MPoly F = fplus_at(conifold_phi());
    require_zero(substitute(F, {{Var::sigma, R1}, {Var::tau, R2}}), "F+(R1,R2)");

    // Structural relation with a formal phi: R2(z; phi) * R1(-w^2 z; -phi) = 1.
    {
        CycElem w2 = CycElem::omega() * CycElem::omega();
        auto f1 = r1_pair(var(Var::phi));
        std::map<Var, MPoly> flip = {{Var::zline, MPoly(-w2) * var(Var::zline)},
                                     {Var::phi, MPoly(-1) * var(Var::phi)}};
        auto f1f = substituted_pair(f1, flip);
        RatFunc R2f(f1f.second, f1f.first);
        require_equal(R2f * RatFunc(f1f.first, f1f.second), RatFunc(1), "R2 * R1(-w^2 z,-phi)");
        require_equal(substitute(R2f.num(), {{Var::phi, RatFunc(MPoly(conifold_phi()))}}) /
                          substitute(R2f.den(), {{Var::phi, RatFunc(MPoly(conifold_phi()))}}),
                      R2, "R2 at phi = 5 sqrt5/2");
    }

    // Equivariance for the three Moebius generators.
    auto pullback = [](const RatFunc& f, const RatFunc& m) {
        return substitute(f.num(), {{Var::zline, m}}) / substitute(f.den(), {{Var::zline, m}});
    };
    RatFunc Z = RatFunc::variable(Var::zline);
    const std::vector<std::pair<MoebiusMap, dp5::Perm>> gens = {
        {moebius_m2(), conifold_g2()}, {moebius_m3(), conifold_g3()}, {moebius_m5(), conifold_g5()}};
    for (const auto& [m, g] : gens) {
        RatFunc mz = m.apply(Z);
        auto [rs, rt] = sigma_tau_action(g, R1, R2);
        if (!(pullback(R1, mz) == rs && pullback(R2, mz) == rt))
            throw IdentityFailed("equivariance fails for generator " + g.str());
    }

    // Random composed words: the composed Moebius map must realize the
    // composed permutation.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2), len(2, 5);
    for (int wword = 0; wword < words; ++wword) {
        int n = len(rng);
        MoebiusMap M = gens[0].first;
        dp5::Perm g;
        bool first = true;
        for (int i = 0; i < n; ++i) {
            int k = pick(rng);
            if (first) {
                M = gens[static_cast<size_t>(k)].first;
                g = gens[static_cast<size_t>(k)].second;
                first = false;
            } else {
                M = M.after(gens[static_cast<size_t>(k)].first);
                // The substitution action reverses products: pulling back
                // along m_a then m_b realizes g_b * g_a on (sigma, tau).
                g = gens[static_cast<size_t>(k)].second * g;
            }
        }
        if (M.det().is_zero()) throw IdentityFailed("degenerate composed Moebius map");
        RatFunc mz = M.apply(Z);
        auto [rs, rt] = sigma_tau_action(g, R1, R2);
        if (!(pullback(R1, mz) == rs && pullback(R2, mz) == rt))
            throw IdentityFailed("equivariance fails for a composed word");
    }

    // z = 0 and z = infinity both map to (infinity, 0).
    auto value_at_zero = [](const MPoly& p) { return p.eval_var(Var::zline, CycElem(0)); };
    if (!value_at_zero(R1.den()).is_zero() || value_at_zero(R1.num()).is_zero())
        throw IdentityFailed("R1(0) is not infinity");
    if (!value_at_zero(R2.num()).is_zero() || value_at_zero(R2.den()).is_zero())
        throw IdentityFailed("R2(0) is not 0");
    if (!(R1.num().degree(Var::zline) > R1.den().degree(Var::zline)))
        throw IdentityFailed("R1(infinity) is not infinity");
    if (!(R2.num().degree(Var::zline) < R2.den().degree(Var::zline)))
        throw IdentityFailed("R2(infinity) is not 0");

    // The fixed points of m5 map to the node (-(1+sqrt5)/2, (3-sqrt5)/2):
    // the fixed-point quadratic divides the numerators of R1 + (1+sqrt5)/2
    // and R2 - (3-sqrt5)/2.
    MoebiusMap m5 = moebius_m5();
    MPoly z = var(Var::zline);
    MPoly fixq = MPoly(m5.m[1][0]) * z * z + MPoly(m5.m[1][1] - m5.m[0][0]) * z -
                 MPoly(m5.m[0][1]);
    UPoly fq = u_from_mpoly(fixq, Var::zline);
    UPoly na = u_from_mpoly(R1.num() + MPoly(golden()) * R1.den(), Var::zline);
    UPoly nb = u_from_mpoly(R2.num() - MPoly(golden_conj()) * R2.den(), Var::zline);
    if (u_degree(u_mod(na, fq)) >= 0 || u_degree(u_mod(nb, fq)) >= 0)
        throw IdentityFailed("fixed points of m5 do not map to the listed node");
}

// ---------------------------------------------------------------------------
// psi = 1: the quadric surface and its line family
// ---------------------------------------------------------------------------

namespace {

// Elementary symmetric functions of x1..x5.
std::array<MPoly, 5> elementary_symmetric() {
    const auto& xs = ambient_vars();
    std::array<MPoly, 5> s = {MPoly(0), MPoly(0), MPoly(0), MPoly(0), MPoly(1)};
    for (int i = 0; i < 5; ++i) s[0] = s[0] + var(xs[static_cast<size_t>(i)]);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            s[1] = s[1] + var(xs[static_cast<size_t>(i)]) * var(xs[static_cast<size_t>(j)]);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                s[2] = s[2] + var(xs[static_cast<size_t>(i)]) * var(xs[static_cast<size_t>(j)]) *
                                  var(xs[static_cast<size_t>(k)]);
    for (int i = 0; i < 5; ++i) {
        MPoly prod(1);
        for (int j = 0; j < 5; ++j)
            if (j != i) prod = prod * var(xs[static_cast<size_t>(j)]);
        s[3] = s[3] + prod;
    }
    for (int i = 0; i < 5; ++i) s[4] = s[4] * var(xs[static_cast<size_t>(i)]);
    return s;
}

struct UpsilonCoeffs {
    CycElem b, c, d;
};

UpsilonCoeffs upsilon_coeffs() {
    auto ep = [](int k) { return CycElem::eta_pow(k); };
    CycElem b = -ep(7) + ep(5) - CycElem(2) * ep(4) + ep(3) - ep(2) - CycElem(2) * ep(1);
    CycElem c = -CycElem(2) * ep(7) + ep(5) - CycElem(2) * ep(4) + CycElem(2) * ep(3) -
                CycElem(2) * ep(2) - CycElem(2) * ep(1) + CycElem(2);
    CycElem d = -CycElem(10) * ep(7) + CycElem(10) * ep(3) - CycElem(10) * ep(2) + CycElem(5);
    return {b, c, d};
}

// The line family Upsilon(z, u): x_i = A_i(z, w) u + B_i(z, w), written with
// homogeneous (z : w) so the Pluecker coordinates come out as binary
// quadratics.
struct UpsilonForms {
    std::array<MPoly, 5> A, B;
};

UpsilonForms upsilon_forms() {
    auto [b, c, d] = upsilon_coeffs();
    CycElem w = CycElem::omega();
    MPoly z = var(Var::zline), hw = var(Var::w);
    UpsilonForms f;
    f.A = {MPoly(-(b + CycElem(3)) * c) * z, MPoly(c) * z + MPoly(5) * hw,
           MPoly(c) * z + MPoly(CycElem(5) * w) * hw, MPoly(b * c) * z,
           MPoly(c) * z + MPoly(CycElem(5) * w * w) * hw};
    f.B = {MPoly(CycElem(5) * b) * hw, MPoly(w * d) * z + MPoly(5) * hw,
           MPoly(d) * z + MPoly(5) * hw, MPoly(-CycElem(5) * (b + CycElem(3))) * hw,
           MPoly(w * w * d) * z + MPoly(5) * hw};
    return f;
}

const std::array<std::pair<int, int>, 10>& zero_based_pairs() {
    static const std::array<std::pair<int, int>, 10> ps = {
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    return ps;
}

std::array<MPoly, 10> upsilon_pluecker() {
    auto f = upsilon_forms();
    std::array<MPoly, 10> out;
    int k = 0;
    for (const auto& [i, j] : zero_based_pairs())
        out[static_cast<size_t>(k++)] = f.A[static_cast<size_t>(i)] * f.B[static_cast<size_t>(j)] -
                                        f.A[static_cast<size_t>(j)] * f.B[static_cast<size_t>(i)];
    return out;
}

// Reduce the Var::b degree of f using b^2 = -3b - 6.
MPoly reduce_b(MPoly f) {
    MPoly rel = var(Var::b) * var(Var::b) + MPoly(3) * var(Var::b) + MPoly(6);
    for (;;) {
        auto cs = f.coefficients_in(Var::b);
        if (cs.size() <= 2) return f;
        size_t dtop = cs.size() - 1;
        f = f - cs[dtop] * var(Var::b).pow(static_cast<unsigned>(dtop - 2)) * rel;
    }
}

void dodecahedral_polynomial_checks() {
    CycElem s5 = CycElem::sqrt5();
    MPoly z = var(Var::zline);
    // The vertex polynomial: its 18 roots together with {0, infinity} form
    // the orbit of z = 0 under <m2, m3, m5>, the dodecahedral vertex set.
    MPoly p = MPoly(8) * z.pow(18) + MPoly(CycElem(57) * s5) * z.pow(15) - MPoly(228) * z.pow(12) +
              MPoly(CycElem(494) * s5) * z.pow(9) + MPoly(228) * z.pow(6) +
              MPoly(CycElem(57) * s5) * z.pow(3) - MPoly(8);
    // The variant with all three sqrt5 coefficients negated describes the
    // mirror set: its roots are exactly the negatives of the vertices.
    MPoly mirror = MPoly(8) * z.pow(18) - MPoly(CycElem(57) * s5) * z.pow(15) -
                   MPoly(228) * z.pow(12) - MPoly(CycElem(494) * s5) * z.pow(9) +
                   MPoly(228) * z.pow(6) - MPoly(CycElem(57) * s5) * z.pow(3) - MPoly(8);
    require_zero(substitute_poly(p, {{Var::zline, MPoly(-1) * z}}) - mirror,
                 "mirror polynomial is the vertex polynomial at -z");

    // Exact invariances: z -> omega z fixes p, z -> -1/z negates it.
    require_zero(substitute_poly(p, {{Var::zline, MPoly(CycElem::omega()) * z}}) - p,
                 "dodecahedral polynomial under z -> omega z");
    RatFunc inv = substitute(p, {{Var::zline, RatFunc(MPoly(-1), z)}});
    require_equal(inv, RatFunc(MPoly(-1) * p, z.pow(18)),
                  "dodecahedral polynomial under z -> -1/z");

    // Numeric: the 18 roots together with {0, infinity} are permuted by m5
    // and the root set is closed under z -> -1/z (van Geemen pairs).
    using Cx = std::complex<double>;
    std::array<Cx, 19> coeff{};  // coeff[k] of z^k
    for (const auto& [mono, cf] : p.terms())
        coeff[mono.exp(Var::zline)] = embed_double(cf);
    std::vector<Cx> roots(18);
    for (int i = 0; i < 18; ++i)
        roots[static_cast<size_t>(i)] = std::pow(Cx(0.4, 0.9), i + 1);
    auto eval = [&](Cx x) {
        Cx acc = 0;
        for (int k = 18; k >= 0; --k) acc = acc * x + coeff[static_cast<size_t>(k)];
        return acc;
    };
    for (int it = 0; it < 1000; ++it) {
        double moved = 0;
        for (int i = 0; i < 18; ++i) {
            Cx denom = coeff[18];
            for (int j = 0; j < 18; ++j)
                if (j != i) denom *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            Cx delta = eval(roots[static_cast<size_t>(i)]) / denom;
            roots[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    for (const Cx& r : roots)
        if (std::abs(eval(r)) > 1e-8 * std::abs(coeff[18]) * 1e3)
            throw IdentityFailed("dodecahedral root finding did not converge");

    auto in_vertex_set = [&](bool infinite, Cx v) {
        if (infinite) return true;  // infinity is a dodecahedral vertex
        double best = std::abs(v);  // distance to the vertex 0
        for (const Cx& r : roots) best = std::min(best, std::abs(v - r));
        return best < 1e-9 * (1.0 + std::abs(v));
    };
    MoebiusMap m5 = moebius_m5();
    Cx a = embed_double(m5.m[0][0]), bq = embed_double(m5.m[0][1]), cq = embed_double(m5.m[1][0]),
       dq = embed_double(m5.m[1][1]);
    auto apply_m5 = [&](Cx x, bool at_inf) -> std::pair<bool, Cx> {
        Cx num = at_inf ? a : a * x + bq;
        Cx den = at_inf ? cq : cq * x + dq;
        if (std::abs(den) < 1e-9 * std::abs(num)) return {true, Cx(0, 0)};
        return {false, num / den};
    };
    for (const Cx& r : roots) {
        auto [inf, v] = apply_m5(r, false);
        if (!in_vertex_set(inf, v)) throw IdentityFailed("m5 does not permute the vertex set");
        if (!in_vertex_set(false, Cx(-1, 0) / r))
            throw IdentityFailed("root set is not closed under z -> -1/z");
    }
    auto [inf0, v0] = apply_m5(Cx(0, 0), false);
    auto [infi, vi] = apply_m5(Cx(0, 0), true);
    if (!in_vertex_set(inf0, v0) || !in_vertex_set(infi, vi))
        throw IdentityFailed("m5 does not keep {0, infinity} inside the vertex set");
}

} // namespace

void quadric_fiber() {
    // The psi = 1 member in elementary symmetric functions:
    // sum x^5 - 5 s5 = s1^5 - 5 [ s2 s3 + s1 (s4 - s2^2 - s1 s3 + s1^2 s2) ],
    // i.e. -5 times the displayed form s2 s3 + s1 (... - s1^4/5).
    auto s = elementary_symmetric();
    MPoly power_sum(0);
    for (Var x : ambient_vars()) power_sum = power_sum + var(x).pow(5);
    MPoly rhs = s[0].pow(5) -
                MPoly(5) * (s[1] * s[2] + s[0] * (s[3] - s[1] * s[1] - s[0] * s[2] +
                                                  s[0] * s[0] * s[1]));
    require_zero(power_sum - MPoly(5) * s[4] - rhs, "symmetric-function form of the equation");

    // b^2 + 3b + 6 = 0: both closed-form roots and the eta-expression.
    CycElem sm15 = CycElem::sqrt_minus15();
    CycElem bp = (CycElem(-3) + sm15) * CycElem(Rat(1, 2));
    CycElem bm = (CycElem(-3) - sm15) * CycElem(Rat(1, 2));
    auto bquad = [](const CycElem& x) { return x * x + CycElem(3) * x + CycElem(6); };
    if (!bquad(bp).is_zero() || !bquad(bm).is_zero())
        throw IdentityFailed("b_+- do not solve b^2 + 3b + 6 = 0");
    auto [b, c, d] = upsilon_coeffs();
    if (!bquad(b).is_zero()) throw IdentityFailed("eta-expression b fails b^2 + 3b + 6 = 0");
    if (!(b == bp || b == bm)) throw IdentityFailed("eta-expression b is not one of b_+-");
    (void)c;
    (void)d;

    // The van Geemen lines l_+-: with a formal b subject to b^2 + 3b + 6 = 0,
    // the line (u+v, wu+v, w^2u+v, bv, -(b+3)v) has s1 = s2 = 0 and lies on
    // the psi = 1 quintic.
    {
        CycElem w = CycElem::omega();
        MPoly u = var(Var::u), v = var(Var::v), fb = var(Var::b);
        std::map<Var, MPoly> bind = {{Var::x1, u + v},
                                     {Var::x2, MPoly(w) * u + v},
                                     {Var::x3, MPoly(w * w) * u + v},
                                     {Var::x4, fb * v},
                                     {Var::x5, (MPoly(-1) * fb - MPoly(3)) * v}};
        require_zero(substitute_poly(s[0], bind), "s1 on the van Geemen line");
        require_zero(reduce_b(substitute_poly(s[1], bind)), "s2 on the van Geemen line");
        MPoly quintic1 = lines::quintic().eval_var(Var::psi, CycElem(1));
        require_zero(reduce_b(substitute_poly(quintic1, bind)), "van Geemen line on M_1");
    }

    // Upsilon(z, u): s1 = s2 = 0 and the image lies on the psi = 1 quintic.
    {
        auto f = upsilon_forms();
        MPoly u = var(Var::u);
        std::map<Var, MPoly> bind;
        for (int i = 0; i < 5; ++i)
            bind[ambient_vars()[static_cast<size_t>(i)]] =
                f.A[static_cast<size_t>(i)] * u + f.B[static_cast<size_t>(i)];
        require_zero(substitute_poly(s[0], bind), "s1(Upsilon)");
        require_zero(substitute_poly(s[1], bind), "s2(Upsilon)");
        MPoly quintic1 = lines::quintic().eval_var(Var::psi, CycElem(1));
        require_zero(substitute_poly(quintic1, bind), "Upsilon lies on M_1");
    }

    // Moebius equivariance of the line family, on Pluecker vectors: the
    // pullback of pi along m_k is projectively the g_k-permuted vector.
    {
        auto P = upsilon_pluecker();
        for (const auto& p : P)
            if (p.total_degree() > 2) throw IdentityFailed("Pluecker form is not quadratic");
        const auto& prs = zero_based_pairs();
        RatFunc Z = RatFunc::variable(Var::zline);
        const std::vector<std::pair<MoebiusMap, dp5::Perm>> gens = {{moebius_m2(), conifold_g2()},
                                                                    {moebius_m3(), conifold_g3()},
                                                                    {moebius_m5(), conifold_g5()}};
        for (const auto& [m, g] : gens) {
            RatFunc mz = m.apply(Z);
            std::array<RatFunc, 10> pulled, target;
            for (int k = 0; k < 10; ++k) {
                // dehomogenize at w = 1, pull back along m
                MPoly aff = P[static_cast<size_t>(k)].eval_var(Var::w, CycElem(1));
                pulled[static_cast<size_t>(k)] = substitute(aff, {{Var::zline, mz}});
                // substitution action x_i -> x_{g(i)} on coordinates
                int gi = g.apply(prs[static_cast<size_t>(k)].first + 1) - 1;
                int gj = g.apply(prs[static_cast<size_t>(k)].second + 1) - 1;
                int sgn = 1;
                if (gi > gj) {
                    std::swap(gi, gj);
                    sgn = -1;
                }
                size_t slot = 0;
                while (prs[slot] != std::pair<int, int>{gi, gj}) ++slot;
                target[static_cast<size_t>(k)] =
                    RatFunc(MPoly(sgn) * P[slot].eval_var(Var::w, CycElem(1)));
            }
            int ref = -1;
            for (int k = 0; k < 10; ++k)
                if (!pulled[static_cast<size_t>(k)].is_zero() &&
                    !target[static_cast<size_t>(k)].is_zero()) {
                    ref = k;
                    break;
                }
            if (ref < 0) throw IdentityFailed("degenerate Pluecker vector");
            for (int k = 0; k < 10; ++k)
                if (!(pulled[static_cast<size_t>(k)] * target[static_cast<size_t>(ref)] ==
                      target[static_cast<size_t>(k)] * pulled[static_cast<size_t>(ref)]))
                    throw IdentityFailed("line equivariance fails for generator " + g.str());
        }
    }

    dodecahedral_polynomial_checks();
}

// ---------------------------------------------------------------------------
// psi = 1: fifth-power splitting of the Pluecker forms
// ---------------------------------------------------------------------------

namespace {

// Exact fifth root of a binary form in (zline, w) that is a constant times a
// perfect fifth power; throws NotAFifthPower otherwise.
MPoly binary_form_fifth_root(const MPoly& q) {
    int total = q.total_degree();
    int dz = q.degree(Var::zline);
    if (dz < 0) dz = 0;
    int wmult = total - dz;  // multiplicity of the root at z = infinity
    if (total % 5 != 0 || wmult % 5 != 0) throw NotAFifthPower("degrees not divisible by 5");
    UPoly u = u_from_mpoly(q.eval_var(Var::w, CycElem(1)), Var::zline);
    // Square-free chain: after four gcd-with-derivative steps a multiplicity-5
    // factorization leaves exactly the radical.
    UPoly rad = u;
    for (int i = 0; i < 4; ++i) rad = u_gcd(rad, u_derivative(rad));
    rad = u_monic(rad);
    if (u_degree(rad) * 5 != dz) throw NotAFifthPower("multiplicity pattern is not uniform");
    UPoly r5 = rad;
    for (int i = 0; i < 4; ++i) r5 = u_mul(r5, rad);
    UPoly quot;
    if (u_degree(u_mod(u, r5, &quot)) >= 0 || u_degree(quot) != 0)
        throw NotAFifthPower("radical^5 does not divide the form");
    MPoly root = u_to_mpoly(rad, Var::zline);
    return homogenize(root, {{Var::zline, Var::zline, Var::w,
                              static_cast<unsigned>(total / 5)}});
}

} // namespace

std::map<std::string, CycElem> conifold_pluecker_split() {
    CycElem w2 = CycElem::omega() * CycElem::omega();
    MPoly z = var(Var::zline);
    auto homog4 = [&](const std::pair<MPoly, MPoly>& f) {
        std::vector<HomGroup> gr = {{Var::zline, Var::zline, Var::w, 4}};
        return std::pair<MPoly, MPoly>{homogenize(f.first, gr), homogenize(f.second, gr)};
    };
    auto [r1n, r1d] = homog4(r1_pair(MPoly(conifold_phi())));
    auto flipped = homog4(r1_pair(MPoly(-conifold_phi())));
    std::map<Var, MPoly> swap_z = {{Var::zline, MPoly(-w2) * z}};
    MPoly r2n = substitute_poly(flipped.second, swap_z);
    MPoly r2d = substitute_poly(flipped.first, swap_z);

    auto pij = pluecker::pij_polynomials();
    const auto& pairs = pluecker::index_pairs();
    std::map<Var, MPoly> bind = {
        {Var::sigma1, r1n}, {Var::sigma2, r1d}, {Var::tau1, r2n}, {Var::tau2, r2d}};
    std::array<MPoly, 10> pt;
    for (int k = 0; k < 10; ++k) {
        pt[static_cast<size_t>(k)] = substitute_poly(pij[static_cast<size_t>(k)], bind);
        if (pt[static_cast<size_t>(k)].total_degree() != 48)
            throw NotAFifthPower("pullback of p_ij is not of degree 48");
    }

    auto Q = upsilon_pluecker();
    // The base divisor: remove the fifth power of the (4,5) quadratic.
    MPoly base = pt[9].exact_div(Q[9].pow(5));
    if (base.total_degree() != 38) throw NotAFifthPower("common divisor is not of degree 38");

    std::map<std::string, CycElem> consts;
    for (int k = 0; k < 10; ++k) {
        MPoly qt = pt[static_cast<size_t>(k)].exact_div(base);
        if (qt.total_degree() != 10) throw NotAFifthPower("quotient is not of degree 10");
        // Independent fifth-root extraction, then comparison with the
        // Pluecker quadratic of the line family on the quadric.
        MPoly root = binary_form_fifth_root(qt);
        constant_ratio(root, Q[static_cast<size_t>(k)], "fifth root vs line quadratic");
        CycElem ck = constant_ratio(qt, Q[static_cast<size_t>(k)].pow(5),
                                    "quotient vs quadratic^5");
        consts[pt_name(pairs[static_cast<size_t>(k)].first,
                       pairs[static_cast<size_t>(k)].second)] = ck;
    }
    if (!(consts["45"] == CycElem(1)))
        throw NotAFifthPower("normalization of the (4,5) quotient failed");
    return consts;
}

void conifold_genus_arithmetic() {
    const long components = 125, marked_per_component = 12;
    long nodes = components * marked_per_component / 2;
    if (nodes != 750) throw ArithmeticMismatch("node count");
    long euler = components - nodes;
    if (euler != -625) throw ArithmeticMismatch("Euler characteristic of the component graph");
    long pa = 1 - euler;
    if (pa != 626) throw ArithmeticMismatch("arithmetic genus");
}

// ---------------------------------------------------------------------------
// psi = infinity
// ---------------------------------------------------------------------------

CycElem infinity_phi() {
    CycElem w = CycElem::omega();
    return (w - w * w) * CycElem(Rat(1, 2));
}

std::map<std::string, CycElem> psi_infinity_fiber() {
    CycElem w = CycElem::omega(), w2 = CycElem::omega() * CycElem::omega();
    CycElem phi = infinity_phi();
    if (!(phi * phi == CycElem(Rat(-3, 4)))) throw FactorizationFailed("phi^2 != -3/4");

    MPoly sg = var(Var::sigma), tu = var(Var::tau);
    auto product = [&](const CycElem& wa, const CycElem& wb) {
        return (sg + MPoly(wb)) * (tu + MPoly(wb)) * (sg * tu + MPoly(wa)) *
               (sg * tu + MPoly(wa) * sg + MPoly(wb)) * (sg * tu + MPoly(wa) * tu + MPoly(wb));
    };
    require_zero(fplus_at(phi) - product(w, w2), "five-factor form of F+");
    require_zero(fplus_at(-phi) - product(w2, w), "five-factor form of F-");

    // Each factor divides the matching named divisor factor.
    const auto& nf = pluecker::named_factors();
    MPoly s1 = var(Var::sigma1), s2 = var(Var::sigma2), t1 = var(Var::tau1), t2 = var(Var::tau2);
    nf.at("l1").exact_div(s1 + MPoly(w2) * s2);
    nf.at("l2").exact_div(t1 + MPoly(w2) * t2);
    nf.at("k12").exact_div(s1 * t1 + MPoly(w) * s2 * t2);
    nf.at("k14").exact_div(s1 * t1 + MPoly(w) * s1 * t2 + MPoly(w2) * s2 * t2);
    nf.at("k24").exact_div(s1 * t1 + MPoly(w) * s2 * t1 + MPoly(w2) * s2 * t2);

    // Restrictions to the component sigma = -omega^2.
    auto pij = pluecker::pij_polynomials();
    const auto& pairs = pluecker::index_pairs();
    std::map<std::string, MPoly> r;
    for (int k = 0; k < 10; ++k)
        r[pt_name(pairs[static_cast<size_t>(k)].first, pairs[static_cast<size_t>(k)].second)] =
            pij[static_cast<size_t>(k)]
                .eval_var(Var::sigma1, -w2)
                .eval_var(Var::sigma2, CycElem(1))
                .eval_var(Var::tau2, CycElem(1))
                .rename_var(Var::tau1, Var::tau);
    for (const std::string& id : {"13", "23", "34", "35"})
        if (!r[id].is_zero())
            throw FactorizationFailed("p" + id + " should vanish on sigma = -omega^2");

    MPoly tau = var(Var::tau);
    std::map<int, MPoly> n = {{1, tau + MPoly((w - CycElem(1)) * CycElem(Rat(1, 3)))},
                              {2, tau + MPoly(w - CycElem(1))},
                              {4, tau + MPoly(w + CycElem(1))},
                              {5, tau - MPoly(w + CycElem(1))}};
    // The common cubic, normalized monic, from the (4,5) restriction.
    MPoly cubic = r["45"].exact_div(n[4] * n[5]);
    CycElem lead = cubic.coefficients_in(Var::tau).at(3).constant_value();
    cubic = MPoly(lead.inverse()) * cubic;

    std::map<std::string, CycElem> consts;
    for (const auto& [i, j] : {std::pair<int, int>{1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {4, 5}})
        consts[pt_name(i, j)] =
            constant_ratio(r[pt_name(i, j)], cubic * n[i] * n[j], "q_ij = c_ij n_i n_j");
    return consts;
}

} // namespace dwork::fib
