// Pluecker coordinates of the line family and their divisor geometry: the ten
// radical minors, the fifth-power polynomials p_ij of bidegree (6,6), the
// factorization table over the named curves, and the intersection divisors of
// those curves with the pencil member C_phi.
#include "dwork/plueckerdiv.hpp"

#include "dwork/lines.hpp"

#include <algorithm>
#include <sstream>

namespace dwork::pluecker {

namespace {

const std::array<Var, 7> kRadicals = {Var::Asigtau, Var::Atausig, Var::Bsig,
                                      Var::Btau,    Var::Bsigtau, Var::Rsig,
                                      Var::Rtau};

std::array<uint8_t, 7> radical_part(const Monomial& m) {
    std::array<uint8_t, 7> r{};
    for (size_t i = 0; i < kRadicals.size(); ++i) r[i] = m.exp(kRadicals[i]);
    return r;
}

// The two spanning rows of the family line, in the formal fifth-root symbols.
std::pair<std::array<MPoly, 5>, std::array<MPoly, 5>> family_rows() {
    MPoly sg = var(Var::sigma), tu = var(Var::tau);
    MPoly A1 = var(Var::Asigtau), A2 = var(Var::Atausig);
    MPoly Bs = var(Var::Bsig), Bt = var(Var::Btau), Bst = var(Var::Bsigtau);
    MPoly Rt4 = var(Var::Rtau).pow(4), Rs4 = var(Var::Rsig).pow(4);
    std::array<MPoly, 5> u = {A1, MPoly(0), -(Rt4 * Bs * sg), Bst * sg, -(Rs4 * Bt)};
    std::array<MPoly, 5> v = {MPoly(0), A2, -(Rt4 * Bs), Bst * tu, -(Rs4 * Bt * tu)};
    return {u, v};
}

MPoly p_common() {
    MPoly sg = var(Var::sigma), tu = var(Var::tau);
    return sg.pow(4) * tu.pow(4) * (sg - 1) * (tu - 1) * (sg * tu - 1);
}

const CycElem kOmega = CycElem::omega();
const CycElem kOmega2 = CycElem::omega_pow(2);

MPoly bivar(Var a) { return var(a); }

// Builders for the named bihomogeneous factors.
std::map<std::string, MPoly> build_named_factors() {
    MPoly s1 = bivar(Var::sigma1), s2 = bivar(Var::sigma2);
    MPoly t1 = bivar(Var::tau1), t2 = bivar(Var::tau2);

    std::map<std::string, MPoly> f;
    f["m13"] = t2;
    f["m15"] = s1;
    f["m23"] = t1;
    f["m25"] = s2;
    f["m34"] = t1 - t2;
    f["m35"] = s1 * t1 - s2 * t2;
    f["m45"] = s1 - s2;
    f["l1"] = s1 * s1 - s1 * s2 + s2 * s2;
    f["l2"] = t1 * t1 - t1 * t2 + t2 * t2;
    f["k12"] = s1 * s1 * t1 * t1 - s1 * s2 * t1 * t2 + s2 * s2 * t2 * t2;
    f["k14"] = s1 * s1 * t1 * t1 - s1 * s1 * t1 * t2 + s1 * s1 * t2 * t2 -
               s1 * s2 * t1 * t2 - s1 * s2 * t2 * t2 + s2 * s2 * t2 * t2;
    // k24 is k14 with the two parameter pairs exchanged.
    std::map<Var, MPoly> swap_st = {{Var::sigma1, t1}, {Var::sigma2, t2},
                                    {Var::tau1, s1},   {Var::tau2, s2}};
    f["k24"] = substitute_poly(f["k14"], swap_st);

    // The quadratic factors split over the cube roots of unity; pin the
    // splittings used by the component parametrizations below.
    auto expect = [](const MPoly& a, const MPoly& b, const char* what) {
        if (a != b) throw IdentityFailed(std::string("factor splitting: ") + what);
    };
    expect(f["l1"], (s1 + kOmega * s2) * (s1 + kOmega2 * s2), "l1");
    expect(f["l2"], (t1 + kOmega * t2) * (t1 + kOmega2 * t2), "l2");
    expect(f["k12"], (s1 * t1 + kOmega * s2 * t2) * (s1 * t1 + kOmega2 * s2 * t2), "k12");
    expect(f["k14"],
           (s1 * t1 + kOmega2 * s1 * t2 + kOmega * s2 * t2) *
               (s1 * t1 + kOmega * s1 * t2 + kOmega2 * s2 * t2),
           "k14");
    expect(f["k24"],
           (s1 * t1 + kOmega2 * s2 * t1 + kOmega * s2 * t2) *
               (s1 * t1 + kOmega * s2 * t1 + kOmega2 * s2 * t2),
           "k24");
    return f;
}

// Rational parametrization of one irreducible component of a named curve,
// together with the points of the claimed intersection divisor in the
// parameter line.  Each root is one point of the component, labeled by the
// point pair D_ij it lies on (or maps to under the blow-up).
struct Root {
    CycElem a, b;  // the point (a : b) of the parameter line
    int mult;
    const char* label;
};
struct Component {
    MPoly s1, s2, t1, t2;  // binary forms in sparam, tparam
    std::vector<Root> roots;
};

std::map<std::string, std::vector<Component>> build_components() {
    MPoly S = var(Var::sparam), T = var(Var::tparam);
    const CycElem one(1), zero(0), w = kOmega, w2 = kOmega2;

    std::map<std::string, std::vector<Component>> c;
    c["m13"] = {{S, T, MPoly(1), MPoly(0),
                 {{-w, one, 1, "D13"}, {-w2, one, 1, "D13"}, {zero, one, 2, "D24"}}}};
    c["m15"] = {{MPoly(0), MPoly(1), S, T,
                 {{-w, one, 1, "D15"}, {-w2, one, 1, "D15"}, {one, zero, 2, "D24"}}}};
    c["m23"] = {{S, T, MPoly(0), MPoly(1),
                 {{-w, one, 1, "D23"}, {-w2, one, 1, "D23"}, {one, zero, 2, "D14"}}}};
    c["m25"] = {{MPoly(1), MPoly(0), S, T,
                 {{zero, one, 2, "D14"}, {-w, one, 1, "D25"}, {-w2, one, 1, "D25"}}}};
    c["m34"] = {{S, T, MPoly(1), MPoly(1),
                 {{one, one, 2, "D12"}, {-w, one, 1, "D34"}, {-w2, one, 1, "D34"}}}};
    c["m45"] = {{MPoly(1), MPoly(1), S, T,
                 {{one, one, 2, "D12"}, {-w, one, 1, "D45"}, {-w2, one, 1, "D45"}}}};
    c["m35"] = {{S, T, T, S,
                 {{one, one, 2, "D12"},
                  {one, zero, 2, "D14"},
                  {zero, one, 2, "D24"},
                  {-w, one, 1, "D35"},
                  {-w2, one, 1, "D35"}}}};
    c["l1"] = {{MPoly(-w), MPoly(1), S, T,
                {{one, zero, 1, "D13"}, {zero, one, 1, "D23"}, {one, one, 1, "D34"},
                 {-w2, one, 1, "D35"}}},
               {MPoly(-w2), MPoly(1), S, T,
                {{one, zero, 1, "D13"}, {zero, one, 1, "D23"}, {one, one, 1, "D34"},
                 {-w, one, 1, "D35"}}}};
    c["l2"] = {{S, T, MPoly(-w), MPoly(1),
                {{zero, one, 1, "D15"}, {one, zero, 1, "D25"}, {one, one, 1, "D45"},
                 {-w2, one, 1, "D35"}}},
               {S, T, MPoly(-w2), MPoly(1),
                {{zero, one, 1, "D15"}, {one, zero, 1, "D25"}, {one, one, 1, "D45"},
                 {-w, one, 1, "D35"}}}};
    c["k12"] = {{S, T, MPoly(-w) * T, S,
                 {{zero, one, 3, "D24"}, {one, zero, 3, "D14"}, {one, one, 1, "D45"},
                  {-w, one, 1, "D34"}}},
                {S, T, MPoly(-w2) * T, S,
                 {{zero, one, 3, "D24"}, {one, zero, 3, "D14"}, {one, one, 1, "D45"},
                  {-w2, one, 1, "D34"}}}};
    c["k14"] = {{MPoly(-w) * T, MPoly(w2) * T + S, S, T,
                 {{zero, one, 1, "D23"}, {one, zero, 3, "D24"}, {one, one, 3, "D12"},
                  {-w2, one, 1, "D25"}}},
                {MPoly(-w2) * T, MPoly(w) * T + S, S, T,
                 {{zero, one, 1, "D23"}, {one, zero, 3, "D24"}, {one, one, 3, "D12"},
                  {-w, one, 1, "D25"}}}};
    c["k24"] = {{S, T, MPoly(-w) * T, MPoly(w2) * T + S,
                 {{zero, one, 1, "D15"}, {one, zero, 3, "D14"}, {one, one, 3, "D12"},
                  {-w2, one, 1, "D13"}}},
                {S, T, MPoly(-w2) * T, MPoly(w) * T + S,
                 {{zero, one, 1, "D15"}, {one, zero, 3, "D14"}, {one, one, 3, "D12"},
                  {-w, one, 1, "D13"}}}};
    return c;
}

// Claimed intersection divisors of the named curves with C_phi.
std::map<std::string, Divisor> build_curve_divisors() {
    std::map<std::string, Divisor> t;
    t["m13"] = {{"D13", 1}, {"D24", 1}};
    t["m15"] = {{"D15", 1}, {"D24", 1}};
    t["m23"] = {{"D23", 1}, {"D14", 1}};
    t["m25"] = {{"D14", 1}, {"D25", 1}};
    t["m34"] = {{"D12", 1}, {"D34", 1}};
    t["m35"] = {{"D12", 1}, {"D14", 1}, {"D24", 1}, {"D35", 1}};
    t["m45"] = {{"D12", 1}, {"D45", 1}};
    t["l1"] = {{"D13", 1}, {"D23", 1}, {"D34", 1}, {"D35", 1}};
    t["l2"] = {{"D15", 1}, {"D25", 1}, {"D35", 1}, {"D45", 1}};
    t["k12"] = {{"D34", 1}, {"D45", 1}, {"D14", 3}, {"D24", 3}};
    t["k14"] = {{"D23", 1}, {"D25", 1}, {"D12", 3}, {"D24", 3}};
    t["k24"] = {{"D13", 1}, {"D15", 1}, {"D12", 3}, {"D14", 3}};
    return t;
}

// Rows of the factorization table: p_ij as a product of named factors.
using FactorRow = std::vector<std::pair<const char*, int>>;
const std::array<FactorRow, 10>& factor_rows() {
    static const std::array<FactorRow, 10> rows = {{
        {{"m34", 1}, {"m35", 1}, {"m45", 1}, {"k14", 1}, {"k24", 1}},  // p12
        {{"m13", 4}, {"m25", 1}, {"m45", 1}, {"k24", 1}, {"l1", 1}},   // p13
        {{"m23", 1}, {"m25", 1}, {"m35", 1}, {"k12", 1}, {"k24", 1}},  // p14
        {{"m15", 4}, {"m23", 1}, {"m34", 1}, {"k24", 1}, {"l2", 1}},   // p15
        {{"m15", 1}, {"m23", 4}, {"m45", 1}, {"k14", 1}, {"l1", 1}},   // p23
        {{"m13", 1}, {"m15", 1}, {"m35", 1}, {"k12", 1}, {"k14", 1}},  // p24
        {{"m13", 1}, {"m34", 1}, {"m25", 4}, {"k14", 1}, {"l2", 1}},   // p25
        {{"m15", 1}, {"m25", 1}, {"m34", 4}, {"k12", 1}, {"l1", 1}},   // p34
        {{"m35", 4}, {"l1", 1}, {"l2", 1}},                            // p35
        {{"m13", 1}, {"m23", 1}, {"m45", 4}, {"k12", 1}, {"l2", 1}},   // p45
    }};
    return rows;
}

// The pencil member as a bihomogeneous (4,4) form with the formal phi.
const MPoly& fplus_bihom() {
    static const MPoly f = [] {
        std::vector<HomGroup> groups = {{Var::sigma, Var::sigma1, Var::sigma2, 4},
                                        {Var::tau, Var::tau1, Var::tau2, 4}};
        return homogenize(lines::g_poly(), groups) +
               var(Var::phi) * homogenize(lines::h_poly(), groups);
    }();
    return f;
}

// Pull the pencil back to each component of the named curve, peel off the
// claimed linear factors by exact division, and return the divisor plus the
// leftover constants (polynomials in phi of degree at most one).
Divisor intersect_curve(const std::string& name, std::vector<MPoly>* constants) {
    static const auto components = build_components();
    auto it = components.find(name);
    if (it == components.end())
        throw DivisorMismatch("unknown curve name: " + name);

    MPoly S = var(Var::sparam), T = var(Var::tparam);
    std::map<std::string, int> point_total;
    for (const Component& comp : it->second) {
        std::map<Var, MPoly> bind = {{Var::sigma1, comp.s1}, {Var::sigma2, comp.s2},
                                     {Var::tau1, comp.t1},   {Var::tau2, comp.t2}};
        // The parametrization must lie on the curve it claims to cover.
        if (!substitute_poly(named_factors().at(name), bind).is_zero())
            throw DivisorMismatch("parametrization of " + name +
                                  " does not satisfy its defining polynomial");

        MPoly pulled = substitute_poly(fplus_bihom(), bind);
        for (const Root& r : comp.roots) {
            // Normalized linear factor: s - (a/b) t, or t at the point (1:0).
            MPoly lin = r.b.is_zero() ? T : S - (r.a / r.b) * T;
            for (int k = 0; k < r.mult; ++k) {
                try {
                    pulled = pulled.exact_div(lin);
                } catch (const NotDivisible&) {
                    throw DivisorMismatch(name + ": claimed root of multiplicity " +
                                          std::to_string(r.mult) + " does not divide");
                }
            }
            point_total[r.label] += r.mult;
        }
        if (pulled.is_zero() || pulled.contains(Var::sparam) ||
            pulled.contains(Var::tparam) || pulled.degree(Var::phi) > 1)
            throw DivisorMismatch(name + ": residual after dividing the claimed roots");
        if (constants) constants->push_back(pulled);
    }

    // Each D_ij consists of two points; the per-point totals over all
    // components of the curve must pair up evenly.
    Divisor d;
    for (const auto& [label, total] : point_total) {
        if (total % 2 != 0)
            throw DivisorMismatch(name + ": odd point count on " + label);
        d[label] = total / 2;
    }
    return d;
}

} // namespace

const std::array<std::pair<int, int>, 10>& index_pairs() {
    static const std::array<std::pair<int, int>, 10> p = {{{1, 2}, {1, 3}, {1, 4},
                                                           {1, 5}, {2, 3}, {2, 4},
                                                           {2, 5}, {3, 4}, {3, 5},
                                                           {4, 5}}};
    return p;
}

std::array<MPoly, 10> pluecker_minors() {
    auto [u, v] = family_rows();
    std::array<MPoly, 10> minors;
    for (size_t k = 0; k < 10; ++k) {
        auto [i, j] = index_pairs()[k];
        MPoly m = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
        if (m.is_zero()) throw CollapseFailed("pi_" + std::to_string(10 * i + j));
        auto part = radical_part(m.terms().begin()->first);
        for (const auto& [mono, coeff] : m.terms())
            if (radical_part(mono) != part)
                throw CollapseFailed("pi_" + std::to_string(10 * i + j) +
                                     " is not a single radical monomial");
        minors[k] = m;
    }
    return minors;
}

std::array<MPoly, 10> pij_polynomials() {
    static const std::array<MPoly, 10> pij = [] {
        auto minors = pluecker_minors();
        MPoly pc = p_common();
        std::vector<HomGroup> groups = {{Var::sigma, Var::sigma1, Var::sigma2, 6},
                                        {Var::tau, Var::tau1, Var::tau2, 6}};
        std::array<MPoly, 10> out;
        for (size_t k = 0; k < 10; ++k)
            out[k] = homogenize(radical_reduce(minors[k].pow(5)).exact_div(pc), groups);
        return out;
    }();
    return pij;
}

const std::map<std::string, MPoly>& named_factors() {
    static const std::map<std::string, MPoly> f = build_named_factors();
    return f;
}

int divisor_degree(const Divisor& d) {
    int deg = 0;
    for (const auto& [label, mult] : d) deg += 2 * mult;
    return deg;
}

std::string divisor_str(const Divisor& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [label, mult] : d) {
        if (mult == 0) continue;
        if (!first) out << " + ";
        out << mult << "*" << label;
        first = false;
    }
    return first ? "0" : out.str();
}

Divisor curve_intersection(const std::string& name) {
    static const auto table = build_curve_divisors();
    Divisor d = intersect_curve(name, nullptr);
    if (d != table.at(name))
        throw DivisorMismatch(name + ": computed " + divisor_str(d) + ", table has " +
                              divisor_str(table.at(name)));
    return d;
}

std::vector<MPoly> component_constants(const std::string& name) {
    std::vector<MPoly> constants;
    intersect_curve(name, &constants);
    return constants;
}

std::map<std::string, CycElem> table_divpl_check() {
    auto pij = pij_polynomials();
    std::map<std::string, CycElem> constants;
    for (size_t k = 0; k < 10; ++k) {
        auto [i, j] = index_pairs()[k];
        std::string name = "p" + std::to_string(i) + std::to_string(j);
        MPoly product(1);
        for (const auto& [factor, exp] : factor_rows()[k])
            product *= named_factors().at(factor).pow(static_cast<unsigned>(exp));
        try {
            constants[name] = constant_ratio(pij[k], product, name);
        } catch (const IdentityFailed& e) {
            throw FactorizationFailed(name + ": " + e.what());
        }
    }
    return constants;
}

void db_decomposition() {
    static const auto curve_divs = build_curve_divisors();
    const Divisor db = {{"D12", 4}, {"D14", 4}, {"D24", 4}, {"D13", 1}, {"D15", 1},
                        {"D23", 1}, {"D25", 1}, {"D34", 1}, {"D35", 1}, {"D45", 1}};
    if (divisor_degree(db) != 38)
        throw DecompositionFailed("common divisor degree is not 38");

    for (size_t k = 0; k < 10; ++k) {
        auto [i, j] = index_pairs()[k];
        std::string name = "D" + std::to_string(i) + std::to_string(j);

        // Assemble (p_ij = 0) . C_phi from the two tables.
        Divisor total;
        for (const auto& [factor, exp] : factor_rows()[k])
            for (const auto& [label, mult] : curve_divs.at(factor))
                total[label] += exp * mult;

        Divisor expected = db;
        expected[name] += 5;
        if (total != expected)
            throw DecompositionFailed("p" + std::to_string(i) + std::to_string(j) +
                                      ": got " + divisor_str(total) + ", expected " +
                                      divisor_str(expected));
        if (divisor_degree(total) != 48)
            throw DecompositionFailed(name + ": degree is not 48");
    }
}

} // namespace dwork::pluecker
