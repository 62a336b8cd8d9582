#include "dwork/lines_numeric.hpp"

#include "dwork/polyops.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace dwork::lines {

namespace {

inline double mag(const Cx& z) { return std::abs(z); }
inline double mag(const ComplexHP& z) { return abs(z).convert_to<double>(); }

// Everything needed at both double and high precision is templated over the
// complex type.
template <class C>
struct Num {
    using R = typename C::value_type;

    static R pi() {
        using std::acos;
        return acos(R(-1));
    }
    static C root_of_unity(int k, int n) {
        using std::cos;
        using std::sin;
        R a = R(2) * pi() * R(k) / R(n);
        return C(cos(a), sin(a));
    }
    static C zeta(int k) { return root_of_unity(((k % 5) + 5) % 5, 5); }
    static C omega() { return root_of_unity(1, 3); }
    static C pr5(const C& z) {
        using std::pow;
        return pow(z, C(R(1) / R(5)));
    }
    static C pow5(const C& z) { return z * z * z * z * z; }
    static C quad(const C& q) { return C(1) - q + q * q; }

    static C g_val(const C& s, const C& t) {
        C st = s * t;
        return C(3) * st * st - (st * (C(1) + s) * (C(1) + t) * (C(1) + st)) / C(2) +
               quad(s) * quad(t) * quad(st);
    }
    static C h_val(const C& s, const C& t) {
        return s * t * (C(1) - s) * (C(1) - t) * (C(1) - s * t);
    }
    static C phi_of_psi(const C& psi) {
        using std::sqrt;
        C P = pow5(psi);
        return sqrt(C(32) / P - C(3) / C(4));
    }

    struct Line {
        std::array<C, 5> u{}, v{};
    };

    static void apply_branch(Line& L, Branch br) {
        std::array<int, 5> n = {0, br.a, br.b, br.c, ((-(br.a + br.b + br.c)) % 5 + 5) % 5};
        for (int j = 0; j < 5; ++j) {
            C ph = zeta(n[static_cast<size_t>(j)]);
            L.u[static_cast<size_t>(j)] *= ph;
            L.v[static_cast<size_t>(j)] *= ph;
        }
    }

    static void check_degenerate(const C& s, const C& t) {
        for (const C& z : {s, t, C(1) - s, C(1) - t, C(1) - s * t})
            if (mag(z) < 1e-13) throw DegenerateParameters("family line at a degenerate locus");
    }

    static Line family_line(const C& s, const C& t, Branch br) {
        check_degenerate(s, t);
        C a5st = s * s * s * s * (C(1) - s) * (C(1) - t) * (C(1) - s * t) *
                 (C(1) - t * (C(1) + s) + t * t * quad(s));
        C a5ts = t * t * t * t * (C(1) - t) * (C(1) - s) * (C(1) - s * t) *
                 (C(1) - s * (C(1) + t) + s * s * quad(t));
        C b5s = (C(1) - s) * quad(s);
        C b5t = (C(1) - t) * quad(t);
        C b5st = (C(1) - s * t) * quad(s * t);
        if (mag(a5st) == 0 || mag(a5ts) == 0)
            throw DegenerateParameters("family line at a degenerate locus");
        C ast = pr5(a5st), ats = pr5(a5ts);
        C bs = pr5(b5s), bt = pr5(b5t), bst = pr5(b5st);
        C t45 = pr5(t) * pr5(t) * pr5(t) * pr5(t);
        C s45 = pr5(s) * pr5(s) * pr5(s) * pr5(s);
        Line L;
        L.u = {ast, C(0), -t45 * bs * s, bst * s, -s45 * bt};
        L.v = {C(0), ats, -t45 * bs, bst * t, -s45 * bt * t};
        apply_branch(L, br);
        return L;
    }

    static double residual(const Line& L, const C& psi) {
        double worst = 0;
        for (int k = 0; k < 8; ++k) {
            C u = root_of_unity(k, 8);
            C v = root_of_unity(3 * k + 1, 8);
            C sum(0), prod(1);
            for (int j = 0; j < 5; ++j) {
                C x = L.u[static_cast<size_t>(j)] * u + L.v[static_cast<size_t>(j)] * v;
                sum += pow5(x);
                prod *= x;
            }
            worst = std::max(worst, mag(sum - C(5) * psi * prod));
        }
        return worst;
    }

    // The scaling chain with principal roots: returns the line and psi.
    static std::pair<Line, C> chain(const C& s, const C& t) {
        C d5 = (C(1) - t) * quad(t) / (s * t * t * t * t * (C(1) - s) * quad(s));
        C k5 = -(C(1) - s) * quad(s) / (t * (C(1) - s * t) * quad(s * t));
        C pt = C(2) * (C(1) - s) * (C(1) - t) / quad(s * t);
        C kp = pr5(k5), dl = pr5(d5);
        C c5 = -C(1) / (C(1) + k5 * pow5(t) * (C(1) + d5));
        C s5 = -C(1) / (C(1) + k5 * (C(1) + d5 * pow5(s * t)));
        C cc = pr5(c5), ss = pr5(s5);
        C b = cc * kp * t, d = cc * kp * t * dl, r = ss * kp, tt = ss * kp * t * dl * s;
        C psi = cc * ss * pt / (dl * kp * kp * t);
        Line L;
        L.u = {C(1), C(0), b, cc, d};
        L.v = {C(0), C(1), r, ss, tt};
        return {L, psi};
    }

    static Line van_geemen(const C& psi, int gamma_sign, int gamma_root) {
        C w = omega();
        C i_over_sqrt3 = (w - w * w) / C(3);  // i/sqrt(3)
        C g5 = (C(1) / C(2) + C(gamma_sign) * phi_of_psi(psi) * i_over_sqrt3) / C(9);
        C g = pr5(g5) * zeta(gamma_root);
        C b = C(3) / C(2) * psi * g * g;
        C c = (C(1) - w) / C(2) * psi * g;
        Line L;
        L.u = {C(1), C(0), b, c, -w * w * c};
        L.v = {C(0), C(1), C(0), w, w * w};
        return L;
    }

    static std::array<C, 10> pluecker_of(const Line& L) {
        std::array<C, 10> p{};
        int idx = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                p[static_cast<size_t>(idx++)] = L.u[static_cast<size_t>(i)] * L.v[static_cast<size_t>(j)] -
                                                L.u[static_cast<size_t>(j)] * L.v[static_cast<size_t>(i)];
        return p;
    }
};

using D = Num<Cx>;
using HP = Num<ComplexHP>;

LineMat to_mat(const D::Line& L) {
    LineMat m;
    m.u = L.u;
    m.v = L.v;
    return m;
}
D::Line from_mat(const LineMat& m) {
    D::Line L;
    L.u = m.u;
    L.v = m.v;
    return L;
}

std::vector<Branch> all_branches() {
    std::vector<Branch> out;
    out.reserve(125);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) out.push_back({a, b, c});
    return out;
}

// index of pi_ij in the pluecker vector, i < j, 0-based coordinates
int pl_index(int i, int j) {
    static const int base[5] = {0, 4, 7, 9, 10};
    return base[i] + (j - i - 1);
}

} // namespace

LineMat line_from_params(Cx sigma, Cx tau, Cx psi, Branch branch) {
    D::check_degenerate(sigma, tau);
    Cx phi = D::phi_of_psi(psi);
    Cx g = D::g_val(sigma, tau), h = D::h_val(sigma, tau);
    double scale = mag(g) + mag(phi * h) + 1.0;
    if (std::min(mag(g + phi * h), mag(g - phi * h)) > 1e-6 * scale)
        throw NotOnCurve("(sigma, tau) does not lie on either factor of F");
    return to_mat(D::family_line(sigma, tau, branch));
}

double line_residual(const LineMat& line, Cx psi) { return D::residual(from_mat(line), psi); }

std::pair<LineMat, Branch> line_search(Cx sigma, Cx tau, Cx psi, double tol) {
    for (Branch br : all_branches()) {
        LineMat m = line_from_params(sigma, tau, psi, br);
        if (line_residual(m, psi) < tol) return {m, br};
    }
    throw NotOnCurve("no phase branch satisfies the quintic at the requested tolerance");
}

Cx chain_psi(Cx sigma, Cx tau) { return D::chain(sigma, tau).second; }

LineMat chain_line(Cx sigma, Cx tau) { return to_mat(D::chain(sigma, tau).first); }

std::array<Cx, 10> pluecker(const LineMat& line) { return D::pluecker_of(from_mat(line)); }

double max_grassmann_pluecker_residual(const LineMat& line) {
    auto p = pluecker(line);
    double norm2 = 0;
    for (const auto& z : p) norm2 = std::max(norm2, std::norm(z));
    double worst = 0;
    // one relation for each 4-element subset {i<j<k<l} of the coordinates
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                for (int l = k + 1; l < 5; ++l) {
                    Cx rel = p[static_cast<size_t>(pl_index(i, j))] * p[static_cast<size_t>(pl_index(k, l))] -
                             p[static_cast<size_t>(pl_index(i, k))] * p[static_cast<size_t>(pl_index(j, l))] +
                             p[static_cast<size_t>(pl_index(i, l))] * p[static_cast<size_t>(pl_index(j, k))];
                    worst = std::max(worst, std::abs(rel) / norm2);
                }
    return worst;
}

double pluecker_angle(const LineMat& a, const LineMat& b) {
    auto pa = pluecker(a), pb = pluecker(b);
    Cx inner(0);
    double na = 0, nb = 0;
    for (int k = 0; k < 10; ++k) {
        inner += pa[static_cast<size_t>(k)] * std::conj(pb[static_cast<size_t>(k)]);
        na += std::norm(pa[static_cast<size_t>(k)]);
        nb += std::norm(pb[static_cast<size_t>(k)]);
    }
    double c2 = std::norm(inner) / (na * nb);
    return std::sqrt(std::max(0.0, 1.0 - c2));
}

LineMat van_geemen_line(Cx psi, int gamma_sign, int gamma_root) {
    return to_mat(D::van_geemen(psi, gamma_sign, gamma_root));
}

namespace {

// High-precision rerun of one family sample; returns the best residual.
double hp_sample_residual(double s, double t) {
    ComplexHP sigma(s), tau(t);
    auto [chain, psi] = HP::chain(sigma, tau);
    double chain_res = HP::residual(chain, psi);
    double best = 1e300;
    for (int m = 0; m < 5 && best > 1e-20; ++m) {
        ComplexHP psim = psi * HP::zeta(m);
        for (Branch br : all_branches()) {
            auto L = HP::family_line(sigma, tau, br);
            best = std::min(best, HP::residual(L, psim));
            if (best < 1e-20) break;
        }
    }
    return std::max(best, chain_res);
}

} // namespace

void check_family_samples(unsigned samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> window(1.2, 2.8);
    for (unsigned n = 0; n < samples; ++n) {
        double s = window(rng), t = window(rng);
        Cx sigma(s), tau(t);
        // the scaling-chain line is on the quintic by construction
        Cx psi = chain_psi(sigma, tau);
        double chain_res = line_residual(chain_line(sigma, tau), psi);
        // some phase of psi admits a family branch
        bool found = false;
        for (int m = 0; m < 5 && !found; ++m) {
            Cx psim = psi * D::zeta(m);
            try {
                auto [line, br] = line_search(sigma, tau, psim);
                (void)br;
                if (max_grassmann_pluecker_residual(line) > 1e-9)
                    throw IdentityFailed("Grassmann relations fail on a family line");
                found = true;
            } catch (const NotOnCurve&) {
            }
        }
        if (!found || chain_res > 1e-9) {
            // retry the whole sample at high precision
            if (hp_sample_residual(s, t) > 1e-20)
                throw IdentityFailed("family sample failed at sigma=" + std::to_string(s) +
                                     ", tau=" + std::to_string(t));
        }
    }
}

void check_s5_row1_on_lines() {
    Cx sigma(1.7), tau(2.4);
    Cx psi = chain_psi(sigma, tau);
    Cx psim;
    LineMat base;
    bool have = false;
    for (int m = 0; m < 5 && !have; ++m) {
        psim = psi * D::zeta(m);
        try {
            base = line_search(sigma, tau, psim).first;
            have = true;
        } catch (const NotOnCurve&) {
        }
    }
    if (!have) throw IdentityFailed("no base line found for the swap check");

    // (sigma,tau)->(tau,sigma) with (u,v)->(v,u) should give the same line
    // with x1<->x2 and x3<->x5, for some phase branch.
    double best = 1e300;
    for (Branch br : all_branches()) {
        LineMat m = line_from_params(tau, sigma, psim, br);
        if (line_residual(m, psim) > 1e-9) continue;
        LineMat permuted;
        static const int perm[5] = {1, 0, 4, 3, 2};  // images of coordinates
        for (int j = 0; j < 5; ++j) {
            permuted.u[static_cast<size_t>(perm[j])] = m.v[static_cast<size_t>(j)];
            permuted.v[static_cast<size_t>(perm[j])] = m.u[static_cast<size_t>(j)];
        }
        best = std::min(best, pluecker_angle(base, permuted));
    }
    if (best > 1e-8)
        throw IdentityFailed("swapped parameters do not reproduce the permuted line, angle = " +
                             std::to_string(best));
}

namespace {

// Newton iteration on tau for G + phi H = 0 at fixed sigma.
Cx newton_tau(Cx sigma, Cx tau0, Cx phi) {
    auto f = [&](Cx t) { return D::g_val(sigma, t) + phi * D::h_val(sigma, t); };
    Cx t = tau0;
    for (int it = 0; it < 60; ++it) {
        Cx h = Cx(1e-7) * (Cx(1) + std::abs(t));
        Cx df = (f(t + h) - f(t - h)) / (Cx(2) * h);
        Cx step = f(t) / df;
        t -= step;
        if (std::abs(step) < 1e-14 * (1 + std::abs(t))) break;
    }
    if (std::abs(f(t)) > 1e-10) throw NoConvergence("Newton correction onto the curve failed");
    return t;
}

} // namespace

void check_van_geemen_limits() {
    Cx psi(1.3, 0.0);
    Cx w = D::omega();
    Cx phi = D::phi_of_psi(psi);

    struct Row {
        const char* name;
        Cx sigma_star;
        // initial tau as a function of epsilon and gamma^5
        std::function<Cx(double, Cx)> tau0;
        // the limit line, given b and c
        std::function<LineMat(Cx, Cx)> target;
    };
    auto mk = [](std::array<Cx, 5> u, std::array<Cx, 5> v) {
        LineMat m;
        m.u = u;
        m.v = v;
        return m;
    };
    std::vector<Row> rows = {
        {"(0,-w)", Cx(0),
         [&](double e, Cx g5) { return -w + Cx(9) * g5 * Cx(e); },
         [&](Cx b, Cx c) {
             return mk({Cx(1), Cx(0), -w * w * c, c, b}, {Cx(0), Cx(1), w * w, w, Cx(0)});
         }},
        {"(1,-w)", Cx(1),
         [&](double e, Cx g5) { return -w + Cx(9) * w * g5 * Cx(e); },
         [&](Cx b, Cx c) {
             return mk({Cx(0), c, -w * w * c, b, Cx(1)}, {Cx(1), w, w * w, Cx(0), Cx(0)});
         }},
        {"(-w,-w^2)", -w,
         [&](double e, Cx g5) {
             Cx g10 = g5 * g5;
             Cx k = std::pow(Cx(2) / (Cx(3) * psi), Cx(5));
             return -w * w + w * k * Cx(e) / g10;
         },
         [&](Cx b, Cx c) {
             return mk({c, -w * w * c, b, Cx(0), Cx(1)}, {w, w * w, Cx(0), Cx(1), Cx(0)});
         }},
    };

    auto branches = all_branches();
    for (const auto& row : rows) {
        std::array<double, 4> eps = {1e-3, 1e-4, 1e-5, 1e-6};
        std::array<double, 4> angle{};
        for (int step = 0; step < 4; ++step) {
            double e = eps[static_cast<size_t>(step)];
            double best = 1e300;
            Cx i_over_sqrt3 = (w - w * w) / Cx(3);
            for (int gsign : {-1, +1}) {
                // approach the intersection point along the curve branch
                Cx g5_path = (Cx(0.5) + Cx(gsign) * phi * i_over_sqrt3) / Cx(9);
                Cx sig = row.sigma_star + Cx(e);
                Cx tau;
                try {
                    tau = newton_tau(sig, row.tau0(e, g5_path), gsign < 0 ? phi : -phi);
                } catch (const NoConvergence&) {
                    continue;
                }
                // the limit line carries its own gamma branch and residual
                // fifth-root phases on b and c (from psi -> zeta^m psi and
                // gamma -> zeta^k gamma)
                for (int tsign : {-1, +1}) {
                    Cx g5 = (Cx(0.5) + Cx(tsign) * phi * i_over_sqrt3) / Cx(9);
                    Cx g = D::pr5(g5);
                    Cx b0 = Cx(1.5) * psi * g * g;
                    Cx c0 = (Cx(1) - w) / Cx(2) * psi * g;
                    for (int p = 0; p < 5; ++p)
                        for (int q = 0; q < 5; ++q) {
                            LineMat target = row.target(b0 * D::zeta(p), c0 * D::zeta(q));
                            for (Branch br : branches) {
                                LineMat fam = to_mat(D::family_line(sig, tau, br));
                                best = std::min(best, pluecker_angle(fam, target));
                            }
                        }
                }
            }
            angle[static_cast<size_t>(step)] = best;
        }
        if (!(angle[0] > angle[1] && angle[1] > angle[2] && angle[2] > angle[3]))
            throw NoConvergence(std::string("angles not decreasing for row ") + row.name);
        if (angle[3] > 1e-6)
            throw NoConvergence(std::string("final angle too large for row ") + row.name + ": " +
                                std::to_string(angle[3]));
    }

    // The limit lines themselves: on the quintic, with one vanishing
    // Pluecker coordinate.
    for (int gsign : {-1, +1}) {
        LineMat vg = van_geemen_line(psi, gsign, 0);
        if (line_residual(vg, psi) > 1e-9)
            throw IdentityFailed("degenerate-coordinate line fails the quintic");
        auto p = pluecker(vg);
        double minabs = 1e300, maxabs = 0;
        for (const auto& z : p) {
            minabs = std::min(minabs, std::abs(z));
            maxabs = std::max(maxabs, std::abs(z));
        }
        if (minabs > 1e-12 * maxabs)
            throw IdentityFailed("expected one vanishing Pluecker coordinate");
    }
}

} // namespace dwork::lines
