#include "dwork/univariate.hpp"

#include <stdexcept>

namespace dwork {

int u_degree(const UPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

void u_trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly u_from_mpoly(const MPoly& f, Var v) {
    UPoly out(static_cast<size_t>(std::max(0, f.degree(v))) + 1, CycElem(0));
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        rest.set(v, 0);
        if (rest.total_degree() != 0)
            throw std::invalid_argument("u_from_mpoly: polynomial is not univariate in " +
                                        std::string(var_name(v)));
        out[m.exp(v)] += c;
    }
    u_trim(out);
    return out;
}

MPoly u_to_mpoly(const UPoly& p, Var v) {
    MPoly out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        out += MPoly::term(p[i], {{v, static_cast<unsigned>(i)}});
    }
    return out;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, CycElem(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    u_trim(r);
    return r;
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), CycElem(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    u_trim(r);
    return r;
}

UPoly u_mod(const UPoly& a, const UPoly& b, UPoly* quot) {
    int db = u_degree(b);
    if (db < 0) throw DivisionByZero("u_mod by zero polynomial");
    UPoly rem = a;
    u_trim(rem);
    UPoly q(static_cast<size_t>(std::max(0, u_degree(rem) - db)) + 1, CycElem(0));
    CycElem lead_inv = b[static_cast<size_t>(db)].inverse();
    int dr = u_degree(rem);
    while (dr >= db) {
        CycElem f = rem[static_cast<size_t>(dr)] * lead_inv;
        size_t shift = static_cast<size_t>(dr - db);
        q[shift] += f;
        for (int i = 0; i <= db; ++i)
            rem[shift + static_cast<size_t>(i)] -= f * b[static_cast<size_t>(i)];
        u_trim(rem);
        dr = u_degree(rem);
    }
    if (quot) {
        u_trim(q);
        *quot = std::move(q);
    }
    return rem;
}

UPoly u_derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1, CycElem(0));
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = CycElem(Rat(static_cast<long>(i))) * p[i];
    u_trim(r);
    return r;
}

UPoly u_monic(UPoly p) {
    int d = u_degree(p);
    if (d < 0) return p;
    CycElem inv = p[static_cast<size_t>(d)].inverse();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly u_gcd(UPoly a, UPoly b) {
    u_trim(a);
    u_trim(b);
    while (u_degree(b) >= 0) {
        UPoly r = u_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return u_monic(std::move(a));
}

CycElem u_eval(const UPoly& p, const CycElem& x) {
    CycElem acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

MPoly poly_determinant(std::vector<std::vector<MPoly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_determinant: matrix not square");
    if (n == 0) return MPoly(1);
    MPoly prev_pivot = MPoly(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t.exact_div(prev_pivot);
            }
            m[i][k] = MPoly();
        }
        prev_pivot = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

MPoly resultant(const MPoly& f, const MPoly& g, Var v) {
    int df = f.degree(v);
    int dg = g.degree(v);
    if (df < 0 || dg < 0) throw std::invalid_argument("resultant: zero polynomial");
    if (df == 0) return f.pow(static_cast<unsigned>(dg));
    if (dg == 0) return g.pow(static_cast<unsigned>(df));
    auto fc = f.coefficients_in(v);
    auto gc = g.coefficients_in(v);
    size_t n = static_cast<size_t>(df + dg);
    std::vector<std::vector<MPoly>> syl(n, std::vector<MPoly>(n, MPoly()));
    for (int row = 0; row < dg; ++row)
        for (int k = 0; k <= df; ++k)
            syl[static_cast<size_t>(row)][static_cast<size_t>(row + k)] =
                fc[static_cast<size_t>(df - k)];
    for (int row = 0; row < df; ++row)
        for (int k = 0; k <= dg; ++k)
            syl[static_cast<size_t>(dg + row)][static_cast<size_t>(row + k)] =
                gc[static_cast<size_t>(dg - k)];
    return poly_determinant(std::move(syl));
}

} // namespace dwork
