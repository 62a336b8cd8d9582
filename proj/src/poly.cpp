#include "dwork/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dwork {

const char* var_name(Var v) {
    static const char* names[] = {
        "sigma", "tau", "rho",
        "sigma1", "sigma2", "tau1", "tau2",
        "u", "v", "psi", "P", "phi", "gamma",
        "b", "c", "d", "r", "s", "t",
        "delta", "kappa", "psitilde",
        "z0", "z1", "z2", "z3", "z4", "z5",
        "x", "y", "z",
        "zline", "w",
        "sparam", "tparam",
        "aparam", "bparam",
        "Asigtau", "Atausig", "Bsig", "Btau", "Bsigtau", "Rsig", "Rtau",
        "x1", "x2", "x3", "x4", "x5",
        "eps1", "eps2",
        "Tcov", "Ucov",
    };
    static_assert(sizeof(names) / sizeof(names[0]) == kVarCount);
    return names[static_cast<size_t>(v)];
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (uint8_t x : e) d += x;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < kVarCount; ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (size_t i = 0; i < kVarCount; ++i) {
        unsigned sum = static_cast<unsigned>(e[i]) + o.e[i];
        if (sum > 255) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = static_cast<uint8_t>(sum);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (size_t i = 0; i < kVarCount; ++i) r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
    return r;
}

MPoly::MPoly(const CycElem& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(Var v) {
    Monomial m;
    m.set(v, 1);
    MPoly p;
    p.terms_.emplace(m, CycElem(1));
    return p;
}

MPoly var(Var v) { return MPoly::variable(v); }

MPoly MPoly::term(const CycElem& coeff, std::initializer_list<std::pair<Var, unsigned>> exps) {
    if (coeff.is_zero()) return {};
    Monomial m;
    for (auto [v, n] : exps) {
        if (n > 255) throw std::overflow_error("monomial exponent overflow");
        m.set(v, static_cast<uint8_t>(m.exp(v) + n));
    }
    MPoly p;
    p.terms_.emplace(m, coeff);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial{};
}

CycElem MPoly::constant_value() const {
    if (terms_.empty()) return CycElem(0);
    if (!is_constant()) throw std::runtime_error("MPoly is not constant: " + str());
    return terms_.begin()->second;
}

int MPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp(v)));
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
}

std::vector<Var> MPoly::variables() const {
    std::array<bool, kVarCount> seen{};
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < kVarCount; ++i)
            if (m.e[i] > 0) seen[i] = true;
    std::vector<Var> out;
    for (size_t i = 0; i < kVarCount; ++i)
        if (seen[i]) out.push_back(static_cast<Var>(i));
    return out;
}

void MPoly::add_term(const Monomial& m, const CycElem& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::pow(unsigned k) const {
    MPoly base = *this;
    MPoly r = MPoly(CycElem(1));
    while (k > 0) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

MPoly MPoly::exact_div(const MPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
    MPoly rem = *this;
    MPoly quot;
    const auto& [lead_m, lead_c] = *divisor.terms_.begin();
    CycElem lead_inv = lead_c.inverse();
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.terms_.begin();
        if (!lead_m.divides(m)) throw NotDivisible(rem.str());
        Monomial qm = m / lead_m;
        CycElem qc = c * lead_inv;
        MPoly step;
        step.terms_.emplace(qm, qc);
        quot += step;
        rem -= step * divisor;
    }
    return quot;
}

MPoly MPoly::derivative(Var v) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        uint8_t e = m.exp(v);
        if (e == 0) continue;
        Monomial dm = m;
        dm.set(v, static_cast<uint8_t>(e - 1));
        r.add_term(dm, CycElem(Rat(e)) * c);
    }
    return r;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
    std::vector<MPoly> out(static_cast<size_t>(std::max(0, degree(v))) + 1);
    for (const auto& [m, c] : terms_) {
        uint8_t e = m.exp(v);
        Monomial rest = m;
        rest.set(v, 0);
        out[e].add_term(rest, c);
    }
    return out;
}

MPoly MPoly::eval_var(Var v, const CycElem& value) const {
    // Precompute powers of the value.
    int d = degree(v);
    if (d < 0) return *this;
    std::vector<CycElem> powers(static_cast<size_t>(d) + 1, CycElem(1));
    for (size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * value;
    MPoly r;
    for (const auto& [m, c] : terms_) {
        uint8_t e = m.exp(v);
        Monomial rest = m;
        rest.set(v, 0);
        r.add_term(rest, c * powers[e]);
    }
    return r;
}

CycElem MPoly::eval(const std::map<Var, CycElem>& point) const {
    MPoly cur = *this;
    for (Var v : variables()) {
        auto it = point.find(v);
        if (it == point.end())
            throw std::runtime_error(std::string("eval: unbound variable ") + var_name(v));
        cur = cur.eval_var(v, it->second);
    }
    return cur.constant_value();
}

MPoly MPoly::rename_var(Var from, Var to) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial nm = m;
        uint8_t e = nm.exp(from);
        if (e > 0) {
            nm.set(from, 0);
            nm.set(to, static_cast<uint8_t>(nm.exp(to) + e));
        }
        r.add_term(nm, c);
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool simple_coeff = cs.find(' ') == std::string::npos;
        bool has_vars = m.total_degree() > 0;
        if (!has_vars) {
            os << (simple_coeff ? cs : "(" + cs + ")");
            continue;
        }
        bool wrote_coeff = false;
        if (!(c == CycElem(1))) {
            os << (simple_coeff ? cs : "(" + cs + ")");
            wrote_coeff = true;
        }
        bool first_var = !wrote_coeff;
        for (size_t i = 0; i < kVarCount; ++i) {
            if (m.e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var_name(static_cast<Var>(i));
            if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
        }
    }
    return os.str();
}

} // namespace dwork
