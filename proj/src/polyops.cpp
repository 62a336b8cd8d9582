#include "dwork/polyops.hpp"

namespace dwork {

namespace {

// Powers table p^0..p^n.
std::vector<MPoly> power_table(const MPoly& p, int n) {
    std::vector<MPoly> t;
    t.reserve(static_cast<size_t>(n) + 1);
    t.emplace_back(MPoly(1));
    for (int i = 1; i <= n; ++i) t.push_back(t.back() * p);
    return t;
}

} // namespace

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RatFunc with zero denominator");
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) throw DivisionByZero("RatFunc division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DivisionByZero("RatFunc inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
    RatFunc base = *this;
    if (k < 0) {
        base = base.inverse();
        k = -k;
    }
    RatFunc r(1);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

std::string RatFunc::str() const {
    if (den_ == MPoly(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc substitute(const MPoly& f, const std::map<Var, RatFunc>& bindings) {
    if (f.is_zero()) return RatFunc(MPoly(), MPoly(1));

    // Keep only bindings for variables that actually occur, record degrees.
    struct Bound {
        Var v;
        int deg;
        std::vector<MPoly> num_pows;
        std::vector<MPoly> den_pows;
    };
    std::vector<Bound> bound;
    for (const auto& [v, rf] : bindings) {
        int d = f.degree(v);
        if (d < 0) continue;
        Bound b;
        b.v = v;
        b.deg = d;
        b.num_pows = power_table(rf.num(), d);
        b.den_pows = power_table(rf.den(), d);
        bound.push_back(std::move(b));
    }

    MPoly num_acc;
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        MPoly factor = MPoly(c);
        for (const auto& b : bound) {
            int e = rest.exp(b.v);
            rest.set(b.v, 0);
            factor *= b.num_pows[static_cast<size_t>(e)];
            factor *= b.den_pows[static_cast<size_t>(b.deg - e)];
        }
        MPoly residual = MPoly(CycElem(1));
        for (size_t i = 0; i < kVarCount; ++i) {
            if (rest.e[i] == 0) continue;
            residual *= MPoly::term(CycElem(1), {{static_cast<Var>(i), rest.e[i]}});
        }
        num_acc += factor * residual;
    }
    MPoly den_acc = MPoly(1);
    for (const auto& b : bound) den_acc *= b.den_pows[static_cast<size_t>(b.deg)];
    return RatFunc(std::move(num_acc), std::move(den_acc));
}

MPoly substitute_poly(const MPoly& f, const std::map<Var, MPoly>& bindings) {
    std::map<Var, RatFunc> rf;
    for (const auto& [v, p] : bindings) rf.emplace(v, RatFunc(p));
    RatFunc out = substitute(f, rf);
    return out.num().exact_div(out.den());
}

MPoly homogenize(const MPoly& f, const std::vector<HomGroup>& groups) {
    for (const auto& g : groups) {
        int d = f.degree(g.affine);
        if (static_cast<int>(g.degree) < d)
            throw DegreeTooSmall(std::string("homogenize: degree in ") + var_name(g.affine) +
                                 " exceeds requested degree");
    }
    MPoly out;
    for (const auto& [m, c] : f.terms()) {
        MPoly term = MPoly::term(c, {});
        Monomial rest = m;
        for (const auto& g : groups) {
            unsigned e = rest.exp(g.affine);
            rest.set(g.affine, 0);
            if (e > 0) term *= MPoly::term(CycElem(1), {{g.num, e}});
            if (g.degree > e) term *= MPoly::term(CycElem(1), {{g.den, g.degree - e}});
        }
        for (size_t i = 0; i < kVarCount; ++i)
            if (rest.e[i] > 0) term *= MPoly::term(CycElem(1), {{static_cast<Var>(i), rest.e[i]}});
        out += term;
    }
    return out;
}

const std::map<Var, MPoly>& radical_rules() {
    static const std::map<Var, MPoly> rules = [] {
        MPoly sg = var(Var::sigma), tu = var(Var::tau);
        MPoly one(1);
        auto quad = [&](const MPoly& q) { return one - q + q * q; };
        std::map<Var, MPoly> m;
        // alpha(sigma,tau)^5 = sigma^4 (1-sigma)(1-tau)(1-sigma*tau) *
        //                      [1 - tau(1+sigma) + tau^2 (1-sigma+sigma^2)]
        m.emplace(Var::Asigtau,
                  sg.pow(4) * (one - sg) * (one - tu) * (one - sg * tu) *
                      (one - tu * (one + sg) + tu * tu * quad(sg)));
        m.emplace(Var::Atausig,
                  tu.pow(4) * (one - tu) * (one - sg) * (one - sg * tu) *
                      (one - sg * (one + tu) + sg * sg * quad(tu)));
        m.emplace(Var::Bsig, (one - sg) * quad(sg));
        m.emplace(Var::Btau, (one - tu) * quad(tu));
        m.emplace(Var::Bsigtau, (one - sg * tu) * quad(sg * tu));
        m.emplace(Var::Rsig, sg);
        m.emplace(Var::Rtau, tu);
        return m;
    }();
    return rules;
}

MPoly radical_reduce(MPoly f) {
    const auto& rules = radical_rules();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [v, rhs] : rules) {
            if (f.degree(v) < 5) continue;
            MPoly out;
            for (const auto& [m, c] : f.terms()) {
                unsigned e = m.exp(v);
                MPoly t = MPoly::term(c, {});
                Monomial rest = m;
                rest.set(v, static_cast<uint8_t>(e % 5));
                for (size_t i = 0; i < kVarCount; ++i)
                    if (rest.e[i] > 0) t *= MPoly::term(CycElem(1), {{static_cast<Var>(i), rest.e[i]}});
                t *= rhs.pow(e / 5);
                out += t;
            }
            f = std::move(out);
            changed = true;
        }
    }
    return f;
}

RatFunc reduce_modulo(RatFunc f, Var v, unsigned deg, const RatFunc& rhs) {
    if (f.den().degree(v) > 0)
        throw std::invalid_argument("reduce_modulo: denominator contains the reduced variable");
    while (f.num().degree(v) >= static_cast<int>(deg)) {
        auto coeffs = f.num().coefficients_in(v);
        RatFunc low{MPoly{}};
        RatFunc high{MPoly{}};
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e].is_zero()) continue;
            MPoly pw = MPoly::term(CycElem(1), {{v, static_cast<unsigned>(e < deg ? e : e - deg)}});
            if (e < deg)
                low += RatFunc(coeffs[e] * pw);
            else
                high += RatFunc(coeffs[e] * pw);
        }
        f = (low + high * rhs) / RatFunc(f.den());
    }
    return f;
}

RatFunc phi_square_rhs() {
    MPoly P = var(Var::P);
    return RatFunc(MPoly(128) - MPoly(3) * P, MPoly(4) * P);
}

RatFunc reduce_phi(const RatFunc& f) { return reduce_modulo(f, Var::phi, 2, phi_square_rhs()); }

void require_zero(const MPoly& f, const std::string& what) {
    if (!f.is_zero()) throw IdentityFailed(what + ": nonzero residual " + f.str());
}

void require_zero(const RatFunc& f, const std::string& what) { require_zero(f.num(), what); }

void require_equal(const RatFunc& a, const RatFunc& b, const std::string& what) {
    if (!(a == b))
        throw IdentityFailed(what + ": expressions differ; lhs = " + a.str() + ", rhs = " + b.str());
}

CycElem constant_ratio(const MPoly& a, const MPoly& b, const std::string& what) {
    if (b.is_zero()) throw IdentityFailed(what + ": zero reference polynomial");
    MPoly q;
    try {
        q = a.exact_div(b);
    } catch (const NotDivisible& e) {
        throw IdentityFailed(what + ": not a constant multiple (division failed)");
    }
    if (!q.is_constant() || q.is_zero())
        throw IdentityFailed(what + ": quotient is not a nonzero constant: " + q.str());
    return q.constant_value();
}

} // namespace dwork
