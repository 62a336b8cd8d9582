#include "dwork/numeric.hpp"

#include <stdexcept>

namespace dwork {

namespace {

// RAII guard for the global default precision of mpfr_float.
struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned digits10) : saved(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved); }
};

unsigned bits_to_digits10(unsigned bits) { return static_cast<unsigned>(bits * 0.3011) + 12; }

} // namespace

bool ComplexInterval::contains(double x, double y) const {
    BigFloat dx = re - x;
    BigFloat dy = im - y;
    return sqrt(dx * dx + dy * dy) <= rad;
}

bool ComplexInterval::overlaps(const ComplexInterval& o) const {
    BigFloat dx = re - o.re;
    BigFloat dy = im - o.im;
    return sqrt(dx * dx + dy * dy) <= rad + o.rad;
}

ComplexInterval embed_complex(const CycElem& a, unsigned prec_bits) {
    if (prec_bits < 64) throw std::invalid_argument("embed_complex: precision must be >= 64 bits");
    const unsigned work_bits = prec_bits + 16;
    PrecisionGuard guard(bits_to_digits10(work_bits));

    // eta = cos(2*pi/15) + i*sin(2*pi/15)
    BigFloat angle = 2 * acos(BigFloat(-1)) / 15;
    BigFloat eta_re = cos(angle);
    BigFloat eta_im = sin(angle);

    BigFloat acc_re = 0, acc_im = 0;
    BigFloat pow_re = 1, pow_im = 0;
    BigFloat coeff_mass = 0;  // sum of |c_i|, drives the rounding bound
    for (int i = 0; i < CycElem::kDegree; ++i) {
        const Rat& c = a.coeff(i);
        if (c != 0) {
            BigFloat cf(c);
            acc_re += cf * pow_re;
            acc_im += cf * pow_im;
            coeff_mass += abs(cf);
        }
        BigFloat nr = pow_re * eta_re - pow_im * eta_im;
        BigFloat ni = pow_re * eta_im + pow_im * eta_re;
        pow_re = nr;
        pow_im = ni;
    }

    // Every intermediate has modulus <= coeff_mass + 1 and the computation
    // performs a few dozen roundings at 2^-work_bits relative error; a factor
    // of 512 comfortably covers them all.
    ComplexInterval out;
    out.re = acc_re;
    out.im = acc_im;
    out.rad = (coeff_mass + 1) * 512 * pow(BigFloat(2), -static_cast<int>(work_bits));
    return out;
}

ComplexInterval ci_add(const ComplexInterval& a, const ComplexInterval& b) {
    ComplexInterval out;
    out.re = a.re + b.re;
    out.im = a.im + b.im;
    BigFloat mag = sqrt(out.re * out.re + out.im * out.im);
    out.rad = a.rad + b.rad + mag * pow(BigFloat(2), -200);
    return out;
}

ComplexInterval ci_mul(const ComplexInterval& a, const ComplexInterval& b) {
    ComplexInterval out;
    out.re = a.re * b.re - a.im * b.im;
    out.im = a.re * b.im + a.im * b.re;
    BigFloat ma = sqrt(a.re * a.re + a.im * a.im);
    BigFloat mb = sqrt(b.re * b.re + b.im * b.im);
    BigFloat mag = ma * mb;
    out.rad = ma * b.rad + mb * a.rad + a.rad * b.rad + (mag + 1) * 16 * pow(BigFloat(2), -200);
    return out;
}

ComplexInterval ci_sqrt_positive_real(const ComplexInterval& a) {
    if (!(a.re > a.rad) || !(abs(a.im) <= a.rad))
        throw std::domain_error("ci_sqrt_positive_real: ball is not around a positive real");
    ComplexInterval out;
    out.re = sqrt(a.re);
    out.im = 0;
    // |sqrt(x) - sqrt(y)| <= |x - y| / (2*sqrt(min)); bound min from below.
    BigFloat lo = a.re - a.rad;
    out.rad = a.rad / (2 * sqrt(lo)) + out.re * 16 * pow(BigFloat(2), -200);
    return out;
}

std::complex<double> embed_double(const CycElem& a) {
    ComplexInterval ci = embed_complex(a, 64);
    return {ci.re_d(), ci.im_d()};
}

ComplexHP embed_hp(const CycElem& a) {
    ComplexInterval ci = embed_complex(a, 360);
    return {ComplexHP::value_type(ci.re.str(110)), ComplexHP::value_type(ci.im.str(110))};
}

} // namespace dwork
