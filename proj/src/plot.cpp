#include "dwork/plot.hpp"

#include "dwork/lines.hpp"
#include "dwork/numeric.hpp"

#include <cmath>
#include <sstream>

namespace dwork::plot {

namespace {

// Real evaluation of a polynomial in sigma, tau with rational coefficients.
double eval_real(const MPoly& f, double sigma, double tau) {
    double sum = 0.0;
    for (const auto& [mono, coeff] : f.terms()) {
        double term = embed_double(coeff).real();
        for (uint8_t k = 0; k < mono.exp(Var::sigma); ++k) term *= sigma;
        for (uint8_t k = 0; k < mono.exp(Var::tau); ++k) term *= tau;
        sum += term;
    }
    return sum;
}

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

} // namespace

std::vector<std::pair<double, double>> conifold_node_points() {
    double g = (1.0 + std::sqrt(5.0)) / 2.0;
    double h = (3.0 - std::sqrt(5.0)) / 2.0;
    return {{g, g}, {-g, -g}, {g, h}, {-g, h}, {h, g}, {h, -g}};
}

std::string plot_curves(const Rat& psi5, int n, const Rat& window) {
    if (n < 2) throw InvalidGrid("grid resolution must be at least 2");
    if (window <= 0) throw InvalidGrid("window half-width must be positive");

    std::ostringstream out;
    out.precision(15);
    if (psi5 < 0 || psi5 > 1)
        out << "# warning: psi^5 outside [0, 1]; the figure family covers [0, 1]\n";

    double p = static_cast<double>(psi5);
    double phi2 = 0.0;
    bool degenerate = (p == 0.0);
    bool phi_real = true;
    if (!degenerate) {
        phi2 = 32.0 / p - 0.75;
        phi_real = phi2 >= 0.0;
        if (!phi_real) out << "# warning: phi^2 < 0 at this psi^5; sign fields are zero\n";
    }
    double phi = phi_real && !degenerate ? std::sqrt(phi2) : 0.0;

    MPoly g = lines::g_poly(), h = lines::h_poly();
    double a = static_cast<double>(window);
    out << "sigma,tau,sign_fplus,sign_fminus\n";
    for (int i = 0; i < n; ++i) {
        double sigma = -a + 2.0 * a * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            double tau = -a + 2.0 * a * j / (n - 1);
            int sp = 0, sm = 0;
            if (degenerate) {
                // psi^5 = 0 limit: the branches collapse onto +-H = 0.
                double hv = eval_real(h, sigma, tau);
                sp = sign_of(hv);
                sm = sign_of(-hv);
            } else if (phi_real) {
                double gv = eval_real(g, sigma, tau);
                double hv = eval_real(h, sigma, tau);
                sp = sign_of(gv + phi * hv);
                sm = sign_of(gv - phi * hv);
            }
            out << sigma << ',' << tau << ',' << sp << ',' << sm << '\n';
        }
    }
    if (psi5 == 1)
        for (const auto& [s, t] : conifold_node_points())
            out << "# node: " << s << ',' << t << '\n';
    return out.str();
}

} // namespace dwork::plot
