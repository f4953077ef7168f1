#include "hypo/oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "hypo/complex.hpp"

namespace hypo::oracle {

namespace {

// integral_0^1 r^p dr by Gauss rules of doubling order until stable
double radial_moment(double p) {
    if (p <= -1) throw std::invalid_argument("radial_moment: divergent exponent");
    auto f = [p](double r) { return std::pow(r, p); };
    using boost::math::quadrature::gauss;
    double prev = gauss<double, 64>::integrate(f, 0.0, 1.0);
    double cur = gauss<double, 128>::integrate(f, 0.0, 1.0);
    if (std::abs(cur - prev) > 1e-13 * std::max(1.0, std::abs(cur)))
        cur = gauss<double, 256>::integrate(f, 0.0, 1.0);
    return cur;
}

}  // namespace

double quad_inner_product(int a, int b, double s, int c, int d, double t) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("quad_inner_product: negative monomial exponent");
    if (a + d != b + c) return 0.0;  // angular orthogonality, exact
    return 2.0 * radial_moment(a + b + c + d + s + t + 1);
}

double gram_commutator_value(const symbol::RadialSymbol& phi,
                             const std::vector<std::complex<double>>& u) {
    auto apply = [&](const symbol::RadialSymbol& f) {
        // coefficients of T_f u in the monomial basis z^j
        std::map<int, std::complex<double>> out;
        for (size_t k = 0; k < u.size(); ++k) {
            if (u[k] == std::complex<double>(0)) continue;
            for (const auto& term : f.terms) {
                int h = term.holo + static_cast<int>(k);
                int j = h - term.anti;
                if (j < 0) continue;
                double ip = quad_inner_product(h, term.anti, to_double(term.radial), j, 0, 0.0);
                double nrm = quad_inner_product(j, 0, 0.0, j, 0, 0.0);
                out[j] += u[k] * to_std_complex(term.coeff) * (ip / nrm);
            }
        }
        double norm2 = 0;
        for (const auto& [j, c] : out)
            norm2 += std::norm(c) * quad_inner_product(j, 0, 0.0, j, 0, 0.0);
        return norm2;
    };
    return apply(phi) - apply(symbol::conjugate(phi));
}

}  // namespace hypo::oracle
