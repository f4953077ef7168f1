#include "hypo/projection.hpp"

#include <map>

namespace hypo::projection {

std::vector<ScaledMonomial<Rat>> toeplitz_apply(const symbol::RadialSymbol& phi, int k) {
    if (k < 0) throw std::invalid_argument("toeplitz_apply: negative basis degree");
    if (!symbol::is_normalized(phi)) throw std::invalid_argument("toeplitz_apply: symbol not normalized");
    std::map<int, CRat> acc;
    for (const auto& term : phi.terms) {
        // phi_term * z^k = coeff * z^(holo+k) zbar^anti |z|^radial
        auto p = project_monomial<Rat>(term.holo + k, term.anti, term.radial);
        if (p.coeff.is_zero()) continue;
        acc[p.degree] += term.coeff * p.coeff;
    }
    std::vector<ScaledMonomial<Rat>> out;
    for (auto& [deg, c] : acc)
        if (!c.is_zero()) out.push_back({c, deg});
    return out;
}

}  // namespace hypo::projection
