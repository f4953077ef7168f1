#include "hypo/symbol.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hypo::symbol {

Monomial::Monomial(CRat c, int h, int a, Rat r)
    : coeff(std::move(c)), holo(h), anti(a), radial(std::move(r)) {
    if (holo < 0 || anti < 0) throw std::invalid_argument("Monomial: negative z/zbar exponent");
    if (sgn(radial) < 0) throw std::invalid_argument("Monomial: negative |z| exponent");
}

std::tuple<int, int, Rat> Monomial::normalized_key() const {
    int mn = std::min(holo, anti);
    return {holo - mn, anti - mn, radial + 2 * mn};
}

RadialSymbol normalize(const RadialSymbol& phi) {
    std::map<std::tuple<int, int, Rat>, CRat> merged;
    for (const auto& t : phi.terms) merged[t.normalized_key()] += t.coeff;
    RadialSymbol out;
    for (auto& [key, c] : merged) {
        if (c.is_zero()) continue;
        out.terms.emplace_back(c, std::get<0>(key), std::get<1>(key), std::get<2>(key));
    }
    return out;
}

RadialSymbol conjugate(const RadialSymbol& phi) {
    RadialSymbol out;
    out.terms.reserve(phi.terms.size());
    for (const auto& t : phi.terms)
        out.terms.emplace_back(t.coeff.conj(), t.anti, t.holo, t.radial);
    return out;
}

bool is_normalized(const RadialSymbol& phi) {
    RadialSymbol n = normalize(phi);
    if (n.terms.size() != phi.terms.size()) return false;
    for (size_t i = 0; i < n.terms.size(); ++i) {
        if (!(n.terms[i].coeff == phi.terms[i].coeff) ||
            n.terms[i].holo != phi.terms[i].holo || n.terms[i].anti != phi.terms[i].anti ||
            n.terms[i].radial != phi.terms[i].radial)
            return false;
    }
    return true;
}

bool is_analytic(const RadialSymbol& phi) {
    for (const auto& t : normalize(phi).terms)
        if (t.anti != 0 || sgn(t.radial) != 0) return false;
    return true;
}

bool is_self_adjoint(const RadialSymbol& phi) {
    RadialSymbol a = normalize(phi), b = normalize(conjugate(phi));
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (!(a.terms[i].coeff == b.terms[i].coeff) || a.terms[i].holo != b.terms[i].holo ||
            a.terms[i].anti != b.terms[i].anti || a.terms[i].radial != b.terms[i].radial)
            return false;
    }
    return true;
}

namespace {

void print_coeff(std::ostream& os, const CRat& c) {
    if (c.is_real()) {
        os << c.re;
    } else if (scalar_traits<Rat>::is_zero(c.re)) {
        os << c.im << "i";
    } else {
        os << "(" << c.re << (sgn(c.im) < 0 ? "" : "+") << c.im << "i)";
    }
}

}  // namespace

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    print_coeff(os, m.coeff);
    if (m.holo > 0) os << "*z^" << m.holo;
    if (m.anti > 0) os << "*zbar^" << m.anti;
    if (sgn(m.radial) != 0) os << "*r^" << m.radial;
    return os.str();
}

std::string to_string(const RadialSymbol& phi) {
    if (phi.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < phi.terms.size(); ++i) {
        Monomial m = phi.terms[i];
        bool negate = (m.coeff.is_real() && sgn(m.coeff.re) < 0) ||
                      (sgn(m.coeff.re) == 0 && sgn(m.coeff.im) < 0);
        if (negate) m.coeff = -m.coeff;
        if (i) out += negate ? " - " : " + ";
        else if (negate) out += "-";
        out += to_string(m);
    }
    return out;
}

}  // namespace hypo::symbol
