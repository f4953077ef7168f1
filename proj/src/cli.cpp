#include "hypo/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "hypo/classifier.hpp"
#include "hypo/commutator.hpp"
#include "hypo/extremal.hpp"
#include "hypo/oracle.hpp"
#include "hypo/parse.hpp"
#include "hypo/projection.hpp"

namespace hypo::cli {

namespace {

using nlohmann::json;

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string fmt_crat(const CRat& z) {
    if (z.is_real()) return to_string(z.re);
    std::string s = to_string(z.re);
    if (sgn(z.im) >= 0) s += "+";
    return s + to_string(z.im) + "i";
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json witness_json(const Witness& w) {
    json arr = json::array();
    for (const auto& c : w.vec) arr.push_back(fmt_crat(c));
    return {{"witness", arr}, {"value", to_string(w.value)}, {"truncation", w.truncation}};
}

json verdict_json(const Verdict& v) {
    json j{{"verdict", to_string(v.status)}, {"source", v.source}, {"detail", v.detail}};
    j["certificate"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    if (!std::isnan(v.min_eigenvalue_seen)) j["min_eigenvalue"] = v.min_eigenvalue_seen;
    return j;
}

void print_verdict_human(const Verdict& v, std::ostream& out) {
    out << to_string(v.status);
    if (!v.source.empty()) out << "  [" << v.source << "]";
    out << "\n";
    if (!v.detail.empty()) out << "  " << v.detail << "\n";
    if (v.witness) {
        out << "  witness (truncation " << v.witness->truncation << "), form value "
            << to_string(v.witness->value) << ":\n    ";
        for (size_t i = 0; i < v.witness->vec.size(); ++i) {
            if (i) out << ", ";
            out << fmt_crat(v.witness->vec[i]);
        }
        out << "\n";
    }
    if (!std::isnan(v.min_eigenvalue_seen))
        out << "  least truncated eigenvalue seen: " << fmt_double(v.min_eigenvalue_seen) << "\n";
}

int verdict_exit(const Verdict& v) { return v.status == Status::Inconclusive ? 2 : 0; }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

CRat parse_constant(const std::string& text) {
    auto phi = symbol::parse_symbol(text);
    if (phi.empty()) return CRat(Rat(0));
    if (phi.terms.size() != 1 || phi.terms[0].holo != 0 || phi.terms[0].anti != 0 ||
        sgn(phi.terms[0].radial) != 0)
        throw std::invalid_argument("expected a constant, got '" + text + "'");
    return phi.terms[0].coeff;
}

// ---- subcommands ---------------------------------------------------------

int cmd_project(const RunConfig& cfg, std::ostream& out) {
    if (cfg.args.size() != 3) {
        out << "usage: project k j t\n";
        return 1;
    }
    int k = std::stoi(cfg.args[0]), j = std::stoi(cfg.args[1]);
    Rat t = rat_from_literal(cfg.args[2]);
    auto p = projection::project_monomial<Rat>(k, j, t);
    if (p.coeff.is_zero())
        out << "0\n";
    else
        out << "(" << to_string(p.coeff.re) << ")·z^" << p.degree << "\n";
    return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    auto phi = symbol::parse_symbol(cfg.symbol_text);
    commutator::CertificateOptions opts;
    opts.tol = cfg.tol;
    opts.schedule.clear();
    for (int N = 32; N <= cfg.max_n; N *= 2) opts.schedule.push_back(N);
    if (opts.schedule.empty()) opts.schedule.push_back(cfg.max_n);
    Verdict v = commutator::min_eigen_certificate(phi, opts);
    if (cfg.format == Format::Json) {
        json j{{"verdict", to_string(v.status)}, {"source", v.source}};
        if (v.witness) {
            json w = witness_json(*v.witness);
            j["witness"] = w["witness"];
            j["value"] = w["value"];
            j["truncation"] = w["truncation"];
        } else {
            j["witness"] = nullptr;
        }
        out << j.dump(2) << "\n";
    } else {
        print_verdict_human(v, out);
    }
    return verdict_exit(v);
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    auto phi = symbol::parse_symbol(cfg.symbol_text);
    classifier::ClassifyOptions opts;
    opts.max_truncation = cfg.max_n;
    opts.region_budget = cfg.budget;
    opts.tol = cfg.tol;
    Verdict v = classifier::classify(phi, opts);
    if (cfg.format == Format::Json)
        out << verdict_json(v).dump(2) << "\n";
    else
        print_verdict_human(v, out);
    return verdict_exit(v);
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 1 || cfg.s.empty()) {
        out << "usage: threshold --n N --s S [--pencil-size N]\n";
        return 1;
    }
    Rat s = rat_from_literal(cfg.s);
    if (sgn(s) <= 0) {
        out << "s must be positive\n";
        return 1;
    }
    Rat bound = Rat(cfg.n) / s;
    bool sufficient = s >= 2 * cfg.n;
    auto est = extremal::pencil_infimum(cfg.n, to_double(s), cfg.pencil_size);
    if (cfg.format == Format::Json) {
        json j{{"necessary_bound", to_string(bound)},
               {"threshold_exact", sufficient},
               {"pencil", {{"value", est.value}, {"truncation", est.truncation}}}};
        out << j.dump(2) << "\n";
    } else {
        out << "necessary bound n/s = " << to_string(bound) << " (" << fmt_double(to_double(bound))
            << ")\n";
        out << "threshold exact (s >= 2n): " << (sufficient ? "yes" : "no") << "\n";
        out << "pencil estimate (N=" << est.truncation << "): " << fmt_double(est.value) << "\n";
    }
    return 0;
}

int cmd_annuli(const RunConfig& cfg, std::ostream& out) {
    if (cfg.m < 1 || cfg.n <= cfg.m || cfg.s.empty() || cfg.t.empty()) {
        out << "usage: annuli --m M --n N --s S --t T [--budget B] [--csv FILE]\n";
        return 1;
    }
    Rat s = rat_from_literal(cfg.s), t = rat_from_literal(cfg.t);
    auto region = extremal::excluded_region(cfg.m, cfg.n, s, t, cfg.budget);
    std::ofstream file;
    std::ostream* dst = &out;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path);
        if (!file) {
            out << "cannot open " << cfg.output_path << "\n";
            return 1;
        }
        dst = &file;
    }
    if (cfg.format == Format::Csv || !cfg.output_path.empty()) {
        *dst << "lo,hi,trial_id\n";
        for (const auto& a : region.annuli)
            *dst << fmt_double(a.lo) << "," << fmt_double(a.hi) << "," << csv_quote(a.trial_id)
                 << "\n";
    } else {
        out << "excluded |a| region (union of " << region.annuli.size() << " annuli):\n";
        for (const auto& iv : region.merged.intervals())
            out << "  (" << fmt_double(iv.lo) << ", " << fmt_double(iv.hi) << ")\n";
    }
    return 0;
}

int cmd_algebraic(const RunConfig& cfg, std::ostream& out) {
    if (cfg.m < 1 || cfg.powers.empty()) {
        out << "usage: algebraic --m M --powers s0,s1,... --coeffs a1,...\n";
        return 1;
    }
    std::vector<Rat> exps;
    for (const auto& p : split(cfg.powers, ',')) exps.push_back(rat_from_literal(p));
    std::vector<CRat> coeffs;
    if (!cfg.coeffs.empty())
        for (const auto& c : split(cfg.coeffs, ',')) coeffs.push_back(parse_constant(c));
    Verdict v = classifier::classify_algebraic(cfg.m, exps, coeffs);
    if (cfg.format == Format::Json)
        out << verdict_json(v).dump(2) << "\n";
    else
        print_verdict_human(v, out);
    return verdict_exit(v);
}

// replaces standalone identifier `a` (not part of a longer word) by `value`
std::string substitute_parameter(const std::string& tmpl, const std::string& value) {
    auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    std::string out;
    bool hit = false;
    for (size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == 'a' && (i == 0 || !is_word(tmpl[i - 1])) &&
            (i + 1 == tmpl.size() || !is_word(tmpl[i + 1]))) {
            out += value;
            hit = true;
        } else {
            out += tmpl[i];
        }
    }
    if (!hit) throw std::invalid_argument("scan template contains no parameter token 'a'");
    return out;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
    if (cfg.symbol_text.empty() || cfg.re_range.empty() || cfg.im_range.empty() ||
        cfg.step.empty()) {
        out << "usage: scan \"<template with a>\" --re-range lo:hi --im-range lo:hi --step D "
               "[--csv FILE]\n";
        return 1;
    }
    auto parse_range = [&](const std::string& text) {
        auto parts = split(text, ':');
        if (parts.size() != 2) throw std::invalid_argument("range must be lo:hi");
        return std::pair<Rat, Rat>{rat_from_literal(parts[0]), rat_from_literal(parts[1])};
    };
    auto [re_lo, re_hi] = parse_range(cfg.re_range);
    auto [im_lo, im_hi] = parse_range(cfg.im_range);
    Rat step = rat_from_literal(cfg.step);
    if (sgn(step) <= 0) throw std::invalid_argument("step must be positive");

    std::vector<std::pair<Rat, Rat>> grid;
    for (Rat re = re_lo; re <= re_hi; re += step)
        for (Rat im = im_lo; im <= im_hi; im += step) grid.emplace_back(re, im);

    classifier::ClassifyOptions opts;
    opts.max_truncation = std::min(cfg.max_n, 512);
    opts.region_budget = cfg.budget;
    opts.tol = cfg.tol;

    struct Row {
        Rat re, im;
        Status status;
        std::string source;
    };
    std::vector<Row> rows(grid.size());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futs;
    for (unsigned w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (size_t i = w; i < grid.size(); i += workers) {
                const auto& [re, im] = grid[i];
                std::string lit = "(" + to_string(re) + (sgn(im) < 0 ? "-" : "+") +
                                  to_string(Rat(abs(im))) + "i)";
                Verdict v = classifier::classify(symbol::parse_symbol(
                                                    substitute_parameter(cfg.symbol_text, lit)),
                                                opts);
                rows[i] = {re, im, v.status, v.source};
            }
        }));
    }
    for (auto& f : futs) f.get();

    std::ofstream file;
    std::ostream* dst = &out;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path);
        if (!file) {
            out << "cannot open " << cfg.output_path << "\n";
            return 1;
        }
        dst = &file;
    }
    *dst << "re_a,im_a,status,source\n";
    for (const auto& r : rows)
        *dst << fmt_double(to_double(r.re)) << "," << fmt_double(to_double(r.im)) << ","
             << to_string(r.status) << "," << csv_quote(r.source) << "\n";
    return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    if (cfg.args.empty()) {
        out << "usage: oracle inner a b s c d t | oracle gram \"<symbol>\" u0,u1,...\n";
        return 1;
    }
    const std::string& sub = cfg.args[0];
    if (sub == "inner") {
        if (cfg.args.size() != 7) {
            out << "usage: oracle inner a b s c d t\n";
            return 1;
        }
        double v = oracle::quad_inner_product(std::stoi(cfg.args[1]), std::stoi(cfg.args[2]),
                                              std::stod(cfg.args[3]), std::stoi(cfg.args[4]),
                                              std::stoi(cfg.args[5]), std::stod(cfg.args[6]));
        out << fmt_double(v) << "\n";
        return 0;
    }
    if (sub == "gram") {
        if (cfg.args.size() != 2 || cfg.symbol_text.empty()) {
            out << "usage: oracle gram \"<symbol>\" u0,u1,...\n";
            return 1;
        }
        auto phi = symbol::parse_symbol(cfg.symbol_text);
        std::vector<std::complex<double>> u;
        for (const auto& c : split(cfg.args[1], ',')) u.push_back(to_std_complex(parse_constant(c)));
        out << fmt_double(oracle::gram_commutator_value(phi, u)) << "\n";
        return 0;
    }
    out << "unknown oracle subcommand '" << sub << "'\n";
    return 1;
}

int cmd_reproduce(std::ostream& out) {
    struct Line {
        std::string name;
        std::string paper, computed;
        std::string tol;
        bool pass;
    };
    std::vector<Line> lines;

    {  // section 2.1 quotient on the flat trial vector
        std::vector<Rat> u(21, 1);
        auto q = extremal::cinf_quotient<Rat>(7, Rat(1), u);
        double v = q ? to_double(*q) : std::nan("");
        lines.push_back({"quotient n=7 s=1, u_k=1 (0<=k<=20)", "6.41441", fmt_double(v), "5e-6",
                         q && std::abs(v - 6.41441) <= 5e-6});
    }
    for (auto [n, s] : {std::pair{1, 2}, std::pair{2, 4}}) {
        auto est = extremal::pencil_infimum(n, double(s), 64);
        lines.push_back({"pencil >= n/s at n=" + std::to_string(n) + " s=" + std::to_string(s) +
                             ", N=64",
                         ">= " + fmt_double(double(n) / s), fmt_double(est.value), "exact",
                         est.value >= double(n) / s});
    }
    {
        auto est = extremal::pencil_infimum(7, 1.0, 64);
        lines.push_back({"pencil n=7 s=1, N=64 below the necessary bound 7",
                         "<= 6.41441 and < 7", fmt_double(est.value), "1e-6",
                         est.value <= 6.41441 + 1e-6 && est.value < 7});
    }
    for (auto [n, s] : {std::pair{1, 0}, std::pair{2, 3}}) {
        symbol::RadialSymbol phi;
        phi.terms.emplace_back(CRat(Rat(1)), n, 0, Rat(s));
        phi.terms.emplace_back(CRat(Rat(1)), 0, n, Rat(s));
        auto M = commutator::commutator_form(symbol::normalize(phi), 200);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.to_real_matrix(),
                                                          Eigen::EigenvaluesOnly);
        double mn = es.eigenvalues().minCoeff();
        lines.push_back({"conjugate pair |a|=1 boundary, n=" + std::to_string(n) +
                             " s=" + std::to_string(s) + ", N=200",
                         ">= 0", fmt_double(mn), "1e-12", mn >= -1e-12});
    }
    {
        auto iv = extremal::asymptotic_interval(1, 2, Rat(1), Rat(0));
        bool ok = iv && iv->first == 2 && iv->second == 3;
        lines.push_back({"asymptotic excluded interval m=1 n=2 s=1 t=0", "(2, 3)",
                         iv ? "(" + to_string(iv->first) + ", " + to_string(iv->second) + ")"
                            : "none",
                         "exact", ok});
    }
    {
        auto p = classifier::alph_polynomial<Rat>(2, {Rat(1), Rat(3)}, {CRat(Rat(-1))});
        bool ok = !p.is_zero() && p.coeffs.back() == -4;
        lines.push_back({"quartic leading coefficient, m=2 s0=1 s1=3 a1=-1", "-4",
                         p.is_zero() ? "0" : to_string(p.coeffs.back()), "exact", ok});
    }
    {
        auto p = classifier::alph_polynomial<Rat>(2, {Rat(1), Rat(3)}, {CRat(Rat(1, 2))});
        bool ok = !p.is_zero();
        for (const auto& c : p.coeffs) ok = ok && sgn(c) > 0;
        lines.push_back({"all-positive coefficients, m=2 s0=1 s1=3 a1=1/2", "all > 0",
                         ok ? "all > 0" : "sign change", "exact", ok});
    }

    size_t width = 0;
    for (const auto& l : lines) width = std::max(width, l.name.size());
    bool all_pass = true;
    for (const auto& l : lines) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << l.name << " expected "
            << l.paper << "  got " << l.computed << "  tol " << l.tol << "  "
            << (l.pass ? "PASS" : "FAIL") << "\n";
        all_pass = all_pass && l.pass;
    }
    out << (all_pass ? "all lines pass" : "FAILURES present") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out) {
    try {
        if (cfg.command == "project") return cmd_project(cfg, out);
        if (cfg.command == "check") return cmd_check(cfg, out);
        if (cfg.command == "classify") return cmd_classify(cfg, out);
        if (cfg.command == "threshold") return cmd_threshold(cfg, out);
        if (cfg.command == "annuli") return cmd_annuli(cfg, out);
        if (cfg.command == "algebraic") return cmd_algebraic(cfg, out);
        if (cfg.command == "scan") return cmd_scan(cfg, out);
        if (cfg.command == "oracle") return cmd_oracle(cfg, out);
        if (cfg.command == "reproduce") return cmd_reproduce(out);
        out << "unknown command '" << cfg.command << "'\n";
        return 1;
    } catch (const symbol::ParseError& e) {
        out << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hypo::cli
