#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>

#include "hypo/commutator.hpp"
#include "hypo/parse.hpp"

using namespace hypo;
using namespace hypo::commutator;

TEST_CASE("form of T_z is the known diagonal") {
    auto M = commutator_form(symbol::parse_symbol("z"), 3);
    // 1/(k+n+1) below degree n, n^2/((k+1)^2 (k+n+1)) above, with n = 1
    CHECK(M.entry(0, 0) == CRat(Rat(1, 2)));
    CHECK(M.entry(1, 1) == CRat(Rat(1, 12)));
    CHECK(M.entry(2, 2) == CRat(Rat(1, 36)));
    CHECK(M.entry(3, 3) == CRat(Rat(1, 80)));
    CHECK(M.entry(0, 1).is_zero());
    CHECK(M.bandwidth() == 0);
}

TEST_CASE("self-adjoint symbols give the zero form") {
    for (const char* text : {"r^2", "r^0.5", "z + zbar + r"}) {
        auto M = commutator_form(symbol::parse_symbol(text), 12);
        for (int i = 0; i <= 12; ++i)
            for (int j = i; j <= 12; ++j) CHECK(M.entry(i, j).is_zero());
    }
}

TEST_CASE("form is Hermitian and banded") {
    auto M = commutator_form(symbol::parse_symbol("(1+i)*z^2 + zbar*r"), 15);
    for (int i = 0; i <= 15; ++i)
        for (int j = 0; j <= 15; ++j) {
            CHECK(M.entry(i, j) == M.entry(j, i).conj());
            if (std::abs(i - j) > M.bandwidth()) CHECK(M.entry(i, j).is_zero());
        }
}

TEST_CASE("quadratic form matches the assembled matrix") {
    auto M = commutator_form(symbol::parse_symbol("z + (0+1i)*zbar^2*r"), 10);
    std::vector<CRat> u;
    for (int k = 0; k <= 10; ++k) u.emplace_back(Rat(k % 3 - 1), Rat(1, k + 1));
    Rat direct;
    {
        CRat acc;
        for (int i = 0; i <= 10; ++i)
            for (int j = 0; j <= 10; ++j) acc += u[i].conj() * M.entry(i, j) * u[j];
        REQUIRE(acc.is_real());
        direct = acc.re;
    }
    CHECK(M.quadratic_form(u) == direct);
}

TEST_CASE("above-threshold radial perturbation has a negative eigenvalue by N=60") {
    auto M = commutator_form(symbol::parse_symbol("z + 0.6*r^2"), 60);
    REQUIRE(M.is_real());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.to_real_matrix(), Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() < 0.0);
}

TEST_CASE("weight sequence spot values and limits") {
    WeightSequences<Rat> w(1, 1, Rat(0), Rat(0));
    CHECK(w.sigma(0) == Rat(1, 2));  // 4*2/16

    WeightSequences<Rat> same(3, 3, Rat(2), Rat(2));
    for (long k = 0; k <= 100; ++k) CHECK(same.delta_prime(k) == 0);

    WeightSequences<double> big(1, 2, 1.0, 0.0);
    double k = 1e6;
    CHECK(std::abs(k * k * k * big.sigma(1000000) - 6.0) <= 1e-4);
    CHECK(big.sigma_limit() == 6.0);
    CHECK(big.omega_limit() == 1.0);
    CHECK(big.delta_limit() == doctest::Approx(2.5));
}

TEST_CASE("sequence signs over a parameter grid") {
    struct P {
        int m, n;
        Rat s, t;
    };
    const P grid[] = {{1, 2, Rat(1), Rat(0)}, {1, 3, Rat(2), Rat(1, 2)}, {2, 5, Rat(0), Rat(3)},
                      {1, 1, Rat(2), Rat(2)}, {3, 4, Rat(1, 3), Rat(7, 2)}};
    for (const auto& p : grid) {
        WeightSequences<Rat> w(p.m, p.n, p.s, p.t);
        for (long k = 0; k <= 10000; ++k) {
            CHECK(sgn(w.sigma(k)) > 0);
            CHECK(sgn(w.omega(k)) > 0);
            CHECK(sgn(w.delta(k)) > 0);
            CHECK(sgn(w.omega_prime(k)) < 0);
            CHECK(sgn(w.sigma_prime(k)) > 0);
        }
    }
}

TEST_CASE("worst-case quadratic basics") {
    std::vector<Rat> e0{Rat(1)};
    WeightSequences<Rat> w(1, 2, Rat(1), Rat(0));
    CHECK(worst_case_quadratic(1, 2, Rat(1), Rat(0), e0, Rat(0)) == w.sigma(0));
    CHECK_THROWS_AS(worst_case_quadratic(1, 2, Rat(1), Rat(0), {Rat(-1)}, Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("worst-case quadratic equals the form at negative real a") {
    struct Case {
        int m, n;
        Rat s, t, r;
    };
    const Case cases[] = {{1, 2, Rat(1), Rat(0), Rat(5, 2)},
                          {1, 3, Rat(2), Rat(1), Rat(1, 3)},
                          {2, 4, Rat(1, 2), Rat(3), Rat(7)}};
    std::vector<Rat> u{Rat(1), Rat(2), Rat(0), Rat(3), Rat(1, 2), Rat(1), Rat(4), Rat(1)};
    for (const auto& c : cases) {
        symbol::RadialSymbol phi;
        phi.terms.emplace_back(CRat(Rat(1)), c.n, 0, c.s);
        phi.terms.emplace_back(CRat(-c.r), c.m, 0, c.t);
        auto M = commutator_form(symbol::normalize(phi), static_cast<int>(u.size()) - 1);
        std::vector<CRat> cu;
        for (const auto& v : u) cu.emplace_back(v);
        CHECK(M.quadratic_form(cu) == worst_case_quadratic(c.m, c.n, c.s, c.t, u, c.r));
    }
}

TEST_CASE("delta-prime check outcomes") {
    CHECK(check_delta_prime(2, 2, Rat(1), Rat(1), 100).result ==
          DeltaPrimeCheck::Result::IdenticallyZero);

    auto c = check_delta_prime(1, 2, Rat(0), Rat(0), 500);
    WeightSequences<Rat> w(1, 2, Rat(0), Rat(0));
    bool all_pos = true;
    long first_bad = -1;
    for (long k = 0; k <= 500 && all_pos; ++k)
        if (sgn(w.delta_prime(k)) <= 0) {
            all_pos = false;
            first_bad = k;
        }
    if (all_pos) {
        CHECK(c.result != DeltaPrimeCheck::Result::FailsAt);
    } else {
        CHECK(c.result == DeltaPrimeCheck::Result::FailsAt);
        CHECK(c.fail_k == first_bad);
    }
}

TEST_CASE("eigen certificate never refutes analytic symbols") {
    for (const char* text : {"z", "z^3", "z^5"}) {
        CertificateOptions opts;
        opts.schedule = {32, 100};
        auto v = min_eigen_certificate(symbol::parse_symbol(text), opts);
        CHECK(v.status == Status::Inconclusive);
        CHECK(v.min_eigenvalue_seen >= -1e-12);
    }
}

TEST_CASE("eigen certificate finds and exactly replays a witness") {
    CertificateOptions opts;
    opts.schedule = {32, 64, 128, 256};
    auto phi = symbol::parse_symbol("z + 0.6*r^2");
    auto v = min_eigen_certificate(phi, opts);
    REQUIRE(v.status == Status::NotHyponormal);
    REQUIRE(v.witness.has_value());
    CHECK(sgn(v.witness->value) < 0);
    auto M = commutator_form(phi, v.witness->truncation);
    CHECK(M.quadratic_form(v.witness->vec) == v.witness->value);
}

TEST_CASE("conjugate-pair boundary stays nonnegative") {
    auto phi = symbol::parse_symbol("r*z + r*zbar");
    for (int N : {32, 100, 200}) {
        auto M = commutator_form(phi, N);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.to_real_matrix(),
                                                          Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() >= -1e-12);
    }
}

TEST_CASE("non-normalized input is rejected") {
    symbol::RadialSymbol phi;
    phi.terms.emplace_back(CRat(Rat(1)), 1, 0, Rat(0));
    phi.terms.emplace_back(CRat(Rat(1)), 1, 0, Rat(0));
    CHECK_THROWS_AS(commutator_form(phi, 4), std::invalid_argument);
}
