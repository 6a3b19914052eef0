#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace polymaj;

TEST_CASE("decompose p/q on the degree-2 instance") {
    auto rep = decompose(test::pair2(), Direction::P_over_Q);
    CHECK(rep.residues == std::vector<Rational>{rational(-3, 2), rational(3, 2)});
    CHECK(rep.total == rational(0));
    CHECK(rep.sums_equal);

    // Product-form oracle straight from the root lists.
    std::vector<Rational> lam{rational(2), rational(-2)}, mu{rational(1), rational(-1)};
    for (int i = 0; i < 2; ++i)
        CHECK(rep.residues[static_cast<size_t>(i)] == test::residue_oracle(mu, lam, i));
}

TEST_CASE("decompose q/p on the degree-4 instance") {
    auto rep = decompose(test::pair4(), Direction::Q_over_P);
    CHECK(rep.residues == std::vector<Rational>{rational(63, 80), rational(-15, 16), rational(15, 16),
                                                rational(-63, 80)});
    CHECK(rep.partial_sums == std::vector<Rational>{rational(63, 80), rational(-3, 20),
                                                    rational(63, 80), rational(0)});
    std::vector<Rational> lam{rational(5), rational(1), rational(-1), rational(-5)};
    std::vector<Rational> mu{rational(4), rational(2), rational(-2), rational(-4)};
    for (int i = 0; i < 4; ++i)
        CHECK(rep.residues[static_cast<size_t>(i)] == test::residue_oracle(lam, mu, i));
}

TEST_CASE("decompose rejects shared and repeated roots") {
    CHECK_THROWS_AS(decompose(PolyPair{RootList{3, 1}, RootList{3, 0}}, Direction::P_over_Q), Error);
    CHECK_THROWS_AS(decompose(PolyPair{RootList{2, 2}, RootList{1, 0}}, Direction::P_over_Q), Error);
    try {
        decompose(PolyPair{RootList{2, 2}, RootList{1, 0}}, Direction::P_over_Q);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonSimpleRoots);
    }
}

TEST_CASE("decomposition identity holds exactly at random sample points") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        GenSpec spec = test::spec_for(2 + static_cast<int>(rng() % 5), rng(), rep % 2 == 0);
        PolyPair pair = generate_pair(spec);
        auto rep_pq = decompose(pair, Direction::P_over_Q);

        // Residue total identity (the 1/x coefficient): sum = mu_total - lam_total.
        CHECK(rep_pq.total == pair.mu().sum() - pair.lam().sum());

        int checked = 0;
        while (checked < 20) {
            Rational x = test::rand_rational(rng, -400, 400, 16);
            bool is_pole = false;
            for (const auto& m : pair.mu())
                if (m == x) is_pole = true;
            if (is_pole) continue;
            ++checked;
            Rational rhs(1);
            for (int i = 0; i < pair.n(); ++i)
                rhs += rep_pq.residues[static_cast<size_t>(i)] / (x - pair.mu()[i]);
            CHECK(pair.p()(x) / pair.q()(x) == rhs);
        }
    }
}

TEST_CASE("residue signs follow the root order under a common interlacer") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 40; ++rep) {
        GenSpec spec = test::spec_for(2 + static_cast<int>(rng() % 6), rng(), false);
        PolyPair pair = generate_pair(spec);
        auto rep_pq = decompose(pair, Direction::P_over_Q);
        for (int i = 0; i < pair.n(); ++i)
            CHECK(sign(rep_pq.residues[static_cast<size_t>(i)]) == sign(pair.mu()[i] - pair.lam()[i]));
    }
}

TEST_CASE("necessary condition on the worked instances") {
    auto c2 = necessary_condition(test::pair2());
    CHECK(c2.kind == CertificateKind::NecessaryConditionPassed);
    CHECK(c2.detail.partial_sums.front() == rational(-3, 2));

    auto c4 = necessary_condition(test::pair4());
    CHECK(c4.kind == CertificateKind::NecessaryConditionPassed);
    CHECK(c4.detail.partial_sums == std::vector<Rational>{rational(-45, 32), rational(-3, 32),
                                                          rational(-45, 32), rational(0)});

    // Reversed pair: refuted at k=1. Oracle value: p(2)/q'(2) = 3/4 with
    // p = x^2-1 and q' = 2x.
    auto rev = necessary_condition(PolyPair{RootList{1, -1}, RootList{2, -2}});
    CHECK(rev.kind == CertificateKind::NecessaryConditionFailed);
    CHECK(rev.witness_k == 1);
    CHECK_FALSE(rev.witness_is_boundary);
    CHECK(rev.detail.partial_sums.front() == rational(3, 4));
}

TEST_CASE("a vanishing interior partial sum is a boundary failure") {
    // Constructed so that p(mu_1)/q'(mu_1) + p(mu_2)/q'(mu_2) = 0 exactly.
    PolyPair pair{RootList({rational(3), rational(-10, 13), rational(-3)}),
                  RootList({rational(2), rational(0), rational(-2)})};
    REQUIRE(common_interlacer_check(pair).has_common_interlacer);
    auto cert = necessary_condition(pair);
    CHECK(cert.kind == CertificateKind::NecessaryConditionFailed);
    CHECK(cert.witness_k == 2);
    CHECK(cert.witness_is_boundary);
    CHECK(cert.detail.partial_sums[1] == rational(0));
}

TEST_CASE("certificates demand a common interlacer and reduce shared roots first") {
    CHECK_THROWS_AS(necessary_condition(PolyPair{RootList{5, 4}, RootList{3, 1}}), Error);
    try {
        necessary_condition(PolyPair{RootList{5, 4}, RootList{3, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoCommonInterlacer);
    }

    // Shared top root reduces away; the surviving degree-2 pair decides.
    PolyPair padded{RootList{9, 2, -2}, RootList{9, 1, -1}};
    auto cert = necessary_condition(padded);
    CHECK(cert.kind == CertificateKind::NecessaryConditionPassed);
    CHECK(cert.detail.partial_sums.size() == 2);

    CHECK_THROWS_AS(necessary_condition(PolyPair{RootList{1, 0}, RootList{1, 0}}), Error);
}

TEST_CASE("necessary condition passes on every random majorizing pair") {
    std::mt19937_64 rng(43);
    int applicable = 0;
    for (int rep = 0; rep < 400; ++rep) {
        GenSpec spec = test::spec_for(2 + static_cast<int>(rng() % 6), rng(), true);
        PolyPair pair = generate_pair(spec);
        if (!majorizes(pair.lam(), pair.mu()).holds) continue;
        ++applicable;
        auto cert = necessary_condition(pair);
        CHECK(cert.kind == CertificateKind::NecessaryConditionPassed);
        for (size_t k = 0; k + 1 < cert.detail.partial_sums.size(); ++k)
            CHECK(sign(cert.detail.partial_sums[k]) < 0);  // strict, zero tolerance
    }
    CHECK(applicable > 20);
}

TEST_CASE("strong majorization certificate on the worked instances") {
    auto c2 = strong_majorization_certificate(test::pair2());
    CHECK(c2.kind == CertificateKind::StrongMajorization);
    CHECK(c2.detail.partial_sums == std::vector<Rational>{rational(3, 4), rational(0)});

    auto c4 = strong_majorization_certificate(test::pair4());
    CHECK(c4.kind == CertificateKind::NotStrongMajorization);
    CHECK(c4.witness_k == 2);
    CHECK(c4.detail.partial_sums[1] == rational(-3, 20));

    auto half = strong_majorization_certificate(
        PolyPair{RootList{1, -1}, RootList({rational(1, 2), rational(-1, 2)})});
    CHECK(half.kind == CertificateKind::StrongMajorization);
    CHECK(half.detail.residues.front() == rational(3, 8));
}

TEST_CASE("unequal root sums refuse the strong certificate") {
    auto cert = strong_majorization_certificate(PolyPair{RootList{3, 1}, RootList{2, 0}});
    CHECK(cert.kind == CertificateKind::NotStrongMajorization);
    CHECK(cert.witness_k == 2);
    CHECK_FALSE(cert.detail.sums_equal);
}

TEST_CASE("strong certificate implies majorization on random pairs") {
    std::mt19937_64 rng(44);
    int strong_seen = 0;
    for (int rep = 0; rep < 200; ++rep) {
        GenSpec spec = test::spec_for(2 + static_cast<int>(rng() % 5), rng(), true);
        PolyPair pair = generate_pair(spec);
        auto cert = strong_majorization_certificate(pair);
        if (cert.kind != CertificateKind::StrongMajorization) continue;
        ++strong_seen;
        CHECK(majorizes(pair.lam(), pair.mu()).holds);
    }
    CHECK(strong_seen > 10);
}
