#include "comprelie/wells.hpp"
#include "comprelie/error.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace comprelie;

namespace {

AbelianExtension line_ext() {
    return parse_extension(testutil::load_fixture("ext_phi1.json"));
}

AbelianExtension dual_ext() {
    return parse_extension(testutil::load_fixture("d2_ext.json"));
}

AutPair scalar_pair(const Rational& b, const Rational& a) {
    Matrix beta(1, 1), alpha(1, 1);
    beta(0, 0) = b;
    alpha(0, 0) = a;
    return {beta, alpha};
}

// diag(1, b) on both factors, the automorphisms of the dual numbers
AutPair dual_pair(const Rational& beta_t, const Rational& alpha_t) {
    Matrix beta = Matrix::identity(2), alpha = Matrix::identity(2);
    beta(1, 1) = beta_t;
    alpha(1, 1) = alpha_t;
    return {beta, alpha};
}

}  // namespace

TEST_CASE("restriction of a diagonal carrier automorphism") {
    AbelianExtension ext = line_ext();
    Matrix g(2, 2);
    g(0, 0) = 2;
    g(1, 1) = 4;  // gamma(e) = 2e, gamma(v) = 4v: e*e = v forces 4 = 2^2
    AutPair pair = tau(ext, LiftedAutomorphism{g});
    CHECK(pair == scalar_pair(4, 2));
}

TEST_CASE("tau rejects maps that are not carrier automorphisms") {
    AbelianExtension ext = line_ext();
    CHECK_THROWS_AS(tau(ext, LiftedAutomorphism{Matrix(2, 2)}), input_error);
    Matrix g(2, 2);
    g(0, 0) = 2;
    g(1, 1) = 5;  // gamma(e*e) = 5v but gamma(e)*gamma(e) = 4v
    CHECK_THROWS_AS(tau(ext, LiftedAutomorphism{g}), input_error);
}

TEST_CASE("tau rejects automorphisms that move the fiber") {
    AbelianExtension ext = parse_extension(testutil::load_fixture("ext_zero1.json"));
    Matrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;  // an automorphism of the trivial carrier, fiber not kept
    CHECK_THROWS_AS(tau(ext, LiftedAutomorphism{swap}), input_error);
}

TEST_CASE("compatibility over the abelian line is invertibility") {
    AbelianExtension ext = line_ext();
    CHECK(is_compatible_pair(ext, scalar_pair(2, 1)));
    CHECK(is_compatible_pair(ext, scalar_pair(Rational(1, 3), Rational(-2))));
    CHECK_FALSE(is_compatible_pair(ext, scalar_pair(0, 1)));
    CHECK_FALSE(is_compatible_pair(ext, scalar_pair(1, 0)));
}

TEST_CASE("compatibility on the dual number extension needs matching scales") {
    AbelianExtension ext = dual_ext();
    for (Rational b : {Rational(2), Rational(-1), Rational(5, 7)}) {
        CHECK(is_compatible_pair(ext, dual_pair(b, b)));
    }
    CHECK_FALSE(is_compatible_pair(ext, dual_pair(Rational(2), Rational(3))));
    // alpha must be an automorphism of the base
    Matrix not_auto = Matrix::identity(2).scaled(Rational(2));
    CHECK_FALSE(is_compatible_pair(ext, AutPair{Matrix::identity(2), not_auto}));
    CHECK_THROWS_AS(is_compatible_pair(ext, scalar_pair(1, 1)), input_error);
}

TEST_CASE("the cocycle action composes contravariantly in alpha and directly in beta") {
    Cochain2 c = parse_cochain2(testutil::load_fixture("d2_cob.json"));
    AutPair p = dual_pair(Rational(2), Rational(3));
    AutPair q = dual_pair(Rational(-1), Rational(1, 2));
    AutPair composed{p.beta * q.beta, p.alpha * q.alpha};
    CHECK(act_on_cocycle(p, act_on_cocycle(q, c)) == act_on_cocycle(composed, c));
    AutPair id = dual_pair(1, 1);
    CHECK(act_on_cocycle(id, c) == c);
    AutPair singular = dual_pair(1, 0);
    CHECK_THROWS_AS(act_on_cocycle(singular, c), input_error);
}

TEST_CASE("frozen obstruction values over the abelian line") {
    AbelianExtension ext = line_ext();
    WellsClass w21 = wells_class(ext, scalar_pair(2, 1));
    CHECK_FALSE(w21.is_zero);
    CHECK(w21.coordinates == Vec{Rational(1), Rational(0)});
    WellsClass w32 = wells_class(ext, scalar_pair(3, 2));
    CHECK_FALSE(w32.is_zero);
    CHECK(w32.coordinates == Vec{Rational(-1, 4), Rational(0)});
    WellsClass w42 = wells_class(ext, scalar_pair(4, 2));
    CHECK(w42.is_zero);
    CHECK(w42.coordinates == Vec{Rational(0), Rational(0)});
    CHECK(wells_class(ext, scalar_pair(1, 1)).is_zero);
}

TEST_CASE("the wells map rejects incompatible pairs") {
    AbelianExtension ext = line_ext();
    CHECK_THROWS_AS(wells_class(ext, scalar_pair(0, 1)), domain_error);
    AbelianExtension dual = dual_ext();
    CHECK_THROWS_AS(wells_class(dual, dual_pair(Rational(2), Rational(3))), domain_error);
}

TEST_CASE("the obstruction does not depend on the section") {
    AbelianExtension ext = line_ext();
    AutPair pair = scalar_pair(3, 2);
    WellsClass canonical = wells_class(ext, pair);
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Section s{ext.s0 + ext.i * testutil::random_matrix(rng, 1, 1)};
        WellsClass other = wells_class(ext, pair, s);
        CHECK(other.coordinates == canonical.coordinates);
        CHECK(other.is_zero == canonical.is_zero);
    }
    CHECK_THROWS_AS(wells_class(ext, pair, Section{Matrix(2, 1)}), input_error);
}

TEST_CASE("obstructed pairs admit no lift, unobstructed pairs do") {
    AbelianExtension ext = line_ext();
    CHECK_FALSE(induce(ext, scalar_pair(2, 1)).has_value());
    CHECK_FALSE(induce(ext, scalar_pair(3, 2)).has_value());
    // incompatible input is a negative verdict, not an error
    CHECK_FALSE(induce(ext, scalar_pair(0, 1)).has_value());

    auto lift = induce(ext, scalar_pair(4, 2));
    REQUIRE(lift.has_value());
    CHECK(tau(ext, lift->gamma) == scalar_pair(4, 2));

    AbelianExtension dual = dual_ext();
    for (Rational b : {Rational(2), Rational(-1), Rational(1, 2)}) {
        CAPTURE(b.str());
        AutPair pair = dual_pair(b, b);
        WellsClass w = wells_class(dual, pair);
        CHECK(w.is_zero);  // the building cocycle is a coboundary
        auto got = induce(dual, pair);
        REQUIRE(got.has_value());
        CHECK(tau(dual, got->gamma) == pair);
        CHECK(is_automorphism(dual.carrier, got->gamma.gamma));
    }
}

TEST_CASE("a lift exists exactly when the class vanishes, over diagonal searches") {
    AbelianExtension ext = line_ext();
    for (int bn = -3; bn <= 3; ++bn) {
        for (int an = -3; an <= 3; ++an) {
            if (bn == 0 || an == 0) {
                continue;
            }
            AutPair pair = scalar_pair(bn, an);
            WellsClass w = wells_class(ext, pair);
            CHECK(induce(ext, pair).has_value() == w.is_zero);
        }
    }
}

TEST_CASE("one-cocycles give fiber-and-base-identical automorphisms") {
    AbelianExtension ext = dual_ext();
    Matrix basis(2, 2);
    basis(1, 1) = 1;  // the one-cocycle line of the adjoint dual numbers
    for (Rational scale : {Rational(1), Rational(-3), Rational(7, 2)}) {
        Cochain1 f{basis.scaled(scale)};
        LiftedAutomorphism gamma = gamma_from_z1(ext, f);
        CHECK(is_automorphism(ext.carrier, gamma.gamma));
        AutPair restricted = tau(ext, gamma);
        CHECK(restricted.beta.is_identity());
        CHECK(restricted.alpha.is_identity());
        CHECK(z1_from_gamma(ext, gamma) == f);
    }
    Cochain1 not_cocycle{Matrix::identity(2)};
    CHECK_THROWS_AS(gamma_from_z1(ext, not_cocycle), input_error);
    CHECK_THROWS_AS(gamma_from_z1(ext, Cochain1{Matrix(3, 2)}), input_error);
}

TEST_CASE("z1_from_gamma rejects non-identity restrictions") {
    AbelianExtension ext = line_ext();
    auto lift = induce(ext, scalar_pair(4, 2));
    REQUIRE(lift.has_value());
    CHECK_THROWS_AS(z1_from_gamma(ext, lift->gamma), input_error);
}

TEST_CASE("the cocycle-to-automorphism map is a group homomorphism") {
    AbelianExtension ext = line_ext();
    std::mt19937 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain1 f{testutil::random_matrix(rng, 1, 1)};
        Cochain1 g{testutil::random_matrix(rng, 1, 1)};
        LiftedAutomorphism gf = gamma_from_z1(ext, f);
        LiftedAutomorphism gg = gamma_from_z1(ext, g);
        LiftedAutomorphism product{gf.gamma * gg.gamma};
        // composition corresponds to addition of cocycles
        CHECK(z1_from_gamma(ext, product) == f + g);
        CHECK(gamma_from_z1(ext, f + g) == product);
    }
}

TEST_CASE("exactness holds on a deterministic sample suite") {
    AbelianExtension ext = line_ext();
    std::vector<LiftedAutomorphism> gammas;
    gammas.push_back(LiftedAutomorphism{Matrix::identity(2)});
    for (int k = 1; k <= 3; ++k) {
        Matrix f(1, 1);
        f(0, 0) = k;
        gammas.push_back(gamma_from_z1(ext, Cochain1{f}));
    }
    std::vector<AutPair> pairs = {scalar_pair(1, 1), scalar_pair(2, 1), scalar_pair(4, 2),
                                  scalar_pair(3, 2), scalar_pair(0, 1)};
    for (const AutPair& pair : pairs) {
        if (is_compatible_pair(ext, pair) && wells_class(ext, pair).is_zero) {
            auto lift = induce(ext, pair);
            REQUIRE(lift.has_value());
            gammas.push_back(lift->gamma);
        }
    }
    ExactnessReport report = exactness_report(ext, gammas, pairs);
    CHECK(report.all_pass());
    CHECK(report.failures.empty());
    CHECK(report.gamma_samples == gammas.size());
    CHECK(report.pair_samples == pairs.size());
}

TEST_CASE("exactness reporting flags broken samples instead of throwing") {
    AbelianExtension ext = line_ext();
    std::vector<LiftedAutomorphism> gammas = {LiftedAutomorphism{Matrix(2, 2)}};
    ExactnessReport report = exactness_report(ext, gammas, {});
    CHECK_FALSE(report.all_pass());
    CHECK_FALSE(report.failures.empty());
}
