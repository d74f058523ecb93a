#include "comprelie/extension.hpp"
#include "comprelie/error.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace comprelie;

namespace {

struct Setup {
    ComPreLieAlgebra alg;
    Representation rep;
    Cochain2 cocycle;
    AbelianExtension ext;
};

Setup line_with_phi1() {
    Setup s{testutil::abelian(1), Representation::trivial(1, 1), Cochain2(1, 1), {}};
    s.cocycle.set_phi(0, 0, Vec{Rational(1)});
    s.ext = build_extension(s.alg, s.rep, s.cocycle);
    return s;
}

Setup dual_with_coboundary() {
    Setup s;
    s.alg = testutil::dual_numbers();
    s.rep = adjoint(s.alg);
    s.cocycle = parse_cochain2(testutil::load_fixture("d2_cob.json"));
    s.ext = build_extension(s.alg, s.rep, s.cocycle);
    return s;
}

Section tilted(const AbelianExtension& ext, const Matrix& f) {
    return Section{ext.s0 + ext.i * f};
}

bool same_extension(const AbelianExtension& a, const AbelianExtension& b) {
    return a.base == b.base && a.fiber_dim == b.fiber_dim && a.carrier == b.carrier &&
           a.i == b.i && a.j == b.j && a.s0 == b.s0;
}

bool is_algebra_hom(const ComPreLieAlgebra& from, const ComPreLieAlgebra& to, const Matrix& F) {
    for (std::size_t i = 0; i < from.dim; ++i) {
        for (std::size_t j = 0; j < from.dim; ++j) {
            if (F.apply(from.star.eval_basis(i, j)) != to.star.eval(F.col(i), F.col(j))) {
                return false;
            }
            if (F.apply(from.bullet.eval_basis(i, j)) != to.bullet.eval(F.col(i), F.col(j))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("building over the abelian line puts the cocycle in the fiber row") {
    Setup s = line_with_phi1();
    CHECK(s.ext.fiber_dim == 1);
    CHECK(s.ext.carrier.dim == 2);
    // (e+0)*(e+0) = 0 + phi(e,e) = v
    CHECK(s.ext.carrier.star.eval_basis(0, 0) == unit_vec(2, 1));
    CHECK(s.ext.carrier.bullet.eval_basis(0, 0) == zero_vec(2));
    CHECK(s.ext.i.col(0) == unit_vec(2, 1));
    CHECK(s.ext.j.row(0) == unit_vec(2, 0));
    CHECK(s.ext.s0.col(0) == unit_vec(2, 0));
    CHECK(validate_extension(s.ext).all_pass());
    CHECK(same_extension(s.ext, parse_extension(testutil::load_fixture("ext_phi1.json"))));
}

TEST_CASE("the built carrier matches the frozen fixture for the dual numbers") {
    ComPreLieAlgebra alg = parse_algebra(testutil::load_fixture("d2.json"));
    validate_algebra(alg);
    Representation ad = adjoint(alg);
    Cochain2 c = parse_cochain2(testutil::load_fixture("d2_cob.json"));
    AbelianExtension built = build_extension(alg, ad, c);
    AbelianExtension fixture = parse_extension(testutil::load_fixture("d2_ext.json"));
    CHECK(same_extension(built, fixture));
    CHECK(validate_extension(built).all_pass());
    CHECK(built.carrier.basis_labels == std::vector<std::string>{"1", "t", "v1", "v2"});
}

TEST_CASE("build_extension rejects bad inputs") {
    ComPreLieAlgebra alg = testutil::dual_numbers();
    Representation ad = adjoint(alg);

    SUBCASE("non-cocycle, with the family and triple named") {
        Cochain2 c(2, 2);
        c.set_phi(0, 0, unit_vec(2, 1));
        CHECK_THROWS_WITH_AS(
            build_extension(alg, ad, c),
            "not a 2-cocycle: the mixed cocycle identity fails on basis triple (1, 1, 1)",
            input_error);
    }

    SUBCASE("unvalidated algebra") {
        ComPreLieAlgebra raw = ComPreLieAlgebra::make(1);
        raw.star = BilinearMap(1, 1, 1);
        raw.bullet = BilinearMap(1, 1, 1);
        CHECK_THROWS_AS(build_extension(raw, Representation::trivial(1, 1), Cochain2(1, 1)),
                        input_error);
    }

    SUBCASE("invalid representation") {
        Representation broken = ad;
        broken.mu[1](0, 0) = 3;
        CHECK_THROWS_AS(build_extension(alg, broken, Cochain2(2, 2)), input_error);
    }

    SUBCASE("cochain shape mismatch") {
        CHECK_THROWS_AS(build_extension(alg, ad, Cochain2(2, 1)), input_error);
    }
}

TEST_CASE("validate_extension reports each failure separately") {
    AbelianExtension good = parse_extension(testutil::load_fixture("d2_ext.json"));
    REQUIRE(validate_extension(good).all_pass());

    SUBCASE("shape mismatch gates everything") {
        AbelianExtension bad = good;
        bad.fiber_dim = 3;
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.shapes.pass);
        CHECK_FALSE(report.all_pass());
    }

    SUBCASE("broken base") {
        AbelianExtension bad = good;
        bad.base.star.c(0, 1, 0) = 9;  // no longer commutative
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.base_valid.pass);
    }

    SUBCASE("broken carrier") {
        AbelianExtension bad = good;
        bad.carrier.star.c(0, 1, 0) = 9;
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.carrier_valid.pass);
    }

    SUBCASE("j i nonzero") {
        AbelianExtension bad = good;
        bad.j(0, 2) = 1;  // j now sees the first fiber coordinate
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.ji_zero.pass);
        CHECK_FALSE(report.image_i_is_kernel_j.pass);
    }

    SUBCASE("i not injective") {
        AbelianExtension bad = good;
        bad.i.set_col(1, bad.i.col(0));
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.i_injective.pass);
    }

    SUBCASE("j not surjective") {
        AbelianExtension bad = good;
        bad.j.set_row(1, zero_vec(4));
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.j_surjective.pass);
        CHECK_FALSE(report.section.pass);  // j s0 can no longer be the identity
    }

    SUBCASE("s0 not a section") {
        AbelianExtension bad = good;
        bad.s0.set_col(0, zero_vec(4));
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.section.pass);
        CHECK(report.ji_zero.pass);
    }

    SUBCASE("fiber with a product") {
        AbelianExtension bad = good;
        bad.carrier.star.c(2, 2, 2) = 1;  // v1 * v1 = v1
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.fiber_trivial.pass);
        CHECK(report.fiber_trivial.witness == std::vector<std::size_t>{0, 0});
    }

    SUBCASE("j not a homomorphism") {
        AbelianExtension bad = good;
        // moving base mass into the carrier product breaks j compatibility
        bad.carrier.star.c(0, 0, 1) += 1;
        ExtensionReport report = validate_extension(bad);
        CHECK_FALSE(report.j_homomorphism.pass);
    }
}

TEST_CASE("validate_extension never throws on junk") {
    AbelianExtension junk;
    junk.base = ComPreLieAlgebra::make(1);
    junk.fiber_dim = 2;
    junk.carrier = ComPreLieAlgebra::make(1);
    ExtensionReport report = validate_extension(junk);
    CHECK_FALSE(report.shapes.pass);
    CHECK_FALSE(report.all_pass());
}

TEST_CASE("section validity") {
    AbelianExtension ext = parse_extension(testutil::load_fixture("ext_phi1.json"));
    CHECK(section_valid(ext, ext.canonical_section()));
    Section tilt = parse_section(testutil::load_fixture("sec_tilt1.json"));
    CHECK(section_valid(ext, tilt));
    Section wrong{Matrix::from_rows({{0}, {1}})};  // lands in the fiber
    CHECK_FALSE(section_valid(ext, wrong));
    Section misshapen{Matrix(3, 1)};
    CHECK_FALSE(section_valid(ext, misshapen));
}

TEST_CASE("fiber coordinates") {
    AbelianExtension ext = parse_extension(testutil::load_fixture("d2_ext.json"));
    Vec u{Rational(3), Rational(-1, 2)};
    CHECK(fiber_coords(ext, ext.i.apply(u)) == u);
    CHECK_THROWS_AS(fiber_coords(ext, ext.s0.col(0)), input_error);
}

TEST_CASE("the induced representation recovers the building data") {
    for (Setup s : {line_with_phi1(), dual_with_coboundary()}) {
        Representation got = induced_rep(s.ext, s.ext.canonical_section());
        CHECK(got == s.rep);
    }
}

TEST_CASE("the induced representation does not depend on the section") {
    Setup s = dual_with_coboundary();
    Representation canonical = induced_rep(s.ext, s.ext.canonical_section());
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Section sec = tilted(s.ext, testutil::random_matrix(rng, 2, 2));
        REQUIRE(section_valid(s.ext, sec));
        CHECK(induced_rep(s.ext, sec) == canonical);
    }
    CHECK_THROWS_AS(induced_rep(s.ext, Section{Matrix(4, 2)}), input_error);
}

TEST_CASE("extract round trips the building cocycle") {
    for (Setup s : {line_with_phi1(), dual_with_coboundary()}) {
        Cochain2 back = extract_cocycle(s.ext, s.ext.canonical_section());
        CHECK(back == s.cocycle);
    }
}

TEST_CASE("cocycles read through different sections are cohomologous") {
    Setup s = dual_with_coboundary();
    ComPreLieAlgebra alg = s.alg;  // validated copy
    Cochain2 canonical = extract_cocycle(s.ext, s.ext.canonical_section());
    std::mt19937 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        Section sec = tilted(s.ext, testutil::random_matrix(rng, 2, 2));
        Cochain2 other = extract_cocycle(s.ext, sec);
        auto witness = are_cohomologous(alg, s.rep, canonical, other);
        REQUIRE(witness.has_value());
        CHECK(d1(alg, s.rep, *witness) == canonical - other);
    }
    CHECK_THROWS_AS(extract_cocycle(s.ext, Section{Matrix(4, 2)}), input_error);
}

TEST_CASE("an extension is equivalent to itself via the identity") {
    AbelianExtension ext = parse_extension(testutil::load_fixture("d2_ext.json"));
    auto iso = extensions_isomorphic(ext, ext);
    REQUIRE(iso.has_value());
    CHECK((ext.j * iso->F) == ext.j);
    CHECK((iso->F * ext.i) == ext.i);
    CHECK(is_invertible(iso->F));
    CHECK(is_algebra_hom(ext.carrier, ext.carrier, iso->F));
}

TEST_CASE("cohomologous cocycles give equivalent extensions") {
    ComPreLieAlgebra alg = testutil::dual_numbers();
    Representation ad = adjoint(alg);
    Cochain2 c = parse_cochain2(testutil::load_fixture("d2_cob.json"));
    std::mt19937 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        Cochain1 shift{testutil::random_matrix(rng, 2, 2)};
        Cochain2 cprime = c + d1(alg, ad, shift);
        AbelianExtension e1 = build_extension(alg, ad, c);
        AbelianExtension e2 = build_extension(alg, ad, cprime);
        auto iso = extensions_isomorphic(e1, e2);
        REQUIRE(iso.has_value());
        CHECK(is_invertible(iso->F));
        CHECK((iso->F * e1.i) == e2.i);
        CHECK((e2.j * iso->F) == e1.j);
        CHECK(is_algebra_hom(e1.carrier, e2.carrier, iso->F));
        // the corrector f writes F over the canonical splitting
        Matrix expected = e2.s0 + e2.i * iso->f;
        CHECK(iso->F * e1.s0 == expected);
    }
}

TEST_CASE("distinct classes give inequivalent extensions") {
    AbelianExtension with_phi = parse_extension(testutil::load_fixture("ext_phi1.json"));
    AbelianExtension without = parse_extension(testutil::load_fixture("ext_zero1.json"));
    CHECK_FALSE(extensions_isomorphic(with_phi, without).has_value());
    CHECK_FALSE(extensions_isomorphic(without, with_phi).has_value());
}

TEST_CASE("equivalence requires matching bases and valid extensions") {
    AbelianExtension small = parse_extension(testutil::load_fixture("ext_phi1.json"));
    AbelianExtension big = parse_extension(testutil::load_fixture("d2_ext.json"));
    CHECK_THROWS_AS(extensions_isomorphic(small, big), input_error);
    AbelianExtension broken = small;
    broken.s0.set_col(0, zero_vec(2));
    CHECK_THROWS_AS(extensions_isomorphic(broken, small), input_error);
}
