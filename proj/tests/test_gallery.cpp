#include <doctest.h>

#include "hopfkit/gallery.hpp"
#include "hopfkit/linalg.hpp"

using namespace hopfkit;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F3 = FieldSpec::prime_field(3);
}  // namespace

TEST_SUITE("gallery") {

TEST_CASE("every gallery Hopf algebra passes check_hopf over Q") {
    for (const char* name : {"k", "kC2", "kC3", "kS3", "dual_kC2", "dual_kC3", "H4"})
        CHECK_MESSAGE(check_hopf(gallery::build_hopf(name, Q)).ok(), name);
}

TEST_CASE("group algebras stay Hopf over prime fields") {
    CHECK(check_hopf(gallery::group_algebra(gallery::cyclic_group(3), F2)).ok());
    CHECK(check_hopf(gallery::group_algebra(gallery::cyclic_group(2), F3)).ok());
    CHECK(check_hopf(gallery::dual_group_algebra(gallery::cyclic_group(2), F2)).ok());
    CHECK(check_hopf(gallery::sweedler_h4(F3)).ok());
    CHECK_THROWS_AS(gallery::sweedler_h4(F2), std::invalid_argument);
}

TEST_CASE("every gallery coalgebra passes check_coalgebra") {
    for (const char* name : {"M2", "M3", "kX2", "kX3", "kX4", "kX5", "dual_kC2_coalgebra"})
        CHECK_MESSAGE(check_coalgebra(gallery::build_coalgebra(name, Q)).ok(), name);
}

TEST_CASE("the 36-dimensional comatrix coalgebra passes (stress case)") {
    CHECK(check_coalgebra(gallery::comatrix_coalgebra(6, Q)).ok());
}

TEST_CASE("S4 = Id for the Sweedler antipode over GF(3) too") {
    HopfAlgebra h = gallery::sweedler_h4(F3);
    Matrix s2 = h.antipode * h.antipode;
    CHECK(s2 != Matrix::identity(F3, 4));
    CHECK(s2 * s2 == Matrix::identity(F3, 4));
}

TEST_CASE("classical integral on group algebras: the delta at the identity, total over any field") {
    for (FieldSpec f : {Q, F2, F3}) {
        for (const char* name : {"kC2", "kC3"}) {
            HopfAlgebra h = gallery::group_algebra(gallery::cyclic_group(name[2] - '0'), f);
            auto theta = gallery::classical_integral(h, true);
            REQUIRE_MESSAGE(theta.has_value(), name << " over " << f.str());
            // theta = delta_e: theta(e) = 1, theta(g) = 0 otherwise
            CHECK((*theta)(0, 0).is_one());
            for (int i = 1; i < h.dim(); ++i) CHECK((*theta)(i, 0).is_zero());
        }
    }
}

TEST_CASE("H4 has a one-dimensional integral space with theta(1) = 0: not cosemisimple") {
    HopfAlgebra h = gallery::sweedler_h4(Q);
    auto theta = gallery::classical_integral(h, false);
    REQUIRE(theta.has_value());
    // the left integral on H4 is supported on the dual basis element at gx
    CHECK((*theta)(0, 0).is_zero());
    CHECK((*theta)(1, 0).is_zero());
    CHECK((*theta)(2, 0).is_zero());
    CHECK(!(*theta)(3, 0).is_zero());
    CHECK(!gallery::classical_integral(h, true).has_value());
}

TEST_CASE("dual group algebra cosemisimplicity follows the Maschke boundary") {
    // total integral on functions(G) exists iff char does not divide |G|
    HopfAlgebra over_q = gallery::dual_group_algebra(gallery::cyclic_group(2), Q);
    CHECK(gallery::classical_integral(over_q, true).has_value());
    HopfAlgebra over_f3 = gallery::dual_group_algebra(gallery::cyclic_group(2), F3);
    CHECK(gallery::classical_integral(over_f3, true).has_value());
    HopfAlgebra over_f2 = gallery::dual_group_algebra(gallery::cyclic_group(2), F2);
    CHECK(!gallery::classical_integral(over_f2, true).has_value());
    // a (non-normalized) integral still exists in every characteristic
    CHECK(gallery::classical_integral(over_f2, false).has_value());
}

TEST_CASE("trivial Hopf algebra: the identity functional is a total integral") {
    HopfAlgebra k = gallery::trivial_hopf(Q);
    auto theta = gallery::classical_integral(k, true);
    REQUIRE(theta.has_value());
    CHECK((*theta)(0, 0).is_one());
}

TEST_CASE("classical integral verifies the defining identity (oracle cross-check)") {
    // sum h1 theta(h2) = theta(h) 1 at every basis element, by direct expansion
    for (const char* name : {"kC2", "kS3", "H4", "dual_kC3"}) {
        HopfAlgebra h = gallery::build_hopf(name, Q);
        auto theta = gallery::classical_integral(h, false);
        REQUIRE(theta.has_value());
        bool nonzero = false;
        for (int i = 0; i < h.dim(); ++i)
            if (!(*theta)(i, 0).is_zero()) nonzero = true;
        CHECK(nonzero);
        for (int i = 0; i < h.dim(); ++i) {
            Matrix lhs(Q, h.dim(), 1);
            h.coa().comult.for_nonzero([&](const std::vector<int>& cm, const Scalar& s) {
                if (cm[0] == i) lhs += h.alg().basis_vec(cm[1]) * (s * (*theta)(cm[2], 0));
            });
            CHECK(lhs == h.alg().unit * (*theta)(i, 0));
        }
    }
}

TEST_CASE("gallery registry builds every entry") {
    for (const auto& e : gallery::entries()) {
        if (e.kind == "hopf") CHECK(gallery::build_hopf(e.name, Q).dim() >= 1);
        if (e.kind == "coalgebra") CHECK(gallery::build_coalgebra(e.name, Q).dim >= 1);
        if (e.kind == "dk_datum") CHECK(gallery::build_datum(e.name, Q).cdim() >= 1);
        if (e.kind == "bicomodule_algebra") CHECK(gallery::build_bicomodule(e.name, Q).alg.dim >= 1);
    }
    CHECK(gallery::has_entry("kC2"));
    CHECK(!gallery::has_entry("nope"));
}

}  // TEST_SUITE
