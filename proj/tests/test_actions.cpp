#include <doctest.h>

#include "hopfkit/gallery.hpp"

using namespace hopfkit;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_SUITE("actions") {

TEST_CASE("regular module and comodule of kC2 pass") {
    HopfAlgebra h = gallery::build_hopf("kC2", Q);
    RightModule reg{h.alg(), 2, h.alg().basis, h.alg().mult};
    CHECK(check_right_module(reg).ok());
    LeftComodule co{h.coa(), 2, h.coa().basis, h.coa().comult};
    CHECK(check_left_comodule(co).ok());
}

TEST_CASE("Delta makes H a comodule algebra over itself") {
    for (const char* name : {"kC2", "kS3", "H4"}) {
        HopfAlgebra h = gallery::build_hopf(name, Q);
        LeftComoduleAlgebra a{h, h.alg(), h.coa().comult};
        CHECK(check_comodule_algebra(a).ok());
    }
}

TEST_CASE("multiplication makes H a module coalgebra over itself") {
    for (const char* name : {"kC2", "kS3", "H4"}) {
        HopfAlgebra h = gallery::build_hopf(name, Q);
        RightModuleCoalgebra c{h, h.coa(), h.alg().mult};
        CHECK(check_module_coalgebra(c).ok());
    }
}

TEST_CASE("(Delta, Delta) is a bicomodule algebra; so is the trivial right coaction") {
    for (const char* name : {"kC2", "H4"}) {
        HopfAlgebra h = gallery::build_hopf(name, Q);
        CHECK(check_bicomodule_algebra(gallery::bicomodule_regular(h)).ok());
        CHECK(check_bicomodule_algebra(gallery::bicomodule_left_regular(h)).ok());
    }
}

TEST_CASE("perturbing one coaction coefficient fails with a witness") {
    HopfAlgebra h = gallery::build_hopf("kC2", Q);
    BicomoduleAlgebra ha = gallery::bicomodule_regular(h);
    ha.left_coaction.at({1, 1, 1}) += Scalar::one(Q);
    Report rep = check_bicomodule_algebra(ha);
    CHECK(!rep.ok());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("csstar module: the dual acts through the coaction") {
    // M = C = kX2: e_x* projects onto the x component, eps acts as identity
    Coalgebra kx = gallery::grouplike_coalgebra(2, Q);
    LeftComodule m{kx, 2, kx.basis, kx.comult};
    RightModule over_dual = csstar_module(m);
    CHECK(check_right_module(over_dual).ok());
    Matrix y = Matrix::column(Q, {0, 1});
    CHECK(over_dual.act(y, Matrix::basis_vector(Q, 2, 0)).is_zero());
    CHECK(over_dual.act(y, Matrix::basis_vector(Q, 2, 1)) == y);
    CHECK(over_dual.act(y, kx.counit.transpose()) == y);
}

TEST_CASE("csstar module laws brute-forced on the comatrix coalgebra") {
    Coalgebra c = gallery::comatrix_coalgebra(2, Q);
    LeftComodule m{c, 4, c.basis, c.comult};
    RightModule over_dual = csstar_module(m);
    CHECK(check_right_module(over_dual).ok());
}

TEST_CASE("trivializing the right coaction of a comodule algebra gives a bicomodule algebra") {
    for (const char* name : {"kC2", "kC3", "H4"}) {
        HopfAlgebra h = gallery::build_hopf(name, Q);
        BicomoduleAlgebra ha{h, h.alg(), h.coa().comult, trivial_right_coaction(h, h.dim())};
        CHECK(check_bicomodule_algebra(ha).ok());
    }
}

TEST_CASE("checked constructor accepts valid data and rejects a broken coaction") {
    HopfAlgebra h = gallery::build_hopf("kC2", Q);
    CHECK_NOTHROW(make_bicomodule_algebra(h, h.alg(), h.coa().comult, trivial_right_coaction(h, 2)));
    Tensor broken = h.coa().comult;
    broken.at({1, 0, 0}) += Scalar::one(Q);
    CHECK_THROWS_AS(make_bicomodule_algebra(h, h.alg(), broken, trivial_right_coaction(h, 2)),
                    std::invalid_argument);
}

}  // TEST_SUITE
