#include <doctest.h>

#include "bolsuper/error.hpp"
#include "support.hpp"

using namespace bolsuper;

TEST_CASE("lie to supertriple on aff2") {
    const AlgebraDef lts = lieToSupertriple(catalogEntry("aff2_lie").algebra);
    CHECK_FALSE(lts.hasBinary());
    CHECK(lts.name() == "aff2-lts");
    // [e1,e2,e1] = [[e1,e2],e1] = [e2,e1] = -e2
    CHECK(lts.ternary()(0, 1, 0) == Vector{0, -1});
    CHECK(lts.ternary()(1, 0, 0) == Vector{0, 1});
    CHECK(lts.ternary()(0, 1, 1) == Vector{0, 0});
    CHECK(checkAxioms(lts, AxiomKind::LieSupertriple).passed());
}

TEST_CASE("lie to supertriple on gl(1|1) matches nested brackets") {
    const AlgebraDef gl = testing::glmn(1, 1);
    const AlgebraDef lts = lieToSupertriple(gl);
    CHECK(checkAxioms(lts, AxiomKind::LieSupertriple).passed());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(lts.ternary()(i, j, k) == evalBinary(gl, gl.binary()(i, j), gl.space().basis(k)));
}

TEST_CASE("lie to supertriple refuses non-Lie input") {
    CHECK_THROWS_AS(lieToSupertriple(catalogEntry("L2_2_2_malcev").algebra), Error);
}

TEST_CASE("malcev to bol of a Lie superalgebra is the nested bracket") {
    // the Jacobi identity collapses the 1/3-combination to [[x,y],z]
    for (const AlgebraDef& lie : {catalogEntry("aff2_lie").algebra, testing::glmn(1, 1)}) {
        const AlgebraDef bol = malcevToBol(lie);
        CHECK(bol.binary() == lie.binary());
        CHECK(bol.ternary() == lieToSupertriple(lie).ternary());
        CHECK(checkAxioms(bol, AxiomKind::Bol).passed());
    }
}

TEST_CASE("malcev to bol of L2(2,2) by hand") {
    const AlgebraDef bol = malcevToBol(catalogEntry("L2_2_2_malcev").algebra);
    CHECK(bol.name() == "L2(2,2)-bol");
    // {e1,e2,e1} = 1/3(2[[e1,e2],e1] - [[e2,e1],e1] - [[e1,e1],e2]) = 1/3(-2e2 - e2)
    CHECK(bol.ternary()(0, 1, 0) == Vector{0, -1, 0, 0});
    CHECK(bol.ternary()(0, 2, 0) == Vector{0, 0, -1, 0});
    CHECK(bol.ternary()(0, 3, 0) == Vector{0, 0, 0, -1});
    CHECK(bol.ternary()(0, 1, 1) == Vector{0, 0, 0, 0});
}

TEST_CASE("malcev to bol refuses non-Malcev input") {
    SuperSpace s(3, 0);
    BinaryStructure b(s);
    // [e1,e2] = e3, [e1,e3] = e1: Jacobi fails, and so does Malcev
    b.set(0, 1, Vector{0, 0, 1});
    b.set(1, 0, Vector{0, 0, -1});
    b.set(0, 2, Vector{1, 0, 0});
    b.set(2, 0, Vector{-1, 0, 0});
    const AlgebraDef a("x", s, b, std::nullopt);
    REQUIRE_FALSE(checkAxioms(a, AxiomKind::Malcev).passed());
    CHECK_THROWS_AS(malcevToBol(a), Error);
}
