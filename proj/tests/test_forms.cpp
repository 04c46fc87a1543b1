#include <doctest.h>

#include "bolsuper/error.hpp"
#include "bolsuper/forms.hpp"
#include "support.hpp"

using namespace bolsuper;

TEST_CASE("Killing form of aff2 by hand") {
    // ad e1 = diag(0,1), ad e2 sends e1 to -e2
    const BilinearForm k = killingForm(catalogEntry("aff2_lie").algebra);
    CHECK(k.gram() == Matrix::fromRows({{1, 0}, {0, 0}}, 2));
    CHECK(radical(k) == Subspace::span(2, {{0, 1}}));
}

TEST_CASE("Killing form of gl(m|n) is 2(m-n) str(xy) - 2 str(x) str(y)") {
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
        const AlgebraDef gl = testing::glmn(m, n);
        const std::size_t N = m + n;
        auto sign = [&](std::size_t i) { return i < std::size_t(m) ? 1 : -1; };
        const BilinearForm k = killingForm(gl);
        for (std::size_t a = 0; a < N * N; ++a)
            for (std::size_t b = 0; b < N * N; ++b) {
                const std::size_t i = a / N, j = a % N, p = b / N, q = b % N;
                // E_ij E_pq = delta_jp E_iq
                const int strxy = (j == p && i == q) ? sign(i) : 0;
                const int strx = i == j ? sign(i) : 0, stry = p == q ? sign(p) : 0;
                CHECK(k.gram()(a, b) == 2 * (m - n) * strxy - 2 * strx * stry);
            }
        CHECK(k.isSupersymmetric());
        CHECK(k.isConsistent());
        CHECK(checkInvariant(gl, k).passed());
    }
}

TEST_CASE("Killing form refuses non-Lie input") {
    CHECK_THROWS_AS(killingForm(catalogEntry("L2_2_2_malcev").algebra), Error);
    CHECK_THROWS_AS(killingRicci(catalogEntry("aff2_lie").algebra, RicciMethod::Direct), Error);
}

TEST_CASE("right maps") {
    const AlgebraDef b = catalogEntry("L2_3_1_bol").algebra;
    const SuperSpace& s = b.space();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const GradedMap r = rightMap(b, s.basis(i), s.basis(j));
            CHECK(r.degree() == s.parity(i) + s.parity(j));
            for (std::size_t k = 0; k < 4; ++k) {
                const int sign = signPow(bit(s.parity(k)) * (bit(s.parity(i)) + bit(s.parity(j))));
                CHECK(r(s.basis(k)) == scaled(b.ternary()(k, i, j), sign));
            }
        }
}

TEST_CASE("Killing-Ricci: both routes agree and the form is invariant") {
    for (const auto& b : testing::bolAlgebras()) {
        const BilinearForm direct = killingRicci(b, RicciMethod::Direct);
        const BilinearForm restricted = killingRicci(b, RicciMethod::Restriction);
        CHECK(direct == restricted);
        CHECK(direct.isSupersymmetric());
        CHECK(direct.isConsistent());
        const InvariantReport inv = checkInvariant(b, direct);
        for (const auto& w : inv.identities.witnesses) CHECK(w.axiom != "inv2");
        CHECK(inv.inva2);
        CHECK(inv.equivalent());
    }
}

TEST_CASE("Killing-Ricci of L2(3,1) by hand") {
    // only R_{e3,e3} has a diagonal: e1 -> e1, e2 -> 2e1 + e2, e4 -> e4, so str = 1 + 1 - 1
    const BilinearForm beta = killingRicci(catalogEntry("L2_3_1_bol").algebra, RicciMethod::Direct);
    Matrix expected(4, 4);
    expected(2, 2) = 2;
    CHECK(beta.gram() == expected);
}

TEST_CASE("orthogonals and radicals") {
    SuperSpace s(2, 2);
    // even block [[1,0],[0,0]], odd block skew [[0,1],[-1,0]]
    Matrix g(4, 4);
    g(0, 0) = 1;
    g(2, 3) = 1;
    g(3, 2) = -1;
    const BilinearForm f(s, g);
    CHECK(f.isSupersymmetric());
    CHECK(f.isConsistent());
    CHECK(radical(f) == Subspace::span(4, {{0, 1, 0, 0}}));
    CHECK_FALSE(isNondegenerate(f));
    CHECK(orthogonal(f, Subspace::span(4, {{0, 0, 1, 0}})) == Subspace::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
    CHECK(orthogonal(f, Subspace::zero(4)) == Subspace::whole(4));
    CHECK_THROWS_AS(BilinearForm(s, Matrix(3, 3)), Error);
}

TEST_CASE("semisimplicity report is consistent with its parts") {
    for (const auto& b : testing::bolAlgebras()) {
        const SemisimplicityReport r = semisimplicityReport(b);
        const EnvelopingAlgebra env = enveloping(b, ipsSpace(b));
        CHECK(r.envelopeDim == env.lie.dim());
        CHECK(r.alpha == killingForm(env.lie));
        CHECK(r.beta == killingRicci(b, RicciMethod::Direct));
        CHECK(r.innerIdentityHolds);
        CHECK(r.center == center(b));
        CHECK(r.betaNondegenerate == isNondegenerate(r.beta));
        CHECK(r.perpEqualsCenter.has_value() == r.betaNondegenerate);
        REQUIRE(r.ideals.size() == 4);
        CHECK(r.ideals[0].perp == Subspace::whole(b.dim()));
        CHECK(r.ideals[1].perp == radical(r.beta));
        for (const auto& io : r.ideals) CHECK(io.perp == orthogonal(r.beta, io.ideal));
    }
    const AlgebraDef l231 = catalogEntry("L2_3_1_bol").algebra;
    CHECK(semisimplicityReport(l231, {Subspace::span(4, {{1, 0, 0, 0}})}).ideals.back().name == "extra1");
    CHECK_THROWS_AS(semisimplicityReport(l231, {Subspace::span(4, {{0, 0, 1, 0}})}), Error);
}
