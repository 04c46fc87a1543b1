// One line per acceptance criterion; exit status is the number of failures.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "bolsuper/algebra_io.hpp"
#include "bolsuper/forms.hpp"
#include "support.hpp"

using namespace bolsuper;
using testing::Gen;

namespace {

struct Failure {
    std::string why;
};

void require(bool ok, const std::string& why) {
    if (!ok) throw Failure{why};
}

AlgebraDef entry(const char* key) { return catalogEntry(key).algebra; }

// The catalog's Bol entries; abelian_m_n is represented by abelian(2,2).
std::vector<AlgebraDef> catalogBol() { return {entry("L2_3_1_bol"), entry("L2_2_2_bol"), entry("abelian_2_2")}; }

void catalogVerification() {
    require(checkAxioms(entry("L2_2_2_malcev"), AxiomKind::Malcev).passed(), "L2_2_2_malcev fails malcev");
    require(!checkAxioms(entry("L2_2_2_malcev"), AxiomKind::Lie).witnesses.empty(), "L2_2_2_malcev has no lie witness");
    require(checkAxioms(entry("L2_3_1_bol"), AxiomKind::Bol).passed(), "L2_3_1_bol fails bol");
}

// L2(2,2) as a plain table; the 1/3-combination is expanded from it directly.
Vector bruteBracket(const Vector& x, const Vector& y) {
    static const std::map<std::pair<int, int>, std::array<int, 4>> t = {
        {{0, 1}, {0, 1, 0, 0}},  {{1, 0}, {0, -1, 0, 0}}, {{0, 2}, {0, 0, 1, 0}}, {{2, 0}, {0, 0, -1, 0}},
        {{0, 3}, {0, 0, 0, -1}}, {{3, 0}, {0, 0, 0, 1}},  {{1, 2}, {0, 0, 0, -1}}, {{2, 1}, {0, 0, 0, 1}}};
    Vector out(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto it = t.find({i, j});
            if (it == t.end()) continue;
            for (int r = 0; r < 4; ++r) out[r] += x[i] * y[j] * it->second[r];
        }
    return out;
}

void derivedProducts() {
    const AlgebraDef bol = malcevToBol(entry("L2_2_2_malcev"));
    auto e = [](int i) {
        Vector v(4);
        v[i] = 1;
        return v;
    };
    auto par = [](int i) { return i >= 2 ? 1 : 0; };
    std::set<std::array<int, 3>> nonzero;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) {
                Vector v = scaled(bruteBracket(bruteBracket(e(x), e(y)), e(z)), 2);
                addScaled(v, -signPow(par(x) * (par(y) + par(z))), bruteBracket(bruteBracket(e(y), e(z)), e(x)));
                addScaled(v, -signPow(par(z) * (par(x) + par(y))), bruteBracket(bruteBracket(e(z), e(x)), e(y)));
                v = scaled(v, Scalar(1, 3));
                require(bol.ternary()(x, y, z) == v, "triple mismatch against brute force");
                if (!isZero(v)) nonzero.insert({x, y, z});
            }
    require(bol.ternary()(0, 1, 0) == scaled(e(1), -1), "{e1,e2,e1} != -e2");
    require(bol.ternary()(0, 2, 0) == scaled(e(2), -1), "{e1,e3,e1} != -e3");
    require(bol.ternary()(0, 3, 0) == scaled(e(3), -1), "{e1,e4,e1} != -e4");
    const std::set<std::array<int, 3>> expected = {{0, 1, 0}, {1, 0, 0}, {0, 2, 0}, {2, 0, 0}, {0, 3, 0}, {3, 0, 0}};
    require(nonzero == expected, "unexpected nonzero triple products");
}

void ricciDualRoute() {
    const std::vector<AlgebraDef> algebras = {entry("L2_3_1_bol"), entry("L2_2_2_bol"),
                                              malcevToBol(entry("aff2_lie")), entry("abelian_2_2")};
    for (const auto& b : algebras)
        require(killingRicci(b, RicciMethod::Direct) == killingRicci(b, RicciMethod::Restriction),
                "routes differ on " + b.name());
}

// Even invertible candidates: signed diagonal scalings and elementary
// unipotents. Each one is kept only if the morphism equations hold.
std::vector<Matrix> automorphisms(const AlgebraDef& b) {
    const std::size_t d = b.dim();
    const SuperSpace& s = b.space();
    std::vector<Matrix> candidates;
    const std::vector<Scalar> scales = {1, -1, 2, -2, Scalar(1, 2), Scalar(-1, 2)};
    std::vector<std::size_t> digits(d, 0);
    for (;;) {
        Matrix m(d, d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = scales[digits[i]];
        candidates.push_back(m);
        std::size_t k = 0;
        while (k < d && ++digits[k] == scales.size()) digits[k++] = 0;
        if (k == d) break;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j && s.parity(i) == s.parity(j))
                for (const Scalar t : {Scalar(1), Scalar(-1), Scalar(2)}) {
                    Matrix m = Matrix::identity(d);
                    m(i, j) = t;
                    candidates.push_back(m);
                }
    std::vector<Matrix> out;
    for (const auto& m : candidates)
        if (checkMorphism(m, b, b).passed()) out.push_back(m);
    return out;
}

void betaConsistency() {
    for (const auto& b : catalogBol()) {
        const BilinearForm beta = killingRicci(b, RicciMethod::Restriction);
        require(beta.isSupersymmetric(), "beta not supersymmetric on " + b.name());
        require(beta.isConsistent(), "beta(B0,B1) != 0 on " + b.name());
        for (const auto& w : checkInvariant(b, beta).identities.witnesses)
            require(w.axiom != "inv2" && w.axiom != "supersymmetry", "invariance fails on " + b.name());
        const auto autos = automorphisms(b);
        require(!autos.empty() && autos.front() == Matrix::identity(b.dim()), "identity not found as automorphism");
        for (const auto& phi : autos) {
            const Matrix pulled = phi.transposed() * beta.gram() * phi;
            require(pulled == beta.gram(), "an automorphism moves beta on " + b.name());
        }
    }
}

void invarianceEquivalence() {
    for (const auto& b : catalogBol()) {
        const InvariantReport r = checkInvariant(b, killingRicci(b, RicciMethod::Direct));
        require(r.equivalent(), "inva1/inva2/inva3 disagree on " + b.name());
    }
}

void envelopingCorrectness() {
    for (const auto& b : catalogBol()) {
        const PairSpace ips = ipsSpace(b), ps = psSpace(b);
        require(ps.contains(ips), "ips not inside ps on " + b.name());
        for (const PairSpace& h : {ips, ps}) {
            const EnvelopingAlgebra env = enveloping(b, h);
            require(env.lie.dim() == b.dim() + h.dim(), "dimension mismatch on " + b.name());
            require(checkAxioms(env.lie, AxiomKind::Lie).passed(), "envelope not Lie on " + b.name());
        }
    }
}

void innerPairClosure() {
    for (const auto& b : catalogBol()) {
        const PairSpace ips = ipsSpace(b);
        for (const auto& p : ips.basis())
            for (const auto& q : ips.basis()) {
                const PseudoPair br = pairBracket(b, p, q);
                require(ips.contains(br), "bracket leaves ips on " + b.name());
                require(checkPseudo(b, br).passed(), "bracket is not pseudo on " + b.name());
            }
    }
}

void idealEnvelopeCriterion() {
    const AlgebraDef b = entry("L2_3_1_bol");
    const Subspace k = Subspace::span(4, {{1, 0, 0, 0}});
    require(classifySubspace(b, k) == SubspaceClass::Ideal, "span(e1) is not an ideal");
    const IdealEnvelope ie = idealEnvelope(b, k);
    const AlgebraDef& l = ie.standard.lie;
    for (const auto& v : ie.ideal.basis())
        for (std::size_t j = 0; j < l.dim(); ++j)
            require(ie.ideal.contains(evalBinary(l, v, l.space().basis(j))), "[K, L(B)] leaves K");
    require(ie.verified, "library did not verify the ideal envelope");
}

void companions() {
    for (const auto& b : catalogBol()) {
        const SuperSpace& s = b.space();
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) {
                const PseudoPair p = innerPair(b, s.basis(i), s.basis(j));
                require(companionSpace(b, p.op()).contains(b.binary()(i, j)), "x*y not a companion on " + b.name());
            }
    }
}

void supertraceLaws() {
    Gen g(2024);
    const SuperSpace s(3, 2);
    for (int n = 0; n < 100; ++n) {
        const GradedMap f = g.gradedMap(s, g.parity()), k = g.gradedMap(s, g.parity());
        require(supertrace(gradedCommutator(f, k)) == 0, "str([f,g]) != 0");
        const GradedMap h = g.invertibleEven(s);
        const GradedMap hinv(s, Parity::Even, *inverse(h.matrix()));
        require(supertrace(compose(h, compose(f, hinv))) == supertrace(f), "str(h f h^-1) != str(f)");
    }
}

void mutationSensitivity() {
    const AlgebraDef b = entry("L2_3_1_bol");
    require(checkAxioms(b, AxiomKind::Bol).passed(), "unmutated table fails");
    // exactly one stored constant changes; {e3,e1,e3} keeps its value
    TernaryStructure t = b.ternary();
    t.set(0, 2, 2, Vector{2, 0, 0, 0});
    const AlgebraDef mutated("mutated", b.space(), b.binary(), t);
    require(!checkAxioms(mutated, AxiomKind::Bol).witnesses.empty(), "mutation not detected");
}

struct Run {
    int code;
    std::string out;
};

Run runCli(const std::string& args) {
    const std::string cmd = std::string(BOLSUPER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw Failure{"cannot start the CLI"};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cliContract() {
    for (const auto& e : catalogEntries()) {
        const std::string text = serializeAlgebra(e.algebra);
        require(parseAlgebra(text) == e.algebra, "round trip fails for " + e.key);
        require(parseAlgebra(runCli("catalog show " + e.key).out) == e.algebra, "catalog show differs for " + e.key);
    }
    const std::string data = BOLSUPER_TEST_DATA;
    const std::vector<std::string> cmds = {"report " + data + "/L2_3_1.alg", "--format machine envelope L2_2_2_bol --maximal",
                                           "check " + data + "/L2_2_2.alg --kind lie", "killing-ricci L2_3_1_bol --method both"};
    for (const auto& c : cmds) {
        const Run a = runCli(c), b = runCli(c);
        require(a.out == b.out && a.code == b.code, "output differs across runs: " + c);
    }
    require(runCli("check " + data + "/L2_3_1.alg --kind bol").code == 0, "exit 0 not honored");
    require(runCli("check " + data + "/L2_2_2.alg --kind lie").code == 1, "exit 1 not honored");
    require(runCli("check " + data + "/bad_label.alg --kind lie").code == 2, "exit 2 (parse) not honored");
    require(runCli("check " + data + "/L2_2_2.alg --kind").code == 2, "exit 2 (usage) not honored");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"catalog verification", catalogVerification},
        {"derived products of L2(2,2)", derivedProducts},
        {"Killing-Ricci dual-route equality", ricciDualRoute},
        {"beta supersymmetric, consistent, invariant, automorphism-stable", betaConsistency},
        {"inva1/inva2/inva3 equivalence", invarianceEquivalence},
        {"enveloping correctness", envelopingCorrectness},
        {"closure of inner pairs", innerPairClosure},
        {"ideal envelope of span(e1)", idealEnvelopeCriterion},
        {"companions of inner pairs", companions},
        {"supertrace laws", supertraceLaws},
        {"mutation sensitivity", mutationSensitivity},
        {"CLI contract", cliContract},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        try {
            criteria[i].second();
        } catch (const Failure& f) {
            why = f.why;
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << (why.empty() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
        if (!why.empty()) std::cout << " (" << why << ")";
        std::cout << "\n";
        failures += !why.empty();
    }
    return failures;
}
