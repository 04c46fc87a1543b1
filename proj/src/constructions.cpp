#include "bolsuper/constructions.hpp"

#include "bolsuper/error.hpp"

namespace bolsuper {

namespace {

void requireKind(const AlgebraDef& a, AxiomKind kind, const char* what) {
    const auto report = checkAxioms(a, kind);
    if (!report.passed())
        throw Error(ErrorKind::Precondition, std::string(what) + ": '" + a.name() + "' fails the " +
                                                 std::string(to_string(kind)) + " axioms (" +
                                                 std::to_string(report.witnesses.size()) + " witnesses)");
}

void ensureKind(const AlgebraDef& a, AxiomKind kind, const char* what) {
    const auto report = checkAxioms(a, kind);
    if (!report.passed())
        throw Error(ErrorKind::Internal, std::string(what) + ": result fails the " + std::string(to_string(kind)) +
                                             " axioms (" + std::to_string(report.witnesses.size()) + " witnesses)");
}

}  // namespace

AlgebraDef lieToSupertriple(const AlgebraDef& lie) {
    requireKind(lie, AxiomKind::Lie, "lie_to_supertriple");
    const SuperSpace& space = lie.space();
    const std::size_t d = space.dim();
    const auto& c = lie.binary();
    TernaryStructure t(space);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) t.set(i, j, k, evalBinary(lie, c(i, j), space.basis(k)));
    AlgebraDef out(lie.name() + "-lts", space, std::nullopt, std::move(t));
    ensureKind(out, AxiomKind::LieSupertriple, "lie_to_supertriple");
    return out;
}

AlgebraDef malcevToBol(const AlgebraDef& malcev) {
    requireKind(malcev, AxiomKind::Malcev, "malcev_to_bol");
    const SuperSpace& space = malcev.space();
    const std::size_t d = space.dim();
    const auto& c = malcev.binary();
    const Scalar third(1, 3);
    TernaryStructure t(space);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const int x = bit(space.parity(i)), y = bit(space.parity(j)), z = bit(space.parity(k));
                Vector v = scaled(evalBinary(malcev, c(i, j), space.basis(k)), 2);
                addScaled(v, -signPow(x * (y + z)), evalBinary(malcev, c(j, k), space.basis(i)));
                addScaled(v, -signPow(z * (x + y)), evalBinary(malcev, c(k, i), space.basis(j)));
                t.set(i, j, k, scaled(v, third));
            }
    AlgebraDef out(malcev.name() + "-bol", space, malcev.binary(), std::move(t));
    ensureKind(out, AxiomKind::Bol, "malcev_to_bol");
    return out;
}

}  // namespace bolsuper
