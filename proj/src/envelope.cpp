#include "bolsuper/envelope.hpp"

#include <set>

#include "bolsuper/error.hpp"

namespace bolsuper {

PseudoPair::PseudoPair(GradedMap op, Vector companion) : op_(std::move(op)), companion_(std::move(companion)) {
    const SuperSpace& space = op_.space();
    if (companion_.size() != space.dim()) throw Error(ErrorKind::Mismatch, "companion has the wrong length");
    for (std::size_t i = 0; i < companion_.size(); ++i)
        if (sgn(companion_[i]) != 0 && space.parity(i) != op_.degree())
            throw Error(ErrorKind::Precondition, "companion parity differs from the operator degree");
}

Vector flatten(const PseudoPair& p) {
    const std::size_t d = p.op().space().dim();
    Vector out(d * d + d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i * d + j] = p.op().matrix()(i, j);
    for (std::size_t i = 0; i < d; ++i) out[d * d + i] = p.companion()[i];
    return out;
}

Parity flatParity(const SuperSpace& space, std::size_t c) {
    const std::size_t d = space.dim();
    if (c >= d * d) return space.parity(c - d * d);
    return space.parity(c / d) + space.parity(c % d);
}

PseudoPair unflatten(const SuperSpace& space, const Vector& flat) {
    const std::size_t d = space.dim();
    if (flat.size() != d * d + d) throw Error(ErrorKind::Mismatch, "flattened pair has the wrong length");
    std::optional<Parity> degree;
    for (std::size_t c = 0; c < flat.size(); ++c) {
        if (sgn(flat[c]) == 0) continue;
        const Parity p = flatParity(space, c);
        if (degree && *degree != p) throw Error(ErrorKind::Precondition, "flattened pair is not homogeneous");
        degree = p;
    }
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = flat[i * d + j];
    Vector a(flat.begin() + static_cast<std::ptrdiff_t>(d * d), flat.end());
    return PseudoPair(GradedMap(space, degree.value_or(Parity::Even), std::move(m)), std::move(a));
}

PseudoPair innerPair(const AlgebraDef& b, const Vector& x, const Vector& y) {
    const SuperSpace& space = b.space();
    const auto px = space.parityOf(x), py = space.parityOf(y);
    if (!px || !py) throw Error(ErrorKind::Precondition, "inner pair needs homogeneous arguments");
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < space.dim(); ++k) cols.push_back(evalTernary(b, x, y, space.basis(k)));
    return PseudoPair(GradedMap(space, *px + *py, Matrix::fromColumns(cols, space.dim())), evalBinary(b, x, y));
}

namespace {

// Defects of pseudo1 on every basis triple and pseudo2 on every basis pair,
// in lexicographic order. Linear in (P, a).
struct PseudoDefects {
    std::vector<std::pair<std::vector<std::size_t>, Vector>> pseudo1;
    std::vector<std::pair<std::vector<std::size_t>, Vector>> pseudo2;
};

PseudoDefects pseudoDefects(const AlgebraDef& b, const Matrix& op, const Vector& a, Parity degree) {
    const SuperSpace& space = b.space();
    const std::size_t d = space.dim();
    const int r = bit(degree);
    std::vector<Vector> e, pe;
    std::vector<int> p;
    for (std::size_t i = 0; i < d; ++i) {
        e.push_back(space.basis(i));
        pe.push_back(op.column(i));
        p.push_back(bit(space.parity(i)));
    }
    PseudoDefects out;
    if (b.hasTernary()) {
        const auto& t = b.ternary();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    Vector acc = op * t(i, j, k);
                    addScaled(acc, -1, evalTernary(b, pe[i], e[j], e[k]));
                    addScaled(acc, -signPow(r * p[i]), evalTernary(b, e[i], pe[j], e[k]));
                    addScaled(acc, -signPow(r * (p[i] + p[j])), evalTernary(b, e[i], e[j], pe[k]));
                    out.pseudo1.push_back({{i, j, k}, std::move(acc)});
                }
    }
    if (b.hasBinary()) {
        const auto& c = b.binary();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector acc = op * c(i, j);
                addScaled(acc, -signPow(r * p[i]), evalBinary(b, e[i], pe[j]));
                addScaled(acc, -1, evalBinary(b, pe[i], e[j]));
                if (b.hasTernary()) addScaled(acc, -signPow(r * (p[i] + p[j])), evalTernary(b, e[i], e[j], a));
                addScaled(acc, -1, evalBinary(b, a, c(i, j)));
                out.pseudo2.push_back({{i, j}, std::move(acc)});
            }
    }
    return out;
}

Vector concat(const PseudoDefects& defects) {
    Vector out;
    for (const auto* group : {&defects.pseudo1, &defects.pseudo2})
        for (const auto& [idx, v] : *group) out.insert(out.end(), v.begin(), v.end());
    return out;
}

}  // namespace

CheckReport checkPseudo(const AlgebraDef& b, const PseudoPair& pair) {
    if (!(pair.op().space() == b.space())) throw Error(ErrorKind::Mismatch, "pair acts on a different space");
    auto defects = pseudoDefects(b, pair.op().matrix(), pair.companion(), pair.degree());
    CheckReport report;
    for (auto& [idx, v] : defects.pseudo1)
        if (!isZero(v)) report.witnesses.push_back({"pseudo1", idx, v});
    for (auto& [idx, v] : defects.pseudo2)
        if (!isZero(v)) report.witnesses.push_back({"pseudo2", idx, v});
    return report;
}

AffineSubspace companionSpace(const AlgebraDef& b, const GradedMap& op) {
    const SuperSpace& space = b.space();
    const std::size_t d = space.dim();
    const Parity r = op.degree();
    const Vector zero(d);
    std::vector<std::size_t> unknowns;
    for (std::size_t k = 0; k < d; ++k)
        if (space.parity(k) == r) unknowns.push_back(k);

    const auto base = pseudoDefects(b, op.matrix(), zero, r);
    for (const auto& [idx, v] : base.pseudo1)
        if (!isZero(v)) return AffineSubspace{std::nullopt, Subspace::zero(d)};

    // pseudo2 defect(P, a) = defect(P, 0) + defect(0, a); solve defect(0, a) = -defect(P, 0).
    Vector rhs;
    for (const auto& [idx, v] : base.pseudo2)
        for (const auto& x : v) rhs.push_back(-x);
    const Matrix noOp(d, d);
    std::vector<Vector> cols;
    for (std::size_t k : unknowns) {
        Vector flat;
        for (const auto& [idx, v] : pseudoDefects(b, noOp, space.basis(k), r).pseudo2)
            flat.insert(flat.end(), v.begin(), v.end());
        cols.push_back(std::move(flat));
    }

    AffineSubspace local = solveAffine(Matrix::fromColumns(cols, rhs.size()), rhs);
    auto embed = [&](const Vector& v) {
        Vector full(d);
        for (std::size_t u = 0; u < unknowns.size(); ++u) full[unknowns[u]] = v[u];
        return full;
    };
    std::vector<Vector> dirs;
    for (const auto& v : local.directions.basis()) dirs.push_back(embed(v));
    AffineSubspace out{std::nullopt, Subspace::span(d, dirs)};
    if (local.particular) out.particular = embed(*local.particular);
    return out;
}

PseudoPair pairBracket(const AlgebraDef& b, const PseudoPair& p, const PseudoPair& q) {
    const int rs = bit(p.degree()) * bit(q.degree());
    Vector comp = p.op()(q.companion());
    addScaled(comp, -signPow(rs), q.op()(p.companion()));
    addScaled(comp, -1, evalBinary(b, p.companion(), q.companion()));
    return PseudoPair(gradedCommutator(p.op(), q.op()), std::move(comp));
}

// --- pair spaces ---------------------------------------------------------

PairSpace::PairSpace(AlgebraDef base, Subspace flat) : base_(std::move(base)), flat_(std::move(flat)) {
    for (const auto& v : flat_.basis()) basis_.push_back(unflatten(base_.space(), v));
    closed_ = true;
    for (const auto& p : basis_)
        for (const auto& q : basis_)
            if (closed_ && !contains(pairBracket(base_, p, q))) closed_ = false;
}

PairSpace PairSpace::span(const AlgebraDef& base, const std::vector<PseudoPair>& generators) {
    const std::size_t d = base.dim();
    std::vector<Vector> flat;
    for (const auto& g : generators) {
        if (!(g.op().space() == base.space())) throw Error(ErrorKind::Mismatch, "pair acts on a different space");
        flat.push_back(flatten(g));
    }
    // Homogeneous generators have disjoint even/odd flat supports, so the
    // reduced echelon basis of their span is made of homogeneous rows.
    return PairSpace(base, Subspace::span(d * d + d, flat));
}

PairSpace ipsSpace(const AlgebraDef& b, const std::optional<Subspace>& k) {
    const SuperSpace& space = b.space();
    std::vector<Vector> second;
    if (k) {
        if (k->ambientDim() != space.dim()) throw Error(ErrorKind::Mismatch, "subspace lives in a different space");
        if (!isGraded(space, *k)) throw Error(ErrorKind::Precondition, "subspace is not graded");
        second = homogeneousBasis(space, *k);
    } else {
        for (std::size_t j = 0; j < space.dim(); ++j) second.push_back(space.basis(j));
    }
    std::vector<PseudoPair> gens;
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (const auto& y : second) gens.push_back(innerPair(b, space.basis(i), y));
    PairSpace out = PairSpace::span(b, gens);
    if (!k && !out.closed()) throw Error(ErrorKind::Internal, "inner pseudo superderivations are not closed");
    return out;
}

PairSpace psSpace(const AlgebraDef& b) {
    const SuperSpace& space = b.space();
    const std::size_t d = space.dim();
    std::vector<PseudoPair> solutions;
    for (Parity r : {Parity::Even, Parity::Odd}) {
        // unknowns: operator entries of degree r, then companion coordinates of parity r
        std::vector<std::pair<std::size_t, std::size_t>> entries;
        std::vector<std::size_t> comps;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (space.parity(i) == space.parity(j) + r) entries.push_back({i, j});
        for (std::size_t k = 0; k < d; ++k)
            if (space.parity(k) == r) comps.push_back(k);

        std::vector<Vector> cols;
        const Vector zero(d);
        for (const auto& [i, j] : entries) {
            Matrix m(d, d);
            m(i, j) = 1;
            cols.push_back(concat(pseudoDefects(b, m, zero, r)));
        }
        for (std::size_t k : comps) cols.push_back(concat(pseudoDefects(b, Matrix(d, d), space.basis(k), r)));
        if (cols.empty()) continue;

        const Subspace kernel = nullspace(Matrix::fromColumns(cols, cols.front().size()));
        for (const auto& v : kernel.basis()) {
            Matrix m(d, d);
            Vector a(d);
            for (std::size_t u = 0; u < entries.size(); ++u) m(entries[u].first, entries[u].second) = v[u];
            for (std::size_t u = 0; u < comps.size(); ++u) a[comps[u]] = v[entries.size() + u];
            solutions.emplace_back(GradedMap(space, r, std::move(m)), std::move(a));
        }
    }
    PairSpace out = PairSpace::span(b, solutions);
    if (!out.closed()) throw Error(ErrorKind::Internal, "pseudo superderivation pairs are not closed");
    return out;
}

// --- enveloping algebras -------------------------------------------------

Vector EnvelopingAlgebra::embedBase(const Vector& x) const {
    Vector out(lie.dim());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    return out;
}

Vector EnvelopingAlgebra::embedPair(const PseudoPair& p) const {
    auto coords = pairs.coordinates(p);
    if (!coords) throw Error(ErrorKind::Internal, "pair is not in the chosen pair space");
    Vector out(lie.dim());
    for (std::size_t k = 0; k < coords->size(); ++k) out[pairIndex(k)] = (*coords)[k];
    return out;
}

EnvelopingAlgebra enveloping(const AlgebraDef& b, const PairSpace& h) {
    if (!(h.base() == b)) throw Error(ErrorKind::Mismatch, "pair space was built over a different algebra");
    if (!h.closed()) throw Error(ErrorKind::Precondition, "pair space is not closed under the pair bracket");
    const SuperSpace& space = b.space();
    const std::size_t d = space.dim(), n = h.dim();

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!h.contains(innerPair(b, space.basis(i), space.basis(j))))
                throw Error(ErrorKind::Precondition, "pair space does not contain the inner pair (" +
                                                         space.label(i) + "," + space.label(j) + ")");

    std::vector<std::string> labels = space.labels();
    std::vector<Parity> parities = space.parities();
    std::set<std::string> taken(labels.begin(), labels.end());
    for (std::size_t k = 0; k < n; ++k) {
        std::string label = "h" + std::to_string(k + 1);
        while (taken.count(label)) label = "_" + label;
        taken.insert(label);
        labels.push_back(label);
        parities.push_back(h.basis()[k].degree());
    }
    const SuperSpace combined = SuperSpace::withParities(std::move(labels), std::move(parities));

    auto pairCoords = [&](const PseudoPair& p) {
        auto coords = h.coordinates(p);
        if (!coords) throw Error(ErrorKind::Internal, "bracket image is not expressible in the pair space");
        Vector out(d + n);
        for (std::size_t k = 0; k < n; ++k) out[d + k] = (*coords)[k];
        return out;
    };

    BinaryStructure bracket(combined);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) bracket.set(i, j, pairCoords(innerPair(b, space.basis(i), space.basis(j))));
    for (std::size_t k = 0; k < n; ++k) {
        const PseudoPair& p = h.basis()[k];
        for (std::size_t j = 0; j < d; ++j) {
            Vector image = p.op()(space.basis(j));
            image.resize(d + n);
            // [(P,a), x] = P(x) and [x, (P,a)] = -(-1)^{a x} P(x)
            bracket.set(d + k, j, image);
            bracket.set(j, d + k, scaled(image, -signPow(bit(p.degree()) * bit(space.parity(j)))));
        }
        for (std::size_t l = 0; l < n; ++l) bracket.set(d + k, d + l, pairCoords(pairBracket(b, p, h.basis()[l])));
    }

    EnvelopingAlgebra out{b, h, AlgebraDef("L(" + b.name() + ")", combined, std::move(bracket), std::nullopt)};
    const auto report = checkAxioms(out.lie, AxiomKind::Lie);
    if (!report.passed())
        throw Error(ErrorKind::Internal, "enveloping algebra fails the Lie axioms (" +
                                             std::to_string(report.witnesses.size()) + " witnesses)");
    return out;
}

IdealEnvelope idealEnvelope(const AlgebraDef& b, const Subspace& k) {
    if (classifySubspace(b, k) != SubspaceClass::Ideal) throw Error(ErrorKind::Precondition, "subspace is not an ideal");
    IdealEnvelope out{enveloping(b, ipsSpace(b)), Subspace(), false};
    const EnvelopingAlgebra& env = out.standard;

    std::vector<Vector> gens;
    for (const auto& v : k.basis()) gens.push_back(env.embedBase(v));
    const PairSpace inner = ipsSpace(b, k);
    for (const auto& p : inner.basis()) gens.push_back(env.embedPair(p));
    out.ideal = Subspace::span(env.lie.dim(), gens);

    out.verified = true;
    for (const auto& v : out.ideal.basis())
        for (std::size_t j = 0; j < env.lie.dim() && out.verified; ++j)
            out.verified = out.ideal.contains(evalBinary(env.lie, v, env.lie.space().basis(j)));
    return out;
}

}  // namespace bolsuper
