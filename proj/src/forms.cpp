#include "bolsuper/forms.hpp"

#include <algorithm>

#include "bolsuper/error.hpp"

namespace bolsuper {

BilinearForm::BilinearForm(SuperSpace space, Matrix gram) : space_(std::move(space)), gram_(std::move(gram)) {
    if (gram_.rows() != space_.dim() || gram_.cols() != space_.dim())
        throw Error(ErrorKind::Mismatch, "gram matrix size does not match space");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (sgn(y[j]) != 0) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
}

bool BilinearForm::isSupersymmetric() const {
    for (std::size_t i = 0; i < space_.dim(); ++i)
        for (std::size_t j = 0; j < space_.dim(); ++j)
            if (gram_(i, j) != signPow(bit(space_.parity(i)) * bit(space_.parity(j))) * gram_(j, i)) return false;
    return true;
}

bool BilinearForm::isConsistent() const {
    for (std::size_t i = 0; i < space_.dim(); ++i)
        for (std::size_t j = 0; j < space_.dim(); ++j)
            if (space_.parity(i) != space_.parity(j) && sgn(gram_(i, j)) != 0) return false;
    return true;
}

namespace {

std::vector<Matrix> adjointMatrices(const AlgebraDef& lie) {
    const std::size_t d = lie.dim();
    const auto& c = lie.binary();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix m(d, d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t r = 0; r < d; ++r) m(r, k) = c(i, k)[r];
        ad.push_back(std::move(m));
    }
    return ad;
}

// Killing form entries for indices < limit.
Matrix killingBlock(const AlgebraDef& lie, std::size_t limit) {
    const auto ad = adjointMatrices(lie);
    Matrix g(limit, limit);
    for (std::size_t i = 0; i < limit; ++i)
        for (std::size_t j = 0; j < limit; ++j) g(i, j) = supertraceOfProduct(lie.space(), ad[i], ad[j]);
    return g;
}

void requireBol(const AlgebraDef& b) {
    if (!checkAxioms(b, AxiomKind::Bol).passed())
        throw Error(ErrorKind::Precondition, "'" + b.name() + "' fails the Bol axioms");
}

}  // namespace

BilinearForm killingFormUnchecked(const AlgebraDef& lie) {
    return BilinearForm(lie.space(), killingBlock(lie, lie.dim()));
}

BilinearForm killingForm(const AlgebraDef& lie) {
    if (!checkAxioms(lie, AxiomKind::Lie).passed())
        throw Error(ErrorKind::Precondition, "'" + lie.name() + "' fails the Lie axioms");
    return killingFormUnchecked(lie);
}

GradedMap rightMap(const AlgebraDef& b, const Vector& x, const Vector& y) {
    const SuperSpace& space = b.space();
    const auto px = space.parityOf(x), py = space.parityOf(y);
    if (!px || !py) throw Error(ErrorKind::Precondition, "right map needs homogeneous arguments");
    const int xy = bit(*px) + bit(*py);
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < space.dim(); ++k)
        cols.push_back(scaled(evalTernary(b, space.basis(k), x, y), signPow(bit(space.parity(k)) * xy)));
    return GradedMap(space, *px + *py, Matrix::fromColumns(cols, space.dim()));
}

BilinearForm killingRicci(const AlgebraDef& b, RicciMethod method) {
    requireBol(b);
    const SuperSpace& space = b.space();
    const std::size_t d = space.dim();
    if (method == RicciMethod::Restriction) {
        const auto env = enveloping(b, ipsSpace(b));
        return BilinearForm(space, killingBlock(env.lie, d));
    }
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector ei = space.basis(i), ej = space.basis(j);
            const int sign = signPow(bit(space.parity(i)) * bit(space.parity(j)));
            g(i, j) = supertrace(rightMap(b, ei, ej)) + sign * supertrace(rightMap(b, ej, ei));
        }
    return BilinearForm(space, std::move(g));
}

InvariantReport checkInvariant(const AlgebraDef& b, const BilinearForm& form) {
    const SuperSpace& space = b.space();
    if (!(form.space() == space)) throw Error(ErrorKind::Mismatch, "form lives on a different space");
    const std::size_t d = space.dim();
    std::vector<Vector> e;
    std::vector<int> p;
    for (std::size_t i = 0; i < d; ++i) {
        e.push_back(space.basis(i));
        p.push_back(bit(space.parity(i)));
    }
    InvariantReport out;
    auto record = [&](const char* axiom, std::vector<std::size_t> idx, const Scalar& defect) {
        if (sgn(defect) != 0) out.identities.witnesses.push_back({axiom, std::move(idx), Vector{defect}});
    };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            record("supersymmetry", {i, j}, form.gram()(i, j) - signPow(p[i] * p[j]) * form.gram()(j, i));

    // b(xy,z) = -(-1)^{xy} b(y,xz)
    if (b.hasBinary())
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (std::size_t z = 0; z < d; ++z)
                    record("inv1", {x, y, z},
                           form(evalBinary(b, e[x], e[y]), e[z]) +
                               signPow(p[x] * p[y]) * form(e[y], evalBinary(b, e[x], e[z])));

    out.inva1 = out.inva2 = out.inva3 = true;
    if (b.hasTernary())
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (std::size_t z = 0; z < d; ++z)
                    for (std::size_t u = 0; u < d; ++u) {
                        const Scalar lhs = form(evalTernary(b, e[x], e[y], e[z]), e[u]);
                        // b([x,y,z],u) = -(-1)^{z(x+y)} b(z,[x,y,u])
                        const Scalar d1 = lhs + signPow(p[z] * (p[x] + p[y])) * form(e[z], evalTernary(b, e[x], e[y], e[u]));
                        // b([x,y,z],u) = -(-1)^{y(z+u)} b(x,[z,u,y])
                        const Scalar d2 = lhs + signPow(p[y] * (p[z] + p[u])) * form(e[x], evalTernary(b, e[z], e[u], e[y]));
                        // b(x,[y,z,u]) = (-1)^{xy+zu} b(y,[x,u,z])
                        const Scalar d3 = form(e[x], evalTernary(b, e[y], e[z], e[u])) -
                                          signPow(p[x] * p[y] + p[z] * p[u]) * form(e[y], evalTernary(b, e[x], e[u], e[z]));
                        record("inv2", {x, y, z, u}, d2);
                        out.inva1 = out.inva1 && sgn(d1) == 0;
                        out.inva2 = out.inva2 && sgn(d2) == 0;
                        out.inva3 = out.inva3 && sgn(d3) == 0;
                    }
    return out;
}

Subspace orthogonal(const BilinearForm& form, const Subspace& v) {
    const std::size_t d = form.space().dim();
    if (v.ambientDim() != d) throw Error(ErrorKind::Mismatch, "subspace lives in a different space");
    if (v.dim() == 0) return Subspace::whole(d);
    std::vector<Vector> rows;
    for (const auto& y : v.basis()) rows.push_back(form.gram() * y);
    return nullspace(Matrix::fromRows(rows, d));
}

Subspace radical(const BilinearForm& form) { return orthogonal(form, Subspace::whole(form.space().dim())); }

bool isNondegenerate(const BilinearForm& form) { return radical(form).dim() == 0; }

SemisimplicityReport semisimplicityReport(const AlgebraDef& b, const std::vector<Subspace>& extraIdeals) {
    requireBol(b);
    const SuperSpace& space = b.space();
    const std::size_t d = space.dim();
    const auto env = enveloping(b, ipsSpace(b));
    const std::size_t total = env.lie.dim();

    BilinearForm alpha = killingFormUnchecked(env.lie);
    Matrix betaGram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) betaGram(i, j) = alpha.gram()(i, j);
    BilinearForm beta(space, std::move(betaGram));

    SemisimplicityReport r{.baseDim = d, .envelopeDim = total, .beta = beta, .alpha = alpha};

    r.crossBlockVanishes = true;
    for (std::size_t k = d; k < total; ++k)
        for (std::size_t j = 0; j < d; ++j)
            if (sgn(alpha.gram()(k, j)) != 0 || sgn(alpha.gram()(j, k)) != 0) r.crossBlockVanishes = false;

    r.betaNondegenerate = isNondegenerate(beta);
    r.alphaNondegenerate = isNondegenerate(alpha);

    r.innerIdentityHolds = true;
    const auto& bracket = env.lie.binary();
    for (std::size_t x = 0; x < d && r.innerIdentityHolds; ++x)
        for (std::size_t y = 0; y < d && r.innerIdentityHolds; ++y)
            for (std::size_t u = 0; u < d && r.innerIdentityHolds; ++u)
                for (std::size_t v = 0; v < d && r.innerIdentityHolds; ++v) {
                    const int px = bit(space.parity(x)), py = bit(space.parity(y));
                    const int pu = bit(space.parity(u)), pv = bit(space.parity(v));
                    const Scalar lhs = alpha(bracket(x, y), bracket(u, v));
                    const Scalar rhs = signPow(px * (pu + pv + py)) *
                                       beta(space.basis(y), evalTernary(b, space.basis(u), space.basis(v), space.basis(x)));
                    r.innerIdentityHolds = lhs == rhs;
                }

    const auto inv = checkInvariant(b, beta);
    r.betaInv1 = std::none_of(inv.identities.witnesses.begin(), inv.identities.witnesses.end(),
                              [](const Witness& w) { return w.axiom == "inv1"; });

    r.center = center(b);
    std::vector<Vector> spanning;
    for (std::size_t i = 0; i < d; ++i) spanning.push_back(space.basis(i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) spanning.push_back(b.ternary()(i, j, k));
    r.perpOfSpan = orthogonal(beta, Subspace::span(d, spanning));
    if (r.betaNondegenerate) r.perpEqualsCenter = r.perpOfSpan == r.center;

    std::vector<std::pair<std::string, Subspace>> ideals = {
        {"zero", Subspace::zero(d)}, {"whole", Subspace::whole(d)}, {"center", r.center}, {"radical", radical(beta)}};
    for (std::size_t i = 0; i < extraIdeals.size(); ++i) ideals.push_back({"extra" + std::to_string(i + 1), extraIdeals[i]});
    for (auto& [name, ideal] : ideals) {
        if (classifySubspace(b, ideal) != SubspaceClass::Ideal)
            throw Error(ErrorKind::Precondition, "supplied subspace '" + name + "' is not an ideal");
        Subspace perp = orthogonal(beta, ideal);
        const SubspaceClass cls = classifySubspace(b, perp);
        r.ideals.push_back({name, std::move(ideal), std::move(perp), cls});
    }
    return r;
}

}  // namespace bolsuper
