#include "bolsuper/structures.hpp"

#include "bolsuper/error.hpp"

namespace bolsuper {

namespace {

void requireSupport(const SuperSpace& space, const Vector& v, Parity expected, const std::string& what) {
    if (v.size() != space.dim()) throw Error(ErrorKind::Mismatch, what + ": wrong vector length");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0 && space.parity(i) != expected)
            throw Error(ErrorKind::Precondition,
                        what + ": value has a component on " + space.label(i) + " of the wrong parity");
}

}  // namespace

// --- tables --------------------------------------------------------------

BinaryStructure::BinaryStructure(SuperSpace space)
    : space_(std::move(space)), table_(space_.dim() * space_.dim(), Vector(space_.dim())) {}

void BinaryStructure::set(std::size_t i, std::size_t j, Vector value) {
    requireSupport(space_, value, space_.parity(i) + space_.parity(j),
                   "product [" + space_.label(i) + "," + space_.label(j) + "]");
    table_[i * space_.dim() + j] = std::move(value);
}

bool BinaryStructure::isZero() const {
    for (const auto& v : table_)
        if (!bolsuper::isZero(v)) return false;
    return true;
}

TernaryStructure::TernaryStructure(SuperSpace space)
    : space_(std::move(space)),
      table_(space_.dim() * space_.dim() * space_.dim(), Vector(space_.dim())) {}

void TernaryStructure::set(std::size_t i, std::size_t j, std::size_t k, Vector value) {
    requireSupport(space_, value, space_.parity(i) + space_.parity(j) + space_.parity(k),
                   "product [" + space_.label(i) + "," + space_.label(j) + "," + space_.label(k) + "]");
    const std::size_t d = space_.dim();
    table_[(i * d + j) * d + k] = std::move(value);
}

bool TernaryStructure::isZero() const {
    for (const auto& v : table_)
        if (!bolsuper::isZero(v)) return false;
    return true;
}

AlgebraDef::AlgebraDef(std::string name, SuperSpace space, std::optional<BinaryStructure> binary,
                       std::optional<TernaryStructure> ternary)
    : name_(std::move(name)), space_(std::move(space)), binary_(std::move(binary)), ternary_(std::move(ternary)) {
    if (binary_ && !(binary_->space() == space_))
        throw Error(ErrorKind::Mismatch, "binary structure lives on a different space");
    if (ternary_ && !(ternary_->space() == space_))
        throw Error(ErrorKind::Mismatch, "ternary structure lives on a different space");
}

const BinaryStructure& AlgebraDef::binary() const {
    if (!binary_) throw Error(ErrorKind::Mismatch, "algebra '" + name_ + "' has no binary product");
    return *binary_;
}

const TernaryStructure& AlgebraDef::ternary() const {
    if (!ternary_) throw Error(ErrorKind::Mismatch, "algebra '" + name_ + "' has no ternary product");
    return *ternary_;
}

AlgebraDef AlgebraDef::renamed(std::string name) const {
    AlgebraDef copy(*this);
    copy.name_ = std::move(name);
    return copy;
}

Vector evalBinary(const AlgebraDef& a, const Vector& x, const Vector& y) {
    const auto& c = a.binary();
    const std::size_t d = a.dim();
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (sgn(y[j]) != 0) addScaled(out, x[i] * y[j], c(i, j));
    }
    return out;
}

Vector evalTernary(const AlgebraDef& a, const Vector& x, const Vector& y, const Vector& z) {
    const auto& t = a.ternary();
    const std::size_t d = a.dim();
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < d; ++k)
                if (sgn(z[k]) != 0) addScaled(out, xy * z[k], t(i, j, k));
        }
    }
    return out;
}

// --- kinds ---------------------------------------------------------------

std::string_view to_string(AxiomKind kind) {
    switch (kind) {
        case AxiomKind::Lie: return "lie";
        case AxiomKind::Malcev: return "malcev";
        case AxiomKind::Supertriple: return "supertriple";
        case AxiomKind::LieSupertriple: return "lts";
        case AxiomKind::Bol: return "bol";
    }
    return "?";
}

std::optional<AxiomKind> parseAxiomKind(std::string_view text) {
    if (text == "lie") return AxiomKind::Lie;
    if (text == "malcev") return AxiomKind::Malcev;
    if (text == "supertriple") return AxiomKind::Supertriple;
    if (text == "lts" || text == "lie_supertriple") return AxiomKind::LieSupertriple;
    if (text == "bol") return AxiomKind::Bol;
    return std::nullopt;
}

// --- axiom checking ------------------------------------------------------

namespace {

class Checker {
public:
    explicit Checker(const AlgebraDef& a) : a_(a), d_(a.dim()) {
        for (std::size_t i = 0; i < d_; ++i) {
            e_.push_back(a.space().basis(i));
            p_.push_back(bit(a.space().parity(i)));
        }
    }

    Vector mul(const Vector& x, const Vector& y) const { return evalBinary(a_, x, y); }
    Vector tri(const Vector& x, const Vector& y, const Vector& z) const { return evalTernary(a_, x, y, z); }

    void record(const char* axiom, std::vector<std::size_t> idx, Vector defect) {
        if (!isZero(defect)) report.witnesses.push_back({axiom, std::move(idx), std::move(defect)});
    }

    // x*y + (-1)^{xy} y*x
    void superSkew(const char* axiom) {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j) {
                Vector acc = mul(e_[i], e_[j]);
                addScaled(acc, signPow(p_[i] * p_[j]), mul(e_[j], e_[i]));
                record(axiom, {i, j}, std::move(acc));
            }
    }

    // [[x,y],z] + (-1)^{x(y+z)}[[y,z],x] + (-1)^{z(x+y)}[[z,x],y]
    void superJacobi() {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t k = 0; k < d_; ++k) {
                    const int x = p_[i], y = p_[j], z = p_[k];
                    Vector acc = mul(mul(e_[i], e_[j]), e_[k]);
                    addScaled(acc, signPow(x * (y + z)), mul(mul(e_[j], e_[k]), e_[i]));
                    addScaled(acc, signPow(z * (x + y)), mul(mul(e_[k], e_[i]), e_[j]));
                    record("super_jacobi", {i, j, k}, std::move(acc));
                }
    }

    // [[[x,y],z],t] - [x,[[y,z],t]] - (-1)^{y(z+t)}[[x,[z,t]],y]
    //   - (-1)^{t(y+z)}[[[x,t],y],z] - (-1)^{yz}[[x,z],[y,t]]
    void superMalcev() {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t k = 0; k < d_; ++k)
                    for (std::size_t l = 0; l < d_; ++l) {
                        const int y = p_[j], z = p_[k], t = p_[l];
                        const Vector &ex = e_[i], &ey = e_[j], &ez = e_[k], &et = e_[l];
                        Vector acc = mul(mul(mul(ex, ey), ez), et);
                        addScaled(acc, -1, mul(ex, mul(mul(ey, ez), et)));
                        addScaled(acc, -signPow(y * (z + t)), mul(mul(ex, mul(ez, et)), ey));
                        addScaled(acc, -signPow(t * (y + z)), mul(mul(mul(ex, et), ey), ez));
                        addScaled(acc, -signPow(y * z), mul(mul(ex, ez), mul(ey, et)));
                        record("super_malcev", {i, j, k, l}, std::move(acc));
                    }
    }

    // [x,y,z] + (-1)^{xy}[y,x,z]
    void leftSkew(const char* axiom) {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t k = 0; k < d_; ++k) {
                    Vector acc = tri(e_[i], e_[j], e_[k]);
                    addScaled(acc, signPow(p_[i] * p_[j]), tri(e_[j], e_[i], e_[k]));
                    record(axiom, {i, j, k}, std::move(acc));
                }
    }

    // [x,y,z] + (-1)^{x(y+z)}[y,z,x] + (-1)^{z(x+y)}[z,x,y]
    void ternaryJacobi(const char* axiom) {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t k = 0; k < d_; ++k) {
                    const int x = p_[i], y = p_[j], z = p_[k];
                    Vector acc = tri(e_[i], e_[j], e_[k]);
                    addScaled(acc, signPow(x * (y + z)), tri(e_[j], e_[k], e_[i]));
                    addScaled(acc, signPow(z * (x + y)), tri(e_[k], e_[i], e_[j]));
                    record(axiom, {i, j, k}, std::move(acc));
                }
    }

    // [x,y,[u,v,w]] - [[x,y,u],v,w] - (-1)^{u(x+y)}[u,[x,y,v],w]
    //   - (-1)^{(x+y)(u+v)}[u,v,[x,y,w]]
    void nambu(const char* axiom) {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t k = 0; k < d_; ++k)
                    for (std::size_t l = 0; l < d_; ++l)
                        for (std::size_t m = 0; m < d_; ++m) {
                            const int xy = p_[i] + p_[j], u = p_[k], v = p_[l];
                            const Vector &ex = e_[i], &ey = e_[j], &eu = e_[k], &ev = e_[l], &ew = e_[m];
                            Vector acc = tri(ex, ey, tri(eu, ev, ew));
                            addScaled(acc, -1, tri(tri(ex, ey, eu), ev, ew));
                            addScaled(acc, -signPow(u * xy), tri(eu, tri(ex, ey, ev), ew));
                            addScaled(acc, -signPow(xy * (u + v)), tri(eu, ev, tri(ex, ey, ew)));
                            record(axiom, {i, j, k, l, m}, std::move(acc));
                        }
    }

    // [x,y,u*v] - (-1)^{u(x+y)} u*[x,y,v] - [x,y,u]*v
    //   - (-1)^{(x+y)(u+v)}[u,v,x*y] - (x*y)*(u*v)
    void bs5() {
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j)
                for (std::size_t k = 0; k < d_; ++k)
                    for (std::size_t l = 0; l < d_; ++l) {
                        const int xy = p_[i] + p_[j], u = p_[k], v = p_[l];
                        const Vector &ex = e_[i], &ey = e_[j], &eu = e_[k], &ev = e_[l];
                        const Vector exy = mul(ex, ey);
                        Vector acc = tri(ex, ey, mul(eu, ev));
                        addScaled(acc, -signPow(u * xy), mul(eu, tri(ex, ey, ev)));
                        addScaled(acc, -1, mul(tri(ex, ey, eu), ev));
                        addScaled(acc, -signPow(xy * (u + v)), tri(eu, ev, exy));
                        addScaled(acc, -1, mul(exy, mul(eu, ev)));
                        record("BS5", {i, j, k, l}, std::move(acc));
                    }
    }

    CheckReport report;

private:
    const AlgebraDef& a_;
    std::size_t d_;
    std::vector<Vector> e_;
    std::vector<int> p_;
};

}  // namespace

CheckReport checkAxioms(const AlgebraDef& a, AxiomKind kind) {
    const bool needsBinary = kind == AxiomKind::Lie || kind == AxiomKind::Malcev || kind == AxiomKind::Bol;
    const bool needsTernary = kind == AxiomKind::Supertriple || kind == AxiomKind::LieSupertriple ||
                              kind == AxiomKind::Bol;
    if (needsBinary && !a.hasBinary())
        throw Error(ErrorKind::Mismatch,
                    "kind " + std::string(to_string(kind)) + " needs a binary product; '" + a.name() + "' has none");
    if (needsTernary && !a.hasTernary())
        throw Error(ErrorKind::Mismatch,
                    "kind " + std::string(to_string(kind)) + " needs a ternary product; '" + a.name() + "' has none");

    Checker c(a);
    switch (kind) {
        case AxiomKind::Lie:
            c.superSkew("super_skew");
            c.superJacobi();
            break;
        case AxiomKind::Malcev:
            c.superSkew("super_skew");
            c.superMalcev();
            break;
        case AxiomKind::Supertriple:
            c.leftSkew("left_skew");
            c.ternaryJacobi("ternary_jacobi");
            break;
        case AxiomKind::LieSupertriple:
            c.leftSkew("left_skew");
            c.ternaryJacobi("ternary_jacobi");
            c.nambu("nambu");
            break;
        case AxiomKind::Bol:
            c.superSkew("BS1");
            c.leftSkew("BS2");
            c.ternaryJacobi("BS3");
            c.nambu("BS4");
            c.bs5();
            break;
    }
    return std::move(c.report);
}

// --- sub-objects ---------------------------------------------------------

Subspace center(const AlgebraDef& a) {
    const std::size_t d = a.dim();
    std::vector<Vector> rows;
    auto addRows = [&](auto&& coefficient) {
        // one row per output coordinate: sum_i x_i * coefficient(i)[o] = 0
        for (std::size_t o = 0; o < d; ++o) {
            Vector row(d);
            for (std::size_t i = 0; i < d; ++i) row[i] = coefficient(i)[o];
            if (!isZero(row)) rows.push_back(std::move(row));
        }
    };
    if (a.hasBinary()) {
        const auto& c = a.binary();
        for (std::size_t j = 0; j < d; ++j) addRows([&](std::size_t i) -> const Vector& { return c(i, j); });
    }
    if (a.hasTernary()) {
        const auto& t = a.ternary();
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                addRows([&](std::size_t i) -> const Vector& { return t(i, j, k); });
                addRows([&](std::size_t i) -> const Vector& { return t(j, i, k); });
                addRows([&](std::size_t i) -> const Vector& { return t(j, k, i); });
            }
    }
    if (rows.empty()) return Subspace::whole(d);
    return nullspace(Matrix::fromRows(rows, d));
}

std::string_view to_string(SubspaceClass c) {
    switch (c) {
        case SubspaceClass::NotClosed: return "not_closed";
        case SubspaceClass::Subsuperalgebra: return "subsuperalgebra";
        case SubspaceClass::Invariant: return "invariant";
        case SubspaceClass::Ideal: return "ideal";
    }
    return "?";
}

std::vector<Vector> homogeneousBasis(const SuperSpace& space, const Subspace& v) {
    std::vector<Vector> out;
    for (const auto& b : v.basis())
        for (Parity p : {Parity::Even, Parity::Odd}) {
            Vector part = space.project(b, p);
            if (!isZero(part)) out.push_back(std::move(part));
        }
    return out;
}

bool isGraded(const SuperSpace& space, const Subspace& v) {
    for (const auto& h : homogeneousBasis(space, v))
        if (!v.contains(h)) return false;
    return true;
}

SubspaceClass classifySubspace(const AlgebraDef& a, const Subspace& v) {
    const SuperSpace& space = a.space();
    if (v.ambientDim() != space.dim()) throw Error(ErrorKind::Mismatch, "subspace lives in a different space");
    if (!isGraded(space, v)) throw Error(ErrorKind::Precondition, "subspace is not graded");
    const auto h = homogeneousBasis(space, v);
    std::vector<Vector> e;
    for (std::size_t i = 0; i < space.dim(); ++i) e.push_back(space.basis(i));

    bool sub = true;
    if (a.hasBinary())
        for (const auto& x : h)
            for (const auto& y : h) sub = sub && v.contains(evalBinary(a, x, y));
    if (a.hasTernary())
        for (const auto& x : h)
            for (const auto& y : h)
                for (const auto& z : h) sub = sub && v.contains(evalTernary(a, x, y, z));
    if (!sub) return SubspaceClass::NotClosed;

    bool invariant = true;
    if (a.hasTernary())
        for (const auto& x : e)
            for (const auto& y : e)
                for (const auto& z : h) invariant = invariant && v.contains(evalTernary(a, x, y, z));
    bool absorbs = true;
    if (a.hasBinary())
        for (const auto& x : e)
            for (const auto& z : h) absorbs = absorbs && v.contains(evalBinary(a, x, z));

    if (invariant && absorbs) return SubspaceClass::Ideal;
    if (invariant) return SubspaceClass::Invariant;
    return SubspaceClass::Subsuperalgebra;
}

CheckReport checkMorphism(const Matrix& f, const AlgebraDef& dom, const AlgebraDef& cod) {
    const std::size_t n = dom.dim(), m = cod.dim();
    if (f.rows() != m || f.cols() != n) throw Error(ErrorKind::Mismatch, "morphism matrix has the wrong shape");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(f(i, j)) != 0 && cod.space().parity(i) != dom.space().parity(j))
                throw Error(ErrorKind::Precondition, "morphism must be an even map");

    CheckReport report;
    std::vector<Vector> img;
    for (std::size_t j = 0; j < n; ++j) img.push_back(f.column(j));
    if (dom.hasBinary() && cod.hasBinary())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector defect = sub(f * dom.binary()(i, j), evalBinary(cod, img[i], img[j]));
                if (!isZero(defect)) report.witnesses.push_back({"binary", {i, j}, std::move(defect)});
            }
    if (dom.hasTernary() && cod.hasTernary())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vector defect = sub(f * dom.ternary()(i, j, k), evalTernary(cod, img[i], img[j], img[k]));
                    if (!isZero(defect)) report.witnesses.push_back({"ternary", {i, j, k}, std::move(defect)});
                }
    return report;
}

CheckReport checkMorphism(const GradedMap& f, const AlgebraDef& dom, const AlgebraDef& cod) {
    if (f.degree() != Parity::Even) throw Error(ErrorKind::Precondition, "morphism must be an even map");
    return checkMorphism(f.matrix(), dom, cod);
}

}  // namespace bolsuper
