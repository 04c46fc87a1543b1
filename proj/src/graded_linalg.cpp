#include "bolsuper/graded_linalg.hpp"

#include <algorithm>
#include <set>

#include "bolsuper/error.hpp"

namespace bolsuper {

std::string to_string(const Scalar& s) { return s.get_str(); }

// --- SuperSpace ----------------------------------------------------------

namespace {

std::vector<std::string> numberedLabels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
    return out;
}

}  // namespace

SuperSpace::SuperSpace() : data_(std::make_shared<Data>()) {}

SuperSpace::SuperSpace(std::size_t evenDim, std::size_t oddDim) {
    auto labels = numberedLabels(evenDim + oddDim);
    std::vector<Parity> parities(evenDim, Parity::Even);
    parities.resize(evenDim + oddDim, Parity::Odd);
    data_ = std::make_shared<Data>(Data{std::move(labels), std::move(parities)});
}

SuperSpace::SuperSpace(std::vector<std::string> evenLabels, std::vector<std::string> oddLabels) {
    std::vector<Parity> parities(evenLabels.size(), Parity::Even);
    parities.resize(evenLabels.size() + oddLabels.size(), Parity::Odd);
    evenLabels.insert(evenLabels.end(), oddLabels.begin(), oddLabels.end());
    *this = withParities(std::move(evenLabels), std::move(parities));
}

SuperSpace SuperSpace::withParities(std::vector<std::string> labels, std::vector<Parity> parities) {
    if (labels.size() != parities.size())
        throw Error(ErrorKind::Precondition, "label count does not match parity count");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw Error(ErrorKind::Precondition, "duplicate basis label '" + l + "'");
    return SuperSpace(std::make_shared<Data>(Data{std::move(labels), std::move(parities)}));
}

std::size_t SuperSpace::evenDim() const {
    return static_cast<std::size_t>(
        std::count(data_->parities.begin(), data_->parities.end(), Parity::Even));
}

std::optional<std::size_t> SuperSpace::indexOf(std::string_view label) const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (data_->labels[i] == label) return i;
    return std::nullopt;
}

Vector SuperSpace::basis(std::size_t i) const {
    Vector v(dim());
    v[i] = 1;
    return v;
}

std::optional<Parity> SuperSpace::parityOf(const Vector& v) const {
    bool hasEven = false, hasOdd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        (parity(i) == Parity::Even ? hasEven : hasOdd) = true;
    }
    if (hasEven && hasOdd) return std::nullopt;
    return hasOdd ? Parity::Odd : Parity::Even;
}

Vector SuperSpace::project(const Vector& v, Parity p) const {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (parity(i) == p) out[i] = v[i];
    return out;
}

bool SuperSpace::operator==(const SuperSpace& other) const {
    if (data_ == other.data_) return true;
    return data_->labels == other.data_->labels && data_->parities == other.data_->parities;
}

// --- vectors -------------------------------------------------------------

bool isZero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector add(const Vector& a, const Vector& b) {
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(const Vector& a, const Vector& b) {
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scaled(const Vector& v, const Scalar& s) {
    Vector out(v);
    for (auto& x : out) x *= s;
    return out;
}

void addScaled(Vector& y, const Scalar& a, const Vector& x) {
    if (sgn(a) == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) y[i] += a * x[i];
}

// --- Matrix --------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::fromRows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Matrix Matrix::fromColumns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::isZero() const { return bolsuper::isZero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::Mismatch, "matrix product: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw Error(ErrorKind::Mismatch, "matrix-vector product: dimension mismatch");
    Vector out(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (sgn(a(i, j)) != 0) out[i] += a(i, j) * v[j];
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::Mismatch, "matrix sum: dimension mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c(a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

RowEchelon rowReduce(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rowReduce(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    if (n == 0) return Matrix();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto ech = rowReduce(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

// --- Subspace ------------------------------------------------------------

Subspace Subspace::zero(std::size_t ambientDim) {
    Subspace s;
    s.ambientDim_ = ambientDim;
    return s;
}

Subspace Subspace::whole(std::size_t ambientDim) {
    Subspace s = zero(ambientDim);
    for (std::size_t i = 0; i < ambientDim; ++i) {
        Vector e(ambientDim);
        e[i] = 1;
        s.basis_.push_back(std::move(e));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(std::size_t ambientDim, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambientDim) throw Error(ErrorKind::Mismatch, "span: vector length mismatch");
    Subspace s = zero(ambientDim);
    if (vectors.empty()) return s;
    auto ech = rowReduce(Matrix::fromRows(vectors, ambientDim));
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) s.basis_.push_back(ech.reduced.row(i));
    s.pivots_ = std::move(ech.pivots);
    return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambientDim_) throw Error(ErrorKind::Mismatch, "subspace: vector length mismatch");
    // In reduced echelon form the coefficient of row i is v at its pivot.
    Vector coords(basis_.size());
    Vector rest(v);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        coords[i] = v[pivots_[i]];
        addScaled(rest, -coords[i], basis_[i]);
    }
    if (!isZero(rest)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambientDim_, all);
}

Subspace spanReduce(std::size_t ambientDim, const std::vector<Vector>& vectors) {
    return Subspace::span(ambientDim, vectors);
}

Subspace nullspace(const Matrix& m) {
    const std::size_t n = m.cols();
    auto ech = rowReduce(m);
    std::vector<bool> isPivot(n, false);
    for (auto p : ech.pivots) isPivot[p] = true;
    std::vector<Vector> kernel;
    for (std::size_t free = 0; free < n; ++free) {
        if (isPivot[free]) continue;
        Vector v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
        kernel.push_back(std::move(v));
    }
    return Subspace::span(n, kernel);
}

bool AffineSubspace::contains(const Vector& v) const {
    return particular && directions.contains(sub(v, *particular));
}

AffineSubspace solveAffine(const Matrix& coefficients, const Vector& rhs) {
    if (coefficients.rows() != rhs.size())
        throw Error(ErrorKind::Mismatch, "solveAffine: rhs length mismatch");
    const std::size_t n = coefficients.cols();
    Matrix aug(coefficients.rows(), n + 1);
    for (std::size_t i = 0; i < coefficients.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = coefficients(i, j);
        aug(i, n) = rhs[i];
    }
    auto ech = rowReduce(std::move(aug));
    AffineSubspace out{std::nullopt, nullspace(coefficients)};
    if (!ech.pivots.empty() && ech.pivots.back() == n) return out;
    Vector x(n);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, n);
    out.particular = std::move(x);
    return out;
}

// --- GradedMap -----------------------------------------------------------

GradedMap::GradedMap(SuperSpace space, Parity degree, Matrix matrix)
    : space_(std::move(space)), degree_(degree), matrix_(std::move(matrix)) {
    const std::size_t n = space_.dim();
    if (matrix_.rows() != n || matrix_.cols() != n)
        throw Error(ErrorKind::Mismatch, "graded map: matrix size does not match space");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(matrix_(i, j)) != 0 && space_.parity(i) != space_.parity(j) + degree_)
                throw Error(ErrorKind::Precondition,
                            "graded map: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") breaks the degree-" + std::to_string(bit(degree_)) + " block structure");
}

GradedMap GradedMap::zero(const SuperSpace& space, Parity degree) {
    return GradedMap(space, degree, Matrix(space.dim(), space.dim()));
}

GradedMap GradedMap::identity(const SuperSpace& space) {
    return GradedMap(space, Parity::Even, Matrix::identity(space.dim()));
}

namespace {

void requireSameSpace(const GradedMap& f, const GradedMap& g) {
    if (!(f.space() == g.space())) throw Error(ErrorKind::Mismatch, "graded maps act on different spaces");
}

void requireSameDegree(const GradedMap& f, const GradedMap& g) {
    requireSameSpace(f, g);
    if (f.degree() != g.degree()) throw Error(ErrorKind::Mismatch, "sum of graded maps of different degrees");
}

}  // namespace

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    requireSameSpace(f, g);
    return GradedMap(f.space(), f.degree() + g.degree(), f.matrix() * g.matrix());
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
    requireSameDegree(f, g);
    return GradedMap(f.space(), f.degree(), f.matrix() + g.matrix());
}

GradedMap operator-(const GradedMap& f, const GradedMap& g) {
    requireSameDegree(f, g);
    return GradedMap(f.space(), f.degree(), f.matrix() - g.matrix());
}

GradedMap operator*(const Scalar& s, const GradedMap& f) {
    return GradedMap(f.space(), f.degree(), s * f.matrix());
}

Scalar supertrace(const GradedMap& f) {
    Scalar s = 0;
    for (std::size_t i = 0; i < f.space().dim(); ++i) {
        if (f.space().parity(i) == Parity::Even)
            s += f.matrix()(i, i);
        else
            s -= f.matrix()(i, i);
    }
    return s;
}

Scalar supertraceOfProduct(const SuperSpace& space, const Matrix& f, const Matrix& g) {
    Scalar s = 0;
    const std::size_t n = space.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Scalar diag = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(f(i, k)) != 0 && sgn(g(k, i)) != 0) diag += f(i, k) * g(k, i);
        if (space.parity(i) == Parity::Even)
            s += diag;
        else
            s -= diag;
    }
    return s;
}

GradedMap gradedCommutator(const GradedMap& f, const GradedMap& g) {
    requireSameSpace(f, g);
    const int sign = signPow(bit(f.degree()) * bit(g.degree()));
    const Matrix fg = f.matrix() * g.matrix();
    const Matrix gf = g.matrix() * f.matrix();
    return GradedMap(f.space(), f.degree() + g.degree(), sign > 0 ? fg - gf : fg + gf);
}

}  // namespace bolsuper
