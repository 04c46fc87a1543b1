#pragma once

// Exact linear algebra over the rationals on Z2-graded coordinate spaces.
//
// Everything here is a value type. A SuperSpace carries a parity per basis
// index; spaces built from (m, n) use the even-first ordering, but spaces of
// enveloping algebras interleave parities, so nothing below assumes it.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bolsuper {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr int bit(Parity p) { return static_cast<int>(p); }

// (-1)^e
constexpr int signPow(int e) { return (e & 1) ? -1 : 1; }

std::string to_string(const Scalar& s);

class SuperSpace {
public:
    SuperSpace();
    // Labels e1..e{m+n}; indices 0..m-1 even, m..m+n-1 odd.
    SuperSpace(std::size_t evenDim, std::size_t oddDim);
    SuperSpace(std::vector<std::string> evenLabels, std::vector<std::string> oddLabels);
    // Arbitrary parity per index. Labels must be distinct.
    static SuperSpace withParities(std::vector<std::string> labels, std::vector<Parity> parities);

    std::size_t dim() const { return data_->parities.size(); }
    std::size_t evenDim() const;
    std::size_t oddDim() const { return dim() - evenDim(); }
    Parity parity(std::size_t i) const { return data_->parities[i]; }
    const std::vector<Parity>& parities() const { return data_->parities; }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }
    const std::vector<std::string>& labels() const { return data_->labels; }
    std::optional<std::size_t> indexOf(std::string_view label) const;

    Vector zero() const { return Vector(dim()); }
    Vector basis(std::size_t i) const;

    // Parity of a homogeneous vector; the zero vector reports Even.
    std::optional<Parity> parityOf(const Vector& v) const;
    Vector project(const Vector& v, Parity p) const;

    bool operator==(const SuperSpace& other) const;

private:
    struct Data {
        std::vector<std::string> labels;
        std::vector<Parity> parities;
    };
    explicit SuperSpace(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

// --- plain vectors -------------------------------------------------------

bool isZero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);
// y += a * x
void addScaled(Vector& y, const Scalar& a, const Vector& x);

// --- dense matrices ------------------------------------------------------

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix fromRows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix fromColumns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transposed() const;
    bool isZero() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

struct RowEchelon {
    Matrix reduced;                    // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row
};

RowEchelon rowReduce(Matrix m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// --- subspaces -----------------------------------------------------------

// A subspace of K^n held as its reduced row echelon basis. Two subspaces
// are equal iff their bases are identical.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambientDim);
    static Subspace whole(std::size_t ambientDim);
    static Subspace span(std::size_t ambientDim, const std::vector<Vector>& vectors);

    std::size_t ambientDim() const { return ambientDim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    // Coefficients of v in basis(), or nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambientDim_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace spanReduce(std::size_t ambientDim, const std::vector<Vector>& vectors);

// Kernel of m acting on column vectors.
Subspace nullspace(const Matrix& m);

struct AffineSubspace {
    std::optional<Vector> particular;  // nullopt: no solutions
    Subspace directions;

    bool empty() const { return !particular.has_value(); }
    bool contains(const Vector& v) const;
};

// Full solution set of coefficients * x = rhs.
AffineSubspace solveAffine(const Matrix& coefficients, const Vector& rhs);

// --- graded maps ---------------------------------------------------------

// Homogeneous endomorphism of a SuperSpace. Column j is the image of basis
// vector j. Construction rejects entries that break the block structure.
class GradedMap {
public:
    GradedMap(SuperSpace space, Parity degree, Matrix matrix);
    static GradedMap zero(const SuperSpace& space, Parity degree);
    static GradedMap identity(const SuperSpace& space);

    const SuperSpace& space() const { return space_; }
    Parity degree() const { return degree_; }
    const Matrix& matrix() const { return matrix_; }

    Vector operator()(const Vector& v) const { return matrix_ * v; }

    bool operator==(const GradedMap& other) const = default;

private:
    SuperSpace space_;
    Parity degree_;
    Matrix matrix_;
};

GradedMap compose(const GradedMap& f, const GradedMap& g);  // f after g
GradedMap operator+(const GradedMap& f, const GradedMap& g);
GradedMap operator-(const GradedMap& f, const GradedMap& g);
GradedMap operator*(const Scalar& s, const GradedMap& f);

// sum of even diagonal entries minus sum of odd diagonal entries
Scalar supertrace(const GradedMap& f);
// str(f g) without forming the product.
Scalar supertraceOfProduct(const SuperSpace& space, const Matrix& f, const Matrix& g);

// f g - (-1)^{|f||g|} g f
GradedMap gradedCommutator(const GradedMap& f, const GradedMap& g);

}  // namespace bolsuper
