#pragma once

// Graded binary and ternary algebras given by structure constants, and
// exhaustive checks of the identities defining Lie, Malcev, supertriple,
// Lie-supertriple and Bol superalgebras.
//
// Every identity checked here is multilinear in its arguments and is stated
// for homogeneous elements, so it holds on all of the algebra iff it holds
// on every tuple of basis vectors. check_axioms therefore only enumerates
// basis tuples; that enumeration is a complete decision procedure.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bolsuper/graded_linalg.hpp"

namespace bolsuper {

// c(i, j) = e_i * e_j
class BinaryStructure {
public:
    explicit BinaryStructure(SuperSpace space);

    const SuperSpace& space() const { return space_; }
    const Vector& operator()(std::size_t i, std::size_t j) const { return table_[i * space_.dim() + j]; }
    // Throws if value is not supported on parity(i) + parity(j).
    void set(std::size_t i, std::size_t j, Vector value);
    bool isZero() const;

    bool operator==(const BinaryStructure& other) const = default;

private:
    SuperSpace space_;
    std::vector<Vector> table_;
};

// t(i, j, k) = [e_i, e_j, e_k]
class TernaryStructure {
public:
    explicit TernaryStructure(SuperSpace space);

    const SuperSpace& space() const { return space_; }
    const Vector& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t d = space_.dim();
        return table_[(i * d + j) * d + k];
    }
    void set(std::size_t i, std::size_t j, std::size_t k, Vector value);
    bool isZero() const;

    bool operator==(const TernaryStructure& other) const = default;

private:
    SuperSpace space_;
    std::vector<Vector> table_;
};

class AlgebraDef {
public:
    AlgebraDef(std::string name, SuperSpace space, std::optional<BinaryStructure> binary,
               std::optional<TernaryStructure> ternary);

    const std::string& name() const { return name_; }
    const SuperSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

    bool hasBinary() const { return binary_.has_value(); }
    bool hasTernary() const { return ternary_.has_value(); }
    // Throw Mismatch when the structure is absent.
    const BinaryStructure& binary() const;
    const TernaryStructure& ternary() const;

    AlgebraDef renamed(std::string name) const;

    bool operator==(const AlgebraDef& other) const = default;

private:
    std::string name_;
    SuperSpace space_;
    std::optional<BinaryStructure> binary_;
    std::optional<TernaryStructure> ternary_;
};

Vector evalBinary(const AlgebraDef& a, const Vector& x, const Vector& y);
Vector evalTernary(const AlgebraDef& a, const Vector& x, const Vector& y, const Vector& z);

enum class AxiomKind { Lie, Malcev, Supertriple, LieSupertriple, Bol };

std::string_view to_string(AxiomKind kind);
// Accepts lie, malcev, supertriple, lts, lie_supertriple, bol.
std::optional<AxiomKind> parseAxiomKind(std::string_view text);

struct Witness {
    std::string axiom;
    std::vector<std::size_t> indices;  // basis indices of the failing tuple
    Vector defect;                     // nonzero; length 1 for scalar identities
};

struct CheckReport {
    std::vector<Witness> witnesses;
    bool passed() const { return witnesses.empty(); }
};

// Witnesses are grouped per identity, in the order the identities are
// listed for the kind, and lexicographic in the basis tuple within each.
CheckReport checkAxioms(const AlgebraDef& a, AxiomKind kind);

// {x : x*e_j = 0 and [x,e_j,e_k] = [e_j,x,e_k] = [e_j,e_k,x] = 0 for all j, k}
Subspace center(const AlgebraDef& a);

enum class SubspaceClass { NotClosed, Subsuperalgebra, Invariant, Ideal };
std::string_view to_string(SubspaceClass c);

// Nonzero even and odd parts of v's basis vectors. Spans v iff v is graded.
std::vector<Vector> homogeneousBasis(const SuperSpace& space, const Subspace& v);
// True iff v is the direct sum of its even and odd parts.
bool isGraded(const SuperSpace& space, const Subspace& v);
// Strongest label: Ideal > Invariant > Subsuperalgebra > NotClosed.
SubspaceClass classifySubspace(const AlgebraDef& a, const Subspace& v);

// f: dom -> cod as a (dim cod) x (dim dom) matrix that must be even.
CheckReport checkMorphism(const Matrix& f, const AlgebraDef& dom, const AlgebraDef& cod);
CheckReport checkMorphism(const GradedMap& f, const AlgebraDef& dom, const AlgebraDef& cod);

}  // namespace bolsuper
