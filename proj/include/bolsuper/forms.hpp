#pragma once

// Bilinear forms on superalgebras: the Killing form of a Lie superalgebra,
// the Killing-Ricci form of a Bol superalgebra and invariant forms.

#include <optional>
#include <string>
#include <vector>

#include "bolsuper/envelope.hpp"

namespace bolsuper {

class BilinearForm {
public:
    BilinearForm(SuperSpace space, Matrix gram);

    const SuperSpace& space() const { return space_; }
    const Matrix& gram() const { return gram_; }
    Scalar operator()(const Vector& x, const Vector& y) const;

    // gram(i,j) = (-1)^{p(i)p(j)} gram(j,i)
    bool isSupersymmetric() const;
    // gram(i,j) = 0 when p(i) != p(j)
    bool isConsistent() const;

    bool operator==(const BilinearForm& other) const = default;

private:
    SuperSpace space_;
    Matrix gram_;
};

// gram(i,j) = str(ad e_i ad e_j). Throws if l fails the Lie axioms.
BilinearForm killingForm(const AlgebraDef& lie);
// Same, without re-checking the axioms.
BilinearForm killingFormUnchecked(const AlgebraDef& lie);

// R_{x,y}(z) = (-1)^{z(x+y)} [z,x,y]
GradedMap rightMap(const AlgebraDef& b, const Vector& x, const Vector& y);

enum class RicciMethod { Restriction, Direct };

// Restriction: the Killing form of B + IPS(B,B) restricted to B.
// Direct: gram(i,j) = str(R_{e_i,e_j} + (-1)^{p(i)p(j)} R_{e_j,e_i}).
// Throws if b fails the Bol axioms.
BilinearForm killingRicci(const AlgebraDef& b, RicciMethod method);

struct InvariantReport {
    CheckReport identities;  // "supersymmetry", "inv1", "inv2" witnesses (scalar defects)
    bool inva1 = false;
    bool inva2 = false;
    bool inva3 = false;
    bool passed() const { return identities.passed(); }
    bool equivalent() const { return inva1 == inva2 && inva2 == inva3; }
};

InvariantReport checkInvariant(const AlgebraDef& b, const BilinearForm& form);

// {x : form(x, v) = 0 for all v in V}
Subspace orthogonal(const BilinearForm& form, const Subspace& v);
Subspace radical(const BilinearForm& form);
bool isNondegenerate(const BilinearForm& form);

struct IdealOrthogonal {
    std::string name;
    Subspace ideal;
    Subspace perp;
    SubspaceClass perpClass;
};

struct SemisimplicityReport {
    std::size_t baseDim = 0;
    std::size_t envelopeDim = 0;
    BilinearForm beta;
    BilinearForm alpha;
    bool crossBlockVanishes = false;       // alpha(IPS(B,B), B) = 0
    bool betaNondegenerate = false;
    bool alphaNondegenerate = false;       // "Killing form of L(B) nondegenerate"
    bool innerIdentityHolds = false;          // alpha(D_xy, D_uv) = (-1)^{x(u+v+y)} beta(y, [u,v,x])
    bool betaInv1 = false;                 // beta satisfies the binary invariance inv1
    Subspace center{};
    // (B + [B,B,B])^perp; compared with the center when beta is nondegenerate.
    Subspace perpOfSpan{};
    std::optional<bool> perpEqualsCenter{};
    std::vector<IdealOrthogonal> ideals{};
};

// `extraIdeals` are added to the default list (zero, B, center, radical of beta).
SemisimplicityReport semisimplicityReport(const AlgebraDef& b, const std::vector<Subspace>& extraIdeals = {});

}  // namespace bolsuper
