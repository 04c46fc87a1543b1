#pragma once

// Pseudo superderivations of a Bol superalgebra and the enveloping Lie
// superalgebras L^H(B) = B + H built from a space H of (operator, companion)
// pairs.
//
// A pair (P, a) with P of degree r and a in B_r is a pseudo superderivation
// with companion a when, for all homogeneous x, y, z,
//
//   P([x,y,z]) = [P(x),y,z] + (-1)^{r x}[x,P(y),z] + (-1)^{r(x+y)}[x,y,P(z)]
//   P(xy)      = (-1)^{r x} x P(y) + P(x) y + (-1)^{r(x+y)}[x,y,a] + a (xy)
//
// Pairs are compared and spanned as flat coordinate vectors of length
// d*d + d: the operator matrix row-major, then the companion.

#include <optional>
#include <vector>

#include "bolsuper/structures.hpp"

namespace bolsuper {

class PseudoPair {
public:
    // Throws unless companion is supported on parity op.degree().
    PseudoPair(GradedMap op, Vector companion);

    const GradedMap& op() const { return op_; }
    const Vector& companion() const { return companion_; }
    Parity degree() const { return op_.degree(); }

    bool operator==(const PseudoPair& other) const = default;

private:
    GradedMap op_;
    Vector companion_;
};

Vector flatten(const PseudoPair& p);
PseudoPair unflatten(const SuperSpace& space, const Vector& flat);
// Parity carried by flat coordinate c.
Parity flatParity(const SuperSpace& space, std::size_t c);

// D_{x,y} = [x,y,-] with companion x*y.
PseudoPair innerPair(const AlgebraDef& b, const Vector& x, const Vector& y);

// Identity "pseudo1" on basis triples, "pseudo2" on basis pairs.
CheckReport checkPseudo(const AlgebraDef& b, const PseudoPair& p);

// Com(P) inside B_r. Empty when P fails pseudo1 or no companion exists.
AffineSubspace companionSpace(const AlgebraDef& b, const GradedMap& p);

// ([P,R], P(c) - (-1)^{rs} R(a) - a c)
PseudoPair pairBracket(const AlgebraDef& b, const PseudoPair& p, const PseudoPair& q);

class PairSpace {
public:
    static PairSpace span(const AlgebraDef& base, const std::vector<PseudoPair>& generators);

    const AlgebraDef& base() const { return base_; }
    std::size_t dim() const { return basis_.size(); }
    // Canonical (reduced echelon) basis; each element is homogeneous.
    const std::vector<PseudoPair>& basis() const { return basis_; }
    const Subspace& flat() const { return flat_; }

    bool contains(const PseudoPair& p) const { return flat_.contains(flatten(p)); }
    std::optional<Vector> coordinates(const PseudoPair& p) const { return flat_.coordinates(flatten(p)); }
    bool contains(const PairSpace& other) const { return flat_.contains(other.flat_); }
    // pair_bracket of any two basis elements stays inside.
    bool closed() const { return closed_; }

private:
    PairSpace(AlgebraDef base, Subspace flat);

    AlgebraDef base_;
    Subspace flat_;
    std::vector<PseudoPair> basis_;
    bool closed_ = false;
};

// span{(D_{x,y}, x y)} over basis x of B and homogeneous basis y of K (or B).
PairSpace ipsSpace(const AlgebraDef& b, const std::optional<Subspace>& k = std::nullopt);

// All pairs (P, a) satisfying pseudo1 and pseudo2.
PairSpace psSpace(const AlgebraDef& b);

struct EnvelopingAlgebra {
    AlgebraDef base;
    PairSpace pairs;
    // B basis first (indices 0..dim B - 1), then the basis of H.
    AlgebraDef lie;

    std::size_t baseDim() const { return base.dim(); }
    std::size_t pairDim() const { return pairs.dim(); }
    std::size_t pairIndex(std::size_t k) const { return base.dim() + k; }
    Vector embedBase(const Vector& x) const;
    // Throws if p is not in H.
    Vector embedPair(const PseudoPair& p) const;
};

// Requires H to contain ipsSpace(B) and to be closed. The bracket is
//   [x,y] = (D_{x,y}, xy),  [(P,a),x] = P(x),  [(P,a),(Q,b)] = pairBracket.
// The Lie axioms are re-checked on the result; a failure throws Internal.
EnvelopingAlgebra enveloping(const AlgebraDef& b, const PairSpace& h);

struct IdealEnvelope {
    EnvelopingAlgebra standard;  // L(B) = B + IPS(B,B)
    Subspace ideal;              // K + IPS(B,K) in L(B) coordinates
    bool verified = false;       // [ideal, L(B)] inside ideal
};

// Requires K to be an ideal of B.
IdealEnvelope idealEnvelope(const AlgebraDef& b, const Subspace& k);

}  // namespace bolsuper
