#pragma once

#include <random>
#include <vector>

#include "bolsuper/catalog.hpp"
#include "bolsuper/constructions.hpp"
#include "bolsuper/graded_linalg.hpp"

namespace testing {

using namespace bolsuper;

// Fixed seeds everywhere; failures must reproduce.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Scalar rational(int range = 5) {
        Scalar q(integer(-range, range), integer(1, range));
        q.canonicalize();
        return q;
    }
    Scalar sparseRational() { return integer(0, 2) == 0 ? Scalar(0) : rational(); }

    Matrix matrix(std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rational();
        return m;
    }

    Vector homogeneous(const SuperSpace& s, Parity p) {
        Vector v(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (s.parity(i) == p) v[i] = sparseRational();
        return v;
    }

    GradedMap gradedMap(const SuperSpace& s, Parity degree) {
        Matrix m(s.dim(), s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j)
                if (s.parity(i) == s.parity(j) + degree) m(i, j) = rational();
        return GradedMap(s, degree, m);
    }

    Parity parity() { return coin() ? Parity::Odd : Parity::Even; }

    // Even and invertible: retried until the determinant is nonzero.
    GradedMap invertibleEven(const SuperSpace& s) {
        for (;;) {
            GradedMap h = gradedMap(s, Parity::Even);
            if (rank(h.matrix()) == s.dim()) return h;
        }
    }

    // Super skew-symmetric in the first two slots and graded.
    AlgebraDef algebra(const SuperSpace& s, bool binary, bool ternary) {
        const std::size_t d = s.dim();
        std::optional<BinaryStructure> b;
        std::optional<TernaryStructure> t;
        auto sign = [&](std::size_t i, std::size_t j) {
            return -signPow(bit(s.parity(i)) * bit(s.parity(j)));
        };
        if (binary) {
            b.emplace(s);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j) {
                    if (i == j && s.parity(i) == Parity::Even) continue;
                    const Vector v = homogeneous(s, s.parity(i) + s.parity(j));
                    b->set(i, j, v);
                    b->set(j, i, scaled(v, sign(i, j)));
                }
        }
        if (ternary) {
            t.emplace(s);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j)
                    for (std::size_t k = 0; k < d; ++k) {
                        if (i == j && s.parity(i) == Parity::Even) continue;
                        if (integer(0, 2) != 0) continue;
                        const Vector v = homogeneous(s, s.parity(i) + s.parity(j) + s.parity(k));
                        t->set(i, j, k, v);
                        t->set(j, i, k, scaled(v, sign(i, j)));
                    }
        }
        return AlgebraDef("random", s, b, t);
    }

private:
    std::mt19937 rng_;
};

// The Bol algebras the catalog provides, plus the one built from aff2.
inline std::vector<AlgebraDef> bolAlgebras() {
    std::vector<AlgebraDef> out;
    for (const auto& e : catalogEntries())
        if (e.kind == AxiomKind::Bol) out.push_back(e.algebra);
    out.push_back(malcevToBol(catalogEntry("aff2_lie").algebra));
    return out;
}

// gl(m|n) from supercommutators of matrix units. Basis E_ij in row-major
// order; E_ij is odd iff exactly one of i, j is >= m.
inline AlgebraDef glmn(std::size_t m, std::size_t n) {
    const std::size_t N = m + n, d = N * N;
    const SuperSpace vec(m, n);
    std::vector<std::string> labels;
    std::vector<Parity> parities;
    std::vector<GradedMap> units;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            const Parity p = vec.parity(i) + vec.parity(j);
            parities.push_back(p);
            Matrix u(N, N);
            u(i, j) = 1;
            units.emplace_back(vec, p, u);
        }
    const SuperSpace space = SuperSpace::withParities(labels, parities);
    BinaryStructure b(space);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c) {
            const Matrix br = gradedCommutator(units[a], units[c]).matrix();
            Vector v(d);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) v[i * N + j] = br(i, j);
            b.set(a, c, v);
        }
    return AlgebraDef("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", space, b, std::nullopt);
}

}  // namespace testing
