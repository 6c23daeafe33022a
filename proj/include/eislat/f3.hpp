#pragma once

// Finite quadratic spaces over F_3: discriminant groups theta N*/N, norm
// enumeration, isotropic lines, gluing, index-3 sublattices, and orbits of
// hyperplanes under symplectic transvections.

#include "eislat/hermitian.hpp"
#include "eislat/qomega.hpp"

#include <optional>
#include <vector>

namespace eislat {

using F3Vector = std::vector<F3>;
using QVector = std::vector<QOmega>;

struct F3QuadSpace {
    std::size_t k = 0;
    Matrix<F3> q;                  // symmetric Gram over F_3
    std::vector<QVector> basis_lift;  // representatives in theta N*, ambient coordinates
};

/// Diagonal space with the given entries (no lifts).
F3QuadSpace diagonal_space(const std::vector<int>& entries);

F3 quad_norm(const F3QuadSpace& s, const F3Vector& v);
F3 quad_pair(const F3QuadSpace& s, const F3Vector& v, const F3Vector& w);

/// theta N*/N with the form got by reducing inner products of lifts mod theta.
/// Throws std::invalid_argument if N is degenerate, not in its theta-dual, or
/// theta does not kill the quotient.
F3QuadSpace disc_group(const HermGram& n);

/// All vectors of F_3^k with the given norm, in lexicographic order of balanced
/// coordinates.
std::vector<F3Vector> enumerate_norm(const F3QuadSpace& s, F3 c);

/// Scales a nonzero vector so its first nonzero entry is 1.
F3Vector normalize_line(F3Vector v);

/// Isotropic lines (normalized generators) with optional orthogonality constraints.
std::vector<F3Vector> isotropic_lines(const F3QuadSpace& s, const std::optional<F3Vector>& orth_to,
                                      const std::optional<F3Vector>& not_orth_to);

struct SubLattice {
    HermGram gram;
    std::vector<QVector> basis;  // rows in ambient coordinates
};

/// Gram of the E-module spanned by the given rational vectors.
SubLattice span_lattice(const HermGram& ambient, const std::vector<QVector>& gens);

/// The preimage in theta N* of the line spanned by `line` (coordinates in the
/// disc_group basis). Throws std::invalid_argument if the line is not isotropic.
SubLattice glue(const HermGram& n, const F3Vector& line);

/// {x : f(x mod theta) = 0} for a nonzero functional f(x) = sum f_i x_i.
/// Throws std::invalid_argument for f = 0.
SubLattice hyperplane_preimage(const HermGram& g, const F3Vector& f);

/// Orbit of a hyperplane, given by its normal for the symplectic pairing of g,
/// under the reduced triflections in the roots. Normals are taken up to sign.
std::size_t hyperplane_orbit(const std::vector<HermVector>& roots, const HermGram& g, const F3Vector& start);

struct OrbitSearch {
    std::size_t orbit = 0;
    std::size_t generators = 0;
    std::vector<HermVector> roots;
};

/// Adds norm-3 roots of g in a fixed order (basis roots, then two-term roots
/// e_i + u e_j) until the orbit of `start` reaches `target` or the candidates
/// run out.
OrbitSearch grow_hyperplane_orbit(const HermGram& g, const F3Vector& start, std::size_t target);

}  // namespace eislat
