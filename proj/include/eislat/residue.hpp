#pragma once

// Jacobian-ring dimensions and automorphism eigenspaces for quasihomogeneous
// hypersurfaces, via residues A Omega / F^(q+1) with deg A = (q+1)d - sum w.

#include "eislat/eisenstein.hpp"

#include <array>
#include <string>
#include <vector>

namespace eislat {

struct WeightedHypersurface {
    enum class Mode { Monomial, GenericCI };

    std::vector<long> weights;
    long degree = 0;
    Mode mode = Mode::Monomial;
    /// Monomial mode: F = sum x_i^(m_i) up to a linear change of coordinates.
    std::vector<long> exponents;
    /// Diagonal automorphism x_i -> chi_i x_i; empty means trivial.
    std::vector<SixthRoot> character;

    /// Throws std::invalid_argument unless w_i m_i = d and chi_i^(m_i) = 1
    /// (Monomial), or w_i | d and chi_i^(d/w_i) = 1 (GenericCI).
    void validate() const;
    std::size_t variables() const { return weights.size(); }
    /// Dimension of the hypersurface: variables - 2.
    long dimension() const { return static_cast<long>(weights.size()) - 2; }
    SixthRoot chi(std::size_t i) const { return character.empty() ? SixthRoot::one() : character[i]; }
};

/// Multiplicity of each sixth root of unity (index = exponent of eps = -wbar).
using EigenCounts = std::array<long, 6>;

/// Degree-`grade` piece of the Jacobian ring split by the character of A.
EigenCounts jacobian_characters(const WeightedHypersurface& h, long grade);

long jacobian_dim(const WeightedHypersurface& h, long grade);

/// (q+1)d - sum w.
long residue_grade(const WeightedHypersurface& h, long q);

long hodge_piece_dim(const WeightedHypersurface& h, long q);

/// Eigenvalue of the residue of A Omega / F^(q+1) is chi(A) prod chi_i.
EigenCounts eigen_hodge_dims(const WeightedHypersurface& h, long q);
long eigen_hodge_dim(const WeightedHypersurface& h, long q, SixthRoot eigenvalue);

/// Monomial-mode basis of a grade: exponent vectors with e_i <= m_i - 2.
std::vector<std::vector<long>> monomial_basis(const WeightedHypersurface& h, long grade);

struct HodgeRow {
    long q = 0;
    long grade = 0;
    long total = 0;
    EigenCounts by_eigenvalue{};
};

/// One row per q = 0..dimension; empty when there are fewer than two variables.
std::vector<HodgeRow> full_report(const WeightedHypersurface& h);

}  // namespace eislat
