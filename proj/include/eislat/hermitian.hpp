#pragma once

// Hermitian E-lattices: named Gram matrices, inner products, Z-realizations,
// invariants and root types.
//
// Convention: vectors are columns and matrices act on the left, so M is an
// isometry of G exactly when M^T G conj(M) = G.

#include "eislat/lattice.hpp"

#include <string>
#include <vector>

namespace eislat {

/// <x, y> = sum g_ij x_i conj(y_j). Throws std::invalid_argument on size mismatch.
EisensteinInt ip(const HermGram& g, const HermVector& x, const HermVector& y);

/// (3) + E8^E + E8^E + hyp, rank 11.
HermGram lambda();
/// E8^E + E8^E + hyp, rank 10.
HermGram lambda10();
/// chain(4): the E-form of E8.
HermGram e8e();
/// ((0, theta), (conj theta, 0)).
HermGram hyp();
/// 3 on the diagonal, theta above it, conj(theta) below. Throws for n < 1.
HermGram chain(int n);
HermGram diag(const std::vector<long>& entries);

/// Parses "lambda", "lambda10", "e8e", "hyp", "chain:N", "diag:a,b,..." and
/// '+'-separated direct sums of these. Throws std::invalid_argument.
HermGram named_lattice(const std::string& spec);

/// Gram of (2/3)Re<,> on the Z-basis e_1, w e_1, e_2, w e_2, ...
/// Throws std::invalid_argument if an entry is not an integer.
ZGram z_realization(const HermGram& g);

/// Rational version of z_realization; never throws.
Matrix<mpq_class> real_form(const HermGram& g);

/// Multiplication by w on the Z-basis of z_realization.
Matrix<mpz_class> omega_matrix(std::size_t n);

/// (positive, radical, negative) over C: half the inertia of the real form.
Inertia signature(const HermGram& g);

/// Rank of the Gram matrix over Q(w).
std::size_t form_rank(const HermGram& g);

/// Primitive E-vectors spanning the radical {x : <x, y> = 0 for all y} over Q(w).
std::vector<HermVector> radical_basis(const HermGram& g);

EisensteinInt det_e(const HermGram& g);

/// Every Gram entry lies in theta E.
bool in_theta_dual(const HermGram& g);
/// in_theta_dual and norm(det_e) = 3^n. Throws std::invalid_argument if singular.
bool theta_self_dual(const HermGram& g);

enum class RootType { Nodal, Chordal };
std::string to_string(RootType t);

/// Nodal when <r, L> = theta E, chordal when <r, L> = 3E.
/// Throws std::invalid_argument when <r, r> != 3 and std::logic_error when the
/// ideal is neither.
RootType root_classify(const HermGram& g, const HermVector& r);

bool is_isometry(const HermGram& g, const Matrix<EisensteinInt>& m);

/// Canonical generator of the ideal spanned by the entries; zero for the zero vector.
EisensteinInt content(const HermVector& v);

/// v divided by its content; zero stays zero.
HermVector primitive(const HermVector& v);

}  // namespace eislat
