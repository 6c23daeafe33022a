#pragma once

// Z-lattices given by integer Gram matrices.

#include "eislat/lattice.hpp"

#include <vector>

namespace eislat {

/// Exact inertia of the rational symmetric form (symmetric pivoting, with a
/// hyperbolic 2x2 split when only off-diagonal entries remain).
Inertia inertia(const ZGram& g);
/// Same, for a symmetric rational matrix.
Inertia inertia(Matrix<mpq_class> a);

mpz_class determinant(const ZGram& g);

bool is_even(const ZGram& g);

/// Gram of the vanishing lattice of x0^2 + x1^2 + x2^2 + y^3 + z^n, basis
/// a_1..a_n, b_1..b_n: a_i^2 = b_i^2 = 2, a_i.a_{i+1} = b_i.b_{i+1} = -1,
/// a_i.b_i = -1, a_i.b_{i-1} = 1. Throws std::invalid_argument for n < 1.
ZGram an_vanishing_gram(int n);

/// Kronecker product of Gram matrices.
ZGram tensor_gram(const ZGram& g, const ZGram& h);

/// The standard E_8 root lattice Gram (Bourbaki labelling).
ZGram e8_gram();
/// A_{n} root lattice Gram.
ZGram an_root_gram(int n);

/// Picks an E-basis of Z^{2n} for the E-module structure in which w acts by s.
/// Returns the basis vectors as Z-coordinate columns. s must satisfy s^3 = 1
/// and have no nonzero fixed vector.
std::vector<ZVector> eisenstein_basis(const Matrix<mpz_class>& s);

/// Hermitian form <a,b> = (3 a.b - theta a.(s^{-1} b - s b)) / 2 on the E-module
/// (Z^{2n}, w = s), written on the basis from eisenstein_basis.
/// Throws std::invalid_argument if s is not an isometry of g, s^3 != 1, s has a
/// fixed vector, or the form takes a value outside E.
HermGram hermitian_from_z(const ZGram& g, const Matrix<mpz_class>& s);

}  // namespace eislat
