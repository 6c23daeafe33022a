#pragma once

// Gram-matrix types shared by the Z-lattice and Hermitian E-lattice modules.

#include "eislat/eisenstein.hpp"
#include "eislat/matrix.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <vector>

namespace eislat {

/// Symmetric integer Gram matrix of a Z-lattice.
class ZGram {
public:
    ZGram() = default;
    /// Throws std::invalid_argument unless g is square and symmetric.
    explicit ZGram(Matrix<mpz_class> g);

    std::size_t rank() const { return g_.rows(); }
    const Matrix<mpz_class>& matrix() const { return g_; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

    friend bool operator==(const ZGram&, const ZGram&) = default;

private:
    Matrix<mpz_class> g_;
};

/// Conjugate-symmetric Gram matrix over E; <x, y> = sum g_ij x_i conj(y_j).
class HermGram {
public:
    HermGram() = default;
    /// Throws std::invalid_argument naming the first entry violating g_ji = conj(g_ij).
    explicit HermGram(Matrix<EisensteinInt> g);

    std::size_t rank() const { return g_.rows(); }
    const Matrix<EisensteinInt>& matrix() const { return g_; }
    const EisensteinInt& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }

    friend bool operator==(const HermGram&, const HermGram&) = default;

private:
    Matrix<EisensteinInt> g_;
};

using HermVector = std::vector<EisensteinInt>;
using ZVector = std::vector<mpz_class>;

/// Counts of positive, zero and negative eigenvalues.
struct Inertia {
    std::size_t positive = 0;
    std::size_t radical = 0;
    std::size_t negative = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::ostream& operator<<(std::ostream& os, const Inertia& s);

HermGram direct_sum(const HermGram& a, const HermGram& b);
ZGram direct_sum(const ZGram& a, const ZGram& b);

/// Standard basis vector e_i of length n.
HermVector unit_vector(std::size_t n, std::size_t i);

}  // namespace eislat
