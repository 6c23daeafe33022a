#include "eislat/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace eislat {

ZGram::ZGram(Matrix<mpz_class> g) : g_(std::move(g)) {
    if (!g_.is_square()) throw std::invalid_argument("Z-Gram matrix must be square");
    for (std::size_t i = 0; i < g_.rows(); ++i)
        for (std::size_t j = i + 1; j < g_.cols(); ++j)
            if (g_(i, j) != g_(j, i)) {
                std::ostringstream os;
                os << "Z-Gram matrix is not symmetric at (" << i << "," << j << ")";
                throw std::invalid_argument(os.str());
            }
}

HermGram::HermGram(Matrix<EisensteinInt> g) : g_(std::move(g)) {
    if (!g_.is_square()) throw std::invalid_argument("Hermitian Gram matrix must be square");
    for (std::size_t i = 0; i < g_.rows(); ++i)
        for (std::size_t j = i; j < g_.cols(); ++j)
            if (!(g_(j, i) == g_(i, j).conj())) {
                std::ostringstream os;
                os << "Hermitian Gram matrix is not conjugate-symmetric at (" << i << "," << j
                   << "): entry (" << j << "," << i << ") is " << g_(j, i) << ", expected conj(" << g_(i, j)
                   << ") = " << g_(i, j).conj();
                throw std::invalid_argument(os.str());
            }
}

std::ostream& operator<<(std::ostream& os, const Inertia& s) {
    return os << "(" << s.positive << "," << s.radical << "," << s.negative << ")";
}

HermGram direct_sum(const HermGram& a, const HermGram& b) {
    return HermGram(direct_sum(a.matrix(), b.matrix()));
}

ZGram direct_sum(const ZGram& a, const ZGram& b) { return ZGram(direct_sum(a.matrix(), b.matrix())); }

HermVector unit_vector(std::size_t n, std::size_t i) {
    HermVector v(n);
    v.at(i) = 1;
    return v;
}

}  // namespace eislat
