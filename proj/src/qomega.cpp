#include "eislat/qomega.hpp"

#include <sstream>
#include <stdexcept>

namespace eislat {

QOmega QOmega::inverse() const {
    const mpq_class n = norm();
    if (n == 0) throw std::domain_error("inverse of zero in Q(w)");
    const QOmega c = conj();
    return {c.a_ / n, c.b_ / n};
}

QOmega& QOmega::operator/=(const QOmega& o) { return *this *= o.inverse(); }

EisensteinInt QOmega::to_eisenstein() const {
    if (!is_integral()) throw std::domain_error(to_string() + " is not an Eisenstein integer");
    return {a_.get_num(), b_.get_num()};
}

mpz_class QOmega::denominator() const {
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
    return d;
}

std::string QOmega::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_.get_str();
    } else {
        os << "(" << a_.get_str() << ")+(" << b_.get_str() << ")w";
    }
    return os.str();
}

}  // namespace eislat
