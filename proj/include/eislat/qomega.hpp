#pragma once

// The fraction field Q(w) of the Eisenstein integers.

#include "eislat/eisenstein.hpp"

#include <gmpxx.h>

#include <string>

namespace eislat {

class QOmega {
public:
    QOmega() = default;
    QOmega(long a) : a_(a) {}
    QOmega(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }
    QOmega(const EisensteinInt& x) : a_(x.a()), b_(x.b()) {}

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    QOmega conj() const { return {a_ - b_, -b_}; }
    mpq_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    QOmega operator-() const { return {-a_, -b_}; }
    QOmega& operator+=(const QOmega& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QOmega& operator-=(const QOmega& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QOmega& operator*=(const QOmega& o) {
        mpq_class bd = b_ * o.b_;
        mpq_class na = a_ * o.a_ - bd;
        mpq_class nb = a_ * o.b_ + b_ * o.a_ - bd;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QOmega& operator/=(const QOmega& o);
    friend QOmega operator+(QOmega x, const QOmega& y) { return x += y; }
    friend QOmega operator-(QOmega x, const QOmega& y) { return x -= y; }
    friend QOmega operator*(QOmega x, const QOmega& y) { return x *= y; }
    friend QOmega operator/(QOmega x, const QOmega& y) { return x /= y; }
    friend bool operator==(const QOmega& x, const QOmega& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    QOmega inverse() const;

    bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }
    /// Throws std::domain_error when not integral.
    EisensteinInt to_eisenstein() const;
    /// Least positive integer d with d * x integral.
    mpz_class denominator() const;

    std::string to_string() const;

private:
    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

}  // namespace eislat
