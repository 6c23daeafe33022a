#pragma once

// Complex reflections, unitary transvections, words in them, orders, and
// finite reflection groups acting on Hermitian E-lattices.

#include "eislat/hermitian.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eislat {

using Ambient = std::shared_ptr<const HermGram>;

Ambient make_ambient(HermGram g);

/// Matrix over E acting on the left of column vectors of an ambient lattice.
class GroupElt {
public:
    /// Throws std::invalid_argument unless m is square of the ambient rank.
    GroupElt(Ambient ambient, Matrix<EisensteinInt> m);
    static GroupElt identity(Ambient ambient);

    const Matrix<EisensteinInt>& matrix() const { return m_; }
    const HermGram& ambient() const { return *ambient_; }
    const Ambient& ambient_ptr() const { return ambient_; }
    std::size_t dim() const { return m_.rows(); }

    bool is_identity() const;
    bool same_ambient(const GroupElt& o) const;

    /// Throws std::invalid_argument when the ambients differ.
    GroupElt operator*(const GroupElt& o) const;
    GroupElt pow(unsigned long k) const;
    HermVector apply(const HermVector& v) const { return m_ * v; }

    friend bool operator==(const GroupElt& x, const GroupElt& y) { return x.m_ == y.m_; }

private:
    Ambient ambient_;
    Matrix<EisensteinInt> m_;
};

/// x -> x - (1 - zeta) <x, r> / <r, r> r.
/// Throws std::invalid_argument if <r, r> = 0 or an entry leaves E.
GroupElt reflection(const Ambient& g, const HermVector& r, SixthRoot zeta);

/// x -> x - (<x, xi> / theta) xi.
/// Throws std::invalid_argument if xi is not isotropic or an entry leaves E.
GroupElt transvection(const Ambient& g, const HermVector& xi);

/// Ordered product; the identity for an empty list.
GroupElt word_eval(const Ambient& g, const std::vector<GroupElt>& factors);

struct OrderResult {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    unsigned long value = 0;  // the order, or the cap for Unknown

    static OrderResult finite(unsigned long k) { return {Kind::Finite, k}; }
    static OrderResult infinite() { return {Kind::Infinite, 0}; }
    static OrderResult unknown(unsigned long cap) { return {Kind::Unknown, cap}; }
    std::string to_string() const;
    friend bool operator==(const OrderResult&, const OrderResult&) = default;
};

/// Smallest k <= cap with M^k = I; Infinite when M != I and M - I is nilpotent.
OrderResult order(const GroupElt& m, unsigned long cap = 10000);

/// The unit u with M = u I, or with (M - u I) mapping into the radical when
/// modulo_radical is set.
std::optional<SixthRoot> scalar_of(const GroupElt& m, bool modulo_radical);

/// Smallest k with M^k scalar (optionally modulo the radical).
OrderResult projective_order(const GroupElt& m, bool modulo_radical, unsigned long cap = 10000);

class NotScalar : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (a_1 ... a_n)^(n+1) on chain(n), a_i the w-reflection in e_i.
GroupElt central_word(int n);
/// Throws std::invalid_argument for a degenerate chain and NotScalar otherwise.
SixthRoot central_word_scalar(int n);

enum class BraidRelation { Braid, Commute, Neither };
std::string to_string(BraidRelation b);
BraidRelation braid_check(const GroupElt& a, const GroupElt& b);

/// w-reflections in the standard basis vectors.
std::vector<GroupElt> basis_triflections(const Ambient& g);

// Finite groups

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// EISLAT_CLOSURE_CAP if set to a positive integer, else 2,000,000.
std::size_t default_closure_cap();

/// Immutable element list of a finite matrix group, stored as packed 64-bit
/// coordinates.
class FiniteGroup {
public:
    FiniteGroup(Ambient ambient, std::size_t dim, std::vector<std::int64_t> packed);

    std::size_t size() const { return dim_ == 0 ? 0 : packed_.size() / (2 * dim_ * dim_); }
    std::size_t dim() const { return dim_; }
    const Ambient& ambient_ptr() const { return ambient_; }
    GroupElt element(std::size_t i) const;
    const std::int64_t* raw(std::size_t i) const { return packed_.data() + i * 2 * dim_ * dim_; }

private:
    Ambient ambient_;
    std::size_t dim_;
    std::vector<std::int64_t> packed_;
};

/// Breadth-first closure under right multiplication by the generators.
/// Throws CapExceeded past `cap` elements and std::overflow_error if an entry
/// leaves the 64-bit range.
FiniteGroup group_closure(const std::vector<GroupElt>& gens, std::size_t cap = default_closure_cap());

struct ReflectionInfo {
    HermVector root;  // primitive, first nonzero entry canonical
    SixthRoot rotation;
    EisensteinInt root_norm;
};

/// Every element fixing a hyperplane pointwise.
std::vector<ReflectionInfo> reflections_in(const FiniteGroup& g);

/// Distinct mirror roots among the reflections.
std::vector<HermVector> mirror_roots(const std::vector<ReflectionInfo>& refl);

/// True iff every non-identity element's fixed space lies in some mirror.
/// Throws std::invalid_argument for an ambient that is not positive-definite.
bool free_action_check(const FiniteGroup& g);

/// v scaled to be primitive with its first nonzero entry canonical.
HermVector line_normal_form(const HermVector& v);

// Reduction modulo theta

Matrix<F3> f3_reduce(const GroupElt& m);
Matrix<F3> f3_reduce(const Matrix<EisensteinInt>& m);
/// (v, w) = (1/theta) <v, w> mod theta. Throws std::invalid_argument unless in_theta_dual.
Matrix<F3> symplectic_gram(const HermGram& g);
/// x -> x + (x, v) v for the pairing a.
Matrix<F3> symplectic_transvection(const Matrix<F3>& a, const std::vector<F3>& v);

// Transvection words for A5 and D4 configurations

/// Chain of n = signs.size() + 1 roots with <r_i, r_{i+1}> = signs[i] theta.
HermGram signed_chain(const std::vector<int>& signs);

/// r1 - theta r2 - 2 r3 + theta r4 + r5, zero-padded to `dim`.
HermVector a5_xi(std::size_t dim);

struct A5Pattern {
    std::array<int, 4> signs{};
    bool isotropic = false;
    bool forward_matches = false;   // (a1 a2 a3 a4 a5)^6
    bool reversed_matches = false;  // (a5 a4 a3 a2 a1)^6
    bool nontrivial = false;        // the transvection is not the identity
};

/// All 16 sign patterns on the first four bonds of a rank-6 chain whose last
/// bond is +theta.
std::vector<A5Pattern> a5_sign_search();

/// Star with centre r' = e4 and <r_i, r'> = theta for i = 1, 2, 3.
HermGram d4_star();
/// d4_star plus r5 with <r1, r5> = theta.
HermGram d4_extended();
/// r1 + r2 + r3 - theta r', zero-padded to `dim`.
HermVector d4_xi(std::size_t dim);
/// (a1 a2 a3 b)^3 (or (b a3 a2 a1)^3 when reversed) on an ambient containing the star.
GroupElt d4_word(const Ambient& g, bool reversed);

}  // namespace eislat
