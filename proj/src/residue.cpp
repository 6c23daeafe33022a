#include "eislat/residue.hpp"

#include <numeric>
#include <stdexcept>

namespace eislat {

void WeightedHypersurface::validate() const {
    if (degree <= 0) throw std::invalid_argument("degree must be positive");
    for (const long w : weights)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    if (!character.empty() && character.size() != weights.size())
        throw std::invalid_argument("character length does not match the number of variables");
    if (mode == Mode::Monomial) {
        if (exponents.size() != weights.size())
            throw std::invalid_argument("monomial mode needs one exponent per variable");
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (exponents[i] < 2) throw std::invalid_argument("exponents must be at least 2");
            if (weights[i] * exponents[i] != degree)
                throw std::invalid_argument("weight times exponent must equal the degree for variable " +
                                            std::to_string(i + 1));
            if ((chi(i).exponent() * exponents[i]) % 6 != 0)
                throw std::invalid_argument("character does not preserve x" + std::to_string(i + 1) + "^m");
        }
    } else {
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (degree % weights[i] != 0)
                throw std::invalid_argument("generic mode needs every weight to divide the degree");
            if ((chi(i).exponent() * (degree / weights[i])) % 6 != 0)
                throw std::invalid_argument("character does not preserve a generic polynomial of the degree");
        }
    }
}

namespace {

void monomials_rec(const WeightedHypersurface& h, std::size_t pos, long remaining, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
    if (pos == h.weights.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const long cap = h.exponents[pos] - 2;
    for (long e = 0; e <= cap && e * h.weights[pos] <= remaining; ++e) {
        cur[pos] = e;
        monomials_rec(h, pos + 1, remaining - e * h.weights[pos], cur, out);
    }
    cur[pos] = 0;
}

// Truncated power series over Z[mu_6]: coeff[t][k] counts eps^k in degree t.
using Series = std::vector<EigenCounts>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
    Series c(len, EigenCounts{});
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
            for (int p = 0; p < 6; ++p) {
                if (a[i][p] == 0) continue;
                for (int q = 0; q < 6; ++q) c[i + j][(p + q) % 6] += a[i][p] * b[j][q];
            }
    return c;
}

}  // namespace

std::vector<std::vector<long>> monomial_basis(const WeightedHypersurface& h, long grade) {
    if (h.mode != WeightedHypersurface::Mode::Monomial) throw std::invalid_argument("monomial basis needs monomial mode");
    h.validate();
    std::vector<std::vector<long>> out;
    if (grade < 0) return out;
    std::vector<long> cur(h.weights.size(), 0);
    monomials_rec(h, 0, grade, cur, out);
    return out;
}

EigenCounts jacobian_characters(const WeightedHypersurface& h, long grade) {
    h.validate();
    EigenCounts out{};
    if (grade < 0) return out;
    if (h.mode == WeightedHypersurface::Mode::Monomial) {
        for (const auto& e : monomial_basis(h, grade)) {
            int k = 0;
            for (std::size_t i = 0; i < e.size(); ++i) k += h.chi(i).exponent() * static_cast<int>(e[i]);
            out[static_cast<std::size_t>(k % 6)] += 1;
        }
        return out;
    }
    // prod_i (1 - chi_i^{-1} t^{d - w_i}) / (1 - chi_i t^{w_i})
    const std::size_t len = static_cast<std::size_t>(grade) + 1;
    Series acc(len, EigenCounts{});
    acc[0][0] = 1;
    for (std::size_t i = 0; i < h.weights.size(); ++i) {
        const long w = h.weights[i];
        const int c = h.chi(i).exponent();
        Series geo(len, EigenCounts{});
        for (long k = 0; k * w < static_cast<long>(len); ++k) geo[static_cast<std::size_t>(k * w)][(c * k) % 6] += 1;
        Series num(len, EigenCounts{});
        num[0][0] = 1;
        const long shift = h.degree - w;
        if (shift < static_cast<long>(len)) num[static_cast<std::size_t>(shift)][(6 - c) % 6] -= 1;
        acc = series_mul(series_mul(acc, geo, len), num, len);
    }
    return acc[static_cast<std::size_t>(grade)];
}

long jacobian_dim(const WeightedHypersurface& h, long grade) {
    const EigenCounts c = jacobian_characters(h, grade);
    return std::accumulate(c.begin(), c.end(), 0L);
}

long residue_grade(const WeightedHypersurface& h, long q) {
    return (q + 1) * h.degree - std::accumulate(h.weights.begin(), h.weights.end(), 0L);
}

long hodge_piece_dim(const WeightedHypersurface& h, long q) {
    if (q < 0) throw std::invalid_argument("q must be nonnegative");
    return jacobian_dim(h, residue_grade(h, q));
}

EigenCounts eigen_hodge_dims(const WeightedHypersurface& h, long q) {
    if (q < 0) throw std::invalid_argument("q must be nonnegative");
    const EigenCounts a = jacobian_characters(h, residue_grade(h, q));
    int omega = 0;
    for (std::size_t i = 0; i < h.weights.size(); ++i) omega += h.chi(i).exponent();
    EigenCounts out{};
    for (int k = 0; k < 6; ++k) out[static_cast<std::size_t>((k + omega) % 6)] = a[static_cast<std::size_t>(k)];
    return out;
}

long eigen_hodge_dim(const WeightedHypersurface& h, long q, SixthRoot eigenvalue) {
    return eigen_hodge_dims(h, q)[static_cast<std::size_t>(eigenvalue.exponent())];
}

std::vector<HodgeRow> full_report(const WeightedHypersurface& h) {
    h.validate();
    std::vector<HodgeRow> rows;
    for (long q = 0; q <= h.dimension(); ++q) {
        HodgeRow r;
        r.q = q;
        r.grade = residue_grade(h, q);
        r.by_eigenvalue = eigen_hodge_dims(h, q);
        r.total = std::accumulate(r.by_eigenvalue.begin(), r.by_eigenvalue.end(), 0L);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace eislat
