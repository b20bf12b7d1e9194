#pragma once

#include <cstdint>
#include <vector>

#include "qident/series.hpp"

namespace qident {

/// Truncated series in a second formal variable z whose coefficients are
/// QSeries in q: sum_{d < z_order} C_d(q) z^d with every C_d exact to q_order.
/// Truncation is two-level (z_order in z, q_order in q) rather than
/// total-degree, so substituting z = q^u is a clean fold of z-degrees into
/// q-exponents.
class BivariateSeries {
public:
    BivariateSeries(std::int64_t z_order, std::int64_t q_order);

    static BivariateSeries one(std::int64_t z_order, std::int64_t q_order);

    std::int64_t z_order() const noexcept { return static_cast<std::int64_t>(z_coeffs_.size()); }
    std::int64_t q_order() const noexcept { return q_order_; }

    const QSeries& z_coeff(std::int64_t d) const;
    void set_z_coeff(std::int64_t d, const QSeries& s);

    /// Multiply by the linear factor (1 + w z), w a signed monomial in q.
    BivariateSeries times_linear(const SignedMonomial& w) const;

    /// Divide by the linear factor (1 + w z) by back-substitution in
    /// z-degree order: r_d = c_d - w r_{d-1}.
    BivariateSeries divide_linear(const SignedMonomial& w) const;

    /// Substitute z = q^u (u >= 1). Exact to min(q_order, u * z_order):
    /// z-degrees at or beyond z_order would contribute exponents >= u*z_order.
    QSeries fold_z(std::int64_t u) const;

private:
    std::vector<QSeries> z_coeffs_;
    std::int64_t q_order_;
};

/// Convolution in z truncated at the min z-order; inner products at min q-order.
BivariateSeries bv_mul(const BivariateSeries& a, const BivariateSeries& b);

/// Coefficient-by-coefficient equality over min z-order, each to `q_upto`.
bool bv_eq(const BivariateSeries& a, const BivariateSeries& b, std::int64_t q_upto);

/// Left side of the q-binomial theorem in base q^step:
/// z-degree-n coefficient is (a; q^step)_n / (q^step; q^step)_n.
BivariateSeries qbinomial_lhs(const SignedMonomial& a, std::int64_t z_order,
                              std::int64_t q_order, std::int64_t step = 1);

/// Right side (a z; q^step)_inf / (z; q^step)_inf, built factor by factor;
/// numerator factors with q-exponent >= q_order are omitted (they are 1 to
/// this order in every z-degree >= 1).
BivariateSeries qbinomial_rhs(const SignedMonomial& a, std::int64_t z_order,
                              std::int64_t q_order, std::int64_t step = 1);

} // namespace qident
