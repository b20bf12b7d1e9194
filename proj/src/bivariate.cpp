#include "qident/bivariate.hpp"

#include <algorithm>

namespace qident {

BivariateSeries::BivariateSeries(std::int64_t z_order, std::int64_t q_order)
    : q_order_(q_order) {
    if (z_order < 1) throw Error("BivariateSeries z-order must be >= 1");
    if (q_order < 1) throw Error("BivariateSeries q-order must be >= 1");
    z_coeffs_.assign(static_cast<std::size_t>(z_order), QSeries::zero(q_order));
}

BivariateSeries BivariateSeries::one(std::int64_t z_order, std::int64_t q_order) {
    BivariateSeries b(z_order, q_order);
    b.z_coeffs_[0] = QSeries::one(q_order);
    return b;
}

const QSeries& BivariateSeries::z_coeff(std::int64_t d) const {
    if (d < 0 || d >= z_order())
        throw InsufficientOrder("z-degree " + std::to_string(d) + " out of range");
    return z_coeffs_[static_cast<std::size_t>(d)];
}

void BivariateSeries::set_z_coeff(std::int64_t d, const QSeries& s) {
    if (d < 0 || d >= z_order())
        throw InsufficientOrder("z-degree " + std::to_string(d) + " out of range");
    if (s.order() < q_order_)
        throw InsufficientOrder("z-coefficient must carry q-order >= " + std::to_string(q_order_));
    z_coeffs_[static_cast<std::size_t>(d)] = s.truncated(q_order_);
}

BivariateSeries BivariateSeries::times_linear(const SignedMonomial& w) const {
    BivariateSeries r(z_order(), q_order_);
    if (w.is_zero()) {
        r.z_coeffs_ = z_coeffs_;
        return r;
    }
    QSeries wq = w.to_series(q_order_);
    for (std::int64_t d = 0; d < z_order(); ++d) {
        QSeries c = z_coeffs_[static_cast<std::size_t>(d)];
        if (d > 0) c = c + wq * z_coeffs_[static_cast<std::size_t>(d - 1)];
        r.z_coeffs_[static_cast<std::size_t>(d)] = std::move(c);
    }
    return r;
}

BivariateSeries BivariateSeries::divide_linear(const SignedMonomial& w) const {
    BivariateSeries r(z_order(), q_order_);
    if (w.is_zero()) {
        r.z_coeffs_ = z_coeffs_;
        return r;
    }
    QSeries wq = w.to_series(q_order_);
    for (std::int64_t d = 0; d < z_order(); ++d) {
        QSeries c = z_coeffs_[static_cast<std::size_t>(d)];
        if (d > 0) c = c - wq * r.z_coeffs_[static_cast<std::size_t>(d - 1)];
        r.z_coeffs_[static_cast<std::size_t>(d)] = std::move(c);
    }
    return r;
}

QSeries BivariateSeries::fold_z(std::int64_t u) const {
    if (u < 1) throw Error("fold_z needs u >= 1");
    std::int64_t ord = std::min(q_order_, u * z_order());
    SeriesBuilder b(ord);
    for (std::int64_t d = 0; d < z_order(); ++d)
        b.add(z_coeffs_[static_cast<std::size_t>(d)], u * d);
    return b.take();
}

BivariateSeries bv_mul(const BivariateSeries& a, const BivariateSeries& b) {
    std::int64_t zm = std::min(a.z_order(), b.z_order());
    std::int64_t qm = std::min(a.q_order(), b.q_order());
    BivariateSeries r(zm, qm);
    for (std::int64_t d = 0; d < zm; ++d) {
        QSeries acc = QSeries::zero(qm);
        for (std::int64_t i = 0; i <= d; ++i)
            acc = acc + a.z_coeff(i) * b.z_coeff(d - i);
        r.set_z_coeff(d, acc);
    }
    return r;
}

bool bv_eq(const BivariateSeries& a, const BivariateSeries& b, std::int64_t q_upto) {
    std::int64_t zm = std::min(a.z_order(), b.z_order());
    for (std::int64_t d = 0; d < zm; ++d)
        if (!series_eq(a.z_coeff(d), b.z_coeff(d), q_upto)) return false;
    return true;
}

BivariateSeries qbinomial_lhs(const SignedMonomial& a, std::int64_t z_order,
                              std::int64_t q_order, std::int64_t step) {
    BivariateSeries r(z_order, q_order);
    const SignedMonomial q_step = SignedMonomial::q_power(+1, step);
    for (std::int64_t n = 0; n < z_order; ++n) {
        QSeries num = poch_finite(a, step, n, q_order);
        QSeries den = poch_finite(q_step, step, n, q_order);
        r.set_z_coeff(n, num * series_invert(den));
    }
    return r;
}

BivariateSeries qbinomial_rhs(const SignedMonomial& a, std::int64_t z_order,
                              std::int64_t q_order, std::int64_t step) {
    BivariateSeries r = BivariateSeries::one(z_order, q_order);
    if (!a.is_zero()) {
        for (std::int64_t j = 0; a.expo() + j * step < q_order; ++j) {
            if (a.expo() + j * step < 0)
                throw NegativeExponent("q-binomial numerator factor has negative exponent");
            // factor (1 - a q^{j*step} z)
            r = r.times_linear(a.negated().shifted(j * step));
        }
    }
    for (std::int64_t j = 0; j * step < q_order; ++j) {
        // factor (1 - q^{j*step} z)
        r = r.divide_linear(SignedMonomial::q_power(-1, j * step));
    }
    return r;
}

} // namespace qident
