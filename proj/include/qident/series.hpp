#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qident/errors.hpp"

namespace qident {

/// Exact arbitrary-precision integer coefficient type.
using Int = boost::multiprecision::cpp_int;

/// Truncated formal power series in q with exact integer coefficients.
///
/// Coefficients are guaranteed correct for every exponent e with
/// 0 <= e < order(); exponents at or beyond the order are undefined.
/// Arithmetic between series of different orders truncates the result to
/// the smaller order, so a result never claims more precision than its
/// weakest input. Stored form is sparse and canonical: no zero
/// coefficients, every stored exponent below the order.
///
/// Values are immutable in practice (all operations return new series),
/// so they may be shared freely across threads.
class QSeries {
public:
    /// The zero series, exact up to (not including) `order`.
    explicit QSeries(std::int64_t order);

    static QSeries zero(std::int64_t order) { return QSeries(order); }
    static QSeries one(std::int64_t order) { return monomial(1, 0, order); }

    /// c * q^e truncated at `order`; terms at or beyond the order are dropped.
    static QSeries monomial(Int c, std::int64_t e, std::int64_t order);

    std::int64_t order() const noexcept { return order_; }

    /// Coefficient of q^e. Throws InsufficientOrder for e >= order().
    const Int& coeff(std::int64_t e) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Sparse view: exponent -> nonzero coefficient, ascending exponent.
    const std::map<std::int64_t, Int>& terms() const noexcept { return coeffs_; }

    /// Copy truncated to a smaller (or equal) order.
    QSeries truncated(std::int64_t new_order) const;

    /// Multiply by q^e (e >= 0): exponents shift up, order grows by e.
    /// Known coefficients stay known, so the result has order() + e.
    QSeries shifted(std::int64_t e) const;

    QSeries operator-() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    friend class SeriesBuilder;

private:
    std::map<std::int64_t, Int> coeffs_;
    std::int64_t order_;
};

/// Mutable accumulator for assembling a series term by term.
class SeriesBuilder {
public:
    explicit SeriesBuilder(std::int64_t order) : acc_(order) {}
    void add(const Int& c, std::int64_t e);
    void add(const QSeries& s, std::int64_t shift = 0);
    QSeries take();

private:
    QSeries acc_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);

/// Cauchy product truncated at min(min orders, cap). Used where the caller
/// knows the product will be shifted and precision past `cap` is wasted.
QSeries series_mul_upto(const QSeries& a, const QSeries& b, std::int64_t cap);

/// Multiplicative inverse to the series' own order.
/// Requires constant coefficient +1 or -1; throws NonUnitConstantTerm.
QSeries series_invert(const QSeries& a);

/// True iff all coefficients of exponents < upto agree exactly.
/// Throws InsufficientOrder if either operand is truncated below `upto`.
bool series_eq(const QSeries& a, const QSeries& b, std::int64_t upto);

/// Canonical rendering: terms ascending by exponent, `c*q^e` joined by
/// ` + ` / ` - `; the zero series renders as "0".
std::string to_string(const QSeries& s);

/// A parameter of the form sign * q^expo (sign +/-1), or the value 0.
/// Houses every specialization of the free parameters a, b, z: the engine
/// only ever substitutes signed monomials for them.
class SignedMonomial {
public:
    /// Default-constructs the ZERO value.
    SignedMonomial() : sign_(0), expo_(0) {}

    static SignedMonomial zero() { return SignedMonomial(0, 0); }
    /// sign must be +1 or -1; expo may be negative.
    static SignedMonomial q_power(int sign, std::int64_t expo);
    static SignedMonomial one() { return q_power(+1, 0); }

    bool is_zero() const noexcept { return sign_ == 0; }
    int sign() const noexcept { return sign_; }
    std::int64_t expo() const noexcept { return expo_; }

    /// -x (ZERO stays ZERO).
    SignedMonomial negated() const;
    /// x * q^dt (ZERO stays ZERO).
    SignedMonomial shifted(std::int64_t dt) const;
    /// x * y, with ZERO absorbing.
    SignedMonomial times(const SignedMonomial& y) const;
    /// x^n (n >= 0); x^0 = 1 even for ZERO.
    SignedMonomial pow(std::int64_t n) const;

    /// Materialize as a series; non-ZERO requires expo >= 0 (NegativeExponent).
    QSeries to_series(std::int64_t order) const;

    std::string to_string() const;

    bool operator==(const SignedMonomial&) const = default;

private:
    SignedMonomial(int sign, std::int64_t expo) : sign_(sign), expo_(expo) {}
    int sign_;
    std::int64_t expo_;
};

/// Finite q-Pochhammer symbol (x; q^step)_n = prod_{j=0}^{n-1} (1 - x q^{j*step}),
/// truncated at `order`. n = 0 or x = ZERO gives 1. For monomial x the
/// substituted q-exponents expo(x) + j*step must all be >= 0 (NegativeExponent).
QSeries poch_finite(const SignedMonomial& x, std::int64_t step, std::int64_t n,
                    std::int64_t order);

/// Infinite q-Pochhammer symbol (x; q^step)_infinity truncated at `order`.
/// Monomial x must have expo >= 1 so the product stabilizes
/// (NonConvergentProduct otherwise); x = ZERO gives 1.
QSeries poch_infinite(const SignedMonomial& x, std::int64_t step, std::int64_t order);

} // namespace qident
