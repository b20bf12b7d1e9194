#include "qident/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qident {

QSeries::QSeries(std::int64_t order) : order_(order) {
    if (order < 1)
        throw Error("QSeries order must be >= 1, got " + std::to_string(order));
}

QSeries QSeries::monomial(Int c, std::int64_t e, std::int64_t order) {
    QSeries s(order);
    if (e < 0)
        throw NegativeExponent("monomial exponent must be >= 0, got " + std::to_string(e));
    if (c != 0 && e < order)
        s.coeffs_.emplace(e, std::move(c));
    return s;
}

const Int& QSeries::coeff(std::int64_t e) const {
    if (e < 0 || e >= order_)
        throw InsufficientOrder("coefficient of q^" + std::to_string(e) +
                                " requested from a series of order " + std::to_string(order_));
    static const Int kZero = 0;
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? kZero : it->second;
}

QSeries QSeries::truncated(std::int64_t new_order) const {
    QSeries r(std::min(new_order, order_));
    for (const auto& [e, c] : coeffs_) {
        if (e >= r.order_) break;
        r.coeffs_.emplace(e, c);
    }
    return r;
}

QSeries QSeries::shifted(std::int64_t e) const {
    if (e < 0) throw NegativeExponent("shift exponent must be >= 0");
    QSeries r(order_ + e);
    for (const auto& [ei, c] : coeffs_) r.coeffs_.emplace(ei + e, c);
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(order_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order_, b.order_));
    for (const auto& [e, c] : a.coeffs_) {
        if (e >= r.order_) break;
        r.coeffs_.emplace(e, c);
    }
    for (const auto& [e, c] : b.coeffs_) {
        if (e >= r.order_) break;
        auto [it, inserted] = r.coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    return series_mul_upto(a, b, std::min(a.order_, b.order_));
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_mul_upto(const QSeries& a, const QSeries& b, std::int64_t cap) {
    std::int64_t ord = std::min({a.order(), b.order(), cap});
    if (ord < 1) ord = 1;
    std::vector<Int> acc(static_cast<std::size_t>(ord));
    for (const auto& [ea, ca] : a.terms()) {
        if (ea >= ord) break;
        for (const auto& [eb, cb] : b.terms()) {
            std::int64_t e = ea + eb;
            if (e >= ord) break;
            acc[static_cast<std::size_t>(e)] += ca * cb;
        }
    }
    SeriesBuilder out(ord);
    for (std::int64_t e = 0; e < ord; ++e)
        if (acc[static_cast<std::size_t>(e)] != 0) out.add(acc[static_cast<std::size_t>(e)], e);
    return out.take();
}

QSeries series_invert(const QSeries& a) {
    const std::int64_t ord = a.order();
    Int a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm("cannot invert series with constant term " + a0.str());

    // b_0 = a_0 and b_e = -a_0 * sum_{j>=1} a_j b_{e-j}, using a_0^2 = 1.
    std::vector<Int> b(static_cast<std::size_t>(ord));
    b[0] = a0;
    for (std::int64_t e = 1; e < ord; ++e) {
        Int s = 0;
        for (const auto& [j, aj] : a.terms()) {
            if (j == 0) continue;
            if (j > e) break;
            s += aj * b[static_cast<std::size_t>(e - j)];
        }
        b[static_cast<std::size_t>(e)] = -a0 * s;
    }
    SeriesBuilder out(ord);
    for (std::int64_t e = 0; e < ord; ++e)
        if (b[static_cast<std::size_t>(e)] != 0) out.add(b[static_cast<std::size_t>(e)], e);
    return out.take();
}

bool series_eq(const QSeries& a, const QSeries& b, std::int64_t upto) {
    if (a.order() < upto || b.order() < upto)
        throw InsufficientOrder("series_eq up to " + std::to_string(upto) +
                                " needs both operands at that order (have " +
                                std::to_string(a.order()) + ", " + std::to_string(b.order()) + ")");
    auto ia = a.terms().begin(), ib = b.terms().begin();
    const auto ea = a.terms().end(), eb = b.terms().end();
    while (ia != ea && ia->first < upto && ib != eb && ib->first < upto) {
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
    if (ia != ea && ia->first < upto) return false;
    if (ib != eb && ib->first < upto) return false;
    return true;
}

void SeriesBuilder::add(const Int& c, std::int64_t e) {
    if (c == 0 || e >= acc_.order_) return;
    if (e < 0) throw NegativeExponent("series term with negative exponent " + std::to_string(e));
    auto [it, inserted] = acc_.coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc_.coeffs_.erase(it);
    }
}

void SeriesBuilder::add(const QSeries& s, std::int64_t shift) {
    for (const auto& [e, c] : s.terms()) add(c, e + shift);
}

QSeries SeriesBuilder::take() { return std::move(acc_); }

std::string to_string(const QSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        const bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << "q^" << e;
        }
    }
    return os.str();
}

SignedMonomial SignedMonomial::q_power(int sign, std::int64_t expo) {
    if (sign != 1 && sign != -1)
        throw Error("SignedMonomial sign must be +1 or -1, got " + std::to_string(sign));
    return SignedMonomial(sign, expo);
}

SignedMonomial SignedMonomial::negated() const {
    return is_zero() ? *this : SignedMonomial(-sign_, expo_);
}

SignedMonomial SignedMonomial::shifted(std::int64_t dt) const {
    return is_zero() ? *this : SignedMonomial(sign_, expo_ + dt);
}

SignedMonomial SignedMonomial::times(const SignedMonomial& y) const {
    if (is_zero() || y.is_zero()) return zero();
    return SignedMonomial(sign_ * y.sign_, expo_ + y.expo_);
}

SignedMonomial SignedMonomial::pow(std::int64_t n) const {
    if (n < 0) throw Error("SignedMonomial::pow needs n >= 0");
    if (n == 0) return one();
    if (is_zero()) return zero();
    return SignedMonomial(n % 2 == 0 ? 1 : sign_, expo_ * n);
}

QSeries SignedMonomial::to_series(std::int64_t order) const {
    if (is_zero()) return QSeries::zero(order);
    if (expo_ < 0)
        throw NegativeExponent("cannot materialize q^" + std::to_string(expo_) + " as a series");
    return QSeries::monomial(sign_, expo_, order);
}

std::string SignedMonomial::to_string() const {
    if (is_zero()) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    if (expo_ == 0) return s + "1";
    return s + "q^" + std::to_string(expo_);
}

namespace {

// 1 - x * q^e as a series (x a non-ZERO monomial), rejecting negative exponents.
QSeries one_minus_term(const SignedMonomial& x, std::int64_t e, std::int64_t order) {
    std::int64_t expo = x.expo() + e;
    if (expo < 0)
        throw NegativeExponent("Pochhammer factor exponent " + std::to_string(expo) + " is negative");
    SeriesBuilder b(order);
    b.add(1, 0);
    b.add(Int(-x.sign()), expo);
    return b.take();
}

} // namespace

QSeries poch_finite(const SignedMonomial& x, std::int64_t step, std::int64_t n,
                    std::int64_t order) {
    if (step < 1) throw Error("Pochhammer step must be >= 1");
    if (n < 0) throw Error("Pochhammer length must be >= 0");
    QSeries acc = QSeries::one(order);
    if (n == 0 || x.is_zero()) return acc;
    for (std::int64_t j = 0; j < n; ++j) {
        if (x.expo() + j * step >= order) break;  // remaining factors are 1 to this order
        acc = acc * one_minus_term(x, j * step, order);
    }
    return acc;
}

QSeries poch_infinite(const SignedMonomial& x, std::int64_t step, std::int64_t order) {
    if (step < 1) throw Error("Pochhammer step must be >= 1");
    QSeries acc = QSeries::one(order);
    if (x.is_zero()) return acc;
    if (x.expo() < 1)
        throw NonConvergentProduct("(x; q^k)_infinity requires x = sign*q^t with t >= 1, got t = " +
                                   std::to_string(x.expo()));
    for (std::int64_t j = 0; x.expo() + j * step < order; ++j)
        acc = acc * one_minus_term(x, j * step, order);
    return acc;
}

} // namespace qident
