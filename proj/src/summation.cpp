#include "qident/summation.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace qident {

namespace {

struct BlockShape {
    std::int64_t offset_step;  // block j starts at j * offset_step
    std::int64_t k_lo;         // factor indices k' = k_lo .. k_hi
    std::int64_t k_hi;
};

BlockShape block_shape(SumVariant v, std::int64_t m) {
    switch (v) {
        case SumVariant::L1: return {m + 1, 1, m + 1};
        case SumVariant::L2: return {m, 1, m + 1};
        case SumVariant::L3: return {m, 0, m};
    }
    throw Error("unknown sum variant");
}

void check_args(std::int64_t n, std::int64_t m, std::int64_t base) {
    if (n < 0) throw Error("nested sum needs n >= 0");
    if (m < 1) throw Error("nested sum needs m >= 1");
    if (base < 1) throw Error("nested sum needs base >= 1");
}

// Inverse of a single denominator factor 1 + sign(b) q^{base*E + expo(b)},
// memoized per substituted exponent.
class FactorInverses {
public:
    FactorInverses(const SignedMonomial& b, std::int64_t base, std::int64_t order)
        : b_(b), base_(base), order_(order) {}

    // factor inverse truncated to `cap`
    QSeries get(std::int64_t raw_expo, std::int64_t cap) {
        std::int64_t e = base_ * raw_expo + b_.expo();
        if (e < 0)
            throw NegativeExponent("denominator factor exponent " + std::to_string(e) +
                                   " is negative");
        auto it = cache_.find(e);
        if (it == cache_.end()) {
            SeriesBuilder f(order_);
            f.add(1, 0);
            f.add(Int(b_.sign()), e);
            it = cache_.emplace(e, series_invert(f.take())).first;
        }
        return it->second.truncated(std::min(cap, order_));
    }

private:
    SignedMonomial b_;
    std::int64_t base_;
    std::int64_t order_;
    std::map<std::int64_t, QSeries> cache_;
};

} // namespace

QSeries nested_sum(SumVariant variant, std::int64_t n, std::int64_t m, const SignedMonomial& b,
                   std::int64_t order, const SumOptions& options) {
    check_args(n, m, options.base);
    if (n == 0) return QSeries::one(order);

    const BlockShape shape = block_shape(variant, m);
    const std::int64_t step = options.base * m;  // numerator exponent per unit of a_i
    FactorInverses inverses(b, options.base, order);

    SeriesBuilder acc(order);
    std::int64_t tuples = 0;

    // Depth-first over a_1 <= ... <= a_n, sharing the partial denominator
    // product across tuples with a common prefix. `partial` is maintained at
    // the residual order (order - numerator exponent so far) and shifted into
    // place at the leaves.
    auto rec = [&](auto&& self, std::int64_t depth, std::int64_t a_prev, const QSeries& partial,
                   std::int64_t num_exp) -> void {
        if (depth > n) {
            if (++tuples > options.tuple_budget)
                throw TupleBudgetExceeded("nested sum exceeded the tuple budget of " +
                                          std::to_string(options.tuple_budget));
            acc.add(partial, num_exp);
            return;
        }
        for (std::int64_t a = a_prev; num_exp + step * a < order; ++a) {
            const std::int64_t next_exp = num_exp + step * a;
            const std::int64_t cap = order - next_exp;
            QSeries prod = partial.truncated(cap);
            std::int64_t k_from = shape.k_lo;
            if (options.adjacent_dedup && variant != SumVariant::L1 && depth >= 2 && a == a_prev)
                ++k_from;  // shared factor already present in the block one level up
            if (options.l3_zero_rule && variant == SumVariant::L3 && depth == 1 && a == 0)
                k_from = std::max(k_from, std::int64_t{1});  // 1 + b never appears
            for (std::int64_t kk = k_from; kk <= shape.k_hi; ++kk) {
                std::int64_t raw = (depth - 1) * shape.offset_step + kk + a;
                prod = series_mul_upto(prod, inverses.get(raw, cap), cap);
            }
            self(self, depth + 1, a, prod, next_exp);
        }
    };
    rec(rec, 1, 0, QSeries::one(order), 0);
    return acc.take();
}

QSeries telescope_eval(SumVariant variant, std::int64_t n, std::int64_t m,
                       const SignedMonomial& b, std::int64_t order, std::int64_t base) {
    check_args(n, m, base);
    if (n == 0) return QSeries::one(order);

    const BlockShape shape = block_shape(variant, m);

    // Inherited contiguous factor range [lo, hi] (absolute exponents, as a
    // function of the current variable), empty at the innermost level.
    std::int64_t lo = 0, hi = -1;
    std::vector<std::int64_t> geometric;  // collected exponents pm of (1 - q^{pm}) factors

    for (std::int64_t level = n; level >= 1; --level) {
        const std::int64_t off = (level - 1) * shape.offset_step;
        const std::int64_t own_lo = off + shape.k_lo;
        const std::int64_t own_hi = off + shape.k_hi;
        if (hi >= lo && lo != own_hi + 1)
            throw Error("telescoping merge is not contiguous (internal error)");
        lo = own_lo;
        if (hi < lo) hi = own_hi;

        const std::int64_t p = n - level + 1;
        if (hi - lo != p * m)
            throw Error("telescoping range has unexpected width (internal error)");
        geometric.push_back(p * m);
        // Closed form of the level sum: the unprimed shape drops the top
        // factor of the merged range, the primed/double-primed shapes drop
        // the bottom one. L2's outermost sum is unprimed (a_1 has no
        // predecessor), so the last level reverts to the L1 form; L3's
        // outermost sum still drops the bottom via the a_1 = 0 rule.
        if (variant == SumVariant::L1 || (variant == SumVariant::L2 && level == 1))
            --hi;
        else
            ++lo;
    }

    // After the outermost sum (conceptually a_0 = 0) the surviving factors
    // sit at absolute exponents lo..hi; assemble factor by factor.
    QSeries acc = QSeries::one(order);
    for (std::int64_t e : geometric) {
        SeriesBuilder f(order);
        f.add(1, 0);
        f.add(-1, base * e);
        acc = acc * series_invert(f.take());
    }
    if (!b.is_zero()) {
        for (std::int64_t raw = lo; raw <= hi; ++raw) {
            std::int64_t e = base * raw + b.expo();
            if (e < 0)
                throw NegativeExponent("denominator factor exponent " + std::to_string(e) +
                                       " is negative");
            SeriesBuilder f(order);
            f.add(1, 0);
            f.add(Int(b.sign()), e);
            acc = acc * series_invert(f.take());
        }
    }
    return acc;
}

QSeries summation_rhs(std::int64_t n, std::int64_t m, const SignedMonomial& b,
                      std::int64_t order, std::int64_t base) {
    check_args(n, m, base);
    QSeries qm = poch_finite(SignedMonomial::q_power(+1, base * m), base * m, n, order);
    QSeries bq = poch_finite(b.negated().shifted(base), base, m * n, order);
    return series_invert(qm * bq);
}

} // namespace qident
