#pragma once

#include <cstdint>

#include "qident/series.hpp"

namespace qident {

/// The three nested summation shapes. All share the same right side
/// 1 / ((q^m; q^m)_n (-bq; q)_{mn}); they differ in how the denominator
/// blocks overlap and in the collapsing conventions:
///
///   L1: block j (variable a_{j+1}) has factors 1 + b q^{j(m+1)+k'+a_{j+1}},
///       k' = 1..m+1. Adjacent blocks never overlap; no collapsing.
///   L2: factors 1 + b q^{jm+k'+a_{j+1}}, k' = 1..m+1. When a_i = a_{i-1}
///       the top factor of a_{i-1}'s block coincides with the bottom factor
///       of a_i's block; the shared factor occurs just once in the product.
///   L3: factors 1 + b q^{jm+k'+a_{j+1}}, k' = 0..m, with the same
///       adjacent-block collapse, and additionally the constant factor
///       1 + b (block 0, k' = 0) is omitted whenever a_1 = 0.
enum class SumVariant { L1, L2, L3 };

/// Options for nested_sum. `base` applies the substitution q -> q^base to
/// the whole identity while b stays a monomial in plain q (this is how the
/// downstream specializations such as "q replaced with q^2, b = 1/q" are
/// expressed; it also makes negative b-exponents admissible when every
/// substituted factor exponent stays >= 1). The two rule switches exist as
/// negative-control hooks for the tests.
struct SumOptions {
    std::int64_t base = 1;
    bool adjacent_dedup = true;
    bool l3_zero_rule = true;
    std::int64_t tuple_budget = 5'000'000;
};

/// Brute-force evaluation of the variant's sum over all tuples
/// 0 <= a_1 <= ... <= a_n whose numerator exponent base*m*sum(a) can still
/// reach below `order` (tuples beyond contribute nothing at this order).
/// n = 0 returns 1. Throws TupleBudgetExceeded past options.tuple_budget
/// and NegativeExponent / NonUnitConstantTerm for inadmissible b.
QSeries nested_sum(SumVariant variant, std::int64_t n, std::int64_t m, const SignedMonomial& b,
                   std::int64_t order, const SumOptions& options = {});

/// Evaluation through the proofs' telescoping route: the innermost sum is
/// replaced by its closed form, the surviving factor range is merged with
/// the next block out (the ranges are contiguous at every step, which is
/// asserted), and the collected (1 - q^{pm}) prefactors are inverted at the
/// end. Must agree with nested_sum exactly to `order`.
QSeries telescope_eval(SumVariant variant, std::int64_t n, std::int64_t m,
                       const SignedMonomial& b, std::int64_t order, std::int64_t base = 1);

/// The shared closed form 1 / ((q^m; q^m)_n (-bq; q)_{mn}), under q -> q^base.
QSeries summation_rhs(std::int64_t n, std::int64_t m, const SignedMonomial& b,
                      std::int64_t order, std::int64_t base = 1);

} // namespace qident
