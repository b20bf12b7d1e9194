#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "qident/errors.hpp"

namespace qident {

/// An integer partition: weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Normalizes (sorts descending); every part must be >= 1.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t weight() const noexcept;

    int multiplicity(int v) const noexcept;
    bool contains(int v) const noexcept;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on the descending part lists.
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
};

/// An ordered pair of partitions; either component may be empty.
struct Bipartition {
    Partition pi;
    Partition lambda;

    std::int64_t weight() const noexcept { return pi.weight() + lambda.weight(); }
    bool operator==(const Bipartition&) const = default;
    std::strong_ordering operator<=>(const Bipartition&) const = default;
};

/// Enumeration ceiling: QPARTITION_CEILING from the environment, default 120.
std::int64_t enumeration_ceiling();

/// All partitions of m in reverse-lexicographic (descending-lex) order.
/// Throws CeilingExceeded above the ceiling. m = 0 yields the empty partition.
std::vector<Partition> enumerate_partitions(std::int64_t m);

using PartitionVisitor = std::function<void(const Partition&)>;

/// Visit every partition of m (same order as enumerate_partitions) without
/// materializing the full list. Subject to the same ceiling.
void for_each_partition(std::int64_t m, const PartitionVisitor& visit);

/// Visit partitions of m into distinct parts, each >= min_part, descending-lex.
void for_each_distinct_partition(std::int64_t m, int min_part, const PartitionVisitor& visit);

/// Visit partitions of m whose parts come from `values` (repetition allowed),
/// descending-lex. `values` must be strictly decreasing positive integers.
/// max_parts < 0 means unbounded.
void for_each_partition_from_values(std::int64_t m, const std::vector<int>& values,
                                    std::int64_t max_parts, const PartitionVisitor& visit);

/// Visit partitions of m into distinct parts drawn from `values`
/// (strictly decreasing), descending-lex.
void for_each_distinct_partition_from_values(std::int64_t m, const std::vector<int>& values,
                                             const PartitionVisitor& visit);

} // namespace qident
