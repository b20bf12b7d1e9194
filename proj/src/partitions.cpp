#include "qident/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace qident {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw Error("partition parts must be positive, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

std::int64_t Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

int Partition::multiplicity(int v) const noexcept {
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), v, std::greater<int>());
    return static_cast<int>(hi - lo);
}

bool Partition::contains(int v) const noexcept {
    return std::binary_search(parts_.begin(), parts_.end(), v, std::greater<int>());
}

std::int64_t enumeration_ceiling() {
    static const std::int64_t ceiling = [] {
        if (const char* env = std::getenv("QPARTITION_CEILING")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::int64_t>(v);
        }
        return std::int64_t{120};
    }();
    return ceiling;
}

namespace {

void check_ceiling(std::int64_t m) {
    if (m < 0) throw Error("partition weight must be >= 0");
    if (m > enumeration_ceiling())
        throw CeilingExceeded("enumeration of weight " + std::to_string(m) +
                              " exceeds ceiling " + std::to_string(enumeration_ceiling()) +
                              " (override with QPARTITION_CEILING)");
}

struct Rec {
    std::vector<int> stack;
    const PartitionVisitor& visit;

    void emit() { visit(Partition(std::vector<int>(stack))); }

    void all(std::int64_t rem, int max_part) {
        if (rem == 0) {
            emit();
            return;
        }
        for (int p = static_cast<int>(std::min<std::int64_t>(max_part, rem)); p >= 1; --p) {
            stack.push_back(p);
            all(rem - p, p);
            stack.pop_back();
        }
    }

    void distinct(std::int64_t rem, int max_part, int min_part) {
        if (rem == 0) {
            emit();
            return;
        }
        int hi = static_cast<int>(std::min<std::int64_t>(max_part, rem));
        for (int p = hi; p >= min_part; --p) {
            // parts below p are distinct and < p, so at most p(p-1)/2 - ... remains reachable
            std::int64_t reach = (static_cast<std::int64_t>(p) * (p - 1) -
                                  static_cast<std::int64_t>(min_part) * (min_part - 1)) / 2;
            if (rem - p > reach) break;
            stack.push_back(p);
            distinct(rem - p, p - 1, min_part);
            stack.pop_back();
        }
    }

    void from_values(std::int64_t rem, const std::vector<int>& values, std::size_t idx,
                     std::int64_t budget) {
        if (rem == 0) {
            emit();
            return;
        }
        if (budget == 0) return;
        for (std::size_t i = idx; i < values.size(); ++i) {
            if (values[i] > rem) continue;
            stack.push_back(values[i]);
            from_values(rem - values[i], values, i, budget < 0 ? budget : budget - 1);
            stack.pop_back();
        }
    }

    void distinct_from_values(std::int64_t rem, const std::vector<int>& values, std::size_t idx,
                              const std::vector<std::int64_t>& suffix) {
        if (rem == 0) {
            emit();
            return;
        }
        for (std::size_t i = idx; i < values.size(); ++i) {
            if (suffix[i] < rem) break;  // even taking everything left falls short
            if (values[i] > rem) continue;
            stack.push_back(values[i]);
            distinct_from_values(rem - values[i], values, i + 1, suffix);
            stack.pop_back();
        }
    }
};

} // namespace

void for_each_partition(std::int64_t m, const PartitionVisitor& visit) {
    check_ceiling(m);
    Rec r{{}, visit};
    r.all(m, static_cast<int>(std::max<std::int64_t>(m, 1)));
}

std::vector<Partition> enumerate_partitions(std::int64_t m) {
    std::vector<Partition> out;
    for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
    return out;
}

void for_each_distinct_partition(std::int64_t m, int min_part, const PartitionVisitor& visit) {
    check_ceiling(m);
    if (min_part < 1) min_part = 1;
    Rec r{{}, visit};
    r.distinct(m, static_cast<int>(std::max<std::int64_t>(m, 1)), min_part);
}

void for_each_partition_from_values(std::int64_t m, const std::vector<int>& values,
                                    std::int64_t max_parts, const PartitionVisitor& visit) {
    check_ceiling(m);
    Rec r{{}, visit};
    r.from_values(m, values, 0, max_parts);
}

void for_each_distinct_partition_from_values(std::int64_t m, const std::vector<int>& values,
                                             const PartitionVisitor& visit) {
    check_ceiling(m);
    std::vector<std::int64_t> suffix(values.size() + 1, 0);
    for (std::size_t i = values.size(); i-- > 0;) suffix[i] = suffix[i + 1] + values[i];
    suffix.pop_back();
    Rec r{{}, visit};
    r.distinct_from_values(m, values, 0, suffix);
}

} // namespace qident
