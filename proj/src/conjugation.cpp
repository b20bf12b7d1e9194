#include "qident/conjugation.hpp"

#include <algorithm>
#include <string>

namespace qident {

std::vector<std::int64_t> k_block_column_sums(const Partition& p, int k, int ncols) {
    if (k < 1) throw Error("block width k must be >= 1");
    if (ncols < 0) throw Error("column count must be >= 0");
    std::vector<std::int64_t> cols(static_cast<std::size_t>(ncols), 0);
    for (int x : p.parts()) {
        for (int j = 0; j < ncols; ++j) {
            std::int64_t cell = std::min<std::int64_t>(std::max<std::int64_t>(x - std::int64_t(j) * k, 0), k);
            if (cell == 0) break;
            cols[static_cast<std::size_t>(j)] += cell;
        }
    }
    return cols;
}

Partition k_block_conjugate(const Partition& p, int k) {
    if (k < 1) throw Error("block width k must be >= 1");
    if (p.empty()) return p;
    int ncols = static_cast<int>((p.parts().front() + std::int64_t(k) - 1) / k);
    auto cols = k_block_column_sums(p, k, ncols);
    std::vector<int> parts;
    parts.reserve(cols.size());
    for (std::int64_t c : cols)
        if (c > 0) parts.push_back(static_cast<int>(c));
    return Partition(std::move(parts));
}

Partition lemma1_forward(const Partition& p, const BlockConjugationParams& params,
                         int* dropped_columns) {
    const auto [k, r, n] = params;
    if (k < 1 || r < 1 || n < 1) throw Error("conjugation parameters must be >= 1");
    if (p.multiplicity(r) != n)
        throw MarkerMultiplicityMismatch("expected the part " + std::to_string(r) +
                                         " exactly " + std::to_string(n) + " times, found " +
                                         std::to_string(p.multiplicity(r)));
    std::vector<int> residual;
    residual.reserve(p.size());
    int skipped = 0;
    for (int x : p.parts()) {
        if (x == r && skipped < n) {
            ++skipped;
            continue;
        }
        if (x > static_cast<std::int64_t>(n) * k)
            throw ColumnOverflow("part " + std::to_string(x) + " exceeds the n*k = " +
                                 std::to_string(static_cast<std::int64_t>(n) * k) +
                                 " column capacity");
        residual.push_back(x);
    }
    auto cols = k_block_column_sums(Partition(std::move(residual)), k, n);
    if (dropped_columns) *dropped_columns = 0;
    std::vector<int> parts;
    parts.reserve(cols.size());
    for (std::int64_t c : cols) {
        if (c == 0) {
            if (dropped_columns) ++*dropped_columns;
            continue;
        }
        parts.push_back(static_cast<int>(c) + r);
    }
    return Partition(std::move(parts));
}

Partition lemma1_inverse(const Partition& p, const BlockConjugationParams& params) {
    const auto [k, r, n] = params;
    if (k < 1 || r < 1 || n < 1) throw Error("conjugation parameters must be >= 1");
    if (static_cast<int>(p.size()) != n)
        throw PartCountMismatch("expected exactly " + std::to_string(n) + " parts, found " +
                                std::to_string(p.size()));
    std::vector<int> stripped;
    stripped.reserve(p.size());
    for (int x : p.parts()) {
        if (x <= r)
            throw PartTooSmall("part " + std::to_string(x) + " is not larger than the marker " +
                               std::to_string(r));
        stripped.push_back(x - r);
    }
    Partition conj = k_block_conjugate(Partition(std::move(stripped)), k);
    std::vector<int> parts(conj.parts());
    parts.insert(parts.end(), static_cast<std::size_t>(n), r);
    return Partition(std::move(parts));
}

} // namespace qident
