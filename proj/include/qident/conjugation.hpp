#pragma once

#include "qident/partitions.hpp"

namespace qident {

/// Parameters of the marker-strip conjugation of Lemma-1 type:
/// block width k, marker part size r, column count n.
struct BlockConjugationParams {
    int k = 1;
    int r = 1;
    int n = 1;
};

/// Read the Ferrers diagram in vertical strips of width k: strip j becomes
/// the part sum_x clamp(x - (j-1)k, 0, k) over the parts x. k = 1 is the
/// classical conjugate. Weight is preserved; the empty partition maps to
/// itself.
Partition k_block_conjugate(const Partition& p, int k);

/// Column sums c_1 >= ... >= c_ncols of the width-k strip reading, taking
/// exactly `ncols` strips (entries may be zero for out-of-class inputs).
std::vector<std::int64_t> k_block_column_sums(const Partition& p, int k, int ncols);

/// Forward map of the Lemma-1 bijection: remove the n marker parts of size
/// r, distribute one r to the bottom of each of the n width-k columns, then
/// read columns. Output parts are c_j + r.
///
/// Preconditions: part r occurs exactly n times (MarkerMultiplicityMismatch)
/// and every remaining part is <= n*k (ColumnOverflow). Columns that come
/// out empty (possible only for inputs outside the intended classes) are
/// dropped and reported through `dropped_columns` when given.
Partition lemma1_forward(const Partition& p, const BlockConjugationParams& params,
                         int* dropped_columns = nullptr);

/// Inverse map: strip one r from each of the exactly n parts
/// (PartCountMismatch / PartTooSmall), k-block conjugate the rest, and add
/// the n markers back.
Partition lemma1_inverse(const Partition& p, const BlockConjugationParams& params);

} // namespace qident
