#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qident/partitions.hpp"
#include "qident/series.hpp"

namespace qident {

/// Every constrained partition / bipartition class the engine knows about.
///
/// The LEMMA1 / T2 / T3 / T4 families are parameterized; the
/// Rogers-Ramanujan (RR1, RR2) and Rogers-Selberg (RS31, RS32, RS33)
/// families are parameter-free. RS*_B and RS*_C are bipartition classes.
enum class ClassTag {
    Lemma1A,  // part r exactly n times; distinct parts from {s, s+k, ..., s+(n-1)k};
              // parts from {k, ..., nk} with nk present at least once
    Lemma1B,  // exactly n parts; distinct parts == r+s (mod k), r+s absent;
              // repeatable parts == r (mod k), r absent
    T2A,      // as Lemma1A but every part k, 2k, ..., nk present at least once
    T2B,      // distinct parts == r+s (mod k), r+s absent, gaps >= 2k in that class;
              // distinct parts == r (mod k), r absent; r+jk, r+(j+1)k excluded when
              // r+s+jk present (j >= 1)
    T2Bn,     // T2B with exactly n parts in the (r+s)-class
    T3A,      // part r exactly n times; parts from {k, ..., nk}, each at least twice
    T3B,      // distinct parts == r (mod k); r, r+k absent; gaps >= 2k
    T3Bn,     // exactly n parts == r+k (mod 2k), r+k absent; distinct parts == r (mod 2k),
              // r absent; r+(2j-2)k, r+2jk excluded when r+(2j-1)k present (j >= 2)
    T4LeftN,  // exactly n distinct parts == s (mod k), s absent; distinct parts == r (mod k),
              // r absent; r+pk, r+(p+1)k excluded when s+pk present (p >= 1)
    T4RightN, // mirror: exactly n distinct parts == r (mod k), r absent; distinct parts
              // == s (mod k), s absent; s+(p-1)k, s+pk excluded when r+pk present
    RR2A,     // distinct parts, no 1s, gaps >= 2
    RR2B,     // parts == 2, 3 (mod 5)
    RR2C,     // distinct, no 1s; even values o_j+2j-3, o_j+2j-1 excluded for the
              // j-th odd part o_j (parts ordered ascending)
    RR2D,     // distinct, no 1s; odd values e_j+2j-1, e_j+2j+1 excluded for the
              // j-th even part e_j
    RR1A,     // distinct parts, gaps >= 2
    RR1B,     // parts == 1, 4 (mod 5)
    RR1C,     // distinct; o_j+2j-3, o_j+2j-1 excluded
    RR1D,     // distinct; e_j+2j-3, e_j+2j-1 excluded
    RS33A,    // parts == +-1, +-2 (mod 7)
    RS33B,    // (pi, lambda): pi distinct even, gaps >= 4; lambda distinct, avoiding
              // e_j/2, e_j/2+1, e_j/2+2 for the j-th part e_j of pi (ascending)
    RS33C,    // as RS33B with windows e_j/2+j-1, e_j/2+j, e_j/2+j+1
    RS31A,    // parts == +-2, +-3 (mod 7)
    RS31B,    // pi distinct even > 2, gaps >= 4; lambda distinct > 1, windows as RS33B
    RS31C,    // windows as RS33C, lambda parts > 1
    RS32A,    // parts == +-1, +-3 (mod 7)
    RS32B,    // pi distinct even > 2, gaps >= 4; lambda distinct, windows
              // e_j/2-1, e_j/2, e_j/2+1
    RS32C,    // windows e_j/2+j-2, e_j/2+j-1, e_j/2+j
};

/// A class tag with its parameters. Parameter domains: LEMMA1/T2 families
/// need k >= 4 and 0 < r < s < r+s < k; T3 needs 0 < r < k; T4 needs
/// 0 < r < s < k. n >= 1 for the A-classes, n >= 0 for the fixed-n strata.
struct ClassSpec {
    ClassTag tag;
    int n = 0;
    int r = 0;
    int s = 0;
    int k = 0;

    /// Parse a CLI-facing tag name such as "RR2_B" or "T4_LEFT_n".
    static ClassSpec from_name(const std::string& name, int n = 0, int r = 0, int s = 0,
                               int k = 0);

    std::string name() const;
    bool is_bipartition_class() const;
    bool uses_n() const;
    bool uses_r() const;
    bool uses_s() const;
    bool uses_k() const;

    /// Throws InvalidClassParameters if the parameters are out of domain.
    void validate() const;
};

/// All CLI-facing class names, in declaration order.
const std::vector<std::string>& class_names();

/// Membership predicate for partition classes (pure, total on valid specs).
bool class_contains(const ClassSpec& spec, const Partition& p);
/// Membership predicate for bipartition classes.
bool class_contains(const ClassSpec& spec, const Bipartition& bp);

/// Members of weight m, sorted descending-lexicographic. Uses structured
/// generation (bounded candidate supersets filtered by class_contains).
std::vector<Partition> class_members(const ClassSpec& spec, std::int64_t m);
std::vector<Bipartition> class_members_pairs(const ClassSpec& spec, std::int64_t m);

/// Reference semantics: filter the full weight-m enumeration by the
/// membership predicate. Slow; the structured generators must agree with it.
std::vector<Partition> class_members_by_filter(const ClassSpec& spec, std::int64_t m);
std::vector<Bipartition> class_members_pairs_by_filter(const ClassSpec& spec, std::int64_t m);

std::int64_t class_count(const ClassSpec& spec, std::int64_t m);

/// Generating function sum_{m < N} class_count(m) q^m, by enumeration.
QSeries class_gf(const ClassSpec& spec, std::int64_t order);

/// Closed-form product for the classes that have one (the summed Lemma-1
/// B-class lives in the identity layer; here: RR1_B, RR2_B, RS*_A).
std::optional<QSeries> class_gf_product(const ClassSpec& spec, std::int64_t order);

} // namespace qident
