#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qident/bivariate.hpp"
#include "qident/series.hpp"

namespace qident {

/// Registry of the identities the harness can verify. QBINOMIAL is the
/// two-variable q-binomial theorem; RSKEQ its fully specialized single
/// variable form; HH / E151A / E151B / SYMEQ are the Ramanujan-style
/// transformations with free monomial parameters and HHK / E151AK / SYMEQK
/// their restricted (r, s, k) forms; the S-tags are the Slater-numbered
/// Rogers-Ramanujan and Rogers-Selberg identities.
enum class IdentityTag {
    QBinomial,
    Rskeq,
    HH,
    HHK,
    E151A,
    E151B,
    E151AK,
    SymEq,
    SymEqK,
    S14,
    S16,
    S94,
    S18,
    S20,
    S99,
    S31,
    S32,
    S33,
};

/// An identity instance: tag plus whichever parameters the tag consumes.
struct IdentityId {
    IdentityTag tag;
    SignedMonomial a = SignedMonomial::zero();  // QBINOMIAL, HH, E151A/B, SYMEQ
    SignedMonomial b = SignedMonomial::zero();  // HH, SYMEQ
    int r = 0, s = 0, k = 0;                    // RSKEQ, HHK, E151AK, SYMEQK
    std::int64_t z_order = 12;                  // QBINOMIAL only

    static IdentityTag tag_from_name(const std::string& name);
    static std::string tag_name(IdentityTag tag);

    std::string describe() const;
    /// Throws InvalidIdentityParameters when (r, s, k) are out of the tag's domain.
    void validate() const;
};

const std::vector<std::string>& identity_names();

/// Spec'd verification order for a tag (80 for RSKEQ, 60 otherwise).
std::int64_t default_order(IdentityTag tag);

/// The grid of instances swept by `verify <tag>` with no explicit
/// parameters: in-domain (r, s, k) up to the documented bounds, signed
/// monomial grids for the free-parameter identities, a single instance for
/// the S-identities.
std::vector<IdentityId> default_grid(IdentityTag tag);

/// Left and right series of a univariate identity at the given order.
/// QBINOMIAL is excluded here (see build_sides_bivariate).
std::pair<QSeries, QSeries> build_sides(const IdentityId& id, std::int64_t order);

/// Both sides of the two-variable q-binomial theorem.
std::pair<BivariateSeries, BivariateSeries> build_sides_bivariate(const IdentityId& id,
                                                                  std::int64_t q_order);

/// Location and values of the first coefficient disagreement.
struct Divergence {
    std::int64_t exponent = -1;
    std::int64_t z_degree = -1;  // -1 for univariate comparisons
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string name;
    std::int64_t order = 0;
    bool pass = false;
    std::optional<Divergence> divergence;
    std::string detail;

    std::string verdict() const { return pass ? "PASS" : "FAIL"; }
};

/// Compare two series up to `upto`, reporting the minimal divergent exponent.
VerificationReport compare_series(const std::string& name, const QSeries& lhs,
                                  const QSeries& rhs, std::int64_t upto);

VerificationReport verify_identity(const IdentityId& id, std::int64_t order);

/// The partition-theoretic statements: count equalities across the A/B/C/D
/// (or A/B/C) classes, and the stratified conjugate-class equalities for
/// the parameterized families, swept over their documented parameter grids
/// for all weights <= m_max.
enum class TheoremTag { Lemma1, T2, T3, T4, RR1, RR2, RS31, RS32, RS33 };

TheoremTag theorem_from_name(const std::string& name);
std::string theorem_name(TheoremTag tag);
const std::vector<std::string>& theorem_names();

VerificationReport verify_partition_theorem(TheoremTag tag, std::int64_t m_max);

} // namespace qident
