#include "qident/classes.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace qident {

namespace {

struct TagInfo {
    ClassTag tag;
    const char* name;
    bool bipartition;
    bool has_n, has_r, has_s, has_k;
};

constexpr std::array<TagInfo, 27> kTags{{
    {ClassTag::Lemma1A, "LEMMA1_A", false, true, true, true, true},
    {ClassTag::Lemma1B, "LEMMA1_B", false, true, true, true, true},
    {ClassTag::T2A, "T2_A", false, true, true, true, true},
    {ClassTag::T2B, "T2_B", false, false, true, true, true},
    {ClassTag::T2Bn, "T2_B_n", false, true, true, true, true},
    {ClassTag::T3A, "T3_A", false, true, true, false, true},
    {ClassTag::T3B, "T3_B", false, false, true, false, true},
    {ClassTag::T3Bn, "T3_B_n", false, true, true, false, true},
    {ClassTag::T4LeftN, "T4_LEFT_n", false, true, true, true, true},
    {ClassTag::T4RightN, "T4_RIGHT_n", false, true, true, true, true},
    {ClassTag::RR2A, "RR2_A", false, false, false, false, false},
    {ClassTag::RR2B, "RR2_B", false, false, false, false, false},
    {ClassTag::RR2C, "RR2_C", false, false, false, false, false},
    {ClassTag::RR2D, "RR2_D", false, false, false, false, false},
    {ClassTag::RR1A, "RR1_A", false, false, false, false, false},
    {ClassTag::RR1B, "RR1_B", false, false, false, false, false},
    {ClassTag::RR1C, "RR1_C", false, false, false, false, false},
    {ClassTag::RR1D, "RR1_D", false, false, false, false, false},
    {ClassTag::RS33A, "RS33_A", false, false, false, false, false},
    {ClassTag::RS33B, "RS33_B", true, false, false, false, false},
    {ClassTag::RS33C, "RS33_C", true, false, false, false, false},
    {ClassTag::RS31A, "RS31_A", false, false, false, false, false},
    {ClassTag::RS31B, "RS31_B", true, false, false, false, false},
    {ClassTag::RS31C, "RS31_C", true, false, false, false, false},
    {ClassTag::RS32A, "RS32_A", false, false, false, false, false},
    {ClassTag::RS32B, "RS32_B", true, false, false, false, false},
    {ClassTag::RS32C, "RS32_C", true, false, false, false, false},
}};

const TagInfo& info(ClassTag t) {
    for (const auto& ti : kTags)
        if (ti.tag == t) return ti;
    throw Error("unknown class tag");
}

std::vector<int> ascending_parts(const Partition& p) {
    std::vector<int> v(p.parts().rbegin(), p.parts().rend());
    return v;
}

bool all_distinct(const Partition& p) {
    const auto& ps = p.parts();
    return std::adjacent_find(ps.begin(), ps.end()) == ps.end();
}

// ascending minimum difference between consecutive parts
bool min_gap(const std::vector<int>& asc, int g) {
    for (std::size_t i = 1; i < asc.size(); ++i)
        if (asc[i] - asc[i - 1] < g) return false;
    return true;
}

// ---- Lemma 1 / Theorem 2 / Theorem 3 "A" side classes -----------------

bool marker_ladder_block(const Partition& p, int n, int r, int s, int k, bool ladder,
                         bool every_block_once, bool every_block_twice) {
    if (p.multiplicity(r) != n) return false;
    std::map<int, int> block_mult;  // jk -> multiplicity
    for (std::size_t i = 0; i < p.parts().size();) {
        int v = p.parts()[i];
        std::size_t j = i;
        while (j < p.parts().size() && p.parts()[j] == v) ++j;
        int mu = static_cast<int>(j - i);
        i = j;
        if (v == r) continue;
        if (ladder && v >= s && (v - s) % k == 0 && v <= s + static_cast<std::int64_t>(n - 1) * k) {
            if (mu != 1) return false;
            continue;
        }
        if (v % k == 0 && v >= k && v <= static_cast<std::int64_t>(n) * k) {
            block_mult[v] = mu;
            continue;
        }
        return false;
    }
    if (every_block_once || every_block_twice) {
        for (int j = 1; j <= n; ++j)
            if (block_mult[j * k] < (every_block_twice ? 2 : 1)) return false;
    } else {
        if (block_mult[n * k] < 1) return false;  // only nk is mandatory
    }
    return true;
}

// ---- residue-class helpers ---------------------------------------------

// Splits the parts of a distinct-part partition into those congruent to c1
// and c2 mod k; rejects any part in neither class.
bool split_residues(const Partition& p, int k, int c1, int c2, std::vector<int>& asc1,
                    std::vector<int>& asc2) {
    asc1.clear();
    asc2.clear();
    for (int v : ascending_parts(p)) {
        int c = v % k;
        if (c == ((c1 % k) + k) % k)
            asc1.push_back(v);
        else if (c == ((c2 % k) + k) % k)
            asc2.push_back(v);
        else
            return false;
    }
    return true;
}

bool t2b_like(const Partition& p, int r, int s, int k, int want_n_rs) {
    if (!all_distinct(p)) return false;
    std::vector<int> rs_parts, r_parts;
    if (!split_residues(p, k, r + s, r, rs_parts, r_parts)) return false;
    if (want_n_rs >= 0 && static_cast<int>(rs_parts.size()) != want_n_rs) return false;
    for (int v : rs_parts)
        if (v == r + s) return false;
    if (!min_gap(rs_parts, 2 * k)) return false;
    for (int v : r_parts)
        if (v == r) return false;
    for (int v : rs_parts) {
        int j = (v - (r + s)) / k;  // >= 1 since r+s itself is excluded
        if (p.contains(r + j * k) || p.contains(r + (j + 1) * k)) return false;
    }
    return true;
}

bool t3b(const Partition& p, int r, int k) {
    if (!all_distinct(p)) return false;
    auto asc = ascending_parts(p);
    for (int v : asc) {
        if (v % k != r % k) return false;
        if (v == r || v == r + k) return false;
    }
    return min_gap(asc, 2 * k);
}

bool t3bn(const Partition& p, int n, int r, int k) {
    if (!all_distinct(p)) return false;
    std::vector<int> c_rk, c_r;  // == r+k (mod 2k) and == r (mod 2k)
    if (!split_residues(p, 2 * k, r + k, r, c_rk, c_r)) return false;
    if (static_cast<int>(c_rk.size()) != n) return false;
    for (int v : c_rk)
        if (v == r + k) return false;
    if (!min_gap(c_rk, 2 * k)) return false;
    for (int v : c_r)
        if (v == r) return false;
    // v = r + (2j-1)k with j >= 2; its neighbours r+(2j-2)k, r+2jk are barred
    for (int v : c_rk)
        if (p.contains(v - k) || p.contains(v + k)) return false;
    return true;
}

bool t4_side(const Partition& p, int n, int anchor, int other, int k, int lo_shift) {
    // anchor-class parts counted (exactly n, anchor itself absent); a part
    // anchor + pk bars other + (p+lo_shift)k and other + (p+lo_shift+1)k.
    if (!all_distinct(p)) return false;
    std::vector<int> a_parts, o_parts;
    if (!split_residues(p, k, anchor, other, a_parts, o_parts)) return false;
    if (static_cast<int>(a_parts.size()) != n) return false;
    for (int v : a_parts)
        if (v == anchor) return false;
    for (int v : o_parts)
        if (v == other) return false;
    for (int v : a_parts) {
        int pshift = (v - anchor) / k;  // >= 1
        if (p.contains(other + (pshift + lo_shift) * k)) return false;
        if (p.contains(other + (pshift + lo_shift + 1) * k)) return false;
    }
    return true;
}

// ---- Rogers-Ramanujan style rules ---------------------------------------

bool gap2(const Partition& p, int min_part) {
    auto asc = ascending_parts(p);
    if (!asc.empty() && asc.front() < min_part) return false;
    return min_gap(asc, 2);
}

bool residues_mod(const Partition& p, int mod, std::initializer_list<int> allowed) {
    for (int v : p.parts()) {
        bool ok = false;
        for (int a : allowed) ok = ok || (v % mod == a);
        if (!ok) return false;
    }
    return true;
}

// Distinct parts with parity-anchored exclusions: for the j-th part of the
// anchor parity (ascending), the values anchor + 2j + off1 and
// anchor + 2j + off2 must not appear.
bool parity_rule(const Partition& p, int min_part, bool odd_anchor, int off1, int off2) {
    if (!all_distinct(p)) return false;
    if (!p.empty() && p.parts().back() < min_part) return false;
    int j = 0;
    for (int v : ascending_parts(p)) {
        if ((v % 2 == 1) != odd_anchor) continue;
        ++j;
        if (p.contains(v + 2 * j + off1) || p.contains(v + 2 * j + off2)) return false;
    }
    return true;
}

// ---- Rogers-Selberg bipartition rules -----------------------------------

bool rs_pi_ok(const Partition& pi, int min_even) {
    auto asc = ascending_parts(pi);
    for (int v : asc)
        if (v % 2 != 0 || v < min_even) return false;
    return all_distinct(pi) && min_gap(asc, 4);
}

struct RsRule {
    int pi_min;      // smallest admissible pi part
    int lam_min;     // smallest admissible lambda part
    int j_coeff;     // windows are e/2 + j_coeff*j + {base_off, +1, +2}
    int base_off;
};

RsRule rs_rule(ClassTag t) {
    switch (t) {
        case ClassTag::RS33B: return {2, 1, 0, 0};
        case ClassTag::RS33C: return {2, 1, 1, -1};
        case ClassTag::RS31B: return {4, 2, 0, 0};
        case ClassTag::RS31C: return {4, 2, 1, -1};
        case ClassTag::RS32B: return {4, 1, 0, -1};
        case ClassTag::RS32C: return {4, 1, 1, -2};
        default: throw Error("not a Rogers-Selberg bipartition tag");
    }
}

bool rs_contains(ClassTag t, const Bipartition& bp) {
    const RsRule rule = rs_rule(t);
    if (!rs_pi_ok(bp.pi, rule.pi_min)) return false;
    if (!all_distinct(bp.lambda)) return false;
    if (!bp.lambda.empty() && bp.lambda.parts().back() < rule.lam_min) return false;
    int j = 0;
    for (int e : ascending_parts(bp.pi)) {
        ++j;
        int base = e / 2 + rule.j_coeff * j + rule.base_off;
        if (bp.lambda.contains(base) || bp.lambda.contains(base + 1) ||
            bp.lambda.contains(base + 2))
            return false;
    }
    return true;
}

} // namespace

ClassSpec ClassSpec::from_name(const std::string& name, int n, int r, int s, int k) {
    for (const auto& ti : kTags)
        if (name == ti.name) return ClassSpec{ti.tag, n, r, s, k};
    throw InvalidClassParameters("unknown class tag '" + name + "'");
}

std::string ClassSpec::name() const { return info(tag).name; }
bool ClassSpec::is_bipartition_class() const { return info(tag).bipartition; }
bool ClassSpec::uses_n() const { return info(tag).has_n; }
bool ClassSpec::uses_r() const { return info(tag).has_r; }
bool ClassSpec::uses_s() const { return info(tag).has_s; }
bool ClassSpec::uses_k() const { return info(tag).has_k; }

const std::vector<std::string>& class_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& ti : kTags) v.emplace_back(ti.name);
        return v;
    }();
    return names;
}

void ClassSpec::validate() const {
    auto fail = [&](const std::string& why) {
        throw InvalidClassParameters(name() + ": " + why);
    };
    switch (tag) {
        case ClassTag::Lemma1A:
        case ClassTag::Lemma1B:
        case ClassTag::T2A:
        case ClassTag::T2B:
        case ClassTag::T2Bn:
            if (k < 4) fail("requires k >= 4");
            if (!(0 < r && r < s && s < r + s && r + s < k)) fail("requires 0 < r < s < r+s < k");
            if (tag == ClassTag::T2Bn) {
                if (n < 0) fail("requires n >= 0");
            } else if (tag != ClassTag::T2B && n < 1) {
                fail("requires n >= 1");
            }
            break;
        case ClassTag::T3A:
            if (!(0 < r && r < k)) fail("requires 0 < r < k");
            if (n < 1) fail("requires n >= 1");
            break;
        case ClassTag::T3B:
            if (!(0 < r && r < k)) fail("requires 0 < r < k");
            break;
        case ClassTag::T3Bn:
            if (!(0 < r && r < k)) fail("requires 0 < r < k");
            if (n < 0) fail("requires n >= 0");
            break;
        case ClassTag::T4LeftN:
        case ClassTag::T4RightN:
            if (!(0 < r && r < s && s < k)) fail("requires 0 < r < s < k");
            if (n < 0) fail("requires n >= 0");
            break;
        default:
            break;  // parameter-free families
    }
}

bool class_contains(const ClassSpec& spec, const Partition& p) {
    spec.validate();
    switch (spec.tag) {
        case ClassTag::Lemma1A:
            return marker_ladder_block(p, spec.n, spec.r, spec.s, spec.k, true, false, false);
        case ClassTag::T2A:
            return marker_ladder_block(p, spec.n, spec.r, spec.s, spec.k, true, true, false);
        case ClassTag::T3A:
            return marker_ladder_block(p, spec.n, spec.r, 0, spec.k, false, false, true);
        case ClassTag::Lemma1B: {
            if (static_cast<int>(p.size()) != spec.n) return false;
            const int k = spec.k, r = spec.r, rs = spec.r + spec.s;
            for (std::size_t i = 0; i < p.parts().size(); ++i) {
                int v = p.parts()[i];
                if (v % k == rs % k) {
                    if (v == rs) return false;
                    if (i + 1 < p.parts().size() && p.parts()[i + 1] == v) return false;
                } else if (v % k == r % k) {
                    if (v == r) return false;
                } else {
                    return false;
                }
            }
            return true;
        }
        case ClassTag::T2B:
            return t2b_like(p, spec.r, spec.s, spec.k, -1);
        case ClassTag::T2Bn:
            return t2b_like(p, spec.r, spec.s, spec.k, spec.n);
        case ClassTag::T3B:
            return t3b(p, spec.r, spec.k);
        case ClassTag::T3Bn:
            return t3bn(p, spec.n, spec.r, spec.k);
        case ClassTag::T4LeftN:
            return t4_side(p, spec.n, spec.s, spec.r, spec.k, 0);
        case ClassTag::T4RightN:
            return t4_side(p, spec.n, spec.r, spec.s, spec.k, -1);
        case ClassTag::RR2A:
            return gap2(p, 2);
        case ClassTag::RR1A:
            return gap2(p, 1);
        case ClassTag::RR2B:
            return residues_mod(p, 5, {2, 3});
        case ClassTag::RR1B:
            return residues_mod(p, 5, {1, 4});
        case ClassTag::RR2C:
            return parity_rule(p, 2, true, -3, -1);
        case ClassTag::RR2D:
            return parity_rule(p, 2, false, -1, +1);
        case ClassTag::RR1C:
            return parity_rule(p, 1, true, -3, -1);
        case ClassTag::RR1D:
            return parity_rule(p, 1, false, -3, -1);
        case ClassTag::RS33A:
            return residues_mod(p, 7, {1, 2, 5, 6});
        case ClassTag::RS31A:
            return residues_mod(p, 7, {2, 3, 4, 5});
        case ClassTag::RS32A:
            return residues_mod(p, 7, {1, 3, 4, 6});
        default:
            throw InvalidClassParameters(spec.name() + " is a bipartition class");
    }
}

bool class_contains(const ClassSpec& spec, const Bipartition& bp) {
    spec.validate();
    if (!spec.is_bipartition_class())
        throw InvalidClassParameters(spec.name() + " is a partition class");
    return rs_contains(spec.tag, bp);
}

namespace {

std::vector<int> residue_values(std::int64_t m, int mod, std::initializer_list<int> residues,
                                int min_value = 1) {
    std::vector<int> v;
    for (int x = static_cast<int>(m); x >= min_value && x >= 1; --x)
        for (int c : residues)
            if (x % mod == c) v.push_back(x);
    return v;
}

// Candidate generation for the marker/ladder classes: fix the n markers, walk
// ladder subsets, then fill with blocks from {k, ..., nk} (mandatory copies
// already removed from the budget).
void gen_marker_ladder(const ClassSpec& spec, std::int64_t m, bool ladder,
                       std::int64_t mandatory_each, const PartitionVisitor& emit) {
    const int n = spec.n, r = spec.r, s = spec.s, k = spec.k;
    std::int64_t rem0 = m - static_cast<std::int64_t>(n) * r;
    std::int64_t mandatory = 0;
    std::vector<int> mandatory_parts;
    if (mandatory_each == 0) {
        mandatory = static_cast<std::int64_t>(n) * k;  // just nk once
        mandatory_parts.push_back(n * k);
    } else {
        for (int j = 1; j <= n; ++j)
            for (int c = 0; c < mandatory_each; ++c) mandatory_parts.push_back(j * k);
        mandatory = static_cast<std::int64_t>(mandatory_each) * k * n * (n + 1) / 2;
    }
    if (rem0 < mandatory) return;

    std::vector<int> blocks;
    for (int j = n; j >= 1; --j) blocks.push_back(j * k);

    std::vector<int> ladder_vals;
    if (ladder)
        for (int j = n - 1; j >= 0; --j) ladder_vals.push_back(s + j * k);

    std::vector<int> chosen;
    auto fill_blocks = [&](std::int64_t rem) {
        for_each_partition_from_values(rem, blocks, -1, [&](const Partition& blk) {
            std::vector<int> parts;
            parts.insert(parts.end(), static_cast<std::size_t>(n), r);
            parts.insert(parts.end(), chosen.begin(), chosen.end());
            parts.insert(parts.end(), mandatory_parts.begin(), mandatory_parts.end());
            parts.insert(parts.end(), blk.parts().begin(), blk.parts().end());
            emit(Partition(std::move(parts)));
        });
    };
    auto subsets = [&](auto&& self, std::size_t idx, std::int64_t rem) -> void {
        fill_blocks(rem);
        for (std::size_t i = idx; i < ladder_vals.size(); ++i) {
            if (ladder_vals[i] > rem) continue;
            chosen.push_back(ladder_vals[i]);
            self(self, i + 1, rem - ladder_vals[i]);
            chosen.pop_back();
        }
    };
    subsets(subsets, 0, rem0 - mandatory);
}

template <typename T>
std::vector<T> sorted_members(std::vector<T> v) {
    std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return b < a; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::vector<Partition> class_members(const ClassSpec& spec, std::int64_t m) {
    spec.validate();
    if (m < 0) throw Error("weight must be >= 0");
    if (m > enumeration_ceiling())
        throw CeilingExceeded("weight " + std::to_string(m) + " exceeds the enumeration ceiling");
    if (spec.is_bipartition_class())
        throw InvalidClassParameters(spec.name() + " enumerates bipartitions");

    std::vector<Partition> out;
    auto keep = [&](const Partition& p) {
        if (p.weight() == m && class_contains(spec, p)) out.push_back(p);
    };
    const int r = spec.r, s = spec.s, k = spec.k;
    switch (spec.tag) {
        case ClassTag::Lemma1A:
            gen_marker_ladder(spec, m, true, 0, keep);
            break;
        case ClassTag::T2A:
            gen_marker_ladder(spec, m, true, 1, keep);
            break;
        case ClassTag::T3A:
            gen_marker_ladder(spec, m, false, 2, keep);
            break;
        case ClassTag::Lemma1B: {
            auto values = residue_values(m, k, {r % k, (r + s) % k});
            std::erase_if(values, [&](int v) { return v == r || v == r + s; });
            for_each_partition_from_values(m, values, spec.n, keep);
            break;
        }
        case ClassTag::T2B:
        case ClassTag::T2Bn: {
            auto values = residue_values(m, k, {r % k, (r + s) % k});
            std::erase_if(values, [&](int v) { return v == r || v == r + s; });
            for_each_distinct_partition_from_values(m, values, keep);
            break;
        }
        case ClassTag::T3B:
        case ClassTag::T3Bn: {
            auto values = residue_values(m, k, {r % k});
            std::erase_if(values, [&](int v) { return v == r || v == r + k; });
            for_each_distinct_partition_from_values(m, values, keep);
            break;
        }
        case ClassTag::T4LeftN:
        case ClassTag::T4RightN: {
            auto values = residue_values(m, k, {r % k, s % k});
            std::erase_if(values, [&](int v) { return v == r || v == s; });
            for_each_distinct_partition_from_values(m, values, keep);
            break;
        }
        case ClassTag::RR2A:
        case ClassTag::RR2C:
        case ClassTag::RR2D:
            for_each_distinct_partition(m, 2, keep);
            break;
        case ClassTag::RR1A:
        case ClassTag::RR1C:
        case ClassTag::RR1D:
            for_each_distinct_partition(m, 1, keep);
            break;
        case ClassTag::RR2B:
            for_each_partition_from_values(m, residue_values(m, 5, {2, 3}), -1, keep);
            break;
        case ClassTag::RR1B:
            for_each_partition_from_values(m, residue_values(m, 5, {1, 4}), -1, keep);
            break;
        case ClassTag::RS33A:
            for_each_partition_from_values(m, residue_values(m, 7, {1, 2, 5, 6}), -1, keep);
            break;
        case ClassTag::RS31A:
            for_each_partition_from_values(m, residue_values(m, 7, {2, 3, 4, 5}), -1, keep);
            break;
        case ClassTag::RS32A:
            for_each_partition_from_values(m, residue_values(m, 7, {1, 3, 4, 6}), -1, keep);
            break;
        default:
            throw Error("unhandled partition class");
    }
    return sorted_members(std::move(out));
}

std::vector<Bipartition> class_members_pairs(const ClassSpec& spec, std::int64_t m) {
    spec.validate();
    if (m < 0) throw Error("weight must be >= 0");
    if (m > enumeration_ceiling())
        throw CeilingExceeded("weight " + std::to_string(m) + " exceeds the enumeration ceiling");
    if (!spec.is_bipartition_class())
        throw InvalidClassParameters(spec.name() + " enumerates partitions");

    const RsRule rule = rs_rule(spec.tag);
    std::vector<Bipartition> out;
    for (std::int64_t w = 0; w <= m; ++w) {
        std::vector<int> evens;
        for (int v = static_cast<int>(w); v >= rule.pi_min; --v)
            if (v % 2 == 0) evens.push_back(v);
        for_each_distinct_partition_from_values(w, evens, [&](const Partition& pi) {
            if (!rs_pi_ok(pi, rule.pi_min)) return;
            for_each_distinct_partition(m - w, rule.lam_min, [&](const Partition& lam) {
                Bipartition bp{pi, lam};
                if (class_contains(spec, bp)) out.push_back(std::move(bp));
            });
        });
    }
    return sorted_members(std::move(out));
}

std::vector<Partition> class_members_by_filter(const ClassSpec& spec, std::int64_t m) {
    spec.validate();
    std::vector<Partition> out;
    for_each_partition(m, [&](const Partition& p) {
        if (class_contains(spec, p)) out.push_back(p);
    });
    return sorted_members(std::move(out));
}

std::vector<Bipartition> class_members_pairs_by_filter(const ClassSpec& spec, std::int64_t m) {
    spec.validate();
    std::vector<Bipartition> out;
    for (std::int64_t w = 0; w <= m; ++w) {
        for_each_partition(w, [&](const Partition& pi) {
            for_each_partition(m - w, [&](const Partition& lam) {
                Bipartition bp{pi, lam};
                if (class_contains(spec, bp)) out.push_back(std::move(bp));
            });
        });
    }
    return sorted_members(std::move(out));
}

std::int64_t class_count(const ClassSpec& spec, std::int64_t m) {
    if (spec.is_bipartition_class())
        return static_cast<std::int64_t>(class_members_pairs(spec, m).size());
    return static_cast<std::int64_t>(class_members(spec, m).size());
}

QSeries class_gf(const ClassSpec& spec, std::int64_t order) {
    SeriesBuilder b(order);
    for (std::int64_t m = 0; m < order; ++m) b.add(Int(class_count(spec, m)), m);
    return b.take();
}

std::optional<QSeries> class_gf_product(const ClassSpec& spec, std::int64_t order) {
    auto inv_product = [&](std::initializer_list<int> expos, int step) {
        QSeries acc = QSeries::one(order);
        for (int e : expos)
            acc = acc * poch_infinite(SignedMonomial::q_power(+1, e), step, order);
        return series_invert(acc);
    };
    switch (spec.tag) {
        case ClassTag::RR2B: return inv_product({2, 3}, 5);
        case ClassTag::RR1B: return inv_product({1, 4}, 5);
        case ClassTag::RS33A: return inv_product({1, 2, 5, 6}, 7);
        case ClassTag::RS31A: return inv_product({2, 3, 4, 5}, 7);
        case ClassTag::RS32A: return inv_product({1, 3, 4, 6}, 7);
        default: return std::nullopt;
    }
}

} // namespace qident
