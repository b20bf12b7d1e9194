// Acceptance suite: runs every criterion at its stated order/weight bounds
// and prints one PASS/FAIL line per criterion. All comparisons are exact
// integer equality. Exit status 0 iff everything passed.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "qident/classes.hpp"
#include "qident/conjugation.hpp"
#include "qident/identities.hpp"
#include "qident/summation.hpp"

using namespace qident;

namespace {

SignedMonomial qp(std::int64_t e) { return SignedMonomial::q_power(+1, e); }
SignedMonomial qn(std::int64_t e) { return SignedMonomial::q_power(-1, e); }

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& log, const std::string& what) {
    if (!cond) log += (log.empty() ? "" : "; ") + what;
    return cond;
}

std::vector<Partition> sorted(std::initializer_list<std::initializer_list<int>> ps) {
    std::vector<Partition> out;
    for (auto p : ps) out.push_back(Partition(std::vector<int>(p)));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b < a; });
    return out;
}

// ---- criterion 1: the paper's displayed member lists, bit-exact ----------

bool criterion_lists(std::string& log) {
    bool ok = true;
    ok &= expect(class_members(ClassSpec{ClassTag::RR2B}, 15) ==
                     sorted({{3, 2, 2, 2, 2, 2, 2},
                             {3, 3, 3, 2, 2, 2},
                             {3, 3, 3, 3, 3},
                             {7, 2, 2, 2, 2},
                             {7, 3, 3, 2},
                             {8, 3, 2, 2},
                             {8, 7},
                             {12, 3},
                             {13, 2}}),
                 log, "RR2_B(15) list");
    ok &= expect(class_members(ClassSpec{ClassTag::RR2C}, 15) ==
                     sorted({{7, 5, 3}, {8, 5, 2}, {9, 4, 2}, {9, 6}, {10, 5}, {11, 4}, {12, 3},
                             {13, 2}, {15}}),
                 log, "RR2_C(15) list");
    ok &= expect(class_members(ClassSpec{ClassTag::RR2D}, 15) ==
                     sorted({{7, 5, 3}, {7, 6, 2}, {8, 4, 3}, {8, 7}, {10, 5}, {11, 4}, {12, 3},
                             {13, 2}, {15}}),
                 log, "RR2_D(15) list");
    ok &= expect(class_members(ClassSpec{ClassTag::RR1B}, 10) ==
                     sorted({{1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                             {4, 1, 1, 1, 1, 1, 1},
                             {4, 4, 1, 1},
                             {6, 1, 1, 1, 1},
                             {6, 4},
                             {9, 1}}),
                 log, "RR1_B(10) list");
    ok &= expect(class_members(ClassSpec{ClassTag::RR1C}, 10) ==
                     sorted({{5, 4, 1}, {6, 4}, {7, 3}, {8, 2}, {9, 1}, {10}}),
                 log, "RR1_C(10) list");
    ok &= expect(class_members(ClassSpec{ClassTag::RR1D}, 10) ==
                     sorted({{6, 3, 1}, {6, 4}, {7, 3}, {8, 2}, {9, 1}, {10}}),
                 log, "RR1_D(10) list");
    ok &= expect(!class_contains(ClassSpec{ClassTag::RR2D}, P({8, 5, 2})), log,
                 "{8,5,2} must not lie in D(15)");
    ok &= expect(!class_contains(ClassSpec{ClassTag::RR2C}, P({7, 6, 2})), log,
                 "{7,6,2} must not lie in C(15)");
    ok &= expect(!class_contains(ClassSpec{ClassTag::RR1D}, P({5, 4, 1})), log,
                 "{5,4,1} must not lie in D(10)");
    ok &= expect(!class_contains(ClassSpec{ClassTag::RR1C}, P({6, 3, 1})), log,
                 "{6,3,1} must not lie in C(10)");
    return ok;
}

// ---- criterion 2: the worked conjugation example --------------------------

bool criterion_worked_example(std::string& log) {
    BlockConjugationParams params{4, 1, 5};
    Partition a = P({20, 18, 16, 16, 14, 8, 8, 6, 4, 2, 1, 1, 1, 1, 1});
    Partition expected = P({39, 31, 21, 19, 7});
    bool ok = true;
    int dropped = 0;
    Partition fwd = lemma1_forward(a, params, &dropped);
    ok &= expect(fwd == expected, log, "forward image");
    ok &= expect(dropped == 0, log, "no dropped columns");
    ok &= expect(fwd.weight() == 117 && a.weight() == 117, log, "weight 117 preserved");
    ok &= expect(lemma1_inverse(expected, params) == a, log, "inverse image");
    ok &= expect(lemma1_forward(lemma1_inverse(expected, params), params) == expected, log,
                 "round trip");
    return ok;
}

// ---- criterion 3: Lemma 1 counts and the verified bijection ---------------

bool criterion_lemma1(std::string& log) {
    bool ok = true;
    for (int k = 4; k <= 6 && ok; ++k)
        for (int r = 1; r < k && ok; ++r)
            for (int s = r + 1; r + s < k && ok; ++s)
                for (int n = 1; n <= 4 && ok; ++n) {
                    ClassSpec ca{ClassTag::Lemma1A, n, r, s, k};
                    ClassSpec cb{ClassTag::Lemma1B, n, r, s, k};
                    BlockConjugationParams params{k, r, n};
                    for (std::int64_t m = 0; m <= 60 && ok; ++m) {
                        auto as = class_members(ca, m);
                        auto bs = class_members(cb, m);
                        std::ostringstream tag;
                        tag << "(n,r,s,k,m)=(" << n << "," << r << "," << s << "," << k << ","
                            << m << ")";
                        ok &= expect(as.size() == bs.size(), log, "count equality " + tag.str());
                        std::set<Partition> bset(bs.begin(), bs.end());
                        std::set<Partition> images;
                        for (const auto& p : as) {
                            auto img = lemma1_forward(p, params);
                            images.insert(img);
                            ok &= expect(bset.count(img) == 1, log, "image in B " + tag.str());
                        }
                        ok &= expect(images.size() == as.size(), log, "injective " + tag.str());
                        ok &= expect(images.size() == bset.size(), log, "surjective " + tag.str());
                    }
                }
    return ok;
}

// ---- criterion 4: the three summation lemmas -------------------------------

bool criterion_summations(std::string& log) {
    const std::int64_t N = 30;
    bool ok = true;
    for (auto v : {SumVariant::L1, SumVariant::L2, SumVariant::L3})
        for (std::int64_t n = 0; n <= 4 && ok; ++n)
            for (std::int64_t m = 1; m <= 3 && ok; ++m)
                for (std::int64_t t = 0; t <= 2 && ok; ++t) {
                    auto b = qp(t);
                    auto rhs = summation_rhs(n, m, b, N);
                    std::ostringstream tag;
                    tag << "L" << (v == SumVariant::L1 ? 1 : v == SumVariant::L2 ? 2 : 3)
                        << " n=" << n << " m=" << m << " b=q^" << t;
                    ok &= expect(series_eq(nested_sum(v, n, m, b, N), rhs, N), log,
                                 "nested " + tag.str());
                    ok &= expect(series_eq(telescope_eval(v, n, m, b, N), rhs, N), log,
                                 "telescoped " + tag.str());
                }
    // b = q^{-1} for L1, admissible under the q -> q^2 rescale
    SumOptions base2;
    base2.base = 2;
    for (std::int64_t n = 0; n <= 4 && ok; ++n)
        for (std::int64_t m = 1; m <= 3 && ok; ++m) {
            auto rhs = summation_rhs(n, m, qp(-1), N, 2);
            ok &= expect(series_eq(nested_sum(SumVariant::L1, n, m, qp(-1), N, base2), rhs, N),
                         log, "nested L1 base-2 b=q^-1");
            ok &= expect(series_eq(telescope_eval(SumVariant::L1, n, m, qp(-1), N, 2), rhs, N),
                         log, "telescoped L1 base-2 b=q^-1");
        }
    // negative controls: each collapse rule is load-bearing at low order
    {
        SumOptions no_dedup;
        no_dedup.adjacent_dedup = false;
        auto wrong = nested_sum(SumVariant::L2, 2, 1, qp(0), 6, no_dedup);
        auto rhs = summation_rhs(2, 1, qp(0), 6);
        ok &= expect(!series_eq(wrong, rhs, 6), log, "L2 without the primed collapse must fail");
        SumOptions no_zero;
        no_zero.l3_zero_rule = false;
        auto wrong3 = nested_sum(SumVariant::L3, 1, 1, qp(1), 6, no_zero);
        auto rhs3 = summation_rhs(1, 1, qp(1), 6);
        ok &= expect(!series_eq(wrong3, rhs3, 6), log, "L3 without the a_1=0 rule must fail");
    }
    return ok;
}

// ---- criterion 5: restricted identities over their full grids --------------

bool criterion_restricted(std::string& log) {
    bool ok = true;
    for (auto tag : {IdentityTag::Rskeq, IdentityTag::HHK, IdentityTag::E151AK,
                     IdentityTag::SymEqK}) {
        const std::int64_t order = default_order(tag);
        for (const auto& id : default_grid(tag)) {
            auto rep = verify_identity(id, order);
            ok &= expect(rep.pass, log, rep.name);
            if (!ok) break;
        }
    }
    return ok;
}

// ---- criterion 6: the bivariate q-binomial theorem --------------------------

bool criterion_qbinomial(std::string& log) {
    bool ok = true;
    for (const auto& id : default_grid(IdentityTag::QBinomial)) {
        auto rep = verify_identity(id, 60);
        ok &= expect(rep.pass, log, rep.name);
        if (!ok) break;
    }
    return ok;
}

// ---- criterion 7: Slater identities and equal left sides --------------------

bool criterion_slater(std::string& log) {
    const std::int64_t N = 60;
    bool ok = true;
    for (const char* name : {"S14", "S16", "S94", "S18", "S20", "S99", "S31", "S32", "S33"}) {
        auto rep = verify_identity(IdentityId{IdentityId::tag_from_name(name)}, N);
        ok &= expect(rep.pass, log, rep.name);
    }
    auto left = [&](const char* name) {
        return build_sides(IdentityId{IdentityId::tag_from_name(name)}, N).first;
    };
    ok &= expect(series_eq(left("S14"), left("S16"), N), log, "S14/S16 left sides");
    ok &= expect(series_eq(left("S14"), left("S94"), N), log, "S14/S94 left sides");
    ok &= expect(series_eq(left("S18"), left("S20"), N), log, "S18/S20 left sides");
    ok &= expect(series_eq(left("S18"), left("S99"), N), log, "S18/S99 left sides");
    return ok;
}

// ---- criterion 8: partition theorems and generating-function cross-checks ---

bool criterion_partition_theorems(std::string& log) {
    bool ok = true;
    ok &= expect(verify_partition_theorem(TheoremTag::RR2, 40).pass, log, "RR2 to 40");
    ok &= expect(verify_partition_theorem(TheoremTag::RR1, 40).pass, log, "RR1 to 40");
    ok &= expect(verify_partition_theorem(TheoremTag::RS33, 30).pass, log, "RS33 to 30");
    ok &= expect(verify_partition_theorem(TheoremTag::RS31, 30).pass, log, "RS31 to 30");
    ok &= expect(verify_partition_theorem(TheoremTag::RS32, 30).pass, log, "RS32 to 30");

    auto left = [](const char* name, std::int64_t N) {
        return build_sides(IdentityId{IdentityId::tag_from_name(name)}, N).first;
    };
    ok &= expect(series_eq(class_gf(ClassSpec{ClassTag::RR2D}, 40), left("S94", 40), 40), log,
                 "gf(RR2_D) = S94 left");
    ok &= expect(series_eq(class_gf(ClassSpec{ClassTag::RR1D}, 40), left("S99", 40), 40), log,
                 "gf(RR1_D) = S99 left");
    auto s33 = left("S33", 30);
    ok &= expect(series_eq(class_gf(ClassSpec{ClassTag::RS33B}, 30), s33, 30), log,
                 "gf(RS33_B) = S33 left");
    ok &= expect(series_eq(class_gf(ClassSpec{ClassTag::RS33C}, 30), s33, 30), log,
                 "gf(RS33_C) = S33 left");
    return ok;
}

// ---- criterion 9: first-divergence witnesses --------------------------------

bool criterion_witnesses(std::string& log) {
    bool ok = true;
    auto sets_match_below = [&](ClassTag bt, ClassTag ct, std::int64_t first) {
        for (std::int64_t m = 0; m < first; ++m) {
            auto bs = class_members_pairs(ClassSpec{bt}, m);
            auto cs = class_members_pairs(ClassSpec{ct}, m);
            if (bs != cs) return false;
        }
        return true;
    };

    // RS33 at 14. The witness pair printed with pi = {8,4} weighs 16; the
    // weight-14 object carrying the quoted e_2/2 = 4 obstruction is
    // ({8,2},{4}), and ({8,4},{4}) lies in neither class.
    Bipartition c33{P({8, 2}), P({4})};
    Bipartition b33{P({6, 2}), P({6})};
    ok &= expect(c33.weight() == 14 && b33.weight() == 14, log, "RS33 witness weights");
    ok &= expect(class_contains(ClassSpec{ClassTag::RS33C}, c33) &&
                     !class_contains(ClassSpec{ClassTag::RS33B}, c33),
                 log, "({8,2},{4}) in C(14) only");
    ok &= expect(class_contains(ClassSpec{ClassTag::RS33B}, b33) &&
                     !class_contains(ClassSpec{ClassTag::RS33C}, b33),
                 log, "({6,2},{6}) in B(14) only");
    Bipartition misprinted{P({8, 4}), P({4})};
    ok &= expect(!class_contains(ClassSpec{ClassTag::RS33B}, misprinted) &&
                     !class_contains(ClassSpec{ClassTag::RS33C}, misprinted),
                 log, "({8,4},{4}) lies in neither RS33 class");
    ok &= expect(sets_match_below(ClassTag::RS33B, ClassTag::RS33C, 14), log,
                 "RS33 B/C member sets coincide below 14");

    Bipartition c31{P({10, 4}), P({5})};
    Bipartition b31{P({8, 4}), P({7})};
    ok &= expect(c31.weight() == 19 && b31.weight() == 19, log, "RS31 witness weights");
    ok &= expect(class_contains(ClassSpec{ClassTag::RS31C}, c31) &&
                     !class_contains(ClassSpec{ClassTag::RS31B}, c31),
                 log, "({10,4},{5}) in C(19) only");
    ok &= expect(class_contains(ClassSpec{ClassTag::RS31B}, b31) &&
                     !class_contains(ClassSpec{ClassTag::RS31C}, b31),
                 log, "({8,4},{7}) in B(19) only");
    ok &= expect(sets_match_below(ClassTag::RS31B, ClassTag::RS31C, 19), log,
                 "RS31 B/C member sets coincide below 19");

    Bipartition c32{P({10, 4}), P({4})};
    Bipartition b32{P({8, 4}), P({6})};
    ok &= expect(c32.weight() == 18 && b32.weight() == 18, log, "RS32 witness weights");
    ok &= expect(class_contains(ClassSpec{ClassTag::RS32C}, c32) &&
                     !class_contains(ClassSpec{ClassTag::RS32B}, c32),
                 log, "({10,4},{4}) in C(18) only");
    ok &= expect(class_contains(ClassSpec{ClassTag::RS32B}, b32) &&
                     !class_contains(ClassSpec{ClassTag::RS32C}, b32),
                 log, "({8,4},{6}) in B(18) only");
    ok &= expect(sets_match_below(ClassTag::RS32B, ClassTag::RS32C, 18), log,
                 "RS32 B/C member sets coincide below 18");
    return ok;
}

// ---- criterion 10: oracle coherence -----------------------------------------

bool criterion_oracles(std::string& log) {
    bool ok = true;
    auto gf = series_invert(poch_infinite(qp(1), 1, 41));
    for (std::int64_t m = 0; m <= 40; ++m) {
        std::int64_t count = 0;
        for_each_partition(m, [&](const Partition&) { ++count; });
        ok &= expect(gf.coeff(m) == count, log, "p(" + std::to_string(m) + ")");
    }
    for (std::int64_t m = 0; m <= 25; ++m)
        for (const auto& p : enumerate_partitions(m)) {
            // transpose by column heights, independently of the clamp formula
            std::vector<int> cols;
            if (!p.empty()) {
                cols.assign(static_cast<std::size_t>(p.parts().front()), 0);
                for (int x : p.parts())
                    for (int j = 0; j < x; ++j) ++cols[static_cast<std::size_t>(j)];
            }
            if (k_block_conjugate(p, 1) != Partition(cols)) {
                ok = expect(false, log, "conjugate mismatch at m=" + std::to_string(m));
                break;
            }
        }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "paper member lists, bit-exact", criterion_lists},
        {2, "worked conjugation example at weight 117", criterion_worked_example},
        {3, "Lemma 1 count equality and verified bijection (m <= 60)", criterion_lemma1},
        {4, "summation lemmas: nested = telescoped = closed form (order 30)",
         criterion_summations},
        {5, "restricted identities RSKEQ/HHK/E151AK/SYMEQK over full grids",
         criterion_restricted},
        {6, "bivariate q-binomial theorem at (M, N) = (12, 60)", criterion_qbinomial},
        {7, "Slater identities at order 60 with equal left sides", criterion_slater},
        {8, "partition theorems and generating-function cross-checks",
         criterion_partition_theorems},
        {9, "first-divergence witnesses at weights 14/18/19", criterion_witnesses},
        {10, "oracle coherence: Euler product and classical conjugation", criterion_oracles},
    };

    bool all = true;
    for (auto& c : criteria) {
        std::string log;
        bool pass = false;
        try {
            pass = c.run(log);
        } catch (const std::exception& e) {
            log = std::string("exception: ") + e.what();
        }
        std::printf("[%2d] %s  %s%s%s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                    log.empty() ? "" : " -- ", log.c_str());
        std::fflush(stdout);
        all = all && pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: FAILURES detected");
    return all ? 0 : 1;
}
