#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qident/classes.hpp"
#include "qident/identities.hpp"
#include "qident/json_io.hpp"

using namespace qident;

namespace {

SignedMonomial qp(std::int64_t e) { return SignedMonomial::q_power(+1, e); }
SignedMonomial qn(std::int64_t e) { return SignedMonomial::q_power(-1, e); }

IdentityId by_name(const std::string& n) { return IdentityId{IdentityId::tag_from_name(n)}; }

} // namespace

TEST_CASE("Slater identities hold at order 40") {
    for (const char* name : {"S14", "S16", "S94", "S18", "S20", "S99", "S31", "S32", "S33"}) {
        auto rep = verify_identity(by_name(name), 40);
        CHECK_MESSAGE(rep.pass, name);
    }
}

TEST_CASE("left sides within each triple agree") {
    const std::int64_t N = 40;
    auto l14 = build_sides(by_name("S14"), N).first;
    auto l16 = build_sides(by_name("S16"), N).first;
    auto l94 = build_sides(by_name("S94"), N).first;
    CHECK(series_eq(l14, l16, N));
    CHECK(series_eq(l14, l94, N));

    auto l18 = build_sides(by_name("S18"), N).first;
    auto l20 = build_sides(by_name("S20"), N).first;
    auto l99 = build_sides(by_name("S99"), N).first;
    CHECK(series_eq(l18, l20, N));
    CHECK(series_eq(l18, l99, N));
}

TEST_CASE("restricted identities on single instances") {
    CHECK(verify_identity(IdentityId{IdentityTag::Rskeq, {}, {}, 1, 2, 4}, 40).pass);
    CHECK(verify_identity(IdentityId{IdentityTag::HHK, {}, {}, 1, 2, 4}, 40).pass);
    CHECK(verify_identity(IdentityId{IdentityTag::HHK, {}, {}, 2, 3, 7}, 40).pass);
    CHECK(verify_identity(IdentityId{IdentityTag::E151AK, {}, {}, 1, 0, 2}, 40).pass);
    CHECK(verify_identity(IdentityId{IdentityTag::E151AK, {}, {}, 3, 0, 5}, 40).pass);
    CHECK(verify_identity(IdentityId{IdentityTag::SymEqK, {}, {}, 1, 2, 3}, 40).pass);
    CHECK(verify_identity(IdentityId{IdentityTag::SymEqK, {}, {}, 2, 4, 6}, 40).pass);
}

TEST_CASE("free-parameter identities on monomial spot values") {
    for (const auto& a : {SignedMonomial::zero(), qp(0), qn(0), qp(2), qn(3)})
        for (const auto& b : {SignedMonomial::zero(), qp(0), qn(1), qp(3)}) {
            IdentityId hh{IdentityTag::HH};
            hh.a = a;
            hh.b = b;
            CHECK_MESSAGE(verify_identity(hh, 40).pass, "HH ", hh.describe());
            IdentityId sym{IdentityTag::SymEq};
            sym.a = a;
            sym.b = b;
            CHECK_MESSAGE(verify_identity(sym, 40).pass, "SYMEQ ", sym.describe());
        }
    for (const auto& a : {SignedMonomial::zero(), qp(0), qn(0), qp(1), qn(2), qp(4)}) {
        IdentityId ea{IdentityTag::E151A};
        ea.a = a;
        CHECK_MESSAGE(verify_identity(ea, 40).pass, "E151A ", ea.describe());
        IdentityId eb{IdentityTag::E151B};
        eb.a = a;
        CHECK_MESSAGE(verify_identity(eb, 40).pass, "E151B ", eb.describe());
    }
}

TEST_CASE("free-parameter identities over the full monomial grids") {
    for (auto tag : {IdentityTag::HH, IdentityTag::SymEq, IdentityTag::E151A,
                     IdentityTag::E151B})
        for (const auto& id : default_grid(tag))
            CHECK_MESSAGE(verify_identity(id, 60).pass, id.describe());
}

TEST_CASE("bivariate q-binomial instance") {
    IdentityId id{IdentityTag::QBinomial};
    id.a = qn(2);
    id.z_order = 8;
    CHECK(verify_identity(id, 40).pass);
}

TEST_CASE("a perturbed side fails with the minimal divergent exponent") {
    const std::int64_t N = 30;
    auto [lhs, rhs] = build_sides(by_name("S14"), N);
    SeriesBuilder tweak(N);
    tweak.add(rhs, 0);
    tweak.add(1, 7);
    auto rep = compare_series("S14-perturbed", lhs, tweak.take(), N);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.divergence.has_value());
    CHECK(rep.divergence->exponent == 7);
    auto j = to_json(rep);
    CHECK(j["verdict"] == "FAIL");
    CHECK(j["first_divergence"]["exponent"] == 7);
    CHECK(j["identity"] == "S14-perturbed");

    auto ok = compare_series("S14", lhs, rhs, N);
    CHECK(ok.pass);
    CHECK(to_json(ok)["verdict"] == "PASS");
    CHECK_FALSE(to_json(ok).contains("first_divergence"));
}

TEST_CASE("class generating functions meet the series layer") {
    const std::int64_t N = 30;
    auto s94 = build_sides(by_name("S94"), N).first;
    CHECK(series_eq(class_gf(ClassSpec{ClassTag::RR2D}, N), s94, N));
    auto s99 = build_sides(by_name("S99"), N).first;
    CHECK(series_eq(class_gf(ClassSpec{ClassTag::RR1D}, N), s99, N));
    auto s16 = build_sides(by_name("S16"), N).first;
    CHECK(series_eq(class_gf(ClassSpec{ClassTag::RR2C}, N), s16, N));
    auto s20 = build_sides(by_name("S20"), N).first;
    CHECK(series_eq(class_gf(ClassSpec{ClassTag::RR1C}, N), s20, N));

    const std::int64_t NB = 24;
    auto s33 = build_sides(by_name("S33"), NB).first;
    CHECK(series_eq(class_gf(ClassSpec{ClassTag::RS33B}, NB), s33, NB));
    CHECK(series_eq(class_gf(ClassSpec{ClassTag::RS33C}, NB), s33, NB));
}

TEST_CASE("enumerated and closed-form generating functions agree") {
    const std::int64_t N = 40;
    for (auto tag : {ClassTag::RR2B, ClassTag::RR1B, ClassTag::RS33A, ClassTag::RS31A,
                     ClassTag::RS32A}) {
        auto prod = class_gf_product(ClassSpec{tag}, N);
        REQUIRE(prod.has_value());
        CHECK_MESSAGE(series_eq(class_gf(ClassSpec{tag}, N), *prod, N), ClassSpec{tag}.name());
    }
    CHECK_FALSE(class_gf_product(ClassSpec{ClassTag::RR2A}, N).has_value());
}

TEST_CASE("summed Lemma-1 B-classes have the specialized product form") {
    const std::int64_t N = 40;
    for (int k = 4; k <= 5; ++k)
        for (int r = 1; r < k; ++r)
            for (int s = r + 1; r + s < k; ++s) {
                // sum the fixed-n classes: n parts each >= r+k bounds n
                SeriesBuilder gf(N);
                gf.add(1, 0);
                for (int n = 1; static_cast<std::int64_t>(n) * (r + k) < N; ++n) {
                    auto g = class_gf(ClassSpec{ClassTag::Lemma1B, n, r, s, k}, N);
                    gf.add(g, 0);
                }
                auto rhs = build_sides(IdentityId{IdentityTag::Rskeq, {}, {}, r, s, k}, N).second;
                CHECK(series_eq(gf.take(), rhs, N));
            }
}

TEST_CASE("T4 strata match the symmetric identity termwise") {
    const std::int64_t N = 30;
    const int r = 1, s = 2, k = 3;
    for (int n = 0; n <= 2; ++n) {
        auto gf_left = class_gf(ClassSpec{ClassTag::T4LeftN, n, r, s, k}, N);
        SeriesBuilder expect(N);
        std::int64_t shift = static_cast<std::int64_t>(s) * n + std::int64_t(k) * n * (n + 1) / 2;
        if (shift < N) {
            auto pref = poch_infinite(qn(r + k), k, N - shift);
            auto den = series_invert(poch_finite(qp(k), k, n, N - shift) *
                                     poch_finite(qn(r + k), k, n, N - shift));
            expect.add(pref * den, shift);
        }
        CHECK(series_eq(gf_left, expect.take(), N));
    }
}

TEST_CASE("partition theorems on reduced grids") {
    CHECK(verify_partition_theorem(TheoremTag::RR2, 20).pass);
    CHECK(verify_partition_theorem(TheoremTag::RR1, 20).pass);
    CHECK(verify_partition_theorem(TheoremTag::RS33, 16).pass);
    CHECK(verify_partition_theorem(TheoremTag::RS31, 16).pass);
    CHECK(verify_partition_theorem(TheoremTag::RS32, 16).pass);
    CHECK(verify_partition_theorem(TheoremTag::Lemma1, 24).pass);
    CHECK(verify_partition_theorem(TheoremTag::T2, 24).pass);
    CHECK(verify_partition_theorem(TheoremTag::T3, 24).pass);
    CHECK(verify_partition_theorem(TheoremTag::T4, 18).pass);
}

TEST_CASE("identity parameter validation") {
    CHECK_THROWS_AS(verify_identity(IdentityId{IdentityTag::Rskeq, {}, {}, 2, 1, 4}, 20),
                    InvalidIdentityParameters);
    CHECK_THROWS_AS(verify_identity(IdentityId{IdentityTag::HHK, {}, {}, 1, 3, 4}, 20),
                    InvalidIdentityParameters);
    CHECK_THROWS_AS(verify_identity(IdentityId{IdentityTag::E151AK, {}, {}, 3, 0, 3}, 20),
                    InvalidIdentityParameters);
    CHECK_THROWS_AS(build_sides(IdentityId{IdentityTag::QBinomial}, 20),
                    InvalidIdentityParameters);
    CHECK_THROWS_AS(IdentityId::tag_from_name("S42"), InvalidIdentityParameters);
    CHECK_THROWS_AS(theorem_from_name("T9"), InvalidIdentityParameters);
}

TEST_CASE("default grids have the documented shapes") {
    CHECK(default_grid(IdentityTag::QBinomial).size() == 15);  // zero + both signs, t = 0..6
    CHECK(default_grid(IdentityTag::HH).size() == 100);
    CHECK(default_grid(IdentityTag::E151A).size() == 10);
    CHECK(default_grid(IdentityTag::S14).size() == 1);
    for (const auto& id : default_grid(IdentityTag::Rskeq)) {
        CHECK(id.k <= 8);
        CHECK(0 < id.r);
        CHECK(id.r < id.s);
        CHECK(id.r + id.s < id.k);
    }
    CHECK(default_order(IdentityTag::Rskeq) == 80);
    CHECK(default_order(IdentityTag::S33) == 60);
}
