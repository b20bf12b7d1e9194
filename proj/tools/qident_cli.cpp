#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qident/classes.hpp"
#include "qident/conjugation.hpp"
#include "qident/identities.hpp"
#include "qident/json_io.hpp"
#include "qident/summation.hpp"

namespace {

using namespace qident;

SignedMonomial make_monomial(int sign, std::int64_t expo) {
    if (sign == 0) return SignedMonomial::zero();
    return SignedMonomial::q_power(sign, expo);
}

std::int64_t default_theorem_mmax(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::Lemma1: return 60;
        case TheoremTag::T2:
        case TheoremTag::T3: return 40;
        case TheoremTag::T4: return 30;
        case TheoremTag::RR1:
        case TheoremTag::RR2: return 40;
        default: return 30;
    }
}

void print_report(const VerificationReport& rep, bool as_json) {
    if (as_json) {
        std::cout << to_json(rep).dump() << "\n";
        return;
    }
    std::cout << rep.verdict() << " " << rep.name << " (order " << rep.order << ")";
    if (rep.divergence) {
        std::cout << " first divergence at ";
        if (rep.divergence->z_degree >= 0) std::cout << "z^" << rep.divergence->z_degree << " ";
        std::cout << "q^" << rep.divergence->exponent << ": lhs=" << rep.divergence->lhs
                  << " rhs=" << rep.divergence->rhs;
    }
    if (!rep.detail.empty()) std::cout << " [" << rep.detail << "]";
    std::cout << "\n";
}

struct VerifyArgs {
    std::string target;
    std::int64_t order = 0;    // 0 = tag default
    std::int64_t m_max = -1;   // -1 = theorem default
    int r = 0, s = 0, k = 0;
    int a_sign = 2, b_sign = 2;  // 2 = unset
    std::int64_t a_exp = 0, b_exp = 0;
    std::int64_t z_order = 12;
    bool grid = false;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    std::vector<VerificationReport> reports;

    auto run_identity_tag = [&](IdentityTag tag) {
        std::int64_t order = args.order > 0 ? args.order : default_order(tag);
        bool explicit_params = args.r || args.s || args.k || args.a_sign != 2 || args.b_sign != 2;
        if (explicit_params && !args.grid) {
            IdentityId id{tag};
            id.r = args.r;
            id.s = args.s;
            id.k = args.k;
            if (args.a_sign != 2) id.a = make_monomial(args.a_sign, args.a_exp);
            if (args.b_sign != 2) id.b = make_monomial(args.b_sign, args.b_exp);
            id.z_order = args.z_order;
            reports.push_back(verify_identity(id, order));
        } else {
            for (const auto& id : default_grid(tag))
                reports.push_back(verify_identity(id, order));
        }
    };

    if (args.target == "all") {
        for (const auto& name : identity_names())
            run_identity_tag(IdentityId::tag_from_name(name));
        for (const auto& name : theorem_names()) {
            TheoremTag tag = theorem_from_name(name);
            std::int64_t mm = args.m_max >= 0 ? args.m_max : default_theorem_mmax(tag);
            reports.push_back(verify_partition_theorem(tag, mm));
        }
    } else {
        bool handled = false;
        for (const auto& name : identity_names())
            if (name == args.target) {
                run_identity_tag(IdentityId::tag_from_name(name));
                handled = true;
            }
        if (!handled) {
            TheoremTag tag = theorem_from_name(args.target);  // throws if unknown
            std::int64_t mm = args.m_max >= 0 ? args.m_max : default_theorem_mmax(tag);
            reports.push_back(verify_partition_theorem(tag, mm));
        }
    }

    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    bool all_pass = true;
    if (args.json) std::cout << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (args.json) {
            std::cout << "  " << to_json(reports[i]).dump()
                      << (i + 1 < reports.size() ? "," : "") << "\n";
        } else {
            print_report(reports[i], false);
        }
        all_pass = all_pass && reports[i].pass;
    }
    if (args.json) std::cout << "]\n";
    if (!args.json)
        std::cout << (all_pass ? "all checks passed" : "FAILURES detected") << " ("
                  << reports.size() << " checks)\n";
    return all_pass ? 0 : 1;
}

ClassSpec spec_from_args(const std::string& tag, int n, int r, int s, int k) {
    ClassSpec spec = ClassSpec::from_name(tag, n, r, s, k);
    spec.validate();
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-series identities and their partition-class "
                 "interpretations"};
    app.require_subcommand(1);

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "verify an identity, a partition theorem, or all");
    verify->add_option("target", vargs.target, "identity tag, theorem tag, or 'all'")->required();
    verify->add_option("--order", vargs.order, "truncation order (default per tag)");
    verify->add_option("--m-max", vargs.m_max, "weight bound for partition theorems");
    verify->add_option("--r", vargs.r, "parameter r");
    verify->add_option("--s", vargs.s, "parameter s");
    verify->add_option("--k", vargs.k, "parameter k");
    verify->add_option("--a-sign", vargs.a_sign, "sign of the monomial a (+1, -1, 0 for zero)");
    verify->add_option("--a-exp", vargs.a_exp, "exponent of the monomial a");
    verify->add_option("--b-sign", vargs.b_sign, "sign of the monomial b");
    verify->add_option("--b-exp", vargs.b_exp, "exponent of the monomial b");
    verify->add_option("--z-order", vargs.z_order, "z truncation order (QBINOMIAL)");
    verify->add_flag("--grid", vargs.grid, "sweep the documented parameter grid");
    verify->add_flag("--json", vargs.json, "emit JSON reports");

    std::string class_tag;
    std::int64_t weight = 0;
    int cn = 0, cr = 0, cs = 0, ck = 0;
    bool list_json = false;
    auto* count = app.add_subcommand("count", "count class members of a given weight");
    count->add_option("class", class_tag, "class tag, e.g. RR2_B or LEMMA1_A")->required();
    count->add_option("--m", weight, "weight")->required();
    count->add_option("--n", cn, "parameter n");
    count->add_option("--r", cr, "parameter r");
    count->add_option("--s", cs, "parameter s");
    count->add_option("--k", ck, "parameter k");

    auto* list = app.add_subcommand("list", "list class members of a given weight");
    list->add_option("class", class_tag, "class tag")->required();
    list->add_option("--m", weight, "weight")->required();
    list->add_option("--n", cn, "parameter n");
    list->add_option("--r", cr, "parameter r");
    list->add_option("--s", cs, "parameter s");
    list->add_option("--k", ck, "parameter k");
    list->add_flag("--json", list_json, "emit JSON");

    int bk = 0, br = 0, bn = 0;
    std::vector<int> parts;
    auto* conj = app.add_subcommand("conjugate", "apply the marker-strip block conjugation");
    conj->add_option("--k", bk, "block width")->required();
    conj->add_option("--r", br, "marker part size")->required();
    conj->add_option("--n", bn, "column count / marker multiplicity")->required();
    conj->add_option("--parts", parts, "partition parts, comma separated")
        ->required()
        ->delimiter(',');

    int lemma = 0;
    std::int64_t sn = 0, sm = 1, sorder = 30, sbase = 1;
    int sb_sign = 1;
    std::int64_t sb_exp = 0;
    auto* sum = app.add_subcommand("sum-check",
                                   "check nested sum = telescoped form = closed form");
    sum->add_option("--lemma", lemma, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    sum->add_option("--n", sn, "tuple length n")->required();
    sum->add_option("--m", sm, "parameter m")->required();
    sum->add_option("--b-sign", sb_sign, "sign of b (+1, -1, 0 for zero)")->required();
    sum->add_option("--b-exp", sb_exp, "exponent of b")->required();
    sum->add_option("--order", sorder, "truncation order");
    sum->add_option("--base", sbase, "verify the q -> q^base instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(vargs);

        if (count->parsed()) {
            ClassSpec spec = spec_from_args(class_tag, cn, cr, cs, ck);
            std::cout << class_count(spec, weight) << "\n";
            return 0;
        }

        if (list->parsed()) {
            ClassSpec spec = spec_from_args(class_tag, cn, cr, cs, ck);
            if (spec.is_bipartition_class()) {
                auto members = class_members_pairs(spec, weight);
                if (list_json) {
                    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                    for (const auto& bp : members) arr.push_back(to_json(bp));
                    std::cout << arr.dump() << "\n";
                } else {
                    for (const auto& bp : members)
                        std::cout << to_json(bp).dump() << "\n";
                }
            } else {
                auto members = class_members(spec, weight);
                if (list_json) {
                    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                    for (const auto& p : members) arr.push_back(to_json(p));
                    std::cout << arr.dump() << "\n";
                } else {
                    for (const auto& p : members) std::cout << to_json(p).dump() << "\n";
                }
            }
            return 0;
        }

        if (conj->parsed()) {
            Partition input(parts);
            BlockConjugationParams params{bk, br, bn};
            Partition residual = [&] {
                std::vector<int> rest;
                int skipped = 0;
                for (int x : input.parts())
                    if (x == br && skipped < bn)
                        ++skipped;
                    else
                        rest.push_back(x);
                return Partition(rest);
            }();
            int dropped = 0;
            Partition out = lemma1_forward(input, params, &dropped);
            auto cols = k_block_column_sums(residual, bk, bn);
            nlohmann::ordered_json j{{"input", to_json(input)},
                             {"markers_removed", to_json(residual)},
                             {"column_sums", cols},
                             {"output", to_json(out)}};
            if (dropped > 0) j["dropped_columns"] = dropped;
            Partition back = lemma1_inverse(out, params);
            j["inverse_round_trip"] = (back == input);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (sum->parsed()) {
            SumVariant variant = lemma == 1   ? SumVariant::L1
                                 : lemma == 2 ? SumVariant::L2
                                              : SumVariant::L3;
            SignedMonomial b = make_monomial(sb_sign, sb_exp);
            SumOptions opts;
            opts.base = sbase;
            QSeries brute = nested_sum(variant, sn, sm, b, sorder, opts);
            QSeries tele = telescope_eval(variant, sn, sm, b, sorder, sbase);
            QSeries closed = summation_rhs(sn, sm, b, sorder, sbase);
            std::cout << "nested    = " << to_string(brute) << "\n";
            std::cout << "telescope = " << to_string(tele) << "\n";
            std::cout << "closed    = " << to_string(closed) << "\n";
            bool ok = series_eq(brute, tele, sorder) && series_eq(brute, closed, sorder);
            std::cout << (ok ? "EQUAL" : "NOT EQUAL") << " to order " << sorder << "\n";
            return ok ? 0 : 1;
        }
    } catch (const qident::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
