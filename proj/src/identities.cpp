#include "qident/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "qident/classes.hpp"

namespace qident {

namespace {

SignedMonomial qp(std::int64_t e) { return SignedMonomial::q_power(+1, e); }
SignedMonomial qn(std::int64_t e) { return SignedMonomial::q_power(-1, e); }

QSeries inv(const QSeries& s) { return series_invert(s); }

/// Accumulates sign * q^shift * term(order - shift) style summands.
struct TermSum {
    std::int64_t order;
    SeriesBuilder acc;
    explicit TermSum(std::int64_t ord) : order(ord), acc(ord) {}

    template <typename F>
    void add(int sign, std::int64_t shift, F&& make) {
        if (shift < 0)
            throw NegativeExponent("summand with negative leading exponent " +
                                   std::to_string(shift));
        if (shift >= order) return;
        QSeries t = make(order - shift);
        acc.add(sign >= 0 ? t : -t, shift);
    }
    QSeries take() { return acc.take(); }
};

// Loop bound for summands whose minimal exponent is n^2 + beta*n (or steeper):
// for n > |beta| the exponent exceeds n, so order + |beta| + 1 covers everything.
std::int64_t quad_cap(std::int64_t order, std::int64_t beta) {
    return order + std::abs(beta) + 1;
}

struct NamedTag {
    IdentityTag tag;
    const char* name;
};

constexpr std::array<NamedTag, 18> kIdentities{{
    {IdentityTag::QBinomial, "QBINOMIAL"},
    {IdentityTag::Rskeq, "RSKEQ"},
    {IdentityTag::HH, "HH"},
    {IdentityTag::HHK, "HHK"},
    {IdentityTag::E151A, "E151A"},
    {IdentityTag::E151B, "E151B"},
    {IdentityTag::E151AK, "E151AK"},
    {IdentityTag::SymEq, "SYMEQ"},
    {IdentityTag::SymEqK, "SYMEQK"},
    {IdentityTag::S14, "S14"},
    {IdentityTag::S16, "S16"},
    {IdentityTag::S94, "S94"},
    {IdentityTag::S18, "S18"},
    {IdentityTag::S20, "S20"},
    {IdentityTag::S99, "S99"},
    {IdentityTag::S31, "S31"},
    {IdentityTag::S32, "S32"},
    {IdentityTag::S33, "S33"},
}};

} // namespace

IdentityTag IdentityId::tag_from_name(const std::string& name) {
    for (const auto& [tag, nm] : kIdentities)
        if (name == nm) return tag;
    throw InvalidIdentityParameters("unknown identity tag '" + name + "'");
}

std::string IdentityId::tag_name(IdentityTag tag) {
    for (const auto& [t, nm] : kIdentities)
        if (t == tag) return nm;
    throw Error("unknown identity tag");
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [t, nm] : kIdentities) v.emplace_back(nm);
        return v;
    }();
    return names;
}

std::string IdentityId::describe() const {
    std::ostringstream os;
    os << tag_name(tag);
    switch (tag) {
        case IdentityTag::Rskeq:
        case IdentityTag::HHK:
            os << "(r=" << r << ",s=" << s << ",k=" << k << ")";
            break;
        case IdentityTag::SymEqK:
            os << "(r=" << r << ",s=" << s << ",k=" << k << ")";
            break;
        case IdentityTag::E151AK:
            os << "(r=" << r << ",k=" << k << ")";
            break;
        case IdentityTag::QBinomial:
            os << "(a=" << a.to_string() << ",M=" << z_order << ")";
            break;
        case IdentityTag::HH:
        case IdentityTag::SymEq:
            os << "(a=" << a.to_string() << ",b=" << b.to_string() << ")";
            break;
        case IdentityTag::E151A:
        case IdentityTag::E151B:
            os << "(a=" << a.to_string() << ")";
            break;
        default:
            break;
    }
    return os.str();
}

void IdentityId::validate() const {
    auto fail = [&](const std::string& why) {
        throw InvalidIdentityParameters(describe() + ": " + why);
    };
    switch (tag) {
        case IdentityTag::Rskeq:
        case IdentityTag::HHK:
            if (!(0 < r && r < s && r + s < k)) fail("requires 0 < r < s < r+s < k");
            break;
        case IdentityTag::E151AK:
            if (!(0 < r && r < k)) fail("requires 0 < r < k");
            break;
        case IdentityTag::SymEqK:
            if (!(0 < r && r < s && s < k)) fail("requires 0 < r < s < k");
            break;
        case IdentityTag::QBinomial:
            if (z_order < 1) fail("requires z-order >= 1");
            break;
        default:
            break;
    }
}

std::int64_t default_order(IdentityTag tag) {
    return tag == IdentityTag::Rskeq ? 80 : 60;
}

std::vector<IdentityId> default_grid(IdentityTag tag) {
    std::vector<IdentityId> ids;
    auto monomials = [](std::int64_t max_t) {
        std::vector<SignedMonomial> ms;
        for (std::int64_t t = 0; t <= max_t; ++t) {
            ms.push_back(qp(t));
            ms.push_back(qn(t));
        }
        return ms;
    };
    switch (tag) {
        case IdentityTag::QBinomial: {
            IdentityId id{tag};
            id.a = SignedMonomial::zero();
            ids.push_back(id);
            for (const auto& a : monomials(6)) {
                id.a = a;
                ids.push_back(id);
            }
            break;
        }
        case IdentityTag::Rskeq:
        case IdentityTag::HHK: {
            const int kmax = tag == IdentityTag::Rskeq ? 8 : 7;
            for (int k = 4; k <= kmax; ++k)
                for (int r = 1; r < k; ++r)
                    for (int s = r + 1; r + s < k; ++s)
                        ids.push_back(IdentityId{tag, {}, {}, r, s, k});
            break;
        }
        case IdentityTag::E151AK:
            for (int k = 2; k <= 7; ++k)
                for (int r = 1; r < k; ++r) ids.push_back(IdentityId{tag, {}, {}, r, 0, k});
            break;
        case IdentityTag::SymEqK:
            for (int k = 3; k <= 7; ++k)
                for (int r = 1; r < k; ++r)
                    for (int s = r + 1; s < k; ++s)
                        ids.push_back(IdentityId{tag, {}, {}, r, s, k});
            break;
        case IdentityTag::HH:
        case IdentityTag::SymEq:
            for (const auto& a : monomials(4))
                for (const auto& b : monomials(4)) {
                    IdentityId id{tag};
                    id.a = a;
                    id.b = b;
                    ids.push_back(id);
                }
            break;
        case IdentityTag::E151A:
        case IdentityTag::E151B:
            for (const auto& a : monomials(4)) {
                IdentityId id{tag};
                id.a = a;
                ids.push_back(id);
            }
            break;
        default:
            ids.push_back(IdentityId{tag});
            break;
    }
    return ids;
}

namespace {

// ---- individual identity sides ------------------------------------------

QSeries rskeq_lhs(int r, int s, int k, std::int64_t N) {
    TermSum sum(N);
    for (std::int64_t n = 0; (r + k) * n < N; ++n)
        sum.add(+1, (r + k) * n, [&](std::int64_t ord) {
            return poch_finite(qn(s), k, n, ord) * inv(poch_finite(qp(k), k, n, ord));
        });
    return sum.take();
}

QSeries rskeq_rhs(int r, int s, int k, std::int64_t N) {
    return poch_infinite(qn(s + r + k), k, N) * inv(poch_infinite(qp(r + k), k, N));
}

QSeries hhk_lhs(int r, int s, int k, std::int64_t N) {
    TermSum sum(N);
    for (std::int64_t n = 0; n * r + k * n * (n + 1) / 2 < N; ++n)
        sum.add(+1, n * r + k * n * (n + 1) / 2, [&](std::int64_t ord) {
            return poch_finite(qn(s), k, n, ord) * inv(poch_finite(qp(k), k, n, ord));
        });
    return sum.take();
}

QSeries hhk_rhs(int r, int s, int k, std::int64_t N) {
    TermSum sum(N);
    for (std::int64_t n = 0; (s + r) * n + k * n * n < N; ++n)
        sum.add(+1, (s + r) * n + k * n * n, [&](std::int64_t ord) {
            return inv(poch_finite(qp(k), k, n, ord) * poch_finite(qn(r + k), k, n, ord));
        });
    return poch_infinite(qn(r + k), k, N) * sum.take();
}

QSeries hh_lhs(const SignedMonomial& a, const SignedMonomial& b, std::int64_t N) {
    TermSum sum(N);
    const std::int64_t cap = quad_cap(2 * N, b.is_zero() ? 0 : b.expo());
    for (std::int64_t n = 0; n <= cap; ++n) {
        SignedMonomial bn = b.pow(n);
        if (bn.is_zero()) break;  // only n = 0 contributes for b = 0
        sum.add(bn.sign(), bn.expo() + n * (n + 1) / 2, [&](std::int64_t ord) {
            return poch_finite(a.negated(), 1, n, ord) * inv(poch_finite(qp(1), 1, n, ord));
        });
    }
    return sum.take();
}

QSeries hh_rhs(const SignedMonomial& a, const SignedMonomial& b, std::int64_t N) {
    const SignedMonomial ab = a.times(b);
    const SignedMonomial mbq = b.negated().shifted(1);  // -bq
    TermSum sum(N);
    const std::int64_t cap = quad_cap(N, ab.is_zero() ? 0 : ab.expo());
    for (std::int64_t n = 0; n <= cap; ++n) {
        SignedMonomial abn = ab.pow(n);
        if (abn.is_zero()) break;
        sum.add(abn.sign(), abn.expo() + n * n, [&](std::int64_t ord) {
            return inv(poch_finite(qp(1), 1, n, ord) * poch_finite(mbq, 1, n, ord));
        });
    }
    return poch_infinite(mbq, 1, N) * sum.take();
}

QSeries e151_lhs(const SignedMonomial& a, std::int64_t N) {
    TermSum sum(N);
    const std::int64_t cap = quad_cap(N, a.is_zero() ? 0 : a.expo() + 1);
    for (std::int64_t n = 0; n <= cap; ++n) {
        SignedMonomial an = a.pow(n);
        if (an.is_zero()) break;
        sum.add(an.sign(), an.expo() + n * n + n,
                [&](std::int64_t ord) { return inv(poch_finite(qp(1), 1, n, ord)); });
    }
    return sum.take();
}

// shared by E151A (inner exponent n^2+2n, base shift 2) and E151B (n^2+n, shift 3)
QSeries e151_rhs(const SignedMonomial& a, std::int64_t N, bool first_form) {
    const SignedMonomial anchor = a.negated().shifted(first_form ? 2 : 3);
    const std::int64_t lin = first_form ? 2 : 1;
    TermSum sum(N);
    const std::int64_t cap = quad_cap(N, (a.is_zero() ? 0 : a.expo()) + lin);
    for (std::int64_t n = 0; n <= cap; ++n) {
        SignedMonomial an = a.pow(n);
        if (an.is_zero()) break;
        sum.add(an.sign(), an.expo() + n * n + lin * n, [&](std::int64_t ord) {
            return inv(poch_finite(qp(2), 2, n, ord) * poch_finite(anchor, 2, n, ord));
        });
    }
    return poch_infinite(anchor, 2, N) * sum.take();
}

QSeries e151ak_side(int r, int k, std::int64_t N, bool lhs) {
    TermSum sum(N);
    if (lhs) {
        for (std::int64_t n = 0; r * n + k * (n * n + n) < N; ++n)
            sum.add(+1, r * n + k * (n * n + n),
                    [&](std::int64_t ord) { return inv(poch_finite(qp(k), k, n, ord)); });
        return sum.take();
    }
    for (std::int64_t n = 0; r * n + k * (n * n + 2 * n) < N; ++n)
        sum.add(+1, r * n + k * (n * n + 2 * n), [&](std::int64_t ord) {
            return inv(poch_finite(qp(2 * k), 2 * k, n, ord) *
                       poch_finite(qn(r + 2 * k), 2 * k, n, ord));
        });
    return poch_infinite(qn(r + 2 * k), 2 * k, N) * sum.take();
}

// One side of the symmetric transformation: prefactor (-uq;q)_inf times
// sum_n v^n q^{n(n+1)/2} / ((q;q)_n (-uq;q)_n).
QSeries symeq_side(const SignedMonomial& u, const SignedMonomial& v, std::int64_t N) {
    const SignedMonomial muq = u.negated().shifted(1);
    TermSum sum(N);
    const std::int64_t cap = quad_cap(2 * N, v.is_zero() ? 0 : v.expo());
    for (std::int64_t n = 0; n <= cap; ++n) {
        SignedMonomial vn = v.pow(n);
        if (vn.is_zero()) break;
        sum.add(vn.sign(), vn.expo() + n * (n + 1) / 2, [&](std::int64_t ord) {
            return inv(poch_finite(qp(1), 1, n, ord) * poch_finite(muq, 1, n, ord));
        });
    }
    return poch_infinite(muq, 1, N) * sum.take();
}

QSeries symeqk_side(int u, int v, int k, std::int64_t N) {
    // prefactor (-q^{u+k};q^k)_inf, summand q^{vn} q^{k n(n+1)/2}
    TermSum sum(N);
    for (std::int64_t n = 0; v * n + k * n * (n + 1) / 2 < N; ++n)
        sum.add(+1, v * n + k * n * (n + 1) / 2, [&](std::int64_t ord) {
            return inv(poch_finite(qp(k), k, n, ord) * poch_finite(qn(u + k), k, n, ord));
        });
    return poch_infinite(qn(u + k), k, N) * sum.take();
}

QSeries slater_product(std::initializer_list<int> expos, int mod, std::int64_t N) {
    QSeries acc = QSeries::one(N);
    for (int e : expos) acc = acc * poch_infinite(qp(e), mod, N);
    return inv(acc);
}

QSeries slater_lhs(IdentityTag tag, std::int64_t N) {
    TermSum sum(N);
    switch (tag) {
        case IdentityTag::S14:
            for (std::int64_t n = 0; n * n + n < N; ++n)
                sum.add(+1, n * n + n,
                        [&](std::int64_t ord) { return inv(poch_finite(qp(1), 1, n, ord)); });
            return sum.take();
        case IdentityTag::S16:
            for (std::int64_t n = 0; n * n + 2 * n < N; ++n)
                sum.add(+1, n * n + 2 * n,
                        [&](std::int64_t ord) { return inv(poch_finite(qp(4), 4, n, ord)); });
            return poch_infinite(qn(2), 2, N) * sum.take();
        case IdentityTag::S94:
            for (std::int64_t n = 0; n * n + n < N; ++n)
                sum.add(+1, n * n + n, [&](std::int64_t ord) {
                    return inv(poch_finite(qp(2), 2, n, ord) * poch_finite(qn(1), 2, n + 1, ord));
                });
            return poch_infinite(qn(1), 2, N) * sum.take();
        case IdentityTag::S18:
            for (std::int64_t n = 0; n * n < N; ++n)
                sum.add(+1, n * n,
                        [&](std::int64_t ord) { return inv(poch_finite(qp(1), 1, n, ord)); });
            return sum.take();
        case IdentityTag::S20:
            for (std::int64_t n = 0; n * n < N; ++n)
                sum.add(+1, n * n, [&](std::int64_t ord) {
                    return inv(poch_finite(qp(2), 2, n, ord) * poch_finite(qn(2), 2, n, ord));
                });
            return poch_infinite(qn(2), 2, N) * sum.take();
        case IdentityTag::S99:
            for (std::int64_t n = 0; n * n + n < N; ++n)
                sum.add(+1, n * n + n, [&](std::int64_t ord) {
                    return inv(poch_finite(qp(2), 2, n, ord) * poch_finite(qn(1), 2, n, ord));
                });
            return poch_infinite(qn(1), 2, N) * sum.take();
        case IdentityTag::S33:
            for (std::int64_t n = 0; 2 * n * n < N; ++n)
                sum.add(+1, 2 * n * n, [&](std::int64_t ord) {
                    return inv(poch_finite(qp(2), 2, n, ord) * poch_finite(qn(1), 1, 2 * n, ord));
                });
            return poch_infinite(qn(1), 1, N) * sum.take();
        case IdentityTag::S31:
            for (std::int64_t n = 0; 2 * n * n + 2 * n < N; ++n)
                sum.add(+1, 2 * n * n + 2 * n, [&](std::int64_t ord) {
                    return inv(poch_finite(qp(2), 2, n, ord) * poch_finite(qn(2), 1, 2 * n, ord));
                });
            return poch_infinite(qn(2), 1, N) * sum.take();
        case IdentityTag::S32:
            for (std::int64_t n = 0; 2 * n * n + 2 * n < N; ++n)
                sum.add(+1, 2 * n * n + 2 * n, [&](std::int64_t ord) {
                    return inv(poch_finite(qp(2), 2, n, ord) * poch_finite(qn(1), 1, 2 * n, ord));
                });
            return poch_infinite(qn(1), 1, N) * sum.take();
        default:
            throw Error("not a Slater-numbered tag");
    }
}

QSeries slater_rhs(IdentityTag tag, std::int64_t N) {
    switch (tag) {
        case IdentityTag::S14:
        case IdentityTag::S16:
        case IdentityTag::S94:
            return slater_product({2, 3}, 5, N);
        case IdentityTag::S18:
        case IdentityTag::S20:
        case IdentityTag::S99:
            return slater_product({1, 4}, 5, N);
        case IdentityTag::S33:
            return slater_product({1, 2, 5, 6}, 7, N);
        case IdentityTag::S31:
            return slater_product({2, 3, 4, 5}, 7, N);
        case IdentityTag::S32:
            return slater_product({1, 3, 4, 6}, 7, N);
        default:
            throw Error("not a Slater-numbered tag");
    }
}

} // namespace

std::pair<QSeries, QSeries> build_sides(const IdentityId& id, std::int64_t order) {
    id.validate();
    switch (id.tag) {
        case IdentityTag::QBinomial:
            throw InvalidIdentityParameters("QBINOMIAL is bivariate; use build_sides_bivariate");
        case IdentityTag::Rskeq:
            return {rskeq_lhs(id.r, id.s, id.k, order), rskeq_rhs(id.r, id.s, id.k, order)};
        case IdentityTag::HHK:
            return {hhk_lhs(id.r, id.s, id.k, order), hhk_rhs(id.r, id.s, id.k, order)};
        case IdentityTag::HH:
            return {hh_lhs(id.a, id.b, order), hh_rhs(id.a, id.b, order)};
        case IdentityTag::E151A:
            return {e151_lhs(id.a, order), e151_rhs(id.a, order, true)};
        case IdentityTag::E151B:
            return {e151_lhs(id.a, order), e151_rhs(id.a, order, false)};
        case IdentityTag::E151AK:
            return {e151ak_side(id.r, id.k, order, true), e151ak_side(id.r, id.k, order, false)};
        case IdentityTag::SymEq:
            return {symeq_side(id.b, id.a, order), symeq_side(id.a, id.b, order)};
        case IdentityTag::SymEqK:
            return {symeqk_side(id.r, id.s, id.k, order), symeqk_side(id.s, id.r, id.k, order)};
        default:
            return {slater_lhs(id.tag, order), slater_rhs(id.tag, order)};
    }
}

std::pair<BivariateSeries, BivariateSeries> build_sides_bivariate(const IdentityId& id,
                                                                  std::int64_t q_order) {
    id.validate();
    if (id.tag != IdentityTag::QBinomial)
        throw InvalidIdentityParameters(id.describe() + " is univariate");
    return {qbinomial_lhs(id.a, id.z_order, q_order), qbinomial_rhs(id.a, id.z_order, q_order)};
}

VerificationReport compare_series(const std::string& name, const QSeries& lhs,
                                  const QSeries& rhs, std::int64_t upto) {
    VerificationReport rep;
    rep.name = name;
    rep.order = upto;
    if (lhs.order() < upto || rhs.order() < upto)
        throw InsufficientOrder("comparison up to " + std::to_string(upto) +
                                " exceeds the operands' truncation order");
    for (std::int64_t e = 0; e < upto; ++e) {
        const Int &cl = lhs.coeff(e), &cr = rhs.coeff(e);
        if (cl != cr) {
            rep.pass = false;
            rep.divergence = Divergence{e, -1, cl.str(), cr.str()};
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

VerificationReport verify_identity(const IdentityId& id, std::int64_t order) {
    if (id.tag == IdentityTag::QBinomial) {
        auto [lhs, rhs] = build_sides_bivariate(id, order);
        VerificationReport rep;
        rep.name = id.describe();
        rep.order = order;
        for (std::int64_t d = 0; d < lhs.z_order(); ++d)
            for (std::int64_t e = 0; e < order; ++e) {
                const Int &cl = lhs.z_coeff(d).coeff(e), &cr = rhs.z_coeff(d).coeff(e);
                if (cl != cr) {
                    rep.pass = false;
                    rep.divergence = Divergence{e, d, cl.str(), cr.str()};
                    return rep;
                }
            }
        rep.pass = true;
        return rep;
    }
    auto [lhs, rhs] = build_sides(id, order);
    return compare_series(id.describe(), lhs, rhs, order);
}

// ---- partition theorems ---------------------------------------------------

namespace {

constexpr std::array<std::pair<TheoremTag, const char*>, 9> kTheorems{{
    {TheoremTag::Lemma1, "LEMMA1"},
    {TheoremTag::T2, "T2"},
    {TheoremTag::T3, "T3"},
    {TheoremTag::T4, "T4"},
    {TheoremTag::RR1, "RR1"},
    {TheoremTag::RR2, "RR2"},
    {TheoremTag::RS31, "RS31"},
    {TheoremTag::RS32, "RS32"},
    {TheoremTag::RS33, "RS33"},
}};

VerificationReport theorem_fail(const std::string& name, std::int64_t m_max,
                                const std::string& detail) {
    VerificationReport rep;
    rep.name = name;
    rep.order = m_max;
    rep.pass = false;
    rep.detail = detail;
    return rep;
}

VerificationReport count_equality_theorem(const std::string& name,
                                          const std::vector<ClassTag>& tags,
                                          std::int64_t m_max) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
        std::vector<std::int64_t> counts;
        for (ClassTag t : tags) counts.push_back(class_count(ClassSpec{t}, m));
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] != counts[0]) {
                std::ostringstream os;
                os << "counts diverge at m=" << m << ":";
                for (std::size_t j = 0; j < tags.size(); ++j)
                    os << " " << ClassSpec{tags[j]}.name() << "=" << counts[j];
                return theorem_fail(name, m_max, os.str());
            }
    }
    VerificationReport rep;
    rep.name = name;
    rep.order = m_max;
    rep.pass = true;
    return rep;
}

VerificationReport lemma1_theorem(std::int64_t m_max) {
    for (int k = 4; k <= 6; ++k)
        for (int r = 1; r < k; ++r)
            for (int s = r + 1; r + s < k; ++s)
                for (int n = 1; n <= 4; ++n) {
                    ClassSpec ca{ClassTag::Lemma1A, n, r, s, k};
                    ClassSpec cb{ClassTag::Lemma1B, n, r, s, k};
                    for (std::int64_t m = 0; m <= m_max; ++m) {
                        auto na = class_count(ca, m);
                        auto nb = class_count(cb, m);
                        if (na != nb) {
                            std::ostringstream os;
                            os << "A_n(m) != B_n(m) at (n,r,s,k,m)=(" << n << "," << r << "," << s
                               << "," << k << "," << m << "): " << na << " vs " << nb;
                            return theorem_fail("LEMMA1", m_max, os.str());
                        }
                    }
                }
    VerificationReport rep;
    rep.name = "LEMMA1";
    rep.order = m_max;
    rep.pass = true;
    return rep;
}

// Shared shape of the T2/T3 checks: the A-class with n markers matches the
// n-total-part stratum of the conjugate class, and the fixed-n refinements
// partition the conjugate class.
VerificationReport stratified_theorem(const std::string& name, std::int64_t m_max, bool t2) {
    std::vector<std::array<int, 3>> grid;  // (r, s, k)
    if (t2) {
        for (int k = 4; k <= 6; ++k)
            for (int r = 1; r < k; ++r)
                for (int s = r + 1; r + s < k; ++s) grid.push_back({r, s, k});
    } else {
        for (int k = 2; k <= 4; ++k)
            for (int r = 1; r < k; ++r) grid.push_back({r, 0, k});
    }
    for (auto [r, s, k] : grid) {
        for (std::int64_t m = 0; m <= m_max; ++m) {
            ClassSpec big{t2 ? ClassTag::T2B : ClassTag::T3B, 0, r, s, k};
            auto members = class_members(big, m);
            std::map<int, std::int64_t> by_total_parts;
            std::map<int, std::int64_t> by_anchor_parts;
            for (const auto& p : members) {
                ++by_total_parts[static_cast<int>(p.size())];
                int anchors = 0;
                for (int v : p.parts()) {
                    if (t2) {
                        if (v % k == (r + s) % k) ++anchors;
                    } else {
                        if (v % (2 * k) == (r + k) % (2 * k)) ++anchors;
                    }
                }
                ++by_anchor_parts[anchors];
            }
            // A_n(m) vs the n-part stratum of the conjugate class
            for (int n = 1;; ++n) {
                std::int64_t min_weight =
                    t2 ? static_cast<std::int64_t>(n) * r + std::int64_t(k) * n * (n + 1) / 2
                       : static_cast<std::int64_t>(n) * r + std::int64_t(k) * n * (n + 1);
                if (min_weight > m) break;
                ClassSpec ca{t2 ? ClassTag::T2A : ClassTag::T3A, n, r, s, k};
                auto na = class_count(ca, m);
                auto nb = by_total_parts.count(n) ? by_total_parts[n] : 0;
                if (na != nb) {
                    std::ostringstream os;
                    os << "A-class vs " << n << "-part stratum at (n,r,s,k,m)=(" << n << "," << r
                       << "," << s << "," << k << "," << m << "): " << na << " vs " << nb;
                    return theorem_fail(name, m_max, os.str());
                }
            }
            // fixed-n refinements partition the class
            std::int64_t total = 0;
            for (int n = 0;; ++n) {
                ClassSpec cn{t2 ? ClassTag::T2Bn : ClassTag::T3Bn, n, r, s, k};
                auto cnt = class_count(cn, m);
                auto expect = by_anchor_parts.count(n) ? by_anchor_parts[n] : 0;
                if (cnt != expect) {
                    std::ostringstream os;
                    os << "fixed-n refinement mismatch at (n,r,s,k,m)=(" << n << "," << r << ","
                       << s << "," << k << "," << m << "): " << cnt << " vs " << expect;
                    return theorem_fail(name, m_max, os.str());
                }
                total += cnt;
                // anchor parts are distinct with gaps >= 2k, so n+1 of them
                // outweigh m once the smallest ladder exceeds it
                std::int64_t lo = t2 ? (r + s + k) : (r + 3 * k);
                std::int64_t step = 2 * k;
                std::int64_t min_w = static_cast<std::int64_t>(n + 1) * lo +
                                     step * static_cast<std::int64_t>(n + 1) * n / 2;
                if (min_w > m) break;
            }
            if (total != static_cast<std::int64_t>(members.size()))
                return theorem_fail(name, m_max, "refinement strata do not partition the class");
        }
    }
    VerificationReport rep;
    rep.name = name;
    rep.order = m_max;
    rep.pass = true;
    return rep;
}

VerificationReport t4_theorem(std::int64_t m_max) {
    for (int k = 3; k <= 5; ++k)
        for (int r = 1; r < k; ++r)
            for (int s = r + 1; s < k; ++s)
                for (std::int64_t m = 0; m <= m_max; ++m) {
                    auto collect = [&](ClassTag t) {
                        std::vector<Partition> all;
                        const int anchor = t == ClassTag::T4LeftN ? s : r;
                        for (int n = 0;; ++n) {
                            // n distinct anchor-class parts weigh at least
                            // anchor+k, anchor+2k, ..., anchor+nk
                            std::int64_t min_w = static_cast<std::int64_t>(n) * anchor +
                                                 std::int64_t(k) * n * (n + 1) / 2;
                            if (n > 0 && min_w > m) break;
                            auto mem = class_members(ClassSpec{t, n, r, s, k}, m);
                            all.insert(all.end(), mem.begin(), mem.end());
                        }
                        std::sort(all.begin(), all.end());
                        return all;
                    };
                    auto left = collect(ClassTag::T4LeftN);
                    auto right = collect(ClassTag::T4RightN);
                    if (left != right) {
                        std::ostringstream os;
                        os << "left/right member sets differ at (r,s,k,m)=(" << r << "," << s
                           << "," << k << "," << m << "): " << left.size() << " vs "
                           << right.size();
                        return theorem_fail("T4", m_max, os.str());
                    }
                }
    VerificationReport rep;
    rep.name = "T4";
    rep.order = m_max;
    rep.pass = true;
    return rep;
}

} // namespace

TheoremTag theorem_from_name(const std::string& name) {
    for (const auto& [tag, nm] : kTheorems)
        if (name == nm) return tag;
    throw InvalidIdentityParameters("unknown theorem tag '" + name + "'");
}

std::string theorem_name(TheoremTag tag) {
    for (const auto& [t, nm] : kTheorems)
        if (t == tag) return nm;
    throw Error("unknown theorem tag");
}

const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [t, nm] : kTheorems) v.emplace_back(nm);
        return v;
    }();
    return names;
}

VerificationReport verify_partition_theorem(TheoremTag tag, std::int64_t m_max) {
    switch (tag) {
        case TheoremTag::Lemma1:
            return lemma1_theorem(m_max);
        case TheoremTag::T2:
            return stratified_theorem("T2", m_max, true);
        case TheoremTag::T3:
            return stratified_theorem("T3", m_max, false);
        case TheoremTag::T4:
            return t4_theorem(m_max);
        case TheoremTag::RR1:
            return count_equality_theorem(
                "RR1", {ClassTag::RR1A, ClassTag::RR1B, ClassTag::RR1C, ClassTag::RR1D}, m_max);
        case TheoremTag::RR2:
            return count_equality_theorem(
                "RR2", {ClassTag::RR2A, ClassTag::RR2B, ClassTag::RR2C, ClassTag::RR2D}, m_max);
        case TheoremTag::RS31:
            return count_equality_theorem(
                "RS31", {ClassTag::RS31A, ClassTag::RS31B, ClassTag::RS31C}, m_max);
        case TheoremTag::RS32:
            return count_equality_theorem(
                "RS32", {ClassTag::RS32A, ClassTag::RS32B, ClassTag::RS32C}, m_max);
        case TheoremTag::RS33:
            return count_equality_theorem(
                "RS33", {ClassTag::RS33A, ClassTag::RS33B, ClassTag::RS33C}, m_max);
    }
    throw Error("unknown theorem tag");
}

} // namespace qident
