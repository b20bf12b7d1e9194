#include "qident/json_io.hpp"

namespace qident {

nlohmann::ordered_json to_json(const Partition& p) {
    return nlohmann::ordered_json{{"parts", p.parts()}};
}

nlohmann::ordered_json to_json(const Bipartition& bp) {
    return nlohmann::ordered_json{{"pi", bp.pi.parts()}, {"lambda", bp.lambda.parts()}};
}

nlohmann::ordered_json to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j{{"identity", rep.name}, {"order", rep.order}, {"verdict", rep.verdict()}};
    if (rep.divergence) {
        nlohmann::ordered_json d{{"exponent", rep.divergence->exponent},
                         {"lhs", rep.divergence->lhs},
                         {"rhs", rep.divergence->rhs}};
        if (rep.divergence->z_degree >= 0) d["z_degree"] = rep.divergence->z_degree;
        j["first_divergence"] = d;
    }
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

} // namespace qident
