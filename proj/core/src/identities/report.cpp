#include "treecalc/identities/report.hpp"

namespace treecalc {

bool IdentityReport::passed() const
{
    if (!equal) {
        return false;
    }
    for (const auto &[name, ok] : cross_checks) {
        if (!ok) {
            return false;
        }
    }
    return true;
}

nlohmann::json IdentityReport::to_json() const
{
    nlohmann::json out;
    out["identity"] = identity;
    out["parameters"] = parameters;
    out["lhs"] = lhs;
    out["rhs"] = rhs;
    out["equal"] = equal;
    out["cross_checks"] = cross_checks;
    if (per_tree) {
        out["per_tree"] = *per_tree;
    }
    out["elapsed_ms"] = elapsed_ms;
    return out;
}

} // namespace treecalc
