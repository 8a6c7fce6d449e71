#include "rpl/json_io.hpp"

#include <sstream>

namespace rpl {

namespace {
constexpr const char* kSchema = "v1";
}

json solution_json(const Solution& sol) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "solution";
    j["n"] = sol.n;
    j["m"] = sol.m;
    j["x"] = sol.x.get_str();
    j["q"] = sol.q;
    j["value"] = sol.value.get_str();
    j["certified_complete"] = sol.certified_complete;
    return j;
}

json solution_set_header_json(const SolutionSet& set) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "run";
    j["sequence"] = set.sequence;
    j["mode"] = set.mode == SearchMode::fixed_x ? "fixed_x" : "unconstrained";
    j["n_bound_used"] = set.n_bound_used;
    if (set.theorem_bound)
        j["theorem_bound"] = set.theorem_bound->get_str();
    else
        j["theorem_bound"] = nullptr;
    j["solution_count"] = set.solutions.size();
    return j;
}

json bounds_json(const RecurrenceSequence& seq, const EffectiveBounds& eb,
                 const mpz_class& x, const mpz_class& n_bound) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "bounds";
    j["sequence"] = seq.descriptor();
    j["x"] = x.get_str();
    j["precision_bits"] = long(eb.precision_bits);
    json trace = json::array();
    for (const auto& e : eb.trace) {
        json t;
        t["name"] = e.name;
        t["formula"] = e.formula;
        t["lo"] = e.value.lo_str();
        t["hi"] = e.value.hi_str();
        t["precision_bits"] = long(e.value.precision());
        trace.push_back(std::move(t));
    }
    j["trace"] = std::move(trace);
    j["search_bound"] = n_bound.get_str();
    return j;
}

json validation_json(const std::string& descriptor, const ValidationReport& rep) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "validation";
    j["sequence"] = descriptor;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = rep.all_pass();
    return j;
}

json xy_json(const XYRecord& rec) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "xy_record";
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["X"] = rec.X.get_str();
    j["S"] = rec.S.get_str();
    j["Y"] = rec.Y.get_str();
    j["d"] = rec.d.get_str();
    return j;
}

json abc_json(const std::string& descriptor, const XYRecord& rec, const AbcTriple& t) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "abc_triple";
    j["seq"] = descriptor;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["A"] = t.A.get_str();
    j["B"] = t.B.get_str();
    j["C"] = t.C.get_str();
    j["d"] = rec.d.get_str();
    j["residual_gcd"] = t.residual_gcd.get_str();
    j["rad"] = t.rad.get_str();
    j["quality"] = t.quality;
    j["complete_factorization"] = t.complete_factorization;
    j["abc_conjectural"] = true;
    return j;
}

json quality_entry_json(const std::string& descriptor, const QualityEntry& e) {
    return abc_json(descriptor, e.record, e.trip);
}

json family_json(const FamilyResult& fam) {
    json j;
    j["schema"] = kSchema;
    j["type"] = "family";
    j["sequence"] = fam.seq.descriptor();
    j["identity_ok"] = fam.identity_ok;
    json sols = json::array();
    for (const auto& s : fam.solutions) {
        json e = solution_json(s);
        e["verified"] = true;
        sols.push_back(std::move(e));
    }
    j["solutions"] = std::move(sols);
    return j;
}

std::string solution_csv_header() {
    return "n,m,x,q,value,certified_complete";
}

std::string solution_csv_row(const Solution& sol) {
    std::ostringstream os;
    os << sol.n << ',' << sol.m << ',' << sol.x.get_str() << ',' << sol.q << ','
       << sol.value.get_str() << ',' << (sol.certified_complete ? "true" : "false");
    return os.str();
}

} // namespace rpl
