#pragma once

#include <json.hpp>

#include "rpl/abc.hpp"
#include "rpl/bounds.hpp"
#include "rpl/sequence.hpp"
#include "rpl/solver.hpp"

namespace rpl {

// All big integers are emitted as decimal strings; interval endpoints as
// outward-rounded decimal strings. Keys are in fixed insertion order so
// output is byte-stable for a fixed config. Every object carries
// "schema": "v1".
using json = nlohmann::ordered_json;

json solution_json(const Solution& sol);
json solution_set_header_json(const SolutionSet& set);
json bounds_json(const RecurrenceSequence& seq, const EffectiveBounds& eb,
                 const mpz_class& x, const mpz_class& n_bound);
json validation_json(const std::string& descriptor, const ValidationReport& rep);
json xy_json(const XYRecord& rec);
json abc_json(const std::string& descriptor, const XYRecord& rec, const AbcTriple& t);
json quality_entry_json(const std::string& descriptor, const QualityEntry& e);
json family_json(const FamilyResult& fam);

std::string solution_csv_header();
std::string solution_csv_row(const Solution& sol);

} // namespace rpl
