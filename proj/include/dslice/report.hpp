#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "dslice/invariants.hpp"
#include "dslice/obstructions.hpp"
#include "dslice/seifert.hpp"

namespace dslice {

using ojson = nlohmann::ordered_json;

// Structured verdict record. Identical inputs produce byte-identical records;
// every obstructed/certified verdict embeds its inequality instance with all
// numbers, so records are re-checkable without recomputation.
struct Report {
    std::string subcommand;
    std::string input_digest;
    ojson result;
    std::vector<std::string> warnings;

    std::string to_record() const;  // single-line JSON
    std::string to_text() const;
};

std::string fnv1a_digest(const std::string& data);

ojson rohlin_json(const obstruct::RohlinCertificate& c);
ojson mt_json(const obstruct::MTVerdict& v);
ojson refutation_json(const obstruct::RefutationWitness& w);
ojson deep_slice_json(const obstruct::DeepSliceCertificate& c);
ojson family_rule_json(const obstruct::FamilyRuleVerdict& v);

// Re-evaluates the inequality instances embedded in a record; returns false
// if any stated verdict does not match its own numbers.
bool verify_record(const std::string& record_line);

}  // namespace dslice
