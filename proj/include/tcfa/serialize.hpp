#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tcfa/stability.hpp"

namespace tcfa {

using Json = nlohmann::ordered_json;

struct ParsedSpace {
    SpaceCohomology space;
    std::vector<std::string> warnings;  // e.g. merged duplicate classes
};

// Strict parse of a space description document: unknown keys are rejected,
// duplicate (c,w) classes are merged with a warning.
ParsedSpace parse_space_json(const Json& doc);
ParsedSpace parse_space_text(const std::string& text);

Json space_to_json(const SpaceCohomology& space);

// "graded" array: [{"k":..., "pieces":[{"c","w","schur":{"[2,1]": "3", ...}}]}]
// with canonical partition keys and deterministic ordering; rationals as
// "p/q" strings.
Json character_to_json(const FBCharacter& f);
FBCharacter character_from_json(const Json& graded, int max_degree);

Json report_to_json(const StabilityReport& rep);

// Full result document with meta (command, parameters, engine version).
Json result_file(const std::string& command, const Json& parameters,
                 const FBCharacter* character, const StabilityReport* report);

// Fixed-width human table of a character: k, c, w, Schur expansion, dim.
std::string character_table(const FBCharacter& f);

}  // namespace tcfa
