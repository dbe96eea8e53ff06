#include "tcfa/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "tcfa/version.hpp"

namespace tcfa {

namespace {

void require_keys(const Json& obj, const std::vector<std::string>& allowed,
                  const std::string& what) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw InvalidInput(what + ": unknown key \"" + key + "\"");
    }
}

int get_int(const Json& obj, const std::string& key, int fallback, bool required = false) {
    if (!obj.contains(key)) {
        if (required) throw InvalidInput("missing key \"" + key + "\"");
        return fallback;
    }
    if (!obj[key].is_number_integer()) throw InvalidInput("key \"" + key + "\" must be an integer");
    return obj[key].get<int>();
}

bool get_bool(const Json& obj, const std::string& key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean()) throw InvalidInput("key \"" + key + "\" must be a boolean");
    return obj[key].get<bool>();
}

}  // namespace

ParsedSpace parse_space_json(const Json& doc) {
    if (!doc.is_object()) throw InvalidInput("space file: top level must be an object");
    require_keys(doc,
                 {"dimension", "irreducible", "trivial_multiplication", "top_triv",
                  "cohomology_gap_s", "classes"},
                 "space file");
    ParsedSpace out;
    out.space.d = get_int(doc, "dimension", 1, true);
    out.space.irreducible = get_bool(doc, "irreducible", false);
    out.space.trivial_multiplication = get_bool(doc, "trivial_multiplication", false);
    out.space.top_triv = get_int(doc, "top_triv", 0);
    out.space.gap_s = get_int(doc, "cohomology_gap_s", 0);
    if (!doc.contains("classes") || !doc["classes"].is_array())
        throw InvalidInput("space file: \"classes\" must be an array");
    std::map<std::pair<int, int>, int> merged;
    std::vector<std::pair<int, int>> order;
    for (const auto& entry : doc["classes"]) {
        if (!entry.is_object()) throw InvalidInput("space file: class entries must be objects");
        require_keys(entry, {"c", "w", "dim"}, "space file class");
        int c = get_int(entry, "c", 0, true);
        int w = get_int(entry, "w", 0, true);
        int dim = get_int(entry, "dim", 0, true);
        auto key = std::make_pair(c, w);
        if (merged.count(key)) {
            out.warnings.push_back("duplicate class at (c=" + std::to_string(c) +
                                   ", w=" + std::to_string(w) + ") merged with summed dimension");
        } else {
            order.push_back(key);
        }
        merged[key] += dim;
    }
    for (const auto& key : order)
        out.space.classes.push_back({key.first, key.second, merged[key]});
    out.space.validate();
    return out;
}

ParsedSpace parse_space_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("space file: malformed JSON: ") + e.what());
    }
    return parse_space_json(doc);
}

Json space_to_json(const SpaceCohomology& space) {
    Json doc;
    doc["dimension"] = space.d;
    doc["irreducible"] = space.irreducible;
    doc["trivial_multiplication"] = space.trivial_multiplication;
    doc["top_triv"] = space.top_triv;
    doc["cohomology_gap_s"] = space.gap_s;
    Json classes = Json::array();
    for (const auto& cl : space.classes) {
        Json e;
        e["c"] = cl.c;
        e["w"] = cl.w;
        e["dim"] = cl.dim;
        classes.push_back(std::move(e));
    }
    doc["classes"] = std::move(classes);
    return doc;
}

Json character_to_json(const FBCharacter& f) {
    Json graded = Json::array();
    for (const auto& [k, slice] : f.slices()) {
        Json entry;
        entry["k"] = k;
        Json pieces = Json::array();
        for (const auto& [cw, fn] : slice) {
            Json piece;
            piece["c"] = cw.c;
            piece["w"] = cw.w;
            Json schur = Json::object();
            SymFunc expansion = fn.to_schur();
            for (const auto& [lam, coeff] : expansion.coeffs())
                schur[lam.to_string()] = rat_to_string(coeff);
            piece["schur"] = std::move(schur);
            pieces.push_back(std::move(piece));
        }
        entry["pieces"] = std::move(pieces);
        graded.push_back(std::move(entry));
    }
    return graded;
}

FBCharacter character_from_json(const Json& graded, int max_degree) {
    if (!graded.is_array()) throw InvalidInput("graded character: expected an array");
    FBCharacter f(max_degree);
    for (const auto& entry : graded) {
        int k = get_int(entry, "k", 0, true);
        for (const auto& piece : entry.at("pieces")) {
            int c = get_int(piece, "c", 0, true);
            int w = get_int(piece, "w", 0, true);
            SymFunc fn(Basis::Schur);
            for (const auto& [key, value] : piece.at("schur").items())
                fn.set(Partition::parse(key), rat_from_string(value.get<std::string>()));
            f.add(k, c, w, fn.to_power());
        }
    }
    return f;
}

Json report_to_json(const StabilityReport& rep) {
    Json out;
    out["mode"] = rep.mode;
    out["n"] = rep.n;
    out["d"] = rep.d;
    if (rep.c0 >= 0) out["c0"] = rep.c0;
    if (rep.m >= 0) out["m"] = rep.m;
    if (rep.i >= 0) out["i"] = rep.i;
    if (rep.s)
        out["s"] = *rep.s;
    else
        out["s"] = nullptr;
    out["b"] = rat_to_string(rep.b);
    out["vanishing"] = rep.vanishing;
    if (!rep.acting_algebra.empty()) out["acting_algebra"] = rep.acting_algebra;
    if (rep.window) {
        out["generator_window"] = Json{{"lo", rep.window->lo}, {"hi", rep.window->hi}};
    }
    out["exact"] = rep.exact;
    out["certified"] = rep.certified;
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    if (rep.ch_operators) out["operators"] = character_to_json(*rep.ch_operators);
    if (rep.ch_generators) out["generators"] = character_to_json(*rep.ch_generators);
    if (rep.quotient) out["quotient"] = character_to_json(*rep.quotient);
    return out;
}

Json result_file(const std::string& command, const Json& parameters, const FBCharacter* character,
                 const StabilityReport* report) {
    Json out;
    out["meta"] = Json{{"command", command}, {"parameters", parameters},
                       {"engine_version", kEngineVersion}};
    if (character) out["graded"] = character_to_json(*character);
    if (report) out["report"] = report_to_json(*report);
    return out;
}

std::string character_table(const FBCharacter& f) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "k" << std::setw(6) << "c" << std::setw(6) << "w"
        << std::setw(8) << "dim" << "schur\n";
    for (const auto& [k, slice] : f.slices()) {
        for (const auto& [cw, fn] : slice) {
            Rat dim = fn.dimension();
            out << std::left << std::setw(4) << k << std::setw(6) << cw.c << std::setw(6) << cw.w
                << std::setw(8) << rat_to_string(dim) << fn.to_string() << "\n";
        }
    }
    return out.str();
}

}  // namespace tcfa
