#include "mi/json_io.hpp"

#include <nlohmann/json.hpp>

namespace mi {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(0, 0, "malformed JSON");
    return j;
}

}  // namespace

std::string to_json(const MonomialIdeal& ideal) {
    json j;
    j["nvars"] = ideal.nvars();
    j["gens"] = json::array();
    for (const auto& g : ideal.gens()) j["gens"].push_back(g.exps());
    return j.dump();
}

MonomialIdeal ideal_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("nvars") || !j.contains("gens"))
        throw ParseError(0, 0, "ideal JSON needs nvars and gens");
    int n = j["nvars"].get<int>();
    std::vector<Monomial> gens;
    for (const auto& row : j["gens"]) {
        std::vector<int> e = row.get<std::vector<int>>();
        if (static_cast<int>(e.size()) != n)
            throw ParseError(0, 0, "generator row length differs from nvars");
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(n, std::move(gens));
}

std::string to_json(const SimplicialComplex& complex) {
    json j;
    j["nvars"] = complex.n;
    j["minimal_nonfaces"] = json::array();
    for (const auto& nf : complex.minimal_nonfaces) {
        json row = json::array();
        for (int i : nf.elements()) row.push_back(i + 1);
        j["minimal_nonfaces"].push_back(row);
    }
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = parse(text);
    SimplicialComplex c;
    c.n = j.at("nvars").get<int>();
    for (const auto& row : j.at("minimal_nonfaces")) {
        VarSet s;
        for (int i : row.get<std::vector<int>>()) {
            if (i < 1 || i > c.n) throw ParseError(0, 0, "vertex out of range");
            s.add(i - 1);
        }
        c.minimal_nonfaces.push_back(s);
    }
    return c;
}

std::string to_json(const PolarizedIdeal& polarized) {
    json j;
    j["extension"] = polarized.extension();
    j["gens"] = json::array();
    for (const auto& g : polarized.gens()) {
        json gen = json::array();
        for (const auto& [var, slot] : g) gen.push_back(json::array({var + 1, slot}));
        j["gens"].push_back(gen);
    }
    return j.dump();
}

PolarizedIdeal polarized_from_json(const std::string& text) {
    json j = parse(text);
    std::vector<int> extension = j.at("extension").get<std::vector<int>>();
    int n = static_cast<int>(extension.size());
    std::vector<std::vector<SlotVar>> gens;
    for (const auto& gen : j.at("gens")) {
        std::vector<SlotVar> slots;
        for (const auto& pair : gen) {
            int var = pair.at(0).get<int>();
            int slot = pair.at(1).get<int>();
            if (var < 1 || var > n) throw ParseError(0, 0, "variable out of range");
            slots.push_back({var - 1, slot});
        }
        gens.push_back(std::move(slots));
    }
    return PolarizedIdeal(n, std::move(gens));
}

}  // namespace mi
