#pragma once

// JSON word files and reports.
//
// Word file:
//   {"holes": 3,
//    "twists": [{"set": [0], "sign": 1}, ..., {"set": [0,1,2], "sign": 1}],
//    "labels": {"t": 1, "q1": 0}}          // optional
//
// Solve report:
//   {"status": "complete"|"truncated"|"inconclusive",
//    "solutions": [{"sets": [[0,1],[1,2,3]], "multiplicities": [1,1],
//                   "boundary": [1,0,1,1],
//                   "homology": {"euler": 2, "b2": 1, "h1": []}}],
//    "diagnostics": {...}}

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "planarfill/families.hpp"
#include "planarfill/filling_invariants.hpp"
#include "planarfill/mcg_core.hpp"
#include "planarfill/relations.hpp"
#include "planarfill/solver.hpp"

namespace planarfill::io {

using json = nlohmann::json;

struct WordFile {
    MonodromyWord word;
    std::optional<HoleLabeling> labels;
};

namespace detail {

inline long long integer_field(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
    return v.get<long long>();
}

inline HoleSet hole_set_field(const json& v, const std::string& where, int holes) {
    if (!v.is_array()) throw ParseError(where, "expected an array of hole indices");
    if (v.empty()) throw ParseError(where, "hole set is empty");
    std::vector<Hole> hs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        long long h = integer_field(v[i], at);
        if (h < 0 || h >= holes)
            throw ParseError(at, "hole index " + std::to_string(h) + " out of range for " + std::to_string(holes) + " holes");
        if (std::find(hs.begin(), hs.end(), static_cast<Hole>(h)) != hs.end())
            throw ParseError(at, "duplicate hole index " + std::to_string(h));
        hs.push_back(static_cast<Hole>(h));
    }
    return HoleSet(std::move(hs));
}

// 1-based line and column of a byte offset.
inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

inline WordFile parse_word_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("", "word file must be a JSON object");
    if (!doc.contains("holes")) throw ParseError("holes", "missing field");
    long long n = detail::integer_field(doc["holes"], "holes");
    if (n < 1 || n > 1024) throw ParseError("holes", "hole count must be between 1 and 1024");
    const int holes = static_cast<int>(n);

    if (!doc.contains("twists")) throw ParseError("twists", "missing field");
    const json& tw = doc["twists"];
    if (!tw.is_array()) throw ParseError("twists", "expected an array");
    WordFile out{MonodromyWord(Surface(holes)), std::nullopt};
    for (std::size_t i = 0; i < tw.size(); ++i) {
        const std::string at = "twists[" + std::to_string(i) + "]";
        const json& t = tw[i];
        if (!t.is_object()) throw ParseError(at, "expected an object with set and sign");
        if (!t.contains("set")) throw ParseError(at + ".set", "missing field");
        HoleSet s = detail::hole_set_field(t["set"], at + ".set", holes);
        long long sign = 1;
        if (t.contains("sign")) {
            sign = detail::integer_field(t["sign"], at + ".sign");
            if (sign != 1 && sign != -1) throw ParseError(at + ".sign", "sign must be 1 or -1");
        }
        out.word.push(std::move(s), static_cast<int>(sign));
    }

    if (doc.contains("labels")) {
        const json& lab = doc["labels"];
        if (!lab.is_object()) throw ParseError("labels", "expected an object mapping names to hole indices");
        HoleLabeling labels;
        std::vector<bool> used(static_cast<std::size_t>(holes), false);
        for (auto it = lab.begin(); it != lab.end(); ++it) {
            const std::string at = "labels." + it.key();
            long long h = detail::integer_field(it.value(), at);
            if (h < 0 || h >= holes) throw ParseError(at, "hole index " + std::to_string(h) + " out of range");
            if (used[static_cast<std::size_t>(h)]) throw ParseError(at, "hole " + std::to_string(h) + " labeled twice");
            used[static_cast<std::size_t>(h)] = true;
            labels[it.key()] = static_cast<Hole>(h);
        }
        out.labels = std::move(labels);
    }
    return out;
}

inline WordFile parse_word_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
    }
    return parse_word_json(doc);
}

inline WordFile parse_word_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_word_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().empty() ? 0 : e.where().size() + 2));
    }
}

inline json hole_set_json(const HoleSet& s) { return json(s.holes()); }

inline json word_json(const MonodromyWord& w, const std::optional<HoleLabeling>& labels = std::nullopt) {
    json twists = json::array();
    for (const auto& t : w.twists()) twists.push_back({{"set", hole_set_json(t.set)}, {"sign", t.sign}});
    json doc = {{"holes", w.holes()}, {"twists", twists}};
    if (labels) doc["labels"] = *labels;
    return doc;
}

inline json image_json(const AbelianImage& img) {
    json pairs = json::array();
    for (Hole i = 0; i < img.holes(); ++i)
        for (Hole j = i + 1; j < img.holes(); ++j)
            if (img.pair(i, j) != 0) pairs.push_back({i, j, img.pair(i, j)});
    json singles = json::array();
    for (Hole i = 0; i < img.holes(); ++i) singles.push_back(img.single(i));
    json bounds = json::array();
    for (Hole i = 0; i < img.holes(); ++i) bounds.push_back(target_bound(img, i));
    return {{"holes", img.holes()}, {"pairs", pairs}, {"singles", singles}, {"bounds", bounds}};
}

inline json homology_json(const FillingHomology& h) { return {{"euler", h.euler}, {"b2", h.b2}, {"h1", h.h1()}}; }

inline json factorization_json(const Factorization& f, bool with_homology = true) {
    json sets = json::array(), mult = json::array();
    for (const auto& [s, m] : f.sets) {
        sets.push_back(hole_set_json(s));
        mult.push_back(m);
    }
    json doc = {{"sets", sets}, {"multiplicities", mult}, {"boundary", f.boundary}};
    if (with_homology) doc["homology"] = homology_json(filling_homology(f));
    return doc;
}

inline json solve_report_json(const SolveResult& r, json diagnostics = json::object()) {
    json sols = json::array();
    for (const auto& f : r.solutions) sols.push_back(factorization_json(f));
    diagnostics["nodes"] = r.nodes;
    diagnostics["solution_count"] = r.solutions.size();
    return {{"status", to_string(r.status)}, {"solutions", sols}, {"diagnostics", diagnostics}};
}

inline json constraint_report_json(const ConstraintReport& r) {
    json w = json::array();
    for (const auto& x : r.witnesses) {
        const char* kind = x.kind == InfeasibilityWitness::Kind::NegativePair    ? "negative_pair"
                           : x.kind == InfeasibilityWitness::Kind::NegativeBound ? "negative_bound"
                                                                                 : "pair_exceeds_bound";
        json e = {{"kind", kind}, {"hole", x.i}, {"value", x.value}, {"message", x.message}};
        if (x.j >= 0) e["other"] = x.j;
        w.push_back(e);
    }
    json img = image_json(r.target);
    return {{"holes", r.holes}, {"bounds", r.bounds}, {"pairs", img["pairs"]}, {"singles", img["singles"]},
            {"witnesses", w}, {"infeasible", r.infeasible()}};
}

inline json certificate_json(const RewriteCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"A", hole_set_json(s.instance.a())},
                         {"B", hole_set_json(s.instance.b())},
                         {"C", hole_set_json(s.instance.c())},
                         {"direction", to_string(s.direction)},
                         {"sign", s.sign},
                         {"position", s.position}});
    return steps;
}

inline RewriteCertificate certificate_from_json(const json& doc, const Surface& surface) {
    if (!doc.is_array()) throw ParseError("", "certificate must be a JSON array of steps");
    RewriteCertificate cert;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string at = "[" + std::to_string(i) + "]";
        const json& s = doc[i];
        if (!s.is_object()) throw ParseError(at, "expected a step object");
        for (const char* f : {"A", "B", "C", "direction", "sign", "position"})
            if (!s.contains(f)) throw ParseError(at + "." + f, "missing field");
        auto a = detail::hole_set_field(s["A"], at + ".A", surface.holes);
        auto b = detail::hole_set_field(s["B"], at + ".B", surface.holes);
        auto c = detail::hole_set_field(s["C"], at + ".C", surface.holes);
        if (!s["direction"].is_string()) throw ParseError(at + ".direction", "expected a string");
        const auto dir = s["direction"].get<std::string>();
        if (dir != "forward" && dir != "backward") throw ParseError(at + ".direction", "expected forward or backward");
        long long sign = detail::integer_field(s["sign"], at + ".sign");
        if (sign != 1 && sign != -1) throw ParseError(at + ".sign", "sign must be 1 or -1");
        long long pos = detail::integer_field(s["position"], at + ".position");
        if (pos < 0) throw ParseError(at + ".position", "position must be nonnegative");
        try {
            cert.steps.push_back({LanternInstance(surface, a, b, c),
                                  dir == "forward" ? RewriteDirection::Forward : RewriteDirection::Backward,
                                  static_cast<int>(sign), static_cast<std::size_t>(pos)});
        } catch (const InvalidInstance& e) {
            throw ParseError(at, e.what());
        }
    }
    return cert;
}

}  // namespace planarfill::io
