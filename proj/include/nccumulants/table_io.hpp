#pragma once

// JSON table documents:
//
//   {
//     "generators": ["a", "b"],
//     "kind": "moment",
//     "max_degree": 3,
//     "values": { "a": "0", "b": "1/2", "aa": "1", ... }
//   }
//
// Values are exact rational strings; JSON integers are also read, JSON
// floats are rejected. Word keys concatenate generator names, joined by
// "." when any name is longer than one character. Output lists words by
// degree, then lexicographically, so equal tables give identical bytes.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "scalar.hpp"
#include "transforms.hpp"
#include "word.hpp"
#include "word_table.hpp"

namespace nccum {

struct TableDocument {
    std::vector<std::string> generators;
    CumulantTable table;
};

namespace detail {

inline bool dotted(const std::vector<std::string>& names) {
    for (const auto& n : names)
        if (n.size() != 1) return true;
    return false;
}

inline void check_generator_names(const std::vector<std::string>& names) {
    if (names.empty()) throw ParseError("no generators");
    if (names.size() > max_alphabet_size) throw ParseError("too many generators");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw ParseError("empty generator name");
        if (n.find('.') != std::string::npos) throw ParseError("generator name contains '.': \"" + n + "\"");
        if (!seen.insert(n).second) throw ParseError("duplicate generator \"" + n + "\"");
    }
}

}  // namespace detail

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
    const bool dots = detail::dotted(names);
    std::string s;
    for (std::size_t i = 0; i < w.degree(); ++i) {
        if (dots && i > 0) s.push_back('.');
        s += names.at(w[i]);
    }
    return s;
}

inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
    if (text.empty()) throw ParseError("empty word");
    Word w;
    auto letter = [&](std::string_view name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<Letter>(i);
        throw ParseError("unknown generator \"" + std::string(name) + "\" in word \"" + std::string(text) + "\"");
    };
    if (detail::dotted(names)) {
        std::size_t start = 0;
        while (true) {
            const auto dot = text.find('.', start);
            w.push_back(letter(text.substr(start, dot - start)));
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
    } else {
        for (char c : text) w.push_back(letter(std::string_view(&c, 1)));
    }
    return w;
}

// Throws ParseError on malformed documents and MissingValue when a word of
// degree <= max_degree has no value.
inline TableDocument parse_table_document(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("table document must be a JSON object");
    for (const char* key : {"generators", "kind", "max_degree", "values"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    for (const auto& [key, _] : doc.items())
        if (key != "generators" && key != "kind" && key != "max_degree" && key != "values")
            throw ParseError("unknown field \"" + key + "\"");

    TableDocument out;
    if (!doc["generators"].is_array()) throw ParseError("\"generators\" must be a list of strings");
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) throw ParseError("\"generators\" must be a list of strings");
        out.generators.push_back(g.get<std::string>());
    }
    detail::check_generator_names(out.generators);

    if (!doc["kind"].is_string()) throw ParseError("\"kind\" must be a string");
    out.table.kind = parse_kind(doc["kind"].get<std::string>());

    if (!doc["max_degree"].is_number_unsigned()) throw ParseError("\"max_degree\" must be a positive integer");
    const auto n = doc["max_degree"].get<std::uint64_t>();
    if (n < 1 || n > 10) throw ParseError("\"max_degree\" must be in 1..10");
    const std::size_t k = out.generators.size();
    try {
        check_size_caps(k, n);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }

    if (!doc["values"].is_object()) throw ParseError("\"values\" must be an object");
    WordTable values(k, n);
    std::set<Word> given;
    for (const auto& [key, v] : doc["values"].items()) {
        const Word w = parse_word(key, out.generators);
        if (w.degree() > n)
            throw ParseError("word \"" + key + "\" is longer than max_degree " + std::to_string(n));
        Scalar q;
        if (v.is_string()) q = parse_scalar(v.get<std::string>());
        else if (v.is_number_integer()) q = parse_scalar(v.dump());
        else throw ParseError("value of \"" + key + "\" must be an exact rational string");
        if (!given.insert(w).second) throw ParseError("duplicate word \"" + key + "\"");
        values.set(w, std::move(q));
    }
    for (const auto& [w, _] : values.values())
        if (!given.count(w))
            throw MissingValue("table has no value for word \"" + format_word(w, out.generators) + "\"");
    out.table.values = std::move(values);
    return out;
}

inline std::string write_table_document(const TableDocument& d) {
    nlohmann::ordered_json doc;
    doc["generators"] = d.generators;
    doc["kind"] = std::string(to_string(d.table.kind));
    doc["max_degree"] = d.table.values.max_degree();
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [w, v] : d.table.values.values()) values[format_word(w, d.generators)] = to_string(v);
    doc["values"] = std::move(values);
    return doc.dump(2) + "\n";
}

// One "word = value" line per entry.
inline std::string write_table_text(const TableDocument& d) {
    std::string s = "# " + std::string(to_string(d.table.kind)) + ", degree <= " +
                    std::to_string(d.table.values.max_degree()) + "\n";
    for (const auto& [w, v] : d.table.values.values())
        s += format_word(w, d.generators) + " = " + to_string(v) + "\n";
    return s;
}

}  // namespace nccum
