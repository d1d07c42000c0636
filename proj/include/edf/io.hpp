// Line-oriented family files and the append-only classification catalog.
//
// Family file: a "group <spec>" line followed by one "set ..." line per
// subset. Elements are coordinate tuples like (1,2); single-factor groups
// write bare integers. '#' starts a comment. Writing sorts elements within
// each set, so write-read-write is byte stable; set order is preserved
// because it is meaningful for variable-size families.
//
// Catalog: one '|'-separated record per line, append-only, last record wins
// per (kind, params, group) key.

#pragma once

#include <cctype>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "edf/diffcore.hpp"
#include "edf/feasibility.hpp"
#include "edf/group.hpp"

namespace edf {

inline std::string format_element(const FiniteAbelianGroup& g, GroupElement e) {
    if (g.single_factor()) return std::to_string(e);
    std::string s = "(";
    auto coords = g.decode(e);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

inline GroupElement parse_element(const FiniteAbelianGroup& g, std::string_view tok) {
    auto fail = [&] { throw std::invalid_argument("bad element token \"" + std::string(tok) + "\""); };
    auto parse_uint = [&](std::string_view s) -> std::uint64_t {
        if (s.empty()) fail();
        std::uint64_t v = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > max_group_order) fail();
        }
        return v;
    };
    if (!tok.empty() && tok.front() == '(') {
        if (tok.back() != ')') fail();
        tok.remove_prefix(1);
        tok.remove_suffix(1);
        std::vector<std::uint32_t> coords;
        std::size_t start = 0;
        while (start <= tok.size()) {
            std::size_t comma = tok.find(',', start);
            std::string_view part = tok.substr(start, comma == std::string_view::npos ? tok.size() - start
                                                                                      : comma - start);
            coords.push_back(static_cast<std::uint32_t>(parse_uint(part)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return g.encode(coords);  // validates arity and ranges
    }
    std::uint64_t v = parse_uint(tok);
    if (!g.single_factor())
        throw std::invalid_argument("bare integer element in a multi-factor group; use a tuple");
    if (v >= g.order()) throw std::out_of_range("element out of range");
    return static_cast<GroupElement>(v);
}

inline SetFamily read_family(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_group = false;
    FiniteAbelianGroup group({2});  // replaced once the group line is read
    std::vector<std::vector<GroupElement>> sets;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("family file line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;
        if (word == "group") {
            if (have_group) fail("duplicate group line");
            std::string spec;
            if (!(ss >> spec)) fail("missing group spec");
            if (ss >> word) fail("trailing tokens after group spec");
            group = parse_group(spec);
            have_group = true;
        } else if (word == "set") {
            if (!have_group) fail("set line before group line");
            std::vector<GroupElement> s;
            while (ss >> word) s.push_back(parse_element(group, word));
            sets.push_back(std::move(s));
        } else {
            fail("unknown directive \"" + word + "\"");
        }
    }
    if (!have_group) throw std::invalid_argument("family file: missing group line");
    if (sets.empty()) throw std::invalid_argument("family file: no set lines");
    SetFamily fam{std::move(group), std::move(sets)};
    validate_family(fam);
    return fam;
}

inline void write_family(std::ostream& out, const SetFamily& fam) {
    out << "group " << format_group(fam.group) << "\n";
    for (const auto& s : fam.sets) {
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        out << "set";
        for (GroupElement e : sorted) out << ' ' << format_element(fam.group, e);
        out << "\n";
    }
}

inline SetFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file: " + path);
    return read_family(in);
}

inline void write_family_file(const std::string& path, const SetFamily& fam) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write family file: " + path);
    write_family(out, fam);
}

inline std::string format_family(const SetFamily& fam) {
    std::ostringstream ss;
    write_family(ss, fam);
    return ss.str();
}

// ----- catalog ---------------------------------------------------------

struct CatalogRecord {
    std::string kind;        // "sedf" or "gsedf"
    std::string params;      // "9,2,4,2" or "7,4;1,1,1,4;1,1,1,2"
    std::string group_spec;  // "-" when not tied to a concrete group
    std::string status;
    std::string rules;    // comma-joined fired rules, "-" when none
    std::string witness;  // construction descriptor, "-" when absent
    std::string timestamp;
};

inline std::string format_params(const SedfParams& p) {
    return std::to_string(p.n) + "," + std::to_string(p.m) + "," + std::to_string(p.k) + "," +
           std::to_string(p.lambda);
}

inline std::string format_params(const GsedfParams& p) {
    auto join = [](const std::vector<std::uint64_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    return std::to_string(p.n) + "," + std::to_string(p.m()) + ";" + join(p.ks) + ";" + join(p.lambdas);
}

inline std::string format_rules(const std::vector<Rule>& rules) {
    if (rules.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (i) s += ',';
        s += rule_name(rules[i]);
    }
    return s;
}

inline std::string iso8601_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline CatalogRecord make_catalog_record(const SedfParams& p, const FeasibilityVerdict& v,
                                         std::string group_spec = "-") {
    return CatalogRecord{"sedf",
                         format_params(p),
                         std::move(group_spec),
                         to_string(v.status),
                         format_rules(v.rules_fired),
                         v.witness ? to_string(*v.witness) : "-",
                         iso8601_utc_now()};
}

inline CatalogRecord make_catalog_record(const GsedfParams& p, const FeasibilityVerdict& v,
                                         std::string group_spec = "-") {
    return CatalogRecord{"gsedf",
                         format_params(p),
                         std::move(group_spec),
                         to_string(v.status),
                         format_rules(v.rules_fired),
                         v.witness ? to_string(*v.witness) : "-",
                         iso8601_utc_now()};
}

inline std::string catalog_line(const CatalogRecord& r) {
    return r.kind + "|" + r.params + "|" + r.group_spec + "|" + r.status + "|" + r.rules + "|" +
           r.witness + "|" + r.timestamp;
}

inline CatalogRecord parse_catalog_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = line.find('|', start);
        fields.push_back(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    if (fields.size() != 7) throw std::invalid_argument("catalog line has " + std::to_string(fields.size()) +
                                                        " fields, expected 7");
    return CatalogRecord{fields[0], fields[1], fields[2], fields[3], fields[4], fields[5], fields[6]};
}

inline void append_catalog(const std::string& path, const CatalogRecord& r) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot open catalog for append: " + path);
    out << catalog_line(r) << "\n";
}

// Missing file reads as empty.
inline std::vector<CatalogRecord> read_catalog(const std::string& path) {
    std::ifstream in(path);
    std::vector<CatalogRecord> out;
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_catalog_line(line));
    }
    return out;
}

// Last record wins per (kind, params, group_spec); first-seen key order.
inline std::vector<CatalogRecord> latest_records(const std::vector<CatalogRecord>& log) {
    std::vector<CatalogRecord> out;
    for (const auto& r : log) {
        bool found = false;
        for (auto& existing : out)
            if (existing.kind == r.kind && existing.params == r.params &&
                existing.group_spec == r.group_spec) {
                existing = r;
                found = true;
                break;
            }
        if (!found) out.push_back(r);
    }
    return out;
}

}  // namespace edf
