#include "latder/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "latder/errors.hpp"

namespace latder {

using nlohmann::ordered_json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
    const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
    return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
}

const ordered_json& field(const ordered_json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name)) {
        throw ParseError(std::string("field '") + name + "': missing");
    }
    return doc.at(name);
}

void expect_format(const ordered_json& doc, const char* format) {
    const auto& f = field(doc, "format");
    if (!f.is_string() || f.get<std::string>() != format) {
        throw ParseError(std::string("field 'format': expected \"") + format + "\"");
    }
}

std::uint64_t as_count(const ordered_json& v, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw ParseError("field '" + where + "': expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

// Top-level keys on their own lines, values compact.
std::string layout(const ordered_json& doc) {
    std::string out = "{\n";
    std::size_t i = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
        out += "  " + ordered_json(it.key()).dump() + ": " + it.value().dump();
        out += i + 1 < doc.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

ordered_json provenance_json(const Provenance& p) {
    ordered_json j;
    j["family"] = p.family;
    j["params"] = p.params;
    j["seed"] = p.seed ? ordered_json(*p.seed) : ordered_json(nullptr);
    return j;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

}  // namespace

LatticeDocument parse_lattice(const std::string& text) {
    const ordered_json doc = parse_json(text);
    expect_format(doc, kLatticeFormat);
    const std::uint64_t size = as_count(field(doc, "size"), "size");
    const auto& covers = field(doc, "covers");
    if (!covers.is_array()) {
        throw ParseError("field 'covers': expected an array");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        const std::string where = "covers[" + std::to_string(i) + "]";
        const auto& c = covers[i];
        if (!c.is_array() || c.size() != 2) {
            throw ParseError("field '" + where + "': expected [lo, hi]");
        }
        const auto lo = as_count(c[0], where);
        const auto hi = as_count(c[1], where);
        if (lo >= size || hi >= size) {
            throw ParseError("field '" + where + "': element id out of range for size " +
                             std::to_string(size));
        }
        edges.push_back({static_cast<Elem>(lo), static_cast<Elem>(hi)});
    }
    std::vector<std::string> names;
    if (doc.contains("names") && !doc.at("names").is_null()) {
        const auto& n = doc.at("names");
        if (!n.is_array() || n.size() != size) {
            throw ParseError("field 'names': expected " + std::to_string(size) + " strings");
        }
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (!n[i].is_string()) {
                throw ParseError("field 'names[" + std::to_string(i) + "]': expected a string");
            }
            names.push_back(n[i].get<std::string>());
        }
    }
    std::optional<Provenance> provenance;
    if (doc.contains("provenance") && !doc.at("provenance").is_null()) {
        const auto& p = doc.at("provenance");
        if (!p.is_object() || !p.contains("family") || !p.at("family").is_string()) {
            throw ParseError("field 'provenance': expected {family, params, seed}");
        }
        Provenance prov;
        prov.family = p.at("family").get<std::string>();
        if (p.contains("params")) {
            prov.params = p.at("params");
        }
        if (p.contains("seed") && !p.at("seed").is_null()) {
            prov.seed = as_count(p.at("seed"), "provenance.seed");
        }
        provenance = std::move(prov);
    }
    try {
        return {build_lattice(size, std::move(edges), std::move(names)), std::move(provenance)};
    } catch (const CycleError& e) {
        throw ParseError(std::string("field 'covers': cycle: ") + e.what());
    } catch (const NotReducedError& e) {
        throw ParseError(std::string("field 'covers': ") + e.what());
    }
}

std::string dump_lattice(const FiniteLattice& lattice, const std::optional<Provenance>& provenance) {
    ordered_json doc;
    doc["format"] = kLatticeFormat;
    doc["size"] = lattice.size();
    ordered_json covers = ordered_json::array();
    for (const Edge& e : lattice.hasse()) {
        covers.push_back({e.lo, e.hi});
    }
    doc["covers"] = std::move(covers);
    if (lattice.poset().has_names()) {
        doc["names"] = lattice.poset().names();
    }
    if (provenance) {
        doc["provenance"] = provenance_json(*provenance);
    }
    return layout(doc);
}

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path + " for reading");
    }
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing " + path);
    }
}

LatticeDocument load_lattice(const std::string& path) {
    return parse_lattice(read_text(path));
}

void save_lattice(const FiniteLattice& lattice, const std::string& path,
                  const std::optional<Provenance>& provenance) {
    write_text(path, dump_lattice(lattice, provenance));
}

std::string lattice_hash(const FiniteLattice& lattice) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump_lattice(lattice)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

FacetLabelling parse_labels(const CoverPoset& cp, const std::string& text) {
    const ordered_json doc = parse_json(text);
    expect_format(doc, kLabelsFormat);
    const auto& entries = field(doc, "entries");
    if (!entries.is_array()) {
        throw ParseError("field 'entries': expected an array");
    }
    std::vector<std::optional<std::uint32_t>> labels(cp.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "entries[" + std::to_string(i) + "]";
        const auto& e = entries[i];
        if (!e.is_array() || e.size() != 3) {
            throw ParseError("field '" + where + "': expected [lo, hi, label]");
        }
        const Cover c{static_cast<Elem>(as_count(e[0], where)),
                      static_cast<Elem>(as_count(e[1], where))};
        const auto idx = cp.index_of(c);
        if (!idx) {
            throw ParseError("field '" + where + "': not a cover of the lattice");
        }
        if (labels[*idx]) {
            throw ParseError("field '" + where + "': duplicate cover");
        }
        labels[*idx] = static_cast<std::uint32_t>(as_count(e[2], where));
    }
    FacetLabelling f;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i]) {
            throw PartialLabellingError("no label for cover " + cp.label(i));
        }
        f.labels.push_back(*labels[i]);
    }
    return f;
}

std::string dump_labels(const CoverPoset& cp, const FacetLabelling& f) {
    if (f.labels.size() != cp.size()) {
        throw PartialLabellingError("labelling size does not match the cover count");
    }
    ordered_json doc;
    doc["format"] = kLabelsFormat;
    ordered_json entries = ordered_json::array();
    for (CoverIndex i = 0; i < cp.size(); ++i) {
        entries.push_back({cp.cover(i).lo, cp.cover(i).hi, f.labels[i]});
    }
    doc["entries"] = std::move(entries);
    return layout(doc);
}

std::string dump_cover_poset(const CoverPoset& cp) {
    ordered_json doc;
    doc["format"] = kCoversFormat;
    doc["base_size"] = cp.base().size();
    ordered_json covers = ordered_json::array();
    for (const Cover& c : cp.covers()) {
        covers.push_back({c.lo, c.hi});
    }
    doc["covers"] = std::move(covers);
    ordered_json order = ordered_json::array();
    for (CoverIndex a = 0; a < cp.size(); ++a) {
        for (CoverIndex b = 0; b < cp.size(); ++b) {
            if (a != b && cp.leq(a, b)) {
                order.push_back({a, b});
            }
        }
    }
    doc["order"] = std::move(order);
    doc["components"] = cover_components(cp).parts;
    return layout(doc);
}

std::string export_dot(const FiniteLattice& lattice) {
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (Elem x = 0; x < lattice.size(); ++x) {
        out << "  " << x << " [label=\"" << dot_escape(lattice.name(x)) << "\"];\n";
    }
    for (const Edge& e : lattice.hasse()) {
        out << "  " << e.lo << " -> " << e.hi << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const CoverPoset& cp) {
    std::ostringstream out;
    out << "digraph covers {\n  rankdir=BT;\n";
    for (CoverIndex i = 0; i < cp.size(); ++i) {
        out << "  " << i << " [label=\"" << dot_escape(cp.label(i)) << "\"];\n";
    }
    for (const Edge& e : cp.poset().hasse()) {
        out << "  " << e.lo << " -> " << e.hi << ";\n";
    }
    out << "}\n";
    return out.str();
}

CheckReport check_report(const FiniteLattice& lattice) {
    CheckReport r;
    r.sd = sd_report(lattice);
    r.lower_bounded = is_lower_bounded(lattice);
    r.upper_bounded = is_upper_bounded(lattice);
    r.bounded = r.lower_bounded && r.upper_bounded;
    r.distributive = is_distributive(lattice);
    return r;
}

std::vector<std::pair<std::string, bool>> report_entries(const CheckReport& r) {
    return {
        {"sd-join", r.sd.sd_join_direct},
        {"sd-meet", r.sd.sd_meet_direct},
        {"semidistributive", r.sd.sd_join_direct && r.sd.sd_meet_direct},
        {"creates-pullbacks", r.sd.creates_pullbacks},
        {"pushjsemid-1", r.sd.pushjsemid[0]},
        {"pushjsemid-2", r.sd.pushjsemid[1]},
        {"pushjsemid-3", r.sd.pushjsemid[2]},
        {"pushjsemid-4", r.sd.pushjsemid[3]},
        {"pushjsemid-5", r.sd.pushjsemid[4]},
        {"unique-ji-per-max", r.sd.unique_ji_per_max},
        {"pushdown", r.sd.pushdown},
        {"pushup", r.sd.pushup},
        {"lower-bounded", r.lower_bounded},
        {"upper-bounded", r.upper_bounded},
        {"bounded", r.bounded},
        {"distributive", r.distributive},
    };
}

std::string render_text(const CheckReport& report) {
    std::string out;
    for (const auto& [key, value] : report_entries(report)) {
        out += key + ": " + (value ? "true" : "false") + "\n";
    }
    return out;
}

ordered_json render_json(const CheckReport& report) {
    ordered_json doc;
    for (const auto& [key, value] : report_entries(report)) {
        doc[key] = value;
    }
    return doc;
}

}  // namespace latder
