// Command-line front end. Each subcommand loads its inputs, calls one
// library routine and prints the result.
//
// Exit codes: 0 success, 1 a negative answer (failed --assert, not
// isomorphic, not regular, no labelling), 2 bad input or a domain error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "latder/latder.hpp"

using namespace latder;
using nlohmann::ordered_json;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

/// "a,b" as a pair of element ids.
std::pair<Elem, Elem> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw InvalidArgumentError(std::string(what) + ": expected X,Y, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        const auto a = std::stoul(text.substr(0, comma), &used);
        if (used != comma) {
            throw std::invalid_argument("trailing");
        }
        const auto rest = text.substr(comma + 1);
        const auto b = std::stoul(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument("trailing");
        }
        return {static_cast<Elem>(a), static_cast<Elem>(b)};
    } catch (const std::logic_error&) {
        throw InvalidArgumentError(std::string(what) + ": expected X,Y, got '" + text + "'");
    }
}

std::vector<std::size_t> parse_profile(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument("trailing");
            }
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw InvalidArgumentError("multinomial: bad multiplicity '" + item + "'");
        }
    }
    return out;
}

std::string show(const FiniteLattice& L, Cover c) {
    return "(" + L.name(c.lo) + "," + L.name(c.hi) + ")";
}

ordered_json cover_json(Cover c) {
    return ordered_json::array({c.lo, c.hi});
}

void emit(const std::string& path, const std::string& text) {
    write_text(path, text);
}

struct Options {
    std::string family;
    std::size_t n = 0;
    std::string profile;
    std::size_t elements = 0;
    double density = 0.0;
    std::uint64_t seed = 0;

    std::string input = "-";
    std::string second;
    std::string output = "-";
    std::vector<std::string> asserts;
    std::string cover;
    std::string pair;
    bool json = false;
    bool covers = false;
};

int cmd_gen(const Options& o) {
    Provenance prov;
    prov.family = o.family;
    FiniteLattice L;
    if (o.family == "permutohedron") {
        L = permutohedron(o.n);
    } else if (o.family == "tamari") {
        L = tamari(o.n);
    } else if (o.family == "boolean") {
        L = boolean(o.n);
    } else if (o.family == "chain") {
        L = chain(o.n);
    } else if (o.family == "pentagon") {
        L = pentagon();
    } else if (o.family == "diamond") {
        L = diamond();
    } else if (o.family == "multinomial") {
        const auto profile = parse_profile(o.profile);
        L = multinomial(profile);
        prov.params["profile"] = profile;
    } else if (o.family == "random-dm") {
        L = dedekind_macneille(random_poset(o.elements, o.density, o.seed));
        prov.params["elements"] = o.elements;
        prov.params["density"] = o.density;
        prov.seed = o.seed;
    } else {
        throw InvalidArgumentError("unknown family '" + o.family + "'");
    }
    if (o.family == "permutohedron" || o.family == "tamari" || o.family == "boolean" ||
        o.family == "chain") {
        prov.params["n"] = o.n;
    }
    emit(o.output, dump_lattice(L, prov));
    return kYes;
}

int cmd_check(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    const auto report = check_report(L);
    const auto entries = report_entries(report);
    for (const auto& name : o.asserts) {
        const bool known = std::any_of(entries.begin(), entries.end(),
                                       [&](const auto& e) { return e.first == name; });
        if (!known) {
            throw InvalidArgumentError("unknown property '" + name + "'");
        }
    }
    if (o.json) {
        std::cout << render_json(report).dump(2) << "\n";
    } else {
        std::cout << render_text(report);
    }
    int status = kYes;
    for (const auto& name : o.asserts) {
        for (const auto& [key, value] : entries) {
            if (key == name && !value) {
                std::cerr << "assertion failed: " << name << "\n";
                status = kNo;
            }
        }
    }
    return status;
}

int cmd_covers(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    emit(o.output, dump_cover_poset(cover_poset(L)));
    return kYes;
}

int cmd_derive(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    const auto [lo, hi] = parse_pair(o.cover, "--cover");
    const auto d = derived_lattice(L, {lo, hi});
    Provenance prov;
    prov.family = "derived";
    prov.params["base_hash"] = lattice_hash(L);
    prov.params["seed_cover"] = cover_json({lo, hi});
    emit(o.output, dump_lattice(d.lattice, prov));
    return kYes;
}

int cmd_label(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    const auto cp = cover_poset(L);
    const auto f = construct_strict_facet_labelling(L);
    if (!f) {
        std::cerr << (is_join_semidistributive_direct(L)
                          ? "no strict facet labelling: the join-dependency relation has a cycle\n"
                          : "no strict facet labelling: not join-semidistributive\n");
        return kNo;
    }
    const auto check = verify_strict_facet_labelling(cp, *f);
    if (!check.ok()) {
        throw LabellingInvalidError("constructed labelling failed verification");
    }
    emit(o.output, dump_labels(cp, *f));
    return kYes;
}

int cmd_facets(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    const auto all = facets(L);
    if (o.json) {
        ordered_json doc = ordered_json::array();
        for (const auto& f : all) {
            ordered_json interiors = ordered_json::array();
            for (const auto& e : f.interiors) {
                interiors.push_back(cover_json(e));
            }
            doc.push_back({{"delta", cover_json(f.delta)},
                           {"delta_p", cover_json(f.delta_p)},
                           {"gamma", cover_json(f.gamma)},
                           {"gamma_p", cover_json(f.gamma_p)},
                           {"interiors", interiors}});
        }
        std::cout << doc.dump() << "\n";
        return kYes;
    }
    for (const auto& f : all) {
        std::cout << "facet " << show(L, f.delta) << " " << show(L, f.delta_p) << " "
                  << show(L, f.gamma) << " " << show(L, f.gamma_p) << " interiors:";
        for (const auto& e : f.interiors) {
            std::cout << " " << show(L, e);
        }
        std::cout << "\n";
    }
    std::cout << all.size() << " facets\n";
    return kYes;
}

int cmd_iso(const Options& o) {
    const auto P = load_lattice(o.input).lattice;
    const auto Q = load_lattice(o.second).lattice;
    const auto r = are_isomorphic(P, Q);
    if (o.json) {
        ordered_json doc{{"isomorphic", r.found}};
        doc["mapping"] = r.mapping ? ordered_json(*r.mapping) : ordered_json(nullptr);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << (r.found ? "isomorphic" : "not isomorphic") << "\n";
    }
    return r.found ? kYes : kNo;
}

int cmd_quotient(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    const auto [x, y] = parse_pair(o.pair, "--pair");
    const auto theta = congruence_generated(L, {{x, y}});
    Provenance prov;
    prov.family = "quotient";
    prov.params["base_hash"] = lattice_hash(L);
    prov.params["pair"] = ordered_json::array({x, y});
    emit(o.output, dump_lattice(quotient(L, theta), prov));
    return kYes;
}

int cmd_regular(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    const auto r = is_regular(L);
    if (o.json) {
        ordered_json atoms = ordered_json::array();
        for (const auto& a : r.atoms) {
            atoms.push_back({{"cover", cover_json(a.atomic_cover)},
                             {"size", a.size},
                             {"covers", a.covers},
                             {"height", a.height},
                             {"class", a.iso_class}});
        }
        ordered_json doc{{"regular", r.regular}, {"atoms", atoms}};
        doc["witness"] = r.witness ? ordered_json::array({cover_json(r.witness->first),
                                                          cover_json(r.witness->second)})
                                   : ordered_json(nullptr);
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& a : r.atoms) {
            std::cout << "atom " << show(L, a.atomic_cover) << ": size " << a.size << ", covers "
                      << a.covers << ", height " << a.height << ", class " << a.iso_class
                      << "\n";
        }
        std::cout << (r.regular ? "regular" : "not regular") << "\n";
    }
    return r.regular ? kYes : kNo;
}

int cmd_dot(const Options& o) {
    const auto L = load_lattice(o.input).lattice;
    emit(o.output, o.covers ? export_dot(cover_poset(L)) : export_dot(L));
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite lattices, their cover posets and derived lattices"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&)> action;

    auto* gen = app.add_subcommand("gen", "Generate a lattice");
    auto gen_family = [&](const std::string& name, const std::string& help, bool sized) {
        auto* sub = gen->add_subcommand(name, help);
        if (sized) {
            sub->add_option("N", o.n, "Size parameter")->required();
        }
        sub->add_option("-o,--output", o.output, "Output file (default stdout)");
        sub->callback([&, name] {
            o.family = name;
            action = cmd_gen;
        });
        return sub;
    };
    gen_family("permutohedron", "Weak order on permutations of [N]", true);
    gen_family("tamari", "Tamari lattice of bracketing vectors of length N", true);
    gen_family("boolean", "Subsets of [N]", true);
    gen_family("chain", "Chain with N elements", true);
    gen_family("pentagon", "N5", false);
    gen_family("diamond", "M3", false);
    auto* multi = gen_family("multinomial", "Words with given letter multiplicities", false);
    multi->add_option("V", o.profile, "Multiplicities, e.g. 2,2,1")->required();
    auto* rdm = gen_family("random-dm", "Completion of a random poset", false);
    rdm->add_option("--elements", o.elements, "Poset size")->required();
    rdm->add_option("--density", o.density, "Edge probability")->required();
    rdm->add_option("--seed", o.seed, "PRNG seed")->required();
    gen->require_subcommand(1);

    auto input = [&](CLI::App* sub) {
        sub->add_option("FILE", o.input, "Lattice file ('-' for stdin)");
    };
    auto output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", o.output, "Output file (default stdout)");
    };

    auto* check = app.add_subcommand("check", "Report lattice properties");
    input(check);
    check->add_option("--assert", o.asserts, "Exit 1 unless this property holds");
    check->add_flag("--json", o.json, "JSON output");
    check->callback([&] { action = cmd_check; });

    auto* covers = app.add_subcommand("covers", "Emit the cover poset");
    input(covers);
    output(covers);
    covers->callback([&] { action = cmd_covers; });

    auto* derive = app.add_subcommand("derive", "Derived lattice at a cover");
    input(derive);
    output(derive);
    derive->add_option("--cover", o.cover, "LO,HI")->required();
    derive->callback([&] { action = cmd_derive; });

    auto* label = app.add_subcommand("label", "Construct a strict facet labelling");
    input(label);
    output(label);
    label->callback([&] { action = cmd_label; });

    auto* fac = app.add_subcommand("facets", "List facets with their interiors");
    input(fac);
    fac->add_flag("--json", o.json, "JSON output");
    fac->callback([&] { action = cmd_facets; });

    auto* iso = app.add_subcommand("iso", "Decide isomorphism of two lattices");
    iso->add_option("FILE1", o.input, "First lattice file")->required();
    iso->add_option("FILE2", o.second, "Second lattice file")->required();
    iso->add_flag("--json", o.json, "JSON output");
    iso->callback([&] { action = cmd_iso; });

    auto* quo = app.add_subcommand("quotient", "Quotient by the congruence generated by a pair");
    input(quo);
    output(quo);
    quo->add_option("--pair", o.pair, "X,Y")->required();
    quo->callback([&] { action = cmd_quotient; });

    auto* reg = app.add_subcommand("regular", "Compare derived lattices at atomic covers");
    input(reg);
    reg->add_flag("--json", o.json, "JSON output");
    reg->callback([&] { action = cmd_regular; });

    auto* dot = app.add_subcommand("dot", "Graphviz export");
    input(dot);
    dot->add_option("-o,--output", o.output, "Output file")->required();
    dot->add_flag("--covers", o.covers, "Export the cover poset instead");
    dot->callback([&] { action = cmd_dot; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }
    try {
        return action(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
