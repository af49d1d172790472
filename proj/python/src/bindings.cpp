// Python bindings for the main library operations. Lattices cross the
// boundary as opaque Lattice objects; covers are (lo, hi) tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latder/latder.hpp"

namespace py = pybind11;
using namespace latder;

namespace {

using CoverTuple = std::pair<Elem, Elem>;

Cover to_cover(const CoverTuple& c) {
    return {c.first, c.second};
}

CoverTuple from_cover(const Cover& c) {
    return {c.lo, c.hi};
}

std::vector<CoverTuple> covers_of(const FiniteLattice& L) {
    std::vector<CoverTuple> out;
    for (const auto& e : L.hasse()) {
        out.emplace_back(e.lo, e.hi);
    }
    return out;
}

py::dict regular_dict(const RegularityReport& r) {
    py::list atoms;
    for (const auto& a : r.atoms) {
        py::dict d;
        d["cover"] = from_cover(a.atomic_cover);
        d["size"] = a.size;
        d["covers"] = a.covers;
        d["height"] = a.height;
        d["class"] = a.iso_class;
        atoms.append(d);
    }
    py::dict out;
    out["regular"] = r.regular;
    out["atoms"] = atoms;
    if (r.witness) {
        out["witness"] = py::make_tuple(from_cover(r.witness->first),
                                        from_cover(r.witness->second));
    } else {
        out["witness"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_latder, m) {
    m.doc() = "Finite lattices, cover posets and derived lattices";

    // Translators run newest first, so the base is registered before subclasses.
    static auto base = py::register_exception<Error>(m, "LatderError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());
    py::register_exception<NotLatticeError>(m, "NotLatticeError", base.ptr());
    py::register_exception<NotSemidistributiveError>(m, "NotSemidistributiveError", base.ptr());
    py::register_exception<InvalidCoverError>(m, "InvalidCoverError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<IndexError>(m, "ElementIndexError", base.ptr());

    py::class_<FiniteLattice>(m, "Lattice")
        .def_property_readonly("size", &FiniteLattice::size)
        .def("__len__", &FiniteLattice::size)
        .def_property_readonly("bottom", &FiniteLattice::bottom)
        .def_property_readonly("top", &FiniteLattice::top)
        .def_property_readonly("covers", &covers_of)
        .def_property_readonly("names",
                               [](const FiniteLattice& L) {
                                   std::vector<std::string> out;
                                   for (Elem x = 0; x < L.size(); ++x) {
                                       out.push_back(L.name(x));
                                   }
                                   return out;
                               })
        .def("name", &FiniteLattice::name)
        .def("leq",
             [](const FiniteLattice& L, Elem x, Elem y) {
                 L.poset().check_index(x);
                 L.poset().check_index(y);
                 return L.leq(x, y);
             })
        .def("meet", &FiniteLattice::meet)
        .def("join", &FiniteLattice::join)
        .def("upper_covers", &FiniteLattice::upper_covers)
        .def("lower_covers", &FiniteLattice::lower_covers)
        .def("__repr__", [](const FiniteLattice& L) {
            return "<Lattice with " + std::to_string(L.size()) + " elements>";
        });

    m.def(
        "build_lattice",
        [](std::size_t size, const std::vector<CoverTuple>& covers,
           std::vector<std::string> names) {
            std::vector<Edge> edges;
            for (const auto& [lo, hi] : covers) {
                edges.push_back({lo, hi});
            }
            return build_lattice(size, std::move(edges), std::move(names));
        },
        py::arg("size"), py::arg("covers"), py::arg("names") = std::vector<std::string>{});
    m.def("dualize", &dualize);

    // Generators.
    m.def("boolean", [](std::size_t n) { return boolean(n); });
    m.def("chain", [](std::size_t n) { return chain(n); });
    m.def("pentagon", &pentagon);
    m.def("diamond", &diamond);
    m.def("product", [](const FiniteLattice& a, const FiniteLattice& b) { return product(a, b); });
    m.def("permutohedron", [](std::size_t n) { return permutohedron(n); });
    m.def("tamari", [](std::size_t n) { return tamari(n); });
    m.def("multinomial",
          [](const std::vector<std::size_t>& profile) { return multinomial(profile); });
    m.def(
        "random_dm",
        [](std::size_t elements, double density, std::uint64_t seed) {
            return dedekind_macneille(random_poset(elements, density, seed));
        },
        py::arg("elements"), py::arg("density"), py::arg("seed"));

    // Files.
    m.def("dumps", [](const FiniteLattice& L) { return dump_lattice(L); });
    m.def("loads", [](const std::string& text) { return parse_lattice(text).lattice; });
    m.def("load", [](const std::string& path) { return load_lattice(path).lattice; });
    m.def("save", [](const FiniteLattice& L, const std::string& path) { save_lattice(L, path); });
    m.def("lattice_hash", &lattice_hash);
    m.def("export_dot", [](const FiniteLattice& L) { return export_dot(L); });

    // Properties.
    m.def("check", [](const FiniteLattice& L) {
        py::dict out;
        for (const auto& [key, value] : report_entries(check_report(L))) {
            out[py::str(key)] = value;
        }
        return out;
    });
    m.def("is_join_semidistributive", &is_join_semidistributive_direct);
    m.def("is_meet_semidistributive", &is_meet_semidistributive_direct);
    m.def("is_semidistributive", &is_semidistributive);
    m.def("is_distributive", &is_distributive);
    m.def("is_pushdown", py::overload_cast<const FiniteLattice&>(&is_pushdown));
    m.def("is_pushup", py::overload_cast<const FiniteLattice&>(&is_pushup));
    m.def("creates_pullbacks", py::overload_cast<const FiniteLattice&>(&creates_pullbacks_pr0));
    m.def("is_lower_bounded", &is_lower_bounded);
    m.def("is_upper_bounded", &is_upper_bounded);
    m.def("is_bounded", &is_bounded);
    m.def("join_dependency", [](const FiniteLattice& L) {
        std::vector<CoverTuple> out;
        for (const auto& p : join_dependency(L).D.pairs) {
            out.emplace_back(p.from, p.to);
        }
        return out;
    });

    // Cover posets and derived lattices.
    m.def("cover_order", [](const FiniteLattice& L) {
        const auto cp = cover_poset(L);
        std::vector<std::pair<std::size_t, std::size_t>> strict;
        for (CoverIndex a = 0; a < cp.size(); ++a) {
            for (CoverIndex b = 0; b < cp.size(); ++b) {
                if (a != b && cp.leq(a, b)) {
                    strict.emplace_back(a, b);
                }
            }
        }
        return strict;
    });
    m.def("cover_components", [](const FiniteLattice& L) {
        return cover_components(cover_poset(L)).parts;
    });
    m.def("derived_lattice", [](const FiniteLattice& L, const CoverTuple& seed) {
        auto d = derived_lattice(L, to_cover(seed));
        std::vector<CoverTuple> cover_of;
        for (const auto& c : d.cover_of) {
            cover_of.push_back(from_cover(c));
        }
        return py::make_tuple(d.lattice, cover_of);
    });
    m.def("iterate_derive", [](const FiniteLattice& L, const std::vector<CoverTuple>& seeds) {
        std::vector<Cover> cs;
        for (const auto& s : seeds) {
            cs.push_back(to_cover(s));
        }
        return iterate_derive(L, cs);
    });

    // Labellings and facets.
    m.def("strict_facet_labelling",
          [](const FiniteLattice& L) -> std::optional<std::vector<std::uint32_t>> {
              if (auto f = construct_strict_facet_labelling(L)) {
                  return f->labels;
              }
              return std::nullopt;
          });
    m.def("verify_labelling", [](const FiniteLattice& L, std::vector<std::uint32_t> labels) {
        return verify_strict_facet_labelling(L, FacetLabelling{std::move(labels)}).ok();
    });
    m.def("facets", [](const FiniteLattice& L) {
        py::list out;
        for (const auto& f : facets(L)) {
            py::dict d;
            d["delta"] = from_cover(f.delta);
            d["delta_p"] = from_cover(f.delta_p);
            d["gamma"] = from_cover(f.gamma);
            d["gamma_p"] = from_cover(f.gamma_p);
            std::vector<CoverTuple> interiors;
            for (const auto& e : f.interiors) {
                interiors.push_back(from_cover(e));
            }
            d["interiors"] = interiors;
            out.append(d);
        }
        return out;
    });

    // Isomorphism, congruences, regularity.
    m.def("are_isomorphic",
          [](const FiniteLattice& a, const FiniteLattice& b) -> std::optional<std::vector<Elem>> {
              auto r = are_isomorphic(a, b);
              return r.found ? r.mapping : std::nullopt;
          });
    m.def("congruence_classes",
          [](const FiniteLattice& L, const std::vector<CoverTuple>& pairs) {
              return congruence_generated(L, pairs).classes;
          });
    m.def("quotient", [](const FiniteLattice& L, const std::vector<CoverTuple>& pairs) {
        return quotient(L, congruence_generated(L, pairs));
    });
    m.def("is_regular", [](const FiniteLattice& L) { return regular_dict(is_regular(L)); });

    // Permutation and bracketing-vector maps (1-based words).
    m.def("psi_perm", &psi_perm, py::arg("k"), py::arg("w"), py::arg("i"));
    m.def("psi_perm_inverse", &psi_perm_inverse, py::arg("k"), py::arg("u"));
    m.def("psi_tamari", &psi_tamari, py::arg("v"), py::arg("k"));
    m.def("psi_tamari_inverse", &psi_tamari_inverse, py::arg("k"), py::arg("w"));
}
