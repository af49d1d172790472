#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "latder/bounded.hpp"
#include "latder/cover_poset.hpp"
#include "latder/lattice.hpp"
#include "latder/semidistributive.hpp"

namespace latder {

/// Generator record stored alongside a lattice.
struct Provenance {
    std::string family;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;
};

struct LatticeDocument {
    FiniteLattice lattice;
    std::optional<Provenance> provenance;
};

inline constexpr const char* kLatticeFormat = "latder-lattice-v1";
inline constexpr const char* kLabelsFormat = "latder-labels-v1";
inline constexpr const char* kCoversFormat = "latder-covers-v1";

/// Throws ParseError with line or field context. Cyclic or redundant cover
/// lists are reported as ParseError too; NotLatticeError passes through.
LatticeDocument parse_lattice(const std::string& text);
/// Canonical text: fixed key order, covers sorted, trailing newline.
std::string dump_lattice(const FiniteLattice& lattice,
                         const std::optional<Provenance>& provenance = std::nullopt);

/// "-" or "" reads stdin / writes stdout. Throws IoError.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

LatticeDocument load_lattice(const std::string& path);
void save_lattice(const FiniteLattice& lattice, const std::string& path,
                  const std::optional<Provenance>& provenance = std::nullopt);

/// FNV-1a 64 of the canonical text without provenance, as 16 hex digits.
std::string lattice_hash(const FiniteLattice& lattice);

/// Entries must cover exactly the covers of the lattice (PartialLabellingError
/// otherwise); malformed documents raise ParseError.
FacetLabelling parse_labels(const CoverPoset& covers, const std::string& text);
std::string dump_labels(const CoverPoset& covers, const FacetLabelling& f);

/// Base size, cover list, strict order pairs over cover indices, components.
std::string dump_cover_poset(const CoverPoset& covers);

/// One node per element (labelled by name), one edge per Hasse cover.
std::string export_dot(const FiniteLattice& lattice);
std::string export_dot(const CoverPoset& covers);

/// Everything `check` prints, in a fixed order.
struct CheckReport {
    SdReport sd;
    bool lower_bounded = false;
    bool upper_bounded = false;
    bool bounded = false;
    bool distributive = false;
};

CheckReport check_report(const FiniteLattice& lattice);

/// (key, value) pairs in display order; keys double as --assert names.
std::vector<std::pair<std::string, bool>> report_entries(const CheckReport& report);
std::string render_text(const CheckReport& report);
nlohmann::ordered_json render_json(const CheckReport& report);

}  // namespace latder
