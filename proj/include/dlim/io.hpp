#pragma once
#include <json.hpp>
#include <optional>
#include <string>
#include <variant>

#include "dlim/family.hpp"
#include "dlim/ideal.hpp"
#include "dlim/ses.hpp"
#include "dlim/system.hpp"
#include "dlim/walks.hpp"
#include "dlim/xsys.hpp"

namespace dlim::io {

using nlohmann::json;

json load_json(const std::string& path);

// one input schema serves every module: a document is an object with exactly
// one of the top-level keys below
struct SystemDoc {
    std::string kind;  // "system" | "akl" | "xsys" | "ysys"
    InverseSystem system;
};
struct SesDoc {
    SesOfSystems ses;
};
struct IdealDoc {
    SetIdeal ideal;
};
struct FamilyDoc {
    CoherentFamily family;
    std::optional<std::pair<size_t, size_t>> akl;  // (kappa, lambda) shorthand used
};
struct WalksFDoc {
    IndexedOrdFunction f;
};
using Document = std::variant<SystemDoc, SesDoc, IdealDoc, FamilyDoc, WalksFDoc>;

Document parse_document(const json& j, Ring ring_override = Ring::Z(), bool has_override = false,
                        const Caps& caps = {});

// narrow parse: any system-producing document (system/akl/xsys/ysys)
InverseSystem parse_system_doc(const json& j, std::optional<Ring> ring_override = std::nullopt,
                               const Caps& caps = {});

json family_to_json(const CoherentFamily& fam);

// deterministic report: fields in insertion order plus named tables; the
// renderers never emit timestamps or machine state, so byte-identical inputs
// give byte-identical reports
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;
    struct Table {
        std::string name;
        std::vector<std::string> cols;
        std::vector<std::vector<std::string>> rows;
    };
    std::vector<Table> tables;

    void field(const std::string& k, const std::string& v) { fields.emplace_back(k, v); }
};

std::string render(const Report& r, const std::string& format);  // text | csv | json

}  // namespace dlim::io
