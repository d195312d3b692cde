#include "dlim/io.hpp"

#include <fstream>
#include <sstream>

namespace dlim::io {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(path, std::string("invalid JSON: ") + e.what());
    }
    return j;
}

namespace {

const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw SchemaError(where, "missing key '" + key + "'");
    return j.at(key);
}

std::string label_of(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw SchemaError(where, "labels must be strings or integers");
}

Ring ring_of(const json& j, const std::string& where, std::optional<Ring> override_ring) {
    if (override_ring) return *override_ring;
    if (!j.contains("coeff")) return Ring::Z();
    try {
        return Ring::parse(j.at("coeff").get<std::string>());
    } catch (const ValidationError& e) {
        throw SchemaError(where + ".coeff", e.what());
    }
}

Matrix matrix_of(const json& v, size_t rows, size_t cols, Ring ring, const std::string& where) {
    Matrix m(rows, cols, ring);
    if (!v.is_array()) throw SchemaError(where, "matrix must be an array of rows");
    if (v.size() != rows)
        throw SchemaError(where, "matrix has " + std::to_string(v.size()) + " rows, expected " +
                                     std::to_string(rows));
    for (size_t i = 0; i < rows; ++i) {
        const json& row = v.at(i);
        if (!row.is_array() || row.size() != cols)
            throw SchemaError(where + "[" + std::to_string(i) + "]",
                              "expected a row of length " + std::to_string(cols));
        for (size_t j = 0; j < cols; ++j) {
            const json& x = row.at(j);
            if (x.is_number_integer())
                m.at(i, j) = x.get<long long>();
            else if (x.is_string())
                m.at(i, j) = Int(x.get<std::string>());
            else
                throw SchemaError(where, "matrix entries must be integers");
        }
    }
    m.normalize();
    return m;
}

Poset poset_of(const json& j, const std::string& where) {
    std::vector<std::string> labels;
    for (const auto& e : need(j, "elements", where)) labels.push_back(label_of(e, where));
    std::vector<std::pair<size_t, size_t>> pairs;
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            if (!r.is_array() || r.size() != 2)
                throw SchemaError(where + ".relations", "each relation is a [low, high] pair");
            std::string lo = label_of(r.at(0), where), hi = label_of(r.at(1), where);
            auto find = [&](const std::string& s) -> size_t {
                for (size_t i = 0; i < labels.size(); ++i)
                    if (labels[i] == s) return i;
                throw SchemaError(where + ".relations", "unknown element '" + s + "'");
            };
            pairs.emplace_back(find(lo), find(hi));
        }
    }
    try {
        return Poset::build(std::move(labels), pairs);
    } catch (const ValidationError& e) {
        throw SchemaError(where, e.what());
    }
}

InverseSystem system_of(const json& j, const std::string& where, std::optional<Ring> override_ring) {
    Ring ring = ring_of(j, where, override_ring);
    Poset poset = poset_of(need(j, "poset", where), where + ".poset");
    const json& ranks_j = need(j, "ranks", where);
    std::vector<size_t> ranks(poset.size(), 0);
    for (auto it = ranks_j.begin(); it != ranks_j.end(); ++it) {
        auto idx = poset.index_of(it.key());
        if (!idx) throw SchemaError(where + ".ranks", "unknown element '" + it.key() + "'");
        ranks[*idx] = it.value().get<size_t>();
    }
    std::map<std::pair<size_t, size_t>, Matrix> maps;
    if (j.contains("maps")) {
        size_t k = 0;
        for (const auto& m : j.at("maps")) {
            std::string mw = where + ".maps[" + std::to_string(k++) + "]";
            std::string lo = label_of(need(m, "low", mw), mw);
            std::string hi = label_of(need(m, "high", mw), mw);
            auto li = poset.index_of(lo), hi_i = poset.index_of(hi);
            if (!li || !hi_i) throw SchemaError(mw, "unknown element in map endpoints");
            Matrix mat = matrix_of(need(m, "matrix", mw), ranks[*li], ranks[*hi_i], ring, mw);
            maps.emplace(std::make_pair(*li, *hi_i), std::move(mat));
        }
    }
    return InverseSystem::build(std::move(poset), std::move(ranks), maps, ring);
}

struct GroundSets {
    std::vector<std::string> ground;
    std::vector<uint64_t> sets;
};

uint64_t subset_mask(const json& arr, const std::vector<std::string>& ground,
                     const std::string& where) {
    uint64_t m = 0;
    for (const auto& e : arr) {
        std::string lab = label_of(e, where);
        bool found = false;
        for (size_t i = 0; i < ground.size(); ++i)
            if (ground[i] == lab) {
                m |= uint64_t(1) << i;
                found = true;
            }
        if (!found) throw SchemaError(where, "element '" + lab + "' is outside the ground set");
    }
    return m;
}

GroundSets ground_sets_of(const json& j, const char* list_key, const std::string& where) {
    GroundSets g;
    for (const auto& e : need(j, "ground", where)) g.ground.push_back(label_of(e, where));
    if (g.ground.size() > 64) throw SchemaError(where + ".ground", "more than 64 elements");
    for (const auto& s : need(j, list_key, where)) {
        if (!s.is_array()) throw SchemaError(where, "index sets must be arrays");
        g.sets.push_back(subset_mask(s, g.ground, where + "." + list_key));
    }
    return g;
}

uint64_t modulus_of(const json& j, const std::vector<std::string>& ground,
                    const std::string& where) {
    uint64_t jmax = 0;
    if (j.contains("modulus"))
        for (const auto& s : j.at("modulus")) jmax |= subset_mask(s, ground, where + ".modulus");
    return jmax;
}

CoherentFamily family_of(const json& j, const std::string& where, std::optional<Ring> override_ring,
                         std::optional<std::pair<size_t, size_t>>& akl_used) {
    Ring ring = ring_of(j, where, override_ring);
    size_t n = need(j, "n", where).get<size_t>();
    size_t h_rank = j.contains("h_rank") ? j.at("h_rank").get<size_t>() : 1;
    std::vector<std::string> ground;
    std::vector<uint64_t> sets;
    uint64_t jmax = 0;
    if (j.contains("akl")) {
        const json& a = j.at("akl");
        size_t kappa = need(a, "kappa", where + ".akl").get<size_t>();
        size_t lambda = need(a, "lambda", where + ".akl").get<size_t>();
        AklIndex idx = akl_index(kappa, lambda);
        ground = idx.ground;
        sets = idx.index_sets;
        akl_used = std::make_pair(kappa, lambda);
        if (j.contains("modulus")) jmax = modulus_of(j, ground, where);
    } else {
        GroundSets g = ground_sets_of(j, "index_sets", where);
        ground = std::move(g.ground);
        sets = std::move(g.sets);
        jmax = modulus_of(j, ground, where);
    }
    CoherentFamily fam = CoherentFamily::make(n, ground, sets, jmax, ring, h_rank);
    if (j.contains("values")) {
        for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
            std::vector<size_t> tuple;
            std::stringstream ss(it.key());
            std::string part;
            while (std::getline(ss, part, ','))
                tuple.push_back(size_t(std::stoull(part)));
            if (tuple.size() != n)
                throw SchemaError(where + ".values", "tuple '" + it.key() + "' has length " +
                                                         std::to_string(tuple.size()) +
                                                         ", family dimension is " +
                                                         std::to_string(n));
            std::vector<Int> value;
            for (const auto& v : it.value()) {
                if (v.is_number_integer())
                    value.push_back(Int(v.get<long long>()));
                else if (v.is_string())
                    value.push_back(Int(v.get<std::string>()));
                else
                    throw SchemaError(where + ".values", "entries must be integers");
            }
            try {
                fam.set_value(std::move(tuple), std::move(value));
            } catch (const ValidationError& e) {
                throw SchemaError(where + ".values['" + it.key() + "']", e.what());
            }
        }
    }
    return fam;
}

SesOfSystems ses_of(const json& j, const std::string& where, std::optional<Ring> override_ring) {
    Ring ring = ring_of(j, where, override_ring);
    Poset poset = poset_of(need(j, "poset", where), where + ".poset");
    auto part = [&](const char* key) {
        json sys = need(j, key, where);
        sys["poset"] = j.at("poset");
        sys["coeff"] = ring.str();
        return system_of(sys, where + "." + key, ring);
    };
    InverseSystem sub = part("sub"), mid = part("mid"), quot = part("quot");
    auto per_element = [&](const char* key, const InverseSystem& to, const InverseSystem& from) {
        std::vector<Matrix> out(poset.size(), Matrix());
        const json& mj = need(j, key, where);
        for (size_t x = 0; x < poset.size(); ++x) {
            const std::string& lab = poset.label(x);
            if (!mj.contains(lab))
                throw SchemaError(where + "." + key, "missing element '" + lab + "'");
            out[x] = matrix_of(mj.at(lab), to.term_rank(x), from.term_rank(x), ring,
                               where + "." + key + "." + lab);
        }
        return out;
    };
    std::vector<Matrix> inc = per_element("inclusions", mid, sub);
    std::vector<Matrix> proj = per_element("projections", quot, mid);
    return SesOfSystems::build(std::move(sub), std::move(mid), std::move(quot), std::move(inc),
                               std::move(proj));
}

IndexedOrdFunction walks_f_of(const json& j, const std::string& where) {
    IndexedOrdFunction f;
    const json& rows = need(j, "rows", where);
    for (auto it = rows.begin(); it != rows.end(); ++it) {
        uint64_t i = std::stoull(it.key());
        std::vector<Ord> xs;
        for (const auto& v : it.value()) {
            if (v.is_number_integer())
                xs.push_back(Ord::finite(v.get<uint64_t>()));
            else
                xs.push_back(Ord::parse(v.get<std::string>()));
        }
        f.rows.push_back({i, std::move(xs)});
    }
    std::sort(f.rows.begin(), f.rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

}  // namespace

InverseSystem parse_system_doc(const json& j, std::optional<Ring> ring_override, const Caps& caps) {
    if (j.contains("system")) return system_of(j.at("system"), "system", ring_override);
    if (j.contains("akl")) {
        const json& a = j.at("akl");
        Ring ring = ring_of(a, "akl", ring_override);
        size_t kappa = need(a, "kappa", "akl").get<size_t>();
        size_t lambda = need(a, "lambda", "akl").get<size_t>();
        size_t h_rank = a.contains("h_rank") ? a.at("h_rank").get<size_t>() : 1;
        return build_akl_systems(kappa, lambda, ring, h_rank, caps).ses.sub;
    }
    if (j.contains("xsys")) {
        const json& x = j.at("xsys");
        Ring ring = ring_of(x, "xsys", ring_override);
        size_t h_rank = x.contains("h_rank") ? x.at("h_rank").get<size_t>() : 1;
        GroundSets g = ground_sets_of(x, "index_sets", "xsys");
        uint64_t jmax = modulus_of(x, g.ground, "xsys");
        return build_x_system(g.ground, g.sets, jmax, ring, h_rank, caps);
    }
    if (j.contains("ysys")) {
        const json& y = j.at("ysys");
        Ring ring = ring_of(y, "ysys", ring_override);
        size_t kappa = need(y, "kappa", "ysys").get<size_t>();
        GroundSets g = ground_sets_of(y, "generators", "ysys");
        return build_y_system(kappa, g.ground, g.sets, ring, caps);
    }
    throw SchemaError("", "document does not define a system (keys: system, akl, xsys, ysys)");
}

Document parse_document(const json& j, Ring ring_override, bool has_override, const Caps& caps) {
    std::optional<Ring> ov;
    if (has_override) ov = ring_override;
    if (j.contains("system") || j.contains("akl") || j.contains("xsys") || j.contains("ysys")) {
        std::string kind = j.contains("system") ? "system"
                           : j.contains("akl")  ? "akl"
                           : j.contains("xsys") ? "xsys"
                                                : "ysys";
        return SystemDoc{kind, parse_system_doc(j, ov, caps)};
    }
    if (j.contains("ses")) return SesDoc{ses_of(j.at("ses"), "ses", ov)};
    if (j.contains("ideal")) {
        GroundSets g = ground_sets_of(j.at("ideal"), "generators", "ideal");
        try {
            return IdealDoc{SetIdeal::build(std::move(g.ground), std::move(g.sets))};
        } catch (const ValidationError& e) {
            throw SchemaError("ideal", e.what());
        }
    }
    if (j.contains("family")) {
        std::optional<std::pair<size_t, size_t>> akl;
        CoherentFamily fam = family_of(j.at("family"), "family", ov, akl);
        return FamilyDoc{std::move(fam), akl};
    }
    if (j.contains("walks_f")) return WalksFDoc{walks_f_of(j.at("walks_f"), "walks_f")};
    throw SchemaError("", "unrecognized document: expected one of system, akl, xsys, ysys, ses, "
                          "ideal, family, walks_f");
}

json family_to_json(const CoherentFamily& fam) {
    json j;
    j["n"] = fam.n;
    j["coeff"] = fam.ring.str();
    j["h_rank"] = fam.h_rank;
    j["ground"] = fam.ground;
    json sets = json::array();
    for (uint64_t s : fam.index_sets) {
        json one = json::array();
        for (size_t i = 0; i < fam.ground.size(); ++i)
            if (s >> i & 1) one.push_back(fam.ground[i]);
        sets.push_back(one);
    }
    j["index_sets"] = sets;
    json modulus = json::array();
    json jm = json::array();
    for (size_t i = 0; i < fam.ground.size(); ++i)
        if (fam.jmax >> i & 1) jm.push_back(fam.ground[i]);
    if (!jm.empty()) modulus.push_back(jm);
    j["modulus"] = modulus;
    json values;
    for (const auto& [tuple, val] : fam.values()) {
        std::string key;
        for (size_t i = 0; i < tuple.size(); ++i)
            key += (i ? "," : "") + std::to_string(tuple[i]);
        json arr = json::array();
        for (const auto& v : val) arr.push_back(v.str());
        values[key] = arr;
    }
    j["values"] = values;
    return json{{"family", j}};
}

std::string render(const Report& r, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["command"] = r.command;
        for (const auto& [k, v] : r.fields) j["fields"][k] = v;
        for (const auto& t : r.tables) {
            json tj;
            tj["columns"] = t.cols;
            tj["rows"] = t.rows;
            j["tables"][t.name] = tj;
        }
        os << j.dump(2) << "\n";
        return os.str();
    }
    if (format == "csv") {
        for (const auto& [k, v] : r.fields) os << "field," << k << "," << v << "\n";
        for (const auto& t : r.tables) {
            os << "table," << t.name;
            for (const auto& c : t.cols) os << "," << c;
            os << "\n";
            for (const auto& row : t.rows) {
                os << t.name;
                for (const auto& c : row) os << "," << c;
                os << "\n";
            }
        }
        return os.str();
    }
    if (format != "text") throw ValidationError("unknown format '" + format + "'");
    os << "== " << r.command << " ==\n";
    for (const auto& [k, v] : r.fields) os << k << ": " << v << "\n";
    for (const auto& t : r.tables) {
        os << "-- " << t.name << " --\n";
        for (const auto& c : t.cols) os << c << "\t";
        os << "\n";
        for (const auto& row : t.rows) {
            for (const auto& c : row) os << c << "\t";
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace dlim::io
