#include "dlim/family.hpp"

#include <algorithm>

#include "dlim/smith.hpp"

namespace dlim {

CoherentFamily CoherentFamily::make(size_t n, std::vector<std::string> ground,
                                    std::vector<uint64_t> index_sets, uint64_t jmax, Ring ring,
                                    size_t h_rank) {
    require(ground.size() <= 64, "ground set larger than 64 elements");
    uint64_t full = ground.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << ground.size()) - 1;
    for (uint64_t s : index_sets)
        require((s & ~full) == 0, "index set leaves the ground set");
    require((jmax & ~full) == 0, "modulus ideal leaves the ground set");
    require(h_rank >= 1, "target rank must be at least 1");
    CoherentFamily f;
    f.n = n;
    f.ground = std::move(ground);
    f.index_sets = std::move(index_sets);
    f.jmax = jmax;
    f.ring = ring;
    f.h_rank = h_rank;
    return f;
}

uint64_t CoherentFamily::tuple_intersection(const std::vector<size_t>& tuple) const {
    uint64_t full = ground.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << ground.size()) - 1;
    uint64_t m = full;  // intersection over the empty tuple is the whole ground set
    for (size_t t : tuple) {
        require(t < index_sets.size(), "tuple index out of range");
        m &= index_sets[t];
    }
    return m;
}

std::vector<size_t> CoherentFamily::coords(uint64_t mask) const {
    std::vector<size_t> c;
    for (size_t i = 0; i < ground.size(); ++i)
        if (mask >> i & 1) c.push_back(i);
    return c;
}

int CoherentFamily::sort_tuple(std::vector<size_t>& tuple) {
    int sign = 1;
    for (size_t i = 1; i < tuple.size(); ++i)
        for (size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    for (size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i - 1] == tuple[i]) return 0;
    return sign;
}

void CoherentFamily::set_value(std::vector<size_t> tuple, std::vector<Int> value) {
    require(tuple.size() == n, "tuple length does not match family dimension");
    int sign = sort_tuple(tuple);
    require(sign != 0, "cannot store a value on a tuple with repeats");
    require(value.size() == value_len(tuple), "value length does not match the intersection");
    if (sign < 0)
        for (auto& v : value) v = -v;
    if (ring.is_field())
        for (auto& v : value) {
            v %= ring.p;
            if (v < 0) v += ring.p;
        }
    values_[std::move(tuple)] = std::move(value);
}

bool CoherentFamily::has_value(const std::vector<size_t>& tuple) const {
    std::vector<size_t> t = tuple;
    if (sort_tuple(t) == 0) return true;  // reads as zero
    return values_.count(t) > 0;
}

Int CoherentFamily::value_at(const std::vector<size_t>& tuple, size_t y, size_t c) const {
    std::vector<size_t> t = tuple;
    int sign = sort_tuple(t);
    if (sign == 0) return 0;
    auto it = values_.find(t);
    if (it == values_.end()) return 0;  // absent tuples read as zero
    uint64_t inter = tuple_intersection(t);
    require((inter >> y) & 1, "coordinate " + ground[y] + " is outside the tuple intersection");
    auto cs = coords(inter);
    size_t pos = size_t(std::lower_bound(cs.begin(), cs.end(), y) - cs.begin());
    Int v = it->second[pos * h_rank + c];
    if (sign < 0) {
        v = -v;
        if (ring.is_field()) {
            v %= ring.p;
            if (v < 0) v += ring.p;
        }
    }
    return v;
}

std::vector<std::vector<size_t>> CoherentFamily::tuples(size_t k) const {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < index_sets.size(); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

void CoherentFamily::reduce_mod_p() {
    if (!ring.is_field()) return;
    for (auto& [k, v] : values_)
        for (auto& x : v) {
            x %= ring.p;
            if (x < 0) x += ring.p;
        }
}

namespace {

// alternating defect of fam on an (n+1)-tuple, as a vector on the tuple's
// intersection coordinates
std::vector<Int> coherence_defect(const CoherentFamily& fam, const std::vector<size_t>& tuple) {
    uint64_t inter = fam.tuple_intersection(tuple);
    auto cs = fam.coords(inter);
    std::vector<Int> defect(cs.size() * fam.h_rank, 0);
    for (size_t omit = 0; omit < tuple.size(); ++omit) {
        std::vector<size_t> face = tuple;
        face.erase(face.begin() + long(omit));
        Int sign = (omit % 2 == 0) ? 1 : -1;
        for (size_t ci = 0; ci < cs.size(); ++ci)
            for (size_t h = 0; h < fam.h_rank; ++h)
                defect[ci * fam.h_rank + h] += sign * fam.value_at(face, cs[ci], h);
    }
    if (fam.ring.is_field())
        for (auto& v : defect) {
            v %= fam.ring.p;
            if (v < 0) v += fam.ring.p;
        }
    return defect;
}

}  // namespace

CoherenceReport is_n_coherent(const CoherentFamily& fam) {
    for (const auto& tuple : fam.tuples(fam.n + 1)) {
        auto defect = coherence_defect(fam, tuple);
        auto cs = fam.coords(fam.tuple_intersection(tuple));
        for (size_t ci = 0; ci < cs.size(); ++ci) {
            if (fam.jmax >> cs[ci] & 1) continue;  // inside the modulus ideal
            for (size_t h = 0; h < fam.h_rank; ++h)
                if (defect[ci * fam.h_rank + h] != 0)
                    return CoherenceReport{false, tuple, fam.ground[cs[ci]]};
        }
    }
    return CoherenceReport{true, {}, ""};
}

std::vector<Int> trivialization_defect(const CoherentFamily& fam, const CoherentFamily& psi,
                                       const std::vector<size_t>& tuple) {
    uint64_t inter = fam.tuple_intersection(tuple);
    auto cs = fam.coords(inter);
    std::vector<Int> defect(cs.size() * fam.h_rank, 0);
    for (size_t omit = 0; omit < tuple.size(); ++omit) {
        std::vector<size_t> face = tuple;
        face.erase(face.begin() + long(omit));
        Int sign = (omit % 2 == 0) ? 1 : -1;
        for (size_t ci = 0; ci < cs.size(); ++ci)
            for (size_t h = 0; h < fam.h_rank; ++h)
                defect[ci * fam.h_rank + h] += sign * psi.value_at(face, cs[ci], h);
    }
    for (size_t ci = 0; ci < cs.size(); ++ci)
        for (size_t h = 0; h < fam.h_rank; ++h)
            defect[ci * fam.h_rank + h] -= fam.value_at(tuple, cs[ci], h);
    if (fam.ring.is_field())
        for (auto& v : defect) {
            v %= fam.ring.p;
            if (v < 0) v += fam.ring.p;
        }
    return defect;
}

bool verifies_trivialization(const CoherentFamily& fam, const CoherentFamily& psi) {
    for (const auto& tuple : fam.tuples(fam.n)) {
        auto defect = trivialization_defect(fam, psi, tuple);
        auto cs = fam.coords(fam.tuple_intersection(tuple));
        for (size_t ci = 0; ci < cs.size(); ++ci) {
            if (fam.jmax >> cs[ci] & 1) continue;
            for (size_t h = 0; h < fam.h_rank; ++h)
                if (defect[ci * fam.h_rank + h] != 0) return false;
        }
    }
    return true;
}

std::optional<CoherentFamily> find_trivialization(const CoherentFamily& fam) {
    require(fam.n >= 1, "trivialization needs dimension >= 1");
    if (!is_n_coherent(fam).coherent)
        throw ValidationError("family is not " + std::to_string(fam.n) + "-coherent");

    CoherentFamily psi =
        CoherentFamily::make(fam.n - 1, fam.ground, fam.index_sets, fam.jmax, fam.ring, fam.h_rank);

    // unknowns: one per ((n-1)-tuple, coordinate outside J_max, H component)
    struct Unknown {
        std::vector<size_t> tuple;
        size_t coord, comp;
    };
    std::vector<Unknown> unknowns;
    std::map<std::pair<std::vector<size_t>, std::pair<size_t, size_t>>, size_t> index;
    auto lower_tuples = fam.tuples(fam.n - 1);
    for (const auto& t : lower_tuples) {
        auto cs = fam.coords(fam.tuple_intersection(t));
        for (size_t y : cs) {
            if (fam.jmax >> y & 1) continue;
            for (size_t h = 0; h < fam.h_rank; ++h) {
                index[{t, {y, h}}] = unknowns.size();
                unknowns.push_back(Unknown{t, y, h});
            }
        }
    }

    // one equation per (n-tuple, coordinate outside J_max, component)
    std::vector<std::vector<Int>> rows;
    std::vector<Int> rhs;
    for (const auto& tuple : fam.tuples(fam.n)) {
        auto cs = fam.coords(fam.tuple_intersection(tuple));
        for (size_t y : cs) {
            if (fam.jmax >> y & 1) continue;
            for (size_t h = 0; h < fam.h_rank; ++h) {
                std::vector<Int> row(unknowns.size(), 0);
                for (size_t omit = 0; omit < tuple.size(); ++omit) {
                    std::vector<size_t> face = tuple;
                    face.erase(face.begin() + long(omit));
                    // faces of an increasing tuple are increasing; coordinate
                    // y lies in the intersection of every face
                    auto it = index.find({face, {y, h}});
                    verify(it != index.end(), "missing unknown for a face");
                    row[it->second] += (omit % 2 == 0) ? 1 : -1;
                }
                rows.push_back(std::move(row));
                rhs.push_back(fam.value_at(tuple, y, h));
            }
        }
    }

    Matrix a(rows.size(), unknowns.size(), fam.ring);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < unknowns.size(); ++j) a.at(i, j) = rows[i][j];
    a.normalize();
    auto sol = solve_integer_system(a, rhs);
    if (!sol) return std::nullopt;

    // assemble psi, zero on J_max coordinates
    for (const auto& t : lower_tuples) {
        auto cs = fam.coords(fam.tuple_intersection(t));
        std::vector<Int> val(cs.size() * fam.h_rank, 0);
        bool any = false;
        for (size_t ci = 0; ci < cs.size(); ++ci) {
            if (fam.jmax >> cs[ci] & 1) continue;
            for (size_t h = 0; h < fam.h_rank; ++h) {
                val[ci * fam.h_rank + h] = (*sol)[index.at({t, {cs[ci], h}})];
                any = any || val[ci * fam.h_rank + h] != 0;
            }
        }
        if (any || psi.n == 0) psi.set_value(t, std::move(val));
    }
    verify(verifies_trivialization(fam, psi), "trivialization failed direct re-evaluation");
    return psi;
}

}  // namespace dlim
