#pragma once
#include <map>
#include <optional>

#include "dlim/ideal.hpp"
#include "dlim/matrix.hpp"

namespace dlim {

// Alternating family phi_T indexed by strictly increasing n-tuples over an
// ordered list L of index sets, with values H-vector functions on the
// intersection of the tuple.  Only increasing tuples are stored; permuted
// lookups pick up the sign of the permutation, repeated entries read as zero.
// Dimension 0 is allowed internally: a single function on the whole ground
// set, which is what a trivialization of a 1-dimensional family is.
class CoherentFamily {
public:
    size_t n = 1;                          // dimension
    std::vector<std::string> ground;       // Y labels
    std::vector<uint64_t> index_sets;      // L, bitmasks over ground
    uint64_t jmax = 0;                     // modulus ideal maximum
    Ring ring = Ring::Z();
    size_t h_rank = 1;

    static CoherentFamily make(size_t n, std::vector<std::string> ground,
                               std::vector<uint64_t> index_sets, uint64_t jmax, Ring ring,
                               size_t h_rank);

    uint64_t tuple_intersection(const std::vector<size_t>& tuple) const;
    // coordinates of a subset, ascending ground order
    std::vector<size_t> coords(uint64_t mask) const;
    size_t value_len(const std::vector<size_t>& tuple) const {
        return coords(tuple_intersection(tuple)).size() * h_rank;
    }

    // store a value vector on an arbitrary tuple (sorted internally, sign applied)
    void set_value(std::vector<size_t> tuple, std::vector<Int> value);
    // evaluate on an arbitrary tuple at ground coordinate y, component c
    Int value_at(const std::vector<size_t>& tuple, size_t y, size_t c) const;
    bool has_value(const std::vector<size_t>& tuple) const;

    const std::map<std::vector<size_t>, std::vector<Int>>& values() const { return values_; }

    // all strictly increasing k-tuples over L, lexicographic
    std::vector<std::vector<size_t>> tuples(size_t k) const;

    void reduce_mod_p();

private:
    std::map<std::vector<size_t>, std::vector<Int>> values_;
    // sorts tuple, returns permutation sign, or 0 for repeated entries
    static int sort_tuple(std::vector<size_t>& tuple);
};

struct CoherenceReport {
    bool coherent = true;
    std::vector<size_t> witness_tuple;  // offending (n+1)-tuple
    std::string witness_coord;          // a coordinate outside J_max with nonzero defect
};

// n-coherence modulo the ideal: for every strictly increasing (n+1)-tuple the
// alternating defect is supported inside J_max.
CoherenceReport is_n_coherent(const CoherentFamily& fam);

// Trivialization: an (n-1)-dimensional family (a single point function when
// n = 1) whose alternating sums reproduce the family outside J_max.  Set up
// as one exact linear system over the coefficient ring on the coordinates
// outside J_max and handed to the integer / mod-p solver; any solution found
// is re-verified by direct evaluation before being returned.
std::optional<CoherentFamily> find_trivialization(const CoherentFamily& fam);

// Defect of a candidate trivialization psi against fam on a given tuple:
// sum_i (-1)^i psi_{T minus i} - phi_T restricted to the intersection.
std::vector<Int> trivialization_defect(const CoherentFamily& fam, const CoherentFamily& psi,
                                       const std::vector<size_t>& tuple);
bool verifies_trivialization(const CoherentFamily& fam, const CoherentFamily& psi);

}  // namespace dlim
