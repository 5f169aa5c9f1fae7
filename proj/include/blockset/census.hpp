#pragma once

#include <map>
#include <string>

#include "blockset/construct.hpp"

namespace blockset {

// Equivalence-invariant prescreen key. Never used to merge classes, only to
// skip canonical-form work between sets that cannot be equivalent.
struct Fingerprint {
    int size = 0;
    std::vector<std::pair<int, int>> spectrum;
    bool redei = false;
    std::vector<int> tangent_counts;  // sorted multiset
    auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Plane& P, const PointSet& s);

struct CensusClass {
    PointSet canonical;
    int size = 0;
    bool is_redei = false;
    std::string configuration;  // triad | triangle | concurrent-degenerate
    std::string provenance;     // defining profile or arrow triple
    std::string reference;      // matched published representative, if any
    Fingerprint print;
    bool unclaimed = false;     // size-13 non-Redei classes are reported, not asserted
    int candidates = 0;         // how many swept candidates landed here
};

struct CensusReport {
    int q = 0;
    int size_lo = 0, size_hi = 0;
    std::vector<CensusClass> classes;      // (size, redei desc, canonical lex)
    std::map<std::string, int> totals;     // per (size, redei) bucket
};

// Sweeps all triad profiles, all triangle profiles and all maximal arrow
// triples on both models whose sizes land in [lo, hi]; filters to proper,
// minimal, cover index 3; buckets by canonical form. Deterministic for any
// thread count. q != 7 requires unsafe_large_q (no acceptance guarantees).
CensusReport enumerate_index3(const FieldPtr& f, int lo, int hi, int threads = 1,
                              bool unsafe_large_q = false);

// enumerate_index3(GF(7), 12, 14) plus the assertion bundle for the
// published PG(2,7) classification; throws internal_error with a diff of
// expected vs found classes on any mismatch.
CensusReport pg27_report(int threads = 1);

// Partition into equivalence classes, prescreening with fingerprints.
// Blocks are ordered by first member index, members ascending.
std::vector<std::vector<int>> equivalence_table(const Plane& P, const std::vector<PointSet>& sets);

}  // namespace blockset
