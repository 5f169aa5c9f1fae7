#pragma once

#include <string>

#include "blockset/group.hpp"

namespace blockset {

// Triple (A, B, C) of nonempty subsets of G for the relation G -> m:
// 0 not in A+B+C, the triple is maximal under adjoining single elements,
// and m = |A| + |B| + |C|.
struct ArrowTriple {
    AbelianGroup group;
    ElemSet A, B, C;
    int m() const { return static_cast<int>(A.size() + B.size() + C.size()); }
    bool operator==(const ArrowTriple& o) const
    {
        return group == o.group && A == o.A && B == o.B && C == o.C;
    }
};

enum class ArrowStatus { ok, not_avoiding, not_maximal };

struct ArrowCheck {
    ArrowStatus status = ArrowStatus::ok;
    char witness_set = 0;    // 'A', 'B' or 'C' when not_maximal
    int witness_element = -1;
};

ArrowCheck realizes_arrow(const ArrowTriple& t);

// Saturates A, then B, then C, candidates in element order. Requires the
// input to avoid 0 already.
ArrowTriple extend_to_maximal(const ArrowTriple& t);

// All maximal triples with the given m, exhaustive over ordered (A, B)
// (C is forced by maximality), in ascending bitmask order of (A, B).
// Requires |G| <= 16.
std::vector<ArrowTriple> search_arrow(const AbelianGroup& G, int m);
// Same, without the m filter.
std::vector<ArrowTriple> search_arrow_all(const AbelianGroup& G);

// Bounds every realization of G -> m must satisfy, from the counting
// argument: m_max = floor(3n/2) and m_min = least m with m^2 + 3m >= 9n.
// Neither bound is claimed tight.
std::pair<int, int> arrow_bounds(int n);

// Preimages of a realization of (G/K) -> m under the canonical projection;
// realizes G -> |G| m / |G/K|.
ArrowTriple lift_realization(const AbelianGroup& G, const Subgroup& k,
                             const QuotientModel& q, const ArrowTriple& t_quot);

// The realization of G -> n + d built from the trivial quotient triple
// ({0},{0},J\{0}) lifted through G -> G/K with |K| = d.
ArrowTriple divisor_realization(const AbelianGroup& G, int d);

enum class StructureStatus { not_applicable, ok, violation };

struct StructureCheck {
    StructureStatus status = StructureStatus::not_applicable;
    Subgroup h;
};

// For m > n+1, finds a subgroup H with m = n + |H| and A, B, C unions of
// H-cosets. A violation would falsify the structure theorem the census
// relies on, so callers abort on it.
StructureCheck structure_check(const ArrowTriple& t);

// The parabola triple on Z_p x Z_p: A = {(x, x^2)}, B = -A,
// C = {(0, y) : y != 0}. Realizes G -> 3p - 1 and satisfies
// A+B = G\C, A+C = G\A, B+C = G\B; all four facts are asserted.
ArrowTriple szonyi_example(int p);

// Bijection between field elements and a group model: Z_p^k with the
// coefficient encoding for (GF(q), +), Z_{q-1} via dlog for GF(q)*.
struct GroupModel {
    AbelianGroup group;
    FieldPtr field;
    std::vector<int> to_index;   // field code -> group index (-1 for 0 in mult)
    std::vector<int> to_field;   // group index -> field code
};

GroupModel additive_model(const FieldPtr& f);
GroupModel multiplicative_model(const FieldPtr& f);

}  // namespace blockset
