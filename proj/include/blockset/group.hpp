#pragma once

#include <vector>

#include "blockset/common.hpp"
#include "blockset/gf.hpp"

namespace blockset {

// Finite abelian group Z_{n1} x ... x Z_{nr}, n_i >= 2. Elements are indices
// in [0, n) encoding the residue tuple in mixed radix, first factor least
// significant.
struct AbelianGroup {
    std::vector<int> orders;
    int n = 0;

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<int> ord);

    int add(int a, int b) const;
    int neg(int a) const;
    int order_of(int a) const;
    std::vector<int> digits(int a) const;
    int from_digits(const std::vector<int>& d) const;

    bool operator==(const AbelianGroup& o) const { return orders == o.orders; }
};

using ElemSet = std::vector<int>;  // sorted, duplicate free

ElemSet sumset(const AbelianGroup& G, const ElemSet& x, const ElemSet& y);
ElemSet neg_set(const AbelianGroup& G, const ElemSet& x);
ElemSet translate(const AbelianGroup& G, const ElemSet& x, int g);
ElemSet complement(const AbelianGroup& G, const ElemSet& x);
bool set_contains(const ElemSet& x, int g);

struct Subgroup {
    ElemSet elements;  // sorted, contains 0, closed
    int size() const { return static_cast<int>(elements.size()); }
};

bool is_subgroup(const AbelianGroup& G, const ElemSet& x);
Subgroup cyclic_subgroup(const AbelianGroup& G, int g);
Subgroup closure(const AbelianGroup& G, const ElemSet& gens);

// All subgroups, ordered by (size, element list).
std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& G);

// Is x a union of H-cosets, i.e. x + H = x?
bool is_coset_union(const AbelianGroup& G, const ElemSet& x, const Subgroup& h);

// The stabilizer H = {g : X+Y+g = X+Y}. Also asserts both Kneser
// conclusions: X+Y = X+Y+H and |X+Y| >= |X+H| + |Y+H| - |H|.
Subgroup kneser_stabilizer(const AbelianGroup& G, const ElemSet& x, const ElemSet& y);

// G/K as a product of cyclic groups together with the projection map
// (element index of G -> element index of the quotient).
struct QuotientModel {
    AbelianGroup quotient;
    std::vector<int> projection;  // size G.n
};
QuotientModel quotient_model(const AbelianGroup& G, const Subgroup& k);

}  // namespace blockset
