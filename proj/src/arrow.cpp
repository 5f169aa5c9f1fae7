#include "blockset/arrow.hpp"

#include <algorithm>

namespace blockset {

namespace {

void require_valid_sets(const ArrowTriple& t)
{
    require(!t.A.empty() && !t.B.empty() && !t.C.empty(), "arrow triple components must be nonempty");
    for (const ElemSet* s : {&t.A, &t.B, &t.C})
        for (int g : *s) require(g >= 0 && g < t.group.n, "arrow triple element out of range");
}

}  // namespace

ArrowCheck realizes_arrow(const ArrowTriple& t)
{
    require_valid_sets(t);
    const AbelianGroup& G = t.group;
    ElemSet ab = sumset(G, t.A, t.B);
    ElemSet bc = sumset(G, t.B, t.C);
    ElemSet ac = sumset(G, t.A, t.C);

    for (int c : t.C)
        if (set_contains(ab, G.neg(c))) return {ArrowStatus::not_avoiding, 0, -1};

    // x can join A iff -x is not in B+C; same pattern for B and C.
    for (int x = 0; x < G.n; ++x)
        if (!set_contains(t.A, x) && !set_contains(bc, G.neg(x)))
            return {ArrowStatus::not_maximal, 'A', x};
    for (int x = 0; x < G.n; ++x)
        if (!set_contains(t.B, x) && !set_contains(ac, G.neg(x)))
            return {ArrowStatus::not_maximal, 'B', x};
    for (int x = 0; x < G.n; ++x)
        if (!set_contains(t.C, x) && !set_contains(ab, G.neg(x)))
            return {ArrowStatus::not_maximal, 'C', x};
    return {ArrowStatus::ok, 0, -1};
}

ArrowTriple extend_to_maximal(const ArrowTriple& t)
{
    require_valid_sets(t);
    const AbelianGroup& G = t.group;
    ArrowTriple r = t;
    {
        ElemSet ab = sumset(G, r.A, r.B);
        bool avoid = true;
        for (int c : r.C)
            if (set_contains(ab, G.neg(c))) avoid = false;
        require(avoid, "extend_to_maximal: input does not avoid 0");
    }
    ElemSet bc = sumset(G, r.B, r.C);
    for (int x = 0; x < G.n; ++x)
        if (!set_contains(r.A, x) && !set_contains(bc, G.neg(x))) {
            r.A.insert(std::lower_bound(r.A.begin(), r.A.end(), x), x);
        }
    // growing B does not change A+C, and growing C does not change A+B,
    // so one pass per set suffices
    ElemSet ac = sumset(G, r.A, r.C);
    for (int x = 0; x < G.n; ++x)
        if (!set_contains(r.B, x) && !set_contains(ac, G.neg(x)))
            r.B.insert(std::lower_bound(r.B.begin(), r.B.end(), x), x);
    ElemSet ab = sumset(G, r.A, r.B);
    for (int x = 0; x < G.n; ++x)
        if (!set_contains(r.C, x) && !set_contains(ab, G.neg(x))) {
            r.C.insert(std::lower_bound(r.C.begin(), r.C.end(), x), x);
        }
    check_internal(realizes_arrow(r).status == ArrowStatus::ok,
                   "greedy extension did not produce a maximal triple");
    return r;
}

namespace {

// Bitmask search engine for |G| <= 16. tbl[a][mask] = mask translated by a.
struct MaskTables {
    int n = 0;
    std::vector<std::vector<std::uint32_t>> shift;  // n x 2^n
    std::vector<std::uint32_t> negmask;             // 2^n

    explicit MaskTables(const AbelianGroup& G) : n(G.n)
    {
        int total = 1 << n;
        std::vector<int> negp(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) negp[static_cast<std::size_t>(a)] = G.neg(a);
        shift.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(total), 0));
        for (int a = 0; a < n; ++a) {
            auto& row = shift[static_cast<std::size_t>(a)];
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int b = 0; b < n; ++b) perm[static_cast<std::size_t>(b)] = G.add(a, b);
            for (int mask = 1; mask < total; ++mask) {
                int low = __builtin_ctz(static_cast<unsigned>(mask));
                row[static_cast<std::size_t>(mask)] =
                    row[static_cast<std::size_t>(mask & (mask - 1))] |
                    (std::uint32_t{1} << perm[static_cast<std::size_t>(low)]);
            }
        }
        negmask.assign(static_cast<std::size_t>(total), 0);
        for (int mask = 1; mask < total; ++mask) {
            int low = __builtin_ctz(static_cast<unsigned>(mask));
            negmask[static_cast<std::size_t>(mask)] =
                negmask[static_cast<std::size_t>(mask & (mask - 1))] |
                (std::uint32_t{1} << negp[static_cast<std::size_t>(low)]);
        }
    }

    std::uint32_t sum(std::uint32_t x, std::uint32_t y) const
    {
        std::uint32_t r = 0;
        while (x) {
            int a = __builtin_ctz(x);
            x &= x - 1;
            r |= shift[static_cast<std::size_t>(a)][y];
        }
        return r;
    }
};

ElemSet mask_to_set(std::uint32_t m)
{
    ElemSet out;
    while (m) {
        out.push_back(__builtin_ctz(m));
        m &= m - 1;
    }
    return out;
}

std::vector<ArrowTriple> search_impl(const AbelianGroup& G, int m, bool filter_m)
{
    require(G.n <= 16, "search_arrow: group too large (|G| <= 16)");
    MaskTables T(G);
    std::uint32_t full = (std::uint32_t{1} << G.n) - 1;
    std::vector<ArrowTriple> out;
    int total = 1 << G.n;
    for (int am = 1; am < total; ++am) {
        int ca = __builtin_popcount(static_cast<unsigned>(am));
        if (filter_m && ca + 2 > m) continue;
        for (int bm = 1; bm < total; ++bm) {
            std::uint32_t ab = T.sum(static_cast<std::uint32_t>(am), static_cast<std::uint32_t>(bm));
            std::uint32_t cm = full & ~T.negmask[static_cast<std::size_t>(ab)];
            if (!cm) continue;  // A+B = G, no room for C
            if (filter_m &&
                ca + __builtin_popcount(static_cast<unsigned>(bm)) + __builtin_popcount(cm) != m)
                continue;
            // A maximal <=> complement(-(B+C)) subset of A; same for B.
            std::uint32_t bc = T.sum(static_cast<std::uint32_t>(bm), cm);
            if ((full & ~T.negmask[static_cast<std::size_t>(bc)]) & ~static_cast<std::uint32_t>(am)) continue;
            std::uint32_t ac = T.sum(static_cast<std::uint32_t>(am), cm);
            if ((full & ~T.negmask[static_cast<std::size_t>(ac)]) & ~static_cast<std::uint32_t>(bm)) continue;
            ArrowTriple t;
            t.group = G;
            t.A = mask_to_set(static_cast<std::uint32_t>(am));
            t.B = mask_to_set(static_cast<std::uint32_t>(bm));
            t.C = mask_to_set(cm);
            out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace

std::vector<ArrowTriple> search_arrow(const AbelianGroup& G, int m)
{
    return search_impl(G, m, true);
}

std::vector<ArrowTriple> search_arrow_all(const AbelianGroup& G)
{
    return search_impl(G, 0, false);
}

std::pair<int, int> arrow_bounds(int n)
{
    require(n >= 2, "arrow_bounds: n >= 2");
    int m_max = 3 * n / 2;
    int m_min = 1;
    while (m_min * m_min + 3 * m_min < 9 * n) ++m_min;
    return {m_min, m_max};
}

ArrowTriple lift_realization(const AbelianGroup& G, const Subgroup& k,
                             const QuotientModel& q, const ArrowTriple& t_quot)
{
    require(t_quot.group == q.quotient, "lifted triple must live on the given quotient model");
    require(realizes_arrow(t_quot).status == ArrowStatus::ok,
            "lift_realization: input is not a realization");
    require(is_subgroup(G, k.elements), "lift_realization: K is not a subgroup");
    ArrowTriple out;
    out.group = G;
    for (int g = 0; g < G.n; ++g) {
        int img = q.projection[static_cast<std::size_t>(g)];
        if (set_contains(t_quot.A, img)) out.A.push_back(g);
        if (set_contains(t_quot.B, img)) out.B.push_back(g);
        if (set_contains(t_quot.C, img)) out.C.push_back(g);
    }
    check_internal(realizes_arrow(out).status == ArrowStatus::ok,
                   "lifted triple is not a realization");
    check_internal(out.m() * q.quotient.n == t_quot.m() * G.n, "lifted m mismatch");
    return out;
}

ArrowTriple divisor_realization(const AbelianGroup& G, int d)
{
    require(d >= 1 && d < G.n && G.n % d == 0, "divisor_realization: d must be a proper divisor of |G|");
    if (d == 1) {
        ArrowTriple t;
        t.group = G;
        t.A = {0};
        t.B = {0};
        t.C = complement(G, {0});
        check_internal(realizes_arrow(t).status == ArrowStatus::ok, "trivial realization failed");
        return t;
    }
    // least subgroup of order d (exists: G abelian)
    Subgroup k;
    for (const auto& h : enumerate_subgroups(G))
        if (h.size() == d) {
            k = h;
            break;
        }
    check_internal(!k.elements.empty(), "no subgroup of the requested order");
    QuotientModel q = quotient_model(G, k);
    ArrowTriple t_quot;
    t_quot.group = q.quotient;
    t_quot.A = {0};
    t_quot.B = {0};
    t_quot.C = complement(q.quotient, {0});
    ArrowTriple out = lift_realization(G, k, q, t_quot);
    check_internal(out.m() == G.n + d, "divisor realization has wrong m");
    return out;
}

StructureCheck structure_check(const ArrowTriple& t)
{
    require(realizes_arrow(t).status == ArrowStatus::ok, "structure_check: not a realization");
    const AbelianGroup& G = t.group;
    int m = t.m();
    if (m <= G.n + 1) return {StructureStatus::not_applicable, {}};
    int hsize = m - G.n;
    if (G.n % hsize == 0)
        for (const auto& h : enumerate_subgroups(G)) {
            if (h.size() != hsize) continue;
            if (is_coset_union(G, t.A, h) && is_coset_union(G, t.B, h) && is_coset_union(G, t.C, h))
                return {StructureStatus::ok, h};
        }
    return {StructureStatus::violation, {}};
}

ArrowTriple szonyi_example(int p)
{
    require(p >= 3 && p <= 13 && is_prime(p), "szonyi_example: p must be an odd prime <= 13");
    AbelianGroup G({p, p});
    auto enc = [&](int x, int y) { return G.from_digits({x, y}); };
    ArrowTriple t;
    t.group = G;
    for (int x = 0; x < p; ++x) {
        t.A.push_back(enc(x, x * x % p));
        t.B.push_back(enc((p - x) % p, (p - x * x % p) % p));
    }
    for (int y = 1; y < p; ++y) t.C.push_back(enc(0, y));
    std::sort(t.A.begin(), t.A.end());
    std::sort(t.B.begin(), t.B.end());
    std::sort(t.C.begin(), t.C.end());

    check_internal(sumset(G, t.A, t.B) == complement(G, t.C), "parabola triple: A+B != G\\C");
    check_internal(sumset(G, t.A, t.C) == complement(G, t.A), "parabola triple: A+C != G\\A");
    check_internal(sumset(G, t.B, t.C) == complement(G, t.B), "parabola triple: B+C != G\\B");
    check_internal(neg_set(G, t.B) == t.A, "parabola triple: -B != A");
    check_internal(realizes_arrow(t).status == ArrowStatus::ok, "parabola triple is not maximal");
    check_internal(t.m() == 3 * p - 1, "parabola triple has wrong m");
    return t;
}

GroupModel additive_model(const FieldPtr& f)
{
    GroupModel m;
    m.field = f;
    m.group = AbelianGroup(std::vector<int>(static_cast<std::size_t>(f->k()), f->p()));
    m.to_index.resize(static_cast<std::size_t>(f->q()));
    m.to_field.resize(static_cast<std::size_t>(f->q()));
    // the coefficient encoding of field codes equals the mixed radix index
    for (int c = 0; c < f->q(); ++c) {
        m.to_index[static_cast<std::size_t>(c)] = c;
        m.to_field[static_cast<std::size_t>(c)] = c;
    }
    return m;
}

GroupModel multiplicative_model(const FieldPtr& f)
{
    require(f->q() >= 3, "multiplicative model needs q >= 3");
    GroupModel m;
    m.field = f;
    m.group = AbelianGroup({f->q() - 1});
    m.to_index.assign(static_cast<std::size_t>(f->q()), -1);
    m.to_field.resize(static_cast<std::size_t>(f->q() - 1));
    for (int e = 0; e < f->q() - 1; ++e) {
        int x = f->exp(e);
        m.to_index[static_cast<std::size_t>(x)] = e;
        m.to_field[static_cast<std::size_t>(e)] = x;
    }
    return m;
}

}  // namespace blockset
