#include "blockset/group.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace blockset {

AbelianGroup::AbelianGroup(std::vector<int> ord) : orders(std::move(ord))
{
    require(!orders.empty(), "abelian group needs at least one cyclic factor");
    n = 1;
    for (int o : orders) {
        require(o >= 2, "cyclic factor orders must be >= 2");
        require(n <= 1'000'000 / o, "group too large");
        n *= o;
    }
}

int AbelianGroup::add(int a, int b) const
{
    int r = 0, mult = 1;
    for (int o : orders) {
        r += (a % o + b % o) % o * mult;
        a /= o;
        b /= o;
        mult *= o;
    }
    return r;
}

int AbelianGroup::neg(int a) const
{
    int r = 0, mult = 1;
    for (int o : orders) {
        r += (o - a % o) % o * mult;
        a /= o;
        mult *= o;
    }
    return r;
}

int AbelianGroup::order_of(int a) const
{
    int x = a, ord = 1;
    while (x != 0) {
        x = add(x, a);
        ++ord;
    }
    return ord;
}

std::vector<int> AbelianGroup::digits(int a) const
{
    std::vector<int> d;
    d.reserve(orders.size());
    for (int o : orders) {
        d.push_back(a % o);
        a /= o;
    }
    return d;
}

int AbelianGroup::from_digits(const std::vector<int>& d) const
{
    int r = 0, mult = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        r += d[i] % orders[i] * mult;
        mult *= orders[i];
    }
    return r;
}

ElemSet sumset(const AbelianGroup& G, const ElemSet& x, const ElemSet& y)
{
    std::vector<char> seen(static_cast<std::size_t>(G.n), 0);
    for (int a : x)
        for (int b : y) seen[static_cast<std::size_t>(G.add(a, b))] = 1;
    ElemSet out;
    for (int g = 0; g < G.n; ++g)
        if (seen[static_cast<std::size_t>(g)]) out.push_back(g);
    return out;
}

ElemSet neg_set(const AbelianGroup& G, const ElemSet& x)
{
    ElemSet out;
    out.reserve(x.size());
    for (int a : x) out.push_back(G.neg(a));
    std::sort(out.begin(), out.end());
    return out;
}

ElemSet translate(const AbelianGroup& G, const ElemSet& x, int g)
{
    ElemSet out;
    out.reserve(x.size());
    for (int a : x) out.push_back(G.add(a, g));
    std::sort(out.begin(), out.end());
    return out;
}

ElemSet complement(const AbelianGroup& G, const ElemSet& x)
{
    ElemSet out;
    std::size_t i = 0;
    for (int g = 0; g < G.n; ++g) {
        if (i < x.size() && x[i] == g)
            ++i;
        else
            out.push_back(g);
    }
    return out;
}

bool set_contains(const ElemSet& x, int g) { return std::binary_search(x.begin(), x.end(), g); }

bool is_subgroup(const AbelianGroup& G, const ElemSet& x)
{
    if (x.empty() || !set_contains(x, 0)) return false;
    for (int a : x)
        for (int b : x)
            if (!set_contains(x, G.add(a, b))) return false;
    return true;
}

Subgroup closure(const AbelianGroup& G, const ElemSet& gens)
{
    std::vector<char> in(static_cast<std::size_t>(G.n), 0);
    in[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int g : gens) {
            int s = G.add(queue[head], g);
            if (!in[static_cast<std::size_t>(s)]) {
                in[static_cast<std::size_t>(s)] = 1;
                queue.push_back(s);
            }
        }
    ElemSet out;
    for (int g = 0; g < G.n; ++g)
        if (in[static_cast<std::size_t>(g)]) out.push_back(g);
    return Subgroup{out};
}

Subgroup cyclic_subgroup(const AbelianGroup& G, int g) { return closure(G, {g}); }

std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& G)
{
    std::set<ElemSet> found;
    found.insert(ElemSet{0});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ElemSet> snapshot(found.begin(), found.end());
        for (const auto& h : snapshot)
            for (int g = 1; g < G.n; ++g) {
                if (set_contains(h, g)) continue;
                ElemSet gens = h;
                gens.push_back(g);
                auto c = closure(G, gens);
                if (found.insert(c.elements).second) grew = true;
            }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& e : found) out.push_back(Subgroup{e});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

bool is_coset_union(const AbelianGroup& G, const ElemSet& x, const Subgroup& h)
{
    for (int a : x)
        for (int s : h.elements)
            if (!set_contains(x, G.add(a, s))) return false;
    return true;
}

Subgroup kneser_stabilizer(const AbelianGroup& G, const ElemSet& x, const ElemSet& y)
{
    require(!x.empty() && !y.empty(), "kneser_stabilizer: empty input");
    ElemSet xy = sumset(G, x, y);
    ElemSet stab;
    for (int g = 0; g < G.n; ++g)
        if (translate(G, xy, g) == xy) stab.push_back(g);
    Subgroup h{stab};
    check_internal(is_subgroup(G, h.elements), "sumset stabilizer is not a subgroup");
    check_internal(sumset(G, xy, h.elements) == xy, "Kneser: A+B != A+B+H");
    int lhs = static_cast<int>(xy.size());
    int rhs = static_cast<int>(sumset(G, x, h.elements).size()) +
              static_cast<int>(sumset(G, y, h.elements).size()) - h.size();
    check_internal(lhs >= rhs, "Kneser inequality |A+B| >= |A+H|+|B+H|-|H| failed");
    return h;
}

namespace {

// Cyclic decomposition of a finite abelian group given by an addition
// function on element ids 0..m-1 (0 = identity). Returns the factor orders
// and per-element digit tuples (first factor least significant). Splits off
// a maximal-order cyclic subgroup and recurses on an exhaustively found
// complement; sizes stay tiny in every supported use.
struct TableDecomp {
    std::vector<int> orders;
    std::vector<std::vector<int>> digits;  // node id -> digit tuple
};

TableDecomp decompose_table(const std::vector<int>& elems,
                            const std::function<int(int, int)>& add)
{
    TableDecomp out;
    int m = static_cast<int>(elems.size());
    out.digits.assign(static_cast<std::size_t>(*std::max_element(elems.begin(), elems.end()) + 1), {});
    if (m == 1) {
        out.digits[static_cast<std::size_t>(elems[0])] = {};
        return out;
    }

    auto order_of = [&](int a) {
        int x = a, o = 1;
        while (x != 0) {
            x = add(x, a);
            ++o;
        }
        return o;
    };

    int g = -1, god = 0;
    for (int a : elems)
        if (a != 0 && order_of(a) > god) {
            god = order_of(a);
            g = a;
        }
    std::vector<int> cyc;
    {
        int x = 0;
        do {
            cyc.push_back(x);
            x = add(x, g);
        } while (x != 0);
    }
    std::vector<int> pos(out.digits.size(), -1);
    for (int i = 0; i < god; ++i) pos[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] = i;

    if (god == m) {
        out.orders = {god};
        for (int a : elems) out.digits[static_cast<std::size_t>(a)] = {pos[static_cast<std::size_t>(a)]};
        return out;
    }

    // exhaustive complement search: subgroup T, |T| = m / god, T meet <g> = {0}
    int want = m / god;
    std::set<std::vector<int>> subs;
    subs.insert({0});
    std::vector<int> comp;
    bool grew = true;
    while (comp.empty() && grew) {
        grew = false;
        std::vector<std::vector<int>> snap(subs.begin(), subs.end());
        for (const auto& h : snap) {
            for (int a : elems) {
                if (a == 0 || std::binary_search(h.begin(), h.end(), a)) continue;
                std::vector<int> gens = h;
                gens.push_back(a);
                std::set<int> cl{0};
                std::vector<int> queue{0};
                for (std::size_t head = 0; head < queue.size(); ++head)
                    for (int gg : gens) {
                        int s = add(queue[head], gg);
                        if (cl.insert(s).second) queue.push_back(s);
                    }
                std::vector<int> clv(cl.begin(), cl.end());
                if (static_cast<int>(clv.size()) == want) {
                    bool trivial = true;
                    for (int c : clv)
                        if (c != 0 && pos[static_cast<std::size_t>(c)] >= 0) {
                            trivial = false;
                            break;
                        }
                    if (trivial) {
                        comp = clv;
                        break;
                    }
                }
                if (subs.insert(clv).second) grew = true;
            }
            if (!comp.empty()) break;
        }
    }
    check_internal(!comp.empty(), "no complement to a maximal cyclic factor");

    TableDecomp sub = decompose_table(comp, add);
    out.orders = {god};
    out.orders.insert(out.orders.end(), sub.orders.begin(), sub.orders.end());
    std::vector<char> in_comp(out.digits.size(), 0);
    for (int t : comp) in_comp[static_cast<std::size_t>(t)] = 1;
    // negatives of cyc[i] within the cyclic factor
    std::vector<int> neg_cyc(static_cast<std::size_t>(god));
    for (int i = 0; i < god; ++i) neg_cyc[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>((god - i) % god)];
    for (int a : elems) {
        int di = -1, t = -1;
        for (int i = 0; i < god; ++i) {
            int cand = add(a, neg_cyc[static_cast<std::size_t>(i)]);
            if (in_comp[static_cast<std::size_t>(cand)]) {
                di = i;
                t = cand;
                break;
            }
        }
        check_internal(di >= 0, "direct sum split failed");
        std::vector<int> d{di};
        const auto& rest = sub.digits[static_cast<std::size_t>(t)];
        d.insert(d.end(), rest.begin(), rest.end());
        out.digits[static_cast<std::size_t>(a)] = d;
    }
    return out;
}

}  // namespace

QuotientModel quotient_model(const AbelianGroup& G, const Subgroup& k)
{
    require(is_subgroup(G, k.elements), "quotient_model: K is not a subgroup");
    require(k.size() < G.n, "quotient_model: quotient is trivial (K = G)");
    int m = G.n / k.size();

    std::vector<int> coset_of(static_cast<std::size_t>(G.n), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.n; ++g) {
        if (coset_of[static_cast<std::size_t>(g)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int s : k.elements) coset_of[static_cast<std::size_t>(G.add(g, s))] = id;
    }
    check_internal(static_cast<int>(reps.size()) == m, "coset count mismatch");

    auto qadd = [&](int a, int b) {
        return coset_of[static_cast<std::size_t>(
            G.add(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))];
    };
    std::vector<int> elems(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) elems[static_cast<std::size_t>(i)] = i;
    TableDecomp dec = decompose_table(elems, qadd);

    QuotientModel result;
    result.quotient = AbelianGroup(dec.orders);
    result.projection.resize(static_cast<std::size_t>(G.n));
    for (int g = 0; g < G.n; ++g) {
        const auto& d = dec.digits[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(g)])];
        result.projection[static_cast<std::size_t>(g)] = result.quotient.from_digits(d);
    }
    return result;
}

}  // namespace blockset
