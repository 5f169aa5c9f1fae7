#include "blockset/census.hpp"

#include <algorithm>
#include <sstream>

namespace blockset {

Fingerprint fingerprint(const Plane& P, const PointSet& s)
{
    Fingerprint f;
    f.size = s.size();
    Bitset m = P.to_mask(s);
    f.spectrum = intersection_spectrum(P, m);
    f.redei = !redei_lines(P, s).empty();
    for (int p : m.to_indices()) f.tangent_counts.push_back(tangent_count(P, m, p));
    std::sort(f.tangent_counts.begin(), f.tangent_counts.end());
    return f;
}

namespace {

struct Candidate {
    PointSet set;
    std::string configuration;
    std::string provenance;
};

std::string triple_str(const ArrowTriple& t, const GroupModel& model)
{
    auto fmt = [&](const ElemSet& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(model.to_field[static_cast<std::size_t>(s[i])]);
        }
        return out + "}";
    };
    return "A=" + fmt(t.A) + " B=" + fmt(t.B) + " C=" + fmt(t.C);
}

std::string codes_str(const std::vector<int>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// Two lines of the concurrent configuration carrying q points each is the
// degenerate concurrent shape.
bool concurrent_degenerate(const Plane& P, const PointSet& s)
{
    Bitset m = P.to_mask(s);
    int x0 = P.line_index(P.normalize_line(1, 0, 0));
    int x1 = P.line_index(P.normalize_line(1, 0, P.field().neg(1)));
    int z0 = P.line_index(P.normalize_line(0, 0, 1));
    int full = 0;
    for (int l : {x0, x1, z0})
        if (P.line_mask(l).count_and(m) == P.q()) ++full;
    return full >= 2;
}

}  // namespace

std::vector<std::vector<int>> equivalence_table(const Plane& P, const std::vector<PointSet>& sets)
{
    for (const auto& s : sets)
        require(*s.field == P.field(), "equivalence_table: mixed fields");

    std::map<Fingerprint, std::vector<int>> screen;
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
        screen[fingerprint(P, sets[static_cast<std::size_t>(i)])].push_back(i);

    std::vector<std::vector<int>> blocks;
    for (auto& [fp, members] : screen) {
        std::map<PointSet, int> by_canon;
        for (int i : members) {
            PointSet c = canonical_form(P, sets[static_cast<std::size_t>(i)]);
            auto [it, inserted] = by_canon.try_emplace(std::move(c), static_cast<int>(blocks.size()));
            if (inserted) blocks.emplace_back();
            blocks[static_cast<std::size_t>(it->second)].push_back(i);
        }
    }
    // reorder blocks by first member, members ascending
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

CensusReport enumerate_index3(const FieldPtr& f, int lo, int hi, int threads, bool unsafe_large_q)
{
    const Field& F = *f;
    int q = F.q();
    require(q == 7 || unsafe_large_q,
            "enumerate_index3 is guaranteed only for q = 7 (pass unsafe_large_q to override)");
    require(lo <= hi, "enumerate_index3: empty size range");
    Plane P(f);

    std::vector<Candidate> cands;

    // (a) triad profiles, ascending subset mask over GF(q)
    for (int mask = 1; mask < (1 << q) - 1; ++mask) {
        std::vector<int> a;
        for (int i = 0; i < q; ++i)
            if (mask & (1 << i)) a.push_back(i);
        auto rec = triad_blocking_set(triad_profile(f, a));
        if (rec.set.size() < lo || rec.set.size() > hi) continue;
        std::string cfg = concurrent_degenerate(P, rec.set) ? "concurrent-degenerate" : "triad";
        cands.push_back({rec.set, cfg, "triad profile A=" + codes_str(a)});
    }

    // (b) triangle profiles, ascending subset mask over GF(q)*
    for (int mask = 1; mask < (1 << (q - 1)) - 1; ++mask) {
        std::vector<int> a;
        for (int i = 0; i < q - 1; ++i)
            if (mask & (1 << i)) a.push_back(i + 1);
        auto prof = triangle_profile(f, a);
        auto rec = triangle_blocking_set(prof);
        if (rec.set.size() < lo || rec.set.size() > hi) continue;
        cands.push_back({rec.set, "triangle",
                         "triangle profile A=" + codes_str(a) + " B=" + codes_str(triangle_b_of(prof))});
    }

    // (c) arrow sweeps; a structure violation would falsify the census basis
    GroupModel add = additive_model(f);
    for (int m = 3 * q + 1 - hi; m <= 3 * q + 1 - lo; ++m) {
        if (m < 3) continue;
        for (const auto& t : search_arrow(add.group, m)) {
            if (t.m() > add.group.n + 1)
                check_internal(structure_check(t).status == StructureStatus::ok,
                               "structure theorem violated by an additive triple; census aborted");
            auto rec = concurrent_from_arrow(add, t);
            std::string cfg = concurrent_degenerate(P, rec.set) ? "concurrent-degenerate" : "triad";
            cands.push_back({rec.set, cfg, "concurrent triple " + triple_str(t, add)});
        }
    }
    GroupModel mult = multiplicative_model(f);
    for (int m = 3 * q - hi; m <= 3 * q - lo; ++m) {
        if (m < 3) continue;
        for (const auto& t : search_arrow(mult.group, m)) {
            if (t.m() > mult.group.n + 1)
                check_internal(structure_check(t).status == StructureStatus::ok,
                               "structure theorem violated by a multiplicative triple; census aborted");
            auto rec = triangle_from_arrow(mult, t);
            cands.push_back({rec.set, "triangle", "triangle triple " + triple_str(t, mult)});
        }
    }

    // filter and dedupe identical point sets, first provenance wins
    std::map<PointSet, int> first_of;
    std::vector<int> keep;
    std::vector<int> hit_count;
    for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
        const Candidate& c = cands[static_cast<std::size_t>(i)];
        auto it = first_of.find(c.set);
        if (it != first_of.end()) {
            ++hit_count[static_cast<std::size_t>(it->second)];
            continue;
        }
        Bitset m = P.to_mask(c.set);
        if (!is_proper(P, m) || !is_minimal(P, m)) continue;
        auto [idx, exact] = cover_index(P, m, 4);
        if (!exact || idx != 3) continue;
        first_of.emplace(c.set, static_cast<int>(keep.size()));
        keep.push_back(i);
        hit_count.push_back(1);
    }

    // canonical forms in parallel, deterministic merge
    auto canon = parallel_map<PointSet>(static_cast<int>(keep.size()), threads, [&](int i) {
        return canonical_form(P, cands[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])].set);
    });

    std::map<PointSet, CensusClass> by_canon;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const Candidate& c = cands[static_cast<std::size_t>(keep[i])];
        auto it = by_canon.find(canon[i]);
        if (it == by_canon.end()) {
            CensusClass cls;
            cls.canonical = canon[i];
            cls.size = c.set.size();
            cls.print = fingerprint(P, canon[i]);
            cls.is_redei = cls.print.redei;
            cls.configuration = c.configuration;
            cls.provenance = c.provenance;
            cls.unclaimed = (cls.size == 13 && !cls.is_redei);
            cls.candidates = hit_count[i];
            by_canon.emplace(canon[i], std::move(cls));
        } else {
            it->second.candidates += hit_count[i];
        }
    }

    CensusReport rep;
    rep.q = q;
    rep.size_lo = lo;
    rep.size_hi = hi;
    for (auto& [k, cls] : by_canon) rep.classes.push_back(cls);
    std::sort(rep.classes.begin(), rep.classes.end(), [](const CensusClass& a, const CensusClass& b) {
        if (a.size != b.size) return a.size < b.size;
        if (a.is_redei != b.is_redei) return a.is_redei;
        return a.canonical < b.canonical;
    });
    for (int s = lo; s <= hi; ++s) {
        int total = 0, redei = 0;
        for (const auto& c : rep.classes)
            if (c.size == s) {
                ++total;
                if (c.is_redei) ++redei;
            }
        rep.totals[std::to_string(s)] = total;
        rep.totals[std::to_string(s) + "_redei"] = redei;
        rep.totals[std::to_string(s) + "_nonredei"] = total - redei;
    }
    return rep;
}

namespace {

std::string class_list(const CensusReport& rep)
{
    std::ostringstream os;
    for (const auto& c : rep.classes)
        os << "  size " << c.size << (c.is_redei ? " redei   " : " nonredei") << "  via "
           << c.provenance << "\n";
    return os.str();
}

}  // namespace

CensusReport pg27_report(int threads)
{
    FieldPtr f = make_field(7, 1);
    Plane P(f);
    CensusReport rep = enumerate_index3(f, 12, 14, threads);

    auto fail = [&](const std::string& what) {
        throw internal_error("pg27 census assertion failed: " + what + "\nfound classes:\n" +
                             class_list(rep));
    };

    auto canon_of = [&](const PointSet& s) { return canonical_form(P, s); };
    auto attach = [&](const PointSet& canon, const std::string& label, int want_size,
                      bool want_redei) {
        for (auto& c : rep.classes)
            if (c.canonical == canon) {
                if (c.size != want_size || c.is_redei != want_redei)
                    fail(label + " landed in an unexpected class");
                if (!c.reference.empty()) c.reference += " = ";
                c.reference += label;
                return;
            }
        fail("no census class matches " + label);
    };

    // size 12: one class; the four d=3 coset variants are all isomorphic to it
    if (rep.totals.at("12") != 1) fail("expected exactly 1 class of size 12");
    {
        PointSet c12 = rep.classes.front().canonical;
        for (int g0 : {1, 3})
            for (int g1 : {1, 3}) {
                auto rec = megyesi_cosets(f, 3, MegyesiMode::multiplicative, g0, g1);
                if (canon_of(rec.set) != c12)
                    fail("d=3 coset variant g0=" + std::to_string(g0) + " g1=" + std::to_string(g1) +
                         " is not equivalent to the size-12 class");
            }
        if (canon_of(projective_triangle(f).set) != c12)
            fail("projective triangle does not match the size-12 class");
        attach(c12, "projective triangle (d=3)", 12, true);
    }

    // size 13: exactly one Redei class, equivalent to the triangle profile B={1,6}
    if (rep.totals.at("13_redei") != 1) fail("expected exactly 1 Redei class of size 13");
    attach(canon_of(triangle_blocking_set(triangle_profile_from_b(f, {1, 6})).set),
           "triangle B={1,6}", 13, true);

    // size 14: 8 Redei classes with the published representatives
    if (rep.totals.at("14") != 11) fail("expected 11 classes of size 14");
    if (rep.totals.at("14_redei") != 8) fail("expected 8 Redei classes of size 14");
    if (rep.totals.at("14_nonredei") != 3) fail("expected 3 non-Redei classes of size 14");

    auto triad_canon = [&](std::vector<int> a) {
        return canon_of(triad_blocking_set(triad_profile(f, std::move(a))).set);
    };
    auto tri_b_canon = [&](std::vector<int> b) {
        return canon_of(triangle_blocking_set(triangle_profile_from_b(f, std::move(b))).set);
    };

    PointSet merge_a = triad_canon({0});
    if (merge_a != tri_b_canon({1})) fail("triad A={0} and triangle B={1} must be equivalent");
    attach(merge_a, "triad A={0} = triangle B={1}", 14, true);
    attach(triad_canon({0, 1}), "triad A={0,1}", 14, true);
    attach(triad_canon({0, 1, 5}), "triad A={0,1,5}", 14, true);
    attach(triad_canon({0, 1, 6}), "triad A={0,1,6}", 14, true);
    attach(tri_b_canon({1, 2}), "triangle B={1,2}", 14, true);
    attach(tri_b_canon({1, 3}), "triangle B={1,3}", 14, true);
    attach(tri_b_canon({1, 2, 3}), "triangle B={1,2,3}", 14, true);
    attach(tri_b_canon({1, 2, 5}), "triangle B={1,2,5}", 14, true);

    std::vector<PointSet> redei14;
    for (const auto& c : rep.classes)
        if (c.size == 14 && c.is_redei) redei14.push_back(c.canonical);
    std::vector<PointSet> expect14 = {merge_a,
                                      triad_canon({0, 1}),
                                      triad_canon({0, 1, 5}),
                                      triad_canon({0, 1, 6}),
                                      tri_b_canon({1, 2}),
                                      tri_b_canon({1, 3}),
                                      tri_b_canon({1, 2, 3}),
                                      tri_b_canon({1, 2, 5})};
    std::sort(expect14.begin(), expect14.end());
    if (std::unique(expect14.begin(), expect14.end()) != expect14.end())
        fail("published Redei size-14 representatives are not pairwise inequivalent");
    std::sort(redei14.begin(), redei14.end());
    if (redei14 != expect14) fail("Redei size-14 classes do not match the published list");

    // the three non-Redei size-14 sets
    GroupModel add = additive_model(f);
    GroupModel mult = multiplicative_model(f);
    auto add_triple = [&](ElemSet a, ElemSet b, ElemSet c) {
        ArrowTriple t;
        t.group = add.group;
        t.A = std::move(a);
        t.B = std::move(b);
        t.C = std::move(c);
        return canon_of(concurrent_from_arrow(add, t).set);
    };
    auto mult_triple = [&](std::vector<int> af, std::vector<int> bf, std::vector<int> cf) {
        ArrowTriple t;
        t.group = mult.group;
        for (int x : af) t.A.push_back(mult.to_index[static_cast<std::size_t>(x)]);
        for (int x : bf) t.B.push_back(mult.to_index[static_cast<std::size_t>(x)]);
        for (int x : cf) t.C.push_back(mult.to_index[static_cast<std::size_t>(x)]);
        std::sort(t.A.begin(), t.A.end());
        std::sort(t.B.begin(), t.B.end());
        std::sort(t.C.begin(), t.C.end());
        return canon_of(triangle_from_arrow(mult, t).set);
    };
    std::vector<PointSet> expect_nr = {mult_triple({1, 3}, {1, 3}, {2, 3, 6}),
                                       add_triple({0, 1}, {0, 1}, {1, 2, 3, 4}),
                                       add_triple({0, 1}, {0, 1, 2}, {1, 2, 3})};
    attach(expect_nr[0], "triangle A={1,3} B={1,3} C={2,3,6}", 14, false);
    attach(expect_nr[1], "triad A={0,1} B={0,1} C={1,2,3,4}", 14, false);
    attach(expect_nr[2], "triad A={0,1} B={0,1,2} C={1,2,3}", 14, false);
    std::vector<PointSet> found_nr;
    for (const auto& c : rep.classes)
        if (c.size == 14 && !c.is_redei) found_nr.push_back(c.canonical);
    std::sort(expect_nr.begin(), expect_nr.end());
    std::sort(found_nr.begin(), found_nr.end());
    if (found_nr != expect_nr) fail("non-Redei size-14 classes do not match the published list");

    return rep;
}

}  // namespace blockset
