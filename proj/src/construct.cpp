#include "blockset/construct.hpp"

#include <algorithm>

namespace blockset {

namespace {

std::string codes_str(const std::vector<int>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> code_complement(int q, const std::vector<int>& a, bool exclude_zero)
{
    std::vector<int> out;
    for (int x = exclude_zero ? 1 : 0; x < q; ++x)
        if (!std::binary_search(a.begin(), a.end(), x)) out.push_back(x);
    return out;
}

bool codes_in_range(const Field& F, const std::vector<int>& a, bool nonzero)
{
    for (int x : a)
        if (x < (nonzero ? 1 : 0) || x >= F.q()) return false;
    return true;
}

}  // namespace

std::vector<int> additive_stabilizer(const Field& F, const std::vector<int>& a)
{
    std::vector<int> out;
    for (int m = 0; m < F.q(); ++m) {
        bool stab = true;
        for (int x : a)
            if (!std::binary_search(a.begin(), a.end(), F.add(x, m))) {
                stab = false;
                break;
            }
        if (stab) out.push_back(m);
    }
    return out;
}

std::vector<int> multiplicative_stabilizer(const Field& F, const std::vector<int>& b)
{
    std::vector<int> out;
    for (int m = 1; m < F.q(); ++m) {
        bool stab = true;
        for (int x : b)
            if (!std::binary_search(b.begin(), b.end(), F.mul(m, x))) {
                stab = false;
                break;
            }
        if (stab) out.push_back(m);
    }
    return out;
}

RedeiProfile triad_profile(FieldPtr f, std::vector<int> a)
{
    a = sorted_unique(std::move(a));
    require(!a.empty(), "triad profile: A must be nonempty");
    require(static_cast<int>(a.size()) < f->q(), "triad profile: A must be a proper subset of GF(q)");
    require(codes_in_range(*f, a, false), "triad profile: element out of range");
    return {RedeiProfile::Mode::triad, std::move(f), std::move(a)};
}

RedeiProfile triangle_profile(FieldPtr f, std::vector<int> a)
{
    a = sorted_unique(std::move(a));
    require(!a.empty(), "triangle profile: A must be nonempty");
    require(codes_in_range(*f, a, true), "triangle profile: A must avoid 0");
    require(static_cast<int>(a.size()) <= f->q() - 2,
            "triangle profile: derived B = GF(q)* \\ (-A) must be nonempty");
    return {RedeiProfile::Mode::triangle, std::move(f), std::move(a)};
}

std::vector<int> triangle_b_of(const RedeiProfile& p)
{
    const Field& F = *p.field;
    std::vector<int> neg_a;
    for (int x : p.A) neg_a.push_back(F.neg(x));
    std::sort(neg_a.begin(), neg_a.end());
    return code_complement(F.q(), neg_a, true);
}

RedeiProfile triangle_profile_from_b(FieldPtr f, const std::vector<int>& b)
{
    const Field& F = *f;
    auto bs = sorted_unique(b);
    require(!bs.empty() && codes_in_range(F, bs, true), "triangle profile: invalid B");
    std::vector<int> a;
    for (int x = 1; x < F.q(); ++x)
        if (!std::binary_search(bs.begin(), bs.end(), x)) a.push_back(F.neg(x));
    require(!a.empty(), "triangle profile: B = GF(q)* leaves A empty");
    RedeiProfile p = triangle_profile(std::move(f), std::move(a));
    check_internal(triangle_b_of(p) == bs, "triangle profile B round trip failed");
    return p;
}

RedeiProfile normalize_profile(const RedeiProfile& p)
{
    const Field& F = *p.field;
    std::vector<int> best;
    bool have = false;
    auto consider = [&](std::vector<int> img) {
        std::sort(img.begin(), img.end());
        if (!have || img < best) {
            best = std::move(img);
            have = true;
        }
    };
    if (p.mode == RedeiProfile::Mode::triad) {
        for (int t = 1; t < F.q(); ++t)
            for (int s = 0; s < F.q(); ++s) {
                std::vector<int> img;
                img.reserve(p.A.size());
                for (int x : p.A) img.push_back(F.add(F.mul(t, x), s));
                consider(std::move(img));
            }
    } else {
        int minus1 = F.neg(1);
        for (int t = 1; t < F.q(); ++t) {
            std::vector<int> img;
            img.reserve(p.A.size());
            bool ok = true;
            for (int x : p.A) {
                int y = F.mul(t, x);
                if (y == minus1) {
                    ok = false;
                    break;
                }
                img.push_back(y);
            }
            if (ok) consider(std::move(img));
        }
    }
    check_internal(have, "profile normalization produced no candidate");
    RedeiProfile out = p;
    out.A = std::move(best);
    return out;
}

ConstructionRecord triad_blocking_set(const RedeiProfile& p)
{
    require(p.mode == RedeiProfile::Mode::triad, "triad_blocking_set needs a triad profile");
    const Field& F = *p.field;
    int q = F.q();
    std::vector<int> b = code_complement(q, p.A, false);
    std::vector<int> stab = additive_stabilizer(F, p.A);
    int d = static_cast<int>(stab.size());

    std::vector<Pt> pts;
    for (int a : p.A) pts.push_back(normalize_point(F, 0, a, 1));
    for (int x : b) pts.push_back(normalize_point(F, 1, x, 1));
    pts.push_back({0, 1, 0});
    for (int m = 0; m < q; ++m)
        if (!std::binary_search(stab.begin(), stab.end(), m))
            pts.push_back(normalize_point(F, 1, m, 0));

    ConstructionRecord r;
    r.recipe = "triad_profile";
    r.params = {{"q", std::to_string(q)}, {"A", codes_str(p.A)}};
    r.set = PointSet(p.field, std::move(pts));
    r.predicted_size = 2 * q + 1 - d;
    r.predicted_directions = 1 + q - d;
    check_internal(r.set.size() == r.predicted_size, "triad set size mismatch");
    check_internal(!r.set.contains(Pt{1, 0, 0}), "triad set must avoid (1,0,0)");
    return r;
}

ConstructionRecord triangle_blocking_set(const RedeiProfile& p)
{
    require(p.mode == RedeiProfile::Mode::triangle, "triangle_blocking_set needs a triangle profile");
    const Field& F = *p.field;
    int q = F.q();
    std::vector<int> b = triangle_b_of(p);
    require(!b.empty(), "triangle profile: derived B is empty");
    std::vector<int> stab = multiplicative_stabilizer(F, b);
    int d = static_cast<int>(stab.size());

    std::vector<Pt> pts;
    for (int a : p.A) pts.push_back(normalize_point(F, 0, a, 1));
    for (int x : b) pts.push_back(normalize_point(F, x, 0, 1));
    pts.push_back({0, 0, 1});
    pts.push_back({1, 0, 0});
    pts.push_back({0, 1, 0});
    for (int m = 1; m < q; ++m)
        if (!std::binary_search(stab.begin(), stab.end(), m))
            pts.push_back(normalize_point(F, 1, m, 0));

    ConstructionRecord r;
    r.recipe = "triangle_profile";
    r.params = {{"q", std::to_string(q)}, {"A", codes_str(p.A)}, {"B", codes_str(b)}};
    r.set = PointSet(p.field, std::move(pts));
    r.predicted_size = q + 2 + (q - 1 - d);
    r.predicted_directions = q + 1 - d;
    check_internal(r.set.size() == r.predicted_size, "triangle set size mismatch");
    check_internal(!r.set.contains(Pt{1, 1, 0}), "triangle set must avoid (1,1,0)");
    return r;
}

PointSet affine_part(const PointSet& s)
{
    std::vector<Pt> pts;
    for (const Pt& p : s.pts)
        if (p.z != 0) pts.push_back(p);
    return PointSet(s.field, std::move(pts));
}

PointSet infinite_part(const PointSet& s)
{
    std::vector<Pt> pts;
    for (const Pt& p : s.pts)
        if (p.z == 0) pts.push_back(p);
    return PointSet(s.field, std::move(pts));
}

PointSet determined_directions(const PointSet& affine)
{
    const Field& F = *affine.field;
    for (const Pt& p : affine.pts) require(p.z != 0, "determined_directions: input must be affine");
    std::vector<Pt> dirs;
    for (std::size_t i = 0; i < affine.pts.size(); ++i)
        for (std::size_t j = i + 1; j < affine.pts.size(); ++j) {
            const Pt& a = affine.pts[i];
            const Pt& b = affine.pts[j];
            int ax = F.div(a.x, a.z), ay = F.div(a.y, a.z);
            int bx = F.div(b.x, b.z), by = F.div(b.y, b.z);
            int dx = F.sub(bx, ax), dy = F.sub(by, ay);
            if (dx == 0)
                dirs.push_back({0, 1, 0});
            else
                dirs.push_back({1, F.div(dy, dx), 0});
        }
    return PointSet(affine.field, std::move(dirs));
}

RedeiClassification check_prop33(const Field& F, const std::vector<int>& a)
{
    auto as = sorted_unique(a);
    require(!as.empty() && static_cast<int>(as.size()) < F.q() && codes_in_range(F, as, false),
            "check_prop33: A must be a proper nonempty subset of GF(q)");
    int d = static_cast<int>(additive_stabilizer(F, as).size());
    if (d == 1) return {RedeiCount::q_points, d};
    if (d == 2) {
        check_internal(F.p() == 2, "additive stabilizer of size 2 in odd characteristic");
        return {RedeiCount::q_minus_1, d};
    }
    return {RedeiCount::other, d};
}

RedeiClassification check_prop36(const Field& F, const std::vector<int>& b)
{
    auto bs = sorted_unique(b);
    require(!bs.empty() && static_cast<int>(bs.size()) < F.q() - 1 && codes_in_range(F, bs, true),
            "check_prop36: B must be a proper nonempty subset of GF(q)*");
    int d = static_cast<int>(multiplicative_stabilizer(F, bs).size());
    if (d == 1) return {RedeiCount::q_points, d};
    if (d == 2) {
        check_internal(F.p() != 2, "multiplicative stabilizer of size 2 in even characteristic");
        return {RedeiCount::q_minus_1, d};
    }
    return {RedeiCount::other, d};
}

namespace {

std::vector<int> model_set_to_field(const GroupModel& m, const ElemSet& s)
{
    std::vector<int> out;
    out.reserve(s.size());
    for (int i : s) out.push_back(m.to_field[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ConstructionRecord concurrent_from_arrow(const GroupModel& model, const ArrowTriple& t)
{
    const Field& F = *model.field;
    int q = F.q();
    require(model.group == t.group && t.group.n == q, "triple must live on the additive model");
    require(realizes_arrow(t).status == ArrowStatus::ok,
            "concurrent_from_arrow: triple is not a realization");

    auto af = model_set_to_field(model, t.A);
    auto bf = model_set_to_field(model, t.B);
    auto cf = model_set_to_field(model, t.C);
    std::vector<Pt> pts;
    for (int a : code_complement(q, af, false)) pts.push_back(normalize_point(F, 0, a, 1));
    for (int b : code_complement(q, bf, false)) pts.push_back(normalize_point(F, 1, F.neg(b), 1));
    for (int c : code_complement(q, cf, false)) pts.push_back(normalize_point(F, 1, c, 0));
    pts.push_back({0, 1, 0});

    ConstructionRecord r;
    r.recipe = "concurrent_arrow";
    r.params = {{"q", std::to_string(q)},
                {"A", codes_str(af)},
                {"B", codes_str(bf)},
                {"C", codes_str(cf)}};
    r.set = PointSet(model.field, std::move(pts));
    r.predicted_size = 3 * q + 1 - t.m();
    check_internal(r.set.size() == r.predicted_size, "concurrent arrow set size mismatch");
    return r;
}

ConstructionRecord triangle_from_arrow(const GroupModel& model, const ArrowTriple& t)
{
    const Field& F = *model.field;
    int q = F.q();
    require(model.group == t.group && t.group.n == q - 1,
            "triple must live on the multiplicative model");
    require(realizes_arrow(t).status == ArrowStatus::ok,
            "triangle_from_arrow: triple is not a realization");

    auto af = model_set_to_field(model, t.A);
    auto bf = model_set_to_field(model, t.B);
    auto cf = model_set_to_field(model, t.C);
    std::vector<Pt> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    int m1 = F.neg(1);
    for (int x : code_complement(q, af, true)) pts.push_back(normalize_point(F, m1, x, 0));
    for (int y : code_complement(q, bf, true)) pts.push_back(normalize_point(F, 0, m1, y));
    for (int z : code_complement(q, cf, true)) pts.push_back(normalize_point(F, z, 0, m1));

    ConstructionRecord r;
    r.recipe = "triangle_arrow";
    r.params = {{"q", std::to_string(q)},
                {"A", codes_str(af)},
                {"B", codes_str(bf)},
                {"C", codes_str(cf)}};
    r.set = PointSet(model.field, std::move(pts));
    r.predicted_size = 3 * q - t.m();
    check_internal(r.set.size() == r.predicted_size, "triangle arrow set size mismatch");
    return r;
}

ArrowTriple triad_profile_to_arrow(const RedeiProfile& p, const GroupModel& model)
{
    require(p.mode == RedeiProfile::Mode::triad, "triad converter needs a triad profile");
    const Field& F = *p.field;
    require(model.group.n == F.q() && *model.field == F, "model must be the additive model of the profile field");
    ArrowTriple t;
    t.group = model.group;
    for (int x : code_complement(F.q(), p.A, false)) t.A.push_back(model.to_index[static_cast<std::size_t>(x)]);
    std::vector<int> neg_a;
    for (int x : p.A) neg_a.push_back(F.neg(x));
    std::sort(neg_a.begin(), neg_a.end());
    for (int x : neg_a) t.B.push_back(model.to_index[static_cast<std::size_t>(x)]);
    for (int x : additive_stabilizer(F, p.A)) t.C.push_back(model.to_index[static_cast<std::size_t>(x)]);
    std::sort(t.A.begin(), t.A.end());
    std::sort(t.B.begin(), t.B.end());
    std::sort(t.C.begin(), t.C.end());
    check_internal(realizes_arrow(t).status == ArrowStatus::ok,
                   "triad profile arrow triple is not maximal");
    return t;
}

ArrowTriple triangle_profile_to_arrow(const RedeiProfile& p, const GroupModel& model)
{
    require(p.mode == RedeiProfile::Mode::triangle, "triangle converter needs a triangle profile");
    const Field& F = *p.field;
    require(model.group.n == F.q() - 1 && *model.field == F,
            "model must be the multiplicative model of the profile field");
    std::vector<int> b = triangle_b_of(p);
    std::vector<int> stab = multiplicative_stabilizer(F, b);
    ArrowTriple t;
    t.group = model.group;
    for (int x : stab) t.A.push_back(model.to_index[static_cast<std::size_t>(F.neg(x))]);
    std::vector<int> excl;  // -1/a over a in A
    for (int a : p.A) excl.push_back(F.neg(F.inv(a)));
    std::sort(excl.begin(), excl.end());
    for (int y = 1; y < F.q(); ++y)
        if (!std::binary_search(excl.begin(), excl.end(), y))
            t.B.push_back(model.to_index[static_cast<std::size_t>(y)]);
    for (int a : p.A) t.C.push_back(model.to_index[static_cast<std::size_t>(a)]);
    std::sort(t.A.begin(), t.A.end());
    std::sort(t.B.begin(), t.B.end());
    std::sort(t.C.begin(), t.C.end());
    check_internal(realizes_arrow(t).status == ArrowStatus::ok,
                   "triangle profile arrow triple is not maximal");
    return t;
}

ConstructionRecord vertexless_triangle(FieldPtr f)
{
    const Field& F = *f;
    int q = F.q();
    require(q >= 4, "vertexless_triangle: q >= 4 required");
    std::vector<Pt> pts;
    for (int t = 1; t < q; ++t) pts.push_back({1, t, 0});   // z=0 minus vertices
    for (int c = 1; c < q; ++c) pts.push_back({0, 1, c});   // x=0 minus vertices
    for (int c = 1; c < q; ++c) pts.push_back({1, 0, c});   // y=0 minus vertices
    ConstructionRecord r;
    r.recipe = "vertexless";
    r.params = {{"q", std::to_string(q)}};
    r.set = PointSet(std::move(f), std::move(pts));
    r.predicted_size = 3 * (q - 1);
    check_internal(r.set.size() == r.predicted_size, "vertexless triangle size mismatch");
    return r;
}

ConstructionRecord megyesi_cosets(FieldPtr f, int d, MegyesiMode mode, int g0, int g1)
{
    const Field& F = *f;
    int q = F.q();
    std::vector<Pt> pts;
    std::vector<int> cset;

    if (mode == MegyesiMode::multiplicative) {
        require(d >= 1 && d < q - 1 && (q - 1) % d == 0,
                "megyesi multiplicative: d must be a proper divisor of q-1");
        require(g0 >= 1 && g0 < q && g1 >= 1 && g1 < q,
                "megyesi multiplicative: coset representatives must be nonzero");
        std::vector<int> h;
        for (int i = 0; i < d; ++i) h.push_back(F.exp(i * (q - 1) / d));
        std::sort(h.begin(), h.end());
        std::vector<int> a, b1;
        for (int x : h) {
            a.push_back(F.mul(g0, x));
            b1.push_back(F.mul(g1, x));
            cset.push_back(F.mul(F.div(g0, g1), x));
        }
        std::sort(a.begin(), a.end());
        std::sort(cset.begin(), cset.end());
        for (int x = 0; x < q; ++x)
            if (!std::binary_search(a.begin(), a.end(), x)) pts.push_back(normalize_point(F, 0, x, 1));
        for (int g : b1) pts.push_back(normalize_point(F, F.neg(g), 0, 1));
    } else {
        require(d >= 1 && d < q && q % d == 0, "megyesi additive: d must be a proper divisor of q");
        require(g0 >= 0 && g0 < q && g1 >= 0 && g1 < q, "megyesi additive: representative out of range");
        // codes below d form the F_p-subspace spanned by the first basis elements
        std::vector<int> h;
        for (int i = 0; i < d; ++i) h.push_back(i);
        for (int x : h)
            for (int y : h)
                check_internal(F.add(x, y) < d, "additive code prefix is not a subgroup");
        std::vector<int> a, b1;
        for (int x : h) {
            a.push_back(F.add(g0, x));
            b1.push_back(F.add(g1, x));
            cset.push_back(F.add(F.sub(g0, g1), x));
        }
        std::sort(a.begin(), a.end());
        std::sort(cset.begin(), cset.end());
        for (int x = 0; x < q; ++x)
            if (!std::binary_search(a.begin(), a.end(), x)) pts.push_back(normalize_point(F, 0, x, 1));
        for (int b : b1) pts.push_back(normalize_point(F, 1, b, 1));
    }

    // line at infinity minus the excluded directions
    pts.push_back({0, 1, 0});
    for (int t = 0; t < q; ++t)
        if (!std::binary_search(cset.begin(), cset.end(), t)) pts.push_back(Pt{1, t, 0});

    ConstructionRecord r;
    r.recipe = mode == MegyesiMode::multiplicative ? "megyesi_cosets_mult" : "megyesi_cosets_add";
    r.params = {{"q", std::to_string(q)},
                {"d", std::to_string(d)},
                {"g0", std::to_string(g0)},
                {"g1", std::to_string(g1)}};
    r.set = PointSet(std::move(f), std::move(pts));
    r.predicted_size = 2 * q + 1 - d;
    r.predicted_directions = q + 1 - d;
    check_internal(r.set.size() == r.predicted_size, "megyesi set size mismatch");
    return r;
}

ConstructionRecord megyesi(FieldPtr f, int d, MegyesiMode mode)
{
    int id = mode == MegyesiMode::multiplicative ? 1 : 0;
    ConstructionRecord r = megyesi_cosets(std::move(f), d, mode, id, id);
    r.recipe = mode == MegyesiMode::multiplicative ? "megyesi_mult" : "megyesi_add";
    return r;
}

ConstructionRecord projective_triangle(FieldPtr f)
{
    require(f->q() % 2 == 1, "projective_triangle: q must be odd");
    int d = (f->q() - 1) / 2;
    ConstructionRecord r = megyesi(std::move(f), d, MegyesiMode::multiplicative);
    r.recipe = "projective_triangle";
    return r;
}

ConstructionRecord projective_triad(FieldPtr f)
{
    require(f->q() % 2 == 0, "projective_triad: q must be even");
    int d = f->q() / 2;
    ConstructionRecord r = megyesi(std::move(f), d, MegyesiMode::additive);
    r.recipe = "projective_triad";
    return r;
}

ConstructionRecord example45(FieldPtr f, int t)
{
    const Field& F = *f;
    int q = F.q();
    require(q % 2 == 1 && q > 3, "example45: q must be an odd prime power > 3");
    require(t >= 1 && 2 * t < q - 1, "example45: t must satisfy 1 <= t < (q-1)/2");
    std::vector<int> a;
    for (int i = 1; i <= t; ++i) a.push_back(F.exp(i));
    ConstructionRecord r = triangle_blocking_set(triangle_profile(std::move(f), std::move(a)));
    r.recipe = "example45";
    r.params["t"] = std::to_string(t);
    check_internal(infinite_part(r.set).size() == q, "example45: Redei line must carry q points");
    return r;
}

}  // namespace blockset
