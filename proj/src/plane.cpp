#include "blockset/plane.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace blockset {

PointSet::PointSet(FieldPtr f, std::vector<Pt> p) : field(std::move(f)), pts(std::move(p))
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

bool PointSet::contains(const Pt& p) const
{
    return std::binary_search(pts.begin(), pts.end(), p);
}

Pt normalize_point(const Field& F, int x, int y, int z)
{
    require(x || y || z, "point (0,0,0) is not projective");
    if (x) {
        int s = F.inv(x);
        return {1, F.mul(y, s), F.mul(z, s)};
    }
    if (y) {
        int s = F.inv(y);
        return {0, 1, F.mul(z, s)};
    }
    return {0, 0, 1};
}

Ln normalize_line(const Field& F, int u, int v, int w)
{
    require(u || v || w, "line [0,0,0] is not projective");
    if (u) {
        int s = F.inv(u);
        return {1, F.mul(v, s), F.mul(w, s)};
    }
    if (v) {
        int s = F.inv(v);
        return {0, 1, F.mul(w, s)};
    }
    return {0, 0, 1};
}

Pt Plane::normalize_point(int x, int y, int z) const
{
    return blockset::normalize_point(*F_, x, y, z);
}

Ln Plane::normalize_line(int u, int v, int w) const
{
    return blockset::normalize_line(*F_, u, v, w);
}

int Plane::point_index(const Pt& p) const
{
    if (p.x == 0) return p.y == 0 ? 0 : 1 + p.z;
    return 1 + q_ + p.y * q_ + p.z;
}

int Plane::line_index(const Ln& l) const
{
    if (l.u == 0) return l.v == 0 ? 0 : 1 + l.w;
    return 1 + q_ + l.v * q_ + l.w;
}

Plane::Plane(FieldPtr f) : F_(std::move(f))
{
    q_ = F_->q();
    require(q_ <= 128, "plane operations support q <= 128");
    npts_ = q_ * q_ + q_ + 1;

    pts_.reserve(static_cast<std::size_t>(npts_));
    pts_.push_back({0, 0, 1});
    for (int c = 0; c < q_; ++c) pts_.push_back({0, 1, c});
    for (int b = 0; b < q_; ++b)
        for (int c = 0; c < q_; ++c) pts_.push_back({1, b, c});

    lns_.reserve(static_cast<std::size_t>(npts_));
    lns_.push_back({0, 0, 1});
    for (int w = 0; w < q_; ++w) lns_.push_back({0, 1, w});
    for (int v = 0; v < q_; ++v)
        for (int w = 0; w < q_; ++w) lns_.push_back({1, v, w});

    const Field& F = *F_;
    points_on_.assign(static_cast<std::size_t>(npts_), {});
    lines_through_.assign(static_cast<std::size_t>(npts_), {});
    line_mask_.assign(static_cast<std::size_t>(npts_), Bitset(npts_));
    for (int li = 0; li < npts_; ++li) {
        const Ln& l = lns_[static_cast<std::size_t>(li)];
        // two independent solutions of ux + vy + wz = 0
        std::array<int, 3> P1{}, P2{};
        if (l.u) {
            P1 = {F.neg(l.v), 1, 0};
            P2 = {F.neg(l.w), 0, 1};
        } else if (l.v) {
            P1 = {1, 0, 0};
            P2 = {0, F.neg(l.w), 1};
        } else {
            P1 = {1, 0, 0};
            P2 = {0, 1, 0};
        }
        auto push = [&](int x, int y, int z) {
            int pi = point_index(normalize_point(x, y, z));
            points_on_[static_cast<std::size_t>(li)].push_back(pi);
            lines_through_[static_cast<std::size_t>(pi)].push_back(li);
            line_mask_[static_cast<std::size_t>(li)].set(pi);
        };
        push(P2[0], P2[1], P2[2]);
        for (int t = 0; t < q_; ++t)
            push(F.add(P1[0], F.mul(t, P2[0])), F.add(P1[1], F.mul(t, P2[1])),
                 F.add(P1[2], F.mul(t, P2[2])));
        auto& v = points_on_[static_cast<std::size_t>(li)];
        std::sort(v.begin(), v.end());
    }
    for (auto& v : lines_through_) std::sort(v.begin(), v.end());
}

int Plane::line_through(int p1, int p2) const
{
    require(p1 != p2, "line_through needs two distinct points");
    const Field& F = *F_;
    const Pt& a = pts_[static_cast<std::size_t>(p1)];
    const Pt& b = pts_[static_cast<std::size_t>(p2)];
    int u = F.sub(F.mul(a.y, b.z), F.mul(a.z, b.y));
    int v = F.sub(F.mul(a.z, b.x), F.mul(a.x, b.z));
    int w = F.sub(F.mul(a.x, b.y), F.mul(a.y, b.x));
    return line_index(normalize_line(u, v, w));
}

int Plane::meet(int l1, int l2) const
{
    require(l1 != l2, "meet needs two distinct lines");
    const Field& F = *F_;
    const Ln& a = lns_[static_cast<std::size_t>(l1)];
    const Ln& b = lns_[static_cast<std::size_t>(l2)];
    int x = F.sub(F.mul(a.v, b.w), F.mul(a.w, b.v));
    int y = F.sub(F.mul(a.w, b.u), F.mul(a.u, b.w));
    int z = F.sub(F.mul(a.u, b.v), F.mul(a.v, b.u));
    return point_index(normalize_point(x, y, z));
}

bool Plane::incident(int p, int l) const
{
    return line_mask_[static_cast<std::size_t>(l)].test(p);
}

Bitset Plane::to_mask(const PointSet& s) const
{
    require(*s.field == *F_, "point set belongs to a different field");
    Bitset m(npts_);
    for (const Pt& p : s.pts) m.set(point_index(p));
    return m;
}

PointSet Plane::from_mask(const Bitset& m) const
{
    std::vector<Pt> out;
    for (int i : m.to_indices()) out.push_back(pts_[static_cast<std::size_t>(i)]);
    return PointSet(F_, std::move(out));
}

PointSet all_points(FieldPtr f)
{
    Plane P(f);
    std::vector<Pt> v;
    v.reserve(static_cast<std::size_t>(P.num_points()));
    for (int i = 0; i < P.num_points(); ++i) v.push_back(P.point(i));
    return PointSet(std::move(f), std::move(v));
}

std::vector<Ln> all_lines(FieldPtr f)
{
    Plane P(std::move(f));
    std::vector<Ln> v;
    v.reserve(static_cast<std::size_t>(P.num_lines()));
    for (int i = 0; i < P.num_lines(); ++i) v.push_back(P.line(i));
    return v;
}

int mat_det(const Field& F, const Mat3& m)
{
    int d = 0;
    d = F.add(d, F.mul(m[0][0], F.sub(F.mul(m[1][1], m[2][2]), F.mul(m[1][2], m[2][1]))));
    d = F.sub(d, F.mul(m[0][1], F.sub(F.mul(m[1][0], m[2][2]), F.mul(m[1][2], m[2][0]))));
    d = F.add(d, F.mul(m[0][2], F.sub(F.mul(m[1][0], m[2][1]), F.mul(m[1][1], m[2][0]))));
    return d;
}

Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b)
{
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int s = 0;
            for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(a[i][k], b[k][j]));
            r[i][j] = s;
        }
    return r;
}

Mat3 mat_inverse(const Field& F, const Mat3& m)
{
    int det = mat_det(F, m);
    require(det != 0, "matrix is singular");
    int di = F.inv(det);
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int a = m[(j + 1) % 3][(i + 1) % 3], b = m[(j + 2) % 3][(i + 2) % 3];
            int c = m[(j + 1) % 3][(i + 2) % 3], d = m[(j + 2) % 3][(i + 1) % 3];
            r[i][j] = F.mul(di, F.sub(F.mul(a, b), F.mul(c, d)));
        }
    return r;
}

Collineation identity_collineation()
{
    Collineation c;
    c.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    return c;
}

bool same_projectivity(const Field& F, const Collineation& a, const Collineation& b)
{
    if (a.frob != b.frob) return false;
    int s = 0;
    for (int i = 0; i < 3 && !s; ++i)
        for (int j = 0; j < 3 && !s; ++j)
            if (b.m[i][j]) s = F.div(a.m[i][j], b.m[i][j]);
    if (!s) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a.m[i][j] != F.mul(s, b.m[i][j])) return false;
    return true;
}

Pt apply_point(const Field& F, const Collineation& c, const Pt& p)
{
    int x = p.x, y = p.y, z = p.z;
    for (int e = 0; e < c.frob; ++e) {
        x = F.frobenius(x);
        y = F.frobenius(y);
        z = F.frobenius(z);
    }
    int nx = F.add(F.add(F.mul(c.m[0][0], x), F.mul(c.m[0][1], y)), F.mul(c.m[0][2], z));
    int ny = F.add(F.add(F.mul(c.m[1][0], x), F.mul(c.m[1][1], y)), F.mul(c.m[1][2], z));
    int nz = F.add(F.add(F.mul(c.m[2][0], x), F.mul(c.m[2][1], y)), F.mul(c.m[2][2], z));
    require(nx || ny || nz, "collineation matrix is singular");
    if (nx) {
        int s = F.inv(nx);
        return {1, F.mul(ny, s), F.mul(nz, s)};
    }
    if (ny) {
        int s = F.inv(ny);
        return {0, 1, F.mul(nz, s)};
    }
    return {0, 0, 1};
}

Ln apply_line(const Field& F, const Collineation& c, const Ln& l)
{
    // Duals transform by the inverse transpose.
    Mat3 mi = mat_inverse(F, c.m);
    int u = l.u, v = l.v, w = l.w;
    for (int e = 0; e < c.frob; ++e) {
        u = F.frobenius(u);
        v = F.frobenius(v);
        w = F.frobenius(w);
    }
    int nu = F.add(F.add(F.mul(mi[0][0], u), F.mul(mi[1][0], v)), F.mul(mi[2][0], w));
    int nv = F.add(F.add(F.mul(mi[0][1], u), F.mul(mi[1][1], v)), F.mul(mi[2][1], w));
    int nw = F.add(F.add(F.mul(mi[0][2], u), F.mul(mi[1][2], v)), F.mul(mi[2][2], w));
    if (nu) {
        int s = F.inv(nu);
        return {1, F.mul(nv, s), F.mul(nw, s)};
    }
    if (nv) {
        int s = F.inv(nv);
        return {0, 1, F.mul(nw, s)};
    }
    return {0, 0, 1};
}

PointSet apply(const Collineation& c, const PointSet& s)
{
    std::vector<Pt> out;
    out.reserve(s.pts.size());
    for (const Pt& p : s.pts) out.push_back(apply_point(*s.field, c, p));
    return PointSet(s.field, std::move(out));
}

namespace {

bool collinear(const Field& F, const Pt& a, const Pt& b, const Pt& c)
{
    int d = 0;
    d = F.add(d, F.mul(a.x, F.sub(F.mul(b.y, c.z), F.mul(b.z, c.y))));
    d = F.sub(d, F.mul(a.y, F.sub(F.mul(b.x, c.z), F.mul(b.z, c.x))));
    d = F.add(d, F.mul(a.z, F.sub(F.mul(b.x, c.y), F.mul(b.y, c.x))));
    return d == 0;
}

// Matrix sending the standard frame e1, e2, e3, (1,1,1) to the given frame.
Mat3 frame_matrix(const Field& F, const std::array<Pt, 4>& f)
{
    Mat3 cols{};
    for (int j = 0; j < 3; ++j) {
        cols[0][j] = f[static_cast<std::size_t>(j)].x;
        cols[1][j] = f[static_cast<std::size_t>(j)].y;
        cols[2][j] = f[static_cast<std::size_t>(j)].z;
    }
    Mat3 inv = mat_inverse(F, cols);
    int lx = F.add(F.add(F.mul(inv[0][0], f[3].x), F.mul(inv[0][1], f[3].y)), F.mul(inv[0][2], f[3].z));
    int ly = F.add(F.add(F.mul(inv[1][0], f[3].x), F.mul(inv[1][1], f[3].y)), F.mul(inv[1][2], f[3].z));
    int lz = F.add(F.add(F.mul(inv[2][0], f[3].x), F.mul(inv[2][1], f[3].y)), F.mul(inv[2][2], f[3].z));
    require(lx && ly && lz, "frame points are not in general position");
    Mat3 r{};
    for (int i = 0; i < 3; ++i) {
        r[i][0] = F.mul(cols[i][0], lx);
        r[i][1] = F.mul(cols[i][1], ly);
        r[i][2] = F.mul(cols[i][2], lz);
    }
    return r;
}

}  // namespace

Collineation frame_map(const Plane& P, const std::array<Pt, 4>& src, const std::array<Pt, 4>& dst)
{
    const Field& F = P.field();
    for (const auto& f : {src, dst})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    require(!collinear(F, f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)],
                                       f[static_cast<std::size_t>(k)]),
                            "frame points are not in general position");
    Collineation c;
    c.m = mat_mul(F, frame_matrix(F, dst), mat_inverse(F, frame_matrix(F, src)));
    return c;
}

Collineation homology(const Field& F, const Pt& center, const Ln& axis, int t)
{
    require(t != 0, "homology ratio must be nonzero");
    int lc = F.add(F.add(F.mul(axis.u, center.x), F.mul(axis.v, center.y)), F.mul(axis.w, center.z));
    require(lc != 0, "homology center must not lie on the axis");
    // M = (t-1) * C * axis^T + (axis . C) * I
    int tm1 = F.sub(t, 1);
    int cx[3] = {center.x, center.y, center.z};
    int ax[3] = {axis.u, axis.v, axis.w};
    Collineation c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int v = F.mul(tm1, F.mul(cx[i], ax[j]));
            if (i == j) v = F.add(v, lc);
            c.m[i][j] = v;
        }
    return c;
}

Collineation lemma_interchange(const Field& F)
{
    Collineation c;
    c.m = {{{F.neg(1), 0, 1}, {0, 1, 0}, {0, 0, 1}}};
    return c;
}

Collineation axis_swap(const Field&)
{
    Collineation c;
    c.m = {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
    return c;
}

Collineation triad_pair_transport(const Field& F, int src_line, int a, int b,
                                  int dst_line, int c, int d)
{
    require(src_line == 0 || src_line == 1, "source line must be x=0 or x=1");
    require(dst_line == 0 || dst_line == 1, "target line must be x=0 or x=1");
    require(a != b && c != d, "transport needs ordered pairs of distinct points");
    require(F.q() >= 3, "transport needs q >= 3");

    Collineation g = identity_collineation();
    if (src_line != dst_line) g = lemma_interchange(F);

    // axis y = n avoiding a and c, so the first homology can send a to c
    int n = 0;
    while (n == a || n == c) ++n;
    Pt center{0, 1, 0};
    Collineation k = homology(F, center, {0, 1, F.neg(n)}, F.div(F.sub(c, n), F.sub(a, n)));
    int b1 = F.add(n, F.mul(F.div(F.sub(c, n), F.sub(a, n)), F.sub(b, n)));
    Collineation h = homology(F, center, {0, 1, F.neg(c)}, F.div(F.sub(d, c), F.sub(b1, c)));

    Collineation out;
    out.m = mat_mul(F, h.m, mat_mul(F, k.m, g.m));
    return out;
}

long pgl_order(int q)
{
    long q3 = static_cast<long>(q) * q * q;
    return (q3 - 1) * (q3 - q) / (q - 1) * (q3 - static_cast<long>(q) * q);
}

namespace {

// Canonicalization context for one plane and one equivalence group: the
// point permutations of the stabilizer of the ordered pair
// ((0,0,1), (0,1,0)), plus the Frobenius point permutation.
struct CanonCtx {
    std::vector<std::vector<std::uint16_t>> stab_perms;
    std::vector<std::uint16_t> frob_perm;
};

const CanonCtx& canon_ctx(const Plane& P)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, CanonCtx> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(P.field().p(), P.field().k());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const Field& F = P.field();
    int q = P.q(), n = P.num_points();
    CanonCtx ctx;
    ctx.stab_perms.reserve(static_cast<std::size_t>((q - 1) * (q - 1) * q * q));
    // Matrices fixing (0,0,1) and (0,1,0) projectively: [[a,0,0],[b,e,0],[c,0,1]].
    for (int a = 1; a < q; ++a)
        for (int e = 1; e < q; ++e)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    Collineation col;
                    col.m = {{{a, 0, 0}, {b, e, 0}, {c, 0, 1}}};
                    std::vector<std::uint16_t> perm(static_cast<std::size_t>(n));
                    for (int i = 0; i < n; ++i)
                        perm[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
                            P.point_index(apply_point(F, col, P.point(i))));
                    ctx.stab_perms.push_back(std::move(perm));
                }
    ctx.frob_perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Pt& p = P.point(i);
        ctx.frob_perm[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(P.point_index(
            P.normalize_point(F.frobenius(p.x), F.frobenius(p.y), F.frobenius(p.z))));
    }
    return cache.emplace(key, std::move(ctx)).first->second;
}

// Minimum image over PGL of the point-index list `idx`, as a mask. Assumes
// |idx| >= 2. Every optimal image contains the two smallest plane points, so
// it is enough to sweep pair-stabilizer cosets.
Bitset pgl_min_mask(const Plane& P, const CanonCtx& ctx, const std::vector<int>& idx)
{
    const Field& F = P.field();
    int n = P.num_points();
    Bitset best(n);
    bool have = false;
    std::vector<int> base(idx.size());
    for (std::size_t si = 0; si < idx.size(); ++si)
        for (std::size_t sj = 0; sj < idx.size(); ++sj) {
            if (si == sj) continue;
            const Pt s = P.point(idx[si]);
            const Pt sp = P.point(idx[sj]);
            // N columns: [x | s' | s] with x off the line through s, s'
            int ln = P.line_through(P.point_index(s), P.point_index(sp));
            int xi = 0;
            while (P.incident(xi, ln)) ++xi;
            const Pt x = P.point(xi);
            Mat3 N = {{{x.x, sp.x, s.x}, {x.y, sp.y, s.y}, {x.z, sp.z, s.z}}};
            Collineation b0;
            b0.m = mat_inverse(F, N);
            for (std::size_t t = 0; t < idx.size(); ++t)
                base[t] = P.point_index(apply_point(F, b0, P.point(idx[t])));
            for (const auto& perm : ctx.stab_perms) {
                Bitset cand(n);
                for (int bi : base) cand.set(perm[static_cast<std::size_t>(bi)]);
                if (!have || cand.set_less(best)) {
                    best = cand;
                    have = true;
                }
            }
        }
    return best;
}

}  // namespace

PointSet canonical_form(const Plane& P, const PointSet& s, EquivGroup g)
{
    require(P.q() <= 9, "canonical_form: group too large for exhaustive sweep (q <= 9)");
    require(*s.field == P.field(), "point set belongs to a different field");
    if (s.pts.empty()) return s;
    if (s.pts.size() == 1) return PointSet(s.field, {Pt{0, 0, 1}});

    const CanonCtx& ctx = canon_ctx(P);
    std::vector<int> idx;
    idx.reserve(s.pts.size());
    for (const Pt& p : s.pts) idx.push_back(P.point_index(p));

    Bitset best = pgl_min_mask(P, ctx, idx);
    if (g == EquivGroup::PGammaL) {
        for (int e = 1; e < P.field().k(); ++e) {
            for (int& i : idx) i = ctx.frob_perm[static_cast<std::size_t>(i)];
            Bitset cand = pgl_min_mask(P, ctx, idx);
            if (cand.set_less(best)) best = cand;
        }
    }
    return P.from_mask(best);
}

bool are_equivalent(const Plane& P, const PointSet& a, const PointSet& b, EquivGroup g)
{
    require(*a.field == *b.field, "point sets belong to different fields");
    if (a.pts.size() != b.pts.size()) return false;
    return canonical_form(P, a, g) == canonical_form(P, b, g);
}

}  // namespace blockset
