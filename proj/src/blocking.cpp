#include "blockset/blocking.hpp"

#include <algorithm>
#include <map>

namespace blockset {

bool is_blocking(const Plane& P, const Bitset& s)
{
    for (int l = 0; l < P.num_lines(); ++l)
        if (!s.intersects(P.line_mask(l))) return false;
    return true;
}

bool is_proper(const Plane& P, const Bitset& s)
{
    if (!is_blocking(P, s)) return false;
    for (int l = 0; l < P.num_lines(); ++l)
        if (P.line_mask(l).subset_of(s)) return false;
    return true;
}

bool is_blocking(const Plane& P, const PointSet& s) { return is_blocking(P, P.to_mask(s)); }
bool is_proper(const Plane& P, const PointSet& s) { return is_proper(P, P.to_mask(s)); }

int tangent_count(const Plane& P, const Bitset& s, int point_index)
{
    int n = 0;
    for (int l : P.lines_through(point_index))
        if (P.line_mask(l).count_and(s) == 1) ++n;
    return n;
}

std::vector<Ln> tangents_at(const Plane& P, const PointSet& s, const Pt& p)
{
    require(s.contains(p), "tangents_at: point is not in the set");
    Bitset m = P.to_mask(s);
    std::vector<Ln> out;
    for (int l : P.lines_through(P.point_index(p)))
        if (P.line_mask(l).count_and(m) == 1) out.push_back(P.line(l));
    return out;
}

bool is_minimal(const Plane& P, const Bitset& s)
{
    if (!is_blocking(P, s)) return false;
    for (int p : s.to_indices())
        if (tangent_count(P, s, p) == 0) return false;
    return true;
}

bool is_minimal(const Plane& P, const PointSet& s) { return is_minimal(P, P.to_mask(s)); }

std::pair<int, bool> cover_index(const Plane& P, const Bitset& s, int max_index)
{
    require(s.any(), "cover_index: empty set");
    require(max_index >= 1 && max_index <= 4, "cover_index: max_index must be in [1,4]");

    std::vector<int> cand;
    for (int l = 0; l < P.num_lines(); ++l)
        if (s.intersects(P.line_mask(l))) cand.push_back(l);
    int nc = static_cast<int>(cand.size());

    auto covered = [&](const Bitset& u) { return s.subset_of(u); };

    for (int i = 0; i < nc; ++i)
        if (covered(P.line_mask(cand[static_cast<std::size_t>(i)]))) return {1, true};
    if (max_index < 2) return {2, false};

    for (int i = 0; i < nc; ++i) {
        Bitset u1 = P.line_mask(cand[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < nc; ++j) {
            Bitset u = u1;
            u |= P.line_mask(cand[static_cast<std::size_t>(j)]);
            if (covered(u)) return {2, true};
        }
    }
    if (max_index < 3) return {3, false};

    for (int i = 0; i < nc; ++i) {
        Bitset u1 = P.line_mask(cand[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < nc; ++j) {
            Bitset u2 = u1;
            u2 |= P.line_mask(cand[static_cast<std::size_t>(j)]);
            for (int k = j + 1; k < nc; ++k) {
                Bitset u = u2;
                u |= P.line_mask(cand[static_cast<std::size_t>(k)]);
                if (covered(u)) return {3, true};
            }
        }
    }
    if (max_index < 4) return {4, false};

    for (int i = 0; i < nc; ++i) {
        Bitset u1 = P.line_mask(cand[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < nc; ++j) {
            Bitset u2 = u1;
            u2 |= P.line_mask(cand[static_cast<std::size_t>(j)]);
            for (int k = j + 1; k < nc; ++k) {
                Bitset u3 = u2;
                u3 |= P.line_mask(cand[static_cast<std::size_t>(k)]);
                for (int t = k + 1; t < nc; ++t) {
                    Bitset u = u3;
                    u |= P.line_mask(cand[static_cast<std::size_t>(t)]);
                    if (covered(u)) return {4, true};
                }
            }
        }
    }
    return {5, false};
}

std::pair<int, bool> cover_index(const Plane& P, const PointSet& s, int max_index)
{
    return cover_index(P, P.to_mask(s), max_index);
}

std::vector<Ln> redei_lines(const Plane& P, const PointSet& s)
{
    Bitset m = P.to_mask(s);
    int best = 0;
    for (int l = 0; l < P.num_lines(); ++l) best = std::max(best, P.line_mask(l).count_and(m));
    std::vector<Ln> out;
    if (s.size() != P.q() + best) return out;
    for (int l = 0; l < P.num_lines(); ++l)
        if (P.line_mask(l).count_and(m) == best) out.push_back(P.line(l));
    return out;
}

std::vector<std::pair<int, int>> intersection_spectrum(const Plane& P, const Bitset& s)
{
    std::map<int, int> acc;
    for (int l = 0; l < P.num_lines(); ++l) ++acc[P.line_mask(l).count_and(s)];
    return {acc.begin(), acc.end()};
}

BlockingReport analyze(const Plane& P, const PointSet& s, int max_index)
{
    BlockingReport r;
    r.size = s.size();
    Bitset m = P.to_mask(s);
    r.is_blocking = is_blocking(P, m);
    r.is_proper = r.is_blocking && is_proper(P, m);
    r.is_minimal = r.is_blocking && is_minimal(P, m);
    r.index_bound = max_index;
    if (m.any()) {
        auto [idx, exact] = cover_index(P, m, max_index);
        r.index = idx;
        r.index_exact = exact;
    }
    r.redei_lines = redei_lines(P, s);
    r.intersection_spectrum = intersection_spectrum(P, m);
    return r;
}

}  // namespace blockset
