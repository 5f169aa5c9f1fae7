#pragma once

#include <array>
#include <vector>

#include "blockset/common.hpp"
#include "blockset/gf.hpp"

namespace blockset {

// Normalized homogeneous point: leftmost nonzero coordinate is 1.
struct Pt {
    int x = 0, y = 0, z = 0;
    auto operator<=>(const Pt&) const = default;
};

// Normalized dual triple [u,v,w] for the line ux + vy + wz = 0.
struct Ln {
    int u = 0, v = 0, w = 0;
    auto operator<=>(const Ln&) const = default;
};

using Mat3 = std::array<std::array<int, 3>, 3>;

Pt normalize_point(const Field& F, int x, int y, int z);
Ln normalize_line(const Field& F, int u, int v, int w);

// Projectivity (matrix acting on column vectors) with an optional field
// automorphism x -> x^(p^frob) applied before the matrix.
struct Collineation {
    Mat3 m{};
    int frob = 0;
};

enum class EquivGroup { PGL, PGammaL };

// Sorted duplicate-free point set over one field.
struct PointSet {
    FieldPtr field;
    std::vector<Pt> pts;

    PointSet() = default;
    PointSet(FieldPtr f, std::vector<Pt> p);
    int size() const { return static_cast<int>(pts.size()); }
    bool contains(const Pt& p) const;
    bool operator==(const PointSet& o) const { return pts == o.pts; }
    bool operator<(const PointSet& o) const { return pts < o.pts; }
};

// PG(2,q) with points and lines in a fixed sorted order plus full incidence
// tables and per-line bitmasks over the point indices.
class Plane {
public:
    explicit Plane(FieldPtr f);

    const Field& field() const { return *F_; }
    FieldPtr field_ptr() const { return F_; }
    int q() const { return q_; }
    int num_points() const { return npts_; }
    int num_lines() const { return npts_; }

    const Pt& point(int i) const { return pts_[static_cast<std::size_t>(i)]; }
    const Ln& line(int i) const { return lns_[static_cast<std::size_t>(i)]; }
    int point_index(const Pt& p) const;
    int line_index(const Ln& l) const;

    Pt normalize_point(int x, int y, int z) const;
    Ln normalize_line(int u, int v, int w) const;

    int line_through(int p1, int p2) const;  // distinct points
    int meet(int l1, int l2) const;          // distinct lines
    bool incident(int p, int l) const;

    const std::vector<int>& points_on(int l) const { return points_on_[static_cast<std::size_t>(l)]; }
    const std::vector<int>& lines_through(int p) const { return lines_through_[static_cast<std::size_t>(p)]; }
    const Bitset& line_mask(int l) const { return line_mask_[static_cast<std::size_t>(l)]; }

    Bitset to_mask(const PointSet& s) const;
    PointSet from_mask(const Bitset& m) const;

private:
    FieldPtr F_;
    int q_, npts_;
    std::vector<Pt> pts_;
    std::vector<Ln> lns_;
    std::vector<std::vector<int>> points_on_;
    std::vector<std::vector<int>> lines_through_;
    std::vector<Bitset> line_mask_;
};

PointSet all_points(FieldPtr f);
std::vector<Ln> all_lines(FieldPtr f);

Pt apply_point(const Field& F, const Collineation& c, const Pt& p);
Ln apply_line(const Field& F, const Collineation& c, const Ln& l);
PointSet apply(const Collineation& c, const PointSet& s);

Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b);
Mat3 mat_inverse(const Field& F, const Mat3& m);  // throws on singular
int mat_det(const Field& F, const Mat3& m);
Collineation identity_collineation();
bool same_projectivity(const Field& F, const Collineation& a, const Collineation& b);

// Unique projectivity mapping four source points in general position to four
// target points in general position.
Collineation frame_map(const Plane& P, const std::array<Pt, 4>& src, const std::array<Pt, 4>& dst);

// Homology with the given center, axis and ratio t != 0 (t = 1 gives the
// identity): fixes the axis pointwise and the center, multiplies the
// cross-ratio along lines through the center by t.
Collineation homology(const Field& F, const Pt& center, const Ln& axis, int t);

// (x,y,z) -> (-x+z, y, z): fixes (0,1,0) and (1,0,0), stabilizes z=0 and
// interchanges the lines x=0 and x=1.
Collineation lemma_interchange(const Field& F);

// (x,y,z) -> (y,x,z): fixes (0,0,1) and (1,1,0), interchanges x=0 and y=0.
Collineation axis_swap(const Field& F);

// Configuration-stabilizing collineation for the concurrent standard
// configuration {z=0, x=0, x=1} through (0,1,0): maps the ordered affine pair
// ((x=src_line, y=a), (x=src_line, y=b)) to ((x=dst_line, y=c), (x=dst_line,
// y=d)), built as a product of (0,1,0)-centered homologies and, when the
// lines differ, the interchange map. Lines are given as 0 or 1.
Collineation triad_pair_transport(const Field& F, int src_line, int a, int b,
                                  int dst_line, int c, int d);

long pgl_order(int q);

// Lexicographically least image of S over the chosen group, comparing sorted
// coordinate lists. Exact; rejects q > 9.
PointSet canonical_form(const Plane& P, const PointSet& s, EquivGroup g = EquivGroup::PGL);
bool are_equivalent(const Plane& P, const PointSet& a, const PointSet& b,
                    EquivGroup g = EquivGroup::PGL);

}  // namespace blockset
