#pragma once

#include <map>
#include <optional>
#include <string>

#include "blockset/arrow.hpp"
#include "blockset/blocking.hpp"
#include "blockset/plane.hpp"

namespace blockset {

// Affine parameter set of a standard Redei configuration. For triads (three
// concurrent lines) A is any nonempty proper subset of GF(q) and the second
// line carries the complement. For triangles A is a nonempty subset of
// GF(q)* whose derived set B = GF(q)* \ (-A) is nonempty.
struct RedeiProfile {
    enum class Mode { triad, triangle };
    Mode mode = Mode::triad;
    FieldPtr field;
    std::vector<int> A;  // sorted field codes
};

struct ConstructionRecord {
    std::string recipe;
    std::map<std::string, std::string> params;
    PointSet set;
    int predicted_size = 0;
    std::optional<int> predicted_directions;
};

// {m : A + m = A}, an additive subgroup of GF(q).
std::vector<int> additive_stabilizer(const Field& F, const std::vector<int>& a);
// {m in GF(q)* : mB = B}, a multiplicative subgroup.
std::vector<int> multiplicative_stabilizer(const Field& F, const std::vector<int>& b);

RedeiProfile triad_profile(FieldPtr f, std::vector<int> a);
RedeiProfile triangle_profile(FieldPtr f, std::vector<int> a);
// Triangle profile given the derived set B instead: A = -(GF(q)* \ B).
RedeiProfile triangle_profile_from_b(FieldPtr f, const std::vector<int>& b);
std::vector<int> triangle_b_of(const RedeiProfile& p);  // B = GF(q)* \ (-A)

// Lexicographically least affinely equivalent profile. Triads minimize over
// y -> ty + s (so 0 is in A and, when |A| >= 2, so is 1); triangles minimize
// over scalings y -> ty with -1 excluded from the image.
RedeiProfile normalize_profile(const RedeiProfile& p);

ConstructionRecord triad_blocking_set(const RedeiProfile& p);
ConstructionRecord triangle_blocking_set(const RedeiProfile& p);

// All points on z=0 lying on a line through two points of the input.
// Every input point must be affine (z != 0).
PointSet determined_directions(const PointSet& affine);

enum class RedeiCount { q_points, q_minus_1, other };
struct RedeiClassification {
    RedeiCount kind = RedeiCount::other;
    int stabilizer_size = 0;
};

// Classification of the Redei line point count by stabilizer size:
// d = 1 gives q points, d = 2 gives q-1 (additive only in even
// characteristic, multiplicative only in odd), anything else q+1-d.
RedeiClassification check_prop33(const Field& F, const std::vector<int>& a);
RedeiClassification check_prop36(const Field& F, const std::vector<int>& b);

// Concurrent-configuration blocking set from a maximal triple on the
// additive model: complements go on x=0, x=1 (negated) and z=0, plus the
// point of concurrency (0,1,0). |S| = 3q + 1 - m.
ConstructionRecord concurrent_from_arrow(const GroupModel& model, const ArrowTriple& t);

// Triangle-configuration blocking set from a maximal triple on the
// multiplicative model: vertices plus {(-1,x,0): x not in A} and the two
// analogous sides. |S| = 3q - m.
ConstructionRecord triangle_from_arrow(const GroupModel& model, const ArrowTriple& t);

// The maximal additive triple (GF(q)\A, -A, Stab+(A)) whose concurrent
// construction reproduces the triad profile's point set.
ArrowTriple triad_profile_to_arrow(const RedeiProfile& p, const GroupModel& model);
// The maximal multiplicative triple (-Stab, GF* \ (-1/A), A) reproducing the
// triangle profile's point set.
ArrowTriple triangle_profile_to_arrow(const RedeiProfile& p, const GroupModel& model);

// The three sides of the coordinate triangle minus the three vertices;
// |S| = 3(q-1), blocking of index 3. Requires q >= 4.
ConstructionRecord vertexless_triangle(FieldPtr f);

enum class MegyesiMode { additive, multiplicative };

// Coset construction: H the subgroup of order d (multiplicative: d | q-1,
// d < q-1; additive: d | q, d < q, H = codes below d), A = g0 H, B1 = g1 H,
// excluded directions C = (g0/g1) H resp. (g0 - g1) + H. The blocking set
// U union (line at infinity minus C-points) has size 2q + 1 - d and U
// determines exactly q + 1 - d directions.
ConstructionRecord megyesi_cosets(FieldPtr f, int d, MegyesiMode mode, int g0, int g1);
ConstructionRecord megyesi(FieldPtr f, int d, MegyesiMode mode);

ConstructionRecord projective_triangle(FieldPtr f);  // q odd, d = (q-1)/2
ConstructionRecord projective_triad(FieldPtr f);     // q even, d = q/2

// Triangle profile A = {alpha^i : 1 <= i <= t} for the primitive alpha;
// q odd, q > 3, 1 <= t < (q-1)/2. The Redei line carries q points.
ConstructionRecord example45(FieldPtr f, int t);

PointSet affine_part(const PointSet& s);
PointSet infinite_part(const PointSet& s);

}  // namespace blockset
