#pragma once

#include <utility>
#include <vector>

#include "blockset/plane.hpp"

namespace blockset {

struct BlockingReport {
    bool is_blocking = false;
    bool is_proper = false;
    bool is_minimal = false;
    int index = 0;                 // exact when > 0 and <= index_bound
    int index_bound = 4;           // index > index_bound means ">= bound+1"
    bool index_exact = false;      // false <=> report "index >= index_bound+1"
    std::vector<Ln> redei_lines;   // empty if S is not of Redei type
    int size = 0;
    std::vector<std::pair<int, int>> intersection_spectrum;  // (size, count), ascending
};

bool is_blocking(const Plane& P, const Bitset& s);
bool is_proper(const Plane& P, const Bitset& s);
bool is_blocking(const Plane& P, const PointSet& s);
bool is_proper(const Plane& P, const PointSet& s);

// Lines meeting S exactly in {P}. P must be in S.
std::vector<Ln> tangents_at(const Plane& P, const PointSet& s, const Pt& p);
int tangent_count(const Plane& P, const Bitset& s, int point_index);

bool is_minimal(const Plane& P, const Bitset& s);
bool is_minimal(const Plane& P, const PointSet& s);

// Exact minimum number of lines covering S if it is <= max_index, otherwise
// max_index + 1 with exact=false. Searches single lines, then pairs, then
// triples, then quadruples, over the lines that meet S.
std::pair<int, bool> cover_index(const Plane& P, const Bitset& s, int max_index = 4);
std::pair<int, bool> cover_index(const Plane& P, const PointSet& s, int max_index = 4);

// Lines realizing the maximum intersection with S, provided |S| = q + max;
// empty when S is not of Redei type.
std::vector<Ln> redei_lines(const Plane& P, const PointSet& s);

std::vector<std::pair<int, int>> intersection_spectrum(const Plane& P, const Bitset& s);

BlockingReport analyze(const Plane& P, const PointSet& s, int max_index = 4);

}  // namespace blockset
