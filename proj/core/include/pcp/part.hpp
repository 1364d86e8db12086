#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcp/geometry.hpp"

namespace pcp {

enum class PartKind { Hole, PseudoTriangle, DegeneratePoint, DegenerateSegment };

std::string to_string(PartKind k);

/// One block of a partition: a hole (empty convex polygon), an empty
/// pseudo-triangle, or a degenerate 1- or 2-point block. Nondegenerate
/// parts carry their polygon as a cyclic vertex-id sequence.
struct Part {
    PartKind kind = PartKind::Hole;
    std::vector<int> members;  // sorted ascending
    std::vector<int> polygon;  // cyclic order; empty for degenerate kinds

    static Part hole(std::vector<int> polygon_ccw);
    static Part pseudo_triangle(std::vector<int> polygon);
    static Part degenerate(std::vector<int> members);
};

/// Canonical form: members sorted; polygon rotated to start at the
/// smallest member and oriented counter-clockwise.
void canonicalize(const PointSet& s, Part& part);

struct Partition {
    std::vector<Part> parts;
    std::string branch;  // which construction produced it
};

struct ClassifyVerdict {
    bool ok = false;
    std::string reason;
    int witness = -1;  // offending point id, when one exists
};

/// Checks a part against its definition: Hole = convex CCW polygon on
/// exactly the member set, interior empty in S; PseudoTriangle = simple
/// polygon, exactly three convex vertices, interior empty in S;
/// degenerate kinds = cardinality only. Throws MalformedPart when a
/// nondegenerate part has no polygon.
ClassifyVerdict classify_part(const PointSet& s, const Part& part);

struct DisjointVerdict {
    bool ok = false;
    std::string reason;
    int witness = -1;
};

/// Vertex sets disjoint, no vertex of one inside the closed region of
/// the other, and boundaries free of proper crossings. Symmetric.
DisjointVerdict parts_disjoint(const PointSet& s, const Part& a, const Part& b);

struct VerificationReport {
    struct PartRow {
        int index;
        bool ok;
        std::string reason;
        int witness;
    };
    struct PairRow {
        int i, j;
        bool ok;
        std::string reason;
        int witness;
    };
    bool coverage_ok = false;
    std::string coverage_reason;
    std::vector<PartRow> per_part;
    std::vector<PairRow> per_pair;
    bool overall = false;
};

VerificationReport verify_partition(const PointSet& s, const Partition& p);

/// Finds a polygonization of `members` as a Part: a Hole when the
/// members are in convex position and empty in S, otherwise the
/// lexicographically least simple polygon with exactly three convex
/// vertices and an empty interior, or nullopt when none exists. Throws
/// SearchLimitExceeded when |members| exceeds `limit` and the members
/// are not in convex position.
std::optional<Part> find_pseudo_polygonization(const PointSet& s, std::vector<int> members,
                                               int limit = 9);

// Polygon helpers shared by the classifiers and the search machinery.
I128 polygon_area2(const PointSet& s, const std::vector<int>& poly);
bool polygon_is_simple(const PointSet& s, const std::vector<int>& poly);
int convex_vertex_count(const PointSet& s, const std::vector<int>& poly);
bool point_strictly_inside_polygon(const PointSet& s, const std::vector<int>& poly,
                                   const Point& x);
bool point_on_polygon_boundary(const PointSet& s, const std::vector<int>& poly, const Point& x);
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace pcp
