#pragma once

#include <iosfwd>
#include <string>

#include "pcp/geometry.hpp"
#include "pcp/part.hpp"

namespace pcp {

/// Point file: first line `n`, then `n` lines `x y` (signed decimal
/// integers). Throws BadInput on malformed input or general-position
/// violations (with the offending pair/triple).
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);
std::string write_points(const PointSet& s);

/// Partition JSON:
/// {"n": int, "points": [[x,y],...],
///  "parts": [{"kind": "hole"|"pseudo_triangle"|"point"|"segment",
///             "members": [ids], "polygon": [ids]}],
///  "branch": string}
std::string partition_to_json(const PointSet& s, const Partition& p);
std::pair<PointSet, Partition> partition_from_json(const std::string& text);

/// Stable 64-bit FNV-1a digest of the canonical point-set text.
std::string digest(const PointSet& s);

}  // namespace pcp
