#include "pcp/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pcp {

using nlohmann::json;

PointSet read_points(std::istream& in) {
    long long n = 0;
    if (!(in >> n)) throw BadInput("point file: missing count header");
    if (n < 0 || n > 1'000'000) throw BadInput("point file: unreasonable count");
    std::vector<std::pair<Coord, Coord>> xy;
    xy.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        Coord x, y;
        if (!(in >> x >> y))
            throw BadInput("point file: expected " + std::to_string(n) + " coordinate pairs");
        xy.emplace_back(x, y);
    }
    return PointSet::from_xy(xy);
}

PointSet read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open point file: " + path);
    return read_points(in);
}

std::string write_points(const PointSet& s) {
    std::ostringstream out;
    out << s.size() << "\n";
    for (const Point& p : s.points()) out << p.x << " " << p.y << "\n";
    return out.str();
}

static std::string kind_str(PartKind k) { return to_string(k); }

static PartKind kind_from(const std::string& k) {
    if (k == "hole") return PartKind::Hole;
    if (k == "pseudo_triangle") return PartKind::PseudoTriangle;
    if (k == "point") return PartKind::DegeneratePoint;
    if (k == "segment") return PartKind::DegenerateSegment;
    throw BadInput("partition json: unknown part kind '" + k + "'");
}

std::string partition_to_json(const PointSet& s, const Partition& p) {
    json j;
    j["n"] = s.size();
    json pts = json::array();
    for (const Point& pt : s.points()) pts.push_back(json::array({pt.x, pt.y}));
    j["points"] = std::move(pts);
    json parts = json::array();
    for (const Part& part : p.parts) {
        json jp;
        jp["kind"] = kind_str(part.kind);
        jp["members"] = part.members;
        jp["polygon"] = part.polygon;
        parts.push_back(std::move(jp));
    }
    j["parts"] = std::move(parts);
    j["branch"] = p.branch;
    return j.dump(2) + "\n";
}

std::pair<PointSet, Partition> partition_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, true, true);
    if (!j.contains("n") || !j.contains("points") || !j.contains("parts"))
        throw BadInput("partition json: missing required keys");
    std::vector<std::pair<Coord, Coord>> xy;
    for (const auto& pt : j["points"]) {
        if (!pt.is_array() || pt.size() != 2) throw BadInput("partition json: malformed point");
        xy.emplace_back(pt[0].get<Coord>(), pt[1].get<Coord>());
    }
    if (j["n"].get<long long>() != static_cast<long long>(xy.size()))
        throw BadInput("partition json: n does not match the point list");
    PointSet s = PointSet::from_xy(xy);
    Partition p;
    p.branch = j.value("branch", std::string{});
    for (const auto& jp : j["parts"]) {
        Part part;
        part.kind = kind_from(jp.at("kind").get<std::string>());
        part.members = jp.at("members").get<std::vector<int>>();
        if (jp.contains("polygon")) part.polygon = jp["polygon"].get<std::vector<int>>();
        for (int id : part.members)
            if (id < 0 || id >= s.size()) throw BadInput("partition json: member id out of range");
        for (int id : part.polygon)
            if (id < 0 || id >= s.size())
                throw BadInput("partition json: polygon id out of range");
        p.parts.push_back(std::move(part));
    }
    return {std::move(s), std::move(p)};
}

std::string digest(const PointSet& s) {
    const std::string text = write_points(s);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace pcp
