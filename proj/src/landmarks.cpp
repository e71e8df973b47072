#include "graphiq/landmarks.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace graphiq {

namespace {

double parse_coordinate(const std::string& field, std::size_t row) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw ParseError("row " + std::to_string(row) + ": non-numeric coordinate '" + field + "'");
    return value;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

std::vector<PointCloud> load_landmarks(const std::filesystem::path& path,
                                       std::optional<std::size_t> limit) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open landmark file: " + path.string());
    std::vector<PointCloud> faces;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (limit && faces.size() >= *limit) break;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            ++row;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 1 + 2 * kFacePointCount)
            throw ParseError("row " + std::to_string(row) + ": expected " +
                             std::to_string(2 * kFacePointCount) + " coordinates, got " +
                             std::to_string(fields.size() - 1));
        PointCloud face;
        try {
            face.label = label_from_string(fields[0]);
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(row) + ": " + e.what());
        }
        face.points.reserve(kFacePointCount);
        for (int k = 0; k < kFacePointCount; ++k)
            face.points.push_back({parse_coordinate(fields[1 + 2 * k], row),
                                   parse_coordinate(fields[2 + 2 * k], row)});
        faces.push_back(std::move(face));
        ++row;
    }
    return faces;
}

void save_landmarks(const std::filesystem::path& path, const std::vector<PointCloud>& faces) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write landmark file: " + path.string());
    char buf[64];
    for (const auto& face : faces) {
        if (face.points.size() != kFacePointCount)
            throw ContractError("save_landmarks: face must have 68 points");
        out << to_string(face.label);
        for (const auto& p : face.points) {
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g", p.x, p.y);
            out << buf;
        }
        out << '\n';
    }
}

PointCloud extract_mouth(const PointCloud& face) {
    if (face.points.size() != kFacePointCount)
        throw ContractError("extract_mouth: expected a 68-point face, got " +
                            std::to_string(face.points.size()) + " points");
    PointCloud mouth;
    mouth.label = face.label;
    mouth.points.assign(face.points.begin() + kMouthBegin,
                        face.points.begin() + kMouthBegin + kMouthPointCount);
    return mouth;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fixed generator geometry (pixels, image coordinates, y grows downward).
constexpr double kFaceCx = 100.0, kFaceCy = 100.0;
constexpr double kMouthCy = 138.0;
constexpr double kOuterUpperHeight = 10.0;
constexpr double kOuterLowerHeight = 9.0;
constexpr double kCornerLift = 14.0;  // exceeds the lower-lip depth plus the
                                      // bend so the corner/lower-lip order
                                      // flips with kind
constexpr double kInnerHalfWidth = 18.0;
constexpr double kInnerUpperHeight = 5.0;
constexpr double kInnerLowerHeight = 4.5;
constexpr double kSmileBend = 16.0;  // parabolic bend of the whole lip line

void place_mouth(std::vector<Point>& pts, Label kind) {
    const double cx = kFaceCx, cy = kMouthCy;
    // image coordinates: a raised corner has a smaller y
    const double sign = (kind == Label::happy) ? -1.0 : 1.0;
    const double corner_dy = sign * kCornerLift;
    pts[48] = {cx - kMouthHalfWidth, cy + corner_dy};
    pts[54] = {cx + kMouthHalfWidth, cy + corner_dy};
    for (int k = 0; k < 5; ++k) {  // 49..53 upper outer lip, left to right
        const double t = kPi * (150.0 - 30.0 * k) / 180.0;
        pts[49 + k] = {cx + kMouthHalfWidth * std::cos(t), cy - kOuterUpperHeight * std::sin(t)};
    }
    for (int k = 0; k < 5; ++k) {  // 55..59 lower outer lip, right to left
        const double t = kPi * (30.0 + 30.0 * k) / 180.0;
        pts[55 + k] = {cx + kMouthHalfWidth * std::cos(t), cy + kOuterLowerHeight * std::sin(t)};
    }
    pts[60] = {cx - kInnerHalfWidth, cy + 0.6 * corner_dy};
    pts[64] = {cx + kInnerHalfWidth, cy + 0.6 * corner_dy};
    for (int k = 0; k < 3; ++k) {  // 61..63 upper inner lip
        const double t = kPi * (135.0 - 45.0 * k) / 180.0;
        pts[61 + k] = {cx + kInnerHalfWidth * std::cos(t), cy - kInnerUpperHeight * std::sin(t)};
    }
    for (int k = 0; k < 3; ++k) {  // 65..67 lower inner lip, right to left
        const double t = kPi * (45.0 + 45.0 * k) / 180.0;
        pts[65 + k] = {cx + kInnerHalfWidth * std::cos(t), cy + kInnerLowerHeight * std::sin(t)};
    }
    // Smile/frown curvature across the whole lip line; x-dependent, so the
    // class difference is a shape change that survives normalization.
    for (int k = 48; k < 48 + kMouthPointCount; ++k) {
        const double rel = (pts[k].x - cx) / kMouthHalfWidth;
        pts[k].y += sign * kSmileBend * (rel * rel - 0.5);
    }
}

void place_face_outline(std::vector<Point>& pts) {
    const double cx = kFaceCx, cy = kFaceCy;
    for (int k = 0; k <= 16; ++k) {  // 0..16 jaw, left ear over chin to right ear
        const double t = kPi * (16 - k) / 16.0;
        pts[k] = {cx + 55.0 * std::cos(t), cy + 62.0 * std::sin(t)};
    }
    for (int k = 0; k < 5; ++k) {  // 17..21 left brow
        const double x = -45.0 + 7.0 * k;
        pts[17 + k] = {cx + x, cy - 45.0 - 3.0 * std::sin(kPi * k / 4.0)};
    }
    for (int k = 0; k < 5; ++k) {  // 22..26 right brow
        const double x = 17.0 + 7.0 * k;
        pts[22 + k] = {cx + x, cy - 45.0 - 3.0 * std::sin(kPi * (4 - k) / 4.0)};
    }
    for (int k = 0; k < 4; ++k)  // 27..30 nose bridge
        pts[27 + k] = {cx, cy - 35.0 + 10.0 * k};
    for (int k = 0; k < 5; ++k)  // 31..35 nose base
        pts[31 + k] = {cx - 12.0 + 6.0 * k, cy + 2.0 + (k == 2 ? 3.0 : 0.0)};
    for (int k = 0; k < 6; ++k) {  // 36..41 left eye
        const double t = kPi * k / 3.0;
        pts[36 + k] = {cx - 25.0 + 8.0 * std::cos(t), cy - 30.0 + 4.0 * std::sin(t)};
    }
    for (int k = 0; k < 6; ++k) {  // 42..47 right eye
        const double t = kPi * k / 3.0;
        pts[42 + k] = {cx + 25.0 + 8.0 * std::cos(t), cy - 30.0 + 4.0 * std::sin(t)};
    }
}

}  // namespace

PointCloud synthesize_face(Label kind, double noise, Rng& rng) {
    if (!(noise >= 0.0) || !std::isfinite(noise))
        throw ContractError("synthesize_face: noise must be finite and >= 0");
    PointCloud face;
    face.label = kind;
    face.points.assign(kFacePointCount, Point{});
    place_face_outline(face.points);
    place_mouth(face.points, kind);
    for (auto& p : face.points) {
        p.x += noise * rng.gaussian();
        p.y += noise * rng.gaussian();
    }
    return face;
}

std::vector<int> sample_vertex_indices(int total, int n, Rng& rng) {
    if (n < 3 || n > total)
        throw ContractError("sample_vertex_indices: require 3 <= n <= " + std::to_string(total) +
                            ", got " + std::to_string(n));
    std::vector<int> pool(total);
    std::iota(pool.begin(), pool.end(), 0);
    for (int k = 0; k < n; ++k) {
        const int j = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - k)));
        std::swap(pool[k], pool[j]);
    }
    pool.resize(n);
    std::sort(pool.begin(), pool.end());
    return pool;
}

PointCloud select_vertices(const PointCloud& mouth, const std::vector<int>& indices) {
    PointCloud sub;
    sub.label = mouth.label;
    sub.points.reserve(indices.size());
    for (int idx : indices) {
        if (idx < 0 || idx >= static_cast<int>(mouth.points.size()))
            throw ContractError("select_vertices: index " + std::to_string(idx) + " out of range");
        sub.points.push_back(mouth.points[idx]);
    }
    return sub;
}

PointCloud select_vertices(const PointCloud& mouth, int n, Rng& rng) {
    if (mouth.points.size() != kMouthPointCount)
        throw ContractError("select_vertices: expected a 20-point mouth cloud");
    if (n < 3 || n > kMouthPointCount)
        throw ContractError("select_vertices: require 3 <= n <= 20, got " + std::to_string(n));
    return select_vertices(mouth, sample_vertex_indices(kMouthPointCount, n, rng));
}

}  // namespace graphiq
