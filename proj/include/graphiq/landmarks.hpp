#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "graphiq/rng.hpp"
#include "graphiq/types.hpp"

namespace graphiq {

inline constexpr int kFacePointCount = 68;
inline constexpr int kMouthBegin = 48;  // standard 68-point annotation: mouth is 48..67
inline constexpr int kMouthPointCount = 20;

// Mouth half-width of the synthetic generator, in pixels. Noise levels quoted
// as a fraction of mouth width refer to 2 * this value.
inline constexpr double kMouthHalfWidth = 24.0;
inline constexpr double kMouthWidth = 2.0 * kMouthHalfWidth;

// CSV format: one face per line, `label,x0,y0,...,x67,y67` (137 fields, no
// header). Malformed rows raise ParseError naming the 0-based row index.
std::vector<PointCloud> load_landmarks(const std::filesystem::path& path,
                                       std::optional<std::size_t> limit = std::nullopt);

void save_landmarks(const std::filesystem::path& path, const std::vector<PointCloud>& faces);

// The 20 mouth points (indices kMouthBegin .. kMouthBegin+19) of a 68-point
// face, label preserved. Point j of the result is input point kMouthBegin+j.
PointCloud extract_mouth(const PointCloud& face);

// 68-point face whose mouth traces a parametric lip shape: corner elevation
// is positive (image-up, numerically smaller y) for happy and negative for
// sad, plus isotropic Gaussian jitter of standard deviation `noise` on every
// point. Deterministic given the rng state; independent of it at noise 0.
PointCloud synthesize_face(Label kind, double noise, Rng& rng);

// n of `total` indices, drawn uniformly without replacement, ascending.
// The same index set can be applied to any number of faces.
std::vector<int> sample_vertex_indices(int total, int n, Rng& rng);

// Sub-cloud at the given landmark indices (ascending order expected).
PointCloud select_vertices(const PointCloud& mouth, const std::vector<int>& indices);

// Draws the index set and applies it; 3 <= n <= 20, mouth must have 20 points.
PointCloud select_vertices(const PointCloud& mouth, int n, Rng& rng);

}  // namespace graphiq
