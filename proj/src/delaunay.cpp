#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

#include "graphiq/graphs.hpp"
#include "graphiq/predicates.hpp"

namespace graphiq {

namespace {

constexpr int kInf = -1;

// Triangle soup with one symbolic vertex at infinity. A real triangle stores
// its vertices counterclockwise. A ghost triangle (u, v, kInf) stands for the
// hull edge v->u traversed with the interior on its left; ghosts tile the
// outside so every directed edge has exactly one twin.
struct Tri {
    int v[3];
    bool alive = true;
    bool ghost() const { return v[2] == kInf; }
};

struct Mesh {
    const std::vector<Point>& pts;
    std::vector<Tri> tris;

    explicit Mesh(const std::vector<Point>& p) : pts(p) {}

    void add_real(int a, int b, int c) { tris.push_back({{a, b, c}, true}); }
    void add_ghost(int u, int v) { tris.push_back({{u, v, kInf}, true}); }

    // Index of the live triangle containing directed edge (x, y).
    int owner(int x, int y) const {
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            if (!tris[t].alive) continue;
            const auto& v = tris[t].v;
            for (int e = 0; e < 3; ++e)
                if (v[e] == x && v[(e + 1) % 3] == y) return t;
        }
        return -1;
    }

    bool in_conflict(const Tri& t, int d) const {
        const Point& pd = pts[d];
        if (!t.ghost())
            return geom::incircle_sign_perturbed(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]], pd) > 0;
        // Hull edge u->v (interior left): conflict when d is strictly outside,
        // or on the supporting line strictly between the endpoints (the hull
        // edge must split in that case).
        const Point& u = pts[t.v[1]];
        const Point& v = pts[t.v[0]];
        const int s = geom::orient2d_sign(u, v, pd);
        if (s < 0) return true;
        if (s > 0) return false;
        const Point& lo = lex_less(u, v) ? u : v;
        const Point& hi = lex_less(u, v) ? v : u;
        return lex_less(lo, pd) && lex_less(pd, hi);
    }

    void insert(int d) {
        std::vector<int> cavity;
        for (int t = 0; t < static_cast<int>(tris.size()); ++t)
            if (tris[t].alive && in_conflict(tris[t], d)) cavity.push_back(t);

        // Boundary = directed edges of cavity triangles whose twin survives.
        std::vector<std::pair<int, int>> boundary;
        for (int t : cavity) {
            const auto& v = tris[t].v;
            for (int e = 0; e < 3; ++e) {
                const int x = v[e];
                const int y = v[(e + 1) % 3];
                const int twin = owner(y, x);
                if (twin < 0 || !std::binary_search(cavity.begin(), cavity.end(), twin))
                    boundary.emplace_back(x, y);
            }
        }
        for (int t : cavity) tris[t].alive = false;
        for (const auto& [x, y] : boundary) {
            if (x == kInf)
                add_ghost(y, d);
            else if (y == kInf)
                add_ghost(d, x);
            else
                add_real(x, y, d);
        }
    }
};

}  // namespace

std::vector<Triangle> delaunay_triangulation(const PointCloud& cloud) {
    const auto& pts = cloud.points;
    const int n = static_cast<int>(pts.size());
    if (n < 3)
        throw ContractError("delaunay_triangulation: need at least 3 points, got " +
                            std::to_string(n));

    {
        std::vector<int> order(pts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(pts[a], pts[b]); });
        for (std::size_t k = 1; k < order.size(); ++k)
            if (pts[order[k - 1]] == pts[order[k]])
                throw DegenerateInputError("delaunay_triangulation: duplicate points at indices " +
                                           std::to_string(std::min(order[k - 1], order[k])) + " and " +
                                           std::to_string(std::max(order[k - 1], order[k])));
    }

    int seed = -1;
    for (int k = 2; k < n; ++k)
        if (geom::orient2d_sign(pts[0], pts[1], pts[k]) != 0) {
            seed = k;
            break;
        }
    if (seed < 0) throw DegenerateInputError("delaunay_triangulation: all points are collinear");

    Mesh mesh(pts);
    int a = 0, b = 1;
    if (geom::orient2d_sign(pts[a], pts[b], pts[seed]) < 0) std::swap(a, b);
    mesh.add_real(a, b, seed);
    mesh.add_ghost(b, a);
    mesh.add_ghost(seed, b);
    mesh.add_ghost(a, seed);

    for (int d = 2; d < n; ++d) {
        if (d == seed) continue;
        mesh.insert(d);
    }

    std::vector<Triangle> out;
    for (const auto& t : mesh.tris) {
        if (!t.alive || t.ghost()) continue;
        int v[3] = {t.v[0], t.v[1], t.v[2]};
        std::sort(std::begin(v), std::end(v));
        out.push_back({v[0], v[1], v[2]});
    }
    std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

}  // namespace graphiq
