#include "graphiq/predicates.hpp"

#include <cassert>
#include <cmath>

namespace graphiq::geom {

namespace {

// Expansion arithmetic after Shewchuk: a number is stored as a sum of
// nonoverlapping doubles in increasing magnitude order; the sign of the
// expansion is the sign of its largest (last nonzero) component.

constexpr double kEps = 0x1.0p-53;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void fast_two_sum(double a, double b, double& x, double& y) {
    // requires |a| >= |b|
    x = a + b;
    y = b - (x - a);
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

// h = e + b, b scalar. Returns new length; h may alias nothing.
int grow_expansion_zeroelim(int elen, const double* e, double b, double* h) {
    double q = b;
    int hn = 0;
    for (int i = 0; i < elen; ++i) {
        double sum, err;
        two_sum(q, e[i], sum, err);
        if (err != 0.0) h[hn++] = err;
        q = sum;
    }
    if (q != 0.0 || hn == 0) h[hn++] = q;
    return hn;
}

// h = e + f. Simple O(elen * flen) variant; exactness is what matters here,
// the exact path is only hit near degeneracy and inputs are tiny (n <= 20).
int expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f, double* h) {
    double work[1024];
    int wn = elen;
    for (int i = 0; i < elen; ++i) work[i] = e[i];
    for (int i = 0; i < flen; ++i) {
        double tmp[1024];
        const int tn = grow_expansion_zeroelim(wn, work, f[i], tmp);
        assert(tn <= 1024);
        wn = tn;
        for (int k = 0; k < wn; ++k) work[k] = tmp[k];
    }
    for (int k = 0; k < wn; ++k) h[k] = work[k];
    return wn;
}

// h = e * b, b scalar.
int scale_expansion_zeroelim(int elen, const double* e, double b, double* h) {
    double q, hh;
    int hn = 0;
    two_product(e[0], b, q, hh);
    if (hh != 0.0) h[hn++] = hh;
    for (int i = 1; i < elen; ++i) {
        double p1, p0, sum;
        two_product(e[i], b, p1, p0);
        two_sum(q, p0, sum, hh);
        if (hh != 0.0) h[hn++] = hh;
        fast_two_sum(p1, sum, q, hh);
        if (hh != 0.0) h[hn++] = hh;
    }
    if (q != 0.0 || hn == 0) h[hn++] = q;
    return hn;
}

int sign_of(int len, const double* e) {
    const double top = e[len - 1];
    return (top > 0.0) - (top < 0.0);
}

// Exact expansion of the doubled signed area: ax(by-cy) + bx(cy-ay) + cx(ay-by)
// written as six exact products to avoid inexact coordinate differences.
int orient2d_expansion(const Point& a, const Point& b, const Point& c, double* h) {
    double t1, t0;
    double acc[512];
    int an = 0;
    const struct {
        double u, v;
    } terms[6] = {{a.x, b.y}, {-a.x, c.y}, {b.x, c.y}, {-b.x, a.y}, {c.x, a.y}, {-c.x, b.y}};
    for (const auto& t : terms) {
        two_product(t.u, t.v, t1, t0);
        const double prod[2] = {t0, t1};
        double tmp[512];
        const int tn = expansion_sum_zeroelim(an, acc, 2, prod, tmp);
        an = tn;
        for (int k = 0; k < an; ++k) acc[k] = tmp[k];
    }
    for (int k = 0; k < an; ++k) h[k] = acc[k];
    return an;
}

int orient2d_exact(const Point& a, const Point& b, const Point& c) {
    double h[512];
    const int n = orient2d_expansion(a, b, c, h);
    return sign_of(n, h);
}

// Exact expansion of x*x + y*y (the paraboloid lift).
int lift_expansion(const Point& p, double* h) {
    double x1, x0, y1, y0;
    two_product(p.x, p.x, x1, x0);
    two_product(p.y, p.y, y1, y0);
    const double xs[2] = {x0, x1};
    const double ys[2] = {y0, y1};
    return expansion_sum_zeroelim(2, xs, 2, ys, h);
}

// Exact sign of the 4x4 lifted determinant with rows (a, b, c, d):
//   | px py px^2+py^2 1 |
// Positive means d inside the circumcircle when (a, b, c) is counterclockwise.
int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Point pts[4] = {a, b, c, d};
    double det[1024];
    int dn = 0;
    for (int i = 0; i < 4; ++i) {
        // cofactor of row i's lifted entry: +/- orient determinant of the others
        const Point& u = pts[(i + 1) % 4];
        const Point& v = pts[(i + 2) % 4];
        const Point& w = pts[(i + 3) % 4];
        double minor[512];
        const int mn = orient2d_expansion(u, v, w, minor);
        double lift[8];
        const int ln = lift_expansion(pts[i], lift);
        // det = la*[bcd] - lb*[acd] + lc*[abd] - ld*[abc]; the cyclic triple
        // (u,v,w) is an even permutation of each bracketed one, so only the
        // alternating row sign remains.
        const double s = (i % 2 == 0) ? 1.0 : -1.0;
        double prod[1024];
        int pn = 0;
        for (int k = 0; k < ln; ++k) {
            double scaled[1024];
            const int sn = scale_expansion_zeroelim(mn, minor, s * lift[k], scaled);
            double tmp[1024];
            const int tn = expansion_sum_zeroelim(pn, prod, sn, scaled, tmp);
            pn = tn;
            for (int t = 0; t < pn; ++t) prod[t] = tmp[t];
        }
        double tmp[1024];
        const int tn = expansion_sum_zeroelim(dn, det, pn, prod, tmp);
        assert(tn <= 1024);
        dn = tn;
        for (int t = 0; t < dn; ++t) det[t] = tmp[t];
    }
    return sign_of(dn, det);
}

}  // namespace

int orient2d_sign(const Point& a, const Point& b, const Point& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = -detleft - detright;
    } else {
        return (det > 0.0) - (det < 0.0);
    }
    const double errbound = kCcwErrBound * detsum;
    if (det >= errbound || -det >= errbound) return (det > 0.0) - (det < 0.0);
    return orient2d_exact(a, b, c);
}

int incircle_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det =
        alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    const double errbound = kIccErrBound * permanent;
    if (det > errbound || -det > errbound) return (det > 0.0) - (det < 0.0);
    return incircle_exact(a, b, c, d);
}

int incircle_sign_perturbed(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int s = incircle_sign(a, b, c, d);
    if (s != 0) return s;
    // Cocircular: lower the lifted coordinate of the lex-smallest point by the
    // dominant infinitesimal. The perturbed determinant sign is -sign of that
    // point's cofactor, which is the orientation of the other three (distinct
    // cocircular points are never collinear, so it cannot vanish).
    const Point pts[4] = {a, b, c, d};
    int smallest = 0;
    for (int i = 1; i < 4; ++i)
        if (lex_less(pts[i], pts[smallest])) smallest = i;
    int cof;
    switch (smallest) {
        case 0: cof = orient2d_sign(b, c, d); break;
        case 1: cof = -orient2d_sign(a, c, d); break;
        case 2: cof = orient2d_sign(a, b, d); break;
        default: cof = -orient2d_sign(a, b, c); break;
    }
    assert(cof != 0);
    return -cof;
}

}  // namespace graphiq::geom
