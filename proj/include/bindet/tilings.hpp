#pragma once

// The combinatorial side: nonintersecting lattice paths counted by binomial
// determinants, brute-force path enumeration as the oracle, cyclically
// symmetric tiling counts via the sum of minors, the holey-hexagon region
// construction, and SVG emission.

#include "bindet/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bindet {

// Paths start at (mu+s+i-3, 0), end at (0, t+j-1), step set {left, up}.
// kept_starts/kept_ends are the 1-based row resp. column indices whose
// points are present (complement of I resp. I+s-t).
struct PathProblem {
    long mu = 2;
    long s = 0;
    long t = 0;
    long n = 1;
    std::vector<long> kept_starts;
    std::vector<long> kept_ends;

    static PathProblem full(long mu, long s, long t, long n) {
        PathProblem p{mu, s, t, n, {}, {}};
        for (long i = 1; i <= n; ++i) {
            p.kept_starts.push_back(i);
            p.kept_ends.push_back(i);
        }
        return p;
    }

    void validate() const {
        if (mu + s < 2) throw std::invalid_argument("PathProblem: needs mu + s >= 2");
        if (kept_starts.size() != kept_ends.size())
            throw std::invalid_argument("PathProblem: kept start/end counts differ");
    }
};

struct TilingCount {
    mpz_class value;
    bool weighted = false;
};

// LGV: the kept tuple count is the determinant of the kept submatrix of the
// delta-free matrix at integer mu.
inline TilingCount lgv_count(const PathProblem& p) {
    p.validate();
    std::size_t k = p.kept_starts.size();
    if (k == 0) return {mpz_class(1), false};
    Matrix m(k, k);
    for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t b = 1; b <= k; ++b) {
            long i = p.kept_starts[a - 1], j = p.kept_ends[b - 1];
            m(a, b) = RatFunc(Poly(gbinom_num(Rational(p.mu + i + j + p.s + p.t - 4), j + p.t - 1)));
        }
    Rational d = m.det().num().constant_value() / m.det().den().constant_value();
    if (!d.is_integer()) throw std::logic_error("lgv_count: non-integer determinant");
    return {d.numerator(), false};
}

// One monotone path, stored as the vertex list from start to end.
using LatticePath = std::vector<std::pair<long, long>>;
using PathTuple = std::vector<LatticePath>;

namespace detail {

// All {left, up} paths from (x0, 0) to (0, y1), depth-first with the left
// step explored before the up step.
inline void all_paths(long x0, long y1, LatticePath& cur, std::vector<LatticePath>& out) {
    auto [x, y] = cur.back();
    if (x == 0 && y == y1) {
        out.push_back(cur);
        return;
    }
    if (x > 0) {
        cur.emplace_back(x - 1, y);
        all_paths(x0, y1, cur, out);
        cur.pop_back();
    }
    if (y < y1) {
        cur.emplace_back(x, y + 1);
        all_paths(x0, y1, cur, out);
        cur.pop_back();
    }
}

inline bool vertex_disjoint(const LatticePath& a, const std::set<std::pair<long, long>>& used) {
    for (const auto& v : a)
        if (used.count(v)) return false;
    return true;
}

}  // namespace detail

// Brute-force enumeration of nonintersecting path tuples; the oracle behind
// lgv_count.  Throws when more than `cap` tuples exist.
inline std::vector<PathTuple> enumerate_paths(const PathProblem& p, long cap = 5000) {
    p.validate();
    std::size_t k = p.kept_starts.size();
    std::vector<std::vector<LatticePath>> choices(k);
    for (std::size_t a = 0; a < k; ++a) {
        long i = p.kept_starts[a], j = p.kept_ends[a];
        LatticePath cur{{p.mu + p.s + i - 3, 0}};
        detail::all_paths(p.mu + p.s + i - 3, p.t + j - 1, cur, choices[a]);
    }
    std::vector<PathTuple> out;
    PathTuple cur;
    std::set<std::pair<long, long>> used;
    std::function<void(std::size_t)> rec = [&](std::size_t a) {
        if (a == k) {
            if (static_cast<long>(out.size()) >= cap)
                throw std::invalid_argument("enumerate_paths: cap exceeded");
            out.push_back(cur);
            return;
        }
        for (const auto& path : choices[a]) {
            if (!detail::vertex_disjoint(path, used)) continue;
            for (const auto& v : path) used.insert(v);
            cur.push_back(path);
            rec(a + 1);
            cur.pop_back();
            for (const auto& v : path) used.erase(v);
        }
    };
    rec(0);
    return out;
}

// Sum-of-minors at integer mu.  When the per-subset weight is +1 (s-t+1
// even for E, s-t even for D) this is the plain count of cyclically
// symmetric rhombus tilings of the constructed region; otherwise a signed
// count.
inline TilingCount cyclic_tiling_count(Family family, long s, long t, long n, long mu) {
    if (family == Family::B) throw std::invalid_argument("cyclic_tiling_count: expects D or E");
    if (mu + std::max(s, t) < 2) throw std::invalid_argument("cyclic_tiling_count: needs mu + max(s,t) >= 2");
    Rational v = sum_of_minors({family, s, t, n}).eval(Rational(mu));
    if (!v.is_integer()) throw std::logic_error("cyclic_tiling_count: non-integer count");
    long gap = s - t < 0 ? t - s : s - t;
    long weight_exp = gap + (family == Family::E ? 1 : 0);
    return {v.numerator(), weight_exp % 2 != 0};
}

// Region record of the three-lozenge construction.  Bottom edge parts
// (mu-2, t, s-t, delta, s-t), left edge parts (t, s-t, delta); the left
// edge of the lozenge has geometric length n+t (the end points sit at
// heights t .. t+n-1).  After forced-tiling removal the outer boundary is
// the hexagon with alternating sides (n+t-(s-t), mu+2s+n-t-2); for t=0 the
// central hole and its three satellites merge into one triangle of side
// mu-2+3s.
struct TilingRegion {
    long mu = 2, s = 0, t = 0, n = 1;
    bool mirrored = false;  // true when built from the s < t orientation
    long delta = 0;
    std::array<long, 5> bottom_parts{};
    std::array<long, 3> left_parts{};
    long hex_side_short = 0;  // n+t-(s-t)
    long hex_side_long = 0;   // mu+2s+n-t-2
    std::vector<long> holes;  // hole sizes after forced-tiling removal

    bool same_region(const TilingRegion& o) const {
        return hex_side_short == o.hex_side_short && hex_side_long == o.hex_side_long &&
               delta == o.delta && holes == o.holes;
    }
};

inline TilingRegion build_region(long s, long t, long n, long mu) {
    bool mirrored = s < t;
    if (mirrored) std::swap(s, t);  // the t >= s >= 0 case is the mirror image
    if (t < 0) throw std::invalid_argument("build_region: needs s, t >= 0");
    if (mu + s < 2) throw std::invalid_argument("build_region: needs mu + s >= 2");
    long delta = n - (s - t);
    if (delta < 0) throw std::invalid_argument("build_region: needs n >= s - t");
    TilingRegion r;
    r.mu = mu;
    r.s = s;
    r.t = t;
    r.n = n;
    r.mirrored = mirrored;
    r.delta = delta;
    r.bottom_parts = {mu - 2, t, s - t, delta, s - t};
    r.left_parts = {t, s - t, delta};
    r.hex_side_short = n + t - (s - t);
    r.hex_side_long = mu + 2 * s + n - t - 2;
    if (t == 0)
        r.holes = {mu - 2 + 3 * s};
    else
        r.holes = {mu - 2, s - t, s - t, s - t};
    return r;
}

// ---------------------------------------------------------------------------
// SVG rendering (triangular lattice, 20 px unit).  Without a tiling the
// post-removal holey hexagon is drawn; with one, a Fig.2-style single
// lozenge with the path tuple overlaid as unit rhombi.
// ---------------------------------------------------------------------------

namespace detail {

constexpr double kUnit = 20.0;
constexpr double kSqrt3Half = 0.8660254037844386;

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Pt {
    double x, y;
};

// Sheared lattice coordinates: (x, y) -> (x + y/2, -y*sqrt(3)/2), scaled.
inline Pt shear(double x, double y, double ox, double oy) {
    return {ox + (x + 0.5 * y) * kUnit, oy - kSqrt3Half * y * kUnit};
}

inline std::string polygon(const std::vector<Pt>& pts, const std::string& fill,
                           const std::string& stroke) {
    std::string s = "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += " ";
        s += fmt(pts[i].x) + "," + fmt(pts[i].y);
    }
    s += "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"1\"/>\n";
    return s;
}

}  // namespace detail

inline std::string render_svg(const TilingRegion& region,
                              const std::optional<PathTuple>& tiling = std::nullopt) {
    using detail::Pt;
    using detail::fmt;
    using detail::kUnit;
    using detail::kSqrt3Half;

    struct Shape {
        std::vector<Pt> pts;
        std::string fill;
    };
    std::vector<Shape> shapes;

    if (tiling) {
        // Single lozenge of the path picture: width mu+s+n-2, height n+t.
        long w = region.mu + region.s + region.n - 2;
        long h = region.n + region.t;
        auto at = [&](double x, double y) { return detail::shear(x, y, 0, 0); };
        shapes.push_back({{at(0, 0), at(w, 0), at(w, h), at(0, h)}, "none"});
        // Unit rhombus per path step: the lattice edge is the short diagonal
        // of the rhombus formed by its two adjacent triangles.
        for (const auto& path : *tiling) {
            for (std::size_t v = 0; v + 1 < path.size(); ++v) {
                auto [x0, y0] = path[v];
                auto [x1, y1] = path[v + 1];
                if (y1 == y0)  // left step (x0,y)->(x0-1,y)
                    shapes.push_back({{at(x0, y0), at(x0 - 1, y0 + 1), at(x0 - 1, y0), at(x0, y0 - 1)},
                                      "#c8c8c8"});
                else  // up step (x,y0)->(x,y0+1)
                    shapes.push_back({{at(x0, y0), at(x0 - 1, y0 + 1), at(x0, y0 + 1), at(x0 + 1, y0)},
                                      "#707070"});
            }
            // start and end half-rhombi
            auto [sx, sy] = path.front();
            auto [ex, ey] = path.back();
            shapes.push_back({{at(sx, sy), at(sx + 1, sy), at(sx + 1, sy - 1)}, "black"});
            shapes.push_back({{at(ex, ey), at(ex, ey + 1), at(ex - 1, ey + 1)}, "black"});
        }
    } else {
        // Post-removal outline: equiangular hexagon with alternating sides
        // (long, short), then the hole triangles.
        double q = static_cast<double>(region.hex_side_long);
        double p = static_cast<double>(region.hex_side_short);
        static const double dirs[6][2] = {{1, 0},          {0.5, -kSqrt3Half}, {-0.5, -kSqrt3Half},
                                          {-1, 0},         {-0.5, kSqrt3Half}, {0.5, kSqrt3Half}};
        std::vector<Pt> hex;
        double cx = 0, cy = 0;
        for (int e = 0; e < 6; ++e) {
            hex.push_back({cx, cy});
            double len = (e % 2 == 0 ? q : p) * kUnit;
            cx += dirs[e][0] * len;
            cy += dirs[e][1] * len;
        }
        shapes.push_back({hex, "#f4f4f4"});
        double gx = 0, gy = 0;
        for (const auto& v : hex) {
            gx += v.x;
            gy += v.y;
        }
        gx /= 6;
        gy /= 6;
        auto triangle = [&](double cx_, double cy_, double side, bool down) {
            double rr = side * kUnit / 2;
            double hgt = side * kUnit * kSqrt3Half;
            std::vector<Pt> tri;
            if (down)
                tri = {{cx_ - rr, cy_ - hgt / 3}, {cx_ + rr, cy_ - hgt / 3}, {cx_, cy_ + 2 * hgt / 3}};
            else
                tri = {{cx_ - rr, cy_ + hgt / 3}, {cx_ + rr, cy_ + hgt / 3}, {cx_, cy_ - 2 * hgt / 3}};
            shapes.push_back({tri, "white"});
        };
        // central hole (down-pointing), then satellites for t > 0
        if (!region.holes.empty() && region.holes[0] > 0) triangle(gx, gy, region.holes[0], true);
        if (region.holes.size() == 4) {
            double d = (region.holes[0] + 2.0 * region.t + region.holes[1]) * kUnit * kSqrt3Half / 1.5;
            for (int k = 0; k < 3; ++k) {
                if (region.holes[static_cast<std::size_t>(k) + 1] <= 0) continue;
                double ang = (90 + 120 * k) * 3.14159265358979323846 / 180.0;
                triangle(gx + d * std::cos(ang), gy - d * std::sin(ang),
                         region.holes[static_cast<std::size_t>(k) + 1], false);
            }
        }
    }

    // translate everything into view with a one-unit margin
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool first = true;
    for (const auto& sh : shapes)
        for (const auto& v : sh.pts) {
            if (first || v.x < minx) minx = v.x;
            if (first || v.y < miny) miny = v.y;
            if (first || v.x > maxx) maxx = v.x;
            if (first || v.y > maxy) maxy = v.y;
            first = false;
        }
    double dx = kUnit - minx, dy = kUnit - miny;
    std::string body;
    for (auto& sh : shapes) {
        for (auto& v : sh.pts) {
            v.x += dx;
            v.y += dy;
        }
        body += detail::polygon(sh.pts, sh.fill, "black");
    }

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(maxx - minx + 2 * kUnit) +
           "\" height=\"" + fmt(maxy - miny + 2 * kUnit) + "\">\n";
    svg += body;
    svg += "</svg>\n";
    return svg;
}

}  // namespace bindet
