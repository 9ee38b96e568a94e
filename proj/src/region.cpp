#include "chainlet/region.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace chainlet {

namespace {

class PredicateRegion final : public Region {
  public:
    PredicateRegion(int n, std::function<bool(const Vec&)> pred, Vec lo, Vec hi, int samples)
        : n_(n), pred_(std::move(pred)), lo_(std::move(lo)), hi_(std::move(hi)),
          samples_(std::max(2, samples)) {}

    int dim() const override { return n_; }
    bool contains(const Vec& p) const override { return pred_(p); }

    bool cube_inside(const Vec& lo, double edge) const override {
        // Sample a sub-grid including corners.
        std::vector<int> idx(n_, 0);
        while (true) {
            Vec p(n_);
            for (int i = 0; i < n_; ++i)
                p[i] = lo[i] + edge * idx[i] / (samples_ - 1);
            if (!pred_(p)) return false;
            int i = 0;
            while (i < n_ && ++idx[i] == samples_) idx[i++] = 0;
            if (i == n_) break;
        }
        return true;
    }

    bool cube_intersects(const Vec& lo, double edge) const override {
        std::vector<int> idx(n_, 0);
        while (true) {
            Vec p(n_);
            for (int i = 0; i < n_; ++i)
                p[i] = lo[i] + edge * idx[i] / (samples_ - 1);
            if (pred_(p)) return true;
            int i = 0;
            while (i < n_ && ++idx[i] == samples_) idx[i++] = 0;
            if (i == n_) break;
        }
        return false;
    }

    std::pair<Vec, Vec> bounding_box() const override { return {lo_, hi_}; }

  private:
    int n_;
    std::function<bool(const Vec&)> pred_;
    Vec lo_, hi_;
    int samples_;
};

class BoxRegion final : public Region {
  public:
    BoxRegion(Vec lo, Vec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
    int dim() const override { return static_cast<int>(lo_.size()); }
    bool contains(const Vec& p) const override {
        for (std::size_t i = 0; i < lo_.size(); ++i)
            if (p[i] <= lo_[i] || p[i] >= hi_[i]) return false;
        return true;
    }
    bool cube_inside(const Vec& lo, double edge) const override {
        for (std::size_t i = 0; i < lo_.size(); ++i)
            if (lo[i] <= lo_[i] || lo[i] + edge >= hi_[i]) return false;
        return true;
    }
    bool cube_intersects(const Vec& lo, double edge) const override {
        for (std::size_t i = 0; i < lo_.size(); ++i)
            if (lo[i] + edge <= lo_[i] || lo[i] >= hi_[i]) return false;
        return true;
    }
    std::pair<Vec, Vec> bounding_box() const override { return {lo_, hi_}; }

  private:
    Vec lo_, hi_;
};

/// Planar polygon with a uniform grid over the edges for fast queries.
class PolygonRegion final : public Region {
  public:
    explicit PolygonRegion(std::vector<Vec> verts) : verts_(std::move(verts)) {
        if (verts_.size() < 3) throw std::invalid_argument("polygon: needs 3+ vertices");
        lo_ = hi_ = verts_[0];
        for (const Vec& v : verts_) {
            for (int i = 0; i < 2; ++i) {
                lo_[i] = std::min(lo_[i], v[i]);
                hi_[i] = std::max(hi_[i], v[i]);
            }
        }
        // pad the box a little so boundary cells are interior to the grid
        const double pad = 1e-9 + 1e-6 * (hi_[0] - lo_[0] + hi_[1] - lo_[1]);
        lo_[0] -= pad;
        lo_[1] -= pad;
        hi_[0] += pad;
        hi_[1] += pad;
        const std::size_t m = verts_.size();
        gcells_ = std::max<std::size_t>(8, static_cast<std::size_t>(std::sqrt((double)m) * 2));
        grid_.assign(gcells_ * gcells_, {});
        for (std::size_t e = 0; e < m; ++e) {
            const Vec& a = verts_[e];
            const Vec& b = verts_[(e + 1) % m];
            auto [ix0, iy0] = cell_of(std::min(a[0], b[0]), std::min(a[1], b[1]));
            auto [ix1, iy1] = cell_of(std::max(a[0], b[0]), std::max(a[1], b[1]));
            for (std::size_t iy = iy0; iy <= iy1; ++iy)
                for (std::size_t ix = ix0; ix <= ix1; ++ix)
                    grid_[iy * gcells_ + ix].push_back(static_cast<int>(e));
        }
    }

    int dim() const override { return 2; }

    bool contains(const Vec& p) const override {
        if (p[0] <= lo_[0] || p[0] >= hi_[0] || p[1] <= lo_[1] || p[1] >= hi_[1]) return false;
        // Crossing count along the +x ray, walking the grid row.
        int crossings = 0;
        auto [ix, iy] = cell_of(p[0], p[1]);
        std::set<int> seen;
        for (std::size_t cx = ix; cx < gcells_; ++cx) {
            for (int e : grid_[iy * gcells_ + cx]) {
                if (!seen.insert(e).second) continue;
                const Vec& a = verts_[e];
                const Vec& b = verts_[(e + 1) % verts_.size()];
                if ((a[1] > p[1]) == (b[1] > p[1])) continue;
                const double t = (p[1] - a[1]) / (b[1] - a[1]);
                const double x = a[0] + t * (b[0] - a[0]);
                if (x > p[0]) ++crossings;
            }
        }
        return crossings % 2 == 1;
    }

    bool cube_inside(const Vec& lo, double edge) const override {
        // Strict inclusion: no edge touches the closed cube, and one corner
        // is inside.
        const double x0 = lo[0], y0 = lo[1], x1 = lo[0] + edge, y1 = lo[1] + edge;
        auto [ix0, iy0] = cell_of(x0, y0);
        auto [ix1, iy1] = cell_of(x1, y1);
        std::set<int> seen;
        for (std::size_t iy = iy0; iy <= iy1; ++iy)
            for (std::size_t ix = ix0; ix <= ix1; ++ix)
                for (int e : grid_[iy * gcells_ + ix]) {
                    if (!seen.insert(e).second) continue;
                    if (segment_meets_box(verts_[e], verts_[(e + 1) % verts_.size()],
                                          x0, y0, x1, y1))
                        return false;
                }
        return contains({0.5 * (x0 + x1), 0.5 * (y0 + y1)});
    }

    bool cube_intersects(const Vec& lo, double edge) const override {
        // Either an edge crosses the closed cube, or the cube lies entirely
        // on one side; the center decides which.
        const double x0 = lo[0], y0 = lo[1], x1 = lo[0] + edge, y1 = lo[1] + edge;
        auto [ix0, iy0] = cell_of(x0, y0);
        auto [ix1, iy1] = cell_of(x1, y1);
        std::set<int> seen;
        for (std::size_t iy = iy0; iy <= iy1; ++iy)
            for (std::size_t ix = ix0; ix <= ix1; ++ix)
                for (int e : grid_[iy * gcells_ + ix]) {
                    if (!seen.insert(e).second) continue;
                    if (segment_meets_box(verts_[e], verts_[(e + 1) % verts_.size()],
                                          x0, y0, x1, y1))
                        return true;
                }
        return contains({0.5 * (x0 + x1), 0.5 * (y0 + y1)});
    }

    std::pair<Vec, Vec> bounding_box() const override { return {lo_, hi_}; }

  private:
    std::pair<std::size_t, std::size_t> cell_of(double x, double y) const {
        const double fx = (x - lo_[0]) / (hi_[0] - lo_[0]);
        const double fy = (y - lo_[1]) / (hi_[1] - lo_[1]);
        auto clampi = [&](double f) {
            const long i = static_cast<long>(f * static_cast<double>(gcells_));
            return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(gcells_) - 1));
        };
        return {clampi(fx), clampi(fy)};
    }

    static bool segment_meets_box(const Vec& a, const Vec& b, double x0, double y0,
                                  double x1, double y1) {
        // Liang-Barsky style clip of [a,b] against the closed box.
        double t0 = 0.0, t1 = 1.0;
        const double dx = b[0] - a[0], dy = b[1] - a[1];
        auto clip = [&](double p, double q) {
            if (p == 0.0) return q >= 0.0;
            const double r = q / p;
            if (p < 0.0) {
                if (r > t1) return false;
                t0 = std::max(t0, r);
            } else {
                if (r < t0) return false;
                t1 = std::min(t1, r);
            }
            return t0 <= t1;
        };
        return clip(-dx, a[0] - x0) && clip(dx, x1 - a[0]) && clip(-dy, a[1] - y0) &&
               clip(dy, y1 - a[1]);
    }

    std::vector<Vec> verts_;
    Vec lo_{0, 0}, hi_{0, 0};
    std::size_t gcells_ = 0;
    std::vector<std::vector<int>> grid_;
};

}  // namespace

std::shared_ptr<Region> predicate_region(int n, std::function<bool(const Vec&)> pred, Vec lo,
                                         Vec hi, int samples_per_axis) {
    return std::make_shared<PredicateRegion>(n, std::move(pred), std::move(lo), std::move(hi),
                                             samples_per_axis);
}

std::shared_ptr<Region> box_region(Vec lo, Vec hi) {
    return std::make_shared<BoxRegion>(std::move(lo), std::move(hi));
}

std::shared_ptr<Region> polygon_region(std::vector<Vec> vertices) {
    return std::make_shared<PolygonRegion>(std::move(vertices));
}

namespace {

Vec cube_corner(const WhitneyCube& q, int n) {
    Vec lo(n);
    const double h = std::ldexp(1.0, -q.scale);
    for (int i = 0; i < n; ++i) lo[i] = static_cast<double>(q.index[i]) * h;
    return lo;
}

bool acceptable(const Region& region, const std::vector<std::int64_t>& idx, int scale, int n) {
    const double h = std::ldexp(1.0, -scale);
    // The cube and every same-scale cube meeting it must lie in the region.
    std::vector<int> off(n, -1);
    while (true) {
        Vec lo(n);
        for (int i = 0; i < n; ++i) lo[i] = static_cast<double>(idx[i] + off[i]) * h;
        if (!region.cube_inside(lo, h)) return false;
        int i = 0;
        while (i < n && ++off[i] == 2) off[i++] = -1;
        if (i == n) break;
    }
    return true;
}

}  // namespace

PolyChain WhitneyResult::stage_chain(int n, int s) const {
    PolyChain out(n, n);
    if (s < 0 || s >= static_cast<int>(stages.size())) return out;
    std::vector<Vec> axes(n, Vec(n, 0.0));
    for (const WhitneyCube& q : stages[s]) {
        const double h = std::ldexp(1.0, -q.scale);
        for (int i = 0; i < n; ++i) {
            axes[i].assign(n, 0.0);
            axes[i][i] = h;
        }
        out.append(Cell::parallelepiped(cube_corner(q, n), axes), 1.0);
    }
    return out;
}

PolyChain WhitneyResult::chain(int n) const {
    PolyChain out(n, n);
    for (int s = 0; s < static_cast<int>(stages.size()); ++s)
        out.append(stage_chain(n, s));
    return out;
}

double WhitneyResult::stage_mass(int n, int s) const {
    double m = 0.0;
    if (s < 0 || s >= static_cast<int>(stages.size())) return m;
    for (const WhitneyCube& q : stages[s]) m += std::pow(std::ldexp(1.0, -q.scale), n);
    return m;
}

WhitneyResult whitney_decompose(const Region& region, int max_stage) {
    if (max_stage < 0) throw std::invalid_argument("whitney_decompose: negative stage");
    const int n = region.dim();
    auto [lo, hi] = region.bounding_box();
    double span = 0.0;
    for (int i = 0; i < n; ++i) span = std::max(span, hi[i] - lo[i]);
    int k_start = 0;
    while (std::ldexp(1.0, -k_start) > span && k_start > -60) --k_start;

    WhitneyResult result;

    // Find k0: the coarsest scale with an acceptable cube.
    int k0 = k_start;
    bool found = false;
    std::vector<WhitneyCube> first_stage;
    for (; k0 < k_start + 30; ++k0) {
        const double h = std::ldexp(1.0, -k0);
        std::vector<std::int64_t> ilo(n), ihi(n);
        for (int i = 0; i < n; ++i) {
            ilo[i] = static_cast<std::int64_t>(std::floor(lo[i] / h)) - 1;
            ihi[i] = static_cast<std::int64_t>(std::ceil(hi[i] / h)) + 1;
        }
        std::vector<std::int64_t> idx = ilo;
        while (true) {
            if (acceptable(region, idx, k0, n)) {
                found = true;
                first_stage.push_back(WhitneyCube{k0, idx});
            }
            int i = 0;
            while (i < n && ++idx[i] > ihi[i]) idx[i++] = ilo[i];
            if (i == n) break;
        }
        if (found) break;
    }
    if (!found) return result;  // empty region: no acceptable cube at any scale

    result.k0 = k0;
    result.stages.push_back(std::move(first_stage));

    std::set<std::vector<std::int64_t>> taken0;
    for (const WhitneyCube& q : result.stages[0]) taken0.insert(q.index);

    // Frontier: cubes that were not accepted but still meet the region; only
    // their children can become acceptable at finer scales.
    auto meets = [&](const std::vector<std::int64_t>& idx, int scale) {
        const double h = std::ldexp(1.0, -scale);
        Vec corner(n);
        for (int i = 0; i < n; ++i) corner[i] = static_cast<double>(idx[i]) * h;
        return region.cube_intersects(corner, h);
    };

    std::vector<std::vector<std::int64_t>> frontier;
    {
        const double h = std::ldexp(1.0, -k0);
        std::vector<std::int64_t> ilo(n), ihi(n);
        for (int i = 0; i < n; ++i) {
            ilo[i] = static_cast<std::int64_t>(std::floor(lo[i] / h)) - 1;
            ihi[i] = static_cast<std::int64_t>(std::ceil(hi[i] / h)) + 1;
        }
        std::vector<std::int64_t> idx = ilo;
        while (true) {
            if (taken0.find(idx) == taken0.end() && meets(idx, k0)) frontier.push_back(idx);
            int i = 0;
            while (i < n && ++idx[i] > ihi[i]) idx[i++] = ilo[i];
            if (i == n) break;
        }
    }

    for (int s = 1; s <= max_stage; ++s) {
        const int k = k0 + s;
        std::vector<WhitneyCube> stage;
        std::vector<std::vector<std::int64_t>> next_frontier;
        for (const auto& parent : frontier) {
            std::vector<std::int64_t> child(n);
            for (int mask = 0; mask < (1 << n); ++mask) {
                for (int i = 0; i < n; ++i) child[i] = 2 * parent[i] + ((mask >> i) & 1);
                if (acceptable(region, child, k, n)) {
                    stage.push_back(WhitneyCube{k, child});
                } else if (meets(child, k)) {
                    next_frontier.push_back(child);
                }
            }
        }
        result.stages.push_back(std::move(stage));
        frontier = std::move(next_frontier);
    }
    return result;
}

PolyChain whitney_chain(const Region& region, int max_stage) {
    const WhitneyResult r = whitney_decompose(region, max_stage);
    return r.chain(region.dim());
}

double pixel_area(const Region& region, int resolution) {
    const int n = region.dim();
    if (n != 2) throw std::invalid_argument("pixel_area: planar regions only");
    auto [lo, hi] = region.bounding_box();
    const double dx = (hi[0] - lo[0]) / resolution;
    const double dy = (hi[1] - lo[1]) / resolution;
    long count = 0;
    Vec p(2);
    for (int iy = 0; iy < resolution; ++iy) {
        p[1] = lo[1] + (iy + 0.5) * dy;
        for (int ix = 0; ix < resolution; ++ix) {
            p[0] = lo[0] + (ix + 0.5) * dx;
            if (region.contains(p)) ++count;
        }
    }
    return static_cast<double>(count) * dx * dy;
}

}  // namespace chainlet
