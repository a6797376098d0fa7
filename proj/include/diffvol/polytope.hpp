// Exact lattice-polytope kernel: incremental beneath-beyond hulls over the
// integers, Minkowski arithmetic, Euclidean volumes, standard block
// simplices, lattice-point enumeration and co-ideal detection.

#ifndef DIFFVOL_POLYTOPE_HPP
#define DIFFVOL_POLYTOPE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace diffvol {

using LatticePoint = std::vector<Int>;

namespace detail {

/// One oriented simplicial facet of a full-dimensional hull.
/// normal.x <= offset holds on the hull; normal is the raw cofactor normal
/// of the facet simplex, so normal.p - offset equals the signed d!-volume
/// of the cone over the facet with apex p.
struct Facet {
    std::vector<int> vtx;  // d point indices, sorted
    std::vector<Int> normal;
    Int offset;
};

inline Int dot(const std::vector<Int>& a, const LatticePoint& p) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
    return s;
}

inline Rat dot_q(const std::vector<Int>& a, const std::vector<Rat>& p) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * p[i];
    return s;
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline Int int_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Cofactor normal of the hyperplane through d integer points in R^d:
/// component i is the signed minor obtained by deleting column i from the
/// (d-1) x d matrix of edge vectors. dot(normal, x) - dot(normal, pts[0])
/// is the signed d!-volume of the simplex (pts, x).
inline std::vector<Int> cofactor_normal(const std::vector<LatticePoint>& pts) {
    const std::size_t d = pts[0].size();
    std::vector<std::vector<Int>> edges(d - 1, std::vector<Int>(d));
    for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t c = 0; c < d; ++c) edges[r][c] = pts[r + 1][c] - pts[0][c];
    std::vector<Int> normal(d);
    std::vector<std::vector<Int>> minor(d - 1, std::vector<Int>(d - 1));
    for (std::size_t skip = 0; skip < d; ++skip) {
        for (std::size_t r = 0; r + 1 < d; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < d; ++c) {
                if (c == skip) continue;
                minor[r][cc++] = edges[r][c];
            }
        }
        Int det = int_det(minor);
        normal[skip] = (skip % 2 == 0) ? det : -det;
    }
    return normal;
}

/// Rational row-echelon data of the span of a set of integer vectors:
/// rank, pivot columns, and for every non-pivot column its expression as a
/// rational combination of the pivot columns (used for affine-hull
/// equations).
struct RowSpace {
    int rank = 0;
    std::vector<int> pivots;
    // rows of the reduced echelon form, over the rationals
    std::vector<std::vector<Rat>> rref;
};

inline RowSpace row_space(const std::vector<std::vector<Rat>>& rows_in) {
    RowSpace rs;
    if (rows_in.empty()) return rs;
    std::vector<std::vector<Rat>> rows = rows_in;
    const std::size_t ncol = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncol && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rat lead = rows[r][c];
        for (std::size_t j = c; j < ncol; ++j) rows[r][j] /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = c; j < ncol; ++j) rows[i][j] -= f * rows[r][j];
        }
        rs.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rs.rank = static_cast<int>(r);
    rows.resize(r);
    rs.rref = std::move(rows);
    return rs;
}

/// Full-dimensional convex hull of integer points in R^d (d >= 1) by
/// incremental beneath-beyond. Points must affinely span R^d.
class HullEngine {
public:
    // points: deduplicated; init: indices of d+1 affinely independent points
    HullEngine(const std::vector<LatticePoint>& points, const std::vector<int>& init)
        : pts_(points), d_(static_cast<int>(points[0].size())) {
        build_initial(init);
        for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
            if (std::find(init.begin(), init.end(), i) == init.end()) insert(i);
        }
    }

    const std::vector<Facet>& facets() const { return facets_; }

    /// Euclidean volume of the hull.
    Rat volume() const { return Rat(vol6_) / factorial(d_); }

    /// Indices of the extreme points.
    std::vector<int> vertex_indices() const {
        // candidate corners; a corner is a vertex iff the normals of the
        // facet hyperplanes through it span R^d
        std::set<int> cand;
        for (const Facet& f : facets_)
            for (int v : f.vtx) cand.insert(v);
        std::vector<int> out;
        for (int v : cand) {
            std::vector<std::vector<Rat>> normals;
            for (const Facet& f : facets_) {
                if (dot(f.normal, pts_[v]) == f.offset) {
                    std::vector<Rat> row(d_);
                    for (int j = 0; j < d_; ++j) row[j] = Rat(f.normal[j]);
                    normals.push_back(std::move(row));
                }
            }
            if (row_space(normals).rank == d_) out.push_back(v);
        }
        return out;
    }

    template <class Vec>
    bool contains(const Vec& q) const {
        for (const Facet& f : facets_) {
            Rat s = 0;
            for (int j = 0; j < d_; ++j) s += Rat(f.normal[j]) * q[j];
            if (s > Rat(f.offset)) return false;
        }
        return true;
    }

    static Int factorial(int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    }

private:
    void build_initial(const std::vector<int>& init) {
        ref_.assign(d_, Rat(0));
        for (int i : init)
            for (int j = 0; j < d_; ++j) ref_[j] += Rat(pts_[i][j], static_cast<unsigned long>(d_ + 1));
        for (int skip = 0; skip <= d_; ++skip) {
            std::vector<int> v;
            for (int i = 0; i <= d_; ++i)
                if (i != skip) v.push_back(init[i]);
            add_facet(std::move(v));
        }
        std::vector<std::vector<Int>> m(d_, std::vector<Int>(d_));
        for (int r = 0; r < d_; ++r)
            for (int c = 0; c < d_; ++c) m[r][c] = pts_[init[r + 1]][c] - pts_[init[0]][c];
        vol6_ = abs(int_det(m));
    }

    void add_facet(std::vector<int> v) {
        std::sort(v.begin(), v.end());
        std::vector<LatticePoint> fp;
        for (int i : v) fp.push_back(pts_[i]);
        Facet f;
        f.vtx = std::move(v);
        f.normal = cofactor_normal(fp);
        f.offset = dot(f.normal, fp[0]);
        Rat side = dot_q(f.normal, ref_) - Rat(f.offset);
        if (side == 0) throw std::logic_error("hull: degenerate facet");
        if (side > 0) {
            for (Int& c : f.normal) c = -c;
            f.offset = -f.offset;
        }
        facets_.push_back(std::move(f));
    }

    void insert(int p) {
        // strict visibility only; facets whose hyperplane contains p stay,
        // the cone over the horizon re-covers the removed region
        std::vector<char> visible(facets_.size(), 0);
        bool any = false;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            Int o = dot(facets_[i].normal, pts_[p]) - facets_[i].offset;
            if (o > 0) {
                visible[i] = 1;
                any = true;
                vol6_ += o;
            }
        }
        if (!any) return;  // inside or on the hull
        // horizon = ridges covered exactly once by the visible facets
        std::map<std::vector<int>, int> ridge_count;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (!visible[i]) continue;
            for (int skip = 0; skip < d_; ++skip) {
                std::vector<int> r;
                for (int j = 0; j < d_; ++j)
                    if (j != skip) r.push_back(facets_[i].vtx[j]);
                ++ridge_count[std::move(r)];
            }
        }
        std::vector<Facet> kept;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (!visible[i]) kept.push_back(std::move(facets_[i]));
        facets_ = std::move(kept);
        for (const auto& [ridge, cnt] : ridge_count) {
            if (cnt != 1) continue;
            std::vector<int> v = ridge;
            v.push_back(p);
            add_facet(std::move(v));
        }
    }

    const std::vector<LatticePoint>& pts_;
    int d_;
    std::vector<Facet> facets_;
    std::vector<Rat> ref_;  // strictly interior reference point
    Int vol6_ = 0;          // d! times the accumulated volume
};

}  // namespace detail

/// Convex hull of a finite nonempty set of integer lattice points in Z^s,
/// with exact volume, membership, Minkowski arithmetic and lattice-point
/// enumeration. Values are immutable; derived geometry is computed once on
/// demand and shared.
class LatticePolytope {
public:
    LatticePolytope(int ambient_dim, std::vector<LatticePoint> generators)
        : dim_(ambient_dim), gens_(std::move(generators)) {
        if (dim_ < 1) throw std::invalid_argument("polytope: ambient dimension must be positive");
        if (gens_.empty()) throw std::invalid_argument("polytope: empty generator set");
        for (const auto& p : gens_)
            if (static_cast<int>(p.size()) != dim_)
                throw std::invalid_argument("polytope: inconsistent point dimension");
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    }

    static LatticePolytope hull(const std::vector<LatticePoint>& points) {
        if (points.empty()) throw std::invalid_argument("hull: empty point set");
        return LatticePolytope(static_cast<int>(points[0].size()), points);
    }

    static LatticePolytope point(LatticePoint p) {
        int d = static_cast<int>(p.size());
        return LatticePolytope(d, {std::move(p)});
    }

    static LatticePolytope origin(int dim) {
        return point(LatticePoint(static_cast<std::size_t>(dim), Int(0)));
    }

    int ambient_dim() const { return dim_; }
    const std::vector<LatticePoint>& generators() const { return gens_; }

    /// Extreme points, lexicographically sorted.
    const std::vector<LatticePoint>& vertices() const { return geometry().vertices; }

    /// Dimension of the affine hull.
    int affine_dim() const { return geometry().affine_rank; }

    /// Euclidean s-volume; 0 whenever the affine hull is lower-dimensional.
    Rat volume() const { return geometry().volume; }

    bool contains_point(const LatticePoint& q) const {
        std::vector<Rat> qq(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) qq[i] = Rat(q[i]);
        return contains_rational(qq);
    }

    bool contains_rational(const std::vector<Rat>& q) const {
        if (static_cast<int>(q.size()) != dim_)
            throw std::invalid_argument("contains: dimension mismatch");
        const Geo& g = geometry();
        // affine-hull equations first, then facets of the projected hull
        for (const auto& eq : g.affine_eqs) {
            Rat s = eq.second;
            for (int j = 0; j < dim_; ++j) s += eq.first[j] * q[j];
            if (s != 0) return false;
        }
        if (g.affine_rank == 0) return true;
        std::vector<Rat> proj;
        proj.reserve(g.pivots.size());
        for (int c : g.pivots) proj.push_back(q[c]);
        for (const auto& f : g.facets) {
            Rat s = 0;
            for (std::size_t j = 0; j < proj.size(); ++j) s += Rat(f.normal[j]) * proj[j];
            if (s > Rat(f.offset)) return false;
        }
        return true;
    }

    bool contains(const LatticePolytope& other) const {
        if (other.dim_ != dim_) throw std::invalid_argument("contains: dimension mismatch");
        for (const auto& v : other.vertices())
            if (!contains_point(v)) return false;
        return true;
    }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.dim_ == b.dim_ && a.vertices() == b.vertices();
    }
    friend bool operator!=(const LatticePolytope& a, const LatticePolytope& b) {
        return !(a == b);
    }

    friend LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
        if (a.dim_ != b.dim_)
            throw std::invalid_argument("minkowski_sum: dimension mismatch");
        std::vector<LatticePoint> sums;
        sums.reserve(a.vertices().size() * b.vertices().size());
        for (const auto& u : a.vertices()) {
            for (const auto& v : b.vertices()) {
                LatticePoint w(a.dim_);
                for (int j = 0; j < a.dim_; ++j) w[j] = u[j] + v[j];
                sums.push_back(std::move(w));
            }
        }
        return LatticePolytope(a.dim_, std::move(sums));
    }

    friend LatticePolytope operator+(const LatticePolytope& a, const LatticePolytope& b) {
        return minkowski_sum(a, b);
    }

    LatticePolytope dilate(const Int& c) const {
        if (c < 0) throw std::invalid_argument("dilate: negative factor");
        if (c == 0) return origin(dim_);
        std::vector<LatticePoint> pts;
        pts.reserve(vertices().size());
        for (const auto& v : vertices()) {
            LatticePoint w(dim_);
            for (int j = 0; j < dim_; ++j) w[j] = v[j] * c;
            pts.push_back(std::move(w));
        }
        return LatticePolytope(dim_, std::move(pts));
    }

    LatticePolytope translate(const LatticePoint& shift) const {
        std::vector<LatticePoint> pts;
        for (const auto& v : vertices()) {
            LatticePoint w(dim_);
            for (int j = 0; j < dim_; ++j) w[j] = v[j] + shift[j];
            pts.push_back(std::move(w));
        }
        return LatticePolytope(dim_, std::move(pts));
    }

    /// All integer points of the hull, lexicographically sorted.
    std::vector<LatticePoint> lattice_points() const {
        LatticePoint lo = vertices().front(), hi = vertices().front();
        for (const auto& v : vertices()) {
            for (int j = 0; j < dim_; ++j) {
                if (v[j] < lo[j]) lo[j] = v[j];
                if (v[j] > hi[j]) hi[j] = v[j];
            }
        }
        std::vector<LatticePoint> out;
        LatticePoint cur = lo;
        while (true) {
            if (contains_point(cur)) out.push_back(cur);
            int j = dim_ - 1;
            while (j >= 0) {
                if (cur[j] < hi[j]) {
                    ++cur[j];
                    for (int k = j + 1; k < dim_; ++k) cur[k] = lo[k];
                    break;
                }
                --j;
            }
            if (j < 0) break;
        }
        return out;
    }

    /// True iff the polytope is the hull of a downward-closed set of
    /// non-negative lattice points. Throws on negative coordinates.
    bool is_coideal() const {
        for (const auto& v : vertices())
            for (const auto& c : v)
                if (c < 0) throw std::invalid_argument("is_coideal: negative coordinates");
        std::vector<LatticePoint> pts = lattice_points();
        std::set<LatticePoint> have(pts.begin(), pts.end());
        for (const auto& p : pts) {
            for (int j = 0; j < dim_; ++j) {
                if (p[j] == 0) continue;
                LatticePoint q = p;
                --q[j];
                if (!have.count(q)) return false;
            }
        }
        return true;
    }

private:
    struct Geo {
        int affine_rank = 0;
        std::vector<LatticePoint> vertices;
        std::vector<int> pivots;  // projection coordinates when rank < dim
        // rational equations a.x + b = 0 cutting out the affine hull
        std::vector<std::pair<std::vector<Rat>, Rat>> affine_eqs;
        std::vector<detail::Facet> facets;  // facets of the projected hull
        Rat volume = 0;
    };

    const Geo& geometry() const {
        if (!geo_) geo_ = std::make_shared<Geo>(compute_geometry());
        return *geo_;
    }

    Geo compute_geometry() const {
        Geo g;
        const LatticePoint& base = gens_.front();
        std::vector<std::vector<Rat>> diffs;
        for (std::size_t i = 1; i < gens_.size(); ++i) {
            std::vector<Rat> row(dim_);
            for (int j = 0; j < dim_; ++j) row[j] = Rat(gens_[i][j] - base[j]);
            diffs.push_back(std::move(row));
        }
        detail::RowSpace rs = detail::row_space(diffs);
        g.affine_rank = rs.rank;
        if (rs.rank == 0) {
            g.vertices = {base};
            return g;
        }
        g.pivots = rs.pivots;
        // affine-hull equations: each non-pivot coordinate is a fixed
        // rational combination of the pivot coordinates
        if (rs.rank < dim_) {
            std::set<int> pivset(rs.pivots.begin(), rs.pivots.end());
            for (int c = 0; c < dim_; ++c) {
                if (pivset.count(c)) continue;
                std::vector<Rat> a(dim_, Rat(0));
                a[c] = Rat(-1);
                for (int r = 0; r < rs.rank; ++r) a[rs.pivots[r]] = rs.rref[r][c];
                Rat b = Rat(base[c]);
                for (int r = 0; r < rs.rank; ++r) b -= rs.rref[r][c] * Rat(base[rs.pivots[r]]);
                g.affine_eqs.emplace_back(std::move(a), std::move(b));
            }
        }
        // project to the pivot coordinates; the projection is injective on
        // the affine hull
        std::vector<LatticePoint> proj;
        proj.reserve(gens_.size());
        for (const auto& p : gens_) {
            LatticePoint q;
            q.reserve(rs.pivots.size());
            for (int c : rs.pivots) q.push_back(p[c]);
            proj.push_back(std::move(q));
        }
        std::vector<int> init = affine_basis(proj, rs.rank);
        if (rs.rank == 1) {
            // segment: min and max along the single projected coordinate
            int lo = 0, hi = 0;
            for (int i = 1; i < static_cast<int>(proj.size()); ++i) {
                if (proj[i][0] < proj[lo][0]) lo = i;
                if (proj[i][0] > proj[hi][0]) hi = i;
            }
            g.vertices = {gens_[lo], gens_[hi]};
            std::sort(g.vertices.begin(), g.vertices.end());
            detail::Facet f1{{hi}, {Int(1)}, proj[hi][0]};
            detail::Facet f2{{lo}, {Int(-1)}, -proj[lo][0]};
            g.facets = {f1, f2};
            if (rs.rank == dim_) g.volume = Rat(proj[hi][0] - proj[lo][0]);
            return g;
        }
        detail::HullEngine engine(proj, init);
        g.facets = engine.facets();
        for (int idx : engine.vertex_indices()) g.vertices.push_back(gens_[idx]);
        std::sort(g.vertices.begin(), g.vertices.end());
        if (rs.rank == dim_) g.volume = engine.volume();
        return g;
    }

    /// Indices of rank+1 affinely independent points, greedily chosen.
    static std::vector<int> affine_basis(const std::vector<LatticePoint>& pts, int rank) {
        std::vector<int> chosen = {0};
        std::vector<std::vector<Rat>> rows;
        for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
            if (static_cast<int>(chosen.size()) == rank + 1) break;
            std::vector<Rat> row(pts[0].size());
            for (std::size_t j = 0; j < pts[0].size(); ++j) row[j] = Rat(pts[i][j] - pts[0][j]);
            rows.push_back(row);
            if (detail::row_space(rows).rank == static_cast<int>(rows.size()))
                chosen.push_back(i);
            else
                rows.pop_back();
        }
        if (static_cast<int>(chosen.size()) != rank + 1)
            throw std::logic_error("affine_basis: rank mismatch");
        return chosen;
    }

    int dim_;
    std::vector<LatticePoint> gens_;
    mutable std::shared_ptr<Geo> geo_;
};

/// Blocks selecting the coordinates of a standard simplex; see
/// standard_simplex in jet.hpp for the jet-layout aware constructors.
inline LatticePolytope unit_simplex_on(int ambient_dim, const std::vector<int>& coords) {
    std::vector<LatticePoint> pts;
    pts.push_back(LatticePoint(static_cast<std::size_t>(ambient_dim), Int(0)));
    for (int c : coords) {
        if (c < 0 || c >= ambient_dim)
            throw std::invalid_argument("unit_simplex_on: coordinate out of range");
        LatticePoint e(static_cast<std::size_t>(ambient_dim), Int(0));
        e[c] = 1;
        pts.push_back(std::move(e));
    }
    return LatticePolytope(ambient_dim, std::move(pts));
}

}  // namespace diffvol

#endif
