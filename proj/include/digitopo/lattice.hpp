#pragma once

// Integer lattice geometry on Z^n: points, translations, axis-aligned
// k-cubes, finite windows and the cube combinatorics used by the
// separation checks.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace digitopo {

inline constexpr int kMaxDim = 6;

/// Thrown for every contract violation in the library (bad dimension,
/// out-of-range arguments, malformed input).
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(int expected, int actual)
        : Error("dimension mismatch: expected " + std::to_string(expected) +
                ", got " + std::to_string(actual)) {}
};

inline void require_dimension(int n) {
    if (n < 1 || n > kMaxDim) {
        throw Error("ambient dimension must be in [1," + std::to_string(kMaxDim) +
                    "], got " + std::to_string(n));
    }
}

namespace detail {

// Fixed-capacity integer vector shared by Point and Translation.
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(int n) : dim_(static_cast<std::uint8_t>(n)) { require_dimension(n); }
    IntVec(std::initializer_list<int> coords) : IntVec(std::span<const int>(coords.begin(), coords.size())) {}
    explicit IntVec(std::span<const int> coords) {
        require_dimension(static_cast<int>(coords.size()));
        dim_ = static_cast<std::uint8_t>(coords.size());
        std::copy(coords.begin(), coords.end(), c_.begin());
    }

    int dim() const noexcept { return dim_; }
    int operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
    std::span<const int> coords() const noexcept { return {c_.data(), dim_}; }

    bool is_zero() const noexcept {
        return std::all_of(c_.begin(), c_.begin() + dim_, [](int v) { return v == 0; });
    }

    friend bool operator==(const IntVec&, const IntVec&) = default;
    friend std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) noexcept {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        for (int i = 0; i < a.dim_; ++i) {
            if (auto c = a[i] <=> b[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept {
        std::size_t h = dim_;
        for (int i = 0; i < dim_; ++i) {
            h ^= std::hash<int>{}(c_[static_cast<std::size_t>(i)]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim_; ++i) {
            if (i) s += ',';
            s += std::to_string(c_[static_cast<std::size_t>(i)]);
        }
        return s + ")";
    }

private:
    std::array<int, kMaxDim> c_{};
    std::uint8_t dim_ = 0;
};

}  // namespace detail

/// A point of Z^n.
class Point : public detail::IntVec {
public:
    using IntVec::IntVec;
    static Point origin(int n) { return Point(n); }
};

/// A lattice translation; composition is componentwise addition.
class Translation : public detail::IntVec {
public:
    using IntVec::IntVec;
    static Translation identity(int n) { return Translation(n); }
    static Translation unit(int n, int axis, int sign = 1) {
        Translation t(n);
        t[axis] = sign;
        return t;
    }
};

inline void require_same_dim(const detail::IntVec& a, const detail::IntVec& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

inline Point operator+(Point p, const Translation& t) {
    require_same_dim(p, t);
    for (int i = 0; i < p.dim(); ++i) p[i] += t[i];
    return p;
}

inline Point operator-(Point p, const Translation& t) {
    require_same_dim(p, t);
    for (int i = 0; i < p.dim(); ++i) p[i] -= t[i];
    return p;
}

/// The translation carrying `from` onto `to`.
inline Translation displacement(const Point& from, const Point& to) {
    require_same_dim(from, to);
    Translation t(from.dim());
    for (int i = 0; i < from.dim(); ++i) t[i] = to[i] - from[i];
    return t;
}

inline Translation operator+(Translation a, const Translation& b) {
    require_same_dim(a, b);
    for (int i = 0; i < a.dim(); ++i) a[i] += b[i];
    return a;
}

inline Translation operator-(Translation t) {
    for (int i = 0; i < t.dim(); ++i) t[i] = -t[i];
    return t;
}

inline Translation operator*(int m, Translation t) {
    for (int i = 0; i < t.dim(); ++i) t[i] *= m;
    return t;
}

inline int chebyshev_distance(const Point& p, const Point& q) {
    require_same_dim(p, q);
    int d = 0;
    for (int i = 0; i < p.dim(); ++i) d = std::max(d, std::abs(p[i] - q[i]));
    return d;
}

inline int l1_distance(const Point& p, const Point& q) {
    require_same_dim(p, q);
    int d = 0;
    for (int i = 0; i < p.dim(); ++i) d += std::abs(p[i] - q[i]);
    return d;
}

/// A translation is simple when it is nonzero and not a proper integer
/// multiple of another lattice translation.
inline bool is_simple_translation(const Translation& t) {
    int g = 0;
    for (int v : t.coords()) g = std::gcd(g, std::abs(v));
    return g == 1;
}

/// Finite set of points of a common dimension, iterated in lexicographic order.
class PointSet {
public:
    using const_iterator = std::set<Point>::const_iterator;

    explicit PointSet(int n) : dim_(n) { require_dimension(n); }
    PointSet(int n, std::initializer_list<Point> pts) : PointSet(n) {
        for (const auto& p : pts) insert(p);
    }
    template <class Range>
    static PointSet from(int n, const Range& pts) {
        PointSet s(n);
        for (const auto& p : pts) s.insert(p);
        return s;
    }

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return pts_.size(); }
    bool empty() const noexcept { return pts_.empty(); }
    const_iterator begin() const noexcept { return pts_.begin(); }
    const_iterator end() const noexcept { return pts_.end(); }
    const Point& front() const { return *pts_.begin(); }

    bool contains(const Point& p) const {
        check(p);
        return pts_.contains(p);
    }
    /// Returns false when the point was already present.
    bool insert(const Point& p) {
        check(p);
        return pts_.insert(p).second;
    }
    bool erase(const Point& p) { return pts_.erase(p) > 0; }

    bool is_subset_of(const PointSet& other) const {
        return std::includes(other.begin(), other.end(), begin(), end());
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    void check(const Point& p) const {
        if (p.dim() != dim_) throw DimensionMismatch(dim_, p.dim());
    }

    int dim_;
    std::set<Point> pts_;
};

inline PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet out = a;
    for (const auto& p : b) out.insert(p);
    return out;
}

inline PointSet set_intersection(const PointSet& a, const PointSet& b) {
    PointSet out(a.dim());
    for (const auto& p : a)
        if (b.contains(p)) out.insert(p);
    return out;
}

inline PointSet set_difference(const PointSet& a, const PointSet& b) {
    PointSet out(a.dim());
    for (const auto& p : a)
        if (!b.contains(p)) out.insert(p);
    return out;
}

inline PointSet translated(const PointSet& s, const Translation& t) {
    PointSet out(s.dim());
    for (const auto& p : s) out.insert(p + t);
    return out;
}

/// Axis-aligned box [lo, hi] of Z^n, bounds inclusive.
class Window {
public:
    Window(Point lo, Point hi) : lo_(lo), hi_(hi) {
        require_same_dim(lo_, hi_);
        for (int i = 0; i < lo_.dim(); ++i) {
            if (lo_[i] > hi_[i]) throw Error("window bounds inverted on axis " + std::to_string(i));
        }
    }

    /// The cube [c - r, c + r]^n.
    static Window around(const Point& c, int r) {
        Point lo = c, hi = c;
        for (int i = 0; i < c.dim(); ++i) {
            lo[i] -= r;
            hi[i] += r;
        }
        return {lo, hi};
    }

    /// Smallest window containing `s`; throws on an empty set.
    static Window bounding_box(const PointSet& s) {
        if (s.empty()) throw Error("bounding box of an empty set");
        Point lo = s.front(), hi = s.front();
        for (const auto& p : s) {
            for (int i = 0; i < p.dim(); ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        }
        return {lo, hi};
    }

    int dim() const noexcept { return lo_.dim(); }
    const Point& lo() const noexcept { return lo_; }
    const Point& hi() const noexcept { return hi_; }
    int extent(int axis) const noexcept { return hi_[axis] - lo_[axis] + 1; }

    std::size_t volume() const noexcept {
        std::size_t v = 1;
        for (int i = 0; i < dim(); ++i) v *= static_cast<std::size_t>(extent(i));
        return v;
    }

    bool contains(const Point& p) const {
        require_same_dim(lo_, p);
        for (int i = 0; i < dim(); ++i) {
            if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
        }
        return true;
    }

    bool contains(const PointSet& s) const {
        return std::all_of(s.begin(), s.end(), [&](const Point& p) { return contains(p); });
    }

    bool contains(const Window& w) const { return contains(w.lo_) && contains(w.hi_); }

    /// True when p lies on the outermost layer of the window.
    bool on_shell(const Point& p) const {
        for (int i = 0; i < dim(); ++i) {
            if (p[i] == lo_[i] || p[i] == hi_[i]) return true;
        }
        return false;
    }

    Window dilated(int r) const {
        Point lo = lo_, hi = hi_;
        for (int i = 0; i < dim(); ++i) {
            lo[i] -= r;
            hi[i] += r;
        }
        return {lo, hi};
    }

    /// Row-major index of a contained point (last axis fastest).
    std::size_t index_of(const Point& p) const {
        std::size_t idx = 0;
        for (int i = 0; i < dim(); ++i) {
            idx = idx * static_cast<std::size_t>(extent(i)) + static_cast<std::size_t>(p[i] - lo_[i]);
        }
        return idx;
    }

    Point point_at(std::size_t idx) const {
        Point p(dim());
        for (int i = dim() - 1; i >= 0; --i) {
            auto e = static_cast<std::size_t>(extent(i));
            p[i] = lo_[i] + static_cast<int>(idx % e);
            idx /= e;
        }
        return p;
    }

    /// Visits every point in lexicographic order.
    template <class F>
    void for_each(F&& f) const {
        const std::size_t n = volume();
        for (std::size_t i = 0; i < n; ++i) f(point_at(i));
    }

    PointSet points() const {
        PointSet s(dim());
        for_each([&](const Point& p) { s.insert(p); });
        return s;
    }

    friend bool operator==(const Window&, const Window&) = default;

private:
    Point lo_;
    Point hi_;
};

/// Visits every offset in {-1,0,1}^n except the zero vector, in lexicographic order.
template <class F>
void for_each_unit_offset(int n, F&& f) {
    Translation t(n);
    for (int i = 0; i < n; ++i) t[i] = -1;
    while (true) {
        if (!t.is_zero()) f(static_cast<const Translation&>(t));
        int i = n - 1;
        while (i >= 0 && t[i] == 1) t[i--] = -1;
        if (i < 0) return;
        ++t[i];
    }
}

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Number of k-faces of an n-dimensional cube: C(n,k) * 2^(n-k).
inline std::int64_t count_k_faces(int n, int k) {
    if (n < 0 || n > kMaxDim || k < 0 || k > n) {
        throw Error("count_k_faces requires 0 <= k <= n <= " + std::to_string(kMaxDim));
    }
    return binomial(n, k) << (n - k);
}

/// Axis-aligned k-cube: the 2^k points anchor + sum e_i * unit(axis_i), e_i in {0,1}.
/// The anchor is the componentwise-minimal corner, axes strictly increasing.
class Cube {
public:
    Cube(Point anchor, std::vector<int> axes) : anchor_(anchor), axes_(std::move(axes)) {
        for (std::size_t i = 0; i < axes_.size(); ++i) {
            if (axes_[i] < 0 || axes_[i] >= anchor_.dim()) throw Error("cube axis out of range");
            if (i > 0 && axes_[i] <= axes_[i - 1]) throw Error("cube axes must be strictly increasing");
        }
    }

    int dim() const noexcept { return static_cast<int>(axes_.size()); }
    int ambient_dim() const noexcept { return anchor_.dim(); }
    const Point& anchor() const noexcept { return anchor_; }
    const std::vector<int>& axes() const noexcept { return axes_; }

    bool has_axis(int a) const { return std::binary_search(axes_.begin(), axes_.end(), a); }

    /// Corner selected by the low dim() bits of `mask` (bit i -> axes()[i]).
    Point corner(unsigned mask) const {
        Point p = anchor_;
        for (std::size_t i = 0; i < axes_.size(); ++i) {
            if (mask & (1u << i)) ++p[axes_[i]];
        }
        return p;
    }

    bool contains(const Point& p) const {
        require_same_dim(anchor_, p);
        for (int i = 0; i < ambient_dim(); ++i) {
            int d = p[i] - anchor_[i];
            if (has_axis(i) ? (d < 0 || d > 1) : d != 0) return false;
        }
        return true;
    }

    std::string str() const {
        std::string s = anchor_.str() + "+{";
        for (std::size_t i = 0; i < axes_.size(); ++i) s += (i ? "," : "") + std::to_string(axes_[i]);
        return s + "}";
    }

    friend bool operator==(const Cube&, const Cube&) = default;
    friend auto operator<=>(const Cube& a, const Cube& b) {
        if (auto c = a.anchor_ <=> b.anchor_; c != 0) return c;
        return a.axes_ <=> b.axes_;
    }

private:
    Point anchor_;
    std::vector<int> axes_;
};

inline PointSet cube_points(const Cube& c) {
    PointSet s(c.ambient_dim());
    for (unsigned m = 0; m < (1u << c.dim()); ++m) s.insert(c.corner(m));
    return s;
}

/// All j-subcubes of `c`: j of its axes stay free, the rest are fixed at offset 0 or 1.
inline std::vector<Cube> subcubes(const Cube& c, int j) {
    const int k = c.dim();
    if (j < 0 || j > k) throw Error("subcube dimension out of range");
    std::vector<Cube> out;
    for (unsigned free = 0; free < (1u << k); ++free) {
        if (std::popcount(free) != j) continue;
        std::vector<int> axes;
        std::vector<int> fixed;
        for (int i = 0; i < k; ++i) (free & (1u << i) ? axes : fixed).push_back(c.axes()[static_cast<std::size_t>(i)]);
        for (unsigned offs = 0; offs < (1u << fixed.size()); ++offs) {
            Point a = c.anchor();
            for (std::size_t f = 0; f < fixed.size(); ++f) {
                if (offs & (1u << f)) ++a[fixed[f]];
            }
            out.emplace_back(a, axes);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A (k-2)-subcube `base` of a k-cube together with the two unit translations
/// along the remaining axes pointing into the cube, so that base, first(base),
/// second(base) and first(second(base)) partition the cube.
struct CubeDecomposition {
    Cube base;
    Translation first;
    Translation second;

    friend bool operator==(const CubeDecomposition&, const CubeDecomposition&) = default;
};

inline std::vector<CubeDecomposition> cube_decompositions(const Cube& c) {
    const int k = c.dim();
    if (k < 2) throw Error("cube decomposition requires a cube of dimension >= 2");
    const int n = c.ambient_dim();
    std::vector<CubeDecomposition> out;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const int ai = c.axes()[static_cast<std::size_t>(i)];
            const int aj = c.axes()[static_cast<std::size_t>(j)];
            std::vector<int> rest;
            for (int a : c.axes())
                if (a != ai && a != aj) rest.push_back(a);
            for (int oi = 0; oi <= 1; ++oi) {
                for (int oj = 0; oj <= 1; ++oj) {
                    Point a = c.anchor();
                    a[ai] += oi;
                    a[aj] += oj;
                    out.push_back({Cube(a, rest), Translation::unit(n, ai, oi ? -1 : 1),
                                   Translation::unit(n, aj, oj ? -1 : 1)});
                }
            }
        }
    }
    return out;
}

/// Every k-cube whose points all lie in `w`, ordered by axes then anchor.
inline std::vector<Cube> enumerate_cubes_in_window(const Window& w, int k) {
    const int n = w.dim();
    if (k < 0 || k > n) throw Error("cube dimension out of range");
    std::vector<Cube> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> axes;
        Point hi = w.hi();
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                axes.push_back(i);
                --hi[i];
            }
        }
        bool fits = true;
        for (int i = 0; i < n; ++i) fits = fits && hi[i] >= w.lo()[i];
        if (!fits) continue;
        Window(w.lo(), hi).for_each([&](const Point& a) { out.emplace_back(a, axes); });
    }
    return out;
}

}  // namespace digitopo

template <>
struct std::hash<digitopo::Point> {
    std::size_t operator()(const digitopo::Point& p) const noexcept { return p.hash(); }
};
