#pragma once

// Adjacency relations on Z^n (proto, omega, cubical, Khalimsky) and
// connected-component computation on finite point sets and windowed
// complements.

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "digitopo/lattice.hpp"

namespace digitopo {

/// p lies in the minimal open neighborhood of q in the Khalimsky topology
/// (even coordinates open): coordinatewise p_i == q_i, or |p_i - q_i| == 1
/// with q_i odd.
inline bool khalimsky_below(const Point& p, const Point& q) {
    require_same_dim(p, q);
    for (int i = 0; i < p.dim(); ++i) {
        const int d = p[i] - q[i];
        if (d == 0) continue;
        if (d != 1 && d != -1) return false;
        if ((q[i] & 1) == 0) return false;
    }
    return true;
}

class AdjacencySpec {
public:
    enum class Kind : std::uint8_t { Proto, Omega, Cubical, Khalimsky };

    static AdjacencySpec proto(int n) { return {Kind::Proto, n, n - 1}; }
    static AdjacencySpec omega(int n) { return {Kind::Omega, n, 0}; }
    static AdjacencySpec cubical(int n, int k) {
        if (k < 0 || k > n - 1) {
            throw Error("cubical adjacency requires 0 <= k <= n-1, got k=" + std::to_string(k));
        }
        return {Kind::Cubical, n, k};
    }
    static AdjacencySpec khalimsky(int n) { return {Kind::Khalimsky, n, -1}; }

    /// Parses one of `proto`, `omega`, `cubical:<k>`, `khalimsky`.
    static AdjacencySpec parse(const std::string& s, int n) {
        require_dimension(n);
        if (s == "proto") return proto(n);
        if (s == "omega") return omega(n);
        if (s == "khalimsky") return khalimsky(n);
        if (s.rfind("cubical:", 0) == 0) {
            const std::string digits = s.substr(8);
            if (digits.empty() || digits.size() > 2 ||
                digits.find_first_not_of("0123456789") != std::string::npos) {
                throw Error("malformed cubical adjacency '" + s + "'");
            }
            return cubical(n, std::stoi(digits));
        }
        throw Error("unknown adjacency '" + s + "' (expected proto | omega | cubical:<k> | khalimsky)");
    }

    Kind kind() const noexcept { return kind_; }
    int dim() const noexcept { return n_; }
    bool is_khalimsky() const noexcept { return kind_ == Kind::Khalimsky; }
    /// Face dimension of the equivalent cubical adjacency; empty for Khalimsky.
    std::optional<int> cubical_order() const {
        if (is_khalimsky()) return std::nullopt;
        return k_;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Proto: return "proto";
            case Kind::Omega: return "omega";
            case Kind::Cubical: return "cubical:" + std::to_string(k_);
            case Kind::Khalimsky: return "khalimsky";
        }
        return {};
    }

    /// Adjacency test for two points at the given offset, without the
    /// irreflexivity or dimension checks.
    bool adjacent_unchecked(const Point& p, const Point& q) const {
        int linf = 0, l1 = 0;
        for (int i = 0; i < n_; ++i) {
            const int d = std::abs(p[i] - q[i]);
            linf = std::max(linf, d);
            l1 += d;
        }
        if (linf != 1) return false;
        if (is_khalimsky()) return khalimsky_below(p, q) || khalimsky_below(q, p);
        return l1 <= n_ - k_;
    }

    friend bool operator==(const AdjacencySpec&, const AdjacencySpec&) = default;

private:
    AdjacencySpec(Kind kind, int n, int k) : kind_(kind), n_(n), k_(k) { require_dimension(n); }

    Kind kind_;
    int n_;
    int k_;
};

inline void require_spec_dim(const AdjacencySpec& a, const detail::IntVec& p) {
    if (a.dim() != p.dim()) throw DimensionMismatch(a.dim(), p.dim());
}

inline bool are_adjacent(const AdjacencySpec& a, const Point& p, const Point& q) {
    require_spec_dim(a, p);
    require_spec_dim(a, q);
    return a.adjacent_unchecked(p, q);
}

/// Visits the neighbors of p in lexicographic order without allocating.
template <class F>
void for_each_neighbor(const AdjacencySpec& a, const Point& p, F&& f) {
    require_spec_dim(a, p);
    for_each_unit_offset(a.dim(), [&](const Translation& t) {
        const Point q = p + t;
        if (a.adjacent_unchecked(p, q)) f(q);
    });
}

inline PointSet neighbors(const AdjacencySpec& a, const Point& p) {
    PointSet out(a.dim());
    for_each_neighbor(a, p, [&](const Point& q) { out.insert(q); });
    return out;
}

/// Closed form sum_{i=k}^{n-1} C(n,i) 2^(n-i) for cubical adjacencies.
inline std::int64_t neighbor_count(const AdjacencySpec& a) {
    const auto k = a.cubical_order();
    if (!k) throw Error("neighbor_count has no closed form for the Khalimsky adjacency");
    std::int64_t total = 0;
    for (int i = *k; i <= a.dim() - 1; ++i) total += binomial(a.dim(), i) << (a.dim() - i);
    return total;
}

struct ComponentPartition {
    std::vector<PointSet> blocks;
    std::optional<std::size_t> unbounded;

    std::size_t size() const noexcept { return blocks.size(); }

    /// Index of the block containing p, if any.
    std::optional<std::size_t> block_of(const Point& p) const {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].contains(p)) return i;
        }
        return std::nullopt;
    }
};

namespace detail {

// Blocks ordered by their lexicographically smallest member.
inline void sort_blocks(ComponentPartition& part) {
    std::vector<std::size_t> order(part.blocks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return part.blocks[x].front() < part.blocks[y].front(); });
    ComponentPartition sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (part.unbounded && *part.unbounded == order[i]) sorted.unbounded = i;
        sorted.blocks.push_back(std::move(part.blocks[order[i]]));
    }
    part = std::move(sorted);
}

}  // namespace detail

/// Maximal connected blocks of `s` under `a`.
inline ComponentPartition components(const AdjacencySpec& a, const PointSet& s) {
    if (s.dim() != a.dim()) throw DimensionMismatch(a.dim(), s.dim());
    ComponentPartition part;
    PointSet seen(s.dim());
    for (const auto& start : s) {
        if (seen.contains(start)) continue;
        PointSet block(s.dim());
        std::deque<Point> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            const Point p = queue.front();
            queue.pop_front();
            block.insert(p);
            for_each_neighbor(a, p, [&](const Point& q) {
                if (s.contains(q) && seen.insert(q)) queue.push_back(q);
            });
        }
        part.blocks.push_back(std::move(block));
    }
    // Iteration starts from ascending members, so blocks are already ordered.
    return part;
}

inline bool is_connected(const AdjacencySpec& a, const PointSet& s) { return components(a, s).size() <= 1; }

/// Dense labelling of the complement of a set inside a window: label[i] is
/// the block index of window.point_at(i), or -1 for points of the set.
struct ComplementLabels {
    Window window;
    std::vector<int> label;
    ComponentPartition partition;

    int label_of(const Point& p) const {
        if (!window.contains(p)) return partition.unbounded ? static_cast<int>(*partition.unbounded) : -1;
        return label[window.index_of(p)];
    }
};

/// Components of the complement of m, computed inside `w` dilated by 2.
/// Every block touching the outer shell of the dilated window is merged into
/// a single block flagged unbounded. Without a window, the bounding box of m
/// is used (or a unit window at the origin when m is empty).
inline ComplementLabels complement_labels(const AdjacencySpec& a, const PointSet& m,
                                          std::optional<Window> w = std::nullopt) {
    if (m.dim() != a.dim()) throw DimensionMismatch(a.dim(), m.dim());
    if (!w) w = m.empty() ? Window::around(Point::origin(m.dim()), 0) : Window::bounding_box(m);
    if (w->dim() != m.dim()) throw DimensionMismatch(m.dim(), w->dim());
    if (!w->contains(m)) throw Error("set does not lie inside the window");

    const Window big = w->dilated(2);
    const std::size_t total = big.volume();
    std::vector<int> label(total, -2);
    for (const auto& p : m) label[big.index_of(p)] = -1;

    std::vector<std::vector<std::size_t>> members;
    std::vector<bool> touches_shell;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < total; ++start) {
        if (label[start] != -2) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        touches_shell.push_back(false);
        label[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            members.back().push_back(cur);
            const Point p = big.point_at(cur);
            if (big.on_shell(p)) touches_shell.back() = true;
            for_each_neighbor(a, p, [&](const Point& q) {
                if (!big.contains(q)) return;
                const std::size_t qi = big.index_of(q);
                if (label[qi] == -2) {
                    label[qi] = id;
                    stack.push_back(qi);
                }
            });
        }
    }

    // Merge shell-touching blocks, then renumber by smallest member.
    std::vector<int> remap(members.size(), -1);
    int outer = -1;
    std::vector<std::vector<std::size_t>> merged;
    for (std::size_t b = 0; b < members.size(); ++b) {
        if (touches_shell[b]) {
            if (outer < 0) {
                outer = static_cast<int>(merged.size());
                merged.emplace_back();
            }
            remap[b] = outer;
        } else {
            remap[b] = static_cast<int>(merged.size());
            merged.emplace_back();
        }
        auto& dst = merged[static_cast<std::size_t>(remap[b])];
        dst.insert(dst.end(), members[b].begin(), members[b].end());
    }

    ComponentPartition part;
    for (auto& idx : merged) {
        PointSet block(m.dim());
        for (std::size_t i : idx) block.insert(big.point_at(i));
        part.blocks.push_back(std::move(block));
    }
    if (outer >= 0) part.unbounded = static_cast<std::size_t>(outer);

    // Sorting reorders blocks; rebuild the label map from the final order.
    detail::sort_blocks(part);
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        for (const auto& p : part.blocks[b]) label[big.index_of(p)] = static_cast<int>(b);
    }
    return {big, std::move(label), std::move(part)};
}

inline ComponentPartition complement_components(const AdjacencySpec& a, const PointSet& m,
                                                std::optional<Window> w = std::nullopt) {
    return complement_labels(a, m, std::move(w)).partition;
}

}  // namespace digitopo
