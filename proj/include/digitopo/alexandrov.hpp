#pragma once

// Finite Alexandrov spaces given by their minimal open neighborhoods:
// closure operators, induced adjacency, dimension and n-surface
// recognition. The Khalimsky plane and its subspaces are built with
// khalimsky_space_on.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "digitopo/adjacency.hpp"
#include "digitopo/lattice.hpp"

namespace digitopo {

template <class Element>
class FiniteAlexandrovSpace {
public:
    using Set = std::set<Element>;

    /// `min_nbhd` maps every element to its minimal open neighborhood. Throws
    /// unless the map is reflexive, transitive and T0.
    explicit FiniteAlexandrovSpace(std::map<Element, Set> min_nbhd) : nbhd_(std::move(min_nbhd)) {
        for (const auto& [p, u] : nbhd_) {
            if (!u.contains(p)) throw Error("minimal neighborhood must contain its point");
            for (const auto& q : u) {
                auto it = nbhd_.find(q);
                if (it == nbhd_.end()) throw Error("minimal neighborhood leaves the space");
                if (!std::includes(u.begin(), u.end(), it->second.begin(), it->second.end())) {
                    throw Error("minimal neighborhoods are not transitive");
                }
                if (q != p && it->second.contains(p)) throw Error("space is not T0");
            }
        }
        for (const auto& [p, u] : nbhd_) {
            for (const auto& q : u) closed_[q].insert(p);
        }
    }

    std::size_t size() const noexcept { return nbhd_.size(); }
    bool contains(const Element& p) const { return nbhd_.contains(p); }

    Set points() const {
        Set s;
        for (const auto& [p, u] : nbhd_) s.insert(p);
        return s;
    }

    const Set& min_nbhd(const Element& p) const { return nbhd_.at(checked(p)); }

    /// Minimal closed set containing p: every q whose neighborhood contains p.
    const Set& closure_of(const Element& p) const { return closed_.at(checked(p)); }

    /// (U(p) ∪ C(p)) \ {p}.
    Set induced_adjacency(const Element& p) const {
        Set out = min_nbhd(p);
        const auto& c = closure_of(p);
        out.insert(c.begin(), c.end());
        out.erase(p);
        return out;
    }

    Set u_closure(const Set& m) const {
        Set out;
        for (const auto& q : m) {
            const auto& u = min_nbhd(q);
            out.insert(u.begin(), u.end());
        }
        return out;
    }

    Set c_closure(const Set& m) const {
        Set out;
        for (const auto& q : m) {
            const auto& c = closure_of(q);
            out.insert(c.begin(), c.end());
        }
        return out;
    }

    /// Subspace topology: neighborhoods intersected with `subset`.
    FiniteAlexandrovSpace subspace(const Set& subset) const {
        std::map<Element, Set> nb;
        for (const auto& p : subset) {
            Set u;
            for (const auto& q : min_nbhd(p))
                if (subset.contains(q)) u.insert(q);
            nb.emplace(p, std::move(u));
        }
        return FiniteAlexandrovSpace(std::move(nb));
    }

    /// Connectedness under the induced adjacency, which coincides with
    /// topological connectedness for Alexandrov spaces. The empty space is
    /// connected.
    bool is_connected() const {
        if (nbhd_.empty()) return true;
        Set seen{nbhd_.begin()->first};
        std::deque<Element> queue{nbhd_.begin()->first};
        while (!queue.empty()) {
            const Element p = queue.front();
            queue.pop_front();
            for (const auto& q : induced_adjacency(p)) {
                if (seen.insert(q).second) queue.push_back(q);
            }
        }
        return seen.size() == nbhd_.size();
    }

    /// 0 when U(p) = {p}; otherwise 1 + dimension of the subspace U(p) \ {p}.
    /// Finite T0 spaces always have finite dimension.
    int point_dimension(const Element& p) const {
        std::map<Set, int> memo;
        return point_dimension_impl(p, memo);
    }

    /// Maximum point dimension; -1 for the empty space.
    int space_dimension() const {
        std::map<Set, int> memo;
        return space_dimension_impl(memo);
    }

    /// k = 0: exactly two points, disconnected. k > 0: connected and the
    /// subspace on every induced adjacency is a (k-1)-surface.
    bool is_k_surface(int k) const {
        if (k < 0) throw Error("surface dimension must be non-negative");
        if (k == 0) return nbhd_.size() == 2 && !is_connected();
        if (nbhd_.empty() || !is_connected()) return false;
        for (const auto& [p, u] : nbhd_) {
            if (!subspace(induced_adjacency(p)).is_k_surface(k - 1)) return false;
        }
        return true;
    }

private:
    const Element& checked(const Element& p) const {
        if (!nbhd_.contains(p)) throw Error("element is not part of the space");
        return p;
    }

    int point_dimension_impl(const Element& p, std::map<Set, int>& memo) const {
        Set rest = min_nbhd(p);
        rest.erase(p);
        if (rest.empty()) return 0;
        if (auto it = memo.find(rest); it != memo.end()) return 1 + it->second;
        const int d = subspace(rest).space_dimension_impl(memo);
        memo.emplace(std::move(rest), d);
        return 1 + d;
    }

    int space_dimension_impl(std::map<Set, int>& memo) const {
        int d = -1;
        for (const auto& [p, u] : nbhd_) d = std::max(d, point_dimension_impl(p, memo));
        return d;
    }

    std::map<Element, Set> nbhd_;
    std::map<Element, Set> closed_;
};

using KhalimskySpace = FiniteAlexandrovSpace<Point>;

/// Khalimsky topology restricted to `points`: the minimal neighborhood of p is
/// the product of {x} (x even) or {x-1, x, x+1} (x odd), intersected with the
/// point set.
inline KhalimskySpace khalimsky_space_on(const PointSet& points) {
    std::map<Point, std::set<Point>> nb;
    for (const auto& p : points) {
        std::set<Point> u{p};
        for_each_unit_offset(p.dim(), [&](const Translation& t) {
            const Point q = p + t;
            if (khalimsky_below(q, p) && points.contains(q)) u.insert(q);
        });
        nb.emplace(p, std::move(u));
    }
    return KhalimskySpace(std::move(nb));
}

inline std::set<Point> to_std_set(const PointSet& s) { return {s.begin(), s.end()}; }

inline PointSet to_point_set(int n, const std::set<Point>& s) { return PointSet::from(n, s); }

}  // namespace digitopo
