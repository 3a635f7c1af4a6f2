#pragma once

// Verifiers for digital (n-1)-manifolds: the separation property, the four
// manifold axioms, double points and good pairs of adjacencies. Every check
// is an exhaustive search over a finite window and reports a concrete
// witness on failure.

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digitopo/adjacency.hpp"
#include "digitopo/lattice.hpp"

namespace digitopo {

/// (foreground, background): `alpha` connects the set M, `beta` its complement.
struct AdjacencyPair {
    AdjacencySpec alpha;
    AdjacencySpec beta;

    AdjacencyPair(AdjacencySpec a, AdjacencySpec b) : alpha(a), beta(b) {
        if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    }

    int dim() const noexcept { return alpha.dim(); }
    std::string str() const { return "(" + alpha.str() + ", " + beta.str() + ")"; }

    friend bool operator==(const AdjacencyPair&, const AdjacencyPair&) = default;
};

// ---------------------------------------------------------------------------
// Separation property

struct SeparationWitness {
    Cube cube;
    CubeDecomposition decomposition;
    PointSet component;  // the alpha-component M' of cube ∩ M
    Point offender;      // c in the base with c+t1+t2 in M' but c+t1 or c+t2 not
};

struct SeparationVerdict {
    bool holds = true;
    std::optional<SeparationWitness> witness;
};

namespace detail {

// Default search window: every cube meeting m and every omega(p), p in m.
inline Window default_window(const PointSet& m) {
    if (m.empty()) return Window::around(Point::origin(m.dim()), 1);
    return Window::bounding_box(m).dilated(1);
}

inline Window checked_window(const PointSet& m, std::optional<Window> w) {
    if (!w) return default_window(m);
    if (w->dim() != m.dim()) throw DimensionMismatch(m.dim(), w->dim());
    if (!w->contains(m)) throw Error("set does not lie inside the window");
    if (!m.empty() && !w->contains(Window::bounding_box(m).dilated(1))) {
        throw Error("window too small: it must contain the bounding box of the set dilated by 1");
    }
    return *w;
}

// Re-evaluates a single (cube, component, decomposition) triple of the
// separation condition. Returns the offending base point, if any.
inline std::optional<Point> separation_violation(const PointSet& m, const PointSet& component,
                                                 const CubeDecomposition& d,
                                                 const ComplementLabels& background) {
    const PointSet base = cube_points(d.base);
    std::vector<Point> first_out, second_out;
    for (const auto& c : base) {
        if (const Point x = c + d.first; !m.contains(x)) first_out.push_back(x);
        if (const Point y = c + d.second; !m.contains(y)) second_out.push_back(y);
    }
    if (first_out.empty() || second_out.empty()) return std::nullopt;

    const int label = background.label_of(first_out.front());
    auto same = [&](const Point& x) { return background.label_of(x) == label; };
    if (!std::all_of(first_out.begin(), first_out.end(), same) ||
        !std::all_of(second_out.begin(), second_out.end(), same)) {
        return std::nullopt;
    }

    const Translation diag = d.first + d.second;
    for (const auto& c : base) {
        if (component.contains(c + diag) &&
            !(component.contains(c + d.first) && component.contains(c + d.second))) {
            return c;
        }
    }
    return std::nullopt;
}

inline SeparationVerdict check_separation(const PointSet& m, const AdjacencyPair& pair, const Window& w,
                                          const ComplementLabels& background) {
    const int n = m.dim();
    for (int k = 2; k <= n; ++k) {
        for (const auto& cube : enumerate_cubes_in_window(w, k)) {
            const PointSet inside = set_intersection(cube_points(cube), m);
            if (inside.empty()) continue;
            const auto decomps = cube_decompositions(cube);
            for (const auto& component : components(pair.alpha, inside).blocks) {
                std::vector<std::size_t> hits(decomps.size(), 0);
                std::size_t best = 0;
                for (std::size_t i = 0; i < decomps.size(); ++i) {
                    hits[i] = set_intersection(cube_points(decomps[i].base), component).size();
                    best = std::max(best, hits[i]);
                }
                for (std::size_t i = 0; i < decomps.size(); ++i) {
                    if (hits[i] != best) continue;
                    if (auto bad = separation_violation(m, component, decomps[i], background)) {
                        return {false, SeparationWitness{cube, decomps[i], component, *bad}};
                    }
                }
            }
        }
    }
    return {};
}

}  // namespace detail

/// For every k-cube C (2 <= k <= n) meeting m, every alpha-component M' of
/// C ∩ m and every decomposition (C*, t1, t2) of C whose base attains the
/// maximal |C* ∩ M'|: whenever t1(C*) \ m and t2(C*) \ m are nonempty and lie
/// in one beta-component of the complement, every c in C* with
/// c + t1 + t2 in M' must have c + t1 and c + t2 in M'.
inline SeparationVerdict check_separation_property(const PointSet& m, const AdjacencyPair& pair,
                                                   std::optional<Window> w = std::nullopt) {
    if (m.dim() != pair.dim()) throw DimensionMismatch(pair.dim(), m.dim());
    const Window win = detail::checked_window(m, w);
    const auto background = complement_labels(pair.beta, m, win);
    return detail::check_separation(m, pair, win, background);
}

// ---------------------------------------------------------------------------
// Manifold axioms

/// The two beta-components of omega(p) \ m, smallest member first; or the
/// actual component count when it is not two.
struct LocalComponents {
    std::size_t count = 0;
    std::optional<std::pair<PointSet, PointSet>> blocks;

    explicit operator bool() const noexcept { return blocks.has_value(); }
};

inline LocalComponents two_components_at(const Point& p, const PointSet& m, const AdjacencySpec& beta) {
    require_spec_dim(beta, p);
    if (!m.contains(p)) throw Error("point " + p.str() + " is not in the set");
    PointSet around(p.dim());
    Window::around(p, 1).for_each([&](const Point& q) {
        if (!m.contains(q)) around.insert(q);
    });
    auto part = components(beta, around);
    LocalComponents out;
    out.count = part.size();
    if (part.size() == 2) out.blocks.emplace(std::move(part.blocks[0]), std::move(part.blocks[1]));
    return out;
}

enum class ManifoldAxiom {
    Connected = 0,          // precondition: m is alpha-connected
    CubeConnected = 1,      // every n-cube meets m in an alpha-connected set
    TwoComponents = 2,      // omega(p) \ m has exactly two beta-components
    BoundaryAdjacency = 3,  // alpha-neighbors in m touch both components
    Separation = 4,
};

inline const char* axiom_name(ManifoldAxiom a) {
    switch (a) {
        case ManifoldAxiom::Connected: return "connected";
        case ManifoldAxiom::CubeConnected: return "cube-connected";
        case ManifoldAxiom::TwoComponents: return "two-components";
        case ManifoldAxiom::BoundaryAdjacency: return "boundary-adjacency";
        case ManifoldAxiom::Separation: return "separation";
    }
    return "?";
}

struct ManifoldFailure {
    ManifoldAxiom axiom;
    std::optional<std::size_t> component_count = {};  // axioms 0-2
    std::optional<Cube> cube = {};                    // axiom 1
    std::optional<Point> point = {};                  // axioms 2-3: p
    std::optional<Point> neighbor = {};               // axiom 3: q
    std::optional<SeparationWitness> separation = {};  // axiom 4
};

struct ManifoldVerdict {
    bool holds = true;
    std::optional<ManifoldFailure> failure;

    static ManifoldVerdict fail(ManifoldFailure f) { return {false, std::move(f)}; }
};

/// Checks m against the manifold axioms in order and reports the first
/// failure. Cubes are enumerated inside `w` (default: bounding box of m
/// dilated by 1).
inline ManifoldVerdict is_digital_manifold(const PointSet& m, const AdjacencyPair& pair,
                                           std::optional<Window> w = std::nullopt) {
    if (m.dim() != pair.dim()) throw DimensionMismatch(pair.dim(), m.dim());
    if (m.dim() < 2) throw Error("digital manifolds require ambient dimension >= 2");
    const Window win = detail::checked_window(m, w);
    const auto& alpha = pair.alpha;
    const auto& beta = pair.beta;

    if (auto n = components(alpha, m).size(); n != 1) {
        return ManifoldVerdict::fail({.axiom = ManifoldAxiom::Connected, .component_count = n});
    }

    for (const auto& cube : enumerate_cubes_in_window(win, m.dim())) {
        const PointSet inside = set_intersection(cube_points(cube), m);
        if (auto n = components(alpha, inside).size(); n > 1) {
            return ManifoldVerdict::fail({.axiom = ManifoldAxiom::CubeConnected, .component_count = n, .cube = cube});
        }
    }

    std::vector<std::pair<PointSet, PointSet>> local;
    for (const auto& p : m) {
        auto lc = two_components_at(p, m, beta);
        if (!lc) {
            return ManifoldVerdict::fail(
                {.axiom = ManifoldAxiom::TwoComponents, .component_count = lc.count, .point = p});
        }
        local.push_back(std::move(*lc.blocks));
    }

    auto touches = [&](const Point& q, const PointSet& block) {
        return std::any_of(block.begin(), block.end(), [&](const Point& x) { return beta.adjacent_unchecked(q, x); });
    };
    std::size_t idx = 0;
    for (const auto& p : m) {
        const auto& [cp, dp] = local[idx++];
        std::optional<Point> bad;
        for_each_neighbor(alpha, p, [&](const Point& q) {
            if (!bad && m.contains(q) && !(touches(q, cp) && touches(q, dp))) bad = q;
        });
        if (bad) {
            return ManifoldVerdict::fail({.axiom = ManifoldAxiom::BoundaryAdjacency, .point = p, .neighbor = *bad});
        }
    }

    const auto background = complement_labels(beta, m, win);
    if (auto sep = detail::check_separation(m, pair, win, background); !sep.holds) {
        return ManifoldVerdict::fail({.axiom = ManifoldAxiom::Separation, .separation = std::move(sep.witness)});
    }
    return {};
}

// ---------------------------------------------------------------------------
// Double points and good pairs

/// p in beta(z) with q in pi(z) ∩ alpha(p), r in beta(z) ∩ pi(p), q - p = z - r
/// a simple translation and q in alpha(r).
struct DoublePoint {
    Point p;
    Point q;
    Point r;
    Translation shift;

    friend bool operator==(const DoublePoint&, const DoublePoint&) = default;
};

/// Every double-point configuration around z, ordered by (p, q, r).
inline std::vector<DoublePoint> double_point_witnesses(const Point& z, const AdjacencyPair& pair) {
    require_spec_dim(pair.alpha, z);
    const auto proto = AdjacencySpec::proto(z.dim());
    std::vector<DoublePoint> out;
    for_each_neighbor(pair.beta, z, [&](const Point& p) {
        for_each_neighbor(proto, z, [&](const Point& q) {
            if (!pair.alpha.adjacent_unchecked(p, q)) return;
            const Translation t = displacement(p, q);
            if (!is_simple_translation(t)) return;
            const Point r = z - t;
            if (r == z || !pair.beta.adjacent_unchecked(z, r)) return;
            if (!proto.adjacent_unchecked(p, r)) return;
            if (!pair.alpha.adjacent_unchecked(r, q)) return;
            out.push_back({p, q, r, t});
        });
    });
    return out;
}

inline PointSet double_points(const Point& z, const AdjacencyPair& pair) {
    PointSet out(z.dim());
    for (const auto& w : double_point_witnesses(z, pair)) out.insert(w.p);
    return out;
}

/// Reference points that cover every neighborhood shape of the pair up to
/// translation: the origin for cubical pairs (translation invariant), all of
/// {0,1}^n once a Khalimsky adjacency is involved (invariant under even
/// translations only).
inline std::vector<Point> reference_points(const AdjacencyPair& pair) {
    const int n = pair.dim();
    if (!pair.alpha.is_khalimsky() && !pair.beta.is_khalimsky()) return {Point::origin(n)};
    std::vector<Point> out;
    Window(Point::origin(n), Window::around(Point::origin(n), 1).hi()).for_each([&](const Point& p) {
        out.push_back(p);
    });
    return out;
}

struct GoodPairFailure {
    Point reference;
    std::optional<ManifoldVerdict> manifold;  // set when beta(reference) is not a manifold
    std::optional<DoublePoint> double_point;  // set when it contains a double point
};

struct GoodPairVerdict {
    bool holds = true;
    std::optional<GoodPairFailure> failure;
};

/// For every reference point r: beta(r) must be a digital manifold under the
/// pair (checked in r + [-2,2]^n) and contain no double points. The first
/// failing reference point is reported with both witnesses when both fail.
inline GoodPairVerdict is_good_pair(const AdjacencyPair& pair) {
    if (pair.dim() < 2) throw Error("good pairs require ambient dimension >= 2");
    for (const auto& r : reference_points(pair)) {
        const PointSet m = neighbors(pair.beta, r);
        auto mv = is_digital_manifold(m, pair, Window::around(r, 2));
        const auto dps = double_point_witnesses(r, pair);
        if (mv.holds && dps.empty()) continue;
        GoodPairFailure f{r, std::nullopt, std::nullopt};
        if (!mv.holds) f.manifold = std::move(mv);
        if (!dps.empty()) f.double_point = dps.front();
        return {false, std::move(f)};
    }
    return {};
}

struct GoodPairTableEntry {
    int l;  // foreground alpha_l
    int k;  // background alpha_k
    GoodPairVerdict verdict;
};

inline constexpr int kGoodPairTableMaxDim = 4;

/// Verdicts for every cubical pair (alpha_l, alpha_k), 0 <= l,k <= n-1, in
/// (l, k) order. n = 5 is accepted only with `allow_slow`.
inline std::vector<GoodPairTableEntry> good_pair_table(int n, bool allow_slow = false) {
    const int max_n = allow_slow ? kGoodPairTableMaxDim + 1 : kGoodPairTableMaxDim;
    if (n < 2 || n > max_n) {
        throw Error("good-pair table requires 2 <= n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
    }
    std::vector<std::future<GoodPairVerdict>> pending;
    for (int l = 0; l < n; ++l) {
        for (int k = 0; k < n; ++k) {
            pending.push_back(std::async(std::launch::async, [n, l, k] {
                return is_good_pair({AdjacencySpec::cubical(n, l), AdjacencySpec::cubical(n, k)});
            }));
        }
    }
    std::vector<GoodPairTableEntry> out;
    std::size_t i = 0;
    for (int l = 0; l < n; ++l) {
        for (int k = 0; k < n; ++k) out.push_back({l, k, pending[i++].get()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Jordan harness

struct JordanReport {
    ComponentPartition complement;
    /// For each point of m (lexicographic), whether it is beta-adjacent to
    /// every complement component.
    std::vector<std::pair<Point, bool>> boundary;

    std::size_t component_count() const noexcept { return complement.size(); }
    bool bounds_all() const {
        return std::all_of(boundary.begin(), boundary.end(), [](const auto& e) { return e.second; });
    }
    bool separates_in_two() const { return component_count() == 2 && bounds_all(); }
};

inline JordanReport jordan_check(const PointSet& m, const AdjacencyPair& pair) {
    if (m.dim() != pair.dim()) throw DimensionMismatch(pair.dim(), m.dim());
    const auto labels = complement_labels(pair.beta, m);
    JordanReport rep{labels.partition, {}};
    for (const auto& p : m) {
        std::vector<bool> seen(rep.complement.size(), false);
        for_each_neighbor(pair.beta, p, [&](const Point& q) {
            if (const int b = labels.label_of(q); b >= 0) seen[static_cast<std::size_t>(b)] = true;
        });
        rep.boundary.emplace_back(p, std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
    }
    return rep;
}

}  // namespace digitopo
