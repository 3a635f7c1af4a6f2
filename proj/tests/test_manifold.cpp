#include <gtest/gtest.h>

#include <random>

#include "digitopo/adjacency.hpp"
#include "digitopo/manifold.hpp"
#include "oracles.hpp"

namespace digitopo {
namespace {

AdjacencyPair cubical_pair(int n, int l, int k) { return {AdjacencySpec::cubical(n, l), AdjacencySpec::cubical(n, k)}; }
AdjacencyPair khalimsky_pair(int n) { return {AdjacencySpec::khalimsky(n), AdjacencySpec::khalimsky(n)}; }

PointSet diamond() { return PointSet(2, {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}); }

std::vector<AdjacencyPair> all_pairs(int n) {
    std::vector<AdjacencyPair> out;
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) out.push_back(cubical_pair(n, l, k));
    out.push_back(khalimsky_pair(n));
    return out;
}

// Separation property straight from the definition: cubes by anchor and axis
// mask, decompositions by choosing the two split axes and which side is the
// base, complement components from the union-find oracle.
bool separation_oracle(const PointSet& m, const AdjacencyPair& pair) {
    const int n = m.dim();
    if (m.empty()) return true;
    const Window box = Window::bounding_box(m).dilated(1);
    const oracle::ComplementOracle background(
        m, 3, [&](const Point& p, const Point& q) { return oracle::adjacent(pair.beta, p, q); });
    bool ok = true;
    box.for_each([&](const Point& anchor) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<int> axes;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) axes.push_back(i);
            std::vector<Point> corners;
            for (unsigned sub = 0; sub < (1u << axes.size()); ++sub) {
                Point c = anchor;
                for (std::size_t j = 0; j < axes.size(); ++j) c[axes[j]] += static_cast<int>(sub >> j & 1u);
                corners.push_back(c);
            }
            if (!box.contains(corners.back())) continue;
            std::vector<Point> inside;
            for (const auto& c : corners)
                if (m.contains(c)) inside.push_back(c);
            const auto blocks = oracle::component_blocks(
                inside, [&](const Point& p, const Point& q) { return oracle::adjacent(pair.alpha, p, q); });
            for (const auto& block : blocks) {
                const std::set<Point> comp(block.begin(), block.end());
                struct D {
                    std::vector<Point> base;
                    Translation t1, t2;
                };
                std::vector<D> ds;
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    for (std::size_t b = a + 1; b < axes.size(); ++b) {
                        for (int sa = 0; sa <= 1; ++sa) {
                            for (int sb = 0; sb <= 1; ++sb) {
                                D d{{}, Translation::unit(n, axes[a], sa ? -1 : 1), Translation::unit(n, axes[b], sb ? -1 : 1)};
                                for (const auto& c : corners)
                                    if (c[axes[a]] == anchor[axes[a]] + sa && c[axes[b]] == anchor[axes[b]] + sb)
                                        d.base.push_back(c);
                                ds.push_back(std::move(d));
                            }
                        }
                    }
                }
                auto hits = [&](const D& d) {
                    return std::count_if(d.base.begin(), d.base.end(), [&](const Point& c) { return comp.contains(c); });
                };
                long best = 0;
                for (const auto& d : ds) best = std::max<long>(best, hits(d));
                for (const auto& d : ds) {
                    if (hits(d) != best) continue;
                    std::set<std::size_t> labels;
                    bool out1 = false, out2 = false;
                    for (const auto& c : d.base) {
                        if (!m.contains(c + d.t1)) out1 = true, labels.insert(background.label(c + d.t1));
                        if (!m.contains(c + d.t2)) out2 = true, labels.insert(background.label(c + d.t2));
                    }
                    if (!out1 || !out2 || labels.size() != 1) continue;
                    for (const auto& c : d.base) {
                        if (comp.contains(c + d.t1 + d.t2) && !(comp.contains(c + d.t1) && comp.contains(c + d.t2)))
                            ok = false;
                    }
                }
            }
        }
    });
    return ok;
}

// Double points straight from the definition, scanning a 5-wide window.
PointSet double_point_oracle(const Point& z, const AdjacencyPair& pair) {
    const int n = z.dim();
    const auto proto = AdjacencySpec::proto(n);
    PointSet out(n);
    const auto near = Window::around(z, 2).points();
    for (const auto& p : near) {
        if (!oracle::adjacent(pair.beta, z, p)) continue;
        for (const auto& q : near) {
            if (!oracle::adjacent(proto, z, q) || !oracle::adjacent(pair.alpha, p, q)) continue;
            for (const auto& r : near) {
                if (!oracle::adjacent(pair.beta, z, r) || !oracle::adjacent(proto, p, r)) continue;
                if (!oracle::adjacent(pair.alpha, r, q)) continue;
                const Translation t = displacement(p, q);
                if (t != displacement(r, z)) continue;
                int g = 0;
                for (int v : t.coords()) g = std::gcd(g, v);
                if (g == 1) out.insert(p);
            }
        }
    }
    return out;
}

// --- separation -------------------------------------------------------------

TEST(Separation, Examples) {
    PointSet closed = neighbors(AdjacencySpec::cubical(2, 1), Point{0, 0});
    closed.insert(Point{0, 0});
    EXPECT_TRUE(check_separation_property(closed, cubical_pair(2, 0, 1)).holds);
    EXPECT_TRUE(check_separation_property(PointSet(2), cubical_pair(2, 0, 1)).holds);
    for (const auto& p : std::vector<Point>{Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}) {
        PointSet kbar = neighbors(AdjacencySpec::khalimsky(2), p);
        kbar.insert(p);
        EXPECT_TRUE(check_separation_property(kbar, khalimsky_pair(2)).holds) << p.str();
    }
}

// A diagonal pair inside one square is crossed by the complement.
TEST(Separation, DiagonalViolates) {
    const PointSet diag(2, {Point{0, 0}, Point{1, 1}});
    const auto v = check_separation_property(diag, cubical_pair(2, 0, 0));
    ASSERT_FALSE(v.holds);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->cube, Cube(Point{0, 0}, {0, 1}));
    EXPECT_EQ(v.witness->component, diag);
}

// Re-evaluates a witness with nothing but its own fields and the oracles.
void expect_genuine(const PointSet& m, const AdjacencyPair& pair, const SeparationWitness& w) {
    const auto corners = cube_points(w.cube);
    const auto inside = set_intersection(corners, m);
    EXPECT_TRUE(w.component.is_subset_of(inside));
    EXPECT_EQ(oracle::count_components(std::vector<Point>(w.component.begin(), w.component.end()),
                                       [&](const Point& p, const Point& q) { return oracle::adjacent(pair.alpha, p, q); }),
              1u);
    for (const auto& p : set_difference(inside, w.component)) {
        for (const auto& q : w.component) EXPECT_FALSE(oracle::adjacent(pair.alpha, p, q));
    }
    const auto& d = w.decomposition;
    EXPECT_TRUE(cube_points(d.base).contains(w.offender));
    EXPECT_TRUE(w.component.contains(w.offender + d.first + d.second));
    EXPECT_FALSE(w.component.contains(w.offender + d.first) && w.component.contains(w.offender + d.second));
    const oracle::ComplementOracle bg(m, 3, [&](const Point& p, const Point& q) { return oracle::adjacent(pair.beta, p, q); });
    std::set<std::size_t> labels;
    bool out1 = false, out2 = false;
    for (const auto& c : cube_points(d.base)) {
        if (!m.contains(c + d.first)) out1 = true, labels.insert(bg.label(c + d.first));
        if (!m.contains(c + d.second)) out2 = true, labels.insert(bg.label(c + d.second));
    }
    EXPECT_TRUE(out1 && out2);
    EXPECT_EQ(labels.size(), 1u);
}

PointSet random_set(std::mt19937& rng, int n, int side, double density) {
    std::bernoulli_distribution keep(density);
    PointSet s(n);
    Window(Point::origin(n), Window::around(Point::origin(n), side - 1).hi()).for_each([&](const Point& p) {
        if (keep(rng)) s.insert(p);
    });
    return s;
}

TEST(Separation, MatchesOracleOnRandomSets) {
    std::mt19937 rng(23);
    int violations = 0;
    for (int iter = 0; iter < 150; ++iter) {
        const int n = iter % 3 == 2 ? 3 : 2;
        const auto m = random_set(rng, n, n == 2 ? 4 : 3, 0.5);
        for (const auto& pair : all_pairs(n)) {
            const auto v = check_separation_property(m, pair);
            EXPECT_EQ(v.holds, separation_oracle(m, pair)) << pair.str();
            EXPECT_EQ(v.holds, !v.witness.has_value());
            if (v.witness) {
                ++violations;
                expect_genuine(m, pair, *v.witness);
            }
        }
    }
    EXPECT_GT(violations, 10);
}

TEST(Separation, StableUnderWindowGrowth) {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 40; ++iter) {
        const auto m = random_set(rng, 2, 4, 0.5);
        if (m.empty()) continue;
        for (const auto& pair : all_pairs(2)) {
            const auto base = check_separation_property(m, pair);
            for (int r = 2; r <= 3; ++r) {
                const auto grown = check_separation_property(m, pair, Window::bounding_box(m).dilated(r));
                EXPECT_EQ(grown.holds, base.holds);
            }
        }
    }
}

TEST(Separation, WindowErrors) {
    const auto m = diamond();
    EXPECT_THROW(check_separation_property(m, cubical_pair(2, 0, 1), Window::bounding_box(m)), Error);
    EXPECT_THROW(check_separation_property(m, cubical_pair(2, 0, 1), Window::around(Point{5, 5}, 1)), Error);
    EXPECT_THROW(check_separation_property(m, cubical_pair(3, 0, 1)), DimensionMismatch);
}

// --- local components -------------------------------------------------------

TEST(LocalComponents, Examples) {
    const auto ring = neighbors(AdjacencySpec::cubical(2, 0), Point{0, 0});
    const auto a = two_components_at(Point{1, 0}, ring, AdjacencySpec::cubical(2, 1));
    ASSERT_TRUE(a);
    EXPECT_EQ(a.blocks->first, (PointSet(2, {Point{0, 0}})));
    EXPECT_EQ(a.blocks->second, (PointSet(2, {Point{2, 1}, Point{2, 0}, Point{2, -1}})));

    // Under the 4-adjacency the centre of the diamond is cut off from the rest.
    const auto b = two_components_at(Point{1, 0}, diamond(), AdjacencySpec::cubical(2, 1));
    ASSERT_TRUE(b);
    EXPECT_EQ(b.blocks->first, (PointSet(2, {Point{0, 0}})));
    EXPECT_EQ(b.blocks->second, (PointSet(2, {Point{1, 1}, Point{2, 1}, Point{2, 0}, Point{2, -1}, Point{1, -1}})));

    // Under the 8-adjacency (0,0) reaches (1,1) diagonally: one block.
    const auto c = two_components_at(Point{1, 0}, diamond(), AdjacencySpec::cubical(2, 0));
    EXPECT_FALSE(c);
    EXPECT_EQ(c.count, 1u);

    EXPECT_THROW(two_components_at(Point{0, 0}, diamond(), AdjacencySpec::cubical(2, 1)), Error);
}

TEST(LocalComponents, KhalimskyAdjacencySplitsInTwo) {
    for (int n = 2; n <= 3; ++n) {
        Window(Point::origin(n), Window::around(Point::origin(n), 1).hi()).for_each([&](const Point& z) {
            const auto m = neighbors(AdjacencySpec::khalimsky(n), z);
            for (const auto& p : m) {
                const auto lc = two_components_at(p, m, AdjacencySpec::khalimsky(n));
                EXPECT_EQ(lc.count, 2u) << z.str() << " " << p.str();
            }
        });
    }
}

// --- manifold axioms --------------------------------------------------------

TEST(Manifold, Examples) {
    const auto ring = neighbors(AdjacencySpec::cubical(2, 0), Point{0, 0});
    EXPECT_TRUE(is_digital_manifold(ring, cubical_pair(2, 1, 0)).holds);
    EXPECT_TRUE(is_digital_manifold(diamond(), cubical_pair(2, 0, 1)).holds);

    // (8,8): q = (0,1) next to p = (1,0) cannot reach the far block {(2,*)}.
    const auto v = is_digital_manifold(ring, cubical_pair(2, 0, 0));
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(v.failure->axiom, ManifoldAxiom::BoundaryAdjacency);

    for (const auto& pair : all_pairs(2)) {
        const auto single = is_digital_manifold(PointSet(2, {Point{3, 3}}), pair);
        ASSERT_FALSE(single.holds);
        EXPECT_EQ(single.failure->axiom, ManifoldAxiom::TwoComponents);
        EXPECT_EQ(single.failure->component_count, 1u);
        EXPECT_EQ(single.failure->point, (Point{3, 3}));
    }
}

TEST(Manifold, PreconditionAndErrors) {
    const auto diag = is_digital_manifold(PointSet(2, {Point{0, 0}, Point{1, 1}}), cubical_pair(2, 1, 0));
    ASSERT_FALSE(diag.holds);
    EXPECT_EQ(diag.failure->axiom, ManifoldAxiom::Connected);
    EXPECT_EQ(diag.failure->component_count, 2u);
    EXPECT_FALSE(is_digital_manifold(PointSet(2), cubical_pair(2, 0, 1)).holds);
    EXPECT_THROW(is_digital_manifold(PointSet(1, {Point{0}}), {AdjacencySpec::proto(1), AdjacencySpec::proto(1)}),
                 Error);
    EXPECT_THROW(is_digital_manifold(diamond(), cubical_pair(3, 0, 1)), DimensionMismatch);
}

// A 4-path that bends back so that one unit square only sees its two
// diagonal ends (0,0) and (1,1).
TEST(Manifold, CubeConnectivityFailure) {
    const PointSet hook(2, {Point{0, 0}, Point{-1, 0}, Point{-1, 1}, Point{-1, 2}, Point{0, 2}, Point{1, 2}, Point{1, 1}});
    const auto v = is_digital_manifold(hook, cubical_pair(2, 1, 1));
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(v.failure->axiom, ManifoldAxiom::CubeConnected);
    ASSERT_TRUE(v.failure->cube);
    const auto inside = set_intersection(cube_points(*v.failure->cube), hook);
    EXPECT_EQ(oracle::count_components(std::vector<Point>(inside.begin(), inside.end()),
                                       [](const Point& p, const Point& q) { return oracle::gridcubes_share_face(p, q, 1); }),
              *v.failure->component_count);
    EXPECT_EQ(*v.failure->cube, Cube(Point{0, 0}, {0, 1}));
}

TEST(Manifold, KhalimskyNeighborhoodsAreManifolds) {
    for (int n = 2; n <= 3; ++n) {
        Window(Point::origin(n), Window::around(Point::origin(n), 1).hi()).for_each([&](const Point& z) {
            const auto m = neighbors(AdjacencySpec::khalimsky(n), z);
            EXPECT_TRUE(is_digital_manifold(m, khalimsky_pair(n), Window::around(z, 2)).holds) << z.str();
        });
    }
}

TEST(Manifold, Deterministic) {
    const auto ring = neighbors(AdjacencySpec::cubical(3, 0), Point::origin(3));
    const auto a = is_digital_manifold(ring, cubical_pair(3, 0, 0));
    const auto b = is_digital_manifold(ring, cubical_pair(3, 0, 0));
    ASSERT_EQ(a.holds, b.holds);
    ASSERT_TRUE(a.failure && b.failure);
    EXPECT_EQ(a.failure->axiom, b.failure->axiom);
    EXPECT_EQ(a.failure->point, b.failure->point);
    EXPECT_EQ(a.failure->neighbor, b.failure->neighbor);
}

// --- double points ----------------------------------------------------------

TEST(DoublePoints, Examples) {
    const auto z = Point{0, 0};
    const auto ws = double_point_witnesses(z, cubical_pair(2, 0, 0));
    const auto it = std::find(ws.begin(), ws.end(),
                              DoublePoint{Point{1, 1}, Point{1, 0}, Point{0, 1}, Translation{0, -1}});
    EXPECT_NE(it, ws.end());
    EXPECT_TRUE(double_points(z, cubical_pair(2, 0, 0)).contains(Point{1, 1}));
    EXPECT_TRUE(double_points(z, cubical_pair(2, 0, 1)).empty());
    for (const auto& p : std::vector<Point>{Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}) {
        EXPECT_TRUE(double_points(p, khalimsky_pair(2)).empty());
    }
}

TEST(DoublePoints, MatchOracle) {
    for (int n = 2; n <= 3; ++n) {
        for (const auto& pair : all_pairs(n)) {
            Window(Point::origin(n), Window::around(Point::origin(n), 1).hi()).for_each([&](const Point& z) {
                EXPECT_EQ(double_points(z, pair), double_point_oracle(z, pair)) << pair.str() << " " << z.str();
            });
        }
    }
}

TEST(DoublePoints, WitnessesAreGenuine) {
    for (const auto& pair : all_pairs(3)) {
        const auto z = Point{0, 1, 1};
        for (const auto& w : double_point_witnesses(z, pair)) {
            EXPECT_TRUE(oracle::adjacent(pair.beta, z, w.p));
            EXPECT_TRUE(oracle::gridcubes_share_face(z, w.q, 2));
            EXPECT_TRUE(oracle::adjacent(pair.alpha, w.p, w.q));
            EXPECT_TRUE(oracle::adjacent(pair.beta, z, w.r));
            EXPECT_TRUE(oracle::gridcubes_share_face(w.p, w.r, 2));
            EXPECT_TRUE(oracle::adjacent(pair.alpha, w.r, w.q));
            EXPECT_EQ(w.p + w.shift, w.q);
            EXPECT_EQ(w.r + w.shift, z);
        }
    }
}

// Good cubical pairs have no double points anywhere in a parity-complete sample.
TEST(DoublePoints, AbsentForGoodCubicalPairs) {
    for (int n = 2; n <= 4; ++n) {
        for (int l = 0; l < n; ++l) {
            for (int k = 0; k < n; ++k) {
                if (!((k == n - 1 && l <= n - 2) || (k <= n - 2 && l == n - 1))) continue;
                Window::around(Point::origin(n), 1).for_each([&](const Point& z) {
                    EXPECT_TRUE(double_points(z, cubical_pair(n, l, k)).empty());
                });
            }
        }
    }
}

// --- good pairs -------------------------------------------------------------

TEST(GoodPair, Examples) {
    EXPECT_TRUE(is_good_pair(cubical_pair(2, 0, 1)).holds);
    EXPECT_TRUE(is_good_pair(cubical_pair(2, 1, 0)).holds);
    EXPECT_FALSE(is_good_pair(cubical_pair(2, 1, 1)).holds);
    EXPECT_FALSE(is_good_pair(cubical_pair(2, 0, 0)).holds);
    EXPECT_TRUE(is_good_pair(khalimsky_pair(2)).holds);
    EXPECT_THROW(is_good_pair({AdjacencySpec::proto(1), AdjacencySpec::proto(1)}), Error);
}

TEST(GoodPair, FailureCarriesWitnesses) {
    const auto v = is_good_pair(cubical_pair(3, 0, 0));
    ASSERT_FALSE(v.holds);
    ASSERT_TRUE(v.failure);
    EXPECT_EQ(v.failure->reference, Point::origin(3));
    ASSERT_TRUE(v.failure->double_point);
    EXPECT_EQ(v.failure->double_point->p + v.failure->double_point->shift, v.failure->double_point->q);

    // (4,4): the 4-ring is not 4-connected.
    const auto w = is_good_pair(cubical_pair(2, 1, 1));
    ASSERT_TRUE(w.failure && w.failure->manifold);
    EXPECT_EQ(w.failure->manifold->failure->axiom, ManifoldAxiom::Connected);
}

TEST(GoodPair, ReferencePoints) {
    EXPECT_EQ(reference_points(cubical_pair(3, 0, 2)).size(), 1u);
    EXPECT_EQ(reference_points(khalimsky_pair(3)).size(), 8u);
    EXPECT_EQ(reference_points({AdjacencySpec::khalimsky(2), AdjacencySpec::cubical(2, 1)}).size(), 4u);
}

std::set<std::pair<int, int>> good_cells(int n) {
    std::set<std::pair<int, int>> out;
    for (const auto& e : good_pair_table(n)) {
        if (e.verdict.holds) out.emplace(e.l, e.k);
    }
    return out;
}

TEST(GoodPair, TableSmallDimensions) {
    EXPECT_EQ(good_cells(2), (std::set<std::pair<int, int>>{{0, 1}, {1, 0}}));
    EXPECT_EQ(good_cells(3), (std::set<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 0}, {2, 1}}));
    const auto t = good_pair_table(2);
    ASSERT_EQ(t.size(), 4u);
    EXPECT_EQ(t[1].l, 0);
    EXPECT_EQ(t[1].k, 1);
    EXPECT_THROW(good_pair_table(1), Error);
    EXPECT_THROW(good_pair_table(5), Error);
}

// --- jordan -----------------------------------------------------------------

TEST(Jordan, Examples) {
    const auto in_two = jordan_check(diamond(), cubical_pair(2, 0, 1));
    EXPECT_EQ(in_two.component_count(), 2u);
    EXPECT_TRUE(in_two.bounds_all());
    EXPECT_TRUE(in_two.separates_in_two());
    EXPECT_EQ(in_two.boundary.size(), 4u);

    const auto leaky = jordan_check(diamond(), cubical_pair(2, 1, 0));
    EXPECT_EQ(leaky.component_count(), 1u);
    EXPECT_FALSE(leaky.separates_in_two());

    EXPECT_EQ(jordan_check(PointSet(2, {Point{4, -1}}), cubical_pair(2, 0, 1)).component_count(), 1u);
    EXPECT_EQ(jordan_check(PointSet(2), cubical_pair(2, 0, 1)).component_count(), 1u);
}

// Beta-neighborhoods of good pairs separate the plane/space into exactly two parts.
TEST(Jordan, GoodPairNeighborhoodsSeparate) {
    for (int n = 2; n <= 3; ++n) {
        for (int l = 0; l < n; ++l) {
            for (int k = 0; k < n; ++k) {
                if (!((k == n - 1 && l <= n - 2) || (k <= n - 2 && l == n - 1))) continue;
                const auto m = neighbors(AdjacencySpec::cubical(n, k), Point::origin(n));
                const auto r = jordan_check(m, cubical_pair(n, l, k));
                EXPECT_TRUE(r.separates_in_two()) << l << "," << k;
                const oracle::ComplementOracle bg(
                    m, 3, [&](const Point& p, const Point& q) { return oracle::gridcubes_share_face(p, q, k); });
                EXPECT_EQ(r.component_count(), bg.count());
            }
        }
    }
}

}  // namespace
}  // namespace digitopo
