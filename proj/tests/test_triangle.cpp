#include <doctest.h>

#include <algorithm>

#include "support.h"
#include "vgr/geometry.h"
#include "vgr/triangle.h"

using namespace vgr;

namespace {

std::vector<std::string> cycles_of(const std::vector<PseudoTriangleSolution>& sols) {
    std::vector<std::string> out;
    for (const auto& s : sols) out.push_back(to_string(s.cycle));
    return out;
}

bool has_cycle(const std::vector<PseudoTriangleSolution>& sols, const CycleCandidate& c) {
    return std::any_of(sols.begin(), sols.end(), [&](const PseudoTriangleSolution& s) { return s.cycle == c; });
}

Graph pt6() { return visibility_graph(fixture::pt6_polygon()); }

}  // namespace

TEST_CASE("PT6 visibility edges") {
    CHECK(pt6() == fixture::make_graph(6, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5},
                                           {3, 4}, {3, 5}, {4, 5}}));
}

TEST_CASE("solve on fixtures") {
    const auto k3 = solve(fixture::k3());
    REQUIRE(k3.size() == 1);
    CHECK(to_string(k3[0].cycle) == "0 1 2");

    const auto six = solve(pt6());
    CHECK(has_cycle(six, boundary_cycle(fixture::pt6_polygon())));
    const auto names = cycles_of(six);
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());

    CHECK(solve(fixture::k33()).empty());
}

TEST_CASE("top_joint_candidates") {
    CHECK(top_joint_candidates(pt6()) == VertexList{0, 2, 4});
    CHECK(top_joint_candidates(fixture::t5_graph()) == VertexList{0});
    // Four vertices of minimum degree cannot all be joints.
    const Graph cycle4 = fixture::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_THROWS_AS(top_joint_candidates(cycle4), RecognitionError);
}

TEST_CASE("split edge candidates") {
    const Graph g = pt6();
    const auto edges = split_edge_candidates(g, 0);
    CHECK(edges.size() == 2 * (g.edge_count() - g.degree(0)));
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    CHECK(split_edge_candidates(fixture::k3(), 0) == std::vector<Edge>{{1, 2}, {2, 1}});
    for (const Edge& e : degenerate_split(g, 0)) {
        CHECK(e.u != 0);
        CHECK(e.v != 0);
        CHECK(g.adjacent(e.u, e.v));
    }
}

TEST_CASE("decomposition of PT6 around the edge 2-3") {
    const Graph g = pt6();
    for (LevelStop stop : {LevelStop::FirstContact, LevelStop::WholeLevel, LevelStop::AllOfX, LevelStop::Sided}) {
        const auto upper = extract_C(g, 0, {2, 3}, stop);
        REQUIRE(upper.has_value());
        CHECK(upper->C == VertexList{0, 1, 5});
        CHECK(upper->X == VertexList{1, 5});
        CHECK(upper->Y == VertexList{0});

        const auto dec = decompose(g, 0, {2, 3}, stop);
        REQUIRE(dec.has_value());
        CHECK(dec->A == VertexList{2});
        CHECK(dec->B == VertexList{3, 4});
    }
    const auto parts = split_AB(g, {0, 1, 5}, {2, 3});
    REQUIRE(parts.has_value());
    CHECK(parts->first == VertexList{2});
    CHECK(parts->second == VertexList{3, 4});
    // Removing too little leaves one component.
    CHECK_FALSE(split_AB(g, {0}, {2, 3}).has_value());
}

TEST_CASE("decomposition is a partition") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = visibility_graph(gen_pseudo_triangle(8 + seed % 15, seed));
        const Vertex top = top_joint_candidates(g).front();
        for (const Edge& e : split_edge_candidates(g, top)) {
            const auto dec = decompose(g, top, e, LevelStop::Sided);
            if (!dec) continue;
            VertexList all = dec->C;
            all.insert(all.end(), dec->A.begin(), dec->A.end());
            all.insert(all.end(), dec->B.begin(), dec->B.end());
            std::sort(all.begin(), all.end());
            CHECK(all.size() == g.size());
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            CHECK(std::count(dec->A.begin(), dec->A.end(), e.u) == 1);
            CHECK(std::count(dec->B.begin(), dec->B.end(), e.v) == 1);
            for (Vertex x : dec->X) CHECK((g.adjacent(x, e.u) && g.adjacent(x, e.v)));
        }
    }
}

TEST_CASE("chain helpers") {
    const Graph g = pt6();
    CHECK(chain_neighborhood(g, Chain{{2, 3, 4}}, 0) == VertexList{3});
    CHECK(chain_neighborhood(g, Chain{{2, 3, 4}}, 1) == VertexList{2, 3, 4});
    CHECK(part_paths(g, {3, 4}, 3) == std::vector<VertexList>{{4, 3}});
    CHECK(bottom_joint_placements(g, VertexList{0, 1, 2, 3, 4, 5}) ==
          std::vector<std::pair<Vertex, Vertex>>{{2, 4}});

    // pa = 1 and pb = 5 both see the whole bottom chain 2, 3, 4.
    const auto split = compute_split_chain(g, 1, 5, LowerPaths{{2}, {3, 4}});
    REQUIRE(split.has_value());
    CHECK(split->common == VertexList{2, 3, 4});
}

TEST_CASE("verify_candidate") {
    const Graph g = pt6();
    const PseudoTriangleSolution truth = solution_from_cycle(VertexList{0, 1, 2, 3, 4, 5}, 0, 2, 4);
    CHECK(truth.chains[0].vertices == VertexList{0, 1, 2});
    CHECK(truth.chains[1].vertices == VertexList{0, 5, 4});
    CHECK(truth.chains[2].vertices == VertexList{2, 3, 4});
    CHECK(verify_candidate(g, truth));

    // A chord inside the left chain is not allowed.
    const Graph chorded = fixture::make_graph(
        6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    CHECK_FALSE(verify_candidate(chorded, truth));
    // Wrong joints.
    CHECK_FALSE(verify_candidate(g, solution_from_cycle(VertexList{0, 1, 2, 3, 4, 5}, 0, 1, 4)));
    // A cycle not in g.
    CHECK_FALSE(verify_candidate(g, solution_from_cycle(VertexList{0, 2, 1, 3, 4, 5}, 0, 1, 4)));
}

TEST_CASE("solutions are verified, canonical cycles of g") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Polygon poly = gen_pseudo_triangle(4 + seed % 27, seed);
        const Graph g = visibility_graph(poly);
        const auto sols = solve(g);
        CAPTURE(seed);
        CHECK(has_cycle(sols, boundary_cycle(poly)));
        for (const auto& s : sols) {
            CHECK(is_cycle_in_graph(g, s.cycle));
            CHECK(canonicalize(s.cycle.order()) == s.cycle);
            CHECK(verify_candidate(g, s));
        }
    }
}

TEST_CASE("degenerate pseudo-triangles round-trip") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Polygon poly = gen_pseudo_triangle(8 + seed % 20, seed, true);
        CAPTURE(seed);
        CHECK(has_cycle(solve(visibility_graph(poly)), boundary_cycle(poly)));
    }
}

TEST_CASE("small instances agree with exhaustive search") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const Polygon poly = gen_pseudo_triangle(4 + seed % 6, seed);
        const Graph g = visibility_graph(poly);
        const auto verified = oracle::verified_cycles(g);
        const auto sols = solve(g);
        CAPTURE(seed);
        CHECK(has_cycle(sols, boundary_cycle(poly)));
        for (const auto& s : sols) {
            CHECK(verified.count(VertexList(s.cycle.order().begin(), s.cycle.order().end())) == 1);
        }
    }
}

TEST_CASE("thread count does not change the answer") {
    const Graph g = visibility_graph(gen_pseudo_triangle(30, 9));
    SolveStats stats;
    const auto one = cycles_of(solve(g, {1}, &stats));
    CHECK(cycles_of(solve(g, {4})) == one);
    CHECK(stats.candidates > 0);
}
