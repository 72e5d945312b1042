#include "boxfactor/error.hpp"
#include "boxfactor/isomorphism.hpp"
#include "boxfactor/loop_factor.hpp"
#include "boxfactor/oracle.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <bit>

using namespace boxfactor;
using test::looped;

namespace {

Graph product_of(std::vector<Graph> factors) {
    return cartesian_product(factors).graph;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Trivial;
}

FactorPartition partition_from(std::size_t r, const std::vector<std::vector<std::uint32_t>>& parts) {
    FactorPartition p(r);
    for (const auto& part : parts) {
        for (std::size_t i = 1; i < part.size(); ++i) {
            p.merge(part[0], part[i]);
        }
    }
    return p;
}

} // namespace

TEST_CASE("relative_coordinates") {
    const auto c4 = cycle_graph(4);
    for (Vertex root = 0; root < 4; ++root) {
        const auto rc = relative_coordinates(c4, root);
        CHECK(rc.r() == 2);
        CHECK(rc.support(root).empty());
        for (Vertex v : c4.neighbors(root)) {
            CHECK(rc.support(v).size() == 1);
        }
        const auto antipode = (root + 2) % 4;
        CHECK(rc.support(antipode).size() == 2);
    }

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto inst = random_instance({.factors = 3, .min_size = 2, .max_size = 4, .seed = seed});
        const Vertex root = lowest_unlooped_vertex(inst.product);
        const auto rc = relative_coordinates(inst.product, root);
        const auto bfs = bfs_order(inst.product, root);
        for (Vertex v = 0; v < inst.product.n(); ++v) {
            CHECK(rc.support(v).size() <= bfs.dist[v]);
            CHECK((v == root) == rc.support(v).empty());
        }
    }

    CHECK(code_of([] { relative_coordinates(looped(cycle_graph(4), {0}), 0); }) == ErrorCode::RootLooped);
    CHECK(code_of([] { relative_coordinates(make_graph(3, {}), 0); }) == ErrorCode::Disconnected);
    CHECK(code_of([] { relative_coordinates(make_graph(1, {}), 0); }) == ErrorCode::Trivial);
}

TEST_CASE("project_to_part") {
    const auto g = product_of({cycle_graph(4), path_graph(3)});
    const auto rc = relative_coordinates(g, 0);
    const std::size_t r = rc.r();
    REQUIRE(r == 3);
    const auto discrete = FactorPartition(r);
    const auto whole = partition_from(r, {{0, 1, 2}});
    for (std::uint32_t j = 0; j < r; ++j) {
        CHECK(project_to_part(rc, discrete, 0, j) == 0);
    }
    for (Vertex v = 0; v < g.n(); ++v) {
        CHECK(project_to_part(rc, whole, v, 0) == v);
        for (std::uint32_t j = 0; j < r; ++j) {
            const auto support = rc.support(v);
            const bool meets = std::find(support.begin(), support.end(), j) != support.end();
            if (!meets) {
                CHECK(project_to_part(rc, discrete, v, j) == 0);
            }
            if (support.size() == 1 && meets) {
                CHECK(project_to_part(rc, discrete, v, j) == v);
            }
        }
    }
}

TEST_CASE("check_conditions") {
    // C4 rooted at 0 with a loop on the antipode 2 only.
    const auto g = looped(cycle_graph(4), {2});
    const auto rc = relative_coordinates(g, 0);
    const FactorPartition discrete(2);
    CHECK(check_conditions(rc, discrete, 1, g).kind == Condition::Ok);
    CHECK(check_conditions(rc, discrete, 3, g).kind == Condition::Ok);
    const auto at_antipode = check_conditions(rc, discrete, 2, g);
    CHECK(at_antipode.kind == Condition::LoopedButNoProjectionLooped);
    CHECK(at_antipode.inspected_parts == 2);
    CHECK(check_conditions(rc, partition_from(2, {{0, 1}}), 2, g).kind == Condition::Ok);

    // Loops on both neighbours but not the antipode.
    const auto h = looped(cycle_graph(4), {1, 3});
    const auto rh = relative_coordinates(h, 0);
    CHECK(check_conditions(rh, discrete, 2, h).kind == Condition::UnloopedButProjectionLooped);

    // Distance-1 vertices pass under every partition.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = random_instance({.factors = 3, .min_size = 2, .max_size = 3, .seed = seed});
        const Vertex root = lowest_unlooped_vertex(inst.product);
        const auto rc2 = relative_coordinates(inst.product, root);
        const FactorPartition fine(rc2.r());
        for (Vertex v : inst.product.neighbors(root)) {
            CHECK(check_conditions(rc2, fine, v, inst.product).kind == Condition::Ok);
        }
        const auto bare = strip_loops(inst.product);
        for (Vertex v = 0; v < bare.n(); ++v) {
            CHECK(check_conditions(rc2, fine, v, bare).kind == Condition::Ok);
        }
    }
}

TEST_CASE("merge_nonroot_parts") {
    const auto g = looped(cycle_graph(4), {2});
    const auto rc = relative_coordinates(g, 0);
    const auto merged = merge_nonroot_parts(rc, FactorPartition(2), 2);
    CHECK(merged.part_count() == 1);
    CHECK(merged.parts() == std::vector<std::vector<std::uint32_t>>{{0, 1}});
    CHECK(code_of([&] { merge_nonroot_parts(rc, FactorPartition(2), 1); }) == ErrorCode::NothingToMerge);
    CHECK(code_of([&] { merge_nonroot_parts(rc, merged, 2); }) == ErrorCode::NothingToMerge);

    const auto cube = hypercube_graph(3);
    const auto rq = relative_coordinates(cube, 0);
    const auto all = merge_nonroot_parts(rq, FactorPartition(3), 7);
    CHECK(all.part_count() == 1);
    const auto two = merge_nonroot_parts(rq, FactorPartition(3), 3);
    CHECK(two.part_count() == 2);
}

TEST_CASE("assemble_factors") {
    const auto g = looped(product_of({cycle_graph(4), path_graph(3)}), {5, 7});
    const auto rc = relative_coordinates(g, 0);
    const auto single = assemble_factors(g, rc, partition_from(rc.r(), {{0, 1, 2}}));
    REQUIRE(single.primes.size() == 1);
    CHECK(find_isomorphism(single.primes[0], g).has_value());
    CHECK(verify_factorization(g, single));

    const auto bare = strip_loops(g);
    const auto layers = assemble_factors(bare, relative_coordinates(bare, 0), FactorPartition(rc.r()));
    CHECK(same_prime_multiset(layers.primes, factor_simple(bare).primes));
}

TEST_CASE("factor_loops_linear examples") {
    for (const auto& g : {cycle_graph(4), petersen_graph(), product_of({cycle_graph(5), path_graph(3)})}) {
        const auto linear = factor_loops_linear(g);
        const auto simple = factor_simple(g);
        CHECK(linear.primes == simple.primes);
    }

    const auto p3 = looped(path_graph(3), {1});
    const auto k2 = complete_graph(2);
    const auto g = product_of({p3, k2});
    const auto f = factor_loops_linear(g);
    CHECK(verify_factorization(g, f));
    CHECK(same_prime_multiset(f.primes, {p3, k2}));
    CHECK(same_prime_multiset(f.primes, brute_force_factor(g).primes));

    const auto c4_loop = looped(cycle_graph(4), {0});
    CHECK(factor_loops_linear(c4_loop).primes.size() == 1);
    CHECK(brute_force_factor(c4_loop).primes.size() == 1);

    const std::vector<Vertex> loop0{0};
    CHECK(code_of([&] { factor_loops_linear(make_graph(1, {}, loop0)); }) == ErrorCode::NoUnloopedVertex);
    CHECK(code_of([] { factor_loops_linear(looped(cycle_graph(3), {0, 1, 2})); }) == ErrorCode::NoUnloopedVertex);
    CHECK(code_of([] { factor_loops_linear(make_graph(2, {})); }) == ErrorCode::Disconnected);
    CHECK(code_of([] { factor_loops_linear(Graph{}); }) == ErrorCode::Trivial);
    CHECK(factor_loops_linear(make_graph(1, {})).primes.empty());
}

TEST_CASE("factor_loops_subset_scan examples") {
    const auto g = product_of({looped(path_graph(3), {1}), complete_graph(2), looped(cycle_graph(3), {0})});
    CHECK(same_prime_multiset(factor_loops_subset_scan(g).primes, factor_loops_linear(g).primes));

    const auto cube = hypercube_graph(4);
    ScanStats stats;
    const auto f = factor_loops_subset_scan(cube, &stats);
    CHECK(f.primes.size() == 4);
    CHECK(stats.merges == 0);
    CHECK(stats.part_trace == std::vector<std::size_t>{4, 4, 4, 4});

    CHECK(code_of([] { factor_loops_subset_scan(looped(path_graph(2), {0, 1})); }) == ErrorCode::NoUnloopedVertex);
}

TEST_CASE("verify_factorization") {
    const auto g = product_of({looped(path_graph(3), {0}), cycle_graph(4)});
    auto f = factor_loops_linear(g);
    CHECK(verify_factorization(g, f));
    CHECK(verify_factorization(g, factor_loops_subset_scan(g)));

    auto toggled = f;
    auto& p = toggled.primes[0];
    auto flags = p.loop_flags();
    flags[0] = !flags[0];
    p = Graph(p.adjacency(), flags);
    CHECK_FALSE(verify_factorization(g, toggled));

    // Swap the tuples of two vertices.
    std::vector<std::size_t> coords;
    for (Vertex v = 0; v < g.n(); ++v) {
        const Vertex source = v == 0 ? 1 : (v == 1 ? 0 : v);
        auto t = f.coord.coords(source);
        coords.insert(coords.end(), t.begin(), t.end());
    }
    auto swapped = f;
    swapped.coord = *Coordinatization::from_coords(f.coord.sizes(), coords);
    CHECK_FALSE(verify_factorization(g, swapped));
}

TEST_CASE("exhaustive agreement with brute force up to six vertices") {
    std::size_t instances = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const auto& skeleton : unlabeled_connected_graphs(n)) {
            for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
                const auto g = with_loop_mask(skeleton, mask);
                ScanStats stats;
                const auto linear = factor_loops_linear(g, &stats);
                const auto subset = factor_loops_subset_scan(g);
                const auto oracle = brute_force_factor(g);
                CHECK(verify_factorization(g, linear));
                CHECK(verify_factorization(g, subset));
                CHECK(same_prime_multiset(linear.primes, subset.primes));
                CHECK(same_prime_multiset(linear.primes, oracle.primes));
                CHECK(stats.inspections <= g.n() * stats.base_factors);
                ++instances;
            }
        }
    }
    CHECK(instances > 7000);
}

TEST_CASE("scan invariants on random products") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto inst = random_instance(
            {.factors = 2 + seed % 3, .min_size = 2, .max_size = 4, .loop_probability = 0.3, .seed = seed});
        const auto& g = inst.product;
        ScanStats stats;
        const auto f = factor_loops_linear(g, &stats);
        CHECK(verify_factorization(g, f));
        const std::size_t r = stats.base_factors;
        CHECK(f.primes.size() <= r);
        CHECK(r <= static_cast<std::size_t>(std::bit_width(g.n()) - 1));
        CHECK(r <= g.min_degree());
        CHECK(stats.inspections <= g.n() * r);
        CHECK(stats.merges + 1 <= std::max<std::size_t>(r, 1));
        for (std::size_t i = 1; i < stats.part_trace.size(); ++i) {
            CHECK(stats.part_trace[i] < stats.part_trace[i - 1]);
        }
        CHECK(same_prime_multiset(f.primes, factor_loops_subset_scan(g).primes, {.max_vertices = 64}));

        // Every unlooped root yields the same primes.
        const auto bare = strip_loops(g);
        for (Vertex root = 0; root < g.n(); root += 3) {
            if (g.is_looped(root)) {
                continue;
            }
            const auto other = loop_merge_stage(g, factor_simple(bare, root), root);
            CHECK(verify_factorization(g, other));
            CHECK(same_prime_multiset(other.primes, f.primes, {.max_vertices = 64}));
        }
    }
}
