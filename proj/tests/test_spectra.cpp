#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "skewspec/energy.hpp"
#include "skewspec/maxenergy.hpp"
#include "skewspec/products.hpp"

using namespace skewspec;
using Catch::Matchers::WithinAbs;

namespace {

const double R2 = std::sqrt(2.0);
const double R3 = std::sqrt(3.0);

std::vector<double> positive_part(const OrientedGraph& og) {
    return skew_spectrum(skew_adjacency(og)).positive_values();
}

} // namespace

TEST_CASE("skew energy of small orientations") {
    CHECK_THAT(skew_energy(skew_adjacency(seed_c4())), WithinAbs(4.0 * R2, 1e-9));
    CHECK_THAT(skew_energy(skew_adjacency(seed_k4())), WithinAbs(4.0 * R3, 1e-9));
    CHECK_THAT(skew_energy(IntMatrix(5, 5)), WithinAbs(0.0, 0.0));

    // the uniformly directed 4-cycle is singular: spectrum {+-2, 0, 0}
    const OrientedGraph dir = OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_THAT(skew_energy(skew_adjacency(dir)), WithinAbs(4.0, 1e-9));
}

TEST_CASE("kronecker prediction for two four-vertex factors") {
    const SpectrumPrediction p = predict_kronecker({R2, R2}, 4, {R3, R3}, 4);
    REQUIRE(p.entries.size() == 1);
    CHECK_THAT(p.entries[0].first, WithinAbs(std::sqrt(6.0), 1e-12));
    CHECK(p.entries[0].second == 8);
    CHECK(p.zero_multiplicity == 0);
    CHECK(p.order() == 16);
}

TEST_CASE("kronecker prediction with deficient factors") {
    const SpectrumPrediction simple = predict_kronecker({1.0}, 2, {1.0}, 2);
    CHECK(simple.entries == std::vector<std::pair<double, int>>{{1.0, 2}});
    CHECK(simple.zero_multiplicity == 0);

    const SpectrumPrediction flat = predict_kronecker({}, 3, {1.0}, 2);
    CHECK(flat.entries.empty());
    CHECK(flat.zero_multiplicity == 6);

    const SpectrumPrediction padded = predict_kronecker({2.0}, 4, {1.0}, 3);
    CHECK(padded.entries == std::vector<std::pair<double, int>>{{2.0, 2}});
    CHECK(padded.zero_multiplicity == 8);
}

TEST_CASE("predictions reject impossible inputs") {
    CHECK_THROWS_AS(predict_kronecker({1.0, 1.0}, 3, {1.0}, 2), InvalidSpectrum);
    CHECK_THROWS_AS(predict_kronecker({0.0}, 2, {1.0}, 2), InvalidSpectrum);
    CHECK_THROWS_AS(predict_kronecker({1.0}, 2, {-2.0}, 2), InvalidSpectrum);
    CHECK_THROWS_AS(predict_strong({1.0}, 2, {1.0, 1.0, 1.0}, 4), InvalidSpectrum);
    CHECK_THROWS_AS(predict_strong({-1.0}, 2, {1.0}, 2), InvalidSpectrum);
}

TEST_CASE("strong prediction for two four-vertex factors") {
    const SpectrumPrediction p = predict_strong({R2, R2}, 4, {R3, R3}, 4);
    REQUIRE(p.entries.size() == 1);
    CHECK_THAT(p.entries[0].first, WithinAbs(std::sqrt(11.0), 1e-12));
    CHECK(p.entries[0].second == 8);
    CHECK(p.zero_multiplicity == 0);
}

TEST_CASE("strong prediction keeps the leftover factor eigenvalues") {
    // P2 plus an isolated vertex against P2
    const SpectrumPrediction p = predict_strong({1.0}, 3, {1.0}, 2);
    REQUIRE(p.entries.size() == 2);
    CHECK(p.entries[0] == std::pair<double, int>{1.0, 1});
    CHECK_THAT(p.entries[1].first, WithinAbs(R3, 1e-12));
    CHECK(p.entries[1].second == 2);
    CHECK(p.zero_multiplicity == 0);
    CHECK(p.order() == 6);
}

TEST_CASE("comparison reports") {
    const OrientedGraph og = seed_c4();
    const auto computed = skew_spectrum(skew_adjacency(og));

    SpectrumPrediction exact;
    exact.entries = {{R2, 2}};
    const ComparisonReport good = compare(exact, computed);
    CHECK(good.pass);
    CHECK(good.max_abs_dev < 1e-9);
    CHECK(good.order == 4);
    REQUIRE(good.predicted.size() == 4);
    CHECK(good.computed == computed.values);

    SpectrumPrediction off;
    off.entries = {{R2 + 1e-3, 2}};
    const ComparisonReport bad = compare(off, computed);
    CHECK_FALSE(bad.pass);
    CHECK_THAT(bad.max_abs_dev, WithinAbs(1e-3, 1e-9));
    CHECK(compare(off, computed, 1e-2).pass); // tolerance is caller-controlled

    SpectrumPrediction wrong_order;
    wrong_order.entries = {{R2, 3}};
    CHECK_THROWS_AS(compare(wrong_order, computed), OrderMismatch);
}

TEST_CASE("kronecker spectrum rule holds on random factors") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = testutil::rand_int(rng, 2, 6);
        const int n = testutil::rand_int(rng, 1, 5);
        auto [h, bh] = testutil::random_bipartite_oriented(rng, m);
        const OrientedGraph g = testutil::random_orientation(rng, testutil::random_graph(rng, n));

        const SpectrumPrediction p = predict_kronecker(positive_part(h), m, positive_part(g), n);
        const auto computed = skew_spectrum(skew_adjacency(orient_kronecker(h, bh, g)));
        const ComparisonReport rep = compare(p, computed, 1e-8);
        INFO("trial " << trial << " deviation " << rep.max_abs_dev);
        CHECK(rep.pass);
    }
}

TEST_CASE("strong spectrum rule holds on random factors") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = testutil::rand_int(rng, 2, 6);
        const int n = testutil::rand_int(rng, 1, 5);
        auto [h, bh] = testutil::random_bipartite_oriented(rng, m);
        const OrientedGraph g = testutil::random_orientation(rng, testutil::random_graph(rng, n));

        const SpectrumPrediction p = predict_strong(positive_part(h), m, positive_part(g), n);
        const auto computed = skew_spectrum(skew_adjacency(orient_strong(h, bh, g)));
        const ComparisonReport rep = compare(p, computed, 1e-8);
        INFO("trial " << trial << " deviation " << rep.max_abs_dev);
        CHECK(rep.pass);
    }
}

TEST_CASE("energy is additive over disjoint unions") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const OrientedGraph a =
            testutil::random_orientation(rng, testutil::random_graph(rng, testutil::rand_int(rng, 1, 6)));
        const OrientedGraph b =
            testutil::random_orientation(rng, testutil::random_graph(rng, testutil::rand_int(rng, 1, 6)));
        const double lhs = skew_energy(skew_adjacency(testutil::disjoint_union(a, b)));
        const double rhs = skew_energy(skew_adjacency(a)) + skew_energy(skew_adjacency(b));
        CHECK_THAT(lhs, WithinAbs(rhs, 1e-9));
    }
}

TEST_CASE("product energies of certified seeds") {
    const OrientedGraph c4 = seed_c4();
    const auto [h, perm] = relabel_x_first(c4, bipartition(c4.graph));
    const Bipartition bh = x_first_bipartition(2, 4);
    const OrientedGraph g = seed_k4();

    CHECK_THAT(skew_energy(skew_adjacency(orient_kronecker(h, bh, g))),
               WithinAbs(16.0 * std::sqrt(6.0), 1e-9));
    CHECK_THAT(skew_energy(skew_adjacency(orient_cartesian(h, bh, g))),
               WithinAbs(16.0 * std::sqrt(5.0), 1e-9));
    CHECK_THAT(skew_energy(skew_adjacency(orient_strong(h, bh, g))),
               WithinAbs(16.0 * std::sqrt(11.0), 1e-9));
    CHECK_THAT(skew_energy(skew_adjacency(orient_lexicographic(seed_p2(), x_first_bipartition(1, 2),
                                                               seed_c4(), seed_k4()))),
               WithinAbs(8.0 * std::sqrt(6.0), 1e-9));
}
