#include <doctest.h>

#include <cmath>
#include <random>

#include "socsen/rtree.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace socsen;

TEST_SUITE("rtree") {

TEST_CASE("record box bounds the coverage sector and time interval") {
    fixtures::RecordSpec spec;
    spec.id = "r1";
    spec.x_m = 0.0;
    spec.y_m = 0.0;
    spec.vis_d_m = 10.0;
    spec.dir_deg = 0.0;

    SUBCASE("full disc") {
        spec.alpha_deg = 360.0;
        Corpus c({fixtures::make_record(spec)});
        const Mbr3 m = mbr_of(c.at(0));
        CHECK(m.x_min == doctest::Approx(c.at(0).xy.x - 10.0).epsilon(1e-9));
        CHECK(m.x_max == doctest::Approx(c.at(0).xy.x + 10.0).epsilon(1e-9));
        CHECK(m.y_min == doctest::Approx(c.at(0).xy.y - 10.0).epsilon(1e-9));
        CHECK(m.y_max == doctest::Approx(c.at(0).xy.y + 10.0).epsilon(1e-9));
    }

    SUBCASE("north-facing quarter sector") {
        spec.alpha_deg = 90.0;
        Corpus c({fixtures::make_record(spec)});
        const Mbr3 m = mbr_of(c.at(0));
        const double half = 10.0 * std::sin(deg2rad(45.0));
        CHECK(m.x_min == doctest::Approx(c.at(0).xy.x - half).epsilon(1e-9));
        CHECK(m.x_max == doctest::Approx(c.at(0).xy.x + half).epsilon(1e-9));
        CHECK(m.y_min == doctest::Approx(c.at(0).xy.y).epsilon(1e-9));
        CHECK(m.y_max == doctest::Approx(c.at(0).xy.y + 10.0).epsilon(1e-9));
    }

    SUBCASE("point timestamp collapses the time axis") {
        Corpus c({fixtures::make_record(spec)});
        const Mbr3 m = mbr_of(c.at(0));
        CHECK(m.t_min == m.t_max);
    }
}

TEST_CASE("insert into an empty tree") {
    RTree3 tree;
    CHECK(tree.size() == 0);
    CHECK(tree.insert({0, 1, 0, 1, 0, 1}, "a"));
    CHECK(tree.size() == 1);
    CHECK(tree.range_query({0, 1, 0, 1, 0, 1}) == std::vector<std::string>{"a"});
}

TEST_CASE("duplicate ids are rejected without mutation") {
    RTree3 tree;
    CHECK(tree.insert({0, 1, 0, 1, 0, 1}, "a"));
    CHECK(!tree.insert({5, 6, 5, 6, 5, 6}, "a"));
    CHECK(tree.size() == 1);
    CHECK(tree.range_query({5, 6, 5, 6, 5, 6}).empty());
}

TEST_CASE("every inserted record is retrievable by its exact box") {
    const Corpus corpus = fixtures::random_corpus(1000, 41);
    const RTree3 tree = build_index(corpus);
    CHECK(tree.size() == corpus.size());
    for (const auto& r : corpus.records()) {
        const auto hits = tree.range_query(mbr_of(r));
        CHECK(std::find(hits.begin(), hits.end(), r.id) != hits.end());
    }
}

TEST_CASE("range queries equal the linear-scan oracle") {
    const Corpus corpus = fixtures::random_corpus(2000, 43);
    const RTree3 tree = build_index(corpus);
    std::mt19937_64 rng(44);
    for (int i = 0; i < 50; ++i) {
        const Mbr3 region = fixtures::random_region(rng);
        CHECK(tree.range_query(region) == oracle::scan_range_query(corpus, region));
    }
    // Degenerate regions.
    const Mbr3 everything{-1e9, 1e9, -1e9, 1e9, 0, 4e9};
    CHECK(tree.range_query(everything).size() == corpus.size());
    const Mbr3 never{0, 1, 0, 1, 0, 1};  // far before any record time
    CHECK(tree.range_query(never).empty());
}

TEST_CASE("structural invariants hold after any insert sequence") {
    std::mt19937_64 rng(47);
    for (std::size_t n : {1u, 17u, 64u, 300u}) {
        const Corpus corpus = fixtures::random_corpus(n, rng());
        const RTree3 tree = build_index(corpus);
        CHECK(tree.check_structure() == "");
    }
}

}  // TEST_SUITE
