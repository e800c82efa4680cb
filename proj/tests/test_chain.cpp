#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "netcf/chain.hpp"
#include "netcf/validator.hpp"

using namespace netcf;
using namespace netcf::testing;

namespace {

// Lift chain intervals onto a single-edge space so the region validator can
// serve as ground truth for the chain outputs.
struct LiftedInstance {
    NetworkSpace space;
    std::vector<NetObject> objects;
};

LiftedInstance lift(const std::vector<ChainInterval>& intervals) {
    Rational hi(1);
    for (const ChainInterval& iv : intervals) hi = Rational::max(hi, iv.hi + Rational(1));
    NetworkSpace space(SpaceKind::Tree, {0, 1}, {{0, 0, 1, hi}});
    std::vector<NetObject> objs;
    for (const ChainInterval& iv : intervals) {
        SubtreeRegion r;
        r.id = iv.id;
        r.add_fragment(0, iv.a_or(iv.lo), iv.hi);
        r.normalize();
        objs.emplace_back(std::move(r));
    }
    return {std::move(space), std::move(objs)};
}

std::vector<ChainInterval> random_intervals(std::mt19937_64& rng, int n) {
    std::vector<ChainInterval> out;
    for (int i = 0; i < n; ++i) {
        Rational a = rand_rational(rng, 24, 2);
        Rational len = rand_rational(rng, 8, 2);
        out.push_back({i + 1, a, a + len});
    }
    return out;
}

}  // namespace

TEST_CASE("nm chain on the worked three-interval set") {
    std::vector<ChainInterval> ivs{{1, Rational(0), Rational(2)},
                                   {2, Rational(1), Rational(3)},
                                   {3, Rational(5, 2), Rational(4)}};
    auto colors = nm_chain(ivs);
    CHECK(colors.size() == 3);
    auto lifted = lift(ivs);
    CHECK(check_nm(lifted.space, lifted.objects, colors).ok);
}

TEST_CASE("nm chain trivial cases") {
    auto single = nm_chain({{7, Rational(0), Rational(1)}});
    CHECK(single.at(7) == 0);

    std::vector<ChainInterval> disjoint{{1, Rational(0), Rational(1)},
                                        {2, Rational(2), Rational(3)}};
    auto colors = nm_chain(disjoint);
    auto lifted = lift(disjoint);
    CHECK(check_nm(lifted.space, lifted.objects, colors).ok);
}

TEST_CASE("cf chain on the worked four-interval set") {
    std::vector<ChainInterval> ivs{{1, Rational(0), Rational(10)},
                                   {2, Rational(1), Rational(3)},
                                   {3, Rational(2), Rational(12)},
                                   {4, Rational(11), Rational(13)}};
    auto colors = cf_chain(ivs);
    CHECK(colors.at(1) == 0);  // blue
    CHECK(colors.at(2) == 2);  // grey: fully covered
    CHECK(colors.at(3) == 1);  // red
    CHECK(colors.at(4) == 0);  // blue again
    auto lifted = lift(ivs);
    CHECK(check_cf(lifted.space, lifted.objects, colors).ok);
}

TEST_CASE("cf chain trivial cases") {
    auto single = cf_chain({{3, Rational(0), Rational(1)}});
    CHECK(single.at(3) == 0);

    std::vector<ChainInterval> dup{{1, Rational(0), Rational(1)}, {2, Rational(0), Rational(1)}};
    auto colors = cf_chain(dup);
    CHECK(colors.at(1) == 0);
    CHECK(colors.at(2) == 2);
    auto lifted = lift(dup);
    CHECK(check_cf(lifted.space, lifted.objects, colors).ok);
}

TEST_CASE("chain methods satisfy Lemma 1 on random interval families") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 1 + int(rng() % 24);
        auto ivs = random_intervals(rng, n);
        auto lifted = lift(ivs);

        auto nm = nm_chain(ivs);
        int nm_palette = 0;
        for (auto& [id, c] : nm) nm_palette = std::max(nm_palette, c + 1);
        CHECK(nm_palette <= 2);
        auto nm_verdict = check_nm(lifted.space, lifted.objects, nm);
        CAPTURE(iter, nm_verdict.message);
        CHECK(nm_verdict.ok);

        auto cf = cf_chain(ivs);
        int cf_palette = 0;
        for (auto& [id, c] : cf) cf_palette = std::max(cf_palette, c + 1);
        CHECK(cf_palette <= 3);
        auto cf_verdict = check_cf(lifted.space, lifted.objects, cf);
        CAPTURE(iter, cf_verdict.message);
        CHECK(cf_verdict.ok);
    }
}

TEST_CASE("chain methods are deterministic") {
    std::mt19937_64 rng(7);
    auto ivs = random_intervals(rng, 16);
    auto shuffled = ivs;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(nm_chain(ivs) == nm_chain(shuffled));
    CHECK(cf_chain(ivs) == cf_chain(shuffled));
}
