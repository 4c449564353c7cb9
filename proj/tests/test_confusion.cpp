#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mf1/confusion_matrix.hpp"

using namespace mf1;
using mf1::testing::permuted;
using mf1::testing::random_matrix;
using mf1::testing::random_permutation;
using mf1::testing::scaled;
using mf1::testing::transposed;

TEST_CASE("from_pairs counts pairs into cells") {
    const std::vector<PredictionPair> pairs{{0, 0}, {0, 1}, {1, 1}};
    const auto cm = ConfusionMatrix::from_pairs(pairs, 2);
    CHECK(cm.at(0, 0) == 1);
    CHECK(cm.at(0, 1) == 1);
    CHECK(cm.at(1, 0) == 0);
    CHECK(cm.at(1, 1) == 1);
    CHECK(cm.total() == 3);
}

TEST_CASE("from_pairs with no pairs gives the all-zero matrix") {
    const auto cm = ConfusionMatrix::from_pairs({}, 3);
    CHECK(cm.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(cm.at(i, j) == 0);
        }
    }
}

TEST_CASE("from_pairs matches an independent counting oracle") {
    SplitMix64 rng(0x5eed0001);
    const std::size_t n = 5;
    std::vector<PredictionPair> pairs;
    for (std::size_t k = 0; k < 10000; ++k) {
        pairs.push_back({rng.next() % n, rng.next() % n});
    }
    const auto cm = ConfusionMatrix::from_pairs(pairs, n);

    // oracle: scan the pair list, tally into a plain map
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> tally;
    for (const auto& p : pairs) {
        ++tally[{p.predicted, p.gold}];
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto it = tally.find({i, j});
            const std::uint64_t expected = it == tally.end() ? 0 : it->second;
            CHECK(cm.at(i, j) == expected);
            total += expected;
        }
    }
    CHECK(cm.total() == total);
    CHECK(total == pairs.size());

    // metrics through the matrix equal metrics from the oracle tallies
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t row = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row += cm.at(i, j);
            col += cm.at(j, i);
        }
        const double p_oracle =
            row == 0 ? 0.0
                     : static_cast<double>(cm.at(i, i)) / static_cast<double>(row);
        const double r_oracle =
            col == 0 ? 0.0
                     : static_cast<double>(cm.at(i, i)) / static_cast<double>(col);
        CHECK(precision(cm, i) == doctest::Approx(p_oracle).epsilon(1e-12));
        CHECK(recall(cm, i) == doctest::Approx(r_oracle).epsilon(1e-12));
    }
}

TEST_CASE("from_pairs rejects out-of-range indices naming the pair") {
    const std::vector<PredictionPair> pairs{{0, 0}, {7, 1}};
    CHECK_THROWS_WITH_AS(ConfusionMatrix::from_pairs(pairs, 2),
                         doctest::Contains("predicted 7"), std::out_of_range);
}

TEST_CASE("constructor validates shape") {
    CHECK_THROWS_AS(ConfusionMatrix(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(ConfusionMatrix(2, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("precision examples") {
    const ConfusionMatrix cm(2, {5, 10, 5, 10});
    CHECK(precision(cm, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    const ConfusionMatrix zero(2, {0, 0, 0, 0});
    CHECK(precision(zero, 0) == 0.0);

    const ConfusionMatrix skewed(2, {100, 10000, 0, 100});
    CHECK(precision(skewed, 0) == doctest::Approx(100.0 / 10100.0).epsilon(1e-15));
}

TEST_CASE("recall examples") {
    const ConfusionMatrix cm(2, {5, 10, 5, 10});
    CHECK(recall(cm, 0) == 0.5);

    const ConfusionMatrix zero(2, {0, 0, 0, 0});
    CHECK(recall(zero, 1) == 0.0);

    const ConfusionMatrix skewed(2, {100, 10000, 0, 100});
    CHECK(recall(skewed, 0) == 1.0);
}

TEST_CASE("f1 examples") {
    const ConfusionMatrix skewed(2, {100, 10000, 0, 100});
    CHECK(f1_class(skewed, 0) == doctest::Approx(1.0 / 51.0).epsilon(1e-15));

    const ConfusionMatrix perfect(2, {3, 0, 0, 3});
    CHECK(f1_class(perfect, 0) == 1.0);

    // P = 1/2, R = 1/10, harmonic mean 2*(1/20)/(6/10) = 1/6
    const ConfusionMatrix biased(2, {1, 1, 9, 19});
    CHECK(f1_class(biased, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("index out of range is rejected") {
    const ConfusionMatrix cm(2, {1, 2, 3, 4});
    CHECK_THROWS_AS(precision(cm, 2), std::out_of_range);
    CHECK_THROWS_AS(recall(cm, 2), std::out_of_range);
    CHECK_THROWS_AS(f1_class(cm, 5), std::out_of_range);
    CHECK_THROWS_AS(cm.at(0, 2), std::out_of_range);
}

TEST_CASE("per_class_metrics batches the three operations") {
    const ConfusionMatrix cm(2, {5, 10, 5, 10});
    const auto metrics = per_class_metrics(cm);
    REQUIRE(metrics.size() == 2);
    CHECK(metrics[0].precision == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(metrics[0].recall == 0.5);
    CHECK(metrics[0].f1 == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(metrics[1].precision == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(metrics[1].recall == 0.5);
    CHECK(metrics[1].f1 == doctest::Approx(4.0 / 7.0).epsilon(1e-15));

    const ConfusionMatrix identity(4, {1, 0, 0, 0, 0, 1, 0, 0,
                                       0, 0, 1, 0, 0, 0, 0, 1});
    for (const auto& m : per_class_metrics(identity)) {
        CHECK(m.precision == 1.0);
        CHECK(m.recall == 1.0);
        CHECK(m.f1 == 1.0);
    }

    const ConfusionMatrix zero(2, {0, 0, 0, 0});
    for (const auto& m : per_class_metrics(zero)) {
        CHECK(m.precision == 0.0);
        CHECK(m.recall == 0.0);
        CHECK(m.f1 == 0.0);
    }
}

TEST_CASE("harmonic mean is exact on equal arguments") {
    CHECK(harmonic_mean(0.2, 0.2) == 0.2);
    CHECK(harmonic_mean(0.0, 0.0) == 0.0);
    CHECK(harmonic_mean(1.0, 1.0) == 1.0);
    CHECK(harmonic_mean(0.5, 0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("per-class metrics sit between precision and recall and inside [0,1]") {
    SplitMix64 rng(0x5eed0002);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + rng.next() % 13;
        const auto cm = random_matrix(rng, n, 20);
        for (const auto& m : per_class_metrics(cm)) {
            CHECK(m.precision >= 0.0);
            CHECK(m.precision <= 1.0);
            CHECK(m.recall >= 0.0);
            CHECK(m.recall <= 1.0);
            CHECK(m.f1 >= 0.0);
            CHECK(m.f1 <= 1.0);
            if (m.precision + m.recall > 0.0) {
                CHECK(m.f1 >= std::min(m.precision, m.recall) - 1e-12);
                CHECK(m.f1 <= std::max(m.precision, m.recall) + 1e-12);
            } else {
                CHECK(m.f1 == 0.0);
            }
        }
    }
}

TEST_CASE("uniform scaling leaves all metrics unchanged") {
    SplitMix64 rng(0x5eed0003);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 2 + rng.next() % 12;
        const auto cm = random_matrix(rng, n, 50);
        const auto big = scaled(cm, 2 + rng.next() % 9);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(precision(big, i) ==
                  doctest::Approx(precision(cm, i)).epsilon(1e-12));
            CHECK(recall(big, i) ==
                  doctest::Approx(recall(cm, i)).epsilon(1e-12));
            CHECK(f1_class(big, i) ==
                  doctest::Approx(f1_class(cm, i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("relabelling classes permutes metrics identically") {
    SplitMix64 rng(0x5eed0004);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 2 + rng.next() % 12;
        const auto cm = random_matrix(rng, n, 50);
        const auto perm = random_permutation(n, rng);
        const auto moved = permuted(cm, perm);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(precision(moved, perm[i]) == precision(cm, i));
            CHECK(recall(moved, perm[i]) == recall(cm, i));
            CHECK(f1_class(moved, perm[i]) == f1_class(cm, i));
        }
    }
}

TEST_CASE("transposing swaps precision with recall and fixes f1") {
    SplitMix64 rng(0x5eed0005);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 2 + rng.next() % 12;
        const auto cm = random_matrix(rng, n, 50);
        const auto flipped = transposed(cm);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(precision(flipped, i) == recall(cm, i));
            CHECK(recall(flipped, i) == precision(cm, i));
            CHECK(f1_class(flipped, i) == f1_class(cm, i));
        }
    }
}

TEST_CASE("single-cell and all-zero matrices stay in range") {
    const ConfusionMatrix one(1, {7});
    CHECK(precision(one, 0) == 1.0);
    CHECK(recall(one, 0) == 1.0);
    CHECK(f1_class(one, 0) == 1.0);

    const ConfusionMatrix zero(1, {0});
    CHECK(precision(zero, 0) == 0.0);
    CHECK(f1_class(zero, 0) == 0.0);
}
