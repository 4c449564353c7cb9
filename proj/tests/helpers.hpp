#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mf1/confusion_matrix.hpp"
#include "mf1/rng.hpp"

namespace mf1::testing {

inline ConfusionMatrix random_matrix(SplitMix64& rng, std::size_t n,
                                     std::uint64_t max_cell = 1000) {
    std::vector<std::uint64_t> cells(n * n);
    for (auto& c : cells) {
        c = rng.next() % (max_cell + 1);
    }
    return ConfusionMatrix(n, std::move(cells));
}

/// A class with an empty diagonal cell but a nonempty row or column has
/// P = R = 0 by convention even though it absorbs errors. Such classes sit
/// outside the divergence equivalence (see the dead-class boundary test).
inline bool has_dead_nonempty_class(const ConfusionMatrix& cm) {
    for (std::size_t i = 0; i < cm.size(); ++i) {
        if (cm.at(i, i) == 0 && (cm.row_sum(i) > 0 || cm.col_sum(i) > 0)) {
            return true;
        }
    }
    return false;
}

/// Random matrix from the divergence theorems' domain: every class that
/// appears in the data has a nonzero diagonal cell. Rejects about 0.7% of
/// unrestricted draws.
inline ConfusionMatrix random_live_matrix(SplitMix64& rng, std::size_t n,
                                          std::uint64_t max_cell = 1000) {
    for (;;) {
        auto cm = random_matrix(rng, n, max_cell);
        if (!has_dead_nonempty_class(cm)) {
            return cm;
        }
    }
}

inline ConfusionMatrix transposed(const ConfusionMatrix& cm) {
    const std::size_t n = cm.size();
    std::vector<std::uint64_t> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cells[j * n + i] = cm.at(i, j);
        }
    }
    return ConfusionMatrix(n, std::move(cells));
}

inline ConfusionMatrix scaled(const ConfusionMatrix& cm, std::uint64_t factor) {
    const std::size_t n = cm.size();
    std::vector<std::uint64_t> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cells[i * n + j] = cm.at(i, j) * factor;
        }
    }
    return ConfusionMatrix(n, std::move(cells));
}

/// Relabel classes: class i becomes perm[i] in the result.
inline ConfusionMatrix permuted(const ConfusionMatrix& cm,
                                const std::vector<std::size_t>& perm) {
    const std::size_t n = cm.size();
    std::vector<std::uint64_t> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cells[perm[i] * n + perm[j]] = cm.at(i, j);
        }
    }
    return ConfusionMatrix(n, std::move(cells));
}

inline std::vector<std::size_t> random_permutation(std::size_t n,
                                                   SplitMix64& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.next() % i]);
    }
    return perm;
}

}  // namespace mf1::testing
