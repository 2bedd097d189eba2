#ifndef VALIDITY_TESTS_SUPPORT_HPP
#define VALIDITY_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "validity/core.hpp"

namespace support {

inline validity::DataSet to_data(const oracle::Grid& x) { return validity::DataSet(x, "test"); }

inline validity::MembershipMatrix to_matrix(const oracle::Grid& u) {
    std::vector<double> flat;
    for (const auto& row : u) flat.insert(flat.end(), row.begin(), row.end());
    return validity::MembershipMatrix(u.size(), u[0].size(), std::move(flat));
}

inline validity::Centroids to_centroids(const oracle::Grid& v) { return validity::Centroids(v); }

/// Columns given point by point: cols[j][i].
inline validity::MembershipMatrix from_columns(const std::vector<std::vector<double>>& cols) {
    const size_t c = cols[0].size(), n = cols.size();
    std::vector<double> flat(c * n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < c; ++i) flat[i * n + j] = cols[j][i];
    return validity::MembershipMatrix(c, n, std::move(flat));
}

/// Random normalized c x n matrix.
inline validity::MembershipMatrix random_matrix(std::mt19937_64& rng, size_t c, size_t n) {
    std::uniform_real_distribution<double> raw(0.0, 1.0);
    std::vector<double> g(c * n);
    for (auto& e : g) e = raw(rng);
    for (size_t j = 0; j < n; ++j) g[j] += 1e-6;  // no zero-sum column
    return validity::column_normalize(c, n, g);
}

/// Random crisp c x n matrix.
inline validity::MembershipMatrix random_crisp(std::mt19937_64& rng, size_t c, size_t n) {
    std::uniform_int_distribution<size_t> pick(0, c - 1);
    std::vector<double> g(c * n, 0.0);
    for (size_t j = 0; j < n; ++j) g[pick(rng) * n + j] = 1.0;
    return validity::MembershipMatrix(c, n, std::move(g));
}

#define CHECK_THROWS_KIND(expr, expected_kind)                                   \
    do {                                                                         \
        bool thrown_ = false;                                                    \
        try {                                                                    \
            (void)(expr);                                                        \
        } catch (const validity::Error& e_) {                                    \
            thrown_ = true;                                                      \
            CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());              \
        }                                                                        \
        CHECK_MESSAGE(thrown_, "expected validity::Error from " #expr);          \
    } while (0)

}  // namespace support

#endif
