#ifndef VALIDITY_TESTS_SCENARIOS_HPP
#define VALIDITY_TESTS_SCENARIOS_HPP

#include <vector>

#include "validity/core.hpp"
#include "validity/fcm.hpp"

namespace scenarios {

/// Two 2-cluster partitions sharing the centroid pair (-2, 0), (2, 0).
/// `a` places points near the midpoint, `b` keeps them close to the centroids.
struct OverlapPair {
    validity::Centroids v;
    validity::DataSet x_a, x_b;
    validity::MembershipMatrix u_a, u_b;
};

inline OverlapPair overlap_pair() {
    using validity::DataSet;
    const validity::Centroids v({{-2.0, 0.0}, {2.0, 0.0}});
    DataSet a({{-2.5, 0.0}, {-2.0, 0.5}, {-0.3, 0.0}, {-0.1, 0.0}, {0.1, 0.0}, {0.3, 0.0}, {2.0, 0.5}, {2.5, 0.0}},
              "overlap-a");
    DataSet b({{-2.5, 0.0}, {-2.0, 0.5}, {-1.9, 0.0}, {-1.5, 0.0}, {1.5, 0.0}, {1.9, 0.0}, {2.0, 0.5}, {2.5, 0.0}},
              "overlap-b");
    auto u_a = validity::fcm::update_memberships(a, v, 2.0);
    auto u_b = validity::fcm::update_memberships(b, v, 2.0);
    return {v, std::move(a), std::move(b), std::move(u_a), std::move(u_b)};
}

/// Points whose smaller membership in the two clusters is at least `level`.
inline std::size_t shared_points(const validity::MembershipMatrix& u, double level) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < u.points(); ++j) {
        count += std::min(u(0, j), u(1, j)) >= level ? 1 : 0;
    }
    return count;
}

}  // namespace scenarios

#endif
