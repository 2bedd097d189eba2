#ifndef VALIDITY_FCM_HPP
#define VALIDITY_FCM_HPP

/**
 * @file fcm.hpp
 * @brief Fuzzy C-Means by alternating membership and centroid updates.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "validity/core.hpp"

namespace validity::fcm {

struct FcmResult {
    MembershipMatrix u;
    Centroids v;

    /**
     * J_m after the initial (membership, centroid) step and after every
     * subsequent one. Nonincreasing up to rounding.
     */
    std::vector<double> jm_trace;

    /// Number of (membership, centroid) steps after the initial one.
    std::size_t iterations = 0;

    /// True if the membership change fell below epsilon before max_iter.
    bool converged = false;

    std::size_t restart_index = 0;
    std::uint64_t seed_used = 0;

    double final_jm() const { return jm_trace.back(); }
};

/// c distinct data points chosen uniformly without replacement. Throws Error{invalid_request} unless 2 <= c <= n.
Centroids init_centroids(const DataSet& data, std::size_t c, std::uint64_t seed);

/**
 * Membership step. A point sitting exactly on one or more centroids takes
 * membership 1 split equally among those centroids and 0 elsewhere.
 */
MembershipMatrix update_memberships(const DataSet& data, const Centroids& v, double m);

/// Centroid step. Throws Error{degenerate_cluster} if a cluster has zero membership mass.
Centroids update_centroids(const DataSet& data, const MembershipMatrix& u, double m);

/// J_m(U, V; X) = sum_i sum_j mu_ij^m |x_j - v_i|^2.
double objective(const DataSet& data, const MembershipMatrix& u, const Centroids& v, double m);

/// One restart from the given seed. Throws Error{degenerate_cluster} if it degenerates.
FcmResult run_single(const DataSet& data, std::size_t c, const FcmConfig& cfg, std::uint64_t seed);

/**
 * Runs `cfg.restarts` restarts seeded cfg.seed, cfg.seed + 1, ... and keeps the
 * one with the lowest final J_m (earliest restart on ties). Restarts that lose
 * a cluster or produce non-finite memberships are skipped; if none survive,
 * throws Error{solver_failure}.
 */
FcmResult run(const DataSet& data, std::size_t c, const FcmConfig& cfg);

}  // namespace validity::fcm

#endif
