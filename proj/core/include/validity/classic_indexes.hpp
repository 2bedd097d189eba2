#ifndef VALIDITY_CLASSIC_INDEXES_HPP
#define VALIDITY_CLASSIC_INDEXES_HPP

/**
 * @file classic_indexes.hpp
 * @brief The baseline fuzzy cluster validity indexes.
 *
 * Each index is a pure function of (data, memberships, centroids). The
 * partition coefficient is maximized over c; every other index is minimized.
 *
 * Indexes that divide by a minimum centroid separation throw
 * Error{separation_zero} when two centroids coincide.
 */

#include <numbers>

#include "validity/core.hpp"

namespace validity::indexes {

struct PeConfig {
    /// Base of the logarithm in the partition entropy. Must be > 1.
    double log_base = std::numbers::e;

    void validate() const;
};

struct CwbParams {
    /// Weight of the variance term; >= 0.
    double alpha = 1.0;

    void validate() const;
};

struct BcritParams {
    /// Weight of the variance term; >= 0.
    double alpha = 1.0;

    void validate() const;
};

/// Partition coefficient, sum of squared memberships over n. In [1/c, 1].
double v_pc(const MembershipMatrix& u);

/// Partition entropy with 0 log 0 = 0. In [0, log_a c].
double v_pe(const MembershipMatrix& u, const PeConfig& cfg = {});

/// Xie-Beni: fuzzy compactness over n times the minimum squared centroid separation.
double v_xb(const DataSet& data, const MembershipMatrix& u, const Centroids& v);

/// Fukuyama-Sugeno. v-bar is the unweighted mean of the centroids. May be negative.
double v_fs(const DataSet& data, const MembershipMatrix& u, const Centroids& v);

/// Kwon: Xie-Beni numerator plus a punishing term, without the factor n.
double v_k(const DataSet& data, const MembershipMatrix& u, const Centroids& v);

/**
 * Rezaee's compose-within-between index
 *
 *   alpha * sum_i |sigma(v_i)| / (c |sigma(X)|)  +  (Dmax / Dmin) * sum_k (sum_z |v_k - v_z|)^-1
 *
 * with sigma(v_i)_q = (1/n) sum_j mu_ij (x_jq - v_iq)^2 and sigma(X) the
 * per-dimension variance of the data about its mean.
 */
double v_cwb(const DataSet& data, const MembershipMatrix& u, const Centroids& v, const CwbParams& p);

/// The separation term of v_cwb alone; equals v_cwb with alpha = 0.
double cwb_separation(const Centroids& v);

/// The unweighted variance term of v_cwb.
double cwb_variance(const DataSet& data, const MembershipMatrix& u, const Centroids& v);

/**
 * Boudraa's criterion: max/min centroid distance ratio plus
 * alpha / c * sum_q sum_k var_q(k) / sum_q var_t(q), where var_q(k) is the
 * fuzzy variance of cluster k along dimension q (as in v_cwb) and var_t(q)
 * the data variance along q.
 */
double v_bcrit(const DataSet& data, const MembershipMatrix& u, const Centroids& v, const BcritParams& p);

/// Per-dimension variance of the data about its mean (1/n normalization).
std::vector<double> data_variance(const DataSet& data);

/// Per-dimension fuzzy variance of cluster i: (1/n) sum_j mu_ij (x_jq - v_iq)^2.
std::vector<double> fuzzy_variance(const DataSet& data, const MembershipMatrix& u, const Centroids& v, std::size_t i);

}  // namespace validity::indexes

#endif
