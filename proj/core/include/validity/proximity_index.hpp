#ifndef VALIDITY_PROXIMITY_INDEX_HPP
#define VALIDITY_PROXIMITY_INDEX_HPP

/**
 * @file proximity_index.hpp
 * @brief Inter-cluster proximity and the validity index built on it.
 *
 * Two fuzzy clusters are proximate at membership level mu for point x_j when
 * both memberships of x_j reach mu. The proximity function f(mu) counts such
 * points, each weighted by how vague it is (omega). Summing f over a grid of
 * levels gives the pair proximity S(Fp, Fq), and the validity index averages S
 * over cluster pairs. Lower is better.
 */

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "validity/core.hpp"

namespace validity::proximity {

/**
 * Absolute slack in the level test `mu <= min(mu_p, mu_q)`. Grid levels are
 * computed as k * step, which can land an ulp above a membership that is
 * mathematically equal to the level (3 * 0.1 > 0.3 in binary).
 */
inline constexpr double kLevelSlack = 1e-12;

/// The membership levels {h, 2h, ..., floor(1/h) h} summed over.
struct MuGrid {
    double step = 0.01;

    void validate() const;
    std::size_t level_count() const;
    double level(std::size_t k) const { return static_cast<double>(k) * step; }  ///< k in [1, level_count()]
    std::vector<double> levels() const;
};

enum class WeightMode {
    ratio,         ///< omega = second-largest over largest membership of the point
    constant_one,  ///< omega = 1 for every point (unweighted ablation)
};

std::string_view to_string(WeightMode mode) noexcept;

/// Parses "ratio" or "one" / "constant_one". Throws Error{invalid_request}.
WeightMode parse_weight_mode(std::string_view text);

/**
 * Parameters of the vagueness weight. `vague_floor` and `crisp_ceiling`
 * delimit the bands used by classify_point: a point is vague when every
 * membership is <= vague_floor and crisp when some membership is >= crisp_ceiling.
 */
struct WeightConfig {
    WeightMode mode = WeightMode::ratio;
    double vague_floor = 0.5;
    double crisp_ceiling = 0.8;

    void validate() const;
};

enum class PointClass { vague, intermediate, crisp };

PointClass classify_point(std::span<const double> column, const WeightConfig& cfg);

/// 1.0 if mu <= min(mu_p(x_j), mu_q(x_j)) (inclusive, up to kLevelSlack), else 0.0.
double delta(std::size_t point, double mu, const FuzzyCluster& fp, const FuzzyCluster& fq);

/// Vagueness weight of one point from its membership column. Result in [0, 1].
double omega(std::span<const double> column, const WeightConfig& cfg);

/// omega for every point of u.
std::vector<double> point_weights(const MembershipMatrix& u, const WeightConfig& cfg);

/// f(mu) = sum_j delta(x_j, mu) * w_j. `weights` must have one entry per point.
double f_mu(double mu, const FuzzyCluster& fp, const FuzzyCluster& fq, std::span<const double> weights);

/// S(Fp, Fq) = sum over grid levels of f_mu, evaluated level by level.
double pair_proximity(const FuzzyCluster& fp, const FuzzyCluster& fq, const MuGrid& grid, const WeightConfig& cfg);
double pair_proximity(const FuzzyCluster& fp, const FuzzyCluster& fq, const MuGrid& grid,
                      std::span<const double> weights);

/**
 * Same value as pair_proximity, computed per point by counting the grid
 * levels at or below min(mu_p, mu_q) in one division.
 */
double pair_proximity_closed_form(const FuzzyCluster& fp, const FuzzyCluster& fq, const MuGrid& grid,
                                  std::span<const double> weights);

/**
 * The validity index: the ordered sum of S(Fp, Fq) over p != q divided by
 * C(c, 2). Each unordered pair is therefore counted twice; for c = 2 the
 * result is 2 S(F1, F2). Minimize over c.
 */
double v_proposed(const MembershipMatrix& u, const MuGrid& grid = {}, const WeightConfig& cfg = {});

}  // namespace validity::proximity

#endif
