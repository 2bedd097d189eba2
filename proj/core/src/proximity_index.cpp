#include "validity/proximity_index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace validity::proximity {

namespace {

void check_same_matrix(const FuzzyCluster& fp, const FuzzyCluster& fq) {
    if (&fp.matrix() != &fq.matrix()) {
        throw Error(ErrorKind::structural, "fuzzy clusters come from different membership matrices");
    }
}

void check_weights(const FuzzyCluster& fp, std::span<const double> weights) {
    if (weights.size() != fp.size()) {
        throw Error(ErrorKind::structural, "weight vector has " + std::to_string(weights.size()) +
                                               " entries for " + std::to_string(fp.size()) + " points");
    }
}

}  // namespace

// MuGrid

void MuGrid::validate() const {
    if (!(step > 0.0) || !(step <= 1.0)) {
        throw Error(ErrorKind::invalid_request, "mu-grid step must be in (0, 1]");
    }
}

std::size_t MuGrid::level_count() const {
    validate();
    auto count = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
    // Keep the top level inside [0, 1].
    while (count > 1 && level(count) > 1.0 + kLevelSlack) {
        --count;
    }
    return count;
}

std::vector<double> MuGrid::levels() const {
    const std::size_t count = level_count();
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) {
        out.push_back(level(k));
    }
    return out;
}

// WeightConfig

std::string_view to_string(WeightMode mode) noexcept {
    switch (mode) {
    case WeightMode::ratio: return "ratio";
    case WeightMode::constant_one: return "one";
    }
    return "unknown";
}

WeightMode parse_weight_mode(std::string_view text) {
    if (text == "ratio") {
        return WeightMode::ratio;
    }
    if (text == "one" || text == "constant_one") {
        return WeightMode::constant_one;
    }
    throw Error(ErrorKind::invalid_request, "unknown omega mode '" + std::string(text) + "' (expected ratio|one)");
}

void WeightConfig::validate() const {
    if (!(vague_floor > 0.0) || !(vague_floor <= crisp_ceiling) || !(crisp_ceiling <= 1.0)) {
        throw Error(ErrorKind::invalid_request, "weight bands must satisfy 0 < vague_floor <= crisp_ceiling <= 1");
    }
}

PointClass classify_point(std::span<const double> column, const WeightConfig& cfg) {
    const double top = *std::max_element(column.begin(), column.end());
    if (top >= cfg.crisp_ceiling) {
        return PointClass::crisp;
    }
    if (top <= cfg.vague_floor) {
        return PointClass::vague;
    }
    return PointClass::intermediate;
}

// Proximity

double delta(std::size_t point, double mu, const FuzzyCluster& fp, const FuzzyCluster& fq) {
    const double shared = std::min(fp.membership(point), fq.membership(point));
    return mu <= shared + kLevelSlack ? 1.0 : 0.0;
}

double omega(std::span<const double> column, const WeightConfig& cfg) {
    if (column.size() < 2) {
        throw Error(ErrorKind::structural, "omega needs at least two memberships per point");
    }
    if (cfg.mode == WeightMode::constant_one) {
        return 1.0;
    }
    double first = 0.0;
    double second = 0.0;
    for (double mu : column) {
        if (mu > first) {
            second = first;
            first = mu;
        } else if (mu > second) {
            second = mu;
        }
    }
    if (!(first > 0.0)) {
        throw Error(ErrorKind::degenerate_input, "membership column has no positive entry");
    }
    return second / first;
}

std::vector<double> point_weights(const MembershipMatrix& u, const WeightConfig& cfg) {
    cfg.validate();
    std::vector<double> out(u.points());
    std::vector<double> col(u.clusters());
    for (std::size_t j = 0; j < u.points(); ++j) {
        for (std::size_t i = 0; i < u.clusters(); ++i) {
            col[i] = u(i, j);
        }
        out[j] = omega(col, cfg);
    }
    return out;
}

double f_mu(double mu, const FuzzyCluster& fp, const FuzzyCluster& fq, std::span<const double> weights) {
    check_same_matrix(fp, fq);
    check_weights(fp, weights);
    double sum = 0.0;
    for (std::size_t j = 0; j < fp.size(); ++j) {
        sum += delta(j, mu, fp, fq) * weights[j];
    }
    return sum;
}

double pair_proximity(const FuzzyCluster& fp, const FuzzyCluster& fq, const MuGrid& grid,
                      std::span<const double> weights) {
    const std::size_t count = grid.level_count();
    double sum = 0.0;
    for (std::size_t k = 1; k <= count; ++k) {
        sum += f_mu(grid.level(k), fp, fq, weights);
    }
    return sum;
}

double pair_proximity(const FuzzyCluster& fp, const FuzzyCluster& fq, const MuGrid& grid, const WeightConfig& cfg) {
    check_same_matrix(fp, fq);
    return pair_proximity(fp, fq, grid, point_weights(fp.matrix(), cfg));
}

double pair_proximity_closed_form(const FuzzyCluster& fp, const FuzzyCluster& fq, const MuGrid& grid,
                                  std::span<const double> weights) {
    check_same_matrix(fp, fq);
    check_weights(fp, weights);
    const std::size_t count = grid.level_count();
    double sum = 0.0;
    for (std::size_t j = 0; j < fp.size(); ++j) {
        const double shared = std::min(fp.membership(j), fq.membership(j)) + kLevelSlack;
        auto reached = static_cast<std::size_t>(std::max(0.0, std::floor(shared / grid.step)));
        // Division and k * step round independently; settle the last level directly.
        while (reached > 0 && grid.level(reached) > shared) {
            --reached;
        }
        while (reached < count && grid.level(reached + 1) <= shared) {
            ++reached;
        }
        reached = std::min(reached, count);
        sum += static_cast<double>(reached) * weights[j];
    }
    return sum;
}

double v_proposed(const MembershipMatrix& u, const MuGrid& grid, const WeightConfig& cfg) {
    grid.validate();
    const std::size_t c = u.clusters();
    const auto weights = point_weights(u, cfg);

    std::vector<FuzzyCluster> clusters;
    clusters.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
        clusters.emplace_back(u, i);
    }

    double total = 0.0;
    for (std::size_t p = 0; p < c; ++p) {
        for (std::size_t q = 0; q < c; ++q) {
            if (p != q) {
                total += pair_proximity_closed_form(clusters[p], clusters[q], grid, weights);
            }
        }
    }
    const double pairs = static_cast<double>(c) * static_cast<double>(c - 1) / 2.0;
    return total / pairs;
}

}  // namespace validity::proximity
