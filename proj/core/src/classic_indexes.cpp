#include "validity/classic_indexes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace validity::indexes {

namespace {

void check_shapes(const DataSet& data, const MembershipMatrix& u, const Centroids& v) {
    if (u.points() != data.size() || v.dim() != data.dim() || v.count() != u.clusters()) {
        throw Error(ErrorKind::structural, "data, memberships and centroids have inconsistent shapes");
    }
}

/// sum_i sum_j mu_ij^2 |x_j - v_i|^2
double fuzzy_compactness(const DataSet& data, const MembershipMatrix& u, const Centroids& v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < u.clusters(); ++i) {
        for (std::size_t j = 0; j < data.size(); ++j) {
            const double mu = u(i, j);
            sum += mu * mu * squared_distance(data.point(j), v.center(i));
        }
    }
    return sum;
}

double min_squared_separation(const Centroids& v) {
    double out = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.count(); ++i) {
        for (std::size_t k = i + 1; k < v.count(); ++k) {
            out = std::min(out, squared_distance(v.center(i), v.center(k)));
        }
    }
    if (!(out > 0.0) || !std::isfinite(out)) {
        throw Error(ErrorKind::separation_zero, "two centroids coincide");
    }
    return out;
}

double max_squared_separation(const Centroids& v) {
    double out = 0.0;
    for (std::size_t i = 0; i < v.count(); ++i) {
        for (std::size_t k = i + 1; k < v.count(); ++k) {
            out = std::max(out, squared_distance(v.center(i), v.center(k)));
        }
    }
    return out;
}

double norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double e : x) {
        s += e * e;
    }
    return std::sqrt(s);
}

}  // namespace

void PeConfig::validate() const {
    if (!(log_base > 1.0) || !std::isfinite(log_base)) {
        throw Error(ErrorKind::invalid_request, "log base must be > 1");
    }
}

void CwbParams::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorKind::invalid_request, "CWB alpha must be >= 0");
    }
}

void BcritParams::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorKind::invalid_request, "Bcrit alpha must be >= 0");
    }
}

double v_pc(const MembershipMatrix& u) {
    double sum = 0.0;
    for (double mu : u.values()) {
        sum += mu * mu;
    }
    return sum / static_cast<double>(u.points());
}

double v_pe(const MembershipMatrix& u, const PeConfig& cfg) {
    cfg.validate();
    const double log_a = std::log(cfg.log_base);
    double sum = 0.0;
    for (double mu : u.values()) {
        if (mu > 0.0) {
            sum += mu * std::log(mu);
        }
    }
    // Rounding can leave -0.0 or a tiny negative for crisp matrices.
    return std::max(0.0, -sum / (log_a * static_cast<double>(u.points())));
}

double v_xb(const DataSet& data, const MembershipMatrix& u, const Centroids& v) {
    check_shapes(data, u, v);
    const double separation = min_squared_separation(v);
    return fuzzy_compactness(data, u, v) / (static_cast<double>(data.size()) * separation);
}

double v_fs(const DataSet& data, const MembershipMatrix& u, const Centroids& v) {
    check_shapes(data, u, v);
    const auto v_bar = v.mean();
    double sum = 0.0;
    for (std::size_t i = 0; i < u.clusters(); ++i) {
        const double spread = squared_distance(v.center(i), v_bar);
        for (std::size_t j = 0; j < data.size(); ++j) {
            const double mu = u(i, j);
            sum += mu * mu * (squared_distance(data.point(j), v.center(i)) - spread);
        }
    }
    return sum;
}

double v_k(const DataSet& data, const MembershipMatrix& u, const Centroids& v) {
    check_shapes(data, u, v);
    const double separation = min_squared_separation(v);
    const auto v_bar = v.mean();
    double punish = 0.0;
    for (std::size_t i = 0; i < v.count(); ++i) {
        punish += squared_distance(v.center(i), v_bar);
    }
    punish /= static_cast<double>(v.count());
    return (fuzzy_compactness(data, u, v) + punish) / separation;
}

std::vector<double> data_variance(const DataSet& data) {
    const auto mean = data.mean();
    std::vector<double> out(data.dim(), 0.0);
    for (std::size_t j = 0; j < data.size(); ++j) {
        auto x = data.point(j);
        for (std::size_t q = 0; q < data.dim(); ++q) {
            const double diff = x[q] - mean[q];
            out[q] += diff * diff;
        }
    }
    for (auto& e : out) {
        e /= static_cast<double>(data.size());
    }
    return out;
}

std::vector<double> fuzzy_variance(const DataSet& data, const MembershipMatrix& u, const Centroids& v, std::size_t i) {
    check_shapes(data, u, v);
    auto center = v.center(i);
    std::vector<double> out(data.dim(), 0.0);
    for (std::size_t j = 0; j < data.size(); ++j) {
        auto x = data.point(j);
        const double mu = u(i, j);
        for (std::size_t q = 0; q < data.dim(); ++q) {
            const double diff = x[q] - center[q];
            out[q] += mu * diff * diff;
        }
    }
    for (auto& e : out) {
        e /= static_cast<double>(data.size());
    }
    return out;
}

double cwb_separation(const Centroids& v) {
    const double d_min = std::sqrt(min_squared_separation(v));
    const double d_max = std::sqrt(max_squared_separation(v));
    double inverse_sum = 0.0;
    for (std::size_t k = 0; k < v.count(); ++k) {
        double row = 0.0;
        for (std::size_t z = 0; z < v.count(); ++z) {
            row += std::sqrt(squared_distance(v.center(k), v.center(z)));
        }
        inverse_sum += 1.0 / row;
    }
    return d_max / d_min * inverse_sum;
}

double cwb_variance(const DataSet& data, const MembershipMatrix& u, const Centroids& v) {
    check_shapes(data, u, v);
    const double data_spread = norm(data_variance(data));
    if (!(data_spread > 0.0)) {
        throw Error(ErrorKind::degenerate_input, "data set has zero variance");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < u.clusters(); ++i) {
        sum += norm(fuzzy_variance(data, u, v, i));
    }
    return sum / (static_cast<double>(u.clusters()) * data_spread);
}

double v_cwb(const DataSet& data, const MembershipMatrix& u, const Centroids& v, const CwbParams& p) {
    p.validate();
    check_shapes(data, u, v);
    const double separation = cwb_separation(v);
    return p.alpha * cwb_variance(data, u, v) + separation;
}

double v_bcrit(const DataSet& data, const MembershipMatrix& u, const Centroids& v, const BcritParams& p) {
    p.validate();
    check_shapes(data, u, v);
    const double ratio = std::sqrt(max_squared_separation(v) / min_squared_separation(v));

    double total = 0.0;
    for (double e : data_variance(data)) {
        total += e;
    }
    if (!(total > 0.0)) {
        throw Error(ErrorKind::degenerate_input, "data set has zero variance");
    }
    double within = 0.0;
    for (std::size_t k = 0; k < u.clusters(); ++k) {
        for (double e : fuzzy_variance(data, u, v, k)) {
            within += e;
        }
    }
    return ratio + p.alpha / static_cast<double>(u.clusters()) * within / total;
}

}  // namespace validity::indexes
