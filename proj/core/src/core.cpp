#include "validity/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace validity {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::structural: return "structural";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::invalid_request: return "invalid-request";
    case ErrorKind::degenerate_cluster: return "degenerate-cluster";
    case ErrorKind::separation_zero: return "separation-zero";
    case ErrorKind::solver_failure: return "solver-failure";
    case ErrorKind::too_small: return "too-small";
    case ErrorKind::format: return "format";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& rows, std::size_t& dim, const char* what) {
    dim = rows.empty() ? 0 : rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != dim) {
            throw Error(ErrorKind::structural, std::string(what) + " " + std::to_string(r) + " has dimension " +
                                                   std::to_string(rows[r].size()) + ", expected " + std::to_string(dim));
        }
        flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return flat;
}

bool all_finite(std::span<const double> values) {
    return std::all_of(values.begin(), values.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

// DataSet

DataSet::DataSet(std::vector<std::vector<double>> points, std::string name) : name_(std::move(name)) {
    values_ = flatten(points, d_, "point");
    n_ = points.size();
    validate();
}

DataSet::DataSet(std::size_t dim, std::vector<double> row_major, std::string name)
    : d_(dim), values_(std::move(row_major)), name_(std::move(name)) {
    if (d_ == 0 || values_.size() % d_ != 0) {
        throw Error(ErrorKind::structural, "data buffer of " + std::to_string(values_.size()) +
                                               " values is not a multiple of dimension " + std::to_string(d_));
    }
    n_ = values_.size() / d_;
    validate();
}

void DataSet::validate() const {
    if (n_ < 2) {
        throw Error(ErrorKind::too_small, "data set needs at least 2 points, got " + std::to_string(n_));
    }
    if (d_ < 1) {
        throw Error(ErrorKind::structural, "data set dimension must be at least 1");
    }
    if (!all_finite(values_)) {
        throw Error(ErrorKind::structural, "data set contains a non-finite value");
    }
}

std::vector<double> DataSet::mean() const {
    std::vector<double> out(d_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
        auto x = point(j);
        for (std::size_t q = 0; q < d_; ++q) {
            out[q] += x[q];
        }
    }
    for (auto& v : out) {
        v /= static_cast<double>(n_);
    }
    return out;
}

// MembershipMatrix

namespace {

void check_and_clamp_column(std::span<double> column, std::size_t j) {
    double sum = 0.0;
    for (double& mu : column) {
        if (!std::isfinite(mu) || mu < -kEntryTolerance || mu > 1.0 + kEntryTolerance) {
            throw Error(ErrorKind::degenerate_input,
                        "membership in column " + std::to_string(j) + " outside [0, 1]: " + std::to_string(mu));
        }
        mu = std::clamp(mu, 0.0, 1.0);
        sum += mu;
    }
    if (std::abs(sum - 1.0) > kColumnSumTolerance) {
        throw Error(ErrorKind::degenerate_input,
                    "membership column " + std::to_string(j) + " sums to " + std::to_string(sum));
    }
}

}  // namespace

MembershipMatrix::MembershipMatrix(std::size_t clusters, std::size_t points, std::vector<double> row_major)
    : c_(clusters), n_(points), mu_(std::move(row_major)) {
    if (c_ < 2) {
        throw Error(ErrorKind::structural, "membership matrix needs c >= 2, got " + std::to_string(c_));
    }
    if (n_ < 1 || mu_.size() != c_ * n_) {
        throw Error(ErrorKind::structural, "membership buffer has " + std::to_string(mu_.size()) +
                                               " values, expected " + std::to_string(c_) + " x " + std::to_string(n_));
    }
    std::vector<double> col(c_);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t i = 0; i < c_; ++i) {
            col[i] = mu_[i * n_ + j];
        }
        check_and_clamp_column(col, j);
        for (std::size_t i = 0; i < c_; ++i) {
            mu_[i * n_ + j] = col[i];
        }
    }
}

std::vector<double> MembershipMatrix::column(std::size_t j) const {
    std::vector<double> col(c_);
    for (std::size_t i = 0; i < c_; ++i) {
        col[i] = mu_[i * n_ + j];
    }
    return col;
}

void MembershipMatrix::assign_column(std::size_t j, std::span<const double> memberships) {
    if (j >= n_ || memberships.size() != c_) {
        throw Error(ErrorKind::structural, "column assignment out of shape");
    }
    std::vector<double> col(memberships.begin(), memberships.end());
    check_and_clamp_column(col, j);
    for (std::size_t i = 0; i < c_; ++i) {
        mu_[i * n_ + j] = col[i];
    }
}

// Centroids

Centroids::Centroids(std::vector<std::vector<double>> centers) {
    v_ = flatten(centers, d_, "centroid");
    c_ = centers.size();
    if (c_ < 1 || d_ < 1) {
        throw Error(ErrorKind::structural, "centroids must be non-empty");
    }
    if (!all_finite(v_)) {
        throw Error(ErrorKind::structural, "centroid has a non-finite component");
    }
}

Centroids::Centroids(std::size_t dim, std::vector<double> row_major) : d_(dim), v_(std::move(row_major)) {
    if (d_ == 0 || v_.empty() || v_.size() % d_ != 0) {
        throw Error(ErrorKind::structural, "centroid buffer does not match dimension " + std::to_string(d_));
    }
    c_ = v_.size() / d_;
    if (!all_finite(v_)) {
        throw Error(ErrorKind::structural, "centroid has a non-finite component");
    }
}

std::vector<double> Centroids::mean() const {
    std::vector<double> out(d_, 0.0);
    for (std::size_t i = 0; i < c_; ++i) {
        for (std::size_t q = 0; q < d_; ++q) {
            out[q] += v_[i * d_ + q];
        }
    }
    for (auto& v : out) {
        v /= static_cast<double>(c_);
    }
    return out;
}

// FuzzyCluster

FuzzyCluster::FuzzyCluster(const MembershipMatrix& matrix, std::size_t index) : matrix_(&matrix), index_(index) {
    if (index >= matrix.clusters()) {
        throw Error(ErrorKind::structural, "cluster index " + std::to_string(index) + " out of range");
    }
}

// FcmConfig

void FcmConfig::validate() const {
    if (!(m > 1.0) || !std::isfinite(m)) {
        throw Error(ErrorKind::invalid_request, "fuzzifier m must be > 1");
    }
    if (!(epsilon > 0.0)) {
        throw Error(ErrorKind::invalid_request, "epsilon must be > 0");
    }
    if (max_iter < 1) {
        throw Error(ErrorKind::invalid_request, "max_iter must be >= 1");
    }
    if (restarts < 1) {
        throw Error(ErrorKind::invalid_request, "restarts must be >= 1");
    }
}

// free functions

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::structural, "dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                               std::to_string(b.size()));
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sum += diff * diff;
    }
    return sum;
}

MembershipMatrix column_normalize(std::size_t clusters, std::size_t points, std::span<const double> raw) {
    if (raw.size() != clusters * points) {
        throw Error(ErrorKind::structural, "raw grid size does not match clusters x points");
    }
    std::vector<double> out(raw.begin(), raw.end());
    for (std::size_t j = 0; j < points; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < clusters; ++i) {
            const double x = raw[i * points + j];
            if (!std::isfinite(x) || x < 0.0) {
                throw Error(ErrorKind::degenerate_input, "column " + std::to_string(j) + " has a negative entry");
            }
            sum += x;
        }
        if (!(sum > 0.0)) {
            throw Error(ErrorKind::degenerate_input, "column " + std::to_string(j) + " sums to zero");
        }
        for (std::size_t i = 0; i < clusters; ++i) {
            out[i * points + j] = raw[i * points + j] / sum;
        }
    }
    return MembershipMatrix(clusters, points, std::move(out));
}

}  // namespace validity
