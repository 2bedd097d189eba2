#ifndef VALIDITY_CORE_HPP
#define VALIDITY_CORE_HPP

/**
 * @file core.hpp
 * @brief Domain types shared by the solver, the indexes and the harness.
 *
 * Every type checks its structural invariants on construction and throws
 * `validity::Error` when they do not hold, so downstream code can assume
 * well-formed inputs.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "validity/error.hpp"

namespace validity {

/// Column sums of a membership matrix must be within this distance of 1.
inline constexpr double kColumnSumTolerance = 1e-9;

/// Entries may drift this far outside [0, 1] before clamping; beyond it they are rejected.
inline constexpr double kEntryTolerance = 1e-12;

/**
 * @brief n points in d-dimensional real space, stored row-major.
 *
 * Invariants: n >= 2, d >= 1, every component finite.
 */
class DataSet {
public:
    DataSet(std::vector<std::vector<double>> points, std::string name = {});
    DataSet(std::initializer_list<std::vector<double>> points, std::string name = {})
        : DataSet(std::vector<std::vector<double>>(points), std::move(name)) {}

    /// Build from a row-major buffer of `n * dim` values.
    DataSet(std::size_t dim, std::vector<double> row_major, std::string name = {});

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return d_; }
    const std::string& name() const noexcept { return name_; }

    std::span<const double> point(std::size_t j) const { return {values_.data() + j * d_, d_}; }
    std::span<const double> values() const noexcept { return values_; }

    /// Mean of all points.
    std::vector<double> mean() const;

    bool operator==(const DataSet&) const = default;

private:
    void validate() const;

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<double> values_;
    std::string name_;
};

/**
 * @brief The c x n fuzzy partition matrix; rows are clusters, columns are points.
 *
 * Every column sums to 1 within kColumnSumTolerance. Entries are clamped into
 * [0, 1] once validated so floating-point drift never reaches an index formula.
 */
class MembershipMatrix {
public:
    /// `row_major` holds `clusters * points` values, row i being cluster i.
    MembershipMatrix(std::size_t clusters, std::size_t points, std::vector<double> row_major);

    std::size_t clusters() const noexcept { return c_; }
    std::size_t points() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return mu_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {mu_.data() + i * n_, n_}; }
    std::span<const double> values() const noexcept { return mu_; }

    /// Copy of column j (the memberships of point j across all clusters).
    std::vector<double> column(std::size_t j) const;

    /// Replace column j in place. The new column must satisfy the same invariants.
    void assign_column(std::size_t j, std::span<const double> memberships);

    bool operator==(const MembershipMatrix&) const = default;

private:
    std::size_t c_ = 0;
    std::size_t n_ = 0;
    std::vector<double> mu_;
};

/// The cluster centers v_1..v_c, all of one dimension.
class Centroids {
public:
    Centroids(std::vector<std::vector<double>> centers);
    Centroids(std::initializer_list<std::vector<double>> centers)
        : Centroids(std::vector<std::vector<double>>(centers)) {}
    Centroids(std::size_t dim, std::vector<double> row_major);

    std::size_t count() const noexcept { return c_; }
    std::size_t dim() const noexcept { return d_; }

    std::span<const double> center(std::size_t i) const { return {v_.data() + i * d_, d_}; }
    std::span<const double> values() const noexcept { return v_; }

    /// Unweighted mean of the centers.
    std::vector<double> mean() const;

    bool operator==(const Centroids&) const = default;

private:
    std::size_t c_ = 0;
    std::size_t d_ = 0;
    std::vector<double> v_;
};

/**
 * @brief Row i of a membership matrix viewed as the discrete fuzzy set
 * x_j -> mu_i(x_j).
 *
 * The view reads through to the backing matrix, so it observes in-place
 * updates. The matrix must outlive the view.
 */
class FuzzyCluster {
public:
    FuzzyCluster(const MembershipMatrix& matrix, std::size_t index);

    std::size_t index() const noexcept { return index_; }
    std::size_t size() const noexcept { return matrix_->points(); }
    double membership(std::size_t j) const { return (*matrix_)(index_, j); }
    std::span<const double> memberships() const { return matrix_->row(index_); }
    const MembershipMatrix& matrix() const noexcept { return *matrix_; }

private:
    const MembershipMatrix* matrix_;
    std::size_t index_;
};

struct FcmConfig {
    double m = 2.0;
    double epsilon = 0.001;
    std::size_t max_iter = 300;
    std::size_t restarts = 10;
    std::uint64_t seed = 0;

    /// Throws Error{invalid_request} unless m > 1, epsilon > 0, max_iter >= 1 and restarts >= 1.
    void validate() const;
};

/// Sum of squared component differences. Throws Error{structural} on a length mismatch.
double squared_distance(std::span<const double> a, std::span<const double> b);

/**
 * Divide each column of a nonnegative c x n grid by its sum.
 * Throws Error{degenerate_input} if a column sums to zero or holds a negative
 * or non-finite entry.
 */
MembershipMatrix column_normalize(std::size_t clusters, std::size_t points, std::span<const double> raw);

}  // namespace validity

#endif
