#include "validity/fcm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "random.hpp"

namespace validity::fcm {

namespace {

void check_shapes(const DataSet& data, const MembershipMatrix& u) {
    if (u.points() != data.size()) {
        throw Error(ErrorKind::structural, "membership matrix has " + std::to_string(u.points()) +
                                               " columns for " + std::to_string(data.size()) + " points");
    }
}

void check_shapes(const DataSet& data, const Centroids& v) {
    if (v.dim() != data.dim()) {
        throw Error(ErrorKind::structural, "centroid dimension " + std::to_string(v.dim()) +
                                               " does not match data dimension " + std::to_string(data.dim()));
    }
}

double max_abs_change(const MembershipMatrix& a, const MembershipMatrix& b) {
    auto x = a.values();
    auto y = b.values();
    double out = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        out = std::max(out, std::abs(x[k] - y[k]));
    }
    return out;
}

}  // namespace

Centroids init_centroids(const DataSet& data, std::size_t c, std::uint64_t seed) {
    const std::size_t n = data.size();
    if (c < 2 || c > n) {
        throw Error(ErrorKind::invalid_request,
                    "cluster count " + std::to_string(c) + " outside [2, " + std::to_string(n) + "]");
    }

    // Partial Fisher-Yates over point indices.
    detail::Engine rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < c; ++k) {
        const auto pick = k + static_cast<std::size_t>(detail::uniform_below(rng, n - k));
        std::swap(order[k], order[pick]);
    }

    std::vector<double> flat;
    flat.reserve(c * data.dim());
    for (std::size_t k = 0; k < c; ++k) {
        auto x = data.point(order[k]);
        flat.insert(flat.end(), x.begin(), x.end());
    }
    return Centroids(data.dim(), std::move(flat));
}

MembershipMatrix update_memberships(const DataSet& data, const Centroids& v, double m) {
    check_shapes(data, v);
    const std::size_t c = v.count();
    const std::size_t n = data.size();
    const double exponent = 1.0 / (m - 1.0);

    std::vector<double> mu(c * n, 0.0);
    std::vector<double> dist(c);
    for (std::size_t j = 0; j < n; ++j) {
        auto x = data.point(j);
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < c; ++i) {
            dist[i] = squared_distance(x, v.center(i));
            zeros += dist[i] == 0.0 ? 1 : 0;
        }

        if (zeros > 0) {
            const double share = 1.0 / static_cast<double>(zeros);
            for (std::size_t i = 0; i < c; ++i) {
                mu[i * n + j] = dist[i] == 0.0 ? share : 0.0;
            }
            continue;
        }

        for (std::size_t i = 0; i < c; ++i) {
            double denom = 0.0;
            for (std::size_t k = 0; k < c; ++k) {
                denom += std::pow(dist[i] / dist[k], exponent);
            }
            mu[i * n + j] = 1.0 / denom;
        }
    }
    return MembershipMatrix(c, n, std::move(mu));
}

Centroids update_centroids(const DataSet& data, const MembershipMatrix& u, double m) {
    check_shapes(data, u);
    const std::size_t c = u.clusters();
    const std::size_t n = data.size();
    const std::size_t d = data.dim();

    std::vector<double> v(c * d, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
        double mass = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double w = std::pow(u(i, j), m);
            if (w == 0.0) {
                continue;
            }
            mass += w;
            auto x = data.point(j);
            for (std::size_t q = 0; q < d; ++q) {
                v[i * d + q] += w * x[q];
            }
        }
        if (!(mass > 0.0)) {
            throw Error(ErrorKind::degenerate_cluster, "cluster " + std::to_string(i) + " has no membership mass");
        }
        for (std::size_t q = 0; q < d; ++q) {
            v[i * d + q] /= mass;
        }
    }
    return Centroids(d, std::move(v));
}

double objective(const DataSet& data, const MembershipMatrix& u, const Centroids& v, double m) {
    check_shapes(data, u);
    check_shapes(data, v);
    if (u.clusters() != v.count()) {
        throw Error(ErrorKind::structural, "membership rows and centroid count differ");
    }
    double jm = 0.0;
    for (std::size_t i = 0; i < u.clusters(); ++i) {
        for (std::size_t j = 0; j < data.size(); ++j) {
            jm += std::pow(u(i, j), m) * squared_distance(data.point(j), v.center(i));
        }
    }
    return jm;
}

FcmResult run_single(const DataSet& data, std::size_t c, const FcmConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    // Each step ends on a centroid update so the returned V is exactly the
    // centroid update of the returned U.
    MembershipMatrix u = update_memberships(data, init_centroids(data, c, seed), cfg.m);
    Centroids v = update_centroids(data, u, cfg.m);

    std::vector<double> trace{objective(data, u, v, cfg.m)};
    std::size_t iterations = 0;
    bool converged = false;
    while (iterations < cfg.max_iter) {
        MembershipMatrix next_u = update_memberships(data, v, cfg.m);
        Centroids next_v = update_centroids(data, next_u, cfg.m);
        ++iterations;
        const double change = max_abs_change(u, next_u);
        u = std::move(next_u);
        v = std::move(next_v);
        trace.push_back(objective(data, u, v, cfg.m));
        if (change < cfg.epsilon) {
            converged = true;
            break;
        }
    }

    return FcmResult{std::move(u), std::move(v), std::move(trace), iterations, converged, 0, seed};
}

FcmResult run(const DataSet& data, std::size_t c, const FcmConfig& cfg) {
    cfg.validate();
    if (c < 2 || c > data.size()) {
        throw Error(ErrorKind::invalid_request,
                    "cluster count " + std::to_string(c) + " outside [2, " + std::to_string(data.size()) + "]");
    }

    std::optional<FcmResult> best;
    std::string last_failure;
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        const std::uint64_t seed = cfg.seed + r;
        try {
            FcmResult candidate = run_single(data, c, cfg, seed);
            candidate.restart_index = r;
            if (!best || candidate.final_jm() < best->final_jm()) {
                best = std::move(candidate);
            }
        } catch (const Error& e) {
            // A restart that loses a cluster or breaks down numerically is discarded.
            if (e.kind() != ErrorKind::degenerate_cluster && e.kind() != ErrorKind::degenerate_input) {
                throw;
            }
            last_failure = e.what();
        }
    }
    if (!best) {
        throw Error(ErrorKind::solver_failure, "all " + std::to_string(cfg.restarts) + " restarts degenerated at c=" +
                                                   std::to_string(c) + ": " + last_failure);
    }
    return std::move(*best);
}

}  // namespace validity::fcm
