// Builtin benchmark sets. Construction parameters are documented in data.hpp.

#include <array>
#include <cmath>
#include <numbers>

#include "random.hpp"
#include "validity/data.hpp"

namespace validity::data {

namespace {

using detail::Engine;
using detail::uniform01;

struct Point2 {
    double x;
    double y;
};

void push(std::vector<double>& out, Point2 p) {
    out.push_back(p.x);
    out.push_back(p.y);
}

/// Uniform in the disk of `radius` around `center`.
Point2 in_disk(Engine& rng, Point2 center, double radius) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double t = 2.0 * std::numbers::pi * uniform01(rng);
    return {center.x + r * std::cos(t), center.y + r * std::sin(t)};
}

/// Uniform in a rectangle of half-extents (half_length, half_width) rotated by `angle`.
Point2 in_rotated_rect(Engine& rng, Point2 center, double half_length, double half_width, double angle) {
    const double u = (2.0 * uniform01(rng) - 1.0) * half_length;
    const double v = (2.0 * uniform01(rng) - 1.0) * half_width;
    const double ca = std::cos(angle);
    const double sa = std::sin(angle);
    return {center.x + ca * u - sa * v, center.y + sa * u + ca * v};
}

DataSet make_x30(std::uint64_t seed) {
    constexpr std::array<Point2, 3> centers{{{0.0, 0.0}, {15.0, 0.0}, {7.5, 13.0}}};
    Engine rng(seed);
    std::vector<double> values;
    for (auto c : centers) {
        for (int k = 0; k < 10; ++k) {
            push(values, in_disk(rng, c, 1.0));
        }
    }
    return DataSet(2, std::move(values), "x30");
}

DataSet make_bensaid(std::uint64_t seed) {
    struct Group {
        Point2 center;
        double half_length;
        double half_width;
        int size;
        double angle;
    };
    constexpr std::array<Group, 3> groups{{
        {{0.0, 0.0}, 4.0, 0.6, 24, 0.3},
        {{18.0, 3.0}, 2.5, 0.5, 15, 1.2},
        {{7.5, 15.0}, 2.0, 0.4, 10, -0.4},
    }};
    Engine rng(seed);
    std::vector<double> values;
    for (const auto& g : groups) {
        for (int k = 0; k < g.size; ++k) {
            push(values, in_rotated_rect(rng, g.center, g.half_length, g.half_width, g.angle));
        }
    }
    return DataSet(2, std::move(values), "bensaid");
}

DataSet make_starfield(std::uint64_t seed) {
    constexpr std::array<int, 8> sizes{9, 9, 8, 8, 8, 8, 8, 8};
    Engine rng(seed);
    std::vector<double> values;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
        const Point2 center{static_cast<double>(g % 4) * 6.0, static_cast<double>(g / 4) * 6.0};
        for (int k = 0; k < sizes[g]; ++k) {
            push(values, in_disk(rng, center, 1.0));
        }
    }
    return DataSet(2, std::move(values), "starfield");
}

DataSet make_butterfly() {
    // Left wing; the right wing is its mirror image in x = 0.
    constexpr std::array<Point2, 7> wing{{
        {-4.0, -2.0}, {-4.0, 0.0}, {-4.0, 2.0}, {-3.0, -1.0}, {-3.0, 0.0}, {-3.0, 1.0}, {-2.0, 0.0},
    }};
    std::vector<double> values;
    for (auto p : wing) {
        push(values, p);
    }
    push(values, {0.0, 0.0});
    for (auto p : wing) {
        push(values, {-p.x, p.y});
    }
    return DataSet(2, std::move(values), "butterfly");
}

}  // namespace

std::pair<DataSet, DatasetSpec> builtin(BuiltinName name, std::uint64_t seed) {
    switch (name) {
    case BuiltinName::bensaid:
        return {make_bensaid(seed), DatasetSpec{name, 49, 2, 3, "synthetic BENSAID-like set"}};
    case BuiltinName::starfield:
        return {make_starfield(seed),
                DatasetSpec{name, 66, 2, 8, "synthetic STARFIELD-like set; eight or nine clusters are both reasonable"}};
    case BuiltinName::iris: {
        DataSet iris = parse_csv(iris_csv_text(), "iris");
        return {std::move(iris),
                DatasetSpec{name, 150, 4, 2,
                            "c=3 is a defensible alternative for IRIS: two of the three species overlap substantially"}};
    }
    case BuiltinName::x30:
        return {make_x30(seed), DatasetSpec{name, 30, 2, 3, "three compact, well-separated groups of 10"}};
    case BuiltinName::butterfly:
        return {make_butterfly(), DatasetSpec{name, 15, 2, 2, "two wings joined by one bridge point"}};
    }
    throw Error(ErrorKind::invalid_request, "unknown builtin data set");
}

}  // namespace validity::data
