#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace incflow {

using Rational = boost::multiprecision::cpp_rational;

struct ConstraintViolated : std::runtime_error {
    explicit ConstraintViolated(const std::string& what) : std::runtime_error(what) {}
};

// Point of the dual polyhedron Y(r, 3/2) certifying the 3/2 approximation
// ratio of Quickest-increment. y is indexed y[i][j-i-1] for 0 <= i < j <= r;
// x stores x_0..x_{r-2}, with x_{-1} = x_{r-1} = 0 structural.
struct WitnessY {
    std::int64_t r = 2;
    Rational z;
    std::vector<Rational> x;
    std::vector<std::vector<Rational>> y;

    const Rational& yy(std::int64_t i, std::int64_t j) const {
        return y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
    }
    Rational& yy(std::int64_t i, std::int64_t j) {
        return y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
    }
    Rational x_at(std::int64_t i) const {  // boundary-aware
        if (i < 0 || i > r - 2) return 0;
        return x[static_cast<std::size_t>(i)];
    }
};

namespace detail {

// Nonnegative y_{ij} (0 <= i <= s, i < j <= r) with
//   sum_j (j-i) y_{ij} >= r - (3/2) i   and   column sums <= 1.
// Each step only adds entries to the smaller solution, so the whole chain
// fills one zero matrix in place. Bases at r = 2, 4 and (since the r = 7
// step of the r = 1 mod 3 case overfills column r-1) a solved table at r = 7.
inline void fill_initial_segment(std::vector<std::vector<Rational>>& y, std::int64_t r) {
    auto at = [&y](std::int64_t i, std::int64_t j) -> Rational& {
        return y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
    };

    if (r == 2) {
        at(0, 1) = 1;
        at(0, 2) = Rational(1, 2);
        at(1, 2) = Rational(1, 2);
        return;
    }
    if (r == 4) {
        at(0, 1) = 1;
        at(0, 2) = 1;
        at(0, 3) = Rational(1, 3);
        at(1, 3) = Rational(2, 3);
        at(1, 4) = Rational(7, 18);
        at(2, 4) = Rational(1, 2);
        return;
    }
    if (r == 7) {
        at(0, 1) = 1;
        at(0, 2) = 1;
        at(0, 3) = 1;
        at(0, 4) = Rational(1, 4);
        at(1, 4) = Rational(3, 4);
        at(1, 5) = Rational(13, 16);
        at(2, 5) = Rational(3, 16);
        at(2, 6) = Rational(55, 64);
        at(3, 6) = Rational(9, 64);
        at(3, 7) = Rational(133, 256);
        return;
    }

    const std::int64_t s = (r + 2) / 3;
    if (r % 3 == 0 || r % 3 == 2) {
        fill_initial_segment(y, r - 1);  // same s
        for (std::int64_t i = 0; i <= s; ++i) at(i, r) = Rational(1, r - i);
        return;
    }

    // r = 1 mod 3, r >= 10; recurse to r-3 whose segment bound is s-1.
    fill_initial_segment(y, r - 3);
    const std::int64_t i0 = (r - 5) / 4;
    for (std::int64_t i = 0; i <= i0; ++i) at(i, r - 2) = Rational(3, (r - 2) - i);
    for (std::int64_t i = i0 + 1; i <= s - 1; ++i) at(i, r - 1) = Rational(3, (r - 1) - i);
    at(s, r) = Rational(3 * (r - 2), 4 * (r - 1));
}

inline std::vector<std::vector<Rational>> initial_segment(std::int64_t r) {
    std::vector<std::vector<Rational>> y(static_cast<std::size_t>(r) + 1);
    for (std::int64_t i = 0; i <= r; ++i)
        y[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(r - i), Rational(0));
    fill_initial_segment(y, r);
    return y;
}

}  // namespace detail

// Every violated constraint of Y(r, 3/2), empty when the point is a member.
inline std::vector<std::string> verify_witness(const WitnessY& w) {
    std::vector<std::string> bad;
    const std::int64_t r = w.r;
    const Rational gamma(3, 2);

    for (std::int64_t j = 1; j <= r; ++j) {
        Rational col = 0;
        for (std::int64_t i = 0; i < j; ++i) col += w.yy(i, j);
        if (col > 1) bad.push_back("column sum constraint failed at j=" + std::to_string(j));
    }
    for (std::int64_t i = 0; i <= r - 1; ++i) {
        Rational lhs = w.z + w.x_at(i) - w.x_at(i - 1);
        for (std::int64_t j = i + 1; j <= r; ++j) lhs += Rational(j - i) * w.yy(i, j);
        if (lhs < gamma * Rational(r - i)) bad.push_back("row constraint failed at i=" + std::to_string(i));
    }
    if (w.z > Rational(r) * (gamma - 1)) bad.push_back("z bound failed");
    if (w.z < 0) bad.push_back("z negative");
    for (std::int64_t i = 0; i <= r - 2; ++i)
        if (w.x_at(i) < 0) bad.push_back("x negative at i=" + std::to_string(i));
    for (std::int64_t i = 0; i < r; ++i)
        for (std::int64_t j = i + 1; j <= r; ++j)
            if (w.yy(i, j) < 0)
                bad.push_back("y negative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return bad;
}

// Witness point of Y(r, 3/2): initial-segment y, z = r/2, and the quadratic
// tail x_i = (i-s)(r - 3s/2 - 3(i-s+1)/4). Verified before returning.
inline WitnessY witness_y(std::int64_t r) {
    if (r < 2) throw std::invalid_argument("witness_y requires r >= 2");
    WitnessY w;
    w.r = r;
    w.y = detail::initial_segment(r);
    w.z = Rational(r, 2);
    const std::int64_t s = (r + 2) / 3;
    w.x.assign(static_cast<std::size_t>(r > 1 ? r - 1 : 0), Rational(0));
    for (std::int64_t i = s + 1; i <= r - 2; ++i)
        w.x[static_cast<std::size_t>(i)] =
            Rational(i - s) * (Rational(r) - Rational(3 * s, 2) - Rational(3 * (i - s + 1), 4));

    auto bad = verify_witness(w);
    if (!bad.empty()) throw ConstraintViolated("witness_y(" + std::to_string(r) + "): " + bad.front());
    return w;
}

}  // namespace incflow
