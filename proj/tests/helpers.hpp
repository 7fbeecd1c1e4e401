#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "quartix/poly.hpp"
#include "quartix/quartic_operator.hpp"

namespace testutil {

// log-uniform positive draw on [1e-2, 1e2]
inline double log_uniform(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(std::log(1e-2), std::log(1e2));
    return std::exp(u(rng));
}

// quintic with strictly alternating coefficient signs (+,-,+,-,+,-)
inline quartix::Quintic random_alternating_quintic(std::mt19937_64& rng) {
    std::array<double, 6> c{};
    for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = (i % 2 == 0 ? 1.0 : -1.0) * log_uniform(rng);
    return quartix::Quintic::from_coeffs(c);
}

// quintic with random signs except mu0 > 0 and constant term < 0
inline quartix::Quintic random_signed_quintic(std::mt19937_64& rng) {
    std::bernoulli_distribution flip(0.5);
    std::array<double, 6> c{};
    c[0] = log_uniform(rng);
    for (int i = 1; i < 5; ++i) c[static_cast<std::size_t>(i)] = (flip(rng) ? 1.0 : -1.0) * log_uniform(rng);
    c[5] = -log_uniform(rng);
    return quartix::Quintic::from_coeffs(c);
}

// operator with all ten coefficients drawn log-uniformly
inline quartix::QuarticOperator random_operator(std::mt19937_64& rng) {
    std::array<double, 5> a{}, b{};
    for (int i = 0; i < 5; ++i) {
        a[static_cast<std::size_t>(i)] = log_uniform(rng);
        b[static_cast<std::size_t>(i)] = log_uniform(rng);
    }
    return quartix::QuarticOperator::from_reduced(a, b);
}

// Some strictly positive operator whose ratio quintic is q.  The split of
// each mu into the a/b pair is underdetermined; this picks one with every
// coefficient >= 1/6.  Requires mu0 > 0 and mu5 > 0.
inline quartix::QuarticOperator operator_for_quintic(const quartix::Quintic& q) {
    const auto& mu = q.mu;
    std::array<double, 5> a{}, b{};
    a[4] = mu[0];
    a[3] = std::max(1.0, (mu[1] + 1.0) / 4.0);
    b[4] = 4.0 * a[3] - mu[1];
    a[2] = std::max(1.0, (mu[2] + 1.0) / 6.0);
    b[3] = (6.0 * a[2] - mu[2]) / 4.0;
    a[1] = std::max(1.0, (mu[3] + 1.0) / 4.0);
    b[2] = (4.0 * a[1] - mu[3]) / 6.0;
    a[0] = std::max(1.0, mu[4] + 1.0);
    b[1] = (a[0] - mu[4]) / 4.0;
    b[0] = mu[5];
    return quartix::QuarticOperator::from_reduced(a, b);
}

}  // namespace testutil
