#pragma once

#include <algorithm>
#include <cmath>

#include <doctest.h>

inline bool near(double got, double want, double rel, double abs = 0.0)
{
    return std::abs(got - want) <= std::max(abs, rel * std::abs(want));
}

#define CHECK_NEAR(got, want, rel)                                                                                     \
    do {                                                                                                               \
        const double g_ = (got);                                                                                       \
        const double w_ = (want);                                                                                      \
        INFO("got " << g_ << ", want " << w_);                                                                         \
        CHECK(near(g_, w_, rel));                                                                                      \
    } while (0)

#define CHECK_ABS(got, want, tol)                                                                                      \
    do {                                                                                                               \
        const double g_ = (got);                                                                                       \
        const double w_ = (want);                                                                                      \
        INFO("got " << g_ << ", want " << w_);                                                                         \
        CHECK(std::abs(g_ - w_) <= (tol));                                                                             \
    } while (0)
