#pragma once

#include <array>

#include "se2wave/common.hpp"

namespace se2wave {

using Point = std::array<double, 2>;

/// Element (q1, q2, theta) of SE(2); theta is stored reduced to [0, 2pi).
struct GroupElement {
    GroupElement() = default;
    GroupElement(double q1, double q2, double theta);

    double q1 = 0.0;
    double q2 = 0.0;
    double theta = 0.0;

    static GroupElement identity() { return {}; }
};

/// Reduces an angle to [0, 2pi).
double reduce_angle(double theta);

/// Group law (q', theta') . (q, theta) = (q' + r_{theta'} q, theta' + theta).
GroupElement compose(const GroupElement& a, const GroupElement& b);

/// g^{-1} = (-r_{-theta} q, -theta).
GroupElement inverse(const GroupElement& g);

/// Action on the plane: x |-> r_theta x + q.
Point act(const GroupElement& g, const Point& x);

Point rotate_point(double theta, const Point& x);

}  // namespace se2wave
