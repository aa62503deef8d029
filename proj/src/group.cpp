#include "se2wave/group.hpp"

#include <cmath>

namespace se2wave {

double reduce_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;  // fmod can land exactly on 2pi after the add
    return t;
}

GroupElement::GroupElement(double q1, double q2, double theta)
    : q1(q1), q2(q2), theta(reduce_angle(theta)) {
    if (!std::isfinite(q1) || !std::isfinite(q2) || !std::isfinite(theta)) {
        throw GridError("group element has non-finite components");
    }
}

Point rotate_point(double theta, const Point& x) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * x[0] - s * x[1], s * x[0] + c * x[1]};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    const Point rq = rotate_point(a.theta, {b.q1, b.q2});
    return {a.q1 + rq[0], a.q2 + rq[1], a.theta + b.theta};
}

GroupElement inverse(const GroupElement& g) {
    const Point rq = rotate_point(-g.theta, {g.q1, g.q2});
    return {-rq[0], -rq[1], -g.theta};
}

Point act(const GroupElement& g, const Point& x) {
    const Point rx = rotate_point(g.theta, x);
    return {rx[0] + g.q1, rx[1] + g.q2};
}

}  // namespace se2wave
