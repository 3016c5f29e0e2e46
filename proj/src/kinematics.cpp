#include "wpl/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace wpl {

FrameBoost::FrameBoost(const Vec3& v, double c) : v_(v), c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("speed of light must be positive");
    if (!v.allFinite() || !(v.norm() < c))
        throw std::invalid_argument("frame velocity requires |v| < c");
}

double FrameBoost::gamma() const {
    return 1.0 / std::sqrt(1.0 - v_.squaredNorm() / (c_ * c_));
}

double boost_energy(const FrameBoost& b, double e_prime, const Vec3& p_lab) {
    return b.v().dot(p_lab) + e_prime / b.gamma();
}

Vec3 boost_momentum(const FrameBoost& b, const FourMomentum& m_prime) {
    const double v2 = b.v().squaredNorm();
    const double gamma = b.gamma();
    if (v2 == 0.0) return m_prime.p;  // removable singularity of the (p'.v/v^2) term
    return m_prime.p + (gamma - 1.0) * (m_prime.p.dot(b.v()) / v2) * b.v() +
           gamma * (b.v() / (b.c() * b.c())) * m_prime.E;
}

FourMomentum boost_four_momentum(const FrameBoost& b, const FourMomentum& m_prime) {
    FourMomentum out;
    out.p = boost_momentum(b, m_prime);
    out.E = boost_energy(b, m_prime.E, out.p);
    return out;
}

double nonrel_energy(const Vec3& v, const Vec3& p, const PhysicalConstants& pc) {
    validate(pc);
    return v.dot(p) - 0.5 * pc.m0 * v.squaredNorm() + pc.m0 * pc.c * pc.c;
}

double nonrel_energy(double v, double p, const PhysicalConstants& pc) {
    validate(pc);
    return detail::frame_shifted_energy(v, p, pc);
}

}  // namespace wpl
