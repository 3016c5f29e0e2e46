#pragma once

#include <Eigen/Dense>

#include "wpl/constants.hpp"
#include "wpl/dispersion.hpp"

namespace wpl {

using Vec3 = Eigen::Vector3d;

struct FourMomentum {
    double E = 0.0;
    Vec3 p = Vec3::Zero();
};

/// Inertial frame K' moving at velocity v relative to the lab frame K, axes
/// parallel. Construction rejects |v| >= c.
class FrameBoost {
public:
    FrameBoost(const Vec3& v, double c);

    const Vec3& v() const { return v_; }
    double c() const { return c_; }

    /// Lorentz factor (1 - v^2/c^2)^(-1/2).
    double gamma() const;

    /// Same speed, opposite direction; undoes this boost.
    FrameBoost inverse() const { return FrameBoost(-v_, c_); }

private:
    Vec3 v_;
    double c_;
};

// E = v . p + E'/gamma. Mixed-frame form: p is the lab-frame momentum of the
// particle while E' is its energy in K'. The two velocities involved (frame
// velocity v, particle velocity p/m) belong to different objects and are kept
// distinct throughout.
double boost_energy(const FrameBoost& b, double e_prime, const Vec3& p_lab);

// p = p' + (gamma - 1)(p'.v / v^2) v + gamma (v/c^2) E'. The v = 0 removable
// singularity is handled by an explicit branch returning p' + gamma (v/c^2) E'
// with gamma = 1.
Vec3 boost_momentum(const FrameBoost& b, const FourMomentum& m_prime);

/// Full transform of (E', p') from K' into the lab frame.
FourMomentum boost_four_momentum(const FrameBoost& b, const FourMomentum& m_prime);

// Small-v/c expansion of the rest-frame boost energy:
// E(p) = v . p - m0 v^2 / 2 + m0 c^2. Exact up to O(v^4/c^4).
double nonrel_energy(const Vec3& v, const Vec3& p, const PhysicalConstants& pc);

/// Scalar (1D) overload; shares its arithmetic with omega(Doppler), so
/// hbar * omega(Doppler(v), p/hbar) reproduces it bit-for-bit at hbar = 1.
double nonrel_energy(double v, double p, const PhysicalConstants& pc);

}  // namespace wpl
