#pragma once

#include <Eigen/Dense>

#include <array>

#include "wpl/constants.hpp"
#include "wpl/kinematics.hpp"

namespace wpl {

using Spinor4 = Eigen::Vector4cd;
using DiracMatrix = Eigen::Matrix4cd;

// Standard (diagonal-beta) representation:
//   alpha_i = [[0, sigma_i], [sigma_i, 0]],  beta = diag(1, 1, -1, -1).
const std::array<DiracMatrix, 3>& dirac_alpha();
const DiracMatrix& dirac_beta();

/// H = c alpha . p + m0 c^2 beta.
DiracMatrix dirac_hamiltonian(const Vec3& p, const PhysicalConstants& pc);

/// Helicity operator Sigma . p_hat (block-diagonal sigma . p_hat).
DiracMatrix helicity_operator(const Vec3& p_hat);

// Positive-energy plane-wave eigenstate labelled by momentum and helicity.
// The spinor has unit norm, is a helicity eigenvector with eigenvalue s, and
// an eigenvector of the Hamiltonian with eigenvalue +sqrt(p^2 c^2 + m0^2 c^4).
struct DiracState {
    Vec3 p = Vec3::Zero();
    int helicity = +1;  // +1 or -1
    Spinor4 spinor = Spinor4::Zero();
    PhysicalConstants constants;

    /// +sqrt(p^2 c^2 + m0^2 c^4).
    double energy() const;
};

/// Assembles the plane-wave spinor. Helicity at p = 0 is conventionally taken
/// along +z, so (p=0, s=+1) yields (1, 0, 0, 0). Construction verifies the
/// eigenvector invariants and throws if they fail.
DiracState make_dirac_state(const Vec3& p, int helicity, const PhysicalConstants& pc);

/// <u| c alpha |u>; equals c^2 p / E componentwise, the particle velocity.
Vec3 expect_alpha(const DiracState& u);

/// <u| beta |u>; equals m0 c^2 / E = 1/gamma for the velocity c^2 p / E.
double expect_beta(const DiracState& u);

/// Evaluates <c alpha>.p + <beta> m0 c^2 and checks it against the eigenvalue
/// +sqrt(p^2 c^2 + m0^2 c^4) to 1e-10 relative, throwing std::logic_error on
/// mismatch. Returns the assembled value.
double dirac_energy_identity(const DiracState& u);

}  // namespace wpl
