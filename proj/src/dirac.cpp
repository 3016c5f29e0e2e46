#include "wpl/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace wpl {

namespace {

using Mat2 = Eigen::Matrix2cd;
const std::complex<double> I{0.0, 1.0};

const std::array<Mat2, 3>& pauli() {
    static const std::array<Mat2, 3> s = [] {
        std::array<Mat2, 3> m;
        m[0] << 0, 1, 1, 0;
        m[1] << 0, -I, I, 0;
        m[2] << 1, 0, 0, -1;
        return m;
    }();
    return s;
}

Mat2 sigma_dot(const Vec3& v) {
    return v.x() * pauli()[0] + v.y() * pauli()[1] + v.z() * pauli()[2];
}

}  // namespace

const std::array<DiracMatrix, 3>& dirac_alpha() {
    static const std::array<DiracMatrix, 3> a = [] {
        std::array<DiracMatrix, 3> m;
        for (int i = 0; i < 3; ++i) {
            m[i] = DiracMatrix::Zero();
            m[i].topRightCorner<2, 2>() = pauli()[i];
            m[i].bottomLeftCorner<2, 2>() = pauli()[i];
        }
        return m;
    }();
    return a;
}

const DiracMatrix& dirac_beta() {
    static const DiracMatrix b = [] {
        DiracMatrix m = DiracMatrix::Zero();
        m.diagonal() << 1, 1, -1, -1;
        return m;
    }();
    return b;
}

DiracMatrix dirac_hamiltonian(const Vec3& p, const PhysicalConstants& pc) {
    DiracMatrix h = pc.m0 * pc.c * pc.c * dirac_beta();
    for (int i = 0; i < 3; ++i) h += pc.c * p[i] * dirac_alpha()[i];
    return h;
}

DiracMatrix helicity_operator(const Vec3& p_hat) {
    DiracMatrix h = DiracMatrix::Zero();
    h.topLeftCorner<2, 2>() = sigma_dot(p_hat);
    h.bottomRightCorner<2, 2>() = sigma_dot(p_hat);
    return h;
}

double DiracState::energy() const {
    const double pc2 = p.squaredNorm() * constants.c * constants.c;
    const double mc2 = constants.m0 * constants.c * constants.c;
    return std::sqrt(pc2 + mc2 * mc2);
}

DiracState make_dirac_state(const Vec3& p, int helicity, const PhysicalConstants& pc) {
    validate(pc);
    if (helicity != +1 && helicity != -1)
        throw std::invalid_argument("helicity label must be +1 or -1");
    if (!p.allFinite()) throw std::invalid_argument("momentum must be finite");

    const double pn = p.norm();
    const Vec3 p_hat = pn > 0.0 ? Vec3(p / pn) : Vec3(0, 0, 1);  // +z convention at p = 0

    // Helicity two-spinor chi_s(p_hat) from the polar angles of p_hat.
    const double theta = std::acos(std::clamp(p_hat.z(), -1.0, 1.0));
    const double phi = std::atan2(p_hat.y(), p_hat.x());
    Eigen::Vector2cd chi;
    if (helicity == +1)
        chi << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
    else
        chi << -std::polar(std::sin(theta / 2.0), -phi), std::cos(theta / 2.0);

    // Lower components: (c sigma.p / (E + m0 c^2)) chi = lambda chi for a
    // helicity eigenstate.
    const double mc2 = pc.m0 * pc.c * pc.c;
    const double energy = std::sqrt(pn * pn * pc.c * pc.c + mc2 * mc2);
    const double lambda = pc.c * static_cast<double>(helicity) * pn / (energy + mc2);

    Spinor4 u;
    u << chi(0), chi(1), lambda * chi(0), lambda * chi(1);
    u /= u.norm();

    DiracState state{p, helicity, u, pc};

    if (std::abs(u.squaredNorm() - 1.0) > 1e-12)
        throw std::logic_error("dirac state normalization failed");
    if (pn > 0.0 &&
        (helicity_operator(p_hat) * u - static_cast<double>(helicity) * u).norm() > 1e-10)
        throw std::logic_error("dirac state is not a helicity eigenvector");
    if ((dirac_hamiltonian(p, pc) * u - energy * u).norm() > 1e-10 * energy)
        throw std::logic_error("dirac state is not an energy eigenvector");
    return state;
}

Vec3 expect_alpha(const DiracState& u) {
    Vec3 out;
    for (int i = 0; i < 3; ++i)
        out[i] = (u.constants.c * u.spinor.dot(dirac_alpha()[i] * u.spinor)).real();
    return out;
}

double expect_beta(const DiracState& u) {
    return u.spinor.dot(dirac_beta() * u.spinor).real();
}

double dirac_energy_identity(const DiracState& u) {
    const double assembled =
        expect_alpha(u).dot(u.p) + expect_beta(u) * u.constants.m0 * u.constants.c * u.constants.c;
    const double eigenvalue = u.energy();
    if (std::abs(assembled - eigenvalue) > 1e-10 * eigenvalue)
        throw std::logic_error("dirac energy identity violated");
    return assembled;
}

}  // namespace wpl
