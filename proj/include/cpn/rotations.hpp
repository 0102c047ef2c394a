#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cpn {

// Closed-form exponentials of the spin-½ and spin-1 angular momentum
// generators in the S_z eigenbasis ordered m = +j, …, −j.

/// e^{−iφ L_z} for spin ½.
Eigen::Matrix2cd spin_half_z(double phi);
/// e^{−iθ L_y} for spin ½.
Eigen::Matrix2cd spin_half_y(double theta);

/// Spin-½ coherent state pointing along (θ, φ): (cos θ/2, e^{iφ} sin θ/2).
Eigen::Vector2cd spin_half_coherent(double theta, double phi);

/// Generators L_y, L_z for spin ½ (halved Pauli matrices).
Eigen::Matrix2cd spin_half_ly();
Eigen::Matrix2cd spin_half_lz();

/// Spin-1 generators S_y, S_z.
Eigen::Matrix3cd spin_one_sy();
Eigen::Matrix3cd spin_one_sz();

/// Spin-1 rotation e^{−iφ S_z} e^{−iθ S_y}.
Eigen::Matrix3cd spin_one_rotation(double theta, double phi);

/// Polar angles of a nonzero 3-vector.
void polar_angles(const Eigen::Vector3d& direction, double& theta, double& phi);

}  // namespace cpn
