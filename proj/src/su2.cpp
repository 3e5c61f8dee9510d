// Copyright 2026 The Spindle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spindle/su2.hpp"

#include <algorithm>
#include <cmath>

namespace spindle::su2 {

namespace {
const Complex kI(0.0, 1.0);
}

Mat2 sx() {
  Mat2 m;
  m << 0.0, 0.5, 0.5, 0.0;
  return m;
}

Mat2 sy() {
  Mat2 m;
  m << Complex(0, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0, 0);
  return m;
}

Mat2 sz() {
  Mat2 m;
  m << 0.5, 0.0, 0.0, -0.5;
  return m;
}

Mat2 rotation(const Vec3& axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Mat2 ns = axis.x() * sx() + axis.y() * sy() + axis.z() * sz();
  return c * Mat2::Identity() - 2.0 * kI * s * ns;
}

AngleAxis angle_axis(const Mat2& U) {
  // Strip global phase via the determinant square root.
  Complex det = U.determinant();
  Complex ph = std::sqrt(det);
  Mat2 V = U / ph;
  double c = std::clamp(std::real(V.trace()) / 2.0, -1.0, 1.0);
  AngleAxis out;
  out.angle = 2.0 * std::acos(c);
  const double s = std::sin(out.angle / 2.0);
  if (std::abs(s) < 1e-15) {
    out.axis = Vec3::UnitZ();
    return out;
  }
  // V = cos(t/2) - i sin(t/2) n.sigma  =>  Tr(V s_a) = -i sin(t/2) n_a
  Vec3 n;
  n.x() = std::imag(-(V * sx()).trace());
  n.y() = std::imag(-(V * sy()).trace());
  n.z() = std::imag(-(V * sz()).trace());
  n /= s;
  const double nn = n.norm();
  out.axis = nn > 0 ? Vec3(n / nn) : Vec3::UnitZ();
  return out;
}

Vec3 log_vec(const Mat2& U, bool* branch_flag, double branch_tol) {
  AngleAxis aa = angle_axis(U);
  double theta = aa.angle;
  Vec3 axis = aa.axis;
  if (theta > kPi) {  // fold onto the principal branch
    theta = kTwoPi - theta;
    axis = -axis;
  }
  if (branch_flag) *branch_flag = std::abs(theta - kPi) < branch_tol;
  return theta * axis;
}

Vec3 conjugated_z_axis(const Mat2& R) {
  Mat2 M = R * sz() * R.adjoint();
  Vec3 m;
  m.x() = 2.0 * std::real((M * (2.0 * sx())).trace()) / 2.0;
  m.y() = 2.0 * std::real((M * (2.0 * sy())).trace()) / 2.0;
  m.z() = 2.0 * std::real((M * (2.0 * sz())).trace()) / 2.0;
  return m;
}

double distance_to_identity(const Mat2& U) {
  Complex det = U.determinant();
  Mat2 V = U / std::sqrt(det);
  Complex tr = V.trace();
  Complex ph = std::abs(tr) > 1e-14 ? tr / std::abs(tr) : Complex(1, 0);
  return (V / ph - Mat2::Identity()).norm();
}

}  // namespace spindle::su2
