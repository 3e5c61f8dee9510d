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

#pragma once

#include "spindle/types.hpp"

namespace spindle::su2 {

// Spin-1/2 operators (sigma/2).
Mat2 sx();
Mat2 sy();
Mat2 sz();

/// exp(-i angle * axis.I) for a unit 3-vector axis, spin-1/2 representation.
Mat2 rotation(const Vec3& axis, double angle);

struct AngleAxis {
  double angle = 0.0;  // raw rotation angle in [0, 2*pi)
  Vec3 axis = Vec3::UnitZ();
};

/// Angle/axis of U modulo global phase. U need not have unit determinant.
AngleAxis angle_axis(const Mat2& U);

/// Principal log vector v with U ~ exp(-i v.I) (up to phase), |v| in [0, pi].
/// branch_flag set when |v| lies within tol of the pi branch cut.
Vec3 log_vec(const Mat2& U, bool* branch_flag = nullptr, double branch_tol = 1e-10);

/// Axis m with R (z.I) R^dag = m.I.
Vec3 conjugated_z_axis(const Mat2& R);

/// Frobenius distance of U to the identity modulo global phase.
double distance_to_identity(const Mat2& U);

}  // namespace spindle::su2
