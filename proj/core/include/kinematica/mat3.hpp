#pragma once

#include <array>

namespace kinematica {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

Mat3 mat3_identity() noexcept;
Mat3 mat3_mul(const Mat3& a, const Mat3& b) noexcept;
Mat3 mat3_add(const Mat3& a, const Mat3& b) noexcept;
Mat3 mat3_sub(const Mat3& a, const Mat3& b) noexcept;
Mat3 mat3_scale(const Mat3& a, double s) noexcept;
Mat3 mat3_transpose(const Mat3& a) noexcept;
Vec3 mat3_apply(const Mat3& a, const Vec3& v) noexcept;
double mat3_det(const Mat3& a) noexcept;
double mat3_max_abs_diff(const Mat3& a, const Mat3& b) noexcept;
Mat3 commutator(const Mat3& a, const Mat3& b) noexcept;

}  // namespace kinematica
