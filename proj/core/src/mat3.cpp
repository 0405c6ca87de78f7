#include "kinematica/mat3.hpp"

#include <algorithm>
#include <cmath>

namespace kinematica {

Mat3 mat3_identity() noexcept { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 mat3_mul(const Mat3& a, const Mat3& b) noexcept {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat3 mat3_add(const Mat3& a, const Mat3& b) noexcept {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

Mat3 mat3_sub(const Mat3& a, const Mat3& b) noexcept { return mat3_add(a, mat3_scale(b, -1.0)); }

Mat3 mat3_scale(const Mat3& a, double s) noexcept {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = s * a[i][j];
    return r;
}

Mat3 mat3_transpose(const Mat3& a) noexcept {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

Vec3 mat3_apply(const Mat3& a, const Vec3& v) noexcept {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += a[i][j] * v[j];
    return r;
}

double mat3_det(const Mat3& a) noexcept {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

double mat3_max_abs_diff(const Mat3& a, const Mat3& b) noexcept {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::fabs(a[i][j] - b[i][j]));
    return m;
}

Mat3 commutator(const Mat3& a, const Mat3& b) noexcept { return mat3_sub(mat3_mul(a, b), mat3_mul(b, a)); }

}  // namespace kinematica
