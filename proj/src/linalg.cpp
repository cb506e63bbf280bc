#include "pinchlab/linalg.hpp"

#include <cassert>
#include <cmath>

namespace pinchlab {

namespace {

constexpr int kPairIndexTable[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

} // namespace

int pair_index(int i, int j) {
    assert(i >= 0 && i < 4 && j >= 0 && j < 4 && i < j);
    return kPairIndexTable[i][j];
}

SignedPair signed_pair(int i, int j) {
    assert(i != j);
    if (i < j) return {kPairIndexTable[i][j], 1.0};
    return {kPairIndexTable[j][i], -1.0};
}

Vec6 wedge_frame(const Vec4& u, const Vec4& v) {
    Vec6 out;
    for (int a = 0; a < 6; ++a) {
        const auto [i, j] = kPairBasis[a];
        out[a] = u[i] * v[j] - u[j] * v[i];
    }
    return out;
}

Mat4 wedge_coord(const Vec4& a, const Vec4& b) {
    return a * b.transpose() - b * a.transpose();
}

double plucker(const Vec6& f) {
    return f[0] * f[5] - f[1] * f[4] + f[2] * f[3];
}

const Mat6& hodge_star() {
    static const Mat6 star = [] {
        Mat6 s = Mat6::Zero();
        s(5, 0) = 1.0; // *(12) = 34
        s(4, 1) = -1.0; // *(13) = -24
        s(3, 2) = 1.0; // *(14) = 23
        s(2, 3) = 1.0;
        s(1, 4) = -1.0;
        s(0, 5) = 1.0;
        return s;
    }();
    return star;
}

const Mat63& sd_basis() {
    static const Mat63 basis = [] {
        const double r = 1.0 / std::sqrt(2.0);
        Mat63 m = Mat63::Zero();
        m(0, 0) = r; m(5, 0) = r;  // (12 + 34)/sqrt(2)
        m(1, 1) = r; m(4, 1) = -r; // (13 - 24)/sqrt(2)
        m(2, 2) = r; m(3, 2) = r;  // (14 + 23)/sqrt(2)
        return m;
    }();
    return basis;
}

const Mat63& asd_basis() {
    static const Mat63 basis = [] {
        const double r = 1.0 / std::sqrt(2.0);
        Mat63 m = Mat63::Zero();
        m(0, 0) = r; m(5, 0) = -r;
        m(1, 1) = r; m(4, 1) = r;
        m(2, 2) = r; m(3, 2) = -r;
        return m;
    }();
    return basis;
}

Vec6 coord_to_frame_two_form(const Mat4& beta, const Mat4& frame_inverse) {
    // b_{JK} = E^mu_J E^nu_K beta_{mu nu}
    const Mat4 in_frame = frame_inverse.transpose() * beta * frame_inverse;
    Vec6 out;
    for (int a = 0; a < 6; ++a) {
        const auto [i, j] = kPairBasis[a];
        out[a] = in_frame(i, j);
    }
    return out;
}

Mat4 frame_to_coord_two_form(const Vec6& comps, const Mat4& theta) {
    Mat4 in_frame = Mat4::Zero();
    for (int a = 0; a < 6; ++a) {
        const auto [i, j] = kPairBasis[a];
        in_frame(i, j) = comps[a];
        in_frame(j, i) = -comps[a];
    }
    return theta.transpose() * in_frame * theta;
}

} // namespace pinchlab
