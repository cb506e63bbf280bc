#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>

namespace pinchlab {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat63 = Eigen::Matrix<double, 6, 3>;

// Ordered basis of 2-forms: (12, 13, 14, 23, 24, 34) in frame indices.
// This basis is orthonormal for the inner product induced on Lambda^2 by an
// orthonormal coframe, and the orientation theta^1^2^3^4 > 0 is fixed
// throughout.
inline constexpr std::array<std::pair<int, int>, 6> kPairBasis = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Index of the ordered pair (i, j), i < j, in kPairBasis.
int pair_index(int i, int j);

// Signed position of theta^i ^ theta^j for arbitrary i != j.
struct SignedPair {
    int index;
    double sign;
};
SignedPair signed_pair(int i, int j);

// u ^ v in frame components (6-vector in kPairBasis order).
Vec6 wedge_frame(const Vec4& u, const Vec4& v);

// a ^ b of two covectors in coordinate components, as an antisymmetric 4x4.
Mat4 wedge_coord(const Vec4& a, const Vec4& b);

// Plucker form of a 2-form: zero iff the form is decomposable.
double plucker(const Vec6& two_form);

// Hodge star on Lambda^2 in the kPairBasis (orientation as above).
const Mat6& hodge_star();

// Orthonormal bases of the self-dual / anti-self-dual 3-planes, as 6x3
// matrices of column vectors.
const Mat63& sd_basis();
const Mat63& asd_basis();

// Convert a coordinate-basis 2-form (antisymmetric 4x4) to frame components,
// given the inverse coframe E (columns E(:,J) = frame vector e_J).
Vec6 coord_to_frame_two_form(const Mat4& beta, const Mat4& frame_inverse);

// Inverse conversion, given the coframe theta (rows theta^I_mu).
Mat4 frame_to_coord_two_form(const Vec6& comps, const Mat4& theta);

} // namespace pinchlab
