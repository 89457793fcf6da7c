#pragma once

#include <cmath>

#include <Eigen/Dense>

namespace confact {

/**
 * @brief Matrix exponential by scaling and squaring with a [13/13] Padé kernel.
 *
 * The matrix is scaled by 2^-s so its 1-norm drops below theta_13, the Padé
 * approximant is evaluated, and the result is squared s times. Works for any
 * fixed-size or dynamic square Eigen matrix.
 */
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& input) {
  using Matrix = typename Derived::PlainObject;
  constexpr double theta13 = 5.371920351148152;
  constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                          1187353796428800.0,  129060195264000.0,   10559470521600.0,
                          670442572800.0,      33522128640.0,       1323241920.0,
                          40840800.0,          960960.0,            16380.0,
                          182.0,               1.0};

  Matrix a = input;
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    a /= std::ldexp(1.0, squarings);
  }

  const Matrix ident = Matrix::Identity(a.rows(), a.cols());
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;

  const Matrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                         b[3] * a2 + b[1] * ident;
  const Matrix u = a * u_inner;
  const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                   b[2] * a2 + b[0] * ident;

  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace confact
