#include "ricciforge/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace ricciforge {

double CurvatureBundle::curvature_scale() const {
  double m = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) m = std::max(m, std::abs(riemann[i][j][k][l]));
  return m;
}

double CurvatureBundle::max_symmetry_violation() const {
  double v = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
          v = std::max(v, std::abs(riemann[i][j][k][l] + riemann[j][i][k][l]));
          v = std::max(v, std::abs(riemann[i][j][k][l] + riemann[i][j][l][k]));
          v = std::max(v, std::abs(riemann[i][j][k][l] - riemann[k][l][i][j]));
        }
      }
    }
  }
  return v;
}

double CurvatureBundle::max_first_bianchi_violation() const {
  double v = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        for (int l = 0; l < dim; ++l) {
          v = std::max(v, std::abs(riemann[i][j][k][l] + riemann[j][k][i][l] +
                                   riemann[k][i][j][l]));
        }
      }
    }
  }
  return v;
}

}  // namespace ricciforge
