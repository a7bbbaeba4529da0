#pragma once

// Dormand-Prince 5(4) embedded pair with its quartic continuous extension.
// Internal to the library; hamilton_flow is the public entry point.

#include <array>
#include <cmath>
#include <cstddef>

namespace qflow::detail {

template <std::size_t N>
using Vec = std::array<double, N>;

namespace dp {

inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;

// Fifth-order weights (also row 7 of the tableau, FSAL).
inline constexpr std::array<double, 7> b = {35.0 / 384,     0.0,         500.0 / 1113,
                                            125.0 / 192,    -2187.0 / 6784, 11.0 / 84,
                                            0.0};

// Difference between the fifth- and fourth-order solutions.
inline constexpr std::array<double, 7> e = {-71.0 / 57600, 0.0,          71.0 / 16695,
                                            -71.0 / 1920,  17253.0 / 339200, -22.0 / 525,
                                            1.0 / 40};

// Continuous extension: y(t + th*h) = y + h * sum_i k_i * sum_j P[i][j] th^(j+1).
inline constexpr std::array<std::array<double, 4>, 7> P = {{
    {1.0, -8048581381.0 / 2820520608, 8663915743.0 / 2820520608,
     -12715105075.0 / 11282082432},
    {0.0, 0.0, 0.0, 0.0},
    {0.0, 131558114200.0 / 32700410799, -68118460800.0 / 10900136933,
     87487479700.0 / 32700410799},
    {0.0, -1754552775.0 / 470086768, 14199869525.0 / 1410260304,
     -10690763975.0 / 1880347072},
    {0.0, 127303824393.0 / 49829197408, -318862633887.0 / 49829197408,
     701980252875.0 / 199316789632},
    {0.0, -282668133.0 / 205662961, 2019193451.0 / 616988883, -1453857185.0 / 822651844},
    {0.0, 40617522.0 / 29380423, -110615467.0 / 29380423, 69997945.0 / 29380423},
}};

}  // namespace dp

/// One attempted step. k[0] must hold f(y0) on entry; k[6] is f(y1) on exit.
template <std::size_t N>
struct DormandPrinceStep {
  double t0 = 0;
  double h = 0;
  Vec<N> y0{};
  Vec<N> y1{};
  std::array<Vec<N>, 7> k{};
  double error_norm = 0;

  template <class Rhs>
  void attempt(Rhs&& f, double rel_tol, double abs_tol) {
    auto stage = [&](std::initializer_list<double> coeffs) {
      Vec<N> y = y0;
      std::size_t j = 0;
      for (double a : coeffs) {
        for (std::size_t i = 0; i < N; ++i) y[i] += h * a * k[j][i];
        ++j;
      }
      return y;
    };
    using namespace dp;
    k[1] = f(stage({a21}));
    k[2] = f(stage({a31, a32}));
    k[3] = f(stage({a41, a42, a43}));
    k[4] = f(stage({a51, a52, a53, a54}));
    k[5] = f(stage({a61, a62, a63, a64, a65}));
    y1 = stage({b[0], b[1], b[2], b[3], b[4], b[5]});
    k[6] = f(y1);

    double sum = 0;
    for (std::size_t i = 0; i < N; ++i) {
      double err = 0;
      for (std::size_t j = 0; j < 7; ++j) err += e[j] * k[j][i];
      err *= h;
      const double sc = abs_tol + rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      sum += (err / sc) * (err / sc);
    }
    error_norm = std::sqrt(sum / N);
  }

  Vec<N> interpolate(double t) const {
    const double th = (t - t0) / h;
    const std::array<double, 4> powers = {th, th * th, th * th * th, th * th * th * th};
    Vec<N> y = y0;
    for (std::size_t j = 0; j < 7; ++j) {
      double w = 0;
      for (std::size_t m = 0; m < 4; ++m) w += dp::P[j][m] * powers[m];
      for (std::size_t i = 0; i < N; ++i) y[i] += h * w * k[j][i];
    }
    return y;
  }
};

}  // namespace qflow::detail
