#pragma once

// Values frozen from an independent sympy session (real_roots, exact
// discriminants). They are not derived from this library.

#include <array>

namespace pwz::oracle {

// W_4, a=-3 b=-5 c=4/5 d=-1
inline constexpr std::array<double, 4> kW4c08 = {-2.39632833380022, -1.44615113040773, -0.704590125164905,
                                                 -0.364041521738251};
// W_5, a=-3 b=-5 c=10 d=-1
inline constexpr std::array<double, 5> kW5c10 = {-5.41941257959584, -1.96240507723860, -0.534286477119864,
                                                 0.250001635321454, 0.999435831966176};
// W_6, same params
inline constexpr std::array<double, 6> kW6c10 = {-6.04220849336269, -3.11653396201121, -1.09654094540903,
                                                 -0.439223703345899, 0.249999931864991, 1.00006272781939};
// W_5, a=-3/10 b=-1 c=65 d=-60
inline constexpr std::array<double, 5> kW5c65 = {-1844.05340733003, -125.504067368471, 0.912511658204809,
                                                 0.958923950107927, 4.35270575685702};
inline constexpr std::array<double, 3> kW3c65 = {-514.513848584744, 1.01479285857558, 1.27683350394587};
// a=-3/10 b=-1 c=20 d=-60
inline constexpr std::array<double, 4> kW4c20 = {-423.393451481603, 2.89886680129638, 3.67874295418001,
                                                 29.0380639483485};
inline constexpr std::array<double, 3> kW5c20 = {-574.726596962677, -47.4412902174161, 2.92864557604733};
inline constexpr std::array<double, 3> kW3c20 = {-166.321429889638, 1.61077243813376, 2.48843522928218};

// disc_z W_3 for a=-3 b=-5 d=-1, ascending in c
inline constexpr std::array<long, 5> kDiscW3 = {8937, 5940, -14184, 580, 100};

}  // namespace pwz::oracle
