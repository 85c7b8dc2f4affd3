#pragma once

#include <array>

namespace twostop {

/// Golden fixture: the 19 reference rows of limiting constants, at 4-5
/// printed decimals. Column order matches the report schema:
/// alpha, b_alpha, lim_nF_V1, lim_nF_V2, lim_nF_Vp, r34, r45, r35, improvement.
struct Table1Row {
    double alpha;
    double b_alpha;
    double one_choice;
    double two_choice;
    double prophet;
    double r34;
    double r45;
    double r35;
    double improvement;
};

inline constexpr std::array<Table1Row, 19> kTable1{{
    {0.1, 11.9312, 11.0000, 5.72334, 4.52873, 1.92195, 1.26379, 2.42894, 0.99868},
    {0.2, 6.8927, 6.0000, 3.20772, 2.60517, 1.87049, 1.23129, 2.30311, 0.97131},
    {0.3, 5.2004, 4.3333, 2.36372, 1.94980, 1.83327, 1.21229, 2.22245, 0.93248},
    {0.4, 4.3485, 3.5000, 1.93919, 1.61670, 1.80488, 1.19947, 2.16490, 0.90235},
    {0.5, 3.8342, 3.0000, 1.68310, 1.41421, 1.78242, 1.19013, 2.12132, 0.88102},
    {0.6, 3.4896, 2.6667, 1.51157, 1.27776, 1.76417, 1.18298, 2.08699, 0.86571},
    {0.7, 3.2423, 2.4286, 1.38853, 1.17940, 1.74902, 1.17732, 2.05916, 0.85460},
    {0.8, 3.0561, 2.2500, 1.29590, 1.10506, 1.73624, 1.17270, 2.03610, 0.84614},
    {0.9, 2.9107, 2.1111, 1.22362, 1.04684, 1.72530, 1.16887, 2.01665, 0.83958},
    {1.0, 2.7940, 2.0000, 1.16562, 1.00000, 1.71583, 1.16562, 2.00000, 0.83438},
    {2.0, 2.2634, 1.5000, 0.90214, 0.78540, 1.66270, 1.14864, 1.90984, 0.81217},
    {3.0, 2.0839, 1.3333, 0.81309, 0.71207, 1.63983, 1.14186, 1.87245, 0.80556},
    {4.0, 1.9934, 1.2500, 0.76825, 0.67497, 1.62707, 1.13820, 1.85193, 0.80252},
    {5.0, 1.9388, 1.2000, 0.74123, 0.65255, 1.61895, 1.13590, 1.83897, 0.80078},
    {6.0, 1.9023, 1.1666, 0.72316, 0.63753, 1.61324, 1.13432, 1.82994, 0.79967},
    {7.0, 1.8762, 1.1429, 0.71023, 0.62677, 1.60914, 1.13317, 1.82343, 0.79892},
    {8.0, 1.8566, 1.1250, 0.70052, 0.61867, 1.60592, 1.13230, 1.81839, 0.79831},
    {9.0, 1.8412, 1.1112, 0.69296, 0.61236, 1.60350, 1.13162, 1.81455, 0.79789},
    {10.0, 1.8291, 1.1000, 0.68689, 0.60731, 1.60147, 1.13105, 1.81134, 0.79756},
}};

} // namespace twostop
