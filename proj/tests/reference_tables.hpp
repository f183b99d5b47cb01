#pragma once

// Reference values for the curve and its quotients over F_p.

#include <array>
#include <cstdint>

namespace reference {

// L-polynomials as linear coefficients b of p t^2 + b t + 1.
struct LpolyRow {
    std::uint64_t p;
    long quotient12;
    std::array<long, 2> quotient123;
    long quotient1234;
    int p_rank;
};

inline constexpr std::array<LpolyRow, 25> kLpolyTable = {{
    {5, -1, {-1, 3}, -1, 4},     {7, 0, {0, 4}, 0, 1},        {11, -4, {-4, 0}, -4, 3},
    {13, 5, {1, 5}, 5, 4},       {17, -5, {-5, 3}, -5, 4},    {19, -8, {-8, 4}, -8, 4},
    {23, -4, {-4, 0}, -4, 3},    {29, 3, {-9, 3}, 3, 4},      {31, 4, {4, 4}, 4, 4},
    {37, -3, {1, -3}, -3, 4},    {41, -6, {-6, -6}, -6, 4},   {43, -4, {-8, -4}, -4, 4},
    {47, -12, {-12, 12}, -12, 4}, {53, -10, {-10, 6}, -10, 4}, {59, 8, {0, 8}, 8, 3},
    {61, 5, {1, 5}, 5, 4},       {67, -8, {-8, 4}, -8, 4},    {71, 16, {12, 16}, 16, 4},
    {73, 5, {-11, 5}, 5, 4},     {79, -4, {-4, 16}, -4, 4},   {83, 4, {4, 12}, 4, 4},
    {89, 3, {3, 3}, 3, 4},       {97, -2, {-2, -2}, -2, 4},   {101, 6, {6, 6}, 6, 4},
    {103, -4, {-4, 4}, -4, 4},
}};

struct PointsRow {
    std::uint64_t p;
    long lower;
    long points;
    long upper;
};

inline constexpr std::array<PointsRow, 25> kPointsTable = {{
    {5, -10, 6, 22},    {7, -12, 12, 28},   {11, -12, 0, 36},   {13, -14, 30, 42},  {17, -14, 6, 50},
    {19, -12, 0, 52},   {23, -12, 12, 60},  {29, -10, 30, 70},  {31, -12, 48, 76},  {37, -10, 30, 86},
    {41, -6, 18, 90},   {43, -8, 24, 96},   {47, -4, 24, 100},  {53, -2, 30, 110},  {59, 0, 84, 120},
    {61, 2, 78, 122},   {67, 4, 48, 132},   {71, 8, 132, 136},  {73, 6, 78, 142},   {79, 12, 84, 148},
    {83, 12, 108, 156}, {89, 18, 102, 162}, {97, 22, 90, 174},  {101, 22, 126, 182}, {103, 24, 96, 184},
}};

}  // namespace reference
