#pragma once

// Parameter sets and printed values of Tables 1-3 (Section 6 of the paper).
// Table entries are 1000 * E(S_t - K)_+ / t with S_0 = 1.

#include "levy/levy_models.h"

#include <array>
#include <vector>

namespace paper {

inline constexpr levy::VGParams kVgTable1{0.4344, 0.1083, -0.3726, 0.0051};
inline constexpr levy::VGParams kVgTable2{0.1452, 0.1536, -0.1497, 0.0869};
inline constexpr levy::CGMYParams kCgmyTable3{1.1, 5.09, 8.6, 0.4456};

// Maturities of the table columns, in years.
inline constexpr std::array<double, 4> kTableMaturities{1.0 / 252, 5.0 / 252, 10.0 / 252,
                                                        20.0 / 252};

struct TableRow {
  double k;
  double first;
  std::array<double, 4> second;
  std::array<double, 4> ift;
};

inline const std::vector<TableRow> kTable1 = {
    {0.05, 234.6977, {239.4463, 258.4404, 282.1831, 329.6684}, {239.2843, 254.5295, 267.3434, 277.3445}},
    {0.06, 195.4777, {200.0560, 218.3694, 241.2611, 287.0445}, {199.9317, 215.3264, 229.5224, 244.4061}},
    {0.07, 163.8997, {168.2079, 185.4408, 206.9820, 250.0643}, {168.1131, 183.0887, 197.7644, 215.6399}},
    {0.08, 138.1606, {142.1521, 158.1182, 178.0757, 217.9909}, {142.0805, 156.3154, 170.8989, 190.4486}},
    {0.09, 116.9799, {120.6392, 135.2765, 153.5732, 190.1665}, {120.5857, 133.9099, 148.0422, 168.3418}},
    {0.1, 99.4165, {102.7465, 116.0661, 132.7157, 166.0149}, {102.7072, 115.0451, 128.5074, 148.9089}},
    {0.11, 84.7611, {87.7748, 99.8297, 114.8984, 145.0357}, {87.7466, 99.0818, 111.7494, 131.8027}},
    {0.12, 72.4675, {75.1840, 86.0500, 99.6325, 126.7974}, {75.1644, 85.5170, 97.3285, 116.7270}},
    {0.13, 62.1087, {64.5497, 74.3137, 86.5186, 110.9285}, {64.5368, 73.9493, 84.8855, 103.4274}},
    {0.14, 53.3465, {55.5346, 64.2872, 75.2279, 97.1093}, {55.5269, 64.0541, 74.1246, 91.6844}},
    {0.15, 45.9096, {47.8674, 55.6984, 65.4873, 85.0649}, {47.8636, 55.5669, 64.7996, 81.3079}},
    {0.16, 39.5787, {41.3278, 48.3238, 57.0689, 74.5590}, {41.3269, 48.2701, 56.7045, 72.1326}},
    {0.17, 34.1752, {35.7358, 41.9783, 49.7815, 65.3878}, {35.7372, 41.9835, 49.6660, 64.0145}},
    {0.18, 29.5521, {30.9433, 36.5080, 43.4639, 57.3758}, {30.9463, 36.5571, 43.5376, 56.8280}},
    {0.19, 25.5884, {26.8275, 31.7841, 37.9799, 50.3714}, {26.8317, 31.8651, 38.1947, 50.4628}},
    {0.2, 22.1834, {23.2864, 27.6985, 33.2136, 44.2438}, {23.2913, 27.8019, 33.5313, 44.8227}},
};

inline const std::vector<TableRow> kTable2 = {
    {0.05, 12.7382, {13.6052, 17.0732, 21.4081, 30.0780}, {13.6253, 17.5978, 23.7455, 36.6508}},
    {0.06, 8.3203, {8.8906, 11.1717, 14.0232, 19.7261}, {8.9038, 11.5085, 15.4255, 24.6815}},
    {0.07, 5.4984, {5.8797, 7.4046, 9.3108, 13.1232}, {5.8887, 7.6352, 10.2499, 16.7357}},
    {0.08, 3.6672, {3.9249, 4.9559, 6.2446, 8.8221}, {3.9312, 5.1175, 6.9034, 11.4468}},
    {0.09, 2.4641, {2.6398, 3.3426, 4.2212, 5.9782}, {2.6443, 3.4572, 4.6912, 7.8929}},
    {0.1, 1.6660, {1.7865, 2.2687, 2.8714, 4.0769}, {1.7897, 2.3504, 3.2090, 5.4783}},
    {0.11, 1.1323, {1.2154, 1.5479, 1.9635, 2.7947}, {1.2177, 1.6063, 2.2067, 3.8216}},
    {0.12, 0.7730, {0.8306, 1.0608, 1.3485, 1.9241}, {0.8322, 1.1027, 1.5239, 2.6763}},
    {0.13, 0.5298, {0.5698, 0.7297, 0.9297, 1.3295}, {0.5709, 0.7598, 1.0562, 1.8801}},
    {0.14, 0.3643, {0.3922, 0.5037, 0.6430, 0.9216}, {0.3930, 0.5252, 0.7343, 1.3240}},
    {0.15, 0.2513, {0.2708, 0.3486, 0.4460, 0.6406}, {0.2714, 0.3641, 0.5119, 0.9344}},
    {0.16, 0.1738, {0.1875, 0.2420, 0.3101, 0.4464}, {0.1879, 0.2531, 0.3577, 0.6607}},
    {0.17, 0.1205, {0.1301, 0.1683, 0.2161, 0.3117}, {0.1304, 0.1763, 0.2504, 0.4679}},
    {0.18, 0.0837, {0.0905, 0.1173, 0.1509, 0.2181}, {0.0907, 0.1231, 0.1757, 0.3318}},
    {0.19, 0.0583, {0.0630, 0.0819, 0.1056, 0.1528}, {0.0632, 0.0861, 0.1234, 0.2356}},
    {0.2, 0.0407, {0.0440, 0.0573, 0.0740, 0.1073}, {0.0441, 0.0603, 0.0869, 0.1675}},
};

inline const std::vector<TableRow> kTable3 = {
    {0.05, 118.8662, {120.2883, 125.9768, 133.0875, 147.3088}, {120.5386, 125.9179, 131.5844, 139.5891}},
    {0.06, 99.6004, {100.8808, 106.0023, 112.4042, 125.2081}, {101.1351, 106.0868, 111.5177, 119.9024}},
    {0.07, 84.3149, {85.4610, 90.0455, 95.7760, 107.2372}, {85.7023, 90.1924, 95.2726, 103.5827}},
    {0.08, 71.9095, {72.9321, 77.0226, 82.1358, 92.3620}, {73.1727, 77.2339, 81.9201, 89.9114}},
    {0.09, 61.7191, {62.6303, 66.2750, 70.8309, 79.9426}, {62.8747, 66.5275, 70.8150, 78.3608}},
    {0.1, 53.2682, {54.0799, 57.3264, 61.3846, 69.5011}, {54.3141, 57.5892, 61.4910, 68.5328}},
    {0.11, 46.1664, {46.8892, 49.7805, 53.3947, 60.6229}, {47.1192, 50.0626, 53.6011, 60.1205}},
    {0.12, 40.1763, {40.8204, 43.3967, 46.6171, 53.0579}, {41.0433, 43.6782, 46.8806, 52.8833}},
    {0.13, 35.0705, {35.6445, 37.9408, 40.8111, 46.5517}, {35.8690, 38.2302, 41.1241, 46.6292}},
    {0.14, 30.7034, {31.2154, 33.2632, 35.8230, 40.9425}, {31.4361, 33.5566, 36.1693, 41.2037}},
    {0.15, 26.9570, {27.4140, 29.2418, 31.5266, 36.0962}, {27.6311, 29.5285, 31.8864, 36.4806}},
    {0.16, 23.7163, {24.1244, 25.7565, 27.7968, 31.8772}, {24.3391, 26.0433, 28.1703, 32.3565}},
    {0.17, 20.9085, {21.2731, 22.7315, 24.5545, 28.2005}, {21.4858, 23.0167, 24.9355, 28.7454}},
    {0.18, 18.4722, {18.7982, 20.1025, 21.7327, 24.9933}, {19.0082, 20.3798, 22.1107, 25.5756}},
    {0.19, 16.3432, {16.6349, 17.8017, 19.2602, 22.1771}, {16.8407, 18.0761, 19.6377, 22.7868}},
    {0.2, 14.4852, {14.7463, 15.7910, 17.0968, 19.7084}, {14.9482, 16.0580, 17.4672, 20.3280}},
    {0.21, 12.8531, {13.0870, 14.0226, 15.1920, 17.5310}, {13.2891, 14.2859, 15.5580, 18.1563}},
    {0.22, 11.4193, {11.6289, 12.4672, 13.5150, 15.6108}, {11.8268, 12.7267, 13.8752, 16.2344}},
    {0.23, 10.1595, {10.3474, 11.0990, 12.0385, 13.9176}, {10.5434, 11.3517, 12.3891, 14.5312}},
    {0.24, 9.0459, {9.2145, 9.8885, 10.7310, 12.4161}, {9.4085, 10.1371, 11.0744, 13.0193}},
    {0.25, 8.0621, {8.2133, 8.8179, 9.5737, 11.0853}, {8.4040, 9.0625, 9.9096, 11.6753}},
    {0.26, 7.1931, {7.3287, 7.8714, 8.5498, 9.9065}, {7.4365, 8.1099, 8.8759, 10.4792}},
    {0.27, 6.4212, {6.5430, 7.0301, 7.6389, 8.8567}, {6.7291, 7.2645, 7.9573, 9.4132}},
    {0.28, 5.7374, {5.8468, 6.2842, 6.8309, 7.9243}, {5.8054, 6.5132, 7.1400, 8.4622}},
    {0.29, 5.1285, {5.2267, 5.6194, 6.1103, 7.0920}, {5.4878, 5.8445, 6.4118, 7.6128}},
    {0.3, 4.5867, {4.6749, 5.0275, 5.4683, 6.3499}, {4.8038, 5.2487, 5.7624, 6.8534}},
    {0.31, 4.1050, {4.1842, 4.5009, 4.8968, 5.6886}, {3.4559, 4.7173, 5.1826, 6.1739}},
    {0.32, 3.6746, {3.7457, 4.0301, 4.3856, 5.0966}, {3.7292, 4.2427, 4.6643, 5.5652}},
    {0.33, 3.2905, {3.3543, 3.6097, 3.9289, 4.5673}, {3.6098, 3.8185, 4.2006, 5.0195}},
    {0.34, 2.9479, {3.0053, 3.2346, 3.5212, 4.0944}, {3.2470, 3.4391, 3.7855, 4.5299}},
    {0.35, 2.6410, {2.6925, 2.8983, 3.1555, 3.6701}, {2.8716, 3.0991, 3.4134, 4.0903}},
};

}  // namespace paper
