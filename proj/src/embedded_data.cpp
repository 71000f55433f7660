#include "unitfit/dataset.hpp"

namespace unitfit {

// Fourteen real samples of rates and proportions: OECD social indicators
// (dwelling facilities, quality of support network, educational attainment),
// hydrology (flood), reliability (time between failures), COVID-19 death and
// recovery rates, petroleum rock shape factors, snowfall, milk production,
// voter turnout and unit capacity factors.
const std::vector<Dataset>& embedded_datasets() {
    static const std::vector<Dataset> corpus = {
    {1, "dwelling", {
        0.008, 0.007, 0.002, 0.094, 0.123, 0.023, 0.005, 0.005,
        0.057, 0.004, 0.005, 0.001, 0.004, 0.035, 0.002, 0.006,
        0.064, 0.025, 0.112, 0.118, 0.001, 0.259, 0.001, 0.023,
        0.009, 0.015, 0.002, 0.003, 0.049, 0.005, 0.001,
    }},
    {2, "quality", {
        0.98, 0.96, 0.95, 0.94, 0.93, 0.8, 0.82, 0.85,
        0.88, 0.89, 0.78, 0.92, 0.92, 0.9, 0.96, 0.96,
        0.94, 0.77, 0.95, 0.91,
    }},
    {3, "educational", {
        0.84, 0.86, 0.8, 0.92, 0.67, 0.59, 0.43, 0.94,
        0.82, 0.91, 0.91, 0.81, 0.86, 0.76, 0.86, 0.76,
        0.85, 0.88, 0.63, 0.89, 0.89, 0.94, 0.74, 0.42,
        0.81, 0.81, 0.93, 0.55, 0.92, 0.9, 0.63, 0.84,
        0.89, 0.42, 0.82, 0.92,
    }},
    {4, "flood", {
        0.26, 0.27, 0.3, 0.32, 0.32, 0.34, 0.38, 0.38,
        0.39, 0.4, 0.41, 0.42, 0.42, 0.42, 0.45, 0.48,
        0.49, 0.61, 0.65, 0.74,
    }},
    {5, "failures", {
        0.216, 0.015, 0.4082, 0.0746, 0.0358, 0.0199, 0.0402, 0.0101,
        0.0605, 0.0954, 0.1359, 0.0273, 0.0491, 0.3465, 0.007, 0.656,
        0.106, 0.0062, 0.4992, 0.0614, 0.532, 0.0347, 0.1921,
    }},
    {6, "covid_canada", {
        0.1622, 0.1159, 0.1897, 0.126, 0.3025, 0.219, 0.2075, 0.2241,
        0.2163, 0.1262, 0.1627, 0.2591, 0.1989, 0.3053, 0.217, 0.2241,
        0.2174, 0.2541, 0.1997, 0.3333, 0.2594, 0.223, 0.229, 0.1536,
        0.2024, 0.2931, 0.2739, 0.2607, 0.2736, 0.2323, 0.1563, 0.2677,
        0.2181, 0.3019, 0.2136, 0.2281, 0.2346, 0.1888, 0.2729, 0.2162,
        0.2746, 0.2936, 0.3259, 0.2242, 0.181, 0.2679, 0.2296, 0.2992,
        0.2464, 0.2576, 0.2338, 0.1499, 0.2075, 0.1834, 0.3347, 0.2362,
    }},
    {7, "covid_spain_death", {
        0.333, 0.5, 0.5, 0.5714, 0.25, 0.3469, 0.4839, 0.2105,
        0.2311, 0.3127, 0.48, 0.2749, 0.3625, 0.3922, 0.3414, 0.3711,
        0.4288, 0.4077, 0.3939, 0.4076, 0.4079, 0.4408, 0.4046, 0.3836,
        0.3545, 0.3275, 0.3162, 0.315, 0.3053, 0.293, 0.279, 0.2685,
        0.2588, 0.2492, 0.2481, 0.2453, 0.2355, 0.2285, 0.2241, 0.2193,
        0.2162, 0.2153, 0.2129, 0.2098, 0.2037, 0.2066, 0.2087, 0.2038,
        0.2029, 0.2023, 0.1993, 0.1962, 0.1711, 0.1678, 0.1646, 0.1629,
        0.1613, 0.1544, 0.151, 0.1484, 0.1465, 0.1453, 0.1436, 0.142,
        0.1396, 0.1372,
    }},
    {8, "covid_uk", {
        0.1292, 0.3805, 0.4049, 0.2564, 0.3091, 0.2413, 0.139, 0.1127,
        0.3547, 0.3126, 0.2991, 0.2428, 0.2942, 0.0807, 0.1285, 0.2775,
        0.3311, 0.2825, 0.2559, 0.2756, 0.1652, 0.1072, 0.3383, 0.3575,
        0.2708, 0.2649, 0.0961, 0.1565, 0.158, 0.1981, 0.4154, 0.399,
        0.2483, 0.1762, 0.176, 0.1543, 0.3238, 0.3771, 0.4132, 0.4602,
        0.352, 0.1882, 0.1742, 0.4033, 0.4999, 0.393, 0.3963, 0.396,
        0.2029, 0.1791, 0.4768, 0.5331, 0.3739, 0.4015, 0.3828, 0.1718,
        0.1657, 0.4542, 0.4772, 0.3402,
    }},
    {9, "rock", {
        0.0903296, 0.203654, 0.204314, 0.280887, 0.197653, 0.328641, 0.148622, 0.162394,
        0.262727, 0.179455, 0.326635, 0.230081, 0.183312, 0.150944, 0.200071, 0.191802,
        0.154192, 0.464125, 0.117063, 0.148141, 0.14481, 0.133083, 0.276016, 0.420477,
        0.122417, 0.228595, 0.113852, 0.225214, 0.176969, 0.200744, 0.167045, 0.231623,
        0.91029, 0.341273, 0.438712, 0.262651, 0.189651, 0.172567, 0.240077, 0.311646,
        0.163586, 0.182453, 0.164127, 0.153481, 0.161865, 0.276016, 0.253832, 0.200447,
    }},
    {10, "snowfall", {
        0.03, 0.02, 0.015, 0.045, 0.1, 0.1, 0.125, 0.19,
        0.39, 0.11, 0.07, 0.01, 0.055, 0.22, 0.08, 0.005,
        0.125, 0.035, 0.085, 0.06, 0.01, 0.065, 0.02, 0.26,
        0.03, 0.015, 0.025, 0.01, 0.495, 0.085,
    }},
    {11, "milk", {
        0.4365, 0.426, 0.514, 0.6907, 0.7471, 0.2605, 0.6196, 0.8781,
        0.499, 0.6058, 0.6891, 0.577, 0.5394, 0.1479, 0.2356, 0.6012,
        0.1525, 0.5483, 0.6927, 0.7261, 0.3323, 0.0671, 0.2361, 0.48,
        0.5707, 0.7131, 0.5853, 0.6768, 0.535, 0.4151, 0.6789, 0.4576,
        0.3259, 0.2303, 0.7687, 0.4371, 0.3383, 0.6114, 0.348, 0.4564,
        0.7804, 0.3406, 0.4823, 0.5912, 0.5744, 0.5481, 0.1131, 0.729,
        0.0168, 0.5529, 0.453, 0.3891, 0.4752, 0.3134, 0.3175, 0.1167,
        0.675, 0.5113, 0.5447, 0.4143, 0.5627, 0.515, 0.0776, 0.3945,
        0.4553, 0.447, 0.5285, 0.5232, 0.6465, 0.065, 0.8492, 0.8147,
        0.3627, 0.3906, 0.4438, 0.4612, 0.3188, 0.216, 0.6707, 0.622,
        0.5629, 0.4675, 0.6844, 0.3413, 0.4332, 0.0854, 0.3821, 0.4694,
        0.3635, 0.4111, 0.5349, 0.3751, 0.1546, 0.4517, 0.2681, 0.4049,
        0.5553, 0.5878, 0.4741, 0.3598, 0.7629, 0.5941, 0.6174, 0.686,
        0.0609, 0.6488, 0.2747,
    }},
    {12, "covid_spain_recovery", {
        0.667, 0.5, 0.5, 0.4286, 0.75, 0.6531, 0.5161, 0.7895,
        0.7689, 0.6873, 0.52, 0.7251, 0.6375, 0.6078, 0.6289, 0.5712,
        0.5923, 0.6061, 0.5924, 0.5921, 0.5592, 0.5954, 0.6164, 0.6455,
        0.6725, 0.6838, 0.685, 0.6947, 0.721, 0.7315, 0.7412, 0.7508,
        0.7519, 0.7547, 0.7645, 0.7715, 0.7759, 0.7807, 0.7838, 0.7847,
        0.7871, 0.7902, 0.7934, 0.7913, 0.7962, 0.7971, 0.7977, 0.8007,
        0.8038, 0.8289, 0.8322, 0.8354, 0.8371, 0.8387, 0.8456, 0.849,
        0.8535, 0.8547, 0.8564, 0.858, 0.8604, 0.8628, 0.6586, 0.707,
        0.7963, 0.8516,
    }},
    {13, "voter", {
        0.92, 0.76, 0.88, 0.68, 0.47, 0.53, 0.66, 0.62,
        0.85, 0.64, 0.69, 0.75, 0.76, 0.58, 0.7, 0.81,
        0.63, 0.67, 0.73, 0.53, 0.77, 0.55, 0.57, 0.9,
        0.63, 0.79, 0.82, 0.78, 0.68, 0.49, 0.66, 0.53,
        0.72, 0.87, 0.45, 0.86, 0.68, 0.65,
    }},
    {14, "unit_capacity", {
        0.853, 0.759, 0.866, 0.809, 0.717, 0.544, 0.492, 0.403,
        0.344, 0.213, 0.116, 0.116, 0.092, 0.07, 0.059, 0.048,
        0.036, 0.029, 0.021, 0.014, 0.011, 0.008, 0.006,
    }},
    };
    return corpus;
}

} // namespace unitfit
