// Generated by tools/gen_asymptotic_tables.py -- do not edit by hand.
//
// Simulated null distributions, T = 1000 (tau) and 1500 (trace) steps,
// 1000000 replications (tau), 200000 replications (trace).
#include "asymptotic_tables.hpp"

namespace statarb::tables {

const std::array<double, kProbGridSize> kProbGrid = {{
    0.000100, 0.000500, 0.001000, 0.002500, 0.005000,
    0.010000, 0.012500, 0.015000, 0.017500, 0.020000,
    0.022500, 0.025000, 0.027500, 0.030000, 0.032500,
    0.035000, 0.037500, 0.040000, 0.042500, 0.045000,
    0.047500, 0.050000, 0.052500, 0.055000, 0.057500,
    0.060000, 0.062500, 0.065000, 0.067500, 0.070000,
    0.072500, 0.075000, 0.077500, 0.080000, 0.082500,
    0.085000, 0.087500, 0.090000, 0.092500, 0.095000,
    0.097500, 0.100000, 0.102500, 0.105000, 0.107500,
    0.110000, 0.112500, 0.115000, 0.117500, 0.120000,
    0.122500, 0.125000, 0.127500, 0.130000, 0.132500,
    0.135000, 0.137500, 0.140000, 0.142500, 0.145000,
    0.147500, 0.150000, 0.152500, 0.155000, 0.157500,
    0.160000, 0.162500, 0.165000, 0.167500, 0.170000,
    0.172500, 0.175000, 0.177500, 0.180000, 0.182500,
    0.185000, 0.187500, 0.190000, 0.192500, 0.195000,
    0.197500, 0.200000, 0.202500, 0.205000, 0.207500,
    0.210000, 0.212500, 0.215000, 0.217500, 0.220000,
    0.222500, 0.225000, 0.227500, 0.230000, 0.232500,
    0.235000, 0.237500, 0.240000, 0.242500, 0.245000,
    0.247500, 0.250000, 0.252500, 0.255000, 0.257500,
    0.260000, 0.262500, 0.265000, 0.267500, 0.270000,
    0.272500, 0.275000, 0.277500, 0.280000, 0.282500,
    0.285000, 0.287500, 0.290000, 0.292500, 0.295000,
    0.297500, 0.300000, 0.302500, 0.305000, 0.307500,
    0.310000, 0.312500, 0.315000, 0.317500, 0.320000,
    0.322500, 0.325000, 0.327500, 0.330000, 0.332500,
    0.335000, 0.337500, 0.340000, 0.342500, 0.345000,
    0.347500, 0.350000, 0.352500, 0.355000, 0.357500,
    0.360000, 0.362500, 0.365000, 0.367500, 0.370000,
    0.372500, 0.375000, 0.377500, 0.380000, 0.382500,
    0.385000, 0.387500, 0.390000, 0.392500, 0.395000,
    0.397500, 0.400000, 0.402500, 0.405000, 0.407500,
    0.410000, 0.412500, 0.415000, 0.417500, 0.420000,
    0.422500, 0.425000, 0.427500, 0.430000, 0.432500,
    0.435000, 0.437500, 0.440000, 0.442500, 0.445000,
    0.447500, 0.450000, 0.452500, 0.455000, 0.457500,
    0.460000, 0.462500, 0.465000, 0.467500, 0.470000,
    0.472500, 0.475000, 0.477500, 0.480000, 0.482500,
    0.485000, 0.487500, 0.490000, 0.492500, 0.495000,
    0.497500, 0.500000, 0.502500, 0.505000, 0.507500,
    0.510000, 0.512500, 0.515000, 0.517500, 0.520000,
    0.522500, 0.525000, 0.527500, 0.530000, 0.532500,
    0.535000, 0.537500, 0.540000, 0.542500, 0.545000,
    0.547500, 0.550000, 0.552500, 0.555000, 0.557500,
    0.560000, 0.562500, 0.565000, 0.567500, 0.570000,
    0.572500, 0.575000, 0.577500, 0.580000, 0.582500,
    0.585000, 0.587500, 0.590000, 0.592500, 0.595000,
    0.597500, 0.600000, 0.602500, 0.605000, 0.607500,
    0.610000, 0.612500, 0.615000, 0.617500, 0.620000,
    0.622500, 0.625000, 0.627500, 0.630000, 0.632500,
    0.635000, 0.637500, 0.640000, 0.642500, 0.645000,
    0.647500, 0.650000, 0.652500, 0.655000, 0.657500,
    0.660000, 0.662500, 0.665000, 0.667500, 0.670000,
    0.672500, 0.675000, 0.677500, 0.680000, 0.682500,
    0.685000, 0.687500, 0.690000, 0.692500, 0.695000,
    0.697500, 0.700000, 0.702500, 0.705000, 0.707500,
    0.710000, 0.712500, 0.715000, 0.717500, 0.720000,
    0.722500, 0.725000, 0.727500, 0.730000, 0.732500,
    0.735000, 0.737500, 0.740000, 0.742500, 0.745000,
    0.747500, 0.750000, 0.752500, 0.755000, 0.757500,
    0.760000, 0.762500, 0.765000, 0.767500, 0.770000,
    0.772500, 0.775000, 0.777500, 0.780000, 0.782500,
    0.785000, 0.787500, 0.790000, 0.792500, 0.795000,
    0.797500, 0.800000, 0.802500, 0.805000, 0.807500,
    0.810000, 0.812500, 0.815000, 0.817500, 0.820000,
    0.822500, 0.825000, 0.827500, 0.830000, 0.832500,
    0.835000, 0.837500, 0.840000, 0.842500, 0.845000,
    0.847500, 0.850000, 0.852500, 0.855000, 0.857500,
    0.860000, 0.862500, 0.865000, 0.867500, 0.870000,
    0.872500, 0.875000, 0.877500, 0.880000, 0.882500,
    0.885000, 0.887500, 0.890000, 0.892500, 0.895000,
    0.897500, 0.900000, 0.902500, 0.905000, 0.907500,
    0.910000, 0.912500, 0.915000, 0.917500, 0.920000,
    0.922500, 0.925000, 0.927500, 0.930000, 0.932500,
    0.935000, 0.937500, 0.940000, 0.942500, 0.945000,
    0.947500, 0.950000, 0.952500, 0.955000, 0.957500,
    0.960000, 0.962500, 0.965000, 0.967500, 0.970000,
    0.972500, 0.975000, 0.977500, 0.980000, 0.982500,
    0.985000, 0.987500, 0.990000, 0.995000, 0.997500,
    0.999000, 0.999500, 0.999900,
}};

const std::array<double, kProbGridSize> kDfTauConstQuantiles = {{
    -4.686929, -4.292373, -4.100500, -3.849442, -3.647098,
    -3.434772, -3.363473, -3.303641, -3.249821, -3.202952,
    -3.162662, -3.125925, -3.092158, -3.059831, -3.031106,
    -3.001948, -2.976137, -2.952228, -2.928605, -2.905499,
    -2.884214, -2.863297, -2.843315, -2.823814, -2.805858,
    -2.788309, -2.771012, -2.754872, -2.739022, -2.723972,
    -2.708955, -2.694569, -2.680714, -2.666918, -2.653970,
    -2.640660, -2.627421, -2.614940, -2.602505, -2.590508,
    -2.578699, -2.566926, -2.555549, -2.544400, -2.533440,
    -2.522969, -2.512564, -2.502523, -2.492051, -2.481852,
    -2.471827, -2.461987, -2.452287, -2.443101, -2.433775,
    -2.424475, -2.415449, -2.406242, -2.397223, -2.388730,
    -2.379813, -2.371238, -2.362772, -2.354406, -2.346051,
    -2.338054, -2.329630, -2.321579, -2.313755, -2.305898,
    -2.298000, -2.290160, -2.282377, -2.274776, -2.267341,
    -2.259903, -2.252564, -2.245643, -2.238532, -2.231292,
    -2.224303, -2.217108, -2.210131, -2.203215, -2.196120,
    -2.189406, -2.182623, -2.175901, -2.169286, -2.162585,
    -2.156045, -2.149554, -2.142930, -2.136511, -2.130243,
    -2.124054, -2.117857, -2.111422, -2.105118, -2.099034,
    -2.092793, -2.086708, -2.080551, -2.074551, -2.068465,
    -2.062571, -2.056348, -2.050141, -2.044177, -2.038241,
    -2.032589, -2.026758, -2.020980, -2.015229, -2.009609,
    -2.003963, -1.998271, -1.992639, -1.987103, -1.981351,
    -1.975782, -1.970259, -1.964681, -1.959151, -1.953771,
    -1.948226, -1.942616, -1.937183, -1.931890, -1.926307,
    -1.920884, -1.915422, -1.909874, -1.904641, -1.899409,
    -1.893918, -1.888617, -1.883243, -1.877945, -1.872698,
    -1.867409, -1.862251, -1.857108, -1.851880, -1.846755,
    -1.841672, -1.836491, -1.831520, -1.826221, -1.821004,
    -1.815955, -1.811063, -1.805968, -1.801141, -1.796250,
    -1.791181, -1.786121, -1.781142, -1.776141, -1.771130,
    -1.766022, -1.760888, -1.755937, -1.751230, -1.746448,
    -1.741342, -1.736330, -1.731264, -1.726231, -1.721259,
    -1.716202, -1.711240, -1.706227, -1.701273, -1.696282,
    -1.691508, -1.686698, -1.681893, -1.677027, -1.672141,
    -1.667359, -1.662463, -1.657633, -1.652739, -1.647953,
    -1.643024, -1.638075, -1.633403, -1.628507, -1.623641,
    -1.618663, -1.613794, -1.608933, -1.604324, -1.599535,
    -1.594650, -1.589817, -1.584879, -1.579924, -1.575236,
    -1.570321, -1.565442, -1.560559, -1.555649, -1.550736,
    -1.545670, -1.540713, -1.535870, -1.531070, -1.526089,
    -1.521064, -1.515818, -1.510876, -1.505941, -1.500894,
    -1.496175, -1.491112, -1.486165, -1.481237, -1.476399,
    -1.471610, -1.466716, -1.461709, -1.456693, -1.451871,
    -1.446810, -1.441819, -1.436774, -1.431826, -1.426695,
    -1.421580, -1.416645, -1.411763, -1.406665, -1.401759,
    -1.396623, -1.391380, -1.386159, -1.380895, -1.375735,
    -1.370669, -1.365579, -1.360334, -1.355248, -1.350155,
    -1.344871, -1.339600, -1.334064, -1.328796, -1.323453,
    -1.318105, -1.312821, -1.307383, -1.302123, -1.296702,
    -1.291422, -1.285965, -1.280716, -1.275379, -1.269907,
    -1.264518, -1.259111, -1.253455, -1.248030, -1.242425,
    -1.236860, -1.231223, -1.225408, -1.219667, -1.213966,
    -1.208317, -1.202573, -1.196580, -1.190762, -1.184969,
    -1.179153, -1.173160, -1.167189, -1.161230, -1.155376,
    -1.149522, -1.143621, -1.137450, -1.131318, -1.125043,
    -1.118726, -1.112483, -1.106230, -1.099806, -1.093499,
    -1.087093, -1.080452, -1.074128, -1.067550, -1.060782,
    -1.054027, -1.047125, -1.040411, -1.034026, -1.026882,
    -1.019992, -1.013023, -1.006202, -0.999112, -0.992288,
    -0.985248, -0.978082, -0.970812, -0.963268, -0.955975,
    -0.948314, -0.940727, -0.933311, -0.925459, -0.917778,
    -0.910093, -0.902392, -0.894537, -0.886361, -0.878247,
    -0.870530, -0.862343, -0.853945, -0.845136, -0.836960,
    -0.828419, -0.819698, -0.810752, -0.802136, -0.793491,
    -0.784051, -0.775052, -0.766008, -0.756669, -0.747259,
    -0.737801, -0.728133, -0.718466, -0.708534, -0.698727,
    -0.688575, -0.678177, -0.668104, -0.657762, -0.646933,
    -0.635865, -0.624853, -0.613774, -0.602721, -0.591357,
    -0.579935, -0.567975, -0.556049, -0.544013, -0.531548,
    -0.518914, -0.506105, -0.492931, -0.479478, -0.465901,
    -0.452390, -0.438993, -0.424943, -0.410305, -0.395907,
    -0.381041, -0.365298, -0.349664, -0.333489, -0.316921,
    -0.299732, -0.281855, -0.264085, -0.245538, -0.226589,
    -0.206458, -0.186275, -0.165343, -0.143938, -0.121576,
    -0.098542, -0.075383, -0.049794, -0.024266, 0.003234,
    0.031121, 0.060717, 0.092725, 0.127287, 0.161862,
    0.199653, 0.240613, 0.286078, 0.336889, 0.391653,
    0.454610, 0.527226, 0.612385, 0.865903, 1.111870,
    1.399186, 1.602573, 2.018261,
}};

const std::array<double, kProbGridSize> kDfTauTrendQuantiles = {{
    -5.178037, -4.786442, -4.612750, -4.377748, -4.176372,
    -3.963219, -3.895159, -3.835868, -3.786312, -3.742547,
    -3.701872, -3.665755, -3.632465, -3.601956, -3.572953,
    -3.546954, -3.521780, -3.497787, -3.475385, -3.454438,
    -3.434122, -3.415508, -3.396891, -3.379298, -3.361700,
    -3.344623, -3.328370, -3.312477, -3.297372, -3.282781,
    -3.267712, -3.253548, -3.239977, -3.226701, -3.213495,
    -3.200445, -3.188333, -3.176268, -3.164303, -3.152278,
    -3.141059, -3.129879, -3.119116, -3.108265, -3.097695,
    -3.087360, -3.077026, -3.067017, -3.057262, -3.047848,
    -3.038356, -3.029075, -3.019749, -3.010274, -3.001224,
    -2.992478, -2.983844, -2.975085, -2.966356, -2.958073,
    -2.949818, -2.941560, -2.933258, -2.925142, -2.917312,
    -2.909679, -2.901680, -2.893796, -2.886244, -2.878304,
    -2.870850, -2.863426, -2.855861, -2.848743, -2.841536,
    -2.834404, -2.827524, -2.820553, -2.813671, -2.806710,
    -2.799818, -2.793382, -2.786657, -2.780307, -2.773727,
    -2.767026, -2.760538, -2.754101, -2.747784, -2.741609,
    -2.735187, -2.728895, -2.722607, -2.716410, -2.710133,
    -2.704010, -2.697942, -2.691790, -2.685895, -2.679941,
    -2.673891, -2.668045, -2.662133, -2.656303, -2.650627,
    -2.644843, -2.639125, -2.633555, -2.627992, -2.622319,
    -2.616708, -2.611270, -2.605681, -2.600218, -2.594879,
    -2.589415, -2.583929, -2.578574, -2.573296, -2.567979,
    -2.562814, -2.557715, -2.552485, -2.547290, -2.542215,
    -2.536926, -2.531685, -2.526573, -2.521421, -2.516312,
    -2.511252, -2.506295, -2.501247, -2.496227, -2.491316,
    -2.486391, -2.481439, -2.476228, -2.471268, -2.466264,
    -2.461378, -2.456441, -2.451638, -2.446634, -2.441821,
    -2.436843, -2.432032, -2.427099, -2.422316, -2.417530,
    -2.412779, -2.408024, -2.403163, -2.398587, -2.393763,
    -2.389029, -2.384234, -2.379432, -2.374820, -2.370259,
    -2.365531, -2.360816, -2.356164, -2.351434, -2.346677,
    -2.342237, -2.337822, -2.333126, -2.328449, -2.323776,
    -2.319216, -2.314616, -2.310211, -2.305603, -2.300994,
    -2.296357, -2.291806, -2.287136, -2.282737, -2.278092,
    -2.273656, -2.269158, -2.264609, -2.260058, -2.255571,
    -2.251094, -2.246482, -2.241917, -2.237454, -2.233072,
    -2.228537, -2.223993, -2.219238, -2.214805, -2.210423,
    -2.205881, -2.201412, -2.196984, -2.192367, -2.188034,
    -2.183489, -2.179020, -2.174591, -2.170093, -2.165680,
    -2.161060, -2.156525, -2.152228, -2.147943, -2.143468,
    -2.138899, -2.134532, -2.129979, -2.125411, -2.120922,
    -2.116390, -2.112055, -2.107525, -2.102853, -2.098403,
    -2.093822, -2.089309, -2.084800, -2.080492, -2.076071,
    -2.071579, -2.067146, -2.062653, -2.058167, -2.053789,
    -2.049181, -2.044727, -2.040355, -2.035852, -2.031358,
    -2.026892, -2.022433, -2.017721, -2.013155, -2.008662,
    -2.004272, -1.999689, -1.995260, -1.990726, -1.986142,
    -1.981508, -1.976959, -1.972444, -1.967903, -1.963429,
    -1.958742, -1.954249, -1.949658, -1.945038, -1.940353,
    -1.935700, -1.931042, -1.926277, -1.921511, -1.916800,
    -1.911958, -1.907034, -1.902498, -1.897671, -1.892873,
    -1.888024, -1.883240, -1.878344, -1.873467, -1.868379,
    -1.863532, -1.858867, -1.854046, -1.849118, -1.844151,
    -1.839157, -1.834087, -1.829044, -1.824200, -1.819176,
    -1.814061, -1.808978, -1.803832, -1.798642, -1.793381,
    -1.788227, -1.783076, -1.777970, -1.772736, -1.767441,
    -1.762123, -1.756716, -1.751507, -1.746024, -1.740746,
    -1.735346, -1.729883, -1.724139, -1.718749, -1.713325,
    -1.707518, -1.701876, -1.696298, -1.690582, -1.684712,
    -1.679129, -1.673539, -1.667654, -1.661804, -1.655976,
    -1.649948, -1.644011, -1.638024, -1.632106, -1.625772,
    -1.619607, -1.613318, -1.607101, -1.600739, -1.594152,
    -1.587662, -1.581114, -1.574558, -1.567974, -1.561105,
    -1.554506, -1.547738, -1.540746, -1.533930, -1.527022,
    -1.520024, -1.512742, -1.505322, -1.497742, -1.490108,
    -1.482714, -1.475156, -1.467513, -1.459456, -1.451412,
    -1.443425, -1.435142, -1.427065, -1.418749, -1.410237,
    -1.401667, -1.392921, -1.383955, -1.375200, -1.366040,
    -1.357002, -1.347514, -1.338128, -1.328429, -1.318287,
    -1.308296, -1.298068, -1.287576, -1.276877, -1.265868,
    -1.254589, -1.243244, -1.231090, -1.218836, -1.206648,
    -1.194034, -1.180966, -1.167821, -1.154163, -1.140526,
    -1.126581, -1.111881, -1.096497, -1.080703, -1.064555,
    -1.047906, -1.031458, -1.014008, -0.995945, -0.977574,
    -0.958366, -0.938089, -0.916622, -0.894122, -0.870815,
    -0.845601, -0.818833, -0.792181, -0.761667, -0.730152,
    -0.696410, -0.659388, -0.618561, -0.574331, -0.524079,
    -0.469288, -0.405127, -0.324113, -0.089305, 0.126337,
    0.389871, 0.588396, 0.982808,
}};

const std::array<std::array<double, kProbGridSize>, kTraceMaxDim>
    kTraceRcQuantiles = {{
    // m = 1
    {{
        0.229197, 0.299940, 0.341002, 0.412140, 0.486477,
        0.588337, 0.633312, 0.669945, 0.706492, 0.739067,
        0.767317, 0.795078, 0.820544, 0.845561, 0.868135,
        0.891010, 0.912210, 0.933172, 0.954408, 0.973918,
        0.992540, 1.012478, 1.030488, 1.049581, 1.066013,
        1.084938, 1.103070, 1.120265, 1.137143, 1.153948,
        1.170703, 1.186939, 1.205031, 1.220468, 1.236952,
        1.252625, 1.269947, 1.285157, 1.300586, 1.315882,
        1.330795, 1.345471, 1.360121, 1.374762, 1.389180,
        1.403729, 1.417946, 1.432395, 1.447736, 1.461489,
        1.475768, 1.489243, 1.504085, 1.517761, 1.532669,
        1.547239, 1.561511, 1.575008, 1.588802, 1.602311,
        1.616214, 1.630086, 1.643409, 1.656387, 1.669770,
        1.682414, 1.696181, 1.708331, 1.721510, 1.734737,
        1.747424, 1.760576, 1.773807, 1.788059, 1.801132,
        1.813216, 1.825945, 1.839285, 1.851126, 1.863453,
        1.876447, 1.888642, 1.900727, 1.912969, 1.925186,
        1.937914, 1.950910, 1.963960, 1.977151, 1.989837,
        2.002662, 2.014860, 2.027865, 2.040703, 2.052950,
        2.066044, 2.076926, 2.089510, 2.100734, 2.114663,
        2.127047, 2.139280, 2.152199, 2.165065, 2.177366,
        2.189867, 2.202876, 2.215233, 2.227896, 2.240608,
        2.253566, 2.266700, 2.278974, 2.291703, 2.304154,
        2.316535, 2.329713, 2.342920, 2.354844, 2.366946,
        2.379037, 2.390312, 2.402565, 2.414476, 2.427281,
        2.439848, 2.451978, 2.465248, 2.478409, 2.491488,
        2.503165, 2.515162, 2.527863, 2.541046, 2.553228,
        2.565972, 2.578619, 2.590198, 2.601935, 2.614134,
        2.626791, 2.638856, 2.652211, 2.665188, 2.677440,
        2.689491, 2.702484, 2.715401, 2.728166, 2.740105,
        2.753382, 2.765803, 2.778400, 2.791893, 2.803829,
        2.817092, 2.829323, 2.842184, 2.855864, 2.868434,
        2.881221, 2.894728, 2.907129, 2.920269, 2.932927,
        2.946399, 2.959110, 2.971646, 2.984070, 2.996881,
        3.010545, 3.024396, 3.037316, 3.051151, 3.065303,
        3.078966, 3.092452, 3.105950, 3.120006, 3.133593,
        3.146410, 3.160532, 3.173839, 3.188096, 3.201534,
        3.215442, 3.229855, 3.242916, 3.256775, 3.270364,
        3.284197, 3.297456, 3.311800, 3.324827, 3.340371,
        3.355452, 3.369702, 3.383637, 3.397897, 3.411927,
        3.427592, 3.442440, 3.456537, 3.470654, 3.485393,
        3.500945, 3.515194, 3.529035, 3.543868, 3.559084,
        3.574808, 3.589630, 3.604368, 3.620252, 3.635204,
        3.649669, 3.666564, 3.682026, 3.696705, 3.711864,
        3.727538, 3.742636, 3.759058, 3.774080, 3.788662,
        3.804849, 3.820325, 3.836818, 3.853764, 3.869718,
        3.885860, 3.902442, 3.918759, 3.934771, 3.952104,
        3.967744, 3.984580, 4.001158, 4.018000, 4.035976,
        4.053744, 4.072981, 4.090270, 4.108991, 4.124690,
        4.141694, 4.159838, 4.177581, 4.194185, 4.212300,
        4.230088, 4.248090, 4.265609, 4.282959, 4.302710,
        4.321148, 4.339820, 4.358137, 4.376388, 4.395638,
        4.414241, 4.433584, 4.453999, 4.474657, 4.494236,
        4.513076, 4.533816, 4.555342, 4.575991, 4.597175,
        4.617580, 4.637769, 4.658192, 4.679411, 4.701269,
        4.722289, 4.742915, 4.764429, 4.786447, 4.807389,
        4.829356, 4.850523, 4.871440, 4.894121, 4.916444,
        4.938561, 4.960973, 4.983697, 5.006328, 5.030263,
        5.055115, 5.076901, 5.101587, 5.123748, 5.147908,
        5.170160, 5.194206, 5.218773, 5.242196, 5.265614,
        5.291645, 5.314799, 5.340014, 5.367141, 5.394070,
        5.420772, 5.448377, 5.474616, 5.501561, 5.530873,
        5.560401, 5.588433, 5.616063, 5.645134, 5.672208,
        5.702485, 5.735892, 5.764909, 5.795501, 5.826217,
        5.856134, 5.889879, 5.919066, 5.949968, 5.982479,
        6.016454, 6.050567, 6.084887, 6.118634, 6.154234,
        6.190871, 6.227129, 6.263534, 6.300897, 6.337693,
        6.374181, 6.412799, 6.451061, 6.491624, 6.528066,
        6.568607, 6.608687, 6.647846, 6.687770, 6.730115,
        6.771432, 6.815154, 6.857567, 6.904937, 6.952983,
        7.004012, 7.058174, 7.110389, 7.161007, 7.213039,
        7.264026, 7.316457, 7.369249, 7.429779, 7.486261,
        7.546431, 7.607522, 7.667081, 7.724486, 7.781760,
        7.846083, 7.912972, 7.985366, 8.056794, 8.126139,
        8.198780, 8.281472, 8.367123, 8.446088, 8.533473,
        8.623484, 8.712528, 8.810588, 8.902979, 9.005745,
        9.105899, 9.210163, 9.326717, 9.445667, 9.580454,
        9.707586, 9.860301, 10.005020, 10.167928, 10.350132,
        10.557145, 10.764384, 10.979608, 11.241350, 11.526620,
        11.860157, 12.269578, 12.802868, 14.309955, 15.674453,
        17.434657, 19.135516, 23.729079,
    }},
    // m = 2
    {{
        2.661055, 3.077746, 3.316635, 3.698645, 4.064540,
        4.514895, 4.669221, 4.815076, 4.933230, 5.048206,
        5.160420, 5.251603, 5.342841, 5.426580, 5.500438,
        5.578858, 5.656901, 5.726260, 5.796761, 5.859257,
        5.927734, 5.990613, 6.049967, 6.104899, 6.160994,
        6.211887, 6.258783, 6.310158, 6.360602, 6.407855,
        6.457426, 6.501782, 6.550236, 6.594666, 6.639606,
        6.679953, 6.722321, 6.763482, 6.805223, 6.846293,
        6.888030, 6.930872, 6.969406, 7.007944, 7.047096,
        7.083545, 7.120404, 7.157967, 7.191003, 7.227523,
        7.261980, 7.300138, 7.336741, 7.372246, 7.410404,
        7.442466, 7.479315, 7.510731, 7.543853, 7.576217,
        7.609241, 7.642160, 7.674550, 7.705198, 7.737428,
        7.768792, 7.801066, 7.833846, 7.864198, 7.893220,
        7.922472, 7.953202, 7.981710, 8.014091, 8.042983,
        8.072130, 8.101990, 8.132128, 8.161132, 8.191218,
        8.220663, 8.248859, 8.275905, 8.305449, 8.334869,
        8.362799, 8.392404, 8.421860, 8.453659, 8.481821,
        8.509898, 8.536708, 8.564155, 8.591063, 8.619152,
        8.644936, 8.673385, 8.700645, 8.729417, 8.757742,
        8.784699, 8.808943, 8.838088, 8.865357, 8.892208,
        8.917103, 8.943630, 8.972327, 9.000092, 9.028242,
        9.057077, 9.083420, 9.110413, 9.135219, 9.161665,
        9.187602, 9.213301, 9.239723, 9.268104, 9.294403,
        9.319064, 9.343808, 9.371529, 9.397723, 9.423141,
        9.449170, 9.474025, 9.499549, 9.527353, 9.553405,
        9.577231, 9.603152, 9.629803, 9.654526, 9.680681,
        9.704629, 9.730207, 9.756084, 9.781493, 9.804545,
        9.829026, 9.854267, 9.880562, 9.905863, 9.931596,
        9.958392, 9.984867, 10.013245, 10.038819, 10.062728,
        10.088575, 10.114670, 10.139488, 10.163122, 10.190183,
        10.214276, 10.241882, 10.267402, 10.291792, 10.317154,
        10.343369, 10.369881, 10.397216, 10.419667, 10.445349,
        10.471507, 10.497425, 10.524427, 10.551192, 10.575724,
        10.602433, 10.629449, 10.655938, 10.681638, 10.704644,
        10.730153, 10.755372, 10.780354, 10.805108, 10.830435,
        10.856655, 10.880321, 10.904200, 10.930337, 10.958091,
        10.981531, 11.006103, 11.032420, 11.057350, 11.083011,
        11.110179, 11.135429, 11.161443, 11.187507, 11.213386,
        11.239330, 11.266224, 11.293518, 11.320840, 11.347395,
        11.374444, 11.403289, 11.428625, 11.454659, 11.480282,
        11.509078, 11.536751, 11.563761, 11.591105, 11.618283,
        11.644249, 11.671621, 11.698128, 11.725108, 11.751043,
        11.778582, 11.805644, 11.833998, 11.862321, 11.887191,
        11.913951, 11.942499, 11.969297, 11.996060, 12.024297,
        12.052162, 12.078838, 12.108590, 12.136341, 12.165061,
        12.192616, 12.222167, 12.248348, 12.276874, 12.306107,
        12.336268, 12.365064, 12.394169, 12.421233, 12.452371,
        12.482535, 12.512776, 12.541737, 12.572157, 12.600997,
        12.629188, 12.658739, 12.689307, 12.718671, 12.750811,
        12.781627, 12.811849, 12.841546, 12.872402, 12.902371,
        12.932712, 12.963563, 12.993548, 13.023356, 13.054405,
        13.086025, 13.116236, 13.147107, 13.179367, 13.212691,
        13.245840, 13.278500, 13.310829, 13.345776, 13.381329,
        13.417454, 13.451883, 13.485255, 13.518969, 13.552698,
        13.587635, 13.623179, 13.658999, 13.695998, 13.730265,
        13.766529, 13.798790, 13.832814, 13.867818, 13.902209,
        13.936765, 13.971654, 14.008271, 14.044742, 14.084013,
        14.121223, 14.158486, 14.199810, 14.238492, 14.273532,
        14.310354, 14.350674, 14.388710, 14.426574, 14.464070,
        14.505182, 14.545909, 14.585402, 14.625786, 14.667599,
        14.704980, 14.749101, 14.788810, 14.832852, 14.876457,
        14.919280, 14.964276, 15.009995, 15.053525, 15.097440,
        15.141007, 15.190153, 15.241468, 15.286960, 15.336203,
        15.382936, 15.430067, 15.478058, 15.527390, 15.581296,
        15.629096, 15.685129, 15.731872, 15.777496, 15.830017,
        15.881446, 15.934780, 15.989650, 16.043879, 16.095403,
        16.149221, 16.205402, 16.264189, 16.322908, 16.379124,
        16.439774, 16.499871, 16.562682, 16.621260, 16.680223,
        16.744175, 16.815586, 16.881340, 16.951779, 17.021278,
        17.089123, 17.154214, 17.224119, 17.293258, 17.365322,
        17.442450, 17.518632, 17.598834, 17.679429, 17.756541,
        17.836657, 17.928215, 18.015329, 18.102896, 18.200007,
        18.296471, 18.388391, 18.481858, 18.581271, 18.684807,
        18.786608, 18.896019, 19.001962, 19.107889, 19.232328,
        19.360224, 19.489971, 19.614733, 19.756622, 19.906232,
        20.054229, 20.211307, 20.376582, 20.545746, 20.715077,
        20.909290, 21.099281, 21.321990, 21.545974, 21.789430,
        22.066127, 22.350542, 22.673733, 23.027682, 23.431181,
        23.873279, 24.371913, 25.013939, 26.997227, 28.935340,
        31.533048, 33.133839, 37.029623,
    }},
    // m = 3
    {{
        8.368706, 9.410113, 9.935070, 10.799910, 11.566884,
        12.405908, 12.686521, 12.950344, 13.161865, 13.381376,
        13.557878, 13.738922, 13.898383, 14.037651, 14.179339,
        14.305767, 14.435030, 14.545460, 14.662205, 14.772448,
        14.886092, 14.994498, 15.095723, 15.192059, 15.293417,
        15.384773, 15.478110, 15.557756, 15.640370, 15.727516,
        15.804566, 15.885627, 15.957628, 16.028754, 16.100849,
        16.170922, 16.245443, 16.320887, 16.392280, 16.460154,
        16.523270, 16.588734, 16.650546, 16.714691, 16.781255,
        16.844506, 16.905328, 16.965959, 17.031535, 17.090762,
        17.150497, 17.209291, 17.267654, 17.326065, 17.382591,
        17.439122, 17.492951, 17.546875, 17.595662, 17.646753,
        17.698266, 17.753561, 17.805575, 17.856249, 17.902472,
        17.950901, 17.998468, 18.048431, 18.094788, 18.144971,
        18.196993, 18.245544, 18.288855, 18.337304, 18.386252,
        18.431013, 18.475598, 18.524799, 18.568627, 18.612361,
        18.658654, 18.706604, 18.753714, 18.797905, 18.839928,
        18.882988, 18.929320, 18.972804, 19.015077, 19.057985,
        19.101929, 19.145818, 19.191314, 19.235519, 19.276859,
        19.319532, 19.361291, 19.402354, 19.440938, 19.481532,
        19.526563, 19.566682, 19.608565, 19.646688, 19.687520,
        19.728156, 19.769226, 19.813036, 19.851857, 19.892784,
        19.931086, 19.971207, 20.010255, 20.051000, 20.092838,
        20.129844, 20.168222, 20.206146, 20.247875, 20.287960,
        20.327026, 20.366370, 20.406258, 20.447524, 20.484234,
        20.521610, 20.559009, 20.597951, 20.637187, 20.672542,
        20.711387, 20.747865, 20.782159, 20.819779, 20.858227,
        20.895696, 20.931704, 20.966390, 21.007480, 21.043225,
        21.080186, 21.122615, 21.159722, 21.196234, 21.232903,
        21.270906, 21.310276, 21.348087, 21.387408, 21.423851,
        21.462250, 21.502118, 21.542705, 21.579206, 21.616796,
        21.656480, 21.693426, 21.730018, 21.769803, 21.808285,
        21.845755, 21.880278, 21.917658, 21.956257, 21.993800,
        22.032841, 22.069182, 22.104486, 22.145296, 22.181608,
        22.218713, 22.260022, 22.299562, 22.332566, 22.368613,
        22.406176, 22.444939, 22.481914, 22.520073, 22.556437,
        22.592042, 22.624893, 22.661276, 22.696316, 22.732791,
        22.770292, 22.804671, 22.845214, 22.881431, 22.916842,
        22.954131, 22.989462, 23.029004, 23.066791, 23.102839,
        23.139959, 23.174077, 23.210964, 23.247655, 23.284688,
        23.323278, 23.361306, 23.396924, 23.436715, 23.475954,
        23.515083, 23.554185, 23.592833, 23.631830, 23.671947,
        23.710818, 23.749273, 23.786274, 23.823215, 23.863492,
        23.903269, 23.942538, 23.983031, 24.022910, 24.060104,
        24.096330, 24.136250, 24.174700, 24.212604, 24.248492,
        24.289460, 24.332878, 24.372835, 24.413405, 24.455850,
        24.494458, 24.531190, 24.570105, 24.612601, 24.652156,
        24.691093, 24.734355, 24.774563, 24.815334, 24.855772,
        24.893965, 24.935454, 24.977699, 25.020593, 25.062471,
        25.104471, 25.146613, 25.186191, 25.225741, 25.268249,
        25.312541, 25.356190, 25.398517, 25.439666, 25.481291,
        25.526353, 25.567470, 25.608416, 25.651673, 25.695014,
        25.739290, 25.782266, 25.824496, 25.868985, 25.913179,
        25.960913, 26.005527, 26.053381, 26.097161, 26.144364,
        26.189711, 26.232735, 26.276476, 26.323245, 26.368027,
        26.414433, 26.462818, 26.513064, 26.560398, 26.606099,
        26.655416, 26.702166, 26.753813, 26.802201, 26.851940,
        26.902431, 26.951946, 27.002571, 27.051586, 27.097250,
        27.147638, 27.196751, 27.251118, 27.305904, 27.359253,
        27.409811, 27.463248, 27.513676, 27.569680, 27.623108,
        27.675605, 27.728393, 27.785866, 27.840624, 27.894038,
        27.948523, 28.004562, 28.060935, 28.119785, 28.177892,
        28.234903, 28.292954, 28.351237, 28.409893, 28.470390,
        28.532621, 28.591376, 28.654226, 28.715374, 28.778506,
        28.842776, 28.904796, 28.965891, 29.033847, 29.098177,
        29.161895, 29.227700, 29.298581, 29.364944, 29.435127,
        29.501292, 29.566861, 29.637761, 29.702240, 29.779295,
        29.849747, 29.915695, 29.990995, 30.068077, 30.148440,
        30.223734, 30.303242, 30.383483, 30.470754, 30.546199,
        30.636740, 30.717739, 30.801299, 30.886735, 30.984242,
        31.078088, 31.164543, 31.256533, 31.343333, 31.443020,
        31.543262, 31.643172, 31.744282, 31.850936, 31.956400,
        32.067747, 32.167921, 32.268967, 32.379187, 32.504449,
        32.634339, 32.759425, 32.874855, 33.002944, 33.126229,
        33.262187, 33.399536, 33.540053, 33.681263, 33.835165,
        33.995081, 34.156543, 34.335398, 34.509519, 34.693587,
        34.891312, 35.083030, 35.269715, 35.488382, 35.717401,
        35.960212, 36.204891, 36.488744, 36.770933, 37.098894,
        37.419136, 37.788724, 38.171518, 38.587007, 39.027703,
        39.562877, 40.233184, 41.040283, 43.385684, 45.492522,
        48.336210, 50.304736, 55.027197,
    }},
    // m = 4
    {{
        18.160377, 19.673769, 20.610093, 21.886014, 23.010350,
        24.260645, 24.688922, 25.078141, 25.399317, 25.700348,
        25.990070, 26.246685, 26.486933, 26.691371, 26.882834,
        27.084481, 27.261911, 27.430479, 27.589791, 27.748772,
        27.901233, 28.054666, 28.183625, 28.323605, 28.462023,
        28.585018, 28.705518, 28.818871, 28.930856, 29.038809,
        29.152363, 29.254714, 29.365649, 29.474006, 29.577061,
        29.676526, 29.777062, 29.873015, 29.966424, 30.054926,
        30.142045, 30.233206, 30.321022, 30.410738, 30.499690,
        30.584096, 30.672715, 30.762048, 30.835932, 30.918596,
        30.994575, 31.067708, 31.151402, 31.227850, 31.301842,
        31.375361, 31.447412, 31.521355, 31.595551, 31.670078,
        31.739401, 31.810567, 31.876711, 31.943017, 32.011765,
        32.084352, 32.147843, 32.210610, 32.280433, 32.345556,
        32.413569, 32.478767, 32.542945, 32.606762, 32.667430,
        32.732080, 32.795039, 32.855625, 32.913297, 32.976191,
        33.039321, 33.105844, 33.168709, 33.225691, 33.288105,
        33.344859, 33.404243, 33.462923, 33.521808, 33.579071,
        33.639243, 33.695898, 33.751770, 33.807868, 33.864044,
        33.914713, 33.969293, 34.025003, 34.076276, 34.134015,
        34.194880, 34.248786, 34.306136, 34.362154, 34.414761,
        34.471380, 34.526323, 34.576742, 34.630234, 34.684776,
        34.741569, 34.793292, 34.844231, 34.900191, 34.957358,
        35.008936, 35.060870, 35.111352, 35.162926, 35.210701,
        35.263917, 35.315412, 35.372457, 35.422410, 35.473608,
        35.525101, 35.577252, 35.625727, 35.680112, 35.731949,
        35.784495, 35.834584, 35.883760, 35.934263, 35.983831,
        36.036359, 36.085342, 36.131338, 36.181941, 36.232633,
        36.282546, 36.331536, 36.380469, 36.431024, 36.479857,
        36.530826, 36.577464, 36.627869, 36.677374, 36.728419,
        36.778102, 36.825271, 36.873180, 36.920716, 36.968426,
        37.019009, 37.069642, 37.116705, 37.164580, 37.215389,
        37.264113, 37.311584, 37.356544, 37.403523, 37.454660,
        37.502386, 37.547555, 37.596390, 37.642843, 37.690926,
        37.736798, 37.786105, 37.834229, 37.881610, 37.928562,
        37.979026, 38.027442, 38.075124, 38.123956, 38.173576,
        38.221681, 38.266781, 38.312616, 38.361688, 38.409777,
        38.459834, 38.510030, 38.557024, 38.604601, 38.654483,
        38.707122, 38.753847, 38.805904, 38.852645, 38.905803,
        38.958125, 39.007590, 39.056504, 39.105202, 39.155196,
        39.202255, 39.248438, 39.299364, 39.353045, 39.402207,
        39.450508, 39.494573, 39.542171, 39.590670, 39.641531,
        39.692496, 39.741118, 39.789127, 39.838556, 39.887507,
        39.934893, 39.983072, 40.035181, 40.087363, 40.139190,
        40.188197, 40.237053, 40.287474, 40.337667, 40.390010,
        40.440529, 40.489024, 40.541366, 40.591238, 40.638027,
        40.690964, 40.743291, 40.794543, 40.848368, 40.900196,
        40.952036, 41.005805, 41.057976, 41.109975, 41.160555,
        41.212611, 41.268527, 41.314926, 41.366598, 41.419740,
        41.472204, 41.524574, 41.577352, 41.634087, 41.689497,
        41.742383, 41.793828, 41.843145, 41.893936, 41.947824,
        42.004972, 42.061021, 42.115983, 42.177566, 42.234375,
        42.290264, 42.347520, 42.403146, 42.459790, 42.520958,
        42.576423, 42.635051, 42.688254, 42.744966, 42.804021,
        42.858119, 42.914368, 42.969521, 43.022807, 43.080750,
        43.139369, 43.199414, 43.260652, 43.326297, 43.386088,
        43.448705, 43.511357, 43.577022, 43.637305, 43.698844,
        43.758291, 43.819950, 43.883671, 43.948653, 44.014854,
        44.079358, 44.137850, 44.205225, 44.267563, 44.333695,
        44.396300, 44.461819, 44.525070, 44.595865, 44.663894,
        44.732271, 44.802108, 44.874364, 44.941665, 45.016180,
        45.086692, 45.158484, 45.229628, 45.301252, 45.373551,
        45.443325, 45.514631, 45.591061, 45.664142, 45.734688,
        45.811161, 45.885344, 45.958073, 46.042012, 46.117461,
        46.203340, 46.280526, 46.362076, 46.440243, 46.520838,
        46.603025, 46.694817, 46.778928, 46.864210, 46.945621,
        47.031100, 47.114895, 47.201780, 47.290661, 47.376422,
        47.463014, 47.560480, 47.650647, 47.741490, 47.837708,
        47.929388, 48.024258, 48.118119, 48.223133, 48.326508,
        48.427716, 48.529642, 48.637989, 48.744746, 48.855443,
        48.974171, 49.080283, 49.189235, 49.304618, 49.415757,
        49.540605, 49.659050, 49.781451, 49.900888, 50.037304,
        50.169069, 50.299173, 50.425516, 50.563978, 50.698343,
        50.844334, 50.986491, 51.149377, 51.314804, 51.481439,
        51.657200, 51.817237, 51.993038, 52.145132, 52.319687,
        52.520361, 52.727197, 52.938183, 53.160682, 53.399456,
        53.640391, 53.867259, 54.108617, 54.385999, 54.662457,
        54.949448, 55.258081, 55.569981, 55.930997, 56.304409,
        56.681878, 57.127218, 57.599441, 58.121384, 58.717773,
        59.343835, 60.136374, 61.030413, 63.695135, 66.428869,
        70.067361, 72.689419, 77.289243,
    }},
    // m = 5
    {{
        30.980435, 33.712786, 35.197242, 36.864242, 38.359385,
        40.084141, 40.691906, 41.217301, 41.607690, 42.022841,
        42.380910, 42.710187, 43.009037, 43.302848, 43.571635,
        43.833265, 44.063346, 44.277496, 44.490341, 44.695559,
        44.896980, 45.090880, 45.267548, 45.442582, 45.620326,
        45.789307, 45.947579, 46.107280, 46.253026, 46.391163,
        46.542071, 46.682400, 46.820302, 46.956454, 47.082947,
        47.214658, 47.340775, 47.468166, 47.590175, 47.708314,
        47.827677, 47.937509, 48.039203, 48.147026, 48.253798,
        48.366785, 48.474662, 48.582681, 48.683908, 48.781673,
        48.880000, 48.973057, 49.073888, 49.173850, 49.268169,
        49.362038, 49.454406, 49.544610, 49.641308, 49.735550,
        49.829338, 49.917760, 50.005323, 50.093071, 50.179759,
        50.262616, 50.347218, 50.438347, 50.521479, 50.600215,
        50.681439, 50.764236, 50.850081, 50.923470, 51.004021,
        51.078600, 51.161880, 51.240528, 51.324756, 51.391709,
        51.469353, 51.543165, 51.619937, 51.691351, 51.770233,
        51.845813, 51.921021, 51.992726, 52.066618, 52.142039,
        52.216393, 52.295249, 52.367918, 52.441887, 52.510060,
        52.584838, 52.661694, 52.730802, 52.801335, 52.869511,
        52.939711, 53.009096, 53.075238, 53.141668, 53.210889,
        53.276011, 53.348951, 53.419482, 53.485850, 53.552197,
        53.616993, 53.676182, 53.741409, 53.808558, 53.873419,
        53.938296, 54.000072, 54.069770, 54.134528, 54.200825,
        54.264562, 54.323358, 54.392815, 54.459137, 54.526596,
        54.587699, 54.650600, 54.713443, 54.777587, 54.837658,
        54.897216, 54.960306, 55.020439, 55.087551, 55.149270,
        55.212452, 55.274886, 55.339511, 55.402215, 55.465677,
        55.526612, 55.586667, 55.649916, 55.711711, 55.774014,
        55.833399, 55.899197, 55.959190, 56.018003, 56.076642,
        56.137452, 56.202003, 56.257998, 56.320248, 56.376949,
        56.438138, 56.495435, 56.558193, 56.615891, 56.670710,
        56.731083, 56.792646, 56.851230, 56.910147, 56.971657,
        57.029781, 57.091751, 57.149319, 57.206687, 57.266656,
        57.326643, 57.385917, 57.447190, 57.502505, 57.566205,
        57.628718, 57.689210, 57.748036, 57.803774, 57.859531,
        57.923214, 57.979081, 58.041116, 58.102634, 58.164696,
        58.222337, 58.283109, 58.345923, 58.404113, 58.464901,
        58.525512, 58.585171, 58.641750, 58.702677, 58.760104,
        58.820437, 58.878720, 58.943022, 59.002811, 59.062717,
        59.125665, 59.184385, 59.245067, 59.308046, 59.364135,
        59.425683, 59.486285, 59.545271, 59.607715, 59.669521,
        59.733446, 59.793796, 59.854181, 59.916954, 59.979929,
        60.041385, 60.105298, 60.163045, 60.224921, 60.282061,
        60.337482, 60.399186, 60.461456, 60.524127, 60.588678,
        60.649432, 60.709402, 60.769559, 60.833232, 60.897772,
        60.960009, 61.017371, 61.082035, 61.145421, 61.207697,
        61.271349, 61.334471, 61.393044, 61.458871, 61.521601,
        61.580768, 61.642609, 61.707673, 61.777294, 61.843361,
        61.910176, 61.978592, 62.048091, 62.116458, 62.181676,
        62.252073, 62.317514, 62.385718, 62.452280, 62.520843,
        62.590577, 62.658195, 62.722309, 62.792986, 62.859112,
        62.927317, 62.992314, 63.058420, 63.128354, 63.198342,
        63.265562, 63.336616, 63.406479, 63.477961, 63.547899,
        63.618713, 63.692265, 63.765887, 63.835128, 63.904556,
        63.977635, 64.047422, 64.120611, 64.192615, 64.264487,
        64.340652, 64.420368, 64.490424, 64.567210, 64.637106,
        64.710164, 64.781440, 64.855087, 64.928821, 65.005105,
        65.075729, 65.154221, 65.234249, 65.308605, 65.385066,
        65.468470, 65.544798, 65.622670, 65.709305, 65.790623,
        65.877176, 65.958749, 66.040702, 66.122631, 66.205229,
        66.293009, 66.382329, 66.461536, 66.554314, 66.645104,
        66.739527, 66.827969, 66.921632, 67.016969, 67.108148,
        67.203913, 67.292370, 67.388961, 67.482675, 67.573113,
        67.667060, 67.761016, 67.855937, 67.950843, 68.053779,
        68.149551, 68.248859, 68.343826, 68.447962, 68.548382,
        68.646504, 68.745065, 68.844748, 68.944320, 69.047224,
        69.153952, 69.262614, 69.371258, 69.476974, 69.584047,
        69.705736, 69.824298, 69.936835, 70.055982, 70.168718,
        70.293705, 70.419107, 70.548952, 70.670534, 70.795105,
        70.927562, 71.063358, 71.203317, 71.349282, 71.487507,
        71.639798, 71.785499, 71.933812, 72.080506, 72.226813,
        72.382954, 72.527691, 72.691231, 72.863523, 73.036719,
        73.197087, 73.370439, 73.547733, 73.739857, 73.918650,
        74.139305, 74.351781, 74.538262, 74.737484, 74.960577,
        75.184226, 75.417715, 75.649359, 75.888558, 76.127415,
        76.399347, 76.694206, 76.969026, 77.270117, 77.592686,
        77.908253, 78.288136, 78.669207, 79.066172, 79.520794,
        79.992726, 80.486635, 80.982703, 81.604972, 82.284940,
        83.098745, 83.991960, 85.064317, 88.281359, 91.608820,
        95.269788, 97.936412, 104.302829,
    }},
    // m = 6
    {{
        49.385494, 51.957309, 53.730031, 56.076159, 57.879863,
        59.944568, 60.726867, 61.389934, 61.933614, 62.459148,
        62.877676, 63.250123, 63.620027, 63.954904, 64.274090,
        64.566816, 64.852582, 65.122213, 65.381083, 65.648981,
        65.892757, 66.117527, 66.341002, 66.542214, 66.740772,
        66.944954, 67.133811, 67.319853, 67.495510, 67.674163,
        67.849710, 68.014632, 68.181440, 68.331368, 68.502780,
        68.661642, 68.808448, 68.959219, 69.102535, 69.246375,
        69.375777, 69.519734, 69.649727, 69.782887, 69.908258,
        70.040245, 70.164749, 70.293617, 70.416761, 70.551592,
        70.671091, 70.794900, 70.912612, 71.025115, 71.141734,
        71.258092, 71.371125, 71.480704, 71.600525, 71.709846,
        71.824624, 71.942576, 72.056491, 72.161273, 72.257682,
        72.359540, 72.464061, 72.566100, 72.660767, 72.762319,
        72.865062, 72.959831, 73.055270, 73.147397, 73.246583,
        73.340722, 73.437259, 73.526098, 73.619506, 73.703061,
        73.797422, 73.888232, 73.980205, 74.077683, 74.175169,
        74.265992, 74.354963, 74.443337, 74.525454, 74.606819,
        74.695380, 74.782664, 74.863850, 74.950150, 75.039174,
        75.122030, 75.210935, 75.292876, 75.379003, 75.462920,
        75.546670, 75.627484, 75.709879, 75.792801, 75.876606,
        75.955307, 76.027950, 76.111610, 76.191353, 76.274515,
        76.351504, 76.435650, 76.516455, 76.601252, 76.673453,
        76.752624, 76.831824, 76.907126, 76.985090, 77.060682,
        77.141812, 77.224954, 77.303048, 77.379113, 77.455541,
        77.531298, 77.606660, 77.684400, 77.756098, 77.828822,
        77.902355, 77.979401, 78.055245, 78.126570, 78.202826,
        78.274168, 78.351677, 78.430935, 78.507040, 78.579828,
        78.653917, 78.727663, 78.800356, 78.875147, 78.942286,
        79.015993, 79.088141, 79.158316, 79.231464, 79.298208,
        79.371810, 79.441300, 79.511712, 79.584125, 79.654377,
        79.721229, 79.791633, 79.859642, 79.930754, 80.006545,
        80.074784, 80.146600, 80.219324, 80.293841, 80.364769,
        80.431846, 80.500132, 80.571456, 80.641691, 80.710689,
        80.786267, 80.857927, 80.926387, 80.994354, 81.067889,
        81.141528, 81.209771, 81.284213, 81.353928, 81.419423,
        81.493751, 81.559920, 81.631938, 81.698570, 81.771173,
        81.844714, 81.913850, 81.981326, 82.050779, 82.115041,
        82.187411, 82.258799, 82.328342, 82.404036, 82.474213,
        82.543103, 82.611534, 82.684515, 82.749418, 82.821180,
        82.893991, 82.964784, 83.034325, 83.104550, 83.174188,
        83.248284, 83.321728, 83.391593, 83.466703, 83.532137,
        83.597762, 83.671905, 83.743910, 83.816059, 83.886263,
        83.966323, 84.038300, 84.117350, 84.190032, 84.267180,
        84.336326, 84.410130, 84.487586, 84.556773, 84.632715,
        84.701660, 84.774418, 84.842097, 84.912519, 84.987938,
        85.059045, 85.133914, 85.204244, 85.276587, 85.352138,
        85.423132, 85.500271, 85.578691, 85.655952, 85.731434,
        85.807259, 85.878968, 85.949802, 86.022747, 86.094354,
        86.173121, 86.248149, 86.325123, 86.406356, 86.484429,
        86.556271, 86.632466, 86.710046, 86.788662, 86.871709,
        86.948285, 87.028079, 87.109541, 87.191456, 87.272434,
        87.344287, 87.416199, 87.490758, 87.567255, 87.650831,
        87.730760, 87.813803, 87.893914, 87.973940, 88.057400,
        88.135036, 88.216324, 88.302944, 88.386756, 88.467399,
        88.554364, 88.643592, 88.733921, 88.824456, 88.911522,
        88.996146, 89.079644, 89.168765, 89.253890, 89.340782,
        89.428624, 89.515392, 89.612224, 89.707677, 89.796969,
        89.887783, 89.975172, 90.066728, 90.156590, 90.242138,
        90.339695, 90.435957, 90.531266, 90.625812, 90.723517,
        90.822246, 90.919877, 91.017227, 91.120761, 91.218345,
        91.314902, 91.408775, 91.506488, 91.611684, 91.711387,
        91.804132, 91.907431, 92.010537, 92.110563, 92.212227,
        92.324070, 92.434235, 92.540011, 92.654759, 92.772823,
        92.877765, 92.988278, 93.094978, 93.206975, 93.324297,
        93.448957, 93.564103, 93.674971, 93.788691, 93.903734,
        94.025632, 94.147175, 94.268510, 94.402009, 94.524197,
        94.651159, 94.783264, 94.912937, 95.053198, 95.182667,
        95.313116, 95.454438, 95.605172, 95.746493, 95.881655,
        96.026169, 96.170216, 96.321426, 96.471089, 96.619153,
        96.768300, 96.931594, 97.089803, 97.252351, 97.420136,
        97.583877, 97.754605, 97.941535, 98.118713, 98.288337,
        98.462627, 98.650832, 98.834926, 99.031464, 99.221105,
        99.423878, 99.628431, 99.832444, 100.038533, 100.255545,
        100.480959, 100.715013, 100.932511, 101.155480, 101.425915,
        101.677493, 101.948572, 102.209273, 102.515642, 102.830992,
        103.136652, 103.484898, 103.799552, 104.119732, 104.481502,
        104.858006, 105.253044, 105.680166, 106.117775, 106.602435,
        107.130155, 107.718095, 108.336487, 108.993599, 109.730673,
        110.627934, 111.685548, 113.048426, 116.779001, 120.051936,
        124.564393, 127.756746, 133.966499,
    }},
}};

}  // namespace statarb::tables
