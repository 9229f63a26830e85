//! Reference values computed with an established statistical package and
//! frozen before the statistics here were written. Each tuple is
//! (input values, expected statistic, expected p-value).

pub const SHAPIRO_CASES: &[(&[f64], f64, f64)] = &[
    (
        &[4.704575, 2.542187, 2.078843],
        0.8775251848538221,
        0.3171628526446375,
    ),
    (
        &[1.492648, 0.531202, 2.335839, 1.902488],
        0.9606839652070871,
        0.783212537466181,
    ),
    (
        &[5.833354, 0.988478, -0.898582, 7.448232, -2.47426],
        0.9172238422559646,
        0.51219113687617,
    ),
    (
        &[4.263056, 0.926531, -0.16461, -1.029163, 4.450516, 3.345017],
        0.8874307354524268,
        0.3049439806674694,
    ),
    (
        &[2.669852, 4.819524, 3.125072, 2.824824, 2.6501, 3.740042, 3.875194, -2.653687],
        0.7308454224414748,
        0.005003948543767948,
    ),
    (
        &[
            8.058697, 2.085877, -0.146744, 3.987696, 4.557347, 2.827208, 2.904364, 6.770282,
            2.323985, 9.414384,
        ],
        0.9462134213358087,
        0.6239692273054269,
    ),
    (
        &[
            2.975074, 5.087604, 6.995043, 0.208227, 0.361014, 3.485101, 2.227251, 7.402507,
            2.187356, 2.147926, 3.075448, 2.098704,
        ],
        0.8989709177499717,
        0.15384126360168754,
    ),
    (
        &[
            4.927647, 2.903148, 1.901748, 3.836206, 3.76769, 1.237851, 3.636619, 7.224164,
            2.825787, 2.72635, 8.328775, 0.451747, 3.388988, 6.670455, 1.346169,
        ],
        0.9327730039864356,
        0.3000718860667925,
    ),
    (
        &[
            1.551059, 2.350991, 4.543709, 1.591657, 6.101048, 6.094793, 5.891949, 1.767449,
            0.201942, 2.778329, 1.239878, 2.767625, 3.636169, 4.104987, 2.43668, 1.791167,
            1.370117, 8.187731, 4.741915, -0.99157,
        ],
        0.9631720800707949,
        0.6089749427689831,
    ),
    (
        &[
            2.51976, 5.859511, 3.691613, 2.765979, 1.579612, 4.961576, 4.89875, 3.399112,
            4.278567, 0.493048, 7.088807, 4.783738, 2.950226, 3.449, 2.032281, 4.686401, 1.1345,
            5.141906, 0.707916, 3.74488, 2.589073, 5.861445, 3.861142, 2.976068, 1.373913,
            5.280267, 4.273467, 6.699048, 1.092298, 2.592046,
        ],
        0.978330463664754,
        0.7796353153056359,
    ),
    (
        &[
            6.872407, 3.922947, 5.304038, 4.215235, 5.866552, 4.936303, 2.970248, 4.825636,
            -0.79802, 3.378568, 1.948705, 7.590363, 5.116324, 2.719884, 0.098147, -0.280892,
            7.006698, 2.090894, 0.366505, 3.162359, -0.02217, 0.591794, 1.221137, 2.26606,
            1.350029, 6.225022, -2.118652, 5.916874, 6.194714, 3.207324, 3.082999, 1.723621,
            2.501547, 1.843937, 2.566172, 0.789131, 4.218914, 2.03062, 0.378701, 4.16354,
            0.61095, 2.271141, 3.112258, 3.295241, 1.120749, 1.63985, 2.413158, 1.288526,
            3.328185, 3.785418,
        ],
        0.9865631789172159,
        0.8361713333178756,
    ),
    (
        &[
            3.309832, 5.422128, 1.166738, 4.246264, 3.8509, 2.471735, 3.724745, 2.508266,
            5.223615, 3.403782, 1.785859, 3.283282, 5.335889, 0.687589, 4.32752, 2.82787,
            5.858307, 4.099691, 7.386192, 3.738791, 4.488353, 0.79277, 4.062764, 0.521122,
            3.009985, 5.110452, 3.78316, 5.692473, 0.268192, 3.253039, -0.533972, 2.959685,
            2.358739, 4.251688, 2.800071, 3.044617, 2.94406, 3.389423, 2.214607, 2.332206,
            7.838336, 2.0197, 4.276761, 2.637898, 5.187, 5.129272, 1.961887, 0.421347, 3.274539,
            1.301239, 4.860279, 3.511153, 4.561604, 2.403434, 1.906591, 4.964397, 2.587619,
            4.451256, 2.233005, 4.899844, 2.585924, 3.383797, 3.312224, 2.925811, 4.971709,
            3.144494, 4.390266, 2.122416, 4.106386, 4.723579, 2.198974, 2.555605, 6.741627,
            7.99901, 2.235767, 0.1829, 6.386695, 3.845917, 3.12917, 2.963152, 0.7578, 3.378988,
            -0.831357, 2.674538, 1.328713, 2.7459, 4.574148, 0.791989, 3.350639, 2.388083,
            -1.132178, 0.778792, 6.243901, 4.500507, 1.815776, 2.936417, 2.30271, 0.259315,
            0.008561, 4.338995,
        ],
        0.9891256148742255,
        0.5944766349865729,
    ),
    (
        &[
            7.908416, 2.223899, 4.074271, 8.200141, 3.557003, 4.007488, 9.099138, 5.980785,
            9.90261, 1.343071,
        ],
        0.933211654404424,
        0.4802148482103548,
    ),
    (
        &[
            3.914426, 0.69351, 0.008473, 2.122041, 8.407576, 5.58103, 9.29086, 7.109057, 4.05357,
            0.405005, 3.083907, 2.777184, 4.374014, 7.073441, 5.626913, 1.892865, 6.396946,
            5.837118, 1.713053, 4.862653, 1.37727, 1.568018, 9.526886, 1.488093, 7.418027,
        ],
        0.9492980863643615,
        0.24174326389793233,
    ),
    (
        &[
            1.694605, 2.181407, 0.818552, 0.7464, 0.806344, 0.509539, 0.115781, 0.798493,
            7.575816, 0.445148,
        ],
        0.6028805318227847,
        5.985593013288811e-05,
    ),
    (
        &[
            2.830531, 0.12631, 6.056745, 0.373316, 1.484042, 0.779131, 2.31866, 0.329106,
            0.78681, 1.351231, 2.005185, 0.288068, 0.123949, 1.162393, 0.138539, 0.307775,
            3.489689, 0.587807, 1.165396, 0.802583,
        ],
        0.7727793174709779,
        0.00034873658228728343,
    ),
    (
        &[
            1.907777, 2.115097, 1.262963, 10.252129, 3.433988, 0.415922, 0.393706, 0.341181,
            0.093236, 0.793069, 3.607444, 0.799586, 0.113715, 1.246136, 6.000038,
        ],
        0.7403383012470435,
        0.000694901735400201,
    ),
    (
        &[
            -0.619384, -0.271694, 0.077601, -1.535167, 1.513584, -0.490477, 0.52147, -0.494025,
            0.601767, 0.784244, 0.686964, -1.331013,
        ],
        0.9648720861397585,
        0.8504264159512311,
    ),
    (
        &[
            -3.277982, -2.974482, -1.939272, -3.004694, -2.750067, -3.257718, -3.335802,
            -3.699318, 1.986632, 3.684799, 3.660039, 3.878641, 3.556444, 3.778283, 2.415223,
            3.621283,
        ],
        0.7609558125528734,
        0.0008635505779196074,
    ),
    (
        &[
            3.4, 5.9, 5.6, 4.5, 4.4, 5.0, 5.1, 4.5, 6.0, 5.3, 4.0, 6.5, 5.6, 4.7,
        ],
        0.9867207793992551,
        0.9971357274991093,
    ),
];

pub const KS_CASES: &[(&[f64], f64, f64)] = &[
    (
        &[0.383217, 0.680498, 0.220941, 0.392253, 0.301497],
        0.407747,
        0.3767129429262612,
    ),
    (
        &[
            0.787224, 0.831685, 0.840295, 0.7012, 0.844297, 0.5415, 0.146794, 0.795544, 0.672024,
            0.893099,
        ],
        0.47202399999999994,
        0.023214283660245312,
    ),
    (
        &[
            0.549813, 0.50025, 0.138773, 0.129483, 0.853376, 0.855434, 0.000375, 0.212683,
            0.225668, 0.753412, 0.006746, 0.896855, 0.982414, 0.572421, 0.841409, 0.150118,
            0.568393, 0.592972, 0.034703, 0.7171,
        ],
        0.17433200000000001,
        0.5776007211199349,
    ),
    (
        &[
            0.372701, 0.0991, 0.35615, 0.114697, 0.875161, 0.471354, 0.187185, 0.05632, 0.231308,
            0.896196, 0.722836, 0.924162, 0.605499, 0.805839, 0.086709, 0.828149, 0.379768,
            0.567516, 0.304274, 0.555099, 0.711468, 0.035669, 0.211986, 0.498901, 0.267601,
            0.816625, 0.735182, 0.377281, 0.24099, 0.649225, 0.834402, 0.480259, 0.541833,
            0.117965, 0.900998, 0.213302, 0.300858, 0.488844, 0.215937, 0.668658, 0.029027,
            0.770029, 0.9231, 0.276486, 0.239602, 0.541313, 0.800025, 0.763541, 0.749245,
            0.330849,
        ],
        0.08023200000000003,
        0.9043720769868481,
    ),
    (
        &[
            0.730715, 0.924607, 0.294439, 0.856304, 0.064554, 0.844357, 0.720128, 0.671235,
            0.419364, 0.0127, 0.90558, 0.806702, 0.620688, 0.320202, 0.181284, 0.837343,
            0.890755, 0.94981, 0.231473, 0.516436, 0.948689, 0.413013, 0.596921, 0.676476,
            0.914394, 0.351745, 0.762563, 0.334811, 0.59899, 0.339142, 0.680616, 0.123241,
            0.752861, 0.786363, 0.462104, 0.137886, 0.20459, 0.11691, 0.708949, 0.911163,
            0.162498, 0.518008, 0.079883, 0.249082, 0.936964, 0.937405, 0.604629, 0.162266,
            0.842255, 0.729128, 0.421998, 0.321851, 0.654468, 0.763781, 0.573838, 0.224916,
            0.309146, 0.055007, 0.512515, 0.567986, 0.642363, 0.831782, 0.721587, 0.350647,
            0.879613, 0.21321, 0.782399, 0.945823, 0.153678, 0.671844, 0.278157, 0.423845,
            0.574918, 0.5466, 0.858938, 0.761688, 0.588789, 0.88695, 0.7021, 0.228993, 0.481089,
            0.155031, 0.121595, 0.604581, 0.928577, 0.227573, 0.683728, 0.974692, 0.675863,
            0.752557, 0.356008, 0.952747, 0.705605, 0.152964, 0.251185, 0.603827, 0.517001,
            0.435663, 0.408694, 0.638888,
        ],
        0.11798599999999998,
        0.12353535211812881,
    ),
    (
        &[
            0.912602, 0.432974, 0.879416, 0.182073, 0.391574, 0.849016, 0.288978, 0.232954,
            0.049278, 0.640678, 0.965807, 0.308932, 0.240681, 0.001066, 0.189698, 0.229618,
            0.514801, 0.689281, 0.256244, 0.977853, 0.818365, 0.844897, 0.406328, 0.664138,
            0.61977, 0.754129, 0.228542, 0.999789, 0.658579, 0.930448, 0.091552, 0.244794,
            0.570755, 0.887605, 0.509976, 0.270299, 0.14581, 0.361711, 0.754396, 0.286925,
            0.108516, 0.606249, 0.311988, 0.225739, 0.513277, 0.815018, 0.046731, 0.262507,
            0.511366, 0.274393, 0.837845, 0.409357, 0.481581, 0.071236, 0.803918, 0.414978,
            0.476361, 0.626373, 0.036383, 0.045923, 0.301529, 0.937299, 0.613769, 0.243255,
            0.980917, 0.176667, 0.471615, 0.791552, 0.937662, 0.280545, 0.701789, 0.421521,
            0.845544, 0.387489, 0.371284, 0.492102, 0.31248, 0.005312, 0.340988, 0.489262,
            0.923935, 0.885334, 0.539692, 0.471576, 0.12094, 0.514212, 0.800675, 0.805919,
            0.518788, 0.960285, 0.078676, 0.409827, 0.669271, 0.563284, 0.477419, 0.817063,
            0.810782, 0.144134, 0.886957, 0.911847, 0.3586, 0.166513, 0.860965, 0.9893,
            0.853097, 0.32632, 0.937887, 0.72996, 0.974889, 0.933299, 0.835064, 0.153088,
            0.292638, 0.93293, 0.23084, 0.840467, 0.869779, 0.862879, 0.021249, 0.381735,
            0.142072, 0.45384, 0.997995, 0.156185, 0.236029, 0.667262, 0.162878, 0.312104,
            0.981145, 0.85348, 0.294088, 0.455034, 0.138407, 0.654397, 0.09698, 0.779936,
            0.983698, 0.303385, 0.044457, 0.73936, 0.630311, 0.425181, 0.145063, 0.381415,
            0.80966, 0.964849, 0.177921, 0.990595, 0.005616, 0.31332, 0.532037, 0.522018,
            0.288913, 0.868166, 0.388227, 0.332771, 0.859909, 0.859806, 0.036037, 0.795476,
            0.611002, 0.825342, 0.528829, 0.78163, 0.180622, 0.045659, 0.322963, 0.92476,
            0.353055, 0.098143, 0.834148, 0.2445, 0.190692, 0.211588, 0.121678, 0.452733,
            0.721142, 0.493424, 0.69237, 0.508978, 0.425973, 0.812936, 0.752164, 0.992422,
            0.014003, 0.85464, 0.951278, 0.300324, 0.896738, 0.538097, 0.4507, 0.061479,
            0.947028, 0.337271, 0.162662, 0.718242, 0.613006, 0.267482, 0.333681, 0.370572,
        ],
        0.08155200000000007,
        0.13980784998417273,
    ),
    (
        &[
            0.833036, 0.601772, 0.719452, 0.422854, 0.509236, 0.428573, 0.64517, 0.779964,
            0.674775, 0.795035, 0.94378, 0.644393, 0.557038, 0.678378, 0.349757, 0.775717,
            0.500029, 0.931465, 0.151761, 0.348569, 0.61237, 0.432698, 0.569721, 0.27112,
            0.685087, 0.154967, 0.424276, 0.916536, 0.687944, 0.851808, 0.54728, 0.783915,
            0.101814, 0.90885, 0.643237, 0.966225, 0.286202, 0.150989, 0.477049, 0.287391,
            0.790214, 0.093052, 0.696958, 0.367974, 0.354599, 0.252354, 0.493088, 0.689603,
            0.737285, 0.917846, 0.157652, 0.318551, 0.463308, 0.299467, 0.346809, 0.418787,
            0.950844, 0.796679, 0.34563, 0.924787, 0.448787, 0.562673, 0.0595, 0.09998,
            0.053012, 0.881017, 0.716611, 0.631868, 0.22708, 0.978955, 0.569787, 0.488378,
            0.286637, 0.172315, 0.716984, 0.805474, 0.912452, 0.963664, 0.502402, 0.146859,
            0.080643, 0.301223, 0.985784, 0.891707, 0.011735, 0.828994, 0.54076, 0.952422,
            0.190228, 0.676011, 0.993748, 0.298276, 0.496095, 0.650487, 0.218764, 0.015107,
            0.641199, 0.83033, 0.793464, 0.397668, 0.38062, 0.488233, 0.724807, 0.051537,
            0.790498, 0.989942, 0.503371, 0.335984, 0.696716, 0.50303, 0.388179, 0.559572,
            0.757639, 0.891048, 0.550034, 0.079024, 0.986296, 0.0899, 0.071293, 0.933496,
            0.515535, 0.592092, 0.682208, 0.319431, 0.516693, 0.699455, 0.470327, 0.164323,
            0.230805, 0.822839, 0.036891, 0.073802, 0.974826, 0.98866, 0.819267, 0.493403,
            0.549725, 0.867326, 0.704085, 0.453119, 0.545091, 0.609952, 0.142537, 0.177303,
            0.423248, 0.218119, 0.151276, 0.697921, 0.897018, 0.751274, 0.309903, 0.203367,
            0.730902, 0.635608, 0.601903, 0.598541, 0.264317, 0.231636, 0.375318, 0.013822,
            0.374862, 0.093928, 0.440755, 0.849678, 0.438557, 0.245842, 0.608321, 0.27611,
            0.828486, 0.103764, 0.732912, 0.345771, 0.16413, 0.217854, 0.142311, 0.740936,
            0.428487, 0.61248, 0.768385, 0.837223, 0.444438, 0.912056, 0.39497, 0.104616,
            0.787427, 0.697711, 0.346116, 0.28204, 0.844012, 0.274319, 0.211681, 0.107395,
            0.322669, 0.511013, 0.061707, 0.53435, 0.103873, 0.564435, 0.039162, 0.035652,
            0.583821, 0.479326, 0.982846, 0.591865, 0.479706, 0.957633, 0.808179, 0.532918,
            0.89062, 0.863945, 0.359008, 0.571293, 0.20156, 0.314589, 0.59756, 0.140592,
            0.200334, 0.116118, 0.30944, 0.558723, 0.29197, 0.088254, 0.22645, 0.139898,
            0.667577, 0.61459, 0.662092, 0.057217, 0.38362, 0.119775, 0.858321, 0.016134,
            0.091832, 0.080305, 0.99469, 0.72573, 0.64482, 0.590423, 0.948389, 0.049838,
            0.564537, 0.500667, 0.480022, 0.010428, 0.634347, 0.224203, 0.882227, 0.539656,
            0.657754, 0.687361, 0.814636, 0.853939, 0.713723, 0.479391, 0.904718, 0.806903,
            0.307183, 0.818588, 0.264103, 0.305032, 0.246574, 0.890872, 0.984413, 0.381593,
            0.991852, 0.024279, 0.247499, 0.634087, 0.459048, 0.493612, 0.476035, 0.948547,
            0.660967, 0.655287, 0.056477, 0.185377, 0.713887, 0.788094, 0.377829, 0.418794,
            0.980539, 0.397625, 0.993327, 0.478612, 0.903676, 0.412053, 0.842523, 0.460187,
            0.417729, 0.408748, 0.450834, 0.817625, 0.951292, 0.485166, 0.859358, 0.041851,
            0.696139, 0.200133, 0.846374, 0.863161, 0.818836, 0.476618, 0.356004, 0.229363,
            0.742553, 0.385569, 0.746236, 0.737414, 0.827914, 0.679463, 0.933198, 0.189421,
            0.628013, 0.735358, 0.898369, 0.735212, 0.222193, 0.63207, 0.605446, 0.150303,
            0.12504, 0.485275, 0.183284, 0.781083, 0.592498, 0.074556, 0.941495, 0.705899,
            0.313045, 0.928478, 0.630732, 0.903229, 0.932134, 0.019551, 0.111756, 0.64781,
            0.413044, 0.632976, 0.334318, 0.31197, 0.254126, 0.339952, 0.414256, 0.011564,
            0.34167, 0.907055, 0.086258, 0.623347, 0.242323, 0.776836, 0.64712, 0.415915,
            0.514793, 0.738687, 0.425208, 0.936477, 0.015739, 0.252203, 0.650276, 0.456286,
            0.383894, 0.820443, 0.09006, 0.111346, 0.112528, 0.513632, 0.963486, 0.688116,
            0.335518, 0.964692, 0.172337, 0.699801, 0.791803, 0.798324, 0.196445, 0.097313,
            0.302, 0.138208, 0.01294, 0.129621, 0.925416, 0.564184, 0.766819, 0.409801, 0.49274,
            0.763364, 0.284493, 0.546051, 0.860282, 0.136677, 0.860282, 0.294598, 0.460118,
            0.458187, 0.263628, 0.315238, 0.025565, 0.126911, 0.260637, 0.460365, 0.69559,
            0.385621, 0.524577, 0.137958, 0.760443, 0.978235, 0.427247, 0.333362, 0.365849,
            0.460999, 0.793866, 0.816694, 0.246664, 0.732351, 0.107152, 0.891919, 0.10192,
            0.152288, 0.368126, 0.926844, 0.825845, 0.423279, 0.917792, 0.867254, 0.329177,
            0.703777, 0.020635, 0.643269, 0.485186, 0.53446, 0.54802, 0.474834, 0.583296,
            0.240504, 0.024181, 0.036981, 0.921024, 0.93549, 0.270982, 0.152224, 0.303377,
            0.85047, 0.027881, 0.729839, 0.81991, 0.727708, 0.756398, 0.341413, 0.772751,
            0.315229, 0.680607, 0.820327, 0.671009, 0.625076, 0.062479, 0.188789, 0.679947,
            0.364078, 0.522551, 0.328899, 0.441133, 0.062843, 0.213314, 0.531079, 0.285069,
            0.195323, 0.683054, 0.971638, 0.80744, 0.060571, 0.934029, 0.723929, 0.420931,
            0.235846, 0.925111, 0.27754, 0.814579, 0.684469, 0.708978, 0.551223, 0.258553,
            0.161335, 0.284919, 0.88427, 0.479065, 0.985397, 0.245281, 0.834778, 0.663887,
            0.248469, 0.722251, 0.180451, 0.955881, 0.913758, 0.887706, 0.004456, 0.352264,
            0.490134, 0.891779, 0.009969,
        ],
        0.026747999999999994,
        0.8667840128036526,
    ),
    (
        &[
            0.543086, 0.903731, 0.681082, 0.291734, 0.734559, 0.995521, 0.444905, 0.808914,
            0.837158, 0.846213,
        ],
        0.381082,
        0.1095376433138166,
    ),
    (
        &[
            0.484497, 0.679105, 0.670601, 0.917176, 0.347386, 0.679187, 0.457809, 0.553246,
            0.917, 0.165695, 0.662152, 0.415601, 0.477295, 0.981095, 0.615848, 0.503519,
            0.88266, 0.573081, 0.750326, 0.507345, 0.659162, 0.683339, 0.869024, 0.92001,
            0.726456, 0.724918, 0.102634, 0.983576, 0.614702, 0.353446,
        ],
        0.2911423333333334,
        0.012367483470074112,
    ),
    (
        &[
            0.641835, 0.486178, 0.727196, 0.634417, 0.791808, 0.825718, 0.706375, 0.79057,
            0.698153, 0.560544, 0.93309, 0.406032, 0.938384, 0.943952, 0.943184, 0.415843,
            0.496435, 0.780147, 0.527965, 0.991094, 0.320697, 0.495482, 0.708019, 0.928659,
            0.272433, 0.325944, 0.799527, 0.383844, 0.95709, 0.740564, 0.95541, 0.835594,
            0.388507, 0.987369, 0.578475, 0.962693, 0.910564, 0.955432, 0.427483, 0.83819,
            0.396535, 0.986042, 0.891936, 0.362587, 0.802836, 0.703218, 0.046788, 0.751736,
            0.853446, 0.891616, 0.96951, 0.825082, 0.312856, 0.288442, 0.632365, 0.355599,
            0.103679, 0.418014, 0.433478, 0.601494, 0.969318, 0.920874, 0.644943, 0.627619,
            0.783577, 0.944538, 0.716209, 0.425009, 0.782312, 0.243645, 0.245824, 0.492857,
            0.900478, 0.886538, 0.816784, 0.489118, 0.739466, 0.747777, 0.59347, 0.777365,
            0.585223, 0.861017, 0.489062, 0.740806, 0.962891, 0.897712, 0.31614, 0.305241,
            0.606926, 0.586172, 0.528529, 0.421908, 0.778277, 0.933955, 0.760837, 0.536952,
            0.626213, 0.840875, 0.767353, 0.76246,
        ],
        0.256178,
        3.9877381948969065e-06,
    ),
    (
        &[
            0.111711, 0.051273, 0.152846, 0.256015, 0.127802, 0.534199, 0.08929, 0.797965,
            0.249377, 0.515044, 0.699057, 0.731228, 0.394344, 0.073717, 0.080013, 0.105072,
            0.020991, 0.122525, 0.709996, 0.058546, 0.164991, 0.236142, 0.293549, 0.039901,
            0.239746,
        ],
        0.42645099999999997,
        0.0002248953017773176,
    ),
    (
        &[
            0.39044, 0.50031, 0.513064, 0.557071, 0.485508, 0.57117, 0.285542, 0.486686,
            0.642342, 0.669304, 0.61612, 0.50964, 0.501997, 0.803668, 0.498561, 0.52179,
            0.42704, 0.17822, 0.294005, 0.765791, 0.49766, 0.472799, 0.565121, 0.255615,
            0.488195, 0.299408, 0.661657, 0.445418, 0.435753, 0.296445, 0.389766, 0.142518,
            0.461743, 0.400465, 0.460374, 0.580273, 0.663895, 0.45577, 0.485725, 0.620665,
        ],
        0.28069599999999995,
        0.00366080438332106,
    ),
    (
        &[
            0.01598, 0.18754, 0.012697, 0.152616, 0.212907, 0.081062, 0.195464, 0.064687,
            0.152427, 0.072819, 0.190932, 0.209471, 0.291283, 0.26379, 0.175367, 0.151326,
            0.027545, 0.059856, 0.26646, 0.295936,
        ],
        0.704064,
        4.8947753133194406e-09,
    ),
    (
        &[
            0.758795, 0.847679, 0.816691, 0.803089, 0.905302, 0.812613, 0.700939, 0.964582,
            0.869878, 0.958098, 0.718217, 0.735584, 0.870832, 0.995936, 0.857854,
        ],
        0.700939,
        7.938929002993885e-07,
    ),
    (
        &[
            0.503313, 0.593794, 0.550704, 0.538321, 0.429535, 0.414136, 0.536139, 0.558172,
            0.527238, 0.40541, 0.599487, 0.58248, 0.457693, 0.497232, 0.590045, 0.569598,
            0.564713, 0.408898, 0.565913, 0.448203, 0.570511, 0.525047, 0.58573, 0.548059,
            0.569785, 0.503812, 0.569981, 0.477413, 0.48038, 0.521097,
        ],
        0.40541,
        0.00010429481542982178,
    ),
    (&[0.5], 0.5, 0.9639452436648751),
    (&[0.1, 0.9], 0.4, 0.9062063895703105),
    (
        &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9],
        0.1,
        0.9999906941986655,
    ),
    (
        &[
            0.372366, 0.460158, 0.485648, 0.088456, 0.309532, 0.387426, 0.602494, 0.848951,
            0.710526, 0.956059, 0.547744, 0.656567,
        ],
        0.22619866666666666,
        0.5710821841557094,
    ),
    (
        &[0.0, 0.001, 0.002, 0.5, 0.998, 0.999, 1.0, 0.9995],
        0.498,
        0.03781975924961082,
    ),
];
