"""Published reference values used by the acceptance suite."""

# Morse well D=25, a=2, r_e=3 (hbar = m = 1): exact levels n = 0..3
MORSE_EXACT = [-18.428932188134, -8.2867965644035, -2.1446609406726, -0.0025253169416]

# Quartic oscillator m = omega = 1, lambda = 2 (hbar = m = 1).
# Keys are (n, l) with n = 2 n_r + l, so the radial index is (n - l) // 2.
AHO = {
    (0, 0): 2.32440635210,
    (2, 0): 6.57840194902,
    (10, 0): 30.06476147957,
    (50, 0): 213.9909056603,
    (1, 1): 4.19017126505,
    (5, 1): 14.33886608777,
    (2, 2): 6.24277802550,
    (5, 3): 13.94920888000,
    (10, 4): 29.51001260726,
    (5, 5): 13.26445877906,
    (10, 10): 27.09249230522,
    (50, 20): 209.4822651210,
    (50, 50): 187.5297080140,
}
AHO_REQUIRED = [(0, 0), (2, 0), (10, 0), (50, 0), (5, 3), (10, 10), (50, 50)]

# Ground states of sgn(nu) r^nu, hbar = 2m = 1
POWER_GROUND = {
    -1.0: -0.2500000000,
    2.0: 3.000000000,
    0.15: 1.327945844,
    0.5: 1.833393609,
    0.75: 2.108136609,
    1.0: 2.338107410,
    1.5: 2.708092416,
    2.5: 3.242232312,
    3.0: 3.450562689,
    3.5: 3.634394905,
    4.0: 3.799673029,
}

# r^0.5, hbar = 2m = 1: six lowest levels for l = 0..5
SQRT_LADDER = {
    0: [1.83339360, 2.55064749, 3.05118194, 3.45213194, 3.79336044, 4.09392584],
    1: [2.30049623, 2.85433592, 3.28583329, 3.64738542, 3.96267650, 4.24465838],
    2: [2.65756336, 3.12032849, 3.50245154, 3.83254391, 4.12580907, 4.39138573],
    3: [2.95445093, 3.35759134, 3.70270499, 4.00736733, 4.28195944, 4.53316865],
    4: [3.21233437, 3.57275267, 3.88897564, 4.17268190, 4.43130627, 4.66989741],
    5: [3.44244561, 3.77041929, 4.06336036, 4.32947933, 4.57430430, 4.80174799],
}

# hbar = m = 1. Left: -2^1.7 r^-0.2; right: 2^(7/2) r. Index [l][n].
SOFT_COULOMB_A = 2.0**1.7
SOFT_COULOMB_NU = -0.2
SOFT_COULOMB = {
    0: [-2.68602822, -2.25351412, -2.04431800, -1.91063527, -1.81414352],
    1: [-2.34494617, -2.10073849, -1.95072177, -1.84490090, -1.76427587],
    2: [-2.15626090, -1.99005560, -1.87503225, -1.78852162, -1.71993045],
    3: [-2.02906490, -1.90486674, -1.81250205, -1.73987512, -1.68053730],
}
LINEAR_A = 2.0**3.5
LINEAR = {
    0: [9.352429641, 16.35179777, 22.08223931, 27.14683236, 31.77653434],
    1: [13.44501809, 19.53780737, 24.83049317, 29.62266174, 34.06093721],
    2: [16.99272902, 22.51883350, 27.47553075, 32.03881169, 36.30801220],
    3: [20.20370253, 25.32846149, 30.01858256, 34.38846804, 38.50906805],
}

# ln r, hbar = 2m = 1: (n, l) -> E
LOG_LEVELS = {
    (0, 0): 1.04433226, (1, 0): 1.84744258, (2, 0): 2.28961571, (3, 0): 2.59570686,
    (4, 0): 2.82992843, (5, 0): 3.01965502, (6, 0): 3.17910756, (7, 0): 3.31662376,
    (0, 1): 1.64114133, (1, 1): 2.15094678, (2, 1): 2.49094221, (3, 1): 2.74559643,
    (4, 1): 2.94900787, (5, 1): 3.11827840, (6, 1): 3.26318814, (7, 1): 3.38984841,
    (0, 2): 2.01330864, (1, 2): 2.38743285, (2, 2): 2.66249204, (3, 2): 2.87949935,
    (4, 2): 3.05848949, (5, 2): 3.21070014,
    (0, 3): 2.28414135, (1, 3): 2.57978331, (2, 3): 2.81044538, (3, 3): 2.99916581,
    (4, 3): 3.15866751, (5, 3): 3.29668751,
    (0, 4): 2.49711469, (1, 4): 2.74154358, (2, 4): 2.94004751, (3, 4): 3.10686428,
    (4, 4): 3.25056363,
    (0, 5): 2.67263174, (1, 5): 2.88099141,
    (0, 6): 2.82191040, (1, 6): 3.00348669,
    (0, 7): 2.95178152, (1, 7): 3.11268074,
    (0, 8): 3.06671400, (1, 8): 3.21116668,
    (0, 9): 3.16979180, (1, 9): 3.30084996,
    (0, 10): 3.26323280,
}

# <r^-1>, <r> for the three lowest states of l = 0, 1, 2 (hbar = m = 1)
EXPECT_LOG = {
    0: [(0.975829609, 1.39052517), (0.497961528, 3.15106068), (0.339365144, 4.91871111)],
    1: [(0.493205837, 2.38769029), (0.327683049, 4.14985349), (0.247106879, 5.91466141)],
    2: [(0.330196264, 3.38653900), (0.245961257, 5.14983438), (0.196769673, 6.91391694)],
}
EXPECT_SQRT = {
    0: [(0.767168993, 1.72566470), (0.469136231, 3.36898957), (0.354202831, 4.82937427)],
    1: [(0.437206279, 2.65352685), (0.323564598, 4.16612795), (0.263022498, 5.55753612)],
    2: [(0.315487133, 3.50669405), (0.253812312, 4.93344373), (0.215382759, 6.27078423)],
}
