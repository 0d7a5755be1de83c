"""Frozen reference values for the six result tables.

These are the fixed numbers the acceptance suite compares the harness
output against; they are never recomputed at test time.  Ratio tables
map n2 -> one value per distribution column; coverage tables map panel
index -> n2 -> ((coverage, avg_length) per nominal level).  The N(0,2)
column appears twice in the coverage layouts because the reference
layout repeats it in two independently simulated panels.
"""

RATIO_COLUMNS = (
    "N(0,1)", "N(0,1.25)", "N(0,1.5)", "N(0,2)", "N(0,3)",
    "t3", "t5", "DE(0,0.5)", "DE(0,1)", "DE(0,1.5)",
)

N2_VALUES = (10, 20, 30)

COVERAGE_LEVELS = (0.80, 0.90, 0.95, 0.99)

COVERAGE_PANEL_LABELS = (
    "N(0,1)", "N(0,2)", "DE(0,0.5)",
    "N(0,1.5)", "t3", "DE(0,1)",
    "N(0,2)", "t5", "DE(0,2)",
)

MLE_PANEL_LABELS = ("Normal", "t3", "t5", "Double Exponential")

REFERENCE_T1 = {
    10: (0.776, 0.857, 0.929, 1.017, 1.028, 0.787, 0.747, 0.431, 0.717, 0.875),
    20: (0.569, 0.693, 0.769, 0.871, 0.956, 0.621, 0.580, 0.209, 0.515, 0.705),
    30: (0.453, 0.559, 0.661, 0.789, 0.926, 0.462, 0.467, 0.137, 0.387, 0.582),
}

REFERENCE_T2 = {
    -1.0: {
        10: (0.739, 0.841, 0.922, 1.019, 1.039, 0.747, 0.719, 0.364, 0.664, 0.847),
        20: (0.539, 0.658, 0.759, 0.863, 0.955, 0.609, 0.560, 0.187, 0.487, 0.697),
        30: (0.432, 0.555, 0.649, 0.770, 0.922, 0.442, 0.437, 0.120, 0.362, 0.572),
    },
    -0.75: {
        10: (0.700, 0.810, 0.878, 0.987, 1.036, 0.730, 0.692, 0.339, 0.645, 0.821),
        20: (0.503, 0.624, 0.734, 0.853, 0.941, 0.588, 0.512, 0.172, 0.466, 0.662),
        30: (0.405, 0.528, 0.624, 0.765, 0.892, 0.418, 0.413, 0.107, 0.333, 0.552),
    },
    -0.5: {
        10: (0.666, 0.780, 0.856, 0.959, 1.038, 0.702, 0.665, 0.326, 0.625, 0.795),
        20: (0.453, 0.579, 0.674, 0.802, 0.916, 0.543, 0.475, 0.162, 0.433, 0.616),
        30: (0.356, 0.476, 0.580, 0.726, 0.855, 0.385, 0.369, 0.101, 0.319, 0.524),
    },
    -0.25: {
        10: (0.616, 0.752, 0.842, 0.943, 1.036, 0.664, 0.630, 0.329, 0.630, 0.779),
        20: (0.403, 0.532, 0.635, 0.773, 0.899, 0.504, 0.438, 0.174, 0.419, 0.600),
        30: (0.320, 0.434, 0.532, 0.682, 0.838, 0.356, 0.338, 0.111, 0.315, 0.506),
    },
}

# Coverage tables: panel -> n2 -> ((coverage, avg_length) for each level).
REFERENCE_T3 = {
    0: {  # Normal
        10: ((0.774, 0.774), (0.864, 0.994), (0.913, 1.184), (0.972, 1.557)),
        20: ((0.773, 0.784), (0.871, 1.007), (0.913, 1.200), (0.976, 1.577)),
        30: ((0.810, 0.788), (0.888, 1.011), (0.932, 1.204), (0.983, 1.583)),
    },
    1: {  # t3
        10: ((0.774, 0.777), (0.854, 0.998), (0.915, 1.189), (0.973, 1.563)),
        20: ((0.769, 0.777), (0.849, 0.997), (0.901, 1.188), (0.964, 1.562)),
        30: ((0.760, 0.786), (0.858, 1.009), (0.912, 1.203), (0.972, 1.581)),
    },
    2: {  # t5
        10: ((0.737, 0.789), (0.858, 1.013), (0.913, 1.207), (0.966, 1.586)),
        20: ((0.759, 0.795), (0.862, 1.020), (0.915, 1.216), (0.975, 1.598)),
        30: ((0.769, 0.790), (0.880, 1.015), (0.928, 1.209), (0.977, 1.589)),
    },
    3: {  # Double Exponential; the source rows repeat across n2
        10: ((0.771, 0.781), (0.863, 1.002), (0.913, 1.194), (0.962, 1.569)),
        20: ((0.771, 0.781), (0.863, 1.002), (0.913, 1.194), (0.962, 1.569)),
        30: ((0.771, 0.781), (0.863, 1.002), (0.913, 1.194), (0.962, 1.569)),
    },
}

REFERENCE_T4 = {
    0: {  # N(0,1)
        10: ((0.754, 0.725), (0.846, 0.930), (0.902, 1.102), (0.963, 1.435)),
        20: ((0.771, 0.708), (0.868, 0.910), (0.913, 1.085), (0.964, 1.415)),
        30: ((0.805, 0.679), (0.888, 0.874), (0.935, 1.047), (0.976, 1.389)),
    },
    1: {  # N(0,2), first appearance
        10: ((0.746, 0.744), (0.839, 0.949), (0.898, 1.126), (0.960, 1.471)),
        20: ((0.756, 0.754), (0.855, 0.961), (0.908, 1.138), (0.958, 1.482)),
        30: ((0.791, 0.754), (0.873, 0.957), (0.925, 1.135), (0.970, 1.483)),
    },
    2: {  # DE(0,0.5)
        10: ((0.759, 0.716), (0.854, 0.919), (0.909, 1.094), (0.951, 1.441)),
        20: ((0.780, 0.678), (0.872, 0.878), (0.918, 1.055), (0.966, 1.401)),
        30: ((0.780, 0.643), (0.883, 0.843), (0.920, 1.018), (0.971, 1.368)),
    },
    3: {  # N(0,1.5)
        10: ((0.748, 0.735), (0.845, 0.945), (0.899, 1.116), (0.962, 1.457)),
        20: ((0.761, 0.731), (0.864, 0.938), (0.911, 1.111), (0.961, 1.447)),
        30: ((0.799, 0.715), (0.882, 0.912), (0.936, 1.084), (0.973, 1.422)),
    },
    4: {  # t3
        10: ((0.758, 0.733), (0.848, 0.938), (0.908, 1.112), (0.964, 1.460)),
        20: ((0.766, 0.711), (0.851, 0.911), (0.892, 1.080), (0.951, 1.411)),
        30: ((0.771, 0.700), (0.869, 0.897), (0.916, 1.068), (0.966, 1.402)),
    },
    5: {  # DE(0,1)
        10: ((0.758, 0.736), (0.848, 0.941), (0.907, 1.119), (0.951, 1.460)),
        20: ((0.770, 0.711), (0.859, 0.911), (0.912, 1.086), (0.962, 1.425)),
        30: ((0.772, 0.685), (0.866, 0.882), (0.915, 1.053), (0.965, 1.392)),
    },
    6: {  # N(0,2), second appearance
        10: ((0.748, 0.741), (0.842, 0.948), (0.899, 1.120), (0.960, 1.464)),
        20: ((0.753, 0.743), (0.858, 0.951), (0.909, 1.127), (0.958, 1.462)),
        30: ((0.798, 0.736), (0.879, 0.936), (0.931, 1.111), (0.972, 1.456)),
    },
    7: {  # t5
        10: ((0.734, 0.744), (0.840, 0.949), (0.897, 1.124), (0.963, 1.467)),
        20: ((0.761, 0.716), (0.858, 0.916), (0.906, 1.096), (0.974, 1.441)),
        30: ((0.766, 0.693), (0.877, 0.892), (0.929, 1.065), (0.971, 1.403)),
    },
    8: {  # DE(0,2)
        10: ((0.755, 0.743), (0.847, 0.952), (0.904, 1.132), (0.951, 1.470)),
        20: ((0.762, 0.731), (0.859, 0.935), (0.908, 1.109), (0.963, 1.445)),
        30: ((0.770, 0.712), (0.866, 0.913), (0.906, 1.086), (0.961, 1.416)),
    },
}

REFERENCE_T5 = {
    0: {  # N(0,1)
        10: ((0.763, 0.687), (0.861, 0.886), (0.920, 1.058), (0.973, 1.394)),
        20: ((0.797, 0.649), (0.875, 0.840), (0.915, 1.006), (0.968, 1.344)),
        30: ((0.816, 0.610), (0.912, 0.796), (0.941, 0.965), (0.980, 1.305)),
    },
    1: {  # N(0,2), first appearance
        10: ((0.752, 0.754), (0.840, 0.963), (0.902, 1.139), (0.966, 1.483)),
        20: ((0.765, 0.756), (0.863, 0.963), (0.907, 1.138), (0.956, 1.477)),
        30: ((0.802, 0.751), (0.885, 0.956), (0.926, 1.130), (0.968, 1.478)),
    },
    2: {  # DE(0,0.5)
        10: ((0.787, 0.626), (0.889, 0.829), (0.934, 1.009), (0.979, 1.368)),
        20: ((0.813, 0.568), (0.903, 0.766), (0.941, 0.945), (0.979, 1.311)),
        30: ((0.821, 0.523), (0.901, 0.718), (0.946, 0.892), (0.979, 1.263)),
    },
    3: {  # N(0,1.5)
        10: ((0.756, 0.726), (0.855, 0.930), (0.914, 1.104), (0.972, 1.448)),
        20: ((0.786, 0.707), (0.873, 0.908), (0.913, 1.077), (0.966, 1.415)),
        30: ((0.803, 0.684), (0.899, 0.874), (0.935, 1.041), (0.974, 1.377)),
    },
    4: {  # t3
        10: ((0.782, 0.709), (0.873, 0.910), (0.923, 1.082), (0.968, 1.441)),
        20: ((0.774, 0.668), (0.869, 0.861), (0.911, 1.028), (0.958, 1.361)),
        30: ((0.793, 0.648), (0.880, 0.836), (0.924, 1.001), (0.971, 1.341)),
    },
    5: {  # DE(0,1)
        10: ((0.777, 0.703), (0.869, 0.909), (0.920, 1.084), (0.965, 1.438)),
        20: ((0.794, 0.660), (0.875, 0.856), (0.927, 1.029), (0.970, 1.370)),
        30: ((0.785, 0.622), (0.878, 0.811), (0.926, 0.981), (0.971, 1.320)),
    },
    6: {  # N(0,2), second appearance
        10: ((0.752, 0.743), (0.846, 0.948), (0.910, 1.123), (0.970, 1.473)),
        20: ((0.771, 0.732), (0.871, 0.936), (0.909, 1.112), (0.961, 1.453)),
        30: ((0.798, 0.720), (0.893, 0.917), (0.934, 1.087), (0.973, 1.433)),
    },
    7: {  # t5
        10: ((0.765, 0.716), (0.865, 0.914), (0.911, 1.091), (0.964, 1.436)),
        20: ((0.785, 0.666), (0.881, 0.855), (0.922, 1.028), (0.976, 1.376)),
        30: ((0.799, 0.637), (0.893, 0.822), (0.939, 0.990), (0.974, 1.334)),
    },
    8: {  # DE(0,2)
        10: ((0.774, 0.732), (0.862, 0.943), (0.915, 1.121), (0.958, 1.467)),
        20: ((0.780, 0.707), (0.868, 0.907), (0.919, 1.078), (0.966, 1.417)),
        30: ((0.780, 0.677), (0.874, 0.873), (0.917, 1.043), (0.965, 1.381)),
    },
}

REFERENCE_T6 = {
    0: {  # N(0,1)
        10: ((0.770, 0.630), (0.855, 0.814), (0.918, 0.977), (0.974, 1.310)),
        20: ((0.777, 0.551), (0.870, 0.713), (0.921, 0.862), (0.973, 1.176)),
        30: ((0.805, 0.491), (0.904, 0.636), (0.936, 0.770), (0.980, 1.079)),
    },
    1: {  # N(0,2), first appearance
        10: ((0.750, 0.756), (0.846, 0.965), (0.908, 1.143), (0.970, 1.491)),
        20: ((0.773, 0.745), (0.865, 0.953), (0.902, 1.127), (0.954, 1.459)),
        30: ((0.800, 0.732), (0.887, 0.933), (0.933, 1.106), (0.972, 1.442)),
    },
    2: {  # DE(0,0.5)
        10: ((0.773, 0.508), (0.877, 0.685), (0.933, 0.861), (0.980, 1.240)),
        20: ((0.797, 0.391), (0.899, 0.531), (0.945, 0.676), (0.982, 1.051)),
        30: ((0.795, 0.313), (0.893, 0.431), (0.943, 0.568), (0.987, 0.910)),
    },
    3: {  # N(0,1.5)
        10: ((0.763, 0.702), (0.849, 0.903), (0.911, 1.074), (0.970, 1.416)),
        20: ((0.780, 0.657), (0.864, 0.844), (0.911, 1.003), (0.964, 1.327)),
        30: ((0.816, 0.611), (0.900, 0.787), (0.934, 0.939), (0.976, 1.258)),
    },
    4: {  # t3
        10: ((0.782, 0.662), (0.874, 0.853), (0.923, 1.021), (0.966, 1.375)),
        20: ((0.782, 0.589), (0.862, 0.763), (0.916, 0.918), (0.967, 1.241)),
        30: ((0.797, 0.538), (0.881, 0.698), (0.928, 0.845), (0.978, 1.152)),
    },
    5: {  # DE(0,1)
        10: ((0.758, 0.649), (0.876, 0.845), (0.925, 1.019), (0.969, 1.377)),
        20: ((0.791, 0.566), (0.889, 0.740), (0.923, 0.897), (0.975, 1.235)),
        30: ((0.777, 0.493), (0.885, 0.649), (0.928, 0.795), (0.978, 1.123)),
    },
    6: {  # N(0,2), second appearance
        10: ((0.753, 0.733), (0.852, 0.940), (0.905, 1.113), (0.970, 1.461)),
        20: ((0.774, 0.706), (0.865, 0.906), (0.906, 1.073), (0.959, 1.402)),
        30: ((0.809, 0.677), (0.899, 0.862), (0.935, 1.026), (0.973, 1.359)),
    },
    7: {  # t5
        10: ((0.766, 0.662), (0.862, 0.854), (0.920, 1.021), (0.967, 1.365)),
        20: ((0.786, 0.578), (0.880, 0.747), (0.936, 0.900), (0.972, 1.226)),
        30: ((0.803, 0.520), (0.901, 0.679), (0.940, 0.823), (0.975, 1.137)),
    },
    8: {  # DE(0,2)
        10: ((0.755, 0.708), (0.864, 0.910), (0.908, 1.087), (0.967, 1.446)),
        20: ((0.786, 0.649), (0.866, 0.836), (0.922, 1.002), (0.963, 1.342)),
        30: ((0.785, 0.596), (0.875, 0.774), (0.919, 0.934), (0.968, 1.264)),
    },
}
