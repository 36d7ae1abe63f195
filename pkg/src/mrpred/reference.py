"""Reference values reported for the original 100-method Java corpus.

These numbers are targets for comparison when that corpus is supplied.
They are never used as expectations for the bundled synthetic corpus.
"""

from __future__ import annotations

from types import MappingProxyType

# methods per MR for which the relation holds
LABEL_COUNTS = MappingProxyType({"ADD": 56, "EXC": 32, "INC": 34, "MUL": 66, "PER": 33, "INV": 63})
N_METHODS = 100

# feature order of the published importance table (highest average first)
IMPORTANCE_COLUMNS = (
    "dataArg", "CCN", "tloc", "sloc_whbl",
    "sloc_statements", "nloc_whbl", "nloc", "token_count",
    "start_line", "end_line", "numArg", "numLoops",
    "total_Var", "numOper", "numMethCall", "has_return",
    "totalReturn", "numOperands", "returnDataType", "ext",
    "full_parameters",
)

# normalized RF importance per MR, aligned with IMPORTANCE_COLUMNS
IMPORTANCE = MappingProxyType({
    "ADD": (0.92, 1.00, 0.71, 0.40, 0.38, 0.31, 0.30, 0.30, 0.29, 0.29, 0.28,
            0.28, 0.27, 0.26, 0.24, 0.23, 0.22, 0.21, 0.00, 0.00, 0.00),
    "EXC": (1.00, 0.86, 0.62, 0.54, 0.48, 0.48, 0.46, 0.45, 0.45, 0.43, 0.42,
            0.30, 0.28, 0.26, 0.24, 0.24, 0.22, 0.21, 0.00, 0.00, 0.00),
    "INC": (1.00, 0.81, 0.53, 0.48, 0.46, 0.45, 0.44, 0.43, 0.43, 0.42, 0.41,
            0.33, 0.28, 0.25, 0.22, 0.21, 0.20, 0.16, 0.00, 0.00, 0.00),
    "MUL": (1.00, 0.72, 0.67, 0.41, 0.33, 0.32, 0.30, 0.28, 0.27, 0.26, 0.26,
            0.25, 0.25, 0.24, 0.23, 0.23, 0.21, 0.15, 0.00, 0.00, 0.00),
    "PER": (0.57, 1.00, 0.54, 0.41, 0.38, 0.36, 0.24, 0.23, 0.23, 0.22, 0.22,
            0.21, 0.20, 0.19, 0.18, 0.15, 0.14, 0.09, 0.00, 0.00, 0.00),
    "INV": (1.00, 0.68, 0.56, 0.41, 0.35, 0.32, 0.31, 0.30, 0.29, 0.28, 0.27,
            0.26, 0.25, 0.22, 0.21, 0.20, 0.19, 0.18, 0.00, 0.00, 0.00),
})
IMPORTANCE_AVG = (0.91, 0.85, 0.60, 0.44, 0.40, 0.37, 0.34, 0.33, 0.33, 0.32, 0.31,
                  0.27, 0.25, 0.24, 0.22, 0.21, 0.20, 0.17, 0.00, 0.00, 0.00)

SWEEP_SIZES = (3, 6, 9, 12, 15, 18, 21)
# RF mean AUC-ROC and precision with the top-n ranked features
SWEEP_AUC = MappingProxyType({
    "ADD": (0.620, 0.590, 0.620, 0.886, 0.620, 0.590, 0.590),
    "EXC": (0.629, 0.593, 0.583, 0.833, 0.589, 0.623, 0.666),
    "INC": (0.720, 0.675, 0.720, 0.717, 0.675, 0.675, 0.694),
    "MUL": (0.649, 0.518, 0.518, 0.762, 0.518, 0.491, 0.578),
    "PER": (0.763, 0.725, 0.725, 0.747, 0.725, 0.641, 0.747),
    "INV": (0.595, 0.611, 0.588, 0.625, 0.636, 0.545, 0.640),
})
SWEEP_PRECISION = MappingProxyType({
    "ADD": (0.627, 0.613, 0.640, 0.767, 0.740, 0.729, 0.769),
    "EXC": (0.667, 0.651, 0.693, 0.866, 0.667, 0.688, 0.614),
    "INC": (0.767, 0.733, 0.733, 0.888, 0.727, 0.761, 0.652),
    "MUL": (0.875, 0.833, 0.854, 0.853, 0.675, 0.630, 0.657),
    "PER": (0.625, 0.761, 0.805, 0.814, 0.625, 0.625, 0.625),
    "INV": (0.675, 0.625, 0.714, 0.833, 0.750, 0.600, 0.675),
})

GRID_SIZES = (3, 12, 21)
GRID_METRICS = ("accuracy", "precision", "recall", "f1", "auc_roc")
# GRID[mr][classifier][metric] -> values for 3, 12 and 21 features
GRID = MappingProxyType({
    "ADD": {
        "RF": {
            "accuracy": (0.764, 0.886, 0.884),
            "precision": (0.627, 0.767, 0.769),
            "recall": (0.972, 0.971, 0.973),
            "f1": (0.827, 0.830, 0.824),
            "auc_roc": (0.620, 0.886, 0.590),
        },
        "DT": {
            "accuracy": (0.787, 0.800, 0.680),
            "precision": (0.769, 0.812, 0.725),
            "recall": (0.750, 0.833, 0.666),
            "f1": (0.692, 0.727, 0.656),
            "auc_roc": (0.757, 0.816, 0.698),
        },
        "GNB": {
            "accuracy": (0.809, 0.833, 0.726),
            "precision": (0.805, 0.914, 0.695),
            "recall": (0.780, 0.833, 0.726),
            "f1": (0.796, 0.823, 0.769),
            "auc_roc": (0.771, 0.875, 0.667),
        },
        "SVM_LINEAR": {
            "accuracy": (0.740, 0.803, 0.620),
            "precision": (0.754, 0.833, 0.675),
            "recall": (0.729, 0.838, 0.620),
            "f1": (0.747, 0.835, 0.659),
            "auc_roc": (0.753, 0.833, 0.673),
        },
        "LR": {
            "accuracy": (0.680, 0.800, 0.680),
            "precision": (0.750, 0.807, 0.693),
            "recall": (0.762, 0.833, 0.690),
            "f1": (0.762, 0.833, 0.690),
            "auc_roc": (0.738, 0.800, 0.675),
        },
    },
    "EXC": {
        "RF": {
            "accuracy": (0.725, 0.800, 0.650),
            "precision": (0.667, 0.866, 0.614),
            "recall": (0.833, 1.000, 0.666),
            "f1": (0.733, 0.800, 0.666),
            "auc_roc": (0.629, 0.833, 0.666),
        },
        "DT": {
            "accuracy": (0.660, 0.750, 0.570),
            "precision": (0.770, 0.844, 0.695),
            "recall": (0.600, 0.667, 0.532),
            "f1": (0.551, 0.602, 0.500),
            "auc_roc": (0.602, 0.667, 0.536),
        },
        "GNB": {
            "accuracy": (0.690, 0.712, 0.667),
            "precision": (0.733, 0.800, 0.666),
            "recall": (0.600, 0.667, 0.534),
            "f1": (0.564, 0.667, 0.461),
            "auc_roc": (0.595, 0.619, 0.571),
        },
        "SVM_LINEAR": {
            "accuracy": (0.672, 0.704, 0.640),
            "precision": (0.700, 0.733, 0.667),
            "recall": (0.599, 0.667, 0.530),
            "f1": (0.710, 0.857, 0.562),
            "auc_roc": (0.634, 0.694, 0.573),
        },
        "LR": {
            "accuracy": (0.662, 0.657, 0.667),
            "precision": (0.735, 0.844, 0.625),
            "recall": (0.628, 0.665, 0.590),
            "f1": (0.621, 0.671, 0.571),
            "auc_roc": (0.610, 0.696, 0.523),
        },
    },
    "INC": {
        "RF": {
            "accuracy": (0.765, 0.900, 0.630),
            "precision": (0.767, 0.888, 0.652),
            "recall": (0.778, 0.890, 0.666),
            "f1": (0.808, 0.888, 0.727),
            "auc_roc": (0.720, 0.717, 0.694),
        },
        "DT": {
            "accuracy": (0.681, 0.750, 0.612),
            "precision": (0.566, 0.616, 0.516),
            "recall": (0.465, 0.596, 0.333),
            "f1": (0.513, 0.589, 0.438),
            "auc_roc": (0.564, 0.605, 0.523),
        },
        "GNB": {
            "accuracy": (0.687, 0.705, 0.668),
            "precision": (0.733, 0.862, 0.604),
            "recall": (0.627, 0.667, 0.587),
            "f1": (0.604, 0.667, 0.542),
            "auc_roc": (0.596, 0.681, 0.510),
        },
        "SVM_LINEAR": {
            "accuracy": (0.706, 0.802, 0.610),
            "precision": (0.737, 0.806, 0.667),
            "recall": (0.590, 0.645, 0.534),
            "f1": (0.558, 0.667, 0.448),
            "auc_roc": (0.655, 0.761, 0.548),
        },
        "LR": {
            "accuracy": (0.657, 0.701, 0.613),
            "precision": (0.648, 0.695, 0.601),
            "recall": (0.633, 0.668, 0.597),
            "f1": (0.452, 0.571, 0.333),
            "auc_roc": (0.560, 0.690, 0.429),
        },
    },
    "MUL": {
        "RF": {
            "accuracy": (0.725, 0.800, 0.650),
            "precision": (0.875, 0.853, 0.657),
            "recall": (0.912, 1.000, 0.823),
            "f1": (0.812, 0.875, 0.748),
            "auc_roc": (0.649, 0.762, 0.578),
        },
        "DT": {
            "accuracy": (0.662, 0.703, 0.620),
            "precision": (0.749, 0.802, 0.695),
            "recall": (0.828, 0.833, 0.822),
            "f1": (0.776, 0.833, 0.719),
            "auc_roc": (0.721, 0.791, 0.651),
        },
        "GNB": {
            "accuracy": (0.680, 0.700, 0.660),
            "precision": (0.755, 0.834, 0.675),
            "recall": (0.899, 0.940, 0.857),
            "f1": (0.803, 0.823, 0.782),
            "auc_roc": (0.575, 0.625, 0.524),
        },
        "SVM_LINEAR": {
            "accuracy": (0.707, 0.804, 0.610),
            "precision": (0.792, 0.850, 0.733),
            "recall": (0.845, 0.857, 0.833),
            "f1": (0.742, 0.857, 0.626),
            "auc_roc": (0.726, 0.761, 0.690),
        },
        "LR": {
            "accuracy": (0.741, 0.801, 0.680),
            "precision": (0.772, 0.875, 0.669),
            "recall": (0.840, 0.857, 0.823),
            "f1": (0.817, 0.875, 0.759),
            "auc_roc": (0.792, 0.833, 0.750),
        },
    },
    "PER": {
        "RF": {
            "accuracy": (0.715, 0.810, 0.620),
            "precision": (0.625, 0.814, 0.675),
            "recall": (0.639, 0.712, 0.566),
            "f1": (0.726, 0.789, 0.662),
            "auc_roc": (0.763, 0.725, 0.747),
        },
        "DT": {
            "accuracy": (0.708, 0.750, 0.666),
            "precision": (0.846, 0.914, 0.777),
            "recall": (0.721, 0.775, 0.666),
            "f1": (0.717, 0.857, 0.576),
            "auc_roc": (0.809, 0.857, 0.761),
        },
        "GNB": {
            "accuracy": (0.623, 0.700, 0.545),
            "precision": (0.725, 0.828, 0.622),
            "recall": (0.500, 0.666, 0.333),
            "f1": (0.589, 0.727, 0.450),
            "auc_roc": (0.604, 0.642, 0.566),
        },
        "SVM_LINEAR": {
            "accuracy": (0.875, 0.910, 0.840),
            "precision": (0.837, 0.875, 0.799),
            "recall": (0.709, 0.750, 0.667),
            "f1": (0.698, 0.729, 0.667),
            "auc_roc": (0.793, 0.825, 0.761),
        },
        "LR": {
            "accuracy": (0.765, 0.830, 0.700),
            "precision": (0.803, 0.822, 0.783),
            "recall": (0.688, 0.709, 0.667),
            "f1": (0.720, 0.750, 0.690),
            "auc_roc": (0.745, 0.795, 0.694),
        },
    },
    "INV": {
        "RF": {
            "accuracy": (0.655, 0.702, 0.608),
            "precision": (0.675, 0.833, 0.675),
            "recall": (0.788, 0.857, 0.719),
            "f1": (0.776, 0.800, 0.751),
            "auc_roc": (0.595, 0.625, 0.640),
        },
        "DT": {
            "accuracy": (0.762, 0.800, 0.600),
            "precision": (0.703, 0.844, 0.563),
            "recall": (0.762, 0.857, 0.667),
            "f1": (0.691, 0.714, 0.667),
            "auc_roc": (0.604, 0.667, 0.541),
        },
        "GNB": {
            "accuracy": (0.661, 0.701, 0.620),
            "precision": (0.659, 0.833, 0.484),
            "recall": (0.759, 0.857, 0.660),
            "f1": (0.787, 0.823, 0.750),
            "auc_roc": (0.568, 0.625, 0.511),
        },
        "SVM_LINEAR": {
            "accuracy": (0.776, 0.802, 0.750),
            "precision": (0.768, 0.844, 0.692),
            "recall": (0.799, 0.833, 0.764),
            "f1": (0.813, 0.857, 0.769),
            "auc_roc": (0.762, 0.857, 0.667),
        },
        "LR": {
            "accuracy": (0.768, 0.860, 0.676),
            "precision": (0.728, 0.761, 0.695),
            "recall": (0.794, 0.857, 0.731),
            "f1": (0.767, 0.857, 0.676),
            "auc_roc": (0.714, 0.762, 0.667),
        },
    },
})

# SVM AUC-ROC with control-flow-graph features: node/path features, graphlet
# kernel and random walk kernel
BASELINE_NAMES = ("NF-PF", "GK", "RWK")
BASELINE_AUC = MappingProxyType({
    "ADD": (0.81, 0.83, 0.92),
    "EXC": (0.78, 0.78, 0.90),
    "INC": (0.84, 0.88, 0.89),
    "MUL": (0.73, 0.78, 0.83),
    "PER": (0.93, 0.91, 0.95),
    "INV": (0.84, 0.68, 0.76),
})
# the same study's 12-feature AUC-ROC for the five source-metric classifiers, as printed
PRINTED_OURS_ORDER = ("SVM_LINEAR", "RF", "DT", "GNB", "LR")
PRINTED_OURS_AUC = MappingProxyType({
    "ADD": (0.83, 0.89, 0.82, 0.88, 0.80),
    "EXC": (0.69, 0.83, 0.67, 0.62, 0.70),
    "INC": (0.76, 0.72, 0.61, 0.68, 0.69),
    "MUL": (0.76, 0.76, 0.79, 0.63, 0.83),
    "PER": (0.83, 0.76, 0.86, 0.64, 0.80),
    "INV": (0.86, 0.64, 0.67, 0.63, 0.76),
})
