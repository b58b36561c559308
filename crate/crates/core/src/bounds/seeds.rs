//! Known good parameter sets for the rate objectives. They serve two
//! purposes: regression anchors for the objective values, and mandatory
//! warm starts for the optimizer (which therefore never reports a base
//! below the value at these points).

/// Free simplex coordinates `alpha_1..alpha_k` for the triangulation rate.
pub fn tri_seed(k: usize) -> Option<&'static [f64]> {
    match k {
        1 => Some(&[1.0 / 3.0]),
        2 => Some(&[0.4, 0.2]),
        3 => Some(&[0.34, 0.29, 0.14]),
        4 => Some(&[0.254, 0.286, 0.222, 0.111]),
        _ => None,
    }
}

/// Objective value the triangulation seed attains (verified, 5 digits).
pub fn tri_seed_value(k: usize) -> Option<f64> {
    match k {
        1 => Some(8.48528),
        2 => Some(8.61774),
        3 => Some(8.65049),
        4 => Some(8.64851),
        _ => None,
    }
}

/// Upper-triangular row-major `alpha_{ij}` (`i <= j`) for the
/// spanning-tree rate of the double chain.
pub fn st_seed(z: usize) -> Option<&'static [f64]> {
    match z {
        1 => Some(&ST_Z1),
        2 => Some(&[0.18, 0.055, 0.032]),
        3 => Some(&[0.15, 0.043, 0.010, 0.023, 0.0085, 0.0040]),
        4 => Some(&ST_Z4),
        8 => Some(&ST_Z8),
        _ => None,
    }
}

/// Spanning-tree base each seed actually attains (verified by direct
/// evaluation; the z = 4 table is quoted elsewhere with an inflated value,
/// see the z = 8 entry for the strongest one).
pub fn st_seed_value(z: usize) -> Option<f64> {
    match z {
        1 => Some(10.42423),
        2 => Some(11.60910),
        3 => Some(11.89462),
        4 => Some(11.97479),
        8 => Some(12.00255),
        _ => None,
    }
}

/// Upper-triangular row-major `alpha_{ij}` for the forest rate.
pub fn cf_seed(z: usize) -> Option<&'static [f64]> {
    match z {
        1 => Some(&CF_Z1),
        2 => Some(&[0.15, 0.039, 0.021]),
        3 => Some(&[0.12, 0.031, 0.0080, 0.016, 0.0061, 0.0031]),
        4 => Some(&CF_Z4),
        9 => Some(&CF_Z9),
        _ => None,
    }
}

pub fn cf_seed_value(z: usize) -> Option<f64> {
    match z {
        1 => Some(11.09256),
        2 => Some(11.94399),
        3 => Some(12.16378),
        4 => Some(12.05605),
        9 => Some(12.26163),
        _ => None,
    }
}

// z = 1 optima in closed form: 4/(4 + 3 sqrt(6)) for trees and
// 1/(1 + sqrt(8.22469)) for forests.
const ST_Z1: [f64; 1] = [0.3524704450894247];
const CF_Z1: [f64; 1] = [0.25854009423343405];

const ST_Z4: [f64; 10] = [
    0.149, 0.0403, 0.00945, 0.00208, //
    0.0218, 0.00767, 0.00226, //
    0.00359, 0.00132, //
    0.00058,
];

const CF_Z4: [f64; 10] = [
    0.151, 0.0382, 0.00835, 0.00172, //
    0.0192, 0.00632, 0.00226, //
    0.00276, 0.00094, //
    0.00039,
];

const ST_Z8: [f64; 36] = [
    0.144, 0.0389, 0.00908, 0.001994, 0.000422, 0.0000856, 0.0000152, 1.76e-6, //
    0.0209, 0.00733, 0.00214, 0.000569, 0.000140, 0.0000313, 5.12e-6, //
    0.00342, 0.00125, 0.000397, 0.000113, 0.0000290, 5.50e-6, //
    0.000548, 0.000202, 0.0000655, 0.0000181, 3.34e-6, //
    0.0000845, 0.0000298, 8.33e-6, 1.25e-6, //
    0.0000107, 2.44e-6, 5.10e-7, //
    1.09e-6, 1.31e-7, //
    6.97e-8,
];

const CF_Z9: [f64; 45] = [
    0.11, 0.028, 0.0069, 0.0017, 0.00042, 0.00010, 0.000024, 5.3e-6, 1.2e-6, //
    0.014, 0.0051, 0.0017, 0.00052, 0.00015, 0.000042, 0.000011, 2.7e-6, //
    0.0025, 0.0010, 0.00038, 0.00013, 0.000042, 0.000012, 3.4e-6, //
    0.00051, 0.00022, 0.000086, 0.000030, 0.000010, 3.1e-6, //
    0.00011, 0.000047, 0.000018, 6.5e-6, 2.2e-6, //
    0.000024, 9.4e-6, 3.7e-6, 1.4e-6, //
    5.6e-6, 1.8e-6, 7.5e-7, //
    1.5e-6, 3.9e-7, //
    4.4e-7,
];
