//! Fixtures shared by the benchmarks.

use kerdelta::ProblemInstance;

/// `f = (x1, x2, x3, x4)`.
pub fn linear4() -> ProblemInstance {
    ProblemInstance::monomial(&[1, 1, 1, 1]).expect("valid instance")
}

/// Dense `f` with degrees `(2, 3, 1, 2, 4)`.
pub fn mixed5() -> ProblemInstance {
    ProblemInstance::from_ints(&[
        &[1, -2, 3],
        &[0, 4, -1, 2],
        &[5, -3],
        &[-2, 1, 1],
        &[3, 0, -4, 1, 5],
    ])
    .expect("valid instance")
}
