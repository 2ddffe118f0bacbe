//! Sparse multivariate polynomials over exact rationals.

pub type Rat = num_rational::BigRational;
