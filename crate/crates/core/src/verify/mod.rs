//! Numerical verification: finite differences, Tzitzéica residuals, τ-function oracles.

pub mod compare;
pub mod fd;
pub mod linearity;
pub mod soliton;
pub mod tzitzeica;

pub use compare::{compare_grids, CompareReport};
pub use fd::{wirtinger, wirtinger_jet, FdSettings, WirtingerJet};
pub use linearity::{connection_z, lambda_linearity_residual};
pub use soliton::{
    interaction_coefficient, tau_one_soliton_h, tau_two_soliton_h, ExpPoly, ExpTerm, OneSoliton, TwoSoliton,
};
pub use tzitzeica::tzitzeica_residual;
