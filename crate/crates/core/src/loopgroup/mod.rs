//! The twisted loop group: automorphisms, simple elements and six-pole products.

pub mod simple;
pub mod sixpole;
pub mod twist;

pub use simple::{GaugeSign, ProjLine, Rank, Reality, SimpleElement};
pub use sixpole::{derive_sixpole_line1, psi, SixPoleElement};
pub use twist::{
    check_twisted, check_twisted_projective, epsilon, p12, p132, p_matrix, q_matrix, sigma_twist, tau_twist,
    TwistConstants, TwistSpec,
};
