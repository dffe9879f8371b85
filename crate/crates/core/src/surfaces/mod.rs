//! Seed surfaces, real immersions and affine invariants.

pub mod hildebrand;
pub mod invariants;
pub mod real;
pub mod vacuum;

pub use hildebrand::{
    dressing_offset, hildebrand_exp_psi, hildebrand_surface, hildebrand_surface_printed, hildebrand_surface_shifted,
};
pub use invariants::{affine_invariants_fd, AffineInvariants};
pub use real::{real_immersion, volume_scale};
pub use vacuum::{
    vacuum_connection_z, vacuum_f, vacuum_frame, vacuum_frame_via_f, vacuum_immersion, vacuum_immersion_z,
    vacuum_immersion_zbar, BaseSurface, PositionJet, Vacuum,
};
