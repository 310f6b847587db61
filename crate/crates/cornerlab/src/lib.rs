//! Numerical verification of vanishing orders of planar Laplacian
//! eigenfunctions at intersections of nodal, singular and impedance lines,
//! together with the scattering machinery used to discriminate polygonal
//! obstacles and gratings from two far-field measurements.

pub mod cgo;
pub mod expansion;
pub mod grating;
pub mod inverse;
pub mod lines;
pub mod quad;
pub mod scatter;
pub mod specfun;
pub mod vanishing;
