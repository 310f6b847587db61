pub mod cgo;
pub mod grating;
pub mod inverse;
pub mod scatter;
pub mod vanishing;
