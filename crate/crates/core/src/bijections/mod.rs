//! Constructive bijections between plane overpartitions and other objects.

pub mod bender_knuth;
pub mod paths;
pub mod rsk;
pub mod super_tableau;
