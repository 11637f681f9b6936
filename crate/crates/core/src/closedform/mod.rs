//! Closed-form generating functions and the polynomials in `t` that weight
//! interlacing sequences.

mod determinant;
mod hall_littlewood;
mod pfaffian;
mod products;

pub use determinant::*;
pub use hall_littlewood::*;
pub use pfaffian::*;
pub use products::*;
