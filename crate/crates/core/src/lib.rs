//! Plane overpartitions, cylindric partitions and their q-series.

pub mod coeff;
pub mod series;

pub use coeff::{CoeffPoly, TPoly};
pub use series::{SeriesError, TruncSeries};
pub mod partition;
pub mod plane;
pub mod validate;

pub use partition::{Entry, Overpartition, Partition};
pub use plane::{PlaneOverpartition, PlanePartition, ReversePlaneOverpartition};
pub use validate::{Validate, Violation};
pub mod border;
pub mod interlacing;

pub use border::{a_poly, border_decomposition, plane_border_decomposition, BorderDecomposition};
pub use interlacing::{InterlacingSequence, Profile, Topology};
pub mod bijections;
pub mod closedform;
pub mod enumerate;
pub mod tilings;
