pub mod bijection;
pub mod catalog;
pub mod params;
pub mod report;
pub mod suite;
