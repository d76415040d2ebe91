pub mod algebra;
pub mod detrep;
pub mod curves;
pub mod fourfold;
pub mod spin;
pub mod lattice;
pub mod analysis;
pub mod repfile;
pub mod examples;
pub mod cli;
