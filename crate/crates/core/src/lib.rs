pub mod canon;
pub mod checks;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod lie;
pub mod pushforward;
pub mod spectral;
pub mod strata;
