//! Root numbers of integer fibers of elliptic surfaces over Q(T): the direct
//! local computation, the closed-form decomposition in terms of the bad
//! places of the surface, and the sieve machinery that produces fibers of
//! prescribed sign.

pub mod catalog;
pub mod error;
pub mod intarith;
pub mod localdata;
pub mod polyring;
pub mod report;
pub mod sieves;
pub mod signformula;
pub mod surface;
mod tables23;
pub mod variation;

pub use error::{Error, Result};
pub use polyring::IntPoly;
