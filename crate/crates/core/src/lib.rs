//! Planar kinematical Lie algebras, their extensions, coadjoint-orbit
//! symplectic structures and the mechanics on the resulting noncommutative
//! phase spaces.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod coadjoint;
pub mod config;
pub mod error;
pub mod linalg;
pub mod mechanics;
pub mod orbits;
pub mod report;
pub mod static_group;
pub mod verify;

pub use error::{Error, Result};
