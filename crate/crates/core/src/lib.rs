//! Exact constructions and identity checks for the super Yangians
//! `Y(gl(m|n))` and `X(osp(2|2n))`.

pub mod drinfeld;
pub mod error;
pub mod field;
pub mod linalg;
pub mod space;
pub mod suite;
pub mod symgroup;
pub mod yangian;

pub use error::{Error, Result};
