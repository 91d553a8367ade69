//! Exact computation of the lower algebraic K-theory of the 73 split
//! three-dimensional crystallographic groups.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod angle;
pub mod assembly;
pub mod catalog;
pub mod cells;
pub mod domain;
pub mod error;
pub mod exact;
pub mod fingroup;
pub mod kgroup;
pub mod lines;
pub mod point_group;

pub use error::Error;
