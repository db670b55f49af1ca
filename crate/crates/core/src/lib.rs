#![allow(clippy::needless_range_loop)]

pub mod cliffext;
pub mod cohomology;
pub mod diffop;
pub mod driver;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod repn;
pub mod rootsys;
pub mod translate;
pub mod uea;

pub use error::{Error, Result};
pub use rational::Q;
