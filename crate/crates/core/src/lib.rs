//! Local parabolic Hitchin maps in exact arithmetic.

pub mod cli;
pub mod companion;
pub mod degrees;
pub mod error;
pub mod hitchin;
pub mod lie;
pub mod linalg;
pub mod parabolic;
pub mod plot;
pub mod poly;
pub mod series;
pub mod type_d;

pub use error::{Error, Result};
