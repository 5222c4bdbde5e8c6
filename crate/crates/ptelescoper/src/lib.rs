//! Exact-arithmetic creative telescoping for bivariate P-recursive
//! sequences over the shift Ore algebra Q(t,x)<S_t, S_x>.

pub mod error;
pub mod factor;
pub mod kpoly;
pub mod poly;
pub mod problem;
pub mod qpoly;
pub mod reduction;
pub mod shift;
pub mod system;
pub mod telescope;
pub mod textio;

pub use error::{Error, Result};
