pub mod algebra;
pub mod cli;
pub mod coadjoint;
pub mod error;
pub mod io;
pub mod linalg;
pub mod reduction;
pub mod sampling;
pub mod slice;

pub use error::{Error, Result};
