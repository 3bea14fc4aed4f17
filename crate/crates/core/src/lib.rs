//! Exact q,t-enumeration of rational parking functions and stacked parking
//! functions, together with the symmetric-function machinery that relates
//! them through Schur skewing.

pub mod error;
pub mod involution;
pub mod llt;
pub mod macdonald;
pub mod parking;
pub mod partition;
pub mod paths;
pub mod qt;
pub mod qtrat;
pub mod stacks;
pub mod symfunc;

pub use error::{Error, Result};
pub use parking::{BigSmallSplit, WordParkingFunction};
pub use partition::Partition;
pub use paths::{BoxCoord, DyckPath};
pub use qt::QTPoly;
pub use qtrat::QTRat;
pub use symfunc::{Basis, SymFunc};
