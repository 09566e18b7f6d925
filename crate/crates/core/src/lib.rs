//! Interval ipomsets, their down-closed languages, precubical sets and
//! higher-dimensional automata.

mod bits;
pub mod fixtures;
pub mod format;
pub mod hda;
pub mod ipomset;
pub mod language;
pub mod precubical;
mod symbol;

pub use hda::{Hda, HdaError, Path, Step};
pub use ipomset::{Ipomset, IpomsetError, RawIpomset};
pub use language::Language;
pub use precubical::{CofaceMap, LoSet, PrecubicalMap, PrecubicalSet};
pub use symbol::Symbol;
