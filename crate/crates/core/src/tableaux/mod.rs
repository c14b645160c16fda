//! Set-valued tableaux, their words and contents, lattice predicates, and the
//! constrained enumeration used by every counting rule.

mod entry_set;
mod enumerate;
mod tableau;

pub use entry_set::{EntrySet, MAX_ENTRY};
pub use enumerate::{count, enumerate, visit_tableaux, Constraints, Leaf};
pub use tableau::{is_lattice, stacked_intervals, superstandard, Content, Interval, SetValuedTableau, Word};
