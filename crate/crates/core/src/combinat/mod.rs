//! Words, maps, cycles and partitions shared by every algebra.

pub mod cycles;
pub mod enumerate;
pub mod maps;
pub mod notation;
pub mod partitions;
pub mod word;

pub use cycles::{Cycle, CycleSet};
pub use enumerate::{Kind, Limits};
pub use maps::{Endofunction, MapLabel, ParkingFunction, Permutation};
pub use partitions::{Composition, IntegerPartition, SetPartition};
pub use word::Word;
