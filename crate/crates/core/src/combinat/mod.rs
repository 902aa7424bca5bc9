//! Partitions, tableaux, ribbon tableaux and cores/quotients.

mod core_quotient;
mod partition;
pub mod render;
mod ribbon;
mod tableau;

pub use core_quotient::{core_quotient, from_core_quotient, CoreQuotient};
pub use partition::{partitions, partitions_in_box, Partition};
pub use ribbon::{horizontal_ribbon_strips, ribbon_tableaux, Ribbon, RibbonTableau};
pub(crate) use tableau::horizontal_strips;
pub use tableau::{kostka_number, kostka_poly, ssyt_list, word_charge, Tableau};
