//! Permutations, permutation groups and product constructions.

mod cycles;
mod deffile;
mod group;
mod perm;
mod products;

pub use cycles::{parse_cycles, print_cycles};
pub use deffile::{parse_definitions, Definitions};
pub use group::{PermGroup, StabilizerChain};
pub use perm::{perm_ops, PermOp, Permutation};
pub use products::{direct_product, wreath_product};
