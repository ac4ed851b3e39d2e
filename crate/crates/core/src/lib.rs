pub mod chartable;
pub mod cyclotomic;
pub mod depthcalc;
pub mod error;
pub mod frobalg;
pub mod groups;
pub mod indres;
pub mod matrix;
pub mod perm;
pub mod permgroup;
mod text;
pub mod theorems;

pub use chartable::{character_table, CharacterTable, ClassFunction};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use frobalg::{GroupAlgebraElement, RationalElement};
pub use matrix::{Matrix, NonNegIntMatrix};
pub use perm::Permutation;
pub use permgroup::{ClassPartition, PermGroup};

pub type CyclotomicInt = Cyclotomic<num_bigint::BigInt>;
