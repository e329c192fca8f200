//! Index combinatorics shared by every tower: permutations, compositions,
//! partitions, shuffle words, and {T,S}-sequences.

pub mod composition;
pub mod partition;
pub mod perm;
pub mod word;

pub use composition::{compositions_of, descent_composition, Composition};
pub use partition::{partitions_of, Partition};
pub use perm::{all_permutations, min_coset_reps, weak_order_leq, Permutation};
pub use word::{shuffle, shuffle_split, ts_words_of, Ts, TsWord, Word};
