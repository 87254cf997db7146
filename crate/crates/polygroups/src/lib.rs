//! Finite n-ary groups: sets with an associative n-ary operation that is
//! uniquely solvable at every argument position.
//!
//! The crate covers the classical structure theory of these objects at desk
//! scale: axiom verification under several equivalent systems, skew elements
//! and n-ary powers, retracts, the Hosszú-Gluskin correspondence between
//! n-ary groups and `(group, automorphism, constant)` triples, isomorphism
//! testing through binary retracts, exhaustive classification on carriers of
//! size 2..=7, term operations of semiabelian n-ary groups, and Marczewski-
//! and Grätzer-style independence of subsets.
//!
//! Start with the `examples/` directory: each file is a runnable tour of one
//! capability. The `polygroups` binary exposes the same operations on text
//! files.

pub mod classify;
pub mod error;
pub mod groups;
pub mod hosszu;
pub mod io;
pub mod iso;
pub mod polyadic;
pub mod terms;
pub mod util;

pub mod cli;

pub use error::{Error, Result};

/// Work limits and sampling parameters shared by the verification routines.
///
/// Exhaustive checks refuse loudly (with `Error::BudgetExceeded`) instead of
/// silently running forever; operations on lazily evaluated Hosszú-Gluskin
/// bodies fall back to seeded sampling where exhaustion is infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Maximum number of cells in a dense operation table.
    pub dense_budget: u128,
    /// Maximum number of tuples in an exhaustive check.
    pub check_budget: u128,
    /// Maximum number of coefficient vectors in term enumeration.
    pub term_budget: u128,
    /// Seed for all sampling audits.
    pub seed: u64,
    /// Sample count for audits that cannot be exhaustive.
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            dense_budget: 1 << 20,
            check_budget: 1 << 22,
            term_budget: 1_000_000,
            seed: 0,
            samples: 10_000,
        }
    }
}
