//! Exact computation of automorphism orbits in finite abelian p-groups.
//!
//! For a group of type `λ` (a direct sum of cyclic p-groups), the orbits
//! under the full automorphism group are parametrized by the order ideals
//! of a small prime-independent poset built from the parts of `λ`. This
//! crate computes that parametrization exactly:
//!
//! - [`partition`]: canonical partitions and multiplicities
//! - [`poset`]: the degeneration order, column subposets, maximal chains
//! - [`ideal`]: order ideals as r-vectors, lattice operations, enumeration
//! - [`orbit`]: orbit counts, orbit-order polynomials, subquotients
//! - [`oracle`]: brute-force group action on small instances, used to
//!   cross-check every combinatorial result
//! - [`sweep`]: batch consistency checks over many partitions
//! - [`verify`]: the full oracle-vs-combinatorics comparison for one
//!   instance, reported check by check
//!
//! Everything is exact integer or rational arithmetic; the oracle and the
//! combinatorial pipeline share no reasoning, so agreement between them is
//! meaningful evidence.
//!
//! With the default `parallel` feature the sweep and the oracle fan work
//! out over a thread pool; results are identical to the sequential build.

pub mod arith;
pub mod error;
pub mod ideal;
pub mod oracle;
pub mod orbit;
pub mod partition;
pub mod polynomial;
pub mod poset;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::{enumerate_ideals, Antichain, Boundary, Ideal};
pub use partition::{parse_partition, Partition};
pub use polynomial::OrbitPolynomial;
pub use poset::{count_maximal_chains, geq, points_of, PosetPoint, Subposet};
