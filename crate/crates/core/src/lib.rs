//! Every primitive positive solution of `7x² + 59y² = 3^m`.
//!
//! The solutions form a binary tree rooted at `(1, 2, 5)`: each solution has
//! a first and a second successor ([`successor`]), and every solution other
//! than the root descends to a strictly smaller one ([`descent`]). The
//! [`tree`] module walks the tree in exponent order, and [`oracle`] is an
//! exhaustive scan for `ax² + by² = λ·k^m` that never touches the successor
//! formulas, used to cross-check everything else.
//!
//! ```
//! use descent_forge::tree::enumerate;
//!
//! let nodes = enumerate(35).unwrap();
//! let last = &nodes.last().unwrap().solution;
//! assert_eq!(last.x().to_string(), "78606773");
//! assert_eq!(last.y().to_string(), "10718566");
//! ```

pub mod arith;
pub mod descent;
mod error;
pub mod forms;
pub mod oracle;
pub mod solution;
pub mod successor;
pub mod tree;

pub use descent::{descend_to_root, predecessor, Certificate, DescentPath, DescentStep};
pub use error::{Error, Result};
pub use forms::{eval_forms, incidence, reconstruct_from_incidence, FormTriple, Rational};
pub use oracle::{brute_force, oracle_sweep, EquationSpec};
pub use solution::{verify, PPSolution, SolutionClass};
pub use successor::{first_successor, recognize_successor, second_successor, SuccessorKind};
pub use tree::{enumerate, TreeNode};
