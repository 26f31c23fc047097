//! Exact verification of combinatorial matrix inversions `A_n B_n = I`
//! through local identities, for four families of tableaux, together with
//! the sign-reversing involutions that make the cancellation bijective.

pub mod abacus;
pub mod brick;
pub mod error;
pub mod framework;
pub mod involutions;
pub mod kostka;
pub mod matrix;
pub mod par;
pub mod perm;
pub mod rational;
pub mod refine;
pub mod rimhook;
pub mod scalars;
pub mod shapes;
pub mod tableau;

pub use error::{Error, Result};
pub use framework::LocalSystem;
pub use matrix::IndexedMatrix;
pub use par::Exec;
pub use rational::Rational;
pub use shapes::{Cell, Composition, Partition, ShapeKey};
