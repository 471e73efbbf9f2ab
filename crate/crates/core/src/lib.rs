//! Exact characters of finite-dimensional irreducible modules of half-integer
//! weight over the queer Lie superalgebra q(n).
//!
//! - [`weights`]: weights, dominance, the maps `♯`, `♭`, `♮`, atypicality
//! - [`order`]: the three Bruhat orders and lower Bruhat intervals
//! - [`laurent`]: exact Laurent polynomials with half-integer exponents
//! - [`euler`]: characters of Euler characteristics
//! - [`kl`]: raising operators, transition coefficients, irreducible characters
//! - [`kw`]: closed formulas for totally (dis)connected weights
//! - [`verify`]: exhaustive cross-checks over small ranks

pub mod error;
pub mod euler;
pub mod kl;
pub mod kw;
pub mod laurent;
pub mod order;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use euler::{euler_character, sigma};
pub use kl::{
    b_coeff, decompose_euler, irreducible_character, r_theta, raise_op, CharacterCache,
    TransitionEntry, Variant,
};
pub use kw::{kw_character, KwCharacter};
pub use laurent::{LaurentPoly, Permutation};
pub use weights::{Connectivity, ConnectivityMode, Weight};
