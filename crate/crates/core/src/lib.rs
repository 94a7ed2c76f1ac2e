//! Graded binary words and executable bijective proofs of the Rothe and
//! Gould convolution identities, together with exact checkers for the
//! classical identities and their q-analogues.
//!
//! The crate is organised bottom-up:
//!
//! - [`word`]: the two-letter graded word model, the classes `Γ_{p,k}` and
//!   `Γ^{(r)}_{p,k}`, and the inversion statistic.
//! - [`bijection`]: the equal-weight prefix matcher, the prefix-shifting
//!   bijection `Γ^{(p)} → Γ^{(p+1)}` and the factorization bijection.
//! - [`identity`]: exact rational evaluation of the binomial identities and
//!   grid certification of the polynomial ones.
//! - [`laurent`] and [`qengine`]: Laurent polynomials in `q`, Gaussian
//!   binomials and the q-weighted identities.
//! - [`sweep`]: parameter sweeps producing [`VerificationReport`]s.

pub mod bijection;
pub mod error;
pub mod identity;
pub mod laurent;
pub mod qengine;
pub mod rational;
pub mod report;
pub mod sweep;
pub mod word;

pub use bijection::{Decomposition, PrefixMatch};
pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use rational::Rational;
pub use report::{IdentityId, ParamValue, ReportValue, Status, VerificationReport};
pub use word::{EnumerationCap, Grading, Letter, Word};
