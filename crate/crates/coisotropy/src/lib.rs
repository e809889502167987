//! Exact symbolic computation with coisotropic hypersurfaces of projective
//! varieties: Chow forms, Hurwitz forms and higher coisotropic forms, dual
//! varieties and polar degrees, hyperdeterminants via the Cayley trick, and
//! differential characterizations of coisotropy in Plücker coordinates.
//!
//! Everything is computed over Q with arbitrary-precision rational
//! arithmetic; see the `examples/` directory for runnable entry points into
//! each capability and `src/main.rs` for the command-line interface.

pub mod error;
pub mod ring;
pub mod order;
pub mod poly;
pub mod matrix;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod modsolve;
pub mod grassmann;
pub mod variety;
pub mod coisotropic;
pub mod fixtures;
pub mod segre;

pub use error::{Error, Result};

/// Entry point used by the thin `coisotropy` binary; returns the exit code.
pub fn cli_main() -> i32 {
    // placeholder until the cli module lands
    eprintln!("cli not yet wired");
    2
}
pub use ideal::Ideal;
pub use matrix::{jacobian, PolyMatrix};
pub use order::MonomialOrder;
pub use poly::{Coeff, Monomial, Polynomial};
pub use ring::Ring;
