//! q-Euler numbers, archimedean and p-adic q-l-functions, and mechanical
//! verification of the identities that connect them.

pub mod characters;
pub mod error;
pub mod numerics;
pub mod qeuler;
pub mod report;
pub mod suites;
pub mod zeta_arch;
pub mod zeta_padic;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/padic.md")]
    mod padic {}
    #[doc = include_str!("../../../book/src/q_euler.md")]
    mod q_euler {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/complex.md")]
    mod complex {}
    #[doc = include_str!("../../../book/src/padic_l.md")]
    mod padic_l {}
    #[doc = include_str!("../../../book/src/power_sums.md")]
    mod power_sums {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
