//! Exact y-seed dynamics of the generalized q-Painlevé VI quiver, the
//! extended affine Weyl group of type (A_{2n+1} + A_1 + A_1)^(1) realized by
//! mutation words, its translations, the q-P_(n+1,n+1), q-Garnier and q-LUC
//! flows, and their Lax forms, with machinery to verify every identity by
//! exact evaluation at random rational points.

// Index loops mirror the subscripts of the formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod exactalg;
pub mod lax;
pub mod painleve;
pub mod quiver;
pub mod report;
pub mod seed;
pub mod translations;
pub mod weylrep;
pub mod word;

pub use error::{Error, Result};

/// The guide's chapters, compiled so their snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/quivers-and-seeds.md")]
    mod quivers_and_seeds {}
    #[doc = include_str!("../../../book/src/weyl-group.md")]
    mod weyl_group {}
    #[doc = include_str!("../../../book/src/translations.md")]
    mod translations {}
    #[doc = include_str!("../../../book/src/painleve-flows.md")]
    mod painleve_flows {}
    #[doc = include_str!("../../../book/src/lax-pairs.md")]
    mod lax_pairs {}
    #[doc = include_str!("../../../book/src/reports-and-cli.md")]
    mod reports_and_cli {}
}
