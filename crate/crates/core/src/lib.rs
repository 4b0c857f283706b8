//! Matrices of signed graphs.
//!
//! A signed graph is a graph whose edges carry a sign `+1` or `-1`. This
//! crate builds its adjacency, incidence and Kirchhoff matrices, decides
//! balance and switching equivalence, constructs signed line graphs, and
//! checks the spectral theorems that connect them. The [`oracle`] module
//! recomputes the same facts by exhaustive enumeration, for testing.
//!
//! ```
//! use sgmat::fixtures::sigma4;
//! use sgmat::{is_balanced, kirchhoff, spectra::determinant};
//!
//! let g = sigma4();
//! assert!(!is_balanced(&g).balanced);
//! assert_eq!(determinant(&kirchhoff(&g)).unwrap(), 12.into());
//! ```

pub mod balance;
pub mod cli;
pub mod error;
pub mod fixtures;
mod gf2;
pub mod graph;
pub mod io;
pub mod linegraph;
pub mod matrix;
pub mod oracle;
pub mod spectra;
pub mod vsr;

pub use balance::{is_antibalanced, is_balanced, switching_equivalent, switching_isomorphic};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Graph, Mode, Orientation, Sign, SignedGraph, SwitchingFunction, Vertex};
pub use matrix::{adjacency, incidence, kirchhoff, IntMatrix};
pub use spectra::{eig_sym, Spectrum};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/signed-graphs.md")]
    mod signed_graphs {}
    #[doc = include_str!("../../../book/src/balance.md")]
    mod balance {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/line-graphs.md")]
    mod line_graphs {}
    #[doc = include_str!("../../../book/src/very-strong-regularity.md")]
    mod very_strong_regularity {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
