//! Invariants of classical and virtual links given as signed oriented Gauss
//! codes: the Kauffman bracket and Jones polynomial, Khovanov homology over
//! ℤ, ℚ and ℤ/2 built on a cube whose faces anti-commute via cut loci and
//! cycle orderings, Lee homology with its canonical generators, and the
//! Rasmussen invariant with slice-genus bounds.
//!
//! ```
//! use vkh::{diagram::VirtualLinkDiagram, homology::{khovanov_homology, Coeffs}};
//!
//! let trefoil: VirtualLinkDiagram = "O1+U2+O3+U1+O2+U3+".parse().unwrap();
//! let kh = khovanov_homology(&trefoil, Coeffs::Q).unwrap();
//! assert_eq!(kh.total_rank(), 4);
//! ```

pub mod catalog;
pub mod cli;
pub mod cube;
pub mod diagram;
pub mod error;
pub mod frobenius;
pub mod homology;
pub mod lee;
pub mod linalg;
pub mod orientation;
pub mod poly;
pub mod random;
pub mod smoothing;

pub use error::{Error, Result};

/// Cube constructions refuse diagrams with more classical crossings than this
/// unless a different cap is requested.
pub const DEFAULT_MAX_CROSSINGS: usize = 24;
