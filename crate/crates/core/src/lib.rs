//! Exact symmetric-function toolkit: partitions and their boundaries,
//! semistandard tableaux and matrix encodings, alternants and Schur
//! polynomials, and the ring of symmetric functions in the Schur basis.
//!
//! ```
//! use schurkit::shapes::{Composition, Partition};
//! use schurkit::symfunc::{basis_element, kostka, skew_schur, BasisKind};
//!
//! let h11 = basis_element(BasisKind::H, &Composition::new(vec![1, 1])).unwrap();
//! assert_eq!(h11.to_string(), "s[2] + s[1,1]");
//!
//! let l = Partition::new(vec![2, 1]).unwrap();
//! let skew = skew_schur(&l, &Partition::new(vec![1]).unwrap());
//! assert_eq!(skew.to_string(), "s[2] + s[1,1]");
//! assert_eq!(kostka(&l, &Partition::empty(), &Composition::new(vec![1, 1, 1]), false), 2.into());
//! ```

pub mod polynomials;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
