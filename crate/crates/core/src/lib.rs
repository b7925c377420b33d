//! Generalized projective Reed-Solomon codes over small finite fields, their
//! covering radius, and deep-hole tests.
//!
//! ```
//! use deephole::{Budget, FiniteField, GprsCode, Polynomial};
//! use deephole::deepholes::{is_deep_hole_oracle, thm14_criterion};
//!
//! let f5 = FiniteField::prime(5).unwrap();
//! let code = GprsCode::new(f5, &[f5.from_int(3), f5.from_int(4)], 2).unwrap();
//! assert!(thm14_criterion(&code).unwrap().is_deep_hole);
//!
//! // (x^2 evaluated on D = {0, 1, 2}, then the coefficient of x)
//! let u = code.word_from_poly(&Polynomial::monomial(f5.one(), 2)).unwrap();
//! assert_eq!(u.to_string(), "0,1,4,0");
//! assert!(is_deep_hole_oracle(&code, &u, &Budget::default()).unwrap().is_deep_hole);
//! ```

pub mod codes;
pub mod deepholes;
pub mod error;
pub mod galois;
pub mod matrix;
pub mod polynomial;
pub mod verify;

pub use codes::{Budget, DistanceStrategy, GprsCode, GrsCode, Mode, ReceivedWord};
pub use deepholes::{DeepHoleVerdict, Method, Witness, WordFamilySpec};
pub use error::{Error, Result};
pub use galois::{FieldElement, FiniteField};
pub use matrix::Matrix;
pub use polynomial::{Degree, Polynomial};
