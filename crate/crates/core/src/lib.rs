pub mod algebra;
pub mod charts;
pub mod error;
pub mod fock;
pub mod graded;
pub mod invariants;
pub mod linalg;
pub mod report;
pub mod sections;
pub mod verify;

pub use algebra::{GenVar, Parity, PolyExpr, Scalar, SuperMonomial, Symbol};
pub use error::{Error, Result};
pub use fock::{FieldExpr, FockSpace, LambdaPolynomial};
pub use graded::{Letter, StandardWord, WeylGen, WeylLabel};
pub use report::{Check, Status};
pub use sections::SectionName;
pub use verify::{RunConfig, Suite, VerifyReport};
