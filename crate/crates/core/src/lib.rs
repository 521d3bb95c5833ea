//! Construction and brute-force analysis of finite groupoids built from the
//! two-parameter operation `x * y = t x + u y` over modular, neutrosophic
//! and interval carriers, in scalar, matrix and truncated-polynomial shapes.

pub mod carrier;
pub mod config;
pub mod error;
pub mod groupoid;
pub mod identities;
pub mod shape;
pub mod structure;
pub mod theorems;
pub mod worked;

pub use carrier::{BaseCarrier, Carrier, CoprimalityClass, Residue, UnitLabel, Value};
pub use config::Budget;
pub use error::{Error, Result};
pub use shape::{star, Element, ElementSpace, ProductKind, Projection, Shape, SpaceSize};
pub use groupoid::{classify_pair, CayleyTable, Groupoid, GroupoidSpec, Level};
pub use identities::{check_identity, closed_form, cross_validate, CheckMode, ClosedFormPredicate, IdentityId, IdentityVerdict};
pub use structure::{classify_subset, is_simple, smarandache_identity, SubsetClassification, SubsetHandle};
