//! Exact-arithmetic computations with abstract Cuntz semigroups.
//!
//! The crate provides concrete Cu-semigroup carriers with decidable order,
//! addition and way-below; closed-form families of generalized Cu-morphisms;
//! the path/τ machinery behind bivariant Cu-semigroups `⟦S,T⟧` with
//! composition, external tensor products, unit/counit maps and the adjunction
//! transforms; Cu-semiring structure including the solidity characterization;
//! ideals and quotients; and a brute-force oracle over finite carriers that
//! validates the closed-category bijection at desk scale.

pub mod axioms;
pub mod carrier;
pub mod error;
pub mod finite;
pub mod ideal;
pub mod ihom;
pub mod morphism;
pub mod oracle;
pub mod path;
pub mod scalar;
pub mod semiring;
pub mod tensor;
pub mod two_kind;

pub use carrier::{Carrier, LimitLaw, Value};
pub use error::{Error, Result};
pub use ihom::IHomElem;
pub use morphism::{GenMorphism, MatrixMor, TableMor};
pub use path::{Chain, Point, Space};
pub use scalar::{ExtNat, QInf};
pub use two_kind::{Kind, TwoKind};
