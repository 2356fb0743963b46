//! Elements that come in a compact and a soft flavour of the same value scale.
//!
//! Three carriers share this shape:
//!
//! * `M1`: compact elements `[0, inf)` together with nonzero soft elements
//!   `(0, inf]`.
//! * `TruncHom`: the endomorphism semigroup of the truncated interval,
//!   `{0} ⊔ [1, inf] ⊔ (1, inf]` — compacts `{0} ∪ [1, inf]` (note the compact
//!   infinity) and softs `(1, inf]`.
//! * `Z`: compact naturals `{0, 1, 2, …}` together with soft elements `(0, inf]`.
//!
//! The mixed order is a reconstruction, validated by the axiom checker, since
//! only the set decomposition of these carriers is standard: within a kind
//! compare values; `compact c <= soft s` iff `c < s`; `soft s <= compact c` iff
//! `s <= c`. Soft elements are suprema of strictly smaller elements, compacts
//! are attained.
//!
//! Way-below follows from that reading: any increasing sequence whose supremum
//! dominates a compact `y` must attain it, so everything `<= y` is way below a
//! compact `y`; against a soft `y` only strictly smaller values qualify.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::QInf;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Kind {
    Compact,
    Soft,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Compact => write!(f, "compact"),
            Kind::Soft => write!(f, "soft"),
        }
    }
}

/// Which of the three two-kind carriers an element belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Profile {
    M1,
    TruncHom,
    Z,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoKind {
    pub kind: Kind,
    pub value: QInf,
}

impl TwoKind {
    pub fn compact(value: QInf) -> TwoKind {
        TwoKind { kind: Kind::Compact, value }
    }

    pub fn soft(value: QInf) -> TwoKind {
        TwoKind { kind: Kind::Soft, value }
    }

    pub fn zero() -> TwoKind {
        TwoKind::compact(QInf::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.kind == Kind::Compact && self.value.is_zero()
    }

    fn is_compact_inf(&self) -> bool {
        self.kind == Kind::Compact && self.value == QInf::Inf
    }
}

impl fmt::Display for TwoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.value)
    }
}

impl fmt::Debug for TwoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Profile {
    /// Validates value ranges per carrier.
    pub fn check(&self, x: &TwoKind) -> Result<()> {
        let ok = match (self, x.kind) {
            (Profile::M1, Kind::Compact) => x.value.is_finite(),
            (Profile::M1, Kind::Soft) => !x.value.is_zero(),
            (Profile::TruncHom, Kind::Compact) => {
                x.value.is_zero() || x.value >= QInf::one()
            }
            (Profile::TruncHom, Kind::Soft) => x.value > QInf::one(),
            (Profile::Z, Kind::Compact) => match &x.value {
                QInf::Fin(r) => r.is_integer(),
                QInf::Inf => false,
            },
            (Profile::Z, Kind::Soft) => !x.value.is_zero(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("{x} is not an element of {self:?}")))
        }
    }

    pub fn leq(&self, a: &TwoKind, b: &TwoKind) -> bool {
        match (a.kind, b.kind) {
            (Kind::Compact, Kind::Compact) | (Kind::Soft, Kind::Soft) => a.value <= b.value,
            (Kind::Compact, Kind::Soft) => a.value < b.value,
            (Kind::Soft, Kind::Compact) => a.value <= b.value,
        }
    }

    pub fn add(&self, a: &TwoKind, b: &TwoKind) -> TwoKind {
        // A compact infinity (TruncHom only) comes from a constant path at the
        // top, so it absorbs everything.
        if a.is_compact_inf() || b.is_compact_inf() {
            return TwoKind::compact(QInf::Inf);
        }
        let value = a.value.add(&b.value);
        match (a.kind, b.kind) {
            (Kind::Compact, Kind::Compact) => TwoKind::compact(value),
            _ => TwoKind::soft(value),
        }
    }

    pub fn way_below(&self, a: &TwoKind, b: &TwoKind) -> bool {
        match b.kind {
            Kind::Compact => self.leq(a, b),
            Kind::Soft => a.is_zero() || a.value < b.value,
        }
    }

    /// Supremum of a (strictly) increasing non-stabilizing chain is soft.
    pub fn sup_of_strict_chain(&self, limit: QInf) -> TwoKind {
        TwoKind::soft(limit)
    }

    /// The kinded product: values multiply, two compacts stay compact, and a
    /// soft factor makes the product soft — except that a compact top (the
    /// constant path at infinity, TruncHom only) absorbs. Derived from
    /// composing representative chains of scalings.
    pub fn product(&self, x: &TwoKind, y: &TwoKind) -> TwoKind {
        if x.is_zero() || y.is_zero() {
            return TwoKind::zero();
        }
        if x.is_compact_inf() || y.is_compact_inf() {
            return TwoKind::compact(QInf::Inf);
        }
        let value = x.value.mul(&y.value);
        let kind = match (x.kind, y.kind) {
            (Kind::Compact, Kind::Compact) => Kind::Compact,
            _ => Kind::Soft,
        };
        TwoKind { kind, value }
    }

    /// Interpolation: given `a` way below `b`, produce `c` with `a << c << b`.
    pub fn refine_between(&self, a: &TwoKind, b: &TwoKind) -> Option<TwoKind> {
        if !self.way_below(a, b) {
            return None;
        }
        if b.kind == Kind::Compact && self.leq(a, b) {
            // compacts interpolate through themselves
            return Some(b.clone());
        }
        // b soft: pick any valid value strictly between
        if a.value < b.value {
            let mid = match &b.value {
                QInf::Inf => a.value.add(&QInf::one()),
                fin => a.value.midpoint(fin)?,
            };
            let c = match self {
                Profile::M1 | Profile::Z => TwoKind::soft(mid),
                Profile::TruncHom => {
                    if mid > QInf::one() {
                        TwoKind::soft(mid)
                    } else {
                        // soft range starts above 1; compact 1 still sits
                        // strictly between a and b here
                        TwoKind::compact(QInf::one())
                    }
                }
            };
            if self.check(&c).is_ok() && self.way_below(a, &c) && self.way_below(&c, b) {
                return Some(c);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &str) -> TwoKind {
        TwoKind::compact(v.parse().unwrap())
    }

    fn s(v: &str) -> TwoKind {
        TwoKind::soft(v.parse().unwrap())
    }

    #[test]
    fn mixed_order() {
        let p = Profile::M1;
        assert!(p.leq(&c("1"), &s("2")));
        assert!(!p.leq(&c("2"), &s("2")));
        assert!(p.leq(&s("2"), &c("2")));
        assert!(!p.leq(&s("3"), &c("2")));
    }

    #[test]
    fn way_below_respects_transport() {
        // soft 2 <= compact 2 << compact 2 forces soft 2 << compact 2
        let p = Profile::M1;
        assert!(p.way_below(&c("2"), &c("2")));
        assert!(p.way_below(&s("2"), &c("2")));
        assert!(!p.way_below(&s("2"), &s("2")));
        assert!(!p.way_below(&c("2"), &s("2")));
        assert!(p.way_below(&c("1"), &s("2")));
    }

    #[test]
    fn trunc_hom_compact_inf_absorbs() {
        let p = Profile::TruncHom;
        let top = TwoKind::compact(QInf::Inf);
        assert_eq!(p.add(&top, &s("3")), top);
        assert!(p.way_below(&s("inf"), &top));
        assert!(!p.way_below(&top, &s("inf")));
        assert!(p.leq(&s("inf"), &top));
        assert!(!p.leq(&top, &s("inf")));
    }

    #[test]
    fn addition_kinds() {
        let p = Profile::M1;
        assert_eq!(p.add(&c("2"), &c("3")), c("5"));
        assert_eq!(p.add(&c("2"), &s("3")), s("5"));
        assert_eq!(p.add(&TwoKind::zero(), &s("3")), s("3"));
    }

    #[test]
    fn profiles_validate_ranges() {
        assert!(Profile::M1.check(&c("inf")).is_err());
        assert!(Profile::M1.check(&s("0")).is_err());
        assert!(Profile::TruncHom.check(&c("1/2")).is_err());
        assert!(Profile::TruncHom.check(&s("1")).is_err());
        assert!(Profile::TruncHom.check(&c("inf")).is_ok());
        assert!(Profile::Z.check(&c("3/2")).is_err());
        assert!(Profile::Z.check(&s("3/2")).is_ok());
    }
}
