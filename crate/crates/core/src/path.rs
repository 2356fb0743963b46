//! Finite-chain representation of paths and the τ-quotient.
//!
//! A path is an increasing map from the rationals in (0,1) into an ordered
//! semigroup with an additive auxiliary relation `≺`; here a path is stored as
//! a finite `≺`-increasing chain of cofinal samples together with its tail
//! behaviour: either the genuine path is eventually constant at the last
//! sample (which then must satisfy `v ≺ v`), or it strictly approaches a
//! declared supremum without attaining it. Comparison of two paths — "every
//! value of one is `≺`-dominated by some value of the other" — is decided in
//! closed form from the tails:
//!
//! * stable vs stable: `≺` on the tops,
//! * stable top `v` vs approaching `e`: does `v ≺ w` for some genuine `w`
//!   strictly below `e` (per-space rule),
//! * approaching `e` vs stable top `w`: `e <= w`,
//! * approaching vs approaching: compare the suprema.
//!
//! Chains with non-refinable gaps are rejected at construction.

use std::fmt;

use crate::carrier::{Carrier, LimitLaw, Value};
use crate::error::{Error, Result};
use crate::morphism::{GenMorphism, MatrixMor};
use crate::scalar::QInf;
use crate::two_kind::Kind;

/// The ambient ordered semigroup a chain lives in: either a carrier with
/// `≺ = <<`, or a space of generalized Cu-morphisms with the canonical `≺`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Space {
    Elems(Carrier),
    Mors { dom: Carrier, cod: Carrier },
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Elems(c) => write!(f, "{c}"),
            Space::Mors { dom, cod } => write!(f, "[{dom} -> {cod}]"),
        }
    }
}

/// A point of a [`Space`].
#[derive(Clone, PartialEq, Eq)]
pub enum Point {
    Val(Value),
    Mor(GenMorphism),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Val(v) => write!(f, "{v}"),
            Point::Mor(m) => write!(f, "{m:?}"),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Point {
    pub fn as_val(&self) -> Result<&Value> {
        match self {
            Point::Val(v) => Ok(v),
            Point::Mor(_) => Err(Error::Domain("expected an element, got a morphism".into())),
        }
    }

    pub fn as_mor(&self) -> Result<&GenMorphism> {
        match self {
            Point::Mor(m) => Ok(m),
            Point::Val(_) => Err(Error::Domain("expected a morphism, got an element".into())),
        }
    }
}

impl Space {
    pub fn contains(&self, p: &Point) -> Result<()> {
        match (self, p) {
            (Space::Elems(c), Point::Val(v)) => c.contains(v),
            (Space::Mors { dom, cod }, Point::Mor(m)) => {
                if m.dom() == *dom && m.cod() == *cod {
                    Ok(())
                } else {
                    Err(Error::Mismatch(format!(
                        "morphism {:?} does not live in {self}",
                        m
                    )))
                }
            }
            _ => Err(Error::Mismatch(format!("point {p} does not live in {self}"))),
        }
    }

    pub fn zero(&self) -> Result<Point> {
        Ok(match self {
            Space::Elems(c) => Point::Val(c.zero()),
            Space::Mors { dom, cod } => Point::Mor(GenMorphism::zero(dom, cod)?),
        })
    }

    pub fn prec(&self, a: &Point, b: &Point) -> Result<bool> {
        match (self, a, b) {
            (Space::Elems(c), Point::Val(x), Point::Val(y)) => c.way_below(x, y),
            (Space::Mors { .. }, Point::Mor(f), Point::Mor(g)) => f.prec(g),
            _ => Err(Error::Mismatch("mixed points".into())),
        }
    }

    pub fn leq(&self, a: &Point, b: &Point) -> Result<bool> {
        match (self, a, b) {
            (Space::Elems(c), Point::Val(x), Point::Val(y)) => c.leq(x, y),
            (Space::Mors { .. }, Point::Mor(f), Point::Mor(g)) => f.leq(g),
            _ => Err(Error::Mismatch("mixed points".into())),
        }
    }

    pub fn add(&self, a: &Point, b: &Point) -> Result<Point> {
        Ok(match (self, a, b) {
            (Space::Elems(c), Point::Val(x), Point::Val(y)) => Point::Val(c.add(x, y)?),
            (Space::Mors { .. }, Point::Mor(f), Point::Mor(g)) => Point::Mor(f.add(g)?),
            _ => return Err(Error::Mismatch("mixed points".into())),
        })
    }

    /// Does `v ≺ w` hold for some genuine value `w` strictly below the
    /// non-attained supremum `e`?
    pub fn prec_into_soft(&self, v: &Point, e: &Point) -> Result<bool> {
        match (v, e) {
            // scalings approach their supremum through strictly smaller
            // finite parameters
            (Point::Mor(GenMorphism::ScalePBar(s)), Point::Mor(GenMorphism::ScalePBar(t)))
            | (Point::Mor(GenMorphism::ScaleTrunc(s)), Point::Mor(GenMorphism::ScaleTrunc(t))) => {
                Ok(s.is_finite() && s < t)
            }
            // elsewhere the finite part of the supremum is attained by the
            // approximants (discreteness) or density provides interpolants,
            // and the rule coincides with ≺ against the supremum itself
            _ => self.prec(v, e),
        }
    }

    fn refine_between(&self, a: &Point, b: &Point) -> Result<Option<Point>> {
        Ok(match (self, a, b) {
            (Space::Elems(c), Point::Val(x), Point::Val(y)) => {
                c.refine_between(x, y)?.map(Point::Val)
            }
            // finite carriers: everything is self-compact, b interpolates
            (Space::Mors { .. }, Point::Mor(GenMorphism::Table(_)), Point::Mor(g)) => {
                Some(Point::Mor(g.clone()))
            }
            (Space::Mors { dom, cod }, Point::Mor(f), Point::Mor(g)) => {
                let proxy = self.proxy()?;
                let (px, py) = (self.mor_to_proxy(f)?, self.mor_to_proxy(g)?);
                match proxy.refine_between(&px, &py)? {
                    Some(mid) => Some(Point::Mor(self.proxy_to_mor(dom, cod, &mid)?)),
                    None => None,
                }
            }
            _ => return Err(Error::Mismatch("mixed points".into())),
        })
    }

    /// The carrier of parameters a morphism family is isomorphic to, as a
    /// positively ordered semigroup with `≺`.
    fn proxy(&self) -> Result<Carrier> {
        match self {
            Space::Elems(c) => Ok(c.clone()),
            Space::Mors { dom, cod } => Ok(match (dom, cod) {
                (Carrier::Vec(k), Carrier::Vec(l)) => Carrier::Vec(k * l),
                (Carrier::PBar, Carrier::PBar) => Carrier::PBar,
                // scaling parameters {0} ∪ [1, inf] sit inside [0, inf] and are
                // closed under the suprema that arise
                (Carrier::Trunc, Carrier::Trunc) => Carrier::PBar,
                (Carrier::Vec(1), cod) => cod.clone(),
                (Carrier::Finite(_), Carrier::Finite(_)) => {
                    return Err(Error::Unsupported(
                        "finite morphism chains stabilize; no proxy needed".into(),
                    ))
                }
                _ => {
                    return Err(Error::Unsupported(format!(
                        "no closed-form morphism family for {self}"
                    )))
                }
            }),
        }
    }

    fn mor_to_proxy(&self, m: &GenMorphism) -> Result<Value> {
        Ok(match m {
            GenMorphism::Matrix(x) => Value::Vec(x.entries().to_vec()),
            GenMorphism::ScalePBar(t) | GenMorphism::ScaleTrunc(t) => Value::Rat(t.clone()),
            GenMorphism::NatTo { at_one, .. } => at_one.clone(),
            GenMorphism::Table(_) => {
                return Err(Error::Unsupported("table morphisms have no proxy".into()))
            }
        })
    }

    fn proxy_to_mor(&self, dom: &Carrier, cod: &Carrier, v: &Value) -> Result<GenMorphism> {
        Ok(match (dom, cod) {
            (Carrier::Vec(k), Carrier::Vec(l)) => {
                GenMorphism::Matrix(MatrixMor::new(*l, *k, v.as_vec()?.to_vec())?)
            }
            (Carrier::PBar, Carrier::PBar) => GenMorphism::ScalePBar(v.as_rat()?.clone()),
            (Carrier::Trunc, Carrier::Trunc) => {
                let t = v.as_rat()?.clone();
                // interpolants must stay in the legal parameter range
                let t = if !t.is_zero() && t < QInf::one() { QInf::one() } else { t };
                GenMorphism::scale_trunc(t)?
            }
            (Carrier::Vec(1), cod) => GenMorphism::nat_to(cod.clone(), v.clone())?,
            _ => return Err(Error::Unsupported(format!("no morphism family for {self}"))),
        })
    }

    /// Supremum of an increasing list of points under a declared law,
    /// reporting whether the extended sequence attains it.
    pub fn sup_with_attained(&self, points: &[Point], law: LimitLaw) -> Result<(Point, bool)> {
        match self {
            Space::Elems(c) => {
                let vals: Vec<Value> =
                    points.iter().map(|p| p.as_val().cloned()).collect::<Result<_>>()?;
                let (sup, att) = c.sup_with_attained(&vals, law)?;
                Ok((Point::Val(sup), att))
            }
            Space::Mors { dom, cod } => {
                if matches!(dom, Carrier::Finite(_)) {
                    return Ok((points.last().unwrap().clone(), true));
                }
                let proxy = self.proxy()?;
                let vals: Vec<Value> = points
                    .iter()
                    .map(|p| self.mor_to_proxy(p.as_mor()?))
                    .collect::<Result<_>>()?;
                let (sup, att) = proxy.sup_with_attained(&vals, law)?;
                Ok((Point::Mor(self.proxy_to_mor(dom, cod, &sup)?), att))
            }
        }
    }
}

/// Tail behaviour of the genuine path represented by a chain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tail {
    /// Eventually constant at the last sample.
    Stable,
    /// Strictly increasing with the given supremum, never attained.
    Approaches(Point),
}

/// A finite `≺`-increasing chain of cofinal samples of a path.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    pub space: Space,
    points: Vec<Point>,
    tail: Tail,
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")?;
        match &self.tail {
            Tail::Stable => Ok(()),
            Tail::Approaches(e) => write!(f, " -> {e}"),
        }
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Chain {
    /// Builds a chain from samples and a declared limit law.
    pub fn new(space: Space, points: Vec<Point>, law: LimitLaw) -> Result<Chain> {
        if points.is_empty() {
            return Err(Error::Precondition("empty chain".into()));
        }
        for p in &points {
            space.contains(p)?;
        }
        for w in points.windows(2) {
            if !space.prec(&w[0], &w[1])? {
                return Err(Error::Precondition(format!(
                    "chain gap: {} ⊀ {}",
                    w[0], w[1]
                )));
            }
            if space.refine_between(&w[0], &w[1])?.is_none() {
                return Err(Error::Precondition(format!(
                    "non-refinable chain gap between {} and {}",
                    w[0], w[1]
                )));
            }
        }
        let (sup, attained) = space.sup_with_attained(&points, law)?;
        Chain::with_sup(space, points, sup, attained)
    }

    fn with_sup(space: Space, mut points: Vec<Point>, sup: Point, attained: bool) -> Result<Chain> {
        for w in points.windows(2) {
            if !space.prec(&w[0], &w[1])? {
                return Err(Error::Precondition(format!("chain gap: {} ⊀ {}", w[0], w[1])));
            }
        }
        if attained {
            let last = points.last().unwrap();
            if !space.leq(last, &sup)? || !space.leq(&sup, last)? {
                if !space.prec(last, &sup)? {
                    return Err(Error::Precondition(format!(
                        "attained supremum {sup} not ≺-reachable from {last}"
                    )));
                }
                points.push(sup.clone());
            }
            let top = points.last().unwrap();
            if !space.prec(top, top)? {
                return Err(Error::Precondition(format!(
                    "no path stabilizes at {top}: it is not self-compact"
                )));
            }
            Ok(Chain { space, points, tail: Tail::Stable })
        } else {
            if !space.prec_into_soft(points.last().unwrap(), &sup)? {
                return Err(Error::Precondition(format!(
                    "chain top {} cannot approach {sup}",
                    points.last().unwrap()
                )));
            }
            Ok(Chain { space, points, tail: Tail::Approaches(sup) })
        }
    }

    /// Internal constructor from precomputed tail data; still validates.
    pub fn from_tail(space: Space, points: Vec<Point>, tail: Tail) -> Result<Chain> {
        if points.is_empty() {
            return Err(Error::Precondition("empty chain".into()));
        }
        for w in points.windows(2) {
            if !space.prec(&w[0], &w[1])? {
                return Err(Error::Precondition(format!("chain gap: {} ⊀ {}", w[0], w[1])));
            }
        }
        match tail {
            Tail::Stable => {
                let top = points.last().unwrap();
                if !space.prec(top, top)? {
                    return Err(Error::Precondition(format!(
                        "no path stabilizes at {top}: it is not self-compact"
                    )));
                }
                Ok(Chain { space, points, tail })
            }
            Tail::Approaches(e) => Chain::with_sup(space, points, e, false),
        }
    }

    /// The constant path at a self-compact point.
    pub fn compact(space: Space, p: Point) -> Result<Chain> {
        space.contains(&p)?;
        if !space.prec(&p, &p)? {
            return Err(Error::Precondition(format!("{p} is not self-compact")));
        }
        Ok(Chain { space: space.clone(), points: vec![p], tail: Tail::Stable })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn is_compact_class(&self) -> bool {
        matches!(self.tail, Tail::Stable)
    }

    pub fn kind(&self) -> Kind {
        match self.tail {
            Tail::Stable => Kind::Compact,
            Tail::Approaches(_) => Kind::Soft,
        }
    }

    /// Supremum of the genuine path (the endpoint map).
    pub fn endpoint(&self) -> Point {
        match &self.tail {
            Tail::Stable => self.points.last().unwrap().clone(),
            Tail::Approaches(e) => e.clone(),
        }
    }

    /// `self ≲ other`: every genuine value of `self` is `≺`-dominated by a
    /// genuine value of `other`.
    pub fn below(&self, other: &Chain) -> Result<bool> {
        if self.space != other.space {
            return Err(Error::Mismatch(format!(
                "chains over {} and {}",
                self.space, other.space
            )));
        }
        match (&self.tail, &other.tail) {
            (Tail::Stable, Tail::Stable) => {
                self.space.prec(self.points.last().unwrap(), other.points.last().unwrap())
            }
            (Tail::Stable, Tail::Approaches(e)) => {
                self.space.prec_into_soft(self.points.last().unwrap(), e)
            }
            (Tail::Approaches(e), Tail::Stable) => {
                self.space.leq(e, other.points.last().unwrap())
            }
            (Tail::Approaches(e1), Tail::Approaches(e2)) => self.space.leq(e1, e2),
        }
    }

    /// τ-equality: mutual domination.
    pub fn tau_equal(&self, other: &Chain) -> Result<bool> {
        Ok(self.below(other)? && other.below(self)?)
    }

    /// Pointwise sum of two paths.
    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.space != other.space {
            return Err(Error::Mismatch("chains over different spaces".into()));
        }
        let n = self.points.len().max(other.points.len()).max(3);
        let xs = self.extended(n)?;
        let ys = other.extended(n)?;
        let sums: Vec<Point> = xs
            .iter()
            .zip(&ys)
            .map(|(a, b)| self.space.add(a, b))
            .collect::<Result<_>>()?;
        // sup(a_n + b_n) = sup a_n + sup b_n
        let sup = self.space.add(&self.endpoint(), &other.endpoint())?;
        let attained = self.space.leq(&sup, sums.last().unwrap())?;
        let mut points = sums;
        points.dedup_by(|b, a| a == b);
        Chain::with_sup(self.space.clone(), points, sup, attained)
    }

    /// Extends the sample list to at least `n` points following the tail.
    pub fn extended(&self, n: usize) -> Result<Vec<Point>> {
        let mut pts = self.points.clone();
        while pts.len() < n {
            let last = pts.last().unwrap().clone();
            let next = match &self.tail {
                Tail::Stable => last,
                Tail::Approaches(e) => self
                    .space
                    .refine_between(&last, e)?
                    .filter(|p| p != &last)
                    .unwrap_or_else(|| last.clone()),
            };
            pts.push(next);
        }
        Ok(pts)
    }

    /// Inserts an interpolant into every gap; the τ-class must not change.
    pub fn refined(&self) -> Result<Chain> {
        let mut points = Vec::with_capacity(self.points.len() * 2);
        for w in self.points.windows(2) {
            points.push(w[0].clone());
            if let Some(mid) = self.space.refine_between(&w[0], &w[1])? {
                if mid != w[0] && mid != w[1] {
                    points.push(mid);
                }
            }
        }
        points.push(self.points.last().unwrap().clone());
        Chain::from_tail(self.space.clone(), points, self.tail.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExtNat;
    use crate::two_kind::TwoKind;

    fn nat_chain(vals: &[u64], law: LimitLaw) -> Chain {
        let pts = vals.iter().map(|&v| Point::Val(Value::nat(v))).collect();
        Chain::new(Space::Elems(Carrier::Vec(1)), pts, law).unwrap()
    }

    #[test]
    fn chain_below_examples() {
        let a = nat_chain(&[1, 2, 3], LimitLaw::Stabilize);
        let b = nat_chain(&[5], LimitLaw::Stabilize);
        assert!(a.below(&b).unwrap());
        let c = nat_chain(&[2], LimitLaw::Stabilize);
        assert!(!a.below(&c).unwrap());
    }

    #[test]
    fn matrix_chain_below() {
        let sp = Space::Mors { dom: Carrier::Vec(1), cod: Carrier::Vec(1) };
        let m = |v: u64| {
            Point::Mor(GenMorphism::Matrix(
                MatrixMor::new(1, 1, vec![ExtNat::Fin(v)]).unwrap(),
            ))
        };
        let f = Chain::new(sp.clone(), vec![m(0), m(1)], LimitLaw::Stabilize).unwrap();
        let g = Chain::new(sp.clone(), vec![m(1), m(2)], LimitLaw::Stabilize).unwrap();
        assert!(f.below(&g).unwrap());
        assert!(!g.below(&f).unwrap());
    }

    #[test]
    fn stabilize_requires_self_compact_top() {
        // in pbar no path stabilizes at 1
        let pts = vec![
            Point::Val(Value::Rat("1/2".parse().unwrap())),
            Point::Val(Value::Rat("1".parse().unwrap())),
        ];
        assert!(Chain::new(Space::Elems(Carrier::PBar), pts, LimitLaw::Stabilize).is_err());
    }

    #[test]
    fn soft_vs_compact_one_in_pbar() {
        let space = Space::Elems(Carrier::PBar);
        let soft1 = Chain::new(
            space.clone(),
            vec![
                Point::Val(Value::Rat("1/2".parse().unwrap())),
                Point::Val(Value::Rat("3/4".parse().unwrap())),
                Point::Val(Value::Rat("7/8".parse().unwrap())),
            ],
            LimitLaw::Geometric,
        )
        .unwrap();
        assert_eq!(soft1.kind(), Kind::Soft);
        assert_eq!(soft1.endpoint(), Point::Val(Value::Rat("1".parse().unwrap())));
        let soft2 = Chain::new(
            space.clone(),
            vec![
                Point::Val(Value::Rat("1".parse().unwrap())),
                Point::Val(Value::Rat("3/2".parse().unwrap())),
                Point::Val(Value::Rat("7/4".parse().unwrap())),
            ],
            LimitLaw::Geometric,
        )
        .unwrap();
        // endpoints 1 and 2 differ
        assert!(soft1.below(&soft2).unwrap());
        assert!(!soft2.below(&soft1).unwrap());
        assert!(!soft1.tau_equal(&soft2).unwrap());
    }

    #[test]
    fn refinement_preserves_class() {
        let space = Space::Elems(Carrier::PBar);
        let chain = Chain::new(
            space.clone(),
            vec![
                Point::Val(Value::Rat("1/2".parse().unwrap())),
                Point::Val(Value::Rat("3/4".parse().unwrap())),
                Point::Val(Value::Rat("7/8".parse().unwrap())),
            ],
            LimitLaw::Geometric,
        )
        .unwrap();
        let refined = chain.refined().unwrap();
        assert!(chain.tau_equal(&refined).unwrap());
        assert!(refined.points().len() > chain.points().len());

        let stable = nat_chain(&[1, 2, 3], LimitLaw::Stabilize);
        let refined = stable.refined().unwrap();
        assert!(stable.tau_equal(&refined).unwrap());
    }

    #[test]
    fn compact_class_requires_self_prec() {
        let space = Space::Elems(Carrier::PBar);
        assert!(Chain::compact(space.clone(), Point::Val(Value::Rat("1".parse().unwrap()))).is_err());
        assert!(Chain::compact(space, Point::Val(Value::Rat(QInf::zero()))).is_ok());
        let m1 = Space::Elems(Carrier::M1);
        assert!(Chain::compact(
            m1.clone(),
            Point::Val(Value::Pair(TwoKind::compact(QInf::from_u64(3))))
        )
        .is_ok());
        assert!(Chain::compact(
            m1,
            Point::Val(Value::Pair(TwoKind::soft(QInf::from_u64(3))))
        )
        .is_err());
    }

    #[test]
    fn endpoint_monotone() {
        let a = nat_chain(&[1, 2, 3], LimitLaw::Arithmetic);
        assert_eq!(a.endpoint(), Point::Val(Value::nat_inf()));
        let b = nat_chain(&[7], LimitLaw::Stabilize);
        assert!(b.below(&a).unwrap());
        // b's endpoint 7 <= a's endpoint inf
        assert!(a
            .space
            .leq(&b.endpoint(), &a.endpoint())
            .unwrap());
    }

    #[test]
    fn chain_addition_matches_endpoint_sum() {
        let space = Space::Elems(Carrier::PBar);
        let mk = |v: &[&str], law| {
            Chain::new(
                space.clone(),
                v.iter().map(|s| Point::Val(Value::Rat(s.parse().unwrap()))).collect(),
                law,
            )
            .unwrap()
        };
        let soft1 = mk(&["1/2", "3/4", "7/8"], LimitLaw::Geometric);
        let zero = Chain::compact(space.clone(), Point::Val(Value::Rat(QInf::zero()))).unwrap();
        let sum = soft1.add(&zero).unwrap();
        assert!(sum.tau_equal(&soft1).unwrap());
        let sum2 = soft1.add(&soft1).unwrap();
        assert_eq!(sum2.endpoint(), Point::Val(Value::Rat("2".parse().unwrap())));
        assert_eq!(sum2.kind(), Kind::Soft);
    }

    #[test]
    fn mixed_kind_m1_chain() {
        // compact 1 << soft 2 << compact 3 is a valid chain approaching soft 4
        let space = Space::Elems(Carrier::M1);
        let pts = vec![
            Point::Val(Value::Pair(TwoKind::compact(QInf::one()))),
            Point::Val(Value::Pair(TwoKind::soft(QInf::from_u64(2)))),
            Point::Val(Value::Pair(TwoKind::compact(QInf::from_u64(3)))),
            Point::Val(Value::Pair(TwoKind::soft("7/2".parse().unwrap()))),
        ];
        let c = Chain::new(space, pts, LimitLaw::Geometric).unwrap();
        assert_eq!(c.kind(), Kind::Soft);
        assert_eq!(
            c.endpoint(),
            Point::Val(Value::Pair(TwoKind::soft(QInf::from_u64(4))))
        );
    }
}
