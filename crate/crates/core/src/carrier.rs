//! Concrete Cu-semigroup carriers with exact element arithmetic, their order,
//! the way-below relation, softness, suprema of declared chains, and
//! interpolation.
//!
//! All real-interval carriers work on the dense subsemigroup of nonnegative
//! rationals (plus infinity), which keeps equality and order decidable while
//! supporting every identity the library checks. Suprema of increasing
//! sequences are only computed for chains with a declared limit law, since
//! arbitrary rational sequences have undecidable suprema.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::finite::FiniteCu;
use crate::scalar::{ExtNat, QInf};
use crate::two_kind::{Kind, Profile, TwoKind};

/// A concrete Cu-semigroup.
#[derive(Clone, PartialEq, Eq)]
pub enum Carrier {
    /// Tuples of extended naturals; `Vec(1)` is the semigroup of extended
    /// naturals itself, the tensor unit.
    Vec(usize),
    /// The extended nonnegative rationals `[0, inf]`.
    PBar,
    /// The truncated interval `[0,1] ∪ {inf}` with `a+b = inf` as soon as the
    /// rational sum exceeds 1.
    Trunc,
    /// Compact elements `[0, inf)` together with nonzero soft elements `(0, inf]`.
    M1,
    /// `{0} ⊔ [1, inf] ⊔ (1, inf]` — the endomorphism picture of `Trunc`.
    TruncHom,
    /// Compact naturals together with nonzero soft elements (element-level only).
    Z,
    Finite(Arc<FiniteCu>),
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Vec(1) => write!(f, "extnat"),
            Carrier::Vec(k) => write!(f, "extnat^{k}"),
            Carrier::PBar => write!(f, "pbar"),
            Carrier::Trunc => write!(f, "trunc"),
            Carrier::M1 => write!(f, "m1"),
            Carrier::TruncHom => write!(f, "trunchom"),
            Carrier::Z => write!(f, "z"),
            Carrier::Finite(c) => write!(f, "finite{{{}}}", c.names.join(", ")),
        }
    }
}

/// An element of some carrier.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Vec(Vec<ExtNat>),
    Rat(QInf),
    Pair(TwoKind),
    Fin(usize),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Vec(v) if v.len() == 1 => write!(f, "{}", v[0]),
            Value::Vec(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Value::Rat(q) => write!(f, "{q}"),
            Value::Pair(p) => write!(f, "{p}"),
            Value::Fin(i) => write!(f, "#{i}"),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Value {
    pub fn nat(n: u64) -> Value {
        Value::Vec(vec![ExtNat::Fin(n)])
    }

    pub fn nat_inf() -> Value {
        Value::Vec(vec![ExtNat::Inf])
    }

    pub fn as_vec(&self) -> Result<&[ExtNat]> {
        match self {
            Value::Vec(v) => Ok(v),
            _ => Err(Error::Domain(format!("expected a tuple value, got {self}"))),
        }
    }

    pub fn as_rat(&self) -> Result<&QInf> {
        match self {
            Value::Rat(q) => Ok(q),
            _ => Err(Error::Domain(format!("expected a rational value, got {self}"))),
        }
    }

    pub fn as_pair(&self) -> Result<&TwoKind> {
        match self {
            Value::Pair(p) => Ok(p),
            _ => Err(Error::Domain(format!("expected a kinded value, got {self}"))),
        }
    }

    pub fn as_fin(&self) -> Result<usize> {
        match self {
            Value::Fin(i) => Ok(*i),
            _ => Err(Error::Domain(format!("expected a finite-carrier element, got {self}"))),
        }
    }
}

/// Declared limit behaviour for increasing chains.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LimitLaw {
    /// The sequence is eventually constant at its last value.
    Stabilize,
    /// The sequence continues with the constant difference of its last two terms.
    Arithmetic,
    /// The differences decay by the constant ratio of the last two differences.
    Geometric,
}

impl fmt::Display for LimitLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitLaw::Stabilize => write!(f, "stabilize"),
            LimitLaw::Arithmetic => write!(f, "arithmetic"),
            LimitLaw::Geometric => write!(f, "geometric"),
        }
    }
}

impl Carrier {
    fn profile(&self) -> Option<Profile> {
        match self {
            Carrier::M1 => Some(Profile::M1),
            Carrier::TruncHom => Some(Profile::TruncHom),
            Carrier::Z => Some(Profile::Z),
            _ => None,
        }
    }

    pub fn contains(&self, v: &Value) -> Result<()> {
        let ok = match (self, v) {
            (Carrier::Vec(k), Value::Vec(xs)) => xs.len() == *k,
            (Carrier::PBar, Value::Rat(_)) => true,
            (Carrier::Trunc, Value::Rat(q)) => *q <= QInf::one() || *q == QInf::Inf,
            (Carrier::M1 | Carrier::TruncHom | Carrier::Z, Value::Pair(p)) => {
                return self.profile().unwrap().check(p);
            }
            (Carrier::Finite(c), Value::Fin(i)) => *i < c.size(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("{v} is not an element of {self}")))
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            Carrier::Vec(k) => Value::Vec(vec![ExtNat::ZERO; *k]),
            Carrier::PBar | Carrier::Trunc => Value::Rat(QInf::zero()),
            Carrier::M1 | Carrier::TruncHom | Carrier::Z => Value::Pair(TwoKind::zero()),
            Carrier::Finite(_) => Value::Fin(0),
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Result<Value> {
        self.contains(a)?;
        self.contains(b)?;
        Ok(match (self, a, b) {
            (Carrier::Vec(_), Value::Vec(xs), Value::Vec(ys)) => {
                Value::Vec(xs.iter().zip(ys).map(|(x, y)| x.add(*y)).collect())
            }
            (Carrier::PBar, Value::Rat(x), Value::Rat(y)) => Value::Rat(x.add(y)),
            (Carrier::Trunc, Value::Rat(x), Value::Rat(y)) => {
                let s = x.add(y);
                if s > QInf::one() {
                    Value::Rat(QInf::Inf)
                } else {
                    Value::Rat(s)
                }
            }
            (_, Value::Pair(x), Value::Pair(y)) => {
                Value::Pair(self.profile().unwrap().add(x, y))
            }
            (Carrier::Finite(c), Value::Fin(i), Value::Fin(j)) => Value::Fin(c.add[*i][*j]),
            _ => unreachable!(),
        })
    }

    pub fn leq(&self, a: &Value, b: &Value) -> Result<bool> {
        self.contains(a)?;
        self.contains(b)?;
        Ok(match (self, a, b) {
            (Carrier::Vec(_), Value::Vec(xs), Value::Vec(ys)) => {
                xs.iter().zip(ys).all(|(x, y)| x <= y)
            }
            (Carrier::PBar | Carrier::Trunc, Value::Rat(x), Value::Rat(y)) => x <= y,
            (_, Value::Pair(x), Value::Pair(y)) => self.profile().unwrap().leq(x, y),
            (Carrier::Finite(c), Value::Fin(i), Value::Fin(j)) => c.leq[*i][*j],
            _ => unreachable!(),
        })
    }

    pub fn eq(&self, a: &Value, b: &Value) -> Result<bool> {
        Ok(self.leq(a, b)? && self.leq(b, a)?)
    }

    /// Decides `a << b` in closed form.
    pub fn way_below(&self, a: &Value, b: &Value) -> Result<bool> {
        self.contains(a)?;
        self.contains(b)?;
        Ok(match (self, a, b) {
            (Carrier::Vec(_), Value::Vec(xs), Value::Vec(ys)) => {
                xs.iter().zip(ys).all(|(x, y)| x.way_below(*y))
            }
            (Carrier::PBar, Value::Rat(x), Value::Rat(y)) => x.is_zero() || x < y,
            // infinity is compact in the truncated interval: no sequence inside
            // [0,1] reaches it
            (Carrier::Trunc, Value::Rat(x), Value::Rat(y)) => {
                x.is_zero() || x < y || (*x == QInf::Inf && *y == QInf::Inf)
            }
            (_, Value::Pair(x), Value::Pair(y)) => self.profile().unwrap().way_below(x, y),
            (Carrier::Finite(c), Value::Fin(i), Value::Fin(j)) => c.leq[*i][*j],
            _ => unreachable!(),
        })
    }

    pub fn is_compact(&self, a: &Value) -> Result<bool> {
        self.way_below(a, a)
    }

    /// Decides softness in closed form: `a` is soft iff every `a' << a`
    /// satisfies `(k+1)a' <= ka` for some `k`.
    pub fn is_soft(&self, a: &Value) -> Result<bool> {
        self.contains(a)?;
        Ok(match (self, a) {
            (Carrier::Vec(_), Value::Vec(xs)) => {
                xs.iter().all(|x| x.is_zero() || *x == ExtNat::Inf)
            }
            (Carrier::PBar, _) | (Carrier::Trunc, _) => true,
            (Carrier::M1 | Carrier::Z, Value::Pair(p)) => {
                p.is_zero() || p.kind == Kind::Soft
            }
            // the compact top absorbs multiples, so it is soft as well
            (Carrier::TruncHom, Value::Pair(p)) => {
                p.is_zero() || p.kind == Kind::Soft || p.value == QInf::Inf
            }
            (Carrier::Finite(c), Value::Fin(i)) => {
                let i = *i;
                c.elements()
                    .filter(|&a1| c.leq[a1][i])
                    .all(|a1| (1..=64u64).any(|k| {
                        let lhs = mul_fin(c, k + 1, a1);
                        let rhs = mul_fin(c, k, i);
                        c.leq[lhs][rhs]
                    }))
            }
            _ => unreachable!(),
        })
    }

    /// Multiplication by an extended natural (iterated addition, with
    /// `inf * a = sup_n n*a`).
    pub fn mul_nat(&self, n: ExtNat, a: &Value) -> Result<Value> {
        self.contains(a)?;
        match n {
            ExtNat::Fin(0) => Ok(self.zero()),
            ExtNat::Fin(k) => {
                let mut acc = a.clone();
                for _ in 1..k {
                    acc = self.add(&acc, a)?;
                }
                Ok(acc)
            }
            ExtNat::Inf => Ok(match (self, a) {
                (Carrier::Vec(_), Value::Vec(xs)) => Value::Vec(
                    xs.iter()
                        .map(|x| if x.is_zero() { ExtNat::ZERO } else { ExtNat::Inf })
                        .collect(),
                ),
                (Carrier::PBar | Carrier::Trunc, Value::Rat(q)) => {
                    if q.is_zero() {
                        Value::Rat(QInf::zero())
                    } else {
                        Value::Rat(QInf::Inf)
                    }
                }
                (Carrier::M1 | Carrier::Z, Value::Pair(p)) => {
                    if p.is_zero() {
                        self.zero()
                    } else {
                        Value::Pair(TwoKind::soft(QInf::Inf))
                    }
                }
                (Carrier::TruncHom, Value::Pair(p)) => {
                    if p.is_zero() {
                        self.zero()
                    } else if p.kind == Kind::Compact && p.value == QInf::Inf {
                        Value::Pair(TwoKind::compact(QInf::Inf))
                    } else {
                        Value::Pair(TwoKind::soft(QInf::Inf))
                    }
                }
                (Carrier::Finite(c), Value::Fin(i)) => {
                    // n*a is increasing and stabilizes
                    let mut cur = *i;
                    loop {
                        let next = c.add[cur][*i];
                        if next == cur {
                            break Value::Fin(cur);
                        }
                        cur = next;
                    }
                }
                _ => unreachable!(),
            }),
        }
    }

    /// Interpolation hook: given `a << b`, returns `c` with `a << c << b`.
    pub fn refine_between(&self, a: &Value, b: &Value) -> Result<Option<Value>> {
        if !self.way_below(a, b)? {
            return Ok(None);
        }
        Ok(match (self, a, b) {
            (Carrier::Vec(_), Value::Vec(xs), Value::Vec(ys)) => {
                // entrywise: finite targets are attained, infinite ones pass
                // through the successor
                let c: Vec<ExtNat> = xs
                    .iter()
                    .zip(ys)
                    .map(|(x, y)| match (x, y) {
                        (ExtNat::Fin(u), ExtNat::Inf) => ExtNat::Fin(u + 1),
                        (_, y) => *y,
                    })
                    .collect();
                Some(Value::Vec(c))
            }
            (Carrier::PBar | Carrier::Trunc, Value::Rat(x), Value::Rat(y)) => {
                if self.way_below(a, a)? && self.way_below(b, b)? {
                    Some(b.clone())
                } else {
                    let mid = match y {
                        QInf::Inf => x.add(&QInf::one()),
                        fin => x.midpoint(fin).unwrap(),
                    };
                    Some(Value::Rat(mid))
                }
            }
            (_, Value::Pair(x), Value::Pair(y)) => self
                .profile()
                .unwrap()
                .refine_between(x, y)
                .map(Value::Pair),
            (Carrier::Finite(_), _, _) => Some(b.clone()),
            _ => unreachable!(),
        })
    }

    /// Least upper bound of a `<=`-increasing list under a declared limit law.
    pub fn sup_chain(&self, values: &[Value], law: LimitLaw) -> Result<Value> {
        Ok(self.sup_with_attained(values, law)?.0)
    }

    /// Like [`Carrier::sup_chain`], also reporting whether the extended
    /// sequence attains its supremum.
    pub fn sup_with_attained(&self, values: &[Value], law: LimitLaw) -> Result<(Value, bool)> {
        if values.is_empty() {
            return Err(Error::Precondition("empty chain".into()));
        }
        for v in values {
            self.contains(v)?;
        }
        for w in values.windows(2) {
            if !self.leq(&w[0], &w[1])? {
                return Err(Error::Precondition(format!(
                    "chain not increasing: {} !<= {}",
                    w[0], w[1]
                )));
            }
        }
        let last = values.last().unwrap().clone();
        if values.len() >= 2 && self.eq(&values[values.len() - 2], &last)? {
            // already stable regardless of the declared law
            return Ok((last, true));
        }
        match law {
            LimitLaw::Stabilize => Ok((last, true)),
            _ if matches!(self, Carrier::Finite(_)) => Ok((last, true)),
            LimitLaw::Arithmetic => self.sup_arithmetic(values),
            LimitLaw::Geometric => self.sup_geometric(values),
        }
    }

    fn sup_arithmetic(&self, values: &[Value]) -> Result<(Value, bool)> {
        if values.len() < 2 {
            return Ok((values[0].clone(), true));
        }
        let prev = &values[values.len() - 2];
        let last = &values[values.len() - 1];
        match (self, prev, last) {
            (Carrier::Vec(_), Value::Vec(xs), Value::Vec(ys)) => {
                let mut attained = true;
                let sup: Vec<ExtNat> = xs
                    .iter()
                    .zip(ys)
                    .map(|(x, y)| {
                        if x == y {
                            *y
                        } else {
                            attained = false;
                            ExtNat::Inf
                        }
                    })
                    .collect();
                Ok((Value::Vec(sup), attained))
            }
            (Carrier::PBar, Value::Rat(_), Value::Rat(QInf::Inf)) => {
                Ok((Value::Rat(QInf::Inf), true))
            }
            (Carrier::PBar, _, _) => Ok((Value::Rat(QInf::Inf), false)),
            (Carrier::Trunc, Value::Rat(_), Value::Rat(_)) => {
                // positive constant steps leave [0,1] in finitely many steps,
                // so the extended sequence attains infinity
                Ok((Value::Rat(QInf::Inf), true))
            }
            (Carrier::M1 | Carrier::Z, _, _) => {
                Ok((Value::Pair(TwoKind::soft(QInf::Inf)), false))
            }
            (Carrier::TruncHom, _, Value::Pair(p)) => {
                if p.kind == Kind::Compact && p.value == QInf::Inf {
                    Ok((last.clone(), true))
                } else {
                    Ok((Value::Pair(TwoKind::soft(QInf::Inf)), false))
                }
            }
            _ => unreachable!(),
        }
    }

    fn sup_geometric(&self, values: &[Value]) -> Result<(Value, bool)> {
        if values.len() < 3 {
            return Err(Error::Precondition(
                "geometric law needs at least three values".into(),
            ));
        }
        // a chain that already reached a top value has attained its supremum
        let top_reached = match values.last().unwrap() {
            Value::Rat(QInf::Inf) => true,
            Value::Pair(p) => p.value == QInf::Inf,
            _ => false,
        };
        if top_reached {
            return Ok((values.last().unwrap().clone(), true));
        }
        let get = |v: &Value| -> Result<QInf> {
            Ok(match v {
                Value::Rat(q) => q.clone(),
                Value::Pair(p) => p.value.clone(),
                _ => {
                    return Err(Error::Unsupported(format!(
                        "geometric law not available on {self}"
                    )))
                }
            })
        };
        let a = get(&values[values.len() - 3])?;
        let b = get(&values[values.len() - 2])?;
        let c = get(&values[values.len() - 1])?;
        let d1 = b
            .sub(&a)
            .ok_or_else(|| Error::Precondition("geometric law needs finite values".into()))?;
        let d2 = c
            .sub(&b)
            .ok_or_else(|| Error::Precondition("geometric law needs finite values".into()))?;
        if d1.is_zero() || d2.is_zero() {
            return Ok((values.last().unwrap().clone(), true));
        }
        let limit = if d2 >= d1 {
            QInf::Inf
        } else {
            // c + d2 * r / (1 - r) with r = d2/d1
            let (QInf::Fin(c0), QInf::Fin(x1), QInf::Fin(x2)) = (&c, &d1, &d2) else {
                unreachable!()
            };
            let r = x2 / x1;
            let rest = x2 * &r / (num_rational::BigRational::from_integer(1.into()) - &r);
            QInf::Fin(c0 + rest)
        };
        match self {
            Carrier::PBar => Ok((Value::Rat(limit), false)),
            Carrier::Trunc => {
                if limit <= QInf::one() {
                    Ok((Value::Rat(limit), false))
                } else {
                    // the extended sequence escapes [0,1] and attains infinity
                    Ok((Value::Rat(QInf::Inf), true))
                }
            }
            Carrier::M1 | Carrier::Z | Carrier::TruncHom => {
                Ok((Value::Pair(TwoKind::soft(limit)), false))
            }
            _ => Err(Error::Unsupported(format!(
                "geometric law not available on {self}"
            ))),
        }
    }

    /// A canonical way-below-increasing chain with supremum `a`, together with
    /// the law describing its continuation.
    pub fn approx_chain(&self, a: &Value, len: usize) -> Result<(Vec<Value>, LimitLaw)> {
        self.contains(a)?;
        let len = len.max(3);
        if self.is_compact(a)? {
            return Ok((vec![a.clone()], LimitLaw::Stabilize));
        }
        Ok(match (self, a) {
            (Carrier::Vec(_), Value::Vec(xs)) => {
                let values = (0..len as u64)
                    .map(|i| {
                        Value::Vec(
                            xs.iter()
                                .map(|x| match x {
                                    ExtNat::Fin(_) => *x,
                                    ExtNat::Inf => ExtNat::Fin(i),
                                })
                                .collect(),
                        )
                    })
                    .collect();
                (values, LimitLaw::Arithmetic)
            }
            (Carrier::PBar | Carrier::Trunc, Value::Rat(q)) => match q {
                QInf::Inf => {
                    let values = (0..len as u64).map(|i| Value::Rat(QInf::from_u64(i))).collect();
                    (values, LimitLaw::Arithmetic)
                }
                fin => {
                    let mut values = Vec::with_capacity(len);
                    let mut gap = fin.clone();
                    for _ in 0..len {
                        gap = gap.midpoint(&QInf::zero()).unwrap();
                        values.push(Value::Rat(fin.sub(&gap).unwrap()));
                    }
                    (values, LimitLaw::Geometric)
                }
            },
            (_, Value::Pair(p)) => {
                // non-compact two-kind elements are soft; approximate through
                // soft values strictly below
                match &p.value {
                    QInf::Inf => {
                        let base = match self {
                            Carrier::TruncHom => 1,
                            _ => 0,
                        };
                        let values = (0..len as u64)
                            .map(|i| Value::Pair(TwoKind::soft(QInf::from_u64(base + i + 1))))
                            .collect();
                        (values, LimitLaw::Arithmetic)
                    }
                    fin => {
                        let floor = match self {
                            Carrier::TruncHom => QInf::one(),
                            _ => QInf::zero(),
                        };
                        let mut values = Vec::with_capacity(len);
                        let mut gap = fin.sub(&floor).unwrap();
                        for _ in 0..len {
                            gap = gap.midpoint(&QInf::zero()).unwrap();
                            values.push(Value::Pair(TwoKind::soft(fin.sub(&gap).unwrap())));
                        }
                        (values, LimitLaw::Geometric)
                    }
                }
            }
            _ => unreachable!("finite elements are compact"),
        })
    }

    /// Deterministic element grid used by sampled checks. `qmax` bounds
    /// denominators, `vmax` bounds magnitudes.
    pub fn grid(&self, qmax: u64, vmax: u64) -> Vec<Value> {
        match self {
            Carrier::Vec(k) => {
                let entries: Vec<ExtNat> = (0..=vmax.min(4))
                    .map(ExtNat::Fin)
                    .chain([ExtNat::Inf])
                    .collect();
                let mut out = Vec::new();
                let mut idx = vec![0usize; *k];
                loop {
                    out.push(Value::Vec(idx.iter().map(|&i| entries[i]).collect()));
                    let mut pos = 0;
                    loop {
                        if pos == *k {
                            return out;
                        }
                        idx[pos] += 1;
                        if idx[pos] < entries.len() {
                            break;
                        }
                        idx[pos] = 0;
                        pos += 1;
                    }
                }
            }
            Carrier::PBar => rational_grid(qmax, vmax)
                .into_iter()
                .map(Value::Rat)
                .collect(),
            Carrier::Trunc => rational_grid(qmax, 1)
                .into_iter()
                .map(Value::Rat)
                .collect(),
            Carrier::M1 | Carrier::TruncHom | Carrier::Z => {
                let prof = self.profile().unwrap();
                let mut out = vec![self.zero()];
                for v in rational_grid(qmax, vmax) {
                    for kind in [Kind::Compact, Kind::Soft] {
                        let p = TwoKind { kind, value: v.clone() };
                        if prof.check(&p).is_ok() {
                            out.push(Value::Pair(p));
                        }
                    }
                }
                out.dedup();
                out
            }
            Carrier::Finite(c) => c.elements().map(Value::Fin).collect(),
        }
    }

    /// Random element with the same support as [`Carrier::grid`].
    pub fn sample(&self, rng: &mut impl Rng, qmax: u64, vmax: u64) -> Value {
        let g = self.grid(qmax, vmax);
        g[rng.random_range(0..g.len())].clone()
    }
}

/// `{p/q : q <= qmax, p/q <= vmax} ∪ {inf}` as reduced rationals, sorted.
pub fn rational_grid(qmax: u64, vmax: u64) -> Vec<QInf> {
    let mut out: Vec<QInf> = Vec::new();
    for q in 1..=qmax.max(1) {
        for p in 0..=(vmax * q) {
            let v = QInf::ratio(p as i64, q as i64).unwrap();
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    out.push(QInf::Inf);
    out
}

fn mul_fin(c: &FiniteCu, k: u64, a: usize) -> usize {
    let mut acc = 0usize;
    for _ in 0..k {
        acc = c.add[acc][a];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite;

    fn rat(s: &str) -> Value {
        Value::Rat(s.parse().unwrap())
    }

    #[test]
    fn extnat_examples() {
        let n = Carrier::Vec(1);
        assert_eq!(
            n.add(&Value::nat(2), &Value::nat_inf()).unwrap(),
            Value::nat_inf()
        );
        assert!(n.way_below(&Value::nat(2), &Value::nat(5)).unwrap());
        assert!(!n.way_below(&Value::nat_inf(), &Value::nat_inf()).unwrap());
    }

    #[test]
    fn trunc_addition_truncates() {
        let t = Carrier::Trunc;
        assert_eq!(t.add(&rat("3/4"), &rat("1/2")).unwrap(), rat("inf"));
        assert_eq!(t.add(&rat("1/4"), &rat("1/2")).unwrap(), rat("3/4"));
        assert_eq!(t.add(&rat("1/2"), &rat("1/2")).unwrap(), rat("1"));
    }

    #[test]
    fn vec_componentwise() {
        let c = Carrier::Vec(2);
        let a = Value::Vec(vec![ExtNat::Fin(1), ExtNat::Inf]);
        let b = Value::Vec(vec![ExtNat::Fin(2), ExtNat::Fin(0)]);
        assert_eq!(
            c.add(&a, &b).unwrap(),
            Value::Vec(vec![ExtNat::Fin(3), ExtNat::Inf])
        );
    }

    #[test]
    fn pbar_way_below() {
        let p = Carrier::PBar;
        assert!(!p.way_below(&rat("1/2"), &rat("1/2")).unwrap());
        assert!(p.way_below(&rat("1/2"), &rat("3/4")).unwrap());
        assert!(p.way_below(&rat("0"), &rat("0")).unwrap());
        assert!(!p.way_below(&rat("inf"), &rat("inf")).unwrap());
    }

    #[test]
    fn trunc_infinity_is_compact() {
        let t = Carrier::Trunc;
        assert!(t.way_below(&rat("inf"), &rat("inf")).unwrap());
        assert!(t.way_below(&rat("1"), &rat("inf")).unwrap());
        assert!(!t.way_below(&rat("1"), &rat("1")).unwrap());
    }

    #[test]
    fn softness_closed_forms() {
        assert!(Carrier::PBar.is_soft(&rat("1")).unwrap());
        assert!(!Carrier::M1
            .is_soft(&Value::Pair(TwoKind::compact(QInf::one())))
            .unwrap());
        assert!(Carrier::M1
            .is_soft(&Value::Pair(TwoKind::soft(QInf::one())))
            .unwrap());
        assert!(Carrier::Vec(1).is_soft(&Value::nat_inf()).unwrap());
        assert!(!Carrier::Vec(1).is_soft(&Value::nat(5)).unwrap());
        // every carrier: 0 is soft
        for c in [
            Carrier::Vec(2),
            Carrier::PBar,
            Carrier::Trunc,
            Carrier::M1,
            Carrier::TruncHom,
            Carrier::Z,
            Carrier::Finite(finite::three_chain()),
        ] {
            assert!(c.is_soft(&c.zero()).unwrap(), "zero soft in {c}");
        }
    }

    #[test]
    fn sup_chain_examples() {
        let n = Carrier::Vec(1);
        let chain: Vec<Value> = (1..=4).map(Value::nat).collect();
        assert_eq!(n.sup_chain(&chain, LimitLaw::Arithmetic).unwrap(), Value::nat_inf());

        let p = Carrier::PBar;
        let chain = vec![rat("1/2"), rat("3/4"), rat("7/8")];
        assert_eq!(p.sup_chain(&chain, LimitLaw::Geometric).unwrap(), rat("1"));

        let f = Carrier::Finite(finite::three_chain());
        let chain = vec![Value::Fin(0), Value::Fin(1), Value::Fin(1)];
        assert_eq!(f.sup_chain(&chain, LimitLaw::Stabilize).unwrap(), Value::Fin(1));
    }

    #[test]
    fn sup_chain_rejects_non_increasing() {
        let p = Carrier::PBar;
        let chain = vec![rat("3/4"), rat("1/2")];
        assert!(p.sup_chain(&chain, LimitLaw::Stabilize).is_err());
    }

    #[test]
    fn approx_chain_has_declared_sup() {
        let targets = [
            (Carrier::PBar, rat("1")),
            (Carrier::PBar, rat("inf")),
            (Carrier::Vec(2), Value::Vec(vec![ExtNat::Fin(2), ExtNat::Inf])),
            (Carrier::M1, Value::Pair(TwoKind::soft(QInf::from_u64(3)))),
            (Carrier::M1, Value::Pair(TwoKind::compact(QInf::from_u64(3)))),
            (Carrier::TruncHom, Value::Pair(TwoKind::soft(QInf::Inf))),
            (Carrier::Trunc, rat("inf")),
        ];
        for (c, a) in targets {
            let (values, law) = c.approx_chain(&a, 5).unwrap();
            for w in values.windows(2) {
                assert!(c.way_below(&w[0], &w[1]).unwrap(), "chain not <<-increasing in {c}");
            }
            let sup = c.sup_chain(&values, law).unwrap();
            assert!(c.eq(&sup, &a).unwrap(), "sup {sup} != {a} in {c}");
        }
    }

    #[test]
    fn mul_nat_closed_forms() {
        let m = Carrier::M1;
        let s2 = Value::Pair(TwoKind::soft(QInf::from_u64(2)));
        assert_eq!(
            m.mul_nat(ExtNat::Fin(3), &s2).unwrap(),
            Value::Pair(TwoKind::soft(QInf::from_u64(6)))
        );
        assert_eq!(
            m.mul_nat(ExtNat::Inf, &s2).unwrap(),
            Value::Pair(TwoKind::soft(QInf::Inf))
        );
        let th = Carrier::TruncHom;
        let top = Value::Pair(TwoKind::compact(QInf::Inf));
        assert_eq!(th.mul_nat(ExtNat::Inf, &top).unwrap(), top);
        let f = Carrier::Finite(finite::three_chain());
        assert_eq!(f.mul_nat(ExtNat::Inf, &Value::Fin(1)).unwrap(), Value::Fin(2));
    }

    #[test]
    fn refine_between_interpolates() {
        let cases = [
            (Carrier::PBar, rat("1/2"), rat("3/4")),
            (Carrier::PBar, rat("0"), rat("inf")),
            (Carrier::Vec(1), Value::nat(2), Value::nat_inf()),
            (
                Carrier::M1,
                Value::Pair(TwoKind::compact(QInf::one())),
                Value::Pair(TwoKind::soft(QInf::from_u64(2))),
            ),
            (
                Carrier::TruncHom,
                Value::Pair(TwoKind::zero()),
                Value::Pair(TwoKind::soft(QInf::from_u64(2))),
            ),
        ];
        for (c, a, b) in cases {
            let mid = c.refine_between(&a, &b).unwrap().unwrap();
            assert!(c.way_below(&a, &mid).unwrap());
            assert!(c.way_below(&mid, &b).unwrap());
        }
    }
}
