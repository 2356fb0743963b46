//! Sampled verification of the Cu-semigroup axioms and of the auxiliary
//! relation laws on a carrier. Failures carry witnesses; infinite carriers are
//! checked on rational grids and law-driven chains, finite carriers
//! exhaustively.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::carrier::{Carrier, Value};
use crate::error::Result;

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub samples: usize,
    pub chain_len: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { samples: 160, chain_len: 6, seed: 0xC0FFEE }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail(String),
    Undecided(String),
}

impl Verdict {
    pub fn ok(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub carrier: String,
    pub entries: Vec<(String, Verdict)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.ok())
    }

    fn push(&mut self, name: &str, v: Verdict) {
        self.entries.push((name.to_string(), v));
    }
}

fn pick<'a>(rng: &mut impl Rng, grid: &'a [Value]) -> &'a Value {
    &grid[rng.random_range(0..grid.len())]
}

/// Checks the partial-order and monoid laws, the axioms on suprema and
/// way-below, and the softness closed form, with witnesses on failure.
pub fn check_axioms(c: &Carrier, budget: &Budget) -> Result<AxiomReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut report = AxiomReport { carrier: c.to_string(), entries: Vec::new() };
    let grid = c.grid(4, 4);

    report.push("order: partial order compatible with addition", order_laws(c, &grid, &mut rng, budget)?);
    report.push("O1: declared chains have least upper bounds", o1(c, &grid, budget)?);
    report.push("O2: elements are suprema of way-below chains", o2(c, &grid, budget)?);
    report.push("O3: way-below is additive", o3(c, &grid, &mut rng, budget)?);
    report.push("O4: suprema are additive", o4(c, &grid, budget)?);
    report.push("aux: way-below refines the order and transports", aux_relation(c, &grid, &mut rng, budget)?);
    report.push("softness closed form matches the defining quantifier", softness(c, &grid, budget)?);
    Ok(report)
}

fn order_laws(c: &Carrier, grid: &[Value], rng: &mut impl Rng, budget: &Budget) -> Result<Verdict> {
    let zero = c.zero();
    for a in grid {
        if !c.leq(a, a)? {
            return Ok(Verdict::Fail(format!("not reflexive at {a}")));
        }
        if !c.leq(&zero, a)? {
            return Ok(Verdict::Fail(format!("0 not below {a}")));
        }
        if !c.eq(&c.add(a, &zero)?, a)? {
            return Ok(Verdict::Fail(format!("0 not neutral at {a}")));
        }
    }
    for _ in 0..budget.samples {
        let (a, b, d) = (pick(rng, grid), pick(rng, grid), pick(rng, grid));
        if c.leq(a, b)? && c.leq(b, a)? && a != b {
            return Ok(Verdict::Fail(format!("antisymmetry fails at {a}, {b}")));
        }
        if c.leq(a, b)? && c.leq(b, d)? && !c.leq(a, d)? {
            return Ok(Verdict::Fail(format!("transitivity fails at {a}, {b}, {d}")));
        }
        if !c.eq(&c.add(a, b)?, &c.add(b, a)?)? {
            return Ok(Verdict::Fail(format!("addition not commutative at {a}, {b}")));
        }
        let lhs = c.add(&c.add(a, b)?, d)?;
        let rhs = c.add(a, &c.add(b, d)?)?;
        if !c.eq(&lhs, &rhs)? {
            return Ok(Verdict::Fail(format!("addition not associative at {a}, {b}, {d}")));
        }
        if c.leq(a, b)? && !c.leq(&c.add(a, d)?, &c.add(b, d)?)? {
            return Ok(Verdict::Fail(format!("addition not monotone at {a} <= {b}, +{d}")));
        }
    }
    Ok(Verdict::Pass)
}

fn o1(c: &Carrier, grid: &[Value], budget: &Budget) -> Result<Verdict> {
    for a in grid {
        let (chain, law) = c.approx_chain(a, budget.chain_len)?;
        let sup = c.sup_chain(&chain, law)?;
        for v in &chain {
            if !c.leq(v, &sup)? {
                return Ok(Verdict::Fail(format!("sup {sup} not an upper bound of {v}")));
            }
        }
        // least among grid upper bounds of the extended chain
        for u in grid {
            if chain.iter().all(|v| c.leq(v, u).unwrap_or(false))
                && extended_below(c, &chain, law, u)?
                && !c.leq(&sup, u)?
            {
                return Ok(Verdict::Fail(format!(
                    "{u} bounds the chain toward {a} but sup {sup} !<= {u}"
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Is `u` an upper bound of the whole extended chain, not only the sampled
/// prefix? Decided from the law: stabilizing chains are covered by their last
/// value, strictly increasing chains by comparing `u` against the computed
/// supremum of the carrier order's closed form — grids make this exact.
fn extended_below(c: &Carrier, chain: &[Value], law: crate::carrier::LimitLaw, u: &Value) -> Result<bool> {
    let (sup, attained) = c.sup_with_attained(chain, law)?;
    if attained {
        return c.leq(&sup, u);
    }
    // u bounds all values strictly below sup iff it bounds their closure
    match (c, &sup, u) {
        (Carrier::Vec(_) | Carrier::PBar | Carrier::Trunc, _, _) => c.leq(&sup, u),
        (Carrier::M1 | Carrier::TruncHom | Carrier::Z, Value::Pair(s), Value::Pair(t)) => {
            // values approach the soft sup from strictly below
            Ok(t.value >= s.value)
        }
        _ => c.leq(&sup, u),
    }
}

fn o2(c: &Carrier, grid: &[Value], budget: &Budget) -> Result<Verdict> {
    for a in grid {
        let (chain, law) = c.approx_chain(a, budget.chain_len)?;
        for w in chain.windows(2) {
            if !c.way_below(&w[0], &w[1])? {
                return Ok(Verdict::Fail(format!(
                    "approximating chain of {a} is not way-below increasing at {} , {}",
                    w[0], w[1]
                )));
            }
        }
        let sup = c.sup_chain(&chain, law)?;
        if !c.eq(&sup, a)? {
            return Ok(Verdict::Fail(format!("chain for {a} has sup {sup}")));
        }
    }
    Ok(Verdict::Pass)
}

fn o3(c: &Carrier, grid: &[Value], rng: &mut impl Rng, budget: &Budget) -> Result<Verdict> {
    for _ in 0..budget.samples {
        let (a1, a, b1, b) = (pick(rng, grid), pick(rng, grid), pick(rng, grid), pick(rng, grid));
        if c.way_below(a1, a)? && c.way_below(b1, b)? {
            let lhs = c.add(a1, b1)?;
            let rhs = c.add(a, b)?;
            if !c.way_below(&lhs, &rhs)? {
                return Ok(Verdict::Fail(format!(
                    "{a1} << {a} and {b1} << {b} but {lhs} not << {rhs}"
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn o4(c: &Carrier, grid: &[Value], budget: &Budget) -> Result<Verdict> {
    for a in grid.iter().step_by(2) {
        for b in grid.iter().step_by(3) {
            let (ca, la) = c.approx_chain(a, budget.chain_len)?;
            let (cb, lb) = c.approx_chain(b, budget.chain_len)?;
            let n = ca.len().max(cb.len());
            let ext = |chain: &[Value], n: usize| -> Vec<Value> {
                let mut v = chain.to_vec();
                while v.len() < n {
                    v.push(v.last().unwrap().clone());
                }
                v
            };
            let (ca, cb) = (ext(&ca, n), ext(&cb, n));
            let sums: Vec<Value> =
                ca.iter().zip(&cb).map(|(x, y)| c.add(x, y)).collect::<Result<_>>()?;
            let total = c.add(a, b)?;
            // sup(a_n) + sup(b_n) bounds the sums; least on the grid
            for s in &sums {
                if !c.leq(s, &total)? {
                    return Ok(Verdict::Fail(format!("{s} exceeds {a} + {b}")));
                }
            }
            for u in grid {
                if sums.iter().all(|s| c.leq(s, u).unwrap_or(false))
                    && extended_below(c, &sums, la.min_with(lb), u)?
                    && !c.leq(&total, u)?
                {
                    return Ok(Verdict::Fail(format!(
                        "{u} bounds all partial sums of {a}+{b} but not their sum of sups"
                    )));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

fn aux_relation(c: &Carrier, grid: &[Value], rng: &mut impl Rng, budget: &Budget) -> Result<Verdict> {
    let zero = c.zero();
    for _ in 0..budget.samples {
        let (a1, a, b, b1) = (pick(rng, grid), pick(rng, grid), pick(rng, grid), pick(rng, grid));
        if c.way_below(a, b)? && !c.leq(a, b)? {
            return Ok(Verdict::Fail(format!("{a} << {b} but not {a} <= {b}")));
        }
        if !c.way_below(&zero, b)? {
            return Ok(Verdict::Fail(format!("0 not << {b}")));
        }
        if c.leq(a1, a)? && c.way_below(a, b)? && c.leq(b, b1)? && !c.way_below(a1, b1)? {
            return Ok(Verdict::Fail(format!(
                "transport fails: {a1} <= {a} << {b} <= {b1}"
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn softness(c: &Carrier, grid: &[Value], budget: &Budget) -> Result<Verdict> {
    for a in grid {
        let closed = c.is_soft(a)?;
        // candidate a' << a from the grid and the first approximants; later
        // chain points get arbitrarily close to a and need k beyond the
        // budgeted 64
        let (chain, _) = c.approx_chain(a, budget.chain_len)?;
        let mut below: Vec<Value> = Vec::new();
        for v in grid.iter().chain(chain.iter().take(3)) {
            if c.way_below(v, a)? {
                below.push(v.clone());
            }
        }
        let quantifier = below.iter().try_fold(true, |acc, a1| -> Result<bool> {
            if !acc {
                return Ok(false);
            }
            for k in 1..=64u64 {
                let lhs = c.mul_nat(crate::scalar::ExtNat::Fin(k + 1), a1)?;
                let rhs = c.mul_nat(crate::scalar::ExtNat::Fin(k), a)?;
                if c.leq(&lhs, &rhs)? {
                    return Ok(true);
                }
            }
            Ok(false)
        })?;
        if closed != quantifier {
            return Ok(Verdict::Fail(format!(
                "is_soft({a}) = {closed} but the sampled quantifier gives {quantifier}"
            )));
        }
    }
    Ok(Verdict::Pass)
}

impl crate::carrier::LimitLaw {
    fn min_with(self, other: Self) -> Self {
        use crate::carrier::LimitLaw::*;
        match (self, other) {
            (Stabilize, x) | (x, Stabilize) => x,
            (Arithmetic, _) | (_, Arithmetic) => Arithmetic,
            (Geometric, Geometric) => Geometric,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite;

    #[test]
    fn all_carriers_pass() {
        let carriers = [
            Carrier::Vec(1),
            Carrier::Vec(2),
            Carrier::PBar,
            Carrier::Trunc,
            Carrier::M1,
            Carrier::TruncHom,
            Carrier::Z,
            Carrier::Finite(finite::two_chain()),
            Carrier::Finite(finite::three_chain()),
        ];
        for c in carriers {
            let report = check_axioms(&c, &Budget::default()).unwrap();
            assert!(report.passed(), "{}: {:?}", report.carrier, report.entries);
        }
    }
}
