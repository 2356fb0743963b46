//! Brute-force ground truth on finite instances: enumeration of finite
//! Cu-semigroups up to isomorphism, of generalized Cu-morphisms and
//! Cu-bimorphisms, the closed-category bijection check, and the τ-quotient by
//! chain enumeration.
//!
//! On finite carriers increasing sequences stabilize, so way-below coincides
//! with the order, Cu-morphisms coincide with generalized Cu-morphisms, and
//! every identity here is decided exhaustively.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::FiniteCu;
use crate::morphism::TableMor;

/// All finite Cu-semigroups with at most `n` elements, up to isomorphism.
pub fn generate_finite_cu(n: usize) -> Result<Vec<Arc<FiniteCu>>> {
    if n > 5 {
        return Err(Error::Budget(format!(
            "finite enumeration is bounded at 5 elements, got {n}"
        )));
    }
    let mut out: Vec<Arc<FiniteCu>> = Vec::new();
    let mut seen: BTreeSet<(Vec<usize>, Vec<bool>)> = BTreeSet::new();
    for size in 1..=n.max(1) {
        for add in enumerate_monoids(size) {
            for leq in enumerate_orders(size, &add) {
                let Ok(c) = FiniteCu::from_tables(add.clone(), leq) else {
                    continue;
                };
                if seen.insert(c.canonical_key()) {
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}

/// Commutative monoid tables on {0..size-1} with neutral 0.
fn enumerate_monoids(size: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut table = vec![vec![0usize; size]; size];
    for i in 0..size {
        table[0][i] = i;
        table[i][0] = i;
    }
    // free cells: (i, j) with 1 <= i <= j
    let cells: Vec<(usize, usize)> = (1..size)
        .flat_map(|i| (i..size).map(move |j| (i, j)))
        .collect();
    fill_monoid(&mut table, &cells, 0, size, &mut out);
    out
}

fn fill_monoid(
    table: &mut Vec<Vec<usize>>,
    cells: &[(usize, usize)],
    pos: usize,
    size: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if pos == cells.len() {
        if is_associative(table, size) {
            out.push(table.clone());
        }
        return;
    }
    let (i, j) = cells[pos];
    for v in 0..size {
        table[i][j] = v;
        table[j][i] = v;
        if partial_assoc_ok(table, size, pos, cells) {
            fill_monoid(table, cells, pos + 1, size, out);
        }
    }
    table[i][j] = 0;
    table[j][i] = 0;
}

/// Checks associativity on triples whose partial products are already fixed.
fn partial_assoc_ok(
    table: &[Vec<usize>],
    size: usize,
    pos: usize,
    cells: &[(usize, usize)],
) -> bool {
    let decided = |a: usize, b: usize| {
        a == 0 || b == 0 || {
            let (i, j) = (a.min(b), a.max(b));
            cells.iter().position(|&c| c == (i, j)).map(|p| p <= pos).unwrap_or(false)
        }
    };
    for a in 0..size {
        for b in 0..size {
            if !decided(a, b) {
                continue;
            }
            let ab = table[a][b];
            for c in 0..size {
                if !decided(b, c) {
                    continue;
                }
                let bc = table[b][c];
                if decided(ab, c) && decided(a, bc) && table[ab][c] != table[a][bc] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_associative(table: &[Vec<usize>], size: usize) -> bool {
    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Partial orders with bottom 0 making the addition monotone.
fn enumerate_orders(size: usize, add: &[Vec<usize>]) -> Vec<Vec<Vec<bool>>> {
    // candidate strict pairs (i, j), i != j, both nonzero or j-from-zero fixed
    let pairs: Vec<(usize, usize)> = (1..size)
        .flat_map(|i| (1..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut leq = vec![vec![false; size]; size];
    for i in 0..size {
        leq[i][i] = true;
        leq[0][i] = true;
    }
    let mut out = Vec::new();
    fill_order(&mut leq, &pairs, 0, size, add, &mut out);
    out
}

fn fill_order(
    leq: &mut Vec<Vec<bool>>,
    pairs: &[(usize, usize)],
    pos: usize,
    size: usize,
    add: &[Vec<usize>],
    out: &mut Vec<Vec<Vec<bool>>>,
) {
    if pos == pairs.len() {
        if order_ok(leq, size, add) {
            out.push(leq.clone());
        }
        return;
    }
    let (i, j) = pairs[pos];
    // j < i was decided earlier when (j, i) precedes (i, j); antisymmetry prune
    for v in [false, true] {
        if v && leq[j][i] {
            continue;
        }
        leq[i][j] = v;
        fill_order(leq, pairs, pos + 1, size, add, out);
    }
    leq[i][j] = false;
}

fn order_ok(leq: &[Vec<bool>], size: usize, add: &[Vec<usize>]) -> bool {
    for a in 0..size {
        for b in 0..size {
            if a != b && leq[a][b] && leq[b][a] {
                return false;
            }
            for c in 0..size {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return false;
                }
                if leq[a][b] && !leq[add[a][c]][add[b][c]] {
                    return false;
                }
            }
        }
    }
    true
}

/// All generalized Cu-morphisms between finite carriers, enumerated
/// exhaustively. On finite carriers these are exactly the Cu-morphisms.
pub fn enumerate_gen_morphisms(s: &Arc<FiniteCu>, t: &Arc<FiniteCu>) -> Result<Vec<TableMor>> {
    let n = s.size();
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    enum_maps(s, t, &mut map, 1, &mut out);
    out.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(out)
}

fn enum_maps(
    s: &Arc<FiniteCu>,
    t: &Arc<FiniteCu>,
    map: &mut Vec<usize>,
    pos: usize,
    out: &mut Vec<TableMor>,
) {
    let n = s.size();
    if pos == n {
        if let Ok(m) = TableMor::new(s.clone(), t.clone(), map.clone()) {
            out.push(m);
        }
        return;
    }
    'next: for v in 0..t.size() {
        map[pos] = v;
        // prune: monotone and additive on decided prefixes
        for a in 0..=pos {
            if s.leq[a][pos] && !t.leq[map[a]][v] {
                continue 'next;
            }
            if s.leq[pos][a] && !t.leq[v][map[a]] {
                continue 'next;
            }
            for b in 0..=pos {
                let sum = s.add[a][b];
                if sum <= pos && t.add[map[a]][map[b]] != map[sum] {
                    continue 'next;
                }
            }
        }
        enum_maps(s, t, map, pos + 1, out);
    }
    map[pos] = 0;
}

/// The finite carrier `Cu[S,T]` with pointwise order and addition, together
/// with its elements. With the canonical auxiliary relation (which collapses
/// to the pointwise order here), this presents `⟦S,T⟧`.
pub fn hom_carrier(s: &Arc<FiniteCu>, t: &Arc<FiniteCu>) -> Result<(Arc<FiniteCu>, Vec<TableMor>)> {
    let mors = enumerate_gen_morphisms(s, t)?;
    let n = mors.len();
    let index_of = |map: &[usize]| mors.iter().position(|m| m.map == map).unwrap();
    let mut add = vec![vec![0usize; n]; n];
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let sum: Vec<usize> =
                (0..s.size()).map(|a| t.add[mors[i].map[a]][mors[j].map[a]]).collect();
            add[i][j] = index_of(&sum);
            leq[i][j] = (0..s.size()).all(|a| t.leq[mors[i].map[a]][mors[j].map[a]]);
        }
    }
    let names = mors.iter().map(|m| format!("{:?}", m.map)).collect();
    Ok((FiniteCu::new(names, add, leq)?, mors))
}

/// A Cu-bimorphism between finite carriers as a full value table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BimorTable {
    pub s: Arc<FiniteCu>,
    pub t: Arc<FiniteCu>,
    pub p: Arc<FiniteCu>,
    /// table[a][b] = φ(a, b)
    pub table: Vec<Vec<usize>>,
}

impl BimorTable {
    pub fn validate(&self) -> Result<()> {
        let (ns, nt) = (self.s.size(), self.t.size());
        for a in 0..ns {
            if self.table[a][0] != 0 {
                return Err(Error::Invalid("bimorphism does not vanish at (a, 0)".into()));
            }
        }
        for b in 0..nt {
            if self.table[0][b] != 0 {
                return Err(Error::Invalid("bimorphism does not vanish at (0, b)".into()));
            }
        }
        for a in 0..ns {
            for a2 in 0..ns {
                for b in 0..nt {
                    let lhs = self.table[self.s.add[a][a2]][b];
                    let rhs = self.p.add[self.table[a][b]][self.table[a2][b]];
                    if lhs != rhs {
                        return Err(Error::Invalid("not additive in the first variable".into()));
                    }
                    if self.s.leq[a][a2] && !self.p.leq[self.table[a][b]][self.table[a2][b]] {
                        return Err(Error::Invalid("not monotone in the first variable".into()));
                    }
                }
            }
        }
        for b in 0..nt {
            for b2 in 0..nt {
                for a in 0..ns {
                    let lhs = self.table[a][self.t.add[b][b2]];
                    let rhs = self.p.add[self.table[a][b]][self.table[a][b2]];
                    if lhs != rhs {
                        return Err(Error::Invalid("not additive in the second variable".into()));
                    }
                    if self.t.leq[b][b2] && !self.p.leq[self.table[a][b]][self.table[a][b2]] {
                        return Err(Error::Invalid("not monotone in the second variable".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn pointwise_leq(&self, other: &BimorTable) -> bool {
        (0..self.s.size()).all(|a| {
            (0..self.t.size()).all(|b| self.p.leq[self.table[a][b]][other.table[a][b]])
        })
    }
}

/// All Cu-bimorphisms `S × T -> P`, exhaustively. Monotonicity in each
/// variable already gives joint way-below preservation on finite carriers,
/// and sup-compatibility is automatic.
pub fn enumerate_bimorphisms(
    s: &Arc<FiniteCu>,
    t: &Arc<FiniteCu>,
    p: &Arc<FiniteCu>,
) -> Result<Vec<BimorTable>> {
    let (ns, nt) = (s.size(), t.size());
    let cells: Vec<(usize, usize)> =
        (1..ns).flat_map(|a| (1..nt).map(move |b| (a, b))).collect();
    let mut table = vec![vec![0usize; nt]; ns];
    let mut out = Vec::new();
    enum_bimor(s, t, p, &cells, 0, &mut table, &mut out);
    Ok(out)
}

fn enum_bimor(
    s: &Arc<FiniteCu>,
    t: &Arc<FiniteCu>,
    p: &Arc<FiniteCu>,
    cells: &[(usize, usize)],
    pos: usize,
    table: &mut Vec<Vec<usize>>,
    out: &mut Vec<BimorTable>,
) {
    if pos == cells.len() {
        let cand = BimorTable { s: s.clone(), t: t.clone(), p: p.clone(), table: table.clone() };
        if cand.validate().is_ok() {
            out.push(cand);
        }
        return;
    }
    let (a, b) = cells[pos];
    let decided = |x: usize, y: usize| {
        x == 0 || y == 0 || cells.iter().position(|&c| c == (x, y)).map(|q| q <= pos).unwrap_or(false)
    };
    'next: for v in 0..p.size() {
        table[a][b] = v;
        // monotonicity against decided cells
        for (x, y) in cells[..pos].iter().copied() {
            if s.leq[x][a] && t.leq[y][b] && !p.leq[table[x][y]][v] {
                continue 'next;
            }
            if s.leq[a][x] && t.leq[b][y] && !p.leq[v][table[x][y]] {
                continue 'next;
            }
        }
        // additivity in each variable where all participating cells are decided
        for x1 in 0..s.size() {
            for x2 in 0..s.size() {
                let sum = s.add[x1][x2];
                for y in 0..t.size() {
                    if decided(x1, y)
                        && decided(x2, y)
                        && decided(sum, y)
                        && p.add[table[x1][y]][table[x2][y]] != table[sum][y]
                    {
                        continue 'next;
                    }
                }
            }
        }
        for y1 in 0..t.size() {
            for y2 in 0..t.size() {
                let sum = t.add[y1][y2];
                for x in 0..s.size() {
                    if decided(x, y1)
                        && decided(x, y2)
                        && decided(x, sum)
                        && p.add[table[x][y1]][table[x][y2]] != table[x][sum]
                    {
                        continue 'next;
                    }
                }
            }
        }
        enum_bimor(s, t, p, cells, pos + 1, table, out);
    }
    table[a][b] = 0;
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub hom_side: usize,
    pub bimor_side: usize,
    pub bijective: bool,
    pub order_iso: bool,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.order_iso
    }
}

/// Verifies the natural isomorphism `Cu(S, ⟦T,P⟧) ≅ BiCu(S × T, P)` given by
/// `α ↦ ((a,b) ↦ σ(α(a))(b))`, as a bijection that preserves and reflects the
/// pointwise order.
pub fn check_closed_bijection(
    s: &Arc<FiniteCu>,
    t: &Arc<FiniteCu>,
    p: &Arc<FiniteCu>,
) -> Result<BijectionReport> {
    let (hom_tp, mors_tp) = hom_carrier(t, p)?;
    let alphas = enumerate_gen_morphisms(s, &hom_tp)?;
    let bimors = enumerate_bimorphisms(s, t, p)?;

    // the explicit map: on finite carriers the endpoint of a class is the
    // morphism itself, so α corresponds to (a, b) -> α(a)(b)
    let image: Vec<Vec<Vec<usize>>> = alphas
        .iter()
        .map(|alpha| {
            (0..s.size())
                .map(|a| mors_tp[alpha.map[a]].map.clone())
                .collect()
        })
        .collect();

    let mut bijective = image.len() == bimors.len();
    for phi in &image {
        if !bimors.iter().any(|b| &b.table == phi) {
            bijective = false;
        }
    }
    let mut distinct = BTreeSet::new();
    for phi in &image {
        if !distinct.insert(phi.clone()) {
            bijective = false;
        }
    }

    // order preserved and reflected
    let mut order_iso = true;
    for (i, a1) in alphas.iter().enumerate() {
        for (j, a2) in alphas.iter().enumerate() {
            let hom_le = (0..s.size()).all(|a| hom_tp.leq[a1.map[a]][a2.map[a]]);
            let bim_le = (0..s.size()).all(|a| {
                (0..t.size()).all(|b| p.leq[image[i][a][b]][image[j][a][b]])
            });
            if hom_le != bim_le {
                order_iso = false;
            }
        }
    }
    Ok(BijectionReport {
        hom_side: alphas.len(),
        bimor_side: bimors.len(),
        bijective,
        order_iso,
    })
}

/// A finite positively ordered semigroup with an explicit additive auxiliary
/// relation; input to the τ-quotient.
#[derive(Clone, Debug)]
pub struct QSemigroup {
    pub base: Arc<FiniteCu>,
    /// prec[i][j] = (i ≺ j)
    pub prec: Vec<Vec<bool>>,
}

impl QSemigroup {
    pub fn new(base: Arc<FiniteCu>, prec: Vec<Vec<bool>>) -> Result<QSemigroup> {
        let n = base.size();
        if prec.len() != n || prec.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("prec table has wrong shape".into()));
        }
        for i in 0..n {
            if !prec[0][i] {
                return Err(Error::Invalid("0 must be ≺ everything".into()));
            }
            for j in 0..n {
                if prec[i][j] && !base.leq[i][j] {
                    return Err(Error::Invalid("≺ must refine the order".into()));
                }
                for a in 0..n {
                    for b in 0..n {
                        if base.leq[a][i] && prec[i][j] && base.leq[j][b] && !prec[a][b] {
                            return Err(Error::Invalid("≺ must transport along the order".into()));
                        }
                        if prec[i][j] && prec[a][b] && !prec[base.add[i][a]][base.add[j][b]] {
                            return Err(Error::Invalid("≺ must be additive".into()));
                        }
                    }
                }
            }
        }
        Ok(QSemigroup { base, prec })
    }
}

#[derive(Clone, Debug)]
pub struct TauResult {
    /// The τ-quotient as a carrier.
    pub carrier: Arc<FiniteCu>,
    /// Indices (into the base) of the ≺-reflexive elements presenting the
    /// classes, parallel to `carrier` elements.
    pub class_reps: Vec<usize>,
    /// Number of distinct chains enumerated before quotienting.
    pub chains_seen: usize,
}

/// Computes the τ-quotient of a finite Q-semigroup by chain enumeration.
///
/// Valid chains are `≺`-increasing and end at a `≺`-reflexive element (a path
/// in a finite semigroup is eventually constant at such an element). Two
/// chains are identified iff each value of one is `≺` some value of the
/// other; the classes are presented by the reflexive elements with `≺` as
/// order and the induced addition.
pub fn brute_tau(q: &QSemigroup) -> Result<TauResult> {
    let n = q.base.size();
    let reflexive: Vec<usize> = (0..n).filter(|&i| q.prec[i][i]).collect();
    if reflexive.is_empty() {
        return Err(Error::Invalid("no ≺-reflexive elements: no paths exist".into()));
    }

    // enumerate chains (bounded length; longer chains repeat classes)
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn extend(
        q: &QSemigroup,
        stack: &mut Vec<usize>,
        chains: &mut Vec<Vec<usize>>,
        max_len: usize,
    ) {
        if let Some(&last) = stack.last() {
            if q.prec[last][last] {
                chains.push(stack.clone());
            }
        }
        if stack.len() >= max_len {
            return;
        }
        let n = q.base.size();
        for next in 0..n {
            let ok = match stack.last() {
                Some(&last) => q.prec[last][next] && last != next,
                None => true,
            };
            if ok {
                stack.push(next);
                extend(q, stack, chains, max_len);
                stack.pop();
            }
        }
    }
    extend(q, &mut stack, &mut chains, n.min(6));

    // chain f dominated by chain g: every value of f is ≺ some value of g
    let dominated = |f: &[usize], g: &[usize]| {
        f.iter().all(|&v| g.iter().any(|&w| q.prec[v][w]))
    };

    // each chain must be equivalent to the singleton of its reflexive tail
    for ch in &chains {
        let tail = *ch.last().unwrap();
        let singleton = [tail];
        if !(dominated(ch, &singleton) && dominated(&singleton, ch)) {
            return Err(Error::Invalid(format!(
                "chain {ch:?} is not equivalent to its tail {tail}"
            )));
        }
    }

    // classes are the reflexive elements; distinct iff not mutually ≺
    let mut reps: Vec<usize> = Vec::new();
    for &r in &reflexive {
        if !reps.iter().any(|&s| q.prec[r][s] && q.prec[s][r]) {
            reps.push(r);
        }
    }
    let class_of = |x: usize| reps.iter().position(|&r| q.prec[x][r] && q.prec[r][x]).unwrap();

    let m = reps.len();
    let mut add = vec![vec![0usize; m]; m];
    let mut leq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            add[i][j] = class_of(q.base.add[reps[i]][reps[j]]);
            leq[i][j] = q.prec[reps[i]][reps[j]];
        }
    }
    let names = reps.iter().map(|&r| q.base.names[r].clone()).collect();
    Ok(TauResult {
        carrier: FiniteCu::new(names, add, leq)?,
        class_reps: reps,
        chains_seen: chains.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite;

    #[test]
    fn generate_small() {
        let one = generate_finite_cu(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].size(), 1);
        let two = generate_finite_cu(2).unwrap();
        // the zero semigroup and {0, u} with u + u = u
        assert_eq!(two.len(), 2);
        assert!(two.iter().any(|c| c.size() == 2 && c.add[1][1] == 1));
    }

    #[test]
    fn generated_carriers_pass_axioms() {
        for c in generate_finite_cu(3).unwrap() {
            let report = crate::axioms::check_axioms(
                &crate::carrier::Carrier::Finite(c.clone()),
                &crate::axioms::Budget { samples: 60, chain_len: 4, seed: 1 },
            )
            .unwrap();
            assert!(report.passed(), "{:?}: {:?}", c, report.entries);
        }
    }

    #[test]
    fn morphisms_of_two_chain() {
        let c = finite::two_chain();
        let mors = enumerate_gen_morphisms(&c, &c).unwrap();
        // u -> 0 and u -> u
        assert_eq!(mors.len(), 2);
        let zero = finite::zero_carrier();
        assert_eq!(enumerate_gen_morphisms(&c, &zero).unwrap().len(), 1);
    }

    #[test]
    fn bimorphisms_of_two_chain() {
        let c = finite::two_chain();
        let bi = enumerate_bimorphisms(&c, &c, &c).unwrap();
        // φ(u, u) ∈ {0, u}
        assert_eq!(bi.len(), 2);
        let zero = finite::zero_carrier();
        assert_eq!(enumerate_bimorphisms(&c, &c, &zero).unwrap().len(), 1);
    }

    #[test]
    fn bijection_on_samples() {
        let carriers = [finite::zero_carrier(), finite::two_chain(), finite::three_chain()];
        for s in &carriers {
            for t in &carriers {
                for p in &carriers {
                    let r = check_closed_bijection(s, t, p).unwrap();
                    assert!(r.passed(), "{s:?} {t:?} {p:?}: {r:?}");
                    assert_eq!(r.hom_side, r.bimor_side);
                }
            }
        }
    }

    #[test]
    fn tau_of_cu_semigroup_is_itself() {
        // with ≺ equal to the order, τ returns the carrier
        let c = finite::three_chain();
        let q = QSemigroup::new(c.clone(), c.leq.clone()).unwrap();
        let r = brute_tau(&q).unwrap();
        assert_eq!(r.carrier.size(), 3);
        assert_eq!(r.carrier.canonical_key(), c.canonical_key());
    }

    #[test]
    fn tau_collapses_non_reflexive() {
        // ≺ = only 0 ≺ x: the only reflexive element is 0
        let c = finite::three_chain();
        let mut prec = vec![vec![false; 3]; 3];
        for j in 0..3 {
            prec[0][j] = true;
        }
        let q = QSemigroup::new(c, prec).unwrap();
        let r = brute_tau(&q).unwrap();
        assert_eq!(r.carrier.size(), 1);
    }

    #[test]
    fn tau_of_singleton() {
        let c = finite::zero_carrier();
        let q = QSemigroup::new(c, vec![vec![true]]).unwrap();
        let r = brute_tau(&q).unwrap();
        assert_eq!(r.carrier.size(), 1);
    }

    #[test]
    fn tau_validates_hom_collapse() {
        // ⟦S,T⟧ ≅ Cu[S,T] on finite carriers: τ of the hom carrier with
        // ≺ = pointwise order is the hom carrier itself
        let s = finite::two_chain();
        let t = finite::three_chain();
        let (hom, mors) = hom_carrier(&s, &t).unwrap();
        let q = QSemigroup::new(hom.clone(), hom.leq.clone()).unwrap();
        let r = brute_tau(&q).unwrap();
        assert_eq!(r.carrier.size(), mors.len());
        assert_eq!(r.carrier.canonical_key(), hom.canonical_key());
    }
}
