//! Finite Cu-semigroups given by explicit tables.
//!
//! A finite positively ordered monoid is automatically a Cu-semigroup: every
//! increasing sequence stabilizes, so suprema exist, way-below coincides with
//! the order, and the remaining axioms reduce to monotonicity of addition.
//! All structural requirements are checked exhaustively at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteCu {
    /// Element names, index 0 is the zero element.
    pub names: Vec<String>,
    /// add[i][j] = index of names[i] + names[j]
    pub add: Vec<Vec<usize>>,
    /// leq[i][j] = (names[i] <= names[j])
    pub leq: Vec<Vec<bool>>,
}

impl fmt::Debug for FiniteCu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "finite{{{}}}", self.names.join(","))
    }
}

impl FiniteCu {
    pub fn new(names: Vec<String>, add: Vec<Vec<usize>>, leq: Vec<Vec<bool>>) -> Result<Arc<FiniteCu>> {
        let c = FiniteCu { names, add, leq };
        c.validate()?;
        Ok(Arc::new(c))
    }

    /// Builds from tables without names; elements are named e0, e1, ...
    pub fn from_tables(add: Vec<Vec<usize>>, leq: Vec<Vec<bool>>) -> Result<Arc<FiniteCu>> {
        let names = (0..add.len()).map(|i| format!("e{i}")).collect();
        FiniteCu::new(names, add, leq)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        if n == 0 {
            return Err(Error::Invalid("empty carrier".into()));
        }
        if self.add.len() != n
            || self.add.iter().any(|r| r.len() != n)
            || self.leq.len() != n
            || self.leq.iter().any(|r| r.len() != n)
        {
            return Err(Error::Invalid("table dimensions do not match".into()));
        }
        if self.add.iter().flatten().any(|&v| v >= n) {
            return Err(Error::Invalid("addition table entry out of range".into()));
        }
        // partial order
        for i in 0..n {
            if !self.leq[i][i] {
                return Err(Error::Invalid(format!("order not reflexive at {}", self.names[i])));
            }
            for j in 0..n {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return Err(Error::Invalid(format!(
                        "order not antisymmetric at {},{}",
                        self.names[i], self.names[j]
                    )));
                }
                for k in 0..n {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        return Err(Error::Invalid(format!(
                            "order not transitive at {},{},{}",
                            self.names[i], self.names[j], self.names[k]
                        )));
                    }
                }
            }
        }
        // commutative monoid with neutral 0
        for i in 0..n {
            if self.add[0][i] != i || self.add[i][0] != i {
                return Err(Error::Invalid(format!("0 not neutral at {}", self.names[i])));
            }
            if !self.leq[0][i] {
                return Err(Error::Invalid(format!("0 not below {}", self.names[i])));
            }
            for j in 0..n {
                if self.add[i][j] != self.add[j][i] {
                    return Err(Error::Invalid("addition not commutative".into()));
                }
                for k in 0..n {
                    if self.add[self.add[i][j]][k] != self.add[i][self.add[j][k]] {
                        return Err(Error::Invalid("addition not associative".into()));
                    }
                }
            }
        }
        // monotone addition
        for a in 0..n {
            for b in 0..n {
                if !self.leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if !self.leq[self.add[a][c]][self.add[b][c]] {
                        return Err(Error::Invalid(format!(
                            "addition not monotone: {} <= {} but {}+{} !<= {}+{}",
                            self.names[a],
                            self.names[b],
                            self.names[a],
                            self.names[c],
                            self.names[b],
                            self.names[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Least upper bound of a set of elements, when it exists.
    pub fn sup_of(&self, items: &[usize]) -> Option<usize> {
        let n = self.size();
        let mut best: Option<usize> = None;
        'cand: for c in 0..n {
            for &i in items {
                if !self.leq[i][c] {
                    continue 'cand;
                }
            }
            best = match best {
                None => Some(c),
                Some(b) if self.leq[c][b] => Some(c),
                other => other,
            };
        }
        // verify least
        let b = best?;
        for c in 0..n {
            if items.iter().all(|&i| self.leq[i][c]) && !self.leq[b][c] {
                return None;
            }
        }
        Some(b)
    }

    /// Canonical form under permutations fixing the zero element:
    /// the lexicographically smallest (add, leq) table pair.
    pub fn canonical_key(&self) -> (Vec<usize>, Vec<bool>) {
        let n = self.size();
        let mut best: Option<(Vec<usize>, Vec<bool>)> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permute_rest(&mut perm, 1, &mut |p| {
            let mut inv = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            let mut add_key = Vec::with_capacity(n * n);
            let mut leq_key = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    add_key.push(inv[self.add[p[i]][p[j]]]);
                    leq_key.push(self.leq[p[i]][p[j]]);
                }
            }
            let key = (add_key, leq_key);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        });
        best.unwrap()
    }
}

fn permute_rest(perm: &mut Vec<usize>, from: usize, f: &mut impl FnMut(&[usize])) {
    if from >= perm.len() {
        f(perm);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        permute_rest(perm, from + 1, f);
        perm.swap(from, i);
    }
}

/// The one- and two-element carriers used all over the tests.
pub fn zero_carrier() -> Arc<FiniteCu> {
    FiniteCu::new(vec!["0".into()], vec![vec![0]], vec![vec![true]]).unwrap()
}

pub fn two_chain() -> Arc<FiniteCu> {
    // {0, u} with u + u = u
    FiniteCu::new(
        vec!["0".into(), "u".into()],
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![true, true], vec![false, true]],
    )
    .unwrap()
}

/// {0, a, inf}: a + a = inf, inf absorbing.
pub fn three_chain() -> Arc<FiniteCu> {
    FiniteCu::new(
        vec!["0".into(), "a".into(), "inf".into()],
        vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
        vec![
            vec![true, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_carriers_construct() {
        zero_carrier();
        two_chain();
        three_chain();
    }

    #[test]
    fn rejects_non_monotone_add() {
        // {0, a, b} incomparable a,b with a+a=b, a+b=a is not monotone/associative
        let r = FiniteCu::new(
            vec!["0".into(), "a".into(), "b".into()],
            vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 2]],
            vec![
                vec![true, true, true],
                vec![false, true, true],
                vec![false, false, true],
            ],
        );
        assert!(r.is_err());
    }

    #[test]
    fn rejects_missing_zero_bottom() {
        let r = FiniteCu::new(
            vec!["0".into(), "u".into()],
            vec![vec![0, 1], vec![1, 1]],
            vec![vec![true, false], vec![false, true]],
        );
        assert!(r.is_err());
    }

    #[test]
    fn sup_on_chain() {
        let c = three_chain();
        assert_eq!(c.sup_of(&[0, 1]), Some(1));
        assert_eq!(c.sup_of(&[1, 2]), Some(2));
        assert_eq!(c.sup_of(&[0]), Some(0));
    }

    #[test]
    fn canonical_key_invariant_under_relabel() {
        let a = FiniteCu::new(
            vec!["0".into(), "x".into(), "y".into()],
            vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
            vec![
                vec![true, true, true],
                vec![false, true, true],
                vec![false, false, true],
            ],
        )
        .unwrap();
        // same carrier with the two nonzero elements swapped
        let b = FiniteCu::new(
            vec!["0".into(), "x".into(), "y".into()],
            vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 1]],
            vec![
                vec![true, true, true],
                vec![false, true, false],
                vec![false, true, true],
            ],
        )
        .unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
    }
}
