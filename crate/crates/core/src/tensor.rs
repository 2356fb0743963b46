//! Closed-form tensor products.
//!
//! Only the instances the library can present concretely are implemented:
//! the tensor unit absorbs (`S ⊗ extnat ≅ S ≅ extnat ⊗ S`), tuples multiply
//! out (`extnat^k ⊗ extnat^l ≅ extnat^(kl)`, row-major), `pbar` is solid
//! (`pbar ⊗ pbar ≅ pbar`), and `m1 ⊗ pbar ≅ pbar` by softening the first
//! factor. Each instance records its canonical bimorphism into the closed
//! form; the general universal construction is out of scope.

use crate::carrier::{Carrier, Value};
use crate::error::{Error, Result};
use crate::scalar::ExtNat;

/// How a supported tensor `S ⊗ T` is presented as a concrete carrier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TensorRule {
    /// `extnat ⊗ T ≅ T`: `n ⊗ b = n*b`.
    UnitLeft,
    /// `S ⊗ extnat ≅ S`: `a ⊗ n = n*a`.
    UnitRight,
    /// `extnat^k ⊗ extnat^l ≅ extnat^(kl)`: `(a ⊗ b)[(i-1)l + j] = a_i * b_j`.
    VecKron { k: usize, l: usize },
    /// `pbar ⊗ pbar ≅ pbar`: `a ⊗ b = a*b` (solidity of `pbar`).
    PBarMul,
    /// `m1 ⊗ pbar ≅ pbar`: `x ⊗ b = value(x)*b`.
    M1PBar,
    /// `pbar ⊗ m1 ≅ pbar`: `b ⊗ x = b*value(x)`.
    PBarM1,
}

/// A supported closed-form tensor `left ⊗ right ≅ carrier`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorHandle {
    pub left: Carrier,
    pub right: Carrier,
    pub carrier: Carrier,
    pub rule: TensorRule,
}

/// Looks up a closed form for `s ⊗ t`.
pub fn tensor(s: &Carrier, t: &Carrier) -> Result<TensorHandle> {
    let rule = match (s, t) {
        (Carrier::Vec(k), Carrier::Vec(l)) => TensorRule::VecKron { k: *k, l: *l },
        (Carrier::Vec(1), _) => TensorRule::UnitLeft,
        (_, Carrier::Vec(1)) => TensorRule::UnitRight,
        (Carrier::PBar, Carrier::PBar) => TensorRule::PBarMul,
        (Carrier::M1, Carrier::PBar) => TensorRule::M1PBar,
        (Carrier::PBar, Carrier::M1) => TensorRule::PBarM1,
        _ => {
            return Err(Error::Unsupported(format!(
                "no closed-form tensor for {s} ⊗ {t}"
            )))
        }
    };
    let carrier = match &rule {
        TensorRule::UnitLeft => t.clone(),
        TensorRule::UnitRight => s.clone(),
        TensorRule::VecKron { k, l } => Carrier::Vec(k * l),
        TensorRule::PBarMul | TensorRule::M1PBar | TensorRule::PBarM1 => Carrier::PBar,
    };
    Ok(TensorHandle { left: s.clone(), right: t.clone(), carrier, rule })
}

impl TensorHandle {
    /// The canonical bimorphism: the image of the simple tensor `a ⊗ b`.
    pub fn elem(&self, a: &Value, b: &Value) -> Result<Value> {
        self.left.contains(a)?;
        self.right.contains(b)?;
        Ok(match &self.rule {
            TensorRule::UnitLeft => self.right.mul_nat(a.as_vec()?[0], b)?,
            TensorRule::UnitRight => self.left.mul_nat(b.as_vec()?[0], a)?,
            TensorRule::VecKron { .. } => {
                let (xs, ys) = (a.as_vec()?, b.as_vec()?);
                let mut out = Vec::with_capacity(xs.len() * ys.len());
                for x in xs {
                    for y in ys {
                        out.push(x.mul(*y));
                    }
                }
                Value::Vec(out)
            }
            TensorRule::PBarMul => Value::Rat(a.as_rat()?.mul(b.as_rat()?)),
            TensorRule::M1PBar => Value::Rat(a.as_pair()?.value.mul(b.as_rat()?)),
            TensorRule::PBarM1 => Value::Rat(a.as_rat()?.mul(&b.as_pair()?.value)),
        })
    }
}

/// The row-major index of `(i, j)` in `extnat^k ⊗ extnat^l ≅ extnat^(kl)`.
pub fn kron_index(l: usize, i: usize, j: usize) -> usize {
    i * l + j
}

/// Standard basis vector `e_i` of `extnat^k`.
pub fn basis(k: usize, i: usize) -> Value {
    let mut v = vec![ExtNat::ZERO; k];
    v[i] = ExtNat::ONE;
    Value::Vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_absorption() {
        let h = tensor(&Carrier::Vec(1), &Carrier::PBar).unwrap();
        assert_eq!(h.carrier, Carrier::PBar);
        let v = h
            .elem(&Value::nat(3), &Value::Rat("1/2".parse().unwrap()))
            .unwrap();
        assert_eq!(v, Value::Rat("3/2".parse().unwrap()));
    }

    #[test]
    fn vec_kron_is_outer_product() {
        let h = tensor(&Carrier::Vec(2), &Carrier::Vec(2)).unwrap();
        assert_eq!(h.carrier, Carrier::Vec(4));
        let a = Value::Vec(vec![ExtNat::Fin(1), ExtNat::Fin(2)]);
        let b = Value::Vec(vec![ExtNat::Fin(3), ExtNat::Inf]);
        let v = h.elem(&a, &b).unwrap();
        assert_eq!(
            v,
            Value::Vec(vec![ExtNat::Fin(3), ExtNat::Inf, ExtNat::Fin(6), ExtNat::Inf])
        );
    }

    #[test]
    fn bimorphism_conditions_sampled() {
        // additive and monotone in each variable, jointly way-below preserving
        let h = tensor(&Carrier::PBar, &Carrier::PBar).unwrap();
        let grid = Carrier::PBar.grid(4, 3);
        for a in &grid {
            for b in &grid {
                let ab = h.elem(a, b).unwrap();
                for a2 in &grid {
                    let sum = h
                        .carrier
                        .add(&ab, &h.elem(a2, b).unwrap())
                        .unwrap();
                    let joint = h
                        .elem(&Carrier::PBar.add(a, a2).unwrap(), b)
                        .unwrap();
                    assert!(h.carrier.eq(&sum, &joint).unwrap());
                }
            }
        }
        // joint way-below on a small grid
        let small = Carrier::PBar.grid(2, 2);
        for a1 in &small {
            for a in &small {
                if !Carrier::PBar.way_below(a1, a).unwrap() {
                    continue;
                }
                for b1 in &small {
                    for b in &small {
                        if Carrier::PBar.way_below(b1, b).unwrap() {
                            let lhs = h.elem(a1, b1).unwrap();
                            let rhs = h.elem(a, b).unwrap();
                            assert!(
                                h.carrier.way_below(&lhs, &rhs).unwrap(),
                                "{a1}⊗{b1} not << {a}⊗{b}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unsupported_pairs_refuse() {
        assert!(tensor(&Carrier::M1, &Carrier::M1).is_err());
        assert!(tensor(&Carrier::Trunc, &Carrier::Trunc).is_err());
    }
}
