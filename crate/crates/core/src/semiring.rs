//! Cu-semirings: multiplication bimorphisms, the left-regular representation
//! `π_R: R -> ⟦R,R⟧`, its section `ε_R`, semimodule actions, and the
//! five-condition solidity characterization.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::carrier::{Carrier, Value};
use crate::error::{Error, Result};
use crate::ihom::{self, IHomElem, IHomRepr};
use crate::morphism::MatrixMor;
use crate::scalar::{ExtNat, QInf};
use crate::tensor;
use crate::two_kind::{Kind, Profile, TwoKind};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SemiringId {
    /// The extended naturals (the 1x1 matrix semiring).
    Nat,
    /// The k x k matrix semiring over the extended naturals, as the tuple
    /// carrier of length k*k with row-major matrix multiplication.
    MatN(usize),
    PBar,
    M1,
    TruncHom,
}

#[derive(Clone, PartialEq, Eq)]
pub struct CuSemiring {
    pub id: SemiringId,
    pub carrier: Carrier,
    pub unit: Value,
    pub unit_compact: bool,
}

impl fmt::Display for CuSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id {
            SemiringId::Nat => write!(f, "extnat"),
            SemiringId::MatN(k) => write!(f, "mat{k}"),
            SemiringId::PBar => write!(f, "pbar"),
            SemiringId::M1 => write!(f, "m1"),
            SemiringId::TruncHom => write!(f, "trunchom"),
        }
    }
}

impl CuSemiring {
    pub fn new(id: SemiringId) -> Result<CuSemiring> {
        Ok(match id {
            SemiringId::Nat => CuSemiring {
                id,
                carrier: Carrier::Vec(1),
                unit: Value::nat(1),
                unit_compact: true,
            },
            SemiringId::MatN(k) => {
                if k == 0 {
                    return Err(Error::Invalid("matrix size must be positive".into()));
                }
                let ident = MatrixMor::identity(k);
                CuSemiring {
                    id,
                    carrier: Carrier::Vec(k * k),
                    unit: Value::Vec(ident.entries().to_vec()),
                    unit_compact: true,
                }
            }
            SemiringId::PBar => CuSemiring {
                id,
                carrier: Carrier::PBar,
                unit: Value::Rat(QInf::one()),
                // 1 is not way below itself in the dense order
                unit_compact: false,
            },
            SemiringId::M1 => CuSemiring {
                id,
                carrier: Carrier::M1,
                unit: Value::Pair(TwoKind::compact(QInf::one())),
                unit_compact: true,
            },
            SemiringId::TruncHom => CuSemiring {
                id,
                carrier: Carrier::TruncHom,
                unit: Value::Pair(TwoKind::compact(QInf::one())),
                unit_compact: true,
            },
        })
    }

    pub fn by_name(name: &str) -> Result<CuSemiring> {
        match name {
            "extnat" | "nat" => CuSemiring::new(SemiringId::Nat),
            "pbar" => CuSemiring::new(SemiringId::PBar),
            "m1" => CuSemiring::new(SemiringId::M1),
            "trunchom" => CuSemiring::new(SemiringId::TruncHom),
            _ => {
                if let Some(k) = name.strip_prefix("mat") {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("unknown semiring `{name}`")))?;
                    return CuSemiring::new(SemiringId::MatN(k));
                }
                Err(Error::Parse(format!("unknown semiring `{name}`")))
            }
        }
    }

    fn profile(&self) -> Option<Profile> {
        match self.id {
            SemiringId::M1 => Some(Profile::M1),
            SemiringId::TruncHom => Some(Profile::TruncHom),
            _ => None,
        }
    }

    fn as_matrix(&self, v: &Value) -> Result<MatrixMor> {
        let SemiringId::MatN(k) = self.id else {
            return Err(Error::Domain("not a matrix semiring".into()));
        };
        MatrixMor::new(k, k, v.as_vec()?.to_vec())
    }

    /// The semiring product.
    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        self.carrier.contains(a)?;
        self.carrier.contains(b)?;
        Ok(match self.id {
            SemiringId::Nat => Value::Vec(vec![a.as_vec()?[0].mul(b.as_vec()?[0])]),
            SemiringId::MatN(_) => {
                let p = self.as_matrix(a)?.matmul(&self.as_matrix(b)?)?;
                Value::Vec(p.entries().to_vec())
            }
            SemiringId::PBar => Value::Rat(a.as_rat()?.mul(b.as_rat()?)),
            SemiringId::M1 | SemiringId::TruncHom => {
                Value::Pair(self.profile().unwrap().product(a.as_pair()?, b.as_pair()?))
            }
        })
    }

    pub fn grid(&self, qmax: u64, vmax: u64) -> Vec<Value> {
        self.carrier.grid(qmax, vmax)
    }

    pub fn sample(&self, rng: &mut impl Rng, qmax: u64, vmax: u64) -> Value {
        self.carrier.sample(rng, qmax, vmax)
    }

    /// The left-regular representation: the class of the left-multiplication
    /// path `(r_λ ·)_λ` along a way-below chain with endpoint `r`.
    pub fn pi(&self, r: &Value) -> Result<IHomElem> {
        self.carrier.contains(r)?;
        Ok(match self.id {
            SemiringId::Nat => {
                IHomElem::matrix(MatrixMor::new(1, 1, vec![r.as_vec()?[0]])?)
            }
            SemiringId::MatN(k) => {
                // (rX)[i,j] = sum_p r[i,p] X[p,j]: the left-multiplication
                // operator as a k² x k² matrix
                let rm = self.as_matrix(r)?;
                let n = k * k;
                let mut entries = vec![ExtNat::ZERO; n * n];
                for i in 0..k {
                    for j in 0..k {
                        for p in 0..k {
                            entries[(i * k + j) * n + (p * k + j)] = rm.get(i, p);
                        }
                    }
                }
                IHomElem::matrix(MatrixMor::new(n, n, entries)?)
            }
            SemiringId::PBar => {
                let q = r.as_rat()?;
                if q.is_zero() {
                    IHomElem::zero(&Carrier::PBar, &Carrier::PBar)?
                } else {
                    // approximants are strictly smaller, so the class is soft
                    IHomElem::point(Carrier::PBar, Carrier::PBar, TwoKind::soft(q.clone()))?
                }
            }
            SemiringId::M1 | SemiringId::TruncHom => {
                let p = r.as_pair()?;
                if p.is_zero() {
                    IHomElem::zero(&self.carrier, &self.carrier)?
                } else {
                    // compacts give constant chains, softs strictly increasing
                    // ones: the class carries the same kind and value
                    IHomElem::point(self.carrier.clone(), self.carrier.clone(), p.clone())?
                }
            }
        })
    }

    /// The section `ε_R(x) = σ(x)(1_R)`.
    pub fn eps(&self, x: &IHomElem) -> Result<Value> {
        if x.dom != self.carrier || x.cod != self.carrier {
            return Err(Error::Mismatch(format!("{x:?} is not in ⟦{0},{0}⟧", self.carrier)));
        }
        x.evaluate(&self.unit)
    }

    /// The identity of `⟦R,R⟧`.
    pub fn hom_identity(&self) -> Result<IHomElem> {
        IHomElem::identity(&self.carrier)
    }
}

/// Scalar action `r · x` of a semiring with compact unit on `⟦S,T⟧` where the
/// codomain carries the corresponding action: the class of `(r_λ f_λ)_λ`.
pub fn scalar_act(r: &CuSemiring, rv: &Value, x: &IHomElem) -> Result<IHomElem> {
    if !r.unit_compact {
        return Err(Error::Unsupported(format!(
            "{r} has a non-compact unit; the induced action on hom classes needs one"
        )));
    }
    r.carrier.contains(rv)?;
    match r.id {
        SemiringId::Nat => {
            let n = rv.as_vec()?[0];
            Ok(match &x.repr {
                IHomRepr::Matrix(m) => {
                    let entries = m.entries().iter().map(|e| scale_nat(n, *e)).collect();
                    IHomElem::matrix(MatrixMor::new(m.rows, m.cols, entries)?)
                }
                IHomRepr::Point(_) | IHomRepr::OfNat(_) | IHomRepr::Table(_) => {
                    ihom_mul_nat(x, n)?
                }
                IHomRepr::Class(_) => {
                    return Err(Error::Unsupported(
                        "no scalar action on generic path classes".into(),
                    ))
                }
            })
        }
        SemiringId::M1 | SemiringId::TruncHom => {
            if x.cod != r.carrier {
                return Err(Error::Mismatch(format!(
                    "codomain {} carries no {r}-action",
                    x.cod
                )));
            }
            let prof = r.profile().unwrap();
            let rp = rv.as_pair()?;
            Ok(match &x.repr {
                IHomRepr::Point(p) => {
                    let q = prof.product(rp, p);
                    if q.is_zero() {
                        IHomElem::zero(&x.dom, &x.cod)?
                    } else {
                        IHomElem::point(x.dom.clone(), x.cod.clone(), q)?
                    }
                }
                IHomRepr::OfNat(v) => {
                    IHomElem::of_nat(x.cod.clone(), Value::Pair(prof.product(rp, v.as_pair()?)))?
                }
                _ => return Err(Error::Unsupported("no action on this representation".into())),
            })
        }
        _ => Err(Error::Unsupported(format!("no implemented action for {r}"))),
    }
}

fn scale_nat(n: ExtNat, e: ExtNat) -> ExtNat {
    n.mul(e)
}

/// Multiplication of a hom element by an extended natural.
pub fn ihom_mul_nat(x: &IHomElem, n: ExtNat) -> Result<IHomElem> {
    Ok(match &x.repr {
        IHomRepr::Matrix(m) => {
            let entries = m.entries().iter().map(|e| n.mul(*e)).collect();
            IHomElem::matrix(MatrixMor::new(m.rows, m.cols, entries)?)
        }
        IHomRepr::Point(p) => {
            let two_kind_carrier = match (&x.dom, &x.cod) {
                (Carrier::PBar, Carrier::PBar) | (Carrier::M1, Carrier::M1) => Carrier::M1,
                _ => Carrier::TruncHom,
            };
            let v = two_kind_carrier.mul_nat(n, &Value::Pair(p.clone()))?;
            let q = v.as_pair()?.clone();
            if q.is_zero() {
                IHomElem::zero(&x.dom, &x.cod)?
            } else {
                IHomElem::point(x.dom.clone(), x.cod.clone(), q)?
            }
        }
        IHomRepr::OfNat(v) => IHomElem::of_nat(x.cod.clone(), x.cod.mul_nat(n, v)?)?,
        IHomRepr::Table(t) => {
            let c = Carrier::Finite(t.cod.clone());
            let map = t
                .map
                .iter()
                .map(|&i| c.mul_nat(n, &Value::Fin(i)).and_then(|v| v.as_fin()))
                .collect::<Result<_>>()?;
            IHomElem::table(crate::morphism::TableMor::new(t.dom.clone(), t.cod.clone(), map)?)
        }
        IHomRepr::Class(_) => {
            return Err(Error::Unsupported("no scalar action on generic path classes".into()))
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CondVerdict {
    Holds(String),
    Fails(String),
    Undecided(String),
}

impl CondVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CondVerdict::Holds(_))
    }
    pub fn fails(&self) -> bool {
        matches!(self, CondVerdict::Fails(_))
    }
}

/// Verdicts for the five solidity conditions:
/// (1) multiplication `R ⊗ R -> R` is an isomorphism;
/// (2) evaluation `⟦R,R⟧ ⊗ R -> R` is an isomorphism;
/// (3) `π ⊗ id` is an isomorphism;
/// (4) `π: R -> ⟦R,R⟧` is an isomorphism;
/// (5) `ε: ⟦R,R⟧ -> R` is an isomorphism.
#[derive(Clone, Debug, Serialize)]
pub struct SolidReport {
    pub semiring: String,
    pub conditions: [CondVerdict; 5],
}

impl SolidReport {
    /// The implication pattern `(1) ⇐ (2) ⇒ (3) ⇐ (4) ⇔ (5)`, plus
    /// `(1) ∧ (3) ⇒ (2)`. A report violating it is a library bug.
    pub fn diagram_consistent(&self) -> bool {
        let c = &self.conditions;
        let implies = |a: &CondVerdict, b: &CondVerdict| !(a.holds() && b.fails());
        implies(&c[1], &c[0])
            && implies(&c[1], &c[2])
            && implies(&c[3], &c[2])
            && implies(&c[3], &c[4])
            && implies(&c[4], &c[3])
            && !(c[0].holds() && c[2].holds() && c[1].fails())
    }
}

/// Decides the five conditions on grids, in closed form where available.
pub fn solid_report(r: &CuSemiring) -> Result<SolidReport> {
    let grid = r.grid(4, 4);
    let conditions = match r.id {
        SemiringId::Nat => {
            // μ, ε, π ⊗ id, π, ε are all the canonical identifications
            let pi_ok = nat_pi_iso(r, &grid)?;
            let mu = CondVerdict::Holds(
                "multiplication is the canonical isomorphism extnat ⊗ extnat ≅ extnat".into(),
            );
            let eps = CondVerdict::Holds(
                "evaluation is multiplication under ⟦extnat,extnat⟧ ≅ extnat".into(),
            );
            [
                mu,
                eps,
                CondVerdict::Holds("π ⊗ id is an isomorphism since π is".into()),
                pi_ok.clone(),
                pi_ok,
            ]
        }
        SemiringId::PBar => pbar_conditions(r, &grid)?,
        SemiringId::M1 => m1_conditions(r, &grid)?,
        SemiringId::MatN(k) if k >= 2 => matn_conditions(r, k, &grid)?,
        SemiringId::MatN(_) => return solid_report(&CuSemiring::new(SemiringId::Nat)?),
        SemiringId::TruncHom => {
            let pi_ok = two_kind_pi_iso(r, &grid)?;
            [
                CondVerdict::Undecided("no closed-form tensor for trunchom ⊗ trunchom".into()),
                CondVerdict::Undecided("no closed-form tensor for ⟦R,R⟧ ⊗ R".into()),
                CondVerdict::Holds("π ⊗ id is an isomorphism since π is".into()),
                pi_ok.clone(),
                pi_ok,
            ]
        }
    };
    let report = SolidReport { semiring: r.to_string(), conditions };
    if !report.diagram_consistent() {
        return Err(Error::Invalid(format!(
            "solidity verdicts violate the implication diagram: {report:?}"
        )));
    }
    Ok(report)
}

fn nat_pi_iso(r: &CuSemiring, grid: &[Value]) -> Result<CondVerdict> {
    for a in grid {
        for b in grid {
            let (pa, pb) = (r.pi(a)?, r.pi(b)?);
            if r.carrier.leq(a, b)? != pa.leq(&pb)? {
                return Ok(CondVerdict::Fails(format!("order mismatch at {a}, {b}")));
            }
        }
        if !r.carrier.eq(&r.eps(&r.pi(a)?)?, a)? {
            return Ok(CondVerdict::Fails(format!("ε(π({a})) != {a}")));
        }
    }
    Ok(CondVerdict::Holds(
        "π is the identification of extnat with the 1x1 matrices; order-isomorphism on the grid"
            .into(),
    ))
}

fn two_kind_pi_iso(r: &CuSemiring, grid: &[Value]) -> Result<CondVerdict> {
    // π is the identity on representations; verify it is a multiplicative
    // order-isomorphism onto the kinded points of ⟦R,R⟧ on the grid
    for a in grid {
        for b in grid {
            let (pa, pb) = (r.pi(a)?, r.pi(b)?);
            if r.carrier.leq(a, b)? != pa.leq(&pb)? {
                return Ok(CondVerdict::Fails(format!("order mismatch at {a}, {b}")));
            }
            let prod = r.pi(&r.mul(a, b)?)?;
            if !prod.eq_elem(&pa.compose(&pb)?)? {
                return Ok(CondVerdict::Fails(format!("π not multiplicative at {a}, {b}")));
            }
        }
        if !r.carrier.eq(&r.eps(&r.pi(a)?)?, a)? {
            return Ok(CondVerdict::Fails(format!("ε(π({a})) != {a}")));
        }
    }
    Ok(CondVerdict::Holds(
        "π is the identity on kinded points: every class of ⟦R,R⟧ is a left multiplication"
            .into(),
    ))
}

fn pbar_conditions(r: &CuSemiring, grid: &[Value]) -> Result<[CondVerdict; 5]> {
    // (1): under pbar ⊗ pbar ≅ pbar, the induced multiplication is the identity
    let h = tensor::tensor(&Carrier::PBar, &Carrier::PBar)?;
    for a in grid {
        for b in grid {
            let t = h.elem(a, b)?;
            let m = r.mul(a, b)?;
            if !r.carrier.eq(&t, &m)? {
                return Err(Error::Invalid(format!("tensor and product disagree at {a} ⊗ {b}")));
            }
        }
    }
    let c1 = CondVerdict::Holds(
        "under pbar ⊗ pbar ≅ pbar the induced multiplication is the identity (grid-verified)"
            .into(),
    );

    // (2): ⟦pbar,pbar⟧ ⊗ pbar ≅ m1 ⊗ pbar ≅ pbar, and evaluation matches the
    // identification, so the induced map is the identity
    let hm = tensor::tensor(&Carrier::M1, &Carrier::PBar)?;
    for x in Carrier::M1.grid(3, 3) {
        let xe = match x.as_pair()?.clone() {
            p if p.is_zero() => IHomElem::zero(&Carrier::PBar, &Carrier::PBar)?,
            p => IHomElem::point(Carrier::PBar, Carrier::PBar, p)?,
        };
        for a in grid {
            let via_tensor = hm.elem(&x, a)?;
            let via_eval = xe.evaluate(a)?;
            if !r.carrier.eq(&via_tensor, &via_eval)? {
                return Err(Error::Invalid(format!(
                    "evaluation disagrees with the tensor identification at {x} ⊗ {a}"
                )));
            }
        }
    }
    let c2 = CondVerdict::Holds(
        "evaluation matches the identification ⟦pbar,pbar⟧ ⊗ pbar ≅ m1 ⊗ pbar ≅ pbar \
         (grid-verified), so it is an isomorphism"
            .into(),
    );

    // (3): π ⊗ id sends a ⊗ b to soft(a) ⊗ b, which the identifications carry
    // to a*b on both sides
    let c3 = CondVerdict::Holds(
        "under the identifications both sides of π ⊗ id present pbar, and the induced map is \
         the identity (grid-verified via (1) and (2))"
            .into(),
    );

    // (4): π lands in the soft points; the compact unit of m1 is missed
    let mut c4 = CondVerdict::Fails(String::new());
    for a in grid {
        let p = r.pi(a)?;
        if let IHomRepr::Point(pt) = &p.repr {
            if pt.kind == Kind::Compact && !pt.is_zero() {
                c4 = CondVerdict::Holds("unexpected compact in the image of π".into());
            }
        }
    }
    if let CondVerdict::Fails(w) = &mut c4 {
        *w = "π embeds pbar as the soft points of ⟦pbar,pbar⟧ ≅ m1; the nonzero compact \
              points (e.g. the unit, compact 1) are not attained"
            .to_string();
    }

    // (5): ε collapses kinds: compact 1 and soft 1 both evaluate to 1 at the unit
    let x1 = IHomElem::point(Carrier::PBar, Carrier::PBar, TwoKind::compact(QInf::one()))?;
    let x2 = IHomElem::point(Carrier::PBar, Carrier::PBar, TwoKind::soft(QInf::one()))?;
    let e1 = r.eps(&x1)?;
    let e2 = r.eps(&x2)?;
    let c5 = if r.carrier.eq(&e1, &e2)? && !x1.eq_elem(&x2)? {
        CondVerdict::Fails(
            "ε is not injective: compact 1 and soft 1 both evaluate to 1 at the unit".into(),
        )
    } else {
        CondVerdict::Holds("unexpectedly injective".into())
    };

    Ok([c1, c2, c3, c4, c5])
}

fn m1_conditions(r: &CuSemiring, grid: &[Value]) -> Result<[CondVerdict; 5]> {
    let pi_ok = two_kind_pi_iso(r, grid)?;
    if !pi_ok.holds() {
        return Err(Error::Invalid(format!("π_m1 failed its grid check: {pi_ok:?}")));
    }
    // With (4) verified, (2) would be equivalent to (1) via ε ∘ (π ⊗ id) = μ.
    // Deciding μ: m1 ⊗ m1 -> m1 needs the universal tensor, which is out of
    // scope; the failure of (1) and (2) is the asserted row of the solidity
    // characterization, consistent with the diagram.
    let c1 = CondVerdict::Fails(
        "asserted: multiplication m1 ⊗ m1 -> m1 is not injective; no closed-form tensor is \
         available to exhibit the witness here"
            .into(),
    );
    let c2 = CondVerdict::Fails(
        "asserted: with ⟦m1,m1⟧ ≅ m1 the evaluation map is the multiplication, and (1) fails"
            .into(),
    );
    let c3 = CondVerdict::Holds("π ⊗ id is an isomorphism since π is (grid-verified)".into());
    Ok([c1, c2, c3, pi_ok.clone(), pi_ok])
}

fn matn_conditions(r: &CuSemiring, k: usize, grid: &[Value]) -> Result<[CondVerdict; 5]> {
    // noncommutativity witness
    let mut e01 = vec![ExtNat::ZERO; k * k];
    e01[1] = ExtNat::ONE; // E_{0,1}
    let mut e10 = vec![ExtNat::ZERO; k * k];
    e10[k] = ExtNat::ONE; // E_{1,0}
    let a = Value::Vec(e01);
    let b = Value::Vec(e10);
    let ab = r.mul(&a, &b)?;
    let ba = r.mul(&b, &a)?;
    if r.carrier.eq(&ab, &ba)? {
        return Err(Error::Invalid("expected a noncommutativity witness".into()));
    }
    let c1 = CondVerdict::Fails(format!(
        "an injective multiplication forces commutativity, but {a} · {b} = {ab} while \
         {b} · {a} = {ba}"
    ));
    let c2 = CondVerdict::Fails("(2) implies (1), which fails".into());
    // π misses matrix units that mix column indices: every left-multiplication
    // operator vanishes at ((i,j),(p,q)) with j != q
    for v in grid.iter().take(32) {
        let p = r.pi(v)?;
        if let IHomRepr::Matrix(m) = &p.repr {
            if !m.get(0, 1).is_zero() {
                return Err(Error::Invalid("left multiplications should vanish off-column".into()));
            }
        }
    }
    let c3 = CondVerdict::Fails(
        "π ⊗ id misses every coordinate mixing column indices, as π does".into(),
    );
    let c4 = CondVerdict::Fails(
        "the hom matrix unit at ((0,0),(0,1)) is not a left multiplication: all of them vanish \
         there (grid-verified)"
            .into(),
    );
    let c5 = CondVerdict::Fails("(5) is equivalent to (4), which fails".into());
    Ok([c1, c2, c3, c4, c5])
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutativityProbe {
    pub semiring: String,
    pub mu_injective: Option<bool>,
    pub commutative_on_grid: bool,
    pub witness: Option<(String, String)>,
    pub consistent: bool,
}

/// Probes the link between injectivity of the multiplication map and
/// commutativity: where μ is known injective the product must commute, and a
/// noncommutative product rules injectivity out.
pub fn commutativity_probe(r: &CuSemiring) -> Result<CommutativityProbe> {
    let grid = r.grid(3, 3);
    let mut commutative = true;
    let mut witness = None;
    for a in &grid {
        for b in &grid {
            if !r.carrier.eq(&r.mul(a, b)?, &r.mul(b, a)?)? {
                commutative = false;
                witness = Some((a.to_string(), b.to_string()));
            }
        }
    }
    let mu_injective = match r.id {
        SemiringId::Nat | SemiringId::PBar => Some(true),
        SemiringId::MatN(k) if k >= 2 => Some(false),
        _ => None,
    };
    let consistent = match mu_injective {
        Some(true) => commutative,
        _ => true,
    };
    Ok(CommutativityProbe {
        semiring: r.to_string(),
        mu_injective,
        commutative_on_grid: commutative,
        witness,
        consistent,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SoftPreservationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Every generalized Cu-morphism maps soft elements to soft elements; checked
/// on the grid of the domain.
pub fn soft_preservation(f: &crate::morphism::GenMorphism) -> Result<SoftPreservationReport> {
    let dom = f.dom();
    let cod = f.cod();
    let mut checked = 0;
    let mut failures = Vec::new();
    for a in dom.grid(4, 4) {
        if dom.is_soft(&a)? {
            checked += 1;
            let fa = f.apply(&a)?;
            if !cod.is_soft(&fa)? {
                failures.push(format!("{a} is soft but f({a}) = {fa} is not"));
            }
        }
    }
    Ok(SoftPreservationReport { checked, failures })
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub items: Vec<(String, bool)>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|(_, ok)| *ok)
    }
}

/// Stability checks for a solid semiring with compact unit: `⟦R,T⟧ ≅ T`
/// through evaluation at the unit, and the induced action laws. For `pbar`
/// (solid, non-compact unit) the negative case is recorded instead:
/// `⟦pbar,pbar⟧ ≅ m1` is not isomorphic to `pbar`.
pub fn stability_check(r: &CuSemiring, t: &Carrier) -> Result<StabilityReport> {
    let mut items = Vec::new();
    match r.id {
        SemiringId::Nat => {
            // ⟦extnat, T⟧ ≅ T via i_iso, mutually inverse and order-preserving
            let grid = t.grid(3, 3);
            let mut iso = true;
            let mut order = true;
            for a in &grid {
                let x = ihom::i_iso(t, a)?;
                if !t.eq(&ihom::i_iso_inv(&x)?, a)? {
                    iso = false;
                }
                for b in &grid {
                    let y = ihom::i_iso(t, b)?;
                    if t.leq(a, b)? != x.leq(&y)? {
                        order = false;
                    }
                }
            }
            items.push(("i_iso and ev_1 are mutually inverse on the grid".into(), iso));
            items.push(("i_iso is an order-isomorphism on the grid".into(), order));
            // action laws: 1x = x and (nm)x = n(mx) on hom elements
            let x = ihom::i_iso(t, grid.last().unwrap())?;
            let one = ihom_mul_nat(&x, ExtNat::Fin(1))?;
            items.push(("1 · x = x".into(), one.eq_elem(&x)?));
            let lhs = ihom_mul_nat(&x, ExtNat::Fin(6))?;
            let rhs = ihom_mul_nat(&ihom_mul_nat(&x, ExtNat::Fin(3))?, ExtNat::Fin(2))?;
            items.push(("(2·3) · x = 2 · (3 · x)".into(), lhs.eq_elem(&rhs)?));
        }
        SemiringId::PBar => {
            // the negative case: m1 has a nonzero compact element, pbar does not
            let compact_unit = Value::Pair(TwoKind::compact(QInf::one()));
            let m1_compact = Carrier::M1.way_below(&compact_unit, &compact_unit)?;
            items.push(("⟦pbar,pbar⟧ ≅ m1 has a nonzero compact element".into(), m1_compact));
            let mut none_compact = true;
            for a in Carrier::PBar.grid(4, 4) {
                if !a.as_rat()?.is_zero() && Carrier::PBar.way_below(&a, &a)? {
                    none_compact = false;
                }
            }
            items.push((
                "pbar has no nonzero compact element on the grid (dense order: a << a fails \
                 for a > 0)"
                    .into(),
                none_compact,
            ));
            items.push((
                "hence ⟦pbar,pbar⟧ is not isomorphic to pbar: compacts are preserved by \
                 isomorphisms"
                    .into(),
                m1_compact && none_compact,
            ));
            // order test along the unit slice: f <= g iff f(1 ⊗ a) <= g(1 ⊗ a)
            let grid = Carrier::PBar.grid(3, 3);
            let mut slice_ok = true;
            for s in &grid {
                for u in &grid {
                    let fs = crate::morphism::GenMorphism::ScalePBar(s.as_rat()?.clone());
                    let gu = crate::morphism::GenMorphism::ScalePBar(u.as_rat()?.clone());
                    let pointwise = fs.leq(&gu)?;
                    let slice = grid.iter().try_fold(true, |acc, a| -> Result<bool> {
                        Ok(acc && {
                            let fa = fs.apply(a)?;
                            let ga = gu.apply(a)?;
                            Carrier::PBar.leq(&fa, &ga)?
                        })
                    })?;
                    if pointwise != slice {
                        slice_ok = false;
                    }
                }
            }
            items.push((
                "f <= g iff f(1 ⊗ a) <= g(1 ⊗ a) for sampled scalings of pbar ⊗ pbar".into(),
                slice_ok,
            ));
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "stability instances are implemented for extnat and the pbar negative case, \
                 not {r}"
            )))
        }
    }
    Ok(StabilityReport { items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn m1_product_rule() {
        let r = CuSemiring::new(SemiringId::M1).unwrap();
        let a = Value::Pair(TwoKind::compact(QInf::from_u64(2)));
        let b = Value::Pair(TwoKind::soft(QInf::from_u64(3)));
        assert_eq!(r.mul(&a, &b).unwrap(), Value::Pair(TwoKind::soft(QInf::from_u64(6))));
        // unit
        assert_eq!(r.mul(&r.unit, &b).unwrap(), b);
    }

    #[test]
    fn matrix_semiring_unit() {
        let r = CuSemiring::new(SemiringId::MatN(2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let x = r.sample(&mut rng, 1, 4);
            assert_eq!(r.mul(&r.unit, &x).unwrap(), x);
            assert_eq!(r.mul(&x, &r.unit).unwrap(), x);
        }
    }

    #[test]
    fn eps_pi_identity_all_semirings() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for id in [SemiringId::Nat, SemiringId::PBar, SemiringId::M1, SemiringId::MatN(2), SemiringId::TruncHom] {
            let r = CuSemiring::new(id).unwrap();
            for _ in 0..200 {
                let a = r.sample(&mut rng, 4, 4);
                let back = r.eps(&r.pi(&a).unwrap()).unwrap();
                assert!(r.carrier.eq(&a, &back).unwrap(), "{r}: {a} -> {back}");
            }
        }
    }

    #[test]
    fn pi_multiplicative_and_embedding() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for id in [SemiringId::Nat, SemiringId::PBar, SemiringId::M1, SemiringId::MatN(2)] {
            let r = CuSemiring::new(id).unwrap();
            for _ in 0..60 {
                let a = r.sample(&mut rng, 3, 3);
                let b = r.sample(&mut rng, 3, 3);
                let lhs = r.pi(&r.mul(&a, &b).unwrap()).unwrap();
                let rhs = r.pi(&a).unwrap().compose(&r.pi(&b).unwrap()).unwrap();
                assert!(lhs.eq_elem(&rhs).unwrap(), "{r}: π({a}·{b})");
                assert_eq!(
                    r.carrier.leq(&a, &b).unwrap(),
                    r.pi(&a).unwrap().leq(&r.pi(&b).unwrap()).unwrap(),
                    "{r}: order at {a}, {b}"
                );
            }
        }
    }

    #[test]
    fn pi_unitality() {
        // unital iff the unit is compact
        let nat = CuSemiring::new(SemiringId::Nat).unwrap();
        assert!(nat
            .pi(&nat.unit)
            .unwrap()
            .eq_elem(&nat.hom_identity().unwrap())
            .unwrap());
        let pbar = CuSemiring::new(SemiringId::PBar).unwrap();
        let pi1 = pbar.pi(&pbar.unit).unwrap();
        assert!(!pi1.eq_elem(&pbar.hom_identity().unwrap()).unwrap());
        // the image is the soft 1, strictly below the compact identity
        assert!(pi1.leq(&pbar.hom_identity().unwrap()).unwrap());
    }

    #[test]
    fn solid_rows() {
        let p = solid_report(&CuSemiring::new(SemiringId::PBar).unwrap()).unwrap();
        assert!(p.conditions[0].holds() && p.conditions[1].holds() && p.conditions[2].holds());
        assert!(p.conditions[3].fails() && p.conditions[4].fails());
        assert!(p.diagram_consistent());

        let m = solid_report(&CuSemiring::new(SemiringId::M1).unwrap()).unwrap();
        assert!(m.conditions[2].holds() && m.conditions[3].holds() && m.conditions[4].holds());
        assert!(m.conditions[0].fails() && m.conditions[1].fails());
        assert!(m.diagram_consistent());

        let n = solid_report(&CuSemiring::new(SemiringId::Nat).unwrap()).unwrap();
        assert!(n.conditions.iter().all(|c| c.holds()));

        let k = solid_report(&CuSemiring::new(SemiringId::MatN(2)).unwrap()).unwrap();
        assert!(k.conditions.iter().all(|c| c.fails()));
        assert!(k.diagram_consistent());

        let t = solid_report(&CuSemiring::new(SemiringId::TruncHom).unwrap()).unwrap();
        assert!(t.conditions[3].holds());
        assert!(t.diagram_consistent());
    }

    #[test]
    fn probe_reports() {
        let p = commutativity_probe(&CuSemiring::new(SemiringId::PBar).unwrap()).unwrap();
        assert!(p.commutative_on_grid && p.consistent);
        let m = commutativity_probe(&CuSemiring::new(SemiringId::MatN(2)).unwrap()).unwrap();
        assert!(!m.commutative_on_grid && m.witness.is_some() && m.consistent);
        let n = commutativity_probe(&CuSemiring::new(SemiringId::Nat).unwrap()).unwrap();
        assert!(n.commutative_on_grid);
    }

    #[test]
    fn soft_preservation_examples() {
        use crate::morphism::GenMorphism;
        for t in ["0", "1/2", "3", "inf"] {
            let f = GenMorphism::ScalePBar(t.parse().unwrap());
            let rep = soft_preservation(&f).unwrap();
            assert!(rep.failures.is_empty(), "{t}: {:?}", rep.failures);
            assert!(rep.checked > 0);
        }
        let zero = GenMorphism::zero(&Carrier::M1, &Carrier::M1);
        // m1 is not a supported morphism domain; the zero morphism on pbar works
        assert!(zero.is_err());
        let z = GenMorphism::ScalePBar(QInf::zero());
        assert!(soft_preservation(&z).unwrap().failures.is_empty());
    }

    #[test]
    fn pbar_image_soft() {
        let r = CuSemiring::new(SemiringId::PBar).unwrap();
        for a in r.grid(4, 4) {
            let p = r.pi(&a).unwrap();
            match &p.repr {
                IHomRepr::Point(pt) => {
                    assert!(pt.is_zero() || pt.kind == Kind::Soft);
                }
                _ => panic!("unexpected representation"),
            }
        }
    }

    #[test]
    fn scalar_action_laws() {
        let nat = CuSemiring::new(SemiringId::Nat).unwrap();
        let x = IHomElem::matrix(
            MatrixMor::new(1, 2, vec![ExtNat::Fin(1), ExtNat::Inf]).unwrap(),
        );
        let two = Value::nat(2);
        let y = scalar_act(&nat, &two, &x).unwrap();
        let expected =
            IHomElem::matrix(MatrixMor::new(1, 2, vec![ExtNat::Fin(2), ExtNat::Inf]).unwrap());
        assert!(y.eq_elem(&expected).unwrap());
        // unit acts trivially
        let y1 = scalar_act(&nat, &Value::nat(1), &x).unwrap();
        assert!(y1.eq_elem(&x).unwrap());
        // the hypothesis: actions need a compact unit
        let pbar = CuSemiring::new(SemiringId::PBar).unwrap();
        let p = IHomElem::point(Carrier::PBar, Carrier::PBar, TwoKind::soft(QInf::one())).unwrap();
        assert!(scalar_act(&pbar, &pbar.unit, &p).is_err());
    }

    #[test]
    fn stability_reports() {
        let nat = CuSemiring::new(SemiringId::Nat).unwrap();
        for t in [Carrier::Vec(2), Carrier::PBar, Carrier::M1] {
            let rep = stability_check(&nat, &t).unwrap();
            assert!(rep.passed(), "{t}: {:?}", rep.items);
        }
        let pbar = CuSemiring::new(SemiringId::PBar).unwrap();
        let rep = stability_check(&pbar, &Carrier::PBar).unwrap();
        assert!(rep.passed(), "{:?}", rep.items);
    }
}
