//! Abstract syntax of the semigroup-definition language, with a printer whose
//! output reparses to the same tree.

use std::fmt;

use cucalc_core::{ExtNat, Kind, QInf};

use crate::lex::Pos;

#[derive(Clone, Debug, PartialEq)]
pub struct Spec {
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Item {
    pub pos: Pos,
    pub node: Node,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Carrier { name: String, expr: CarrierExpr },
    Element { name: String, carrier: CarrierRef, value: ValueLit },
    Morphism { name: String, dom: CarrierRef, cod: CarrierRef, expr: MorExpr },
    Path { name: String, dom: CarrierRef, cod: CarrierRef, links: Vec<MorExpr>, law: Option<LawName> },
    Ideal { name: String, carrier: CarrierRef, expr: IdealExpr },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq)]
pub enum CarrierExpr {
    ExtNat(usize),
    PBar,
    Trunc,
    TruncHom,
    M1,
    Z,
    Finite { elems: Vec<String>, add: Vec<Vec<String>>, leq: Vec<Vec<bool>> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum CarrierRef {
    Named(String),
    Inline(CarrierExpr),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ValueLit {
    Rat(QInf),
    Tuple(Vec<ExtNat>),
    Kinded(Kind, QInf),
    Name(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum MorExpr {
    Matrix(Vec<Vec<ExtNat>>),
    Scale(QInf),
    Table(Vec<String>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawName {
    Arithmetic,
    Geometric,
    Stabilize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum IdealExpr {
    Zero,
    All,
    Coords(Vec<usize>),
    Subset(Vec<String>),
    DownSet(ValueLit),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Axioms(CarrierRef),
    Ihom(CarrierRef, CarrierRef),
    Compose(String, String),
    Eval(String, ValueLit),
    Tensor(String, String),
    Solid(String),
    Ideals(CarrierRef),
    Simple(SimpleTarget),
    Quotient(CarrierRef, String),
    Oracle { max_size: usize, check: OracleCheck },
    Adjoint(CarrierRef, CarrierRef, CarrierRef),
}

#[derive(Clone, Debug, PartialEq)]
pub enum SimpleTarget {
    Carrier(CarrierRef),
    Ihom(CarrierRef, CarrierRef),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleCheck {
    Bijection,
    Tau,
    Axioms,
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{}", item.node)?;
        }
        Ok(())
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Carrier { name, expr } => write!(f, "carrier {name} = {expr}"),
            Node::Element { name, carrier, value } => {
                write!(f, "element {name} in {carrier} = {value}")
            }
            Node::Morphism { name, dom, cod, expr } => {
                write!(f, "morphism {name} : {dom} -> {cod} = {expr}")
            }
            Node::Path { name, dom, cod, links, law } => {
                write!(f, "path {name} : {dom} -> {cod} = [")?;
                for (i, l) in links.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, "]")?;
                if let Some(law) = law {
                    write!(f, " law {law}")?;
                }
                Ok(())
            }
            Node::Ideal { name, carrier, expr } => {
                write!(f, "ideal {name} of {carrier} = {expr}")
            }
            Node::Command(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for CarrierExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarrierExpr::ExtNat(1) => write!(f, "extnat"),
            CarrierExpr::ExtNat(k) => write!(f, "extnat^{k}"),
            CarrierExpr::PBar => write!(f, "pbar"),
            CarrierExpr::Trunc => write!(f, "trunc"),
            CarrierExpr::TruncHom => write!(f, "trunchom"),
            CarrierExpr::M1 => write!(f, "m1"),
            CarrierExpr::Z => write!(f, "z"),
            CarrierExpr::Finite { elems, add, leq } => {
                write!(f, "finite {{ elems: [{}]; add: [", elems.join(", "))?;
                for (i, row) in add.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[{}]", row.join(","))?;
                }
                write!(f, "]; leq: [")?;
                for (i, row) in leq.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    let bits: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
                    write!(f, "[{}]", bits.join(","))?;
                }
                write!(f, "] }}")
            }
        }
    }
}

impl fmt::Display for CarrierRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarrierRef::Named(n) => write!(f, "{n}"),
            CarrierRef::Inline(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Display for ValueLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueLit::Rat(q) => write!(f, "{q}"),
            ValueLit::Tuple(xs) => {
                write!(f, "(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            ValueLit::Kinded(Kind::Compact, q) => write!(f, "compact {q}"),
            ValueLit::Kinded(Kind::Soft, q) => write!(f, "soft {q}"),
            ValueLit::Name(n) => write!(f, "{n}"),
        }
    }
}

impl fmt::Display for MorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorExpr::Matrix(rows) => {
                write!(f, "matrix [")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                    write!(f, "[{}]", cells.join(","))?;
                }
                write!(f, "]")
            }
            MorExpr::Scale(q) => write!(f, "scale {q}"),
            MorExpr::Table(images) => write!(f, "table [{}]", images.join(", ")),
        }
    }
}

impl fmt::Display for LawName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawName::Arithmetic => write!(f, "arithmetic"),
            LawName::Geometric => write!(f, "geometric"),
            LawName::Stabilize => write!(f, "stabilize"),
        }
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Zero => write!(f, "zero"),
            IdealExpr::All => write!(f, "all"),
            IdealExpr::Coords(cs) => {
                let s: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "coords {{{}}}", s.join(", "))
            }
            IdealExpr::Subset(names) => write!(f, "subset {{{}}}", names.join(", ")),
            IdealExpr::DownSet(v) => write!(f, "downset {v}"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Axioms(c) => write!(f, "axioms {c}"),
            Command::Ihom(s, t) => write!(f, "ihom {s} {t}"),
            Command::Compose(g, x) => write!(f, "compose {g} {x}"),
            Command::Eval(x, v) => write!(f, "eval {x} {v}"),
            Command::Tensor(x, y) => write!(f, "tensor {x} {y}"),
            Command::Solid(r) => write!(f, "solid {r}"),
            Command::Ideals(c) => write!(f, "ideals {c}"),
            Command::Simple(SimpleTarget::Carrier(c)) => write!(f, "simple {c}"),
            Command::Simple(SimpleTarget::Ihom(s, t)) => write!(f, "simple ihom {s} {t}"),
            Command::Quotient(c, j) => write!(f, "quotient {c} {j}"),
            Command::Oracle { max_size, check } => {
                write!(f, "oracle --max-size {max_size} --check {check}")
            }
            Command::Adjoint(s, t, p) => write!(f, "adjoint {s} {t} {p}"),
        }
    }
}

impl fmt::Display for OracleCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleCheck::Bijection => write!(f, "bijection"),
            OracleCheck::Tau => write!(f, "tau"),
            OracleCheck::Axioms => write!(f, "axioms"),
        }
    }
}
