//! Gamma-factor values: an explicit Laurent rational part times a formal
//! multiset of gamma-atoms with integer exponents.
//!
//! Atoms stand for factors the engine keeps opaque: anything involving a
//! supercuspidal atom or a ramified character. An atom records the (at most
//! two) opaque operands and the character twist applied to the pair, so the
//! same factor reached along different computation routes lands on the same
//! canonical descriptor.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::localchar::{MultChar, RamPart};
use crate::ratfun::{LaurentRational, RenderMode};

/// One opaque operand of a gamma-atom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Operand {
    /// The trivial placeholder (a one-dimensional unramified slot).
    Trivial,
    /// A formal product of ramified character labels.
    RamChar(RamPart),
    /// A supercuspidal atom, possibly through its exterior square.
    Atom { label: String, dim: u32, wedge: bool },
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Trivial => write!(f, "1"),
            Operand::RamChar(ram) => {
                let parts: Vec<String> = ram
                    .iter()
                    .map(|(l, e)| {
                        if *e == 1 {
                            l.clone()
                        } else {
                            format!("{l}^{e}")
                        }
                    })
                    .collect();
                write!(f, "{}", parts.join("*"))
            }
            Operand::Atom { label, wedge, .. } => {
                if *wedge {
                    write!(f, "wedge2({label})")
                } else {
                    write!(f, "{label}")
                }
            }
        }
    }
}

/// Canonical descriptor of one formal gamma-factor: gamma(s, left x right, psi)
/// twisted by a character.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GammaAtom {
    left: Operand,
    right: Operand,
    twist: MultChar,
}

impl GammaAtom {
    /// Operands are unordered; the constructor sorts them so equal factors
    /// produced along different routes compare equal.
    pub fn new(a: Operand, b: Operand, twist: MultChar) -> Self {
        let (left, right) = if a <= b { (a, b) } else { (b, a) };
        GammaAtom { left, right, twist }
    }

    pub fn left(&self) -> &Operand {
        &self.left
    }

    pub fn right(&self) -> &Operand {
        &self.right
    }

    pub fn twist(&self) -> &MultChar {
        &self.twist
    }
}

impl fmt::Display for GammaAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({} x {}", self.left, self.right)?;
        if !self.twist.is_trivial() {
            write!(f, "; {}", self.twist)?;
        }
        write!(f, ")")
    }
}

/// A gamma-factor: explicit rational part times formal atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpr {
    rational: LaurentRational,
    atoms: BTreeMap<GammaAtom, i64>,
}

impl GammaExpr {
    pub fn one() -> Self {
        GammaExpr {
            rational: LaurentRational::one(),
            atoms: BTreeMap::new(),
        }
    }

    pub fn from_rational(rational: LaurentRational) -> Self {
        GammaExpr {
            rational,
            atoms: BTreeMap::new(),
        }
    }

    pub fn from_atom(atom: GammaAtom) -> Self {
        let mut atoms = BTreeMap::new();
        atoms.insert(atom, 1);
        GammaExpr {
            rational: LaurentRational::one(),
            atoms,
        }
    }

    pub fn from_parts(rational: LaurentRational, atoms: BTreeMap<GammaAtom, i64>) -> Self {
        let mut atoms = atoms;
        atoms.retain(|_, e| *e != 0);
        GammaExpr { rational, atoms }
    }

    pub fn rational(&self) -> &LaurentRational {
        &self.rational
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&GammaAtom, i64)> {
        self.atoms.iter().map(|(a, e)| (a, *e))
    }

    pub fn atom_map(&self) -> &BTreeMap<GammaAtom, i64> {
        &self.atoms
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut atoms = self.atoms.clone();
        for (a, e) in &other.atoms {
            let entry = atoms.entry(a.clone()).or_insert(0);
            *entry += e;
            if *entry == 0 {
                atoms.remove(a);
            }
        }
        GammaExpr {
            rational: self.rational.mul(&other.rational),
            atoms,
        }
    }

    /// Formal inverse: atom exponents negate (they may already be negative).
    pub fn inv(&self) -> Result<Self> {
        Ok(GammaExpr {
            rational: self.rational.inv()?,
            atoms: self.atoms.iter().map(|(a, e)| (a.clone(), -e)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = GammaExpr::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        Ok(out)
    }

    /// Exact equality: rational parts equal as values, atom multisets equal.
    pub fn equal(&self, other: &Self) -> bool {
        self.atoms == other.atoms && self.rational.equal(&other.rational)
    }

    pub fn is_one(&self) -> bool {
        self.atoms.is_empty() && self.rational.equal(&LaurentRational::one())
    }

    /// The substitution s -> 1-s on the explicit part. Only defined when the
    /// expression has no formal atoms (the atoms carry their own s).
    pub fn substitute_dual(&self) -> Result<Self> {
        if !self.atoms.is_empty() {
            return Err(crate::error::Error::UnsupportedConfiguration(
                "s -> 1-s substitution is only supported on atom-free gamma values"
                    .to_string(),
            ));
        }
        Ok(GammaExpr::from_rational(self.rational.substitute_dual()))
    }

    pub fn render(&self, mode: RenderMode) -> String {
        let mut out = self.rational.render(mode);
        for (atom, e) in &self.atoms {
            let sep = match mode {
                RenderMode::Text => " * ",
                RenderMode::Latex => " \\cdot ",
            };
            out.push_str(sep);
            out.push_str(&render_atom(atom, *e, mode));
        }
        out
    }
}

fn render_atom(atom: &GammaAtom, e: i64, mode: RenderMode) -> String {
    match mode {
        RenderMode::Text => {
            if e == 1 {
                format!("{atom}")
            } else {
                format!("{atom}^{e}")
            }
        }
        RenderMode::Latex => {
            let mut s = format!(
                "\\gamma(s, {} \\times {}",
                latex_operand(atom.left()),
                latex_operand(atom.right())
            );
            if !atom.twist().is_trivial() {
                s.push_str(&format!("; {}", atom.twist()));
            }
            s.push_str(", \\psi)");
            if e != 1 {
                s.push_str(&format!("^{{{e}}}"));
            }
            s
        }
    }
}

fn latex_operand(op: &Operand) -> String {
    match op {
        Operand::Trivial => "1".to_string(),
        Operand::RamChar(_) => format!("{op}"),
        Operand::Atom { label, wedge, .. } => {
            if *wedge {
                format!("\\wedge^2 {label}")
            } else {
                label.clone()
            }
        }
    }
}

impl fmt::Display for GammaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderMode::Text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::Scalar;

    fn atom(label: &str) -> GammaAtom {
        GammaAtom::new(
            Operand::Atom {
                label: label.to_string(),
                dim: 2,
                wedge: false,
            },
            Operand::Trivial,
            MultChar::trivial(),
        )
    }

    #[test]
    fn atoms_cancel_in_quotients() {
        let g = GammaExpr::from_atom(atom("ga_tau"));
        let quotient = g.div(&g).unwrap();
        assert!(quotient.is_one());
    }

    #[test]
    fn operand_order_is_canonical() {
        let a = Operand::Atom {
            label: "ga_a".to_string(),
            dim: 2,
            wedge: false,
        };
        let b = Operand::Atom {
            label: "ga_b".to_string(),
            dim: 3,
            wedge: false,
        };
        let t = MultChar::trivial();
        assert_eq!(
            GammaAtom::new(a.clone(), b.clone(), t.clone()),
            GammaAtom::new(b, a, t)
        );
    }

    #[test]
    fn negative_exponents_survive_multiplication() {
        let g = GammaExpr::from_atom(atom("ga_neg"));
        let inv = g.inv().unwrap();
        let twice = inv.mul(&inv);
        assert_eq!(twice.atoms().next().unwrap().1, -2);
        assert!(twice.mul(&g).mul(&g).is_one());
    }

    #[test]
    fn rational_part_multiplies() {
        let r = LaurentRational::one_minus_x(&Scalar::q());
        let g = GammaExpr::from_rational(r.clone());
        let sq = g.mul(&g);
        assert!(sq.rational().equal(&r.mul(&r)));
    }
}
