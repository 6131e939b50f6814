//! Symbol table, monomials and exact multivariate polynomials over the
//! rationals.
//!
//! The ring has one reserved generator `u` (a formal square root of the
//! residue cardinality: `u * u = q`) plus any number of named generators
//! registered on first use (Satake values, central-character values, ...).
//! `q` itself is not a generator: it is stored as `u^2`, which keeps every
//! exponent an integer and makes the ring a plain polynomial ring over Q.
//! Rendering converts even `u`-powers back to `q`-powers.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::{OnceLock, RwLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Interned symbol identifier. `SymId(0)` is always `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymId(pub u32);

/// The reserved square root of q.
pub const SYM_U: SymId = SymId(0);

struct Interner {
    names: Vec<String>,
    by_name: BTreeMap<String, SymId>,
}

fn interner() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut by_name = BTreeMap::new();
        by_name.insert("u".to_string(), SYM_U);
        RwLock::new(Interner {
            names: vec!["u".to_string()],
            by_name,
        })
    })
}

fn valid_symbol_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Register (or look up) a named generator of the symbol ring.
///
/// `q`, `X` and `s` are reserved: `q` is `u^2`, `X` is the Laurent variable
/// `q^{-s}` and `s` is the complex parameter itself.
pub fn symbol(name: &str) -> Result<SymId> {
    if name == "q" || name == "X" || name == "s" {
        return Err(Error::MalformedInput(format!(
            "'{name}' is reserved and cannot be used as a symbol-ring generator"
        )));
    }
    if !valid_symbol_name(name) {
        return Err(Error::MalformedInput(format!(
            "invalid symbol name '{name}'"
        )));
    }
    {
        let table = interner().read().unwrap();
        if let Some(&id) = table.by_name.get(name) {
            return Ok(id);
        }
    }
    let mut table = interner().write().unwrap();
    if let Some(&id) = table.by_name.get(name) {
        return Ok(id);
    }
    let id = SymId(table.names.len() as u32);
    table.names.push(name.to_string());
    table.by_name.insert(name.to_string(), id);
    Ok(id)
}

/// Name of an interned symbol.
pub fn symbol_name(id: SymId) -> String {
    interner().read().unwrap().names[id.0 as usize].clone()
}

/// A power product of generators with nonnegative exponents, sorted by id.
///
/// Ordered by lexicographic comparison of full exponent vectors (lower ids
/// are more significant), which is a genuine monomial order: it is total,
/// multiplicative and has the constant monomial as minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(SymId, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(id: SymId, exp: u32) -> Self {
        if exp == 0 {
            Monomial::unit()
        } else {
            Monomial {
                exps: vec![(id, exp)],
            }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, id: SymId) -> u32 {
        self.exps
            .iter()
            .find(|(s, _)| *s == id)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn exps(&self) -> &[(SymId, u32)] {
        &self.exps
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|(_, e)| *e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = self.exps[i];
            let (b, eb) = other.exps[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    exps.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    exps.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    exps.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// Componentwise minimum (the monomial gcd).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::new();
        let mut j = 0;
        for &(a, ea) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < a {
                j += 1;
            }
            if j < other.exps.len() && other.exps[j].0 == a {
                let e = ea.min(other.exps[j].1);
                if e > 0 {
                    exps.push((a, e));
                }
            }
        }
        Monomial { exps }
    }

    /// Exact quotient, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(a, ea) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < a {
                return None; // divisor has a variable self lacks
            }
            if j < other.exps.len() && other.exps[j].0 == a {
                let eb = other.exps[j].1;
                if eb > ea {
                    return None;
                }
                if ea > eb {
                    exps.push((a, ea - eb));
                }
                j += 1;
            } else {
                exps.push((a, ea));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { exps })
    }

    fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(s, e)| (s, e * n)).collect(),
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Lex on full exponent vectors, missing exponents are zero.
        use std::cmp::Ordering;
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                    // Smaller id present only on one side: that side has a
                    // positive exponent where the other has zero.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

/// Exact multivariate polynomial over Q, keyed by monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        MPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        MPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(id: SymId) -> Self {
        MPoly::term(Monomial::var(id, 1), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_unit)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading (maximal) term under the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        self.mul_term(&Monomial::unit(), c)
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut out = MPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Monomial common to every term (the monomial content).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::unit(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Exact polynomial quotient, `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &MPoly) -> Option<MPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if let Some(c) = other.as_constant() {
            return Some(self.scale(&(BigRational::one() / c)));
        }
        let (lm, lc) = other.leading().expect("nonzero");
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero");
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            let t = MPoly::term(qm, qc);
            rem = rem.sub(&t.mul(other));
            quo = quo.add(&t);
        }
        Some(quo)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, lc)) => {
                let inv = BigRational::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Variables occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<SymId> {
        let mut vars: Vec<SymId> = Vec::new();
        for m in self.terms.keys() {
            for &(s, _) in m.exps() {
                if let Err(pos) = vars.binary_search(&s) {
                    vars.insert(pos, s);
                }
            }
        }
        vars
    }

    pub fn degree_in(&self, id: SymId) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(id))
            .max()
            .unwrap_or(0)
    }

    /// View as a dense univariate polynomial in `id` with MPoly coefficients.
    fn to_univar(&self, id: SymId) -> Vec<MPoly> {
        let deg = self.degree_in(id) as usize;
        let mut coeffs = vec![MPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(id) as usize;
            let rest = m
                .div(&Monomial::var(id, e as u32))
                .expect("own exponent divides");
            coeffs[e].insert_add(rest, c.clone());
        }
        coeffs
    }

    fn from_univar(coeffs: &[MPoly], id: SymId) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let xe = Monomial::var(id, e as u32);
            for (m, r) in &c.terms {
                out.insert_add(m.mul(&xe), r.clone());
            }
        }
        out
    }

    /// Substitute `u^2 -> qval`, used when a numeric residue cardinality is
    /// bound. If `qval` is a perfect square of a rational, `u` itself is
    /// substituted and disappears entirely.
    pub fn bind_q(&self, qval: &BigRational) -> MPoly {
        let root = rational_sqrt(qval);
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(SYM_U);
            let rest = m
                .div(&Monomial::var(SYM_U, e))
                .expect("own exponent divides");
            let (upart, qexp) = match &root {
                Some(_) => (0, 0),
                None => (e % 2, (e / 2) as i64),
            };
            let mut coeff = c.clone();
            if let Some(r) = &root {
                coeff *= num::pow::pow(r.clone(), e as usize);
            } else {
                coeff *= num::pow::pow(qval.clone(), qexp as usize);
            }
            out.insert_add(rest.mul(&Monomial::var(SYM_U, upart)), coeff);
        }
        out
    }
}

/// Exact square root of a nonnegative rational, when it is one.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Content over a main variable: gcd of the univariate coefficients.
fn content_in(coeffs: &[MPoly]) -> MPoly {
    let mut acc = MPoly::zero();
    for c in coeffs {
        if !c.is_zero() {
            acc = gcd(&acc, c);
            if acc.is_one() {
                break;
            }
        }
    }
    acc
}

fn univar_deg(coeffs: &[MPoly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Pseudo-remainder of dense univariate polynomials with MPoly coefficients.
fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = univar_deg(b).expect("divisor nonzero");
    let lb = b[db].clone();
    let mut r: Vec<MPoly> = a.to_vec();
    loop {
        let dr = match univar_deg(&r) {
            Some(d) => d,
            None => return r,
        };
        if dr < db {
            return r;
        }
        let lr = r[dr].clone();
        // r <- lb*r - lr*x^{dr-db}*b
        let mut next = vec![MPoly::zero(); dr.max(1)];
        for (i, c) in r.iter().enumerate() {
            if !c.is_zero() {
                if next.len() <= i {
                    next.resize(i + 1, MPoly::zero());
                }
                next[i] = c.mul(&lb);
            }
        }
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                let j = i + dr - db;
                if next.len() <= j {
                    next.resize(j + 1, MPoly::zero());
                }
                next[j] = next[j].sub(&c.mul(&lr));
            }
        }
        next.truncate(dr); // leading term cancels by construction
        r = next;
    }
}

/// Gcd of multivariate polynomials over Q, returned monic.
///
/// Recursive primitive pseudo-remainder sequence; the sizes this engine
/// produces are small, so simplicity wins over subresultant bookkeeping.
pub fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one();
    }
    if f.is_monomial() && g.is_monomial() {
        let (mf, _) = f.leading().expect("nonzero");
        let (mg, _) = g.leading().expect("nonzero");
        return MPoly::term(mf.gcd(mg), BigRational::one());
    }
    if f.is_monomial() {
        let (mf, _) = f.leading().expect("nonzero");
        return MPoly::term(mf.gcd(&g.monomial_content()), BigRational::one());
    }
    if g.is_monomial() {
        let (mg, _) = g.leading().expect("nonzero");
        return MPoly::term(mg.gcd(&f.monomial_content()), BigRational::one());
    }

    let vf = f.variables();
    let vg = g.variables();
    let common: Vec<SymId> = vf.iter().copied().filter(|v| vg.contains(v)).collect();
    let Some(&x) = common.first() else {
        return MPoly::one();
    };

    let fu = f.to_univar(x);
    let gu = g.to_univar(x);
    let cf = content_in(&fu);
    let cg = content_in(&gu);
    let cc = gcd(&cf, &cg);

    let strip = |coeffs: &[MPoly], cont: &MPoly| -> Vec<MPoly> {
        coeffs
            .iter()
            .map(|c| {
                if c.is_zero() {
                    MPoly::zero()
                } else {
                    c.div_exact(cont).expect("content divides")
                }
            })
            .collect()
    };
    let mut a = strip(&fu, &cf);
    let mut b = strip(&gu, &cg);
    if univar_deg(&a) < univar_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }

    loop {
        let r = pseudo_rem(&a, &b);
        match univar_deg(&r) {
            None => {
                // b divides a (up to content): gcd of primitive parts is b.
                let cb = content_in(&b);
                let prim = strip(&b, &cb);
                let part = MPoly::from_univar(&prim, x);
                return cc.mul(&part).monic();
            }
            Some(0) => {
                // coprime in x
                return cc.monic();
            }
            Some(_) => {
                let cr = content_in(&r);
                a = b;
                b = strip(&r, &cr);
            }
        }
    }
}

/// Render settings shared by plain-text and LaTeX output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Text,
    Latex,
}

fn push_rational(out: &mut String, c: &BigRational, mode: RenderMode) {
    if c.denom().is_one() {
        let _ = write!(out, "{}", c.numer());
    } else {
        match mode {
            RenderMode::Text => {
                let _ = write!(out, "{}/{}", c.numer(), c.denom());
            }
            RenderMode::Latex => {
                let neg = c.is_negative();
                if neg {
                    out.push('-');
                }
                let _ = write!(out, "\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom());
            }
        }
    }
}

fn push_pow(out: &mut String, base: &str, exp: i64, mode: RenderMode) {
    out.push_str(base);
    if exp != 1 {
        match mode {
            RenderMode::Text => {
                let _ = write!(out, "^{exp}");
            }
            RenderMode::Latex => {
                let _ = write!(out, "^{{{exp}}}");
            }
        }
    }
}

/// Render one monomial, folding even `u`-powers back into `q`.
pub fn render_monomial(m: &Monomial, mode: RenderMode) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut named: Vec<(String, u32)> = Vec::new();
    for &(s, e) in m.exps() {
        if s == SYM_U {
            let qexp = (e / 2) as i64;
            let urem = e % 2;
            if qexp != 0 {
                let mut t = String::new();
                push_pow(&mut t, "q", qexp, mode);
                parts.push(t);
            }
            if urem == 1 {
                parts.push("u".to_string());
            }
        } else {
            named.push((symbol_name(s), e));
        }
    }
    named.sort();
    for (name, e) in named {
        let mut t = String::new();
        push_pow(&mut t, &name, e as i64, mode);
        parts.push(t);
    }
    let sep = match mode {
        RenderMode::Text => "*",
        RenderMode::Latex => " ",
    };
    parts.join(sep)
}

/// Render a polynomial with terms in descending monomial order.
pub fn render_mpoly(p: &MPoly, mode: RenderMode) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let mono = render_monomial(m, mode);
        if mono.is_empty() {
            push_rational(&mut out, &mag, mode);
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            push_rational(&mut out, &mag, mode);
            match mode {
                RenderMode::Text => out.push('*'),
                RenderMode::Latex => out.push(' '),
            }
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> SymId {
        symbol(name).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn monomial_order_is_multiplicative() {
        let a = sym("mo_a");
        let b = sym("mo_b");
        let u = Monomial::var(SYM_U, 1);
        let ma = Monomial::var(a, 1);
        let mb = Monomial::var(b, 2);
        let pairs = [
            (Monomial::unit(), ma.clone()),
            (ma.clone(), mb.clone()),
            (u.clone(), ma.clone()),
            (ma.mul(&u), mb.mul(&u)),
        ];
        for (m1, m2) in pairs {
            let ord = m1.cmp(&m2);
            assert_eq!(m1.mul(&u).cmp(&m2.mul(&u)), ord);
            assert_eq!(m1.mul(&ma).cmp(&m2.mul(&ma)), ord);
        }
        assert!(Monomial::unit() < ma);
        assert!(Monomial::unit() < u);
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = sym("dx_a");
        let b = sym("dx_b");
        let pa = MPoly::var(a).add(&MPoly::one()); // a + 1
        let pb = MPoly::var(b).sub(&MPoly::var(a)); // b - a
        let prod = pa.mul(&pb);
        assert_eq!(prod.div_exact(&pa).unwrap(), pb);
        assert_eq!(prod.div_exact(&pb).unwrap(), pa);
        assert!(pa.div_exact(&pb).is_none());
    }

    #[test]
    fn gcd_cancels_common_factor() {
        let a = sym("g_a");
        let b = sym("g_b");
        let pa = MPoly::var(a).add(&MPoly::var(b)); // a + b
        let pb = MPoly::var(a).sub(&MPoly::var(b)); // a - b
        let f = pa.mul(&pa).mul(&pb); // (a+b)^2 (a-b)
        let g = pa.mul(&pb).mul(&pb).scale(&rat(3)); // 3 (a+b)(a-b)^2
        let d = gcd(&f, &g);
        let expect = pa.mul(&pb).monic();
        assert_eq!(d, expect);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = sym("gc_a");
        let b = sym("gc_b");
        let pa = MPoly::var(a).add(&MPoly::one());
        let pb = MPoly::var(b).add(&MPoly::from_int(2));
        assert!(gcd(&pa, &pb).is_one());
    }

    #[test]
    fn gcd_monomial_fast_path() {
        let a = sym("gm_a");
        let m1 = MPoly::term(
            Monomial::var(a, 3).mul(&Monomial::var(SYM_U, 2)),
            rat(4),
        );
        let m2 = MPoly::term(
            Monomial::var(a, 1).mul(&Monomial::var(SYM_U, 5)),
            rat(6),
        );
        let d = gcd(&m1, &m2);
        assert_eq!(
            d,
            MPoly::term(
                Monomial::var(a, 1).mul(&Monomial::var(SYM_U, 2)),
                BigRational::one()
            )
        );
    }

    #[test]
    fn binding_q_reduces_u_powers() {
        // u^3 with q = 4 becomes 8 (since u = 2); with q = 2 becomes 2u.
        let p = MPoly::term(Monomial::var(SYM_U, 3), BigRational::one());
        assert_eq!(p.bind_q(&rat(4)), MPoly::constant(rat(8)));
        let bound = p.bind_q(&rat(2));
        assert_eq!(
            bound,
            MPoly::term(Monomial::var(SYM_U, 1), rat(2))
        );
    }

    #[test]
    fn rendering_folds_u_into_q() {
        let a = sym("rn_a");
        let m = Monomial::var(SYM_U, 5).mul(&Monomial::var(a, 2));
        assert_eq!(render_monomial(&m, RenderMode::Text), "q^2*u*rn_a^2");
        let p = MPoly::term(m, BigRational::new(BigInt::from(-3), BigInt::from(2)));
        assert_eq!(render_mpoly(&p, RenderMode::Text), "-3/2*q^2*u*rn_a^2");
        assert_eq!(
            render_mpoly(&p, RenderMode::Latex),
            "-\\frac{3}{2} q^{2} u rn_a^{2}"
        );
    }
}
