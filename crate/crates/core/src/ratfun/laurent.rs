//! Exact Laurent rational functions in X = q^{-s} over the symbol ring.
//!
//! Values are kept in a factored shape: a scalar coefficient, a power of X,
//! and a multiset of polynomial factors with integer exponents, each factor
//! normalized to constant term 1. Products and quotients of local factors
//! then cancel factor-by-factor without ever expanding, which is what keeps
//! the consistency suites fast. [`LaurentRational::normalized`] produces the
//! unique expanded canonical form (coprime numerator/denominator).

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::Scalar;
use super::symbols::RenderMode;
use crate::error::{Error, Result};

/// Dense polynomial in X with scalar coefficients (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct XPoly {
    coeffs: Vec<Scalar>,
}

impl XPoly {
    pub fn zero() -> XPoly {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> XPoly {
        XPoly {
            coeffs: vec![Scalar::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> XPoly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    /// `1 - m X` for a scalar m: the shape of every Tate-type factor.
    pub fn one_minus(m: &Scalar) -> XPoly {
        XPoly::from_coeffs(vec![Scalar::one(), m.neg()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Scalar) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i)));
        }
        XPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        if self.is_zero() || other.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        XPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, n: u32) -> XPoly {
        let mut out = XPoly::one();
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

    /// Division with remainder over the scalar field.
    pub fn div_rem(&self, divisor: &XPoly) -> (XPoly, XPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree();
        let lead_inv = divisor.coeffs[dd].inv().expect("leading coeff nonzero");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let dr = rem.len() - 1;
            let top = rem[dr].clone();
            if !top.is_zero() {
                let f = top.mul(&lead_inv);
                quo[dr - dd] = f.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[dr - dd + i] = rem[dr - dd + i].sub(&f.mul(c));
                }
            }
            rem.pop();
        }
        (XPoly::from_coeffs(quo), XPoly::from_coeffs(rem))
    }

    pub fn div_exact(&self, divisor: &XPoly) -> Option<XPoly> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd over the scalar field.
    pub fn gcd(&self, other: &XPoly) -> XPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead_inv = a.coeffs[a.degree()].inv().expect("nonzero");
        a.scale(&lead_inv)
    }
}

/// A Laurent rational function over the symbol ring: coeff * X^xpow * prod factors^exp.
///
/// Every factor has constant term 1 and degree >= 1; exponents are nonzero.
/// Zero is represented with a zero coefficient and no factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaurentRational {
    coeff: Scalar,
    xpow: i64,
    factors: BTreeMap<XPoly, i64>,
}

impl LaurentRational {
    pub fn zero() -> Self {
        LaurentRational {
            coeff: Scalar::zero(),
            xpow: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentRational::from_scalar(Scalar::one())
    }

    pub fn from_scalar(c: Scalar) -> Self {
        LaurentRational {
            coeff: c,
            xpow: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn x() -> Self {
        LaurentRational::x_pow(1)
    }

    pub fn x_pow(k: i64) -> Self {
        LaurentRational {
            coeff: Scalar::one(),
            xpow: k,
            factors: BTreeMap::new(),
        }
    }

    /// Normalize a polynomial into factored shape: extract the X-power and
    /// the lowest coefficient so the remaining factor has constant term 1.
    pub fn from_xpoly(p: &XPoly) -> Self {
        if p.is_zero() {
            return LaurentRational::zero();
        }
        let v = p
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero poly");
        let shifted = XPoly::from_coeffs(p.coeffs()[v..].to_vec());
        let c0 = shifted.coeff(0);
        let inv = c0.inv().expect("constant term nonzero");
        let monic_bottom = shifted.scale(&inv);
        let mut factors = BTreeMap::new();
        if monic_bottom.degree() >= 1 {
            factors.insert(monic_bottom, 1);
        }
        LaurentRational {
            coeff: c0,
            xpow: v as i64,
            factors,
        }
    }

    /// Build from numerator and denominator coefficient lists (low to high).
    pub fn from_poly_pair(num: &[Scalar], den: &[Scalar]) -> Result<Self> {
        let d = XPoly::from_coeffs(den.to_vec());
        if d.is_zero() {
            return Err(Error::MalformedInput(
                "zero denominator in Laurent rational".to_string(),
            ));
        }
        let n = XPoly::from_coeffs(num.to_vec());
        Ok(LaurentRational::from_xpoly(&n)
            .mul(&LaurentRational::from_xpoly(&d).inv()?))
    }

    /// `1 - m X` as a value.
    pub fn one_minus_x(m: &Scalar) -> Self {
        LaurentRational::from_xpoly(&XPoly::one_minus(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.xpow == 0 && self.factors.is_empty()
    }

    pub fn coeff(&self) -> &Scalar {
        &self.coeff
    }

    pub fn xpow(&self) -> i64 {
        self.xpow
    }

    pub fn factors(&self) -> impl Iterator<Item = (&XPoly, i64)> {
        self.factors.iter().map(|(f, e)| (f, *e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentRational::zero();
        }
        let mut factors = self.factors.clone();
        for (f, e) in &other.factors {
            let entry = factors.entry(f.clone()).or_insert(0);
            *entry += e;
            if *entry == 0 {
                factors.remove(f);
            }
        }
        LaurentRational {
            coeff: self.coeff.mul(&other.coeff),
            xpow: self.xpow + other.xpow,
            factors,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::MalformedInput(
                "division by zero Laurent rational".to_string(),
            ));
        }
        Ok(LaurentRational {
            coeff: self.coeff.inv()?,
            xpow: -self.xpow,
            factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn neg(&self) -> Self {
        LaurentRational {
            coeff: self.coeff.neg(),
            xpow: self.xpow,
            factors: self.factors.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = LaurentRational::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Pull out the shared part so the expanded remainders stay small.
        let mut common = BTreeMap::new();
        let mut keys: Vec<&XPoly> = self.factors.keys().collect();
        keys.extend(other.factors.keys());
        keys.sort();
        keys.dedup();
        for f in keys {
            let ea = self.factors.get(f).copied().unwrap_or(0);
            let eb = other.factors.get(f).copied().unwrap_or(0);
            let e = ea.min(eb);
            if e != 0 {
                common.insert(f.clone(), e);
            }
        }
        let cx = self.xpow.min(other.xpow);

        let expand_rest = |v: &Self| -> XPoly {
            let mut p = XPoly::from_coeffs(vec![v.coeff.clone()]);
            let shift = (v.xpow - cx) as usize;
            if shift > 0 {
                let mut coeffs = vec![Scalar::zero(); shift];
                coeffs.extend_from_slice(p.coeffs());
                p = XPoly::from_coeffs(coeffs);
            }
            for (f, e) in &v.factors {
                let rest = e - common.get(f).copied().unwrap_or(0);
                debug_assert!(rest >= 0);
                if rest > 0 {
                    p = p.mul(&f.pow(rest as u32));
                }
            }
            p
        };

        let mut sum = expand_rest(self).add(&expand_rest(other));
        if sum.is_zero() {
            return LaurentRational::zero();
        }
        // Cancel the sum against shared denominator factors where possible.
        let mut common_val = LaurentRational {
            coeff: Scalar::one(),
            xpow: cx,
            factors: BTreeMap::new(),
        };
        for (f, mut e) in common {
            while e < 0 {
                match sum.div_exact(&f) {
                    Some(q) => {
                        sum = q;
                        e += 1;
                    }
                    None => break,
                }
            }
            if e != 0 {
                common_val.factors.insert(f, e);
            }
        }
        common_val.mul(&LaurentRational::from_xpoly(&sum))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn expand_side(&self, positive: bool) -> XPoly {
        let mut p = XPoly::one();
        for (f, e) in &self.factors {
            let e = *e;
            if positive && e > 0 {
                p = p.mul(&f.pow(e as u32));
            } else if !positive && e < 0 {
                p = p.mul(&f.pow((-e) as u32));
            }
        }
        p
    }

    /// The unique canonical form: coprime expanded numerator/denominator,
    /// both with constant term 1, scalar and X-power pulled out front.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return LaurentRational::zero();
        }
        let mut num = self.expand_side(true);
        let mut den = self.expand_side(false);
        let g = num.gcd(&den);
        if g.degree() >= 1 {
            num = num.div_exact(&g).expect("gcd divides");
            den = den.div_exact(&g).expect("gcd divides");
        }
        let cn = num.coeff(0);
        let cd = den.coeff(0);
        debug_assert!(!cn.is_zero() && !cd.is_zero());
        let mut coeff = self.coeff.mul(&cn);
        coeff = coeff.mul(&cd.inv().expect("nonzero"));
        let mut factors = BTreeMap::new();
        let num_n = num.scale(&cn.inv().expect("nonzero"));
        let den_n = den.scale(&cd.inv().expect("nonzero"));
        if num_n.degree() >= 1 {
            factors.insert(num_n, 1);
        }
        if den_n.degree() >= 1 {
            factors.insert(den_n, -1);
        }
        LaurentRational {
            coeff,
            xpow: self.xpow,
            factors,
        }
    }

    /// Exact equality of values.
    pub fn equal(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() == other.is_zero();
        }
        let ratio = self.div(other).expect("nonzero divisor");
        if ratio.factors.is_empty() {
            return ratio.xpow == 0 && ratio.coeff.is_one();
        }
        if ratio.xpow != 0 {
            // Factors have nonzero constant terms, so a residual X-power
            // can never cancel against them.
            return false;
        }
        let num = ratio.expand_side(true).scale(&ratio.coeff);
        let den = ratio.expand_side(false);
        num == den
    }

    /// The substitution s -> 1-s, i.e. X -> q^{-1} X^{-1}.
    pub fn substitute_dual(&self) -> Self {
        if self.is_zero() {
            return LaurentRational::zero();
        }
        let qinv = Scalar::u_pow(-2);
        let mut coeff = self.coeff.mul(&qinv.pow(self.xpow).expect("unit"));
        let mut xpow = -self.xpow;
        let mut factors = BTreeMap::new();
        for (f, e) in &self.factors {
            let d = f.degree();
            // f(q^{-1}X^{-1}) = X^{-d} g(X), g_j = f_{d-j} q^{-(d-j)}
            let coeffs: Vec<Scalar> = (0..=d)
                .map(|j| f.coeff(d - j).mul(&qinv.pow((d - j) as i64).expect("unit")))
                .collect();
            let g = XPoly::from_coeffs(coeffs);
            let c0 = g.coeff(0);
            debug_assert!(!c0.is_zero());
            let gn = g.scale(&c0.inv().expect("nonzero"));
            coeff = coeff.mul(&c0.pow(*e).expect("nonzero"));
            xpow -= (d as i64) * e;
            *factors.entry(gn).or_insert(0) += e;
        }
        factors.retain(|_, e| *e != 0);
        LaurentRational {
            coeff,
            xpow,
            factors,
        }
    }

    /// X-degree of the numerator of the canonical form (ignoring the
    /// X-power shift).
    pub fn num_degree(&self) -> u64 {
        self.factors
            .iter()
            .filter(|(_, e)| **e > 0)
            .map(|(f, e)| f.degree() as u64 * *e as u64)
            .sum()
    }

    /// X-degree of the denominator of the canonical form.
    pub fn den_degree(&self) -> u64 {
        self.factors
            .iter()
            .filter(|(_, e)| **e < 0)
            .map(|(f, e)| f.degree() as u64 * (-*e) as u64)
            .sum()
    }

    /// Expanded exponent -> coefficient maps `(numerator, denominator)` of
    /// the canonical form, with all exponents nonnegative: a negative
    /// X-power shift is moved into the denominator.
    pub fn to_laurent_maps(&self) -> (BTreeMap<i64, Scalar>, BTreeMap<i64, Scalar>) {
        let norm = self.normalized();
        let mut num_map = BTreeMap::new();
        let mut den_map = BTreeMap::new();
        if norm.is_zero() {
            num_map.insert(0, Scalar::zero());
            den_map.insert(0, Scalar::one());
            return (num_map, den_map);
        }
        let num = norm.expand_side(true).scale(&norm.coeff);
        let den = norm.expand_side(false);
        let (num_shift, den_shift) = if norm.xpow >= 0 {
            (norm.xpow, 0)
        } else {
            (0, -norm.xpow)
        };
        for (i, c) in num.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num_map.insert(i as i64 + num_shift, c.clone());
            }
        }
        for (i, c) in den.coeffs().iter().enumerate() {
            if !c.is_zero() {
                den_map.insert(i as i64 + den_shift, c.clone());
            }
        }
        (num_map, den_map)
    }

    /// Rebuild a value from exponent -> coefficient maps.
    pub fn from_laurent_maps(
        num: &BTreeMap<i64, Scalar>,
        den: &BTreeMap<i64, Scalar>,
    ) -> Result<Self> {
        let build = |map: &BTreeMap<i64, Scalar>| -> (XPoly, i64) {
            let shift = map.keys().copied().min().unwrap_or(0);
            let top = map.keys().copied().max().unwrap_or(0);
            let mut coeffs = vec![Scalar::zero(); (top - shift + 1) as usize];
            for (e, c) in map {
                coeffs[(e - shift) as usize] = c.clone();
            }
            (XPoly::from_coeffs(coeffs), shift)
        };
        let (nump, nshift) = build(num);
        let (denp, dshift) = build(den);
        if denp.is_zero() {
            return Err(Error::MalformedInput(
                "zero denominator in Laurent rational".to_string(),
            ));
        }
        let n = LaurentRational::from_xpoly(&nump).mul(&LaurentRational::x_pow(nshift));
        let d = LaurentRational::from_xpoly(&denp).mul(&LaurentRational::x_pow(dshift));
        n.div(&d)
    }

    /// Substitute a numeric q (see [`Scalar::bind_q`]).
    pub fn bind_q(&self, qval: &num::BigRational) -> Result<Self> {
        let mut out = LaurentRational {
            coeff: self.coeff.bind_q(qval)?,
            xpow: self.xpow,
            factors: BTreeMap::new(),
        };
        for (f, e) in &self.factors {
            let coeffs: Result<Vec<Scalar>> =
                f.coeffs().iter().map(|c| c.bind_q(qval)).collect();
            let bound = XPoly::from_coeffs(coeffs?);
            let part = LaurentRational::from_xpoly(&bound).pow(*e)?;
            out = out.mul(&part);
        }
        Ok(out)
    }

    pub fn render(&self, mode: RenderMode) -> String {
        let (num, den) = self.to_laurent_maps();
        let num_s = render_laurent_map(&num, mode);
        if den.len() == 1 && den.get(&0).is_some_and(Scalar::is_one) {
            return num_s;
        }
        let den_s = render_laurent_map(&den, mode);
        match mode {
            RenderMode::Text => format!("({num_s})/({den_s})"),
            RenderMode::Latex => format!("\\frac{{{num_s}}}{{{den_s}}}"),
        }
    }
}

/// Render an exponent -> coefficient map, ascending exponents.
pub fn render_laurent_map(map: &BTreeMap<i64, Scalar>, mode: RenderMode) -> String {
    if map.is_empty() || map.values().all(Scalar::is_zero) {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (e, c) in map {
        if c.is_zero() {
            continue;
        }
        let body = render_x_term(c, *e, mode);
        if first {
            out.push_str(&body);
            first = false;
        } else if let Some(stripped) = body.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&body);
        }
    }
    out
}

fn render_x_term(c: &Scalar, e: i64, mode: RenderMode) -> String {
    let xs = if e == 0 {
        String::new()
    } else {
        match mode {
            RenderMode::Text => {
                if e == 1 {
                    "X".to_string()
                } else {
                    format!("X^{e}")
                }
            }
            RenderMode::Latex => {
                if e == 1 {
                    "X".to_string()
                } else {
                    format!("X^{{{e}}}")
                }
            }
        }
    };
    if xs.is_empty() {
        return c.render(mode);
    }
    if c.is_one() {
        return xs;
    }
    if *c == Scalar::from_int(-1) {
        return format!("-{xs}");
    }
    let cs = c.render(mode);
    let needs_parens = cs.contains('+') || cs.trim_start_matches('-').contains('-');
    let cs = if needs_parens { format!("({cs})") } else { cs };
    match mode {
        RenderMode::Text => format!("{cs}*{xs}"),
        RenderMode::Latex => format!("{cs} {xs}"),
    }
}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderMode::Text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> Scalar {
        Scalar::symbol(name).unwrap()
    }

    fn one_minus_x() -> LaurentRational {
        LaurentRational::one_minus_x(&Scalar::one())
    }

    #[test]
    fn common_factor_cancellation() {
        // (1-X)(1+X)/(1+X) -> 1-X
        let m1 = LaurentRational::one_minus_x(&Scalar::one());
        let p1 = LaurentRational::one_minus_x(&Scalar::from_int(-1)); // 1 + X
        let v = m1.mul(&p1).div(&p1).unwrap();
        assert_eq!(v, m1);
        assert_eq!(v.normalized(), m1.normalized());
    }

    #[test]
    fn scalar_cancellation() {
        // (q - qX)/q -> 1-X
        let q = Scalar::q();
        let num = [q.clone(), q.neg()];
        let den = [q.clone()];
        let v = LaurentRational::from_poly_pair(&num, &den).unwrap();
        assert!(v.equal(&one_minus_x()));
        assert_eq!(v.normalized(), one_minus_x().normalized());
    }

    #[test]
    fn u_square_relation_in_laurent() {
        // u^2 X / q -> X
        let num = [Scalar::zero(), Scalar::u().mul(&Scalar::u())];
        let den = [Scalar::q()];
        let v = LaurentRational::from_poly_pair(&num, &den).unwrap();
        assert!(v.equal(&LaurentRational::x()));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let num = [Scalar::one()];
        let den = [Scalar::zero()];
        assert!(LaurentRational::from_poly_pair(&num, &den).is_err());
    }

    #[test]
    fn substitute_dual_on_monomials() {
        // X -> q^{-1} X^{-1}
        let v = LaurentRational::x().substitute_dual();
        let expect = LaurentRational::x_pow(-1)
            .mul(&LaurentRational::from_scalar(Scalar::q_pow(-1)));
        assert!(v.equal(&expect));
    }

    #[test]
    fn substitute_dual_on_one_minus_x() {
        // 1-X -> 1 - q^{-1}X^{-1}
        let v = one_minus_x().substitute_dual();
        // 1 - q^{-1}X^{-1} = X^{-1}(X - q^{-1}) = -q^{-1} X^{-1} (1 - qX)
        let expect = LaurentRational::x_pow(-1)
            .mul(&LaurentRational::from_scalar(Scalar::q_pow(-1).neg()))
            .mul(&LaurentRational::one_minus_x(&Scalar::q()));
        assert_eq!(v, expect);
        // and the involution returns 1-X
        assert_eq!(v.substitute_dual(), one_minus_x());
    }

    #[test]
    fn addition_reduces_against_common_denominator() {
        let a = sym("lr_a");
        // 1/(1-aX) + (-aX)/(1-aX) == 1
        let den = LaurentRational::one_minus_x(&a);
        let t1 = LaurentRational::one().div(&den).unwrap();
        let t2 = LaurentRational::x()
            .mul(&LaurentRational::from_scalar(a.neg()))
            .div(&den)
            .unwrap();
        let sum = t1.add(&t2);
        assert!(sum.is_one());
    }

    #[test]
    fn equality_handles_regrouped_factors() {
        // (1 - X^2) vs (1-X)(1+X), built so the factor multisets differ.
        let sq = XPoly::from_coeffs(vec![
            Scalar::one(),
            Scalar::zero(),
            Scalar::from_int(-1),
        ]);
        let grouped = LaurentRational::from_xpoly(&sq);
        let split = LaurentRational::one_minus_x(&Scalar::one())
            .mul(&LaurentRational::one_minus_x(&Scalar::from_int(-1)));
        assert!(grouped.equal(&split));
        assert_eq!(grouped.normalized(), split.normalized());
        assert!(!grouped.equal(&LaurentRational::x()));
    }

    #[test]
    fn normalized_is_idempotent() {
        let a = sym("lr_n");
        let v = LaurentRational::one_minus_x(&a)
            .mul(&LaurentRational::x_pow(-3))
            .div(&LaurentRational::one_minus_x(&Scalar::q()))
            .unwrap();
        let n1 = v.normalized();
        assert_eq!(n1, n1.normalized());
        assert!(v.equal(&n1));
    }

    #[test]
    fn laurent_map_roundtrip() {
        let a = sym("lr_m");
        let v = LaurentRational::one_minus_x(&a)
            .mul(&LaurentRational::x_pow(-2))
            .mul(&LaurentRational::from_scalar(Scalar::u_pow(3)))
            .div(&LaurentRational::one_minus_x(&Scalar::q_pow(2)))
            .unwrap();
        let (num, den) = v.to_laurent_maps();
        let back = LaurentRational::from_laurent_maps(&num, &den).unwrap();
        assert!(back.equal(&v));
    }

    #[test]
    fn degree_accessors_use_factored_form() {
        let a = sym("lr_d");
        let v = LaurentRational::one_minus_x(&a)
            .pow(3)
            .unwrap()
            .div(&LaurentRational::one_minus_x(&Scalar::q()).pow(2).unwrap())
            .unwrap();
        assert_eq!(v.num_degree(), 3);
        assert_eq!(v.den_degree(), 2);
    }
}
