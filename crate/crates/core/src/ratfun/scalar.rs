//! Exact scalars: canonical fractions over the symbol ring.
//!
//! A [`Scalar`] is a reduced fraction of two [`MPoly`]s with a monic
//! denominator, so equal values always have identical representations.
//! Nonzero scalars are invertible, which makes the scalars a field; this is
//! what lets Laurent-polynomial coefficients be divided freely downstream.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use super::symbols::{self, gcd, MPoly, Monomial, RenderMode, SymId, SYM_U};
use crate::error::{Error, Result};

/// An element of the symbol ring's fraction field, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Scalar {
    num: MPoly,
    den: MPoly,
}

impl Scalar {
    /// Build a fraction, reducing to canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::MalformedInput(
                "zero denominator in symbol-ring fraction".to_string(),
            ));
        }
        Ok(Scalar::reduced(num, den))
    }

    fn reduced(num: MPoly, den: MPoly) -> Scalar {
        if num.is_zero() {
            return Scalar {
                num: MPoly::zero(),
                den: MPoly::one(),
            };
        }
        let (mut num, mut den) = (num, den);
        if !den.is_one() {
            let g = gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides");
                den = den.div_exact(&g).expect("gcd divides");
            }
        }
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar {
            num: MPoly::from_int(n),
            den: MPoly::one(),
        }
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar {
            num: MPoly::constant(r),
            den: MPoly::one(),
        }
    }

    /// A named generator.
    pub fn symbol(name: &str) -> Result<Scalar> {
        let id = symbols::symbol(name)?;
        Ok(Scalar {
            num: MPoly::var(id),
            den: MPoly::one(),
        })
    }

    pub fn from_symbol_id(id: SymId) -> Scalar {
        Scalar {
            num: MPoly::var(id),
            den: MPoly::one(),
        }
    }

    /// The formal square root of q.
    pub fn u() -> Scalar {
        Scalar::from_symbol_id(SYM_U)
    }

    /// `u^k` for any integer k (negative powers become fractions).
    pub fn u_pow(k: i64) -> Scalar {
        if k >= 0 {
            Scalar {
                num: MPoly::term(Monomial::var(SYM_U, k as u32), BigRational::one()),
                den: MPoly::one(),
            }
        } else {
            Scalar {
                num: MPoly::one(),
                den: MPoly::term(Monomial::var(SYM_U, (-k) as u32), BigRational::one()),
            }
        }
    }

    /// The residue cardinality q = u^2.
    pub fn q() -> Scalar {
        Scalar::u_pow(2)
    }

    pub fn q_pow(k: i64) -> Scalar {
        Scalar::u_pow(2 * k)
    }

    /// `q^t` for a half-integer t (error otherwise).
    pub fn q_rational_pow(t: &BigRational) -> Result<Scalar> {
        let doubled = t * BigRational::from_integer(BigInt::from(2));
        if !doubled.denom().is_one() {
            return Err(Error::UnsupportedConfiguration(format!(
                "q^{t} is not representable: exponents must be half-integers"
            )));
        }
        let k: i64 = doubled
            .numer()
            .try_into()
            .map_err(|_| Error::MalformedInput(format!("exponent {t} out of range")))?;
        Ok(Scalar::u_pow(k))
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Scalar::reduced(num, den)
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar {
                num: self.num.mul(&other.num),
                den: MPoly::one(),
            };
        }
        // Cross-cancel before multiplying to keep intermediates reduced.
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        let lc = den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::MalformedInput(
                "division by zero in the symbol ring".to_string(),
            ));
        }
        Ok(Scalar::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = Scalar::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(out)
    }

    /// Substitute a numeric value for q (and for u, when q is a perfect
    /// square). Errors if the denominator vanishes under the binding.
    pub fn bind_q(&self, qval: &BigRational) -> Result<Scalar> {
        let num = self.num.bind_q(qval);
        let den = self.den.bind_q(qval);
        if den.is_zero() {
            return Err(Error::MalformedInput(format!(
                "denominator vanishes under the binding q = {qval}"
            )));
        }
        Ok(Scalar::reduced(num, den))
    }

    pub fn render(&self, mode: RenderMode) -> String {
        if self.den.is_one() {
            return symbols::render_mpoly(&self.num, mode);
        }
        let n = symbols::render_mpoly(&self.num, mode);
        let d = symbols::render_mpoly(&self.den, mode);
        match mode {
            RenderMode::Text => format!("({n})/({d})"),
            RenderMode::Latex => format!("\\frac{{{n}}}{{{d}}}"),
        }
    }

    /// Deterministic comparison (canonical forms compare structurally).
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        self.cmp(other)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderMode::Text))
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(name: &str) -> Scalar {
        Scalar::symbol(name).unwrap()
    }

    #[test]
    fn fraction_reduction_is_canonical() {
        let a = s("sc_a");
        let b = s("sc_b");
        // (a^2 - b^2) / (a - b) == a + b
        let num = a.mul(&a).sub(&b.mul(&b));
        let den = a.sub(&b);
        let f = num.div(&den).unwrap();
        assert_eq!(f, a.add(&b));
    }

    #[test]
    fn u_squared_is_q() {
        assert_eq!(Scalar::u().mul(&Scalar::u()), Scalar::q());
        // u^2 - q == 0
        assert!(Scalar::u().mul(&Scalar::u()).sub(&Scalar::q()).is_zero());
    }

    #[test]
    fn inverse_of_u_is_u_over_q() {
        // 1/u and u/q must have identical canonical forms.
        let lhs = Scalar::u().inv().unwrap();
        let rhs = Scalar::u().div(&Scalar::q()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Scalar::u_pow(-1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Scalar::new(MPoly::one(), MPoly::zero()).is_err());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn denominator_is_monic() {
        let a = s("md_a");
        // 1 / (2a) -> (1/2) / a
        let f = Scalar::one().div(&a.mul(&Scalar::from_int(2))).unwrap();
        assert!(f.denominator().leading().unwrap().1.is_one());
        assert_eq!(f.mul(&a.mul(&Scalar::from_int(2))), Scalar::one());
    }

    #[test]
    fn binding_q_substitutes_exactly() {
        // (q - q X)/q with q=9: scalar part only: (1 - 1/q) = 8/9
        let v = Scalar::one().sub(&Scalar::q_pow(-1));
        let bound = v.bind_q(&BigRational::from_integer(BigInt::from(9))).unwrap();
        assert_eq!(
            bound,
            Scalar::from_rational(BigRational::new(BigInt::from(8), BigInt::from(9)))
        );
        // u with q = 9 becomes 3
        let ub = Scalar::u().bind_q(&BigRational::from_integer(BigInt::from(9))).unwrap();
        assert_eq!(ub, Scalar::from_int(3));
    }

    #[test]
    fn half_integer_q_powers() {
        let t = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(Scalar::q_rational_pow(&t).unwrap(), Scalar::u());
        let bad = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(Scalar::q_rational_pow(&bad).is_err());
    }
}
