//! Characters of the local field and the Tate GL(1) local factors.
//!
//! A [`MultChar`] is a character of F^x presented as an unramified part (its
//! value at a uniformizer times a power of the absolute value) together with
//! a formal product of opaque ramified labels. Products and inverses are
//! exact group operations; two characters are equal when their ramified
//! parts agree and their folded Frobenius eigenvalues agree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratfun::{LaurentRational, Scalar};
use crate::wdrep::gamma::{GammaAtom, GammaExpr, Operand};

/// A nontrivial additive character of F, described by its conductor exponent.
///
/// Every computation path in this release requires conductor exponent 0;
/// the field exists so the restriction is explicit at the interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AdditiveCharacter {
    pub conductor_exponent: i64,
}

impl AdditiveCharacter {
    pub fn standard() -> Self {
        AdditiveCharacter {
            conductor_exponent: 0,
        }
    }

    /// The conjugate character psi-bar (same conductor).
    pub fn conjugate(&self) -> Self {
        *self
    }

    pub fn require_unramified(&self) -> Result<()> {
        if self.conductor_exponent != 0 {
            return Err(Error::UnsupportedConfiguration(format!(
                "additive characters with conductor exponent {} are not supported \
                 (only n(psi) = 0)",
                self.conductor_exponent
            )));
        }
        Ok(())
    }
}

/// Formal multiset of ramified-character labels (exponents never zero).
pub type RamPart = BTreeMap<String, i64>;

/// A multiplicative character of F^x.
#[derive(Debug, Clone)]
pub struct MultChar {
    /// Value at a uniformizer of the unramified part (nonzero scalar).
    alpha: Scalar,
    /// Extra twist by |.|^t, t a half-integer.
    twist: BigRational,
    /// Opaque ramified labels with integer exponents.
    ram: RamPart,
}

fn check_half_integer(t: &BigRational) -> Result<()> {
    let two = BigInt::from(2);
    if !t.denom().is_one() && *t.denom() != two {
        return Err(Error::UnsupportedConfiguration(format!(
            "twist exponent {t} is not a half-integer"
        )));
    }
    Ok(())
}

impl MultChar {
    pub fn trivial() -> Self {
        MultChar {
            alpha: Scalar::one(),
            twist: BigRational::zero(),
            ram: RamPart::new(),
        }
    }

    /// Unramified character with the given value at a uniformizer.
    pub fn unramified(alpha: Scalar) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::MalformedInput(
                "character value at the uniformizer must be nonzero".to_string(),
            ));
        }
        Ok(MultChar {
            alpha,
            twist: BigRational::zero(),
            ram: RamPart::new(),
        })
    }

    /// Unramified character from a fresh (or existing) symbol.
    pub fn unramified_symbol(name: &str) -> Result<Self> {
        MultChar::unramified(Scalar::symbol(name)?)
    }

    /// Opaque ramified character atom.
    pub fn ramified(label: &str) -> Result<Self> {
        if label.is_empty() {
            return Err(Error::MalformedInput(
                "ramified character label must be nonempty".to_string(),
            ));
        }
        let mut ram = RamPart::new();
        ram.insert(label.to_string(), 1);
        Ok(MultChar {
            alpha: Scalar::one(),
            twist: BigRational::zero(),
            ram,
        })
    }

    /// The absolute-value power |.|^t.
    pub fn absolute_power(t: BigRational) -> Result<Self> {
        MultChar::trivial().twisted_by(&t)
    }

    /// Multiply by |.|^t.
    pub fn twisted_by(&self, t: &BigRational) -> Result<Self> {
        let twist = &self.twist + t;
        check_half_integer(&twist)?;
        Ok(MultChar {
            alpha: self.alpha.clone(),
            twist,
            ram: self.ram.clone(),
        })
    }

    pub fn mul(&self, other: &MultChar) -> Result<MultChar> {
        let twist = &self.twist + &other.twist;
        check_half_integer(&twist)?;
        let mut ram = self.ram.clone();
        for (label, e) in &other.ram {
            let entry = ram.entry(label.clone()).or_insert(0);
            *entry += e;
            if *entry == 0 {
                ram.remove(label);
            }
        }
        Ok(MultChar {
            alpha: self.alpha.mul(&other.alpha),
            twist,
            ram,
        })
    }

    pub fn inverse(&self) -> MultChar {
        MultChar {
            alpha: self.alpha.inv().expect("character values are nonzero"),
            twist: -self.twist.clone(),
            ram: self.ram.iter().map(|(l, e)| (l.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<MultChar> {
        if k < 0 {
            return self.inverse().pow(-k);
        }
        let mut out = MultChar::trivial();
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn is_unramified(&self) -> bool {
        self.ram.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_unramified() && self.eigenvalue().is_one()
    }

    /// Folded Frobenius eigenvalue of the unramified part: alpha * q^{-t}.
    pub fn eigenvalue(&self) -> Scalar {
        let two = BigRational::from_integer(BigInt::from(2));
        let doubled = &self.twist * &two;
        let k: i64 = doubled
            .numer()
            .try_into()
            .expect("twist within range");
        self.alpha.mul(&Scalar::u_pow(-k))
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn twist(&self) -> &BigRational {
        &self.twist
    }

    pub fn ram_part(&self) -> &RamPart {
        &self.ram
    }

    /// The unramified component (alpha and twist, ramified labels dropped).
    pub fn unramified_part(&self) -> MultChar {
        MultChar {
            alpha: self.alpha.clone(),
            twist: self.twist.clone(),
            ram: RamPart::new(),
        }
    }

    fn key(&self) -> (&RamPart, Scalar) {
        (&self.ram, self.eigenvalue())
    }
}

impl PartialEq for MultChar {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for MultChar {}

impl PartialOrd for MultChar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultChar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (label, e) in &self.ram {
            if *e == 1 {
                parts.push(label.clone());
            } else {
                parts.push(format!("{label}^{e}"));
            }
        }
        let eig = self.eigenvalue();
        if !eig.is_one() || parts.is_empty() {
            parts.push(eig.to_string());
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Tate L-factor L(s, chi).
///
/// Unramified chi with eigenvalue e gives 1/(1 - e X); ramified characters
/// have no inertia invariants and contribute 1.
pub fn tate_l(chi: &MultChar) -> LaurentRational {
    if !chi.is_unramified() {
        return LaurentRational::one();
    }
    LaurentRational::one_minus_x(&chi.eigenvalue())
        .inv()
        .expect("1 - eX is nonzero")
}

/// Tate gamma-factor gamma(s, chi, psi) = eps(s, chi, psi) L(1-s, chi^{-1}) / L(s, chi).
///
/// For unramified chi and n(psi) = 0 the epsilon-factor is 1 and the value
/// is explicit; for ramified chi the whole factor stays a formal gamma-atom.
pub fn tate_gamma(chi: &MultChar, psi: &AdditiveCharacter) -> Result<GammaExpr> {
    psi.require_unramified()?;
    if chi.is_unramified() {
        let l_dual = tate_l(&chi.inverse()).substitute_dual();
        let l_here = tate_l(chi);
        let rational = l_dual.div(&l_here).expect("L-factors are nonzero");
        return Ok(GammaExpr::from_rational(rational));
    }
    let atom = GammaAtom::new(
        Operand::RamChar(chi.ram_part().clone()),
        Operand::Trivial,
        chi.unramified_part(),
    );
    Ok(GammaExpr::from_atom(atom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(2))
    }

    fn psi() -> AdditiveCharacter {
        AdditiveCharacter::standard()
    }

    #[test]
    fn trivial_character_l_factor() {
        let l = tate_l(&MultChar::trivial());
        // 1/(1-X)
        let expect = LaurentRational::one_minus_x(&Scalar::one())
            .inv()
            .unwrap();
        assert!(l.equal(&expect));
    }

    #[test]
    fn twisted_l_factor_uses_u() {
        // unramified alpha with twist 1/2 -> 1/(1 - alpha u^{-1} X)
        let alpha = Scalar::symbol("lc_alpha").unwrap();
        let chi = MultChar::unramified(alpha.clone())
            .unwrap()
            .twisted_by(&half())
            .unwrap();
        let expect = LaurentRational::one_minus_x(&alpha.mul(&Scalar::u_pow(-1)))
            .inv()
            .unwrap();
        assert!(tate_l(&chi).equal(&expect));
    }

    #[test]
    fn ramified_l_factor_is_one() {
        let chi = MultChar::ramified("lc_ram").unwrap();
        assert!(tate_l(&chi).is_one());
    }

    #[test]
    fn trivial_gamma_explicit() {
        // gamma(s, 1, psi) = (1-X)/(1-q^{-1}X^{-1})
        let g = tate_gamma(&MultChar::trivial(), &psi()).unwrap();
        assert!(g.atoms().next().is_none());
        let num = LaurentRational::one_minus_x(&Scalar::one());
        // build 1 - q^{-1} X^{-1} directly: X^{-1}(X - q^{-1})
        let den = LaurentRational::from_poly_pair(
            &[Scalar::q_pow(-1).neg(), Scalar::one()],
            &[Scalar::one()],
        )
        .unwrap()
        .mul(&LaurentRational::x_pow(-1));
        let expect = num.div(&den).unwrap();
        assert!(g.rational().equal(&expect));
    }

    #[test]
    fn gamma_inversion_identity() {
        // gamma(s, chi, psi) * gamma(1-s, chi^{-1}, psi^{-1}) = 1
        let alpha = Scalar::symbol("lc_inv_a").unwrap();
        let chi = MultChar::unramified(alpha).unwrap().twisted_by(&half()).unwrap();
        let g1 = tate_gamma(&chi, &psi()).unwrap();
        let g2 = tate_gamma(&chi.inverse(), &psi().conjugate()).unwrap();
        let g2_at_one_minus_s = g2.substitute_dual();
        let prod = g1.mul(&g2_at_one_minus_s);
        assert!(prod.is_one(), "product: {prod}");
    }

    #[test]
    fn ramified_gamma_is_atom() {
        let chi = MultChar::ramified("lc_ratom").unwrap().twisted_by(&half()).unwrap();
        let g = tate_gamma(&chi, &psi()).unwrap();
        assert!(g.rational().is_one());
        assert_eq!(g.atoms().count(), 1);
    }

    #[test]
    fn nonzero_conductor_rejected() {
        let psi = AdditiveCharacter {
            conductor_exponent: 1,
        };
        let err = tate_gamma(&MultChar::trivial(), &psi).unwrap_err();
        assert!(matches!(err, Error::UnsupportedConfiguration(_)));
    }

    #[test]
    fn character_group_laws() {
        let a = MultChar::unramified_symbol("lc_g1").unwrap();
        let b = MultChar::unramified_symbol("lc_g2")
            .unwrap()
            .twisted_by(&half())
            .unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.inverse(), b.inverse().mul(&a.inverse()).unwrap());
        assert!(prod.mul(&prod.inverse()).unwrap().is_trivial());
        assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn ramified_equality_needs_matching_labels() {
        let r1 = MultChar::ramified("lc_r1").unwrap();
        let r2 = MultChar::ramified("lc_r2").unwrap();
        assert_ne!(r1, r2);
        assert_eq!(r1, MultChar::ramified("lc_r1").unwrap());
        // label^1 * label^-1 collapses to the trivial character
        assert!(r1.mul(&r1.inverse()).unwrap().is_trivial());
    }

    #[test]
    fn folded_equality_of_twists() {
        // alpha = q^{-1}, t = 0  equals  alpha = 1, t = 1
        let c1 = MultChar::unramified(Scalar::q_pow(-1)).unwrap();
        let c2 = MultChar::unramified(Scalar::one())
            .unwrap()
            .twisted_by(&BigRational::one())
            .unwrap();
        assert_eq!(c1, c2);
    }
}
