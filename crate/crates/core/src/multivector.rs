//! Dense multivectors and the geometric product.

use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::{blade_mul, BladeIndex};
use crate::{Complex, Error, Result, Signature};

const ZERO: Complex = Complex::new(0.0, 0.0);

/// `U = u e + u_a e^a + Σ u_{ab} e^{ab} + …` with one complex coefficient per
/// basis blade.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<Complex>,
}

/// Which grades [`random_multivector`] populates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Full,
    Even,
    Odd,
}

impl std::str::FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "full" => Ok(Profile::Full),
            "even" => Ok(Profile::Even),
            "odd" => Ok(Profile::Odd),
            _ => Err(format!(
                "unknown profile `{s}` (expected full, even or odd)"
            )),
        }
    }
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            coeffs: vec![ZERO; sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: Complex) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[0] = value;
        mv
    }

    /// The identity element `e`.
    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Complex::new(1.0, 0.0))
    }

    pub fn blade(sig: Signature, blade: BladeIndex, value: Complex) -> Self {
        assert!(blade.fits(sig), "blade {blade} outside {sig}");
        let mut mv = Self::zero(sig);
        mv.coeffs[blade.mask() as usize] = value;
        mv
    }

    /// Generator `e^a` (1-based) with unit coefficient.
    pub fn generator(sig: Signature, a: usize) -> Self {
        Self::blade(sig, BladeIndex::generator(a), Complex::new(1.0, 0.0))
    }

    /// Builds from a full coefficient vector of length `2^n`. Rejects
    /// non-finite entries.
    pub fn from_coeffs(sig: Signature, coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::MatrixDimension(coeffs.len(), sig.blade_count()));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { sig, coeffs })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: BladeIndex) -> Complex {
        self.coeffs[blade.mask() as usize]
    }

    pub fn set_coeff(&mut self, blade: BladeIndex, value: Complex) {
        self.coeffs[blade.mask() as usize] = value;
    }

    /// Nonzero terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, Complex)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(|(m, c)| (BladeIndex(m as u32), *c))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(
                self.sig.p(),
                self.sig.q(),
                other.sig.p(),
                other.sig.q(),
            ));
        }
        Ok(())
    }

    /// Applies a per-blade sign (or factor) chosen from the blade alone.
    pub(crate) fn map_blades(&self, mut f: impl FnMut(BladeIndex, Complex) -> Complex) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, &c)| f(BladeIndex(m as u32), c))
            .collect();
        Self {
            sig: self.sig,
            coeffs,
        }
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = vec![ZERO; self.coeffs.len()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == ZERO {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == ZERO {
                    continue;
                }
                let (m, s) = blade_mul(BladeIndex(a as u32), BladeIndex(b as u32), self.sig);
                let prod = ca * cb;
                if s > 0 {
                    out[m.mask() as usize] += prod;
                } else {
                    out[m.mask() as usize] -= prod;
                }
            }
        }
        Ok(Self {
            sig: self.sig,
            coeffs: out,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(Self {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(Self {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, alpha: Complex) -> Self {
        self.map_blades(|_, c| alpha * c)
    }

    /// `U^k` by repeated squaring; `U^0 = e`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.sig);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True iff the largest coefficientwise absolute difference is `<= tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> Result<bool> {
        self.check_sig(other)?;
        Ok(self.max_abs_diff(other) <= tol)
    }

    /// Largest coefficientwise `|u_A - v_A|`. Signatures must match.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.sig.n() {
            return Err(Error::GradeOutOfRange { k, n: self.sig.n() });
        }
        Ok(self.map_blades(|b, c| if b.grade() == k { c } else { ZERO }))
    }

    pub fn even_part(&self) -> Self {
        self.map_blades(|b, c| if b.is_even() { c } else { ZERO })
    }

    pub fn odd_part(&self) -> Self {
        self.map_blades(|b, c| if b.is_even() { ZERO } else { c })
    }

    pub fn is_even(&self) -> bool {
        self.terms().all(|(b, _)| b.is_even())
    }

    pub fn is_odd(&self) -> bool {
        self.terms().all(|(b, _)| !b.is_even())
    }

    /// Largest non-scalar coefficient magnitude.
    pub fn non_scalar_residual(&self) -> f64 {
        self.coeffs[1..]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

impl<'a> Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;

    /// Panics on signature mismatch; use [`Multivector::geometric_product`]
    /// for a fallible product.
    fn mul(self, rhs: &'a Multivector) -> Multivector {
        self.geometric_product(rhs).expect("geometric product")
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;

    fn add(self, rhs: &'a Multivector) -> Multivector {
        Multivector::add(self, rhs).expect("multivector addition")
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &'a Multivector) -> Multivector {
        Multivector::sub(self, rhs).expect("multivector subtraction")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.map_blades(|_, c| -c)
    }
}

fn unit_disc(rng: &mut impl Rng) -> Complex {
    let r = rng.random::<f64>().sqrt();
    let theta = rng.random::<f64>() * std::f64::consts::TAU;
    Complex::from_polar(r, theta)
}

/// Random multivector with coefficients uniform in the closed unit disc,
/// drawn from an explicit RNG.
pub fn random_multivector_with(
    rng: &mut impl Rng,
    sig: Signature,
    profile: Profile,
) -> Multivector {
    let mut mv = Multivector::zero(sig);
    for m in 0..sig.blade_count() {
        let blade = BladeIndex(m as u32);
        let keep = match profile {
            Profile::Full => true,
            Profile::Even => blade.is_even(),
            Profile::Odd => !blade.is_even(),
        };
        // draw even when discarded so profiles share a stream layout
        let c = unit_disc(rng);
        if keep {
            mv.coeffs[m] = c;
        }
    }
    mv
}

/// Deterministic random multivector for a given seed.
pub fn random_multivector(sig: Signature, seed: u64, profile: Profile) -> Multivector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_multivector_with(&mut rng, sig, profile)
}

/// Random complex number in the unit disc (shared with the matrix side).
pub(crate) fn random_unit_disc(rng: &mut impl Rng) -> Complex {
    unit_disc(rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn sample(sig: Signature) -> Multivector {
        // 2e + 3e1 + e12
        let mut u = Multivector::scalar(sig, c(2.0, 0.0));
        u.set_coeff(BladeIndex(0b01), c(3.0, 0.0));
        u.set_coeff(BladeIndex(0b11), c(1.0, 0.0));
        u
    }

    #[test]
    fn product_examples() {
        let s = sig(2, 0);
        let e1 = Multivector::generator(s, 1);
        let e2 = Multivector::generator(s, 2);
        let v = &e1 + &e2;
        assert_eq!(&v * &v, Multivector::scalar(s, c(2.0, 0.0)));
        let e12 = &e1 * &e2;
        assert_eq!(&e12 * &e12, Multivector::scalar(s, c(-1.0, 0.0)));

        let s = sig(1, 1);
        let e = Multivector::one(s);
        let e1 = Multivector::generator(s, 1);
        assert_eq!(&(&e + &e1) * &(&e - &e1), Multivector::zero(s));
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = Multivector::one(sig(2, 0));
        let b = Multivector::one(sig(1, 1));
        assert!(matches!(
            a.geometric_product(&b),
            Err(Error::SignatureMismatch(..))
        ));
        assert!(a.approx_eq(&b, 1.0).is_err());
    }

    #[test]
    fn grade_projection_examples() {
        let s = sig(2, 0);
        let u = sample(s);
        assert_eq!(
            u.grade_project(1).unwrap(),
            Multivector::blade(s, BladeIndex(1), c(3.0, 0.0))
        );
        assert_eq!(
            u.grade_project(0).unwrap(),
            Multivector::scalar(s, c(2.0, 0.0))
        );
        let e12 = Multivector::blade(s, BladeIndex(3), c(1.0, 0.0));
        assert_eq!(e12.grade_project(1).unwrap(), Multivector::zero(s));
        assert!(matches!(
            u.grade_project(3),
            Err(Error::GradeOutOfRange { k: 3, n: 2 })
        ));
    }

    #[test]
    fn even_odd_examples() {
        let s = sig(2, 0);
        let u = sample(s);
        let mut even = Multivector::scalar(s, c(2.0, 0.0));
        even.set_coeff(BladeIndex(3), c(1.0, 0.0));
        assert_eq!(u.even_part(), even);
        assert_eq!(
            u.odd_part(),
            Multivector::blade(s, BladeIndex(1), c(3.0, 0.0))
        );
        assert_eq!(Multivector::one(s).odd_part(), Multivector::zero(s));
        assert_eq!(&u.even_part() + &u.odd_part(), u);
    }

    #[test]
    fn plumbing_examples() {
        let s = sig(3, 0);
        let e1 = Multivector::generator(s, 1);
        assert_eq!(&e1 + &e1, e1.scale(c(2.0, 0.0)));
        assert_eq!(e1.scale(c(0.0, 1.0)).coeff(BladeIndex(1)), c(0.0, 1.0));
        let e = Multivector::one(s);
        let nudged = &e + &e1.scale(c(1e-15, 0.0));
        assert!(e.approx_eq(&nudged, 1e-12).unwrap());
        assert!(!e.approx_eq(&e1, 1e-12).unwrap());
    }

    #[test]
    fn random_profiles() {
        let s = sig(2, 3);
        assert_eq!(
            random_multivector(s, 1, Profile::Full),
            random_multivector(s, 1, Profile::Full)
        );
        let even = random_multivector(s, 1, Profile::Even);
        assert_eq!(even.odd_part(), Multivector::zero(s));
        assert!(random_multivector(s, 2, Profile::Full)
            .coeffs()
            .iter()
            .all(|c| c.norm() <= 1.0));
        let odd = random_multivector(s, 3, Profile::Odd);
        assert!(odd.is_odd() && !odd.is_even());
    }

    #[test]
    fn power_by_squaring() {
        let s = sig(2, 0);
        let e12 = Multivector::blade(s, BladeIndex(3), c(1.0, 0.0));
        assert_eq!(e12.pow(0), Multivector::one(s));
        assert_eq!(e12.pow(2), Multivector::scalar(s, c(-1.0, 0.0)));
        assert_eq!(e12.pow(5), e12);
    }

    #[test]
    fn rejects_non_finite() {
        let s = sig(1, 0);
        assert_eq!(
            Multivector::from_coeffs(s, vec![c(f64::NAN, 0.0), ZERO]),
            Err(Error::NonFinite)
        );
        assert!(Multivector::from_coeffs(s, vec![ZERO]).is_err());
    }
}
