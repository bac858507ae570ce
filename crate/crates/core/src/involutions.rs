//! Conjugations and grade sign flips.
//!
//! Everything except [`complex_conjugate`] and [`hermitian`] is a sign that
//! depends only on the grade (or, for [`plus_conj`], on the blade).

use crate::blade::{blade_mul, BladeIndex};
use crate::{Error, Multivector, Result};

fn grade_sign(u: &Multivector, negate: impl Fn(usize) -> bool) -> Multivector {
    u.map_blades(|b, c| if negate(b.grade()) { -c } else { c })
}

/// Coefficientwise complex conjugation `Ū`.
pub fn complex_conjugate(u: &Multivector) -> Multivector {
    u.map_blades(|_, c| c.conj())
}

/// Reverse `U~`: grade `k` picks up `(-1)^{k(k-1)/2}`.
pub fn reverse(u: &Multivector) -> Multivector {
    grade_sign(u, |k| (k * k.saturating_sub(1) / 2) % 2 == 1)
}

/// Grade involution `U^`: grade `k` picks up `(-1)^k`.
pub fn grade_involution(u: &Multivector) -> Multivector {
    grade_sign(u, |k| k % 2 == 1)
}

/// Clifford conjugation, grade involution of the reverse: `(-1)^{k(k+1)/2}`.
pub fn clifford_conjugation(u: &Multivector) -> Multivector {
    grade_sign(u, |k| (k * (k + 1) / 2) % 2 == 1)
}

/// Pseudo-Hermitian conjugation `U‡`, the reverse of `Ū`.
pub fn pseudo_hermitian(u: &Multivector) -> Multivector {
    reverse(&complex_conjugate(u))
}

/// `B^{-1} X B` for a basis blade `B` with unit coefficient.
pub(crate) fn blade_sandwich(x: &Multivector, blade: BladeIndex) -> Multivector {
    let sig = x.sig();
    // B B = s e, so B^{-1} = s B
    let (_, square) = blade_mul(blade, blade, sig);
    let mut out = Multivector::zero(sig);
    for (m, c) in x.terms() {
        let (left, s1) = blade_mul(blade, m, sig);
        let (res, s2) = blade_mul(left, blade, sig);
        let sign = square * s1 * s2;
        out.set_coeff(res, if sign > 0 { c } else { -c });
    }
    out
}

/// Hermitian conjugation `U†`, whose image in the recurrent representation
/// is the Hermitian transpose.
///
/// With `E = e^{1…p}` (`E = e` when `p = 0`):
/// `U† = E^{-1} U‡ E` for odd `p`, `U† = E^{-1} (U‡)^ E` for even `p`.
pub fn hermitian(u: &Multivector) -> Multivector {
    let p = u.sig().p();
    let dagger = pseudo_hermitian(u);
    let inner = if p % 2 == 1 {
        dagger
    } else {
        grade_involution(&dagger)
    };
    blade_sandwich(&inner, BladeIndex::range(1, p))
}

/// Negates the grade-`k` parts for every `k` in `grades`.
pub fn grade_flip(u: &Multivector, grades: &[usize]) -> Multivector {
    grade_sign(u, |k| grades.contains(&k))
}

/// `∇`: flips grade 4 when `n = 4`, grades 4 and 5 when `n = 5`.
pub fn nabla(u: &Multivector) -> Result<Multivector> {
    match u.sig().n() {
        4 => Ok(grade_flip(u, &[4])),
        5 => Ok(grade_flip(u, &[4, 5])),
        n => Err(Error::UnsupportedDimension { op: "nabla", n }),
    }
}

/// `△`: flips grade 5, only for `n = 5`.
pub fn triangle(u: &Multivector) -> Result<Multivector> {
    match u.sig().n() {
        5 => Ok(grade_flip(u, &[5])),
        n => Err(Error::UnsupportedDimension { op: "triangle", n }),
    }
}

/// `+` on the even subalgebra of an `n = 4` algebra: negates the even blades
/// that anticommute with `e^1`, which are exactly those containing index 1.
pub fn plus_conj(u: &Multivector) -> Result<Multivector> {
    let n = u.sig().n();
    if n != 4 {
        return Err(Error::UnsupportedDimension { op: "plus_conj", n });
    }
    if !u.is_even() {
        return Err(Error::NotEven { op: "plus_conj" });
    }
    Ok(u.map_blades(|b, c| if b.mask() & 1 == 1 { -c } else { c }))
}

impl Multivector {
    pub fn reverse(&self) -> Multivector {
        reverse(self)
    }

    pub fn grade_involution(&self) -> Multivector {
        grade_involution(self)
    }

    pub fn clifford_conjugation(&self) -> Multivector {
        clifford_conjugation(self)
    }

    pub fn complex_conjugate(&self) -> Multivector {
        complex_conjugate(self)
    }

    pub fn pseudo_hermitian(&self) -> Multivector {
        pseudo_hermitian(self)
    }

    pub fn hermitian(&self) -> Multivector {
        hermitian(self)
    }
}
