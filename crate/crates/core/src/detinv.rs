//! Trace, determinant and inverse of multivectors.
//!
//! Closed forms exist for `n <= 5`; each is a product of conjugates of `U`
//! whose value is a pure scalar. Writing the product as `U · A(U)`, the
//! remaining factor `A(U)` is the adjugate and `U^{-1} = A(U) / Det U`.
//! Up to `n = 5`:
//!
//! | n | `Det U`                                   |
//! |---|-------------------------------------------|
//! | 0 | `U`                                       |
//! | 1 | `U U^`                                    |
//! | 2 | `U U~^`                                   |
//! | 3 | `U U~ U^ U~^`                             |
//! | 4 | `U U~ (U^ U~^)∇`                          |
//! | 5 | `H H△` with `H = U U~ (U^ U~^)∇`           |

use crate::involutions::{grade_involution, nabla, plus_conj, reverse, triangle};
use crate::repr::represent;
use crate::{Complex, Error, Multivector, Result};

/// Relative size allowed for the non-scalar part of a determinant product.
pub const SCALAR_RESIDUAL_TOL: f64 = 1e-9;

/// Largest `n` with a closed-form determinant and inverse.
pub const MAX_CLOSED_FORM_DIM: usize = 5;

/// Scalar part `<U>_0`.
pub fn trace(u: &Multivector) -> Complex {
    u.coeffs()[0]
}

/// `tr(represent(U)) / 2^⌊(n+1)/2⌋`.
pub fn trace_via_matrix(u: &Multivector) -> Complex {
    let m = represent(u);
    m.trace() / m.dim() as f64
}

/// `det(represent(U))` in the recurrent representation.
pub fn det_via_matrix(u: &Multivector) -> Complex {
    represent(u).det()
}

/// Degree of `Det` as a polynomial in the coefficients, `2^⌊(n+1)/2⌋`.
fn det_degree(n: usize) -> i32 {
    1 << n.div_ceil(2)
}

/// The adjugate `A(U)` such that `U A(U) = Det(U) e`.
fn adjugate(u: &Multivector) -> Result<Multivector> {
    let sig = u.sig();
    let rev = reverse(u);
    let inv = grade_involution(u);
    let rev_inv = grade_involution(&rev);
    Ok(match sig.n() {
        0 => Multivector::one(sig),
        1 => inv,
        2 => rev_inv,
        3 => &(&rev * &inv) * &rev_inv,
        4 => &rev * &nabla(&(&inv * &rev_inv))?,
        5 => {
            let tail = nabla(&(&inv * &rev_inv))?;
            let h = &(u * &rev) * &tail;
            &(&rev * &tail) * &triangle(&h)?
        }
        n => {
            return Err(Error::UnsupportedDimension {
                op: "closed-form adjugate",
                n,
            })
        }
    })
}

/// Checks that `product` is a scalar to within the residual tolerance and
/// returns its scalar coefficient.
fn scalar_of(u: &Multivector, product: &Multivector) -> Result<Complex> {
    let scale = u.max_abs().max(1.0).powi(det_degree(u.sig().n()));
    let bound = SCALAR_RESIDUAL_TOL * (1.0 + scale);
    let residual = product.non_scalar_residual();
    if residual > bound {
        return Err(Error::NotScalar { residual, bound });
    }
    Ok(trace(product))
}

/// `Det U`: the closed form for `n <= 5`, the matrix determinant otherwise.
pub fn det(u: &Multivector) -> Result<Complex> {
    if u.sig().n() > MAX_CLOSED_FORM_DIM {
        return Ok(det_via_matrix(u));
    }
    let product = u * &adjugate(u)?;
    scalar_of(u, &product)
}

/// Default threshold for "`Det U ≠ 0`", scaled with the determinant's
/// degree: `1e-12 · max(1, max|u_A|)^{2^⌊(n+1)/2⌋}`.
pub fn default_invertibility_tol(u: &Multivector) -> f64 {
    1e-12 * u.max_abs().max(1.0).powi(det_degree(u.sig().n()))
}

pub fn is_invertible(u: &Multivector, tol: f64) -> bool {
    match det(u) {
        Ok(d) => d.norm() > tol,
        Err(_) => false,
    }
}

/// `U^{-1} = A(U) / Det U`, closed form only (`n <= 5`).
pub fn inverse(u: &Multivector, tol: f64) -> Result<Multivector> {
    let n = u.sig().n();
    if n > MAX_CLOSED_FORM_DIM {
        return Err(Error::UnsupportedDimension { op: "inverse", n });
    }
    let adj = adjugate(u)?;
    let d = scalar_of(u, &(u * &adj))?;
    if d.is_nan() || d.norm() <= tol {
        return Err(Error::not_invertible(d, tol));
    }
    Ok(adj.scale(d.inv()))
}

/// Alternative `n = 4` forms for elements of pure parity:
/// `U U~ U~+ U+` for even `U`, `U U~ U~ U` for odd `U`.
pub fn det_parity_n4(u: &Multivector) -> Result<Complex> {
    let n = u.sig().n();
    if n != 4 {
        return Err(Error::UnsupportedDimension {
            op: "det_parity_n4",
            n,
        });
    }
    let rev = reverse(u);
    let product = if u.is_even() {
        &(&(u * &rev) * &plus_conj(&rev)?) * &plus_conj(u)?
    } else if u.is_odd() {
        &(&(u * &rev) * &rev) * u
    } else {
        return Err(Error::MixedParity {
            op: "det_parity_n4",
        });
    };
    scalar_of(u, &product)
}

impl Multivector {
    pub fn trace(&self) -> Complex {
        trace(self)
    }

    pub fn det(&self) -> Result<Complex> {
        det(self)
    }

    pub fn inverse(&self) -> Result<Multivector> {
        inverse(self, default_invertibility_tol(self))
    }
}

/// Trace in an arbitrary representation (used for independence checks).
pub fn trace_in(rep: &crate::Representation, u: &Multivector) -> Complex {
    let m = rep.represent(u);
    m.trace() / m.dim() as f64
}

/// Determinant in an arbitrary representation.
pub fn det_in(rep: &crate::Representation, u: &Multivector) -> Complex {
    rep.represent(u).det()
}
