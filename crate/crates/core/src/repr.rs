//! Recurrent matrix representation of `Cl(p,q)`.
//!
//! `Cl(n,0)` is built inductively from `Cl(2k,0)` with generators `γ^a`:
//!
//! * `Cl(2k+1,0)`: `e^a → diag(γ^a, -γ^a)` for `a <= 2k`, and
//!   `e^{2k+1} → diag(i^k γ^1…γ^{2k}, -i^k γ^1…γ^{2k})`;
//! * `Cl(2k+2,0)`: the same `2k+1` matrices plus `e^{2k+2} → [[0, 1], [1, 0]]`.
//!
//! Other signatures multiply the matrices of `e^a`, `a > p`, by `i`. All
//! entries lie in `{0, ±1, ±i}`, so the generators are exact in `f64`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blade::BladeIndex;
use crate::matrix::ComplexMatrix;
use crate::multivector::random_unit_disc;
use crate::{Complex, Error, Multivector, Result, Signature};

/// Generator matrices for a signature, together with the image of every
/// basis blade.
#[derive(Debug, Clone)]
pub struct Representation {
    sig: Signature,
    generators: Vec<ComplexMatrix>,
    blades: Vec<ComplexMatrix>,
}

/// `|det T|` below this is rejected when drawing a random similarity.
pub const MIN_TRANSFORM_DET: f64 = 1e-3;

fn i_pow(k: usize) -> Complex {
    match k % 4 {
        0 => Complex::new(1.0, 0.0),
        1 => Complex::new(0.0, 1.0),
        2 => Complex::new(-1.0, 0.0),
        _ => Complex::new(0.0, -1.0),
    }
}

/// Generators of `Cl(n,0)` by the recurrent scheme.
fn euclidean_generators(n: usize) -> Vec<ComplexMatrix> {
    let mut gens: Vec<ComplexMatrix> = Vec::new();
    let mut order = 1;
    while gens.len() < n {
        let m = gens.len();
        if m.is_multiple_of(2) {
            let k = m / 2;
            let top = gens
                .iter()
                .fold(ComplexMatrix::identity(order), |acc, g| &acc * g)
                .scale(i_pow(k));
            let minus = Complex::new(-1.0, 0.0);
            let mut next: Vec<ComplexMatrix> = gens
                .iter()
                .map(|g| ComplexMatrix::block_diag(g, &g.scale(minus)))
                .collect();
            next.push(ComplexMatrix::block_diag(&top, &top.scale(minus)));
            gens = next;
            order *= 2;
        } else {
            gens.push(ComplexMatrix::swap_blocks(order / 2));
        }
    }
    gens
}

impl Representation {
    /// Uses the given generator images; blade images are the ordered
    /// products `γ^{a1}…γ^{ak}`.
    pub fn from_generators(sig: Signature, generators: Vec<ComplexMatrix>) -> Result<Self> {
        if generators.len() != sig.n() {
            return Err(Error::MatrixDimension(generators.len(), sig.n()));
        }
        let order = generators.first().map_or(1, ComplexMatrix::dim);
        if let Some(g) = generators.iter().find(|g| g.dim() != order) {
            return Err(Error::MatrixDimension(g.dim(), order));
        }
        let mut blades = Vec::with_capacity(sig.blade_count());
        blades.push(ComplexMatrix::identity(order));
        for mask in 1..sig.blade_count() {
            // strip the highest generator: e^{A} = e^{A \ top} γ^{top}
            let top = 31 - (mask as u32).leading_zeros() as usize;
            let rest = mask & !(1 << top);
            let m = &blades[rest] * &generators[top];
            blades.push(m);
        }
        Ok(Self {
            sig,
            generators,
            blades,
        })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn order(&self) -> usize {
        self.blades[0].dim()
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    pub fn blade_matrix(&self, blade: BladeIndex) -> &ComplexMatrix {
        &self.blades[blade.mask() as usize]
    }

    /// Image of a multivector: `Σ u_A γ^A`.
    pub fn represent(&self, u: &Multivector) -> ComplexMatrix {
        assert_eq!(
            u.sig(),
            self.sig,
            "multivector signature does not match representation"
        );
        let d = self.order();
        let mut out = vec![Complex::new(0.0, 0.0); d * d];
        for (blade, c) in u.terms() {
            for (o, e) in out.iter_mut().zip(self.blade_matrix(blade).entries()) {
                if *e != Complex::new(0.0, 0.0) {
                    *o += c * e;
                }
            }
        }
        ComplexMatrix::from_entries(d, out).expect("square")
    }

    /// Conjugates every generator by `T`: `β^a = ±T^{-1} γ^a T`.
    pub fn transformed(&self, t: &ComplexMatrix, negate: bool) -> Result<Self> {
        if negate && self.sig.n().is_multiple_of(2) {
            return Err(Error::NegateEvenDimension(self.sig.n()));
        }
        if t.dim() != self.order() {
            return Err(Error::MatrixDimension(t.dim(), self.order()));
        }
        let t_inv = t.inverse().ok_or(Error::NotInvertible {
            abs_det: 0.0,
            tol: 0.0,
        })?;
        let sign = Complex::new(if negate { -1.0 } else { 1.0 }, 0.0);
        let gens = self
            .generators
            .iter()
            .map(|g| (&(&t_inv * g) * t).scale(sign))
            .collect();
        Self::from_generators(self.sig, gens)
    }
}

/// The recurrent representation for `sig`. For `n = 0` this is the trivial
/// order-1 representation with no generators.
pub fn build_generators(sig: Signature) -> Representation {
    let i = Complex::new(0.0, 1.0);
    let gens = euclidean_generators(sig.n())
        .into_iter()
        .enumerate()
        .map(|(idx, g)| if idx >= sig.p() { g.scale(i) } else { g })
        .collect();
    Representation::from_generators(sig, gens).expect("recurrent generators are consistent")
}

/// Image of `u` under the recurrent representation.
pub fn represent(u: &Multivector) -> ComplexMatrix {
    build_generators(u.sig()).represent(u)
}

/// Random similarity `T` (entries in the unit disc, `|det T| >= 1e-3`); on
/// rejection the next seed is tried.
pub fn random_transform(order: usize, seed: u64) -> ComplexMatrix {
    let mut seed = seed;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..order * order)
            .map(|_| random_unit_disc(&mut rng))
            .collect();
        let t = ComplexMatrix::from_entries(order, entries).expect("square");
        if t.det().norm() >= MIN_TRANSFORM_DET {
            return t;
        }
        seed = seed.wrapping_add(1);
    }
}

/// Another representation `β^a = ±T^{-1} γ^a T` of the same algebra, with a
/// random `T`. `negate` is only allowed for odd `n`.
pub fn alternate_representation(sig: Signature, seed: u64, negate: bool) -> Result<Representation> {
    if negate && sig.n().is_multiple_of(2) {
        return Err(Error::NegateEvenDimension(sig.n()));
    }
    let base = build_generators(sig);
    let t = random_transform(base.order(), seed);
    base.transformed(&t, negate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::{random_multivector, Profile};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn real(rows: &[&[f64]]) -> ComplexMatrix {
        let rows: Vec<Vec<Complex>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| c(x, 0.0)).collect())
            .collect();
        ComplexMatrix::from_rows(&rows).unwrap()
    }

    fn anticommutator_holds(rep: &Representation, tol: f64) -> bool {
        let sig = rep.sig();
        let id = ComplexMatrix::identity(rep.order());
        (1..=sig.n()).all(|a| {
            (1..=sig.n()).all(|b| {
                let ga = &rep.generators()[a - 1];
                let gb = &rep.generators()[b - 1];
                let lhs = &(ga * gb) + &(gb * ga);
                let eta = if a == b { 2.0 * sig.eta(a) as f64 } else { 0.0 };
                lhs.max_abs_diff(&id.scale(c(eta, 0.0))) <= tol
            })
        })
    }

    #[test]
    fn small_generators() {
        let rep = build_generators(sig(1, 0));
        assert_eq!(rep.generators()[0], real(&[&[1.0, 0.0], &[0.0, -1.0]]));
        let rep = build_generators(sig(2, 0));
        assert_eq!(rep.generators()[1], real(&[&[0.0, 1.0], &[1.0, 0.0]]));
        assert_eq!(build_generators(sig(0, 0)).order(), 1);
    }

    #[test]
    fn exact_anticommutation_up_to_six() {
        for s in Signature::all_up_to(6) {
            let rep = build_generators(s);
            assert_eq!(rep.order(), s.matrix_order());
            assert!(anticommutator_holds(&rep, 0.0), "{s}");
        }
    }

    #[test]
    fn represent_examples() {
        let s = sig(2, 0);
        assert_eq!(represent(&Multivector::one(s)), ComplexMatrix::identity(2));
        let e12 = Multivector::blade(s, BladeIndex(0b11), c(1.0, 0.0));
        assert_eq!(represent(&e12), real(&[&[0.0, 1.0], &[-1.0, 0.0]]));
    }

    #[test]
    fn homomorphism() {
        for s in [sig(1, 3), sig(3, 2), sig(0, 5)] {
            let rep = build_generators(s);
            let u = random_multivector(s, 1, Profile::Full);
            let v = random_multivector(s, 2, Profile::Full);
            let lhs = &rep.represent(&u) * &rep.represent(&v);
            assert!(lhs.max_abs_diff(&rep.represent(&(&u * &v))) <= 1e-10, "{s}");
        }
    }

    #[test]
    fn odd_dimension_block_structure() {
        for s in Signature::all_up_to(5)
            .into_iter()
            .filter(|s| s.n() % 2 == 1)
        {
            let rep = build_generators(s);
            let even = random_multivector(s, 7, Profile::Even);
            let odd = random_multivector(s, 8, Profile::Odd);
            assert!(rep.represent(&even).has_paired_blocks(1.0, 1e-12), "{s}");
            assert!(rep.represent(&odd).has_paired_blocks(-1.0, 1e-12), "{s}");
        }
    }

    #[test]
    fn faithful_for_even_n() {
        // blade images are linearly independent iff the Gram matrix
        // tr(B_A^† B_B) is nonsingular
        for s in Signature::all_up_to(4)
            .into_iter()
            .filter(|s| s.n() % 2 == 0)
        {
            let rep = build_generators(s);
            let count = s.blade_count();
            let mut gram = ComplexMatrix::zeros(count);
            for a in 0..count {
                for b in 0..count {
                    let ma = rep.blade_matrix(BladeIndex(a as u32)).hermitian_transpose();
                    let mb = rep.blade_matrix(BladeIndex(b as u32));
                    gram.set(a, b, (&ma * mb).trace());
                }
            }
            assert!(gram.det().norm() > 0.5, "{s}");
        }
    }

    #[test]
    fn alternate_representation_relations() {
        for s in Signature::all_up_to(5) {
            let rep = alternate_representation(s, 42, false).unwrap();
            assert!(anticommutator_holds(&rep, 1e-8), "{s}");
            if s.n() % 2 == 1 {
                let rep = alternate_representation(s, 42, true).unwrap();
                assert!(anticommutator_holds(&rep, 1e-8), "{s}");
            } else {
                assert!(matches!(
                    alternate_representation(s, 42, true),
                    Err(Error::NegateEvenDimension(_))
                ));
            }
        }
    }

    #[test]
    fn identity_transform_is_exact() {
        let s = sig(2, 2);
        let base = build_generators(s);
        let same = base
            .transformed(&ComplexMatrix::identity(base.order()), false)
            .unwrap();
        assert_eq!(same.generators(), base.generators());
    }

    #[test]
    fn random_transform_is_conditioned() {
        for seed in 0..20 {
            assert!(random_transform(4, seed).det().norm() >= MIN_TRANSFORM_DET);
        }
    }
}
