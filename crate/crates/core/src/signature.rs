use std::fmt;

use crate::{Error, Result};

/// Largest supported `n = p + q`. Dense storage needs `2^n` coefficients and
/// textual blades use one digit per generator.
pub const MAX_DIM: usize = 9;

/// Signature `(p, q)`: generators `e^1..e^p` square to `+e`, `e^{p+1}..e^n`
/// square to `-e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > MAX_DIM {
            return Err(Error::DimensionTooLarge { p, q, max: MAX_DIM });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1 << self.n()
    }

    /// Diagonal metric entry `η^{aa}` for a 1-based generator index.
    pub fn eta(&self, a: usize) -> i8 {
        debug_assert!(a >= 1 && a <= self.n());
        if a <= self.p {
            1
        } else {
            -1
        }
    }

    /// Bitmask of the generators that square to `-e`.
    pub fn negative_mask(&self) -> u32 {
        ((1u32 << self.n()) - 1) & !((1u32 << self.p) - 1)
    }

    /// Order of the recurrent matrix representation, `2^⌊(n+1)/2⌋`.
    pub fn matrix_order(&self) -> usize {
        1 << self.n().div_ceil(2)
    }

    /// Every signature with `n <= max_n`, ordered by `n` then `p` descending.
    pub fn all_up_to(max_n: usize) -> Vec<Signature> {
        (0..=max_n.min(MAX_DIM))
            .flat_map(|n| (0..=n).rev().map(move |p| Signature { p, q: n - p }))
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl std::str::FromStr for Signature {
    type Err = String;

    /// Parses the comma form `p,q`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (p, q) = s
            .split_once(',')
            .ok_or_else(|| format!("expected `p,q`, got `{s}`"))?;
        let p = p
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad p: {e}"))?;
        let q = q
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad q: {e}"))?;
        Signature::new(p, q).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_entries() {
        let sig = Signature::new(1, 3).unwrap();
        assert_eq!(sig.n(), 4);
        assert_eq!(sig.eta(1), 1);
        assert_eq!(
            (2..=4).map(|a| sig.eta(a)).collect::<Vec<_>>(),
            [-1, -1, -1]
        );
        assert_eq!(sig.negative_mask(), 0b1110);
        assert_eq!(Signature::new(0, 0).unwrap().negative_mask(), 0);
    }

    #[test]
    fn matrix_orders() {
        let orders: Vec<usize> = (0..=6)
            .map(|n| Signature::new(n, 0).unwrap().matrix_order())
            .collect();
        assert_eq!(orders, [1, 2, 2, 4, 4, 8, 8]);
    }

    #[test]
    fn rejects_large_dimension() {
        assert!(Signature::new(5, 5).is_err());
        assert!(Signature::new(9, 0).is_ok());
    }

    #[test]
    fn enumerates_21_signatures_up_to_five() {
        let all = Signature::all_up_to(5);
        assert_eq!(all.len(), 21);
        assert_eq!(all[0], Signature::new(0, 0).unwrap());
    }

    #[test]
    fn parses_comma_form() {
        assert_eq!(
            "2,3".parse::<Signature>().unwrap(),
            Signature::new(2, 3).unwrap()
        );
        assert!("2;3".parse::<Signature>().is_err());
        assert!("7,7".parse::<Signature>().is_err());
    }
}
