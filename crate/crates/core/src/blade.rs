use std::fmt;

use crate::Signature;

/// Canonical basis blade `e^{a1…ak}` (`a1 < … < ak`) as a bitmask; bit `a-1`
/// is set iff generator `a` is present. Mask `0` is the identity `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BladeIndex(pub u32);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_even(self) -> bool {
        self.grade().is_multiple_of(2)
    }

    /// Blade of a single 1-based generator.
    pub fn generator(a: usize) -> Self {
        debug_assert!(a >= 1);
        BladeIndex(1 << (a - 1))
    }

    /// Blade `e^{lo…hi}` spanning consecutive generators (empty range is `e`).
    pub fn range(lo: usize, hi: usize) -> Self {
        let mask = (lo..=hi).fold(0u32, |m, a| m | (1 << (a - 1)));
        BladeIndex(mask)
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }

    /// Key used by the JSON format: comma-separated ascending indices.
    pub fn key(self) -> String {
        self.indices()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Whether the mask fits the signature.
    pub fn fits(self, sig: Signature) -> bool {
        self.0 < (1 << sig.n())
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("e");
        }
        f.write_str("e")?;
        for a in self.indices() {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Parity of the transpositions needed to merge the index lists of `a` and
/// `b` into ascending order: for each generator of `b`, count the generators
/// of `a` with a strictly larger index.
#[inline]
pub(crate) fn reorder_is_odd(a: u32, b: u32) -> bool {
    let mut swaps = 0u32;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    swaps & 1 == 1
}

/// Product of two basis blades: `e^A e^B = sign · e^{A xor B}`.
#[inline]
pub fn blade_mul(a: BladeIndex, b: BladeIndex, sig: Signature) -> (BladeIndex, i8) {
    let mut odd = reorder_is_odd(a.0, b.0);
    // each shared generator contributes its square η^{cc}
    if (a.0 & b.0 & sig.negative_mask()).count_ones() & 1 == 1 {
        odd = !odd;
    }
    (BladeIndex(a.0 ^ b.0), if odd { -1 } else { 1 })
}
