//! Residues mod n, chords of the n-cycle and the discrete crossing predicate.
//!
//! Vertices of K_n sit on a cycle and carry residues `0..n`. A chord is an
//! unordered pair of distinct residues; two chords cross when their
//! endpoints interleave around the cycle.

use std::fmt;

use crate::error::{Error, Result};

/// A residue class in Z/n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicLabel {
    value: u32,
    modulus: u32,
}

impl CyclicLabel {
    /// Reduces `value` into `0..modulus`.
    pub fn new(value: i64, modulus: u32) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        CyclicLabel { value: value.rem_euclid(modulus as i64) as u32, modulus }
    }

    /// Residue for a 1-based label `1..=n` (label n is residue 0's
    /// predecessor, i.e. residue n - 1).
    pub fn from_one_based(label: i64, modulus: u32) -> Self {
        Self::new(label - 1, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    /// 1-based representative in `1..=n`.
    pub fn one_based(self) -> u32 {
        self.value + 1
    }

    pub fn shifted(self, by: i64) -> Self {
        Self::new(self.value as i64 + by, self.modulus)
    }

    /// `(self - other) mod n`, in `0..n`.
    pub fn offset_from(self, other: CyclicLabel) -> u32 {
        assert_eq!(self.modulus, other.modulus, "labels over different moduli");
        (self.value + self.modulus - other.value) % self.modulus
    }
}

/// Unordered pair of distinct residues, stored as `(lo, hi)` with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    lo: u32,
    hi: u32,
    modulus: u32,
}

impl Chord {
    pub fn new(a: CyclicLabel, c: CyclicLabel) -> Result<Self> {
        assert_eq!(a.modulus, c.modulus, "chord endpoints over different moduli");
        if a.value == c.value {
            return Err(Error::DegenerateChord(a.value));
        }
        Ok(Chord { lo: a.value.min(c.value), hi: a.value.max(c.value), modulus: a.modulus })
    }

    /// Chord from raw residues, reduced mod `n`.
    pub fn from_residues(a: i64, c: i64, n: u32) -> Result<Self> {
        Self::new(CyclicLabel::new(a, n), CyclicLabel::new(c, n))
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn endpoints(self) -> (CyclicLabel, CyclicLabel) {
        (CyclicLabel { value: self.lo, modulus: self.modulus }, CyclicLabel { value: self.hi, modulus: self.modulus })
    }

    pub fn shares_endpoint(self, other: Chord) -> bool {
        self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi
    }

    /// True for the Hamiltonian-cycle chords `{x, x+1}`.
    pub fn is_cycle_edge(self) -> bool {
        self.hi - self.lo == 1 || (self.lo == 0 && self.hi == self.modulus - 1)
    }

    /// Position in the canonical lexicographic order of all C(n,2) chords.
    pub fn index(self) -> usize {
        chord_index(self.lo, self.hi, self.modulus)
    }

    fn strictly_between(self, v: u32) -> bool {
        self.lo < v && v < self.hi
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// Canonical index of the chord `{lo, hi}` with `lo < hi < n`.
pub fn chord_index(lo: u32, hi: u32, n: u32) -> usize {
    debug_assert!(lo < hi && hi < n);
    let (lo, hi, n) = (lo as usize, hi as usize, n as usize);
    lo * (2 * n - lo - 1) / 2 + (hi - lo - 1)
}

/// Number of chords of the n-cycle, C(n,2).
pub fn chord_count(n: u32) -> usize {
    let n = n as usize;
    n * n.saturating_sub(1) / 2
}

/// All chords of Z/n in canonical order.
pub fn all_chords(n: u32) -> impl Iterator<Item = Chord> {
    (0..n).flat_map(move |lo| (lo + 1..n).map(move |hi| Chord { lo, hi, modulus: n }))
}

/// Whether two chords interleave on the cycle.
///
/// Endpoints must be four distinct residues, and the endpoints of `q` must
/// fall in different open arcs cut out by `p`.
///
/// # Panics
///
/// If the chords live over different moduli.
pub fn chords_cross(p: Chord, q: Chord) -> bool {
    assert_eq!(p.modulus, q.modulus, "chords over different moduli");
    if p.shares_endpoint(q) {
        return false;
    }
    p.strictly_between(q.lo) != p.strictly_between(q.hi)
}

/// The product ⌊n/2⌋⌊(n−1)/2⌋⌊(n−2)/2⌋⌊(n−3)/2⌋, i.e. 4·Z(n).
pub fn four_floor_product(n: u32) -> u128 {
    let n = n as u128;
    (n / 2) * ((n.saturating_sub(1)) / 2) * ((n.saturating_sub(2)) / 2) * ((n.saturating_sub(3)) / 2)
}

/// Guy's number Z(n), the conjectured crossing number of K_n.
pub fn guy_number(n: u32) -> Result<u64> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let product = four_floor_product(n);
    debug_assert_eq!(product % 4, 0);
    u64::try_from(product / 4).map_err(|_| Error::Overflow(n))
}

/// Binomial coefficient C(n, k) in exact arithmetic.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chord(a: i64, c: i64, n: u32) -> Chord {
        Chord::from_residues(a, c, n).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(chords_cross(chord(0, 2, 5), chord(1, 3, 5)));
        assert!(!chords_cross(chord(0, 1, 5), chord(2, 4, 5)));
        assert!(!chords_cross(chord(0, 2, 5), chord(2, 4, 5)));
        assert!(!chords_cross(chord(0, 3, 6), chord(1, 2, 6)));
    }

    #[test]
    #[should_panic(expected = "different moduli")]
    fn crossing_rejects_mixed_moduli() {
        chords_cross(chord(0, 2, 5), chord(1, 3, 6));
    }

    #[test]
    fn chord_is_canonical() {
        assert_eq!(chord(3, 1, 5), chord(1, 3, 5));
        assert_eq!(chord(-1, 2, 5), chord(4, 2, 5));
        assert_eq!(Chord::from_residues(2, 7, 5), Err(Error::DegenerateChord(2)));
    }

    #[test]
    fn chord_index_is_dense() {
        for n in 2..12 {
            let idx: Vec<usize> = all_chords(n).map(Chord::index).collect();
            assert_eq!(idx, (0..chord_count(n)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn guy_number_examples() {
        assert_eq!(guy_number(3), Ok(0));
        assert_eq!(guy_number(4), Ok(0));
        assert_eq!(guy_number(5), Ok(1));
        assert_eq!(guy_number(7), Ok(9));
        assert_eq!(guy_number(12), Ok(150));
        assert_eq!(guy_number(2), Err(Error::TooFewVertices(2)));
    }

    #[test]
    fn guy_number_large_n_is_exact() {
        for n in [9_999u32, 10_000] {
            let z = guy_number(n).unwrap() as u128;
            assert_eq!(4 * z, four_floor_product(n));
        }
    }

    #[test]
    fn cyclic_arithmetic_wraps() {
        let x = CyclicLabel::new(4, 5);
        assert_eq!(x.shifted(3).value(), 2);
        assert_eq!(x.shifted(-7).value(), 2);
        assert_eq!(CyclicLabel::new(1, 5).offset_from(x), 2);
        assert_eq!(CyclicLabel::from_one_based(5, 5).value(), 4);
        assert_eq!(CyclicLabel::from_one_based(6, 5).one_based(), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 4), 5);
        assert_eq!(binomial(30, 4), 27_405);
        assert_eq!(binomial(3, 4), 0);
    }
}
