//! Two-page drawings of K_n.
//!
//! The vertices sit on a Hamiltonian cycle (the spine) and every chord is
//! placed on one of two pages: inside or outside the cycle, or equivalently
//! the top or bottom disc of the double cover of a disc. Two chords cross
//! exactly when they interleave on the cycle and share a page.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclic::{all_chords, chords_cross, Chord, CyclicLabel};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Page {
    Top,
    Bottom,
}

impl Page {
    pub fn opposite(self) -> Page {
        match self {
            Page::Top => Page::Bottom,
            Page::Bottom => Page::Top,
        }
    }
}

/// A page assignment for every chord of Z/n, indexed by [`Chord::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPageDrawing {
    n: u32,
    pages: Vec<Page>,
}

impl TwoPageDrawing {
    pub fn from_fn(n: u32, mut page_of: impl FnMut(Chord) -> Page) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let pages = all_chords(n).map(&mut page_of).collect();
        Ok(TwoPageDrawing { n, pages })
    }

    /// Every chord on the same page.
    pub fn uniform(n: u32, page: Page) -> Result<Self> {
        Self::from_fn(n, |_| page)
    }

    /// Independent fair coin per chord, reproducible from `seed`.
    pub fn random(n: u32, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_fn(n, |_| if rng.gen::<bool>() { Page::Top } else { Page::Bottom })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn page(&self, chord: Chord) -> Page {
        assert_eq!(chord.modulus(), self.n, "chord over a different modulus");
        self.pages[chord.index()]
    }

    /// Pages in canonical chord order.
    pub fn pages(&self) -> &[Page] {
        &self.pages
    }

    pub fn chords(&self) -> impl Iterator<Item = (Chord, Page)> + '_ {
        all_chords(self.n).zip(self.pages.iter().copied())
    }
}

/// Top part S₁ = {1, …, ⌊n/2⌋} of the split of 1-based labels.
fn in_first_half(label: u32, n: u32) -> bool {
    (1..=n / 2).contains(&label)
}

/// Representative of `x + y` in `1..=n` for 1-based labels.
fn label_sum(x: CyclicLabel, y: CyclicLabel) -> u32 {
    x.shifted(y.one_based() as i64).one_based()
}

/// The cylindrical drawing: chord {x, y} goes on the top page iff the
/// representative of `x + y` in `1..=n` (1-based labels) lies in
/// {1, …, ⌊n/2⌋}.
pub fn build_cylindrical(n: u32) -> Result<TwoPageDrawing> {
    TwoPageDrawing::from_fn(n, |chord| {
        let (x, y) = chord.endpoints();
        if in_first_half(label_sum(x, y), n) {
            Page::Top
        } else {
            Page::Bottom
        }
    })
}

/// Number of unordered chord pairs that interleave and share a page.
pub fn count_crossings(d: &TwoPageDrawing) -> u64 {
    let chords: Vec<(Chord, Page)> = d.chords().collect();
    let mut total = 0u64;
    for (i, &(p, page_p)) in chords.iter().enumerate() {
        for &(q, page_q) in &chords[i + 1..] {
            if page_p == page_q && chords_cross(p, q) {
                total += 1;
            }
        }
    }
    total
}

/// ½ Σ_{s=2}^{⌊n/2⌋} (s−1)(n−1−s)(n−2s), which evaluates to Z(n).
pub fn closed_form_crossings(n: u32) -> Result<u64> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let n = n as u128;
    let doubled: u128 = (2..=n / 2).map(|s| (s - 1) * (n - 1 - s) * (n - 2 * s)).sum();
    debug_assert_eq!(doubled % 2, 0);
    u64::try_from(doubled / 2).map_err(|_| Error::Overflow(n as u32))
}

/// Brute-force count of `y ∈ {1..n}` such that `y` and `y + d` fall in the
/// same half of the label split. Always equals `n − 2d`.
pub fn same_page_shift_count(n: u32, d: u32) -> Result<u32> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if d == 0 || 2 * d >= n {
        return Err(Error::ShiftOutOfRange { n, d });
    }
    let count = (1..=n)
        .filter(|&y| {
            let shifted = CyclicLabel::from_one_based(y as i64, n).shifted(d as i64).one_based();
            in_first_half(y, n) == in_first_half(shifted, n)
        })
        .count();
    Ok(count as u32)
}

/// True iff no Hamiltonian-cycle chord `{x, x+1}` takes part in a crossing.
pub fn cycle_is_crossing_free(d: &TwoPageDrawing) -> bool {
    let n = d.n();
    (0..n).all(|x| {
        let edge = Chord::from_residues(x as i64, x as i64 + 1, n).expect("n >= 3");
        let page = d.page(edge);
        d.chords().all(|(q, q_page)| q_page != page || !chords_cross(edge, q))
    })
}

/// Exhaustively checks that, in the cylindrical drawing for even `n`, the
/// chords {x, x+a+b} and {x+a, x+a+b+c} always land on opposite pages when
/// a + c = n/2.
pub fn opposite_page_at_half_span(n: u32) -> Result<bool> {
    if n % 2 == 1 {
        return Err(Error::OddModulus(n));
    }
    if n < 4 {
        return Err(Error::TooFewVertices(n));
    }
    let drawing = build_cylindrical(n)?;
    let half = n / 2;
    let chord = |from: u32, to: u32| {
        Chord::new(CyclicLabel::from_one_based(from as i64, n), CyclicLabel::from_one_based(to as i64, n))
            .expect("a + b and b + c are both in 1..n")
    };
    for x in 1..=n {
        for a in 1..half {
            let c = half - a;
            for b in 1..n - a - c {
                let first = chord(x, x + a + b);
                let second = chord(x + a, x + a + b + c);
                if drawing.page(first) == drawing.page(second) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::guy_number;

    fn labels(a: i64, b: i64, n: u32) -> Chord {
        Chord::new(CyclicLabel::from_one_based(a, n), CyclicLabel::from_one_based(b, n)).unwrap()
    }

    #[test]
    fn cylindrical_pages_for_five() {
        let d = build_cylindrical(5).unwrap();
        assert_eq!(d.page(labels(1, 5, 5)), Page::Top);
        assert_eq!(d.page(labels(1, 2, 5)), Page::Bottom);
        let mut top: Vec<(u32, u32)> =
            d.chords().filter(|&(_, p)| p == Page::Top).map(|(c, _)| (c.lo() + 1, c.hi() + 1)).collect();
        top.sort();
        assert_eq!(top, vec![(1, 5), (2, 4), (2, 5), (3, 4)]);
    }

    #[test]
    fn small_crossing_counts() {
        assert_eq!(count_crossings(&build_cylindrical(5).unwrap()), 1);
        assert_eq!(count_crossings(&build_cylindrical(6).unwrap()), 3);
        assert_eq!(count_crossings(&TwoPageDrawing::uniform(5, Page::Top).unwrap()), 5);
        assert_eq!(count_crossings(&build_cylindrical(3).unwrap()), 0);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_crossings(3), Ok(0));
        assert_eq!(closed_form_crossings(5), Ok(1));
        assert_eq!(closed_form_crossings(6), Ok(3));
        for n in 3..500 {
            assert_eq!(closed_form_crossings(n), guy_number(n), "n = {n}");
        }
    }

    #[test]
    fn shift_count_examples() {
        assert_eq!(same_page_shift_count(10, 3), Ok(4));
        assert_eq!(same_page_shift_count(6, 2), Ok(2));
        assert_eq!(same_page_shift_count(7, 1), Ok(5));
        assert_eq!(same_page_shift_count(6, 3), Err(Error::ShiftOutOfRange { n: 6, d: 3 }));
        assert_eq!(same_page_shift_count(6, 0), Err(Error::ShiftOutOfRange { n: 6, d: 0 }));
    }

    #[test]
    fn half_span_examples() {
        for n in [4, 6, 8, 12] {
            assert_eq!(opposite_page_at_half_span(n), Ok(true), "n = {n}");
        }
        assert_eq!(opposite_page_at_half_span(7), Err(Error::OddModulus(7)));
    }

    #[test]
    fn cycle_edges_never_cross() {
        assert!(cycle_is_crossing_free(&build_cylindrical(9).unwrap()));
        assert!(cycle_is_crossing_free(&TwoPageDrawing::uniform(8, Page::Top).unwrap()));
        assert!(cycle_is_crossing_free(&TwoPageDrawing::random(12, 7).unwrap()));
    }

    #[test]
    fn rejects_tiny_n() {
        assert_eq!(build_cylindrical(2), Err(Error::TooFewVertices(2)));
    }

    #[test]
    fn random_drawing_is_seeded() {
        assert_eq!(TwoPageDrawing::random(10, 3), TwoPageDrawing::random(10, 3));
        assert_ne!(TwoPageDrawing::random(10, 3), TwoPageDrawing::random(10, 4));
    }
}
