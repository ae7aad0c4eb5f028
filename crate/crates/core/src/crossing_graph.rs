//! The crossing graph G_n and the cut-based crossing lower bound.
//!
//! G_n has one vertex per chord of Z/n and joins two chords when they
//! interleave. A two-page drawing induces a cut (top page vs. bottom page);
//! its same-page crossings are exactly the edges of G_n that the cut leaves
//! uncut, so every such drawing has at least |E(G_n)| − MAX-CUT(G_n)
//! crossings.

use std::f64::consts::PI;

use crate::cyclic::{all_chords, binomial, chords_cross, Chord};
use crate::drawing::{Page, TwoPageDrawing};
use crate::error::{Error, Result};

/// n⁴ coefficient of the asymptotic crossing lower bound, 1/48 − 1/(16π²).
pub const LEADING_COEFFICIENT: f64 = 1.0 / 48.0 - 1.0 / (16.0 * PI * PI);

#[derive(Clone, Debug)]
pub struct CrossingGraph {
    n: u32,
    chords: Vec<Chord>,
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

impl CrossingGraph {
    pub fn build(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let chords: Vec<Chord> = all_chords(n).collect();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); chords.len()];
        for (i, &p) in chords.iter().enumerate() {
            for (j, &q) in chords.iter().enumerate().skip(i + 1) {
                if chords_cross(p, q) {
                    edges.push((i as u32, j as u32));
                    adjacency[i].push(j as u32);
                    adjacency[j].push(i as u32);
                }
            }
        }
        Ok(CrossingGraph { n, chords, edges, adjacency })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.chords.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// Edges as pairs of chord indices `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Vertices with at least one neighbor, in index order.
    pub fn non_isolated(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) > 0).collect()
    }
}

pub fn build_crossing_graph(n: u32) -> Result<CrossingGraph> {
    CrossingGraph::build(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Inside,
    Outside,
}

/// Two-colouring of the chords, indexed like [`CrossingGraph::chords`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cut {
    inside: Vec<bool>,
}

impl Cut {
    pub fn from_inside(inside: Vec<bool>) -> Self {
        Cut { inside }
    }

    pub fn all(len: usize, side: Side) -> Self {
        Cut { inside: vec![side == Side::Inside; len] }
    }

    pub fn len(&self) -> usize {
        self.inside.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inside.is_empty()
    }

    pub fn side(&self, v: usize) -> Side {
        if self.inside[v] {
            Side::Inside
        } else {
            Side::Outside
        }
    }

    pub fn is_inside(&self, v: usize) -> bool {
        self.inside[v]
    }

    pub fn inside_count(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }

    /// The same partition with the sides swapped.
    pub fn complement(&self) -> Cut {
        Cut { inside: self.inside.iter().map(|b| !b).collect() }
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.inside
    }
}

/// Number of edges of `g` whose endpoints lie on opposite sides of `cut`.
pub fn cut_value(g: &CrossingGraph, cut: &Cut) -> Result<u64> {
    if cut.len() != g.vertex_count() {
        return Err(Error::CutSizeMismatch { expected: g.vertex_count(), got: cut.len() });
    }
    Ok(g.edges().iter().filter(|&&(i, j)| cut.inside[i as usize] != cut.inside[j as usize]).count() as u64)
}

/// Top-page chords go inside.
pub fn cut_from_drawing(d: &TwoPageDrawing) -> Cut {
    Cut { inside: d.pages().iter().map(|&p| p == Page::Top).collect() }
}

/// |E(G_n)| − MAX-CUT, given a certified max-cut value.
pub fn crossing_lower_bound(n: u32, maxcut_value: u64) -> Result<u64> {
    let edges = binomial(n as u64, 4);
    if maxcut_value > edges {
        return Err(Error::CutValueTooLarge { n, value: maxcut_value, edges });
    }
    Ok(edges - maxcut_value)
}

/// Leading-order term n⁴(1/48 − 1/(16π²)) of the asymptotic lower bound.
/// The O(n³) correction is not known, so this is not a bound on its own.
pub fn asymptotic_lower_bound(n: u32) -> f64 {
    (n as f64).powi(4) * LEADING_COEFFICIENT
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{build_cylindrical, count_crossings};

    #[test]
    fn small_graphs() {
        let g4 = build_crossing_graph(4).unwrap();
        assert_eq!((g4.vertex_count(), g4.edge_count()), (6, 1));
        let (i, j) = g4.edges()[0];
        assert_eq!(g4.chords()[i as usize], Chord::from_residues(0, 2, 4).unwrap());
        assert_eq!(g4.chords()[j as usize], Chord::from_residues(1, 3, 4).unwrap());

        let g5 = build_crossing_graph(5).unwrap();
        assert_eq!((g5.vertex_count(), g5.edge_count()), (10, 5));
        let g6 = build_crossing_graph(6).unwrap();
        assert_eq!((g6.vertex_count(), g6.edge_count()), (15, 15));
    }

    #[test]
    fn cut_values() {
        let g4 = build_crossing_graph(4).unwrap();
        let (i, _) = g4.edges()[0];
        let mut inside = vec![false; 6];
        inside[i as usize] = true;
        assert_eq!(cut_value(&g4, &Cut::from_inside(inside)), Ok(1));
        assert_eq!(cut_value(&g4, &Cut::all(6, Side::Inside)), Ok(0));
        assert_eq!(cut_value(&g4, &Cut::all(5, Side::Inside)), Err(Error::CutSizeMismatch { expected: 6, got: 5 }));

        let g5 = build_crossing_graph(5).unwrap();
        let cut = cut_from_drawing(&build_cylindrical(5).unwrap());
        assert_eq!(cut.inside_count(), 4);
        assert_eq!(cut_value(&g5, &cut), Ok(4));
        assert_eq!(cut_value(&g5, &cut.complement()), Ok(4));
    }

    #[test]
    fn drawing_cuts() {
        let top = TwoPageDrawing::uniform(7, Page::Top).unwrap();
        let g7 = build_crossing_graph(7).unwrap();
        assert_eq!(cut_value(&g7, &cut_from_drawing(&top)), Ok(0));

        let d6 = build_cylindrical(6).unwrap();
        let g6 = build_crossing_graph(6).unwrap();
        assert_eq!(count_crossings(&d6), 3);
        assert_eq!(cut_value(&g6, &cut_from_drawing(&d6)), Ok(12));
    }

    #[test]
    fn lower_bound_arithmetic() {
        assert_eq!(crossing_lower_bound(5, 4), Ok(1));
        assert_eq!(crossing_lower_bound(4, 1), Ok(0));
        assert_eq!(crossing_lower_bound(5, 6), Err(Error::CutValueTooLarge { n: 5, value: 6, edges: 5 }));
    }

    #[test]
    fn asymptotic_constant() {
        assert!((LEADING_COEFFICIENT - 0.0145008).abs() < 1e-6);
        assert_eq!(asymptotic_lower_bound(0), 0.0);
        assert!((asymptotic_lower_bound(10) - 145.008).abs() < 0.01);
    }
}
