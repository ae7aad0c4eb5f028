//! Exact and heuristic MAX-CUT on the crossing graph.
//!
//! Both solvers skip isolated vertices (the n cycle chords `{x, x+1}`, plus
//! nothing else for n ≥ 5) and place them inside. Parallel work is merged in
//! a fixed order, so results never depend on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::crossing_graph::{cut_value, CrossingGraph, Cut, Side};
use crate::error::{Error, Result};

/// Default cap on non-isolated vertices for [`exact_max_cut`]; n ≤ 9 fits.
pub const DEFAULT_EXACT_LIMIT: usize = 30;

/// Free variables enumerated per parallel chunk are `free - CHUNK_BITS`.
const CHUNK_BITS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Heuristic,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Heuristic => "heuristic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxCutResult {
    pub value: u64,
    pub cut: Cut,
    pub method: Method,
    /// Only exact solves certify optimality.
    pub certified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeuristicParams {
    pub seed: u64,
    pub restarts: u32,
    /// Cap on single-vertex flips per restart.
    pub iterations: u32,
}

impl Default for HeuristicParams {
    fn default() -> Self {
        HeuristicParams { seed: 0x5eed_2013, restarts: 32, iterations: 100_000 }
    }
}

/// Local view of the non-isolated part of the graph.
struct Reduced {
    vertices: Vec<usize>,
    adjacency: Vec<Vec<u32>>,
}

impl Reduced {
    fn new(g: &CrossingGraph) -> Self {
        let vertices = g.non_isolated();
        let mut local = vec![u32::MAX; g.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i as u32;
        }
        let adjacency = vertices.iter().map(|&v| g.neighbors(v).iter().map(|&u| local[u as usize]).collect()).collect();
        Reduced { vertices, adjacency }
    }

    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn value(&self, side: &[bool]) -> i64 {
        let mut twice = 0;
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            twice += nbrs.iter().filter(|&&u| side[u as usize] != side[v]).count() as i64;
        }
        twice / 2
    }

    /// Change in cut value from flipping each vertex.
    fn gains(&self, side: &[bool]) -> Vec<i64> {
        self.adjacency
            .iter()
            .enumerate()
            .map(|(v, nbrs)| nbrs.iter().map(|&u| if side[u as usize] == side[v] { 1 } else { -1 }).sum())
            .collect()
    }

    fn flip(&self, v: usize, side: &mut [bool], gains: &mut [i64]) {
        for &u in &self.adjacency[v] {
            let u = u as usize;
            if side[u] == side[v] {
                gains[u] -= 2;
            } else {
                gains[u] += 2;
            }
        }
        side[v] = !side[v];
        gains[v] = -gains[v];
    }

    fn expand(&self, total: usize, side: &[bool]) -> Cut {
        let mut inside = vec![true; total];
        for (i, &v) in self.vertices.iter().enumerate() {
            inside[v] = side[i];
        }
        Cut::from_inside(inside)
    }
}

/// Exhaustive MAX-CUT over the non-isolated vertices.
///
/// The first non-isolated vertex is pinned inside (a cut and its complement
/// have equal value); the remaining `k` vertices are walked in Gray-code
/// order with O(deg) incremental updates, split into `2^6` chunks by their
/// top bits. Fails with [`Error::TooLargeForExact`] when more than `limit`
/// vertices are non-isolated.
pub fn exact_max_cut(g: &CrossingGraph, limit: usize) -> Result<MaxCutResult> {
    let reduced = Reduced::new(g);
    let active = reduced.len();
    if active > limit {
        return Err(Error::TooLargeForExact { vertices: active, limit });
    }
    if active == 0 {
        return finish(g, Cut::all(g.vertex_count(), Side::Inside), Method::Exact);
    }

    let free = active - 1;
    let chunk_bits = free.min(CHUNK_BITS);
    let low_bits = free - chunk_bits;

    // vertex 0 pinned; vertices 1..=low_bits walked by Gray code; the rest
    // are fixed by the chunk prefix
    let best = (0u64..1 << chunk_bits)
        .into_par_iter()
        .map(|prefix| {
            let mut side = vec![true; active];
            for b in 0..chunk_bits {
                side[1 + low_bits + b] = (prefix >> b) & 1 == 0;
            }
            let mut value = reduced.value(&side);
            let mut gains = reduced.gains(&side);
            let mut best = (value, 0u64);
            for step in 1u64..1 << low_bits {
                let v = 1 + step.trailing_zeros() as usize;
                value += gains[v];
                reduced.flip(v, &mut side, &mut gains);
                if value > best.0 {
                    best = (value, step);
                }
            }
            (best.0, prefix, best.1)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(None, |acc: Option<(i64, u64, u64)>, cand| match acc {
            Some(a) if a.0 >= cand.0 => Some(a),
            _ => Some(cand),
        })
        .expect("at least one chunk");

    let (_, prefix, step) = best;
    let gray = step ^ (step >> 1);
    let mut side = vec![true; active];
    for b in 0..low_bits {
        side[1 + b] = (gray >> b) & 1 == 0;
    }
    for b in 0..chunk_bits {
        side[1 + low_bits + b] = (prefix >> b) & 1 == 0;
    }
    finish(g, reduced.expand(g.vertex_count(), &side), Method::Exact)
}

fn finish(g: &CrossingGraph, cut: Cut, method: Method) -> Result<MaxCutResult> {
    let value = cut_value(g, &cut)?;
    Ok(MaxCutResult { value, cut, method, certified: method == Method::Exact })
}

/// splitmix64 finalizer, used to derive per-restart seeds.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn restart_seed(seed: u64, restart: u32) -> u64 {
    mix(seed.wrapping_add((restart as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

/// Seeded multi-restart steepest-ascent local search.
///
/// Each restart draws a uniform random cut and repeatedly flips the vertex
/// with the largest positive gain (lowest index on ties) until no flip helps
/// or `iterations` flips were made. The best restart wins; ties go to the
/// lowest restart index.
pub fn heuristic_max_cut(g: &CrossingGraph, params: HeuristicParams) -> Result<MaxCutResult> {
    if params.restarts == 0 || params.iterations == 0 {
        return Err(Error::InvalidHeuristicParams);
    }
    let reduced = Reduced::new(g);
    if reduced.len() == 0 {
        return finish(g, Cut::all(g.vertex_count(), Side::Inside), Method::Heuristic);
    }

    let runs: Vec<(i64, Vec<bool>)> = (0..params.restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(params.seed, r));
            let mut side: Vec<bool> = (0..reduced.len()).map(|_| rng.gen()).collect();
            let mut gains = reduced.gains(&side);
            let mut value = reduced.value(&side);
            for _ in 0..params.iterations {
                let (v, gain) =
                    gains
                        .iter()
                        .copied()
                        .enumerate()
                        .fold((0, i64::MIN), |best, (v, gain)| if gain > best.1 { (v, gain) } else { best });
                if gain <= 0 {
                    break;
                }
                value += gain;
                reduced.flip(v, &mut side, &mut gains);
            }
            (value, side)
        })
        .collect();

    let mut best = 0;
    for (r, run) in runs.iter().enumerate() {
        if run.0 > runs[best].0 {
            best = r;
        }
    }
    finish(g, reduced.expand(g.vertex_count(), &runs[best].1), Method::Heuristic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing_graph::build_crossing_graph;

    #[test]
    fn exact_small() {
        let g4 = build_crossing_graph(4).unwrap();
        let r = exact_max_cut(&g4, DEFAULT_EXACT_LIMIT).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.certified);
        assert_eq!(r.method, Method::Exact);

        let g5 = build_crossing_graph(5).unwrap();
        assert_eq!(exact_max_cut(&g5, DEFAULT_EXACT_LIMIT).unwrap().value, 4);
    }

    #[test]
    fn exact_triangle_has_no_edges() {
        let g3 = build_crossing_graph(3).unwrap();
        let r = exact_max_cut(&g3, DEFAULT_EXACT_LIMIT).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.cut.inside_count(), 3);
    }

    #[test]
    fn exact_refuses_large_instances() {
        let g10 = build_crossing_graph(10).unwrap();
        let err = exact_max_cut(&g10, DEFAULT_EXACT_LIMIT).unwrap_err();
        assert_eq!(err, Error::TooLargeForExact { vertices: 35, limit: 30 });
        assert!(err.to_string().contains("heuristic"));
    }

    #[test]
    fn isolated_vertices_go_inside() {
        let g7 = build_crossing_graph(7).unwrap();
        let r = exact_max_cut(&g7, DEFAULT_EXACT_LIMIT).unwrap();
        for (v, chord) in g7.chords().iter().enumerate() {
            if chord.is_cycle_edge() {
                assert!(r.cut.is_inside(v));
            }
        }
    }

    #[test]
    fn heuristic_small() {
        let g4 = build_crossing_graph(4).unwrap();
        let g5 = build_crossing_graph(5).unwrap();
        for seed in [0, 1, 99] {
            let params = HeuristicParams { seed, restarts: 8, iterations: 1000 };
            assert_eq!(heuristic_max_cut(&g4, params).unwrap().value, 1);
            let r = heuristic_max_cut(&g5, params).unwrap();
            assert_eq!(r.value, 4);
            assert!(!r.certified);
        }
    }

    #[test]
    fn heuristic_is_deterministic() {
        let g = build_crossing_graph(11).unwrap();
        let params = HeuristicParams { seed: 42, restarts: 16, iterations: 500 };
        assert_eq!(heuristic_max_cut(&g, params), heuristic_max_cut(&g, params));
    }

    #[test]
    fn heuristic_rejects_zero_params() {
        let g = build_crossing_graph(5).unwrap();
        let params = HeuristicParams { seed: 0, restarts: 0, iterations: 1 };
        assert_eq!(heuristic_max_cut(&g, params), Err(Error::InvalidHeuristicParams));
    }
}
