//! Hypergraph isomorphism and invariant fingerprints.
//!
//! Isomorphism of the associated L∞-algebras is equivalent to isomorphism
//! of the hypergraphs, so the search runs entirely on the combinatorial
//! side: backtracking over vertex bijections, pruned by per-vertex
//! incidence vectors and partial edge consistency. Fingerprints collect
//! cheap invariants (incidence multisets, edge size profile, a Betti
//! prefix); equal fingerprints are necessary but not sufficient.

use std::collections::BTreeMap;

use crate::cohomology::{poincare, Limits};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Invariants preserved by isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    /// Sorted multiset of per-vertex incidence vectors, each a sorted list
    /// of (edge size, number of incident edges of that size).
    pub vertex_invariants: Vec<Vec<(u32, u32)>>,
    pub edge_size_profile: BTreeMap<u32, usize>,
    /// `b_0..b_depth`.
    pub betti_prefix: Vec<u64>,
}

fn vertex_invariant(g: &Hypergraph, v: u32) -> Vec<(u32, u32)> {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for e in g.incident_edges(v) {
        *counts.entry(e.len() as u32).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

pub fn fingerprint(g: &Hypergraph, depth: u32, limits: &Limits) -> Result<Fingerprint> {
    let mut vertex_invariants: Vec<Vec<(u32, u32)>> =
        g.vertices().map(|v| vertex_invariant(g, v)).collect();
    vertex_invariants.sort();
    Ok(Fingerprint {
        vertex_invariants,
        edge_size_profile: g.profile().counts_by_size,
        betti_prefix: poincare(g, depth, limits)?.coefficients,
    })
}

/// Searches for an edge-preserving vertex bijection `V(g1) → V(g2)`.
///
/// Returns the bijection (`result[i]` is the image of vertex `i + 1`) or
/// `None`. Vertices with rarer incidence vectors are assigned first; each
/// assignment is checked against every edge it completes, in both
/// directions.
pub fn are_isomorphic(g1: &Hypergraph, g2: &Hypergraph, vertex_cap: u32) -> Result<Option<Vec<u32>>> {
    let n = g1.n_vertices();
    if n > vertex_cap {
        return Err(Error::IsoVertexCapExceeded { n, cap: vertex_cap });
    }
    if n != g2.n_vertices() || g1.profile().counts_by_size != g2.profile().counts_by_size {
        return Ok(None);
    }
    let inv1: Vec<Vec<(u32, u32)>> = g1.vertices().map(|v| vertex_invariant(g1, v)).collect();
    let inv2: Vec<Vec<(u32, u32)>> = g2.vertices().map(|v| vertex_invariant(g2, v)).collect();
    {
        let mut m1 = inv1.clone();
        let mut m2 = inv2.clone();
        m1.sort();
        m2.sort();
        if m1 != m2 {
            return Ok(None);
        }
    }

    // candidates share the incidence vector; scarce vertices go first
    let candidates: Vec<Vec<u32>> = inv1
        .iter()
        .map(|inv| {
            g2.vertices()
                .filter(|&w| &inv2[w as usize - 1] == inv)
                .collect()
        })
        .collect();
    let mut order: Vec<u32> = g1.vertices().collect();
    order.sort_by_key(|&v| (candidates[v as usize - 1].len(), v));

    let mut forward: Vec<Option<u32>> = vec![None; n as usize + 1];
    let mut backward: Vec<Option<u32>> = vec![None; n as usize + 1];
    if search(g1, g2, &order, &candidates, 0, &mut forward, &mut backward) {
        Ok(Some(
            (1..=n).map(|v| forward[v as usize].expect("complete")).collect(),
        ))
    } else {
        Ok(None)
    }
}

fn search(
    g1: &Hypergraph,
    g2: &Hypergraph,
    order: &[u32],
    candidates: &[Vec<u32>],
    depth: usize,
    forward: &mut Vec<Option<u32>>,
    backward: &mut Vec<Option<u32>>,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for &w in &candidates[v as usize - 1] {
        if backward[w as usize].is_some() {
            continue;
        }
        forward[v as usize] = Some(w);
        backward[w as usize] = Some(v);
        if consistent_at(g1, g2, v, w, forward, backward)
            && search(g1, g2, order, candidates, depth + 1, forward, backward)
        {
            return true;
        }
        forward[v as usize] = None;
        backward[w as usize] = None;
    }
    false
}

/// Checks every edge completed by the assignment `v → w`, both ways:
/// fully-mapped edges of `g1` must land on edges of `g2`, and edges of `g2`
/// lying inside the image must pull back to edges of `g1`.
fn consistent_at(
    g1: &Hypergraph,
    g2: &Hypergraph,
    v: u32,
    w: u32,
    forward: &[Option<u32>],
    backward: &[Option<u32>],
) -> bool {
    for e in g1.incident_edges(v) {
        let mapped: Option<Vec<u32>> = e.iter().map(|&x| forward[x as usize]).collect();
        if let Some(image) = mapped {
            if !g2.has_edge(&image) {
                return false;
            }
        }
    }
    for e in g2.incident_edges(w) {
        let preimage: Option<Vec<u32>> = e.iter().map(|&x| backward[x as usize]).collect();
        if let Some(pe) = preimage {
            if !g1.has_edge(&pe) {
                return false;
            }
        }
    }
    true
}

/// Test-side convenience: checks that a claimed bijection really preserves
/// edges in both directions.
pub fn is_edge_preserving(g1: &Hypergraph, g2: &Hypergraph, bijection: &[u32]) -> bool {
    if bijection.len() != g1.n_vertices() as usize
        || g1.n_vertices() != g2.n_vertices()
        || g1.edge_count() != g2.edge_count()
    {
        return false;
    }
    g1.edges().iter().all(|e| {
        let image: Vec<u32> = e.iter().map(|&v| bijection[v as usize - 1]).collect();
        g2.has_edge(&image)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example9() -> Hypergraph {
        Hypergraph::from_json(r#"{"vertices":6,"edges":[[1,2],[1,3],[2,3],[3,4],[2,4],[4,5,6]]}"#)
            .unwrap()
    }

    fn k3() -> Hypergraph {
        Hypergraph::complete_uniform(3, 2).unwrap()
    }

    fn path3() -> Hypergraph {
        Hypergraph::new(3, vec![vec![1u32, 2], vec![2, 3]]).unwrap()
    }

    fn six_cycle() -> Hypergraph {
        Hypergraph::new(
            6,
            vec![
                vec![1u32, 2],
                vec![2, 3],
                vec![3, 4],
                vec![4, 5],
                vec![5, 6],
                vec![1, 6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn relabeled_example9_is_isomorphic() {
        let g = example9();
        let perm = [6u32, 5, 4, 3, 2, 1]; // (1 6)(2 5)(3 4)
        let h = g.relabel(&perm).unwrap();
        let bijection = are_isomorphic(&g, &h, 12).unwrap().expect("isomorphic");
        assert!(is_edge_preserving(&g, &h, &bijection));
    }

    #[test]
    fn k3_and_path_differ() {
        assert_eq!(are_isomorphic(&k3(), &path3(), 12).unwrap(), None);
    }

    #[test]
    fn six_cycle_vs_two_triangles() {
        // identical degree sequences, still non-isomorphic
        let two_triangles = k3().disjoint_union(&k3());
        assert_eq!(
            are_isomorphic(&six_cycle(), &two_triangles, 12).unwrap(),
            None
        );
        // sanity: the pruning invariants agree, so the search itself decides
        let limits = Limits::default();
        let f1 = fingerprint(&six_cycle(), 0, &limits).unwrap();
        let f2 = fingerprint(&two_triangles, 0, &limits).unwrap();
        assert_eq!(f1.vertex_invariants, f2.vertex_invariants);
        assert_eq!(f1.edge_size_profile, f2.edge_size_profile);
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let big = Hypergraph::new(13, Vec::<Vec<u32>>::new()).unwrap();
        assert!(matches!(
            are_isomorphic(&big, &big, 12),
            Err(Error::IsoVertexCapExceeded { n: 13, cap: 12 })
        ));
        assert!(are_isomorphic(&big, &big, 13).unwrap().is_some());
    }

    #[test]
    fn fingerprint_is_relabeling_invariant() {
        let limits = Limits::default();
        let g = Hypergraph::complete_uniform(4, 3).unwrap();
        let f = fingerprint(&g, 2, &limits).unwrap();
        for perm in [[2u32, 1, 3, 4], [4, 3, 2, 1], [2, 3, 4, 1]] {
            let h = g.relabel(&perm).unwrap();
            assert_eq!(fingerprint(&h, 2, &limits).unwrap(), f);
        }
    }

    #[test]
    fn betti_prefix_separates_k3_from_path() {
        let limits = Limits::default();
        let f1 = fingerprint(&k3(), 2, &limits).unwrap();
        let f2 = fingerprint(&path3(), 2, &limits).unwrap();
        assert_eq!(f1.betti_prefix, vec![1, 3, 8]);
        assert_eq!(f2.betti_prefix, vec![1, 3, 6]);
    }

    #[test]
    fn betti_prefix_is_not_a_complete_invariant() {
        // G1 = one vertex carrying a 1-edge: P_t(G1) = 1, so the union's
        // Betti prefix collapses onto G2's, yet the hypergraphs differ.
        let g1 = Hypergraph::new(1, [[1u32]]).unwrap();
        let g2 = path3();
        let union = g1.disjoint_union(&g2);
        let limits = Limits::default();
        let f_union = fingerprint(&union, 3, &limits).unwrap();
        let f_g2 = fingerprint(&g2, 3, &limits).unwrap();
        assert_eq!(f_union.betti_prefix, f_g2.betti_prefix);
        assert_ne!(f_union.vertex_invariants, f_g2.vertex_invariants);
        assert_eq!(are_isomorphic(&union, &g2, 12).unwrap(), None);
    }

    #[test]
    fn random_relabelings_are_detected() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let w: BTreeMap<u32, f64> = [(1, 0.2), (2, 0.4), (3, 0.3)].into();
        for seed in 0..15 {
            let g = Hypergraph::random(7, &w, seed).unwrap();
            let mut perm: Vec<u32> = (1..=7).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            let bijection = are_isomorphic(&g, &h, 12).unwrap().expect("relabeling");
            assert!(is_edge_preserving(&g, &h, &bijection));
            // symmetry and reflexivity
            assert!(are_isomorphic(&h, &g, 12).unwrap().is_some());
            assert!(are_isomorphic(&g, &g, 12).unwrap().is_some());
        }
    }
}
