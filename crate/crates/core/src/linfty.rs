//! The 2-step nilpotent L∞-algebra `L(G)` of a hypergraph.
//!
//! The underlying graded space has one degree-0 basis element per vertex
//! and one degree-`2−k` basis element per `k`-edge. The only nonzero
//! brackets send a tuple of distinct vertices spanning an edge to that
//! edge's basis element (with the sign of the sorting permutation); any
//! bracket with an edge-kind argument vanishes. Quotients by the spaces of
//! non-edges are never materialized: the edge-indexed basis is primary and
//! the bracket table's missing keys play the role of the kernel.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cohomology::SparseIntMatrix;
use crate::hypergraph::Hypergraph;

/// Basis vector of `L(G)`: a vertex (degree 0) or a `k`-edge (degree `2−k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub kind: BasisKind,
    pub degree: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisKind {
    Vertex(u32),
    Edge(Vec<u32>),
}

/// A linear combination of basis elements with rational coefficients.
///
/// Keys are basis indices; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    coeffs: BTreeMap<usize, BigRational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(index: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(index, BigRational::one());
        Element { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Element, scale: &BigRational) {
        if scale.is_zero() {
            return;
        }
        for (&idx, c) in &other.coeffs {
            let entry = self.coeffs.entry(idx).or_insert_with(BigRational::zero);
            *entry += c * scale;
            if entry.is_zero() {
                self.coeffs.remove(&idx);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }
}

/// The 2-step nilpotent L∞-algebra of a hypergraph.
#[derive(Debug, Clone)]
pub struct LInftyAlgebra {
    n_vertices: u32,
    basis: Vec<BasisElement>,
    /// Sorted vertex set of each edge → basis index of the edge element.
    /// Keys are exactly the edges; everything else brackets to zero.
    bracket_table: BTreeMap<Vec<u32>, usize>,
    max_arity: u32,
}

/// Witness that eq.-style 2-step nilpotency failed (never produced by
/// algebras built from hypergraphs; exists for reporting symmetry).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoStepViolation {
    pub inner_args: Vec<usize>,
    pub outer_args: Vec<usize>,
}

impl LInftyAlgebra {
    /// Builds `L(G)`: vertex basis elements first (in vertex order), then
    /// one element per edge in canonical edge order.
    pub fn build(g: &Hypergraph) -> Self {
        let mut basis: Vec<BasisElement> = g
            .vertices()
            .map(|v| BasisElement {
                kind: BasisKind::Vertex(v),
                degree: 0,
            })
            .collect();
        let mut bracket_table = BTreeMap::new();
        for edge in g.edges() {
            bracket_table.insert(edge.clone(), basis.len());
            basis.push(BasisElement {
                kind: BasisKind::Edge(edge.clone()),
                degree: 2 - edge.len() as i32,
            });
        }
        LInftyAlgebra {
            n_vertices: g.n_vertices(),
            basis,
            bracket_table,
            max_arity: g.max_edge_size().max(1),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_vertices(&self) -> u32 {
        self.n_vertices
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Largest arity with a nonzero bracket (the maximum edge size).
    pub fn max_arity(&self) -> u32 {
        self.max_arity
    }

    /// `l_k` on basis elements. Returns the signed edge index, or `None`
    /// when the bracket is zero: an edge-kind argument, a repeated vertex,
    /// or a vertex set that is not an edge.
    pub fn bracket_on_basis(&self, args: &[usize]) -> Option<(i64, usize)> {
        let mut vertices = Vec::with_capacity(args.len());
        for &idx in args {
            match &self.basis[idx].kind {
                BasisKind::Vertex(v) => vertices.push(*v),
                BasisKind::Edge(_) => return None,
            }
        }
        let sign = sort_sign(&mut vertices)?;
        let &edge_idx = self.bracket_table.get(&vertices)?;
        Some((sign, edge_idx))
    }

    /// `l_k` extended multilinearly to arbitrary elements.
    pub fn bracket(&self, args: &[Element]) -> Element {
        assert!(!args.is_empty(), "bracket arity must be at least 1");
        let mut result = Element::zero();
        let supports: Vec<Vec<(usize, &BigRational)>> =
            args.iter().map(|a| a.terms().collect()).collect();
        let mut indices = vec![0usize; args.len()];
        'outer: loop {
            let mut coeff = BigRational::one();
            let mut basis_args = Vec::with_capacity(args.len());
            for (slot, &i) in indices.iter().enumerate() {
                if supports[slot].is_empty() {
                    return Element::zero();
                }
                let (idx, c) = supports[slot][i];
                coeff *= c;
                basis_args.push(idx);
            }
            if let Some((sign, edge_idx)) = self.bracket_on_basis(&basis_args) {
                let mut signed = coeff;
                if sign < 0 {
                    signed = -signed;
                }
                result.add_scaled(&Element::basis(edge_idx), &signed);
            }
            // advance the multi-index
            for slot in (0..indices.len()).rev() {
                indices[slot] += 1;
                if indices[slot] < supports[slot].len() {
                    continue 'outer;
                }
                indices[slot] = 0;
                if slot == 0 {
                    break 'outer;
                }
            }
        }
        result
    }

    /// Dimensions of the lower central filtration, iterated until zero:
    /// `F¹ = g`, `F^{i+1} = Σ_k l_k(F^i, g, …, g)`. For every hypergraph
    /// algebra the result is `[|V|+|E|, |E|, 0]` (or `[n, 0]` when edgeless),
    /// and the final entry is asserted to be zero (2-step nilpotency).
    pub fn lower_central_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut piece: Vec<Element> = (0..self.dim()).map(Element::basis).collect();
        while dims.last() != Some(&0) {
            let next = self.bracket_span(&piece);
            dims.push(span_dim(&next));
            piece = next;
        }
        assert!(
            dims.len() <= 3,
            "2-step nilpotency violated: F^3 is nonzero"
        );
        dims
    }

    /// Spanning set of `Σ_k l_k(piece, g, …, g)` for `k` up to the max arity.
    fn bracket_span(&self, piece: &[Element]) -> Vec<Element> {
        let mut images = Vec::new();
        for k in 1..=self.max_arity as usize {
            for first in piece {
                for rest in (0..self.dim()).combinations(k - 1) {
                    let mut args = vec![first.clone()];
                    args.extend(rest.into_iter().map(Element::basis));
                    let image = self.bracket(&args);
                    if !image.is_zero() {
                        images.push(image);
                    }
                }
            }
        }
        images
    }

    /// `(dim l(g), dim g/l(g))`: the commutator is the span of all bracket
    /// images, which for `L(G)` is the span of the edges.
    pub fn commutator_dims(&self) -> (usize, usize) {
        let everything: Vec<Element> = (0..self.dim()).map(Element::basis).collect();
        let commutator = span_dim(&self.bracket_span(&everything));
        (commutator, self.dim() - commutator)
    }

    /// Verifies 2-step nilpotency by evaluating every nested bracket
    /// `l_k(l_j(…), …)` on basis elements, arities bounded by the max edge
    /// size (all higher brackets vanish identically, so the bound is exact).
    pub fn check_two_step(&self) -> Result<(), TwoStepViolation> {
        let vertex_indices: Vec<usize> = (0..self.n_vertices as usize).collect();
        for j in 1..=self.max_arity as usize {
            for inner in vertex_indices.iter().copied().combinations(j) {
                let Some((_, inner_idx)) = self.bracket_on_basis(&inner) else {
                    continue;
                };
                let inner_element = Element::basis(inner_idx);
                for k in 1..=self.max_arity as usize {
                    for rest in (0..self.dim()).combinations(k - 1) {
                        let mut args = vec![inner_element.clone()];
                        args.extend(rest.iter().copied().map(Element::basis));
                        if !self.bracket(&args).is_zero() {
                            return Err(TwoStepViolation {
                                inner_args: inner,
                                outer_args: rest,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sorts vertices ascending, returning the permutation sign, or `None` if a
/// vertex repeats. Graded antisymmetry on degree-0 inputs forces plain
/// antisymmetry, so the sign is the full story.
fn sort_sign(vertices: &mut [u32]) -> Option<i64> {
    let mut sign = 1i64;
    // insertion sort, counting swaps
    for i in 1..vertices.len() {
        let mut j = i;
        while j > 0 && vertices[j - 1] > vertices[j] {
            vertices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// Dimension of the span of a set of elements, by exact integer rank.
fn span_dim(elements: &[Element]) -> usize {
    let mut matrix = SparseIntMatrix::new(elements.len(), 0);
    for (row, e) in elements.iter().enumerate() {
        // clear denominators so the row is integral
        let denom_lcm = e
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| num_integer::lcm(acc, c.denom().clone()));
        for (idx, c) in e.terms() {
            let scaled = (c * &denom_lcm).to_integer();
            matrix.set(row, idx, scaled);
        }
    }
    matrix.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    fn example9() -> Hypergraph {
        Hypergraph::from_json(r#"{"vertices":6,"edges":[[1,2],[1,3],[2,3],[3,4],[2,4],[4,5,6]]}"#)
            .unwrap()
    }

    fn single_edge(k: u32) -> Hypergraph {
        Hypergraph::new(k, [(1..=k).collect::<Vec<u32>>()]).unwrap()
    }

    #[test]
    fn build_single_2_edge() {
        let alg = LInftyAlgebra::build(&single_edge(2));
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.basis()[0].degree, 0);
        assert_eq!(alg.basis()[2].degree, 0); // 2 − 2
        assert_eq!(alg.bracket_on_basis(&[0, 1]), Some((1, 2)));
    }

    #[test]
    fn build_single_3_edge() {
        let alg = LInftyAlgebra::build(&single_edge(3));
        assert_eq!(alg.basis()[3].degree, -1); // 2 − 3
        assert_eq!(alg.basis()[3].kind, BasisKind::Edge(vec![1, 2, 3]));
    }

    #[test]
    fn build_edgeless_is_abelian() {
        let g = Hypergraph::new(3, Vec::<Vec<u32>>::new()).unwrap();
        let alg = LInftyAlgebra::build(&g);
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.commutator_dims(), (0, 3));
    }

    #[test]
    fn bracket_signs_and_vanishing() {
        let alg = LInftyAlgebra::build(&single_edge(2));
        let x1 = Element::basis(0);
        let x2 = Element::basis(1);
        let x12 = Element::basis(2);
        assert_eq!(alg.bracket(&[x1.clone(), x2.clone()]), x12);
        // swapped arguments flip the sign
        let mut neg = Element::zero();
        neg.add_scaled(&x12, &-BigRational::one());
        assert_eq!(alg.bracket(&[x2.clone(), x1.clone()]), neg);
        // repeated argument vanishes
        assert!(alg.bracket(&[x1.clone(), x1.clone()]).is_zero());
        // edge-kind argument vanishes
        assert!(alg.bracket(&[x1, x12]).is_zero());
    }

    #[test]
    fn bracket_example9_triple() {
        let alg = LInftyAlgebra::build(&example9());
        // x4, x5, x6 are basis indices 3, 4, 5; {4,5,6} is the last edge
        assert_eq!(alg.bracket_on_basis(&[3, 4, 5]), Some((1, 11)));
        assert_eq!(alg.bracket_on_basis(&[4, 3, 5]), Some((-1, 11)));
        // {1,2} ∈ E but l_2(x1, x_{12}) has an edge argument
        assert_eq!(alg.bracket_on_basis(&[0, 6]), None);
        // {1,4} is not an edge
        assert_eq!(alg.bracket_on_basis(&[0, 3]), None);
    }

    #[test]
    fn bracket_is_multilinear() {
        let alg = LInftyAlgebra::build(&single_edge(2));
        let mut combo = Element::basis(0);
        combo.add_scaled(&Element::basis(1), &BigRational::from_integer(3.into()));
        // l2(x1 + 3 x2, x2) = x12
        assert_eq!(alg.bracket(&[combo, Element::basis(1)]), Element::basis(2));
    }

    /// Brute-force oracle: the span of all bracket images over all basis
    /// tuples (including edge-kind ones) up to the max arity.
    fn brute_force_commutator_dim(alg: &LInftyAlgebra) -> usize {
        let mut hit = std::collections::BTreeSet::new();
        for k in 1..=alg.max_arity() as usize {
            for args in (0..alg.dim()).combinations(k) {
                if let Some((_, idx)) = alg.bracket_on_basis(&args) {
                    hit.insert(idx);
                }
            }
        }
        hit.len()
    }

    #[test]
    fn filtration_k3() {
        let alg = LInftyAlgebra::build(&Hypergraph::complete_uniform(3, 2).unwrap());
        assert_eq!(alg.lower_central_dims(), vec![6, 3, 0]);
        assert_eq!(brute_force_commutator_dim(&alg), 3);
    }

    #[test]
    fn filtration_edgeless() {
        let g = Hypergraph::new(4, Vec::<Vec<u32>>::new()).unwrap();
        assert_eq!(LInftyAlgebra::build(&g).lower_central_dims(), vec![4, 0]);
    }

    #[test]
    fn filtration_example9() {
        let alg = LInftyAlgebra::build(&example9());
        assert_eq!(alg.lower_central_dims(), vec![12, 6, 0]);
        assert_eq!(brute_force_commutator_dim(&alg), 6);
    }

    #[test]
    fn commutator_dims_match_edge_and_vertex_counts() {
        for g in [
            Hypergraph::complete_uniform(3, 2).unwrap(),
            example9(),
            single_edge(4),
        ] {
            let alg = LInftyAlgebra::build(&g);
            assert_eq!(
                alg.commutator_dims(),
                (g.edge_count(), g.n_vertices() as usize)
            );
        }
    }

    #[test]
    fn two_step_holds() {
        for g in [
            Hypergraph::complete_uniform(3, 2).unwrap(),
            single_edge(3),
            example9(),
        ] {
            assert!(LInftyAlgebra::build(&g).check_two_step().is_ok());
        }
    }

    #[test]
    fn nested_brackets_vanish() {
        // l2(l2(x1, x2), x3) on K3
        let alg = LInftyAlgebra::build(&Hypergraph::complete_uniform(3, 2).unwrap());
        let inner = alg.bracket(&[Element::basis(0), Element::basis(1)]);
        assert!(!inner.is_zero());
        assert!(alg.bracket(&[inner, Element::basis(2)]).is_zero());
        // l2(x_{123}, x1) on the single 3-edge
        let alg3 = LInftyAlgebra::build(&single_edge(3));
        assert!(alg3
            .bracket(&[Element::basis(3), Element::basis(0)])
            .is_zero());
    }
}
