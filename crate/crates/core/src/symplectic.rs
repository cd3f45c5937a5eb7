//! Systems of distinct representatives and the symplectic forms they induce.
//!
//! `L(G)` carries a symplectic form exactly when `|V| + |E|` is even and
//! `G` has a system of distinct representatives (an injective choice of a
//! vertex inside each edge). The decision procedure runs a maximum
//! bipartite matching between edges and vertices; failure is certified by
//! a Hall violator (edges covering fewer vertices than their number), and
//! success by an explicit closed, non-degenerate quadratic element pairing
//! each edge dual with its representative's vertex dual and the leftover
//! vertex duals among themselves.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cohomology::SparseIntMatrix;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::mcalg::{MCAlgebra, Monomial, Polynomial};

/// An injective map `E(G) → V(G)` with `f(e) ∈ e`, in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sdr {
    pairs: Vec<(Vec<u32>, u32)>,
}

impl Sdr {
    pub fn pairs(&self) -> &[(Vec<u32>, u32)] {
        &self.pairs
    }

    pub fn representative(&self, edge: &[u32]) -> Option<u32> {
        self.pairs
            .iter()
            .find(|(e, _)| e.as_slice() == edge)
            .map(|&(_, v)| v)
    }

    /// Checks membership, injectivity, and coverage of every edge of `g`.
    pub fn validate(&self, g: &Hypergraph) -> Result<()> {
        if self.pairs.len() != g.edge_count() {
            return Err(Error::InvalidSdr(format!(
                "{} assignments for {} edges",
                self.pairs.len(),
                g.edge_count()
            )));
        }
        let mut used = BTreeSet::new();
        for (edge, v) in &self.pairs {
            if g.edge_index(edge).is_none() {
                return Err(Error::InvalidSdr(format!("{edge:?} is not an edge")));
            }
            if !edge.contains(v) {
                return Err(Error::InvalidSdr(format!("{v} is not in {edge:?}")));
            }
            if !used.insert(*v) {
                return Err(Error::InvalidSdr(format!("vertex {v} used twice")));
            }
        }
        let mut edges: Vec<&Vec<u32>> = self.pairs.iter().map(|(e, _)| e).collect();
        edges.sort();
        edges.dedup();
        if edges.len() != g.edge_count() {
            return Err(Error::InvalidSdr("an edge is assigned twice".into()));
        }
        Ok(())
    }
}

/// Edges whose union has fewer vertices than their number, certifying that
/// no system of distinct representatives exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolator {
    pub edges: Vec<Vec<u32>>,
    pub union: BTreeSet<u32>,
}

impl HallViolator {
    pub fn union_size(&self) -> usize {
        self.union.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdrOutcome {
    Found(Sdr),
    Violator(HallViolator),
}

/// Maximum matching between edges and their vertices, by augmenting paths.
///
/// Deterministic: edges are processed in canonical order and each edge
/// tries its vertices in ascending order, so ties break toward the
/// smallest vertex. If every edge is matched the assignment is returned;
/// otherwise a Hall violator is extracted from the alternating-reachability
/// set of the first unmatched edge.
pub fn find_sdr(g: &Hypergraph) -> SdrOutcome {
    let n = g.n_vertices() as usize;
    let edges = g.edges();
    let mut edge_of_vertex: Vec<Option<usize>> = vec![None; n + 1];
    let mut vertex_of_edge: Vec<Option<u32>> = vec![None; edges.len()];

    fn augment(
        edge_idx: usize,
        edges: &[Vec<u32>],
        edge_of_vertex: &mut [Option<usize>],
        vertex_of_edge: &mut [Option<u32>],
        visited: &mut BTreeSet<u32>,
    ) -> bool {
        for &v in &edges[edge_idx] {
            if !visited.insert(v) {
                continue;
            }
            let free = match edge_of_vertex[v as usize] {
                None => true,
                Some(other) => augment(other, edges, edge_of_vertex, vertex_of_edge, visited),
            };
            if free {
                edge_of_vertex[v as usize] = Some(edge_idx);
                vertex_of_edge[edge_idx] = Some(v);
                return true;
            }
        }
        false
    }

    for edge_idx in 0..edges.len() {
        let mut visited = BTreeSet::new();
        augment(
            edge_idx,
            edges,
            &mut edge_of_vertex,
            &mut vertex_of_edge,
            &mut visited,
        );
    }

    if let Some(first_unmatched) = vertex_of_edge.iter().position(Option::is_none) {
        // alternating closure: every vertex seen is matched (the matching is
        // maximum), and its partner edge joins the violator
        let mut violator_edges: BTreeSet<usize> = [first_unmatched].into();
        let mut union: BTreeSet<u32> = BTreeSet::new();
        let mut frontier = vec![first_unmatched];
        while let Some(e) = frontier.pop() {
            for &v in &edges[e] {
                if union.insert(v) {
                    let partner = edge_of_vertex[v as usize]
                        .expect("maximum matching leaves no reachable vertex free");
                    if violator_edges.insert(partner) {
                        frontier.push(partner);
                    }
                }
            }
        }
        let violator = HallViolator {
            edges: violator_edges.into_iter().map(|e| edges[e].clone()).collect(),
            union,
        };
        debug_assert!(violator.union_size() < violator.edges.len());
        SdrOutcome::Violator(violator)
    } else {
        SdrOutcome::Found(Sdr {
            pairs: edges
                .iter()
                .zip(&vertex_of_edge)
                .map(|(e, v)| (e.clone(), v.expect("all matched")))
                .collect(),
        })
    }
}

/// A quadratic element of the Maurer-Cartan algebra together with its
/// bilinear-form matrix over the basis of `L(G)` (vertices first, then
/// edges) and the pairing involution on leftover vertices.
#[derive(Debug, Clone)]
pub struct SymplecticForm {
    pub element: Polynomial,
    pub matrix: SparseIntMatrix,
    pub involution: BTreeMap<u32, u32>,
}

impl SymplecticForm {
    /// Builds the matrix of a quadratic element. Entry `(a, b)` is the
    /// coefficient of the monomial pairing duals `a` and `b`; the mirrored
    /// entry carries the Koszul sign of the generators' parities (shifted
    /// degrees), and squares of even generators polarize with a factor 2.
    pub fn from_element(g: &Hypergraph, element: Polynomial) -> Result<Self> {
        let alg = MCAlgebra::full(g);
        let dim = alg.n_generators();
        let mut matrix = SparseIntMatrix::new(dim, dim);
        for (m, c) in element.terms() {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient);
            }
            let c = i64::try_from(c.to_integer()).map_err(|_| Error::NonIntegerCoefficient)?;
            match m.factors() {
                [(a, 1), (b, 1)] => {
                    let (a, b) = (*a as usize, *b as usize);
                    matrix.add_to(a, b, c);
                    let odd_a = alg.generators()[a].is_odd();
                    let odd_b = alg.generators()[b].is_odd();
                    let mirrored = if odd_a && odd_b { -c } else { c };
                    matrix.add_to(b, a, mirrored);
                }
                [(a, 2)] => {
                    matrix.add_to(*a as usize, *a as usize, 2 * c);
                }
                _ => {
                    return Err(Error::InvalidSdr(format!(
                        "non-quadratic term in symplectic element: {}",
                        alg.poly_string(&element)
                    )))
                }
            }
        }
        Ok(SymplecticForm {
            element,
            matrix,
            involution: BTreeMap::new(),
        })
    }
}

/// Why `L(G)` is not symplectic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoReason {
    OddParity { total: usize },
    NoSdr(HallViolator),
}

#[derive(Debug, Clone)]
pub enum SymplecticDecision {
    Symplectic { sdr: Sdr, form: SymplecticForm },
    Not(NoReason),
}

/// Decides symplecticity: even `|V| + |E|` and an SDR are necessary and
/// sufficient, and the YES branch carries the constructed certificate.
pub fn is_symplectic(g: &Hypergraph) -> SymplecticDecision {
    let total = g.n_vertices() as usize + g.edge_count();
    if total % 2 == 1 {
        return SymplecticDecision::Not(NoReason::OddParity { total });
    }
    match find_sdr(g) {
        SdrOutcome::Violator(v) => SymplecticDecision::Not(NoReason::NoSdr(v)),
        SdrOutcome::Found(sdr) => {
            let form = build_omega(g, &sdr).expect("parity and SDR already checked");
            SymplecticDecision::Symplectic { sdr, form }
        }
    }
}

/// Constructs `ω = Σ_I e_I*·x_{f(I)}* + Σ_{i<σ(i)} x_i*·x_{σ(i)}*`, where
/// `σ` pairs the leftover vertices in sorted adjacent pairs. The element is
/// closed because each summand's differential repeats an odd vertex dual,
/// and its matrix is a signed permutation (determinant ±1).
pub fn build_omega(g: &Hypergraph, sdr: &Sdr) -> Result<SymplecticForm> {
    let total = g.n_vertices() as usize + g.edge_count();
    if total % 2 == 1 {
        return Err(Error::OddParity(total));
    }
    sdr.validate(g)?;
    let alg = MCAlgebra::full(g);
    let n = g.n_vertices();

    let assigned: BTreeSet<u32> = sdr.pairs().iter().map(|&(_, v)| v).collect();
    let leftover: Vec<u32> = g.vertices().filter(|v| !assigned.contains(v)).collect();
    debug_assert_eq!(leftover.len() % 2, 0);

    let mut element = Polynomial::zero();
    for (edge, rep) in sdr.pairs() {
        let edge_gen = n + g.edge_index(edge).expect("validated") as u32;
        let product = alg.mul(
            &Polynomial::from_monomial(Monomial::generator(edge_gen)),
            &Polynomial::from_monomial(Monomial::generator(rep - 1)),
        );
        element = element.add(&product);
    }
    let mut involution = BTreeMap::new();
    for pair in leftover.chunks(2) {
        let (i, j) = (pair[0], pair[1]);
        involution.insert(i, j);
        involution.insert(j, i);
        let product = alg.mul(
            &Polynomial::from_monomial(Monomial::generator(i - 1)),
            &Polynomial::from_monomial(Monomial::generator(j - 1)),
        );
        element = element.add(&product);
    }
    let mut form = SymplecticForm::from_element(g, element)?;
    form.involution = involution;
    Ok(form)
}

/// Outcome of checking a form against the definition: closedness,
/// non-degeneracy, isotropy of the commutator (the edge-edge block), and
/// the resulting necessary bound `|E| ≤ |V|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticDiagnostics {
    pub closed: bool,
    pub invertible: bool,
    pub commutator_isotropic: bool,
    pub edge_bound_satisfied: bool,
    pub determinant: Option<BigInt>,
}

impl SymplecticDiagnostics {
    pub fn ok(&self) -> bool {
        self.closed && self.invertible && self.commutator_isotropic
    }
}

pub fn verify_symplectic(g: &Hypergraph, form: &SymplecticForm) -> SymplecticDiagnostics {
    let alg = MCAlgebra::full(g);
    let closed = alg.differential(&form.element).is_zero();
    let dim = alg.n_generators();
    let determinant = if form.matrix.n_rows() == dim && form.matrix.n_cols() == dim {
        form.matrix.det()
    } else {
        None
    };
    let invertible = determinant.as_ref().is_some_and(|d| !d.is_zero());
    let n = g.n_vertices() as usize;
    let commutator_isotropic = form
        .matrix
        .entries()
        .all(|(r, c, _)| (r as usize) < n || (c as usize) < n);
    SymplecticDiagnostics {
        closed,
        invertible,
        commutator_isotropic,
        edge_bound_satisfied: g.edge_count() <= n,
        determinant,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn example9() -> Hypergraph {
        Hypergraph::from_json(r#"{"vertices":6,"edges":[[1,2],[1,3],[2,3],[3,4],[2,4],[4,5,6]]}"#)
            .unwrap()
    }

    /// Exhaustive oracle: tries every injective assignment.
    fn brute_force_has_sdr(g: &Hypergraph) -> bool {
        fn rec(edges: &[Vec<u32>], used: &mut BTreeSet<u32>) -> bool {
            let Some(edge) = edges.first() else {
                return true;
            };
            for &v in edge {
                if used.insert(v) {
                    if rec(&edges[1..], used) {
                        return true;
                    }
                    used.remove(&v);
                }
            }
            false
        }
        rec(g.edges(), &mut BTreeSet::new())
    }

    #[test]
    fn example9_has_the_five_edge_violator() {
        let SdrOutcome::Violator(v) = find_sdr(&example9()) else {
            panic!("expected a violator");
        };
        assert_eq!(
            v.edges,
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(v.union, [1, 2, 3, 4].into());
        assert_eq!(v.union_size(), 4);
        assert!(v.union_size() < v.edges.len());
    }

    #[test]
    fn single_edge_picks_smallest_vertex() {
        let g = Hypergraph::new(3, vec![vec![1u32, 2]]).unwrap();
        let SdrOutcome::Found(sdr) = find_sdr(&g) else {
            panic!("expected an SDR");
        };
        assert_eq!(sdr.pairs(), &[(vec![1, 2], 1)]);
    }

    #[test]
    fn k3_sdr_matches_spec_assignment() {
        let g = Hypergraph::complete_uniform(3, 2).unwrap();
        let SdrOutcome::Found(sdr) = find_sdr(&g) else {
            panic!("expected an SDR");
        };
        sdr.validate(&g).unwrap();
        assert_eq!(
            sdr.pairs(),
            &[(vec![1, 2], 1), (vec![1, 3], 3), (vec![2, 3], 2)]
        );
    }

    #[test]
    fn matching_agrees_with_brute_force_on_small_hypergraphs() {
        // all hypergraphs on 3 vertices with up to 3 edges
        let all_edges: Vec<Vec<u32>> = (1u32..=3)
            .powerset()
            .filter(|s| !s.is_empty())
            .collect();
        for subset in all_edges.iter().powerset() {
            if subset.len() > 3 {
                continue;
            }
            let g = Hypergraph::new(3, subset.iter().map(|e| (*e).clone())).unwrap();
            let found = matches!(find_sdr(&g), SdrOutcome::Found(_));
            assert_eq!(found, brute_force_has_sdr(&g), "{:?}", g.edges());
            if let SdrOutcome::Found(sdr) = find_sdr(&g) {
                sdr.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn is_symplectic_examples() {
        // |V| + |E| = 4 even, SDR exists
        let g = Hypergraph::new(3, vec![vec![1u32, 2]]).unwrap();
        assert!(matches!(
            is_symplectic(&g),
            SymplecticDecision::Symplectic { .. }
        ));

        assert!(matches!(
            is_symplectic(&example9()),
            SymplecticDecision::Not(NoReason::NoSdr(_))
        ));

        let single = Hypergraph::new(2, vec![vec![1u32, 2]]).unwrap();
        assert!(matches!(
            is_symplectic(&single),
            SymplecticDecision::Not(NoReason::OddParity { total: 3 })
        ));
    }

    #[test]
    fn build_omega_pairs_leftover_vertices() {
        let g = Hypergraph::new(3, vec![vec![1u32, 2]]).unwrap();
        let SdrOutcome::Found(sdr) = find_sdr(&g) else {
            panic!()
        };
        let form = build_omega(&g, &sdr).unwrap();
        let alg = MCAlgebra::full(&g);
        // ω = e{1,2}* x1* + x2* x3*, canonically −x1* e{1,2}* + x2* x3*
        assert_eq!(
            alg.poly_string(&form.element),
            "+1 x2* x3* | -1 x1* e{1,2}*"
        );
        assert_eq!(form.involution, [(2, 3), (3, 2)].into());
        let diag = verify_symplectic(&g, &form);
        assert!(diag.ok());
        assert_eq!(diag.determinant, Some(BigInt::from(1)));
    }

    #[test]
    fn build_omega_on_k3_has_no_vertex_pairs() {
        let g = Hypergraph::complete_uniform(3, 2).unwrap();
        let SdrOutcome::Found(sdr) = find_sdr(&g) else {
            panic!()
        };
        let form = build_omega(&g, &sdr).unwrap();
        assert!(form.involution.is_empty());
        assert_eq!(form.element.n_terms(), 3);
        let diag = verify_symplectic(&g, &form);
        assert!(diag.ok());
        assert!(diag.determinant.unwrap().magnitude() == &1u32.into());
    }

    #[test]
    fn build_omega_with_two_leftover_vertices() {
        // V = {1,2,3,4}, E = {{1,2},{3,4}}: SDR 1, 3; S = {2,4}; σ = (2 4)
        let g = Hypergraph::new(4, vec![vec![1u32, 2], vec![3, 4]]).unwrap();
        let SdrOutcome::Found(sdr) = find_sdr(&g) else {
            panic!()
        };
        assert_eq!(sdr.pairs(), &[(vec![1, 2], 1), (vec![3, 4], 3)]);
        let form = build_omega(&g, &sdr).unwrap();
        assert_eq!(form.involution, [(2, 4), (4, 2)].into());
        let alg = MCAlgebra::full(&g);
        assert!(alg.differential(&form.element).is_zero());
        let diag = verify_symplectic(&g, &form);
        assert!(diag.ok());
        assert!(diag.determinant.unwrap().magnitude() == &1u32.into());
    }

    #[test]
    fn build_omega_rejects_bad_inputs() {
        // odd parity
        let g = Hypergraph::new(2, vec![vec![1u32, 2]]).unwrap();
        let sdr = Sdr {
            pairs: vec![(vec![1, 2], 1)],
        };
        assert!(matches!(build_omega(&g, &sdr), Err(Error::OddParity(3))));

        // invalid SDR: representative outside the edge
        let g = Hypergraph::new(3, vec![vec![1u32, 2]]).unwrap();
        let bad = Sdr {
            pairs: vec![(vec![1, 2], 3)],
        };
        assert!(matches!(build_omega(&g, &bad), Err(Error::InvalidSdr(_))));

        // invalid SDR: vertex reused
        let g2 = Hypergraph::new(4, vec![vec![1u32, 2], vec![1, 3]]).unwrap();
        let reused = Sdr {
            pairs: vec![(vec![1, 2], 1), (vec![1, 3], 1)],
        };
        assert!(matches!(build_omega(&g2, &reused), Err(Error::InvalidSdr(_))));
    }

    #[test]
    fn verify_rejects_degenerate_form() {
        // x1*x2* alone on K3 leaves the edge duals unpaired
        let g = Hypergraph::complete_uniform(3, 2).unwrap();
        let alg = MCAlgebra::full(&g);
        let element = alg.mul(
            &Polynomial::from_monomial(Monomial::generator(0)),
            &Polynomial::from_monomial(Monomial::generator(1)),
        );
        let form = SymplecticForm::from_element(&g, element).unwrap();
        let diag = verify_symplectic(&g, &form);
        assert!(diag.closed);
        assert!(!diag.invertible);
        assert!(!diag.ok());
    }

    #[test]
    fn verify_rejects_non_closed_form() {
        // e{1,2}*x3* + x1*x2* on V={1,2,3}, E={{1,2}}: d = x1*x2*x3* ≠ 0
        let g = Hypergraph::new(3, vec![vec![1u32, 2]]).unwrap();
        let alg = MCAlgebra::full(&g);
        let mut element = alg.mul(
            &Polynomial::from_monomial(Monomial::generator(3)),
            &Polynomial::from_monomial(Monomial::generator(2)),
        );
        element = element.add(&alg.mul(
            &Polynomial::from_monomial(Monomial::generator(0)),
            &Polynomial::from_monomial(Monomial::generator(1)),
        ));
        let form = SymplecticForm::from_element(&g, element).unwrap();
        let diag = verify_symplectic(&g, &form);
        assert!(!diag.closed);
        assert!(!diag.ok());
    }

    #[test]
    fn symplectic_implies_edge_bound() {
        let w: BTreeMap<u32, f64> = [(1, 0.3), (2, 0.4), (3, 0.3)].into();
        for seed in 0..30 {
            let g = Hypergraph::random(6, &w, seed).unwrap();
            if let SymplecticDecision::Symplectic { form, .. } = is_symplectic(&g) {
                assert!(g.edge_count() <= g.n_vertices() as usize);
                assert!(verify_symplectic(&g, &form).ok());
            }
        }
    }
}
