//! The free graded-commutative algebra on the shifted dual generators of
//! `L(G)`, with the transposed differential.
//!
//! Generators: `x_v*` of degree 1 (odd) for each vertex, `e_I*` of degree
//! `|I| − 1` for each edge (even iff `|I|` is odd; 1-edge duals have degree
//! 0). Odd generators square to zero; even generators are polynomial. The
//! differential vanishes on vertex duals and sends an edge dual to the
//! product of its vertex duals, extended as a degree-1 derivation.
//!
//! The Koszul sign convention is fixed once: generators are globally
//! ordered by dense id (vertex duals first, then edge duals in canonical
//! edge order), monomials keep their factors sorted by id, and reordering
//! products counts odd-odd inversions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::series::Truncated;

/// A generator of the algebra: the dual of a vertex or of an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub id: u32,
    pub source: DualSource,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualSource {
    Vertex(u32),
    Edge(Vec<u32>),
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// A monomial: exponents over generator ids, sorted by id.
///
/// Odd generators carry exponent exactly 1; even generators any positive
/// exponent. The empty monomial is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds a monomial from (generator id, exponent) pairs; merges and
    /// sorts. Panics on zero exponents only in debug builds.
    pub fn from_factors(mut factors: Vec<(u32, u32)>) -> Self {
        factors.retain(|&(_, e)| e > 0);
        factors.sort_unstable_by_key(|&(id, _)| id);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(factors.len());
        for (id, e) in factors {
            match merged.last_mut() {
                Some((last, exp)) if *last == id => *exp += e,
                _ => merged.push((id, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn generator(id: u32) -> Self {
        Monomial {
            factors: vec![(id, 1)],
        }
    }

    pub fn power(id: u32, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial {
                factors: vec![(id, exp)],
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, id: u32) -> u32 {
        self.factors
            .binary_search_by_key(&id, |&(g, _)| g)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }
}

/// A polynomial: sparse rational combination of monomials, no zeros stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * s);
        }
        out
    }
}

/// Witness returned when `d² = 0` fails (only possible for hand-built
/// differential tables; every hypergraph algebra passes).
#[derive(Debug, Clone)]
pub struct DSquaredFailure {
    pub input: Polynomial,
    pub image: Polynomial,
}

/// The Maurer-Cartan algebra: generators plus the differential table.
#[derive(Debug, Clone)]
pub struct MCAlgebra {
    generators: Vec<Generator>,
    /// `diff[id]` is the value of the differential on generator `id`.
    diff: Vec<Polynomial>,
    odd: Vec<bool>,
}

impl MCAlgebra {
    /// The full algebra `C•(L(G))`: duals of every vertex and every edge.
    pub fn full(g: &Hypergraph) -> Self {
        let vertex_gen: BTreeMap<u32, u32> = g.vertices().map(|v| (v, v - 1)).collect();
        let mut generators: Vec<Generator> = g
            .vertices()
            .map(|v| Generator {
                id: v - 1,
                source: DualSource::Vertex(v),
                degree: 1,
            })
            .collect();
        let mut diff: Vec<Polynomial> = vec![Polynomial::zero(); generators.len()];
        for edge in g.edges() {
            let id = generators.len() as u32;
            generators.push(Generator {
                id,
                source: DualSource::Edge(edge.clone()),
                degree: edge.len() as u32 - 1,
            });
            diff.push(Polynomial::from_monomial(Monomial::from_factors(
                edge.iter().map(|v| (vertex_gen[v], 1)).collect(),
            )));
        }
        MCAlgebra::assemble(generators, diff)
    }

    /// The Koszul-reduced algebra, quasi-isomorphic to `C•(L(G))`.
    ///
    /// Each pair (1-edge dual, its vertex dual) spans an acyclic factor and
    /// is eliminated; a triangular change of generators (the correction term
    /// is closed because every edge differential is a monomial in closed
    /// vertex duals) makes the differential of any edge touching a 1-edged
    /// vertex zero. Remaining generators all have degree ≥ 1, so every
    /// graded piece is finite-dimensional. Reducing an already reduced
    /// algebra changes nothing.
    pub fn reduced(g: &Hypergraph) -> Self {
        let one_edged = g.profile().one_edged_vertices;
        let mut vertex_gen: BTreeMap<u32, u32> = BTreeMap::new();
        let mut generators: Vec<Generator> = Vec::new();
        for v in g.vertices() {
            if !one_edged.contains(&v) {
                let id = generators.len() as u32;
                vertex_gen.insert(v, id);
                generators.push(Generator {
                    id,
                    source: DualSource::Vertex(v),
                    degree: 1,
                });
            }
        }
        let mut diff: Vec<Polynomial> = vec![Polynomial::zero(); generators.len()];
        for edge in g.edges() {
            if edge.len() < 2 {
                continue;
            }
            let id = generators.len() as u32;
            generators.push(Generator {
                id,
                source: DualSource::Edge(edge.clone()),
                degree: edge.len() as u32 - 1,
            });
            if edge.iter().any(|v| one_edged.contains(v)) {
                diff.push(Polynomial::zero());
            } else {
                diff.push(Polynomial::from_monomial(Monomial::from_factors(
                    edge.iter().map(|v| (vertex_gen[v], 1)).collect(),
                )));
            }
        }
        MCAlgebra::assemble(generators, diff)
    }

    /// Builds an algebra from explicit generators and a differential table.
    /// Intended for tests and corrupted-fixture checks; hypergraph algebras
    /// come from [`MCAlgebra::full`] and [`MCAlgebra::reduced`].
    pub fn assemble(generators: Vec<Generator>, diff: Vec<Polynomial>) -> Self {
        assert_eq!(generators.len(), diff.len());
        for (i, g) in generators.iter().enumerate() {
            assert_eq!(g.id as usize, i, "generator ids must be dense");
        }
        let odd = generators.iter().map(Generator::is_odd).collect();
        MCAlgebra {
            generators,
            diff,
            odd,
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn diff_of(&self, id: u32) -> &Polynomial {
        &self.diff[id as usize]
    }

    pub fn has_degree0_generators(&self) -> bool {
        self.generators.iter().any(|g| g.degree == 0)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.factors()
            .iter()
            .map(|&(id, e)| self.generators[id as usize].degree * e)
            .sum()
    }

    /// Total degree of a homogeneous polynomial, `None` if mixed or zero.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Option<u32> {
        let mut degrees = p.terms().map(|(m, _)| self.monomial_degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Product of two monomials: `None` when an odd generator repeats,
    /// otherwise the merged monomial and the Koszul sign from odd-odd
    /// inversions.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(i64, Monomial)> {
        let af = a.factors();
        let bf = b.factors();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(af.len() + bf.len());
        let mut odd_remaining_in_a: u32 = af
            .iter()
            .filter(|&&(id, _)| self.odd[id as usize])
            .count() as u32;
        let mut swaps: u32 = 0;
        let (mut i, mut j) = (0, 0);
        while i < af.len() || j < bf.len() {
            let take_b = match (af.get(i), bf.get(j)) {
                (Some(&(ai, _)), Some(&(bj, _))) => bj < ai,
                (None, Some(_)) => true,
                (Some(_), None) => false,
                (None, None) => break,
            };
            if take_b {
                let (id, e) = bf[j];
                if self.odd[id as usize] {
                    swaps += odd_remaining_in_a;
                }
                merged.push((id, e));
                j += 1;
            } else if j < bf.len() && bf[j].0 == af[i].0 {
                let (id, e) = af[i];
                if self.odd[id as usize] {
                    return None; // odd square
                }
                merged.push((id, e + bf[j].1));
                i += 1;
                j += 1;
            } else {
                let (id, e) = af[i];
                if self.odd[id as usize] {
                    odd_remaining_in_a -= 1;
                }
                merged.push((id, e));
                i += 1;
            }
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial { factors: merged }))
    }

    /// Graded-commutative product, bilinear over the terms.
    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (pm, pc) in p.terms() {
            for (qm, qc) in q.terms() {
                if let Some((sign, m)) = self.mul_monomials(pm, qm) {
                    let mut c = pc * qc;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(m, c);
                }
            }
        }
        out
    }

    /// The differential, extended from the generator table as a degree-1
    /// graded derivation (left Leibniz rule):
    /// `d(g₁^{e₁}⋯g_r^{e_r}) = Σ_j (−1)^{Σ_{l<j} e_l·deg g_l} e_j ·
    /// g₁^{e₁}⋯g_j^{e_j−1} · d(g_j) · g_{j+1}^{e_{j+1}}⋯g_r^{e_r}`,
    /// with the products renormalized by the Koszul multiply.
    pub fn differential(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let factors = m.factors();
            let mut prefix_degree: u32 = 0;
            for (j, &(id, e)) in factors.iter().enumerate() {
                let dgen = &self.diff[id as usize];
                if !dgen.is_zero() {
                    let mut head = factors[..j].to_vec();
                    if e > 1 {
                        head.push((id, e - 1));
                    }
                    let head = Polynomial::from_monomial(Monomial { factors: head });
                    let tail = Polynomial::from_monomial(Monomial {
                        factors: factors[j + 1..].to_vec(),
                    });
                    let piece = self.mul(&self.mul(&head, dgen), &tail);
                    let mut scalar = c * BigRational::from_integer(BigInt::from(e));
                    if prefix_degree % 2 == 1 {
                        scalar = -scalar;
                    }
                    for (pm, pc) in piece.terms() {
                        out.add_term(pm.clone(), pc * &scalar);
                    }
                }
                prefix_degree += e * self.generators[id as usize].degree;
            }
        }
        out
    }

    /// Differential of a single monomial with integer bookkeeping, for
    /// streaming matrix assembly. Requires every differential-table
    /// coefficient to be an integer (true for hypergraph algebras, where
    /// they are all +1).
    pub fn differential_monomial_int(&self, m: &Monomial) -> Result<Vec<(i64, Monomial)>> {
        let factors = m.factors();
        let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
        let mut prefix_degree: u32 = 0;
        for (j, &(id, e)) in factors.iter().enumerate() {
            let dgen = &self.diff[id as usize];
            if !dgen.is_zero() {
                let mut head_factors = factors[..j].to_vec();
                if e > 1 {
                    head_factors.push((id, e - 1));
                }
                let head = Monomial {
                    factors: head_factors,
                };
                let tail = Monomial {
                    factors: factors[j + 1..].to_vec(),
                };
                for (um, uc) in dgen.terms() {
                    if !uc.is_integer() {
                        return Err(Error::NonIntegerCoefficient);
                    }
                    let uc: i64 = i64::try_from(uc.to_integer())
                        .map_err(|_| Error::NonIntegerCoefficient)?;
                    let Some((s1, hm)) = self.mul_monomials(&head, um) else {
                        continue;
                    };
                    let Some((s2, full)) = self.mul_monomials(&hm, &tail) else {
                        continue;
                    };
                    let mut coeff = e as i64 * s1 * s2 * uc;
                    if prefix_degree % 2 == 1 {
                        coeff = -coeff;
                    }
                    match out.entry(full) {
                        std::collections::btree_map::Entry::Occupied(mut entry) => {
                            *entry.get_mut() += coeff;
                            if *entry.get() == 0 {
                                entry.remove();
                            }
                        }
                        std::collections::btree_map::Entry::Vacant(entry) => {
                            entry.insert(coeff);
                        }
                    }
                }
            }
            prefix_degree += e * self.generators[id as usize].degree;
        }
        Ok(out.into_iter().map(|(m, c)| (c, m)).collect())
    }

    /// Verifies `d² = 0` on every generator and on `trials` random
    /// polynomials; on failure returns the offending input and its image.
    pub fn check_d_squared(&self, trials: u32, seed: u64) -> std::result::Result<(), DSquaredFailure> {
        for g in &self.generators {
            let p = Polynomial::from_monomial(Monomial::generator(g.id));
            let dd = self.differential(&self.differential(&p));
            if !dd.is_zero() {
                return Err(DSquaredFailure { input: p, image: dd });
            }
        }
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let p = self.random_polynomial(&mut rng, 4);
            let dd = self.differential(&self.differential(&p));
            if !dd.is_zero() {
                return Err(DSquaredFailure { input: p, image: dd });
            }
        }
        Ok(())
    }

    /// Random polynomial with small integer coefficients, for randomized
    /// identity checks. Degree-0 generators are capped at exponent 2.
    pub fn random_polynomial<R: Rng>(&self, rng: &mut R, max_terms: u32) -> Polynomial {
        let mut p = Polynomial::zero();
        if self.generators.is_empty() {
            return Polynomial::constant(BigRational::from_integer(
                rng.gen_range(-3i64..=3).into(),
            ));
        }
        let n_terms = rng.gen_range(1..=max_terms);
        for _ in 0..n_terms {
            let n_factors = rng.gen_range(0..=3usize);
            let mut factors = Vec::new();
            for _ in 0..n_factors {
                let id = rng.gen_range(0..self.generators.len()) as u32;
                let exp = if self.odd[id as usize] {
                    1
                } else {
                    rng.gen_range(1..=2)
                };
                factors.push((id, exp));
            }
            // from_factors merges; a repeated odd factor would be illegal,
            // so rebuild keeping the first occurrence only
            factors.sort_unstable_by_key(|&(id, _)| id);
            factors.dedup_by_key(|&mut (id, _)| id);
            let c = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            p.add_term(
                Monomial::from_factors(factors),
                BigRational::from_integer(c.into()),
            );
        }
        p
    }

    /// Random homogeneous polynomial of the given degree, or `None` when no
    /// monomial of that degree exists over the positive-degree generators.
    pub fn random_homogeneous<R: Rng>(
        &self,
        degree: u32,
        max_terms: u32,
        rng: &mut R,
    ) -> Option<Polynomial> {
        let mut p = Polynomial::zero();
        let n_terms = rng.gen_range(1..=max_terms);
        for _ in 0..n_terms {
            if let Some(m) = self.random_monomial_of_degree(degree, rng) {
                let c = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
                p.add_term(m, BigRational::from_integer(c.into()));
            }
        }
        (!p.is_zero() || degree == 0).then_some(p)
    }

    fn random_monomial_of_degree<R: Rng>(&self, degree: u32, rng: &mut R) -> Option<Monomial> {
        // rejection sampling over a random generator order
        'attempt: for _ in 0..64 {
            let mut order: Vec<u32> = (0..self.generators.len() as u32).collect();
            for i in (1..order.len()).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            let mut remaining = degree;
            let mut factors = Vec::new();
            for id in order {
                if remaining == 0 {
                    break;
                }
                let d = self.generators[id as usize].degree;
                if d == 0 || d > remaining {
                    continue;
                }
                let max_exp = if self.odd[id as usize] {
                    1
                } else {
                    remaining / d
                };
                let exp = rng.gen_range(0..=max_exp);
                if exp > 0 {
                    factors.push((id, exp));
                    remaining -= exp * d;
                }
            }
            if remaining == 0 {
                return Some(Monomial::from_factors(factors));
            }
            continue 'attempt;
        }
        None
    }

    /// All monomials of the given total degree, in a fixed enumeration
    /// order (ascending exponent vectors over ascending generator ids).
    ///
    /// Degree-0 generators make every graded piece infinite; enumerating
    /// them requires an explicit exponent cap.
    pub fn basis_of_degree(&self, degree: u32, degree0_cap: Option<u32>) -> Result<Vec<Monomial>> {
        if self.has_degree0_generators() && degree0_cap.is_none() {
            return Err(Error::Degree0CapRequired);
        }
        let mut out = Vec::new();
        let mut current: Vec<(u32, u32)> = Vec::new();
        self.enumerate_rec(0, degree, degree0_cap, &mut current, &mut out);
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        idx: usize,
        remaining: u32,
        cap: Option<u32>,
        current: &mut Vec<(u32, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if idx == self.generators.len() {
            if remaining == 0 {
                out.push(Monomial {
                    factors: current.clone(),
                });
            }
            return;
        }
        let d = self.generators[idx].degree;
        let max_exp = if d == 0 {
            cap.unwrap_or(0)
        } else if self.odd[idx] {
            (remaining >= d) as u32
        } else {
            remaining / d
        };
        for exp in 0..=max_exp {
            if exp > 0 {
                current.push((idx as u32, exp));
            }
            self.enumerate_rec(idx + 1, remaining - exp * d, cap, current, out);
            if exp > 0 {
                current.pop();
            }
        }
    }

    /// Number of monomials of each degree `0..=max_degree`, without
    /// enumerating them (saturating at `u64::MAX`). Degree-0 generators
    /// multiply every count by `cap + 1`.
    pub fn count_by_degree(&self, max_degree: u32, degree0_cap: Option<u32>) -> Result<Vec<u64>> {
        let mut multiplier: u64 = 1;
        let mut counts = vec![0u64; max_degree as usize + 1];
        counts[0] = 1;
        for g in &self.generators {
            let d = g.degree as usize;
            if d == 0 {
                let cap = degree0_cap.ok_or(Error::Degree0CapRequired)?;
                multiplier = multiplier.saturating_mul(cap as u64 + 1);
            } else if g.is_odd() {
                for i in (d..counts.len()).rev() {
                    counts[i] = counts[i].saturating_add(counts[i - d]);
                }
            } else {
                for i in d..counts.len() {
                    counts[i] = counts[i].saturating_add(counts[i - d]);
                }
            }
        }
        for c in &mut counts {
            *c = c.saturating_mul(multiplier);
        }
        Ok(counts)
    }

    /// Renders a polynomial in the dump format, e.g.
    /// `+1 x1* x2* | -1 x3* e{1,2}*`. Terms appear in canonical monomial
    /// order; the zero polynomial renders as `0`.
    pub fn poly_string(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let rendered: Vec<String> = p
            .terms()
            .map(|(m, c)| {
                let sign = if c.is_negative() { "-" } else { "+" };
                let mut s = format!("{sign}{}", c.abs());
                for &(id, exp) in m.factors() {
                    s.push(' ');
                    s.push_str(&self.generator_symbol(id));
                    if exp > 1 {
                        s.push_str(&format!("^{exp}"));
                    }
                }
                s
            })
            .collect();
        rendered.join(" | ")
    }

    pub fn generator_symbol(&self, id: u32) -> String {
        match &self.generators[id as usize].source {
            DualSource::Vertex(v) => format!("x{v}*"),
            DualSource::Edge(edge) => {
                let ids: Vec<String> = edge.iter().map(u32::to_string).collect();
                format!("e{{{}}}*", ids.join(","))
            }
        }
    }

    /// Dump of the differential table, one generator per line.
    pub fn dump_differentials(&self) -> String {
        self.generators
            .iter()
            .map(|g| {
                format!(
                    "d({}) = {}",
                    self.generator_symbol(g.id),
                    self.poly_string(&self.diff[g.id as usize])
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Truncated generating function for `dim C^k(L(G))` when `E₁(G) = ∅`:
/// `(1+t)^{|V|} · ∏_p (1+t^{2p−1})^{|E_{2p}|} / ∏_q (1−t^{2q})^{|E_{2q+1}|}`.
pub fn dim_series(g: &Hypergraph, max_degree: u32) -> Result<Vec<u64>> {
    if g.profile().min_edge_size == Some(1) {
        return Err(Error::OneEdgesPresent);
    }
    Ok(algebra_dim_series(&MCAlgebra::full(g), max_degree))
}

/// Per-degree dimensions of any algebra whose generators all have positive
/// degree, from the product formula over generators.
pub fn algebra_dim_series(alg: &MCAlgebra, max_degree: u32) -> Vec<u64> {
    assert!(
        !alg.has_degree0_generators(),
        "dimension series requires positive-degree generators"
    );
    let mut s = Truncated::one(max_degree);
    for gen in alg.generators() {
        if gen.is_odd() {
            s.mul_one_plus(gen.degree);
        } else {
            s.mul_geometric(gen.degree);
        }
    }
    s.coeffs
}
