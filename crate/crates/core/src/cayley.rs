//! Mixed Cayley graphs of finite Abelian groups.
//!
//! A generating set splits into involutions (one undirected edge per
//! vertex), ± pairs (two undirected neighbours) and directed generators
//! (one arc). Vertices are group elements indexed in mixed radix, and all
//! distance computations are plain BFS on a flat distance array.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::bounds::DegreeSpec;
use crate::error::{Error, Result};
use crate::lattice::{group_from_matrix, AbelianGroup, GroupElement, IntMatrix};

/// Generating set of a mixed Cayley graph, in canonical form: each list is
/// sorted and every pair is stored by its smaller representative of `±g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedGenSet {
    involutions: Vec<GroupElement>,
    pairs: Vec<GroupElement>,
    directed: Vec<GroupElement>,
}

/// `min(g, −g)` in lexicographic residue order.
pub fn pair_representative(group: &AbelianGroup, g: &GroupElement) -> GroupElement {
    let neg = group.neg(g);
    if neg < *g {
        neg
    } else {
        g.clone()
    }
}

impl MixedGenSet {
    pub fn empty() -> Self {
        MixedGenSet { involutions: Vec::new(), pairs: Vec::new(), directed: Vec::new() }
    }

    /// Validates explicit roles and normalizes.
    pub fn new(
        group: &AbelianGroup,
        involutions: Vec<GroupElement>,
        pairs: Vec<GroupElement>,
        directed: Vec<GroupElement>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidGenerators(msg));
        for g in involutions.iter().chain(&pairs).chain(&directed) {
            if !group.contains(g) {
                return bad(format!("({g}) is not a reduced element of {group}"));
            }
            if g.is_zero() {
                return bad("the identity is not a generator".into());
            }
        }
        for g in &involutions {
            if group.element_order(g) != 2 {
                return bad(format!("({g}) has order {}, not an involution", group.element_order(g)));
            }
        }
        for g in &pairs {
            if group.element_order(g) < 3 {
                return bad(format!("pair ±({g}) has order 2; list it as an involution"));
            }
        }
        for b in &directed {
            if group.element_order(b) < 3 {
                return bad(format!("directed ({b}) is an involution"));
            }
        }

        let pairs: Vec<GroupElement> = pairs.iter().map(|g| pair_representative(group, g)).collect();
        let mut seen = BTreeSet::new();
        for g in involutions.iter().chain(&pairs) {
            if !seen.insert(g.clone()) {
                return bad(format!("duplicate generator ({g})"));
            }
        }
        for b in &directed {
            if seen.contains(&pair_representative(group, b)) {
                return bad(format!("directed ({b}) duplicates a pair"));
            }
        }
        let directed_set: BTreeSet<&GroupElement> = directed.iter().collect();
        if directed_set.len() != directed.len() {
            return bad("duplicate directed generator".into());
        }
        for b in &directed {
            if directed_set.contains(&group.neg(b)) {
                return bad(format!("directed ({b}) has its inverse in the set; use a pair"));
            }
        }

        let mut set = MixedGenSet { involutions, pairs, directed };
        set.involutions.sort();
        set.pairs.sort();
        set.directed.sort();
        Ok(set)
    }

    /// Assigns roles from the elements themselves: zero is dropped, elements
    /// of order 2 become involutions, and an element becomes a pair when it
    /// is listed as undirected or its inverse is also present.
    pub fn classify(group: &AbelianGroup, undirected: &[GroupElement], directed: &[GroupElement]) -> Self {
        let mut involutions = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        let mut arcs = BTreeSet::new();
        let present: BTreeSet<GroupElement> =
            undirected.iter().flat_map(|g| [g.clone(), group.neg(g)]).chain(directed.iter().cloned()).collect();
        for g in undirected.iter().chain(directed) {
            if g.is_zero() {
                continue;
            }
            if group.element_order(g) == 2 {
                involutions.insert(g.clone());
            } else if present.contains(&group.neg(g)) {
                pairs.insert(pair_representative(group, g));
            } else {
                arcs.insert(g.clone());
            }
        }
        MixedGenSet {
            involutions: involutions.into_iter().collect(),
            pairs: pairs.into_iter().collect(),
            directed: arcs.into_iter().collect(),
        }
    }

    pub fn involutions(&self) -> &[GroupElement] {
        &self.involutions
    }

    pub fn pairs(&self) -> &[GroupElement] {
        &self.pairs
    }

    pub fn directed(&self) -> &[GroupElement] {
        &self.directed
    }

    pub fn undirected_degree(&self) -> u64 {
        (self.involutions.len() + 2 * self.pairs.len()) as u64
    }

    pub fn directed_degree(&self) -> u64 {
        self.directed.len() as u64
    }

    /// Out-steps: each involution once, each pair in both signs, each arc.
    pub fn steps(&self, group: &AbelianGroup) -> Vec<GroupElement> {
        let mut steps = self.involutions.clone();
        for g in &self.pairs {
            steps.push(g.clone());
            steps.push(group.neg(g));
        }
        steps.extend(self.directed.iter().cloned());
        steps
    }

    /// Image under `g ↦ u·g`, renormalized. For a unit `u` of a cyclic group
    /// this is the generating set of an isomorphic circulant.
    pub fn scaled(&self, group: &AbelianGroup, u: i64) -> Self {
        let map = |v: &[GroupElement]| -> Vec<GroupElement> { v.iter().map(|g| group.scalar_mul(g, u)).collect() };
        let mut out = MixedGenSet {
            involutions: map(&self.involutions),
            pairs: self.pairs.iter().map(|g| pair_representative(group, &group.scalar_mul(g, u))).collect(),
            directed: map(&self.directed),
        };
        out.involutions.sort();
        out.pairs.sort();
        out.directed.sort();
        out
    }

    /// Degree profile induced by the exact generator orders, relative to
    /// diameter `k`. Orders that fall between the classes of the improved
    /// bound are rounded up to the next class (an even order `2s + 2` pair
    /// counts as order `2s + 3`), which keeps the bound valid.
    pub fn degree_spec(&self, group: &AbelianGroup, k: u32) -> DegreeSpec {
        let mut spec = DegreeSpec::new(k).with_r_alpha(self.involutions.len() as u32);
        for g in &self.pairs {
            let q = group.element_order(g);
            let s = if q % 2 == 1 { (q - 1) / 2 } else { q / 2 };
            if s <= k as u64 {
                *spec.r_odd.entry(s as u32).or_default() += 1;
            } else {
                spec.r_omega += 1;
            }
        }
        for b in &self.directed {
            let t = group.element_order(b) - 1;
            if t <= k as u64 {
                *spec.z_ord.entry(t as u32).or_default() += 1;
            } else {
                spec.z_omega += 1;
            }
        }
        spec.normalized()
    }

    fn write_lines(&self, out: &mut String) {
        for g in &self.involutions {
            let _ = writeln!(out, "inv {g}");
        }
        for g in &self.pairs {
            let _ = writeln!(out, "pair {g}");
        }
        for g in &self.directed {
            let _ = writeln!(out, "dir {g}");
        }
    }
}

/// Mixed Cayley graph `Cay(Γ, Σ)` with its BFS layer profile from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCayleyGraph {
    group: AbelianGroup,
    gens: MixedGenSet,
    layers: Vec<u64>,
}

impl MixedCayleyGraph {
    /// Builds the graph, checking that `gens` generates `group`.
    pub fn build(group: AbelianGroup, gens: MixedGenSet) -> Result<Self> {
        let mut graph = MixedCayleyGraph { group, gens, layers: Vec::new() };
        let dist = graph.distances_from(0);
        let reached = dist.iter().filter(|&&d| d != UNREACHED).count() as u64;
        if reached != graph.order() {
            return Err(Error::NotGenerating { reached, order: graph.order() });
        }
        graph.layers = layer_sizes(&dist);
        Ok(graph)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn gens(&self) -> &MixedGenSet {
        &self.gens
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn undirected_degree(&self) -> u64 {
        self.gens.undirected_degree()
    }

    pub fn directed_degree(&self) -> u64 {
        self.gens.directed_degree()
    }

    /// Largest distance from vertex 0, which is the diameter since the graph
    /// is vertex-transitive.
    pub fn diameter(&self) -> u32 {
        self.layers.len() as u32 - 1
    }

    /// Number of vertices at each distance from 0.
    pub fn distance_profile(&self) -> &[u64] {
        &self.layers
    }

    /// BFS distances from the vertex with mixed-radix index `source`;
    /// unreachable vertices hold `u32::MAX`.
    pub fn distances_from(&self, source: u64) -> Vec<u32> {
        let n = self.order() as usize;
        let factors = self.group.factors();
        let rank = factors.len();
        let steps: Vec<Vec<u64>> = self.gens.steps(&self.group).into_iter().map(|g| g.coords().to_vec()).collect();
        let mut place = vec![1u64; rank];
        for i in (0..rank.saturating_sub(1)).rev() {
            place[i] = place[i + 1] * factors[i + 1];
        }

        let mut dist = vec![UNREACHED; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source as usize] = 0;
        queue.push_back(source);
        let mut digits = vec![0u64; rank];
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            let mut rest = u;
            for i in (0..rank).rev() {
                digits[i] = rest % factors[i];
                rest /= factors[i];
            }
            for step in &steps {
                let mut v = 0u64;
                for i in 0..rank {
                    let mut x = digits[i] + step[i];
                    if x >= factors[i] {
                        x -= factors[i];
                    }
                    v += x * place[i];
                }
                if dist[v as usize] == UNREACHED {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Degree profile induced by the exact generator orders at diameter `k`.
    pub fn degree_spec(&self, k: u32) -> DegreeSpec {
        self.gens.degree_spec(&self.group, k)
    }

    /// Line-oriented description: `group Z4xZ12`, then `inv`, `pair` and
    /// `dir` lines with comma-separated residues.
    pub fn to_description(&self) -> String {
        let mut out = format!("group {}\n", self.group);
        self.gens.write_lines(&mut out);
        out
    }

    pub fn from_description(text: &str) -> Result<Self> {
        let mut group: Option<AbelianGroup> = None;
        let (mut inv, mut pairs, mut dir) = (Vec::new(), Vec::new(), Vec::new());
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            if key == "group" {
                if group.is_some() {
                    return Err(err("duplicate group line".into()));
                }
                group = Some(rest.parse()?);
                continue;
            }
            let g = group.as_ref().ok_or_else(|| err("generator before group line".into()))?;
            let coords = if rest.is_empty() {
                Vec::new()
            } else {
                rest.split(',')
                    .map(|t| t.trim().parse::<i64>().map_err(|e| err(format!("bad residue {t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()?
            };
            let elem = g.element(&coords).map_err(|e| err(e.to_string()))?;
            match key {
                "inv" => inv.push(elem),
                "pair" => pairs.push(elem),
                "dir" => dir.push(elem),
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
        let group = group.ok_or_else(|| Error::Parse("missing group line".into()))?;
        let gens = MixedGenSet::new(&group, inv, pairs, dir)?;
        MixedCayleyGraph::build(group, gens)
    }

    /// Graphviz rendering; undirected edges carry `dir=none`.
    pub fn to_dot(&self) -> Result<String> {
        const MAX_DOT_ORDER: u64 = 200;
        if self.order() > MAX_DOT_ORDER {
            return Err(Error::Unsupported(format!(
                "DOT export is limited to {MAX_DOT_ORDER} vertices (graph has {})",
                self.order()
            )));
        }
        let g = &self.group;
        let mut out = String::from("digraph G {\n");
        for v in g.elements() {
            let _ = writeln!(out, "  {} [label=\"{}\"];", g.index_of(&v), v);
        }
        let undirected = self.gens.steps(g);
        let undirected = &undirected[..self.gens.involutions.len() + 2 * self.gens.pairs.len()];
        let mut edges = BTreeSet::new();
        for v in g.elements() {
            let i = g.index_of(&v);
            for s in undirected {
                let j = g.index_of(&g.add(&v, s));
                edges.insert((i.min(j), i.max(j)));
            }
        }
        for (i, j) in edges {
            let _ = writeln!(out, "  {i} -> {j} [dir=none];");
        }
        for v in g.elements() {
            let i = g.index_of(&v);
            for b in &self.gens.directed {
                let _ = writeln!(out, "  {i} -> {};", g.index_of(&g.add(&v, b)));
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

const UNREACHED: u32 = u32::MAX;

fn layer_sizes(dist: &[u32]) -> Vec<u64> {
    let max = dist.iter().copied().filter(|&d| d != UNREACHED).max().unwrap_or(0);
    let mut layers = vec![0u64; max as usize + 1];
    for &d in dist.iter().filter(|&&d| d != UNREACHED) {
        layers[d as usize] += 1;
    }
    layers
}

/// Cartesian product `Cay(Γ₁ × Γ₂, (Σ₁, 0) ∪ (0, Σ₂))`.
pub fn cartesian_product(g1: &MixedCayleyGraph, g2: &MixedCayleyGraph) -> Result<MixedCayleyGraph> {
    let moduli: Vec<u64> = g1.group.factors().iter().chain(g2.group.factors()).copied().collect();
    let (group, images) = AbelianGroup::from_moduli(&moduli)?;
    let r1 = g1.group.rank();
    let embed = |x: &GroupElement, first: bool| -> GroupElement {
        let coeffs: Vec<i64> = x.coords().iter().map(|&c| c as i64).collect();
        if first {
            group.combine(&images[..r1], &coeffs)
        } else {
            group.combine(&images[r1..], &coeffs)
        }
    };
    let lift = |f: fn(&MixedGenSet) -> &[GroupElement]| -> Vec<GroupElement> {
        f(&g1.gens).iter().map(|x| embed(x, true)).chain(f(&g2.gens).iter().map(|x| embed(x, false))).collect()
    };
    let gens = MixedGenSet::new(
        &group,
        lift(MixedGenSet::involutions),
        lift(MixedGenSet::pairs),
        lift(MixedGenSet::directed),
    )?;
    MixedCayleyGraph::build(group, gens)
}

/// Quotient graph on `Γ / {0, b}` obtained by contracting the edges of the
/// involution `b`. The order halves and the diameter drops by at most one.
pub fn contract_involution(g: &MixedCayleyGraph, b: &GroupElement) -> Result<MixedCayleyGraph> {
    if !g.gens.involutions.contains(b) {
        return Err(Error::InvalidGenerators(format!("({b}) is not an involution of the generating set")));
    }
    let (quotient, images) = g.group.quotient(std::slice::from_ref(b))?;
    let project = |x: &GroupElement| -> GroupElement {
        let coeffs: Vec<i64> = x.coords().iter().map(|&c| c as i64).collect();
        quotient.combine(&images, &coeffs)
    };
    let undirected: Vec<GroupElement> =
        g.gens.involutions.iter().filter(|x| *x != b).chain(&g.gens.pairs).map(&project).collect();
    let directed: Vec<GroupElement> = g.gens.directed.iter().map(&project).collect();
    let gens = MixedGenSet::classify(&quotient, &undirected, &directed);
    let contracted = MixedCayleyGraph::build(quotient, gens)?;
    assert_eq!(contracted.order() * 2, g.order(), "contraction must halve the order");
    let (d, d2) = (g.diameter(), contracted.diameter());
    assert!(d2 == d || d2 + 1 == d, "contraction changed diameter {d} -> {d2}");
    Ok(contracted)
}

/// `Cay(Z^n / Z^n M, {e_1, …, e_n})` with roles assigned by [`MixedGenSet::classify`].
pub fn unit_vector_graph(m: &IntMatrix) -> Result<MixedCayleyGraph> {
    let (group, images) = group_from_matrix(m)?;
    let gens = MixedGenSet::classify(&group, &[], &images);
    MixedCayleyGraph::build(group, gens)
}

/// Outcome of stretching one row of a lattice matrix.
#[derive(Clone, Debug)]
pub struct StretchReport {
    pub base: MixedCayleyGraph,
    pub stretched: MixedCayleyGraph,
    pub stretched_matrix: IntMatrix,
    /// Whether the stretched diameter is exactly one more than the base one.
    pub diameter_grew_by_one: bool,
}

/// Extra steps added by [`stretch_row_with`]. In `Z^n / Z^n M'` the vector
/// `αu` is zero, so the printed list `2u, …, αu` has one vanishing step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StretchSteps {
    /// `2u, …, αu`.
    #[default]
    AsPrinted,
    /// `u, …, (α − 1)u`.
    Shifted,
}

/// Multiplies row `row` (call it `u`) of `M` by `alpha` and builds
/// `Cay(Z^n / Z^n M', {e_1, …, e_n, 2u, …, αu})`, dropping zero steps.
/// Whether the diameter grows by exactly one is measured, not assumed.
pub fn stretch_row(m: &IntMatrix, row: usize, alpha: i64) -> Result<StretchReport> {
    stretch_row_with(m, row, alpha, StretchSteps::AsPrinted)
}

/// [`stretch_row`] with a choice of extra steps.
pub fn stretch_row_with(m: &IntMatrix, row: usize, alpha: i64, extra: StretchSteps) -> Result<StretchReport> {
    if alpha <= 1 {
        return Err(Error::OutOfRange(format!("stretch factor must exceed 1, got {alpha}")));
    }
    if row >= m.dim() {
        return Err(Error::OutOfRange(format!("row {row} of a {}x{} matrix", m.dim(), m.dim())));
    }
    let base = unit_vector_graph(m)?;
    let mut stretched_matrix = m.clone();
    for j in 0..m.dim() {
        stretched_matrix[(row, j)] = &m[(row, j)] * alpha;
    }
    let (group, images) = group_from_matrix(&stretched_matrix)?;
    let u: Vec<i64> = m
        .row(row)
        .iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::OutOfRange(format!("entry {x}"))))
        .collect::<Result<_>>()?;
    let u_img = group.combine(&images, &u);
    let mut steps = images.clone();
    let multiples = match extra {
        StretchSteps::AsPrinted => 2..=alpha,
        StretchSteps::Shifted => 1..=alpha - 1,
    };
    steps.extend(multiples.map(|j| group.scalar_mul(&u_img, j)));
    let gens = MixedGenSet::classify(&group, &[], &steps);
    let stretched = MixedCayleyGraph::build(group, gens)?;
    let diameter_grew_by_one = stretched.diameter() == base.diameter() + 1;
    Ok(StretchReport { base, stretched, stretched_matrix, diameter_grew_by_one })
}

/// Circulant `Circ(n; ±pairs, directed, involutions)` with explicit roles.
pub fn circulant(n: u64, pairs: &[i64], directed: &[i64], involutions: &[i64]) -> Result<MixedCayleyGraph> {
    let group = AbelianGroup::cyclic(n)?;
    let elems = |xs: &[i64]| -> Result<Vec<GroupElement>> { xs.iter().map(|&x| group.element(&[x])).collect() };
    let gens = MixedGenSet::new(&group, elems(involutions)?, elems(pairs)?, elems(directed)?)?;
    MixedCayleyGraph::build(group, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IntMatrix;

    fn one_vertex() -> MixedCayleyGraph {
        MixedCayleyGraph::build(AbelianGroup::trivial(), MixedGenSet::empty()).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = circulant(24, &[2], &[3], &[12]).unwrap();
        assert_eq!((g.order(), g.undirected_degree(), g.directed_degree()), (24, 3, 1));

        let g = circulant(10, &[1], &[2], &[5]).unwrap();
        assert_eq!((g.order(), g.undirected_degree(), g.directed_degree()), (10, 3, 1));
        assert_eq!(g.diameter(), 2);
        assert_eq!(g.distance_profile(), &[1, 4, 5]);

        let g = one_vertex();
        assert_eq!(g.diameter(), 0);
        assert_eq!(g.distance_profile(), &[1]);

        let z4 = AbelianGroup::cyclic(4).unwrap();
        assert_eq!(
            MixedCayleyGraph::build(z4, MixedGenSet::empty()).unwrap_err(),
            Error::NotGenerating { reached: 1, order: 4 }
        );
        assert!(matches!(circulant(12, &[2], &[], &[6]), Err(Error::NotGenerating { .. })));
    }

    #[test]
    fn diamond_k3_diameter() {
        let g = circulant(36, &[1, 5], &[], &[18]).unwrap();
        assert_eq!(g.diameter(), 3);
        assert_eq!(g.distance_profile().iter().sum::<u64>(), 36);
    }

    #[test]
    fn gen_set_validation() {
        let z10 = AbelianGroup::cyclic(10).unwrap();
        let e = |x: i64| z10.element(&[x]).unwrap();
        assert!(MixedGenSet::new(&z10, vec![e(1)], vec![], vec![]).is_err());
        assert!(MixedGenSet::new(&z10, vec![], vec![e(5)], vec![]).is_err());
        assert!(MixedGenSet::new(&z10, vec![], vec![], vec![e(5)]).is_err());
        assert!(MixedGenSet::new(&z10, vec![], vec![], vec![e(3), e(7)]).is_err());
        assert!(MixedGenSet::new(&z10, vec![], vec![e(3)], vec![e(7)]).is_err());
        assert!(MixedGenSet::new(&z10, vec![], vec![e(3), e(7)], vec![]).is_err());
        assert!(MixedGenSet::new(&z10, vec![], vec![e(0)], vec![]).is_err());
        let s = MixedGenSet::new(&z10, vec![e(5)], vec![e(9)], vec![e(2)]).unwrap();
        assert_eq!(s.pairs(), &[e(1)]);
    }

    #[test]
    fn classify_roles() {
        let z10 = AbelianGroup::cyclic(10).unwrap();
        let e = |x: i64| z10.element(&[x]).unwrap();
        let s = MixedGenSet::classify(&z10, &[], &[e(0), e(5), e(3), e(7), e(2), e(2)]);
        assert_eq!(s.involutions(), &[e(5)]);
        assert_eq!(s.pairs(), &[e(3)]);
        assert_eq!(s.directed(), &[e(2)]);
    }

    #[test]
    fn vertex_transitive_distances() {
        let g = circulant(20, &[1], &[13], &[10]).unwrap();
        for v in [0, 3, 7, 11, 19] {
            let d = g.distances_from(v);
            assert_eq!(*d.iter().max().unwrap(), g.diameter());
        }
    }

    #[test]
    fn products() {
        let g = circulant(10, &[1], &[2], &[5]).unwrap();
        let p = cartesian_product(&g, &one_vertex()).unwrap();
        assert_eq!((p.order(), p.diameter()), (10, 2));
        assert_eq!(p.distance_profile(), g.distance_profile());

        let k2 = circulant(2, &[], &[], &[1]).unwrap();
        let p = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(p.group().factors(), &[2, 2]);
        assert_eq!((p.gens().involutions().len(), p.diameter()), (2, 2));

        let c5 = circulant(5, &[1], &[], &[]).unwrap();
        let p = cartesian_product(&c5, &c5).unwrap();
        assert_eq!(p.group().factors(), &[5, 5]);
        assert_eq!(p.diameter(), 4);

        // Mixed moduli merge into a different chain.
        let c3 = circulant(3, &[], &[1], &[]).unwrap();
        let p = cartesian_product(&k2, &c3).unwrap();
        assert_eq!(p.group().factors(), &[6]);
        assert_eq!(p.diameter(), 3);
    }

    #[test]
    fn contractions() {
        let g = circulant(36, &[1, 5], &[], &[18]).unwrap();
        let c = contract_involution(&g, &g.group().element(&[18]).unwrap()).unwrap();
        assert_eq!(c.order(), 18);
        assert!((2..=3).contains(&c.diameter()));

        let k2 = circulant(2, &[], &[], &[1]).unwrap();
        let c = contract_involution(&k2, &k2.group().element(&[1]).unwrap()).unwrap();
        assert_eq!((c.order(), c.diameter()), (1, 0));

        let g = circulant(10, &[1], &[2], &[5]).unwrap();
        let c = contract_involution(&g, &g.group().element(&[5]).unwrap()).unwrap();
        assert_eq!(c.order(), 5);
        assert!((1..=2).contains(&c.diameter()));

        assert!(contract_involution(&g, &g.group().element(&[1]).unwrap()).is_err());
    }

    #[test]
    fn stretches() {
        let r = stretch_row(&IntMatrix::from_rows(&[[5]]).unwrap(), 0, 2).unwrap();
        assert_eq!(r.base.order(), 5);
        assert_eq!(r.base.diameter(), 4);
        assert_eq!(r.stretched.order(), 10);

        let r = stretch_row(&IntMatrix::identity(2), 1, 3).unwrap();
        assert_eq!(r.base.order(), 1);
        assert_eq!(r.stretched.group().factors(), &[3]);
        assert_eq!(r.stretched.gens().pairs().len(), 1);
        assert_eq!(r.stretched.diameter(), 1);
        assert!(r.diameter_grew_by_one);

        assert!(stretch_row(&IntMatrix::identity(2), 0, 1).is_err());
        assert!(stretch_row(&IntMatrix::identity(2), 2, 2).is_err());
    }

    #[test]
    fn description_round_trip() {
        let g = circulant(20, &[1], &[13], &[10]).unwrap();
        let text = g.to_description();
        assert_eq!(text, "group Z20\ninv 10\npair 1\ndir 13\n");
        assert_eq!(MixedCayleyGraph::from_description(&text).unwrap(), g);

        let text = "group Z4xZ12\n# comment\ninv 2,6\npair 1,0\ndir 0,1\n";
        let g = MixedCayleyGraph::from_description(text).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(MixedCayleyGraph::from_description(&g.to_description()).unwrap(), g);

        assert_eq!(MixedCayleyGraph::from_description("group Z1\n").unwrap().diameter(), 0);
        assert!(MixedCayleyGraph::from_description("pair 1\n").is_err());
        assert!(MixedCayleyGraph::from_description("group Z5\nedge 1\n").is_err());
        assert!(MixedCayleyGraph::from_description("group Z5\npair 1,2\n").is_err());
    }

    #[test]
    fn dot_export() {
        let g = circulant(10, &[1], &[2], &[5]).unwrap();
        let dot = g.to_dot().unwrap();
        assert_eq!(dot.matches("dir=none").count(), 10 + 5);
        assert_eq!(dot.matches(";\n").count() - dot.matches("dir=none").count() - 10, 10);
        assert!(circulant(201, &[1], &[], &[]).unwrap().to_dot().is_err());
    }

    #[test]
    fn induced_degree_spec() {
        let g = circulant(32, &[1], &[11], &[16]).unwrap();
        let spec = g.degree_spec(4);
        assert_eq!(spec.r_alpha, 1);
        assert_eq!(spec.r_omega, 1);
        assert_eq!(spec.z_omega, 1);
        let z4 = circulant(4, &[1], &[], &[2]).unwrap();
        // ±1 in Z4 has order 4, rounded up to the order-5 class.
        assert_eq!(z4.degree_spec(2).r_odd.get(&2), Some(&1));
    }
}
