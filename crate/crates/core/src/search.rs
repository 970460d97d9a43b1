//! Exhaustive search for the largest mixed Abelian Cayley graph with a
//! given degree profile and diameter.
//!
//! Orders are tried from the top down. For each order every Abelian group
//! is first tested against the improved Moore bound (the best bound any
//! generating set could have given the element orders the group offers),
//! then its canonical generating sets are built and certified by BFS.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use itertools::Itertools;
use log::{debug, info};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::bounds::{mac_bound, mac_bound_improved, DegreeSpec};
use crate::cayley::{pair_representative, MixedCayleyGraph, MixedGenSet};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_abelian_groups, AbelianGroup, GroupElement};

pub const DEFAULT_ORDER_CAP: u64 = 5000;

/// Search parameters. `n_max` defaults to `M_AC` of the profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub r_alpha: u32,
    pub r_omega: u32,
    pub z_omega: u32,
    pub k: u32,
    pub n_max: Option<u64>,
    pub n_min: u64,
    pub prune: bool,
    pub all_witnesses: bool,
    /// Upper limit on `n_max`.
    pub cap: u64,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl SearchSpec {
    pub fn new(r_alpha: u32, r_omega: u32, z_omega: u32, k: u32) -> Self {
        SearchSpec {
            r_alpha,
            r_omega,
            z_omega,
            k,
            n_max: None,
            n_min: 1,
            prune: true,
            all_witnesses: false,
            cap: DEFAULT_ORDER_CAP,
            jobs: 0,
        }
    }

    pub fn unpruned(mut self) -> Self {
        self.prune = false;
        self
    }

    pub fn with_all_witnesses(mut self) -> Self {
        self.all_witnesses = true;
        self
    }

    pub fn moore_bound(&self) -> BigUint {
        mac_bound(self.r_alpha, self.r_omega, self.z_omega, self.k)
    }

    fn order_range(&self) -> Result<(u64, u64)> {
        let max = match self.n_max {
            Some(n) => n,
            None => {
                let bound = self.moore_bound();
                bound
                    .to_u64()
                    .filter(|&n| n <= self.cap)
                    .ok_or(Error::CapExceeded { size: bound.to_u128().unwrap_or(u128::MAX), cap: self.cap as u128 })?
            }
        };
        if max > self.cap {
            return Err(Error::CapExceeded { size: max as u128, cap: self.cap as u128 });
        }
        let min = self.n_min.max(1);
        if min > max {
            return Err(Error::EmptyRange { min, max });
        }
        Ok((min, max))
    }
}

/// A certified `(group, generating set)` pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub group: AbelianGroup,
    pub gens: MixedGenSet,
}

impl Witness {
    pub fn graph(&self) -> Result<MixedCayleyGraph> {
        MixedCayleyGraph::build(self.group.clone(), self.gens.clone())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchResult {
    /// Largest order with a witness, if any order in range had one.
    pub best_n: Option<u64>,
    pub witnesses: Vec<Witness>,
    pub pruned_groups: u64,
    pub examined_sets: u64,
}

/// Order class a generator slot can fall into, relative to diameter `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Class {
    Finite(u32),
    Omega,
}

fn pair_class(order: u64, k: u32) -> Class {
    let s = if order % 2 == 1 { (order - 1) / 2 } else { order / 2 };
    if s <= k as u64 {
        Class::Finite(s as u32)
    } else {
        Class::Omega
    }
}

fn arc_class(order: u64, k: u32) -> Class {
    let t = order - 1;
    if t <= k as u64 {
        Class::Finite(t as u32)
    } else {
        Class::Omega
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Largest improved bound over all ways of assigning the spec's pair and
/// directed slots to order classes realizable in `group`. A group whose
/// order exceeds this value cannot host a witness.
pub fn prune_group(group: &AbelianGroup, spec: &SearchSpec) -> BigUint {
    if group.order() == 1 {
        return spec.moore_bound();
    }
    let k = spec.k;
    let involutions = (1u64 << group.factors().iter().filter(|&&d| d % 2 == 0).count()) - 1;
    if spec.r_alpha as u64 > involutions {
        return BigUint::default();
    }
    let orders: Vec<u64> = divisors(group.exponent()).into_iter().filter(|&q| q >= 3).collect();
    let pair_classes: BTreeSet<Class> = orders.iter().map(|&q| pair_class(q, k)).collect();
    let arc_classes: BTreeSet<Class> = orders.iter().map(|&q| arc_class(q, k)).collect();
    if (spec.r_omega > 0 && pair_classes.is_empty()) || (spec.z_omega > 0 && arc_classes.is_empty()) {
        return BigUint::default();
    }

    let mut best = BigUint::default();
    let pair_choices = pair_classes.iter().copied().combinations_with_replacement(spec.r_omega as usize);
    for pairs in pair_choices {
        let arc_choices = arc_classes.iter().copied().combinations_with_replacement(spec.z_omega as usize);
        for arcs in arc_choices {
            let mut d = DegreeSpec::new(k).with_r_alpha(spec.r_alpha);
            for c in &pairs {
                match c {
                    Class::Finite(s) => *d.r_odd.entry(*s).or_default() += 1,
                    Class::Omega => d.r_omega += 1,
                }
            }
            for c in &arcs {
                match c {
                    Class::Finite(t) => *d.z_ord.entry(*t).or_default() += 1,
                    Class::Omega => d.z_omega += 1,
                }
            }
            let bound = mac_bound_improved(&d).expect("classes are valid for k");
            best = best.max(bound);
        }
    }
    best
}

/// Canonical generating sets of `group` for the spec's slot counts.
///
/// Slots of one kind are unordered (each list is strictly increasing),
/// pairs are `±`-normalized, and a directed generator never has its
/// inverse in the set. For cyclic groups only the least member of each
/// orbit under multiplication by units is produced.
pub fn enumerate_gen_sets(group: &AbelianGroup, spec: &SearchSpec) -> impl Iterator<Item = MixedGenSet> {
    let group = Rc::new(group.clone());
    let mut involutions = Vec::new();
    let mut pair_reps = Vec::new();
    let mut arcs = Vec::new();
    for g in group.elements().skip(1) {
        match group.element_order(&g) {
            2 => involutions.push(g),
            _ => {
                if pair_representative(&group, &g) == g {
                    pair_reps.push(g.clone());
                }
                arcs.push(g);
            }
        }
    }
    let arcs = Rc::new(arcs);
    let units: Rc<Vec<i64>> = Rc::new(if group.is_cyclic() && group.order() > 2 {
        let n = group.order();
        (2..n).filter(|u| u.gcd(&n) == 1).map(|u| u as i64).collect()
    } else {
        Vec::new()
    });
    let (ra, rw, zw) = (spec.r_alpha as usize, spec.r_omega as usize, spec.z_omega as usize);

    let slot_sets = involutions
        .into_iter()
        .combinations(ra)
        .cartesian_product(pair_reps.into_iter().combinations(rw).collect::<Vec<_>>())
        .flat_map({
            let group = Rc::clone(&group);
            move |(invs, pairs)| {
                let group = Rc::clone(&group);
                let blocked: BTreeSet<GroupElement> = pairs.iter().flat_map(|p| [p.clone(), group.neg(p)]).collect();
                let free: Vec<GroupElement> = arcs.iter().filter(|b| !blocked.contains(b)).cloned().collect();
                free.into_iter().combinations(zw).filter_map(move |dir| {
                    let set: BTreeSet<&GroupElement> = dir.iter().collect();
                    if dir.iter().any(|b| set.contains(&group.neg(b))) {
                        return None;
                    }
                    Some(
                        MixedGenSet::new(&group, invs.clone(), pairs.clone(), dir).expect("roles hold by construction"),
                    )
                })
            }
        });

    slot_sets.filter(move |set| units.iter().all(|&u| *set <= set.scaled(&group, u)))
}

#[derive(Default)]
struct GroupOutcome {
    pruned: bool,
    examined: u64,
    witnesses: Vec<Witness>,
}

fn search_group(group: &AbelianGroup, n: u64, spec: &SearchSpec) -> GroupOutcome {
    let mut out = GroupOutcome::default();
    if spec.prune && prune_group(group, spec) < BigUint::from(n) {
        out.pruned = true;
        return out;
    }
    let target = BigUint::from(n);
    let mut bound_cache: HashMap<DegreeSpec, bool> = HashMap::new();
    for gens in enumerate_gen_sets(group, spec) {
        if spec.prune {
            let profile = gens.degree_spec(group, spec.k);
            let fits = *bound_cache
                .entry(profile)
                .or_insert_with_key(|p| mac_bound_improved(p).expect("valid profile") >= target);
            if !fits {
                continue;
            }
        }
        out.examined += 1;
        let Ok(graph) = MixedCayleyGraph::build(group.clone(), gens.clone()) else {
            continue;
        };
        if graph.diameter() <= spec.k {
            out.witnesses.push(Witness { group: group.clone(), gens });
            if !spec.all_witnesses {
                break;
            }
        }
    }
    out
}

/// Whether any admissible generating set of `group` reaches diameter `≤ k`,
/// checked without pruning.
pub fn group_has_witness(group: &AbelianGroup, spec: &SearchSpec) -> bool {
    let spec = SearchSpec { prune: false, all_witnesses: false, ..spec.clone() };
    !search_group(group, group.order(), &spec).witnesses.is_empty()
}

/// Finds the largest order in `[n_min, n_max]` admitting a graph with the
/// spec's profile and diameter at most `k`. Output does not depend on the
/// number of worker threads.
pub fn search_optimal(spec: &SearchSpec) -> Result<SearchResult> {
    let (min, max) = spec.order_range()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let mut result = SearchResult::default();
    for n in (min..=max).rev() {
        let groups = enumerate_abelian_groups(n);
        let outcomes: Vec<GroupOutcome> =
            pool.install(|| groups.par_iter().map(|g| search_group(g, n, spec)).collect());
        let mut witnesses = Vec::new();
        for o in outcomes {
            result.pruned_groups += o.pruned as u64;
            result.examined_sets += o.examined;
            witnesses.extend(o.witnesses);
        }
        debug!("N = {n}: {} groups, {} witnesses", groups.len(), witnesses.len());
        if !witnesses.is_empty() {
            witnesses.sort();
            if !spec.all_witnesses {
                witnesses.truncate(1);
            }
            info!("best order {n} with {} witness(es)", witnesses.len());
            result.best_n = Some(n);
            result.witnesses = witnesses;
            return Ok(result);
        }
    }
    info!("no witness in [{min}, {max}]");
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> AbelianGroup {
        AbelianGroup::cyclic(n).unwrap()
    }

    #[test]
    fn prune_examples() {
        let spec = SearchSpec::new(1, 0, 2, 7);
        let g: AbelianGroup = "Z2xZ2xZ2xZ2xZ4".parse().unwrap();
        // Both arcs have order at most 4: |Z2 x Z4 x Z4| bounds the order.
        assert_eq!(prune_group(&g, &spec), BigUint::from(32u32));
        assert_eq!(prune_group(&z(64), &spec), BigUint::from(64u32));
        assert!(prune_group(&AbelianGroup::trivial(), &spec) >= BigUint::from(1u32));
        // No involution in a group of odd order.
        assert_eq!(prune_group(&z(9), &SearchSpec::new(1, 1, 0, 2)), BigUint::default());
    }

    #[test]
    fn order_64_rejections() {
        let spec = SearchSpec::new(1, 0, 2, 7);
        let rejected: Vec<String> = enumerate_abelian_groups(64)
            .into_iter()
            .filter(|g| prune_group(g, &spec) < BigUint::from(64u32))
            .map(|g| g.to_string())
            .collect();
        assert_eq!(rejected, vec!["Z2xZ2xZ2xZ2xZ2xZ2", "Z2xZ2xZ2xZ2xZ4", "Z2xZ2xZ4xZ4", "Z4xZ4xZ4"]);
    }

    #[test]
    fn enumeration_examples() {
        let sets: Vec<_> = enumerate_gen_sets(&z(2), &SearchSpec::new(1, 0, 0, 1)).collect();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].involutions(), &[z(2).element(&[1]).unwrap()]);

        let g = z(10);
        let e = |x: i64| g.element(&[x]).unwrap();
        let sets: Vec<_> = enumerate_gen_sets(&g, &SearchSpec::new(1, 1, 1, 2)).collect();
        let a = MixedGenSet::new(&g, vec![e(5)], vec![e(1)], vec![e(2)]).unwrap();
        let b = MixedGenSet::new(&g, vec![e(5)], vec![e(2)], vec![e(1)]).unwrap();
        assert!(sets.contains(&a));
        assert!(sets.contains(&b));
        // Unit multiples of a are not repeated.
        assert!(!sets.contains(&a.scaled(&g, 3)));

        assert_eq!(enumerate_gen_sets(&z(12), &SearchSpec::new(2, 0, 0, 2)).count(), 0);
    }

    #[test]
    fn enumeration_is_canonical_and_unique() {
        let g: AbelianGroup = "Z2xZ6".parse().unwrap();
        let sets: Vec<_> = enumerate_gen_sets(&g, &SearchSpec::new(1, 1, 1, 3)).collect();
        let unique: BTreeSet<_> = sets.iter().cloned().collect();
        assert_eq!(unique.len(), sets.len());
        for s in &sets {
            assert_eq!(s.involutions().len(), 1);
            assert_eq!(s.pairs().len(), 1);
            assert_eq!(s.directed().len(), 1);
        }
    }

    #[test]
    fn small_searches() {
        let r = search_optimal(&SearchSpec::new(1, 2, 0, 2)).unwrap();
        assert_eq!(r.best_n, Some(16));
        let r = search_optimal(&SearchSpec::new(0, 2, 0, 2)).unwrap();
        assert_eq!(r.best_n, Some(13));
        let r = search_optimal(&SearchSpec::new(1, 1, 1, 2).with_all_witnesses()).unwrap();
        assert_eq!(r.best_n, Some(10));
        let g = z(10);
        let e = |x: i64| g.element(&[x]).unwrap();
        let circ10 = MixedGenSet::new(&g, vec![e(5)], vec![e(1)], vec![e(2)]).unwrap();
        assert!(r.witnesses.iter().any(|w| w.group == g && w.gens == circ10));
    }

    #[test]
    fn search_errors() {
        let mut s = SearchSpec::new(1, 1, 1, 2);
        s.n_min = 20;
        assert!(matches!(search_optimal(&s), Err(Error::EmptyRange { .. })));
        let mut s = SearchSpec::new(1, 2, 0, 40);
        s.cap = 100;
        assert!(matches!(search_optimal(&s), Err(Error::CapExceeded { .. })));
    }
}
