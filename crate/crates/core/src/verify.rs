//! Reproduction suite: every acceptance criterion as a self-contained check
//! that reports PASS or FAIL with a one-line detail.

use std::fmt;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::bounds::{
    mac_bound, mac_bound_double_sum_form, mac_bound_improved, mac_bound_sum_form, moore_count_oracle, moore_layers,
    DegreeSpec, MooreParams, DEFAULT_ORACLE_CAP,
};
use crate::cayley::{cartesian_product, circulant, contract_involution, MixedCayleyGraph, MixedGenSet};
use crate::families::Family;
use crate::lattice::{group_from_matrix, smith_normal_form, AbelianGroup, IntMatrix};
use crate::search::{search_optimal, SearchSpec};

/// Options for [`run`]. `corrupt_family` replaces that family's constructor
/// with a broken one, to check that the suite notices.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub filter: Option<String>,
    pub corrupt_family: Option<Family>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub id: u32,
    pub group: &'static str,
    pub name: &'static str,
}

pub const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, group: "bounds", name: "bound table reproduction" },
    Criterion { id: 2, group: "bounds", name: "formula equivalence sweep" },
    Criterion { id: 3, group: "bounds", name: "symmetry lemma sweep" },
    Criterion { id: 4, group: "bounds", name: "oracle equivalence" },
    Criterion { id: 5, group: "snf", name: "SNF worked example" },
    Criterion { id: 6, group: "families", name: "family certification" },
    Criterion { id: 7, group: "search", name: "optimality at desk scale" },
    Criterion { id: 8, group: "constructions", name: "contraction and products" },
    Criterion { id: 9, group: "bounds", name: "Moore general coherence" },
];

impl Criterion {
    pub fn by_id(id: u32) -> Option<Criterion> {
        CRITERIA.iter().copied().find(|c| c.id == id)
    }

    /// True if `filter` is the criterion number, its group, or part of its name.
    pub fn matches(&self, filter: &str) -> bool {
        let f = filter.trim().to_lowercase();
        f == self.id.to_string() || f == self.group || self.name.to_lowercase().contains(&f)
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {:<28} {:>8.2}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion.id,
            self.criterion.name,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

type Outcome = std::result::Result<String, String>;

fn check(ok: bool, pass: impl Into<String>, fail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail())
    }
}

/// Runs one criterion. Panics inside the check count as failures.
pub fn run_criterion(c: Criterion, opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| match c.id {
        1 => bound_table(),
        2 => formula_equivalence(),
        3 => symmetry_lemma(),
        4 => oracle_equivalence(),
        5 => snf_worked_example(),
        6 => family_certification(opts.corrupt_family),
        7 => desk_scale_optimality(),
        8 => construction_properties(),
        9 => moore_coherence(),
        _ => Err(format!("no criterion {}", c.id)),
    }))
    .unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionReport { criterion: c, passed, detail, elapsed: start.elapsed() }
}

/// Runs every criterion selected by `opts.filter`, in order.
pub fn run(opts: &VerifyOptions) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .filter(|c| opts.filter.as_deref().is_none_or(|f| c.matches(f)))
        .map(|&c| run_criterion(c, opts))
        .collect()
}

fn bound_table() -> Outcome {
    let mac = mac_bound(1, 0, 2, 7);
    let spec = DegreeSpec::new(7).with_r_alpha(1).with_z_ord(3, 2);
    let improved = mac_bound_improved(&spec).map_err(|e| e.to_string())?;
    check(mac == BigUint::from(64u32) && improved == BigUint::from(34u32), "M_AC = 64, improved = 34", || {
        format!("M_AC(1,0,2,7) = {mac} (want 64), improved({spec}) = {improved} (want 34)")
    })
}

fn formula_equivalence() -> Outcome {
    let mut cases = 0;
    for ra in 0..=4 {
        for rw in 0..=4 {
            for zw in 0..=4 {
                for k in 1..=8 {
                    let a = mac_bound_sum_form(ra, rw, zw, k);
                    let b = mac_bound_double_sum_form(ra, rw, zw, k);
                    if a != b {
                        return Err(format!("({ra},{rw},{zw},{k}): {a} vs {b}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cases agree"))
}

fn symmetry_lemma() -> Outcome {
    let mut cases = 0;
    for r1 in 0..=3i32 {
        for r2 in 0..=3i32 {
            for z in 0..=3i32 {
                for k in 1..=6 {
                    let base = mac_bound(r1 as u32, r2 as u32, z as u32, k);
                    for nu in -r2..=r1.min(z) {
                        let moved = mac_bound((r1 - nu) as u32, (r2 + nu) as u32, (z - nu) as u32, k);
                        if moved != base {
                            return Err(format!("M_AC({r1},{r2},{z},{k}) = {base} but nu={nu} gives {moved}"));
                        }
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} (profile, nu) pairs agree"))
}

/// Every profile with all counts at most 2, pair classes `s <= 3`, directed
/// classes `t <= 3` and `1 <= k <= 5`, deduplicated.
pub fn oracle_grid() -> Vec<DegreeSpec> {
    let mut out = Vec::new();
    for k in 1..=5 {
        for code in 0..3u32.pow(8) {
            let mut c = code;
            let mut next = || {
                let v = c % 3;
                c /= 3;
                v
            };
            let mut spec = DegreeSpec::new(k).with_r_alpha(next()).with_r_omega(next()).with_z_omega(next());
            for s in 1..=3 {
                let n = next();
                if s <= k {
                    spec = spec.with_r_odd(s, n);
                }
            }
            for t in 2..=3 {
                let n = next();
                if t <= k {
                    spec = spec.with_z_ord(t, n);
                }
            }
            out.push(spec.normalized());
        }
    }
    out.sort_by_key(|s| s.to_string());
    out.dedup();
    out
}

fn oracle_equivalence() -> Outcome {
    let specs = oracle_grid();
    let mismatches: Vec<String> = specs
        .par_iter()
        .filter_map(|spec| {
            let formula = mac_bound_improved(spec).map_err(|e| e.to_string());
            let oracle = moore_count_oracle(spec, DEFAULT_ORACLE_CAP).map(BigUint::from).map_err(|e| e.to_string());
            match (formula, oracle) {
                (Ok(f), Ok(o)) if f == o => None,
                (f, o) => Some(format!("{spec}: formula {f:?}, oracle {o:?}")),
            }
        })
        .collect();
    check(mismatches.is_empty(), format!("{} profiles match the oracle", specs.len()), || {
        format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
    })
}

/// The 3x3 matrix whose quotient is `Z24` with generators `±2, 3, 12`.
pub fn worked_example_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[[3, -2, 0], [0, 4, 1], [0, 0, 2]]).expect("square")
}

fn snf_worked_example() -> Outcome {
    let m = worked_example_matrix();
    let d = smith_normal_form(&m);
    let want = IntMatrix::diagonal([1, 1, 24].map(BigInt::from));
    if d.s != want {
        return Err(format!("S = diag{:?}", d.s.diag()));
    }
    if d.u.mul(&m).mul(&d.v) != d.s {
        return Err("S != U M V".into());
    }
    let (du, dv) = (d.u.det(), d.v.det());
    if du.magnitude() != &BigUint::from(1u32) || dv.magnitude() != &BigUint::from(1u32) {
        return Err(format!("det U = {du}, det V = {dv}"));
    }
    let (group, images) = group_from_matrix(&m).map_err(|e| e.to_string())?;
    if group != AbelianGroup::cyclic(24).unwrap() {
        return Err(format!("group {group}, want Z24"));
    }
    let mut classes: Vec<u64> = images.iter().map(|g| g.coords()[0].min(24 - g.coords()[0])).collect();
    classes.sort();
    check(classes == [2, 3, 12], "S = diag(1,1,24), images ±2, ±3, ±12 in Z24", || {
        format!("image classes {classes:?}, want [2, 3, 12]")
    })
}

/// Families and `k` ranges checked by criterion 6.
pub fn family_ranges() -> Vec<(Family, std::ops::RangeInclusive<u32>)> {
    vec![(Family::Degree4, 1..=10), (Family::TTile, 1..=10), (Family::Diamond, 2..=12), (Family::T, 2..=12)]
}

/// A deliberately broken constructor: the first pair generator is doubled.
fn corrupted(family: Family, k: u32) -> crate::Result<MixedCayleyGraph> {
    let good = family.build(k)?.graph;
    let group = good.group().clone();
    let gens = good.gens();
    let mut undirected: Vec<_> = gens.involutions().to_vec();
    for (i, p) in gens.pairs().iter().enumerate() {
        undirected.push(if i == 0 { group.scalar_mul(p, 2) } else { p.clone() });
    }
    let gens = MixedGenSet::classify(&group, &undirected, gens.directed());
    MixedCayleyGraph::build(group, gens)
}

fn family_certification(corrupt: Option<Family>) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (family, ks) in family_ranges() {
        let (ra, rw, zw) = family.profile();
        for k in ks {
            let built = if corrupt == Some(family) { corrupted(family, k) } else { family.build(k).map(|f| f.graph) };
            let g = match built {
                Ok(g) => g,
                Err(e) => {
                    failures.push(format!("{family} k={k}: {e}"));
                    continue;
                }
            };
            let want_n = family.claimed_order(k);
            // Tiny members may carry an order-2 step as an involution.
            let degrees_ok = g.undirected_degree() + g.directed_degree() == (ra + 2 * rw + zw) as u64;
            if g.diameter() != k || g.order() != want_n || !degrees_ok {
                failures.push(format!(
                    "{family} k={k}: N={} D={} (want N={want_n} D={k}), r={} z={}",
                    g.order(),
                    g.diameter(),
                    g.undirected_degree(),
                    g.directed_degree()
                ));
            }
            checked += 1;
        }
    }
    check(failures.is_empty(), format!("{checked} family members certified"), || failures.join("; "))
}

fn desk_scale_optimality() -> Outcome {
    let cases = [((1, 2, 0, 2), 16), ((1, 1, 1, 2), 10), ((0, 2, 0, 2), 13), ((1, 1, 1, 3), 20)];
    let mut found = Vec::new();
    for ((ra, rw, zw, k), want) in cases {
        let spec = SearchSpec::new(ra, rw, zw, k);
        let pruned = search_optimal(&spec).map_err(|e| e.to_string())?;
        let full = search_optimal(&spec.clone().unpruned()).map_err(|e| e.to_string())?;
        if pruned.best_n != Some(want) || full.best_n != Some(want) {
            return Err(format!(
                "({ra},{rw},{zw},k={k}): pruned {:?}, unpruned {:?}, want {want}",
                pruned.best_n, full.best_n
            ));
        }
        for w in &pruned.witnesses {
            let g = w.graph().map_err(|e| e.to_string())?;
            if g.order() != want || g.diameter() > k {
                return Err(format!("witness {} fails to recertify", w.group));
            }
            let bound = mac_bound_improved(&g.degree_spec(k)).map_err(|e| e.to_string())?;
            if BigUint::from(want) > bound {
                return Err(format!("witness order {want} exceeds its improved bound {bound}"));
            }
        }
        found.push(format!("{want}"));
    }
    Ok(format!("best N = {} (pruned = unpruned)", found.join(", ")))
}

fn construction_properties() -> Outcome {
    let mut contractions = 0;
    for family in Family::ALL {
        for k in family.min_k()..=8 {
            let g = family.build(k).map_err(|e| e.to_string())?.graph;
            for b in g.gens().involutions().to_vec() {
                let c = contract_involution(&g, &b).map_err(|e| format!("{family} k={k}: {e}"))?;
                let (d, d2) = (g.diameter(), c.diameter());
                if c.order() * 2 != g.order() || !(d2 == d || d2 + 1 == d) {
                    return Err(format!("{family} k={k}: N {} -> {}, D {d} -> {d2}", g.order(), c.order()));
                }
                contractions += 1;
            }
        }
    }
    let small =
        |n: u64, pairs: &[i64], dir: &[i64], inv: &[i64]| circulant(n, pairs, dir, inv).expect("valid circulant");
    let pairs = [
        (small(2, &[], &[], &[1]), small(2, &[], &[], &[1])),
        (small(5, &[1], &[], &[]), small(5, &[1], &[], &[])),
        (small(4, &[1], &[], &[]), small(3, &[], &[1], &[])),
        (small(6, &[1], &[], &[3]), small(5, &[1], &[], &[])),
        (small(10, &[1], &[2], &[5]), small(2, &[], &[], &[1])),
        (small(13, &[2, 3], &[], &[]), small(4, &[1], &[], &[])),
        (small(7, &[], &[1, 3], &[]), small(3, &[1], &[], &[])),
        (small(8, &[1], &[3], &[4]), small(6, &[], &[1], &[3])),
        (small(16, &[1, 3], &[], &[8]), small(5, &[], &[1], &[])),
        (small(20, &[1], &[13], &[10]), small(9, &[1, 4], &[], &[])),
    ];
    for (a, b) in &pairs {
        let p = cartesian_product(a, b).map_err(|e| e.to_string())?;
        if p.diameter() != a.diameter() + b.diameter() || p.order() != a.order() * b.order() {
            return Err(format!(
                "product of {} and {}: D {} != {} + {}",
                a.group(),
                b.group(),
                p.diameter(),
                a.diameter(),
                b.diameter()
            ));
        }
    }
    Ok(format!("{contractions} contractions, {} products", pairs.len()))
}

fn moore_coherence() -> Outcome {
    let mut cases = 0;
    for r in 0..=4u64 {
        for z in 0..=4u64 {
            if r + z == 0 {
                continue;
            }
            let params = MooreParams::new(r, z).map_err(|e| e.to_string())?;
            for k in 0..=10 {
                let total: BigUint = moore_layers(r, z, k).map_err(|e| e.to_string())?.iter().sum();
                if let Some(closed) = params.closed_form(k) {
                    if closed != BigInt::from(total.clone()) {
                        return Err(format!("M({r},{z},{k}): recurrence {total}, closed form {closed}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    let mut dominated = 0;
    for ra in 0..=4u32 {
        for rw in 0..=2u32 {
            for zw in 0..=4u32 {
                if ra + rw + zw == 0 {
                    continue;
                }
                for k in 1..=10 {
                    let ac = mac_bound(ra, rw, zw, k);
                    let general = crate::bounds::moore_mixed_general((ra + 2 * rw) as u64, zw as u64, k)
                        .map_err(|e| e.to_string())?;
                    if ac > general {
                        return Err(format!("M_AC({ra},{rw},{zw},{k}) = {ac} > M = {general}"));
                    }
                    dominated += 1;
                }
            }
        }
    }
    Ok(format!("{cases} closed forms match, {dominated} dominance checks"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        let c = Criterion::by_id(4).unwrap();
        assert!(c.matches("bounds"));
        assert!(c.matches("4"));
        assert!(c.matches("oracle"));
        assert!(!c.matches("snf"));
        let picked: Vec<u32> = CRITERIA.iter().filter(|c| c.matches("bounds")).map(|c| c.id).collect();
        assert_eq!(picked, vec![1, 2, 3, 4, 9]);
    }

    #[test]
    fn quick_criteria_pass() {
        let opts = VerifyOptions::default();
        for id in [2, 3, 5, 9] {
            let r = run_criterion(Criterion::by_id(id).unwrap(), &opts);
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn corrupted_family_is_caught() {
        let opts = VerifyOptions { filter: Some("families".into()), corrupt_family: Some(Family::Diamond) };
        let reports = run(&opts);
        assert_eq!(reports.len(), 1);
        assert!(!reports[0].passed);
        assert!(reports[0].detail.contains("diamond"), "{}", reports[0].detail);
        assert!(!reports[0].detail.contains("degree4"), "{}", reports[0].detail);
    }
}
