//! Moore-type upper bounds on the order of mixed Abelian Cayley graphs.
//!
//! Everything here is exact: binomials and multinomials are `BigUint`, and a
//! binomial whose upper index is negative or smaller than the lower one is 0.

mod moore;
mod oracle;
mod spec;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Result;

pub use moore::{moore_layers, moore_mixed_general, MooreParams, QuadraticField, Surd};
pub use oracle::{moore_count_oracle, oracle_search_space, DEFAULT_ORACLE_CAP};
pub use spec::DegreeSpec;

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Per-call binomial cache.
#[derive(Default)]
struct Binomials {
    cache: HashMap<(i64, i64), BigUint>,
}

impl Binomials {
    fn get(&mut self, n: i64, k: i64) -> BigUint {
        self.cache.entry((n, k)).or_insert_with(|| binomial(n, k)).clone()
    }
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

/// `Σ_{i=0}^{k} C(r_ω + z_ω + i, i) · C(r_α + r_ω, k − i)`.
pub fn mac_bound_sum_form(r_alpha: u32, r_omega: u32, z_omega: u32, k: u32) -> BigUint {
    let mut c = Binomials::default();
    let (ra, rw, zw, k) = (r_alpha as i64, r_omega as i64, z_omega as i64, k as i64);
    (0..=k).map(|i| c.get(rw + zw + i, i) * c.get(ra + rw, k - i)).sum()
}

/// `Σ_i C(r_ω, i) 2^i Σ_j C(r_α, j) C(k + z_ω − j, i + z_ω)`.
pub fn mac_bound_double_sum_form(r_alpha: u32, r_omega: u32, z_omega: u32, k: u32) -> BigUint {
    let mut c = Binomials::default();
    let (ra, rw, zw, k) = (r_alpha as i64, r_omega as i64, z_omega as i64, k as i64);
    let mut total = BigUint::zero();
    for i in 0..=rw {
        let inner: BigUint = (0..=ra).map(|j| c.get(ra, j) * c.get(k + zw - j, i + zw)).sum();
        total += c.get(rw, i) * pow2(i as u32) * inner;
    }
    total
}

/// Moore bound for mixed Abelian Cayley graphs with `r_alpha` involutions,
/// `r_omega` ± pairs and `z_omega` directed generators.
///
/// Both closed forms are evaluated; they must agree.
pub fn mac_bound(r_alpha: u32, r_omega: u32, z_omega: u32, k: u32) -> BigUint {
    let a = mac_bound_sum_form(r_alpha, r_omega, z_omega, k);
    let b = mac_bound_double_sum_form(r_alpha, r_omega, z_omega, k);
    assert_eq!(a, b, "M_AC closed forms disagree at ({r_alpha}, {r_omega}, {z_omega}, {k})");
    a
}

/// Weak compositions of `n` into `parts` nonnegative summands.
pub fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            go(rest - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

/// `total! / (σ_1! ⋯ σ_h! (total − Σσ)!)`, a product of binomials.
fn multinomial(c: &mut Binomials, total: u32, parts: &[u32]) -> BigUint {
    let mut rest = total as i64;
    let mut acc = BigUint::one();
    for &p in parts {
        acc *= c.get(rest, p as i64);
        rest -= p as i64;
    }
    acc
}

/// One finite-order generator class of the improved bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderClass {
    /// `s` for ± pairs of order `2s + 1`, `t` for arcs of order `t + 1`.
    pub index: u32,
    pub count: u32,
    pub undirected: bool,
}

impl OrderClass {
    pub fn label(&self) -> String {
        if self.undirected {
            format!("r[{}]={}", self.index, self.count)
        } else {
            format!("z[{}]={}", self.index, self.count)
        }
    }

    /// Number of placements of this class's boxes using exactly `w` balls,
    /// for `w = 0..=k`. A box holds at most `index` balls; undirected boxes
    /// additionally pick a colour (generator or its inverse).
    fn ball_usage(&self, c: &mut Binomials, k: u32) -> Vec<BigUint> {
        let h = self.index as usize;
        let mut dist = vec![BigUint::zero(); k as usize + 1];
        for nonempty in 0..=self.count {
            let colour = if self.undirected { pow2(nonempty) } else { BigUint::one() };
            for sigma in compositions(nonempty, h) {
                let balls: u64 = sigma.iter().enumerate().map(|(i, &s)| (i as u64 + 1) * s as u64).sum();
                if balls > k as u64 {
                    continue;
                }
                dist[balls as usize] += multinomial(c, self.count, &sigma) * &colour;
            }
        }
        dist
    }
}

/// Finite-order classes of a spec, pairs first, each in index order.
pub fn order_classes(spec: &DegreeSpec) -> Vec<OrderClass> {
    let pairs = spec.r_odd.iter().map(|(&index, &count)| OrderClass { index, count, undirected: true });
    let arcs = spec.z_ord.iter().map(|(&index, &count)| OrderClass { index, count, undirected: false });
    pairs.chain(arcs).filter(|c| c.count > 0).collect()
}

/// Term-by-term view of the improved bound.
#[derive(Clone, Debug)]
pub struct ImprovedBreakdown {
    pub spec: DegreeSpec,
    /// Ball-usage distribution of each finite-order class.
    pub classes: Vec<(OrderClass, Vec<BigUint>)>,
    /// Convolution of all class distributions.
    pub combined: Vec<BigUint>,
    /// `(i_α, i_ω, contribution)`.
    pub terms: Vec<(u32, u32, BigUint)>,
    pub total: BigUint,
}

/// Improved bound for a full degree profile, with its per-term breakdown.
pub fn mac_bound_improved_breakdown(spec: &DegreeSpec) -> Result<ImprovedBreakdown> {
    spec.validate()?;
    let spec = spec.clone().normalized();
    let k = spec.k;
    let mut c = Binomials::default();

    let classes: Vec<(OrderClass, Vec<BigUint>)> = order_classes(&spec)
        .into_iter()
        .map(|class| {
            let dist = class.ball_usage(&mut c, k);
            (class, dist)
        })
        .collect();

    let mut combined = vec![BigUint::zero(); k as usize + 1];
    combined[0] = BigUint::one();
    for (_, dist) in &classes {
        let mut next = vec![BigUint::zero(); k as usize + 1];
        for (a, x) in combined.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in dist.iter().enumerate().take(k as usize + 1 - a) {
                next[a + b] += x * y;
            }
        }
        combined = next;
    }

    let (ra, rw, zw) = (spec.r_alpha as i64, spec.r_omega as i64, spec.z_omega as i64);
    let mut terms = Vec::new();
    let mut total = BigUint::zero();
    for ia in 0..=ra {
        for iw in 0..=rw {
            let weight = c.get(ra, ia) * c.get(rw, iw) * pow2(iw as u32);
            let mut inner = BigUint::zero();
            for (w, count) in combined.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                inner += count * c.get(zw + k as i64 - ia - w as i64, iw + zw);
            }
            let term = weight * inner;
            total += &term;
            terms.push((ia as u32, iw as u32, term));
        }
    }
    Ok(ImprovedBreakdown { spec, classes, combined, terms, total })
}

/// Improved Moore bound taking the finite orders of generators into account.
pub fn mac_bound_improved(spec: &DegreeSpec) -> Result<BigUint> {
    Ok(mac_bound_improved_breakdown(spec)?.total)
}

/// Improved bound with only order-5 pairs (`s = 2`) among the finite
/// classes, evaluated term by term with trinomial coefficients
/// `C(r_2, σ_1) C(r_2 − σ_1, σ_2)`.
pub fn mac_bound_order5(r_alpha: u32, r_2: u32, r_omega: u32, z_omega: u32, k: u32) -> BigUint {
    let mut c = Binomials::default();
    let (ra, r2, rw, zw, k) = (r_alpha as i64, r_2 as i64, r_omega as i64, z_omega as i64, k as i64);
    let mut total = BigUint::zero();
    for ia in 0..=ra {
        for iw in 0..=rw {
            let outer = c.get(ra, ia) * c.get(rw, iw) * pow2(iw as u32);
            let mut inner = BigUint::zero();
            for i2 in 0..=r2 {
                for s1 in 0..=i2 {
                    let s2 = i2 - s1;
                    let trinomial = c.get(r2, s1) * c.get(r2 - s1, s2);
                    inner += trinomial * pow2(i2 as u32) * c.get(zw + k - ia - s1 - 2 * s2, iw + zw);
                }
            }
            total += outer * inner;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigUint>().unwrap());
    }

    #[test]
    fn mac_examples() {
        for z in 0..5 {
            for k in 1..8 {
                assert_eq!(mac_bound(0, 0, z, k), binomial((k + z) as i64, z as i64));
            }
        }
        assert_eq!(mac_bound(1, 0, 2, 7), big(64));
        assert_eq!(mac_bound(0, 2, 0, 3), big(25));
        assert_eq!(mac_bound(1, 2, 0, 3), big(38));
        assert_eq!(mac_bound(0, 0, 2, 7), big(36));
    }

    #[test]
    fn mac_closed_families() {
        for k in 1..12u64 {
            assert_eq!(mac_bound(0, 2, 0, k as u32), big(2 * k * k + 2 * k + 1));
            assert_eq!(mac_bound(1, 2, 0, k as u32), big(4 * k * k + 2));
            assert_eq!(mac_bound(0, 1, 1, k as u32), big((k + 1) * (k + 1)));
            assert_eq!(mac_bound(1, 0, 2, k as u32), big((k + 1) * (k + 1)));
        }
    }

    #[test]
    fn improved_examples() {
        let spec = DegreeSpec::undetermined(1, 0, 2, 7);
        assert_eq!(mac_bound_improved(&spec).unwrap(), big(64));
        // One involution and two arcs of order 4: at most |Z2 x Z4 x Z4| = 32.
        let spec = DegreeSpec::new(7).with_r_alpha(1).with_z_ord(3, 2);
        assert_eq!(mac_bound_improved(&spec).unwrap(), big(32));
    }

    #[test]
    fn improved_degenerates_to_mac() {
        for ra in 0..3 {
            for rw in 0..3 {
                for zw in 0..3 {
                    for k in 1..6 {
                        let spec = DegreeSpec::undetermined(ra, rw, zw, k);
                        assert_eq!(mac_bound_improved(&spec).unwrap(), mac_bound(ra, rw, zw, k));
                    }
                }
            }
        }
    }

    #[test]
    fn improved_rejects_invalid_spec() {
        assert!(mac_bound_improved(&DegreeSpec::new(3).with_z_ord(1, 1)).is_err());
        assert!(mac_bound_improved(&DegreeSpec::new(0)).is_err());
    }

    #[test]
    fn order5_slice_matches_improved() {
        for ra in 0..3 {
            for r2 in 0..3 {
                for rw in 0..3 {
                    for zw in 0..3 {
                        for k in 2..7 {
                            let spec = DegreeSpec::undetermined(ra, rw, zw, k).with_r_odd(2, r2);
                            assert_eq!(
                                mac_bound_order5(ra, r2, rw, zw, k),
                                mac_bound_improved(&spec).unwrap(),
                                "{spec}"
                            );
                        }
                    }
                }
            }
        }
        for rw in 0..4 {
            for zw in 0..4 {
                assert_eq!(mac_bound_order5(0, 0, rw, zw, 5), mac_bound(0, rw, zw, 5));
            }
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert!(compositions(2, 0).is_empty());
        assert!(compositions(4, 3).iter().all(|c| c.iter().sum::<u32>() == 4));
    }

    #[test]
    fn breakdown_sums_to_total() {
        let spec: DegreeSpec = "r_a=1 r[2]=1 r_w=1 z_w=1 k=4".parse().unwrap();
        let b = mac_bound_improved_breakdown(&spec).unwrap();
        let sum: BigUint = b.terms.iter().map(|t| t.2.clone()).sum();
        assert_eq!(sum, b.total);
        assert_eq!(b.classes.len(), 1);
    }
}
