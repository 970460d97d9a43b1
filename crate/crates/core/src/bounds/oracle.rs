//! Brute-force counterpart of the improved bound: breadth-first search in
//! the freest group compatible with a degree profile,
//! `Z_2^{r_α} × Π Z_{2s+1}^{r_s} × Z^{r_ω} × Π Z_{t+1}^{z_t} × Z^{z_ω}`,
//! counting elements within `k` generator steps of 0. Free coordinates are
//! truncated to the range reachable in `k` steps, so no wraparound occurs.

use std::collections::HashSet;

use crate::bounds::DegreeSpec;
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_CAP: u128 = 1 << 60;

#[derive(Clone, Copy, Debug)]
enum Coord {
    Involution,
    CyclicPair(u64),
    FreePair,
    CyclicArc(u64),
    FreeArc,
}

fn coordinates(spec: &DegreeSpec) -> Vec<Coord> {
    let mut coords = vec![Coord::Involution; spec.r_alpha as usize];
    for (&s, &n) in &spec.r_odd {
        coords.extend(std::iter::repeat_n(Coord::CyclicPair(2 * s as u64 + 1), n as usize));
    }
    coords.extend(std::iter::repeat_n(Coord::FreePair, spec.r_omega as usize));
    for (&t, &n) in &spec.z_ord {
        coords.extend(std::iter::repeat_n(Coord::CyclicArc(t as u64 + 1), n as usize));
    }
    coords.extend(std::iter::repeat_n(Coord::FreeArc, spec.z_omega as usize));
    coords
}

fn radix(c: Coord, k: u64) -> u64 {
    match c {
        Coord::Involution => 2,
        Coord::CyclicPair(q) | Coord::CyclicArc(q) => q,
        Coord::FreePair => 2 * k + 1,
        Coord::FreeArc => k + 1,
    }
}

/// Size of the (truncated) state space the oracle works in.
pub fn oracle_search_space(spec: &DegreeSpec) -> u128 {
    let k = spec.k as u64;
    coordinates(spec).iter().map(|&c| radix(c, k) as u128).product()
}

/// Number of elements of the freest group for `spec` at distance at most
/// `k` from 0. Fails if the state space exceeds `cap`.
pub fn moore_count_oracle(spec: &DegreeSpec, cap: u128) -> Result<u64> {
    spec.validate()?;
    let size = oracle_search_space(spec);
    let cap = cap.min(u64::MAX as u128);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let k = spec.k as u64;
    let coords = coordinates(spec);
    let radices: Vec<u64> = coords.iter().map(|&c| radix(c, k)).collect();
    let mut place = vec![1u64; coords.len()];
    for i in (0..coords.len().saturating_sub(1)).rev() {
        place[i] = place[i + 1] * radices[i + 1];
    }
    // Free pair coordinates are stored with offset k so that 0 ↦ k.
    let origin: u64 =
        coords.iter().zip(&place).map(|(&c, &p)| if matches!(c, Coord::FreePair) { k * p } else { 0 }).sum();

    let mut seen: HashSet<u64> = HashSet::from([origin]);
    let mut frontier = vec![origin];
    for _ in 0..k {
        let mut next = Vec::new();
        for &state in &frontier {
            for (i, &c) in coords.iter().enumerate() {
                let p = place[i];
                let digit = (state / p) % radices[i];
                let base = state - digit * p;
                let mut visit = |d: u64| {
                    let s = base + d * p;
                    if seen.insert(s) {
                        next.push(s);
                    }
                };
                match c {
                    Coord::Involution => visit(digit ^ 1),
                    Coord::CyclicPair(q) => {
                        visit((digit + 1) % q);
                        visit((digit + q - 1) % q);
                    }
                    Coord::FreePair => {
                        if digit + 1 < radices[i] {
                            visit(digit + 1);
                        }
                        if digit > 0 {
                            visit(digit - 1);
                        }
                    }
                    Coord::CyclicArc(q) => visit((digit + 1) % q),
                    Coord::FreeArc => {
                        if digit + 1 < radices[i] {
                            visit(digit + 1);
                        }
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(seen.len() as u64)
}
