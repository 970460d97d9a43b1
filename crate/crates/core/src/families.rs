//! Parametric constructions of large mixed Abelian Cayley graphs, each with
//! the order and diameter it is claimed to reach.
//!
//! | family    | profile `(r_α, r_ω, z_ω)` | order                     |
//! |-----------|---------------------------|---------------------------|
//! | `degree4` | (0, 2, 0)                 | `2k² + 2k + 1`            |
//! | `diamond` | (1, 2, 0)                 | `4k²`                     |
//! | `t-tile`  | (0, 1, 1)                 | `⌊(2k + 3)² / 6⌋`         |
//! | `t`       | (1, 1, 1)                 | 10, `12x²`, `12x² + 8x`, `12x² + 16x + 4` |
//!
//! In the `t` family with `k = 3x` the generator `12x² + 2x − 1` is used
//! as is; multiplying all steps by a unit of `Z_N` gives the isomorphic
//! presentation `{±1, −(2x + 1), 6x² + 4x}`.

use std::fmt;
use std::str::FromStr;

use crate::cayley::{circulant, MixedCayleyGraph, MixedGenSet};
use crate::error::{Error, Result};
use crate::lattice::{AbelianGroup, GroupElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Degree4,
    Diamond,
    TTile,
    T,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Degree4, Family::Diamond, Family::TTile, Family::T];

    pub fn name(self) -> &'static str {
        match self {
            Family::Degree4 => "degree4",
            Family::Diamond => "diamond",
            Family::TTile => "t-tile",
            Family::T => "t",
        }
    }

    pub fn min_k(self) -> u32 {
        match self {
            Family::Degree4 | Family::TTile => 1,
            Family::Diamond | Family::T => 2,
        }
    }

    /// `(r_α, r_ω, z_ω)` the family is built for.
    pub fn profile(self) -> (u32, u32, u32) {
        match self {
            Family::Degree4 => (0, 2, 0),
            Family::Diamond => (1, 2, 0),
            Family::TTile => (0, 1, 1),
            Family::T => (1, 1, 1),
        }
    }

    pub fn claimed_order(self, k: u32) -> u64 {
        let k = k as u64;
        match self {
            Family::Degree4 => 2 * k * k + 2 * k + 1,
            Family::Diamond => 4 * k * k,
            Family::TTile => (2 * k + 3).pow(2) / 6,
            Family::T => match k % 3 {
                _ if k == 2 => 10,
                2 => {
                    let x = (k + 1) / 3;
                    12 * x * x
                }
                0 => {
                    let x = k / 3;
                    12 * x * x + 8 * x
                }
                _ => {
                    let x = (k - 1) / 3;
                    12 * x * x + 16 * x + 4
                }
            },
        }
    }

    pub fn build(self, k: u32) -> Result<FamilyGraph> {
        let graph = match self {
            Family::Degree4 => base_degree4_family(k)?,
            Family::Diamond => diamond_family(k)?,
            Family::TTile => t_tile_base_family(k)?,
            Family::T => t_family(k)?,
        };
        Ok(FamilyGraph { family: self, k, claimed_order: self.claimed_order(k), graph })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree4" | "base" => Ok(Family::Degree4),
            "diamond" => Ok(Family::Diamond),
            "t-tile" | "ttile" | "t-base" => Ok(Family::TTile),
            "t" => Ok(Family::T),
            other => Err(Error::Parse(format!("unknown family {other:?} (expected degree4, diamond, t-tile or t)"))),
        }
    }
}

/// A family member with the diameter and order it claims.
#[derive(Clone, Debug)]
pub struct FamilyGraph {
    pub family: Family,
    pub k: u32,
    pub claimed_order: u64,
    pub graph: MixedCayleyGraph,
}

fn require_k(k: u32, min: u32, name: &str) -> Result<()> {
    if k < min {
        return Err(Error::OutOfRange(format!("{name} family needs k >= {min}, got {k}")));
    }
    Ok(())
}

/// `Circ(2k² + 2k + 1; ±k, ±(k + 1))`.
pub fn base_degree4_family(k: u32) -> Result<MixedCayleyGraph> {
    require_k(k, 1, "degree4")?;
    let k = k as i64;
    circulant((2 * k * k + 2 * k + 1) as u64, &[k, k + 1], &[], &[])
}

/// `Circ(4k²; ±1, ±(2k − 1), 2k²)` with `2k²` as the involution.
pub fn diamond_family(k: u32) -> Result<MixedCayleyGraph> {
    require_k(k, 2, "diamond")?;
    let k = k as i64;
    circulant((4 * k * k) as u64, &[1, 2 * k - 1], &[], &[2 * k * k])
}

/// Optimal `(0, 1, 1)` circulants, by `k mod 3`:
/// `k = 3x`: `Circ(6x² + 6x + 1; ±1, 6x + 3)`,
/// `k = 3x − 1`: `Circ(6x² + 2x; ±x, 3x + 1)`,
/// `k = 3x − 2`: `Circ(6x² − 2x; ±x, 3x − 1)`.
///
/// For `x = 1` in the last two branches the directed step has order 2, so
/// it is stored as an involution.
pub fn t_tile_base_family(k: u32) -> Result<MixedCayleyGraph> {
    require_k(k, 1, "t-tile")?;
    let k = k as i64;
    let (n, pair, step) = match k % 3 {
        0 => {
            let x = k / 3;
            (6 * x * x + 6 * x + 1, 1, 6 * x + 3)
        }
        2 => {
            let x = (k + 1) / 3;
            (6 * x * x + 2 * x, x, 3 * x + 1)
        }
        _ => {
            let x = (k + 2) / 3;
            (6 * x * x - 2 * x, x, 3 * x - 1)
        }
    };
    let group = AbelianGroup::cyclic(n as u64)?;
    let gens = MixedGenSet::classify(&group, &[group.element(&[pair])?], &[group.element(&[step])?]);
    MixedCayleyGraph::build(group, gens)
}

/// Optimal `(1, 1, 1)` graphs: `Circ(10; ±1, 2, 5)` at `k = 2`, then
/// [`t_family_case_a`] for `k = 3x − 1`,
/// `Circ(12x² + 8x; ±1, 12x² + 2x − 1, 6x² + 4x)` for `k = 3x` and
/// `Circ(12x² + 16x + 4; ±1, 6x + 5, 6x² + 8x + 2)` for `k = 3x + 1`.
/// The last value is the matrix determinant; the group is cyclic of that order.
pub fn t_family(k: u32) -> Result<MixedCayleyGraph> {
    require_k(k, 2, "t")?;
    if k == 2 {
        return circulant(10, &[1], &[2], &[5]);
    }
    let k = k as i64;
    match k % 3 {
        2 => t_family_case_a(((k + 1) / 3) as u32),
        0 => {
            let x = k / 3;
            circulant((12 * x * x + 8 * x) as u64, &[1], &[12 * x * x + 2 * x - 1], &[6 * x * x + 4 * x])
        }
        _ => {
            let x = (k - 1) / 3;
            circulant((12 * x * x + 16 * x + 4) as u64, &[1], &[6 * x + 5], &[6 * x * x + 8 * x + 2])
        }
    }
}

/// `Cay(Z_{6x} × Z_{2x}; (±1, 0), (0, 1), (3x, x))` for `x ≥ 2`, diameter
/// `3x − 1`. At `x = 1` both `(0, 1)` and `(3, 1)` are involutions, so the
/// graph would have `r = 4, z = 0`; that case is rejected.
pub fn t_family_case_a(x: u32) -> Result<MixedCayleyGraph> {
    if x < 2 {
        return Err(Error::OutOfRange(
            "t family case (a) needs x >= 2: at x = 1, (0,1) and (3,1) are both involutions of Z6 x Z2".into(),
        ));
    }
    let x = x as u64;
    let (group, images) = AbelianGroup::from_moduli(&[6 * x, 2 * x])?;
    let pair: GroupElement = images[0].clone();
    let arc: GroupElement = images[1].clone();
    let involution = group.combine(&images, &[3 * x as i64, x as i64]);
    let gens = MixedGenSet::new(&group, vec![involution], vec![pair], vec![arc])?;
    MixedCayleyGraph::build(group, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elems(g: &MixedCayleyGraph, xs: &[i64]) -> Vec<GroupElement> {
        xs.iter().map(|&x| g.group().element(&[x]).unwrap()).collect()
    }

    #[test]
    fn degree4_examples() {
        let g = base_degree4_family(1).unwrap();
        assert_eq!((g.order(), g.diameter()), (5, 1));
        let g = base_degree4_family(3).unwrap();
        assert_eq!((g.order(), g.diameter()), (25, 3));
        assert_eq!(g.gens().pairs(), elems(&g, &[3, 4]).as_slice());
        let g = base_degree4_family(5).unwrap();
        assert_eq!((g.order(), g.diameter()), (61, 5));
    }

    #[test]
    fn diamond_examples() {
        let g = diamond_family(3).unwrap();
        assert_eq!((g.order(), g.diameter()), (36, 3));
        assert_eq!(g.gens().involutions(), elems(&g, &[18]).as_slice());
        assert_eq!(g.gens().pairs(), elems(&g, &[1, 5]).as_slice());
        assert_eq!(diamond_family(2).unwrap().order(), 16);
        let g = diamond_family(10).unwrap();
        assert_eq!((g.order(), g.diameter()), (400, 10));
        assert!(diamond_family(1).is_err());
    }

    #[test]
    fn t_tile_examples() {
        let g = t_tile_base_family(3).unwrap();
        assert_eq!((g.order(), g.diameter()), (13, 3));
        assert_eq!(g.gens().directed(), elems(&g, &[9]).as_slice());
        let g = t_tile_base_family(2).unwrap();
        assert_eq!((g.order(), g.diameter()), (8, 2));
        assert_eq!(g.gens().involutions(), elems(&g, &[4]).as_slice());
        let g = t_tile_base_family(1).unwrap();
        assert_eq!((g.order(), g.diameter()), (4, 1));
        for k in 1..=15 {
            assert_eq!(t_tile_base_family(k).unwrap().order(), Family::TTile.claimed_order(k));
        }
    }

    #[test]
    fn t_examples() {
        let g = t_family(2).unwrap();
        assert_eq!((g.order(), g.diameter()), (10, 2));
        let g = t_family(3).unwrap();
        assert_eq!((g.order(), g.diameter()), (20, 3));
        assert_eq!(g.gens().directed(), elems(&g, &[13]).as_slice());
        assert_eq!(g.gens().involutions(), elems(&g, &[10]).as_slice());
        let g = t_family(4).unwrap();
        assert_eq!((g.order(), g.diameter()), (32, 4));
        assert_eq!(g.gens().directed(), elems(&g, &[11]).as_slice());
        let g = t_family(5).unwrap();
        assert_eq!((g.order(), g.diameter()), (48, 5));
        assert_eq!(g.group().factors(), &[4, 12]);
        assert!(t_family(1).is_err());
    }

    #[test]
    fn t_family_degrees() {
        for k in 2..=12 {
            let g = t_family(k).unwrap();
            assert_eq!((g.undirected_degree(), g.directed_degree()), (3, 1), "k={k}");
        }
        assert!(t_family_case_a(1).is_err());
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("square".parse::<Family>().is_err());
    }
}
