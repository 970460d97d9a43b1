use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Full degree profile of a mixed Abelian Cayley graph plus the diameter.
///
/// * `r_alpha`: involutions.
/// * `r_odd[s]`: ± pairs of elements of order `2s + 1`, `1 ≤ s ≤ k`.
/// * `r_omega`: ± pairs of order greater than `2k + 1`.
/// * `z_ord[t]`: directed generators of order `t + 1`, `2 ≤ t ≤ k`.
/// * `z_omega`: directed generators of order greater than `k + 1`.
///
/// Zero counts in the maps are insignificant; [`DegreeSpec::normalized`]
/// strips them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DegreeSpec {
    pub r_alpha: u32,
    pub r_odd: BTreeMap<u32, u32>,
    pub r_omega: u32,
    pub z_ord: BTreeMap<u32, u32>,
    pub z_omega: u32,
    pub k: u32,
}

impl DegreeSpec {
    pub fn new(k: u32) -> Self {
        DegreeSpec { k, ..Default::default() }
    }

    /// Profile with no finite-order classes.
    pub fn undetermined(r_alpha: u32, r_omega: u32, z_omega: u32, k: u32) -> Self {
        DegreeSpec { r_alpha, r_omega, z_omega, k, ..Default::default() }
    }

    pub fn with_r_alpha(mut self, n: u32) -> Self {
        self.r_alpha = n;
        self
    }

    pub fn with_r_omega(mut self, n: u32) -> Self {
        self.r_omega = n;
        self
    }

    pub fn with_z_omega(mut self, n: u32) -> Self {
        self.z_omega = n;
        self
    }

    /// Adds `n` ± pairs of order `2s + 1`.
    pub fn with_r_odd(mut self, s: u32, n: u32) -> Self {
        *self.r_odd.entry(s).or_default() += n;
        self
    }

    /// Adds `n` directed generators of order `t + 1`.
    pub fn with_z_ord(mut self, t: u32, n: u32) -> Self {
        *self.z_ord.entry(t).or_default() += n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidSpec("diameter k must be positive".into()));
        }
        for &s in self.r_odd.keys() {
            if s == 0 || s > self.k {
                return Err(Error::InvalidSpec(format!(
                    "r[{s}]: odd-order class index must satisfy 1 <= s <= k = {}",
                    self.k
                )));
            }
        }
        for &t in self.z_ord.keys() {
            if t == 1 {
                return Err(Error::InvalidSpec("z[1]: directed generators of order 2 are involutions; use r_a".into()));
            }
            if t == 0 || t > self.k {
                return Err(Error::InvalidSpec(format!(
                    "z[{t}]: directed class index must satisfy 2 <= t <= k = {}",
                    self.k
                )));
            }
        }
        Ok(())
    }

    pub fn normalized(mut self) -> Self {
        self.r_odd.retain(|_, n| *n > 0);
        self.z_ord.retain(|_, n| *n > 0);
        self
    }

    pub fn has_finite_orders(&self) -> bool {
        self.r_odd.values().any(|&n| n > 0) || self.z_ord.values().any(|&n| n > 0)
    }

    /// Undirected degree `r_α + 2 Σ r_s + 2 r_ω`.
    pub fn undirected_degree(&self) -> u64 {
        self.r_alpha as u64 + 2 * self.r_odd.values().map(|&n| n as u64).sum::<u64>() + 2 * self.r_omega as u64
    }

    /// Directed out-degree `Σ z_t + z_ω`.
    pub fn directed_degree(&self) -> u64 {
        self.z_ord.values().map(|&n| n as u64).sum::<u64>() + self.z_omega as u64
    }

    /// Pair count with every finite-order class folded into `r_ω`.
    pub fn total_pairs(&self) -> u32 {
        self.r_omega + self.r_odd.values().sum::<u32>()
    }

    /// Directed count with every finite-order class folded into `z_ω`.
    pub fn total_directed(&self) -> u32 {
        self.z_omega + self.z_ord.values().sum::<u32>()
    }
}

impl fmt::Display for DegreeSpec {
    /// Canonical text form, e.g. `r_a=1 r[2]=1 r_w=2 z[3]=2 z_w=0 k=7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r_a={}", self.r_alpha)?;
        for (s, n) in self.r_odd.iter().filter(|(_, &n)| n > 0) {
            write!(f, " r[{s}]={n}")?;
        }
        write!(f, " r_w={}", self.r_omega)?;
        for (t, n) in self.z_ord.iter().filter(|(_, &n)| n > 0) {
            write!(f, " z[{t}]={n}")?;
        }
        write!(f, " z_w={} k={}", self.z_omega, self.k)
    }
}

impl FromStr for DegreeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut spec = DegreeSpec::default();
        let mut seen = std::collections::HashSet::new();
        let mut have_k = false;
        for token in s.split_whitespace() {
            let (key, value) =
                token.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {token:?}")))?;
            if !seen.insert(key.to_string()) {
                return Err(Error::Parse(format!("duplicate key {key:?}")));
            }
            let value: u32 = value.parse().map_err(|e| Error::Parse(format!("bad value for {key}: {e}")))?;
            match key {
                "r_a" => spec.r_alpha = value,
                "r_w" => spec.r_omega = value,
                "z_w" => spec.z_omega = value,
                "k" => {
                    spec.k = value;
                    have_k = true;
                }
                _ => {
                    let indexed =
                        |prefix: &str| -> Option<u32> { key.strip_prefix(prefix)?.strip_suffix(']')?.parse().ok() };
                    if let Some(i) = indexed("r[") {
                        spec.r_odd.insert(i, value);
                    } else if let Some(i) = indexed("z[") {
                        spec.z_ord.insert(i, value);
                    } else {
                        return Err(Error::Parse(format!("unknown key {key:?}")));
                    }
                }
            }
        }
        if !have_k {
            return Err(Error::Parse("missing diameter k".into()));
        }
        spec.validate()?;
        Ok(spec.normalized())
    }
}
