//! Congruences in `Z^n`: Smith normal form of square integer matrices, the
//! quotient group `Z^n / Z^n M` in invariant-factor form, and residue
//! arithmetic on its elements.
//!
//! Vectors are rows and lattices are spanned by the rows of `M`, so
//! `u ≡ v (mod M)` iff `u - v` is an integral combination of rows of `M`.
//! With `S = U M V` the map `x ↦ x V (mod S)` is an isomorphism
//! `Z^n / Z^n M → Z^n / Z^n S`, which is how generator images are computed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
            entries.extend(row);
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal<I: IntoIterator<Item = BigInt>>(diag: I) -> Self {
        let diag: Vec<BigInt> = diag.into_iter().collect();
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Block-diagonal matrix `diag(a, b)`.
    pub fn block_diagonal(a: &IntMatrix, b: &IntMatrix) -> Self {
        let n = a.n + b.n;
        let mut m = Self::zeros(n);
        for i in 0..a.n {
            for j in 0..a.n {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.n {
            for j in 0..b.n {
                m[(a.n + i, a.n + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diag(&self) -> Vec<BigInt> {
        (0..self.n).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n);
        (0..self.n).map(|j| x.iter().enumerate().map(|(i, xi)| xi * &self[(i, j)]).sum()).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Submatrix on the given rows and columns (used for minors).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        let mut m = Self::zeros(k);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.n {
            self.entries.swap(i * self.n + a, i * self.n + b);
        }
    }

    /// `row[dst] += factor * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.n {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    /// `col[dst] += factor * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.n {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.n {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.n + j]
    }
}

impl fmt::Display for IntMatrix {
    /// Writes the matrix file format: `n`, then `n` rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    /// Parses the matrix file format. Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad dimension: {e}")))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<BigInt>().map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing content: {extra:?}")));
        }
        IntMatrix::new(rows)
    }
}

/// `S = U · M · V` with `U`, `V` unimodular and `S` diagonal, nonnegative,
/// with each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn invariants(&self) -> Vec<BigInt> {
        self.s.diag()
    }
}

/// Smith normal form by row/column gcd elimination, pivoting on the smallest
/// nonzero entry, with a divisibility repair step before moving on.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let n = m.dim();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(n);

    'diag: for t in 0..n {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'diag;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..n {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &p);
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &p);
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Repair divisibility: pull an offending row into the pivot row.
            let offender = (t + 1..n).find(|&i| (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    a.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition { u, s: a, v }
}

/// Finite Abelian group `Z_{d_1} × … × Z_{d_r}` with `d_1 | d_2 | … | d_r`
/// and every `d_i ≥ 2`. The empty chain is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

/// Residue vector of an element; `coords[i] ∈ [0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    /// Builds a group from an invariant-factor chain. Factors equal to 1 are
    /// dropped; the rest must be ≥ 2 and form a divisibility chain.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        let factors: Vec<u64> = factors.into_iter().filter(|&d| d != 1).collect();
        if factors.contains(&0) {
            return Err(Error::InvalidGroup("invariant factor 0 (infinite group)".into()));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidGroup(format!("{} does not divide {}", w[0], w[1])));
        }
        factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::OutOfRange("group order overflows u64".into()))?;
        Ok(AbelianGroup { factors })
    }

    /// `Z_{m_1} × … × Z_{m_n}` for arbitrary moduli, returned in invariant
    /// form together with the images of the unit coordinate vectors.
    pub fn from_moduli(moduli: &[u64]) -> Result<(Self, Vec<GroupElement>)> {
        if moduli.contains(&0) {
            return Err(Error::InvalidGroup("modulus 0".into()));
        }
        group_from_matrix(&IntMatrix::diagonal(moduli.iter().map(|&m| BigInt::from(m))))
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Largest element order, which is the last invariant factor.
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.factors.len()] }
    }

    /// Reduces arbitrary integer coordinates into an element.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidGroup(format!(
                "element has {} coordinates, group {} has rank {}",
                coords.len(),
                self,
                self.rank()
            )));
        }
        Ok(GroupElement {
            coords: coords.iter().zip(&self.factors).map(|(&c, &d)| c.rem_euclid(d as i64) as u64).collect(),
        })
    }

    pub(crate) fn element_from_big(&self, coords: &[BigInt]) -> GroupElement {
        GroupElement {
            coords: coords
                .iter()
                .zip(&self.factors)
                .map(|(c, &d)| c.mod_floor(&BigInt::from(d)).to_u64().expect("reduced residue"))
                .collect(),
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.coords.len() == self.factors.len() && g.coords.iter().zip(&self.factors).all(|(c, d)| c < d)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &d)| ((x as u128 + y as u128) % d as u128) as u64)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a.coords.iter().zip(&self.factors).map(|(&x, &d)| if x == 0 { 0 } else { d - x }).collect(),
        }
    }

    pub fn scalar_mul(&self, a: &GroupElement, q: i64) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &d)| {
                    let q = q.rem_euclid(d as i64) as u128;
                    ((x as u128 * q) % d as u128) as u64
                })
                .collect(),
        }
    }

    /// Least `q ≥ 1` with `q·g = 0`.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        g.coords.iter().zip(&self.factors).fold(1u64, |acc, (&c, &d)| acc.lcm(&(d / c.gcd(&d))))
    }

    /// Mixed-radix index in `[0, order)`; index order is lexicographic order.
    pub fn index_of(&self, g: &GroupElement) -> u64 {
        g.coords.iter().zip(&self.factors).fold(0, |acc, (&c, &d)| acc * d + c)
    }

    pub fn element_at(&self, mut index: u64) -> GroupElement {
        let mut coords = vec![0; self.factors.len()];
        for (c, &d) in coords.iter_mut().zip(&self.factors).rev() {
            *c = index % d;
            index /= d;
        }
        GroupElement { coords }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// Quotient by the subgroup generated by `gens`, with the images of the
    /// coordinate unit vectors of `self` in the quotient.
    pub fn quotient(&self, gens: &[GroupElement]) -> Result<(AbelianGroup, Vec<GroupElement>)> {
        let r = self.rank();
        let mut rows: Vec<Vec<BigInt>> = (0..r)
            .map(|i| (0..r).map(|j| if i == j { BigInt::from(self.factors[i]) } else { BigInt::zero() }).collect())
            .collect();
        for g in gens {
            rows.push(g.coords.iter().map(|&c| BigInt::from(c)).collect());
        }
        present(rows, r)
    }

    /// `Σ coeffs[i] · images[i]`, evaluated in `self`.
    pub fn combine(&self, images: &[GroupElement], coeffs: &[i64]) -> GroupElement {
        assert_eq!(images.len(), coeffs.len());
        coeffs.iter().zip(images).fold(self.zero(), |acc, (&c, img)| self.add(&acc, &self.scalar_mul(img, c)))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("Z1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    /// Parses `Z4xZ12`; `Z1` is the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .trim()
            .split(['x', 'X', '×'])
            .map(|part| {
                let part = part.trim();
                part.strip_prefix('Z')
                    .and_then(|d| d.parse::<u64>().ok())
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad cyclic factor {part:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianGroup::new(factors)
    }
}

/// `Z^n / Z^n M` in invariant-factor form, plus the images of `e_1, …, e_n`.
pub fn group_from_matrix(m: &IntMatrix) -> Result<(AbelianGroup, Vec<GroupElement>)> {
    if m.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let rows = (0..m.dim()).map(|i| m.row(i).to_vec()).collect();
    present(rows, m.dim())
}

/// Finite quotient of `Z^dim` by the lattice spanned by `rows` (any number
/// of them). The relation matrix is padded to a square one with zero rows
/// or columns; a zero column contributes a trailing zero invariant that
/// carries no torsion.
fn present(rows: Vec<Vec<BigInt>>, dim: usize) -> Result<(AbelianGroup, Vec<GroupElement>)> {
    let size = rows.len().max(dim);
    let mut padded = IntMatrix::zeros(size);
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            padded[(i, j)] = x.clone();
        }
    }
    let snf = smith_normal_form(&padded);
    let diag = snf.s.diag();
    let free = diag.iter().filter(|d| d.is_zero()).count();
    if free > size - dim {
        return Err(Error::SingularMatrix);
    }
    let keep: Vec<usize> = (0..size).filter(|&i| diag[i] > BigInt::one()).collect();
    let factors = keep
        .iter()
        .map(|&i| diag[i].to_u64().ok_or_else(|| Error::OutOfRange(format!("invariant factor {}", diag[i]))))
        .collect::<Result<Vec<_>>>()?;
    let group = AbelianGroup::new(factors)?;
    let images = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); size];
            e[i] = BigInt::one();
            let img = snf.v.left_mul_vec(&e);
            let kept: Vec<BigInt> = keep.iter().map(|&c| img[c].clone()).collect();
            group.element_from_big(&kept)
        })
        .collect();
    Ok((group, images))
}

/// One representative per isomorphism class of Abelian groups of order `n`,
/// sorted lexicographically by invariant-factor chain.
pub fn enumerate_abelian_groups(n: u64) -> Vec<AbelianGroup> {
    assert!(n >= 1, "group order must be positive");
    let mut chains: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, a) in factorize(n) {
        let mut next = Vec::new();
        for parts in partitions(a) {
            // Largest part goes to the last invariant factor.
            for chain in &chains {
                let len = chain.len().max(parts.len());
                let mut merged = vec![1u64; len];
                for (i, &d) in chain.iter().rev().enumerate() {
                    merged[len - 1 - i] *= d;
                }
                for (i, &e) in parts.iter().enumerate() {
                    merged[len - 1 - i] *= p.pow(e);
                }
                next.push(merged);
            }
        }
        chains = next;
    }
    let mut groups: Vec<AbelianGroup> =
        chains.into_iter().map(|c| AbelianGroup::new(c).expect("prime-power merge yields a chain")).collect();
    groups.sort();
    groups
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Integer partitions of `n`, parts in nonincreasing order.
pub(crate) fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> IntMatrix {
        IntMatrix::from_rows(&[[3, -2, 0], [0, 4, 1], [0, 0, 2]]).unwrap()
    }

    fn check_decomposition(m: &IntMatrix, d: &SmithDecomposition) {
        assert_eq!(d.u.mul(m).mul(&d.v), d.s);
        assert_eq!(d.u.det().abs(), BigInt::one());
        assert_eq!(d.v.det().abs(), BigInt::one());
        assert!(d.s.is_diagonal());
        let diag = d.s.diag();
        assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]) || (w[0].is_zero() && w[1].is_zero()));
        }
    }

    #[test]
    fn snf_worked_example() {
        let m = worked_example();
        let d = smith_normal_form(&m);
        check_decomposition(&m, &d);
        assert_eq!(d.invariants(), vec![1.into(), 1.into(), 24.into()]);
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(4);
        let d = smith_normal_form(&m);
        assert_eq!(d.s, m);
        check_decomposition(&m, &d);
    }

    #[test]
    fn snf_degree_four_lattice() {
        // [[2k+1, 1], [k+1, -k]] at k = 3: det = -25, entries coprime.
        let m = IntMatrix::from_rows(&[[7, 1], [4, -3]]).unwrap();
        assert_eq!(m.det(), BigInt::from(-25));
        let d = smith_normal_form(&m);
        check_decomposition(&m, &d);
        assert_eq!(d.invariants(), vec![1.into(), 25.into()]);
    }

    #[test]
    fn snf_singular_and_zero() {
        let m = IntMatrix::from_rows(&[[2, 4], [1, 2]]).unwrap();
        let d = smith_normal_form(&m);
        check_decomposition(&m, &d);
        assert_eq!(d.invariants(), vec![1.into(), 0.into()]);
        let z = IntMatrix::zeros(3);
        check_decomposition(&z, &smith_normal_form(&z));
    }

    #[test]
    fn group_from_worked_example() {
        let (g, images) = group_from_matrix(&worked_example()).unwrap();
        assert_eq!(g.factors(), &[24]);
        // Equal to {2, 3, 12} up to an automorphism of Z_24.
        let imgs: Vec<u64> = images.iter().map(|e| e.coords()[0]).collect();
        let ok = (1..24u64).filter(|u| u.gcd(&24) == 1).any(|u| {
            let m: Vec<u64> = imgs.iter().map(|x| x * u % 24).collect();
            (m[0] == 2 || m[0] == 22) && m[1] == 3 && m[2] == 12
        });
        assert!(ok, "images {imgs:?}");
    }

    #[test]
    fn group_from_diagonal() {
        let m = IntMatrix::from_rows(&[[6, 0], [0, 2]]).unwrap();
        let (g, images) = group_from_matrix(&m).unwrap();
        assert_eq!(g.factors(), &[2, 6]);
        assert_eq!(g.element_order(&images[0]), 6);
        assert_eq!(g.element_order(&images[1]), 2);

        let m = IntMatrix::from_rows(&[[12, 0], [0, 4]]).unwrap();
        let (g, _) = group_from_matrix(&m).unwrap();
        assert_eq!(g.factors(), &[4, 12]);

        let (g, images) = group_from_matrix(&IntMatrix::from_rows(&[[3, 0], [0, 5]]).unwrap()).unwrap();
        assert_eq!(g.factors(), &[15]);
        assert_eq!(images.iter().map(|e| g.element_order(e)).collect::<Vec<_>>(), vec![3, 5]);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(group_from_matrix(&m).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn element_orders() {
        let z24 = AbelianGroup::cyclic(24).unwrap();
        assert_eq!(z24.element_order(&z24.zero()), 1);
        assert_eq!(z24.element_order(&z24.element(&[12]).unwrap()), 2);
        let g = AbelianGroup::new(vec![4, 12]).unwrap();
        let x = g.element(&[2, 3]).unwrap();
        assert_eq!(g.element_order(&x), 4);
        // Repeated addition agrees.
        let mut acc = x.clone();
        let mut q = 1;
        while !acc.is_zero() {
            acc = g.add(&acc, &x);
            q += 1;
        }
        assert_eq!(q, 4);
    }

    #[test]
    fn arithmetic() {
        let g = AbelianGroup::new(vec![4, 12]).unwrap();
        let x = g.element(&[3, 7]).unwrap();
        assert!(g.add(&x, &g.neg(&x)).is_zero());
        assert_eq!(g.scalar_mul(&x, 2), g.add(&x, &x));
        assert_eq!(g.scalar_mul(&x, -1), g.neg(&x));
        let z24 = AbelianGroup::cyclic(24).unwrap();
        assert!(z24.scalar_mul(&z24.element(&[3]).unwrap(), 8).is_zero());
    }

    #[test]
    fn indexing_round_trip() {
        let g = AbelianGroup::new(vec![2, 6, 12]).unwrap();
        for i in 0..g.order() {
            assert_eq!(g.index_of(&g.element_at(i)), i);
        }
        let elems: Vec<_> = g.elements().collect();
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn group_text_form() {
        let g: AbelianGroup = "Z4xZ12".parse().unwrap();
        assert_eq!(g.factors(), &[4, 12]);
        assert_eq!(g.to_string(), "Z4xZ12");
        assert_eq!("Z1".parse::<AbelianGroup>().unwrap(), AbelianGroup::trivial());
        assert!("Z4xZ6".parse::<AbelianGroup>().is_err());
        assert!("Z0".parse::<AbelianGroup>().is_err());
        assert!("4x12".parse::<AbelianGroup>().is_err());
    }

    #[test]
    fn matrix_text_form() {
        let m: IntMatrix = "3\n3 -2 0\n0 4 1\n0 0 2\n".parse().unwrap();
        assert_eq!(m, worked_example());
        assert_eq!(m.to_string().parse::<IntMatrix>().unwrap(), m);
        assert!("2\n1 2\n3\n".parse::<IntMatrix>().is_err());
        assert!("2\n1 2\n".parse::<IntMatrix>().is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_abelian_groups(64).len(), 11);
        assert_eq!(enumerate_abelian_groups(1), vec![AbelianGroup::trivial()]);
        let g36: Vec<String> = enumerate_abelian_groups(36).iter().map(|g| g.to_string()).collect();
        assert_eq!(g36, vec!["Z2xZ18", "Z3xZ12", "Z6xZ6", "Z36"]);
    }

    #[test]
    fn quotient_by_involution() {
        let z36 = AbelianGroup::cyclic(36).unwrap();
        let (q, images) = z36.quotient(&[z36.element(&[18]).unwrap()]).unwrap();
        assert_eq!(q.factors(), &[18]);
        assert_eq!(q.element_order(&images[0]), 18);

        let k2 = AbelianGroup::cyclic(2).unwrap();
        let (q, _) = k2.quotient(&[k2.element(&[1]).unwrap()]).unwrap();
        assert_eq!(q, AbelianGroup::trivial());
    }

    #[test]
    fn from_moduli_product() {
        let (g, images) = AbelianGroup::from_moduli(&[12, 4]).unwrap();
        assert_eq!(g.factors(), &[4, 12]);
        // (6, 2) is an involution of Z12 x Z4.
        assert_eq!(g.element_order(&g.combine(&images, &[6, 2])), 2);
        assert_eq!(g.element_order(&images[0]), 12);
        assert_eq!(g.element_order(&images[1]), 4);
    }
}
