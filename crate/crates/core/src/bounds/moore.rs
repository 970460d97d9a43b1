//! The general mixed Moore bound `M(r, z, k)`, evaluated by the integer
//! layer recurrence and cross-checked against the closed form in exact
//! `Q(√v)` arithmetic.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + b·√v` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub rational: BigRational,
    pub radical: BigRational,
}

/// Arithmetic in `Q(√v)`. When `v` is a perfect square the radical part is
/// folded into the rational part so the representation stays canonical.
#[derive(Clone, Debug)]
pub struct QuadraticField {
    v: BigInt,
    root: Option<BigInt>,
}

impl QuadraticField {
    pub fn new(v: BigInt) -> Self {
        assert!(!v.is_negative(), "negative discriminant");
        let s = v.sqrt();
        let root = (&s * &s == v).then_some(s);
        QuadraticField { v, root }
    }

    pub fn make(&self, rational: BigRational, radical: BigRational) -> Surd {
        match &self.root {
            Some(s) => Surd {
                rational: rational + radical * BigRational::from_integer(s.clone()),
                radical: BigRational::zero(),
            },
            None => Surd { rational, radical },
        }
    }

    pub fn int(&self, n: i64) -> Surd {
        self.make(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn sqrt_v(&self) -> Surd {
        self.make(BigRational::zero(), BigRational::one())
    }

    pub fn add(&self, x: &Surd, y: &Surd) -> Surd {
        self.make(&x.rational + &y.rational, &x.radical + &y.radical)
    }

    pub fn sub(&self, x: &Surd, y: &Surd) -> Surd {
        self.make(&x.rational - &y.rational, &x.radical - &y.radical)
    }

    pub fn mul(&self, x: &Surd, y: &Surd) -> Surd {
        let v = BigRational::from_integer(self.v.clone());
        self.make(
            &x.rational * &y.rational + &x.radical * &y.radical * v,
            &x.rational * &y.radical + &x.radical * &y.rational,
        )
    }

    pub fn is_zero(&self, x: &Surd) -> bool {
        x.rational.is_zero() && x.radical.is_zero()
    }

    /// `None` for zero.
    pub fn inv(&self, x: &Surd) -> Option<Surd> {
        if self.is_zero(x) {
            return None;
        }
        let v = BigRational::from_integer(self.v.clone());
        let norm = &x.rational * &x.rational - &x.radical * &x.radical * v;
        Some(self.make(&x.rational / &norm, -&x.radical / &norm))
    }

    pub fn div(&self, x: &Surd, y: &Surd) -> Option<Surd> {
        Some(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &Surd, e: u32) -> Surd {
        let mut acc = self.int(1);
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }
}

/// Characteristic data of the mixed Moore recurrence for `(r, z)`.
#[derive(Clone, Debug)]
pub struct MooreParams {
    pub d: u64,
    pub z: u64,
    pub v: BigInt,
    pub field: QuadraticField,
    pub u1: Surd,
    pub u2: Surd,
    pub a: Option<Surd>,
    pub b: Option<Surd>,
}

impl MooreParams {
    pub fn new(r: u64, z: u64) -> Result<Self> {
        let d = r + z;
        if d == 0 {
            return Err(Error::InvalidSpec("total degree r + z must be positive".into()));
        }
        let dm1 = BigInt::from(d) - 1;
        let v: BigInt = &dm1 * &dm1 + BigInt::from(4 * z);
        let field = QuadraticField::new(v.clone());
        let half = BigRational::new(1.into(), 2.into());
        let dm1 = BigRational::from_integer(dm1);
        let u1 = field.make(&dm1 * &half, -half.clone());
        let u2 = field.make(&dm1 * &half, half);
        let sqrt_v = field.sqrt_v();
        let two_sqrt_v = field.mul(&field.int(2), &sqrt_v);
        let d_plus_1 = field.int(d as i64 + 1);
        let a = field.div(&field.sub(&sqrt_v, &d_plus_1), &two_sqrt_v);
        let b = field.div(&field.add(&sqrt_v, &d_plus_1), &two_sqrt_v);
        Ok(MooreParams { d, z, v, field, u1, u2, a, b })
    }

    fn geometric(&self, u: &Surd, k: u32) -> Option<Surd> {
        let f = &self.field;
        let one = f.int(1);
        f.div(&f.sub(&f.pow(u, k + 1), &one), &f.sub(u, &one))
    }

    /// `A (u₁^{k+1} − 1)/(u₁ − 1) + B (u₂^{k+1} − 1)/(u₂ − 1)`, or `None`
    /// where the expression is singular (`v = 0` or a root equal to 1).
    pub fn closed_form(&self, k: u32) -> Option<BigInt> {
        let f = &self.field;
        let value = f.add(
            &f.mul(self.a.as_ref()?, &self.geometric(&self.u1, k)?),
            &f.mul(self.b.as_ref()?, &self.geometric(&self.u2, k)?),
        );
        assert!(value.radical.is_zero(), "closed form left an irrational part");
        assert!(value.rational.is_integer(), "closed form is not an integer: {}", value.rational);
        Some(value.rational.to_integer())
    }
}

/// Layer sizes `N_0 = 1`, `N_1 = d`, `N_i = (d−1) N_{i−1} + z N_{i−2}`.
pub fn moore_layers(r: u64, z: u64, k: u32) -> Result<Vec<BigUint>> {
    let d = r + z;
    if d == 0 {
        return Err(Error::InvalidSpec("total degree r + z must be positive".into()));
    }
    let mut layers = vec![BigUint::one()];
    if k >= 1 {
        layers.push(BigUint::from(d));
    }
    for i in 2..=k as usize {
        let next = &layers[i - 1] * (d - 1) + &layers[i - 2] * z;
        layers.push(next);
    }
    Ok(layers)
}

/// Mixed Moore bound for undirected degree `r`, directed degree `z` and
/// diameter `k`.
pub fn moore_mixed_general(r: u64, z: u64, k: u32) -> Result<BigUint> {
    let total: BigUint = moore_layers(r, z, k)?.iter().sum();
    if let Some(closed) = MooreParams::new(r, z)?.closed_form(k) {
        assert_eq!(BigInt::from(total.clone()), closed, "recurrence and closed form disagree at r={r} z={z} k={k}");
    }
    Ok(total)
}
