use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{field, Field};
use super::mat::rref_rows;
use super::poly::inverse_mod;
use crate::error::{Error, Result};

/// An exact element of the cyclotomic field `Q(zeta_N)`.
///
/// The value is stored as its canonical residue modulo the `N`-th cyclotomic
/// polynomial, so the coefficient vector always has length `phi(N)`. Values
/// with different conductors compare equal when they agree after lifting to
/// the least common multiple.
#[derive(Clone)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(conductor: u64) -> CycNum {
        let f = field(conductor.max(1));
        CycNum {
            conductor: f.n,
            coeffs: vec![BigRational::zero(); f.degree],
        }
    }

    pub fn one(conductor: u64) -> CycNum {
        CycNum::from_rational(BigRational::one(), conductor)
    }

    pub fn from_int(v: i64, conductor: u64) -> CycNum {
        CycNum::from_rational(BigRational::from_integer(BigInt::from(v)), conductor)
    }

    pub fn from_rational(q: BigRational, conductor: u64) -> CycNum {
        let mut z = CycNum::zero(conductor);
        z.coeffs[0] = q;
        z
    }

    /// Builds a value from its residue coefficients; the length must be
    /// `phi(conductor)`.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<BigRational>) -> Result<CycNum> {
        if conductor == 0 {
            return Err(Error::InvalidConductor("conductor must be positive".into()));
        }
        let f = field(conductor);
        if coeffs.len() != f.degree {
            return Err(Error::InvalidConductor(format!(
                "conductor {conductor} needs {} coefficients, got {}",
                f.degree,
                coeffs.len()
            )));
        }
        Ok(CycNum { conductor, coeffs })
    }

    /// The canonical primitive `n`-th root of unity `zeta_n`.
    pub fn zeta(n: u64) -> Result<CycNum> {
        if n == 0 {
            return Err(Error::InvalidConductor("zeta(0) is undefined".into()));
        }
        Ok(CycNum::zeta_pow(n, 1))
    }

    /// `zeta_n^k` for any integer `k`. Panics when `n == 0`.
    pub fn zeta_pow(n: u64, k: i64) -> CycNum {
        assert!(n > 0, "conductor must be positive");
        let f = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        CycNum {
            conductor: n,
            coeffs: f.powers[e]
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the value in `Q(zeta_m)`; `m` must be a multiple of the
    /// current conductor.
    pub fn lift(&self, m: u64) -> Result<CycNum> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(Error::InvalidConductor(format!(
                "cannot lift conductor {} to {m}",
                self.conductor
            )));
        }
        Ok(self.lift_unchecked(m))
    }

    pub(crate) fn lift_unchecked(&self, m: u64) -> CycNum {
        if m == self.conductor {
            return self.clone();
        }
        let f = field(m);
        let step = m / self.conductor;
        let mut out = vec![BigRational::zero(); f.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((k as u64 * step) % m) as usize;
            add_scaled(&mut out, c, &f.powers[e]);
        }
        CycNum {
            conductor: m,
            coeffs: out,
        }
    }

    /// The same value over `Q(zeta_d)`, if it lies in that subfield; `d`
    /// must divide the conductor.
    pub fn descend(&self, d: u64) -> Option<CycNum> {
        if d == 0 || !self.conductor.is_multiple_of(d) {
            return None;
        }
        if d == self.conductor {
            return Some(self.clone());
        }
        let small = field(d).degree;
        let rational = |q: &BigRational| CycNum::from_rational(q.clone(), 1);
        let mut rows: Vec<Vec<CycNum>> = self.coeffs.iter().map(|_| Vec::with_capacity(small + 1)).collect();
        for k in 0..small {
            let image = CycNum::zeta_pow(d, k as i64).lift_unchecked(self.conductor);
            for (r, c) in rows.iter_mut().zip(&image.coeffs) {
                r.push(rational(c));
            }
        }
        for (r, c) in rows.iter_mut().zip(&self.coeffs) {
            r.push(rational(c));
        }
        let pivots = rref_rows(&mut rows, small + 1);
        if pivots.contains(&small) {
            return None;
        }
        let coeffs = (0..small)
            .map(|i| rows[i][small].to_rational().expect("rational system"))
            .collect();
        Some(CycNum { conductor: d, coeffs })
    }

    fn aligned<'a>(a: &'a CycNum, b: &'a CycNum) -> (std::borrow::Cow<'a, CycNum>, std::borrow::Cow<'a, CycNum>) {
        use std::borrow::Cow;
        if a.conductor == b.conductor {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let m = a.conductor.lcm(&b.conductor);
            (Cow::Owned(a.lift_unchecked(m)), Cow::Owned(b.lift_unchecked(m)))
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(CycNum::from_rational(q.recip(), self.conductor));
        }
        let f = field(self.conductor);
        let inv = inverse_mod(&self.coeffs, &f.modulus).ok_or(Error::DivisionByZero)?;
        let mut coeffs = inv;
        coeffs.resize(f.degree, BigRational::zero());
        Ok(CycNum {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn pow(&self, e: i64) -> Result<CycNum> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = CycNum::one(self.conductor);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &BigRational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_same(&self, other: &CycNum, f: &Field) -> CycNum {
        let d = f.degree;
        if self.is_zero() || other.is_zero() {
            return CycNum::zero(f.n);
        }
        if d == 1 {
            return CycNum {
                conductor: f.n,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod.drain(..d).collect();
        for (j, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((j + d) as u64 % f.n) as usize;
            add_scaled(&mut out, &c, &f.powers[e]);
        }
        CycNum {
            conductor: f.n,
            coeffs: out,
        }
    }
}

fn add_scaled(out: &mut [BigRational], c: &BigRational, v: &[i64]) {
    for (o, &t) in out.iter_mut().zip(v) {
        match t {
            0 => {}
            1 => *o += c,
            -1 => *o -= c,
            _ => *o += c * BigRational::from_integer(BigInt::from(t)),
        }
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        let (a, b) = CycNum::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &'a CycNum) -> CycNum {
        let (a, b) = CycNum::aligned(self, rhs);
        CycNum {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &'a CycNum) -> CycNum {
        let (a, b) = CycNum::aligned(self, rhs);
        CycNum {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &'a CycNum) -> CycNum {
        let (a, b) = CycNum::aligned(self, rhs);
        let f = field(a.conductor);
        a.mul_same(&b, &f)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let root = match k {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{k}", self.conductor),
            };
            if root.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{abs}*{root}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.conductor, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn zeta_small() {
        assert!(CycNum::zeta(1).unwrap().is_one());
        assert_eq!(CycNum::zeta(2).unwrap(), CycNum::from_int(-1, 2));
        let i = CycNum::zeta(4).unwrap();
        assert_eq!(&i * &i, CycNum::from_int(-1, 4));
        assert!(matches!(CycNum::zeta(0), Err(Error::InvalidConductor(_))));
    }

    #[test]
    fn cube_roots_sum() {
        let w = CycNum::zeta(3).unwrap();
        let w2 = &w * &w;
        assert_eq!(&w + &w2, CycNum::from_int(-1, 3));
    }

    #[test]
    fn inverse_of_root_is_conjugate_power() {
        for n in 1..=24u64 {
            let z = CycNum::zeta(n).unwrap();
            assert_eq!(z.inv().unwrap(), CycNum::zeta_pow(n, n as i64 - 1), "n = {n}");
        }
    }

    #[test]
    fn lift_minus_one() {
        let m1 = CycNum::from_int(-1, 2);
        let lifted = m1.lift(4).unwrap();
        assert_eq!(lifted.conductor(), 4);
        assert_eq!(lifted.coeffs(), CycNum::zeta_pow(4, 2).coeffs());
        assert!(matches!(m1.lift(3), Err(Error::InvalidConductor(_))));
    }

    #[test]
    fn lift_preserves_roots() {
        // zeta_3 inside Q(zeta_12) is zeta_12^4
        let z3 = CycNum::zeta(3).unwrap().lift(12).unwrap();
        assert_eq!(z3.coeffs(), CycNum::zeta_pow(12, 4).coeffs());
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        let i = CycNum::zeta(4).unwrap();
        let w = CycNum::zeta(3).unwrap();
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, CycNum::zeta_pow(12, 7));
        assert_eq!(&p * &p.inv().unwrap(), CycNum::one(1));
    }

    #[test]
    fn root_of_unity_law() {
        for n in 1..=24u64 {
            let z = CycNum::zeta(n).unwrap();
            let mut acc = CycNum::one(n);
            for k in 1..=n {
                acc = &acc * &z;
                if k < n {
                    assert!(!acc.is_one(), "zeta({n})^{k} = 1");
                }
            }
            assert!(acc.is_one(), "zeta({n})^{n} != 1");
        }
    }

    #[test]
    fn zero_inverse_fails() {
        assert_eq!(CycNum::zero(5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(CycNum::from_rational(q(-3, 4), 8).to_string(), "-3/4");
        assert_eq!(CycNum::zeta(8).unwrap().to_string(), "z8");
        let x = &CycNum::zeta(3).unwrap() + &CycNum::one(3);
        assert_eq!(x.to_string(), "1 + z3");
    }

    const CONDUCTORS: [u64; 7] = [1, 2, 3, 4, 6, 8, 12];

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        (0..CONDUCTORS.len()).prop_flat_map(|ci| {
            let n = CONDUCTORS[ci];
            let d = crate::cyclo::field::euler_phi(n);
            prop::collection::vec((-5i64..=5, 1i64..=4), d)
                .prop_map(move |v| CycNum::from_coeffs(n, v.into_iter().map(|(a, b)| q(a, b)).collect()).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_laws(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn lifting_is_a_ring_map(a in arb_cyc(), b in arb_cyc()) {
            let m = 24;
            let la = a.lift(m).unwrap();
            let lb = b.lift(m).unwrap();
            let prod = (&a * &b).lift(m).unwrap();
            let sum = (&a + &b).lift(m).unwrap();
            let lprod = &la * &lb;
            let lsum = &la + &lb;
            prop_assert_eq!(prod.coeffs(), lprod.coeffs());
            prop_assert_eq!(sum.coeffs(), lsum.coeffs());
        }

        #[test]
        fn descend_inverts_lift(a in arb_cyc()) {
            let up = a.lift(24).unwrap();
            let down = up.descend(a.conductor()).unwrap();
            prop_assert_eq!(down.coeffs(), a.coeffs());
        }
    }

    #[test]
    fn descend_detects_subfields() {
        let i = CycNum::zeta(4).unwrap();
        assert!(i.lift(12).unwrap().descend(3).is_none());
        assert_eq!(i.lift(12).unwrap().descend(4).unwrap().conductor(), 4);
        let w = CycNum::zeta(3).unwrap();
        let six = w.lift(6).unwrap();
        assert_eq!(six.descend(3).unwrap().coeffs(), w.coeffs());
        assert!(six.descend(2).is_none());
        let half = CycNum::from_int(-1, 1).lift(8).unwrap();
        assert_eq!(half.descend(1).unwrap().coeffs().len(), 1);
    }
}
