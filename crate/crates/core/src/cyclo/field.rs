use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::poly::{cyclotomic_poly, int_to_rat};

/// Precomputed data for `Q(zeta_n)`: the modulus and the reductions of
/// `x^j` for `0 <= j < n`.
#[derive(Debug)]
pub(crate) struct Field {
    pub n: u64,
    pub degree: usize,
    pub modulus: Vec<BigRational>,
    /// `powers[j]` holds the canonical residue of `x^j`, `j < n`.
    pub powers: Vec<Vec<i64>>,
}

impl Field {
    fn build(n: u64) -> Field {
        let phi = cyclotomic_poly(n);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::from(1);
        if degree == 1 {
            // x = -phi[0]
            let root = -phi[0].clone();
            let mut v = BigInt::from(1);
            for _ in 0..n {
                powers.push(vec![v.to_i64().expect("small power")]);
                v *= &root;
            }
        } else {
            for _ in 0..n {
                powers.push(cur.iter().map(|c| c.to_i64().expect("small coefficient")).collect());
                // multiply by x and reduce with the monic modulus
                let top = cur[degree - 1].clone();
                for k in (1..degree).rev() {
                    cur[k] = cur[k - 1].clone();
                }
                cur[0] = BigInt::zero();
                if !top.is_zero() {
                    for k in 0..degree {
                        cur[k] -= &top * &phi[k];
                    }
                }
            }
        }
        Field {
            n,
            degree,
            modulus: int_to_rat(&phi),
            powers,
        }
    }
}

static FIELDS: OnceLock<RwLock<HashMap<u64, Arc<Field>>>> = OnceLock::new();

/// Shared, lazily built field data for conductor `n >= 1`.
pub(crate) fn field(n: u64) -> Arc<Field> {
    let cache = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("field cache poisoned").get(&n) {
        return Arc::clone(f);
    }
    let built = Arc::new(Field::build(n));
    let mut w = cache.write().expect("field cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}

pub fn euler_phi(n: u64) -> usize {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}
