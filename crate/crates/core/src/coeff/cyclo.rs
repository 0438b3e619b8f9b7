//! Exact arithmetic in the cyclotomic field Q[x]/Φ_n.

use super::CoeffError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Φ_n as a monic integer polynomial, coefficients low to high.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let q = cyclotomic_poly(d);
            p = div_monic(&p, &q);
        }
    }
    p
}

fn div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= &c * bc;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

/// The field Q(η) with η a primitive n-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloField {
    n: u32,
    phi: Vec<BigInt>,
    /// η^k reduced, for 0 <= k < n.
    powers: Vec<CycloNum>,
}

/// Residue class `num / den` with `num` a coefficient vector of length φ(n).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloNum {
    num: Vec<BigInt>,
    den: BigInt,
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

impl CycloNum {
    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    /// Polynomial text in the generator name `var`.
    pub fn render(&self, var: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let mono = match k {
                0 => a.to_string(),
                1 if a.is_one() => var.to_string(),
                1 => format!("{a}*{var}"),
                _ if a.is_one() => format!("{var}^{k}"),
                _ => format!("{a}*{var}^{k}"),
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{mono}") } else { mono });
            } else {
                parts.push(format!("{} {mono}", if neg { "-" } else { "+" }));
            }
        }
        let body = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        };
        if self.den.is_one() {
            body
        } else if parts.len() > 1 {
            format!("({body}) / {}", self.den)
        } else {
            format!("{body} / {}", self.den)
        }
    }
}

impl CycloField {
    pub fn new(n: u32) -> Self {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let mut f = CycloField {
            n,
            phi,
            powers: Vec::new(),
        };
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); deg.max(1)];
        cur[0] = BigInt::one();
        for _ in 0..n {
            powers.push(f.make(cur.clone(), BigInt::one()));
            // multiply by x
            let mut next = vec![BigInt::zero(); deg + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            cur = f.reduce(next);
        }
        f.powers = powers;
        f
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.phi
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        if d == 0 {
            return vec![BigInt::zero()];
        }
        while v.len() > d {
            let c = v.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let k = v.len() - d;
            for i in 0..d {
                v[k + i] -= &c * &self.phi[i];
            }
        }
        v.resize(d, BigInt::zero());
        v
    }

    fn make(&self, mut num: Vec<BigInt>, mut den: BigInt) -> CycloNum {
        num.resize(self.degree().max(1), BigInt::zero());
        if num.iter().all(|c| c.is_zero()) {
            return CycloNum {
                num,
                den: BigInt::one(),
            };
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den /= &g;
        }
        CycloNum { num, den }
    }

    pub fn zero(&self) -> CycloNum {
        self.from_int(0)
    }

    pub fn one(&self) -> CycloNum {
        self.from_int(1)
    }

    pub fn from_int(&self, k: i64) -> CycloNum {
        let mut v = vec![BigInt::zero(); self.degree().max(1)];
        v[0] = BigInt::from(k);
        self.make(v, BigInt::one())
    }

    pub fn from_rational(&self, q: &BigRational) -> CycloNum {
        let mut v = vec![BigInt::zero(); self.degree().max(1)];
        v[0] = q.numer().clone();
        self.make(v, q.denom().clone())
    }

    /// η^k for any integer k.
    pub fn root_power(&self, k: i64) -> CycloNum {
        self.powers[k.rem_euclid(self.n as i64) as usize].clone()
    }

    pub fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            return self.make(num, a.den.clone());
        }
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        self.make(num, &a.den * &b.den)
    }

    pub fn neg(&self, a: &CycloNum) -> CycloNum {
        CycloNum {
            num: a.num.iter().map(|x| -x).collect(),
            den: a.den.clone(),
        }
    }

    pub fn sub(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let d = self.degree().max(1);
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.make(self.reduce(prod), &a.den * &b.den)
    }

    pub fn inv(&self, a: &CycloNum) -> Result<CycloNum, CoeffError> {
        if a.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        // Extended Euclid over Q[x]: find u with u·a ≡ 1 mod Φ.
        let to_q = |v: &[BigInt]| -> Vec<BigRational> {
            let mut out: Vec<BigRational> = v
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect();
            q_trim(&mut out);
            out
        };
        let mut r0 = to_q(&self.phi);
        let mut r1 = to_q(&a.num);
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !(r1.len() == 1) {
            if r1.is_empty() {
                return Err(CoeffError::DivisionByZero);
            }
            let (q, r) = q_divrem(&r0, &r1);
            let s2 = q_sub(&s0, &q_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1[0].clone();
        let u: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
        // u/1 · den
        let mut l = BigInt::one();
        for x in &u {
            l = l.lcm(x.denom());
        }
        let mut num: Vec<BigInt> = u
            .iter()
            .map(|x| (x * BigRational::from_integer(l.clone())).to_integer() * &a.den)
            .collect();
        num.resize(self.degree(), BigInt::zero());
        Ok(self.make(self.reduce(num), l))
    }

    pub fn is_one(&self, a: &CycloNum) -> bool {
        a.den.is_one() && a.num[0].is_one() && a.num[1..].iter().all(|c| c.is_zero())
    }
}

fn q_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn q_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    q_trim(&mut out);
    out
}

fn q_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|k| {
            a.get(k).cloned().unwrap_or_else(BigRational::zero)
                - b.get(k).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    q_trim(&mut out);
    out
}

fn q_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    q_trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut q = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &b[db];
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= &c * bc;
        }
        q[k] = c;
        rem.pop();
        q_trim(&mut rem);
    }
    q_trim(&mut q);
    (q, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i = |n| {
            cyclotomic_poly(n)
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_i(1), vec![-1, 1]);
        assert_eq!(as_i(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(as_i(6), vec![1, -1, 1]);
        assert_eq!(as_i(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(as_i(9), vec![1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn root_has_exact_order() {
        let f = CycloField::new(5);
        let t = f.root_power(1);
        let mut acc = f.one();
        for k in 1..=5 {
            acc = f.mul(&acc, &t);
            assert_eq!(f.is_one(&acc), k == 5);
        }
    }

    #[test]
    fn inverse_of_difference() {
        let f = CycloField::new(5);
        let d = f.sub(&f.root_power(1), &f.root_power(2));
        let i = f.inv(&d).unwrap();
        assert!(f.is_one(&f.mul(&d, &i)));
    }
}
