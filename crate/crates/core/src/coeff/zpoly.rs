//! Integer-coefficient Laurent polynomials in `r`, `s` with exact gcd.
//!
//! Terms are kept sorted by `(exp_r, exp_s)` ascending with no zero
//! coefficients, so structural equality is polynomial equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub type Exp2 = (i32, i32);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ZPoly2 {
    terms: Vec<(Exp2, BigInt)>,
}

impl ZPoly2 {
    pub fn zero() -> Self {
        ZPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: BigInt, e: Exp2) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ZPoly2 {
                terms: vec![(e, c)],
            }
        }
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(mut raw: Vec<(Exp2, BigInt)>) -> Self {
        raw.sort_by_key(|a| a.0);
        let mut terms: Vec<(Exp2, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        ZPoly2 { terms }
    }

    pub fn terms(&self) -> &[(Exp2, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lexicographically greatest term.
    pub fn leading(&self) -> Option<&(Exp2, BigInt)> {
        self.terms.last()
    }

    pub fn neg(&self) -> Self {
        ZPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        merge(self, other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        merge(self, other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.mul_term(c, *e);
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.mul_term(c, *e);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push(((ea.0 + eb.0, ea.1 + eb.1), ca * cb));
            }
        }
        Self::from_terms(raw)
    }

    pub fn mul_term(&self, c: &BigInt, e: Exp2) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(x, y)| ((x.0 + e.0, x.1 + e.1), y * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term(c, (0, 0))
    }

    pub fn shift(&self, e: Exp2) -> Self {
        ZPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| ((x.0 + e.0, x.1 + e.1), c.clone()))
                .collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_int(&self, c: &BigInt) -> Self {
        ZPoly2 {
            terms: self.terms.iter().map(|(e, x)| (*e, x / c)).collect(),
        }
    }

    /// Minimal exponents of `r` and `s` over all terms.
    pub fn min_exps(&self) -> Exp2 {
        let mr = self.terms.iter().map(|t| t.0 .0).min().unwrap_or(0);
        let ms = self.terms.iter().map(|t| t.0 .1).min().unwrap_or(0);
        (mr, ms)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn swap_rs(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|((a, b), c)| ((*b, *a), c.clone()))
                .collect(),
        )
    }

    /// Evaluates with `r ↦ x`, `s ↦ y` given a ring-valued callback for monomials.
    pub fn eval_with<T, F, G, H>(&self, zero: T, mono: F, add: G, scale: H) -> T
    where
        F: Fn(Exp2) -> T,
        G: Fn(T, T) -> T,
        H: Fn(&BigInt, T) -> T,
    {
        let mut acc = zero;
        for (e, c) in &self.terms {
            acc = add(acc, scale(c, mono(*e)));
        }
        acc
    }
}

fn merge(a: &ZPoly2, b: &ZPoly2, negate_b: bool) -> ZPoly2 {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ea, ca) = &a.terms[i];
        let (eb, cb) = &b.terms[j];
        match ea.cmp(eb) {
            Ordering::Less => {
                out.push((*ea, ca.clone()));
                i += 1;
            }
            Ordering::Greater => {
                out.push((*eb, if negate_b { -cb } else { cb.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { ca - cb } else { ca + cb };
                if !c.is_zero() {
                    out.push((*ea, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(e, c)| (*e, if negate_b { -c } else { c.clone() })),
    );
    ZPoly2 { terms: out }
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (coefficients low to high).

type UPoly = Vec<BigInt>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).cloned().unwrap_or_default();
        let y = b.get(k).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(&mut out);
    out
}

/// Exact division `a / b` in Z[s]; panics if inexact.
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    let mut rem = a.clone();
    u_trim(&mut rem);
    if rem.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); rem.len().saturating_sub(db).max(1)];
    while !rem.is_empty() && rem.len() > db {
        let k = rem.len() - 1 - db;
        let (qc, r) = rem.last().unwrap().div_rem(lb);
        assert!(r.is_zero(), "inexact univariate division");
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= &qc * bc;
        }
        q[k] = qc;
        u_trim(&mut rem);
    }
    assert!(rem.is_empty(), "inexact univariate division");
    u_trim(&mut q);
    q
}

/// Pseudo-remainder of `a` by `b` in Z[s].
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !rem.is_empty() && rem.len() > db {
        let k = rem.len() - 1 - db;
        let lr = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[k + i] -= &lr * bc;
        }
        u_trim(&mut rem);
    }
    rem
}

fn u_primitive(p: &UPoly) -> UPoly {
    let c = u_content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: UPoly = p.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -x.clone();
        }
    }
    out
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive(b)
            .into_iter()
            .map(|x| x * u_content(b))
            .collect();
    }
    if b.is_empty() {
        return u_primitive(a)
            .into_iter()
            .map(|x| x * u_content(a))
            .collect();
    }
    let g = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    let x = u_primitive(&x);
    x.into_iter().map(|c| c * &g).collect()
}

// ---------------------------------------------------------------------------
// Dense bivariate: polynomial in r with coefficients in Z[s].

type BPoly = Vec<UPoly>;

fn from_dense(p: &BPoly) -> ZPoly2 {
    let mut raw = Vec::new();
    for (a, row) in p.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if !c.is_zero() {
                raw.push(((a as i32, b as i32), c.clone()));
            }
        }
    }
    ZPoly2::from_terms(raw)
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_primitive(p: &BPoly) -> BPoly {
    let c = b_content(p);
    if c.is_empty() {
        return Vec::new();
    }
    p.iter()
        .map(|x| {
            if x.is_empty() {
                Vec::new()
            } else {
                u_div_exact(x, &c)
            }
        })
        .collect()
}

/// Exact division in Z[s][r]; panics when the divisor does not divide.
fn b_div_exact(a: &BPoly, b: &BPoly) -> BPoly {
    let mut rem = a.clone();
    b_trim(&mut rem);
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q: BPoly = vec![Vec::new(); rem.len().saturating_sub(db).max(1)];
    while !rem.is_empty() && rem.len() > db {
        let k = rem.len() - 1 - db;
        let qc = u_div_exact(rem.last().unwrap(), lb);
        for (i, bc) in b.iter().enumerate() {
            let t = u_mul(&qc, bc);
            rem[k + i] = u_sub(&rem[k + i], &t);
        }
        q[k] = qc;
        b_trim(&mut rem);
    }
    assert!(rem.is_empty(), "inexact bivariate division");
    b_trim(&mut q);
    q
}

/// `lc(b)^(deg a - deg b + 1) · a mod b`, the exact pseudo-remainder.
fn b_prem_exact(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = a.clone();
    let mut steps = (a.len() - db) as u32;
    while !rem.is_empty() && rem.len() > db {
        let k = rem.len() - 1 - db;
        let lr = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c = u_mul(c, lb);
        }
        for (i, bc) in b.iter().enumerate() {
            let t = u_mul(&lr, bc);
            rem[k + i] = u_sub(&rem[k + i], &t);
        }
        b_trim(&mut rem);
        steps -= 1;
    }
    let scale = u_pow(lb, steps);
    rem.iter().map(|c| u_mul(c, &scale)).collect()
}

fn u_pow(a: &UPoly, e: u32) -> UPoly {
    (0..e).fold(vec![BigInt::one()], |acc, _| u_mul(&acc, a))
}

/// Primitive gcd in Z[s][r] of primitive `a`, `b` with deg a >= deg b,
/// via the subresultant remainder sequence.
fn b_subresultant_gcd(mut a: BPoly, mut b: BPoly) -> BPoly {
    if b.is_empty() {
        return b_primitive(&a);
    }
    let mut g: UPoly = vec![BigInt::one()];
    let mut h: UPoly = vec![BigInt::one()];
    loop {
        if b.len() == 1 {
            return vec![vec![BigInt::one()]];
        }
        let d = (a.len() - b.len()) as u32;
        let r = b_prem_exact(&a, &b);
        if r.is_empty() {
            return b_primitive(&b);
        }
        let div = u_mul(&g, &u_pow(&h, d));
        a = b;
        b = r
            .iter()
            .map(|c| {
                if c.is_empty() {
                    Vec::new()
                } else {
                    u_div_exact(c, &div)
                }
            })
            .collect();
        g = a.last().unwrap().clone();
        h = if d == 0 {
            h
        } else {
            u_div_exact(&u_pow(&g, d), &u_pow(&h, d - 1))
        };
    }
}

/// Primitive polynomial gcd of two nonzero polynomials with nonnegative
/// exponents (integer content is not included). The result is normalized
/// to a positive lexicographically-greatest coefficient.
pub fn poly_gcd(a: &ZPoly2, b: &ZPoly2) -> ZPoly2 {
    debug_assert!(a.min_exps().0 >= 0 && b.min_exps().0 >= 0);
    let (da, db) = (to_dense_at_zero(a), to_dense_at_zero(b));
    let ca = b_content(&da);
    let cb = b_content(&db);
    let cg = u_primitive(&u_gcd(&ca, &cb));
    let (mut x, mut y) = (b_primitive(&da), b_primitive(&db));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let x = b_subresultant_gcd(x, y);
    let g: BPoly = x.iter().map(|row| u_mul(row, &cg)).collect();
    let mut out = from_dense(&g);
    if out.leading().is_some_and(|t| t.1.is_negative()) {
        out = out.neg();
    }
    out
}

fn to_dense_at_zero(p: &ZPoly2) -> BPoly {
    // Polynomials here are already shifted to nonnegative exponents; keep the
    // origin so that the dense form is faithful.
    let maxr = p.terms.iter().map(|t| t.0 .0).max().unwrap_or(0);
    let mut out: BPoly = vec![Vec::new(); (maxr + 1) as usize];
    for ((a, b), c) in &p.terms {
        let row = &mut out[*a as usize];
        let k = *b as usize;
        if row.len() <= k {
            row.resize(k + 1, BigInt::zero());
        }
        row[k] = c.clone();
    }
    for row in out.iter_mut() {
        u_trim(row);
    }
    b_trim(&mut out);
    out
}

/// Exact quotient `a / b` for polynomials with nonnegative exponents.
pub fn poly_div_exact(a: &ZPoly2, b: &ZPoly2) -> ZPoly2 {
    if b.is_one() {
        return a.clone();
    }
    let q = b_div_exact(&to_dense_at_zero(a), &to_dense_at_zero(b));
    from_dense(&q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> ZPoly2 {
        ZPoly2::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))).collect())
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // r^2 - s^2 and r^2 + 2rs + s^2 share r + s
        let a = p(&[((2, 0), 1), ((0, 2), -1)]);
        let b = p(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1)]);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, p(&[((1, 0), 1), ((0, 1), 1)]));
        let q = poly_div_exact(&a, &g);
        assert_eq!(q, p(&[((1, 0), 1), ((0, 1), -1)]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = p(&[((1, 0), 1), ((0, 1), -1)]);
        let b = p(&[((2, 0), 1), ((1, 1), 1), ((0, 2), 1)]);
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_pure_s_factor() {
        // (s + 1)(r - s) and (s + 1)(r + 2)
        let a = p(&[((1, 0), 1), ((1, 1), 1), ((0, 1), -1), ((0, 2), -1)]);
        let b = p(&[((1, 0), 1), ((1, 1), 1), ((0, 0), 2), ((0, 1), 2)]);
        assert_eq!(poly_gcd(&a, &b), p(&[((0, 0), 1), ((0, 1), 1)]));
    }
}
