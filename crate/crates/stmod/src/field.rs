//! Finite fields GF(p^m) with exact arithmetic.
//!
//! Elements are stored as dense coefficient vectors over GF(p) (constant
//! term first) and addressed through a packed index `c_0 + c_1 p + ... +
//! c_{m-1} p^{m-1}`. Arithmetic goes through one of three backends:
//! lookup tables for q <= 1024 (the fast path hook), direct modular
//! arithmetic for larger prime fields, and polynomial arithmetic modulo
//! the field polynomial otherwise. The modulus is always the
//! lexicographically smallest monic irreducible, so serialized data is
//! reproducible across runs.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, represented by its packed index. Use
/// [`Field::coeffs`] / [`Field::from_coeffs`] to move between the index
/// and the coefficient-vector form.
pub type Elt = u32;

/// Largest supported field order, bounding any lookup table.
pub const MAX_ORDER: u64 = 1 << 16;

/// Orders up to this get full multiplication/addition tables.
const TABLE_ORDER: u64 = 1024;

#[derive(Debug)]
enum Backend {
    /// Full q*q tables; entries fit in u16 because q <= 1024.
    Tables {
        add: Vec<u16>,
        mul: Vec<u16>,
        inv: Vec<u16>,
        neg: Vec<u16>,
    },
    /// Prime field with q > 1024: direct modular arithmetic.
    Prime,
    /// Extension field with q > 1024: per-op polynomial arithmetic.
    Generic,
}

#[derive(Debug)]
struct FieldInner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic irreducible of degree m over GF(p), constant term first,
    /// length m+1, leading coefficient 1.
    modulus: Vec<u32>,
    backend: Backend,
}

/// A finite field GF(p^m). Cheap to clone (shared immutable state).
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.m)
        }
    }
}

/// Serialized form: `{p, m, modulus}` with the modulus constant-first.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- polynomial helpers over GF(p), used for the modulus search and the
// generic backend; coefficient vectors are constant-first, not normalized.

fn pf_trim(v: &mut Vec<u32>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn pf_mulmod(p: u64, a: &[u32], b: &[u32], modulus: &[u32]) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    // reduce modulo the monic `modulus`
    let n = modulus.len() - 1;
    let mut prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    while prod.len() > n {
        let lead = *prod.last().unwrap() as u64;
        let deg = prod.len() - 1;
        if lead != 0 {
            for k in 0..n {
                let idx = deg - n + k;
                let sub = (lead * modulus[k] as u64) % p;
                let cur = prod[idx] as u64;
                prod[idx] = ((cur + p - sub) % p) as u32;
            }
        }
        prod.pop();
    }
    while prod.len() < n {
        prod.push(0);
    }
    prod
}

fn pf_gcd(p: u64, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    pf_trim(&mut a);
    pf_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        // a mod b
        let mut r = a.clone();
        let bl = *b.last().unwrap() as u64;
        let binv = modpow_u64(bl, p - 2, p);
        while r.len() >= b.len() && !(r.len() == 1 && r[0] == 0) {
            let lead = *r.last().unwrap() as u64;
            if lead == 0 {
                r.pop();
                continue;
            }
            let c = (lead * binv) % p;
            let shift = r.len() - b.len();
            for k in 0..b.len() {
                let sub = (c * b[k] as u64) % p;
                let cur = r[shift + k] as u64;
                r[shift + k] = ((cur + p - sub) % p) as u32;
            }
            pf_trim(&mut r);
            if r.len() == 1 && r[0] == 0 {
                break;
            }
        }
        a = b;
        b = r;
        pf_trim(&mut b);
    }
    a
}

fn modpow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Irreducibility of a monic polynomial over GF(p): `x^{p^n} = x mod f`
/// and `gcd(x^{p^{n/l}} - x, f) = 1` for every prime divisor l of n.
fn pf_is_irreducible(p: u64, f: &[u32]) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // t_k = x^{p^k} mod f by repeated p-th powering
    let frob = |t: &[u32]| -> Vec<u32> {
        // t^p mod f via square-and-multiply on the exponent p
        let mut acc = vec![1u32];
        let mut base = t.to_vec();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = pf_mulmod(p, &acc, &base, f);
            }
            base = pf_mulmod(p, &base, &base, f);
            e >>= 1;
        }
        acc
    };
    let mut powers = vec![x.clone()];
    for _ in 0..n {
        let next = frob(powers.last().unwrap());
        powers.push(next);
    }
    // x^{p^n} == x mod f
    let mut top = powers[n].clone();
    pf_trim(&mut top);
    let mut xx = x.clone();
    pf_trim(&mut xx);
    if top != xx {
        return false;
    }
    let mut l = 2usize;
    let mut nn = n;
    while nn > 1 {
        if nn % l == 0 {
            let k = n / l;
            // gcd(x^{p^k} - x, f) must be 1
            let mut diff = powers[k].clone();
            while diff.len() < 2 {
                diff.push(0);
            }
            diff[1] = ((diff[1] as u64 + p - 1) % p) as u32;
            let g = pf_gcd(p, f, &diff);
            if g.len() > 1 {
                return false;
            }
            while nn % l == 0 {
                nn /= l;
            }
        }
        l += 1;
    }
    true
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::gf(p, 1)
    }

    /// GF(p^m) with the lexicographically smallest monic irreducible
    /// modulus of degree m (constant term first; m = 1 gives modulus x).
    pub fn gf(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p as u64));
        }
        if m < 1 || m > 16 {
            return Err(Error::BadFieldDegree(m));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q *= p as u64;
            if q > MAX_ORDER {
                return Err(Error::FieldTooLarge { p, m });
            }
        }
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            Self::smallest_irreducible(p, m)?
        };
        Ok(Self::from_parts(p, m, modulus))
    }

    /// Rebuild a field from its serialized spec, verifying the modulus.
    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        if !is_prime(spec.p) {
            return Err(Error::NotPrime(spec.p as u64));
        }
        if spec.modulus.len() != spec.m as usize + 1
            || *spec.modulus.last().unwrap() != 1
            || spec.modulus.iter().any(|&c| c >= spec.p)
        {
            return Err(Error::BadModulus);
        }
        if spec.m > 1 && !pf_is_irreducible(spec.p as u64, &spec.modulus) {
            return Err(Error::BadModulus);
        }
        Ok(Self::from_parts(spec.p, spec.m, spec.modulus.clone()))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.0.p,
            m: self.0.m,
            modulus: self.0.modulus.clone(),
        }
    }

    fn smallest_irreducible(p: u32, m: u32) -> Result<Vec<u32>> {
        // Enumerate lower coefficient vectors (c_0, ..., c_{m-1}) in
        // lexicographic order with c_0 most significant.
        let mut coeffs = vec![0u32; m as usize];
        loop {
            let mut f = coeffs.clone();
            f.push(1);
            if pf_is_irreducible(p as u64, &f) {
                return Ok(f);
            }
            // increment trailing coefficient, carrying leftwards
            let mut i = m as usize;
            loop {
                if i == 0 {
                    return Err(Error::Internal(
                        "no irreducible polynomial found in a full scan".into(),
                    ));
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
            }
        }
    }

    fn from_parts(p: u32, m: u32, modulus: Vec<u32>) -> Field {
        let mut q: u64 = 1;
        for _ in 0..m {
            q *= p as u64;
        }
        let q32 = q as u32;
        let backend = if q <= TABLE_ORDER {
            Self::build_tables(p, m, q32, &modulus)
        } else if m == 1 {
            Backend::Prime
        } else {
            Backend::Generic
        };
        Field(Arc::new(FieldInner {
            p,
            m,
            q: q32,
            modulus,
            backend,
        }))
    }

    fn build_tables(p: u32, m: u32, q: u32, modulus: &[u32]) -> Backend {
        let qe = q as usize;
        let digits = |mut x: u32| -> Vec<u32> {
            let mut d = vec![0u32; m as usize];
            for c in d.iter_mut() {
                *c = x % p;
                x /= p;
            }
            d
        };
        let pack = |d: &[u32]| -> u32 {
            let mut x = 0u32;
            for &c in d.iter().rev() {
                x = x * p + c;
            }
            x
        };
        let mut add = vec![0u16; qe * qe];
        let mut mul = vec![0u16; qe * qe];
        for a in 0..q {
            let da = digits(a);
            for b in a..q {
                let db = digits(b);
                let ds: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                let s = pack(&ds) as u16;
                add[(a * q + b) as usize] = s;
                add[(b * q + a) as usize] = s;
                let prod = pf_mulmod(p as u64, &da, &db, modulus);
                let pr = pack(&prod) as u16;
                mul[(a * q + b) as usize] = pr;
                mul[(b * q + a) as usize] = pr;
            }
        }
        let mut neg = vec![0u16; qe];
        for a in 0..q {
            let da = digits(a);
            let dn: Vec<u32> = da.iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = pack(&dn) as u16;
        }
        let mut inv = vec![0u16; qe];
        for a in 1..q {
            // a^(q-2) by square-and-multiply through the table
            let mut acc = 1u32;
            let mut base = a;
            let mut e = q - 2;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul[(acc * q + base) as usize] as u32;
                }
                base = mul[(base * q + base) as usize] as u32;
                e >>= 1;
            }
            inv[a as usize] = acc as u16;
        }
        Backend::Tables { add, mul, inv, neg }
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elt {
        0
    }

    pub fn one(&self) -> Elt {
        1
    }

    /// All elements, in index order.
    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.0.q
    }

    /// Coefficient vector (constant first, length m) of an element.
    pub fn coeffs(&self, a: Elt) -> Vec<u32> {
        let mut x = a;
        let mut d = vec![0u32; self.0.m as usize];
        for c in d.iter_mut() {
            *c = x % self.0.p;
            x /= self.0.p;
        }
        d
    }

    /// Element from a coefficient vector (constant first); shorter
    /// vectors are zero-padded.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Elt {
        assert!(coeffs.len() <= self.0.m as usize, "coefficient vector too long");
        let mut x = 0u32;
        for &c in coeffs.iter().rev() {
            debug_assert!(c < self.0.p);
            x = x * self.0.p + c % self.0.p;
        }
        x
    }

    /// The image of an ordinary integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, n: i64) -> Elt {
        let p = self.0.p as i64;
        (((n % p) + p) % p) as Elt
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        match &self.0.backend {
            Backend::Tables { add, .. } => add[(a * self.0.q + b) as usize] as Elt,
            Backend::Prime => {
                let s = a as u64 + b as u64;
                let p = self.0.p as u64;
                (if s >= p { s - p } else { s }) as Elt
            }
            Backend::Generic => {
                let p = self.0.p;
                let (mut x, mut y) = (a, b);
                let mut out = 0u32;
                let mut mult = 1u32;
                for _ in 0..self.0.m {
                    let c = (x % p + y % p) % p;
                    out += c * mult;
                    mult *= p;
                    x /= p;
                    y /= p;
                }
                out
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        match &self.0.backend {
            Backend::Tables { neg, .. } => neg[a as usize] as Elt,
            Backend::Prime => {
                if a == 0 {
                    0
                } else {
                    self.0.p - a
                }
            }
            Backend::Generic => {
                let p = self.0.p;
                let mut x = a;
                let mut out = 0u32;
                let mut mult = 1u32;
                for _ in 0..self.0.m {
                    out += ((p - x % p) % p) * mult;
                    mult *= p;
                    x /= p;
                }
                out
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        match &self.0.backend {
            Backend::Tables { mul, .. } => mul[(a * self.0.q + b) as usize] as Elt,
            Backend::Prime => ((a as u64 * b as u64) % self.0.p as u64) as Elt,
            Backend::Generic => {
                let da = self.coeffs(a);
                let db = self.coeffs(b);
                let prod = pf_mulmod(self.0.p as u64, &da, &db, &self.0.modulus);
                self.from_coeffs(&prod)
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elt) -> Elt {
        assert!(a != 0, "inverse of zero");
        match &self.0.backend {
            Backend::Tables { inv, .. } => inv[a as usize] as Elt,
            _ => self.pow(a, self.0.q as u64 - 2),
        }
    }

    pub fn pow(&self, a: Elt, mut e: u64) -> Elt {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Frobenius a -> a^p.
    pub fn frobenius(&self, a: Elt) -> Elt {
        self.pow(a, self.0.p as u64)
    }

    /// Inverse Frobenius, i.e. the unique p-th root.
    pub fn pth_root(&self, a: Elt) -> Elt {
        if self.0.m == 1 {
            return a;
        }
        let mut e = 1u64;
        for _ in 0..self.0.m - 1 {
            e *= self.0.p as u64;
        }
        self.pow(a, e)
    }

    pub fn sample<R: rand::Rng>(&self, rng: &mut R) -> Elt {
        rng.gen_range(0..self.0.q)
    }

    pub fn sample_nonzero<R: rand::Rng>(&self, rng: &mut R) -> Elt {
        rng.gen_range(1..self.0.q)
    }

    /// The canonical embedding into GF(p^m2) for m | m2: sends the
    /// generator to the smallest (in index order) root of this field's
    /// modulus in the target. Returns the per-element image table.
    pub fn embedding_into(&self, target: &Field) -> Result<Vec<Elt>> {
        if target.0.p != self.0.p || target.0.m % self.0.m != 0 {
            return Err(Error::BadExtension {
                from: self.0.m,
                to: target.0.m,
            });
        }
        // find the smallest root of our modulus in the target
        let root = target
            .elements()
            .find(|&b| {
                let mut acc = 0;
                // Horner, highest coefficient first
                for &c in self.0.modulus.iter().rev() {
                    acc = target.add(target.mul(acc, b), c);
                }
                acc == 0
            })
            .ok_or_else(|| Error::Internal("modulus has no root in extension field".into()))?;
        let mut table = Vec::with_capacity(self.0.q as usize);
        for a in self.elements() {
            let coeffs = self.coeffs(a);
            let mut acc = 0;
            for &c in coeffs.iter().rev() {
                acc = target.add(target.mul(acc, root), c);
            }
            table.push(acc);
        }
        Ok(table)
    }
}

/// Multiplicative order of p modulo n with all p-factors stripped from n;
/// GF(p^result) then contains a primitive root of unity of that order.
pub fn splitting_degree(p: u32, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p as u64));
    }
    if n == 0 {
        return Err(Error::Internal("splitting_degree of 0".into()));
    }
    let mut n1 = n;
    while n1 % p as u64 == 0 {
        n1 /= p as u64;
    }
    if n1 == 1 {
        return Ok(1);
    }
    let mut d = 1u32;
    let mut acc = p as u64 % n1;
    while acc != 1 {
        acc = acc * (p as u64) % n1;
        d += 1;
        if d > 64 + n1 as u32 {
            return Err(Error::Internal("order computation overran".into()));
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_moduli() {
        assert_eq!(Field::gf(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(Field::gf(2, 1).unwrap().modulus(), &[0, 1]);
        // the only monic irreducible quadratic over GF(2)
        assert_eq!(Field::gf(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^2 + 1 over GF(3): -1 is not a square mod 3
        assert_eq!(Field::gf(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // x^2 + 2 over GF(5): smallest after x^2 + c with c = 0, 1 reducible
        assert_eq!(Field::gf(5, 2).unwrap().modulus(), &[2, 0, 1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Field::gf(4, 1).is_err());
        assert!(Field::gf(6, 2).is_err());
        assert!(Field::gf(2, 17).is_err());
        assert!(Field::gf(65521, 2).is_err()); // q over the cap
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (13, 1), (2, 4)] {
            let f = Field::gf(p, m).unwrap();
            let q = f.order();
            assert!(q <= 16);
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_a_homomorphism_and_fixes_exactly_gf_p() {
        for (p, m) in [(2, 2), (2, 4), (2, 8), (3, 2), (3, 4), (5, 2), (2, 3)] {
            let f = Field::gf(p, m).unwrap();
            if f.order() > 256 {
                continue;
            }
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b)),
                        f.mul(f.frobenius(a), f.frobenius(b))
                    );
                }
                let fixed = f.frobenius(a) == a;
                // prime-field elements have coefficient vector (c, 0, ..., 0)
                let in_prime = f.coeffs(a).iter().skip(1).all(|&c| c == 0);
                assert_eq!(fixed, in_prime);
                assert_eq!(f.frobenius(f.pth_root(a)), a);
            }
        }
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(2, 3).unwrap(), 2); // cube roots live in GF(4)
        assert_eq!(splitting_degree(3, 2).unwrap(), 1);
        assert_eq!(splitting_degree(2, 4).unwrap(), 1); // p-power part stripped
        assert_eq!(splitting_degree(5, 60).unwrap(), 2);
        assert_eq!(splitting_degree(3, 15).unwrap(), 4);
        assert_eq!(splitting_degree(2, 24).unwrap(), 2);
        assert_eq!(splitting_degree(3, 12).unwrap(), 2);
    }

    #[test]
    fn embedding_gf2_into_gf4_preserves_ops() {
        let k = Field::gf(2, 1).unwrap();
        let l = Field::gf(2, 2).unwrap();
        let e = k.embedding_into(&l).unwrap();
        assert_eq!(e[0], 0);
        assert_eq!(e[1], 1);
        // and GF(4) into GF(16)
        let big = Field::gf(2, 4).unwrap();
        let e2 = l.embedding_into(&big).unwrap();
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(e2[l.mul(a, b) as usize], big.mul(e2[a as usize], e2[b as usize]));
                assert_eq!(e2[l.add(a, b) as usize], big.add(e2[a as usize], e2[b as usize]));
            }
        }
    }

    #[test]
    fn generic_backend_matches_tables() {
        // GF(3^7) = 2187 > 1024 exercises the generic backend; compare
        // against a table-backed subfield through the embedding.
        let small = Field::gf(3, 1).unwrap();
        let big = Field::gf(3, 7).unwrap();
        let e = small.embedding_into(&big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(e[small.add(a, b) as usize], big.add(e[a as usize], e[b as usize]));
                assert_eq!(e[small.mul(a, b) as usize], big.mul(e[a as usize], e[b as usize]));
            }
        }
        for a in [1u32, 5, 100, 2186] {
            assert_eq!(big.mul(a, big.inv(a)), 1);
        }
    }
}
