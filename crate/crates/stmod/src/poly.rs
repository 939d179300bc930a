//! Univariate polynomials over GF(q) and Berlekamp factorization.
//!
//! Factoring is fully deterministic: the Berlekamp subalgebra is split by
//! scanning basis vectors against every field scalar, which is fine at
//! the tiny field orders this crate works with.

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::matrix::{Echelon, Matrix};
use std::fmt;

/// Dense polynomial, constant coefficient first. The zero polynomial has
/// an empty coefficient vector; otherwise the trailing coefficient is
/// nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elt>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{}x", c)?,
                (_, 1) => write!(f, "x^{}", i)?,
                (_, _) => write!(f, "{}x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elt>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, vec![])
    }

    pub fn constant(field: &Field, c: Elt) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![0, 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elt {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Elt {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        self.scale(inv)
    }

    pub fn scale(&self, c: Elt) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = f.add(self.coeff(i), other.coeff(i));
        }
        Poly::new(f, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Poly::new(f, out)
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = &self.field;
        let dd = d.degree().unwrap();
        let lead_inv = f.inv(d.leading());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd || (rem.len() == dd + 1 && dd == 0 && !rem.is_empty()) {
            if rem.len() < dd + 1 {
                break;
            }
            let k = rem.len() - 1 - dd;
            let c = f.mul(*rem.last().unwrap(), lead_inv);
            if c != 0 {
                quo[k] = c;
                for (i, &dc) in d.coeffs.iter().enumerate() {
                    let t = f.mul(c, dc);
                    rem[k + i] = f.sub(rem[k + i], t);
                }
            }
            rem.pop();
        }
        (Poly::new(f, quo), Poly::new(f, rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.divrem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            let mut s = 0;
            for _ in 0..(i as u32 % f.characteristic()) {
                s = f.add(s, c);
            }
            out.push(s);
        }
        Poly::new(f, out)
    }

    pub fn eval(&self, x: Elt) -> Elt {
        let f = &self.field;
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Evaluate at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let f = m.field();
        let mut acc = Matrix::zeros(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            if c != 0 {
                for i in 0..n {
                    acc.set(i, i, f.add(acc.get(i, i), c));
                }
            }
        }
        acc
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::constant(&self.field, 1);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Irreducibility by the x^{q^d} probes: f of degree n is irreducible
    /// iff x^{q^n} = x mod f and gcd(x^{q^{n/l}} - x, f) = 1 for every
    /// prime l dividing n.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = &self.field;
        let q = f.order() as u64;
        let x = Poly::x(f);
        let mut powers = vec![x.clone()];
        for _ in 0..n {
            let prev = powers.last().unwrap();
            powers.push(prev.pow_mod(q, self));
        }
        if powers[n].sub(&x).rem(self) != Poly::zero(f) {
            return false;
        }
        let mut nn = n;
        let mut l = 2;
        while nn > 1 {
            if nn % l == 0 {
                if self.gcd(&powers[n / l].sub(&x)).degree() != Some(0) {
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

    /// Complete factorization into monic irreducibles with
    /// multiplicities; the product times the leading unit reproduces the
    /// input.
    pub fn factor(&self) -> Result<Vec<(Poly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out: Vec<(Poly, u32)> = Vec::new();
        factor_rec(&self.monic(), 1, &mut out);
        out.sort_by(|a, b| (a.0.coeffs.len(), &a.0.coeffs).cmp(&(b.0.coeffs.len(), &b.0.coeffs)));
        Ok(out)
    }

    /// Distinct roots in the coefficient field.
    pub fn roots(&self) -> Vec<Elt> {
        self.field
            .elements()
            .filter(|&x| self.eval(x) == 0)
            .collect()
    }
}

fn merge_factor(out: &mut Vec<(Poly, u32)>, p: Poly, mult: u32) {
    if let Some(e) = out.iter_mut().find(|(q, _)| *q == p) {
        e.1 += mult;
    } else {
        out.push((p, mult));
    }
}

fn factor_rec(f: &Poly, mult: u32, out: &mut Vec<(Poly, u32)>) {
    let field = f.field().clone();
    let Some(n) = f.degree() else { return };
    if n == 0 {
        return;
    }
    let fp = f.derivative();
    if fp.is_zero() {
        // f = g(x^p)^... : take p-th roots of the surviving coefficients
        let p = field.characteristic() as usize;
        let mut g = Vec::with_capacity(n / p + 1);
        for i in (0..=n).step_by(p) {
            g.push(field.pth_root(f.coeff(i)));
        }
        let g = Poly::new(&field, g);
        factor_rec(&g, mult * field.characteristic(), out);
        return;
    }
    let g = f.gcd(&fp);
    let s = f.divrem(&g).0.monic(); // squarefree part carrying each factor of multiplicity prime to p
    for irr in berlekamp_squarefree(&s) {
        merge_factor(out, irr, mult);
    }
    if g.degree().unwrap_or(0) > 0 {
        factor_rec(&g.monic(), mult, out);
    }
}

/// Berlekamp on a squarefree monic polynomial.
fn berlekamp_squarefree(s: &Poly) -> Vec<Poly> {
    let field = s.field().clone();
    let Some(n) = s.degree() else { return vec![] };
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![s.clone()];
    }
    let q = field.order() as u64;
    // rows of Q - I where Q_i = x^{qi} mod s
    let x_q = Poly::x(&field).pow_mod(q, s);
    let mut qmat = Matrix::zeros(&field, n, n);
    let mut row = Poly::constant(&field, 1);
    for i in 0..n {
        for j in 0..n {
            qmat.set(i, j, row.coeff(j));
        }
        qmat.set(i, i, field.sub(qmat.get(i, i), 1));
        row = row.mul(&x_q).rem(s);
    }
    // kernel rows are the Berlekamp subalgebra; its dimension counts factors
    let kernel = qmat.transpose().kernel_basis();
    let r = kernel.rows();
    if r == 1 {
        return vec![s.clone()];
    }
    let mut factors = vec![s.clone()];
    for bi in 0..r {
        if factors.len() == r {
            break;
        }
        let v = Poly::new(&field, kernel.row(bi).to_vec());
        if v.degree() == Some(0) || v.is_zero() {
            continue;
        }
        for c in field.elements() {
            if factors.len() == r {
                break;
            }
            let shifted = v.sub(&Poly::constant(&field, c));
            let mut next = Vec::with_capacity(factors.len());
            for fac in factors.drain(..) {
                let g = fac.gcd(&shifted);
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && dg < fac.degree().unwrap() {
                    let other = fac.divrem(&g).0.monic();
                    next.push(g);
                    next.push(other);
                } else {
                    next.push(fac);
                }
            }
            factors = next;
        }
    }
    factors
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let field = a.field().clone();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::constant(&field, 1), Poly::zero(&field));
    let (mut t0, mut t1) = (Poly::zero(&field), Poly::constant(&field, 1));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let ns = s0.sub(&q.mul(&s1));
        let nt = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let lead_inv = field.inv(r0.leading());
    (r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv))
}

/// CRT selector polynomials for a factored modulus m = prod q_i^{e_i}:
/// s_i = 1 mod q_i^{e_i} and 0 mod the other factors, with deg s_i < deg m.
/// Substituting a root of m (a matrix, an algebra element) turns these
/// into the orthogonal projection idempotents of the primary components.
pub fn crt_selectors(factors: &[(Poly, u32)]) -> Vec<Poly> {
    assert!(!factors.is_empty());
    let field = factors[0].0.field().clone();
    let mut m = Poly::constant(&field, 1);
    let mut powers = Vec::new();
    for (q, e) in factors {
        let mut qe = Poly::constant(&field, 1);
        for _ in 0..*e {
            qe = qe.mul(q);
        }
        m = m.mul(&qe);
        powers.push(qe);
    }
    powers
        .iter()
        .map(|qe| {
            let u = m.divrem(qe).0;
            let (g, s, _) = ext_gcd(&u, qe);
            assert_eq!(g.degree(), Some(0), "primary factors must be coprime");
            s.mul(&u).rem(&m)
        })
        .collect()
}

/// Minimal polynomial of a square matrix, via the first linear dependence
/// among vectorized powers.
pub fn min_poly(m: &Matrix) -> Poly {
    let field = m.field().clone();
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut ech = Echelon::new(&field, n * n);
    let mut powers: Vec<Matrix> = vec![Matrix::identity(&field, n)];
    loop {
        let last = powers.last().unwrap().clone();
        let v = last.vectorize();
        if !ech.insert(v) {
            break;
        }
        powers.push(last.mul(m));
    }
    // the last power is dependent on the earlier ones
    let k = powers.len() - 1;
    let mut rows = Vec::with_capacity(k);
    for p in &powers[..k] {
        rows.push(p.vectorize());
    }
    let basis = Matrix::from_rows_with_width(&field, rows, n * n);
    let dep = Echelon::from_matrix(&basis);
    // re-derive coordinates against the power basis itself
    let target = powers[k].vectorize();
    let coords = solve_in_terms_of(&basis, &target, &dep)
        .expect("minimal polynomial dependence must be solvable");
    let mut coeffs = coords.iter().map(|&c| field.neg(c)).collect::<Vec<_>>();
    coeffs.push(1);
    Poly::new(&field, coeffs)
}

/// Express target as a combination of the given rows (assumed
/// independent), using an echelon of the rows for the containment check.
fn solve_in_terms_of(rows: &Matrix, target: &[Elt], ech: &Echelon) -> Option<Vec<Elt>> {
    if !ech.contains(target) {
        return None;
    }
    // augmented transpose solve: rows^T * x = target^T
    let rt = rows.transpose();
    let field = rows.field();
    let tcol = Matrix::from_fn(field, target.len(), 1, |i, _| target[i]);
    let x = rt.solve_right(&tcol)?;
    Some((0..rows.rows()).map(|i| x.get(i, 0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_examples() {
        // x^2 + x over GF(2) = x(x+1)
        let f2 = Field::gf(2, 1).unwrap();
        let f = Poly::new(&f2, vec![0, 1, 1]);
        let fac = f.factor().unwrap();
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().all(|(p, m)| p.degree() == Some(1) && *m == 1));

        // x^2 + 1 over GF(3) is irreducible
        let f3 = Field::gf(3, 1).unwrap();
        let g = Poly::new(&f3, vec![1, 0, 1]);
        let fac = g.factor().unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0], (g.clone(), 1));
        assert!(g.is_irreducible());

        // x^3 - 1 over GF(4) splits into three distinct linear factors
        let f4 = Field::gf(2, 2).unwrap();
        let h = Poly::new(&f4, vec![1, 0, 0, 1]); // x^3 + 1 = x^3 - 1 in char 2
        let fac = h.factor().unwrap();
        assert_eq!(fac.len(), 3);
        assert!(fac.iter().all(|(p, m)| p.degree() == Some(1) && *m == 1));
        assert_eq!(h.roots().len(), 3);
    }

    #[test]
    fn factor_reconstructs_product_and_passes_irreducibility_retest() {
        let mut rng = crate::testutil::rng(23);
        use rand::Rng;
        for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let field = Field::gf(p, m).unwrap();
            for _ in 0..40 {
                let deg = rng.gen_range(1..8);
                let mut coeffs: Vec<Elt> =
                    (0..deg).map(|_| field.sample(&mut rng)).collect();
                coeffs.push(field.sample_nonzero(&mut rng));
                let f = Poly::new(&field, coeffs);
                let fac = f.factor().unwrap();
                let mut prod = Poly::constant(&field, f.leading());
                for (q, mult) in &fac {
                    assert!(q.is_irreducible(), "factor {q} of {f} not irreducible");
                    assert!(q.is_monic());
                    for _ in 0..*mult {
                        prod = prod.mul(q);
                    }
                }
                assert_eq!(prod, f, "product mismatch for {f}");
            }
        }
    }

    #[test]
    fn repeated_and_char_p_multiplicities() {
        let f2 = Field::gf(2, 1).unwrap();
        // (x+1)^4 has derivative zero twice over
        let xp1 = Poly::new(&f2, vec![1, 1]);
        let f = xp1.mul(&xp1).mul(&xp1).mul(&xp1);
        let fac = f.factor().unwrap();
        assert_eq!(fac, vec![(xp1.clone(), 4)]);

        // x^2 (x+1)^3 over GF(3)
        let f3 = Field::gf(3, 1).unwrap();
        let x = Poly::x(&f3);
        let y = Poly::new(&f3, vec![1, 1]);
        let f = x.mul(&x).mul(&y).mul(&y).mul(&y);
        let mut fac = f.factor().unwrap();
        fac.sort_by_key(|(p, _)| p.coeff(0));
        assert_eq!(fac, vec![(x, 2), (y, 3)]);
    }

    #[test]
    fn crt_selectors_are_idempotent_mod_m() {
        let f = Field::gf(3, 1).unwrap();
        let x = Poly::x(&f);
        let q1 = Poly::new(&f, vec![1, 1]); // x + 1
        let q2 = Poly::new(&f, vec![1, 0, 1]); // x^2 + 1
        let factors = vec![(x.clone(), 2u32), (q1.clone(), 1), (q2.clone(), 1)];
        let m = x.mul(&x).mul(&q1).mul(&q2);
        let sels = crt_selectors(&factors);
        assert_eq!(sels.len(), 3);
        let mut total = Poly::zero(&f);
        for (i, s) in sels.iter().enumerate() {
            total = total.add(s);
            // s^2 = s mod m
            assert!(s.mul(s).sub(s).rem(&m).is_zero());
            for (j, t) in sels.iter().enumerate() {
                if i != j {
                    assert!(s.mul(t).rem(&m).is_zero());
                }
            }
        }
        assert!(total.sub(&Poly::constant(&f, 1)).rem(&m).is_zero());
    }

    #[test]
    fn min_poly_of_jordan_block() {
        let f = Field::gf(5, 1).unwrap();
        let mut j = Matrix::identity(&f, 3);
        j.set(0, 1, 1);
        j.set(1, 2, 1);
        let mp = min_poly(&j);
        // (x-1)^3
        let x_minus_1 = Poly::new(&f, vec![4, 1]);
        assert_eq!(mp, x_minus_1.mul(&x_minus_1).mul(&x_minus_1));
        assert!(mp.eval_matrix(&j).is_zero());
    }
}
