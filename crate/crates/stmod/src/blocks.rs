//! Block decomposition of kG: the center as class sums, central
//! primitive idempotents, the principal block, and block membership.
//!
//! The center is split by minimal polynomials of its basis elements: CRT
//! selectors give approximate idempotents modulo the radical, and
//! repeated p-th powering lifts them exactly (in a commutative ring of
//! characteristic p, (e + d)^{p^t} = e + d^{p^t} for nilpotent d, so the
//! iteration is exact and branch-free). Everything is verified by exact
//! arithmetic on every run: e^2 = e, pairwise orthogonality, sum 1, and
//! centrality.

use crate::error::{Error, Result};
use crate::field::Elt;
use crate::matrix::Matrix;
use crate::meataxe::Algebra;
use crate::module::ModuleRep;
use crate::poly::{ext_gcd, min_poly, Poly};

/// A central primitive idempotent with its block data.
#[derive(Debug, Clone)]
pub struct BlockIdempotent {
    /// Coefficients over the group-element basis of kG.
    pub coeffs: Vec<Elt>,
    pub augmentation: Elt,
    /// Simples S (catalog indices) with e.S nonzero.
    pub simple_indices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct BlockSet {
    pub blocks: Vec<BlockIdempotent>,
    /// Index of the principal block (augmentation 1).
    pub principal: usize,
}

/// How a central idempotent acts on a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    In,
    Out,
    /// Legal for decomposable modules; an internal error for certified
    /// indecomposables.
    Mixed,
}

impl Algebra {
    /// Basis of Z(kG): the conjugacy class sums, as rows.
    pub fn center_basis(&self) -> Matrix {
        let cc = self.group().conjugacy_classes();
        let n = self.group().order();
        let rows: Vec<Vec<Elt>> = cc
            .classes
            .iter()
            .map(|class| {
                let mut v = vec![0; n];
                for &g in class {
                    v[g] = 1;
                }
                v
            })
            .collect();
        Matrix::from_rows_with_width(self.field(), rows, n)
    }

    /// The block decomposition, cached per algebra.
    pub fn block_set(&self) -> &BlockSet {
        self.blocks.get_or_init(|| {
            self.compute_blocks()
                .expect("block decomposition must terminate on a finite-dimensional center")
        })
    }

    fn compute_blocks(&self) -> Result<BlockSet> {
        let field = self.field().clone();
        let center = self.center_basis();
        let mut idems: Vec<Vec<Elt>> = vec![self.unit()];
        // repeatedly try to split each idempotent with each class sum
        let mut progress = true;
        while progress {
            progress = false;
            let mut next: Vec<Vec<Elt>> = Vec::new();
            'outer: for e in idems.iter() {
                for ci in 0..center.rows() {
                    let z = self.mul_alg(e, center.row(ci));
                    if let Some(parts) = self.split_idempotent(e, &z)? {
                        next.extend(parts);
                        progress = true;
                        continue 'outer;
                    }
                }
                next.push(e.clone());
            }
            idems = next;
        }
        // exact verification
        let mut total = vec![0; self.group().order()];
        for (i, e) in idems.iter().enumerate() {
            if self.mul_alg(e, e) != *e {
                return Err(Error::Internal("block idempotent not idempotent".into()));
            }
            for (j, f) in idems.iter().enumerate() {
                if i != j && self.mul_alg(e, f).iter().any(|&c| c != 0) {
                    return Err(Error::Internal("block idempotents not orthogonal".into()));
                }
            }
            for row in 0..center.rows() {
                let c = center.row(row);
                if self.mul_alg(e, c) != self.mul_alg(c, e) {
                    return Err(Error::Internal("block idempotent not central".into()));
                }
            }
            for (t, &c) in total.iter_mut().zip(e) {
                *t = field.add(*t, c);
            }
        }
        if total != self.unit() {
            return Err(Error::Internal("block idempotents do not sum to 1".into()));
        }
        // simples per block, and the principal position
        let simples = self.simples().clone();
        let mut blocks = Vec::new();
        let mut principal = None;
        for (bi, e) in idems.iter().enumerate() {
            let mut indices = Vec::new();
            for (si, s) in simples.iter().enumerate() {
                match membership_of(s, e) {
                    Membership::In => indices.push(si),
                    Membership::Out => {}
                    Membership::Mixed => {
                        return Err(Error::Internal(
                            "central idempotent acts mixed on a simple module".into(),
                        ))
                    }
                }
            }
            let aug = self.augmentation(e);
            if aug == 1 {
                if principal.is_some() {
                    return Err(Error::Internal("two blocks with augmentation 1".into()));
                }
                principal = Some(bi);
            } else if aug != 0 {
                return Err(Error::Internal(
                    "block augmentation is neither 0 nor 1".into(),
                ));
            }
            blocks.push(BlockIdempotent {
                coeffs: e.clone(),
                augmentation: aug,
                simple_indices: indices,
            });
        }
        let principal =
            principal.ok_or_else(|| Error::Internal("no block with augmentation 1".into()))?;
        // the simple indices partition the catalog
        let mut seen = vec![false; simples.len()];
        for b in &blocks {
            for &i in &b.simple_indices {
                if seen[i] {
                    return Err(Error::Internal("simple assigned to two blocks".into()));
                }
                seen[i] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Internal("simple missing from all blocks".into()));
        }
        Ok(BlockSet { blocks, principal })
    }

    /// Try to split e along the primary decomposition of z in e.Z(kG):
    /// returns None when the minimal polynomial is primary.
    fn split_idempotent(&self, e: &[Elt], z: &[Elt]) -> Result<Option<Vec<Vec<Elt>>>> {
        let field = self.field().clone();
        let center = self.center_basis();
        // basis of e.Z
        let rows: Vec<Vec<Elt>> = (0..center.rows())
            .map(|i| self.mul_alg(e, center.row(i)))
            .collect();
        let ez = Matrix::from_rows_with_width(&field, rows, self.group().order()).row_space();
        if ez.rows() == 0 {
            return Ok(None);
        }
        let bt = ez.transpose();
        // multiplication by z on e.Z
        let mut images = Matrix::zeros(&field, self.group().order(), ez.rows());
        for c in 0..ez.rows() {
            let img = self.mul_alg(ez.row(c), z);
            for (r, &v) in img.iter().enumerate() {
                images.set(r, c, v);
            }
        }
        let x = bt
            .solve_right(&images)
            .ok_or_else(|| Error::Internal("center not closed under multiplication".into()))?;
        let mp = min_poly(&x);
        let facs = mp.factor()?;
        if facs.len() < 2 {
            return Ok(None);
        }
        let p = field.characteristic();
        let mut parts = Vec::new();
        for (q, _) in &facs {
            // approximate selector: 1 mod q, 0 mod the other irreducibles
            let u = {
                let mut acc = Poly::constant(&field, 1);
                for (r, mult) in &facs {
                    if r != q {
                        for _ in 0..*mult {
                            acc = acc.mul(r);
                        }
                    }
                }
                acc
            };
            let (g, s, _) = ext_gcd(&u, q);
            if g.degree() != Some(0) {
                return Err(Error::Internal("primary factors not coprime".into()));
            }
            let sel = s.mul(&u);
            // evaluate sel at z inside e.Z (z^0 = e), then lift by p-th
            // powering until exactly idempotent
            let mut acc = vec![0; self.group().order()];
            let mut zpow = e.to_vec();
            for d in 0..=sel.degree().unwrap_or(0) {
                let c = sel.coeff(d);
                if c != 0 {
                    for (slot, &zp) in acc.iter_mut().zip(&zpow) {
                        *slot = field.add(*slot, field.mul(c, zp));
                    }
                }
                zpow = self.mul_alg(&zpow, z);
            }
            let mut guard = 0;
            while self.mul_alg(&acc, &acc) != acc {
                let mut power = acc.clone();
                for _ in 1..p {
                    power = self.mul_alg(&power, &acc);
                }
                acc = power;
                guard += 1;
                if guard > 64 {
                    return Err(Error::Internal("idempotent lifting did not stabilize".into()));
                }
            }
            if acc.iter().all(|&c| c == 0) {
                return Err(Error::Internal("primary selector lifted to zero".into()));
            }
            parts.push(acc);
        }
        Ok(Some(parts))
    }

    pub fn principal_block(&self) -> &BlockIdempotent {
        let bs = self.block_set();
        &bs.blocks[bs.principal]
    }

    /// The e-component of a module: the image of the central idempotent,
    /// as a submodule with inclusion.
    pub fn block_component(
        &self,
        m: &ModuleRep,
        e: &BlockIdempotent,
    ) -> Result<(ModuleRep, Matrix)> {
        let act = m.algebra_action(&e.coeffs);
        let basis = act.column_space();
        let (sub, inc) = m.submodule(&basis)?;
        Ok((sub, inc.mat))
    }

    /// Membership of a module in a block, by the idempotent action. A
    /// mixed action on a certified-indecomposable module is an internal
    /// error; pass `indecomposable = false` to receive `Mixed` instead.
    pub fn lies_in_block(
        &self,
        m: &ModuleRep,
        e: &BlockIdempotent,
        indecomposable: bool,
    ) -> Result<Membership> {
        let mem = membership_of(m, &e.coeffs);
        if mem == Membership::Mixed && indecomposable {
            return Err(Error::Internal(
                "central idempotent acts mixed on an indecomposable module".into(),
            ));
        }
        Ok(mem)
    }

    pub fn simples_in_block(&self, e: &BlockIdempotent) -> usize {
        e.simple_indices.len()
    }
}

fn membership_of(m: &ModuleRep, coeffs: &[Elt]) -> Membership {
    if m.dim() == 0 {
        return Membership::In;
    }
    let act = m.algebra_action(coeffs);
    if act.is_identity() {
        Membership::In
    } else if act.is_zero() {
        Membership::Out
    } else {
        Membership::Mixed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::presets;

    #[test]
    fn center_dimensions() {
        let s3 = presets::symmetric(3).unwrap();
        let a = Algebra::new(&s3, &Field::gf(3, 1).unwrap());
        assert_eq!(a.center_basis().rows(), 3);

        let q8 = presets::quaternion(8).unwrap();
        let b = Algebra::new(&q8, &Field::gf(2, 1).unwrap());
        assert_eq!(b.center_basis().rows(), 5);

        let c6 = presets::cyclic(6).unwrap();
        let c = Algebra::new(&c6, &Field::gf(3, 1).unwrap());
        assert_eq!(c.center_basis().rows(), 6);
    }

    #[test]
    fn blocks_of_kc6_char3() {
        let c6 = presets::cyclic(6).unwrap();
        let a = Algebra::new(&c6, &Field::gf(3, 1).unwrap());
        let bs = a.block_set();
        assert_eq!(bs.blocks.len(), 2);
        let f = a.field();
        // idempotents are 2(1 + z^3) and 2(1 - z^3) for z the generator;
        // z^3 is the unique involution
        let invol = (1..6).find(|&i| a.group().element_order(i) == 2).unwrap();
        let mut e_plus = vec![0; 6];
        e_plus[0] = 2;
        e_plus[invol] = 2;
        let mut e_minus = vec![0; 6];
        e_minus[0] = 2;
        e_minus[invol] = f.neg(2);
        let mut got: Vec<Vec<u32>> = bs.blocks.iter().map(|b| b.coeffs.clone()).collect();
        got.sort();
        let mut want = vec![e_plus, e_minus];
        want.sort();
        assert_eq!(got, want);
        // the principal one has augmentation 1
        assert_eq!(bs.blocks[bs.principal].augmentation, 1);
        assert_eq!(a.simples_in_block(a.principal_block()), 1);
    }

    #[test]
    fn single_block_algebras() {
        // kS_3 over GF(3): both simples share the principal block
        let s3 = presets::symmetric(3).unwrap();
        let a = Algebra::new(&s3, &Field::gf(3, 1).unwrap());
        let bs = a.block_set();
        assert_eq!(bs.blocks.len(), 1);
        assert_eq!(bs.blocks[0].coeffs, a.unit());
        assert_eq!(a.simples_in_block(a.principal_block()), 2);

        // kA_4 over GF(4): the principal idempotent is 1
        let a4 = presets::alternating(4).unwrap();
        let b = Algebra::new(&a4, &Field::gf(2, 2).unwrap());
        let bs = b.block_set();
        assert_eq!(bs.blocks.len(), 1);
        assert_eq!(bs.blocks[0].coeffs, b.unit());
    }

    #[test]
    fn blocks_of_kc6_char2_over_gf4() {
        let c6 = presets::cyclic(6).unwrap();
        let a = Algebra::new(&c6, &Field::gf(2, 2).unwrap());
        let bs = a.block_set();
        assert_eq!(bs.blocks.len(), 3);
        assert_eq!(a.simples_in_block(a.principal_block()), 1);
        // principal idempotent is supported on the C_3 part
        let e0 = a.principal_block();
        for (g, &c) in e0.coeffs.iter().enumerate() {
            if c != 0 {
                assert_eq!(a.group().element_order(g) % 2, 1);
            }
        }
    }

    #[test]
    fn membership_examples() {
        let c6 = presets::cyclic(6).unwrap();
        let a = Algebra::new(&c6, &Field::gf(3, 1).unwrap());
        let k = a.trivial();
        let e0 = a.principal_block().clone();
        assert_eq!(a.lies_in_block(k, &e0, true).unwrap(), Membership::In);
        // the sign module of C_6 over GF(3) lies outside the principal block
        let f = a.field().clone();
        let gen_order = a.group().element_order(a.group().generator_indices()[0]);
        assert_eq!(gen_order, 6);
        let sign = ModuleRep::one_dim(a.group(), &f, &[f.neg(1)]).unwrap();
        assert_eq!(a.lies_in_block(&sign, &e0, true).unwrap(), Membership::Out);
        // mixed action on a decomposable module is legal
        let (sum, _) = ModuleRep::direct_sum(&[k.clone(), sign]).unwrap();
        assert_eq!(a.lies_in_block(&sum, &e0, false).unwrap(), Membership::Mixed);
        assert!(a.lies_in_block(&sum, &e0, true).is_err());
        // regular module lies in every block mixedly except single-block algebras
        let reg_part = a.block_component(a.regular(), &e0).unwrap();
        assert_eq!(reg_part.0.dim(), 3);
    }
}
