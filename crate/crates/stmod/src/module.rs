//! kG-modules as generator action matrices, equivariant maps, and the
//! functor calculus: duals, tensors, restriction, induction, scalar
//! extension, spinning and subquotients.
//!
//! A module stores one invertible matrix per group generator; the action
//! of any other element is derived from its generator word on first use
//! and memoized (write-once per element, safe under concurrent reads).
//! All vectors are column vectors, so a map f sends v to `f.mat * v`;
//! subspace bases are stored as matrix rows.

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::group::{Group, Subgroup};
use crate::matrix::{Echelon, Matrix};
use std::sync::{Arc, OnceLock};

struct RepInner {
    field: Field,
    group: Arc<Group>,
    dim: usize,
    gen_action: Vec<Matrix>,
    cache: OnceLock<Box<[OnceLock<Matrix>]>>,
}

/// A finitely generated kG-module. Cheap to clone.
#[derive(Clone)]
pub struct ModuleRep(Arc<RepInner>);

impl std::fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModuleRep(dim {} over {} for group of order {})",
            self.dim(),
            self.field(),
            self.group().order()
        )
    }
}

pub fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    Arc::ptr_eq(a, b)
}

impl ModuleRep {
    pub fn new(field: &Field, group: &Arc<Group>, gen_action: Vec<Matrix>) -> Result<ModuleRep> {
        if gen_action.len() != group.num_generators() {
            return Err(Error::Shape(format!(
                "{} generator actions for {} generators",
                gen_action.len(),
                group.num_generators()
            )));
        }
        let dim = gen_action.first().map_or(0, |m| m.rows());
        for m in &gen_action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape("generator actions must be square of one size".into()));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if dim > 0 && m.rank() != dim {
                return Err(Error::Shape("generator action not invertible".into()));
            }
        }
        Ok(ModuleRep(Arc::new(RepInner {
            field: field.clone(),
            group: group.clone(),
            dim,
            gen_action,
            cache: OnceLock::new(),
        })))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.0.group
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }

    pub fn gen_action(&self, g: usize) -> &Matrix {
        &self.0.gen_action[g]
    }

    pub fn gen_actions(&self) -> &[Matrix] {
        &self.0.gen_action
    }

    /// Action matrix of an arbitrary element, derived from its word.
    pub fn action(&self, elt: usize) -> &Matrix {
        let group = &self.0.group;
        let slots = self.0.cache.get_or_init(|| {
            (0..group.order())
                .map(|_| OnceLock::new())
                .collect::<Vec<_>>()
                .into_boxed_slice()
        });
        slots[elt].get_or_init(|| {
            let word = group.word(elt);
            match word.split_last() {
                None => Matrix::identity(&self.0.field, self.0.dim),
                Some((&last, prefix)) => {
                    // element of the prefix word, via the multiplication table
                    let mut parent = 0usize;
                    for &pos in prefix {
                        parent = group.mul(parent, group.generator_indices()[pos]);
                    }
                    self.action(parent).mul(&self.0.gen_action[last])
                }
            }
        })
    }

    /// Action of an algebra element given by its coefficient vector over
    /// the group-element basis.
    pub fn algebra_action(&self, coeffs: &[Elt]) -> Matrix {
        assert_eq!(coeffs.len(), self.0.group.order());
        let f = &self.0.field;
        let mut out = Matrix::zeros(f, self.0.dim, self.0.dim);
        for (g, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                out = out.add(&self.action(g).scale(c));
            }
        }
        out
    }

    /// Random-pair homomorphism check plus the identity law.
    pub fn validate<R: rand::Rng>(&self, rng: &mut R, pairs: usize) -> Result<()> {
        if !self.action(0).is_identity() {
            return Err(Error::Internal("identity does not act as identity".into()));
        }
        let n = self.0.group.order();
        for _ in 0..pairs {
            let g = rng.gen_range(0..n);
            let h = rng.gen_range(0..n);
            let lhs = self.action(g).mul(self.action(h));
            if &lhs != self.action(self.0.group.mul(g, h)) {
                return Err(Error::Internal(format!(
                    "action({g}) * action({h}) != action({g}{h})"
                )));
            }
        }
        Ok(())
    }

    /// The regular module kG: generators act by left-multiplication
    /// permutation matrices.
    pub fn regular(group: &Arc<Group>, field: &Field) -> ModuleRep {
        let n = group.order();
        let gen_action = group
            .generator_indices()
            .iter()
            .map(|&g| {
                Matrix::from_fn(field, n, n, |i, j| u32::from(i == group.mul(g, j)))
            })
            .collect();
        ModuleRep::new(field, group, gen_action).expect("regular module is always valid")
    }

    /// The trivial one-dimensional module k.
    pub fn trivial(group: &Arc<Group>, field: &Field) -> ModuleRep {
        let gen_action = (0..group.num_generators())
            .map(|_| Matrix::identity(field, 1))
            .collect();
        ModuleRep::new(field, group, gen_action).expect("trivial module is always valid")
    }

    /// A one-dimensional module with prescribed nonzero generator
    /// scalars. The character is verified on 500 random word identities
    /// (exact per word, so honest inputs never fail).
    pub fn one_dim(group: &Arc<Group>, field: &Field, chi: &[Elt]) -> Result<ModuleRep> {
        if chi.len() != group.num_generators() {
            return Err(Error::Shape("one scalar per generator required".into()));
        }
        if chi.iter().any(|&c| c == 0) {
            return Err(Error::RelationViolation);
        }
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1d1d);
        let mut value: Vec<Option<Elt>> = vec![None; group.order()];
        value[0] = Some(1);
        for _ in 0..500 {
            let len = rng.gen_range(0..12);
            let mut elt = 0usize;
            let mut val = 1;
            for _ in 0..len {
                let pos = rng.gen_range(0..group.num_generators());
                elt = group.mul(elt, group.generator_indices()[pos]);
                val = field.mul(val, chi[pos]);
            }
            match value[elt] {
                None => value[elt] = Some(val),
                Some(v) if v == val => {}
                Some(_) => return Err(Error::RelationViolation),
            }
        }
        let gen_action = chi
            .iter()
            .map(|&c| Matrix::from_fn(field, 1, 1, |_, _| c))
            .collect();
        ModuleRep::new(field, group, gen_action)
    }

    /// Contragredient dual: g acts by transpose(action(g^-1)).
    pub fn dual(&self) -> ModuleRep {
        let gen_action = self
            .0
            .gen_action
            .iter()
            .map(|m| {
                m.inverse()
                    .expect("generator actions are invertible")
                    .transpose()
            })
            .collect();
        ModuleRep::new(&self.0.field, &self.0.group, gen_action).expect("dual of a valid module")
    }

    /// Tensor product over k with the diagonal action.
    pub fn tensor(&self, other: &ModuleRep) -> Result<ModuleRep> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if !same_group(self.group(), other.group()) {
            return Err(Error::GroupMismatch);
        }
        let gen_action = self
            .0
            .gen_action
            .iter()
            .zip(&other.0.gen_action)
            .map(|(a, b)| a.kron(b))
            .collect();
        ModuleRep::new(&self.0.field, &self.0.group, gen_action)
    }

    /// External direct sum, with inclusion maps of the parts.
    pub fn direct_sum(parts: &[ModuleRep]) -> Result<(ModuleRep, Vec<ModuleMap>)> {
        let first = parts.first().ok_or_else(|| Error::Shape("empty direct sum".into()))?;
        let field = first.field().clone();
        let group = first.group().clone();
        for p in parts {
            if p.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if !same_group(p.group(), &group) {
                return Err(Error::GroupMismatch);
            }
        }
        let gen_action = (0..group.num_generators())
            .map(|g| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| p.gen_action(g)).collect();
                Matrix::block_diag(&field, &blocks)
            })
            .collect();
        let total = ModuleRep::new(&field, &group, gen_action)?;
        let mut incs = Vec::new();
        let mut offset = 0;
        for p in parts {
            let mut mat = Matrix::zeros(&field, total.dim(), p.dim());
            for j in 0..p.dim() {
                mat.set(offset + j, j, 1);
            }
            incs.push(ModuleMap {
                src: p.clone(),
                dst: total.clone(),
                mat,
            });
            offset += p.dim();
        }
        Ok((total, incs))
    }

    /// Change of basis: the module with action P A P^-1.
    pub fn conjugated(&self, p: &Matrix) -> ModuleRep {
        let pinv = p.inverse().expect("basis change must be invertible");
        let gen_action = self
            .0
            .gen_action
            .iter()
            .map(|a| p.mul(a).mul(&pinv))
            .collect();
        ModuleRep::new(&self.0.field, &self.0.group, gen_action).expect("conjugated module")
    }

    /// Reinterpret over an extension field through the canonical
    /// embedding.
    pub fn extend_scalars(&self, target: &Field) -> Result<ModuleRep> {
        let table = self.0.field.embedding_into(target)?;
        let gen_action = self
            .0
            .gen_action
            .iter()
            .map(|m| {
                Matrix::from_fn(target, m.rows(), m.cols(), |i, j| table[m.get(i, j) as usize])
            })
            .collect();
        ModuleRep::new(target, &self.0.group, gen_action)
    }

    /// Smallest G-stable subspace containing the given vectors, as basis
    /// rows.
    pub fn spin(&self, vectors: &[Vec<Elt>]) -> Matrix {
        spin_under(&self.0.field, self.dim(), &self.0.gen_action, vectors)
    }

    /// The module structure on a G-stable subspace, with its inclusion.
    pub fn submodule(&self, basis_rows: &Matrix) -> Result<(ModuleRep, ModuleMap)> {
        let k = basis_rows.rows();
        let f = &self.0.field;
        if basis_rows.cols() != self.dim() {
            return Err(Error::AmbientMismatch);
        }
        let bt = basis_rows.transpose(); // dim x k
        let mut gen_action = Vec::new();
        for a in &self.0.gen_action {
            let images = a.mul(&bt); // dim x k
            let x = bt.solve_right(&images).ok_or(Error::NotStable)?;
            gen_action.push(x); // k x k
        }
        let sub = ModuleRep::new(f, &self.0.group, gen_action)?;
        let inc = ModuleMap {
            src: sub.clone(),
            dst: self.clone(),
            mat: bt,
        };
        Ok((sub, inc))
    }

    /// The quotient module U/W for G-stable W <= U, with deterministic
    /// representatives (rows of the rref of U not in W) and the
    /// projection U -> U/W expressed on the ambient coordinates.
    pub fn sub_quotient(&self, w_rows: &Matrix, u_rows: &Matrix) -> Result<SubQuotient> {
        let f = &self.0.field;
        let n = self.dim();
        if w_rows.cols() != n || u_rows.cols() != n {
            return Err(Error::AmbientMismatch);
        }
        // stability checks
        for basis in [w_rows, u_rows] {
            let ech = Echelon::from_matrix(basis);
            for a in &self.0.gen_action {
                for r in basis.rows_iter() {
                    if !ech.contains(&a.mul_vec(r)) {
                        return Err(Error::NotStable);
                    }
                }
            }
        }
        let mut wech = Echelon::from_matrix(w_rows);
        let wdim = wech.rank();
        // containment W <= U
        let uech = Echelon::from_matrix(u_rows);
        for r in w_rows.rows_iter() {
            if !uech.contains(r) {
                return Err(Error::NotStable);
            }
        }
        let mut reps: Vec<Vec<Elt>> = Vec::new();
        for r in uech.basis().rows_iter() {
            if wech.insert(r.to_vec()) {
                reps.push(r.to_vec());
            }
        }
        let q = reps.len();
        // full basis: W canonical rows then reps
        let mut rows = Echelon::from_matrix(w_rows).basis().rows_iter().map(|r| r.to_vec()).collect::<Vec<_>>();
        rows.extend(reps.iter().cloned());
        let basis = Matrix::from_rows_with_width(f, rows, n);
        let bt = basis.transpose(); // n x (wdim + q)
        let rep_mat = Matrix::from_rows_with_width(f, reps, n);
        let rep_t = rep_mat.transpose(); // n x q
        let mut gen_action = Vec::new();
        for a in &self.0.gen_action {
            let images = a.mul(&rep_t); // n x q
            let coords = bt.solve_right(&images).ok_or(Error::NotStable)?; // (wdim+q) x q
            gen_action.push(coords.submatrix(wdim..wdim + q, 0..q));
        }
        let module = ModuleRep::new(f, &self.0.group, gen_action)?;
        // projection of any ambient vector lying in U: coords in [W; reps], reps part
        let project = move |v: &[Elt]| -> Option<Vec<Elt>> {
            let col = Matrix::from_fn(bt.field(), v.len(), 1, |i, _| v[i]);
            let x = bt.solve_right(&col)?;
            Some((0..q).map(|i| x.get(wdim + i, 0)).collect())
        };
        Ok(SubQuotient {
            module,
            reps: rep_mat,
            project: Box::new(project),
        })
    }
}

/// Result of a subquotient construction: the module, section
/// representatives as ambient rows, and the projection onto quotient
/// coordinates.
pub struct SubQuotient {
    pub module: ModuleRep,
    pub reps: Matrix,
    pub project: Box<dyn Fn(&[Elt]) -> Option<Vec<Elt>> + Send + Sync>,
}

/// Spin vectors to a stable subspace under a set of generator matrices.
pub fn spin_under(field: &Field, dim: usize, gens: &[Matrix], vectors: &[Vec<Elt>]) -> Matrix {
    let mut ech = Echelon::new(field, dim);
    let mut work: Vec<Vec<Elt>> = Vec::new();
    for v in vectors {
        if ech.insert(v.clone()) {
            work.push(v.clone());
        }
    }
    while let Some(v) = work.pop() {
        for a in gens {
            let w = a.mul_vec(&v);
            if ech.insert(w.clone()) {
                work.push(w);
            }
        }
    }
    ech.basis()
}

/// An equivariant linear map between modules over the same group algebra.
#[derive(Clone)]
pub struct ModuleMap {
    pub src: ModuleRep,
    pub dst: ModuleRep,
    /// dim(dst) x dim(src); applied to column vectors.
    pub mat: Matrix,
}

impl std::fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleMap({} -> {})", self.src.dim(), self.dst.dim())
    }
}

impl ModuleMap {
    pub fn new(src: &ModuleRep, dst: &ModuleRep, mat: Matrix) -> Result<ModuleMap> {
        if src.field() != dst.field() {
            return Err(Error::FieldMismatch);
        }
        if !same_group(src.group(), dst.group()) {
            return Err(Error::GroupMismatch);
        }
        if mat.rows() != dst.dim() || mat.cols() != src.dim() {
            return Err(Error::Shape(format!(
                "map shape {}x{} for dims {} -> {}",
                mat.rows(),
                mat.cols(),
                src.dim(),
                dst.dim()
            )));
        }
        let map = ModuleMap {
            src: src.clone(),
            dst: dst.clone(),
            mat,
        };
        if !map.is_equivariant() {
            return Err(Error::Shape("matrix does not intertwine the actions".into()));
        }
        Ok(map)
    }

    pub fn zero(src: &ModuleRep, dst: &ModuleRep) -> ModuleMap {
        ModuleMap {
            src: src.clone(),
            dst: dst.clone(),
            mat: Matrix::zeros(src.field(), dst.dim(), src.dim()),
        }
    }

    pub fn identity(m: &ModuleRep) -> ModuleMap {
        ModuleMap {
            src: m.clone(),
            dst: m.clone(),
            mat: Matrix::identity(m.field(), m.dim()),
        }
    }

    pub fn is_equivariant(&self) -> bool {
        self.src
            .gen_actions()
            .iter()
            .zip(self.dst.gen_actions())
            .all(|(a, b)| self.mat.mul(a) == b.mul(&self.mat))
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// other then self.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(other.dst.dim(), self.src.dim(), "composition shape");
        ModuleMap {
            src: other.src.clone(),
            dst: self.dst.clone(),
            mat: self.mat.mul(&other.mat),
        }
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn kernel_rows(&self) -> Matrix {
        self.mat.kernel_basis()
    }

    pub fn image_rows(&self) -> Matrix {
        self.mat.transpose().row_space()
    }
}

/// Basis of the space of matrices F with F A_g = B_g F for every pair of
/// generator actions. The generators need not be invertible, so this also
/// serves homs of modules over endomorphism rings.
pub fn intertwiner_basis(
    field: &Field,
    src_gens: &[Matrix],
    dst_gens: &[Matrix],
    dm: usize,
    dn: usize,
) -> Result<Vec<Matrix>> {
    if dm == 0 || dn == 0 {
        return Ok(vec![]);
    }
    let unknowns = dm * dn;
    if unknowns > 4200 {
        return Err(Error::Internal(format!(
            "hom system with {unknowns} unknowns is beyond the dense solver"
        )));
    }
    let f = field;
    let gens = src_gens.len();
    let mut system = Matrix::zeros(f, gens * unknowns, unknowns);
    // F.A_g - B_g.F = 0; unknown F is dn x dm, row-major index i*dm + j
    for (g, (a, b)) in src_gens.iter().zip(dst_gens).enumerate() {
        let base = g * unknowns;
        for i in 0..dn {
            for j in 0..dm {
                let row = base + i * dm + j;
                // sum_k F[i,k] A[k,j]
                for k in 0..dm {
                    let c = a.get(k, j);
                    if c != 0 {
                        let col = i * dm + k;
                        system.set(row, col, f.add(system.get(row, col), c));
                    }
                }
                // - sum_k B[i,k] F[k,j]
                for k in 0..dn {
                    let c = b.get(i, k);
                    if c != 0 {
                        let col = k * dm + j;
                        system.set(row, col, f.sub(system.get(row, col), c));
                    }
                }
            }
        }
    }
    let kernel = system.kernel_basis();
    Ok((0..kernel.rows())
        .map(|r| Matrix::from_vec(f, dn, dm, kernel.row(r).to_vec()))
        .collect())
}

/// Basis of Hom_kG(M, N), solved from the intertwining system over all
/// generators.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<ModuleMap>> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    if !same_group(m.group(), n.group()) {
        return Err(Error::GroupMismatch);
    }
    let mats = intertwiner_basis(
        m.field(),
        m.gen_actions(),
        n.gen_actions(),
        m.dim(),
        n.dim(),
    )?;
    Ok(mats
        .into_iter()
        .map(|mat| ModuleMap {
            src: m.clone(),
            dst: n.clone(),
            mat,
        })
        .collect())
}

/// Restriction to a subgroup realized as a group in its own right.
pub struct EmbeddedSubgroup {
    pub group: Arc<Group>,
    pub parent: Arc<Group>,
    /// element index in `group` -> element index in `parent`
    pub to_parent: Vec<usize>,
    /// element index in `parent` -> element index in `group`
    pub from_parent: Vec<Option<usize>>,
}

impl EmbeddedSubgroup {
    pub fn of(sub: &Subgroup) -> Result<EmbeddedSubgroup> {
        let (group, to_parent) = sub.to_group()?;
        let parent = sub.parent().clone();
        let mut from_parent = vec![None; parent.order()];
        for (i, &p) in to_parent.iter().enumerate() {
            from_parent[p] = Some(i);
        }
        Ok(EmbeddedSubgroup {
            group,
            parent,
            to_parent,
            from_parent,
        })
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.group.order()
    }
}

/// Restrict a module along an embedded subgroup: same underlying space,
/// generator actions pulled from the parent element actions.
pub fn restrict(m: &ModuleRep, h: &EmbeddedSubgroup) -> Result<ModuleRep> {
    if !same_group(m.group(), &h.parent) {
        return Err(Error::GroupMismatch);
    }
    let gen_action = h
        .group
        .generator_indices()
        .iter()
        .map(|&gi| m.action(h.to_parent[gi]).clone())
        .collect();
    ModuleRep::new(m.field(), &h.group, gen_action)
}

/// Induce a module from a subgroup: block-permutation action on a fixed
/// left transversal ordered by parent element index.
pub fn induce(m: &ModuleRep, h: &EmbeddedSubgroup) -> Result<ModuleRep> {
    if !same_group(m.group(), &h.group) {
        return Err(Error::GroupMismatch);
    }
    let g = &h.parent;
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &hp in &h.to_parent {
            coset_of[g.mul(x, hp)] = c;
        }
    }
    let r = reps.len();
    let dm = m.dim();
    let field = m.field();
    let mut gen_action = Vec::new();
    for &s in g.generator_indices() {
        let mut big = Matrix::zeros(field, r * dm, r * dm);
        for (i, &ti) in reps.iter().enumerate() {
            let u = g.mul(s, ti);
            let j = coset_of[u];
            let hp = g.mul(g.inv(reps[j]), u);
            let hs = h.from_parent[hp].expect("coset defect must lie in the subgroup");
            let block = m.action(hs);
            for a in 0..dm {
                for b in 0..dm {
                    let v = block.get(a, b);
                    if v != 0 {
                        big.set(j * dm + a, i * dm + b, v);
                    }
                }
            }
        }
        gen_action.push(big);
    }
    ModuleRep::new(field, g, gen_action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::sylow;
    use crate::presets;

    fn gf(p: u32) -> Field {
        Field::gf(p, 1).unwrap()
    }

    #[test]
    fn regular_module_basics() {
        let c2 = presets::cyclic(2).unwrap();
        let f2 = gf(2);
        let kc2 = ModuleRep::regular(&c2, &f2);
        assert_eq!(kc2.dim(), 2);
        // the generator is the swap matrix
        let swap = Matrix::from_rows(&f2, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(kc2.gen_action(0), &swap);
        assert!(kc2.action(0).is_identity());

        let s3 = presets::symmetric(3).unwrap();
        let ks3 = ModuleRep::regular(&s3, &gf(3));
        assert_eq!(ks3.dim(), 6);
        let mut rng = crate::testutil::rng(1);
        ks3.validate(&mut rng, 200).unwrap();
    }

    #[test]
    fn one_dim_modules() {
        let s3 = presets::symmetric(3).unwrap();
        let f3 = gf(3);
        // generators: 3-cycle, transposition; sign module sends the
        // transposition to -1
        let sign = ModuleRep::one_dim(&s3, &f3, &[1, 2]).unwrap();
        assert_eq!(sign.dim(), 1);
        // a transposition squared is trivial; bad characters are caught
        assert!(ModuleRep::one_dim(&s3, &f3, &[2, 1]).is_err());
        // trivial module
        let k = ModuleRep::trivial(&s3, &f3);
        assert!(hom_space(&k, &sign).unwrap().is_empty());
        assert_eq!(hom_space(&k, &k).unwrap().len(), 1);
    }

    #[test]
    fn hom_space_of_regular_module() {
        let c4 = presets::cyclic(4).unwrap();
        let f2 = gf(2);
        let kc4 = ModuleRep::regular(&c4, &f2);
        assert_eq!(hom_space(&kc4, &kc4).unwrap().len(), 4);
    }

    #[test]
    fn dual_and_double_dual() {
        let s3 = presets::symmetric(3).unwrap();
        let f3 = gf(3);
        let ks3 = ModuleRep::regular(&s3, &f3);
        let d = ks3.dual();
        assert_eq!(d.dim(), 6);
        let dd = d.dual();
        // natural isomorphism: the identity matrix intertwines M and M**
        for (a, b) in ks3.gen_actions().iter().zip(dd.gen_actions()) {
            assert_eq!(a, b);
        }
        let k = ModuleRep::trivial(&s3, &f3);
        assert_eq!(k.dual().gen_actions()[1].get(0, 0), 1);
    }

    #[test]
    fn tensor_unit_and_sign_square() {
        let s3 = presets::symmetric(3).unwrap();
        let f3 = gf(3);
        let k = ModuleRep::trivial(&s3, &f3);
        let sign = ModuleRep::one_dim(&s3, &f3, &[1, 2]).unwrap();
        let kk = sign.tensor(&sign).unwrap();
        // sign tensor sign is trivial
        assert!(kk.gen_actions().iter().all(|m| m.is_identity()));
        let ks3 = ModuleRep::regular(&s3, &f3);
        let t = k.tensor(&ks3).unwrap();
        assert_eq!(t.dim(), 6);
        for (a, b) in t.gen_actions().iter().zip(ks3.gen_actions()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn spin_examples() {
        let c2 = presets::cyclic(2).unwrap();
        let f2 = gf(2);
        let kc2 = ModuleRep::regular(&c2, &f2);
        // norm vector spans the one-dimensional socle
        let norm = vec![1, 1];
        let s = kc2.spin(&[norm]);
        assert_eq!(s.rows(), 1);
        assert_eq!(kc2.spin(&[vec![1, 0], vec![0, 1]]).rows(), 2);
        assert_eq!(kc2.spin(&[]).rows(), 0);
    }

    #[test]
    fn restriction_and_induction() {
        let c6 = presets::cyclic(6).unwrap();
        let f3 = gf(3);
        let c3 = sylow(&c6, 3).unwrap();
        let h = EmbeddedSubgroup::of(&c3).unwrap();
        assert_eq!(h.index(), 2);
        // restriction of the regular module is free of rank [G:H]
        let kc6 = ModuleRep::regular(&c6, &f3);
        let res = restrict(&kc6, &h).unwrap();
        assert_eq!(res.dim(), 6);
        let kh = ModuleRep::regular(&h.group, &f3);
        assert_eq!(hom_space(&kh, &res).unwrap().len(), 2 * 3);
        // induction of the trivial module has dimension [G:H]
        let k_h = ModuleRep::trivial(&h.group, &f3);
        let ind = induce(&k_h, &h).unwrap();
        assert_eq!(ind.dim(), 2);
        let mut rng = crate::testutil::rng(3);
        ind.validate(&mut rng, 100).unwrap();
    }

    #[test]
    fn frobenius_reciprocity_dimensions() {
        use rand::Rng;
        let s3 = presets::symmetric(3).unwrap();
        let f3 = gf(3);
        let c3 = sylow(&s3, 3).unwrap();
        let h = EmbeddedSubgroup::of(&c3).unwrap();
        let k_h = ModuleRep::trivial(&h.group, &f3);
        let ind = induce(&k_h, &h).unwrap();
        let mut rng = crate::testutil::rng(17);
        for _ in 0..20 {
            // random small module: conjugated sum of known pieces
            let base = match rng.gen_range(0..3) {
                0 => ModuleRep::regular(&s3, &f3),
                1 => ModuleRep::trivial(&s3, &f3),
                _ => ModuleRep::one_dim(&s3, &f3, &[1, 2]).unwrap(),
            };
            let lhs = hom_space(&ind, &base).unwrap().len();
            let rhs = hom_space(&k_h, &restrict(&base, &h).unwrap()).unwrap().len();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn extend_scalars_preserves_structure() {
        let c6 = presets::cyclic(6).unwrap();
        let f2 = gf(2);
        let f4 = Field::gf(2, 2).unwrap();
        let kc6 = ModuleRep::regular(&c6, &f2);
        let ext = kc6.extend_scalars(&f4).unwrap();
        assert_eq!(ext.dim(), 6);
        assert_eq!(ext.field(), &f4);
        let k = ModuleRep::trivial(&c6, &f2);
        let ek = k.extend_scalars(&f4).unwrap();
        assert!(ek.gen_actions()[0].is_identity());
        assert!(kc6.extend_scalars(&gf(3)).is_err());
    }

    #[test]
    fn sub_quotient_uniserial_chain() {
        let c4 = presets::cyclic(4).unwrap();
        let f2 = gf(2);
        let kc4 = ModuleRep::regular(&c4, &f2);
        // radical of kC_4 = image of (g - 1); socle = fixed points
        let g = kc4.gen_action(0).clone();
        let gm1 = g.sub(&Matrix::identity(&f2, 4));
        let rad = gm1.transpose().row_space();
        assert_eq!(rad.rows(), 3);
        let soc = gm1.kernel_basis();
        assert_eq!(soc.rows(), 1);
        let sq = kc4.sub_quotient(&soc, &rad).unwrap();
        assert_eq!(sq.module.dim(), 2);
        // quotient by zero gives the module back
        let zero = Matrix::zeros(&f2, 0, 4);
        let full = Matrix::identity(&f2, 4);
        let whole = kc4.sub_quotient(&zero, &full).unwrap();
        assert_eq!(whole.module.dim(), 4);
        // non-stable subspace is rejected
        let bad = Matrix::from_rows(&f2, vec![vec![1, 0, 0, 0]]);
        assert!(kc4.sub_quotient(&zero, &bad).is_err());
    }

    #[test]
    fn hom_dimension_is_isomorphism_invariant() {
        let s3 = presets::symmetric(3).unwrap();
        let f3 = gf(3);
        let ks3 = ModuleRep::regular(&s3, &f3);
        let mut rng = crate::testutil::rng(29);
        let k = ModuleRep::trivial(&s3, &f3);
        let before = hom_space(&ks3, &k).unwrap().len();
        for _ in 0..5 {
            let p = loop {
                let cand = Matrix::random(&f3, 6, 6, &mut rng);
                if cand.inverse().is_some() {
                    break cand;
                }
            };
            let conj = ks3.conjugated(&p);
            assert_eq!(hom_space(&conj, &k).unwrap().len(), before);
        }
    }
}
