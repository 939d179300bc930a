//! Structural analysis of modules: irreducibility (Norton's criterion),
//! composition factors, Jacobson radical, radical/socle, endomorphism
//! rings, certified Krull-Schmidt decomposition, isomorphism testing,
//! projective covers.
//!
//! Indecomposability is never assumed from failed random splitting: a
//! summand is only reported indecomposable when its endomorphism ring is
//! certified local (all composition factors of the module over its own
//! endomorphism ring are isomorphic to a single simple S with
//! dim End(S) = dim S, which pins End/J(End) to a division ring).
//! Budget exhaustion without certification is an explicit `Undecided`
//! error.
//!
//! The central [`Algebra`] type caches the regular module, the simple
//! catalog, the radical and the PIM catalog per (group, field) pair.

use crate::error::{Error, Result};
use crate::field::{Elt, Field};
use crate::group::Group;
use crate::matrix::{Echelon, Matrix};
use crate::module::{hom_space, spin_under, ModuleMap, ModuleRep};
use crate::poly::{crt_selectors, min_poly};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::{Arc, Mutex, OnceLock};

pub const DEFAULT_SEED: u64 = 20260;
/// Default number of random endomorphisms tried before certification.
pub const DEFAULT_ENDO_BUDGET: usize = 200;

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The group algebra kG with its cached structural data.
pub struct Algebra {
    group: Arc<Group>,
    field: Field,
    regular: OnceLock<ModuleRep>,
    trivial: OnceLock<ModuleRep>,
    simples: OnceLock<Vec<ModuleRep>>,
    jacobson: OnceLock<Matrix>,
    pims: OnceLock<std::result::Result<PimCatalog, String>>,
    pub(crate) blocks: OnceLock<crate::blocks::BlockSet>,
    pub(crate) syzygies: Mutex<crate::stable::SyzygyCache>,
    pub(crate) period_cache: Mutex<Option<(usize, Option<crate::stable::PeriodCertificate>)>>,
}

impl Algebra {
    pub fn new(group: &Arc<Group>, field: &Field) -> Algebra {
        Algebra {
            group: group.clone(),
            field: field.clone(),
            regular: OnceLock::new(),
            trivial: OnceLock::new(),
            simples: OnceLock::new(),
            jacobson: OnceLock::new(),
            pims: OnceLock::new(),
            blocks: OnceLock::new(),
            syzygies: Mutex::new(Default::default()),
            period_cache: Mutex::new(None),
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn regular(&self) -> &ModuleRep {
        self.regular
            .get_or_init(|| ModuleRep::regular(&self.group, &self.field))
    }

    pub fn trivial(&self) -> &ModuleRep {
        self.trivial
            .get_or_init(|| ModuleRep::trivial(&self.group, &self.field))
    }

    /// p^n, the order of a Sylow p-subgroup for p the field
    /// characteristic.
    pub fn p_part(&self) -> usize {
        self.group.p_part(self.field.characteristic())
    }

    // ---- group algebra element arithmetic (coefficient vectors over G) ----

    pub fn unit(&self) -> Vec<Elt> {
        let mut e = vec![0; self.group.order()];
        e[0] = 1;
        e
    }

    pub fn mul_alg(&self, a: &[Elt], b: &[Elt]) -> Vec<Elt> {
        let f = &self.field;
        let n = self.group.order();
        let mut out = vec![0; n];
        for (g, &cg) in a.iter().enumerate() {
            if cg == 0 {
                continue;
            }
            for (h, &ch) in b.iter().enumerate() {
                if ch != 0 {
                    let k = self.group.mul(g, h);
                    out[k] = f.add(out[k], f.mul(cg, ch));
                }
            }
        }
        out
    }

    /// Matrix of x -> x * a on kG.
    pub fn right_mult_matrix(&self, a: &[Elt]) -> Matrix {
        let n = self.group.order();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            for (h, &c) in a.iter().enumerate() {
                if c != 0 {
                    let i = self.group.mul(j, h);
                    m.set(i, j, self.field.add(m.get(i, j), c));
                }
            }
        }
        m
    }

    /// Matrix of x -> a * x on kG.
    pub fn left_mult_matrix(&self, a: &[Elt]) -> Matrix {
        let n = self.group.order();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            for (h, &c) in a.iter().enumerate() {
                if c != 0 {
                    let i = self.group.mul(h, j);
                    m.set(i, j, self.field.add(m.get(i, j), c));
                }
            }
        }
        m
    }

    /// Sum of coefficients (the augmentation kG -> k).
    pub fn augmentation(&self, a: &[Elt]) -> Elt {
        a.iter().fold(0, |acc, &c| self.field.add(acc, c))
    }

    // ---- catalogs ----

    /// The simple catalog: pairwise non-isomorphic simples discovered
    /// from the regular module (every simple embeds in kG). The trivial
    /// module is always entry 0.
    pub fn simples(&self) -> &Vec<ModuleRep> {
        self.simples.get_or_init(|| {
            let mut rng = rng_from(DEFAULT_SEED);
            let factors = chop(self.regular(), &mut rng).expect("chopping kG must terminate");
            let mut catalog: Vec<ModuleRep> = Vec::new();
            for s in factors {
                if !catalog.iter().any(|t| simple_isomorphic(t, &s)) {
                    catalog.push(s);
                }
            }
            // the trivial module first, the rest by dimension then order found
            let triv = catalog
                .iter()
                .position(is_trivial_module)
                .expect("k is always a composition factor of kG");
            catalog.swap(0, triv);
            catalog[1..].sort_by_key(|m| m.dim());
            catalog
        })
    }

    pub fn simple_index_of(&self, m: &ModuleRep) -> Option<usize> {
        self.simples().iter().position(|s| simple_isomorphic(s, m))
    }

    /// Basis of the Jacobson radical J(kG) as rows of coefficient
    /// vectors: the kernel of kG -> direct sum of End(S) over the simple
    /// catalog.
    pub fn jacobson_radical(&self) -> &Matrix {
        self.jacobson.get_or_init(|| {
            let simples = self.simples();
            let n = self.group.order();
            let total: usize = simples.iter().map(|s| s.dim() * s.dim()).sum();
            let mut b = Matrix::zeros(&self.field, total, n);
            for g in 0..n {
                let mut row = 0;
                for s in simples {
                    let act = s.action(g);
                    for i in 0..s.dim() {
                        for j in 0..s.dim() {
                            b.set(row, g, act.get(i, j));
                            row += 1;
                        }
                    }
                }
            }
            b.kernel_basis()
        })
    }

    /// rad M = J(kG) . M, as basis rows.
    pub fn radical_rows(&self, m: &ModuleRep) -> Matrix {
        let j = self.jacobson_radical();
        let mut ech = Echelon::new(&self.field, m.dim());
        for r in 0..j.rows() {
            let act = m.algebra_action(j.row(r));
            for c in 0..act.cols() {
                let col: Vec<Elt> = (0..act.rows()).map(|i| act.get(i, c)).collect();
                ech.insert(col);
            }
        }
        ech.basis()
    }

    /// soc M = {v : J v = 0}, as basis rows.
    pub fn socle_rows(&self, m: &ModuleRep) -> Matrix {
        let j = self.jacobson_radical();
        if j.rows() == 0 {
            return Matrix::identity(&self.field, m.dim());
        }
        let mut stacked: Option<Matrix> = None;
        for r in 0..j.rows() {
            let act = m.algebra_action(j.row(r));
            stacked = Some(match stacked {
                None => act,
                Some(s) => s.vstack(&act),
            });
        }
        stacked.unwrap().kernel_basis()
    }

    /// The semisimple quotient M/rad M with its projection data.
    pub fn top(&self, m: &ModuleRep) -> Result<crate::module::SubQuotient> {
        let rad = self.radical_rows(m);
        m.sub_quotient(&rad, &Matrix::identity(&self.field, m.dim()))
    }

    /// Basis of End_kG(M) together with structure constants.
    pub fn endomorphism_algebra(&self, m: &ModuleRep) -> Result<EndAlgebra> {
        let basis = self.endo_basis(m)?;
        Ok(EndAlgebra::from_basis(&self.field, m.dim(), basis))
    }

    fn endo_basis(&self, m: &ModuleRep) -> Result<Vec<Matrix>> {
        if std::ptr::eq(m as *const _, self.regular() as *const _) || is_same_rep(m, self.regular())
        {
            // End(kG) = right multiplications by the element basis
            let mut e = vec![0; self.group.order()];
            return Ok((0..self.group.order())
                .map(|g| {
                    e[g] = 1;
                    let mat = self.right_mult_matrix(&e);
                    e[g] = 0;
                    mat
                })
                .collect());
        }
        Ok(hom_space(m, m)?.into_iter().map(|f| f.mat).collect())
    }

    // ---- decomposition ----

    /// Certified Krull-Schmidt decomposition.
    pub fn decompose(&self, m: &ModuleRep, seed: u64) -> Result<Decomposition> {
        self.decompose_with_budget(m, seed, DEFAULT_ENDO_BUDGET)
    }

    pub fn decompose_with_budget(
        &self,
        m: &ModuleRep,
        seed: u64,
        budget: usize,
    ) -> Result<Decomposition> {
        if m.dim() > 1000 {
            return Err(Error::Internal(format!(
                "decompose capped at dimension 1000, got {}",
                m.dim()
            )));
        }
        if is_same_rep(m, self.regular()) {
            return self.decompose_regular(seed, budget);
        }
        let mut rng = rng_from(seed);
        let mut out: Vec<Summand> = Vec::new();
        let mut stack: Vec<(ModuleRep, Matrix)> = vec![(m.clone(), Matrix::identity(&self.field, m.dim()))];
        while let Some((piece, inc)) = stack.pop() {
            if piece.dim() == 0 {
                continue;
            }
            let endos = self.endo_basis(&piece)?;
            if endos.len() == 1 {
                out.push(Summand {
                    module: piece,
                    inclusion: inc,
                    certified: true,
                });
                continue;
            }
            match try_split(&piece, &endos, &mut rng, budget) {
                Some(parts) => {
                    for rows in parts {
                        let (sub, local_inc) = piece.submodule(&rows)?;
                        stack.push((sub, inc.mul(&local_inc.mat)));
                    }
                }
                None => {
                    if certify_local(&self.field, piece.dim(), &endos, &mut rng)? {
                        out.push(Summand {
                            module: piece,
                            inclusion: inc,
                            certified: true,
                        });
                    } else {
                        return Err(Error::Undecided(format!(
                            "dim-{} summand did not split within budget {} but its endomorphism ring is not local",
                            piece.dim(),
                            budget
                        )));
                    }
                }
            }
        }
        out.sort_by_key(|s| std::cmp::Reverse(s.module.dim()));
        let dec = Decomposition {
            summands: out,
            seed,
            total_dim: m.dim(),
        };
        dec.check_witness(&self.field)?;
        Ok(dec)
    }

    /// Decomposition of the regular module through chains of orthogonal
    /// idempotents: every summand is kG.e with e recorded, which later
    /// powers the cheap Hom(kG.e, M) = e.M computations.
    fn decompose_regular(&self, seed: u64, budget: usize) -> Result<Decomposition> {
        let pieces = self.regular_pieces(seed, budget)?;
        let reg = self.regular().clone();
        let mut summands = Vec::new();
        for (_, basis) in pieces {
            let (module, inc) = reg.submodule(&basis)?;
            summands.push(Summand {
                module,
                inclusion: inc.mat,
                certified: true,
            });
        }
        summands.sort_by_key(|s| std::cmp::Reverse(s.module.dim()));
        let dec = Decomposition {
            summands,
            seed,
            total_dim: self.group.order(),
        };
        dec.check_witness(&self.field)?;
        Ok(dec)
    }

    /// Orthogonal primitive idempotents e with their kG.e bases.
    fn regular_pieces(&self, seed: u64, budget: usize) -> Result<Vec<(Vec<Elt>, Matrix)>> {
        let mut rng = rng_from(seed);
        let n = self.group.order();
        let mut done: Vec<(Vec<Elt>, Matrix)> = Vec::new(); // (idempotent, basis rows)
        let mut stack = vec![self.unit()];
        while let Some(e) = stack.pop() {
            let basis = self.right_mult_matrix(&e).column_space();
            let k = basis.rows();
            if k == 0 {
                continue;
            }
            let bt = basis.transpose();
            let mut split = None;
            for _ in 0..budget {
                let a: Vec<Elt> = (0..n).map(|_| self.field.sample(&mut rng)).collect();
                let z = self.mul_alg(&self.mul_alg(&e, &a), &e);
                let f_on_l = bt
                    .solve_right(&self.right_mult_matrix(&z).mul(&bt))
                    .ok_or_else(|| Error::Internal("right multiplication must stabilize kG.e".into()))?;
                let mp = min_poly(&f_on_l);
                let facs = mp.factor()?;
                if facs.len() < 2 {
                    continue;
                }
                let sels = crt_selectors(&facs);
                let mut pieces = Vec::new();
                let mut total = vec![0; n];
                for sel in &sels {
                    // sel(z) in kG, then e_i = e * sel(z)
                    let mut acc = vec![0; n];
                    let mut zpow = self.unit();
                    for d in 0..=sel.degree().unwrap_or(0) {
                        let c = sel.coeff(d);
                        if c != 0 {
                            for (slot, &zp) in acc.iter_mut().zip(&zpow) {
                                *slot = self.field.add(*slot, self.field.mul(c, zp));
                            }
                        }
                        zpow = self.mul_alg(&zpow, &z);
                    }
                    let ei = self.mul_alg(&e, &acc);
                    if self.mul_alg(&ei, &ei) != ei {
                        return Err(Error::Internal("primary projector is not idempotent".into()));
                    }
                    for (t, &c) in total.iter_mut().zip(&ei) {
                        *t = self.field.add(*t, c);
                    }
                    pieces.push(ei);
                }
                if total != e {
                    return Err(Error::Internal("primary idempotents do not sum back".into()));
                }
                split = Some(pieces);
                break;
            }
            match split {
                Some(pieces) => stack.extend(pieces),
                None => {
                    // certify End(kG.e) = (e kG e)^op local
                    let ekge = self
                        .left_mult_matrix(&e)
                        .mul(&self.right_mult_matrix(&e))
                        .column_space();
                    let mut endos = Vec::new();
                    for r in 0..ekge.rows() {
                        let x = bt
                            .solve_right(&self.right_mult_matrix(ekge.row(r)).mul(&bt))
                            .ok_or_else(|| Error::Internal("eKGe must stabilize kG.e".into()))?;
                        endos.push(x);
                    }
                    if certify_local(&self.field, k, &endos, &mut rng)? {
                        done.push((e, basis));
                    } else {
                        return Err(Error::Undecided(format!(
                            "regular summand of dim {k} did not split within budget {budget} but e.kG.e is not local"
                        )));
                    }
                }
            }
        }
        let covered: usize = done.iter().map(|(_, b)| b.rows()).sum();
        if covered != n {
            return Err(Error::Internal("idempotent pieces do not fill kG".into()));
        }
        Ok(done)
    }

    /// The projective indecomposable catalog: decompose kG, group the
    /// summands by isomorphism, record idempotents and tops.
    pub fn pim_catalog(&self) -> Result<&PimCatalog> {
        let out = self.pims.get_or_init(|| {
            self.build_pim_catalog(DEFAULT_SEED)
                .map_err(|e| e.to_string())
        });
        out.as_ref().map_err(|msg| Error::Undecided(msg.clone()))
    }

    fn build_pim_catalog(&self, seed: u64) -> Result<PimCatalog> {
        let pieces = self.regular_pieces(seed, DEFAULT_ENDO_BUDGET)?;
        let reg = self.regular().clone();
        let mut entries: Vec<(ModuleRep, Matrix, Vec<Elt>)> = Vec::new();
        for (e, basis) in pieces {
            let (module, _) = reg.submodule(&basis)?;
            entries.push((module, basis, e));
        }
        // group by isomorphism
        let mut pims: Vec<Pim> = Vec::new();
        for (module, basis, idem) in entries {
            let mut matched = false;
            for p in pims.iter_mut() {
                if p.module.dim() == module.dim()
                    && self.indecomposable_isomorphic(&p.module, &module)?.is_some()
                {
                    p.multiplicity += 1;
                    matched = true;
                    break;
                }
            }
            if !matched {
                let top_q = self.top(&module)?;
                let top_idx = self
                    .simple_index_of(&top_q.module)
                    .ok_or_else(|| Error::Internal("PIM top is not a catalogued simple".into()))?;
                pims.push(Pim {
                    module,
                    basis,
                    idempotent: idem,
                    top: top_idx,
                    multiplicity: 1,
                });
            }
        }
        let total: usize = pims.iter().map(|p| p.module.dim() * p.multiplicity).sum();
        if total != self.group.order() {
            return Err(Error::Internal(
                "PIM multiplicities do not fill the regular module".into(),
            ));
        }
        if pims.len() != self.simples().len() {
            return Err(Error::Internal(
                "PIM classes do not biject with the simples".into(),
            ));
        }
        pims.sort_by_key(|p| p.top);
        Ok(PimCatalog { pims, seed })
    }

    /// The PIM covering a given simple (by catalog index).
    pub fn pim_of(&self, simple_idx: usize) -> Result<&Pim> {
        let cat = self.pim_catalog()?;
        cat.pims
            .iter()
            .find(|p| p.top == simple_idx)
            .ok_or_else(|| Error::Internal("missing PIM for simple".into()))
    }

    /// Minimal projective cover P -> M: P is a sum of PIM copies matching
    /// the top of M, the surjection is assembled from idempotent-image
    /// vectors, and its kernel is the syzygy.
    pub fn projective_cover(&self, m: &ModuleRep) -> Result<Cover> {
        if m.dim() == 0 {
            let p = zero_module(&self.field, &self.group);
            return Ok(Cover {
                module: p.clone(),
                map: ModuleMap::zero(&p, m),
                pim_indices: vec![],
            });
        }
        let simples = self.simples().clone();
        let rad = self.radical_rows(m);
        let mut covered = Echelon::from_matrix(&rad);
        let mut chosen: Vec<(usize, Vec<Elt>)> = Vec::new(); // (pim index in catalog, v)
        let mut expected_dim = 0usize;
        let pim_count = self.pim_catalog()?.pims.len();
        for s_idx in 0..simples.len() {
            let s = &simples[s_idx];
            let end_s = hom_space(s, s)?.len();
            let mult = hom_space(m, s)?.len() / end_s;
            if mult == 0 {
                continue;
            }
            let pim_pos = (0..pim_count)
                .find(|&i| self.pim_catalog().unwrap().pims[i].top == s_idx)
                .ok_or_else(|| Error::Internal("missing PIM".into()))?;
            let pim = &self.pim_catalog()?.pims[pim_pos];
            expected_dim += mult * pim.module.dim();
            let e_on_m = m.algebra_action(&pim.idempotent);
            let candidates = e_on_m.column_space();
            let mut taken = 0;
            for r in 0..candidates.rows() {
                if taken == mult {
                    break;
                }
                let v = candidates.row(r).to_vec();
                if covered.contains(&v) {
                    continue;
                }
                // accept: grow the covered space by the cyclic module kG.v
                let spun = m.spin(&[v.clone()]);
                for row in spun.rows_iter() {
                    covered.insert(row.to_vec());
                }
                chosen.push((pim_pos, v));
                taken += 1;
            }
            if taken != mult {
                return Err(Error::Internal(
                    "projective cover lifting system inconsistent: too few idempotent images".into(),
                ));
            }
        }
        // assemble P = direct sum of the chosen PIM copies and the map
        let cat = self.pim_catalog()?;
        let parts: Vec<ModuleRep> = chosen
            .iter()
            .map(|(i, _)| cat.pims[*i].module.clone())
            .collect();
        if parts.is_empty() {
            return Err(Error::Internal("module with empty top".into()));
        }
        let (p, incs) = ModuleRep::direct_sum(&parts)?;
        if p.dim() != expected_dim {
            return Err(Error::Internal("cover dimension mismatch".into()));
        }
        let mut mat = Matrix::zeros(&self.field, m.dim(), p.dim());
        let mut col = 0;
        for (i, v) in &chosen {
            let pim = &cat.pims[*i];
            // images g.v for all group elements
            let mut gv = Matrix::zeros(&self.field, m.dim(), self.group.order());
            for g in 0..self.group.order() {
                let image = m.action(g).mul_vec(v);
                for (row, &val) in image.iter().enumerate() {
                    gv.set(row, g, val);
                }
            }
            // phi(basis_j) = basis_j . v
            let phi = gv.mul(&pim.basis.transpose());
            for j in 0..pim.module.dim() {
                for row in 0..m.dim() {
                    mat.set(row, col + j, phi.get(row, j));
                }
            }
            col += pim.module.dim();
        }
        let _ = incs;
        let map = ModuleMap::new(&p, m, mat)?;
        if map.rank() != m.dim() {
            return Err(Error::Internal("projective cover is not surjective".into()));
        }
        Ok(Cover {
            module: p,
            map,
            pim_indices: chosen.iter().map(|(i, _)| *i).collect(),
        })
    }

    /// True iff every indecomposable summand is a PIM. Cross-check: a
    /// projective module has dimension divisible by the Sylow order.
    pub fn is_projective(&self, m: &ModuleRep, seed: u64) -> Result<bool> {
        if m.dim() == 0 {
            return Ok(true);
        }
        if m.dim() % self.p_part() != 0 {
            return Ok(false);
        }
        let dec = self.decompose(m, seed)?;
        let cat = self.pim_catalog()?;
        for s in &dec.summands {
            let mut is_pim = false;
            for p in &cat.pims {
                if p.module.dim() == s.module.dim()
                    && self.indecomposable_isomorphic(&p.module, &s.module)?.is_some()
                {
                    is_pim = true;
                    break;
                }
            }
            if !is_pim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Isomorphism test with witness. Fast paths: dimension mismatch,
    /// empty hom space, random invertible combinations, exhaustive search
    /// over tiny hom spaces; otherwise both sides are decomposed and the
    /// indecomposable summands matched pairwise.
    pub fn is_isomorphic(&self, m: &ModuleRep, n: &ModuleRep, seed: u64) -> Result<Option<Matrix>> {
        if m.dim() != n.dim() {
            return Ok(None);
        }
        if m.dim() == 0 {
            return Ok(Some(Matrix::zeros(&self.field, 0, 0)));
        }
        if m.gen_actions() == n.gen_actions() {
            return Ok(Some(Matrix::identity(&self.field, m.dim())));
        }
        let homs = hom_space(m, n)?;
        if homs.is_empty() {
            return Ok(None);
        }
        let mut rng = rng_from(seed);
        // single basis elements, then random combinations
        for f in &homs {
            if let Some(_) = f.mat.inverse() {
                return Ok(Some(f.mat.clone()));
            }
        }
        for _ in 0..20 {
            let mut acc = Matrix::zeros(&self.field, n.dim(), m.dim());
            for f in &homs {
                let c = self.field.sample(&mut rng);
                if c != 0 {
                    acc = acc.add(&f.mat.scale(c));
                }
            }
            if acc.inverse().is_some() {
                return Ok(Some(acc));
            }
        }
        // exhaustive over the hom space when it is small enough
        let h = homs.len() as u32;
        let qf = self.field.order() as u64;
        if (qf as f64).powi(h as i32) <= (1u64 << 20) as f64 {
            let mut counters = vec![0u32; homs.len()];
            loop {
                let mut acc = Matrix::zeros(&self.field, n.dim(), m.dim());
                for (f, &c) in homs.iter().zip(&counters) {
                    if c != 0 {
                        acc = acc.add(&f.mat.scale(c));
                    }
                }
                if !acc.is_zero() && acc.inverse().is_some() {
                    return Ok(Some(acc));
                }
                // increment the mixed-radix counter
                let mut i = 0;
                loop {
                    if i == counters.len() {
                        return Ok(None);
                    }
                    counters[i] += 1;
                    if counters[i] < qf as u32 {
                        break;
                    }
                    counters[i] = 0;
                    i += 1;
                }
            }
        }
        // decompose both and match summands
        let dm = self.decompose(m, seed)?;
        let dn = self.decompose(n, seed.wrapping_add(1))?;
        if dm.summands.len() != dn.summands.len() {
            return Ok(None);
        }
        let mut used = vec![false; dn.summands.len()];
        let mut pairs = Vec::new();
        for sm in &dm.summands {
            let mut found = None;
            for (j, sn) in dn.summands.iter().enumerate() {
                if used[j] || sn.module.dim() != sm.module.dim() {
                    continue;
                }
                if let Some(w) = self.indecomposable_isomorphic(&sm.module, &sn.module)? {
                    found = Some((j, w));
                    break;
                }
            }
            match found {
                Some((j, w)) => {
                    used[j] = true;
                    pairs.push((j, w));
                }
                None => return Ok(None),
            }
        }
        // assemble the global witness: N_inc_j . w . M_proj_i summed
        let wm = dm.witness(&self.field);
        let wm_inv = wm
            .inverse()
            .ok_or_else(|| Error::Internal("decomposition witness not invertible".into()))?;
        let mut acc = Matrix::zeros(&self.field, n.dim(), m.dim());
        let mut m_off = 0;
        for (si, (j, w)) in dm.summands.iter().zip(&pairs) {
            let dn_off: usize = dn.summands[..*j].iter().map(|s| s.module.dim()).sum();
            // projection onto summand si in M coordinates
            let proj = wm_inv.submatrix(m_off..m_off + si.module.dim(), 0..m.dim());
            let inc = &dn.summands[*j].inclusion;
            let _ = dn_off;
            acc = acc.add(&inc.mul(w).mul(&proj));
            m_off += si.module.dim();
        }
        if acc.inverse().is_none() {
            return Err(Error::Internal("assembled isomorphism is not invertible".into()));
        }
        Ok(Some(acc))
    }

    /// Isomorphism test for modules known (certified) indecomposable:
    /// scan the hom basis for an invertible element. If an isomorphism
    /// exists, the non-isomorphisms form a proper subspace of the hom
    /// space, so a basis cannot avoid the isomorphisms; if none exists,
    /// no element is invertible.
    pub fn indecomposable_isomorphic(
        &self,
        m: &ModuleRep,
        n: &ModuleRep,
    ) -> Result<Option<Matrix>> {
        if m.dim() != n.dim() {
            return Ok(None);
        }
        for f in hom_space(m, n)? {
            if f.mat.inverse().is_some() {
                return Ok(Some(f.mat));
            }
        }
        Ok(None)
    }

    /// Composition factors as multiplicities over the simple catalog.
    pub fn composition_factors(&self, m: &ModuleRep, seed: u64) -> Result<Vec<usize>> {
        let mut rng = rng_from(seed);
        let factors = chop(m, &mut rng)?;
        let mut counts = vec![0usize; self.simples().len()];
        for f in &factors {
            let idx = self
                .simple_index_of(f)
                .ok_or_else(|| Error::Internal("composition factor not in catalog".into()))?;
            counts[idx] += 1;
        }
        Ok(counts)
    }
}

pub fn zero_module(field: &Field, group: &Arc<Group>) -> ModuleRep {
    let gens = (0..group.num_generators())
        .map(|_| Matrix::zeros(field, 0, 0))
        .collect();
    ModuleRep::new(field, group, gens).expect("zero module")
}

pub fn is_trivial_module(m: &ModuleRep) -> bool {
    m.dim() == 1 && m.gen_actions().iter().all(|a| a.is_identity())
}

fn is_same_rep(a: &ModuleRep, b: &ModuleRep) -> bool {
    a.dim() == b.dim() && a.gen_actions() == b.gen_actions()
}

/// Isomorphism of simple modules: by Schur's lemma any nonzero hom
/// between simples of equal dimension is invertible.
pub fn simple_isomorphic(a: &ModuleRep, b: &ModuleRep) -> bool {
    a.dim() == b.dim()
        && !hom_space(a, b)
            .map(|h| h.is_empty())
            .unwrap_or(true)
}

#[derive(Clone)]
pub struct Summand {
    pub module: ModuleRep,
    /// dim(M) x dim(summand): columns are the summand basis inside M.
    pub inclusion: Matrix,
    pub certified: bool,
}

#[derive(Clone)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub seed: u64,
    pub total_dim: usize,
}

impl Decomposition {
    /// The basis-change witness: columns of all inclusions side by side.
    pub fn witness(&self, field: &Field) -> Matrix {
        let mut w = Matrix::zeros(field, self.total_dim, self.total_dim);
        let mut col = 0;
        for s in &self.summands {
            for j in 0..s.module.dim() {
                for i in 0..self.total_dim {
                    w.set(i, col + j, s.inclusion.get(i, j));
                }
            }
            col += s.module.dim();
        }
        w
    }

    fn check_witness(&self, field: &Field) -> Result<()> {
        let dims: usize = self.summands.iter().map(|s| s.module.dim()).sum();
        if dims != self.total_dim {
            return Err(Error::Internal("summand dimensions do not add up".into()));
        }
        if self.total_dim > 0 && self.witness(field).inverse().is_none() {
            return Err(Error::Internal("decomposition witness is singular".into()));
        }
        Ok(())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.module.dim()).collect()
    }

    pub fn all_certified(&self) -> bool {
        self.summands.iter().all(|s| s.certified)
    }
}

/// Basis of an endomorphism ring with its structure constants.
pub struct EndAlgebra {
    pub dim_module: usize,
    pub basis: Vec<Matrix>,
    /// constants[i][j] = coordinates of basis[i] * basis[j] in the basis.
    pub constants: Vec<Vec<Vec<Elt>>>,
}

impl EndAlgebra {
    fn from_basis(field: &Field, dim_module: usize, basis: Vec<Matrix>) -> EndAlgebra {
        let rows: Vec<Vec<Elt>> = basis.iter().map(|b| b.vectorize()).collect();
        let bmat = Matrix::from_rows_with_width(field, rows, dim_module * dim_module);
        let bt = bmat.transpose();
        let mut constants = Vec::with_capacity(basis.len());
        for a in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in &basis {
                let prod = a.mul(b).vectorize();
                let col = Matrix::from_fn(field, prod.len(), 1, |i, _| prod[i]);
                let x = bt
                    .solve_right(&col)
                    .expect("endomorphism ring closed under composition");
                row.push((0..basis.len()).map(|i| x.get(i, 0)).collect());
            }
            constants.push(row);
        }
        EndAlgebra {
            dim_module,
            basis,
            constants,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Try to split a module with random endomorphisms: primary decomposition
/// of the minimal polynomial of each draw. Returns basis-row sets of the
/// pieces, or None when the budget runs out.
fn try_split(
    piece: &ModuleRep,
    endos: &[Matrix],
    rng: &mut ChaCha8Rng,
    budget: usize,
) -> Option<Vec<Matrix>> {
    let field = piece.field().clone();
    for _ in 0..budget {
        let mut f = Matrix::zeros(&field, piece.dim(), piece.dim());
        for e in endos {
            let c = field.sample(rng);
            if c != 0 {
                f = f.add(&e.scale(c));
            }
        }
        let mp = min_poly(&f);
        let facs = match mp.factor() {
            Ok(fs) => fs,
            Err(_) => continue,
        };
        if facs.len() < 2 {
            continue;
        }
        let sels = crt_selectors(&facs);
        let mut parts = Vec::new();
        let mut ok = true;
        for sel in &sels {
            let proj = sel.eval_matrix(&f);
            if proj.mul(&proj) != proj {
                ok = false;
                break;
            }
            let basis = proj.column_space();
            if basis.rows() == 0 {
                ok = false;
                break;
            }
            parts.push(basis);
        }
        if ok && parts.len() >= 2 {
            return Some(parts);
        }
    }
    None
}

// ---- generic engine over an arbitrary generating set of matrices ----

/// A space with a set of (not necessarily invertible) operators: both
/// group modules and modules over endomorphism rings fit here.
#[derive(Clone)]
pub struct GenMod {
    pub field: Field,
    pub dim: usize,
    pub gens: Vec<Matrix>,
}

impl GenMod {
    pub fn of_module(m: &ModuleRep) -> GenMod {
        GenMod {
            field: m.field().clone(),
            dim: m.dim(),
            gens: m.gen_actions().to_vec(),
        }
    }

    fn spin(&self, vectors: &[Vec<Elt>]) -> Matrix {
        spin_under(&self.field, self.dim, &self.gens, vectors)
    }

    fn transposed(&self) -> GenMod {
        GenMod {
            field: self.field.clone(),
            dim: self.dim,
            gens: self.gens.iter().map(|g| g.transpose()).collect(),
        }
    }

    fn submodule(&self, rows: &Matrix) -> Result<GenMod> {
        let bt = rows.transpose();
        let gens = self
            .gens
            .iter()
            .map(|a| {
                bt.solve_right(&a.mul(&bt))
                    .ok_or(Error::NotStable)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GenMod {
            field: self.field.clone(),
            dim: rows.rows(),
            gens,
        })
    }

    fn quotient(&self, w_rows: &Matrix) -> Result<GenMod> {
        let ech = Echelon::from_matrix(w_rows);
        let reps = ech.complement();
        let q = reps.rows();
        let mut rows = ech.basis().rows_iter().map(|r| r.to_vec()).collect::<Vec<_>>();
        rows.extend(reps.rows_iter().map(|r| r.to_vec()));
        let basis = Matrix::from_rows_with_width(&self.field, rows, self.dim);
        let bt = basis.transpose();
        let w = ech.rank();
        let gens = self
            .gens
            .iter()
            .map(|a| {
                let coords = bt
                    .solve_right(&a.mul(&reps.transpose()))
                    .ok_or(Error::NotStable)?;
                Ok(coords.submatrix(w..w + q, 0..q))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GenMod {
            field: self.field.clone(),
            dim: q,
            gens,
        })
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> Matrix {
        let f = &self.field;
        let mut acc = Matrix::zeros(f, self.dim, self.dim);
        // random combination of generators, a few products, and identity
        for g in &self.gens {
            let c = f.sample(rng);
            if c != 0 {
                acc = acc.add(&g.scale(c));
            }
        }
        for _ in 0..2 {
            let i = rng.gen_range(0..self.gens.len());
            let j = rng.gen_range(0..self.gens.len());
            let c = f.sample(rng);
            if c != 0 {
                acc = acc.add(&self.gens[i].mul(&self.gens[j]).scale(c));
            }
        }
        let c = f.sample(rng);
        if c != 0 {
            let mut id = Matrix::identity(f, self.dim);
            id = id.scale(c);
            acc = acc.add(&id);
        }
        acc
    }
}

pub enum IrredOutcome {
    Irreducible,
    /// Basis rows of a proper nonzero stable subspace.
    Reducible(Matrix),
}

/// Norton's irreducibility test with the dual spin check. For tiny
/// q^dim the answer is settled by exhaustive spinning instead.
pub fn is_irreducible_gens(gm: &GenMod, rng: &mut ChaCha8Rng) -> Result<IrredOutcome> {
    assert!(gm.dim >= 1, "irreducibility of the zero module");
    if gm.dim == 1 {
        return Ok(IrredOutcome::Irreducible);
    }
    let q = gm.field.order() as u64;
    if (q as f64).powi(gm.dim as i32) <= 16384.0 {
        return Ok(exhaustive_irreducible(gm));
    }
    let budget = 500;
    let transposed = gm.transposed();
    for _ in 0..budget {
        let theta = gm.random_element(rng);
        let mp = min_poly(&theta);
        let mut facs = mp.factor()?;
        facs.sort_by_key(|(p, _)| p.degree());
        for (p, _) in &facs {
            let ptheta = p.eval_matrix(&theta);
            let nullspace = ptheta.kernel_basis();
            if nullspace.rows() == 0 {
                continue;
            }
            let v = nullspace.row(0).to_vec();
            let span = gm.spin(&[v]);
            if span.rows() < gm.dim {
                return Ok(IrredOutcome::Reducible(span));
            }
            let dual_null = ptheta.transpose().kernel_basis();
            let w = dual_null.row(0).to_vec();
            let dual_span = transposed.spin(&[w]);
            if dual_span.rows() < gm.dim {
                // the annihilator of a proper dual submodule is a proper
                // nonzero submodule
                return Ok(IrredOutcome::Reducible(dual_span.kernel_basis()));
            }
            if nullspace.rows() == p.degree().unwrap_or(0) {
                return Ok(IrredOutcome::Irreducible);
            }
        }
    }
    Err(Error::Internal(
        "irreducibility test failed to certify within budget".into(),
    ))
}

/// Spin every projective point; only used when q^dim is tiny.
fn exhaustive_irreducible(gm: &GenMod) -> IrredOutcome {
    let q = gm.field.order() as u64;
    let mut total: u64 = 1;
    for _ in 0..gm.dim {
        total *= q;
    }
    for code in 1..total {
        // decode a vector; skip unless the first nonzero coordinate is 1
        let mut v = vec![0; gm.dim];
        let mut x = code;
        for slot in v.iter_mut() {
            *slot = (x % q) as Elt;
            x /= q;
        }
        match v.iter().find(|&&c| c != 0) {
            Some(&lead) if lead == 1 => {}
            _ => continue,
        }
        let span = gm.spin(&[v]);
        if span.rows() < gm.dim {
            return IrredOutcome::Reducible(span);
        }
    }
    IrredOutcome::Irreducible
}

/// Composition factors of a generic module, as GenMods.
fn chop_gens(gm: &GenMod, rng: &mut ChaCha8Rng) -> Result<Vec<GenMod>> {
    if gm.dim == 0 {
        return Ok(vec![]);
    }
    match is_irreducible_gens(gm, rng)? {
        IrredOutcome::Irreducible => Ok(vec![gm.clone()]),
        IrredOutcome::Reducible(rows) => {
            let sub = gm.submodule(&rows)?;
            let quot = gm.quotient(&rows)?;
            let mut out = chop_gens(&sub, rng)?;
            out.extend(chop_gens(&quot, rng)?);
            Ok(out)
        }
    }
}

/// Composition factors of a kG-module.
pub fn chop(m: &ModuleRep, rng: &mut ChaCha8Rng) -> Result<Vec<ModuleRep>> {
    let factors = chop_gens(&GenMod::of_module(m), rng)?;
    factors
        .into_iter()
        .map(|f| ModuleRep::new(&f.field, m.group(), f.gens))
        .collect()
}

/// Public irreducibility test on a kG-module, with a submodule witness
/// when reducible.
pub fn is_irreducible(m: &ModuleRep, seed: u64) -> Result<(bool, Option<Matrix>)> {
    let mut rng = rng_from(seed);
    match is_irreducible_gens(&GenMod::of_module(m), &mut rng)? {
        IrredOutcome::Irreducible => Ok((true, None)),
        IrredOutcome::Reducible(rows) => Ok((false, Some(rows))),
    }
}

/// Certify that the algebra spanned by `endos` (an endomorphism ring
/// acting on a dim-dimensional space) is local: chop the space as a
/// module over the ring; the ring is local iff all composition factors
/// are isomorphic to one simple S with dim End(S) = dim S.
pub fn certify_local(
    field: &Field,
    dim: usize,
    endos: &[Matrix],
    rng: &mut ChaCha8Rng,
) -> Result<bool> {
    if endos.len() <= 1 {
        return Ok(true);
    }
    let gm = GenMod {
        field: field.clone(),
        dim,
        gens: endos.to_vec(),
    };
    let factors = chop_gens(&gm, rng)?;
    let first = &factors[0];
    for other in &factors[1..] {
        if other.dim != first.dim {
            return Ok(false);
        }
        let homs = crate::module::intertwiner_basis(field, &other.gens, &first.gens, other.dim, first.dim)?;
        if homs.is_empty() {
            return Ok(false);
        }
    }
    let end_s = crate::module::intertwiner_basis(field, &first.gens, &first.gens, first.dim, first.dim)?;
    Ok(end_s.len() == first.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn alg(g: &Arc<Group>, p: u32, m: u32) -> Algebra {
        Algebra::new(g, &Field::gf(p, m).unwrap())
    }

    #[test]
    fn irreducibility_examples() {
        let s3 = presets::symmetric(3).unwrap();
        let a = alg(&s3, 3, 1);
        let (irr, _) = is_irreducible(a.trivial(), 1).unwrap();
        assert!(irr);

        // kC_2 over GF(2): the socle line is a witness
        let c2 = presets::cyclic(2).unwrap();
        let b = alg(&c2, 2, 1);
        let (irr, witness) = is_irreducible(b.regular(), 1).unwrap();
        assert!(!irr);
        let w = witness.unwrap();
        assert_eq!(w.rows(), 1);
        assert_eq!(w.row(0), &[1, 1]);

        // the 2-dimensional natural simple of S_3 over GF(2)
        let f2 = Field::gf(2, 1).unwrap();
        let perm3: Vec<Matrix> = s3
            .generator_indices()
            .iter()
            .map(|&g| {
                Matrix::from_fn(&f2, 3, 3, |i, j| {
                    u32::from(s3.element(g).apply(j) == i)
                })
            })
            .collect();
        let nat = ModuleRep::new(&f2, &s3, perm3).unwrap();
        let sum_zero = nat.spin(&[vec![1, 1, 0]]);
        assert_eq!(sum_zero.rows(), 2);
        let (sub, _) = nat.submodule(&sum_zero).unwrap();
        let (irr, _) = is_irreducible(&sub, 7).unwrap();
        assert!(irr);
    }

    #[test]
    fn composition_factors_examples() {
        let c2 = presets::cyclic(2).unwrap();
        let a = alg(&c2, 2, 1);
        // kC_2 over GF(2) has factors {k : 2}
        let counts = a.composition_factors(a.regular(), 3).unwrap();
        assert_eq!(counts, vec![2]);
        // a simple module chops to itself
        let s = &a.simples()[0];
        assert_eq!(a.composition_factors(s, 3).unwrap(), vec![1]);
    }

    #[test]
    fn jacobson_radical_dimensions() {
        // semisimple case: p does not divide |G|
        let s3 = presets::symmetric(3).unwrap();
        let a = alg(&s3, 5, 1);
        assert_eq!(a.jacobson_radical().rows(), 0);
        // kC_p: the augmentation ideal
        for p in [2u32, 3, 5] {
            let cp = presets::cyclic(p as usize).unwrap();
            let b = alg(&cp, p, 1);
            assert_eq!(b.jacobson_radical().rows(), p as usize - 1);
        }
        // kS_3 over GF(3): dim 6 - (1 + 1)
        let c = alg(&s3, 3, 1);
        assert_eq!(c.simples().len(), 2);
        assert_eq!(c.jacobson_radical().rows(), 4);
    }

    #[test]
    fn radical_socle_chain_of_kc4() {
        let c4 = presets::cyclic(4).unwrap();
        let a = alg(&c4, 2, 1);
        let rad = a.radical_rows(a.regular());
        let soc = a.socle_rows(a.regular());
        assert_eq!(rad.rows(), 3);
        assert_eq!(soc.rows(), 1);
        // simple: radical zero, socle everything
        let k = a.trivial();
        assert_eq!(a.radical_rows(k).rows(), 0);
        assert_eq!(a.socle_rows(k).rows(), 1);
    }

    #[test]
    fn endomorphism_dimensions() {
        let s3 = presets::symmetric(3).unwrap();
        let a = alg(&s3, 3, 1);
        assert_eq!(a.endomorphism_algebra(a.trivial()).unwrap().dim(), 1);
        assert_eq!(a.endomorphism_algebra(a.regular()).unwrap().dim(), 6);
        let (kk, _) = ModuleRep::direct_sum(&[a.trivial().clone(), a.trivial().clone()]).unwrap();
        assert_eq!(a.endomorphism_algebra(&kk).unwrap().dim(), 4);
    }

    #[test]
    fn decompose_ks3_into_two_pims() {
        let s3 = presets::symmetric(3).unwrap();
        let a = alg(&s3, 3, 1);
        let dec = a.decompose(a.regular(), 11).unwrap();
        assert_eq!(dec.dims(), vec![3, 3]);
        assert!(dec.all_certified());
        // a simple module decomposes to itself
        let dec = a.decompose(a.trivial(), 11).unwrap();
        assert_eq!(dec.dims(), vec![1]);
    }

    #[test]
    fn heart_of_klein_four_splits() {
        let v4 = presets::parse_group_spec("perm: (1 2); (3 4)")
            .unwrap()
            .build()
            .unwrap();
        let a = alg(&v4, 2, 1);
        let reg = a.regular();
        let rad = a.radical_rows(reg);
        let soc = a.socle_rows(reg);
        let heart = reg.sub_quotient(&soc, &rad).unwrap();
        assert_eq!(heart.module.dim(), 2);
        let dec = a.decompose(&heart.module, 5).unwrap();
        assert_eq!(dec.dims(), vec![1, 1]);
        for s in &dec.summands {
            assert!(is_trivial_module(&s.module));
        }
    }

    #[test]
    fn pim_catalogs() {
        // kC_p is its own single PIM
        let c5 = presets::cyclic(5).unwrap();
        let a = alg(&c5, 5, 1);
        let cat = a.pim_catalog().unwrap();
        assert_eq!(cat.pims.len(), 1);
        assert_eq!(cat.pims[0].module.dim(), 5);

        // kS_3 over GF(3): two PIMs, both 3-dimensional
        let s3 = presets::symmetric(3).unwrap();
        let b = alg(&s3, 3, 1);
        let cat = b.pim_catalog().unwrap();
        let mut dims: Vec<usize> = cat.pims.iter().map(|p| p.module.dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![3, 3]);

        // kA_4 over GF(4): three PIMs of dimension 4
        let a4 = presets::alternating(4).unwrap();
        let c = Algebra::new(&a4, &Field::gf(2, 2).unwrap());
        let cat = c.pim_catalog().unwrap();
        assert_eq!(cat.pims.len(), 3);
        assert!(cat.pims.iter().all(|p| p.module.dim() == 4));
    }

    #[test]
    fn projective_cover_examples() {
        let c2 = presets::cyclic(2).unwrap();
        let a = alg(&c2, 2, 1);
        let cover = a.projective_cover(a.trivial()).unwrap();
        assert_eq!(cover.module.dim(), 2);
        assert_eq!(cover.map.rank(), 1);

        // cover of a projective module is itself (same dimension)
        let cover = a.projective_cover(a.regular()).unwrap();
        assert_eq!(cover.module.dim(), 2);

        // cover of k over kS_3/GF(3) is the 3-dimensional PIM over k
        let s3 = presets::symmetric(3).unwrap();
        let b = alg(&s3, 3, 1);
        let cover = b.projective_cover(b.trivial()).unwrap();
        assert_eq!(cover.module.dim(), 3);
        // kernel = rad of the PIM has dimension 2
        assert_eq!(cover.map.kernel_rows().rows(), 2);
    }

    #[test]
    fn projectivity_test() {
        let s3 = presets::symmetric(3).unwrap();
        let a = alg(&s3, 3, 1);
        assert!(a.is_projective(a.regular(), 1).unwrap());
        assert!(!a.is_projective(a.trivial(), 1).unwrap());
        // PIM plus a non-projective summand
        let cover = a.projective_cover(a.trivial()).unwrap();
        let (mixed, _) = ModuleRep::direct_sum(&[cover.module.clone(), a.trivial().clone()]).unwrap();
        assert!(!a.is_projective(&mixed, 1).unwrap());
    }

    #[test]
    fn isomorphism_tests() {
        let c2 = presets::cyclic(2).unwrap();
        let a = alg(&c2, 2, 1);
        // M isomorphic to itself with the identity witness
        let w = a.is_isomorphic(a.regular(), a.regular(), 1).unwrap().unwrap();
        assert!(w.is_identity());
        // kC_2 vs k + k: same composition factors, no isomorphism
        let (kk, _) = ModuleRep::direct_sum(&[a.trivial().clone(), a.trivial().clone()]).unwrap();
        assert!(a.is_isomorphic(a.regular(), &kk, 1).unwrap().is_none());
    }

    #[test]
    fn krull_schmidt_rerun_invariance() {
        let s3 = presets::symmetric(3).unwrap();
        let a = alg(&s3, 3, 1);
        let mut reference: Option<Vec<usize>> = None;
        for seed in [2u64, 77, 2026, 31337, 424242] {
            let dec = a.decompose(a.regular(), seed).unwrap();
            let dims = dec.dims();
            match &reference {
                None => reference = Some(dims),
                Some(r) => assert_eq!(r, &dims),
            }
        }
    }

    #[test]
    fn jordan_holder_rerun_invariance() {
        let c6 = presets::cyclic(6).unwrap();
        let a = alg(&c6, 3, 1);
        let mut reference: Option<Vec<usize>> = None;
        for seed in [1u64, 9, 99, 999, 9999] {
            let counts = a.composition_factors(a.regular(), seed).unwrap();
            match &reference {
                None => reference = Some(counts),
                Some(r) => assert_eq!(r, &counts),
            }
        }
    }
}

/// A minimal projective cover.
pub struct Cover {
    pub module: ModuleRep,
    pub map: ModuleMap,
    /// Catalog indices of the PIM copies, in column-block order.
    pub pim_indices: Vec<usize>,
}

/// A projective indecomposable with its idempotent and kG-basis.
pub struct Pim {
    pub module: ModuleRep,
    /// dim x |G| rows: the summand's basis inside kG.
    pub basis: Matrix,
    /// e with kG.e the summand; phi(x e) = x v realizes Hom(P, M) = e.M.
    pub idempotent: Vec<Elt>,
    /// Index of top(P) in the simple catalog.
    pub top: usize,
    pub multiplicity: usize,
}

pub struct PimCatalog {
    pub pims: Vec<Pim>,
    pub seed: u64,
}
