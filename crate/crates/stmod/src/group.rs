//! Finite groups as closed element tables built from permutation
//! generators.
//!
//! Elements are indexed in breadth-first discovery order (index 0 is the
//! identity); this ordering is part of the serialization contract, so
//! nothing downstream may re-sort it. Each element carries a shortest
//! generator word, which is how module actions of non-generator elements
//! get evaluated lazily.

use crate::error::{Error, Result};
use crate::perm::Perm;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_CLOSURE_LIMIT: usize = 5000;

pub struct Group {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<usize>,
    mult: Vec<u16>,
    inv: Vec<u16>,
    /// Generator words (positions into `generators`), shortest-first
    /// discovery order; evaluating word(i) left to right gives element i.
    words: Vec<Vec<usize>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group of order {} on {} points", self.order(), self.degree)
    }
}

impl Group {
    /// Breadth-first closure of the generators.
    pub fn close(generators: &[Perm], limit: usize) -> Result<Arc<Group>> {
        if generators.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "no generators given".into(),
            });
        }
        let degree = generators[0].degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch);
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for (gi, g) in generators.iter().enumerate() {
                let next = current.compose(g); // current * g
                if !index.contains_key(&next) {
                    if elements.len() >= limit {
                        return Err(Error::ClosureLimit(limit));
                    }
                    index.insert(next.clone(), elements.len());
                    let mut w = words[head].clone();
                    w.push(gi);
                    words.push(w);
                    elements.push(next);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let gen_indices = generators.iter().map(|g| index[g]).collect();
        let mut mult = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = elements[i].compose(&elements[j]);
                mult[i * n + j] = index[&prod] as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for i in 0..n {
            inv[i] = index[&elements[i].inverse()] as u16;
        }
        Ok(Arc::new(Group {
            degree,
            elements,
            index,
            generators: gen_indices,
            mult,
            inv,
            words,
        }))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.order() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Positions (into the generator list) of the generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut ord = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            ord += 1;
        }
        ord
    }

    /// The p-part p^n of |G|.
    pub fn p_part(&self, p: u32) -> usize {
        let mut n = self.order();
        let mut pp = 1;
        while n % p as usize == 0 {
            n /= p as usize;
            pp *= p as usize;
        }
        pp
    }

    pub fn conjugacy_classes(&self) -> ConjClasses {
        let n = self.order();
        let mut assigned = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if assigned[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            assigned[start] = id;
            // orbit under conjugation
            let mut head = 0;
            while head < class.len() {
                let x = class[head];
                for g in 0..n {
                    let y = self.conjugate(g, x);
                    if assigned[y] == usize::MAX {
                        assigned[y] = id;
                        class.push(y);
                    }
                }
                head += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        ConjClasses {
            reps: classes.iter().map(|c| c[0]).collect(),
            classes,
            class_of: assigned,
        }
    }

    /// Closure of a set of element indices under multiplication.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[0] = true;
        let mut list = vec![0usize];
        for &s in seed {
            if !members[s] {
                members[s] = true;
                list.push(s);
            }
        }
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for k in 0..list.len() {
                let y = list[k];
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !members[z] {
                        members[z] = true;
                        list.push(z);
                    }
                }
            }
            head += 1;
        }
        list.sort_unstable();
        list
    }
}

#[derive(Debug, Clone)]
pub struct ConjClasses {
    pub classes: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
    pub class_of: Vec<usize>,
}

#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<Group>,
    members: Vec<usize>, // sorted, contains 0
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup of order {} in {:?}", self.order(), self.parent)
    }
}

impl Subgroup {
    pub fn new(parent: Arc<Group>, seed: &[usize]) -> Subgroup {
        let members = parent.subgroup_closure(seed);
        Subgroup { parent, members }
    }

    pub fn whole(parent: Arc<Group>) -> Subgroup {
        let members = (0..parent.order()).collect();
        Subgroup { parent, members }
    }

    pub fn parent(&self) -> &Arc<Group> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        (0..g.order()).all(|x| self.members.iter().all(|&h| self.contains(g.conjugate(x, h))))
    }

    /// Realize the subgroup as a group in its own right, together with
    /// the map from new element indices to parent indices. Generators are
    /// picked greedily in parent index order.
    pub fn to_group(&self) -> Result<(Arc<Group>, Vec<usize>)> {
        let parent = &self.parent;
        let mut gens: Vec<usize> = Vec::new();
        let mut closure = vec![0usize];
        for &m in &self.members {
            if m == 0 {
                continue;
            }
            if !closure.binary_search(&m).is_ok() {
                gens.push(m);
                closure = parent.subgroup_closure(&gens);
                if closure.len() == self.members.len() {
                    break;
                }
            }
        }
        if gens.is_empty() {
            gens.push(0); // trivial subgroup: identity generator
        }
        let perms: Vec<Perm> = gens.iter().map(|&i| parent.element(i).clone()).collect();
        let group = Group::close(&perms, parent.order() + 1)?;
        let embed: Vec<usize> = (0..group.order())
            .map(|i| {
                parent
                    .index_of(group.element(i))
                    .expect("subgroup element must exist in parent")
            })
            .collect();
        Ok((group, embed))
    }
}

/// {g : g H g^-1 = H}.
pub fn normalizer(g: &Arc<Group>, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| h.members().iter().all(|&m| h.contains(g.conjugate(x, m))))
        .collect();
    Subgroup {
        parent: g.clone(),
        members,
    }
}

/// {g : gh = hg for all h in H}.
pub fn centralizer(g: &Arc<Group>, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| h.members().iter().all(|&m| g.mul(x, m) == g.mul(m, x)))
        .collect();
    Subgroup {
        parent: g.clone(),
        members,
    }
}

/// Sylow p-subgroup: grow a p-subgroup through normalizers until the full
/// p-part is reached (a proper p-subgroup is proper in its normalizer's
/// p-part, so a pure p-element always exists outside it).
pub fn sylow(g: &Arc<Group>, p: u32) -> Result<Subgroup> {
    if g.order() % p as usize != 0 {
        return Err(Error::PrimeNotDividing(p));
    }
    let target = g.p_part(p);
    // a pure p-element to start from
    let start = (1..g.order())
        .find(|&i| is_pure_p_element(g, i, p))
        .expect("p divides |G|, so Cauchy gives a p-element");
    let mut h = Subgroup::new(g.clone(), &[start]);
    while h.order() < target {
        let n = normalizer(g, &h);
        let next = n
            .members()
            .iter()
            .copied()
            .find(|&y| !h.contains(y) && is_pure_p_element(g, y, p))
            .ok_or_else(|| {
                Error::Internal("no p-element found in normalizer of a proper p-subgroup".into())
            })?;
        let mut seed = h.members().to_vec();
        seed.push(next);
        h = Subgroup::new(g.clone(), &seed);
    }
    Ok(h)
}

fn is_pure_p_element(g: &Arc<Group>, i: usize, p: u32) -> bool {
    if i == 0 {
        return false;
    }
    let mut ord = g.element_order(i);
    while ord % p as usize == 0 {
        ord /= p as usize;
    }
    ord == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PGroupClass {
    /// C_{p^r}
    Cyclic(u32),
    /// Q_{2^n}, order 2^n >= 8
    GeneralizedQuaternion(u32),
    Other,
}

/// Classify a p-group as cyclic, generalized quaternion, or other.
/// Generalized quaternion means: a non-cyclic 2-group of order at least 8
/// with a unique involution.
pub fn classify_p_group(h: &Subgroup, p: u32) -> Result<PGroupClass> {
    let mut n = h.order();
    let mut r = 0u32;
    while n % p as usize == 0 {
        n /= p as usize;
        r += 1;
    }
    if n != 1 {
        return Err(Error::NotPGroup);
    }
    let g = h.parent();
    let max_order = h
        .members()
        .iter()
        .map(|&m| g.element_order(m))
        .max()
        .unwrap_or(1);
    if max_order == h.order() {
        return Ok(PGroupClass::Cyclic(r));
    }
    if p == 2 && h.order() >= 8 {
        let involutions = h
            .members()
            .iter()
            .filter(|&&m| m != 0 && g.element_order(m) == 2)
            .count();
        if involutions == 1 {
            return Ok(PGroupClass::GeneralizedQuaternion(r));
        }
    }
    Ok(PGroupClass::Other)
}

/// Phi_p: the number of automorphisms of the cyclic Sylow p-subgroup
/// induced by conjugation, computed as [N_G(D) : C_G(D)].
pub fn conj_auto_count(g: &Arc<Group>, p: u32) -> Result<usize> {
    let d = sylow(g, p)?;
    match classify_p_group(&d, p)? {
        PGroupClass::Cyclic(_) => {}
        _ => return Err(Error::NonCyclicSylow),
    }
    let n = normalizer(g, &d);
    let c = centralizer(g, &d);
    Ok(n.order() / c.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn s3() -> Arc<Group> {
        let a = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        Group::close(&[a, b], 100).unwrap()
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(s3().order(), 6);
        let c4 = Group::close(&[Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap()], 100).unwrap();
        assert_eq!(c4.order(), 4);
        let q8 = presets::quaternion(8).unwrap();
        assert_eq!(q8.order(), 8);
        let limit = Group::close(&[Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap()], 3);
        assert!(limit.is_err());
    }

    #[test]
    fn words_evaluate_to_their_elements() {
        for g in [s3(), presets::quaternion(16).unwrap(), presets::sl23().unwrap()] {
            for i in 0..g.order() {
                let mut acc = 0usize;
                for &pos in g.word(i) {
                    acc = g.mul(acc, g.generator_indices()[pos]);
                }
                assert_eq!(acc, i);
            }
        }
    }

    #[test]
    fn associativity_spot_check() {
        use rand::Rng;
        let g = presets::sl23().unwrap();
        let mut rng = crate::testutil::rng(5);
        for _ in 0..1000 {
            let (a, b, c) = (
                rng.gen_range(0..g.order()),
                rng.gen_range(0..g.order()),
                rng.gen_range(0..g.order()),
            );
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }

    #[test]
    fn conjugacy_class_sizes() {
        let cc = s3().conjugacy_classes();
        let mut sizes: Vec<usize> = cc.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let q8 = presets::quaternion(8).unwrap();
        let mut sizes: Vec<usize> = q8.conjugacy_classes().classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);

        // abelian: all singletons
        let c6 = presets::cyclic(6).unwrap();
        assert!(c6.conjugacy_classes().classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn sylow_orders_match_p_part() {
        let g = s3();
        assert_eq!(sylow(&g, 3).unwrap().order(), 3);
        assert_eq!(sylow(&g, 2).unwrap().order(), 2);
        assert!(sylow(&g, 5).is_err());

        let sl = presets::sl23().unwrap();
        let d = sylow(&sl, 2).unwrap();
        assert_eq!(d.order(), 8);
        assert_eq!(
            classify_p_group(&d, 2).unwrap(),
            PGroupClass::GeneralizedQuaternion(3)
        );

        let a5 = presets::alternating(5).unwrap();
        for p in [2u32, 3, 5] {
            assert_eq!(sylow(&a5, p).unwrap().order(), a5.p_part(p));
        }
    }

    #[test]
    fn classify_small_p_groups() {
        for (n, p, want) in [(9usize, 3u32, PGroupClass::Cyclic(2)), (8, 2, PGroupClass::Cyclic(3))] {
            let c = presets::cyclic(n).unwrap();
            let h = Subgroup::whole(c);
            assert_eq!(classify_p_group(&h, p).unwrap(), want);
        }
        // exhaustive cyclic check up to 64
        for p in [2usize, 3, 5, 7] {
            let mut n = p;
            let mut r = 1;
            while n <= 64 {
                let c = presets::cyclic(n).unwrap();
                let h = Subgroup::whole(c);
                assert_eq!(classify_p_group(&h, p as u32).unwrap(), PGroupClass::Cyclic(r));
                n *= p;
                r += 1;
            }
        }
        let q8 = presets::quaternion(8).unwrap();
        assert_eq!(
            classify_p_group(&Subgroup::whole(q8), 2).unwrap(),
            PGroupClass::GeneralizedQuaternion(3)
        );
        // Klein four: three involutions
        let v4 = presets::parse_group_spec("perm: (1 2); (3 4)").unwrap().build().unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(
            classify_p_group(&Subgroup::whole(v4), 2).unwrap(),
            PGroupClass::Other
        );
        let s3 = s3();
        let h = Subgroup::whole(s3);
        assert!(classify_p_group(&h, 2).is_err());
    }

    #[test]
    fn normalizer_centralizer_examples() {
        let g = s3();
        let c3 = sylow(&g, 3).unwrap();
        // C_3 is normal in S_3
        let n = normalizer(&g, &c3);
        assert!(n.is_whole());
        let c = centralizer(&g, &c3);
        assert_eq!(c.order(), 3);
        // outputs really normalize / centralize
        for &x in n.members() {
            for &h in c3.members() {
                assert!(c3.contains(g.conjugate(x, h)));
            }
        }
        for &x in c.members() {
            for &h in c3.members() {
                assert_eq!(g.mul(x, h), g.mul(h, x));
            }
        }
        // N_{A_5}(C_5) has order 10
        let a5 = presets::alternating(5).unwrap();
        let c5 = sylow(&a5, 5).unwrap();
        assert_eq!(normalizer(&a5, &c5).order(), 10);
        // centralizer of the whole group is the center
        let q8 = presets::quaternion(8).unwrap();
        let z = centralizer(&q8, &Subgroup::whole(q8.clone()));
        assert_eq!(z.order(), 2);
    }

    #[test]
    fn phi_p_values() {
        assert_eq!(conj_auto_count(&s3(), 3).unwrap(), 2);
        let c9 = presets::cyclic(9).unwrap();
        assert_eq!(conj_auto_count(&c9, 3).unwrap(), 1);
        let d10 = presets::dihedral(5).unwrap();
        assert_eq!(conj_auto_count(&d10, 5).unwrap(), 2);
        let q8 = presets::quaternion(8).unwrap();
        assert!(conj_auto_count(&q8, 2).is_err());
    }

    #[test]
    fn subgroup_to_group_round_trip() {
        let a5 = presets::alternating(5).unwrap();
        let c5 = sylow(&a5, 5).unwrap();
        let n = normalizer(&a5, &c5);
        let (ng, embed) = n.to_group().unwrap();
        assert_eq!(ng.order(), 10);
        // embedding is a homomorphism
        for i in 0..ng.order() {
            for j in 0..ng.order() {
                assert_eq!(embed[ng.mul(i, j)], a5.mul(embed[i], embed[j]));
            }
        }
    }
}
