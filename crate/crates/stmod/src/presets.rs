//! Group presets and the `GroupSpec` grammar.
//!
//! Every group enters as a list of permutation generators. Presets ship
//! canonical permutation representations; anything else can be written
//! out in cycle notation (`perm: (1 2 3); (1 2)`, 1-based points).

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{parse_cycles, Perm};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// A parsed group description: either a named preset or explicit
/// cycle-notation generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of order 2n (so `dihedral(5)` is the order-10 group).
    Dihedral(usize),
    /// Generalized quaternion group of the given order 2^n >= 8.
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    Sl23,
    Perms {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Quaternion(n) => write!(f, "quaternion({n})"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::Alternating(n) => write!(f, "alternating({n})"),
            GroupSpec::Sl23 => write!(f, "sl23"),
            GroupSpec::Perms { degree, generators } => {
                write!(f, "perm:")?;
                for (i, gen) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    if gen.is_empty() {
                        write!(f, " ()")?;
                    }
                    for cyc in gen {
                        let pts: Vec<String> = cyc.iter().map(|p| p.to_string()).collect();
                        write!(f, " ({})", pts.join(" "))?;
                    }
                }
                write!(f, " on {degree} points")
            }
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<Arc<Group>> {
        match self {
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Quaternion(n) => quaternion(*n),
            GroupSpec::Symmetric(n) => symmetric(*n),
            GroupSpec::Alternating(n) => alternating(*n),
            GroupSpec::Sl23 => sl23(),
            GroupSpec::Perms { degree, generators } => {
                let perms: Result<Vec<Perm>> = generators
                    .iter()
                    .map(|cycles| Perm::from_cycles(*degree, cycles))
                    .collect();
                Group::close(&perms?, crate::group::DEFAULT_CLOSURE_LIMIT)
            }
        }
    }

    /// Expected order for presets, used as a construction cross-check.
    pub fn expected_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => Some(2 * n),
            GroupSpec::Quaternion(n) => Some(*n),
            GroupSpec::Symmetric(n) => Some((1..=*n).product()),
            GroupSpec::Alternating(n) => Some((1..=*n).product::<usize>() / 2),
            GroupSpec::Sl23 => Some(24),
            GroupSpec::Perms { .. } => None,
        }
    }
}

/// Parse `preset(args)` or `perm: (1 2 3)(4 5); (1 2)`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("perm:") {
        let mut generators = Vec::new();
        let mut degree = 0;
        for part in rest.split(';') {
            if part.trim().is_empty() {
                continue;
            }
            let (cycles, maxpt) = parse_cycles(part)?;
            degree = degree.max(maxpt);
            generators.push(cycles);
        }
        if generators.is_empty() {
            return Err(Error::Parse {
                pos: t.len(),
                msg: "no generators after 'perm:'".into(),
            });
        }
        return Ok(GroupSpec::Perms { degree, generators });
    }
    let (name, arg) = match t.find('(') {
        Some(open) => {
            let close = t.rfind(')').ok_or(Error::Parse {
                pos: t.len(),
                msg: "missing ')'".into(),
            })?;
            let inner = t[open + 1..close].trim();
            let arg = if inner.is_empty() {
                None
            } else {
                Some(inner.parse::<usize>().map_err(|_| Error::Parse {
                    pos: open + 1,
                    msg: format!("bad integer argument {inner:?}"),
                })?)
            };
            (t[..open].trim(), arg)
        }
        None => (t, None),
    };
    let need = |label: &str| -> Result<usize> {
        arg.ok_or(Error::Parse {
            pos: 0,
            msg: format!("{label} needs one integer argument"),
        })
    };
    match name {
        "cyclic" => {
            let n = need("cyclic")?;
            if n == 0 || n > 5000 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "cyclic order out of range".into(),
                });
            }
            Ok(GroupSpec::Cyclic(n))
        }
        "dihedral" => {
            let n = need("dihedral")?;
            if n == 0 || 2 * n > 5000 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "dihedral parameter out of range".into(),
                });
            }
            Ok(GroupSpec::Dihedral(n))
        }
        "quaternion" => {
            let n = need("quaternion")?;
            if n < 8 || !n.is_power_of_two() || n > 4096 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "quaternion order must be a power of two >= 8".into(),
                });
            }
            Ok(GroupSpec::Quaternion(n))
        }
        "symmetric" => {
            let n = need("symmetric")?;
            if !(2..=5).contains(&n) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "symmetric degree must be 2..=5".into(),
                });
            }
            Ok(GroupSpec::Symmetric(n))
        }
        "alternating" => {
            let n = need("alternating")?;
            if !(3..=5).contains(&n) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "alternating degree must be 3..=5".into(),
                });
            }
            Ok(GroupSpec::Alternating(n))
        }
        "sl23" => Ok(GroupSpec::Sl23),
        other => Err(Error::Parse {
            pos: 0,
            msg: format!("unknown group preset {other:?}"),
        }),
    }
}

pub fn cyclic(n: usize) -> Result<Arc<Group>> {
    if n == 1 {
        return Group::close(&[Perm::identity(1)], 2);
    }
    let rot = Perm::from_cycles(n, &[(1..=n).collect()])?;
    Group::close(&[rot], n + 1)
}

pub fn dihedral(n: usize) -> Result<Arc<Group>> {
    match n {
        1 => cyclic(2),
        2 => {
            let a = Perm::from_cycles(4, &[vec![1, 2]])?;
            let b = Perm::from_cycles(4, &[vec![3, 4]])?;
            Group::close(&[a, b], 5)
        }
        _ => {
            let rot = Perm::from_cycles(n, &[(1..=n).collect()])?;
            // reflection fixing point 1: i -> n + 2 - i
            let mut cycles = Vec::new();
            let mut lo = 2;
            let mut hi = n;
            while lo < hi {
                cycles.push(vec![lo, hi]);
                lo += 1;
                hi -= 1;
            }
            let refl = Perm::from_cycles(n, &cycles)?;
            Group::close(&[rot, refl], 2 * n + 1)
        }
    }
}

/// Generalized quaternion group of the given order 2^n >= 8, acting on
/// itself by left multiplication. Elements a^i b^j are the points
/// i + j*2^(n-1).
pub fn quaternion(order: usize) -> Result<Arc<Group>> {
    assert!(order >= 8 && order.is_power_of_two());
    let h = order / 2; // order of the cyclic part <a>
    let mut amap = vec![0usize; order];
    let mut bmap = vec![0usize; order];
    for i in 0..h {
        // a * a^i = a^{i+1};  a * a^i b = a^{i+1} b
        amap[i] = (i + 1) % h;
        amap[h + i] = h + (i + 1) % h;
        // b * a^i = a^{-i} b;  b * a^i b = a^{h/2 - i}
        bmap[i] = h + (h - i) % h;
        bmap[h + i] = (h / 2 + h - i) % h;
    }
    Group::close(&[Perm::from_map(amap), Perm::from_map(bmap)], order + 1)
}

pub fn symmetric(n: usize) -> Result<Arc<Group>> {
    assert!((2..=5).contains(&n));
    let swap = Perm::from_cycles(n, &[vec![1, 2]])?;
    if n == 2 {
        return Group::close(&[swap], 3);
    }
    let cycle = Perm::from_cycles(n, &[(1..=n).collect()])?;
    Group::close(&[cycle, swap], 121)
}

pub fn alternating(n: usize) -> Result<Arc<Group>> {
    assert!((3..=5).contains(&n));
    let three = Perm::from_cycles(n, &[vec![1, 2, 3]])?;
    let second = match n {
        3 => return Group::close(&[three], 4),
        4 => Perm::from_cycles(4, &[vec![2, 3, 4]])?,
        5 => Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]])?,
        _ => unreachable!(),
    };
    Group::close(&[three, second], 61)
}

/// SL(2,3) acting on the eight nonzero vectors of GF(3)^2.
pub fn sl23() -> Result<Arc<Group>> {
    // vectors (x, y) != (0, 0), indexed in lex order
    let vecs: Vec<(u32, u32)> = (0..3u32)
        .flat_map(|x| (0..3u32).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let idx = |v: (u32, u32)| vecs.iter().position(|&w| w == v).unwrap();
    // s = [[0, -1], [1, 0]], t = [[1, 1], [0, 1]]
    let smap: Vec<usize> = vecs.iter().map(|&(x, y)| idx(((3 - y) % 3, x))).collect();
    let tmap: Vec<usize> = vecs.iter().map(|&(x, y)| idx(((x + y) % 3, y))).collect();
    Group::close(&[Perm::from_map(smap), Perm::from_map(tmap)], 25)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{classify_p_group, sylow, PGroupClass, Subgroup};

    #[test]
    fn preset_orders() {
        for (spec, order) in [
            ("cyclic(12)", 12),
            ("dihedral(5)", 10),
            ("dihedral(6)", 12),
            ("dihedral(2)", 4),
            ("quaternion(8)", 8),
            ("quaternion(16)", 16),
            ("symmetric(3)", 6),
            ("symmetric(5)", 120),
            ("alternating(4)", 12),
            ("alternating(5)", 60),
            ("sl23", 24),
        ] {
            let gs = parse_group_spec(spec).unwrap();
            let g = gs.build().unwrap();
            assert_eq!(g.order(), order, "order of {spec}");
            if let Some(expect) = gs.expected_order() {
                assert_eq!(g.order(), expect);
            }
        }
    }

    #[test]
    fn quaternion_structure() {
        for order in [8usize, 16, 32] {
            let q = quaternion(order).unwrap();
            assert_eq!(q.order(), order);
            let class = classify_p_group(&Subgroup::whole(q), 2).unwrap();
            assert_eq!(
                class,
                PGroupClass::GeneralizedQuaternion(order.trailing_zeros())
            );
        }
    }

    #[test]
    fn sl23_has_quaternion_sylow() {
        let g = sl23().unwrap();
        let d = sylow(&g, 2).unwrap();
        assert_eq!(d.order(), 8);
        assert_eq!(
            classify_p_group(&d, 2).unwrap(),
            PGroupClass::GeneralizedQuaternion(3)
        );
    }

    #[test]
    fn dihedral6_is_s3_times_c2() {
        // order 12 with a normal order-2 center
        let g = dihedral(6).unwrap();
        assert_eq!(g.order(), 12);
        let z = crate::group::centralizer(&g, &Subgroup::whole(g.clone()));
        assert_eq!(z.order(), 2);
    }

    #[test]
    fn parse_perm_specs() {
        let gs = parse_group_spec("perm: (1 2 3)(4 5)").unwrap();
        match &gs {
            GroupSpec::Perms { degree, generators } => {
                assert_eq!(*degree, 5);
                assert_eq!(generators.len(), 1);
            }
            _ => panic!("expected perms"),
        }
        let g = gs.build().unwrap();
        assert_eq!(g.order(), 6);

        assert!(parse_group_spec("frobnicate(3)").is_err());
        assert!(parse_group_spec("symmetric(9)").is_err());
        assert!(parse_group_spec("quaternion(12)").is_err());
        assert!(parse_group_spec("perm: (1 2").is_err());
    }
}
