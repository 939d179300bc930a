//! Permutations on {0, .., n-1} with 1-based cycle notation at the edges.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            map: (0..degree).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Perm {
        let mut seen = vec![false; map.len()];
        for &x in &map {
            assert!(x < map.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm { map }
    }

    /// Build from 1-based cycles, e.g. `[[1,2,3],[4,5]]` on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut map: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (i, &pt) in cyc.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("point {pt} outside 1..={degree}"),
                    });
                }
                if touched[pt - 1] {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("point {pt} repeated across cycles"),
                    });
                }
                touched[pt - 1] = true;
                let next = cyc[(i + 1) % cyc.len()];
                map[pt - 1] = next - 1;
            }
        }
        Ok(Perm { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// self after other: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x] = i;
        }
        Perm { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut x = self.map[start];
            while x != start {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.map[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }

    pub fn raise_degree(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut map = self.map.clone();
        map.extend(self.degree()..degree);
        Perm { map }
    }
}

/// Parse one generator in cycle notation: `(1 2 3)(4 5)`. Points are
/// 1-based; commas or spaces separate points. Returns the cycles and the
/// largest point mentioned.
pub fn parse_cycles(text: &str) -> Result<(Vec<Vec<usize>>, usize)> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles = Vec::new();
    let mut maxpt = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c != b'(' {
            return Err(Error::Parse {
                pos: i,
                msg: format!("expected '(' , found {:?}", c as char),
            });
        }
        i += 1;
        let mut cyc = Vec::new();
        let mut cur = String::new();
        loop {
            if i >= bytes.len() {
                return Err(Error::Parse {
                    pos: i,
                    msg: "unclosed cycle".into(),
                });
            }
            let c = bytes[i];
            if c.is_ascii_digit() {
                cur.push(c as char);
                i += 1;
            } else if c.is_ascii_whitespace() || c == b',' {
                if !cur.is_empty() {
                    cyc.push(cur.parse::<usize>().unwrap());
                    cur.clear();
                }
                i += 1;
            } else if c == b')' {
                if !cur.is_empty() {
                    cyc.push(cur.parse::<usize>().unwrap());
                    cur.clear();
                }
                i += 1;
                break;
            } else {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected {:?} in cycle", c as char),
                });
            }
        }
        if cyc.iter().any(|&p| p == 0) {
            return Err(Error::Parse {
                pos: i,
                msg: "points are 1-based".into(),
            });
        }
        if !cyc.is_empty() {
            maxpt = maxpt.max(*cyc.iter().max().unwrap());
            if cyc.len() > 1 {
                cycles.push(cyc);
            }
        }
    }
    Ok((cycles, maxpt))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let a = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let ab = a.compose(&b);
        // (1 2 3)(1 2): 1 -> b:2 -> a:3
        assert_eq!(ab.apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.inverse().apply(0), 2);
    }

    #[test]
    fn parse_round_trip() {
        let (cycles, max) = parse_cycles("(1 2 3)(4 5)").unwrap();
        assert_eq!(max, 5);
        let p = Perm::from_cycles(5, &cycles).unwrap();
        assert_eq!(p.cycle_string(), "(1 2 3)(4 5)");
        assert!(parse_cycles("(1 2").is_err());
        assert!(parse_cycles("(0 1)").is_err());
        let (c, m) = parse_cycles("( 3 , 1 )").unwrap();
        assert_eq!(m, 3);
        assert_eq!(c, vec![vec![3, 1]]);
    }
}
