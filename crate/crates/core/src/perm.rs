//! Permutations on `{0, …, d − 1}` and their cycle notation.
//!
//! Cycle notation is 1-based, as written by hand: `"(1 2 3)(4 5)"`. Fixed
//! points are omitted and the identity prints as `id`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// `images` is not a bijection on `0..len`.
    NotBijective,
    /// Malformed cycle notation.
    Parse { input: String, reason: &'static str },
    /// A point appears twice in one cycle-notation string.
    RepeatedPoint(usize),
    /// The requested degree is smaller than the largest point used.
    DegreeTooSmall { needed: usize, given: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotBijective => write!(f, "images do not form a permutation"),
            PermError::Parse { input, reason } => {
                write!(f, "cannot parse cycle notation {input:?}: {reason}")
            }
            PermError::RepeatedPoint(p) => write!(f, "point {p} repeated in cycle notation"),
            PermError::DegreeTooSmall { needed, given } => {
                write!(f, "degree {given} too small, point {needed} is used")
            }
        }
    }
}

impl core::error::Error for PermError {}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || core::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijective);
            }
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Parses 1-based cycle notation. The degree is the largest point used
    /// unless `degree` asks for more.
    pub fn parse_cycles(s: &str, degree: Option<usize>) -> Result<Self, PermError> {
        let err = |reason| PermError::Parse {
            input: String::from(s),
            reason,
        };
        let trimmed = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        if !(trimmed.is_empty() || trimmed == "id" || trimmed == "()") {
            let mut rest = trimmed;
            while !rest.is_empty() {
                let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
                let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
                let mut cycle = Vec::new();
                for tok in body[..close].split(|c: char| c == ',' || c.is_whitespace()) {
                    if tok.is_empty() {
                        continue;
                    }
                    let p: usize = tok
                        .parse()
                        .map_err(|_| err("points must be positive integers"))?;
                    if p == 0 {
                        return Err(err("points are 1-based"));
                    }
                    cycle.push(p - 1);
                }
                cycles.push(cycle);
                rest = body[close + 1..].trim_start();
            }
        }
        let needed = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < needed => return Err(PermError::DegreeTooSmall { needed, given: d }),
            Some(d) => d,
            None => needed,
        };
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = alloc::vec![false; degree];
        for cycle in &cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if core::mem::replace(&mut used[p], true) {
                    return Err(PermError::RepeatedPoint(p + 1));
                }
                images[p] = cycle[(i + 1) % cycle.len()] as u32;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Extends with fixed points up to `degree`.
    pub fn padded(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Self { images }
    }

    /// The product `self · other`: apply `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = alloc::vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Self { images }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]({self})", self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn parse_and_print() {
        let p = Permutation::parse_cycles("(1 2 3)(4 5)", None).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(4), 3);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(
            Permutation::parse_cycles("(1,2)", Some(4))
                .unwrap()
                .to_string(),
            "(1 2)"
        );
        assert_eq!(Permutation::identity(3).to_string(), "id");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(1 2", None),
            Err(PermError::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0 1)", None),
            Err(PermError::Parse { .. })
        ));
        assert_eq!(
            Permutation::parse_cycles("(1 2)(2 3)", None),
            Err(PermError::RepeatedPoint(2))
        );
        assert!(matches!(
            Permutation::parse_cycles("(1 5)", Some(3)),
            Err(PermError::DegreeTooSmall {
                needed: 5,
                given: 3
            })
        ));
        assert_eq!(
            Permutation::from_images(alloc::vec![0, 0]),
            Err(PermError::NotBijective)
        );
    }

    #[test]
    fn then_applies_left_first() {
        let a = Permutation::parse_cycles("(1 2 3)", None).unwrap();
        let b = Permutation::parse_cycles("(1 2)", Some(3)).unwrap();
        assert_eq!(a.then(&b).to_string(), "(2 3)");
        assert_eq!(b.then(&a).to_string(), "(1 3)");
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(images in Just((0..7usize).collect::<Vec<_>>()).prop_shuffle()) {
            let p = Permutation::from_images(images).unwrap();
            let q = Permutation::parse_cycles(&p.to_string(), Some(7)).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert!(p.then(&p.inverse()).is_identity());
        }
    }
}
