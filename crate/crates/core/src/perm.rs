//! Permutations of `{1..n}` and the cloning maps on symmetric groups.
//!
//! A [`Permutation`] is stored as its image list, 1-based. Products compose
//! like functions: `(g * h)(i) = g(h(i))`, so in a product the right factor
//! acts first. The cloning map [`sigma_clone`] bifurcates the arrow starting
//! at `k` into two parallel arrows; it is the reference against which every
//! other instance's cloning maps are compared.

use std::fmt;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::RngCore;

use crate::error::{InvalidValue, ParseError};

/// A permutation of `{1..n}`, stored as the image list `[p(1), ..., p(n)]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from a 1-based image list, validating that it is
    /// a bijection of `{1..n}`.
    pub fn new(images: Vec<usize>) -> Result<Permutation, InvalidValue> {
        let n = images.len();
        if n == 0 {
            return Err(InvalidValue::new("degree must be at least 1"));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(InvalidValue::new(format!("image {v} out of range 1..={n}")));
            }
            if seen[v - 1] {
                return Err(InvalidValue::new(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        assert!(n >= 1);
        Permutation { images: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image `p(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// The preimage `p^{-1}(j)`, 1-based.
    pub fn preimage(&self, j: usize) -> usize {
        1 + self.images.iter().position(|&v| v == j).expect("value in range")
    }

    /// `self * other`, with the right factor acting first:
    /// `(g * h)(i) = g(h(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: (1..=self.degree()).map(|i| self.apply(other.apply(i))).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The transposition `(i, i+1)` in degree `n`.
    pub fn adjacent_transposition(i: usize, n: usize) -> Permutation {
        assert!(i < n, "transposition ({i}, {}) needs degree >= {}", i + 1, i + 1);
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// Extension to degree `n` fixing `m+1..=n` pointwise.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=n);
        Permutation { images }
    }

    /// Whether the permutation fixes every point above `m`.
    pub fn fixes_above(&self, m: usize) -> bool {
        (m + 1..=self.degree()).all(|i| self.apply(i) == i)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// All of `S_n` in lexicographic image-list order.
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images }).collect()
    }

    pub fn sample(n: usize, rng: &mut dyn RngCore) -> Permutation {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    /// Parses the one-line form `[3,1,2]`.
    pub fn parse(text: &str) -> Result<Permutation, ParseError> {
        let images = parse_bracketed_ints(text)?;
        let images = images
            .into_iter()
            .map(|v| usize::try_from(v).map_err(|_| ParseError::new(0, "negative image in permutation")))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(images).map_err(|e| ParseError::new(0, e.0))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[a,b,c]` into signed integers; shared by the permutation and
/// signed-permutation text forms.
pub(crate) fn parse_bracketed_ints(text: &str) -> Result<Vec<i64>, ParseError> {
    let inner = text
        .strip_prefix('[')
        .ok_or_else(|| ParseError::new(0, "expected '['"))?
        .strip_suffix(']')
        .ok_or_else(|| ParseError::new(text.len().saturating_sub(1), "expected ']'"))?;
    if inner.is_empty() {
        return Err(ParseError::new(1, "empty list"));
    }
    let mut out = Vec::new();
    let mut offset = 1;
    for part in inner.split(',') {
        let v: i64 = part
            .trim()
            .parse()
            .map_err(|_| ParseError::new(offset, format!("invalid integer {part:?}")))?;
        out.push(v);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// The cloning map on symmetric groups: bifurcates the arrow starting at `k`
/// into two parallel arrows, yielding a permutation of degree `n + 1`.
///
/// Requires `1 <= k <= n` where `n` is the degree of `g`.
pub fn sigma_clone(k: usize, g: &Permutation) -> Permutation {
    let n = g.degree();
    assert!((1..=n).contains(&k), "clone index {k} out of range 1..={n}");
    let gk = g.apply(k);
    let images = (1..=n + 1)
        .map(|m| {
            if m <= k {
                let gm = g.apply(m);
                if gm <= gk {
                    gm
                } else {
                    gm + 1
                }
            } else {
                let gm = g.apply(m - 1);
                if gm < gk {
                    gm
                } else {
                    gm + 1
                }
            }
        })
        .collect();
    Permutation { images }
}

/// Partial inverse of [`sigma_clone`]: succeeds exactly when `h` has two
/// parallel adjacent arrows at `(k, k+1)`, i.e. `h(k+1) = h(k) + 1`.
pub fn sigma_unclone(k: usize, h: &Permutation) -> Option<Permutation> {
    let degree = h.degree();
    if degree < 2 || k == 0 || k + 1 > degree {
        return None;
    }
    let hk = h.apply(k);
    if h.apply(k + 1) != hk + 1 {
        return None;
    }
    let images = (1..=degree)
        .filter(|&m| m != k + 1)
        .map(|m| {
            let v = h.apply(m);
            if v > hk {
                v - 1
            } else {
                v
            }
        })
        .collect();
    Some(Permutation { images })
}
