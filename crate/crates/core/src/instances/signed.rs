//! The signed symmetric groups (Coxeter type B) and their cloning system.
//!
//! `S_n^+-` is realized as the permutations `g` of `{+-1, ..., +-n}` with
//! `g(-i) = -g(i)`. Generators: `s_i = (i, i+1)(-i, -(i+1))` for `i < n`
//! and `s_n = (n, -n)`. The representation map sends `g` to its
//! absolute-value permutation, which kills `s_n`.
//!
//! The cloning maps are defined on generators by a six-case table
//! ([`generator_clone_word`]) and extended to arbitrary elements through
//! the product axiom ([`clone_word`]). [`signed_clone`] is an equivalent
//! closed form used as the production path; the word route stays around
//! permanently as its oracle, and the two are compared exhaustively in the
//! acceptance suite. In arrow pictures: a positive arrow clones into two
//! parallel arrows of the same sign, a negative arrow into two arrows that
//! cross and are both negative.

use std::fmt;

use itertools::Itertools;
use rand::Rng;
use rand::RngCore;
use serde_json::Value;

use crate::error::{InvalidValue, ParseError};
use crate::perm::{parse_bracketed_ints, sigma_clone, sigma_unclone, Permutation};
use crate::system::{CloningSystem, ElemCodec};

/// An element of `S_n^+-`: the signed image list `[g(1), ..., g(n)]` with
/// `g(i) in {+-1..+-n}`; values on negative inputs follow from
/// `g(-i) = -g(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i64>) -> Result<SignedPermutation, InvalidValue> {
        let n = images.len();
        if n == 0 {
            return Err(InvalidValue::new("degree must be at least 1"));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(InvalidValue::new(format!("image {v} out of range")));
            }
            if seen[a - 1] {
                return Err(InvalidValue::new(format!("absolute image {a} repeated")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> SignedPermutation {
        assert!(n >= 1);
        SignedPermutation { images: (1..=n as i64).collect() }
    }

    /// The generator `s_i` in degree `n`: for `i < n` the sign-preserving
    /// adjacent transposition, for `i = n` the sign flip of the last point.
    pub fn generator(i: usize, n: usize) -> SignedPermutation {
        assert!((1..=n).contains(&i));
        let mut images: Vec<i64> = (1..=n as i64).collect();
        if i < n {
            images.swap(i - 1, i);
        } else {
            images[n - 1] = -(n as i64);
        }
        SignedPermutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The signed image of `i`, where `i` may be negative.
    pub fn apply(&self, i: i64) -> i64 {
        if i > 0 {
            self.images[(i - 1) as usize]
        } else {
            -self.images[(-i - 1) as usize]
        }
    }

    /// `self * other` with the right factor acting first, as for
    /// [`Permutation`].
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        SignedPermutation {
            images: (1..=self.degree() as i64).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0i64; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v.unsigned_abs() - 1) as usize] = v.signum() * (i as i64 + 1);
        }
        SignedPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// The absolute-value permutation `i -> |g(i)|`.
    pub fn abs(&self) -> Permutation {
        Permutation::new(self.images.iter().map(|&v| v.unsigned_abs() as usize).collect())
            .expect("absolute values form a permutation")
    }

    /// Extension to degree `n` fixing the new points.
    pub fn extend(&self, n: usize) -> SignedPermutation {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as i64 + 1..=n as i64);
        SignedPermutation { images }
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    /// All `2^n n!` elements, in a fixed deterministic order.
    pub fn enumerate(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for p in Permutation::enumerate(n) {
            for mask in 0..(1u64 << n) {
                let images = p
                    .images()
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -(v as i64) } else { v as i64 })
                    .collect();
                out.push(SignedPermutation { images });
            }
        }
        out
    }

    pub fn sample(n: usize, rng: &mut dyn RngCore) -> SignedPermutation {
        let p = Permutation::sample(n, rng);
        let images = p
            .images()
            .iter()
            .map(|&v| if rng.gen::<bool>() { -(v as i64) } else { v as i64 })
            .collect();
        SignedPermutation { images }
    }

    /// Parses the signed one-line form `[1,-3,-2]`.
    pub fn parse(text: &str) -> Result<SignedPermutation, ParseError> {
        let images = parse_bracketed_ints(text)?;
        SignedPermutation::new(images).map_err(|e| ParseError::new(0, e.0))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word in the generators `s_1..s_n` of `S_n^+-`.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    pub degree: usize,
    pub letters: Vec<usize>,
}

impl GeneratorWord {
    pub fn new(degree: usize, letters: Vec<usize>) -> GeneratorWord {
        assert!(letters.iter().all(|&i| (1..=degree).contains(&i)), "letter out of range");
        GeneratorWord { degree, letters }
    }

    /// The product of the word's generators, right factor acting first.
    pub fn evaluate(&self) -> SignedPermutation {
        let mut acc = SignedPermutation::identity(self.degree);
        for &i in &self.letters {
            acc = acc.compose(&SignedPermutation::generator(i, self.degree));
        }
        acc
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        f.write_str(&self.letters.iter().map(|i| format!("s{i}")).join(" "))
    }
}

impl fmt::Debug for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The cloning table on generators: the word in `S_{n+1}^+-` that
/// `kappa_k` assigns to `s_i` in degree `n`.
///
/// The six cases, for `1 <= i <= n` and `1 <= k <= n`:
///
/// | case           | word                  |
/// |----------------|-----------------------|
/// | `k < i < n`    | `s_{i+1}`             |
/// | `k = i < n`    | `s_i s_{i+1}`         |
/// | `k = i+1 <= n` | `s_{i+1} s_i`         |
/// | `i+1 < k <= n` | `s_i`                 |
/// | `k < i = n`    | `s_{n+1}`             |
/// | `k = i = n`    | `s_{n+1} s_n s_{n+1}` |
pub fn generator_clone_word(i: usize, k: usize, n: usize) -> GeneratorWord {
    assert!((1..=n).contains(&i) && (1..=n).contains(&k), "indices out of range");
    let letters = if i < n {
        if k < i {
            vec![i + 1]
        } else if k == i {
            vec![i, i + 1]
        } else if k == i + 1 {
            vec![i + 1, i]
        } else {
            vec![i]
        }
    } else if k < n {
        vec![n + 1]
    } else {
        vec![n + 1, n, n + 1]
    };
    GeneratorWord::new(n + 1, letters)
}

/// Extends the cloning maps from generators to an arbitrary word via the
/// product axiom: `(w1 w2...wm) kappa_k = (w1) kappa_{rho(w2...wm)(k)}
/// (w2...wm) kappa_k`, recursively.
pub fn clone_word(k: usize, word: &GeneratorWord) -> SignedPermutation {
    let n = word.degree;
    assert!((1..=n).contains(&k), "clone index {k} out of range 1..={n}");
    let mut cloned = SignedPermutation::identity(n + 1);
    let mut suffix = SignedPermutation::identity(n);
    for &letter in word.letters.iter().rev() {
        let at = suffix.abs().apply(k);
        let head = generator_clone_word(letter, at, n).evaluate();
        cloned = head.compose(&cloned);
        suffix = SignedPermutation::generator(letter, n).compose(&suffix);
    }
    cloned
}

/// A generator word evaluating to `g`: a bubble-sort word for the
/// absolute-value part followed, for each position `j` with `g(j) < 0`, by
/// the sign-flip word `s_j s_{j+1} ... s_n ... s_{j+1} s_j`.
///
/// The construction is self-verifying: the returned word is evaluated and
/// checked against `g` before being returned.
pub fn signed_to_word(g: &SignedPermutation) -> GeneratorWord {
    let n = g.degree();
    let mut letters = Vec::new();

    // permutation part: peel adjacent transpositions off the right
    let mut q = g.abs();
    let mut peeled = Vec::new();
    while let Some(i) = (1..n).find(|&i| q.apply(i) > q.apply(i + 1)) {
        q = q.compose(&Permutation::adjacent_transposition(i, n));
        peeled.push(i);
    }
    peeled.reverse();
    letters.extend(peeled);

    // sign part: flip each position that g sends negative
    for j in 1..=n {
        if g.apply(j as i64) < 0 {
            letters.extend(j..=n);
            letters.extend((j..n).rev());
        }
    }

    let word = GeneratorWord::new(n, letters);
    assert_eq!(word.evaluate(), *g, "word decomposition must reproduce its input");
    word
}

/// The cloning map evaluated through the word route: decompose, then apply
/// the product axiom. Reference implementation for [`signed_clone`].
pub fn signed_clone_via_word(k: usize, g: &SignedPermutation) -> SignedPermutation {
    clone_word(k, &signed_to_word(g))
}

/// Closed form of the cloning map on `S_n^+-`.
///
/// Let `q` be the symmetric-group clone of `|g|` at `k`. A positive arrow
/// `k` bifurcates into two parallel positive copies, so the result is `q`
/// with every arrow keeping the sign of its source arrow. A negative arrow
/// `k` bifurcates into two crossing arrows, both negative: the values of
/// `q` at positions `k`, `k+1` are exchanged, those two arrows are
/// negative, and all others keep their source sign.
pub fn signed_clone(k: usize, g: &SignedPermutation) -> SignedPermutation {
    let n = g.degree();
    assert!((1..=n).contains(&k), "clone index {k} out of range 1..={n}");
    let mut abs_images: Vec<i64> =
        sigma_clone(k, &g.abs()).images().iter().map(|&v| v as i64).collect();
    if g.apply(k as i64) < 0 {
        abs_images.swap(k - 1, k);
    }
    let images = abs_images
        .iter()
        .enumerate()
        .map(|(idx, &v)| {
            let source = if idx < k { idx as i64 + 1 } else { idx as i64 };
            v * g.apply(source).signum()
        })
        .collect();
    SignedPermutation { images }
}

/// Partial inverse of [`signed_clone`]: recognizes the parallel-positive
/// and crossed-negative patterns at `(k, k+1)` and undoes them.
pub fn signed_unclone(k: usize, h: &SignedPermutation) -> Option<SignedPermutation> {
    let degree = h.degree();
    if degree < 2 || k == 0 || k + 1 > degree {
        return None;
    }
    let hk = h.apply(k as i64);
    let hk1 = h.apply(k as i64 + 1);
    let mut abs = h.abs();
    if hk < 0 && hk1 < 0 {
        let mut images = abs.images().to_vec();
        images.swap(k - 1, k);
        abs = Permutation::new(images).unwrap();
    } else if !(hk > 0 && hk1 > 0) {
        return None;
    }
    let small = sigma_unclone(k, &abs)?;
    let images = small
        .images()
        .iter()
        .enumerate()
        .map(|(idx, &v)| {
            let source = if idx < k { idx as i64 + 1 } else { idx as i64 + 2 };
            v as i64 * h.apply(source).signum()
        })
        .collect();
    let g = SignedPermutation { images };
    (signed_clone(k, &g) == *h).then_some(g)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SignedSystem;

impl CloningSystem for SignedSystem {
    type Elem = SignedPermutation;

    fn name(&self) -> String {
        "signed".into()
    }

    fn rank(&self, g: &SignedPermutation) -> usize {
        g.degree()
    }

    fn identity(&self, n: usize) -> SignedPermutation {
        SignedPermutation::identity(n)
    }

    fn multiply(&self, g: &SignedPermutation, h: &SignedPermutation) -> SignedPermutation {
        g.compose(h)
    }

    fn invert(&self, g: &SignedPermutation) -> SignedPermutation {
        g.inverse()
    }

    fn iota(&self, g: &SignedPermutation, n: usize) -> SignedPermutation {
        g.extend(n)
    }

    fn rho(&self, g: &SignedPermutation) -> Permutation {
        g.abs()
    }

    fn kappa(&self, k: usize, g: &SignedPermutation) -> SignedPermutation {
        signed_clone(k, g)
    }

    fn try_unclone(&self, k: usize, h: &SignedPermutation) -> Option<SignedPermutation> {
        signed_unclone(k, h)
    }

    fn in_iota_image(&self, h: &SignedPermutation) -> bool {
        let n = h.degree();
        assert!(n >= 2);
        h.apply(n as i64) == n as i64
    }

    fn order(&self, n: usize) -> Option<u128> {
        let fact: u128 = (1..=n as u128).try_fold(1u128, |acc, v| acc.checked_mul(v))?;
        fact.checked_mul(1u128.checked_shl(n as u32)?)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<SignedPermutation>> {
        Some(SignedPermutation::enumerate(n))
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> SignedPermutation {
        SignedPermutation::sample(n, rng)
    }

    fn elem_to_text(&self, g: &SignedPermutation) -> String {
        g.to_string()
    }
}

impl ElemCodec for SignedSystem {
    fn elem_to_json(&self, g: &SignedPermutation) -> Value {
        Value::Array(g.images().iter().map(|&v| Value::from(v)).collect())
    }

    fn elem_from_json(&self, n: usize, value: &Value) -> Result<SignedPermutation, InvalidValue> {
        let g = match value {
            Value::String(s) => return self.elem_from_text(n, s),
            Value::Array(items) => {
                let images = items
                    .iter()
                    .map(|v| v.as_i64().ok_or_else(|| InvalidValue::new(format!("bad image value {v}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                SignedPermutation::new(images)?
            }
            other => return Err(InvalidValue::new(format!("expected signed permutation, found {other}"))),
        };
        check_degree(&g, n)?;
        Ok(g)
    }

    fn elem_from_text(&self, n: usize, text: &str) -> Result<SignedPermutation, InvalidValue> {
        let g = SignedPermutation::parse(text).map_err(|e| InvalidValue::new(e.to_string()))?;
        check_degree(&g, n)?;
        Ok(g)
    }
}

fn check_degree(g: &SignedPermutation, n: usize) -> Result<(), InvalidValue> {
    if g.degree() != n {
        return Err(InvalidValue::new(format!("expected degree {n}, found {}", g.degree())));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sp(images: &[i64]) -> SignedPermutation {
        SignedPermutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn generators_and_group_structure() {
        let n = 3;
        for i in 1..=n {
            let s = SignedPermutation::generator(i, n);
            assert!(s.compose(&s).is_identity(), "s{i}^2 = 1");
        }
        // braid relation (s1 s2)^3 = 1 and the order-4 relation (s2 s3)^4 = 1
        let s1 = SignedPermutation::generator(1, 3);
        let s2 = SignedPermutation::generator(2, 3);
        let s3 = SignedPermutation::generator(3, 3);
        let b = s1.compose(&s2);
        assert!(b.compose(&b).compose(&b).is_identity());
        let c = s2.compose(&s3);
        let c2 = c.compose(&c);
        assert!(!c2.is_identity());
        assert!(c2.compose(&c2).is_identity());
        // commuting relation |i-j| > 1
        assert_eq!(s1.compose(&s3), s3.compose(&s1));
    }

    #[test]
    fn enumerate_has_full_order() {
        assert_eq!(SignedPermutation::enumerate(1).len(), 2);
        assert_eq!(SignedPermutation::enumerate(3).len(), 48);
        let all = SignedPermutation::enumerate(3);
        let mut dedup: Vec<_> = all.iter().map(|g| g.images().to_vec()).collect();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 48);
    }

    #[test]
    fn rho_is_a_homomorphism_killing_sn() {
        let sys = SignedSystem;
        let n = 3;
        assert!(sys.rho(&SignedPermutation::generator(n, n)).is_identity());
        for i in 1..n {
            assert_eq!(
                sys.rho(&SignedPermutation::generator(i, n)),
                Permutation::adjacent_transposition(i, n)
            );
        }
        for g in SignedPermutation::enumerate(n) {
            for h in SignedPermutation::enumerate(n) {
                assert_eq!(sys.rho(&g.compose(&h)), sys.rho(&g).compose(&sys.rho(&h)));
            }
        }
    }

    #[test]
    fn word_round_trip_exhaustive_degree_3() {
        for g in SignedPermutation::enumerate(3) {
            let word = signed_to_word(&g);
            assert_eq!(word.evaluate(), g);
        }
        assert!(signed_to_word(&SignedPermutation::identity(3)).letters.is_empty());
        assert_eq!(signed_to_word(&SignedPermutation::generator(3, 3)).letters, vec![3]);
    }

    #[test]
    fn generator_table_cases() {
        let n = 3;
        assert_eq!(generator_clone_word(3, 3, n).letters, vec![4, 3, 4]);
        assert_eq!(generator_clone_word(3, 1, n).letters, vec![4]);
        assert_eq!(generator_clone_word(2, 2, n).letters, vec![2, 3]);
        assert_eq!(generator_clone_word(2, 3, n).letters, vec![3, 2]);
        assert_eq!(generator_clone_word(1, 3, n).letters, vec![1]);
        assert_eq!(generator_clone_word(2, 1, n).letters, vec![3]);
    }

    #[test]
    fn clone_of_last_generator_crosses_and_flips() {
        // (s_n) kappa_n sends n to -(n+1) and n+1 to -n
        for n in 1..=4 {
            let c = signed_clone(n, &SignedPermutation::generator(n, n));
            assert_eq!(c.apply(n as i64), -(n as i64 + 1));
            assert_eq!(c.apply(n as i64 + 1), -(n as i64));
            for i in 1..n as i64 {
                assert_eq!(c.apply(i), i);
            }
            assert_eq!(c, clone_word(n, &GeneratorWord::new(n, vec![n])));
        }
    }

    #[test]
    fn clone_example_fig_style() {
        // s_2 in degree 2 is [1,-2]; cloning at k = 2 crosses the negative arrow
        let c = signed_clone(2, &sp(&[1, -2]));
        assert_eq!(c, sp(&[1, -3, -2]));
    }

    #[test]
    fn positive_elements_clone_like_plain_permutations() {
        for g in SignedPermutation::enumerate(3) {
            if g.images().iter().all(|&v| v > 0) {
                for k in 1..=3 {
                    let c = signed_clone(k, &g);
                    assert!(c.images().iter().all(|&v| v > 0));
                    assert_eq!(c.abs(), sigma_clone(k, &g.abs()));
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_word_oracle_exhaustively() {
        for g in SignedPermutation::enumerate(3) {
            for k in 1..=3 {
                assert_eq!(signed_clone(k, &g), signed_clone_via_word(k, &g), "g={g} k={k}");
            }
        }
    }

    #[test]
    fn closed_form_matches_word_oracle_sampled_degree_4() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..500 {
            let g = SignedPermutation::sample(4, &mut rng);
            let k = rng.gen_range(1..=4);
            assert_eq!(signed_clone(k, &g), signed_clone_via_word(k, &g), "g={g} k={k}");
        }
    }

    #[test]
    fn word_extension_is_well_defined() {
        // cloning the same element through structurally different words
        // must agree: pad with squares of generators and whole relators
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in SignedPermutation::enumerate(3) {
            let base = signed_to_word(&g);
            for k in 1..=3 {
                let expected = clone_word(k, &base);
                for _ in 0..4 {
                    let mut letters = base.letters.clone();
                    let at = rng.gen_range(0..=letters.len());
                    let i = rng.gen_range(1..=3usize);
                    letters.splice(at..at, [i, i]);
                    // append the order-4 relator (s_{n-1} s_n)^4
                    if rng.gen::<bool>() {
                        letters.extend([2, 3, 2, 3, 2, 3, 2, 3]);
                    }
                    let padded = GeneratorWord::new(3, letters);
                    assert_eq!(padded.evaluate(), g);
                    assert_eq!(clone_word(k, &padded), expected, "g={g} k={k}");
                }
            }
        }
    }

    #[test]
    fn relator_cloning_cancels() {
        // the 16-letter expansion of ((s_{n-1} s_n)^4) kappa_k collapses to 1
        for n in 2..=5 {
            let relator = GeneratorWord::new(n, vec![n - 1, n, n - 1, n, n - 1, n, n - 1, n]);
            assert!(relator.evaluate().is_identity());
            for k in 1..=n {
                assert!(clone_word(k, &relator).is_identity(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn unclone_examples_and_round_trip() {
        assert_eq!(signed_unclone(2, &sp(&[1, -3, -2])), Some(sp(&[1, -2])));
        assert_eq!(signed_unclone(2, &sp(&[1, 3, -2])), None);
        // brute force the mixed-sign case: nothing in S_2^+- clones to it
        for g in SignedPermutation::enumerate(2) {
            assert_ne!(signed_clone(2, &g), sp(&[1, 3, -2]));
        }
        for g in SignedPermutation::enumerate(3) {
            for k in 1..=3 {
                assert_eq!(signed_unclone(k, &signed_clone(k, &g)).as_ref(), Some(&g), "g={g}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(SignedPermutation::parse("[1,-3,-2]").unwrap(), sp(&[1, -3, -2]));
        assert_eq!(sp(&[1, -3, -2]).to_string(), "[1,-3,-2]");
        assert!(SignedPermutation::parse("[1,1]").is_err());
        assert!(SignedPermutation::parse("[1,-1]").is_err());
        assert_eq!(GeneratorWord::new(3, vec![3, 2, 3]).to_string(), "s3 s2 s3");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_signed(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
            (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                SignedPermutation::sample(n, &mut rng)
            })
        }

        proptest! {
            #[test]
            fn word_decomposition_reproduces_its_input(g in arb_signed(7)) {
                // signed_to_word asserts its own postcondition
                let word = signed_to_word(&g);
                prop_assert_eq!(word.evaluate(), g);
            }

            #[test]
            fn clone_then_unclone_round_trips(g in arb_signed(7), k in 1usize..100) {
                let k = 1 + (k - 1) % g.degree();
                let cloned = signed_clone(k, &g);
                prop_assert_eq!(cloned.degree(), g.degree() + 1);
                prop_assert_eq!(signed_unclone(k, &cloned), Some(g));
            }

            #[test]
            fn rho_and_inverse_commute(g in arb_signed(7)) {
                prop_assert_eq!(g.abs().inverse(), g.inverse().abs());
                prop_assert!(g.compose(&g.inverse()).is_identity());
            }
        }
    }
}
