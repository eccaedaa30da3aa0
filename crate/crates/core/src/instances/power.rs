//! Direct powers `G^n` of a fixed base group, including the twisted
//! variant.
//!
//! The cloning map copies the `k`th entry into the `(k+1)`st slot; in the
//! twisted variant the two copies are fed through a pair of
//! self-monomorphisms `phi1`, `phi2` first. Representation maps are
//! trivial, so this is a pure cloning system, and it comes with a retract:
//! `G` embeds as `g -> [L, (g), L]` and the first coordinate of a reduced
//! triple maps back.

use std::fmt::Debug;

use itertools::Itertools;
use rand::Rng;
use rand::RngCore;
use serde_json::Value;

use crate::error::InvalidValue;
use crate::perm::Permutation;
use crate::system::{CloningSystem, ElemCodec};
use crate::thompson::{normal_form, ThompsonElement, Triple};

/// A base group for the direct-power construction, together with the two
/// self-monomorphisms used by the twisted cloning maps.
///
/// `phi1` and `phi2` default to the identity (the untwisted system); the
/// preimage tests default to a search over the enumeration, so finite bases
/// only need to override the maps themselves.
pub trait BaseGroup: Clone {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn name(&self) -> String;
    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;
    fn order(&self) -> Option<u128>;
    fn enumerate(&self) -> Option<Vec<Self::Elem>>;
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn phi1(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    fn phi2(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    fn phi1_preimage(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.search_preimage(a, |x| self.phi1(x))
    }

    fn phi2_preimage(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.search_preimage(a, |x| self.phi2(x))
    }

    fn search_preimage(
        &self,
        a: &Self::Elem,
        phi: impl Fn(&Self::Elem) -> Self::Elem,
    ) -> Option<Self::Elem> {
        self.enumerate()
            .expect("preimage search needs a finite base group")
            .into_iter()
            .find(|x| phi(x) == *a)
    }

    fn elem_to_text(&self, a: &Self::Elem) -> String;
    fn elem_from_text(&self, text: &str) -> Result<Self::Elem, InvalidValue>;
    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, value: &Value) -> Result<Self::Elem, InvalidValue>;
}

/// The cyclic group `Z/m`, written additively; the optional twist sets
/// `phi2` to multiplication by a unit.
#[derive(Clone, Debug)]
pub struct CyclicGroup {
    modulus: u64,
    twist: Option<u64>,
}

impl CyclicGroup {
    pub fn new(modulus: u64) -> CyclicGroup {
        assert!(modulus >= 1);
        CyclicGroup { modulus, twist: None }
    }

    /// Twisted variant with `phi1 = id` and `phi2` multiplication by `unit`.
    pub fn with_twist(modulus: u64, unit: u64) -> CyclicGroup {
        assert!(modulus >= 1);
        assert_eq!(gcd(unit % modulus, modulus), 1, "twist must be a unit mod {modulus}");
        CyclicGroup { modulus, twist: Some(unit % modulus) }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl BaseGroup for CyclicGroup {
    type Elem = u64;

    fn name(&self) -> String {
        match self.twist {
            None => format!("z{}", self.modulus),
            Some(u) => format!("z{}:x{u}", self.modulus),
        }
    }

    fn identity(&self) -> u64 {
        0
    }

    fn multiply(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.modulus
    }

    fn invert(&self, a: &u64) -> u64 {
        (self.modulus - a) % self.modulus
    }

    fn order(&self) -> Option<u128> {
        Some(self.modulus as u128)
    }

    fn enumerate(&self) -> Option<Vec<u64>> {
        Some((0..self.modulus).collect())
    }

    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.modulus)
    }

    fn phi2(&self, a: &u64) -> u64 {
        match self.twist {
            None => *a,
            Some(u) => a * u % self.modulus,
        }
    }

    fn phi2_preimage(&self, a: &u64) -> Option<u64> {
        match self.twist {
            None => Some(*a),
            // multiply by the inverse unit
            Some(u) => {
                let inv = (1..self.modulus).find(|v| v * u % self.modulus == 1)?;
                Some(a * inv % self.modulus)
            }
        }
    }

    fn elem_to_text(&self, a: &u64) -> String {
        a.to_string()
    }

    fn elem_from_text(&self, text: &str) -> Result<u64, InvalidValue> {
        let v: u64 = text
            .trim()
            .parse()
            .map_err(|_| InvalidValue::new(format!("invalid residue {text:?}")))?;
        if v >= self.modulus {
            return Err(InvalidValue::new(format!("residue {v} out of range mod {}", self.modulus)));
        }
        Ok(v)
    }

    fn elem_to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }

    fn elem_from_json(&self, value: &Value) -> Result<u64, InvalidValue> {
        match value {
            Value::Number(x) => {
                let v = x
                    .as_u64()
                    .ok_or_else(|| InvalidValue::new(format!("invalid residue {x}")))?;
                self.elem_from_text(&v.to_string())
            }
            Value::String(s) => self.elem_from_text(s),
            other => Err(InvalidValue::new(format!("expected residue, found {other}"))),
        }
    }
}

/// The symmetric group `S_3` as a base group; the optional twist sets
/// `phi2` to conjugation by a fixed element.
#[derive(Clone, Debug)]
pub struct S3Base {
    conj: Option<Permutation>,
}

impl S3Base {
    pub fn new() -> S3Base {
        S3Base { conj: None }
    }

    pub fn with_conjugation(t: Permutation) -> S3Base {
        assert_eq!(t.degree(), 3);
        S3Base { conj: Some(t) }
    }
}

impl Default for S3Base {
    fn default() -> Self {
        S3Base::new()
    }
}

impl BaseGroup for S3Base {
    type Elem = Permutation;

    fn name(&self) -> String {
        match &self.conj {
            None => "s3".into(),
            Some(t) => format!("s3:conj{t}"),
        }
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(3)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn invert(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn order(&self) -> Option<u128> {
        Some(6)
    }

    fn enumerate(&self) -> Option<Vec<Permutation>> {
        Some(Permutation::enumerate(3))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Permutation {
        Permutation::sample(3, rng)
    }

    fn phi2(&self, a: &Permutation) -> Permutation {
        match &self.conj {
            None => a.clone(),
            Some(t) => t.inverse().compose(a).compose(t),
        }
    }

    fn phi2_preimage(&self, a: &Permutation) -> Option<Permutation> {
        match &self.conj {
            None => Some(a.clone()),
            Some(t) => Some(t.compose(a).compose(&t.inverse())),
        }
    }

    fn elem_to_text(&self, a: &Permutation) -> String {
        a.to_string()
    }

    fn elem_from_text(&self, text: &str) -> Result<Permutation, InvalidValue> {
        let p = Permutation::parse(text.trim()).map_err(|e| InvalidValue::new(e.to_string()))?;
        if p.degree() != 3 {
            return Err(InvalidValue::new("base elements must have degree 3"));
        }
        Ok(p)
    }

    fn elem_to_json(&self, a: &Permutation) -> Value {
        Value::Array(a.images().iter().map(|&v| Value::from(v)).collect())
    }

    fn elem_from_json(&self, value: &Value) -> Result<Permutation, InvalidValue> {
        match value {
            Value::String(s) => self.elem_from_text(s),
            Value::Array(_) => {
                use crate::system::ElemCodec as _;
                crate::instances::symmetric::SymmetricSystem.elem_from_json(3, value)
            }
            other => Err(InvalidValue::new(format!("expected permutation, found {other}"))),
        }
    }
}

/// A tuple `(g_1, ..., g_n)` in the direct power `G^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerElement<E> {
    pub entries: Vec<E>,
}

impl<E: Debug> Debug for PowerElement<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, ")")
    }
}

/// The direct-power cloning system over a base group.
#[derive(Clone, Debug)]
pub struct PowerSystem<B: BaseGroup> {
    pub base: B,
}

impl<B: BaseGroup> PowerSystem<B> {
    pub fn new(base: B) -> PowerSystem<B> {
        PowerSystem { base }
    }
}

impl<B: BaseGroup> CloningSystem for PowerSystem<B> {
    type Elem = PowerElement<B::Elem>;

    fn name(&self) -> String {
        format!("power:{}", self.base.name())
    }

    fn rank(&self, g: &Self::Elem) -> usize {
        g.entries.len()
    }

    fn identity(&self, n: usize) -> Self::Elem {
        assert!(n >= 1);
        PowerElement { entries: vec![self.base.identity(); n] }
    }

    fn multiply(&self, g: &Self::Elem, h: &Self::Elem) -> Self::Elem {
        assert_eq!(g.entries.len(), h.entries.len(), "rank mismatch");
        PowerElement {
            entries: g
                .entries
                .iter()
                .zip(&h.entries)
                .map(|(a, b)| self.base.multiply(a, b))
                .collect(),
        }
    }

    fn invert(&self, g: &Self::Elem) -> Self::Elem {
        PowerElement { entries: g.entries.iter().map(|a| self.base.invert(a)).collect() }
    }

    fn iota(&self, g: &Self::Elem, n: usize) -> Self::Elem {
        assert!(n >= g.entries.len());
        let mut entries = g.entries.clone();
        entries.resize(n, self.base.identity());
        PowerElement { entries }
    }

    fn rho(&self, g: &Self::Elem) -> Permutation {
        Permutation::identity(g.entries.len())
    }

    fn kappa(&self, k: usize, g: &Self::Elem) -> Self::Elem {
        let n = g.entries.len();
        assert!((1..=n).contains(&k), "clone index {k} out of range 1..={n}");
        let mut entries = Vec::with_capacity(n + 1);
        entries.extend_from_slice(&g.entries[..k - 1]);
        entries.push(self.base.phi1(&g.entries[k - 1]));
        entries.push(self.base.phi2(&g.entries[k - 1]));
        entries.extend_from_slice(&g.entries[k..]);
        PowerElement { entries }
    }

    fn try_unclone(&self, k: usize, h: &Self::Elem) -> Option<Self::Elem> {
        let size = h.entries.len();
        if size < 2 || k == 0 || k + 1 > size {
            return None;
        }
        let x1 = self.base.phi1_preimage(&h.entries[k - 1])?;
        let x2 = self.base.phi2_preimage(&h.entries[k])?;
        if x1 != x2 {
            return None;
        }
        let mut entries = Vec::with_capacity(size - 1);
        entries.extend_from_slice(&h.entries[..k - 1]);
        entries.push(x1);
        entries.extend_from_slice(&h.entries[k + 1..]);
        let g = PowerElement { entries };
        (self.kappa(k, &g) == *h).then_some(g)
    }

    fn in_iota_image(&self, h: &Self::Elem) -> bool {
        assert!(h.entries.len() >= 2);
        *h.entries.last().unwrap() == self.base.identity()
    }

    fn order(&self, n: usize) -> Option<u128> {
        self.base.order()?.checked_pow(n as u32)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<Self::Elem>> {
        let base = self.base.enumerate()?;
        Some(
            std::iter::repeat_n(base, n)
                .multi_cartesian_product()
                .map(|entries| PowerElement { entries })
                .collect(),
        )
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Self::Elem {
        PowerElement { entries: (0..n).map(|_| self.base.sample(rng)).collect() }
    }

    fn elem_to_text(&self, g: &Self::Elem) -> String {
        format!("({})", g.entries.iter().map(|e| self.base.elem_to_text(e)).join(","))
    }
}

impl<B: BaseGroup> ElemCodec for PowerSystem<B> {
    fn elem_to_json(&self, g: &Self::Elem) -> Value {
        Value::Array(g.entries.iter().map(|e| self.base.elem_to_json(e)).collect())
    }

    fn elem_from_json(&self, n: usize, value: &Value) -> Result<Self::Elem, InvalidValue> {
        let g = match value {
            Value::String(s) => return self.elem_from_text(n, s),
            Value::Array(items) => PowerElement {
                entries: items
                    .iter()
                    .map(|v| self.base.elem_from_json(v))
                    .collect::<Result<Vec<_>, _>>()?,
            },
            other => return Err(InvalidValue::new(format!("expected tuple, found {other}"))),
        };
        check_rank(&g, n)?;
        Ok(g)
    }

    fn elem_from_text(&self, n: usize, text: &str) -> Result<Self::Elem, InvalidValue> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| InvalidValue::new("expected tuple form (a,b,...)"))?;
        let entries = split_top_level(inner)
            .into_iter()
            .map(|part| self.base.elem_from_text(part))
            .collect::<Result<Vec<_>, _>>()?;
        if entries.is_empty() {
            return Err(InvalidValue::new("tuple must have at least one entry"));
        }
        let g = PowerElement { entries };
        check_rank(&g, n)?;
        Ok(g)
    }
}

fn check_rank<E>(g: &PowerElement<E>, n: usize) -> Result<(), InvalidValue> {
    if g.entries.len() != n {
        return Err(InvalidValue::new(format!("expected rank {n}, found {}", g.entries.len())));
    }
    Ok(())
}

/// Splits on commas outside any brackets, so `[2,1,3],[1,2,3]` yields two
/// parts.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Verifies exhaustively (finite bases only) that `phi1` and `phi2` are
/// injective homomorphisms and that the preimage tests invert them.
pub fn check_base_monomorphisms<B: BaseGroup>(base: &B) -> Result<(), InvalidValue> {
    let elems = base
        .enumerate()
        .ok_or_else(|| InvalidValue::new("monomorphism check needs a finite base group"))?;
    for (label, phi, pre) in [
        ("phi1", &(|a: &B::Elem| base.phi1(a)) as &dyn Fn(&B::Elem) -> B::Elem, &(|a: &B::Elem| base.phi1_preimage(a)) as &dyn Fn(&B::Elem) -> Option<B::Elem>),
        ("phi2", &|a: &B::Elem| base.phi2(a), &|a: &B::Elem| base.phi2_preimage(a)),
    ] {
        for a in &elems {
            if pre(&phi(a)).as_ref() != Some(a) {
                return Err(InvalidValue::new(format!("{label} preimage does not invert {label}")));
            }
            for b in &elems {
                if phi(&base.multiply(a, b)) != base.multiply(&phi(a), &phi(b)) {
                    return Err(InvalidValue::new(format!("{label} is not a homomorphism")));
                }
                if a != b && phi(a) == phi(b) {
                    return Err(InvalidValue::new(format!("{label} is not injective")));
                }
            }
        }
    }
    Ok(())
}

/// The embedding `G -> Thomp(G^*)`, `g -> [L, (g), L]`.
pub fn retract_inject<B: BaseGroup>(
    sys: &PowerSystem<B>,
    g: B::Elem,
) -> ThompsonElement<PowerElement<B::Elem>> {
    normal_form(
        sys,
        Triple {
            tminus: crate::forest::Tree::Leaf,
            g: PowerElement { entries: vec![g] },
            tplus: crate::forest::Tree::Leaf,
        },
    )
}

/// The retraction `Thomp(G^*) -> G`: the first coordinate of the reduced
/// representative. Together with [`retract_inject`] it composes to the
/// identity on `G`; in the untwisted case it is a group homomorphism,
/// which the test suite checks rather than assumes.
pub fn retract_eval<B: BaseGroup>(x: &ThompsonElement<PowerElement<B::Elem>>) -> B::Elem {
    x.g().entries[0].clone()
}
