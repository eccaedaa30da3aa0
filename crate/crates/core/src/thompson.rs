//! The generalized Thompson group of a cloning system.
//!
//! Elements are equivalence classes of triples `(T-, g, T+)` where both
//! trees have `n` leaves and `g` has rank `n`. The equivalence is generated
//! by expansions: add a caret to leaf `k` of `T+`, a caret to leaf
//! `rho(g)(k)` of `T-`, and replace `g` by `kappa_k(g)`. A
//! [`ThompsonElement`] stores the fully reduced representative of its
//! class; products are computed by expanding both factors over a common
//! tree and reducing.
//!
//! Reduced representatives are canonical as long as reduction is confluent.
//! That holds for Thompson's group V and is checked empirically for every
//! built-in instance (see the reduction-order probe in the acceptance
//! suite); [`equals`] additionally cross-checks the algebraic equality test
//! `x y^{-1} = 1` in debug builds and panics on any disagreement.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::InvalidValue;
use crate::forest::Tree;
use crate::instances::symmetric::SymmetricSystem;
use crate::perm::Permutation;
use crate::system::{CloningSystem, ElemCodec};

/// An unreduced tree-pair triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triple<E> {
    pub tminus: Tree,
    pub g: E,
    pub tplus: Tree,
}

impl<E> Triple<E> {
    /// Validates that both trees have as many leaves as the rank of `g`.
    pub fn new<S>(sys: &S, tminus: Tree, g: E, tplus: Tree) -> Result<Triple<E>, InvalidValue>
    where
        S: CloningSystem<Elem = E>,
    {
        let n = sys.rank(&g);
        if tminus.leaf_count() != n || tplus.leaf_count() != n {
            return Err(InvalidValue::new(format!(
                "leaf counts ({}, {}) must both equal the rank {n}",
                tminus.leaf_count(),
                tplus.leaf_count()
            )));
        }
        Ok(Triple { tminus, g, tplus })
    }
}

/// An element of the Thompson-like group, held as its reduced
/// representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThompsonElement<E> {
    triple: Triple<E>,
}

impl<E> ThompsonElement<E> {
    pub fn triple(&self) -> &Triple<E> {
        &self.triple
    }

    pub fn tminus(&self) -> &Tree {
        &self.triple.tminus
    }

    pub fn g(&self) -> &E {
        &self.triple.g
    }

    pub fn tplus(&self) -> &Tree {
        &self.triple.tplus
    }
}

/// The identity `[L, 1, L]`.
pub fn identity<S: CloningSystem>(sys: &S) -> ThompsonElement<S::Elem> {
    ThompsonElement { triple: Triple { tminus: Tree::Leaf, g: sys.identity(1), tplus: Tree::Leaf } }
}

/// Whether the reduced representative is the identity triple.
pub fn is_identity<S: CloningSystem>(sys: &S, x: &ThompsonElement<S::Elem>) -> bool {
    x.triple.tminus.is_leaf() && x.triple.tplus.is_leaf() && x.triple.g == sys.identity(1)
}

/// One expansion: caret at leaf `k` of `T+`, caret at leaf `rho(g)(k)` of
/// `T-`, and `g` fed through `kappa_k`. Represents the same group element.
pub fn expand<S: CloningSystem>(sys: &S, t: &Triple<S::Elem>, k: usize) -> Triple<S::Elem> {
    let n = sys.rank(&t.g);
    assert!((1..=n).contains(&k), "expansion index {k} out of range 1..={n}");
    Triple {
        tminus: t.tminus.add_caret(sys.rho(&t.g).apply(k)),
        g: sys.kappa(k, &t.g),
        tplus: t.tplus.add_caret(k),
    }
}

/// One reduction at `k`, when `g` uncloned at `k` and both trees carry the
/// matching sibling carets; `None` if the triple is not reducible there.
pub fn reduce_step<S: CloningSystem>(sys: &S, t: &Triple<S::Elem>, k: usize) -> Option<Triple<S::Elem>> {
    let n = sys.rank(&t.g);
    if n < 2 || k == 0 || k >= n {
        return None;
    }
    let g0 = sys.try_unclone(k, &t.g)?;
    let tplus = t.tplus.remove_caret(k)?;
    let tminus = t.tminus.remove_caret(sys.rho(&g0).apply(k))?;
    Some(Triple { tminus, g: g0, tplus })
}

/// Reduction-order strategies for the confluence probe. The canonical
/// representative always uses `SmallestIndex`.
#[derive(Clone, Copy, Debug)]
pub enum ReductionOrder {
    SmallestIndex,
    LargestIndex,
    Seeded(u64),
}

/// Fully reduces a triple, choosing reduction indices per `order`.
pub fn normal_form_with_order<S: CloningSystem>(
    sys: &S,
    triple: Triple<S::Elem>,
    order: ReductionOrder,
) -> ThompsonElement<S::Elem> {
    let mut rng = match order {
        ReductionOrder::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cur = triple;
    loop {
        let n = sys.rank(&cur.g);
        let mut reducible: Vec<(usize, Triple<S::Elem>)> =
            (1..n).filter_map(|k| reduce_step(sys, &cur, k).map(|t| (k, t))).collect();
        if reducible.is_empty() {
            return ThompsonElement { triple: cur };
        }
        let pick = match order {
            ReductionOrder::SmallestIndex => 0,
            ReductionOrder::LargestIndex => reducible.len() - 1,
            ReductionOrder::Seeded(_) => rng.as_mut().unwrap().gen_range(0..reducible.len()),
        };
        cur = reducible.swap_remove(pick).1;
    }
}

/// The canonical representative: reduce at the smallest reducible index
/// until none exists.
pub fn normal_form<S: CloningSystem>(sys: &S, triple: Triple<S::Elem>) -> ThompsonElement<S::Elem> {
    normal_form_with_order(sys, triple, ReductionOrder::SmallestIndex)
}

/// Expands `x` on its plus side until `tplus` equals `target`.
fn expand_plus_to<S: CloningSystem>(
    sys: &S,
    x: &Triple<S::Elem>,
    target: &Tree,
) -> Triple<S::Elem> {
    let path = x.tplus.expansion_path(target).expect("target must expand tplus");
    let mut cur = x.clone();
    for k in path {
        cur = expand(sys, &cur, k);
    }
    cur
}

/// Expands `y` on its minus side until `tminus` equals `target`. A caret at
/// minus-leaf `j` is the expansion at index `rho(g)^{-1}(j)`.
fn expand_minus_to<S: CloningSystem>(
    sys: &S,
    y: &Triple<S::Elem>,
    target: &Tree,
) -> Triple<S::Elem> {
    let path = y.tminus.expansion_path(target).expect("target must expand tminus");
    let mut cur = y.clone();
    for j in path {
        let k = sys.rho(&cur.g).preimage(j);
        cur = expand(sys, &cur, k);
    }
    cur
}

/// The group product: both factors are expanded over the tree union of
/// `x.tplus` and `y.tminus`, the middle entries multiplied, and the result
/// reduced.
pub fn multiply<S: CloningSystem>(
    sys: &S,
    x: &ThompsonElement<S::Elem>,
    y: &ThompsonElement<S::Elem>,
) -> ThompsonElement<S::Elem> {
    let common = x.tplus().union(y.tminus());
    let xe = expand_plus_to(sys, &x.triple, &common);
    let ye = expand_minus_to(sys, &y.triple, &common);
    normal_form(
        sys,
        Triple { tminus: xe.tminus, g: sys.multiply(&xe.g, &ye.g), tplus: ye.tplus },
    )
}

/// The inverse `[T+, g^{-1}, T-]`, reduced. Guarded by the inverse-law
/// tests rather than assumed.
pub fn invert<S: CloningSystem>(sys: &S, x: &ThompsonElement<S::Elem>) -> ThompsonElement<S::Elem> {
    normal_form(
        sys,
        Triple {
            tminus: x.triple.tplus.clone(),
            g: sys.invert(&x.triple.g),
            tplus: x.triple.tminus.clone(),
        },
    )
}

/// Equality of group elements.
///
/// The fast path compares reduced representatives componentwise. Debug
/// builds also run the algebraic path (`x y^{-1}` reduces to the identity)
/// and treat any disagreement between the two as a hard error, since it
/// would mean reduction is not confluent for this instance.
pub fn equals<S: CloningSystem>(
    sys: &S,
    x: &ThompsonElement<S::Elem>,
    y: &ThompsonElement<S::Elem>,
) -> bool {
    let fast = x.triple == y.triple;
    #[cfg(debug_assertions)]
    {
        let slow = is_identity(sys, &multiply(sys, x, &invert(sys, y)));
        assert_eq!(
            fast, slow,
            "equality decision paths disagree on {x:?} vs {y:?}; reduction not confluent"
        );
    }
    fast
}

/// The embedding of `G_n`: `g -> [T, g, T]` for a fixed tree `T` with `n`
/// leaves.
pub fn embed_group<S: CloningSystem>(sys: &S, g: S::Elem, tree: &Tree) -> ThompsonElement<S::Elem> {
    assert_eq!(tree.leaf_count(), sys.rank(&g), "tree leaf count must equal the rank of g");
    normal_form(sys, Triple { tminus: tree.clone(), g, tplus: tree.clone() })
}

/// The copy of Thompson's group F: elements `[T-, 1, T+]` with identity
/// middle entry.
pub fn embed_f<S: CloningSystem>(sys: &S, tminus: Tree, tplus: Tree) -> ThompsonElement<S::Elem> {
    assert_eq!(tminus.leaf_count(), tplus.leaf_count(), "leaf counts must agree");
    let g = sys.identity(tminus.leaf_count());
    normal_form(sys, Triple { tminus, g, tplus })
}

/// The homomorphism to Thompson's group V: apply `rho` to the middle entry
/// and reduce over the symmetric instance.
pub fn project_to_v<S: CloningSystem>(
    sys: &S,
    x: &ThompsonElement<S::Elem>,
) -> ThompsonElement<Permutation> {
    normal_form(
        &SymmetricSystem,
        Triple {
            tminus: x.triple.tminus.clone(),
            g: sys.rho(&x.triple.g),
            tplus: x.triple.tplus.clone(),
        },
    )
}

/// Membership in the kernel of the projection to V.
pub fn kernel_test<S: CloningSystem>(sys: &S, x: &ThompsonElement<S::Elem>) -> bool {
    is_identity(&SymmetricSystem, &project_to_v(sys, x))
}

/// Serializes an element as `{"instance", "tminus", "g", "tplus"}`.
pub fn element_to_json<S: ElemCodec>(sys: &S, x: &ThompsonElement<S::Elem>) -> Value {
    json!({
        "instance": sys.name(),
        "tminus": x.tminus().to_string(),
        "g": sys.elem_to_json(x.g()),
        "tplus": x.tplus().to_string(),
    })
}

/// Compact one-line rendering `[T-,g,T+]`.
pub fn element_to_text<S: ElemCodec>(sys: &S, x: &ThompsonElement<S::Elem>) -> String {
    format!("[{},{},{}]", x.tminus(), sys.elem_to_text(x.g()), x.tplus())
}

/// Parses a raw triple from either the object form
/// `{"instance", "tminus", "g", "tplus"}` (the instance name must match)
/// or the compact array form `["<T->", <g>, "<T+>"]`.
pub fn triple_from_json<S: ElemCodec>(sys: &S, value: &Value) -> Result<Triple<S::Elem>, InvalidValue> {
    let (tminus, g, tplus) = match value {
        Value::Object(map) => {
            if let Some(instance) = map.get("instance") {
                if instance.as_str() != Some(sys.name().as_str()) {
                    return Err(InvalidValue::new(format!(
                        "instance mismatch: element is {instance}, selected {}",
                        sys.name()
                    )));
                }
            }
            let field = |key: &str| {
                map.get(key).ok_or_else(|| InvalidValue::new(format!("missing field {key:?}")))
            };
            (field("tminus")?, field("g")?, field("tplus")?)
        }
        Value::Array(items) if items.len() == 3 => (&items[0], &items[1], &items[2]),
        other => {
            return Err(InvalidValue::new(format!(
                "expected element object or 3-element array, found {other}"
            )))
        }
    };
    let tree = |v: &Value| -> Result<Tree, InvalidValue> {
        let text = v.as_str().ok_or_else(|| InvalidValue::new(format!("expected tree text, found {v}")))?;
        Tree::parse(text).map_err(|e| InvalidValue::new(e.to_string()))
    };
    let tminus = tree(tminus)?;
    let tplus = tree(tplus)?;
    let g = sys.elem_from_json(tminus.leaf_count(), g)?;
    Triple::new(sys, tminus, g, tplus)
}
