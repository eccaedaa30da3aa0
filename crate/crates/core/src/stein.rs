//! Representative-level combinatorics of the Stein-Farley complex.
//!
//! A vertex is represented by a triple `(T, g, E)`: a tree with `n`
//! leaves, an element of rank `n`, and a forest with `n` leaves. The
//! number of roots of `E` is the vertex's number of feet. Three kinds of
//! moves act on representatives:
//!
//! * expansions/reductions, as for Thompson elements, with carets landing
//!   on the leaves of `E`;
//! * the right action of `G_f` (`f` the feet count), rewritten through the
//!   merges of `E` by [`clone_along_forest`];
//! * the left action of the Thompson-like group.
//!
//! Vertex classes additionally quotient by the right `G_f` action, and no
//! canonical form for that quotient is attempted here: equality across
//! classes is only probed, within an explicit budget, by
//! [`stabilizer_probe`].
//!
//! Edges go down from `[T, g, E]` by adding one caret whose leaves are two
//! adjacent roots of `E`; a k-cube is a set of k such carets on pairwise
//! disjoint root pairs. (The adjacency requirement keeps merged leaves
//! consecutive in the leaf order of a binary forest; it is a modelling
//! decision, not something the definitions force.)

use serde_json::{json, Value};

use crate::error::InvalidValue;
use crate::forest::{Forest, Tree};
use crate::system::{CloningSystem, ElemCodec};
use crate::thompson::{self, ThompsonElement};

/// A vertex representative `(T, g, E)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SteinVertex<E> {
    pub tree: Tree,
    pub g: E,
    pub forest: Forest,
}

impl<E> SteinVertex<E> {
    /// Validates `leaf_count(T) = rank(g) = leaf_count(E)`.
    pub fn new<S>(sys: &S, tree: Tree, g: E, forest: Forest) -> Result<SteinVertex<E>, InvalidValue>
    where
        S: CloningSystem<Elem = E>,
    {
        let n = sys.rank(&g);
        if tree.leaf_count() != n || forest.leaf_count() != n {
            return Err(InvalidValue::new(format!(
                "tree leaves {} and forest leaves {} must both equal the rank {n}",
                tree.leaf_count(),
                forest.leaf_count()
            )));
        }
        Ok(SteinVertex { tree, g, forest })
    }

    /// The number of feet: the number of roots of the forest.
    pub fn feet(&self) -> usize {
        self.forest.root_count()
    }
}

/// Membership in the filtration stage of vertices with at most `n` feet.
pub fn filtration_member<E>(v: &SteinVertex<E>, n: usize) -> bool {
    assert!(n >= 1);
    v.feet() <= n
}

/// Pushes `h` (of rank `f = root_count(e)`) up through the merges of `e`:
/// each elementary merge at root position `j` rewrites `merge_j . h` into
/// `kappa_{j'}(h) . merge_{j'}` with `j' = rho(h)^{-1}(j)`, processed from
/// the roots upward. Returns the accumulated element of rank
/// `leaf_count(e)` and the repositioned forest.
pub fn clone_along_forest<S: CloningSystem>(
    sys: &S,
    h: &S::Elem,
    e: &Forest,
) -> (S::Elem, Forest) {
    assert_eq!(sys.rank(h), e.root_count(), "rank of h must equal the root count of e");
    let mut cur = h.clone();
    let mut out = Forest::trivial(e.root_count());
    for j in e.build_path() {
        let moved = sys.rho(&cur).preimage(j);
        out = out.add_caret(moved);
        cur = sys.kappa(moved, &cur);
    }
    (cur, out)
}

/// The right action of `G_f` on representatives with `f` feet:
/// `(T, g, E) . h = (T, g h_up, E')` where `(h_up, E')` comes from
/// [`clone_along_forest`]. Feet are unchanged.
pub fn right_action<S: CloningSystem>(
    sys: &S,
    v: &SteinVertex<S::Elem>,
    h: &S::Elem,
) -> SteinVertex<S::Elem> {
    assert_eq!(sys.rank(h), v.feet(), "rank of h must equal the feet of v");
    let (h_up, forest) = clone_along_forest(sys, h, &v.forest);
    SteinVertex { tree: v.tree.clone(), g: sys.multiply(&v.g, &h_up), forest }
}

/// One vertex expansion: caret at leaf `rho(g)(k)` of `T`, caret at leaf
/// `k` of `E`, and `g` through `kappa_k`. Feet are unchanged.
pub fn vertex_expand<S: CloningSystem>(
    sys: &S,
    v: &SteinVertex<S::Elem>,
    k: usize,
) -> SteinVertex<S::Elem> {
    let n = sys.rank(&v.g);
    assert!((1..=n).contains(&k), "expansion index {k} out of range 1..={n}");
    SteinVertex {
        tree: v.tree.add_caret(sys.rho(&v.g).apply(k)),
        g: sys.kappa(k, &v.g),
        forest: v.forest.add_caret(k),
    }
}

/// One vertex reduction at `k`, if `g` unclones there and both sides carry
/// the matching sibling carets.
pub fn vertex_reduce_step<S: CloningSystem>(
    sys: &S,
    v: &SteinVertex<S::Elem>,
    k: usize,
) -> Option<SteinVertex<S::Elem>> {
    let n = sys.rank(&v.g);
    if n < 2 || k == 0 || k >= n {
        return None;
    }
    let g0 = sys.try_unclone(k, &v.g)?;
    let forest = v.forest.remove_caret(k)?;
    let tree = v.tree.remove_caret(sys.rho(&g0).apply(k))?;
    Some(SteinVertex { tree, g: g0, forest })
}

/// Reduces at the smallest reducible index until none exists.
pub fn vertex_normal_form<S: CloningSystem>(
    sys: &S,
    v: SteinVertex<S::Elem>,
) -> SteinVertex<S::Elem> {
    let mut cur = v;
    loop {
        let n = sys.rank(&cur.g);
        match (1..n).find_map(|k| vertex_reduce_step(sys, &cur, k)) {
            Some(next) => cur = next,
            None => return cur,
        }
    }
}

/// The left action of a Thompson element on a vertex representative,
/// returned reduced: expand `x` and the vertex over the tree union of
/// `x.tplus` and `v.tree`, multiply the middle entries, reduce.
pub fn act<S: CloningSystem>(
    sys: &S,
    x: &ThompsonElement<S::Elem>,
    v: &SteinVertex<S::Elem>,
) -> SteinVertex<S::Elem> {
    let common = x.tplus().union(&v.tree);
    let mut xe = x.triple().clone();
    for k in x.tplus().expansion_path(&common).expect("union expands tplus") {
        xe = thompson::expand(sys, &xe, k);
    }
    let mut ve = v.clone();
    for j in v.tree.expansion_path(&common).expect("union expands the vertex tree") {
        let k = sys.rho(&ve.g).preimage(j);
        ve = vertex_expand(sys, &ve, k);
    }
    vertex_normal_form(
        sys,
        SteinVertex { tree: xe.tminus, g: sys.multiply(&xe.g, &ve.g), forest: ve.forest },
    )
}

/// All k-element sets of pairwise disjoint down-moves from `v`: a move at
/// position `j` adds a caret over adjacent roots `j`, `j + 1` of the
/// forest, and two moves are disjoint when their root pairs are.
pub fn cubes_from<E>(v: &SteinVertex<E>, dim: usize) -> Vec<Vec<usize>> {
    assert!(dim >= 1, "cube dimension must be at least 1");
    let feet = v.feet();
    if feet < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_disjoint(1, feet - 1, dim, &mut current, &mut out);
    out
}

fn collect_disjoint(
    from: usize,
    last: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for j in from..=last {
        current.push(j);
        collect_disjoint(j + 2, last, remaining - 1, current, out);
        current.pop();
    }
}

/// Applies the down-move at `j`: a new caret over roots `j`, `j + 1`.
pub fn add_edge_caret(forest: &Forest, j: usize) -> Forest {
    let f = forest.root_count();
    assert!((1..f).contains(&j), "merge position {j} out of range 1..{f}");
    let mut trees: Vec<Tree> = forest.trees().to_vec();
    let right = trees.remove(j);
    trees[j - 1] = Tree::caret(trees[j - 1].clone(), right);
    Forest::new(trees)
}

/// Outcome of a bounded stabilizer probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeResult {
    /// `x` certifiably fixes the vertex class of `v`.
    Fixes,
    /// `x` certifiably moves the vertex class of `v` (complete search of
    /// the right action; relies on reduced representatives being
    /// canonical).
    Moves,
    /// The search budget was exhausted without a certificate.
    Unknown,
}

/// Searches for a right-action move identifying `x . v` with `v`, testing
/// at most `budget` candidates.
///
/// With an enumerable `G_f` that fits the budget the answer is definitive
/// either way; otherwise an algebraic candidate is tried when both reduced
/// representatives carry the trivial forest, and failing that the result
/// is `Unknown`.
pub fn stabilizer_probe<S: CloningSystem>(
    sys: &S,
    x: &ThompsonElement<S::Elem>,
    v: &SteinVertex<S::Elem>,
    budget: usize,
) -> ProbeResult {
    let moved = act(sys, x, v);
    let base = vertex_normal_form(sys, v.clone());
    if moved == base {
        return ProbeResult::Fixes;
    }
    let feet = base.feet();
    if let Some(elems) = sys.enumerate(feet) {
        let complete = elems.len() <= budget;
        for h in elems.iter().take(budget) {
            if vertex_normal_form(sys, right_action(sys, &base, h)) == moved {
                return ProbeResult::Fixes;
            }
        }
        return if complete { ProbeResult::Moves } else { ProbeResult::Unknown };
    }
    if base.forest.is_trivial() && moved.forest.is_trivial() && base.tree == moved.tree {
        let h = sys.multiply(&sys.invert(&base.g), &moved.g);
        if vertex_normal_form(sys, right_action(sys, &base, &h)) == moved {
            return ProbeResult::Fixes;
        }
    }
    ProbeResult::Unknown
}

/// Serializes a vertex as `{"instance", "t", "g", "e"}`.
pub fn vertex_to_json<S: ElemCodec>(sys: &S, v: &SteinVertex<S::Elem>) -> Value {
    json!({
        "instance": sys.name(),
        "t": v.tree.to_string(),
        "g": sys.elem_to_json(&v.g),
        "e": v.forest.to_string(),
    })
}

/// Parses a vertex from the object form `{"instance", "t", "g", "e"}` or
/// the compact array form `["<T>", <g>, "<E>"]`.
pub fn vertex_from_json<S: ElemCodec>(
    sys: &S,
    value: &Value,
) -> Result<SteinVertex<S::Elem>, InvalidValue> {
    let (t, g, e) = match value {
        Value::Object(map) => {
            if let Some(instance) = map.get("instance") {
                if instance.as_str() != Some(sys.name().as_str()) {
                    return Err(InvalidValue::new(format!(
                        "instance mismatch: vertex is {instance}, selected {}",
                        sys.name()
                    )));
                }
            }
            let field = |key: &str| {
                map.get(key).ok_or_else(|| InvalidValue::new(format!("missing field {key:?}")))
            };
            (field("t")?, field("g")?, field("e")?)
        }
        Value::Array(items) if items.len() == 3 => (&items[0], &items[1], &items[2]),
        other => {
            return Err(InvalidValue::new(format!(
                "expected vertex object or 3-element array, found {other}"
            )))
        }
    };
    let text = |v: &Value, what: &str| {
        v.as_str()
            .map(str::to_owned)
            .ok_or_else(|| InvalidValue::new(format!("expected {what} text, found {v}")))
    };
    let tree = Tree::parse(&text(t, "tree")?).map_err(|e| InvalidValue::new(e.to_string()))?;
    let forest = Forest::parse(&text(e, "forest")?).map_err(|e| InvalidValue::new(e.to_string()))?;
    let g = sys.elem_from_json(tree.leaf_count(), g)?;
    SteinVertex::new(sys, tree, g, forest)
}
