//! Finite rooted binary trees and ordered forests.
//!
//! Trees are immutable values with structural equality. Leaves are indexed
//! `1..=n` left to right; all surgery (`add_caret`, `remove_caret`) is
//! expressed in terms of these 1-based leaf indices. The text grammar is
//!
//! ```text
//! T ::= "L" | "(" T T ")"
//! ```
//!
//! and forests are trees joined by `|`, e.g. `L|(LL)|L`.

use std::fmt;

use crate::error::ParseError;

/// A finite rooted binary tree: either a leaf or a caret with two subtrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Caret(Box<Tree>, Box<Tree>),
}

impl Tree {
    /// The single-leaf tree.
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    /// A caret over the two given subtrees.
    pub fn caret(left: Tree, right: Tree) -> Tree {
        Tree::Caret(Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(a, b) => a.leaf_count() + b.leaf_count(),
        }
    }

    /// Replaces leaf `k` (1-based) with a caret over two fresh leaves.
    ///
    /// Panics if `k` is not in `1..=leaf_count()`.
    pub fn add_caret(&self, k: usize) -> Tree {
        assert!(
            (1..=self.leaf_count()).contains(&k),
            "leaf index {k} out of range 1..={}",
            self.leaf_count()
        );
        self.add_caret_inner(k)
    }

    fn add_caret_inner(&self, k: usize) -> Tree {
        match self {
            Tree::Leaf => Tree::caret(Tree::Leaf, Tree::Leaf),
            Tree::Caret(a, b) => {
                let la = a.leaf_count();
                if k <= la {
                    Tree::Caret(Box::new(a.add_caret_inner(k)), b.clone())
                } else {
                    Tree::Caret(a.clone(), Box::new(b.add_caret_inner(k - la)))
                }
            }
        }
    }

    /// Collapses the caret whose leaves sit at positions `k`, `k+1`, if
    /// those two leaves are siblings; `None` otherwise.
    pub fn remove_caret(&self, k: usize) -> Option<Tree> {
        if k == 0 || k + 1 > self.leaf_count() {
            return None;
        }
        self.remove_caret_inner(k)
    }

    fn remove_caret_inner(&self, k: usize) -> Option<Tree> {
        match self {
            Tree::Leaf => None,
            Tree::Caret(a, b) => {
                if a.is_leaf() && b.is_leaf() {
                    return (k == 1).then_some(Tree::Leaf);
                }
                let la = a.leaf_count();
                if k < la {
                    Some(Tree::Caret(Box::new(a.remove_caret_inner(k)?), b.clone()))
                } else if k > la {
                    Some(Tree::Caret(a.clone(), Box::new(b.remove_caret_inner(k - la)?)))
                } else {
                    // the pair (k, k+1) straddles the root split
                    None
                }
            }
        }
    }

    /// Whether `self` is a prefix of `other` as subsets of the infinite
    /// rooted binary tree.
    pub fn is_prefix_of(&self, other: &Tree) -> bool {
        match (self, other) {
            (Tree::Leaf, _) => true,
            (Tree::Caret(..), Tree::Leaf) => false,
            (Tree::Caret(a, b), Tree::Caret(c, d)) => a.is_prefix_of(c) && b.is_prefix_of(d),
        }
    }

    /// The smallest common expansion of `self` and `other`.
    pub fn union(&self, other: &Tree) -> Tree {
        match (self, other) {
            (Tree::Leaf, t) | (t, Tree::Leaf) => t.clone(),
            (Tree::Caret(a, b), Tree::Caret(c, d)) => Tree::caret(a.union(c), b.union(d)),
        }
    }

    /// Leaf indices at which to `add_caret`, in order, to grow `self` into
    /// `target`. Errors if `self` is not a prefix of `target`.
    pub fn expansion_path(&self, target: &Tree) -> Result<Vec<usize>, NotAPrefix> {
        if !self.is_prefix_of(target) {
            return Err(NotAPrefix);
        }
        let mut subtrees = Vec::new();
        collect_subtrees_at_leaves(self, target, &mut subtrees);
        let mut path = Vec::new();
        let mut offset = 0;
        for sub in subtrees {
            build_path(sub, offset, &mut path);
            offset += sub.leaf_count();
        }
        Ok(path)
    }

    pub fn parse(text: &str) -> Result<Tree, ParseError> {
        let bytes = text.as_bytes();
        let (tree, used) = parse_tree_at(bytes, 0)?;
        if used != bytes.len() {
            return Err(ParseError::new(used, "trailing input after tree"));
        }
        Ok(tree)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("L"),
            Tree::Caret(a, b) => write!(f, "({a}{b})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({self})")
    }
}

/// Error returned by [`Tree::expansion_path`] when the source is not a
/// prefix of the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotAPrefix;

impl fmt::Display for NotAPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("tree is not a prefix of the expansion target")
    }
}

impl std::error::Error for NotAPrefix {}

/// The subtrees of `target` hanging below each leaf of `prefix`, left to
/// right. Caller has already checked the prefix relation.
fn collect_subtrees_at_leaves<'a>(prefix: &Tree, target: &'a Tree, out: &mut Vec<&'a Tree>) {
    match (prefix, target) {
        (Tree::Leaf, t) => out.push(t),
        (Tree::Caret(a, b), Tree::Caret(c, d)) => {
            collect_subtrees_at_leaves(a, c, out);
            collect_subtrees_at_leaves(b, d, out);
        }
        (Tree::Caret(..), Tree::Leaf) => unreachable!("prefix relation checked by caller"),
    }
}

/// Caret positions growing a single leaf at `offset` into `sub`, appended to
/// `path`. Indices are valid at the moment each caret is applied.
fn build_path(sub: &Tree, offset: usize, path: &mut Vec<usize>) {
    if let Tree::Caret(a, b) = sub {
        path.push(offset + 1);
        build_path(a, offset, path);
        build_path(b, offset + a.leaf_count(), path);
    }
}

fn parse_tree_at(bytes: &[u8], pos: usize) -> Result<(Tree, usize), ParseError> {
    match bytes.get(pos) {
        Some(b'L') => Ok((Tree::Leaf, pos + 1)),
        Some(b'(') => {
            let (left, pos) = parse_tree_at(bytes, pos + 1)?;
            let (right, pos) = parse_tree_at(bytes, pos)?;
            match bytes.get(pos) {
                Some(b')') => Ok((Tree::caret(left, right), pos + 1)),
                _ => Err(ParseError::new(pos, "expected ')'")),
            }
        }
        Some(c) => Err(ParseError::new(pos, format!("expected 'L' or '(', found {:?}", *c as char))),
        None => Err(ParseError::new(pos, "unexpected end of input")),
    }
}

/// An ordered disjoint union of trees. Roots are indexed `1..=f` and leaves
/// `1..=n` left to right across all trees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    /// Builds a forest from its ordered component trees. Panics on an empty
    /// list: a forest has at least one root.
    pub fn new(trees: Vec<Tree>) -> Forest {
        assert!(!trees.is_empty(), "a forest has at least one tree");
        Forest { trees }
    }

    /// The trivial forest `1_n`: `n` roots, every tree a single leaf.
    pub fn trivial(n: usize) -> Forest {
        assert!(n >= 1);
        Forest { trees: vec![Tree::Leaf; n] }
    }

    pub fn single(tree: Tree) -> Forest {
        Forest { trees: vec![tree] }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn root_count(&self) -> usize {
        self.trees.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.trees.iter().all(Tree::is_leaf)
    }

    /// Locates forest-wide leaf `k`: the tree containing it and the leaf's
    /// index within that tree.
    fn locate_leaf(&self, k: usize) -> (usize, usize) {
        assert!((1..=self.leaf_count()).contains(&k), "leaf index {k} out of range");
        let mut rest = k;
        for (i, t) in self.trees.iter().enumerate() {
            let n = t.leaf_count();
            if rest <= n {
                return (i, rest);
            }
            rest -= n;
        }
        unreachable!()
    }

    /// Adds a caret at forest-wide leaf position `k`.
    pub fn add_caret(&self, k: usize) -> Forest {
        let (i, local) = self.locate_leaf(k);
        let mut trees = self.trees.clone();
        trees[i] = trees[i].add_caret(local);
        Forest { trees }
    }

    /// Collapses the caret at forest-wide leaf pair `(k, k+1)` if those
    /// leaves are siblings (necessarily within one tree).
    pub fn remove_caret(&self, k: usize) -> Option<Forest> {
        if k == 0 || k + 1 > self.leaf_count() {
            return None;
        }
        let (i, local) = self.locate_leaf(k);
        let reduced = self.trees[i].remove_caret(local)?;
        let mut trees = self.trees.clone();
        trees[i] = reduced;
        Some(Forest { trees })
    }

    /// Caret positions growing the trivial forest `1_f` into `self`, in
    /// application order (each index valid when applied).
    pub fn build_path(&self) -> Vec<usize> {
        let mut path = Vec::new();
        let mut offset = 0;
        for t in &self.trees {
            build_path(t, offset, &mut path);
            offset += t.leaf_count();
        }
        path
    }

    pub fn parse(text: &str) -> Result<Forest, ParseError> {
        let mut trees = Vec::new();
        let mut offset = 0;
        for part in text.split('|') {
            let tree = Tree::parse(part).map_err(|e| e.shift(offset))?;
            trees.push(tree);
            offset += part.len() + 1;
        }
        Ok(Forest { trees })
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.trees {
            if !first {
                f.write_str("|")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest({self})")
    }
}
