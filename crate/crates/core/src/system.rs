//! The cloning-system interface.
//!
//! A cloning system bundles a family of groups `G_n` (rank `n >= 1`) with
//! three families of maps:
//!
//! * inclusions `iota: G_m -> G_n` for `m <= n`, forming a directed system;
//! * representation maps `rho: G_n -> S_n`, telling how elements permute
//!   the indices `1..=n`;
//! * injective (not necessarily homomorphic) cloning maps
//!   `kappa_k: G_n -> G_{n+1}` for `1 <= k <= n`, which "duplicate
//!   position k".
//!
//! Group products [`CloningSystem::multiply`] compose like functions: in
//! `multiply(g, h)` the factor `h` acts first, so
//! `rho(multiply(g, h))(i) = rho(g)(rho(h)(i))`. The harness in
//! [`crate::harness`] checks the laws these maps are supposed to satisfy;
//! nothing here assumes them.

use rand::RngCore;
use serde_json::Value;

use crate::error::InvalidValue;
use crate::perm::Permutation;

/// A family of groups with inclusions, representation maps and cloning maps.
///
/// Elements carry their own rank: `rank(g) = n` means `g` lives in `G_n`.
/// Implementations must be pure value types, freely usable from multiple
/// threads.
pub trait CloningSystem {
    type Elem: Clone + PartialEq + Eq + std::fmt::Debug;

    /// Canonical instance name, also used as the selector in serialized
    /// elements (e.g. `symmetric`, `power:z6`).
    fn name(&self) -> String;

    /// The rank `n` of the group `G_n` that `g` belongs to.
    fn rank(&self, g: &Self::Elem) -> usize;

    fn identity(&self, n: usize) -> Self::Elem;

    /// The product `g h`; both factors must have the same rank, and `h`
    /// acts first under `rho`.
    fn multiply(&self, g: &Self::Elem, h: &Self::Elem) -> Self::Elem;

    fn invert(&self, g: &Self::Elem) -> Self::Elem;

    /// The inclusion of `g` into rank `n >= rank(g)`.
    fn iota(&self, g: &Self::Elem, n: usize) -> Self::Elem;

    /// The representation map: how `g` permutes `{1..rank(g)}`.
    fn rho(&self, g: &Self::Elem) -> Permutation;

    /// The cloning map `kappa_k` applied to `g`, for `1 <= k <= rank(g)`;
    /// the result has rank `rank(g) + 1`.
    fn kappa(&self, k: usize, g: &Self::Elem) -> Self::Elem;

    /// Partial inverse of [`CloningSystem::kappa`]: returns `g` with
    /// `kappa(k, g) = h` when `h` lies in the image of `kappa_k`, `None`
    /// otherwise. Requires `rank(h) >= 2` and `1 <= k <= rank(h) - 1`.
    fn try_unclone(&self, k: usize, h: &Self::Elem) -> Option<Self::Elem>;

    /// Whether `h` (of rank `n + 1 >= 2`) lies in the image of the
    /// one-step inclusion `iota: G_n -> G_{n+1}`.
    fn in_iota_image(&self, h: &Self::Elem) -> bool;

    /// The order of `G_n` when finite and cheaply computable.
    fn order(&self, n: usize) -> Option<u128>;

    /// Every element of `G_n`, when the group is finite. The returned order
    /// is deterministic.
    fn enumerate(&self, n: usize) -> Option<Vec<Self::Elem>>;

    /// A finite search slice of `G_n` for subset-style checks when full
    /// enumeration is impossible. Defaults to the complete enumeration;
    /// instances overriding this return a proper subset and must say so via
    /// [`CloningSystem::enumeration_is_complete`].
    fn search_slice(&self, n: usize) -> Option<Vec<Self::Elem>> {
        self.enumerate(n)
    }

    /// Whether [`CloningSystem::search_slice`] covers all of `G_n`.
    fn enumeration_is_complete(&self) -> bool {
        true
    }

    /// A uniformly-ish random element of `G_n`, deterministic in the RNG.
    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Self::Elem;

    /// One-line text form of `g` (e.g. `[3,1,2]`, `(2,3,0)`).
    fn elem_to_text(&self, g: &Self::Elem) -> String;
}

/// JSON (de)serialization of group elements, used by the element and vertex
/// interchange formats.
pub trait ElemCodec: CloningSystem {
    /// Instance-specific JSON value for `g`.
    fn elem_to_json(&self, g: &Self::Elem) -> Value;

    /// Parses an element of `G_n` from either its instance-specific JSON
    /// value or its one-line text form wrapped in a JSON string.
    fn elem_from_json(&self, n: usize, value: &Value) -> Result<Self::Elem, InvalidValue>;

    /// Parses the one-line text form of an element of `G_n`.
    fn elem_from_text(&self, n: usize, text: &str) -> Result<Self::Elem, InvalidValue>;
}
