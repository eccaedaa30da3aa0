//! Deliberately broken cloning systems.
//!
//! These exist to prove the harness can fail: each mock violates exactly
//! the law its name says, and the self-tests assert that the corresponding
//! check produces a counterexample. Guards against vacuous passes.

use rand::RngCore;

use crate::instances::power::{CyclicGroup, PowerElement, PowerSystem};
use crate::instances::symmetric::SymmetricSystem;
use crate::perm::Permutation;
use crate::system::CloningSystem;

/// Symmetric groups with the inclusion out of rank 1 into rank 3 replaced
/// by a transposition, so `iota_{1,3} != iota_{2,3} iota_{1,2}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BrokenIotaSystem;

impl CloningSystem for BrokenIotaSystem {
    type Elem = Permutation;

    fn name(&self) -> String {
        "mock:broken-iota".into()
    }

    fn rank(&self, g: &Permutation) -> usize {
        SymmetricSystem.rank(g)
    }

    fn identity(&self, n: usize) -> Permutation {
        SymmetricSystem.identity(n)
    }

    fn multiply(&self, g: &Permutation, h: &Permutation) -> Permutation {
        SymmetricSystem.multiply(g, h)
    }

    fn invert(&self, g: &Permutation) -> Permutation {
        SymmetricSystem.invert(g)
    }

    fn iota(&self, g: &Permutation, n: usize) -> Permutation {
        if g.degree() == 1 && n == 3 {
            return Permutation::new(vec![2, 1, 3]).unwrap();
        }
        SymmetricSystem.iota(g, n)
    }

    fn rho(&self, g: &Permutation) -> Permutation {
        SymmetricSystem.rho(g)
    }

    fn kappa(&self, k: usize, g: &Permutation) -> Permutation {
        SymmetricSystem.kappa(k, g)
    }

    fn try_unclone(&self, k: usize, h: &Permutation) -> Option<Permutation> {
        SymmetricSystem.try_unclone(k, h)
    }

    fn in_iota_image(&self, h: &Permutation) -> bool {
        SymmetricSystem.in_iota_image(h)
    }

    fn order(&self, n: usize) -> Option<u128> {
        SymmetricSystem.order(n)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<Permutation>> {
        SymmetricSystem.enumerate(n)
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Permutation {
        SymmetricSystem.sample(n, rng)
    }

    fn elem_to_text(&self, g: &Permutation) -> String {
        SymmetricSystem.elem_to_text(g)
    }
}

/// Symmetric groups with every cloned element composed with an extra
/// transposition, breaking the product law (C1) already at rank 1.
#[derive(Clone, Copy, Debug, Default)]
pub struct BrokenKappaSystem;

impl CloningSystem for BrokenKappaSystem {
    type Elem = Permutation;

    fn name(&self) -> String {
        "mock:broken-kappa".into()
    }

    fn rank(&self, g: &Permutation) -> usize {
        SymmetricSystem.rank(g)
    }

    fn identity(&self, n: usize) -> Permutation {
        SymmetricSystem.identity(n)
    }

    fn multiply(&self, g: &Permutation, h: &Permutation) -> Permutation {
        SymmetricSystem.multiply(g, h)
    }

    fn invert(&self, g: &Permutation) -> Permutation {
        SymmetricSystem.invert(g)
    }

    fn iota(&self, g: &Permutation, n: usize) -> Permutation {
        SymmetricSystem.iota(g, n)
    }

    fn rho(&self, g: &Permutation) -> Permutation {
        SymmetricSystem.rho(g)
    }

    fn kappa(&self, k: usize, g: &Permutation) -> Permutation {
        let n = g.degree();
        SymmetricSystem.kappa(k, g).compose(&Permutation::adjacent_transposition(n, n + 1))
    }

    fn try_unclone(&self, k: usize, h: &Permutation) -> Option<Permutation> {
        SymmetricSystem.try_unclone(k, h)
    }

    fn in_iota_image(&self, h: &Permutation) -> bool {
        SymmetricSystem.in_iota_image(h)
    }

    fn order(&self, n: usize) -> Option<u128> {
        SymmetricSystem.order(n)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<Permutation>> {
        SymmetricSystem.enumerate(n)
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Permutation {
        SymmetricSystem.sample(n, rng)
    }

    fn elem_to_text(&self, g: &Permutation) -> String {
        SymmetricSystem.elem_to_text(g)
    }
}

/// Direct powers of `Z/2` with the clone's last entry xored with the first
/// coordinate. Still injective, but elements like `(1, 1)` clone into the
/// included subgroup while no rank-1 element explains it, so the
/// properly-graded inclusion fails.
#[derive(Clone, Debug)]
pub struct BrokenGradedSystem {
    inner: PowerSystem<CyclicGroup>,
}

impl Default for BrokenGradedSystem {
    fn default() -> Self {
        BrokenGradedSystem { inner: PowerSystem::new(CyclicGroup::new(2)) }
    }
}

impl BrokenGradedSystem {
    pub fn new() -> Self {
        Self::default()
    }
}

impl CloningSystem for BrokenGradedSystem {
    type Elem = PowerElement<u64>;

    fn name(&self) -> String {
        "mock:broken-graded".into()
    }

    fn rank(&self, g: &Self::Elem) -> usize {
        self.inner.rank(g)
    }

    fn identity(&self, n: usize) -> Self::Elem {
        self.inner.identity(n)
    }

    fn multiply(&self, g: &Self::Elem, h: &Self::Elem) -> Self::Elem {
        self.inner.multiply(g, h)
    }

    fn invert(&self, g: &Self::Elem) -> Self::Elem {
        self.inner.invert(g)
    }

    fn iota(&self, g: &Self::Elem, n: usize) -> Self::Elem {
        self.inner.iota(g, n)
    }

    fn rho(&self, g: &Self::Elem) -> Permutation {
        self.inner.rho(g)
    }

    fn kappa(&self, k: usize, g: &Self::Elem) -> Self::Elem {
        let mut out = self.inner.kappa(k, g);
        let last = out.entries.len() - 1;
        out.entries[last] = (out.entries[last] + g.entries[0]) % 2;
        out
    }

    fn try_unclone(&self, k: usize, h: &Self::Elem) -> Option<Self::Elem> {
        self.inner.try_unclone(k, h)
    }

    fn in_iota_image(&self, h: &Self::Elem) -> bool {
        self.inner.in_iota_image(h)
    }

    fn order(&self, n: usize) -> Option<u128> {
        self.inner.order(n)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<Self::Elem>> {
        self.inner.enumerate(n)
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Self::Elem {
        self.inner.sample(n, rng)
    }

    fn elem_to_text(&self, g: &Self::Elem) -> String {
        self.inner.elem_to_text(g)
    }
}
