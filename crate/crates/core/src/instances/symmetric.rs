//! The symmetric groups `S_n` with the standard cloning maps.
//!
//! This is both a built-in instance (its Thompson-like group is Thompson's
//! group V) and the target of every representation map: the compatibility
//! axiom compares any instance's cloning maps against [`sigma_clone`].

use rand::RngCore;
use serde_json::Value;

use crate::error::InvalidValue;
use crate::perm::{sigma_clone, sigma_unclone, Permutation};
use crate::system::{CloningSystem, ElemCodec};

#[derive(Clone, Copy, Debug, Default)]
pub struct SymmetricSystem;

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, v| acc.checked_mul(v))
}

impl CloningSystem for SymmetricSystem {
    type Elem = Permutation;

    fn name(&self) -> String {
        "symmetric".into()
    }

    fn rank(&self, g: &Permutation) -> usize {
        g.degree()
    }

    fn identity(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }

    fn multiply(&self, g: &Permutation, h: &Permutation) -> Permutation {
        g.compose(h)
    }

    fn invert(&self, g: &Permutation) -> Permutation {
        g.inverse()
    }

    fn iota(&self, g: &Permutation, n: usize) -> Permutation {
        g.extend(n)
    }

    fn rho(&self, g: &Permutation) -> Permutation {
        g.clone()
    }

    fn kappa(&self, k: usize, g: &Permutation) -> Permutation {
        sigma_clone(k, g)
    }

    fn try_unclone(&self, k: usize, h: &Permutation) -> Option<Permutation> {
        sigma_unclone(k, h)
    }

    fn in_iota_image(&self, h: &Permutation) -> bool {
        let n = h.degree();
        assert!(n >= 2);
        h.apply(n) == n
    }

    fn order(&self, n: usize) -> Option<u128> {
        factorial(n)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<Permutation>> {
        Some(Permutation::enumerate(n))
    }

    fn sample(&self, n: usize, rng: &mut dyn RngCore) -> Permutation {
        Permutation::sample(n, rng)
    }

    fn elem_to_text(&self, g: &Permutation) -> String {
        g.to_string()
    }
}

impl ElemCodec for SymmetricSystem {
    fn elem_to_json(&self, g: &Permutation) -> Value {
        Value::Array(g.images().iter().map(|&v| Value::from(v)).collect())
    }

    fn elem_from_json(&self, n: usize, value: &Value) -> Result<Permutation, InvalidValue> {
        let p = match value {
            Value::String(s) => return self.elem_from_text(n, s),
            Value::Array(items) => {
                let images = items
                    .iter()
                    .map(|v| {
                        v.as_u64()
                            .map(|v| v as usize)
                            .ok_or_else(|| InvalidValue::new(format!("bad image value {v}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Permutation::new(images)?
            }
            other => return Err(InvalidValue::new(format!("expected permutation, found {other}"))),
        };
        check_degree(&p, n)?;
        Ok(p)
    }

    fn elem_from_text(&self, n: usize, text: &str) -> Result<Permutation, InvalidValue> {
        let p = Permutation::parse(text).map_err(|e| InvalidValue::new(e.to_string()))?;
        check_degree(&p, n)?;
        Ok(p)
    }
}

fn check_degree(p: &Permutation, n: usize) -> Result<(), InvalidValue> {
    if p.degree() != n {
        return Err(InvalidValue::new(format!("expected degree {n}, found {}", p.degree())));
    }
    Ok(())
}
