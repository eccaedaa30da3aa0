//! The trivial cloning system: `G_n = {1}` for every `n`.
//!
//! The Thompson-like group over this instance is Thompson's group F.

use rand::RngCore;
use serde_json::Value;

use crate::error::InvalidValue;
use crate::perm::Permutation;
use crate::system::{CloningSystem, ElemCodec};

/// The identity of the rank-`n` trivial group; the rank is the only datum.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrivialElem {
    pub rank: usize,
}

impl std::fmt::Debug for TrivialElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "1@{}", self.rank)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TrivialSystem;

impl CloningSystem for TrivialSystem {
    type Elem = TrivialElem;

    fn name(&self) -> String {
        "trivial".into()
    }

    fn rank(&self, g: &TrivialElem) -> usize {
        g.rank
    }

    fn identity(&self, n: usize) -> TrivialElem {
        assert!(n >= 1);
        TrivialElem { rank: n }
    }

    fn multiply(&self, g: &TrivialElem, h: &TrivialElem) -> TrivialElem {
        assert_eq!(g.rank, h.rank, "rank mismatch");
        *g
    }

    fn invert(&self, g: &TrivialElem) -> TrivialElem {
        *g
    }

    fn iota(&self, g: &TrivialElem, n: usize) -> TrivialElem {
        assert!(n >= g.rank);
        TrivialElem { rank: n }
    }

    fn rho(&self, g: &TrivialElem) -> Permutation {
        Permutation::identity(g.rank)
    }

    fn kappa(&self, k: usize, g: &TrivialElem) -> TrivialElem {
        assert!((1..=g.rank).contains(&k), "clone index out of range");
        TrivialElem { rank: g.rank + 1 }
    }

    fn try_unclone(&self, k: usize, h: &TrivialElem) -> Option<TrivialElem> {
        (h.rank >= 2 && (1..h.rank).contains(&k)).then_some(TrivialElem { rank: h.rank - 1 })
    }

    fn in_iota_image(&self, h: &TrivialElem) -> bool {
        assert!(h.rank >= 2);
        true
    }

    fn order(&self, _n: usize) -> Option<u128> {
        Some(1)
    }

    fn enumerate(&self, n: usize) -> Option<Vec<TrivialElem>> {
        Some(vec![TrivialElem { rank: n }])
    }

    fn sample(&self, n: usize, _rng: &mut dyn RngCore) -> TrivialElem {
        TrivialElem { rank: n }
    }

    fn elem_to_text(&self, _g: &TrivialElem) -> String {
        "1".into()
    }
}

impl ElemCodec for TrivialSystem {
    fn elem_to_json(&self, _g: &TrivialElem) -> Value {
        Value::String("1".into())
    }

    fn elem_from_json(&self, n: usize, value: &Value) -> Result<TrivialElem, InvalidValue> {
        match value {
            Value::String(s) => self.elem_from_text(n, s),
            Value::Number(v) if v.as_u64() == Some(1) => Ok(TrivialElem { rank: n }),
            other => Err(InvalidValue::new(format!("expected \"1\", found {other}"))),
        }
    }

    fn elem_from_text(&self, n: usize, text: &str) -> Result<TrivialElem, InvalidValue> {
        if text.trim() == "1" {
            Ok(TrivialElem { rank: n })
        } else {
            Err(InvalidValue::new(format!("expected \"1\", found {text:?}")))
        }
    }
}
