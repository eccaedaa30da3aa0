//! Instance selectors: `trivial | symmetric | signed | matrix |
//! power:<base>[:twist]`.

use clonal_core::instances::power::{CyclicGroup, S3Base};

#[derive(Clone, Debug)]
pub enum Selector {
    Trivial,
    Symmetric,
    Signed,
    Matrix,
    PowerCyclic { modulus: u64, twist: Option<u64> },
    PowerS3,
}

impl Selector {
    pub fn parse(text: &str) -> Result<Selector, String> {
        match text {
            "trivial" => return Ok(Selector::Trivial),
            "symmetric" => return Ok(Selector::Symmetric),
            "signed" => return Ok(Selector::Signed),
            "matrix" => return Ok(Selector::Matrix),
            _ => {}
        }
        let rest = text.strip_prefix("power:").ok_or_else(|| {
            format!("unknown instance {text:?}; expected trivial, symmetric, signed, matrix, or power:<base>[:twist]")
        })?;
        let (base, twist) = match rest.split_once(':') {
            Some((base, twist)) => (base, Some(twist)),
            None => (rest, None),
        };
        if base == "s3" {
            return match twist {
                None => Ok(Selector::PowerS3),
                Some(t) => Err(format!("base s3 takes no twist in the CLI (got {t:?})")),
            };
        }
        let modulus: u64 = base
            .strip_prefix('z')
            .and_then(|m| m.parse().ok())
            .filter(|&m| m >= 1)
            .ok_or_else(|| format!("unknown base {base:?}; expected z<m> or s3"))?;
        let twist = match twist {
            None => None,
            Some(t) => {
                let unit: u64 = t
                    .strip_prefix('x')
                    .and_then(|u| u.parse().ok())
                    .ok_or_else(|| format!("bad twist {t:?}; expected x<u>"))?;
                if gcd(unit % modulus, modulus) != 1 {
                    return Err(format!("twist unit {unit} is not invertible mod {modulus}"));
                }
                Some(unit)
            }
        };
        Ok(Selector::PowerCyclic { modulus, twist })
    }

    pub fn cyclic(&self) -> Option<CyclicGroup> {
        match self {
            Selector::PowerCyclic { modulus, twist: None } => Some(CyclicGroup::new(*modulus)),
            Selector::PowerCyclic { modulus, twist: Some(u) } => {
                Some(CyclicGroup::with_twist(*modulus, *u))
            }
            _ => None,
        }
    }

    pub fn s3(&self) -> Option<S3Base> {
        matches!(self, Selector::PowerS3).then(S3Base::new)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Binds `$sys` to the concrete system the selector names and runs the
/// body once, monomorphized per instance type.
macro_rules! with_instance {
    ($sel:expr, $sys:ident => $body:expr) => {{
        use clonal_core::instances::power::PowerSystem;
        use clonal_core::instances::{
            MatrixSystem, SignedSystem, SymmetricSystem, TrivialSystem,
        };
        let sel = $sel;
        match &sel {
            $crate::selector::Selector::Trivial => {
                let $sys = TrivialSystem;
                $body
            }
            $crate::selector::Selector::Symmetric => {
                let $sys = SymmetricSystem;
                $body
            }
            $crate::selector::Selector::Signed => {
                let $sys = SignedSystem;
                $body
            }
            $crate::selector::Selector::Matrix => {
                let $sys = MatrixSystem;
                $body
            }
            $crate::selector::Selector::PowerCyclic { .. } => {
                let $sys = PowerSystem::new(sel.cyclic().expect("cyclic selector"));
                $body
            }
            $crate::selector::Selector::PowerS3 => {
                let $sys = PowerSystem::new(sel.s3().expect("s3 selector"));
                $body
            }
        }
    }};
}

pub(crate) use with_instance;
