//! Named graph families and their DSL (`u1:5`, `qst:2,1`, ...).
//!
//! Labelling: the figure vertex `v_i` is vertex `i - 1`. Pendants and extra
//! vertices follow in ascending order.
//!
//! | family  | structure                                                   | order      |
//! |---------|-------------------------------------------------------------|------------|
//! | `star`  | centre 0, leaves `1..=k`                                    | `k + 1`    |
//! | `dstar` | centres 0 and 1 adjacent; `s` leaves at 0, then `t` at 1     | `s + t + 2`|
//! | `cycle` | `0 - 1 - ... - (g-1) - 0`                                   | `g`        |
//! | `q1`    | cycle `0-1-2-3`, `k - 4` pendants at 0                      | `k`        |
//! | `qst`   | cycle `0-1-2-3`, `s` pendants at 0, then `t` pendants at 1   | `s + t + 4`|
//! | `u1`    | triangle `0,1,2`, `k - 3` pendants at 0                     | `k`        |
//! | `gt`    | triangles `{0,1,2}, {0,3,4}, ...`, then `k - 3t` pendants at 0 | `k - t + 1`|

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `K_{1,k}`.
    Star { k: usize },
    /// `D_{s,t}`, degree sequence `(s+1, t+1, 1, ..., 1)`.
    DoubleStar { s: usize, t: usize },
    /// `C_g`.
    Cycle { g: usize },
    /// `Q_1`: `C_4` with `k - 4` pendants at `v_1`.
    Q1 { k: usize },
    /// `Q(s,t)`: `C_4` with `s` pendants at `v_1` and `t` at `v_2`.
    Qst { s: usize, t: usize },
    /// `U_1`: triangle with `k - 3` pendants at `v_1`.
    U1 { k: usize },
    /// `G_t`: `t` triangles sharing one vertex plus `k - 3t` pendants there.
    Gt { k: usize, t: usize },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Star { k } => k + 1,
            FamilySpec::DoubleStar { s, t } => s + t + 2,
            FamilySpec::Cycle { g } => g,
            FamilySpec::Q1 { k } | FamilySpec::U1 { k } => k,
            FamilySpec::Qst { s, t } => s + t + 4,
            FamilySpec::Gt { k, t } => (k + 1).saturating_sub(t),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Star { k } if k < 1 => Err(invalid("star needs k >= 1")),
            FamilySpec::DoubleStar { s, t } if s < 1 || t < 1 => {
                Err(invalid("dstar needs s >= 1 and t >= 1"))
            }
            FamilySpec::Cycle { g } if g < 3 => Err(invalid("cycle needs g >= 3")),
            FamilySpec::Q1 { k } if k < 4 => Err(invalid("q1 needs k >= 4")),
            FamilySpec::Qst { s, t } if s < 1 || t < 1 => {
                Err(invalid("qst needs s >= 1 and t >= 1"))
            }
            FamilySpec::U1 { k } if k < 3 => Err(invalid("u1 needs k >= 3")),
            FamilySpec::Gt { k, t } if k < 3 * t => Err(invalid("gt needs k >= 3t")),
            FamilySpec::Gt { k, .. } if k < 1 => Err(invalid("gt needs k >= 1")),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<SimpleGraph> {
        self.validate()?;
        let mut edges = Vec::new();
        let pendants = |edges: &mut Vec<(usize, usize)>, at: usize, from: usize, count: usize| {
            edges.extend((from..from + count).map(|p| (at, p)));
        };
        match *self {
            FamilySpec::Star { k } => pendants(&mut edges, 0, 1, k),
            FamilySpec::DoubleStar { s, t } => {
                edges.push((0, 1));
                pendants(&mut edges, 0, 2, s);
                pendants(&mut edges, 1, 2 + s, t);
            }
            FamilySpec::Cycle { g } => edges.extend((0..g).map(|i| (i, (i + 1) % g))),
            FamilySpec::Q1 { k } => {
                edges.extend([(0, 1), (1, 2), (2, 3), (3, 0)]);
                pendants(&mut edges, 0, 4, k - 4);
            }
            FamilySpec::Qst { s, t } => {
                edges.extend([(0, 1), (1, 2), (2, 3), (3, 0)]);
                pendants(&mut edges, 0, 4, s);
                pendants(&mut edges, 1, 4 + s, t);
            }
            FamilySpec::U1 { k } => {
                edges.extend([(0, 1), (1, 2), (2, 0)]);
                pendants(&mut edges, 0, 3, k - 3);
            }
            FamilySpec::Gt { k, t } => {
                for i in 0..t {
                    let (a, b) = (1 + 2 * i, 2 + 2 * i);
                    edges.extend([(0, a), (0, b), (a, b)]);
                }
                pendants(&mut edges, 0, 1 + 2 * t, k - 3 * t);
            }
        }
        SimpleGraph::new(self.order(), edges)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Star { k } => write!(f, "star:{k}"),
            FamilySpec::DoubleStar { s, t } => write!(f, "dstar:{s},{t}"),
            FamilySpec::Cycle { g } => write!(f, "cycle:{g}"),
            FamilySpec::Q1 { k } => write!(f, "q1:{k}"),
            FamilySpec::Qst { s, t } => write!(f, "qst:{s},{t}"),
            FamilySpec::U1 { k } => write!(f, "u1:{k}"),
            FamilySpec::Gt { k, t } => write!(f, "gt:{k},{t}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed family {s:?}"));
        let (name, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let args: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let spec = match (name.trim(), args.as_slice()) {
            ("star", &[k]) => FamilySpec::Star { k },
            ("dstar", &[s, t]) => FamilySpec::DoubleStar { s, t },
            ("cycle", &[g]) => FamilySpec::Cycle { g },
            ("q1", &[k]) => FamilySpec::Q1 { k },
            ("qst", &[s, t]) => FamilySpec::Qst { s, t },
            ("u1", &[k]) => FamilySpec::U1 { k },
            ("gt", &[k, t]) => FamilySpec::Gt { k, t },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}
