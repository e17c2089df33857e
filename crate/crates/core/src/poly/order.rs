use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::Error;

/// Orders usable on their own or inside a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseOrder {
    Lex,
    GrevLex,
    GradedLex,
}

/// A monomial order on the variables of a ring, in the ring's variable order
/// (the first variable is the largest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    GradedLex,
    /// The first `front` variables form a block that dominates the rest; each
    /// block is compared with `inner`. Eliminates the front block.
    BlockElimination {
        front: usize,
        inner: BaseOrder,
    },
}

impl From<BaseOrder> for MonomialOrder {
    fn from(b: BaseOrder) -> Self {
        match b {
            BaseOrder::Lex => MonomialOrder::Lex,
            BaseOrder::GrevLex => MonomialOrder::GrevLex,
            BaseOrder::GradedLex => MonomialOrder::GradedLex,
        }
    }
}

fn cmp_base(order: BaseOrder, a: &[u32], b: &[u32]) -> Ordering {
    match order {
        BaseOrder::Lex => a.cmp(b),
        BaseOrder::GradedLex => {
            let (da, db) = (degree(a), degree(b));
            da.cmp(&db).then_with(|| a.cmp(b))
        }
        BaseOrder::GrevLex => {
            let (da, db) = (degree(a), degree(b));
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
    }
}

fn degree(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

fn push_base_key(order: BaseOrder, e: &[u32], key: &mut Vec<i64>) {
    match order {
        BaseOrder::Lex => key.extend(e.iter().map(|&x| x as i64)),
        BaseOrder::GradedLex => {
            key.push(degree(e) as i64);
            key.extend(e.iter().map(|&x| x as i64));
        }
        BaseOrder::GrevLex => {
            key.push(degree(e) as i64);
            key.extend(e.iter().rev().map(|&x| -(x as i64)));
        }
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => cmp_base(BaseOrder::Lex, a, b),
            MonomialOrder::GrevLex => cmp_base(BaseOrder::GrevLex, a, b),
            MonomialOrder::GradedLex => cmp_base(BaseOrder::GradedLex, a, b),
            MonomialOrder::BlockElimination { front, inner } => {
                let k = front.min(a.len());
                cmp_base(inner, &a[..k], &b[..k]).then_with(|| cmp_base(inner, &a[k..], &b[k..]))
            }
        }
    }

    /// A vector whose lexicographic order agrees with this order. The map is
    /// injective, so keys can stand in for monomials in ordered containers.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        let mut key = Vec::with_capacity(e.len() + 2);
        match *self {
            MonomialOrder::Lex => push_base_key(BaseOrder::Lex, e, &mut key),
            MonomialOrder::GrevLex => push_base_key(BaseOrder::GrevLex, e, &mut key),
            MonomialOrder::GradedLex => push_base_key(BaseOrder::GradedLex, e, &mut key),
            MonomialOrder::BlockElimination { front, inner } => {
                let k = front.min(e.len());
                push_base_key(inner, &e[..k], &mut key);
                push_base_key(inner, &e[k..], &mut key);
            }
        }
        key
    }

    /// Whether every monomial of larger total degree is larger.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex | MonomialOrder::GradedLex)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::GradedLex => write!(f, "gradedlex"),
            MonomialOrder::BlockElimination { front, inner } => {
                write!(f, "block({front}, {})", MonomialOrder::from(*inner))
            }
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" | "degrevlex" => Ok(MonomialOrder::GrevLex),
            "gradedlex" | "deglex" | "graded-lex" => Ok(MonomialOrder::GradedLex),
            other => Err(Error::Parse(format!("unknown monomial order '{other}'"))),
        }
    }
}
