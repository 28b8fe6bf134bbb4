use serde::{Deserialize, Serialize};

use super::metabelian::MetabelianGroup;
use crate::error::{Error, Result};
use crate::group_engine::{direct_product, PermGroup, Permutation, DEFAULT_ENUMERATION_CAP};

/// Construction tree for a group. Serializes to the `"op"`-tagged JSON
/// nodes of the group spec file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupExpr {
    Cyclic {
        n: u64,
    },
    Abelian {
        orders: Vec<u64>,
    },
    /// `(Z_{p_1} ⊕ … ⊕ Z_{p_r}) ⋊ Z_complement` with one multiplier per
    /// kernel prime (chosen automatically when absent).
    Frobenius {
        kernel: Vec<u64>,
        complement: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        multipliers: Option<Vec<u64>>,
    },
    /// General multiplier action: `multipliers[i][j]` is the unit by which
    /// top generator `i` multiplies kernel factor `j`.
    Semidirect {
        kernel: Vec<u64>,
        top: Vec<u64>,
        multipliers: Vec<Vec<u64>>,
    },
    Direct {
        factors: Vec<GroupExpr>,
    },
    Perm {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
}

/// Result of evaluating a [`GroupExpr`].
#[derive(Debug, Clone)]
pub enum EvaluatedGroup {
    Structured(MetabelianGroup),
    Perm(PermGroup),
}

impl EvaluatedGroup {
    pub fn order(&self) -> Result<u64> {
        match self {
            Self::Structured(g) => g.order(),
            Self::Perm(g) => g.order(),
        }
    }

    /// The permutation form, converting structured groups if needed.
    pub fn to_perm(&self, cap: usize) -> Result<PermGroup> {
        match self {
            Self::Structured(g) => g.to_permutation(cap),
            Self::Perm(g) => Ok(g.clone().with_cap(cap)),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Enumeration cap for permutation groups.
    pub cap: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_ENUMERATION_CAP }
    }
}

impl GroupExpr {
    pub fn cyclic(n: u64) -> Self {
        Self::Cyclic { n }
    }

    pub fn frobenius(kernel: Vec<u64>, complement: u64) -> Self {
        Self::Frobenius { kernel, complement, multipliers: None }
    }

    pub fn direct(factors: Vec<GroupExpr>) -> Self {
        Self::Direct { factors }
    }

    pub fn evaluate(&self) -> Result<EvaluatedGroup> {
        self.evaluate_with(EvalOptions::default())
    }

    /// Builds the group. Direct products of structured factors fold into
    /// one structured group; any permutation factor turns the whole product
    /// into a permutation group.
    pub fn evaluate_with(&self, opts: EvalOptions) -> Result<EvaluatedGroup> {
        Ok(match self {
            Self::Cyclic { n } => EvaluatedGroup::Structured(MetabelianGroup::abelian(vec![*n])?),
            Self::Abelian { orders } => EvaluatedGroup::Structured(MetabelianGroup::abelian(orders.clone())?),
            Self::Frobenius { kernel, complement, multipliers } => {
                EvaluatedGroup::Structured(MetabelianGroup::frobenius(kernel, *complement, multipliers.as_deref())?)
            }
            Self::Semidirect { kernel, top, multipliers } => {
                EvaluatedGroup::Structured(MetabelianGroup::new(kernel.clone(), top.clone(), multipliers.clone())?)
            }
            Self::Perm { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| {
                        if g.len() != *degree {
                            return Err(Error::InvalidPermutation(format!(
                                "generator of length {} for degree {degree}",
                                g.len()
                            )));
                        }
                        Permutation::new(g.clone())
                    })
                    .collect::<Result<Vec<_>>>()?;
                EvaluatedGroup::Perm(PermGroup::new(*degree, gens)?.with_cap(opts.cap))
            }
            Self::Direct { factors } => {
                if factors.is_empty() {
                    return Err(Error::MalformedExpr("direct product with no factors".into()));
                }
                let parts = factors.iter().map(|f| f.evaluate_with(opts)).collect::<Result<Vec<_>>>()?;
                if parts.iter().all(|p| matches!(p, EvaluatedGroup::Structured(_))) {
                    let groups: Vec<MetabelianGroup> = parts
                        .into_iter()
                        .map(|p| match p {
                            EvaluatedGroup::Structured(g) => g,
                            EvaluatedGroup::Perm(_) => unreachable!(),
                        })
                        .collect();
                    EvaluatedGroup::Structured(MetabelianGroup::direct(&groups)?)
                } else {
                    let mut perms = parts.iter().map(|p| p.to_perm(opts.cap));
                    let first = perms.next().expect("nonempty")?;
                    let product = perms.try_fold(first, |acc, p| Ok::<_, Error>(direct_product(&acc, &p?)))?;
                    EvaluatedGroup::Perm(product.with_cap(opts.cap))
                }
            }
        })
    }

    /// Nodes that are declared direct products, as their factor list.
    pub fn direct_factors(&self) -> Option<&[GroupExpr]> {
        match self {
            Self::Direct { factors } => Some(factors),
            _ => None,
        }
    }
}
