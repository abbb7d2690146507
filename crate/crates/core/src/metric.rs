//! Quaternion Mannheim (Lipschitz) weight and distance.
//!
//! The weight of a class is the least `|a0| + |a1| + |a2| + |a3|` over all of
//! its representatives. There is no closed form for the minimizer, so it is
//! found by searching `rep - βπ` over a box of `β` values.

use std::collections::HashMap;

use crate::error::Result;
use crate::quaternion::Quaternion;
use crate::residue::{Modulus, Residue};

/// A minimal-weight representative of a residue class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightedRep {
    pub rep: Quaternion,
    pub weight: i64,
}

/// Radius of the `β` search box for a class whose canonical representative
/// has absolute sum `w0`.
pub fn search_bound(w0: i64, p: i64) -> i64 {
    (w0 + p + p - 1) / p + 1
}

/// Minimal-weight representative, ties broken by the lexicographically least
/// `(a0, a1, a2, a3)`.
pub fn min_weight_rep(x: &Residue) -> WeightedRep {
    min_weight_rep_within(x, 0)
}

/// As [`min_weight_rep`] with the search radius enlarged by `extra`.
pub fn min_weight_rep_within(x: &Residue, extra: i64) -> WeightedRep {
    let m = x.modulus();
    let rep = x.rep();
    let b = search_bound(rep.abs_sum(), m.p()) + extra;
    let mut best = WeightedRep {
        rep,
        weight: rep.abs_sum(),
    };
    for b0 in -b..=b {
        for b1 in -b..=b {
            for b2 in -b..=b {
                for b3 in -b..=b {
                    let cand = rep - Quaternion::new(b0, b1, b2, b3) * m.pi();
                    let weight = cand.abs_sum();
                    if (weight, cand) < (best.weight, best.rep) {
                        best = WeightedRep { rep: cand, weight };
                    }
                }
            }
        }
    }
    best
}

pub fn qm_weight(x: &Residue) -> i64 {
    min_weight_rep(x).weight
}

pub fn qm_distance(x: &Residue, y: &Residue) -> Result<i64> {
    Ok(qm_weight(&x.try_sub(y)?))
}

pub fn vector_qm_weight(word: &[Residue]) -> i64 {
    word.iter().map(qm_weight).sum()
}

/// Weight-one classes are exactly the classes of the eight units, so this
/// equals `qm_weight(x) == 1` without a search.
pub fn is_unit_class(x: &Residue) -> bool {
    x.modulus().unit_classes().contains(x)
}

/// Minimal-weight representatives of every class of a modulus.
#[derive(Debug, Clone)]
pub struct WeightTable {
    modulus: Modulus,
    entries: HashMap<Residue, WeightedRep>,
    by_weight: Vec<Vec<Residue>>,
}

impl WeightTable {
    pub fn new(m: &Modulus) -> Self {
        let mut entries = HashMap::new();
        let mut by_weight: Vec<Vec<Residue>> = Vec::new();
        for r in m.enumerate_residues() {
            let wr = min_weight_rep(&r);
            let w = wr.weight as usize;
            if by_weight.len() <= w {
                by_weight.resize(w + 1, Vec::new());
            }
            by_weight[w].push(r);
            entries.insert(r, wr);
        }
        WeightTable {
            modulus: *m,
            entries,
            by_weight,
        }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn get(&self, x: &Residue) -> WeightedRep {
        self.entries
            .get(x)
            .copied()
            .unwrap_or_else(|| min_weight_rep(x))
    }

    pub fn weight(&self, x: &Residue) -> i64 {
        self.get(x).weight
    }

    /// Classes of weight exactly `w`, sorted by canonical representative.
    pub fn classes_of_weight(&self, w: usize) -> &[Residue] {
        self.by_weight.get(w).map_or(&[], Vec::as_slice)
    }

    pub fn max_weight(&self) -> usize {
        self.by_weight.len().saturating_sub(1)
    }
}
