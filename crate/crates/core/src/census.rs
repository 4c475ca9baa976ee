//! Exhaustive decision-tree census on tiny slices.
//!
//! Two shapes are counted. [`census_trees`] follows the counting model of the
//! decision-tree bound: a node is a leaf exactly when the input is already
//! determined (`k` ones or `n - k` zeros seen) or the height limit is reached,
//! and every other node is a query on a yet-unqueried position.
//! [`census_trees_any`] additionally lets any node stop early with a leaf.
//! Leaves carry a label in `{0, 1}` in both.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::counting::g_logmass;
use crate::error::{Error, Result};
use crate::slice::{colex_rank, QueryState, SliceDomain};

/// Largest `n` the census will walk.
pub const CENSUS_MAX_N: u32 = 8;

/// Trees `enumerate_tree_tables` may materialise.
pub const ENUMERATION_BUDGET: u64 = 5_000_000;

fn check_size(d: &SliceDomain) -> Result<()> {
    if d.n() > CENSUS_MAX_N {
        return Err(Error::resource(
            format!("tree census on {d}"),
            d.n() as u128,
            CENSUS_MAX_N as u128,
        ));
    }
    Ok(())
}

fn free_positions(d: &SliceDomain, st: &QueryState) -> impl Iterator<Item = u32> {
    let free = st.free(d);
    (1..=d.n()).filter(move |p| free >> (p - 1) & 1 == 1)
}

struct Counter {
    d: SliceDomain,
    early_leaves: bool,
    memo: HashMap<(QueryState, u32), BigUint>,
}

impl Counter {
    fn count(&mut self, st: QueryState, h: u32) -> BigUint {
        if st.is_determined(&self.d) || h == 0 {
            return BigUint::from(2u32);
        }
        if let Some(c) = self.memo.get(&(st, h)) {
            return c.clone();
        }
        let mut total = if self.early_leaves {
            BigUint::from(2u32)
        } else {
            BigUint::zero()
        };
        let d = self.d;
        for p in free_positions(&d, &st) {
            let no = self.count(st.with_answer(p, false), h - 1);
            let yes = self.count(st.with_answer(p, true), h - 1);
            total += no * yes;
        }
        self.memo.insert((st, h), total.clone());
        total
    }
}

/// Number of labelled trees of height at most `hmax` in the counting model.
pub fn census_trees(d: SliceDomain, hmax: u32) -> Result<BigUint> {
    check_size(&d)?;
    let mut c = Counter {
        d,
        early_leaves: false,
        memo: HashMap::new(),
    };
    Ok(c.count(QueryState::empty(), hmax))
}

/// Number of labelled trees of height at most `hmax` when any node may be
/// a leaf.
pub fn census_trees_any(d: SliceDomain, hmax: u32) -> Result<BigUint> {
    check_size(&d)?;
    let mut c = Counter {
        d,
        early_leaves: true,
        memo: HashMap::new(),
    };
    Ok(c.count(QueryState::empty(), hmax))
}

/// One enumerated tree, reduced to what it computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TreeTable {
    /// Longest path any slice element follows.
    pub height: u32,
    /// Bit `r` is the output on the element of colex rank `r`.
    pub table: u64,
}

type TableList = Arc<Vec<(u8, u64)>>;

struct Enumerator {
    d: SliceDomain,
    memo: HashMap<(QueryState, u32), TableList>,
}

impl Enumerator {
    fn consistent_mask(&self, st: &QueryState) -> u64 {
        let mut mask = 0u64;
        st.for_each_completion(&self.d, |s| {
            mask |= 1 << colex_rank(s, &self.d).expect("completion lies in the slice");
            std::ops::ControlFlow::<()>::Continue(())
        });
        mask
    }

    fn list(&mut self, st: QueryState, h: u32) -> TableList {
        if let Some(l) = self.memo.get(&(st, h)) {
            return l.clone();
        }
        let mask = self.consistent_mask(&st);
        let mut out = vec![(0u8, 0u64), (0u8, mask)];
        if !st.is_determined(&self.d) && h > 0 {
            let d = self.d;
            for p in free_positions(&d, &st) {
                let no = self.list(st.with_answer(p, false), h - 1);
                let yes = self.list(st.with_answer(p, true), h - 1);
                for &(h0, t0) in no.iter() {
                    for &(h1, t1) in yes.iter() {
                        out.push((1 + h0.max(h1), t0 | t1));
                    }
                }
            }
        }
        let out = Arc::new(out);
        self.memo.insert((st, h), out.clone());
        out
    }
}

/// Every tree of height at most `hmax` (any shape), as (height, table).
/// Trees are listed with multiplicity, one entry per labelled tree.
pub fn enumerate_tree_tables(d: SliceDomain, hmax: u32) -> Result<Vec<TreeTable>> {
    check_size(&d)?;
    if d.size() > 64 {
        return Err(Error::Domain(format!(
            "slice {d} has more than 64 elements"
        )));
    }
    let count = census_trees_any(d, hmax)?;
    if count > BigUint::from(ENUMERATION_BUDGET) {
        return Err(Error::resource(
            format!("enumerating trees on {d}"),
            u128::try_from(count).unwrap_or(u128::MAX),
            ENUMERATION_BUDGET as u128,
        ));
    }
    let mut e = Enumerator {
        d,
        memo: HashMap::new(),
    };
    Ok(e.list(QueryState::empty(), hmax)
        .iter()
        .map(|&(height, table)| TreeTable {
            height: height as u32,
            table,
        })
        .collect())
}

/// Number of distinct functions computed by trees of height at most `hmax`.
pub fn distinct_functions(d: SliceDomain, hmax: u32) -> Result<u64> {
    let mut tables: Vec<u64> = enumerate_tree_tables(d, hmax)?
        .into_iter()
        .map(|t| t.table)
        .collect();
    tables.sort_unstable();
    tables.dedup();
    Ok(tables.len() as u64)
}

/// Minimum height per function table, from the enumeration.
pub fn min_height_by_table(d: SliceDomain) -> Result<HashMap<u64, u32>> {
    let mut best: HashMap<u64, u32> = HashMap::new();
    for t in enumerate_tree_tables(d, d.n())? {
        let e = best.entry(t.table).or_insert(u32::MAX);
        *e = (*e).min(t.height);
    }
    Ok(best)
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub n: u32,
    pub k: u32,
    pub height: u32,
    /// `"full"` ([`census_trees`]) or `"any"` ([`census_trees_any`]).
    pub model: &'static str,
    pub trees: String,
    /// `g(n, k, n - height)` written out.
    pub g: String,
    pub within_g: bool,
}

/// Tree count at one height next to the counting bound for `t = n - height`.
pub fn census_report(d: SliceDomain, height: u32, any_shape: bool) -> Result<CensusReport> {
    if height > d.n() {
        return Err(Error::Domain(format!(
            "height {height} exceeds n = {}",
            d.n()
        )));
    }
    let trees = if any_shape {
        census_trees_any(d, height)?
    } else {
        census_trees(d, height)?
    };
    let g = g_logmass(d.n(), d.k(), d.n() - height)?.expand()?;
    Ok(CensusReport {
        n: d.n(),
        k: d.k(),
        height,
        model: if any_shape { "any" } else { "full" },
        within_g: trees <= g,
        trees: trees.to_string(),
        g: g.to_string(),
    })
}

/// `2^binom(n, k)`, the number of functions on the slice.
pub fn function_count(d: &SliceDomain) -> BigUint {
    BigUint::one() << d.size()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(n: u32, k: u32) -> SliceDomain {
        SliceDomain::new(n, k).unwrap()
    }

    #[test]
    fn height_zero_is_two_leaves() {
        for (n, k) in [(1, 0), (3, 1), (4, 2), (6, 3)] {
            assert_eq!(census_trees(dom(n, k), 0).unwrap(), BigUint::from(2u32));
            assert_eq!(census_trees_any(dom(n, k), 0).unwrap(), BigUint::from(2u32));
        }
    }

    #[test]
    fn pinned_counts() {
        // independent recursive enumeration, see tests/census_oracle.rs
        assert_eq!(census_trees(dom(3, 1), 2).unwrap(), BigUint::from(48u32));
        assert_eq!(census_trees(dom(3, 1), 1).unwrap(), BigUint::from(12u32));
        assert_eq!(census_trees(dom(4, 2), 4).unwrap(), BigUint::from(9216u32));
        assert_eq!(
            census_trees_any(dom(3, 1), 2).unwrap(),
            BigUint::from(62u32)
        );
        assert_eq!(
            census_trees_any(dom(4, 2), 4).unwrap(),
            BigUint::from(15378u32)
        );
    }

    #[test]
    fn enumeration_matches_count() {
        for (n, k) in [(2, 1), (3, 1), (4, 2), (4, 1)] {
            for h in 0..=n {
                let listed = enumerate_tree_tables(dom(n, k), h).unwrap().len() as u64;
                assert_eq!(
                    BigUint::from(listed),
                    census_trees_any(dom(n, k), h).unwrap()
                );
            }
        }
    }

    #[test]
    fn every_function_has_a_tree_of_height_n() {
        let d = dom(4, 2);
        assert_eq!(distinct_functions(d, 4).unwrap(), 64);
        assert_eq!(distinct_functions(d, 0).unwrap(), 2);
    }

    #[test]
    fn too_large_is_a_resource_error() {
        assert!(census_trees(dom(9, 4), 3).unwrap_err().is_resource());
        assert!(enumerate_tree_tables(dom(5, 2), 5)
            .unwrap_err()
            .is_resource());
    }
}
