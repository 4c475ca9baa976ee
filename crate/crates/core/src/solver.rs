//! Exact deterministic query complexity by Questioner/Adversary minimax.
//!
//! `D(st)` is 0 when `f` is constant on the elements consistent with `st`,
//! and otherwise `1 + min_i max_a D(st + (i, a))`, the max ranging over the
//! answers that keep at least one consistent element. States are memoized on
//! `(queried, ones)` without symmetry reduction.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::slice::{QueryState, SliceDomain, SliceFunction, SubsetMask};
use crate::tree::{DecisionTree, Node};

/// Memo entries allowed before `solve_depth` gives up.
pub const DEFAULT_STATE_BUDGET: usize = 20_000_000;

/// Largest slice `max_depth_all` will enumerate all functions of.
pub const MAX_DEPTH_ALL_SLICE: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Step {
    pub position: u32,
    pub answer: bool,
}

#[derive(Debug, Clone)]
pub struct DepthResult {
    pub n: u32,
    pub depth: u32,
    pub co_depth: u32,
    pub optimal_tree: Option<DecisionTree>,
    pub nodes_expanded: u64,
    /// Optimal play from the empty state: lowest optimal query, adversary
    /// answering 0 on ties.
    pub principal_line: Vec<Step>,
}

impl DepthResult {
    pub fn to_json(&self) -> Result<Value> {
        let mut v = json!({
            "n": self.n,
            "D": self.depth,
            "E": self.co_depth,
            "nodes_expanded": self.nodes_expanded,
            "principal_line": self.principal_line,
        });
        if let Some(t) = &self.optimal_tree {
            v["tree"] = t.to_json()?;
        }
        Ok(v)
    }
}

struct Solver<'a> {
    f: &'a SliceFunction,
    d: SliceDomain,
    memo: HashMap<QueryState, u8>,
    budget: usize,
    expanded: u64,
}

impl<'a> Solver<'a> {
    fn new(f: &'a SliceFunction, budget: usize) -> Self {
        Self {
            f,
            d: *f.domain(),
            memo: HashMap::new(),
            budget,
            expanded: 0,
        }
    }

    fn positions(&self, st: &QueryState) -> impl Iterator<Item = u32> {
        let free = st.free(&self.d);
        (1..=self.d.n()).filter(move |p| free >> (p - 1) & 1 == 1)
    }

    fn depth(&mut self, st: QueryState) -> Result<u8> {
        if let Some(&v) = self.memo.get(&st) {
            return Ok(v);
        }
        self.expanded += 1;
        let value = if self.f.consistent_values(&st)?.single().is_some() {
            0
        } else {
            let mut best = u8::MAX;
            let free: Vec<u32> = self.positions(&st).collect();
            for p in free {
                let mut worst = 0u8;
                for ans in [false, true] {
                    let next = st.with_answer(p, ans);
                    if !next.is_consistent(&self.d) {
                        continue;
                    }
                    worst = worst.max(self.depth(next)?);
                    // this query can no longer beat the incumbent
                    if worst + 1 >= best {
                        break;
                    }
                }
                best = best.min(worst + 1);
                if best == 1 {
                    break;
                }
            }
            best
        };
        if self.memo.len() >= self.budget {
            return Err(Error::resource(
                "query-state memo",
                self.memo.len() as u128 + 1,
                self.budget as u128,
            ));
        }
        self.memo.insert(st, value);
        Ok(value)
    }

    /// Value of asking `p` at `st`, with the answer the adversary picks.
    fn query_value(&mut self, st: QueryState, p: u32) -> Result<(u8, bool)> {
        let mut worst = 0;
        let mut answer = false;
        for ans in [false, true] {
            let next = st.with_answer(p, ans);
            if next.is_consistent(&self.d) {
                let v = self.depth(next)?;
                if v > worst || (!ans && v == worst) {
                    worst = v;
                    answer = ans;
                }
            }
        }
        Ok((worst + 1, answer))
    }

    fn best_query(&mut self, st: QueryState) -> Result<Option<(u32, bool)>> {
        let target = self.depth(st)?;
        if target == 0 {
            return Ok(None);
        }
        let free: Vec<u32> = self.positions(&st).collect();
        for p in free {
            let (v, ans) = self.query_value(st, p)?;
            if v == target {
                return Ok(Some((p, ans)));
            }
        }
        Err(Error::Internal(format!(
            "no query attains the memoized depth {target}"
        )))
    }

    fn build(&mut self, st: QueryState, tree: &mut DecisionTree) -> Result<usize> {
        let Some((p, _)) = self.best_query(st)? else {
            let vs = self.f.consistent_values(&st)?;
            let v = vs
                .single()
                .ok_or_else(|| Error::Internal("depth 0 on a non-constant state".into()))?;
            return Ok(tree.push(Node::Leaf(v)));
        };
        let mut child = [0usize; 2];
        for (slot, ans) in [false, true].into_iter().enumerate() {
            let next = st.with_answer(p, ans);
            child[slot] = if next.is_consistent(&self.d) {
                self.build(next, tree)?
            } else {
                tree.push(Node::Leaf(false))
            };
        }
        Ok(tree.push(Node::Query {
            position: p,
            no: child[0],
            yes: child[1],
        }))
    }

    fn principal_line(&mut self) -> Result<Vec<Step>> {
        let mut st = QueryState::empty();
        let mut line = Vec::new();
        while let Some((p, ans)) = self.best_query(st)? {
            line.push(Step {
                position: p,
                answer: ans,
            });
            st = st.with_answer(p, ans);
        }
        Ok(line)
    }
}

/// Exact `D_k(f)` with the default state budget.
pub fn solve_depth(f: &SliceFunction, extract_tree: bool) -> Result<DepthResult> {
    solve_depth_with_budget(f, extract_tree, DEFAULT_STATE_BUDGET)
}

pub fn solve_depth_with_budget(
    f: &SliceFunction,
    extract_tree: bool,
    budget: usize,
) -> Result<DepthResult> {
    let mut solver = Solver::new(f, budget);
    let depth = solver.depth(QueryState::empty())? as u32;
    let optimal_tree = if extract_tree {
        let mut tree = DecisionTree::empty();
        let root = solver.build(QueryState::empty(), &mut tree)?;
        tree.set_root(root);
        Some(tree)
    } else {
        None
    };
    let principal_line = solver.principal_line()?;
    let n = f.domain().n();
    Ok(DepthResult {
        n,
        depth,
        co_depth: n - depth,
        optimal_tree,
        nodes_expanded: solver.expanded,
        principal_line,
    })
}

#[derive(Debug, Clone)]
pub struct MaxDepth {
    pub depth: u32,
    pub co_depth: u32,
    pub witness: SliceFunction,
}

impl MaxDepth {
    /// `{"n","k","D","E","witness"}`, the witness as its table string.
    pub fn to_json(&self) -> Result<Value> {
        let d = self.witness.domain();
        let table: String = self
            .witness
            .values()?
            .iter()
            .map(|&v| if v { '1' } else { '0' })
            .collect();
        Ok(json!({
            "n": d.n(),
            "k": d.k(),
            "D": self.depth,
            "E": self.co_depth,
            "witness": table,
        }))
    }
}

/// `D_k(n)`: the maximum of `solve_depth` over every table function on the
/// slice. The witness is the attaining function with the smallest table
/// (read as a binary number, colex rank 0 least significant).
pub fn max_depth_all(d: SliceDomain) -> Result<MaxDepth> {
    let size = d.size();
    if size > MAX_DEPTH_ALL_SLICE {
        return Err(Error::resource(
            format!("enumerating all functions on {d}"),
            1u128 << size.min(127),
            1u128 << MAX_DEPTH_ALL_SLICE,
        ));
    }
    let (depth, bits) = (0..1u64 << size)
        .into_par_iter()
        .map(|bits| {
            let f = SliceFunction::from_bits(d, bits)?;
            Ok((solve_depth(&f, false)?.depth, bits))
        })
        .try_reduce(
            || (0, u64::MAX),
            |a, b| {
                Ok(
                    if (b.0, std::cmp::Reverse(b.1)) > (a.0, std::cmp::Reverse(a.1)) {
                        b
                    } else {
                        a
                    },
                )
            },
        )?;
    Ok(MaxDepth {
        depth,
        co_depth: d.n() - depth,
        witness: SliceFunction::from_bits(d, bits)?,
    })
}

/// The composition on `(n1 + n2, k1 + k2)`: `f(A) = 1` iff
/// `|A ∩ [n1]| = k1` and `f1(A ∩ [n1]) = f2(A ∩ [n1 + 1, n])`, the second
/// block relabelled by subtracting `n1`.
pub fn compose(f1: &SliceFunction, f2: &SliceFunction) -> Result<SliceFunction> {
    let (d1, d2) = (*f1.domain(), *f2.domain());
    let d = SliceDomain::new(d1.n() + d2.n(), d1.k() + d2.k())?;
    let low = d1.full_mask();
    let mut values = Vec::new();
    if d.size() > crate::slice::TABLE_BUDGET {
        return Err(Error::resource(
            format!("composed table on {d}"),
            d.size() as u128,
            crate::slice::TABLE_BUDGET as u128,
        ));
    }
    values.reserve(d.size() as usize);
    for a in d.elements() {
        let left = SubsetMask(a.0 & low);
        let v = if left.count() != d1.k() {
            false
        } else {
            let right = SubsetMask(a.0 >> d1.n());
            f1.eval(left)? == f2.eval(right)?
        };
        values.push(v);
    }
    SliceFunction::from_values(d, &values)
}
