//! Decision trees over a slice: construction, verification and export.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::slice::{QueryState, SliceDomain, SliceFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Leaf(bool),
    /// Ask `position`; `no` is followed when it is not in A, `yes` otherwise.
    Query {
        position: u32,
        no: usize,
        yes: usize,
    },
}

/// Arena-allocated decision tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTree {
    nodes: Vec<Node>,
    root: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeCheck {
    pub valid: bool,
    pub height: u32,
}

impl DecisionTree {
    pub fn leaf(value: bool) -> Self {
        Self {
            nodes: vec![Node::Leaf(value)],
            root: 0,
        }
    }

    /// Raw constructor; structure is checked by [`verify_tree`].
    pub fn from_nodes(nodes: Vec<Node>, root: usize) -> Self {
        Self { nodes, root }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub(crate) fn push(&mut self, node: Node) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub(crate) fn set_root(&mut self, root: usize) {
        self.root = root;
    }

    pub(crate) fn empty() -> Self {
        Self {
            nodes: Vec::new(),
            root: 0,
        }
    }

    fn node(&self, idx: usize) -> Result<Node> {
        self.nodes
            .get(idx)
            .copied()
            .ok_or_else(|| Error::Structural(format!("dangling child index {idx}")))
    }

    /// Rejects dangling children, positions outside `[n]` and positions
    /// repeated along a root-to-leaf path (which also rules out cycles).
    pub fn check_structure(&self, n: u32) -> Result<()> {
        let mut stack = vec![(self.root, 0u64)];
        while let Some((idx, path)) = stack.pop() {
            match self.node(idx)? {
                Node::Leaf(_) => {}
                Node::Query { position, no, yes } => {
                    if position == 0 || position > n {
                        return Err(Error::Structural(format!(
                            "query position {position} outside [1, {n}]"
                        )));
                    }
                    let bit = 1u64 << (position - 1);
                    if path & bit != 0 {
                        return Err(Error::Structural(format!(
                            "position {position} repeats on a root-to-leaf path"
                        )));
                    }
                    stack.push((no, path | bit));
                    stack.push((yes, path | bit));
                }
            }
        }
        Ok(())
    }

    /// `{"query":i,"no":…,"yes":…}` / `{"leaf":0|1}`.
    pub fn to_json(&self) -> Result<Value> {
        self.json_at(self.root, 0)
    }

    fn json_at(&self, idx: usize, depth: usize) -> Result<Value> {
        if depth > 64 {
            return Err(Error::Structural("tree deeper than 64 levels".into()));
        }
        Ok(match self.node(idx)? {
            Node::Leaf(v) => json!({ "leaf": v as u8 }),
            Node::Query { position, no, yes } => json!({
                "query": position,
                "no": self.json_at(no, depth + 1)?,
                "yes": self.json_at(yes, depth + 1)?,
            }),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let mut tree = Self::empty();
        let root = tree.read_json(value, 0)?;
        tree.set_root(root);
        Ok(tree)
    }

    fn read_json(&mut self, value: &Value, depth: usize) -> Result<usize> {
        if depth > 64 {
            return Err(Error::Parse("tree deeper than 64 levels".into()));
        }
        if let Some(leaf) = value.get("leaf") {
            let v = match leaf.as_u64() {
                Some(0) => false,
                Some(1) => true,
                _ => return Err(Error::Parse(format!("bad leaf label {leaf}"))),
            };
            return Ok(self.push(Node::Leaf(v)));
        }
        let position = value
            .get("query")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("node has neither `leaf` nor `query`".into()))?;
        let child = |key: &str| {
            value
                .get(key)
                .ok_or_else(|| Error::Parse(format!("query node lacks `{key}`")))
        };
        let no = self.read_json(child("no")?, depth + 1)?;
        let yes = self.read_json(child("yes")?, depth + 1)?;
        Ok(self.push(Node::Query {
            position: position as u32,
            no,
            yes,
        }))
    }

    /// Graphviz text; leaves are boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph decision_tree {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            match node {
                Node::Leaf(v) => {
                    let _ = writeln!(out, "  n{i} [shape=box, label=\"{}\"];", *v as u8);
                }
                Node::Query { position, no, yes } => {
                    let _ = writeln!(out, "  n{i} [shape=ellipse, label=\"x{position}\"];");
                    let _ = writeln!(out, "  n{i} -> n{no} [label=\"0\"];");
                    let _ = writeln!(out, "  n{i} -> n{yes} [label=\"1\"];");
                }
            }
        }
        let _ = writeln!(out, "  root -> n{} [style=invis];", self.root);
        out.push_str("  root [shape=point];\n}\n");
        out
    }
}

/// Follow every slice element from the root; the tree is valid when each
/// reaches a leaf carrying `f(A)`. The height is the longest path taken by
/// any slice element, so branches no element can reach are not counted.
pub fn verify_tree(t: &DecisionTree, f: &SliceFunction) -> Result<TreeCheck> {
    let d: &SliceDomain = f.domain();
    t.check_structure(d.n())?;
    let mut valid = true;
    let mut height = 0;
    for a in d.elements() {
        let mut idx = t.root;
        let mut depth = 0;
        let value = loop {
            match t.node(idx)? {
                Node::Leaf(v) => break v,
                Node::Query { position, no, yes } => {
                    depth += 1;
                    idx = if a.contains(position) { yes } else { no };
                }
            }
        };
        height = height.max(depth);
        if value != f.eval(a)? {
            valid = false;
        }
    }
    Ok(TreeCheck { valid, height })
}

/// The state reached at each node along consistent paths; used by tests
/// asserting adversary soundness of extracted trees.
pub fn reachable_states(t: &DecisionTree, d: &SliceDomain) -> Result<Vec<(usize, QueryState)>> {
    t.check_structure(d.n())?;
    let mut out = Vec::new();
    let mut stack = vec![(t.root, QueryState::empty())];
    while let Some((idx, st)) = stack.pop() {
        out.push((idx, st));
        if let Node::Query { position, no, yes } = t.node(idx)? {
            for (child, ans) in [(no, false), (yes, true)] {
                let next = st.with_answer(position, ans);
                if next.is_consistent(d) {
                    stack.push((child, next));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dictator() -> SliceFunction {
        let d = SliceDomain::new(4, 2).unwrap();
        SliceFunction::from_fn(d, |s| s.contains(1)).unwrap()
    }

    fn dictator_tree() -> DecisionTree {
        DecisionTree::from_nodes(
            vec![
                Node::Leaf(false),
                Node::Leaf(true),
                Node::Query {
                    position: 1,
                    no: 0,
                    yes: 1,
                },
            ],
            2,
        )
    }

    #[test]
    fn single_leaf() {
        let d = SliceDomain::new(4, 2).unwrap();
        let zero = SliceFunction::constant(d, false).unwrap();
        let t = DecisionTree::leaf(false);
        assert_eq!(
            verify_tree(&t, &zero).unwrap(),
            TreeCheck {
                valid: true,
                height: 0
            }
        );
        assert_eq!(
            verify_tree(&t, &dictator()).unwrap(),
            TreeCheck {
                valid: false,
                height: 0
            }
        );
    }

    #[test]
    fn dictator_tree_verifies() {
        let check = verify_tree(&dictator_tree(), &dictator()).unwrap();
        assert_eq!(
            check,
            TreeCheck {
                valid: true,
                height: 1
            }
        );
    }

    #[test]
    fn structural_errors() {
        let f = dictator();
        let repeated = DecisionTree::from_nodes(
            vec![
                Node::Leaf(false),
                Node::Query {
                    position: 1,
                    no: 0,
                    yes: 0,
                },
                Node::Query {
                    position: 1,
                    no: 1,
                    yes: 0,
                },
            ],
            2,
        );
        assert!(matches!(
            verify_tree(&repeated, &f),
            Err(Error::Structural(_))
        ));
        let cyclic = DecisionTree::from_nodes(
            vec![Node::Query {
                position: 2,
                no: 0,
                yes: 0,
            }],
            0,
        );
        assert!(matches!(
            verify_tree(&cyclic, &f),
            Err(Error::Structural(_))
        ));
        let dangling = DecisionTree::from_nodes(
            vec![Node::Query {
                position: 2,
                no: 5,
                yes: 0,
            }],
            0,
        );
        assert!(matches!(
            verify_tree(&dangling, &f),
            Err(Error::Structural(_))
        ));
        let outside = DecisionTree::from_nodes(
            vec![
                Node::Leaf(true),
                Node::Query {
                    position: 9,
                    no: 0,
                    yes: 0,
                },
            ],
            1,
        );
        assert!(matches!(
            verify_tree(&outside, &f),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn json_and_dot_export() {
        let t = dictator_tree();
        let v = t.to_json().unwrap();
        assert_eq!(
            v.to_string(),
            r#"{"query":1,"no":{"leaf":0},"yes":{"leaf":1}}"#
        );
        let back = DecisionTree::from_json(&v).unwrap();
        assert_eq!(verify_tree(&back, &dictator()).unwrap().height, 1);
        let dot = t.to_dot();
        assert!(dot.contains("shape=box"));
        assert!(dot.contains("label=\"x1\""));
        assert!(DecisionTree::from_json(&json!({"leaf": 2})).is_err());
        assert!(DecisionTree::from_json(&json!({"query": 1, "no": {"leaf": 0}})).is_err());
    }
}
