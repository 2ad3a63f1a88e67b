//! Wire formats.
//!
//! Tree JSON: `{"s": [..], "tree": NODE}` where `NODE = [label, [CHILD, ..]]`
//! and `CHILD` is a `NODE` or `null` for a leaf; children are listed left to
//! right, exactly `s(label) + 1` of them.
//!
//! Inversion JSON: `{"n": .., "inv": [[y, x, c], ..]}` listing only entries
//! with `c > 0`, sorted by `(y, x)`.
//!
//! DOT: node ids are canonical inversion strings (the cardinality vector in
//! `(y, x)` pair order, comma-joined), edge labels are `"(a,c)"`.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use slattice_core::nu::NuTree;
use slattice_core::tamari::ClassPartition;
use slattice_core::weak_order::HasseDiagram;
use slattice_core::{MultiInversionSet, Node, SDecreasingTree, TreeInversionSet, WeakComposition};

/// Parses `"0,2,2"` into a signature.
pub fn parse_signature(text: &str) -> Result<WeakComposition> {
    let entries = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .with_context(|| format!("bad signature entry {part:?}"))
        })
        .collect::<Result<Vec<u32>>>()?;
    WeakComposition::new(entries).map_err(|e| anyhow!(e))
}

/// The canonical inversion string: cardinalities in `(y, x)` lexicographic
/// pair order, comma-joined. Stable across runs, used as DOT node ids.
/// The single-node signature has no pairs; its tree is written `-`.
pub fn inversion_string(t: &SDecreasingTree) -> String {
    if t.n() == 1 {
        return String::from("-");
    }
    t.inversions()
        .vector()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn node_json(node: &Node) -> Value {
    let children: Vec<Value> = node
        .children
        .iter()
        .map(|c| c.as_ref().map_or(Value::Null, node_json))
        .collect();
    json!([node.label, children])
}

/// The `NODE` encoding of the tree, without the signature wrapper.
pub fn node_value(t: &SDecreasingTree) -> Value {
    node_json(t.root())
}

/// The full tree document `{"s": [...], "tree": NODE}`.
pub fn tree_json(t: &SDecreasingTree) -> Value {
    json!({
        "s": t.signature().entries(),
        "tree": node_json(t.root()),
    })
}

/// The inversion-list document `{"n": .., "inv": [[y, x, c], ..]}`.
pub fn inversions_json(t: &SDecreasingTree) -> Value {
    let entries: Vec<Value> = t
        .inversions()
        .positive_entries()
        .into_iter()
        .map(|(y, x, c)| json!([y, x, c]))
        .collect();
    json!({ "n": t.n(), "inv": entries })
}

fn node_from_json(value: &Value) -> Result<Node> {
    let pair = value
        .as_array()
        .ok_or_else(|| anyhow!("tree node must be [label, [children]]"))?;
    if pair.len() != 2 {
        bail!("tree node must have exactly label and children");
    }
    let label = pair[0]
        .as_u64()
        .ok_or_else(|| anyhow!("node label must be a positive integer"))? as usize;
    let children = pair[1]
        .as_array()
        .ok_or_else(|| anyhow!("node children must be an array"))?
        .iter()
        .map(|c| {
            if c.is_null() {
                Ok(None)
            } else {
                node_from_json(c).map(Some)
            }
        })
        .collect::<Result<Vec<Option<Node>>>>()?;
    Ok(Node { label, children })
}

/// Reads a tree document; when `expected` is given the embedded signature
/// must match it.
pub fn tree_from_json(value: &Value, expected: Option<&WeakComposition>) -> Result<SDecreasingTree> {
    let obj = value
        .as_object()
        .ok_or_else(|| anyhow!("tree document must be a JSON object"))?;
    let sig = match (obj.get("s"), expected) {
        (Some(s), _) => {
            let entries = s
                .as_array()
                .ok_or_else(|| anyhow!("field s must be an array"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .map(|v| v as u32)
                        .ok_or_else(|| anyhow!("signature entries must be non-negative integers"))
                })
                .collect::<Result<Vec<u32>>>()?;
            let sig = WeakComposition::new(entries).map_err(|e| anyhow!(e))?;
            if let Some(expected) = expected {
                if &sig != expected {
                    bail!("embedded signature differs from --s");
                }
            }
            sig
        }
        (None, Some(expected)) => expected.clone(),
        (None, None) => bail!("tree document carries no signature and none was given"),
    };
    if let Some(inv) = obj.get("inv") {
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| anyhow!("inversion document needs the field n"))?
            as usize;
        if n != sig.length() {
            bail!("inversion document size differs from the signature length");
        }
        let mut set = MultiInversionSet::empty(n);
        for entry in inv
            .as_array()
            .ok_or_else(|| anyhow!("field inv must be an array"))?
        {
            let triple = entry
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| anyhow!("inversion entries are [y, x, c]"))?;
            let get = |i: usize| {
                triple[i]
                    .as_u64()
                    .ok_or_else(|| anyhow!("inversion entries are non-negative integers"))
            };
            let (y, x, c) = (get(0)? as usize, get(1)? as usize, get(2)? as u32);
            if !(1 <= x && x < y && y <= n) {
                bail!("inversion pair ({y},{x}) out of range");
            }
            set.set(y, x, c);
        }
        let tis = TreeInversionSet::new(set, sig).map_err(|e| anyhow!(e))?;
        return Ok(slattice_core::construct_tree(&tis));
    }
    let tree = obj
        .get("tree")
        .ok_or_else(|| anyhow!("tree document needs the field tree (or inv)"))?;
    let root = node_from_json(tree)?;
    SDecreasingTree::new(sig, root).map_err(|e| anyhow!(e))
}

/// Parses a tree argument: either the tree document or the inversion-list
/// document (the latter needs `--s` or an embedded `"s"`).
pub fn parse_tree_input(text: &str, expected: Option<&WeakComposition>) -> Result<SDecreasingTree> {
    let value: Value = serde_json::from_str(text).context("tree argument is not valid JSON")?;
    tree_from_json(&value, expected)
}

/// `{"s": .., "elements": [NODE, ..], "edges": [[from, to, a, c], ..]}`.
pub fn diagram_json(sig: &WeakComposition, diagram: &HasseDiagram) -> Value {
    let elements: Vec<Value> = diagram.elements.iter().map(node_value).collect();
    let edges: Vec<Value> = diagram
        .edges
        .iter()
        .map(|&(from, to, asc)| json!([from, to, asc.a, asc.c]))
        .collect();
    json!({ "s": sig.entries(), "elements": elements, "edges": edges })
}

/// DOT digraph; node names are canonical inversion strings so diffs across
/// runs stay stable.
pub fn diagram_dot(diagram: &HasseDiagram) -> String {
    let mut out = String::from("digraph {\n");
    for element in &diagram.elements {
        out.push_str(&format!("  \"{}\";\n", inversion_string(element)));
    }
    for &(from, to, asc) in &diagram.edges {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"({},{})\"];\n",
            inversion_string(&diagram.elements[from]),
            inversion_string(&diagram.elements[to]),
            asc.a,
            asc.c
        ));
    }
    out.push_str("}\n");
    out
}

/// `{"s": .., "classes": [{"bottom": NODE, "top": NODE, "members": [..]}]}`.
pub fn class_report_json(partition: &ClassPartition) -> Value {
    let lat = &partition.lattice;
    let classes: Vec<Value> = partition
        .classes
        .iter()
        .map(|class| {
            json!({
                "bottom": node_value(lat.element(class.bottom)),
                "top": node_value(lat.element(class.top)),
                "members": class
                    .members
                    .iter()
                    .map(|&m| node_value(lat.element(m)))
                    .collect::<Vec<Value>>(),
            })
        })
        .collect();
    json!({ "s": lat.signature().entries(), "classes": classes })
}

/// Point list sorted by `(y desc, x asc)`, each point as `[x, y]`.
pub fn nu_tree_json(t: &NuTree) -> Value {
    json!({
        "nu": t.nu().to_string(),
        "points": t.points().iter().map(|&(x, y)| json!([x, y])).collect::<Vec<Value>>(),
    })
}
