use std::fmt::Write;

use crate::model::Dendrogram;

/// Newick rendering of a dendrogram. Leaves are named `C<id>`; each branch is
/// as long as the parent's merge level minus the child's (leaves at 0).
///
/// A dendrogram that is not fully merged renders only its leaf-0 subtree.
pub fn to_newick(dendrogram: &Dendrogram) -> String {
    enum Step {
        Node(usize, Option<f64>),
        Text(&'static str),
        Length(Option<f64>),
    }

    let k = dendrogram.leaf_count();
    let root = dendrogram.root().unwrap_or(0);
    let mut out = String::new();
    let mut stack = vec![Step::Node(root, None)];
    // Explicit stack: chained merges nest as deep as k.
    while let Some(step) = stack.pop() {
        match step {
            Step::Node(id, length) if id < k => {
                write!(out, "C{id}").unwrap();
                stack.push(Step::Length(length));
            }
            Step::Node(id, length) => {
                let merge = dendrogram.merges()[id - k];
                let branch = |child| Some(merge.level - dendrogram.node_level(child));
                out.push('(');
                stack.push(Step::Length(length));
                stack.push(Step::Text(")"));
                stack.push(Step::Node(merge.right, branch(merge.right)));
                stack.push(Step::Text(","));
                stack.push(Step::Node(merge.left, branch(merge.left)));
            }
            Step::Text(t) => out.push_str(t),
            Step::Length(Some(len)) => write!(out, ":{len}").unwrap(),
            Step::Length(None) => {}
        }
    }
    out.push(';');
    out
}
