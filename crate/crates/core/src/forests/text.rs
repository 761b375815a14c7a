//! Text form of a forest:
//!
//! ```text
//! forest := tree ("," tree)*
//! tree   := leaf | node
//! node   := "(" tree (" " tree)+ ")"
//! leaf   := decimal integer >= 1
//! ```

use super::{EdgeId, ForestError, Node, PlanarForest, PlanarTree, MAX_LABEL};

/// Parses a forest and returns its canonical form, edge ids numbered depth-first.
///
/// Leading and trailing whitespace is ignored; inside the text the grammar is exact.
pub fn parse_forest(text: &str) -> Result<PlanarForest, ForestError> {
    let text = text.trim();
    let mut p = Parser { s: text.as_bytes(), pos: 0, next_id: 0 };
    let mut trees = vec![PlanarTree::new(p.tree()?)];
    while p.peek() == Some(b',') {
        p.pos += 1;
        trees.push(PlanarTree::new(p.tree()?));
    }
    if p.pos != p.s.len() {
        return Err(p.error("expected ',' or end of input"));
    }
    Ok(PlanarForest::from_trees(trees)?.renumbered())
}

/// Canonical text: trees by minimum label, no extra whitespace.
pub fn serialize_forest(forest: &PlanarForest) -> String {
    let mut out = String::new();
    for (i, t) in forest.trees().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_node(&t.top, &mut out);
    }
    out
}

fn write_node(node: &Node, out: &mut String) {
    match node {
        Node::Leaf(l) => out.push_str(&l.to_string()),
        Node::Internal { children, .. } => {
            out.push('(');
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                write_node(c, out);
            }
            out.push(')');
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    next_id: u32,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> ForestError {
        ForestError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn tree(&mut self) -> Result<Node, ForestError> {
        match self.peek() {
            Some(b'(') => self.node(),
            Some(b'0'..=b'9') => self.leaf(),
            _ => Err(self.error("expected '(' or a label")),
        }
    }

    fn node(&mut self) -> Result<Node, ForestError> {
        let open = self.pos;
        self.pos += 1;
        let id = EdgeId(self.next_id);
        self.next_id += 1;
        let mut children = vec![self.tree()?];
        loop {
            match self.peek() {
                Some(b' ') => {
                    self.pos += 1;
                    children.push(self.tree()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected ' ' or ')'")),
            }
        }
        if children.len() < 2 {
            return Err(ForestError::SingleChild(open));
        }
        Ok(Node::internal(id, children))
    }

    fn leaf(&mut self) -> Result<Node, ForestError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let digits = &self.s[start..self.pos];
        if digits[0] == b'0' {
            self.pos = start;
            return Err(self.error("labels start at 1 and have no leading zeros"));
        }
        let value: u64 = std::str::from_utf8(digits).ok().and_then(|d| d.parse().ok()).unwrap_or(u64::MAX);
        if value > MAX_LABEL as u64 {
            return Err(ForestError::LabelOutOfRange(value));
        }
        Ok(Node::Leaf(value as u32))
    }
}
