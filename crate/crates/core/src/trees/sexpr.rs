//! S-expression text form: `Tree := Label | "(" Label " " Tree " " Tree ")"`,
//! labels in decimal, single spaces between fields.

use super::{MotzkinTree, TreeError};

pub fn format_tree(t: &MotzkinTree) -> String {
    t.to_string()
}

pub fn parse_tree(text: &str) -> Result<MotzkinTree, TreeError> {
    let mut parser = Parser { bytes: text.as_bytes(), pos: 0 };
    let tree = parser.tree()?;
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("trailing input after tree"));
    }
    Ok(tree)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> TreeError {
        TreeError::SyntaxError { position: self.pos, message: message.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8, what: &str) -> Result<(), TreeError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn label(&mut self) -> Result<usize, TreeError> {
        if self.peek() == Some(b'-') {
            return Err(TreeError::NegativeLabel { position: self.pos });
        }
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a label"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| TreeError::SyntaxError { position: start, message: "label out of range".to_string() })
    }

    // recursion depth is bounded by the nesting of the input
    fn tree(&mut self) -> Result<MotzkinTree, TreeError> {
        if self.peek() != Some(b'(') {
            return self.label().map(MotzkinTree::leaf);
        }
        self.pos += 1;
        let label = self.label()?;
        self.expect(b' ', "expected a space before the left subtree")?;
        let left = self.tree()?;
        self.expect(b' ', "expected a space before the right subtree (every vertex needs 0 or 2 children)")?;
        let right = self.tree()?;
        self.expect(b')', "expected ')'")?;
        Ok(MotzkinTree::node(label, left, right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats() {
        assert_eq!(parse_tree("0").unwrap(), MotzkinTree::leaf(0));
        let fig = "(3 (1 0 (0 (0 2 0) (1 0 0))) 0)";
        assert_eq!(format_tree(&parse_tree(fig).unwrap()), fig);
        assert_eq!(parse_tree("12").unwrap().label, 12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_tree("(1 0)"), Err(TreeError::SyntaxError { position: 4, .. })));
        assert!(matches!(parse_tree("(1 0 0 0)"), Err(TreeError::SyntaxError { position: 6, .. })));
        assert!(matches!(parse_tree("(1  0 0)"), Err(TreeError::SyntaxError { .. })));
        assert!(matches!(parse_tree(""), Err(TreeError::SyntaxError { position: 0, .. })));
        assert!(matches!(parse_tree("0 "), Err(TreeError::SyntaxError { position: 1, .. })));
        assert_eq!(parse_tree("(0 -1 0)"), Err(TreeError::NegativeLabel { position: 3 }));
        assert_eq!(parse_tree("-2"), Err(TreeError::NegativeLabel { position: 0 }));
    }
}
