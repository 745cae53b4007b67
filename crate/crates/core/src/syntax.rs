//! Concrete syntax trees, copied out of tree-sitter into an owned arena.
//!
//! The arena is immutable and `Send + Sync`, so a tree can be inspected from
//! any thread once built. Parsers are not shareable: each worker owns a
//! [`Parsers`] (or uses [`parse`], which keeps one per thread).

use std::cell::RefCell;
use std::collections::VecDeque;
use std::fmt;
use std::ops::Range;

use crate::document::SourceDocument;
use crate::error::{Error, Result};
use crate::language::LanguageId;

#[derive(Debug, Clone)]
struct NodeData {
    kind: &'static str,
    field: Option<&'static str>,
    start: usize,
    end: usize,
    is_error: bool,
    parent: Option<u32>,
    first_child: u32,
    child_count: u32,
}

/// An immutable parse tree. Node 0 is the root.
///
/// Nodes are stored breadth-first so every node's children occupy a
/// contiguous id range.
#[derive(Debug, Clone)]
pub struct SyntaxTree {
    nodes: Vec<NodeData>,
}

/// A read-only view of one node in a [`SyntaxTree`].
#[derive(Clone, Copy)]
pub struct SyntaxNode<'t> {
    tree: &'t SyntaxTree,
    id: u32,
}

/// An owned node description, for building trees without a grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSpec {
    pub kind: &'static str,
    pub field: Option<&'static str>,
    pub span: Range<usize>,
    pub is_error: bool,
    pub children: Vec<NodeSpec>,
}

impl NodeSpec {
    pub fn new(kind: &'static str, span: Range<usize>, children: Vec<NodeSpec>) -> Self {
        NodeSpec {
            kind,
            field: None,
            span,
            is_error: false,
            children,
        }
    }

    pub fn leaf(kind: &'static str, span: Range<usize>) -> Self {
        NodeSpec::new(kind, span, Vec::new())
    }

    pub fn with_field(mut self, field: &'static str) -> Self {
        self.field = Some(field);
        self
    }
}

impl SyntaxTree {
    /// Builds a tree from an owned description.
    ///
    /// # Panics
    ///
    /// Panics if a child span is not contained in its parent or siblings
    /// overlap or are out of order.
    pub fn from_spec(root: NodeSpec) -> SyntaxTree {
        let mut nodes = Vec::new();
        let mut queue: VecDeque<(NodeSpec, Option<u32>)> = VecDeque::new();
        queue.push_back((root, None));
        // Children are enqueued in order, so they receive consecutive ids.
        let mut next_id = 1u32;
        while let Some((spec, parent)) = queue.pop_front() {
            let id = nodes.len() as u32;
            let child_count = spec.children.len() as u32;
            let mut prev_end = spec.span.start;
            for child in &spec.children {
                assert!(
                    child.span.start >= prev_end && child.span.end <= spec.span.end,
                    "child {:?} misplaced in {:?}",
                    child.span,
                    spec.span
                );
                assert!(child.span.start <= child.span.end);
                prev_end = child.span.end;
            }
            nodes.push(NodeData {
                kind: spec.kind,
                field: spec.field,
                start: spec.span.start,
                end: spec.span.end,
                is_error: spec.is_error,
                parent,
                first_child: next_id,
                child_count,
            });
            next_id += child_count;
            for child in spec.children {
                queue.push_back((child, Some(id)));
            }
        }
        SyntaxTree { nodes }
    }

    fn from_ts(tree: &tree_sitter::Tree, len: usize) -> SyntaxTree {
        let mut nodes = Vec::new();
        let mut queue: VecDeque<(tree_sitter::Node<'_>, Option<&'static str>, Option<u32>)> =
            VecDeque::new();
        queue.push_back((tree.root_node(), None, None));
        let mut next_id = 1u32;
        while let Some((node, field, parent)) = queue.pop_front() {
            let id = nodes.len() as u32;
            // The root always covers the whole input, including a leading
            // byte-order mark or trailing bytes the grammar left outside it.
            let (start, end) = if parent.is_none() {
                (0, len)
            } else {
                (node.start_byte(), node.end_byte())
            };
            let mut child_count = 0u32;
            let mut cursor = node.walk();
            if cursor.goto_first_child() {
                loop {
                    queue.push_back((cursor.node(), cursor.field_name(), Some(id)));
                    child_count += 1;
                    if !cursor.goto_next_sibling() {
                        break;
                    }
                }
            }
            nodes.push(NodeData {
                kind: node.kind(),
                field,
                start,
                end,
                is_error: node.is_error() || node.is_missing(),
                parent,
                first_child: next_id,
                child_count,
            });
            next_id += child_count;
        }
        SyntaxTree { nodes }
    }

    pub fn root(&self) -> SyntaxNode<'_> {
        SyntaxNode { tree: self, id: 0 }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn has_error(&self) -> bool {
        self.nodes.iter().any(|n| n.is_error)
    }
}

impl<'t> SyntaxNode<'t> {
    fn data(&self) -> &'t NodeData {
        &self.tree.nodes[self.id as usize]
    }

    /// Grammar node-type name, e.g. `function_definition`.
    pub fn kind(&self) -> &'static str {
        self.data().kind
    }

    /// Field name this node occupies in its parent, e.g. `name`.
    pub fn field(&self) -> Option<&'static str> {
        self.data().field
    }

    pub fn span(&self) -> Range<usize> {
        let d = self.data();
        d.start..d.end
    }

    pub fn start(&self) -> usize {
        self.data().start
    }

    pub fn end(&self) -> usize {
        self.data().end
    }

    /// True for parser error-recovery nodes, including zero-width nodes the
    /// parser inserted for missing tokens.
    pub fn is_error(&self) -> bool {
        self.data().is_error
    }

    pub fn child_count(&self) -> usize {
        self.data().child_count as usize
    }

    pub fn has_children(&self) -> bool {
        self.data().child_count > 0
    }

    pub fn children(
        &self,
    ) -> impl ExactSizeIterator<Item = SyntaxNode<'t>> + DoubleEndedIterator + 't {
        let tree = self.tree;
        let d = self.data();
        (d.first_child..d.first_child + d.child_count).map(move |id| SyntaxNode { tree, id })
    }

    pub fn child(&self, index: usize) -> Option<SyntaxNode<'t>> {
        (index < self.child_count()).then(|| SyntaxNode {
            tree: self.tree,
            id: self.data().first_child + index as u32,
        })
    }

    pub fn child_by_field(&self, field: &str) -> Option<SyntaxNode<'t>> {
        self.children().find(|c| c.field() == Some(field))
    }

    pub fn parent(&self) -> Option<SyntaxNode<'t>> {
        self.data().parent.map(|id| SyntaxNode {
            tree: self.tree,
            id,
        })
    }

    /// Stable identifier of this node within its tree.
    pub fn id(&self) -> usize {
        self.id as usize
    }
}

impl PartialEq for SyntaxNode<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.tree, other.tree) && self.id == other.id
    }
}

impl Eq for SyntaxNode<'_> {}

impl fmt::Debug for SyntaxNode<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.kind(), self.span())?;
        if self.is_error() {
            f.write_str(" (error)")?;
        }
        Ok(())
    }
}

/// A set of parsers, one per language, created on first use.
#[derive(Default)]
pub struct Parsers {
    parsers: [Option<tree_sitter::Parser>; 4],
}

impl Parsers {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(&mut self, doc: &SourceDocument) -> Result<SyntaxTree> {
        let lang = doc.language();
        let slot = &mut self.parsers[slot(lang)];
        if slot.is_none() {
            let mut parser = tree_sitter::Parser::new();
            parser
                .set_language(&lang.grammar())
                .map_err(|_| Error::UnregisteredLanguage(lang.name().to_string()))?;
            *slot = Some(parser);
        }
        let parser = slot.as_mut().expect("parser initialized above");
        let tree = parser
            .parse(doc.bytes(), None)
            .ok_or_else(|| Error::ParseFailed(doc.path().to_string()))?;
        Ok(SyntaxTree::from_ts(&tree, doc.len()))
    }
}

fn slot(lang: LanguageId) -> usize {
    match lang {
        LanguageId::Python => 0,
        LanguageId::Java => 1,
        LanguageId::CSharp => 2,
        LanguageId::TypeScript => 3,
    }
}

thread_local! {
    static PARSERS: RefCell<Parsers> = RefCell::new(Parsers::new());
}

/// Parses `doc` with this thread's parser for its language.
pub fn parse(doc: &SourceDocument) -> Result<SyntaxTree> {
    PARSERS.with(|p| p.borrow_mut().parse(doc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_str(text: &str, lang: LanguageId) -> SyntaxTree {
        parse(&SourceDocument::new("t", text.as_bytes(), lang)).unwrap()
    }

    fn any_error(node: SyntaxNode<'_>) -> bool {
        node.is_error() || node.children().any(any_error)
    }

    fn check_nesting(node: SyntaxNode<'_>) {
        let span = node.span();
        assert!(span.start <= span.end);
        let mut prev = span.start;
        for child in node.children() {
            assert!(
                child.start() >= prev,
                "{child:?} overlaps a sibling in {node:?}"
            );
            assert!(child.end() <= span.end, "{child:?} escapes {node:?}");
            assert_eq!(child.parent(), Some(node));
            prev = child.end();
            check_nesting(child);
        }
    }

    #[test]
    fn empty_file_has_bare_root() {
        let tree = parse_str("", LanguageId::Python);
        assert_eq!(tree.root().span(), 0..0);
        assert_eq!(tree.root().child_count(), 0);
    }

    #[test]
    fn assignment_is_one_statement() {
        let tree = parse_str("x = 1\n", LanguageId::Python);
        let root = tree.root();
        assert_eq!(root.kind(), "module");
        assert_eq!(root.span(), 0..6);
        let kids: Vec<_> = root.children().collect();
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].kind(), "expression_statement");
        assert_eq!(kids[0].span(), 0..5);
        assert_eq!(kids[0].child(0).unwrap().kind(), "assignment");
    }

    #[test]
    fn malformed_input_still_parses() {
        let tree = parse_str("def f(:\n", LanguageId::Python);
        assert_eq!(tree.root().span(), 0..8);
        assert!(any_error(tree.root()));
        assert!(tree.has_error());

        let tree = parse_str("class { void (( }", LanguageId::Java);
        assert!(any_error(tree.root()));
    }

    #[test]
    fn root_covers_bom_and_trailing_bytes() {
        let text = "\u{feff}# hi\nclass A:\n    pass\n\n\n";
        let tree = parse_str(text, LanguageId::Python);
        assert_eq!(tree.root().span(), 0..text.len());
        check_nesting(tree.root());
    }

    #[test]
    fn fields_are_recorded() {
        let tree = parse_str(
            "class A:\n    def m(self):\n        pass\n",
            LanguageId::Python,
        );
        let class = tree.root().child(0).unwrap();
        assert_eq!(class.kind(), "class_definition");
        let name = class.child_by_field("name").unwrap();
        assert_eq!(name.kind(), "identifier");
        assert_eq!(name.span(), 6..7);
    }

    #[test]
    fn parse_is_deterministic() {
        let text = "public class A { int f() { return 1; } }\n";
        let a = parse_str(text, LanguageId::Java);
        let b = parse_str(text, LanguageId::Java);
        assert_eq!(format!("{:?}", a.nodes), format!("{:?}", b.nodes));
    }

    #[test]
    fn children_text_plus_gaps_reproduces_parent() {
        let text = "using System;\nnamespace N {\n  class C { void M() { var x = 1; } }\n}\n";
        let doc = SourceDocument::new("t.cs", text.as_bytes(), LanguageId::CSharp);
        let tree = parse(&doc).unwrap();
        check_nesting(tree.root());
        fn rebuild(node: SyntaxNode<'_>, bytes: &[u8]) -> Vec<u8> {
            if !node.has_children() {
                return bytes[node.span()].to_vec();
            }
            let mut out = Vec::new();
            let mut pos = node.start();
            for child in node.children() {
                out.extend_from_slice(&bytes[pos..child.start()]);
                out.extend(rebuild(child, bytes));
                pos = child.end();
            }
            out.extend_from_slice(&bytes[pos..node.end()]);
            out
        }
        assert_eq!(rebuild(tree.root(), doc.bytes()), doc.bytes());
    }

    #[test]
    fn spec_tree_layout() {
        let tree = SyntaxTree::from_spec(NodeSpec::new(
            "root",
            0..10,
            vec![
                NodeSpec::new(
                    "a",
                    0..4,
                    vec![NodeSpec::leaf("a1", 0..2), NodeSpec::leaf("a2", 2..4)],
                ),
                NodeSpec::leaf("b", 5..10),
            ],
        ));
        let root = tree.root();
        let kinds: Vec<_> = root.children().map(|c| c.kind()).collect();
        assert_eq!(kinds, ["a", "b"]);
        let a = root.child(0).unwrap();
        let kinds: Vec<_> = a.children().map(|c| c.kind()).collect();
        assert_eq!(kinds, ["a1", "a2"]);
        assert_eq!(a.child(1).unwrap().parent().unwrap().kind(), "a");
        check_nesting(root);
    }
}
