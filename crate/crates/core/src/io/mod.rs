//! Text formats for presentations and expressions.

mod parse;
mod print;

pub use parse::{parse_dgl, parse_lie_expr, parse_lie_terms, parse_magma_expr, DglFile, ParseError, Pos, PrintedTerm};
pub use print::print_dgl;
